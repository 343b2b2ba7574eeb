//! Reduced simplicial homology with integer coefficients.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, IntegerMatrix, SmithForm};

/// ∂_i for i = 0..=dim, mapping i-faces to (i−1)-faces. ∂₀ sends every vertex to ∅.
/// Rows and columns follow the per-dimension face order of the complex.
pub fn boundary_matrices(delta: &Complex) -> Result<Vec<IntegerMatrix>> {
    if delta.is_void() {
        return Err(Error::VoidComplex("chain complex"));
    }
    let levels = delta.faces_by_dim();
    let mut out = Vec::with_capacity(levels.len().saturating_sub(1));
    for size in 1..levels.len() {
        let lower: HashMap<&Face, usize> = levels[size - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut entries = Vec::with_capacity(levels[size].len() * size);
        for (c, f) in levels[size].iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let r = lower[&f.without(v)];
                entries.push((r, c, if pos % 2 == 0 { 1 } else { -1 }));
            }
        }
        out.push(IntegerMatrix::from_triplets(levels[size - 1].len(), levels[size].len(), entries));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub dim: isize,
    pub rank: u64,
    #[serde(serialize_with = "ser_factors")]
    pub torsion: Vec<BigUint>,
}

fn ser_factors<S: Serializer>(f: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    // plain numbers when they fit, decimal strings otherwise
    let vals: Vec<serde_json::Value> = f
        .iter()
        .map(|d| d.to_u64().map_or_else(|| serde_json::Value::String(d.to_string()), serde_json::Value::from))
        .collect();
    vals.serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HomologyReport {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyReport {
    /// Betti numbers β₋₁, β₀, …
    pub fn betti(&self) -> Vec<u64> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    pub fn rank_in(&self, dim: isize) -> u64 {
        self.groups.iter().find(|g| g.dim == dim).map_or(0, |g| g.rank)
    }

    pub fn torsion_in(&self, dim: isize) -> Vec<u64> {
        self.groups
            .iter()
            .find(|g| g.dim == dim)
            .map_or_else(Vec::new, |g| g.torsion.iter().map(|t| t.to_u64().expect("small torsion")).collect())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// Σ (−1)^i β_i.
    pub fn euler(&self) -> i128 {
        self.groups.iter().map(|g| if g.dim.rem_euclid(2) == 0 { g.rank as i128 } else { -(g.rank as i128) }).sum()
    }

    /// Dimensions carrying nonzero free rank or torsion.
    pub fn support(&self) -> Vec<isize> {
        self.groups.iter().filter(|g| g.rank > 0 || !g.torsion.is_empty()).map(|g| g.dim).collect()
    }

    /// True when the only nonzero group is free of the given rank in the given dimension.
    pub fn is_concentrated(&self, dim: isize, rank: u64) -> bool {
        self.is_torsion_free()
            && self.groups.iter().all(|g| if g.dim == dim { g.rank == rank } else { g.rank == 0 })
            && (rank == 0 || self.groups.iter().any(|g| g.dim == dim))
    }

    pub fn is_acyclic(&self) -> bool {
        self.support().is_empty()
    }
}

pub fn reduced_homology(delta: &Complex) -> Result<HomologyReport> {
    let bd = boundary_matrices(delta)?;
    let levels = delta.faces_by_dim();
    let snfs: Vec<SmithForm> = bd.iter().map(smith_normal_form).collect();
    let mut groups = Vec::with_capacity(levels.len());
    for (i, level) in levels.iter().enumerate() {
        // level i holds dimension i−1; its outgoing map is bd[i−1], incoming bd[i]
        let out_rank = if i == 0 { 0 } else { snfs[i - 1].rank };
        let in_snf = snfs.get(i);
        let in_rank = in_snf.map_or(0, |s| s.rank);
        groups.push(HomologyGroup {
            dim: i as isize - 1,
            rank: (level.len() - out_rank - in_rank) as u64,
            torsion: in_snf.map_or_else(Vec::new, SmithForm::torsion),
        });
    }
    Ok(HomologyReport { groups })
}
