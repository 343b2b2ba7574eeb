//! Simplicial complexes stored by their facets.
//!
//! Three states are kept apart: the void complex (no faces), the complex
//! {∅} whose only face is empty, and everything with at least one vertex.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{binomial, VertexSet};

pub type Face = VertexSet;

#[derive(Debug)]
pub struct Complex {
    facets: Option<Vec<Face>>,
    ambient: usize,
    faces: OnceLock<Vec<Vec<Face>>>,
}

impl Clone for Complex {
    fn clone(&self) -> Self {
        let c = Complex { facets: self.facets.clone(), ambient: self.ambient, faces: OnceLock::new() };
        if let Some(f) = self.faces.get() {
            let _ = c.faces.set(f.clone());
        }
        c
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for Complex {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Local {
    Link,
    Star,
    Deletion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub is_pure: bool,
    /// None for the void complex.
    pub dim: Option<isize>,
    /// Largest d with every (d+1)-subset of the ambient set a face.
    pub complete_skeleton_up_to: Option<isize>,
}

/// Keep only inclusion-maximal faces, sorted and deduplicated.
fn maximal(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|g| f.is_subset(g)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl Complex {
    pub fn void(ambient: usize) -> Self {
        Complex { facets: None, ambient, faces: OnceLock::new() }
    }

    pub fn empty_face(ambient: usize) -> Self {
        Complex::from_facets_in(vec![Face::new()], ambient)
    }

    /// Full simplex on {0..n-1}.
    pub fn simplex(n: usize) -> Self {
        Complex::from_facets_in(vec![VertexSet::full(n)], n)
    }

    /// Ambient size inferred as one past the largest vertex.
    pub fn from_facets(faces: Vec<Face>) -> Self {
        let ambient = faces.iter().filter_map(VertexSet::max_vertex).max().map_or(0, |m| m + 1);
        Complex::from_facets_in(faces, ambient)
    }

    pub fn from_facets_in(faces: Vec<Face>, ambient: usize) -> Self {
        let ambient = faces.iter().filter_map(VertexSet::max_vertex).map(|m| m + 1).fold(ambient, usize::max);
        let facets = if faces.is_empty() { None } else { Some(maximal(faces)) };
        Complex { facets, ambient, faces: OnceLock::new() }
    }

    pub fn from_facet_lists(lists: &[Vec<usize>]) -> Self {
        Complex::from_facets(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_none()
    }

    /// True for {∅}.
    pub fn is_empty_complex(&self) -> bool {
        matches!(&self.facets, Some(f) if f.len() == 1 && f[0].is_empty())
    }

    pub fn facets(&self) -> &[Face] {
        self.facets.as_deref().unwrap_or(&[])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn with_ambient(mut self, ambient: usize) -> Self {
        self.ambient = self.ambient.max(ambient);
        self
    }

    pub fn dim(&self) -> Option<isize> {
        self.facets.as_ref().map(|f| f.iter().map(|x| x.len() as isize - 1).max().unwrap_or(-1))
    }

    pub fn is_pure(&self) -> bool {
        match &self.facets {
            None => true,
            Some(f) => f.iter().all(|x| x.len() == f[0].len()),
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.facets().iter().fold(VertexSet::new(), |acc, f| acc.union(f))
    }

    pub fn contains_face(&self, sigma: &Face) -> bool {
        self.facets().iter().any(|f| sigma.is_subset(f))
    }

    /// Faces grouped by dimension; index 0 holds the empty face. Each level
    /// is sorted by bitmask order.
    pub fn faces_by_dim(&self) -> &[Vec<Face>] {
        self.faces.get_or_init(|| {
            let Some(facets) = &self.facets else { return Vec::new() };
            let top = facets.iter().map(VertexSet::len).max().unwrap_or(0);
            let mut levels: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
            let mut current: HashSet<Face> = HashSet::new();
            for size in (0..=top).rev() {
                for f in facets.iter().filter(|f| f.len() == size) {
                    current.insert(f.clone());
                }
                let mut level: Vec<Face> = current.drain().collect();
                level.sort();
                if size > 0 {
                    for f in &level {
                        for v in f.iter() {
                            current.insert(f.without(v));
                        }
                    }
                }
                levels[size] = level;
            }
            levels
        })
    }

    pub fn faces_of_dim(&self, d: isize) -> &[Face] {
        let levels = self.faces_by_dim();
        usize::try_from(d + 1).ok().and_then(|i| levels.get(i)).map_or(&[], Vec::as_slice)
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_dim().iter().map(Vec::len).sum()
    }

    /// f-vector (f₋₁, f₀, …, f_d).
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        if self.is_void() {
            return Err(Error::VoidComplex("f-vector"));
        }
        Ok(self.faces_by_dim().iter().map(|l| l.len() as u64).collect())
    }

    /// Reduced Euler characteristic Σ_{i≥−1} (−1)^i f_i.
    pub fn euler(&self) -> Result<i128> {
        Ok(alternating(&self.f_vector()?))
    }

    pub fn f_vector_and_euler(&self) -> Result<(Vec<u64>, i128)> {
        let f = self.f_vector()?;
        let mu = alternating(&f);
        Ok((f, mu))
    }

    pub fn local(&self, op: Local, sigma: &Face) -> Complex {
        let n = self.ambient;
        let facets = self.facets();
        let containing = facets.iter().filter(|f| sigma.is_subset(f));
        match op {
            Local::Link => Complex::from_facets_in(containing.map(|f| f.difference(sigma)).collect(), n),
            Local::Star => Complex::from_facets_in(containing.cloned().collect(), n),
            Local::Deletion => {
                let mut out = Vec::new();
                for f in facets {
                    if sigma.is_subset(f) {
                        out.extend(sigma.iter().map(|v| f.without(v)));
                    } else {
                        out.push(f.clone());
                    }
                }
                Complex::from_facets_in(out, n)
            }
        }
    }

    pub fn link(&self, sigma: &Face) -> Complex {
        self.local(Local::Link, sigma)
    }

    pub fn star(&self, sigma: &Face) -> Complex {
        self.local(Local::Star, sigma)
    }

    pub fn deletion(&self, sigma: &Face) -> Complex {
        self.local(Local::Deletion, sigma)
    }

    /// Faces of dimension at most d.
    pub fn skeleton(&self, d: isize) -> Complex {
        if self.is_void() {
            return Complex::void(self.ambient);
        }
        let size = (d + 1).max(0) as usize;
        let mut out: Vec<Face> = self.facets().iter().filter(|f| f.len() <= size).cloned().collect();
        out.extend(self.faces_by_dim().get(size).into_iter().flatten().cloned());
        Complex::from_facets_in(out, self.ambient)
    }

    /// Join, with the second complex shifted past this one's ambient range.
    pub fn join(&self, other: &Complex) -> Complex {
        let n = self.ambient + other.ambient;
        if self.is_void() || other.is_void() {
            return Complex::void(n);
        }
        let mut out = Vec::with_capacity(self.facets().len() * other.facets().len());
        for a in self.facets() {
            for b in other.facets() {
                out.push(a.union(&b.shifted(self.ambient)));
            }
        }
        Complex::from_facets_in(out, n)
    }

    /// Cone with apex `ambient`.
    pub fn cone(&self) -> Complex {
        self.join(&Complex::simplex(1))
    }

    /// Suspension with the two new vertices `ambient` and `ambient + 1`.
    pub fn suspension(&self) -> Complex {
        self.join(&Complex::from_facets_in(vec![VertexSet::singleton(0), VertexSet::singleton(1)], 2))
    }

    pub fn properties(&self) -> Properties {
        let complete = if self.is_void() {
            None
        } else {
            let levels = self.faces_by_dim();
            let mut d: isize = -1;
            while let Some(l) = levels.get((d + 2) as usize) {
                if l.len() as u128 != binomial(self.ambient, (d + 2) as usize) {
                    break;
                }
                d += 1;
            }
            Some(d)
        };
        Properties { is_pure: self.is_pure(), dim: self.dim(), complete_skeleton_up_to: complete }
    }

    /// Relabel vertices through `map` (old index to new index).
    pub fn relabel(&self, map: &[usize], ambient: usize) -> Complex {
        match &self.facets {
            None => Complex::void(ambient),
            Some(f) => Complex::from_facets_in(f.iter().map(|x| x.iter().map(|v| map[v]).collect()).collect(), ambient),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ComplexRepr::from(self)).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Complex> {
        let repr: ComplexRepr = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        repr.try_into()
    }
}

fn alternating(f: &[u64]) -> i128 {
    // index 0 is dimension −1, which carries sign −1
    f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { -(x as i128) } else { x as i128 }).sum()
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ComplexRepr {
    Void { state: String },
    Facets { facets: Vec<Vec<usize>>, ambient: usize },
}

impl From<&Complex> for ComplexRepr {
    fn from(c: &Complex) -> Self {
        match &c.facets {
            None => ComplexRepr::Void { state: "void".into() },
            Some(f) => ComplexRepr::Facets { facets: f.iter().map(VertexSet::to_vec).collect(), ambient: c.ambient },
        }
    }
}

impl TryFrom<ComplexRepr> for Complex {
    type Error = Error;
    fn try_from(r: ComplexRepr) -> Result<Complex> {
        match r {
            ComplexRepr::Void { state } if state == "void" => Ok(Complex::void(0)),
            ComplexRepr::Void { state } => Err(Error::Parse(format!("unknown complex state `{state}`"))),
            ComplexRepr::Facets { facets, ambient } => {
                if facets.is_empty() {
                    return Err(Error::Parse("a facet list must be nonempty; use {\"state\":\"void\"}".into()));
                }
                let c = Complex::from_facet_lists(&facets);
                if c.ambient > ambient {
                    return Err(Error::Parse(format!("vertex {} exceeds ambient {ambient}", c.ambient - 1)));
                }
                Ok(c.with_ambient(ambient))
            }
        }
    }
}
