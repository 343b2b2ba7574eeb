//! Shellings of pure complexes: verification, exhaustive search, and the
//! lexicographic order on cycle cut complexes.
//!
//! Placing facet G after a set P of facets is allowed when, for the
//! restriction R(G) = {v ∈ G : G∖v lies in some facet of P}, every F ∈ P
//! meets G inside some G∖v with v ∈ R(G). That is the same as asking
//! G∖F ∩ R(G) ≠ ∅ for all F ∈ P.

use std::collections::{HashMap, HashSet};

use serde::{Serialize, Serializer};

use crate::complex::{Complex, Face};
use crate::cut::cut_complex;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::vertex_set::{binomial, VertexSet};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Shellable {
        #[serde(serialize_with = "ser_faces")]
        order: Vec<Face>,
    },
    /// The whole search tree was exhausted.
    NotShellable,
    /// The node budget ran out first.
    Unknown,
}

fn ser_faces<S: Serializer>(faces: &[Face], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(faces.iter().map(VertexSet::to_vec))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingCertificate {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub nodes: u64,
    /// Set when the input was the void complex, shellable only by convention.
    pub void: bool,
}

impl ShellingCertificate {
    pub fn is_shellable(&self) -> bool {
        matches!(self.verdict, Verdict::Shellable { .. })
    }

    pub fn is_not_shellable(&self) -> bool {
        self.verdict == Verdict::NotShellable
    }

    pub fn order(&self) -> Option<&[Face]> {
        match &self.verdict {
            Verdict::Shellable { order } => Some(order),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum OrderCheck {
    Valid,
    /// Positions i < j in the order with no earlier F_k covering F_i ∩ F_j.
    Fails {
        i: usize,
        j: usize,
    },
}

impl OrderCheck {
    pub fn is_valid(&self) -> bool {
        *self == OrderCheck::Valid
    }
}

fn check_permutation(delta: &Complex, order: &[Face]) -> Result<()> {
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    let facets: HashSet<&Face> = delta.facets().iter().collect();
    let given: HashSet<&Face> = order.iter().collect();
    if order.len() != facets.len() || given != facets {
        return Err(Error::NotAPermutation(format!("{} faces given for {} facets", order.len(), facets.len())));
    }
    Ok(())
}

/// Pairwise test: for all i < j some k < j has F_i∩F_j ⊆ F_k∩F_j and
/// |F_k∩F_j| = |F_j|−1.
pub fn verify_shelling_order(delta: &Complex, order: &[Face]) -> Result<OrderCheck> {
    check_permutation(delta, order)?;
    for j in 1..order.len() {
        let fj = &order[j];
        let restriction: VertexSet =
            fj.iter().filter(|&v| order[..j].iter().any(|fk| fj.without(v).is_subset(fk))).collect();
        for i in 0..j {
            if fj.difference(&order[i]).is_disjoint(&restriction) {
                return Ok(OrderCheck::Fails { i, j });
            }
        }
    }
    Ok(OrderCheck::Valid)
}

/// h-vector of a pure complex from its f-vector.
pub fn h_vector(delta: &Complex) -> Result<Vec<i128>> {
    let f = delta.f_vector()?;
    let d = f.len() - 1;
    Ok((0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let term = binomial(d - i, j - i) as i128 * f[i] as i128;
                    if (j - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub budget: u64,
    /// Vertex permutations (index = old vertex). Used to restrict the first
    /// facet to orbit representatives, and only if every one preserves the facet set.
    pub automorphisms: Vec<Vec<usize>>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, automorphisms: Vec::new() }
    }
}

pub fn find_shelling(delta: &Complex, budget: u64) -> Result<ShellingCertificate> {
    find_shelling_with(delta, &SearchOptions { budget, ..SearchOptions::default() })
}

pub fn find_shelling_with(delta: &Complex, opts: &SearchOptions) -> Result<ShellingCertificate> {
    if delta.is_void() {
        return Ok(ShellingCertificate { verdict: Verdict::Shellable { order: Vec::new() }, nodes: 0, void: true });
    }
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = delta.facets();
    if facets.len() == 1 {
        return Ok(ShellingCertificate {
            verdict: Verdict::Shellable { order: facets.to_vec() },
            nodes: 1,
            void: false,
        });
    }
    let h = h_vector(delta)?;
    let not_shellable = |nodes| Ok(ShellingCertificate { verdict: Verdict::NotShellable, nodes, void: false });
    if h.iter().any(|&x| x < 0) {
        return not_shellable(0);
    }
    let mut search = Search::new(facets, h, opts.budget);
    if !search.ridge_graph_connected() {
        return not_shellable(0);
    }
    let starts = first_facet_representatives(facets, &opts.automorphisms);
    let mut order = Vec::with_capacity(facets.len());
    let found = starts.into_iter().any(|s| {
        order.push(s);
        search.counts[0] += 1;
        let ok = search.dfs(&VertexSet::singleton(s), &mut order);
        search.counts[0] -= 1;
        if !ok {
            order.pop();
        }
        ok || search.exhausted
    });
    let verdict = if search.exhausted {
        Verdict::Unknown
    } else if found {
        Verdict::Shellable { order: order.into_iter().map(|i| facets[i].clone()).collect() }
    } else {
        Verdict::NotShellable
    };
    Ok(ShellingCertificate { verdict, nodes: search.nodes, void: false })
}

/// Facet indices that can start the search: all of them, or one per orbit
/// when the supplied automorphisms provably preserve the facet set.
fn first_facet_representatives(facets: &[Face], autos: &[Vec<usize>]) -> Vec<usize> {
    let index: HashMap<&Face, usize> = facets.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let image = |p: &[usize], f: &Face| -> Option<usize> {
        let g: Option<Face> = f.iter().map(|v| p.get(v).copied()).collect();
        g.and_then(|g| index.get(&g).copied())
    };
    let sound = autos.iter().all(|p| {
        let mut seen = p.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == p.len() && facets.iter().all(|f| image(p, f).is_some())
    });
    if autos.is_empty() || !sound {
        return (0..facets.len()).collect();
    }
    let mut orbit_of = vec![usize::MAX; facets.len()];
    let mut reps = Vec::new();
    for start in 0..facets.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        // facets are sorted, so the first unvisited index is the orbit minimum
        reps.push(start);
        orbit_of[start] = start;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for p in autos {
                let j = image(p, &facets[i]).expect("checked above");
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = start;
                    stack.push(j);
                }
            }
        }
    }
    reps
}

struct Search<'a> {
    facets: &'a [Face],
    /// neighbors[g][p]: facets sharing the ridge facets[g] minus its p-th vertex.
    neighbors: Vec<Vec<(usize, VertexSet)>>,
    h: Vec<i128>,
    /// How many placed facets have a restriction of each size.
    counts: Vec<i128>,
    dead: HashSet<VertexSet>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(facets: &'a [Face], h: Vec<i128>, budget: u64) -> Self {
        let mut by_ridge: HashMap<Face, VertexSet> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for v in f.iter() {
                by_ridge.entry(f.without(v)).or_default().insert(i);
            }
        }
        let neighbors = facets
            .iter()
            .enumerate()
            .map(|(i, f)| f.iter().map(|v| (v, by_ridge[&f.without(v)].without(i))).collect())
            .collect();
        let counts = vec![0; h.len()];
        Search { facets, neighbors, h, counts, dead: HashSet::new(), nodes: 0, budget, exhausted: false }
    }

    fn ridge_graph_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for (_, nb) in &self.neighbors[i] {
                for j in nb.iter() {
                    if !seen.contains(j) {
                        seen.insert(j);
                        stack.push(j);
                    }
                }
            }
        }
        seen.len() == self.facets.len()
    }

    /// Restriction of facet g against the placed set, if g may be placed next.
    fn restriction(&self, g: usize, placed: &VertexSet) -> Option<VertexSet> {
        let r: VertexSet =
            self.neighbors[g].iter().filter(|(_, nb)| !nb.is_disjoint(placed)).map(|&(v, _)| v).collect();
        if r.is_empty() {
            return None;
        }
        let fg = &self.facets[g];
        placed.iter().all(|i| !fg.difference(&self.facets[i]).is_disjoint(&r)).then_some(r)
    }

    fn dfs(&mut self, placed: &VertexSet, order: &mut Vec<usize>) -> bool {
        if order.len() == self.facets.len() {
            return true;
        }
        if self.dead.contains(placed) {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        for g in 0..self.facets.len() {
            if placed.contains(g) {
                continue;
            }
            let Some(r) = self.restriction(g, placed) else { continue };
            let size = r.len();
            if self.counts[size] >= self.h[size] {
                continue;
            }
            self.counts[size] += 1;
            order.push(g);
            let ok = self.dfs(&placed.with(g), order);
            self.counts[size] -= 1;
            if ok {
                return true;
            }
            order.pop();
            if self.exhausted {
                return false;
            }
        }
        self.dead.insert(placed.clone());
        false
    }
}

/// Facets of Δ_k(C_n) sorted as increasing vertex sequences.
pub fn cycle_lex_order(n: usize, k: usize) -> Result<Vec<Face>> {
    if k == 2 {
        return Err(Error::InvalidParameter("the lexicographic order does not shell Δ_2 of a cycle".into()));
    }
    if n < 4 || k < 3 || k >= n {
        return Err(Error::InvalidParameter(format!("need n >= 4 and 3 <= k <= n-1, got n={n}, k={k}")));
    }
    let delta = cut_complex(&Family::Cycle(n).build()?, k);
    let mut order = delta.facets().to_vec();
    order.sort_by(|a, b| a.cmp_lex(b));
    Ok(order)
}
