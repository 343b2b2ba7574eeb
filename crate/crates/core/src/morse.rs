//! Discrete Morse matchings built from sequences of element matchings.
//!
//! The element matching for vertex a pairs σ with σ∪a whenever both are
//! faces and neither is matched yet. Candidate faces are scanned in
//! increasing bitmask order so results are reproducible.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Serialize, Serializer};

use crate::complex::{Complex, Face};
use crate::cut::cut_complex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorsePair {
    #[serde(serialize_with = "ser_face")]
    pub lower: Face,
    #[serde(serialize_with = "ser_face")]
    pub upper: Face,
    /// The vertex whose element matching produced this pair.
    pub vertex: usize,
}

fn ser_face<S: Serializer>(f: &Face, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(f.iter())
}

#[derive(Clone, Debug)]
pub struct MorseMatching {
    pub complex: Complex,
    pub pairs: Vec<MorsePair>,
}

impl MorseMatching {
    pub fn new(complex: Complex, pairs: Vec<MorsePair>) -> Self {
        MorseMatching { complex, pairs }
    }

    /// Faces not covered by any pair, sorted by dimension then bitmask.
    pub fn critical_faces(&self) -> Vec<Face> {
        let matched: HashSet<&Face> = self.pairs.iter().flat_map(|p| [&p.lower, &p.upper]).collect();
        self.complex.faces_by_dim().iter().flatten().filter(|f| !matched.contains(f)).cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseCensus {
    pub acyclic: bool,
    /// Critical face counts indexed from dimension −1.
    pub critical: Vec<u64>,
}

impl MorseCensus {
    pub fn total(&self) -> u64 {
        self.critical.iter().sum()
    }

    pub fn in_dim(&self, d: isize) -> u64 {
        usize::try_from(d + 1).ok().and_then(|i| self.critical.get(i)).copied().unwrap_or(0)
    }

    /// Σ (−1)^d c_d over d ≥ −1; equals the reduced Euler characteristic.
    pub fn euler(&self) -> i128 {
        self.critical.iter().enumerate().map(|(i, &c)| if i % 2 == 1 { c as i128 } else { -(c as i128) }).sum()
    }

    /// Dimensions holding critical faces.
    pub fn support(&self) -> Vec<isize> {
        (0..self.critical.len()).filter(|&i| self.critical[i] > 0).map(|i| i as isize - 1).collect()
    }
}

pub fn element_matching_sequence(delta: &Complex, order: &[usize]) -> Result<MorseMatching> {
    if delta.is_void() {
        return Err(Error::VoidComplex("face poset to match"));
    }
    let mut seen = HashSet::new();
    for &a in order {
        if a >= delta.ambient() {
            return Err(Error::VertexOutOfRange { vertex: a, n: delta.ambient() });
        }
        if !seen.insert(a) {
            return Err(Error::InvalidParameter(format!("vertex {a} repeated in the matching order")));
        }
    }
    let mut all: Vec<&Face> = delta.faces_by_dim().iter().flatten().collect();
    all.sort();
    let faces: HashSet<&Face> = all.iter().copied().collect();
    let mut matched: HashSet<Face> = HashSet::new();
    let mut pairs = Vec::new();
    for &a in order {
        for &sigma in &all {
            if sigma.contains(a) || matched.contains(sigma) {
                continue;
            }
            let tau = sigma.with(a);
            if faces.contains(&tau) && !matched.contains(&tau) {
                matched.insert(sigma.clone());
                matched.insert(tau.clone());
                pairs.push(MorsePair { lower: sigma.clone(), upper: tau, vertex: a });
            }
        }
    }
    Ok(MorseMatching::new(delta.clone(), pairs))
}

/// Check structure, test acyclicity on the V-path digraphs and count critical faces.
pub fn verify_acyclic_and_critical(m: &MorseMatching) -> Result<MorseCensus> {
    let levels = m.complex.faces_by_dim();
    let faces: HashSet<&Face> = levels.iter().flatten().collect();
    let mut partner: HashMap<&Face, &Face> = HashMap::new();
    for p in &m.pairs {
        if !p.lower.is_subset(&p.upper) || p.upper.len() != p.lower.len() + 1 {
            return Err(Error::MalformedMatching(format!(
                "{:?} and {:?} differ by more than one vertex",
                p.lower, p.upper
            )));
        }
        for f in [&p.lower, &p.upper] {
            if !faces.contains(f) {
                return Err(Error::MalformedMatching(format!("{f:?} is not a face")));
            }
            if partner.contains_key(f) {
                return Err(Error::MalformedMatching(format!("{f:?} lies in two pairs")));
            }
        }
        partner.insert(&p.lower, &p.upper);
        partner.insert(&p.upper, &p.lower);
    }
    let mut acyclic = true;
    for size in 0..levels.len().saturating_sub(1) {
        // V-paths among faces of this size: σ → σ' whenever σ' ⊂ partner(σ), σ' ≠ σ
        let level = &levels[size];
        let index: HashMap<&Face, usize> = level.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); level.len()];
        let mut indeg = vec![0usize; level.len()];
        for (i, sigma) in level.iter().enumerate() {
            let Some(&tau) = partner.get(sigma) else { continue };
            if tau.len() != size + 1 {
                continue;
            }
            for v in tau.iter() {
                let other = tau.without(v);
                if other != *sigma {
                    let j = index[&other];
                    succ[i].push(j);
                    indeg[j] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..level.len()).filter(|&i| indeg[i] == 0).collect();
        let mut removed = 0;
        while let Some(i) = queue.pop_front() {
            removed += 1;
            for &j in &succ[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        if removed < level.len() {
            acyclic = false;
            break;
        }
    }
    let critical = levels.iter().map(|l| l.iter().filter(|f| !partner.contains_key(f)).count() as u64).collect();
    Ok(MorseCensus { acyclic, critical })
}

/// Breadth-first order from `root`, so every parent precedes its children.
pub fn tree_matching_order(t: &Graph, root: usize) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::GraphPrecondition("input is not a tree".into()));
    }
    if root >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: root, n: t.n() });
    }
    Ok(bfs(t, root).0)
}

/// BFS visiting order and parent array (parent of the root is itself).
fn bfs(g: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; g.n()];
    parent[root] = root;
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for w in g.neighbors(u).iter() {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    (order, parent)
}

/// Perfect matching on Δ₂(T) for a BFS spanning tree T, restricted to Δ₂(G).
pub fn restricted_matching(g: &Graph) -> Result<MorseMatching> {
    if g.has_triangle() {
        return Err(Error::GraphPrecondition("graph has a triangle".into()));
    }
    if !g.is_connected() {
        return Err(Error::GraphPrecondition("graph is disconnected".into()));
    }
    if g.is_tree() {
        return Err(Error::GraphPrecondition("graph is a tree; use the tree order".into()));
    }
    let (order, parent) = bfs(g, 0);
    let mut t = Graph::edgeless(g.n());
    for (v, &p) in parent.iter().enumerate() {
        if p != v {
            t.add_edge(v, p)?;
        }
    }
    let full = element_matching_sequence(&cut_complex(&t, 2), &order)?;
    let delta = cut_complex(g, 2);
    let pairs = full.pairs.into_iter().filter(|p| delta.contains_face(&p.upper)).collect();
    Ok(MorseMatching::new(delta, pairs))
}

/// 1⁺, 1⁻, 2⁺, 3⁺, …, n⁺ on the prism, where i⁺ is vertex 2(i−1) and i⁻ is 2(i−1)+1.
pub fn prism_matching_order(n: usize, k: usize) -> Result<Vec<usize>> {
    if k < 2 || n < k {
        return Err(Error::InvalidParameter(format!("prism order needs 2 <= k <= n, got n={n}, k={k}")));
    }
    let mut order = vec![0, 1];
    order.extend((1..n).map(|i| 2 * i));
    Ok(order)
}

/// Complements of {1⁺, i₁⁺, i₁⁻, i₂⁻, …, i_{k−1}⁻} over 2 ≤ i₁ < … < i_{k−1} ≤ n.
pub fn prism_critical_faces(n: usize, k: usize) -> Vec<Face> {
    let all = VertexSet::full(2 * n);
    let mut out: Vec<Face> = crate::vertex_set::k_subsets(n.saturating_sub(1), k - 1)
        .map(|idx| {
            let idx: Vec<usize> = idx.iter().map(|i| i + 1).collect();
            let mut x = VertexSet::singleton(0);
            x.insert(2 * idx[0]);
            for &i in &idx {
                x.insert(2 * i + 1);
            }
            all.difference(&x)
        })
        .collect();
    out.sort();
    out
}
