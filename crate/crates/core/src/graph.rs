//! Simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::new(); n], labels: None }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges (u, v) with u < v in increasing order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Display name of a vertex, 1-based when no label map is set.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max_vertex() {
            Some(m) if m >= self.n => Err(Error::VertexOutOfRange { vertex: m, n: self.n }),
            _ => Ok(()),
        }
    }

    /// True iff G[S] is connected. Singletons are connected; the empty set is rejected.
    pub fn is_connected_subset(&self, s: &VertexSet) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(s)?;
        Ok(self.connected_within(s))
    }

    /// Unchecked variant for hot loops; `s` must be nonempty and in range.
    pub(crate) fn connected_within(&self, s: &VertexSet) -> bool {
        if s.fits_one_word() && self.n <= 64 {
            let bits = s.low_bits();
            let mut seen = bits & bits.wrapping_neg();
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v].low_bits() & bits & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            return seen == bits;
        }
        let start = s.min_vertex().expect("nonempty");
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].intersection(s).difference(&seen).iter() {
                seen.insert(w);
                stack.push(w);
            }
        }
        seen.len() == s.len()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_within(&self.vertices())
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].difference(&comp).iter() {
                    comp.insert(w);
                    stack.push(w);
                }
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().iter().any(|&(u, v)| !self.adj[u].is_disjoint(&self.adj[v]))
    }

    /// Length of a shortest cycle, None for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        q.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Induced subgraph on S, relabeled densely in increasing vertex order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let verts = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::edgeless(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            g.adj[i] = self.adj[v].intersection(s).iter().map(|w| index[w]).collect();
        }
        if let Some(l) = &self.labels {
            g.labels = Some(verts.iter().map(|&v| l[v].clone()).collect());
        }
        Ok(g)
    }

    pub fn delete_vertices(&self, w: &VertexSet) -> Result<Graph> {
        self.induced_subgraph(&self.vertices().difference(w))
    }

    /// Perfect elimination order when chordal.
    pub fn chordal_elimination_order(&self) -> Option<Vec<usize>> {
        // maximum cardinality search visits vertices in reverse elimination order
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n).filter(|&v| !numbered[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))?;
            numbered[v] = true;
            visit.push(v);
            for w in self.adj[v].iter() {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        let order: Vec<usize> = visit.into_iter().rev().collect();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // each vertex's later neighbors must form a clique; it suffices to check
        // they are all adjacent to the earliest of them
        for &v in &order {
            let later: Vec<usize> = self.adj[v].iter().filter(|&w| pos[w] > pos[v]).collect();
            if let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) {
                if later.iter().any(|&w| w != u && !self.adj[u].contains(w)) {
                    return None;
                }
            }
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.chordal_elimination_order().is_some()
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        let mut nums = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("not a vertex index: `{t}`"))));
        let mut next = |what: &str| nums.next().unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))));
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            edges.push((next("edge endpoint")?, next("edge endpoint")?));
        }
        if nums.next().is_some() {
            return Err(Error::Parse("trailing tokens after edge list".into()));
        }
        Graph::from_edge_list(n, &edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Union,
    Join,
    Wedge { v1: usize, v2: usize },
    Cartesian,
}

/// Graph operations. Union and join shift G₂ by n₁; the wedge keeps G₁'s
/// numbering, glues v₂ onto v₁ and numbers the rest of G₂ after n₁ in order;
/// the product numbers (a, b) as a·n₂ + b.
pub fn combine(op: Combine, g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n, g2.n);
    match op {
        Combine::Union | Combine::Join => {
            let mut g = Graph::edgeless(n1 + n2);
            for (u, v) in g1.edges() {
                g.add_edge(u, v)?;
            }
            for (u, v) in g2.edges() {
                g.add_edge(u + n1, v + n1)?;
            }
            if op == Combine::Join {
                for u in 0..n1 {
                    for v in 0..n2 {
                        g.add_edge(u, n1 + v)?;
                    }
                }
            }
            Ok(g)
        }
        Combine::Wedge { v1, v2 } => {
            if v1 >= n1 {
                return Err(Error::VertexOutOfRange { vertex: v1, n: n1 });
            }
            if v2 >= n2 {
                return Err(Error::VertexOutOfRange { vertex: v2, n: n2 });
            }
            let map = |v: usize| match v.cmp(&v2) {
                std::cmp::Ordering::Equal => v1,
                std::cmp::Ordering::Less => n1 + v,
                std::cmp::Ordering::Greater => n1 + v - 1,
            };
            let mut g = Graph::edgeless(n1 + n2 - 1);
            for (u, v) in g1.edges() {
                g.add_edge(u, v)?;
            }
            for (u, v) in g2.edges() {
                g.add_edge(map(u), map(v))?;
            }
            Ok(g)
        }
        Combine::Cartesian => {
            let mut g = Graph::edgeless(n1 * n2);
            for a in 0..n1 {
                for (b, c) in g2.edges() {
                    g.add_edge(a * n2 + b, a * n2 + c)?;
                }
            }
            for (a, c) in g1.edges() {
                for b in 0..n2 {
                    g.add_edge(a * n2 + b, c * n2 + b)?;
                }
            }
            Ok(g)
        }
    }
}
