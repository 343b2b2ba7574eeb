//! Cut complexes Δ_k(G): facets are the complements of disconnected k-sets.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::Graph;
use crate::vertex_set::{binomial, k_subsets, VertexSet};

/// k-subsets S with G[S] disconnected, in increasing bitmask order. D₁ is empty.
pub fn disconnected_ksets(g: &Graph, k: usize) -> Vec<VertexSet> {
    if k < 2 {
        return Vec::new();
    }
    k_subsets(g.n(), k).filter(|s| !g.connected_within(s)).collect()
}

pub fn cut_complex(g: &Graph, k: usize) -> Complex {
    let all = g.vertices();
    let facets: Vec<Face> = disconnected_ksets(g, k).iter().map(|s| all.difference(s)).collect();
    Complex::from_facets_in(facets, g.n())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectedSetCensus {
    pub k: usize,
    /// |Z_k(G)|: connected k-subsets.
    pub count: u64,
    /// (anchor, connected k-subsets through the anchor).
    pub anchored: Option<(usize, u64)>,
}

pub fn connected_kset_census(g: &Graph, k: usize, anchor: Option<usize>) -> Result<ConnectedSetCensus> {
    if k < 1 || k > g.n() {
        return Err(Error::InvalidParameter(format!("census needs 1 <= k <= n, got k={k}, n={}", g.n())));
    }
    if let Some(a) = anchor {
        if a >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: a, n: g.n() });
        }
    }
    let mut count = 0;
    let mut through = 0;
    for s in k_subsets(g.n(), k) {
        if g.connected_within(&s) {
            count += 1;
            if anchor.is_some_and(|a| s.contains(a)) {
                through += 1;
            }
        }
    }
    Ok(ConnectedSetCensus { k, count, anchored: anchor.map(|a| (a, through)) })
}

/// Ridges of Δ_k(G) lying in at least k facets; these are the facets of Δ_{k+1}(G).
pub fn facets_via_ridges(delta: &Complex, k: usize) -> Vec<Face> {
    let mut counts: HashMap<Face, usize> = HashMap::new();
    for f in delta.facets() {
        for v in f.iter() {
            *counts.entry(f.without(v)).or_insert(0) += 1;
        }
    }
    let mut out: Vec<Face> = counts.into_iter().filter(|&(_, c)| c >= k).map(|(r, _)| r).collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonCondition {
    pub holds: bool,
    /// No cycles of length ≤ k+1, which already forces the condition.
    pub girth_fast_path: bool,
    pub connected_ksets: u64,
    /// (−1)^{n−k−1}(C(n−1,k−1) − |Z_k|) when the condition holds.
    pub mu: Option<i128>,
}

/// Check that every connected k-set A and outside vertex x admit y ∈ A with
/// (A∖y)∪x disconnected, i.e. Δ_k(G) has a complete (n−k−2)-skeleton.
pub fn skeleton_condition_and_euler(g: &Graph, k: usize) -> Result<SkeletonCondition> {
    let n = g.n();
    if k < 2 || k + 1 > n {
        return Err(Error::InvalidParameter(format!("skeleton condition needs 2 <= k <= n-1, got k={k}, n={n}")));
    }
    let disconnected = k_subsets(n, k).any(|s| !g.connected_within(&s));
    if !disconnected {
        return Err(Error::VoidComplex("skeleton condition"));
    }
    let all = g.vertices();
    let mut holds = true;
    let mut connected = 0u64;
    for a in k_subsets(n, k) {
        if !g.connected_within(&a) {
            continue;
        }
        connected += 1;
        if holds {
            holds = all.difference(&a).iter().all(|x| a.iter().any(|y| !g.connected_within(&a.without(y).with(x))));
        }
    }
    let girth_fast_path = g.girth().is_none_or(|c| c > k + 1);
    let mu = holds.then(|| {
        let v = binomial(n - 1, k - 1) as i128 - connected as i128;
        if (n - k - 1).is_multiple_of(2) {
            v
        } else {
            -v
        }
    });
    Ok(SkeletonCondition { holds, girth_fast_path, connected_ksets: connected, mu })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub graph: Graph,
    pub k: usize,
    /// vertex_map[i] is the complex vertex carried by graph vertex i (i < number of complex vertices).
    pub vertex_map: Vec<usize>,
}

impl Realization {
    /// Cut complex of the realized graph, relabeled back into the input's vertex names.
    pub fn recovered(&self, ambient: usize) -> Complex {
        let c = cut_complex(&self.graph, self.k);
        let mut map: Vec<usize> = self.vertex_map.clone();
        // apex vertices never appear in a facet; give them placeholder targets
        map.resize(self.graph.n(), 0);
        c.relabel(&map, ambient)
    }
}

/// Chordal graph G and k with Δ_k(G) equal to the given pure complex.
///
/// Complex vertices become a clique 0..n-1 (in increasing order); every facet
/// gets an apex joined to its vertices. A single facet needs the special shapes below.
pub fn realize_as_cut_complex(delta: &Complex) -> Result<Realization> {
    if delta.is_void() {
        return Err(Error::VoidComplex("realization"));
    }
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    let verts = delta.vertex_set().to_vec();
    let n = verts.len();
    if n == 0 {
        return Err(Error::InvalidParameter("complex has no vertices".into()));
    }
    let mut index = vec![usize::MAX; verts.last().map_or(0, |&m| m + 1)];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let facets = delta.facets();
    let t = facets.len();
    let d1 = facets[0].len();
    let mut labels: Vec<String> = verts.iter().map(|v| (v + 1).to_string()).collect();
    let (graph, k) = if t > 1 {
        let mut g = Graph::edgeless(n + t);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j)?;
            }
        }
        for (j, f) in facets.iter().enumerate() {
            for v in f.iter() {
                g.add_edge(index[v], n + j)?;
            }
            labels.push(format!("f{}", j + 1));
        }
        (g, n + t - d1)
    } else if n == 1 {
        labels.extend(["f1".to_string(), "f2".to_string()]);
        (Graph::from_edge_list(3, &[(0, 1), (0, 2)])?, 2)
    } else {
        let mut g = Graph::edgeless(2 * n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j)?;
            }
            for a in 0..n {
                g.add_edge(i, n + a)?;
            }
        }
        labels.extend((1..=n).map(|a| format!("f{a}")));
        (g, n)
    };
    Ok(Realization { graph: graph.with_labels(labels), k, vertex_map: verts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BettiPrediction {
    Void,
    Contractible,
    /// A single point (contractible, recorded separately to match the source claim).
    Point,
    /// Wedge of `count` spheres of dimension `dim`; dim −1 means {∅}.
    Wedge {
        dim: isize,
        count: u64,
    },
}

impl BettiPrediction {
    /// Reduced Betti numbers indexed from dimension −1, padded to `len`.
    pub fn betti_vector(&self, len: usize) -> Vec<u64> {
        let mut b = vec![0; len];
        if let BettiPrediction::Wedge { dim, count } = *self {
            if let Some(slot) = b.get_mut((dim + 1) as usize) {
                *slot = count;
            }
        }
        b
    }
}

fn not_covered(family: &Family, k: usize) -> Error {
    Error::NotCovered(format!("{family} with k={k}"))
}

fn forest_prediction(g: &Graph, k: usize) -> Result<BettiPrediction> {
    let n = g.n();
    if k < 2 || k > n {
        return Ok(BettiPrediction::Void);
    }
    if k == n {
        return Ok(if g.is_connected() { BettiPrediction::Void } else { BettiPrediction::Wedge { dim: -1, count: 1 } });
    }
    let z = connected_kset_census(g, k, None)?.count;
    let count = binomial(n - 1, k - 1) as u64 - z;
    Ok(if count == 0 {
        BettiPrediction::Contractible
    } else {
        BettiPrediction::Wedge { dim: (n - k - 1) as isize, count }
    })
}

fn multipartite_prediction(parts: &[usize], k: usize) -> BettiPrediction {
    let mut m = parts.to_vec();
    m.sort_unstable();
    let r = m.len();
    let total: usize = m.iter().sum();
    if r == 1 {
        let n = m[0];
        return match k {
            _ if k < 2 || k > n => BettiPrediction::Void,
            _ if k == n => BettiPrediction::Wedge { dim: -1, count: 1 },
            _ => BettiPrediction::Wedge { dim: (n - k - 1) as isize, count: binomial(n - 1, k - 1) as u64 },
        };
    }
    if k < 2 || k > m[r - 1] {
        return BettiPrediction::Void;
    }
    if k > m[0] {
        // m₁ < k ≤ m_r: either only the largest part can host k vertices, or a join with a void side
        return BettiPrediction::Contractible;
    }
    let dim = (total - r * k) as isize + r as isize - 2;
    let count = m.iter().map(|&mi| binomial(mi - 1, k - 1) as u64).product();
    BettiPrediction::Wedge { dim, count }
}

/// Closed-form homotopy prediction for the families with a known answer.
pub fn predicted_betti(family: &Family, k: usize) -> Result<BettiPrediction> {
    use Family::*;
    let g = family.build()?;
    let n = g.n();
    match family {
        Edgeless(m) => Ok(multipartite_prediction(&[*m], k)),
        Complete(_) => Ok(BettiPrediction::Void),
        CompleteMultipartite(parts) => Ok(multipartite_prediction(parts, k)),
        Star(m) => Ok(multipartite_prediction(&[1, *m], k)),
        Path(_) | Tree(_) => forest_prediction(&g, k),
        Cycle(c) => Ok(match k {
            _ if *c == 3 || k < 2 || k + 1 >= *c => BettiPrediction::Void,
            2 => BettiPrediction::Wedge { dim: *c as isize - 4, count: 1 },
            _ => BettiPrediction::Wedge {
                dim: (c - k - 1) as isize,
                count: (binomial(c - 1, k - 1) - *c as u128) as u64,
            },
        }),
        Prism(p) => Ok(if k < 2 || k > *p {
            BettiPrediction::Void
        } else {
            BettiPrediction::Wedge { dim: (2 * p - k - 2) as isize, count: binomial(p - 1, k - 1) as u64 }
        }),
        SquaredCycle(w) => {
            let w = *w;
            if k < 2 || w <= k + 3 || w <= 5 {
                Ok(BettiPrediction::Void)
            } else if k == 2 {
                Ok(BettiPrediction::Wedge { dim: if w == 6 { 1 } else { w as isize - 4 }, count: 1 })
            } else if w == k + 4 {
                Ok(BettiPrediction::Wedge { dim: 1, count: 1 })
            } else {
                Err(not_covered(family, k))
            }
        }
        Kneser(..) | Petersen => {
            if k == 2 && g.is_connected() && !g.has_triangle() && !g.is_tree() {
                Ok(BettiPrediction::Wedge { dim: n as isize - 4, count: (g.edge_count() + 1 - n) as u64 })
            } else {
                Err(not_covered(family, k))
            }
        }
        Balloon(n1, _) => wedge_of_cycles_prediction(family, &g, k, &[*n1]),
        FigureEight(n1, n2) => wedge_of_cycles_prediction(family, &g, k, &[*n1, *n2]),
        Threshold(_) | Kayak(_) => Err(not_covered(family, k)),
    }
}

/// Balloons and figure-eights: for 3 ≤ k ≤ n−1 away from the k = n_i − 1 caveat,
/// the complex is shellable with the antichain count as its top Betti number.
fn wedge_of_cycles_prediction(family: &Family, g: &Graph, k: usize, cycles: &[usize]) -> Result<BettiPrediction> {
    let n = g.n();
    if k < 3 || k + 1 > n || cycles.iter().any(|&c| k + 1 == c) {
        return Err(not_covered(family, k));
    }
    let z = connected_kset_census(g, k, None)?.count;
    let count = binomial(n - 1, k - 1) as u64 - z;
    let dim = (n - k - 1) as isize;
    Ok(match (dim, count) {
        (0, 0) => BettiPrediction::Point,
        (_, 0) => BettiPrediction::Contractible,
        _ => BettiPrediction::Wedge { dim, count },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::family;

    fn faces(lists: &[&[usize]]) -> Vec<Face> {
        let mut v: Vec<Face> = lists.iter().map(|l| l.iter().copied().collect()).collect();
        v.sort();
        v
    }

    /// 1-based edge list helper for the figure graphs.
    fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, &edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn degenerate_cases() {
        let c5 = family("cycle:5").unwrap();
        assert!(disconnected_ksets(&c5, 1).is_empty());
        assert!(cut_complex(&c5, 1).is_void());
        let k5 = family("complete:5").unwrap();
        for k in 1..=6 {
            assert!(disconnected_ksets(&k5, k).is_empty());
            assert!(cut_complex(&k5, k).is_void());
        }
        let e3 = family("edgeless:3").unwrap();
        assert!(cut_complex(&e3, 3).is_empty_complex());
        assert!(cut_complex(&c5, 5).is_void());
        assert!(cut_complex(&c5, 9).is_void());
    }

    #[test]
    fn cycle_five_is_the_mobius_strip() {
        let c5 = family("cycle:5").unwrap();
        // 1-based pairs 13,14,24,25,35
        assert_eq!(disconnected_ksets(&c5, 2), faces(&[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]]));
        let d = cut_complex(&c5, 2);
        assert_eq!(d.facets(), faces(&[&[1, 3, 4], &[0, 1, 3], &[0, 2, 3], &[0, 2, 4], &[1, 2, 4]]).as_slice());
    }

    #[test]
    fn figure_two_graph() {
        let g = one_based(5, &[(1, 3), (1, 2), (1, 4), (2, 4), (2, 5), (3, 4), (4, 5)]);
        let d = cut_complex(&g, 2);
        assert_eq!(d.facets(), faces(&[&[1, 2, 3], &[0, 3, 4], &[0, 1, 3]]).as_slice());
    }

    #[test]
    fn census_examples() {
        let p6 = family("path:6").unwrap();
        assert_eq!(connected_kset_census(&p6, 3, None).unwrap().count, 4);
        let c7 = family("cycle:7").unwrap();
        for a in 0..7 {
            let c = connected_kset_census(&c7, 3, Some(a)).unwrap();
            assert_eq!(c.count, 7);
            assert_eq!(c.anchored, Some((a, 3)));
        }
        assert!(connected_kset_census(&c7, 0, None).is_err());
        assert!(connected_kset_census(&c7, 8, None).is_err());
    }

    #[test]
    fn ridges_give_next_level() {
        for spec in ["cycle:6", "path:5"] {
            let g = family(spec).unwrap();
            assert_eq!(facets_via_ridges(&cut_complex(&g, 2), 2), cut_complex(&g, 3).facets());
        }
        let mut g = family("complete:4").unwrap();
        g = Graph::from_edge_list(4, &g.edges().into_iter().filter(|&e| e != (0, 1)).collect::<Vec<_>>()).unwrap();
        assert!(facets_via_ridges(&cut_complex(&g, 2), 2).is_empty());
        assert!(cut_complex(&g, 3).is_void());
    }

    #[test]
    fn skeleton_condition_examples() {
        let c6 = skeleton_condition_and_euler(&family("cycle:6").unwrap(), 3).unwrap();
        assert!(c6.holds && c6.girth_fast_path);
        assert_eq!(c6.mu, Some(4));
        let k33 = skeleton_condition_and_euler(&family("complete_multipartite:3,3").unwrap(), 2).unwrap();
        assert!(k33.holds);
        assert_eq!(k33.mu, Some(4));
        let c4 = skeleton_condition_and_euler(&family("cycle:4").unwrap(), 2).unwrap();
        assert!(c4.holds);
        assert_eq!(c4.mu, Some(1));
        assert_eq!(cut_complex(&family("cycle:4").unwrap(), 2).euler().unwrap(), 1);
        assert!(matches!(skeleton_condition_and_euler(&family("complete:5").unwrap(), 2), Err(Error::VoidComplex(_))));
        assert!(skeleton_condition_and_euler(&family("cycle:5").unwrap(), 5).is_err());
    }

    #[test]
    fn realizations() {
        let fig4 = Complex::from_facet_lists(&[vec![1, 2, 5], vec![1, 4, 5], vec![2, 3, 5], vec![3, 4, 5]]);
        let r = realize_as_cut_complex(&fig4).unwrap();
        assert_eq!((r.graph.n(), r.k), (9, 6));
        assert!(r.graph.is_chordal());
        assert_eq!(r.recovered(fig4.ambient()), fig4);

        let point = Complex::from_facet_lists(&[vec![0]]);
        let r = realize_as_cut_complex(&point).unwrap();
        assert_eq!(r.graph, family("star:2").unwrap());
        assert_eq!(r.k, 2);
        assert_eq!(r.recovered(1), point);

        let simplex = Complex::simplex(3);
        let r = realize_as_cut_complex(&simplex).unwrap();
        assert_eq!((r.graph.n(), r.k), (6, 3));
        assert_eq!(r.recovered(3), simplex);

        assert_eq!(realize_as_cut_complex(&Complex::void(0)).unwrap_err(), Error::VoidComplex("realization"));
        assert_eq!(
            realize_as_cut_complex(&Complex::from_facet_lists(&[vec![0, 1], vec![2]])).unwrap_err(),
            Error::NotPure
        );
    }

    #[test]
    fn predictions() {
        use BettiPrediction::*;
        let p = |s: &str, k| predicted_betti(&s.parse().unwrap(), k);
        assert_eq!(p("complete_multipartite:3,4", 2).unwrap(), Wedge { dim: 3, count: 6 });
        assert_eq!(p("prism:4", 3).unwrap(), Wedge { dim: 3, count: 3 });
        assert_eq!(p("path:6", 3).unwrap(), Wedge { dim: 2, count: 6 });
        assert_eq!(p("path:6", 2).unwrap(), Contractible);
        assert_eq!(p("cycle:6", 3).unwrap(), Wedge { dim: 2, count: 4 });
        assert_eq!(p("petersen", 2).unwrap(), Wedge { dim: 6, count: 6 });
        assert_eq!(p("complete_multipartite:2,2,2", 2).unwrap(), Wedge { dim: 1, count: 1 });
        assert_eq!(p("complete_multipartite:1,3,3", 2).unwrap(), Contractible);
        assert_eq!(p("squared_cycle:9", 5).unwrap(), Wedge { dim: 1, count: 1 });
        assert!(matches!(p("squared_cycle:10", 5), Err(Error::NotCovered(_))));
        assert!(matches!(p("kayak:4", 4), Err(Error::NotCovered(_))));
        assert!(matches!(p("balloon:5,3", 4), Err(Error::NotCovered(_))));
        assert_eq!(p("figure_eight:4,4", 6).unwrap(), Point);
    }
}
