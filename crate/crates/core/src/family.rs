//! Named graph families and the `name:params` DSL.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{combine, Combine, Graph};
use crate::vertex_set::{k_subsets, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Edgeless(usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    Prism(usize),
    SquaredCycle(usize),
    Kneser(usize, usize),
    Petersen,
    /// Each bit appends a vertex to a single starting vertex: `1` dominating, `0` isolated.
    Threshold(Vec<bool>),
    Tree(Vec<(usize, usize)>),
    Kayak(usize),
    /// Cycle C_{n1} wedged with a path P_{n2} at a leaf of the path.
    Balloon(usize, usize),
    /// Two cycles C_{n1}, C_{n2} sharing one vertex.
    FigureEight(usize, usize),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn cycle_graph(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &e).expect("valid cycle")
}

fn path_graph(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &e).expect("valid path")
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        use Family::*;
        match self {
            Path(n) => {
                if *n < 1 {
                    return Err(invalid("path needs n >= 1"));
                }
                Ok(path_graph(*n))
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                Ok(cycle_graph(*n))
            }
            Complete(n) => {
                let mut g = Graph::edgeless(*n);
                for u in 0..*n {
                    for v in u + 1..*n {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
            Edgeless(n) => Ok(Graph::edgeless(*n)),
            CompleteMultipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(invalid("multipartite parts must be positive"));
                }
                let mut g = Graph::edgeless(parts[0]);
                for &m in &parts[1..] {
                    g = combine(Combine::Join, &g, &Graph::edgeless(m))?;
                }
                Ok(g)
            }
            Star(m) => {
                if *m < 1 {
                    return Err(invalid("star needs m >= 1"));
                }
                CompleteMultipartite(vec![1, *m]).build()
            }
            Prism(n) => {
                if *n < 1 {
                    return Err(invalid("prism needs n >= 1"));
                }
                let g = combine(Combine::Cartesian, &Complete(*n).build()?, &Complete(2).build()?)?;
                let labels =
                    (0..2 * n).map(|v| format!("{}{}", v / 2 + 1, if v % 2 == 0 { '+' } else { '-' })).collect();
                Ok(g.with_labels(labels))
            }
            SquaredCycle(n) => {
                if *n < 3 {
                    return Err(invalid("squared cycle needs n >= 3"));
                }
                let mut g = Graph::edgeless(*n);
                for i in 0..*n {
                    for d in [1, 2] {
                        let j = (i + d) % n;
                        if j != i {
                            g.add_edge(i, j)?;
                        }
                    }
                }
                Ok(g)
            }
            Kneser(m, r) => {
                if *r < 1 || m < r || *m > 20 {
                    return Err(invalid("kneser needs 1 <= r <= m <= 20"));
                }
                let mut verts: Vec<VertexSet> = k_subsets(*m, *r).collect();
                verts.sort_by(|a, b| a.cmp_lex(b));
                let mut g = Graph::edgeless(verts.len());
                for i in 0..verts.len() {
                    for j in i + 1..verts.len() {
                        if verts[i].is_disjoint(&verts[j]) {
                            g.add_edge(i, j)?;
                        }
                    }
                }
                let labels =
                    verts.iter().map(|s| s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join("")).collect();
                Ok(g.with_labels(labels))
            }
            Petersen => Kneser(5, 2).build(),
            Threshold(bits) => {
                let mut g = Graph::edgeless(bits.len() + 1);
                for (i, &dominating) in bits.iter().enumerate() {
                    if dominating {
                        for u in 0..=i {
                            g.add_edge(u, i + 1)?;
                        }
                    }
                }
                Ok(g)
            }
            Tree(edges) => {
                let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
                let g = Graph::from_edge_list(n, edges)?;
                if !g.is_tree() {
                    return Err(invalid("edge list is not a tree"));
                }
                Ok(g)
            }
            Kayak(k) => kayak(*k),
            Balloon(n1, n2) => {
                if *n1 < 3 || *n2 < 1 {
                    return Err(invalid("balloon needs n1 >= 3, n2 >= 1"));
                }
                combine(Combine::Wedge { v1: 0, v2: 0 }, &cycle_graph(*n1), &path_graph(*n2))
            }
            FigureEight(n1, n2) => {
                if *n1 < 3 || *n2 < 3 {
                    return Err(invalid("figure eight needs two cycles of length >= 3"));
                }
                combine(Combine::Wedge { v1: 0, v2: 0 }, &cycle_graph(*n1), &cycle_graph(*n2))
            }
        }
    }
}

/// Chordal graph on k+2 vertices whose k-cut complex is two disjoint edges.
///
/// Vertices 0..N-1 carry labels 1..N and form overlapping 4-cliques
/// {2i-1, 2i, 2i+1, 2i+2}; `a` hangs off {1,2} and, for even k, `b` off the last pair.
fn kayak(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(invalid("kayak needs k >= 4"));
    }
    let m = k / 2;
    let (body, tails) = if k.is_multiple_of(2) { (2 * m, 2) } else { (2 * m + 2, 1) };
    let cliques = if k.is_multiple_of(2) { m - 1 } else { m };
    let mut g = Graph::edgeless(body + tails);
    for i in 0..cliques {
        let c = [2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3];
        for x in 0..4 {
            for y in x + 1..4 {
                g.add_edge(c[x], c[y])?;
            }
        }
    }
    let a = body;
    g.add_edge(a, 0)?;
    g.add_edge(a, 1)?;
    let mut labels: Vec<String> = (1..=body).map(|v| v.to_string()).collect();
    labels.push("a".into());
    if tails == 2 {
        g.add_edge(a + 1, body - 2)?;
        g.add_edge(a + 1, body - 1)?;
        labels.push("b".into());
    }
    Ok(g.with_labels(labels))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{t}`")))).collect()
}

fn one(s: &str) -> Result<usize> {
    match parse_list(s)?.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Parse(format!("expected one integer, got `{s}`"))),
    }
}

fn two(s: &str) -> Result<(usize, usize)> {
    match parse_list(s)?.as_slice() {
        [x, y] => Ok((*x, *y)),
        _ => Err(Error::Parse(format!("expected two integers, got `{s}`"))),
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Family> {
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        use Family::*;
        Ok(match name.trim() {
            "path" => Path(one(args)?),
            "cycle" => Cycle(one(args)?),
            "complete" => Complete(one(args)?),
            "edgeless" => Edgeless(one(args)?),
            "complete_multipartite" | "multipartite" => CompleteMultipartite(parse_list(args)?),
            "star" => Star(one(args)?),
            "prism" => Prism(one(args)?),
            "squared_cycle" => SquaredCycle(one(args)?),
            "kneser" => {
                let (m, r) = two(args)?;
                Kneser(m, r)
            }
            "petersen" => Petersen,
            "threshold" => Threshold(
                args.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Parse(format!("threshold bits must be 0/1, got `{c}`"))),
                    })
                    .collect::<Result<_>>()?,
            ),
            "tree" => Tree(
                args.split(',')
                    .map(|e| {
                        let (u, v) = e.split_once('-').ok_or_else(|| Error::Parse(format!("bad edge `{e}`")))?;
                        let p =
                            |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad edge `{e}`")));
                        Ok((p(u)?, p(v)?))
                    })
                    .collect::<Result<_>>()?,
            ),
            "kayak" => Kayak(one(args)?),
            "balloon" => {
                let (a, b) = two(args)?;
                Balloon(a, b)
            }
            "figure_eight" => {
                let (a, b) = two(args)?;
                FigureEight(a, b)
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Edgeless(n) => write!(f, "edgeless:{n}"),
            CompleteMultipartite(p) => write!(f, "complete_multipartite:{}", list(p)),
            Star(m) => write!(f, "star:{m}"),
            Prism(n) => write!(f, "prism:{n}"),
            SquaredCycle(n) => write!(f, "squared_cycle:{n}"),
            Kneser(m, r) => write!(f, "kneser:{m},{r}"),
            Petersen => write!(f, "petersen"),
            Threshold(b) => write!(f, "threshold:{}", b.iter().map(|&x| if x { '1' } else { '0' }).collect::<String>()),
            Tree(e) => write!(f, "tree:{}", e.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")),
            Kayak(k) => write!(f, "kayak:{k}"),
            Balloon(a, b) => write!(f, "balloon:{a},{b}"),
            FigureEight(a, b) => write!(f, "figure_eight:{a},{b}"),
        }
    }
}

/// Parse and build in one step.
pub fn family(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.build()
}
