//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use cutplex::vertex_set::{binomial, k_subsets, subsets_of};
use cutplex::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Euler consistency failures collected from every complex the suite touches.
static EULER_FAILURES: Mutex<Vec<String>> = Mutex::new(Vec::new());
static EULER_CHECKED: Mutex<u64> = Mutex::new(0);

/// Homology of Δ_k(G) with the Euler bookkeeping done on the side.
fn homology_of(g: &Graph, k: usize, what: &str) -> Option<HomologyReport> {
    let delta = cut_complex(g, k);
    let h = homology_checked(&delta, what)?;
    if (2..g.n()).contains(&k) {
        if let Ok(sc) = skeleton_condition_and_euler(g, k) {
            if let Some(mu) = sc.mu {
                if mu != h.euler() {
                    EULER_FAILURES
                        .lock()
                        .unwrap()
                        .push(format!("{what}: antichain formula {mu} vs homology {}", h.euler()));
                }
            }
        }
    }
    Some(h)
}

fn homology_checked(delta: &Complex, what: &str) -> Option<HomologyReport> {
    if delta.is_void() {
        return None;
    }
    let h = reduced_homology(delta).expect("non-void");
    let mu = delta.euler().expect("non-void");
    *EULER_CHECKED.lock().unwrap() += 1;
    if mu != h.euler() {
        EULER_FAILURES.lock().unwrap().push(format!("{what}: f-vector {mu} vs homology {}", h.euler()));
    }
    Some(h)
}

fn morse_census_checked(m: &MorseMatching, what: &str) -> std::result::Result<MorseCensus, String> {
    let c = verify_acyclic_and_critical(m).map_err(|e| format!("{what}: {e}"))?;
    ensure!(c.acyclic, "{what}: matching has a cycle");
    let mu = m.complex.euler().map_err(|e| e.to_string())?;
    if mu != c.euler() {
        EULER_FAILURES.lock().unwrap().push(format!("{what}: Morse census {} vs f-vector {mu}", c.euler()));
    }
    Ok(c)
}

fn shell(delta: &Complex, what: &str) -> std::result::Result<ShellingCertificate, String> {
    let cert = find_shelling(delta, DEFAULT_BUDGET).map_err(|e| format!("{what}: {e}"))?;
    ensure!(cert.verdict != Verdict::Unknown, "{what}: search budget exhausted");
    if let Some(order) = cert.order() {
        ensure!(
            verify_shelling_order(delta, order).map_err(|e| e.to_string())?.is_valid(),
            "{what}: returned order fails verification"
        );
        if !delta.is_void() {
            // a shellable complex is a wedge of top-dimensional spheres
            let h = homology_checked(delta, what).unwrap();
            let top = delta.dim().unwrap();
            ensure!(h.is_torsion_free(), "{what}: shellable but has torsion");
            ensure!(
                h.support().iter().all(|&d| d == top) && h.rank_in(top) <= delta.facets().len() as u64,
                "{what}: shellable but homology {:?} not in top dimension {top}",
                h.betti()
            );
        }
    }
    Ok(cert)
}

fn fam(spec: &str) -> std::result::Result<Graph, String> {
    family(spec).map_err(|e| e.to_string())
}

fn faces(lists: &[&[usize]]) -> Vec<Face> {
    lists.iter().map(|l| l.iter().copied().collect()).collect()
}

fn mobius() -> Check {
    let g = fam("cycle:5")?;
    let delta = cut_complex(&g, 2);
    // 245, 124, 134, 135, 235 in 1-based labels
    let mut expect = faces(&[&[1, 3, 4], &[0, 1, 3], &[0, 2, 3], &[0, 2, 4], &[1, 2, 4]]);
    expect.sort();
    ensure!(delta.facets() == expect.as_slice(), "facets {:?}", delta.facets());
    let h = homology_of(&g, 2, "C5 k=2").unwrap();
    ensure!(h.is_concentrated(1, 1), "homology {:?}", h);
    ensure!(shell(&delta, "C5 k=2")?.is_not_shellable(), "Möbius strip reported shellable");
    Ok(())
}

fn bipartite() -> Check {
    for m in 2..=6 {
        for n in m..=6 {
            let g = fam(&format!("complete_multipartite:{m},{n}"))?;
            for k in 2..=m {
                let what = format!("K{m},{n} k={k}");
                let h = homology_of(&g, k, &what).ok_or(format!("{what}: void"))?;
                let rank = (binomial(m - 1, k - 1) * binomial(n - 1, k - 1)) as u64;
                ensure!(h.is_concentrated((m + n - 2 * k) as isize, rank), "{what}: {:?}", h.betti());
            }
        }
    }
    Ok(())
}

/// Partitions of `total` into parts in nondecreasing order.
fn partitions(total: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(acc.clone());
        return;
    }
    for p in min..=total {
        acc.push(p);
        partitions(total - p, p, acc, out);
        acc.pop();
    }
}

fn multipartite_shellability() -> Check {
    let mut parts = Vec::new();
    for total in 1..=8 {
        partitions(total, 1, &mut Vec::new(), &mut parts);
    }
    for m in parts {
        let spec = m.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let g = fam(&format!("complete_multipartite:{spec}"))?;
        let r = m.len();
        for k in 2..=g.n() {
            // largest part last; a single part is the edgeless graph, every cut complex a skeleton
            let expected = r == 1 || k > m[r - 2];
            let what = format!("K({spec}) k={k}");
            let cert = shell(&cut_complex(&g, k), &what)?;
            ensure!(cert.is_shellable() == expected, "{what}: expected shellable={expected}, got {:?}", cert.verdict);
        }
    }
    Ok(())
}

fn cycles() -> Check {
    for n in 5..=9 {
        let g = fam(&format!("cycle:{n}"))?;
        for k in 3..=n - 2 {
            let what = format!("C{n} k={k}");
            let delta = cut_complex(&g, k);
            let order = cycle_lex_order(n, k).map_err(|e| e.to_string())?;
            let mut lex = delta.facets().to_vec();
            lex.sort_by(|a, b| a.cmp_lex(b));
            ensure!(order == lex, "{what}: order is not the lexicographic facet order");
            ensure!(
                verify_shelling_order(&delta, &order).map_err(|e| e.to_string())?.is_valid(),
                "{what}: lex order rejected"
            );
            let h = homology_of(&g, k, &what).unwrap();
            let rank = (binomial(n - 1, k - 1) - n as u128) as u64;
            ensure!(h.is_concentrated((n - k - 1) as isize, rank), "{what}: {:?}", h.betti());
        }
    }
    Ok(())
}

fn random_forest(rng: &mut StdRng, n: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for v in 1..n {
        if rng.gen_bool(0.8) {
            g.add_edge(v, rng.gen_range(0..v)).unwrap();
        }
    }
    g
}

/// Connected k-subsets counted by brute force with a separate BFS.
fn connected_count(g: &Graph, k: usize) -> u64 {
    k_subsets(g.n(), k)
        .filter(|s| {
            let verts = s.to_vec();
            let mut seen = vec![verts[0]];
            let mut i = 0;
            while i < seen.len() {
                let u = seen[i];
                i += 1;
                for &w in &verts {
                    if g.has_edge(u, w) && !seen.contains(&w) {
                        seen.push(w);
                    }
                }
            }
            seen.len() == verts.len()
        })
        .count() as u64
}

fn forests() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_f0e5);
    for t in 0..50 {
        let n = rng.gen_range(3..=9);
        let g = random_forest(&mut rng, n);
        for k in 2..n {
            let what = format!("forest #{t} {:?} k={k}", g.edges());
            let rank = binomial(n - 1, k - 1) as u64 - connected_count(&g, k);
            match homology_of(&g, k, &what) {
                None => ensure!(rank == 0 && g.is_connected(), "{what}: void complex"),
                Some(h) => {
                    ensure!(h.is_concentrated((n - k - 1) as isize, rank), "{what}: {:?} vs rank {rank}", h.betti())
                }
            }
        }
        if g.is_tree() {
            if let Some(h) = homology_of(&g, 2, "tree k=2") {
                ensure!(h.is_acyclic(), "Δ2 of tree {:?} has homology {:?}", g.edges(), h.betti());
            }
            let order = tree_matching_order(&g, 0).map_err(|e| e.to_string())?;
            if !cut_complex(&g, 2).is_void() {
                let m = element_matching_sequence(&cut_complex(&g, 2), &order).map_err(|e| e.to_string())?;
                ensure!(morse_census_checked(&m, "tree matching")?.total() == 0, "tree matching not perfect");
            }
        }
    }
    Ok(())
}

fn prisms() -> Check {
    for n in 2..=5 {
        let g = fam(&format!("prism:{n}"))?;
        for k in 2..=n {
            let what = format!("prism {n} k={k}");
            let delta = cut_complex(&g, k);
            let m = element_matching_sequence(&delta, &prism_matching_order(n, k).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let c = morse_census_checked(&m, &what)?;
            let count = binomial(n - 1, k - 1) as u64;
            let dim = (2 * n - k - 2) as isize;
            ensure!(c.total() == count && c.in_dim(dim) == count, "{what}: census {:?}", c.critical);
            ensure!(m.critical_faces() == prism_critical_faces(n, k), "{what}: critical set differs");
            let h = homology_of(&g, k, &what).unwrap();
            ensure!(h.is_concentrated(dim, count), "{what}: {:?}", h.betti());
            if delta.facets().len() <= 20 {
                ensure!(shell(&delta, &what)?.is_not_shellable(), "{what}: reported shellable");
            }
        }
    }
    Ok(())
}

fn projective_plane() -> Check {
    let rp2 = Complex::from_facet_lists(
        &[[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]]
            .map(|f| f.iter().map(|v| v - 1).collect::<Vec<_>>()),
    );
    let r = realize_as_cut_complex(&rp2).map_err(|e| e.to_string())?;
    ensure!(r.graph.n() == 16 && r.k == 13, "realized on {} vertices with k={}", r.graph.n(), r.k);
    ensure!(r.graph.is_chordal(), "realizing graph is not chordal");
    ensure!(r.recovered(6) == rp2, "round trip changed the complex");
    let h = homology_of(&r.graph, 13, "RP2").unwrap();
    ensure!(h.betti().iter().all(|&b| b == 0), "free part {:?}", h.betti());
    ensure!(h.torsion_in(1) == vec![2] && h.support() == vec![1], "torsion {:?}", h);
    Ok(())
}

fn triangle_free() -> Check {
    let mut specs: Vec<String> = (5..=9).map(|n| format!("cycle:{n}")).collect();
    for m in 2..=4 {
        for n in m..=4 {
            specs.push(format!("complete_multipartite:{m},{n}"));
        }
    }
    // K_{1,n} is a tree, so bipartite cases start at 2
    specs.push("petersen".into());
    for spec in specs {
        let g = fam(&spec)?;
        let (n, e) = (g.n(), g.edge_count());
        let count = (e + 1 - n) as u64;
        let dim = n as isize - 4;
        let m = restricted_matching(&g).map_err(|e| format!("{spec}: {e}"))?;
        let c = morse_census_checked(&m, &spec)?;
        ensure!(c.total() == count && c.in_dim(dim) == count, "{spec}: census {:?}", c.critical);
        let h = homology_of(&g, 2, &spec).unwrap();
        ensure!(h.is_concentrated(dim, count), "{spec}: {:?}", h.betti());
        for d in 0..c.critical.len() {
            ensure!(c.critical[d] >= h.betti().get(d).copied().unwrap_or(0), "{spec}: weak Morse inequality");
        }
    }
    let p = reduced_homology(&cut_complex(&fam("petersen")?, 2)).unwrap();
    ensure!(p.is_concentrated(6, 6), "Petersen {:?}", p.betti());
    Ok(())
}

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let p = rng.gen_range(0.2..0.8);
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Each new vertex attaches to a subset of an earlier clique, so the result is chordal.
fn random_chordal(rng: &mut StdRng, n: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    for v in 1..n {
        let base = cliques[rng.gen_range(0..cliques.len())].clone();
        let mut clique: Vec<usize> = base.into_iter().filter(|_| rng.gen_bool(0.6)).collect();
        for &u in &clique {
            g.add_edge(u, v).unwrap();
        }
        clique.push(v);
        cliques.push(clique);
    }
    g
}

fn check_laws(g: &Graph, what: &str) -> Check {
    let n = g.n();
    let all = g.vertices();
    for k in 2..=n {
        let delta = cut_complex(g, k);
        let next = cut_complex(g, k + 1);
        let what = format!("{what} k={k}");
        ensure!(next.facets().iter().all(|f| delta.contains_face(f)), "{what}: Δ(k+1) not contained in Δ(k)");
        ensure!(facets_via_ridges(&delta, k) == next.facets(), "{what}: ridge construction differs");
        for w in subsets_of(&all).filter(|w| w.len() <= 2 && !w.is_empty()) {
            let deleted = cut_complex(&g.delete_vertices(&w).unwrap(), k);
            let rest = all.difference(&w).to_vec();
            let lifted = deleted.relabel(&rest, n);
            if delta.contains_face(&w) {
                ensure!(lifted == delta.link(&w), "{what}: link of {w:?} differs from deletion");
            } else {
                ensure!(deleted.is_void(), "{what}: deleting non-face {w:?} should give void");
            }
        }
        homology_checked(&delta, &what);
    }
    Ok(())
}

fn shellable_or_void(g: &Graph, k: usize, what: &str) -> std::result::Result<bool, String> {
    Ok(shell(&cut_complex(g, k), what)?.is_shellable())
}

fn structural_laws() -> Check {
    let mut rng = StdRng::seed_from_u64(0x1a75);
    let corpus: Vec<Graph> = (0..30)
        .map(|_| {
            let n = rng.gen_range(3..=7);
            random_graph(&mut rng, n)
        })
        .collect();
    for (i, g) in corpus.iter().enumerate() {
        check_laws(g, &format!("graph #{i} {:?}", g.edges()))?;
        // shellability passes to induced subgraphs
        for k in 2..=g.n() {
            let what = format!("graph #{i} k={k}");
            if shellable_or_void(g, k, &what)? {
                for v in 0..g.n() {
                    let h = g.delete_vertices(&VertexSet::singleton(v)).unwrap();
                    ensure!(shellable_or_void(&h, k, &what)?, "{what}: deleting {v} lost shellability");
                }
            }
        }
    }
    // binary operations on the smaller members of the corpus
    let small: Vec<&Graph> = corpus.iter().filter(|g| g.n() <= 4).take(8).collect();
    for (a, g1) in small.iter().enumerate() {
        for (b, g2) in small.iter().enumerate() {
            let label = format!("pair ({a},{b})");
            let union = combine(Combine::Union, g1, g2).unwrap();
            let join = combine(Combine::Join, g1, g2).unwrap();
            let wedge = combine(Combine::Wedge { v1: 0, v2: 0 }, g1, g2).unwrap();
            for k in 2..=g1.n() + g2.n() {
                let what = format!("{label} k={k}");
                let (d1, d2) = (cut_complex(g1, k), cut_complex(g2, k));
                let s1 = shellable_or_void(g1, k, &what)?;
                let s2 = shellable_or_void(g2, k, &what)?;
                ensure!(shellable_or_void(&union, k, &what)? == (s1 && s2), "{what}: disjoint union law fails");
                let join_expected = (s1 && d2.is_void()) || (s2 && d1.is_void());
                ensure!(shellable_or_void(&join, k, &what)? == join_expected, "{what}: join law fails");
                ensure!(shellable_or_void(&wedge, k, &what)? == (s1 && s2), "{what}: wedge law fails");
                // facets of the join split into the two lifted families
                let (n1, n2) = (g1.n(), g2.n());
                let v1 = VertexSet::full(n1);
                let v2 = VertexSet::full(n2).shifted(n1);
                let mut expect: Vec<Face> = d1.facets().iter().map(|f| f.union(&v2)).collect();
                expect.extend(d2.facets().iter().map(|f| f.shifted(n1).union(&v1)));
                expect.sort();
                ensure!(cut_complex(&join, k).facets() == expect.as_slice(), "{what}: join facets differ");
            }
        }
    }
    for t in 0..20 {
        let n = rng.gen_range(4..=8);
        let g = random_chordal(&mut rng, n);
        ensure!(g.is_chordal(), "generator produced a non-chordal graph");
        let what = format!("chordal #{t} {:?}", g.edges());
        ensure!(shellable_or_void(&g, 3, &what)?, "{what}: Δ3 not shellable");
    }
    for k in [4, 5] {
        let g = fam(&format!("kayak:{k}"))?;
        let what = format!("kayak {k}");
        ensure!(g.is_chordal(), "{what} not chordal");
        ensure!(shell(&cut_complex(&g, k), &what)?.is_not_shellable(), "{what}: reported shellable");
        for v in 0..g.n() {
            let h = g.delete_vertices(&VertexSet::singleton(v)).unwrap();
            ensure!(shellable_or_void(&h, k, &what)?, "{what} minus {v}: not shellable");
        }
    }
    Ok(())
}

fn squared_cycles() -> Check {
    for k in 3..=5 {
        let n = k + 4;
        let g = fam(&format!("squared_cycle:{n}"))?;
        let mut expect = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let s: Face = [i, (i + 1) % n, j, (j + 1) % n].into_iter().collect();
                if i != j && s.len() == 4 && !s.contains((i + 2) % n) && !s.contains((j + 2) % n) {
                    expect.push(s);
                }
            }
        }
        expect.sort();
        expect.dedup();
        let delta = cut_complex(&g, k);
        ensure!(delta.facets() == expect.as_slice(), "W{n} k={k}: facets {:?}", delta.facets());
        let h = homology_of(&g, k, &format!("W{n} k={k}")).unwrap();
        ensure!(h.is_concentrated(1, 1), "W{n} k={k}: {:?}", h.betti());
    }
    Ok(())
}

fn euler_consistency() -> Check {
    let failures = EULER_FAILURES.lock().unwrap();
    let checked = *EULER_CHECKED.lock().unwrap();
    ensure!(checked > 0, "no complexes were checked");
    ensure!(failures.is_empty(), "{} mismatches, first: {}", failures.len(), failures[0]);
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("mobius strip", mobius),
        ("bipartite betti numbers", bipartite),
        ("multipartite shellability boundary", multipartite_shellability),
        ("cycle lex shelling and betti numbers", cycles),
        ("forests and trees", forests),
        ("prism morse matching", prisms),
        ("projective plane torsion", projective_plane),
        ("triangle-free k=2", triangle_free),
        ("structural laws", structural_laws),
        ("squared cycles", squared_cycles),
        ("euler consistency", euler_consistency),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
