//! Reports for each subcommand. Each one carries a JSON value (0-based
//! vertices), a human rendering (graph labels, 1-based by default) and
//! whether a prediction disagreed with the computation.

use std::fmt::Write;

use cutplex::{
    cut_complex, element_matching_sequence, find_shelling, predicted_betti, prism_matching_order,
    realize_as_cut_complex, reduced_homology, restricted_matching, skeleton_condition_and_euler, tree_matching_order,
    verify_acyclic_and_critical, BettiPrediction, Complex, Error, Face, Family, Graph, HomologyReport, MorseMatching,
    Result, Verdict,
};
use serde_json::{json, Value};

use crate::input::{parse_order, GraphInput};

pub struct Report {
    pub json: Value,
    pub human: String,
    pub mismatch: bool,
}

fn face_label(g: &Graph, f: &Face) -> String {
    if f.is_empty() {
        return "∅".into();
    }
    let labels: Vec<String> = f.iter().map(|v| g.label(v)).collect();
    if labels.iter().all(|l| l.len() == 1) {
        labels.concat()
    } else {
        format!("{{{}}}", labels.join(","))
    }
}

fn faces_label(g: &Graph, faces: &[Face]) -> String {
    faces.iter().map(|f| face_label(g, f)).collect::<Vec<_>>().join(", ")
}

fn header(input: &GraphInput, k: usize) -> (Value, String) {
    let g = &input.graph;
    let json = json!({ "input": input.spec, "n": g.n(), "edges": g.edge_count(), "k": k });
    let human = format!("graph  {} (n={}, e={})\nk      {k}\n", input.spec, g.n(), g.edge_count());
    (json, human)
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn state(delta: &Complex) -> &'static str {
    if delta.is_void() {
        "void"
    } else if delta.is_empty_complex() {
        "empty face only"
    } else {
        "nonvoid"
    }
}

pub fn build(input: &GraphInput, k: usize) -> Result<Report> {
    let delta = cut_complex(&input.graph, k);
    let (mut json, mut human) = header(input, k);
    // facets and ambient sit at the top level so the output reads back as a complex
    merge(&mut json, delta.to_json());
    let fe = delta.f_vector_and_euler().ok();
    let antichain = antichain(&input.graph, k);
    merge(
        &mut json,
        json!({
            "facet_count": delta.facets().len(),
            "dim": delta.dim(),
            "f_vector": fe.as_ref().map(|(f, _)| f),
            "mu": fe.as_ref().and_then(|(_, m)| i64::try_from(*m).ok()),
            "antichain": antichain.as_ref().map(|(holds, mu, z)| json!({ "holds": holds, "mu": mu.and_then(|m| i64::try_from(m).ok()), "connected_ksets": z })),
        }),
    );
    writeln!(human, "state  {}", state(&delta)).unwrap();
    writeln!(human, "facets ({})  {}", delta.facets().len(), faces_label(&input.graph, delta.facets())).unwrap();
    if let Some((f, mu)) = &fe {
        writeln!(human, "f      {f:?}").unwrap();
        writeln!(human, "mu     {mu}").unwrap();
    }
    let mut mismatch = false;
    if let (Some((holds, Some(amu), _)), Some((_, mu))) = (&antichain, &fe) {
        writeln!(human, "antichain formula  {amu} (skeleton condition {holds})").unwrap();
        mismatch = amu != mu;
    }
    Ok(Report { json, human, mismatch })
}

fn antichain(g: &Graph, k: usize) -> Option<(bool, Option<i128>, u64)> {
    skeleton_condition_and_euler(g, k).ok().map(|s| (s.holds, s.mu, s.connected_ksets))
}

fn prediction_json(p: &std::result::Result<BettiPrediction, Error>) -> Value {
    match p {
        Ok(p) => serde_json::to_value(p).unwrap(),
        Err(e) => json!({ "status": "not_covered", "reason": e.to_string() }),
    }
}

/// Whether computed homology agrees with a closed-form prediction.
pub fn agrees(prediction: &BettiPrediction, h: Option<&HomologyReport>) -> bool {
    match (prediction, h) {
        (BettiPrediction::Void, None) => true,
        (BettiPrediction::Contractible | BettiPrediction::Point, Some(h)) => h.is_acyclic(),
        (BettiPrediction::Wedge { dim, count }, Some(h)) => h.is_concentrated(*dim, *count),
        _ => false,
    }
}

pub fn homology(input: &GraphInput, k: usize) -> Result<Report> {
    let delta = cut_complex(&input.graph, k);
    let (mut json, mut human) = header(input, k);
    let h = if delta.is_void() { None } else { Some(reduced_homology(&delta)?) };
    let prediction = input.family.as_ref().map(|f| predicted_betti(f, k));
    let matches = match &prediction {
        Some(Ok(p)) => Some(agrees(p, h.as_ref())),
        _ => None,
    };
    merge(
        &mut json,
        json!({
            "state": state(&delta),
            "homology": h,
            "betti": h.as_ref().map(HomologyReport::betti),
            "euler": h.as_ref().and_then(|h| i64::try_from(h.euler()).ok()),
            "predicted": prediction.as_ref().map(prediction_json),
            "matches": matches,
        }),
    );
    match &h {
        None => writeln!(human, "void complex, no homology").unwrap(),
        Some(h) => {
            writeln!(human, "{:>5}  {:>6}  torsion", "dim", "rank").unwrap();
            for grp in &h.groups {
                let t: Vec<String> = grp.torsion.iter().map(ToString::to_string).collect();
                writeln!(
                    human,
                    "{:>5}  {:>6}  {}",
                    grp.dim,
                    grp.rank,
                    if t.is_empty() { "-".into() } else { t.join(" ") }
                )
                .unwrap();
            }
        }
    }
    if let Some(p) = &prediction {
        let text = match p {
            Ok(p) => format!("{p:?}"),
            Err(e) => e.to_string(),
        };
        let verdict = match matches {
            Some(true) => "agrees",
            Some(false) => "DISAGREES",
            None => "not compared",
        };
        writeln!(human, "predicted  {text}  ({verdict})").unwrap();
    }
    Ok(Report { json, human, mismatch: matches == Some(false) })
}

pub fn shell(input: &GraphInput, k: usize, budget: u64) -> Result<Report> {
    let delta = cut_complex(&input.graph, k);
    let (mut json, mut human) = header(input, k);
    let cert = find_shelling(&delta, budget)?;
    merge(&mut json, json!({ "state": state(&delta), "certificate": cert }));
    let verdict = match &cert.verdict {
        Verdict::Shellable { .. } if cert.void => "Shellable (void complex, by convention)".to_string(),
        Verdict::Shellable { order } => format!("Shellable\norder  {}", faces_label(&input.graph, order)),
        Verdict::NotShellable => "NotShellable".to_string(),
        Verdict::Unknown => format!("Unknown (budget of {budget} nodes exhausted)"),
    };
    writeln!(human, "verdict  {verdict}\nnodes  {}", cert.nodes).unwrap();
    Ok(Report { json, human, mismatch: false })
}

pub fn morse(input: &GraphInput, k: usize, order: &str, root: usize) -> Result<Report> {
    let g = &input.graph;
    let delta = cut_complex(g, k);
    let matching: MorseMatching = match order {
        "tree" => element_matching_sequence(&delta, &tree_matching_order(g, root)?)?,
        "restricted" => {
            if k != 2 {
                return Err(Error::InvalidParameter("the restricted matching lives on Δ_2".into()));
            }
            restricted_matching(g)?
        }
        "prism" => {
            let Some(Family::Prism(p)) = input.family else {
                return Err(Error::InvalidParameter("the prism order needs a prism:N graph".into()));
            };
            element_matching_sequence(&delta, &prism_matching_order(p, k)?)?
        }
        list => element_matching_sequence(&delta, &parse_order(list, g.n())?)?,
    };
    let census = verify_acyclic_and_critical(&matching)?;
    let critical = matching.critical_faces();
    let (mut json, mut human) = header(input, k);
    merge(
        &mut json,
        json!({
            "order": order,
            "pairs": matching.pairs,
            "acyclic": census.acyclic,
            "critical": census.critical,
            "critical_faces": critical.iter().map(Face::to_vec).collect::<Vec<_>>(),
        }),
    );
    writeln!(human, "pairs     {}", matching.pairs.len()).unwrap();
    writeln!(human, "acyclic   {}", census.acyclic).unwrap();
    for d in census.support() {
        writeln!(human, "critical in dim {d}: {}", census.in_dim(d)).unwrap();
    }
    writeln!(human, "critical faces  {}", faces_label(g, &critical)).unwrap();
    Ok(Report { json, human, mismatch: !census.acyclic })
}

pub fn realize(complex: &Complex) -> Result<Report> {
    let r = realize_as_cut_complex(complex)?;
    let recovered = r.recovered(complex.ambient());
    let round_trip = recovered == *complex;
    let json = json!({
        "k": r.k,
        "n": r.graph.n(),
        "edges": r.graph.edges(),
        "labels": r.graph.labels(),
        "vertex_map": r.vertex_map,
        "chordal": r.graph.is_chordal(),
        "round_trip": round_trip,
        "graph_text": r.graph.to_text(),
    });
    let mut human = String::new();
    writeln!(
        human,
        "k      {}\nn      {}\nchordal {}\nround trip {}",
        r.k,
        r.graph.n(),
        r.graph.is_chordal(),
        round_trip
    )
    .unwrap();
    writeln!(human, "graph (text format):\n{}", r.graph.to_text().trim_end()).unwrap();
    Ok(Report { json, human, mismatch: !round_trip })
}

pub fn experiment_squared_cycle(k: usize, n: usize) -> Result<Report> {
    let family = Family::SquaredCycle(n);
    let g = family.build()?;
    let input = GraphInput { spec: family.to_string(), graph: g, family: Some(family) };
    let mut report = homology(&input, k)?;
    let mut notes = Vec::new();
    if k >= 3 && n == k + 5 {
        let beta = (k - 3) * (k - 2) * (k + 5) / 6;
        notes.push(format!("conjectured: H3 = Z and H4 = Z^{beta}"));
        merge(&mut report.json, json!({ "conjecture": { "h3": 1, "h4": beta } }));
    }
    if k == 3 && n >= 9 {
        let top = (n - 4) * (n - 5) / 2 - 9;
        notes.push(format!("conjectured: shellable with top Betti number {top} in dim {}", n - k - 1));
        merge(&mut report.json, json!({ "conjecture_top_betti": top }));
    }
    if notes.is_empty() {
        notes.push("no conjecture stated for these parameters".into());
    }
    for note in notes {
        writeln!(report.human, "{note}").unwrap();
    }
    // conjectures are printed for comparison only
    report.mismatch = false;
    Ok(report)
}
