//! Corpus verification: closed-form homology predictions and the
//! shellability column of the summary table, row by row.

use std::fmt::Write;

use cutplex::{cut_complex, find_shelling, predicted_betti, reduced_homology, Error, Family, Result, Verdict};
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{agrees, Report};

/// Expected shellability of Δ_k for a row, when the table states one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shell {
    Yes,
    No,
    Unstated,
}

struct Entry {
    family: Family,
    k: usize,
    shell: Shell,
}

#[derive(Serialize)]
struct Row {
    family: String,
    k: usize,
    predicted: Value,
    computed_betti: Option<Vec<u64>>,
    homology_ok: Option<bool>,
    shellable_expected: Option<bool>,
    shellable_computed: Option<String>,
    ok: bool,
}

fn expect(b: bool) -> Shell {
    if b {
        Shell::Yes
    } else {
        Shell::No
    }
}

fn table1_small() -> Vec<Entry> {
    use Family::*;
    let mut out = Vec::new();
    let mut push = |family: Family, k: usize, shell: Shell| out.push(Entry { family, k, shell });
    for m in 1..=4 {
        for n in m..=4 {
            for k in 2..=m + n {
                push(CompleteMultipartite(vec![m, n]), k, expect(m < k));
            }
        }
    }
    for parts in [vec![1, 2, 2], vec![2, 2, 2], vec![1, 1, 3], vec![1, 2, 3], vec![2, 2, 3], vec![1, 1, 1, 3]] {
        let total: usize = parts.iter().sum();
        let second = parts[parts.len() - 2];
        for k in 2..=total {
            push(CompleteMultipartite(parts.clone()), k, expect(second < k));
        }
    }
    for n in 4..=8 {
        for k in 2..=n {
            push(Cycle(n), k, expect(k >= 3));
        }
    }
    for n in 6..=9 {
        push(SquaredCycle(n), 2, Shell::No);
        if n >= 7 {
            push(SquaredCycle(n), n - 4, Shell::No);
        }
    }
    for n in 2..=4 {
        for k in 2..=2 * n {
            push(Prism(n), k, expect(k > n));
        }
    }
    for tree in [Path(6), Star(5), Tree(vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)])] {
        let n = tree.build().map(|g| g.n()).unwrap_or(0);
        for k in 2..=n {
            push(tree.clone(), k, Shell::Yes);
        }
    }
    for bits in ["0101", "1011", "00110"] {
        let t = Threshold(bits.chars().map(|c| c == '1').collect());
        let n = bits.len() + 1;
        for k in 2..=n {
            push(t.clone(), k, Shell::Yes);
        }
    }
    for g in [Cycle(5), CompleteMultipartite(vec![2, 3]), CompleteMultipartite(vec![3, 3])] {
        push(g, 2, Shell::No);
    }
    push(Petersen, 2, Shell::Unstated);
    for (a, b) in [(4, 3), (5, 4), (4, 2)] {
        let n = a + b - 1;
        for k in 3..n {
            push(Balloon(a, b), k, Shell::Unstated);
        }
        for k in 3..n - 1 {
            push(FigureEight(a, b.max(3)), k, Shell::Unstated);
        }
    }
    out
}

fn run_entry(e: &Entry, budget: u64) -> Result<Row> {
    let g = e.family.build()?;
    let delta = cut_complex(&g, e.k);
    let h = if delta.is_void() { None } else { Some(reduced_homology(&delta)?) };
    let prediction = predicted_betti(&e.family, e.k);
    let (predicted, homology_ok) = match &prediction {
        Ok(p) => (serde_json::to_value(p).unwrap(), Some(agrees(p, h.as_ref()))),
        Err(Error::NotCovered(why)) => (json!({ "status": "not_covered", "reason": why }), None),
        Err(other) => return Err(other.clone()),
    };
    let (shellable_expected, shellable_computed, shell_ok) = match e.shell {
        Shell::Unstated => (None, None, true),
        want => {
            let cert = find_shelling(&delta, budget)?;
            let (text, ok) = match cert.verdict {
                Verdict::Shellable { .. } => ("shellable", want == Shell::Yes),
                Verdict::NotShellable => ("not_shellable", want == Shell::No),
                Verdict::Unknown => ("unknown", false),
            };
            (Some(want == Shell::Yes), Some(text.to_string()), ok)
        }
    };
    Ok(Row {
        family: e.family.to_string(),
        k: e.k,
        predicted,
        computed_betti: h.as_ref().map(|h| h.betti()),
        homology_ok,
        shellable_expected,
        shellable_computed,
        ok: homology_ok != Some(false) && shell_ok,
    })
}

pub fn verify(corpus: &str, budget: u64) -> Result<Report> {
    let entries = match corpus {
        "table1-small" => table1_small(),
        other => return Err(Error::InvalidParameter(format!("unknown corpus `{other}` (known: table1-small)"))),
    };
    // entries run in parallel; results are reported in corpus order
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(entries.len().max(1));
    let mut rows: Vec<Option<Result<Row>>> = (0..entries.len()).map(|_| None).collect();
    std::thread::scope(|s| {
        let chunks: Vec<_> = rows
            .chunks_mut(entries.len().div_ceil(threads))
            .zip(entries.chunks(entries.len().div_ceil(threads)))
            .collect();
        for (slots, work) in chunks {
            s.spawn(move || {
                for (slot, e) in slots.iter_mut().zip(work) {
                    *slot = Some(run_entry(e, budget));
                }
            });
        }
    });
    let rows: Vec<Row> = rows.into_iter().map(|r| r.expect("every entry ran")).collect::<Result<_>>()?;
    let failures = rows.iter().filter(|r| !r.ok).count();
    let mut human = String::new();
    writeln!(human, "{:<32} {:>3}  {:<10} {:<14} result", "family", "k", "homology", "shelling").unwrap();
    for r in &rows {
        let hom = match r.homology_ok {
            Some(true) => "agrees",
            Some(false) => "DISAGREES",
            None => "-",
        };
        let sh = r.shellable_computed.as_deref().unwrap_or("-");
        writeln!(human, "{:<32} {:>3}  {:<10} {:<14} {}", r.family, r.k, hom, sh, if r.ok { "ok" } else { "MISMATCH" })
            .unwrap();
    }
    writeln!(human, "{} rows, {} mismatches", rows.len(), failures).unwrap();
    let json = json!({ "corpus": corpus, "rows": rows, "mismatches": failures });
    Ok(Report { json, human, mismatch: failures > 0 })
}
