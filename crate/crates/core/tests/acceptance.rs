//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

mod support;

use std::process::ExitCode;
use std::time::Instant;

use ms_core::catalog::{load_catalog, run_scenario, ScenarioOptions};
use ms_core::polyring::Limits;

type Outcome = Result<String, String>;

fn scenarios(ids: &[&str]) -> Outcome {
    let opts = ScenarioOptions::default();
    let mut checks = 0;
    for id in ids {
        let r = run_scenario(id, &opts).map_err(|e| e.to_string())?;
        if !r.passed() {
            let first = r
                .diffs
                .first()
                .map(|d| {
                    format!(
                        "{}: expected {}, computed {}",
                        d.name, d.expected, d.computed
                    )
                })
                .or(r.note.clone())
                .unwrap_or_default();
            return Err(format!("{} {}: {}", id, r.status, first));
        }
        checks += r.checks.len();
    }
    Ok(format!("{} checks in {}", checks, ids.join(", ")))
}

fn filtration() -> Outcome {
    scenarios(&["example-2.9"])
}

fn tables() -> Outcome {
    let sizes: Vec<usize> = ["thm-3.6", "thm-3.8", "thm-3.14"]
        .iter()
        .map(|id| load_catalog(id).map(|t| t.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    if sizes != [5, 8, 18] {
        return Err(format!("table sizes {:?}", sizes));
    }
    scenarios(&["thm-3.6", "thm-3.8", "thm-3.14", "tables"])
}

fn additivity() -> Outcome {
    let mut n = 0;
    for id in ["thm-3.6", "thm-3.8", "thm-3.14"] {
        for e in load_catalog(id).map_err(|e| e.to_string())? {
            for &ch in &e.characteristics {
                let ms = e
                    .structure(ch, Limits::default())
                    .map_err(|x| x.to_string())?;
                let f = ms.filtration().map_err(|x| x.to_string())?;
                let add = f.additive_hilbert().map_err(|x| x.to_string())?;
                let h = ms.ideal().hilbert_polynomial().map_err(|x| x.to_string())?;
                if add != h {
                    return Err(format!("{} (char {}): {} vs {}", e.id, ch, h, add));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{} structures", n))
}

fn characteristic() -> Outcome {
    scenarios(&["char2-identification", "char3-identification"])
}

fn nonexistence() -> Outcome {
    scenarios(&["nonexistence-3.3"])
}

fn non_type_i() -> Outcome {
    scenarios(&["non-type-i"])
}

fn horrocks_mumford() -> Outcome {
    scenarios(&["hm-hilbert"])
}

fn degree_three() -> Outcome {
    scenarios(&["degree3-catalog"])
}

fn roundtrip() -> Outcome {
    scenarios(&["thickening-roundtrip"])
}

fn properties() -> Outcome {
    let suites: [(&str, fn() -> Result<(), String>); 5] = [
        ("ring axioms", support::ring_axioms),
        ("Groebner determinism", support::groebner_determinism),
        ("saturation idempotence", support::saturation_idempotence),
        (
            "Fitting presentation-invariance",
            support::fitting_invariance,
        ),
        ("Ext window", support::ext_window),
    ];
    for (name, run) in suites {
        run().map_err(|e| format!("{}: {}", name, e))?;
    }
    Ok(format!("5 suites x {} cases", support::CASES))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("filtration reproduction", filtration),
        ("classification tables", tables),
        ("Hilbert additivity", additivity),
        ("characteristic dichotomy", characteristic),
        ("non-existence of a thickening", nonexistence),
        ("non-type-I family", non_type_i),
        ("Horrocks-Mumford arithmetic", horrocks_mumford),
        ("degree-3 catalog", degree_three),
        ("correspondence round-trip", roundtrip),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match run() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {:<32} {}  ({}; {:.1}s)",
            k + 1,
            name,
            tag,
            detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
