//! Text and JSON rendering of scenario results.

use serde::Serialize;

use super::scenarios::{ScenarioResult, ScenarioStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct Envelope<'a> {
    summary: String,
    passed: usize,
    total: usize,
    exit_code: i32,
    results: &'a [ScenarioResult],
}

fn summary(results: &[ScenarioResult]) -> (usize, String) {
    let passed = results.iter().filter(|r| r.passed()).count();
    (
        passed,
        format!("{}/{} scenarios passed", passed, results.len()),
    )
}

/// 0 when everything passed, 1 on any failure, otherwise 2.
pub fn exit_code(results: &[ScenarioResult]) -> i32 {
    if results.iter().any(|r| r.status == ScenarioStatus::Fail) {
        1
    } else if results
        .iter()
        .any(|r| r.status == ScenarioStatus::Inconclusive)
    {
        2
    } else {
        0
    }
}

pub fn emit_report(results: &[ScenarioResult], format: ReportFormat) -> String {
    let (passed, line) = summary(results);
    match format {
        ReportFormat::Json => {
            let env = Envelope {
                summary: line,
                passed,
                total: results.len(),
                exit_code: exit_code(results),
                results,
            };
            serde_json::to_string_pretty(&env).expect("report serializes")
        }
        ReportFormat::Text => {
            let mut out = String::new();
            for r in results {
                out.push_str(&format!(
                    "{:<22} {:<12} {:>7} ms  {} checks\n",
                    r.id,
                    r.status.to_string(),
                    r.elapsed_ms,
                    r.checks.len()
                ));
                if let Some(n) = &r.note {
                    out.push_str(&format!("    note: {}\n", n));
                }
                for d in &r.diffs {
                    out.push_str(&format!("    --- {}\n", d.name));
                    out.push_str(&format!("    expected: {}\n", d.expected));
                    out.push_str(&format!("    computed: {}\n", d.computed));
                }
            }
            out.push_str(&line);
            out.push('\n');
            out
        }
    }
}
