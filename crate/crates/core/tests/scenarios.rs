use ms_core::catalog::{
    emit_report, run_scenario, scenario_ids, ReportFormat, ScenarioOptions, ScenarioStatus,
};

fn without_timing(mut r: ms_core::catalog::ScenarioResult) -> String {
    r.elapsed_ms = 0;
    serde_json::to_string(&r).unwrap()
}

#[test]
fn reproducible_under_a_fixed_seed() {
    let opts = ScenarioOptions {
        seed: 7,
        ..Default::default()
    };
    for id in [
        "nonexistence-3.3",
        "thickening-roundtrip",
        "char2-identification",
    ] {
        let a = without_timing(run_scenario(id, &opts).unwrap());
        let b = without_timing(run_scenario(id, &opts).unwrap());
        assert_eq!(a, b, "{}", id);
    }
}

#[test]
fn every_scenario_passes_with_defaults() {
    let opts = ScenarioOptions::default();
    let results: Vec<_> = scenario_ids()
        .iter()
        .map(|id| run_scenario(id, &opts).unwrap())
        .collect();
    let text = emit_report(&results, ReportFormat::Text);
    assert!(
        text.ends_with(&format!("{0}/{0} scenarios passed\n", results.len())),
        "{}",
        text
    );
}

#[test]
fn characteristic_two_rows_only() {
    let opts = ScenarioOptions {
        char: Some(2),
        ..Default::default()
    };
    let r = run_scenario("thm-3.14", &opts).unwrap();
    assert_eq!(r.status, ScenarioStatus::Pass, "{:?}", r.diffs);
    assert!(r
        .checks
        .iter()
        .any(|c| c.name.starts_with("thm-3.14/18 (char 2)")));
}
