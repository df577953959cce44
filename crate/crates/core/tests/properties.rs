mod support;

#[test]
fn ring_axioms() {
    support::ring_axioms().unwrap();
}

#[test]
fn groebner_determinism() {
    support::groebner_determinism().unwrap();
}

#[test]
fn saturation_idempotence() {
    support::saturation_idempotence().unwrap();
}

#[test]
fn fitting_presentation_invariance() {
    support::fitting_invariance().unwrap();
}

#[test]
fn ext_window_triviality() {
    support::ext_window().unwrap();
}

#[test]
fn filtration_inclusion_law() {
    support::filtration_inclusion().unwrap();
}

#[test]
fn hilbert_additivity() {
    support::hilbert_additivity().unwrap();
}
