use ms_core::idealcalc::Ideal;
use ms_core::multistruct::{build_family, Family, FamilyMember};
use ms_core::polyring::Field;

fn check_manifest(m: &FamilyMember) {
    let s = &m.structure;
    assert_eq!(
        s.multiplicity().unwrap(),
        m.manifest.multiplicity,
        "{}",
        m.label
    );
    if let Some(cm) = m.manifest.locally_cm {
        assert_eq!(s.is_locally_cm().unwrap(), cm, "{}", m.label);
    }
    if let Some(ti) = m.manifest.type_i {
        assert_eq!(s.is_type_i().unwrap().0, ti, "{}", m.label);
    }
    if let Some(h) = &m.manifest.hilbert {
        assert_eq!(&s.ideal().hilbert_polynomial().unwrap(), h, "{}", m.label);
    }
}

#[test]
fn primitive_family() {
    for nu in 2..=4 {
        for m in build_family(&Family::Primitive { nu }, Field::Rational).unwrap() {
            check_manifest(&m);
        }
    }
}

#[test]
fn koszul_family_and_extension() {
    for d in 1..=2 {
        let m = &build_family(&Family::Koszul { n: 2, d }, Field::Rational).unwrap()[0];
        check_manifest(m);
        let f = m.structure.filtration().unwrap();
        let add = f.additive_hilbert().unwrap();
        assert_eq!(add, m.structure.ideal().hilbert_polynomial().unwrap());
    }
    let m = &build_family(&Family::KoszulExtended { n: 2, d: 1 }, Field::Rational).unwrap()[0];
    check_manifest(m);
    let locus = m.structure.ideal().cm_data().unwrap().locus;
    let (_, want) = &m.related[0];
    assert!(locus.radical_contains_ideal(want).unwrap());
    assert!(want.contains_ideal(&locus).unwrap());
}

#[test]
fn rank_two_quotient_family() {
    for a in 2..=4 {
        let m = &build_family(&Family::RankTwoQuotient { a }, Field::Rational).unwrap()[0];
        check_manifest(m);
        let f = m.structure.filtration().unwrap();
        assert_eq!(f.layers.last().unwrap().rank, 2);
        assert!(f.flags.iter().all(|t| t.multiplicity != 4));
    }
}

#[test]
fn bundle_family() {
    for a in 0..=2 {
        check_manifest(&build_family(&Family::Bundle { a }, Field::Rational).unwrap()[0]);
    }
}

#[test]
fn split_family() {
    let m = &build_family(&Family::Split, Field::Rational).unwrap()[0];
    check_manifest(m);
    let r = m.structure.ring().clone();
    let cut = m
        .structure
        .ideal()
        .sum(&Ideal::from_strs(&r, &["xb0", "xb1", "xb2"]).unwrap())
        .unwrap();
    assert!(cut.equals(&m.related[0].1).unwrap());
}

#[test]
fn subset_lattice() {
    let ms = build_family(&Family::CiSubsets, Field::Rational).unwrap();
    for m in &ms {
        check_manifest(m);
    }
    for (i, a) in ms.iter().enumerate() {
        for (j, b) in ms.iter().enumerate() {
            let sub = (i as u32) & !(j as u32) == 0;
            // Z_a ⊆ Z_b iff I_b ⊆ I_a
            let incl = a
                .structure
                .ideal()
                .contains_ideal(b.structure.ideal())
                .unwrap();
            assert_eq!(incl, sub, "{} vs {}", a.label, b.label);
        }
    }
}

#[test]
fn non_type_i_family() {
    for (a, b) in [(1, 1), (1, 2), (2, 2)] {
        let m = &build_family(&Family::NonTypeI { a, b }, Field::Rational).unwrap()[0];
        check_manifest(m);
        let f = m.structure.filtration().unwrap();
        let z = &m.related[0].1;
        let pos = f
            .terms
            .iter()
            .position(|t| t.equals(z).unwrap())
            .expect("Z in filtration");
        assert!(!f.flags[pos].locally_cm);
        let locus = f.flags[pos].non_cm_locus.as_ref().unwrap();
        let want = &m.related[1].1;
        assert!(locus.radical_contains_ideal(want).unwrap());
        assert!(want.contains_ideal(locus).unwrap());
    }
}
