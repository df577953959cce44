//! Seeded property suites shared by the proptest tests and the acceptance
//! harness. Each suite runs `CASES` random instances and reports the first
//! minimal failure.

#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use ms_core::groebner::reduced_groebner;
use ms_core::idealcalc::{GradedModule, Ideal};
use ms_core::multistruct::{is_s1, Embedding, MultiStructure};
use ms_core::polyring::{substitute_linear, Field, Monomial, PolyRing, Polynomial, TermOrder};

pub const CASES: u32 = 200;

pub fn runner(seed: u8) -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(
        config,
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

fn ring(names: &[&str], ch: u64) -> Arc<PolyRing> {
    PolyRing::new(
        names,
        Field::from_characteristic(ch).unwrap(),
        TermOrder::Grevlex,
    )
    .unwrap()
}

type Terms = Vec<(Vec<u16>, i64)>;

fn arb_terms(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -4i64..=4),
        0..=max_terms,
    )
}

fn build(ring: &Arc<PolyRing>, terms: &Terms) -> Polynomial {
    let f = ring.field();
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c)))
            .collect(),
    )
}

/// A homogeneous form: degree and (monomial index, coefficient) pairs.
type Form = (u32, Vec<(usize, i64)>);

fn arb_form(nvars: usize, degrees: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = Form> {
    degrees.prop_flat_map(move |d| {
        let n = Monomial::all_of_degree(nvars, d).len();
        (Just(d), prop::collection::vec((0..n, -3i64..=3), 1..=3))
    })
}

fn build_form(ring: &Arc<PolyRing>, (d, terms): &Form) -> Polynomial {
    let monos = Monomial::all_of_degree(ring.nvars(), *d);
    let f = ring.field();
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(i, c)| (monos[*i].clone(), f.from_i64(*c)))
            .collect(),
    )
}

fn arb_ideal(nvars: usize) -> impl Strategy<Value = Vec<Form>> {
    prop::collection::vec(arb_form(nvars, 1..=3), 1..=3)
}

fn nonzero_forms(ring: &Arc<PolyRing>, forms: &[Form]) -> Vec<Polynomial> {
    forms
        .iter()
        .map(|f| build_form(ring, f))
        .filter(|p| !p.is_zero())
        .collect()
}

fn err(e: impl std::fmt::Display) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

fn finish(
    r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// Associativity, commutativity, distributivity; Frobenius in
/// characteristic p; linear substitution is multiplicative; every term
/// order is total on monomials of equal degree.
pub fn ring_axioms() -> Result<(), String> {
    let names = ["a", "b", "c"];
    let strat = (
        arb_terms(3, 3, 4),
        arb_terms(3, 3, 4),
        arb_terms(3, 3, 4),
        prop::sample::select(vec![0u64, 2, 3, 5]),
        prop::collection::vec(-2i64..=2, 9),
    );
    finish(runner(1).run(&strat, |(ta, tb, tc, ch, m)| {
        let r = ring(&names, ch);
        let (a, b, c) = (build(&r, &ta), build(&r, &tb), build(&r, &tc));
        let ab = a.try_mul(&b).map_err(err)?;
        prop_assert_eq!(&ab, &b.try_mul(&a).map_err(err)?);
        prop_assert_eq!(&a.try_add(&b).map_err(err)?, &b.try_add(&a).map_err(err)?);
        prop_assert_eq!(
            ab.try_mul(&c).map_err(err)?,
            a.try_mul(&b.try_mul(&c).map_err(err)?).map_err(err)?
        );
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).map_err(err)?).map_err(err)?,
            ab.try_add(&a.try_mul(&c).map_err(err)?).map_err(err)?
        );
        if ch > 0 {
            let p = ch as u32;
            prop_assert_eq!(
                a.try_add(&b).map_err(err)?.pow(p),
                a.pow(p).try_add(&b.pow(p)).map_err(err)?
            );
        }
        let f = r.field();
        let images: Vec<Polynomial> = (0..3)
            .map(|i| {
                Polynomial::from_terms(
                    &r,
                    (0..3)
                        .map(|j| (Monomial::var(3, j, 1), f.from_i64(m[3 * i + j])))
                        .collect(),
                )
            })
            .collect();
        match substitute_linear(&[a.clone(), b.clone(), ab.clone()], &images) {
            Ok(img) => prop_assert_eq!(&img[2], &img[0].try_mul(&img[1]).map_err(err)?),
            Err(_) => {}
        }
        let orders = [
            TermOrder::Lex,
            TermOrder::Grevlex,
            TermOrder::Elimination(vec![true, false, false]),
        ];
        for (u, _) in ab.terms() {
            for (v, _) in a.try_mul(&c).map_err(err)?.terms() {
                if u.degree() == v.degree() && u != v {
                    for o in &orders {
                        let (x, y) = (o.cmp(u, v), o.cmp(v, u));
                        prop_assert!(x != std::cmp::Ordering::Equal && x == y.reverse());
                    }
                }
            }
        }
        Ok(())
    }))
}

/// Recomputing, reordering or rescaling generators gives the identical
/// reduced basis; normal forms are linear and decide membership.
pub fn groebner_determinism() -> Result<(), String> {
    let names = ["w", "x", "y", "z"];
    let strat = (
        arb_ideal(4),
        prop::sample::select(vec![0u64, 2, 3]),
        arb_terms(4, 2, 4),
        arb_terms(4, 2, 4),
    );
    finish(runner(2).run(&strat, |(forms, ch, tf, tg)| {
        let r = ring(&names, ch);
        let gens = nonzero_forms(&r, &forms);
        prop_assume!(!gens.is_empty());
        let g1 = reduced_groebner(&r, &gens).map_err(err)?;
        let g2 = reduced_groebner(&r, &gens).map_err(err)?;
        let minus = r.field().from_i64(-1);
        let shuffled: Vec<Polynomial> = gens.iter().rev().map(|g| g.scale(&minus)).collect();
        let g3 = reduced_groebner(&r, &shuffled).map_err(err)?;
        prop_assert_eq!(&g1, &g2);
        prop_assert_eq!(&g1, &g3);
        let j = Ideal::new(&r, gens.clone()).map_err(err)?;
        let (f, g) = (build(&r, &tf), build(&r, &tg));
        let nf = |p: &Polynomial| j.normal_form(p).map_err(err);
        let lhs = nf(&f.try_add(&g).map_err(err)?)?;
        let rhs = nf(&nf(&f)?.try_add(&nf(&g)?).map_err(err)?)?;
        prop_assert_eq!(lhs, rhs);
        let member = f.try_mul(&gens[0]).map_err(err)?;
        prop_assert!(j.contains(&member).map_err(err)?);
        prop_assert!(nf(&member)?.is_zero());
        Ok(())
    }))
}

/// `J ⊆ J : f ⊆ J : f^∞` and saturating twice changes nothing.
pub fn saturation_idempotence() -> Result<(), String> {
    let names = ["w", "x", "y", "z"];
    let strat = (arb_ideal(4), arb_form(4, 1..=1));
    finish(runner(3).run(&strat, |(forms, lin)| {
        let r = ring(&names, 0);
        let gens = nonzero_forms(&r, &forms);
        let f = build_form(&r, &lin);
        prop_assume!(!gens.is_empty() && !f.is_zero());
        let j = Ideal::new(&r, gens).map_err(err)?;
        let colon = j.colon_poly(&f).map_err(err)?;
        let (sat, _) = j.saturate_poly(&f).map_err(err)?;
        let (sat2, _) = sat.saturate_poly(&f).map_err(err)?;
        prop_assert!(colon.contains_ideal(&j).map_err(err)?);
        prop_assert!(sat.contains_ideal(&colon).map_err(err)?);
        prop_assert!(sat.equals(&sat2).map_err(err)?);
        Ok(())
    }))
}

/// Fitting ideals agree across presentations related by a change of basis
/// and by a redundant generator.
pub fn fitting_invariance() -> Result<(), String> {
    let names = ["x", "y", "z"];
    let strat = (1usize..=3, 1usize..=3).prop_flat_map(|(g, k)| {
        (
            Just(g),
            Just(k),
            prop::collection::vec(arb_form(3, 1..=1), g * k),
            prop::collection::vec(-2i64..=2, g),
            0..g,
            0..g,
            -2i64..=2,
        )
    });
    finish(runner(4).run(&strat, |(g, k, entries, comb, i0, j0, lam)| {
        let r = ring(&names, 0);
        let f = r.field();
        let zero = Polynomial::zero(&r);
        let rows: Vec<Vec<Polynomial>> = (0..g)
            .map(|i| {
                (0..k)
                    .map(|c| build_form(&r, &entries[i * k + c]))
                    .collect()
            })
            .collect();
        let m1 = GradedModule::from_matrix(&r, vec![0; g], &rows).map_err(err)?;
        // row i0 += lam * row j0 is a change of basis of the free module
        let mut rows2 = rows.clone();
        if i0 != j0 {
            let add: Vec<Polynomial> = rows[j0].iter().map(|p| p.scale(&f.from_i64(lam))).collect();
            for (c, p) in add.iter().enumerate() {
                rows2[i0][c] = rows2[i0][c].try_add(p).map_err(err)?;
            }
        }
        // an extra generator e = sum comb_i e_i with the relation saying so
        for (i, row) in rows2.iter_mut().enumerate() {
            row.push(Polynomial::from_i64(&r, -comb[i]));
        }
        let mut last = vec![zero.clone(); k];
        last.push(Polynomial::one(&r));
        rows2.push(last);
        let m2 = GradedModule::from_matrix(&r, vec![0; g + 1], &rows2).map_err(err)?;
        for rr in 0..=(g as i64 + 1) {
            let a = m1.fitting_ideal(rr).map_err(err)?;
            let b = m2.fitting_ideal(rr).map_err(err)?;
            prop_assert!(a.equals(&b).map_err(err)?, "Fitt_{} differs", rr);
        }
        Ok(())
    }))
}

/// `ann Ext^i(S/J, S)` is the unit ideal below the codimension and above
/// the number of variables.
pub fn ext_window() -> Result<(), String> {
    let names = ["w", "x", "y", "z"];
    finish(runner(5).run(&arb_ideal(4), |forms| {
        let r = ring(&names, 0);
        let gens = nonzero_forms(&r, &forms);
        prop_assume!(!gens.is_empty());
        let j = Ideal::new(&r, gens).map_err(err)?;
        let c = j.codim().map_err(err)?;
        for i in (0..c).chain(r.nvars() + 1..=r.nvars() + 2) {
            prop_assert!(
                j.ext_annihilator(i).map_err(err)?.is_whole().map_err(err)?,
                "Ext^{}",
                i
            );
        }
        Ok(())
    }))
}

fn arb_structure() -> impl Strategy<Value = (u32, Vec<(Form, Form)>)> {
    (
        2u32..=3,
        prop::collection::vec((arb_form(4, 1..=1), arb_form(4, 1..=1)), 0..=2),
    )
}

/// A structure on the line `x = y = 0` in P^3: `(x, y)^k` plus forms
/// `x a + y b` with `a, b` linear.
fn build_structure(k: u32, extra: &[(Form, Form)]) -> Result<MultiStructure, TestCaseError> {
    let r = ring(&["z0", "z1", "x", "y"], 0);
    let emb = Arc::new(Embedding::by_names(&r, &["x", "y"]).map_err(err)?);
    let mut gens = emb.support().power(k).map_err(err)?.gens().to_vec();
    let (x, y) = (Polynomial::var(&r, 2), Polynomial::var(&r, 3));
    for (a, b) in extra {
        let p = x
            .try_mul(&build_form(&r, a))
            .and_then(|p| p.try_add(&y.try_mul(&build_form(&r, b))?))
            .map_err(err)?;
        if !p.is_zero() {
            gens.push(p);
        }
    }
    MultiStructure::new(&emb, Ideal::new(&r, gens).map_err(err)?).map_err(err)
}

/// `I_i I_j ⊆ I_{i+j+1}` along every computed filtration, and every term
/// is S1.
pub fn filtration_inclusion() -> Result<(), String> {
    finish(runner(6).run(&arb_structure(), |(k, extra)| {
        let ms = build_structure(k, &extra)?;
        let f = ms.filtration().map_err(err)?;
        let top = f.terms.len() - 1;
        for i in 0..=top {
            for j in i..=top {
                if i + j + 1 > top {
                    continue;
                }
                let prod = f.terms[i].product(&f.terms[j]).map_err(err)?;
                prop_assert!(
                    f.terms[i + j + 1].contains_ideal(&prod).map_err(err)?,
                    "I_{} I_{}",
                    i,
                    j
                );
            }
        }
        for t in &f.terms {
            prop_assert!(is_s1(t, ms.embedding().support()).map_err(err)?);
        }
        Ok(())
    }))
}

/// `Hilb(X) + Σ Hilb(L_j)` equals the Hilbert polynomial of the last term,
/// which is `Y` when `Y` is S1.
pub fn hilbert_additivity() -> Result<(), String> {
    finish(runner(7).run(&arb_structure(), |(k, extra)| {
        let ms = build_structure(k, &extra)?;
        let f = ms.filtration().map_err(err)?;
        let add = f.additive_hilbert().map_err(err)?;
        let last = f.terms.last().unwrap().hilbert_polynomial().map_err(err)?;
        prop_assert_eq!(&add, &last);
        if f.reaches_structure {
            prop_assert_eq!(&add, &ms.ideal().hilbert_polynomial().map_err(err)?);
        }
        Ok(())
    }))
}
