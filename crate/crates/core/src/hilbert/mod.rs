//! Hilbert series, functions and polynomials, the P-basis, and the
//! degree-3 Hilbert polynomial catalog.

mod degree3;
mod poly;
mod series;

use std::sync::Arc;

use num_rational::BigRational;

pub use degree3::{
    catalog as degree3_catalog, irreducible_entries, linear_quadric_unions,
    reduced_degree3_membership, Degree3Entry, Degree3Verdict,
};
pub use poly::{dense_eval, Dense, HilbertPoly, HilbertPolyJson};
pub use series::{monomial_numerator, projective_value, HilbertSeries, Laurent};

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, ModuleOrder, Vector};
use crate::polyring::{PolyRing, Polynomial};

/// Series of `S/J` from a Gröbner basis of `J`.
pub fn series_from_basis(gb: &GroebnerBasis) -> HilbertSeries {
    let nvars = gb.ring().nvars();
    HilbertSeries::of_module(&gb.order().degrees, &gb.leading_monomials(), nvars)
}

/// Series of `S/J`.
pub fn ideal_series(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<HilbertSeries> {
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    Ok(series_from_basis(&GroebnerBasis::of_ideal(ring, gens)?))
}

/// Series of the module `⊕ S(-degrees[i]) / <relations>`.
pub fn module_series(
    ring: &Arc<PolyRing>,
    degrees: &[i32],
    relations: &[Vector],
) -> Result<HilbertSeries> {
    let order = ModuleOrder::new(ring.order().clone(), degrees.to_vec());
    if let Some(k) = relations.iter().position(|r| !r.is_homogeneous(&order)) {
        return Err(Error::NotHomogeneous(format!("relation {}", k)));
    }
    Ok(series_from_basis(&GroebnerBasis::compute(
        ring, &order, relations,
    )?))
}

/// Hilbert polynomial of a series, cross-checked against the exact
/// Hilbert function at five consecutive degrees past the regularity index.
pub fn hilbert_polynomial(hs: &HilbertSeries) -> Result<HilbertPoly> {
    let hp = hs.hilbert_polynomial();
    let start = hs.regularity_index().max(0);
    for s in start..start + 5 {
        let exact = hs.hilbert_function(s);
        let value = hp.evaluate(s as i64);
        if value != exact.into() {
            return Err(Error::Internal(format!(
                "Hilbert polynomial {} gives {} at {}, function gives {}",
                hp, value, s, exact
            )));
        }
    }
    Ok(hp)
}

/// Hilbert polynomial of `S/J`.
pub fn ideal_hilbert_polynomial(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<HilbertPoly> {
    hilbert_polynomial(&ideal_series(ring, gens)?)
}

/// P-basis coefficients of a numerical polynomial given densely.
pub fn to_p_basis(p: &[BigRational]) -> Result<HilbertPoly> {
    HilbertPoly::from_dense(p)
}

/// Alternating sum `sum_i (-1)^i sum_{d in twists[i]} P_n(t - d)` of a
/// resolution on `P^n` with the given twist lists.
pub fn euler_sum(n: u32, twists: &[Vec<i32>]) -> HilbertPoly {
    let mut acc = HilbertPoly::zero();
    for (i, ts) in twists.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &d in ts {
            acc = acc.add(&HilbertPoly::shifted_projective(n, d).scale(sign));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{polys, Field, TermOrder};

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(
            &["z0", "z1", "z2", "x", "y"],
            Field::Rational,
            TermOrder::Grevlex,
        )
        .unwrap()
    }

    fn hp(r: &Arc<PolyRing>, gens: &[&str]) -> HilbertPoly {
        ideal_hilbert_polynomial(r, &polys(r, gens).unwrap()).unwrap()
    }

    #[test]
    fn series_of_linear_and_complete_intersection() {
        let r = ring();
        let s = ideal_series(&r, &polys(&r, &["x", "y"]).unwrap()).unwrap();
        assert_eq!(s.numerator.coeffs, vec![1, -2, 1]);
        assert_eq!(s.reduced().denominator_exp, 3);
        let s = ideal_series(&r, &polys(&r, &["x^2", "y"]).unwrap()).unwrap();
        assert_eq!(s.numerator.coeffs, vec![1, -1, -1, 1]);
        let s = ideal_series(&r, &polys(&r, &["x^2", "x*y", "y^2"]).unwrap()).unwrap();
        assert_eq!(s.degree(), 3);
    }

    #[test]
    fn polynomials_in_p_basis() {
        let r = ring();
        assert_eq!(hp(&r, &["x", "y"]), HilbertPoly::projective(2));
        let h = hp(&r, &["x^2", "y"]);
        assert_eq!(h, HilbertPoly::parse("2P2 - P1").unwrap());
        assert_eq!(h.evaluate(2), 9.into());
        // b_0 + 2 b_1 on P^2
        let first = hp(&r, &["x^2", "x*y", "y^2"]);
        let b = HilbertPoly::line_bundle(2, 0).add(&HilbertPoly::line_bundle(2, 1).scale(2));
        assert_eq!(first, b);
    }

    #[test]
    fn non_homogeneous_rejected() {
        let r = ring();
        assert!(ideal_series(&r, &polys(&r, &["x^2 + y"]).unwrap()).is_err());
    }

    #[test]
    fn bundle_euler_sum() {
        let h = euler_sum(4, &[vec![1; 15], vec![0; 0]])
            .add(&euler_sum(4, &[vec![0; 4]]))
            .sub(&euler_sum(4, &[vec![2; 35]]))
            .add(&euler_sum(4, &[vec![3; 20]]))
            .sub(&euler_sum(4, &[vec![5; 2]]));
        assert_eq!(h, HilbertPoly::parse("2P4 + 5P3 + 5P2 - 10P0").unwrap());
    }

    #[test]
    fn module_series_of_free_module() {
        let r = ring();
        let s = module_series(&r, &[2, 2, 2], &[]).unwrap();
        let h = hilbert_polynomial(&s).unwrap();
        assert_eq!(h, HilbertPoly::shifted_projective(4, 2).scale(3));
    }
}
