//! Gröbner bases for ideals and submodules of graded free modules,
//! syzygies and minimal free resolutions.

mod basis;
mod engine;
mod matrix;
mod resolution;
mod syzygy;
mod vector;

use std::sync::Arc;

pub use basis::GroebnerBasis;
pub use engine::GbEngine;
pub use matrix::{GradedMatrix, GradedMatrixJson};
pub use resolution::{free_resolution, prune_units, PrunedPresentation, Resolution};
pub use syzygy::{
    kernel_of_map, minimal_generators, submodule_contains, submodules_equal, syzygies, syzygy_order,
};
pub use vector::{ModuleOrder, VTerm, Vector};

use crate::error::Result;
use crate::polyring::{check_same, PolyRing, Polynomial};

/// Reduced Gröbner basis of the ideal generated by `gens` (ring's order).
pub fn reduced_groebner(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    for g in gens {
        check_same(ring, g.ring())?;
    }
    Ok(GroebnerBasis::of_ideal(ring, gens)?.polys())
}

/// Normal form of `f` with respect to a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    check_same(f.ring(), gb.ring())?;
    Ok(gb.reduce_poly(f))
}

/// Syzygies of a list of polynomials, as polynomial tuples.
pub fn poly_syzygies(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Vec<Vec<Polynomial>>> {
    let order = ModuleOrder::ideal(ring.order().clone());
    let vs: Vec<Vector> = gens
        .iter()
        .map(|g| Vector::from_poly(&order, g, 0))
        .collect();
    let syz = syzygies(ring, &order, &vs)?;
    let syz_order = syzygy_order(&order, &vs);
    let syz = minimal_generators(ring, &syz_order, &syz)?;
    Ok(syz.iter().map(|v| v.to_polys(ring, gens.len())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, polys, Field, TermOrder};

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(
            &["z0", "z1", "z2", "x", "y"],
            Field::Rational,
            TermOrder::Grevlex,
        )
        .unwrap()
    }

    fn strs(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn already_reduced() {
        let r = ring();
        let g = reduced_groebner(&r, &polys(&r, &["x^2 + z0*y", "y^2"]).unwrap()).unwrap();
        assert_eq!(strs(&g), vec!["y^2", "x^2 + z0*y"]);
    }

    #[test]
    fn linear_reduction() {
        let r = ring();
        let g = reduced_groebner(&r, &polys(&r, &["y", "x + y"]).unwrap()).unwrap();
        assert_eq!(strs(&g), vec!["y", "x"]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring();
        let g = reduced_groebner(&r, &polys(&r, &["z0*y", "x^2", "x*y", "y^2"]).unwrap()).unwrap();
        let mut s = strs(&g);
        s.sort();
        assert_eq!(s, vec!["x*y", "x^2", "y^2", "z0*y"]);
    }

    #[test]
    fn normal_forms() {
        let r = ring();
        let gb = GroebnerBasis::of_ideal(&r, &polys(&r, &["x^2 + z0*y", "y^2"]).unwrap()).unwrap();
        let nf = normal_form(&parse_poly("x^3", &r).unwrap(), &gb).unwrap();
        assert_eq!(nf.to_string(), "-z0*x*y");
        assert!(normal_form(&parse_poly("y^2", &r).unwrap(), &gb)
            .unwrap()
            .is_zero());
        let lin = GroebnerBasis::of_ideal(&r, &polys(&r, &["x", "y"]).unwrap()).unwrap();
        assert_eq!(
            normal_form(&Polynomial::one(&r), &lin).unwrap(),
            Polynomial::one(&r)
        );
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = ring();
        let s = poly_syzygies(&r, &polys(&r, &["x", "y"]).unwrap()).unwrap();
        assert_eq!(s.len(), 1);
        let (a, b) = (&s[0][0], &s[0][1]);
        let y = parse_poly("y", &r).unwrap();
        let x = parse_poly("x", &r).unwrap();
        assert!((a == &y && b == &(-&x)) || (a == &(-&y) && b == &x));
    }

    #[test]
    fn three_koszul_relations() {
        let r = ring();
        let s = poly_syzygies(&r, &polys(&r, &["z0", "z1", "z2"]).unwrap()).unwrap();
        assert_eq!(s.len(), 3);
        for v in &s {
            let mut acc = Polynomial::zero(&r);
            for (k, name) in ["z0", "z1", "z2"].iter().enumerate() {
                acc = &acc + &(&v[k] * &parse_poly(name, &r).unwrap());
            }
            assert!(acc.is_zero());
            assert!(v.iter().all(|p| p.is_zero() || p.degree() == Some(1)));
        }
    }

    fn ideal_resolution(r: &Arc<PolyRing>, gens: &[&str]) -> Resolution {
        let order = ModuleOrder::ideal(r.order().clone());
        let vs: Vec<Vector> = polys(r, gens)
            .unwrap()
            .iter()
            .map(|g| Vector::from_poly(&order, g, 0))
            .collect();
        free_resolution(r, &[0], &vs, 10).unwrap()
    }

    #[test]
    fn resolution_of_codim_two_linear() {
        let r = ring();
        let res = ideal_resolution(&r, &["x", "y"]);
        assert_eq!(res.ranks(), vec![1, 2, 1]);
        assert!(!res.truncated);
    }

    #[test]
    fn resolution_of_square() {
        let r = ring();
        let res = ideal_resolution(&r, &["x^2", "x*y", "y^2"]);
        assert_eq!(res.modules, vec![vec![0], vec![2, 2, 2], vec![3, 3]]);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let r = ring();
        let order = ModuleOrder::new(r.order().clone(), vec![0]);
        let cols = vec![Vector::zero(), Vector::zero()];
        let k = kernel_of_map(&r, &order, &cols).unwrap();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn unit_pruning_removes_generator() {
        let r = ring();
        let order = ModuleOrder::new(r.order().clone(), vec![1, 0]);
        let col = Vector::from_polys(&order, &polys(&r, &["1", "x"]).unwrap(), 0);
        let p = prune_units(&r, &[1, 0], &[col]);
        assert_eq!(p.degrees, vec![0]);
        assert!(p.columns.is_empty());
        assert_eq!(p.gen_map[0].entry(&r, 0), parse_poly("-x", &r).unwrap());
    }
}
