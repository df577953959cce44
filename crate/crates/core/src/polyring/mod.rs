//! Polynomial rings over Q and F_p: monomials, term orders, arithmetic,
//! parsing and linear changes of coordinates.

mod coeff;
mod monomial;
mod parse;
mod poly;
mod ring;

use std::sync::Arc;

pub use coeff::{Coeff, Field};
pub use monomial::{Monomial, TermOrder};
pub use parse::{parse_ideal, parse_poly, parse_ring, ParsedIdeal};
pub use poly::{poly_arith, ArithOp, Polynomial};
pub use ring::{Limits, PolyRing};

pub(crate) use ring::check_same;

use crate::error::{Error, Result};
use crate::linalg;

/// Applies the linear change of coordinates sending variable `i` to
/// `images[i]` to each polynomial. Every image must be a linear form and the
/// coefficient matrix must be invertible.
pub fn substitute_linear(polys: &[Polynomial], images: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ring = match images.first().or(polys.first()) {
        Some(p) => p.ring().clone(),
        None => return Ok(Vec::new()),
    };
    let n = ring.nvars();
    if images.len() != n {
        return Err(Error::InvalidParameters(format!(
            "expected {} images, got {}",
            n,
            images.len()
        )));
    }
    let mut matrix = vec![vec![ring.zero_coeff(); n]; n];
    for (i, img) in images.iter().enumerate() {
        check_same(&ring, img.ring())?;
        if !img.is_zero() && !(img.is_homogeneous() && img.degree() == Some(1)) {
            return Err(Error::NonLinearImage(ring.names()[i].clone()));
        }
        for (m, c) in img.terms() {
            let j = m.pure_power_var().expect("linear term");
            matrix[i][j] = c.clone();
        }
    }
    if linalg::rank(&matrix) < n {
        return Err(Error::SingularSubstitution);
    }
    polys
        .iter()
        .map(|p| {
            check_same(&ring, p.ring())?;
            Ok(p.substitute(&ring, images))
        })
        .collect()
}

/// Convenience: parses each string as a polynomial over `ring`.
pub fn polys(ring: &Arc<PolyRing>, texts: &[&str]) -> Result<Vec<Polynomial>> {
    texts.iter().map(|t| parse_poly(t, ring)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(ch: u64) -> Arc<PolyRing> {
        PolyRing::new(
            &["z0", "z1", "z2", "x", "y"],
            Field::from_characteristic(ch).unwrap(),
            TermOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn cancellation() {
        let r = ring(0);
        let a = parse_poly("x^2 + z0*y", &r).unwrap();
        let b = parse_poly("-z0*y", &r).unwrap();
        assert_eq!((&a + &b).to_string(), "x^2");
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = ring(2);
        let a = parse_poly("x + y", &r).unwrap();
        assert_eq!(a.pow(2).to_string(), "x^2 + y^2");
    }

    #[test]
    fn square_expansion() {
        let r = ring(0);
        let a = parse_poly("x^2 + z0*y", &r).unwrap();
        let expect = parse_poly("x^4 + 2*z0*x^2*y + z0^2*y^2", &r).unwrap();
        assert_eq!(a.pow(2), expect);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = parse_poly("x", &ring(0)).unwrap();
        let b = parse_poly("x", &ring(2)).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn substitution_rejects_nonlinear_and_singular() {
        let r = ring(0);
        let mut imgs: Vec<Polynomial> = (0..5).map(|i| Polynomial::var(&r, i)).collect();
        let p = polys(&r, &["x^2"]).unwrap();
        imgs[4] = parse_poly("y^2", &r).unwrap();
        assert!(matches!(
            substitute_linear(&p, &imgs),
            Err(Error::NonLinearImage(_))
        ));
        imgs[4] = parse_poly("x", &r).unwrap();
        assert_eq!(
            substitute_linear(&p, &imgs).unwrap_err(),
            Error::SingularSubstitution
        );
    }

    #[test]
    fn div_exact() {
        let r = ring(0);
        let a = parse_poly("x^2 - y^2", &r).unwrap();
        let b = parse_poly("x + y", &r).unwrap();
        assert_eq!(a.div_exact(&b).unwrap().to_string(), "x - y");
        assert!(b.div_exact(&a).is_none());
    }
}
