//! Hilbert polynomials of reduced equidimensional schemes of degree three.

use serde::Serialize;

use crate::error::{Error, Result};

use super::poly::HilbertPoly;

/// A named Hilbert polynomial that a reduced degree-3 scheme can have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degree3Entry {
    pub name: String,
    pub poly: HilbertPoly,
}

/// Outcome of [`reduced_degree3_membership`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Degree3Verdict {
    pub member: bool,
    /// Name of the matched catalog entry, if any.
    pub matched: Option<String>,
    /// `a` in `3P_n - a P_{n-1} + ...`.
    pub tail: i64,
    /// Whether `a` lies in `{0, 1, 2, 3}`.
    pub tail_in_window: bool,
}

fn entry(name: &str, pairs: &[(i64, i64)]) -> Option<Degree3Entry> {
    if pairs.iter().any(|&(i, _)| i < 0) {
        return None;
    }
    let pairs: Vec<(u32, i64)> = pairs.iter().map(|&(i, c)| (i as u32, c)).collect();
    Some(Degree3Entry {
        name: name.to_string(),
        poly: HilbertPoly::from_pairs(&pairs),
    })
}

/// Irreducible reduced cubics of dimension `n`: hypersurfaces and
/// varieties of minimal degree (scrolls and their cones).
pub fn irreducible_entries(n: u32) -> Vec<Degree3Entry> {
    let n = n as i64;
    let mut out = Vec::new();
    // a cubic hypersurface of dimension n spans P^{n+1}
    let hyp: Vec<(i64, i64)> = [(n, 3), (n - 1, -3), (n - 2, 1)]
        .into_iter()
        .filter(|&(i, _)| i >= 0)
        .collect();
    out.extend(entry("cubic hypersurface", &hyp));
    if n >= 1 {
        let name = match n {
            1 => "twisted cubic",
            2 => "cubic scroll surface",
            3 => "Segre threefold",
            _ => "cone over a rational normal scroll",
        };
        out.extend(entry(name, &[(n, 3), (n - 1, -2)]));
    }
    out
}

/// Unions of a linear space and a quadric of dimension four, indexed by
/// the type of their intersection.
pub fn linear_quadric_unions() -> Vec<Degree3Entry> {
    let rows: [(&str, &[(i64, i64)]); 9] = [
        ("L and Q disjoint", &[(4, 3), (3, -1)]),
        ("L and Q meet in a point", &[(4, 3), (3, -1), (0, -1)]),
        ("L and Q meet in two points", &[(4, 3), (3, -1), (0, -2)]),
        ("L and Q meet in a line", &[(4, 3), (3, -1), (1, -1)]),
        (
            "L and Q meet in a conic",
            &[(4, 3), (3, -1), (1, -2), (0, 1)],
        ),
        ("L and Q meet in a plane", &[(4, 3), (3, -1), (2, -1)]),
        (
            "L and Q meet in a quadric surface",
            &[(4, 3), (3, -1), (2, -2), (1, 1)],
        ),
        ("L and Q meet in a 3-space", &[(4, 3), (3, -2)]),
        (
            "L and Q meet in a quadric threefold",
            &[(4, 3), (3, -3), (2, 1)],
        ),
    ];
    rows.iter().filter_map(|(n, p)| entry(n, p)).collect()
}

/// Every catalog polynomial for dimension `n`.
pub fn catalog(n: u32) -> Vec<Degree3Entry> {
    let mut out = irreducible_entries(n);
    if n == 4 {
        out.extend(linear_quadric_unions());
    }
    out
}

/// Decides whether `p` can be the Hilbert polynomial of a reduced
/// equidimensional degree-3 scheme of dimension `n`: either it matches a
/// catalog entry or `a` in `3P_n - a P_{n-1} + ...` lies in `0..=3`.
pub fn reduced_degree3_membership(p: &HilbertPoly, n: u32) -> Result<Degree3Verdict> {
    if p.degree() != Some(n) {
        return Err(Error::WrongDegree(format!(
            "expected a polynomial of degree {}, got {}",
            n, p
        )));
    }
    if p.leading_coefficient() != 3 {
        return Err(Error::WrongDegree(format!(
            "leading P-coefficient is {}, not 3",
            p.leading_coefficient()
        )));
    }
    let tail = if n == 0 { 0 } else { -p.coeff(n - 1) };
    let tail_in_window = (0..=3).contains(&tail);
    let matched = catalog(n)
        .into_iter()
        .find(|e| &e.poly == p)
        .map(|e| e.name);
    Ok(Degree3Verdict {
        member: matched.is_some() || tail_in_window,
        matched,
        tail,
        tail_in_window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(s: &str) -> HilbertPoly {
        HilbertPoly::parse(s).unwrap()
    }

    #[test]
    fn twisted_cubic() {
        let v = reduced_degree3_membership(&hp("3P1 - 2P0"), 1).unwrap();
        assert!(v.member);
        assert_eq!(v.matched.as_deref(), Some("twisted cubic"));
    }

    #[test]
    fn line_intersection_union() {
        let v = reduced_degree3_membership(&hp("3P4 - P3 - P1"), 4).unwrap();
        assert!(v.member);
        assert_eq!(v.matched.as_deref(), Some("L and Q meet in a line"));
    }

    #[test]
    fn bundle_triple_structure_is_not_reduced() {
        let v = reduced_degree3_membership(&hp("3P4 + 5P3 + 5P2 - 10P0"), 4).unwrap();
        assert!(!v.member);
        assert_eq!(v.tail, -5);
        assert!(
            !reduced_degree3_membership(&hp("3P4 - 4P3"), 4)
                .unwrap()
                .member
        );
    }

    #[test]
    fn rejects_wrong_shape() {
        assert!(reduced_degree3_membership(&hp("2P4"), 4).is_err());
        assert!(reduced_degree3_membership(&hp("3P3"), 4).is_err());
    }

    #[test]
    fn plane_cubic_curve() {
        let e = irreducible_entries(1);
        assert_eq!(e[0].poly, hp("3P1 - 3P0"));
    }
}
