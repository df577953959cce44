//! Exact linear algebra: dense matrices over the coefficient field and
//! fraction-free elimination for polynomial matrices.

use crate::polyring::{Coeff, Polynomial};

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut [Vec<Coeff>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Coeff>]) -> usize {
    let mut copy = m.to_vec();
    rref(&mut copy).len()
}

/// Basis of the right null space `{v : m v = 0}`; `zero` supplies the field.
pub fn nullspace(m: &[Vec<Coeff>], cols: usize, zero: &Coeff) -> Vec<Vec<Coeff>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let one = zero.field().one();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = a[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Rank over the fraction field of a polynomial matrix (Bareiss elimination).
pub fn poly_rank(m: &[Vec<Polynomial>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ring = m[0]
        .first()
        .map(|p| p.ring().clone())
        .expect("matrix with columns");
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = Polynomial::one(&ring);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = num.div_exact(&prev).expect("exact Bareiss division");
            }
            a[i][c] = Polynomial::zero(&ring);
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square polynomial matrix.
pub fn poly_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    match n {
        1 => return m[0][0].clone(),
        2 => return &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {}
    }
    let mut a = m.to_vec();
    let mut prev = Polynomial::one(&ring);
    let mut negate = false;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Polynomial::zero(&ring);
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("exact Bareiss division");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, Field, PolyRing, TermOrder};

    #[test]
    fn nullspace_of_rank_one() {
        let f = Field::Rational;
        let m = vec![vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)]];
        let ns = nullspace(&m, 3, &f.zero());
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = (0..3).fold(f.zero(), |acc, j| acc.add(&m[0][j].mul(&v[j])));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn skew_determinant_vanishes() {
        let r = PolyRing::new(&["a", "b", "c"], Field::Rational, TermOrder::Grevlex).unwrap();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        let m = vec![
            vec![p("0"), p("-c"), p("b")],
            vec![p("c"), p("0"), p("-a")],
            vec![p("-b"), p("a"), p("0")],
        ];
        assert!(poly_det(&m).is_zero());
        assert_eq!(poly_rank(&m), 2);
        let v = vec![
            vec![p("a"), p("b"), p("0")],
            vec![p("0"), p("a"), p("b")],
            vec![p("b"), p("0"), p("a")],
        ];
        assert_eq!(poly_det(&v), p("a^3 + b^3"));
    }
}
