//! Numerical polynomials in the basis `P_i(t) = C(i + t, i)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::series::projective_value;

/// A numerical polynomial `sum c_i P_i`, stored as `i -> c_i` (nonzero only).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HilbertPoly {
    coeffs: BTreeMap<u32, i64>,
}

/// JSON form: `{"basis":"P","coeffs":{"4":3,...}}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbertPolyJson {
    pub basis: String,
    pub coeffs: BTreeMap<String, i64>,
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

/// Dense polynomial `sum a_k t^k` with rational coefficients.
pub type Dense = Vec<BigRational>;

fn dense_projective(n: u32) -> Dense {
    // prod_{k=1..n} (t + k) / n!
    let mut p: Dense = vec![BigRational::one()];
    let mut fact = BigInt::one();
    for k in 1..=n as i64 {
        let mut q = vec![BigRational::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            q[i] += c * BigRational::from_integer(BigInt::from(k));
            q[i + 1] += c;
        }
        p = q;
        fact *= BigInt::from(k);
    }
    let f = BigRational::from_integer(fact);
    p.iter().map(|c| c / &f).collect()
}

fn trim_dense(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

impl HilbertPoly {
    pub fn zero() -> HilbertPoly {
        HilbertPoly::default()
    }

    /// Builds from `(index, coefficient)` pairs.
    pub fn from_pairs(pairs: &[(u32, i64)]) -> HilbertPoly {
        let mut h = HilbertPoly::zero();
        for &(i, c) in pairs {
            h.add_term(i, c);
        }
        h
    }

    /// `P_n`.
    pub fn projective(n: u32) -> HilbertPoly {
        HilbertPoly::from_pairs(&[(n, 1)])
    }

    /// `P_n(t - k)`, written in the P-basis.
    pub fn shifted_projective(n: u32, k: i32) -> HilbertPoly {
        let mut h = HilbertPoly::zero();
        if k >= 0 {
            for j in 0..=n.min(k as u32) {
                let c = binom(k as i64, j as i64) * if j % 2 == 0 { 1 } else { -1 };
                h.add_term(n - j, c);
            }
        } else {
            let m = (-k) as i64;
            for j in 0..=n {
                h.add_term(n - j, binom(m + j as i64 - 1, j as i64));
            }
        }
        h
    }

    /// `b_i = C(n + t - i, n)`, the Hilbert polynomial of `O(-i)` on `P^n`.
    pub fn line_bundle(n: u32, i: i32) -> HilbertPoly {
        Self::shifted_projective(n, i)
    }

    fn add_term(&mut self, i: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn coeff(&self, i: u32) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree as a polynomial in t (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> i64 {
        self.degree().map(|d| self.coeff(d)).unwrap_or(0)
    }

    pub fn add(&self, o: &HilbertPoly) -> HilbertPoly {
        let mut h = self.clone();
        for (&i, &c) in &o.coeffs {
            h.add_term(i, c);
        }
        h
    }

    pub fn sub(&self, o: &HilbertPoly) -> HilbertPoly {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> HilbertPoly {
        let mut h = HilbertPoly::zero();
        for (&i, &c) in &self.coeffs {
            h.add_term(i, c * k);
        }
        h
    }

    /// `self(t - k)`.
    pub fn shift(&self, k: i32) -> HilbertPoly {
        let mut h = HilbertPoly::zero();
        for (&i, &c) in &self.coeffs {
            h = h.add(&Self::shifted_projective(i, k).scale(c));
        }
        h
    }

    /// Exact value at an integer.
    pub fn evaluate(&self, t: i64) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&i, &c)| projective_value(i, t) * BigInt::from(c))
            .sum()
    }

    /// Coefficients in the monomial basis of t.
    pub fn to_dense(&self) -> Dense {
        let mut out: Dense = Vec::new();
        for (&i, &c) in &self.coeffs {
            let p = dense_projective(i);
            if out.len() < p.len() {
                out.resize(p.len(), BigRational::zero());
            }
            let c = BigRational::from_integer(BigInt::from(c));
            for (k, a) in p.iter().enumerate() {
                out[k] += a * &c;
            }
        }
        trim_dense(out)
    }

    /// Rewrites a dense polynomial in the P-basis by repeated leading
    /// coefficient subtraction; fails if the polynomial is not numerical.
    pub fn from_dense(p: &[BigRational]) -> Result<HilbertPoly> {
        let mut rest = trim_dense(p.to_vec());
        let mut h = HilbertPoly::zero();
        while let Some(a) = rest.last().cloned() {
            let n = (rest.len() - 1) as u32;
            let mut fact = BigInt::one();
            for k in 1..=n as i64 {
                fact *= BigInt::from(k);
            }
            let c = a * BigRational::from_integer(fact);
            if !c.is_integer() {
                return Err(Error::NonNumerical(format!(
                    "coefficient of P_{} would be {}",
                    n, c
                )));
            }
            let ci = c
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::NonNumerical("coefficient too large".into()))?;
            let basis = dense_projective(n);
            for (k, b) in basis.iter().enumerate() {
                rest[k] -= b * &c;
            }
            rest = trim_dense(rest);
            h.add_term(n, ci);
        }
        Ok(h)
    }

    pub fn to_json(&self) -> HilbertPolyJson {
        HilbertPolyJson {
            basis: "P".into(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, c)| (i.to_string(), *c))
                .collect(),
        }
    }

    pub fn from_json(js: &HilbertPolyJson) -> Result<HilbertPoly> {
        if js.basis != "P" {
            return Err(Error::InvalidParameters(format!(
                "unknown basis `{}`",
                js.basis
            )));
        }
        let mut h = HilbertPoly::zero();
        for (k, &c) in &js.coeffs {
            let i: u32 = k
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("bad P-index `{}`", k)))?;
            h.add_term(i, c);
        }
        Ok(h)
    }

    /// Parses text such as `3P4 - P3 + 2P0` (also accepts `P_4`).
    pub fn parse(text: &str) -> Result<HilbertPoly> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |m: &str| Error::Syntax {
            offset: 0,
            message: m.to_string(),
        };
        let mut h = HilbertPoly::zero();
        let bytes = cleaned.as_bytes();
        let mut pos = 0;
        if bytes.is_empty() {
            return Err(bad("empty polynomial"));
        }
        if cleaned == "0" {
            return Ok(h);
        }
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let c: i64 = if start == pos {
                1
            } else {
                cleaned[start..pos]
                    .parse()
                    .map_err(|_| bad("bad coefficient"))?
            };
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            }
            if pos >= bytes.len() || bytes[pos] != b'P' {
                return Err(bad("expected `P`"));
            }
            pos += 1;
            if pos < bytes.len() && bytes[pos] == b'_' {
                pos += 1;
            }
            let s = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if s == pos {
                return Err(bad("expected an index after `P`"));
            }
            let i: u32 = cleaned[s..pos].parse().map_err(|_| bad("bad index"))?;
            h.add_term(i, sign * c);
        }
        Ok(h)
    }
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.coeffs.iter().rev().enumerate() {
            let abs = c.abs();
            if k == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs != 1 {
                write!(f, "{}", abs)?;
            }
            write!(f, "P{}", i)?;
        }
        Ok(())
    }
}

/// Rational helper for tests and callers: the dense polynomial's value.
pub fn dense_eval(p: &[BigRational], t: i64) -> BigRational {
    let tt = BigRational::from_integer(BigInt::from(t));
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * &tt + c)
}
