//! Hilbert series of graded quotients, computed from leading-term ideals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polyring::Monomial;

use super::poly::HilbertPoly;

/// Integer Laurent polynomial in `t`: `coeffs[k]` is the coefficient of
/// `t^(shift + k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    pub shift: i32,
    pub coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent {
            shift: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Laurent {
        Laurent {
            shift: 0,
            coeffs: vec![1],
        }
    }

    /// `t^k`.
    pub fn monomial(k: i32) -> Laurent {
        Laurent {
            shift: k,
            coeffs: vec![1],
        }
    }

    fn trim(mut self) -> Laurent {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == self.coeffs.len() {
            return Laurent::zero();
        }
        self.coeffs.drain(..lead_zeros);
        self.shift += lead_zeros as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn coeff(&self, k: i32) -> i64 {
        let i = k - self.shift;
        if i < 0 || i as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn max_power(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.shift + self.coeffs.len() as i32 - 1)
        }
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.combine(o, -1)
    }

    fn combine(&self, o: &Laurent, sign: i64) -> Laurent {
        if self.is_zero() {
            return o.scale(sign);
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(o.shift);
        let hi = self.max_power().unwrap().max(o.max_power().unwrap());
        let coeffs = (lo..=hi)
            .map(|k| self.coeff(k) + sign * o.coeff(k))
            .collect();
        Laurent { shift: lo, coeffs }.trim()
    }

    pub fn scale(&self, c: i64) -> Laurent {
        Laurent {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .trim()
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent {
            shift: self.shift + o.shift,
            coeffs,
        }
        .trim()
    }

    pub fn shifted(&self, k: i32) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            shift: self.shift + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division by `(1 - t)`; requires value zero at 1.
    fn div_one_minus_t(&self) -> Laurent {
        // p = (1 - t) q  =>  q_k = sum_{j <= k} p_j
        let mut acc = 0i64;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            acc += c;
            coeffs.push(acc);
        }
        Laurent {
            shift: self.shift,
            coeffs,
        }
        .trim()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let k = self.shift + i as i32;
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", abs)?,
                1 if abs == 1 => write!(f, "t")?,
                1 => write!(f, "{}*t", abs)?,
                _ if abs == 1 => write!(f, "t^{}", k)?,
                _ => write!(f, "{}*t^{}", abs, k)?,
            }
        }
        Ok(())
    }
}

/// `numerator / (1 - t)^denominator_exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Laurent,
    pub denominator_exp: u32,
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `k[x]/(gens)` over `(1-t)^nvars`,
/// by pivot recursion.
pub fn monomial_numerator(gens: &[Monomial]) -> Laurent {
    let gens = minimize(gens.to_vec());
    numerator_rec(gens)
}

fn numerator_rec(gens: Vec<Monomial>) -> Laurent {
    if gens.is_empty() {
        return Laurent::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return Laurent::zero();
    }
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pairwise_coprime = counts.iter().all(|&c| c <= 1);
    if pairwise_coprime {
        let mut acc = Laurent::one();
        for g in &gens {
            let f = Laurent {
                shift: 0,
                coeffs: {
                    let mut v = vec![0i64; g.degree() as usize + 1];
                    v[0] = 1;
                    v[g.degree() as usize] -= 1;
                    v
                },
            };
            acc = acc.mul(&f);
        }
        return acc;
    }
    let v = (0..n).max_by_key(|&i| counts[i]).unwrap();
    let e = gens
        .iter()
        .map(|g| g.exponent(v))
        .filter(|&x| x > 0)
        .min()
        .unwrap();
    let pivot = Monomial::var(n, v, e);
    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.gcd(&pivot).quotient_of(g)).collect();
    let a = numerator_rec(minimize(plus));
    let b = numerator_rec(minimize(colon)).shifted(e as i32);
    a.add(&b)
}

fn binom_i64(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

impl HilbertSeries {
    /// Series of `k[x_1..x_n]/(gens)` for a monomial ideal.
    pub fn of_monomial_ideal(gens: &[Monomial], nvars: usize) -> HilbertSeries {
        HilbertSeries {
            numerator: monomial_numerator(gens),
            denominator_exp: nvars as u32,
        }
    }

    /// Series of `⊕ S(-d_i) / M` where `lead[i]` generates the leading
    /// monomials of `M` in component `i`.
    pub fn of_module(degrees: &[i32], lead: &[Vec<Monomial>], nvars: usize) -> HilbertSeries {
        let mut num = Laurent::zero();
        for (d, ms) in degrees.iter().zip(lead) {
            num = num.add(&monomial_numerator(ms).shifted(*d));
        }
        HilbertSeries {
            numerator: num,
            denominator_exp: nvars as u32,
        }
    }

    pub fn add(&self, o: &HilbertSeries) -> HilbertSeries {
        let (a, b) = self.common(o);
        HilbertSeries {
            numerator: a.numerator.add(&b.numerator),
            denominator_exp: a.denominator_exp,
        }
    }

    pub fn sub(&self, o: &HilbertSeries) -> HilbertSeries {
        let (a, b) = self.common(o);
        HilbertSeries {
            numerator: a.numerator.sub(&b.numerator),
            denominator_exp: a.denominator_exp,
        }
    }

    fn raise(&self, to: u32) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let one_minus_t = Laurent {
            shift: 0,
            coeffs: vec![1, -1],
        };
        for _ in self.denominator_exp..to {
            num = num.mul(&one_minus_t);
        }
        HilbertSeries {
            numerator: num,
            denominator_exp: to,
        }
    }

    fn common(&self, o: &HilbertSeries) -> (HilbertSeries, HilbertSeries) {
        let m = self.denominator_exp.max(o.denominator_exp);
        (self.raise(m), o.raise(m))
    }

    /// Cancels factors `(1 - t)`; the remaining exponent is the Krull
    /// dimension and the numerator value at 1 the degree.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut d = self.denominator_exp;
        if num.is_zero() {
            return HilbertSeries {
                numerator: num,
                denominator_exp: 0,
            };
        }
        while d > 0 && num.at_one() == 0 {
            num = num.div_one_minus_t();
            d -= 1;
        }
        HilbertSeries {
            numerator: num,
            denominator_exp: d,
        }
    }

    /// Krull dimension of the module (-1 for the zero module).
    pub fn krull_dimension(&self) -> i32 {
        if self.numerator.is_zero() {
            -1
        } else {
            self.reduced().denominator_exp as i32
        }
    }

    /// Degree (multiplicity); 0 for the zero module.
    pub fn degree(&self) -> i64 {
        self.reduced().numerator.at_one()
    }

    /// Exact Hilbert function value in degree `s`.
    pub fn hilbert_function(&self, s: i32) -> i64 {
        let n = self.denominator_exp as i64;
        let mut total = 0i64;
        for (i, &c) in self.numerator.coeffs.iter().enumerate() {
            let k = self.numerator.shift as i64 + i as i64;
            let m = s as i64 - k;
            if m < 0 {
                continue;
            }
            if n == 0 {
                if m == 0 {
                    total += c;
                }
            } else {
                total += c * binom_i64(m + n - 1, n - 1);
            }
        }
        total
    }

    /// Smallest degree from which the Hilbert function agrees with the
    /// Hilbert polynomial.
    pub fn regularity_index(&self) -> i32 {
        match self.numerator.max_power() {
            None => 0,
            Some(top) => top - self.denominator_exp as i32 + 1,
        }
    }

    /// Hilbert polynomial in the basis `P_i(t) = C(i + t, i)`.
    pub fn hilbert_polynomial(&self) -> HilbertPoly {
        let red = self.reduced();
        if red.numerator.is_zero() || red.denominator_exp == 0 {
            return HilbertPoly::zero();
        }
        let top = red.denominator_exp - 1;
        let mut acc = HilbertPoly::zero();
        for (i, &c) in red.numerator.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let k = red.numerator.shift + i as i32;
            acc = acc.add(&HilbertPoly::shifted_projective(top, k).scale(c));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1 - t)^{}", self.numerator, self.denominator_exp)
    }
}

/// Exact value of `C(n + t, n)` for an integer `t` (as a polynomial in t).
pub fn projective_value(n: u32, t: i64) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for k in 1..=n as i64 {
        num *= BigInt::from(t + k);
        den *= BigInt::from(k);
    }
    if num.is_zero() {
        return num;
    }
    num / den
}
