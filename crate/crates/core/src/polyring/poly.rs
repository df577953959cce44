use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::ring::PolyRing;

/// An element of a polynomial ring. Terms are sorted in decreasing order
/// for the ring's term order and every stored coefficient is nonzero.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, o: &Self) -> bool {
        *self.ring == *o.ring && self.terms == o.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub(crate) fn merge_terms(
    ring: &PolyRing,
    a: &[(Monomial, Coeff)],
    b: &[(Monomial, Coeff)],
    negate_b: bool,
) -> Vec<(Monomial, Coeff)> {
    let ord = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b {
                    b[j].1.neg()
                } else {
                    b[j].1.clone()
                };
                out.push((b[j].0.clone(), c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    a[i].1.sub(&b[j].1)
                } else {
                    a[i].1.add(&b[j].1)
                };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for t in &b[j..] {
        let c = if negate_b { t.1.neg() } else { t.1.clone() };
        out.push((t.0.clone(), c));
    }
    out
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.one_monomial(), c)],
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Polynomial {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Polynomial {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms, sorting and combining them.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let ord = ring.order().clone();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || self.is_unit()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|u| u.0.degree() == t.0.degree()),
        }
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms
            .iter()
            .map(|t| t.0.exponent(i))
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, i: usize) -> bool {
        self.degree_in(i) > 0
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), d.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), d.mul(c)))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn try_add(&self, o: &Polynomial) -> Result<Polynomial> {
        super::ring::check_same(&self.ring, &o.ring)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &Polynomial) -> Result<Polynomial> {
        super::ring::check_same(&self.ring, &o.ring)?;
        Ok(self - o)
    }

    pub fn try_mul(&self, o: &Polynomial) -> Result<Polynomial> {
        super::ring::check_same(&self.ring, &o.ring)?;
        Ok(self * o)
    }

    /// Rewrites the polynomial in another ring; `var_map[i]` is the index in
    /// the target ring of variable `i`.
    pub fn map_into(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same polynomial over a ring with identical variables but another order.
    pub fn reorder(&self, target: &Arc<PolyRing>) -> Polynomial {
        let ident: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_into(target, &ident)
    }

    /// Substitutes `images[i]` for variable `i` (all images in `target`).
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Drops every term divisible by a flagged variable (setting those
    /// variables to zero) and maps the rest through `map`.
    pub fn restrict_zero(&self, target: &Arc<PolyRing>, map: &[Option<usize>]) -> Polynomial {
        let n = target.nvars();
        let mut terms = Vec::new();
        'outer: for (m, c) in &self.terms {
            let mut e = vec![0u16; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                match map[i] {
                    Some(j) => e[j] = x,
                    None if x > 0 => continue 'outer,
                    None => {}
                }
            }
            terms.push((Monomial::from_exponents(&e), c.clone()));
        }
        Polynomial::from_terms(target, terms)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = (d.lead_monomial()?, d.lead_coeff()?);
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = c.mul(&lc_inv);
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.push((qm, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Homogeneous part of degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.degree() == k)
                .cloned()
                .collect(),
        }
    }

    /// Coefficient of a given monomial.
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.ring.zero_coeff())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        assert!(*self.ring == *o.ring, "ring mismatch");
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_terms(&self.ring, &self.terms, &o.terms, false),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        assert!(*self.ring == *o.ring, "ring mismatch");
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_terms(&self.ring, &self.terms, &o.terms, true),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        assert!(*self.ring == *o.ring, "ring mismatch");
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                terms.push((m.mul(n), c.mul(d)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(names))?;
            } else {
                write!(f, "{}*{}", abs, m.display(names))?;
            }
        }
        Ok(())
    }
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Scale,
    Pow(u32),
}

/// Applies an arithmetic operation, checking ring compatibility.
/// `Neg` and `Pow` ignore `b`; `Scale` multiplies `a` by the constant `b`.
pub fn poly_arith(op: ArithOp, a: &Polynomial, b: Option<&Polynomial>) -> Result<Polynomial> {
    let need_b = || b.ok_or_else(|| Error::InvalidParameters("missing second operand".into()));
    match op {
        ArithOp::Add => a.try_add(need_b()?),
        ArithOp::Sub => a.try_sub(need_b()?),
        ArithOp::Mul => a.try_mul(need_b()?),
        ArithOp::Neg => Ok(-a),
        ArithOp::Pow(k) => Ok(a.pow(k)),
        ArithOp::Scale => {
            let s = need_b()?;
            super::ring::check_same(a.ring(), s.ring())?;
            if !s.is_constant() {
                return Err(Error::InvalidParameters(
                    "scale factor must be constant".into(),
                ));
            }
            Ok(match s.lead_coeff() {
                None => Polynomial::zero(a.ring()),
                Some(c) => a.scale(c),
            })
        }
    }
}
