//! Exponent vectors and term orders.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// An exponent vector with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 10]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + o.degree,
        }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.degree <= o.degree && self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial {
            exps: o.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: o.degree - self.degree,
        }
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 10]> = self
            .exps
            .iter()
            .zip(&o.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 10]> = self
            .exps
            .iter()
            .zip(&o.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&o.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * k).collect(),
            degree: self.degree * k as u32,
        }
    }

    /// Index of the single variable if this is a pure power `x_i^e`, e > 0.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Every monomial of total degree `d` in `nvars` variables.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut vec![0; nvars], &mut out);
        out
    }

    /// Degree restricted to the variables flagged in `mask`.
    pub fn partial_degree(&self, mask: &[bool]) -> u32 {
        self.exps
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(&e, _)| e as u32)
            .sum()
    }

    /// Formats against a list of variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Monomial orders. Variables are ranked in declaration order
/// (the first declared variable is the largest).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    Grevlex,
    /// Product of two grevlex orders: the flagged variables form the
    /// leading block, so the order eliminates them.
    Elimination(Vec<bool>),
}

fn grevlex_cmp(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn masked_grevlex(a: &Monomial, b: &Monomial, mask: &[bool], want: bool) -> Ordering {
    let mut da = 0u32;
    let mut db = 0u32;
    for i in 0..mask.len() {
        if mask[i] == want {
            da += a.exps[i] as u32;
            db += b.exps[i] as u32;
        }
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..mask.len()).rev() {
        if mask[i] == want {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
    }
    Ordering::Equal
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::Grevlex => grevlex_cmp(&a.exps, &b.exps, a.degree, b.degree),
            TermOrder::Elimination(mask) => match masked_grevlex(a, b, mask, true) {
                Ordering::Equal => masked_grevlex(a, b, mask, false),
                o => o,
            },
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::Grevlex => "grevlex",
            TermOrder::Elimination(_) => "elimination",
        }
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::Grevlex)
    }
}
