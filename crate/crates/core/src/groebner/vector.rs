//! Elements of graded free modules and the position-over-term order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::polyring::{Coeff, Monomial, PolyRing, Polynomial, TermOrder};

/// One term `coeff * mono * e_comp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VTerm {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Position-over-term order on a free module with graded basis: a term in
/// a lower-indexed component is larger than any term in a later one.
/// `degrees[i]` is the degree of the basis vector `e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: TermOrder,
    pub degrees: Vec<i32>,
}

impl ModuleOrder {
    pub fn new(mono: TermOrder, degrees: Vec<i32>) -> ModuleOrder {
        ModuleOrder { mono, degrees }
    }

    /// Order for a rank-one module (ideals).
    pub fn ideal(mono: TermOrder) -> ModuleOrder {
        ModuleOrder {
            mono,
            degrees: vec![0],
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    #[inline]
    pub fn cmp(&self, c1: u32, m1: &Monomial, c2: u32, m2: &Monomial) -> Ordering {
        if c1 != c2 {
            return c2.cmp(&c1);
        }
        self.mono.cmp(m1, m2)
    }

    #[inline]
    pub fn term_degree(&self, comp: u32, m: &Monomial) -> i32 {
        m.degree() as i32 + self.degrees[comp as usize]
    }
}

/// An element of a free module, terms sorted decreasingly; zero has no terms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Vector {
    pub(crate) terms: Vec<VTerm>,
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}*{:?}*e{}", t.coeff, t.mono.exponents(), t.comp)?;
        }
        write!(f, "]")
    }
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    /// Builds from unsorted terms, combining duplicates.
    pub fn from_terms(order: &ModuleOrder, mut terms: Vec<VTerm>) -> Vector {
        terms.sort_by(|a, b| order.cmp(b.comp, &b.mono, a.comp, &a.mono));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mono == t.mono {
                    last.coeff = last.coeff.add(&t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coeff.is_zero());
        Vector { terms: out }
    }

    /// Column of polynomials: entry `i` goes to component `offset + i`.
    pub fn from_polys(order: &ModuleOrder, entries: &[Polynomial], offset: usize) -> Vector {
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(VTerm {
                    comp: (offset + i) as u32,
                    mono: m.clone(),
                    coeff: c.clone(),
                });
            }
        }
        Vector::from_terms(order, terms)
    }

    pub fn from_poly(order: &ModuleOrder, p: &Polynomial, comp: usize) -> Vector {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| VTerm {
                comp: comp as u32,
                mono: m.clone(),
                coeff: c.clone(),
            })
            .collect();
        // polynomial terms are already sorted for the monomial order
        let _ = order;
        Vector { terms }
    }

    /// Splits into `rank` polynomial entries over `ring`.
    pub fn to_polys(&self, ring: &Arc<PolyRing>, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(ring, b))
            .collect()
    }

    /// The polynomial in component `comp`.
    pub fn entry(&self, ring: &Arc<PolyRing>, comp: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.comp as usize == comp)
            .map(|t| (t.mono.clone(), t.coeff.clone()))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term.
    pub fn sugar(&self, order: &ModuleOrder) -> i32 {
        self.terms
            .iter()
            .map(|t| order.term_degree(t.comp, &t.mono))
            .max()
            .unwrap_or(i32::MIN)
    }

    /// Degree when homogeneous.
    pub fn degree(&self, order: &ModuleOrder) -> Option<i32> {
        let d = order.term_degree(self.terms.first()?.comp, &self.terms[0].mono);
        if self
            .terms
            .iter()
            .all(|t| order.term_degree(t.comp, &t.mono) == d)
        {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self, order: &ModuleOrder) -> bool {
        self.is_zero() || self.degree(order).is_some()
    }

    pub fn scale(&self, c: &Coeff) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mono: t.mono.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.inv()),
            _ => self.clone(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// `self * p` for a polynomial `p`.
    pub fn mul_poly(&self, order: &ModuleOrder, p: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add(order, &self.mul_term(m, c));
        }
        acc
    }

    pub fn add(&self, order: &ModuleOrder, o: &Vector) -> Vector {
        merge_scaled(order, &self.terms, &o.terms, None, true)
    }

    pub fn sub(&self, order: &ModuleOrder, o: &Vector) -> Vector {
        merge_scaled(order, &self.terms, &o.terms, None, false)
    }

    pub fn neg(&self) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mono: t.mono.clone(),
                    coeff: t.coeff.neg(),
                })
                .collect(),
        }
    }

    /// Moves component `i` to `map[i]`; the order must stay consistent with
    /// the target (true when `map` is increasing).
    pub fn remap(&self, target: &ModuleOrder, map: &[usize]) -> Vector {
        let terms = self
            .terms
            .iter()
            .map(|t| VTerm {
                comp: map[t.comp as usize] as u32,
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            })
            .collect();
        Vector::from_terms(target, terms)
    }

    /// Keeps components in `[lo, hi)` shifted down by `lo`.
    pub fn slice(&self, lo: usize, hi: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| (t.comp as usize) >= lo && (t.comp as usize) < hi)
                .map(|t| VTerm {
                    comp: t.comp - lo as u32,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Shifts every component up by `k`.
    pub fn shift(&self, k: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp + k as u32,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Re-sorts for another order on the same components.
    pub fn resort(&self, order: &ModuleOrder) -> Vector {
        Vector::from_terms(order, self.terms.clone())
    }

    /// True if the vector has a term in component `comp`.
    pub fn touches(&self, comp: usize) -> bool {
        self.terms.iter().any(|t| t.comp as usize == comp)
    }
}

/// `a - c*m*b` when `mult = Some((m, c))`; otherwise `a + b` or `a - b`
/// depending on `add`.
pub(crate) fn merge_scaled(
    order: &ModuleOrder,
    a: &[VTerm],
    b: &[VTerm],
    mult: Option<(&Monomial, &Coeff)>,
    add: bool,
) -> Vector {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let bterm = |t: &VTerm| -> VTerm {
        match mult {
            Some((m, c)) => VTerm {
                comp: t.comp,
                mono: t.mono.mul(m),
                coeff: t.coeff.mul(c).neg(),
            },
            None => VTerm {
                comp: t.comp,
                mono: t.mono.clone(),
                coeff: if add { t.coeff.clone() } else { t.coeff.neg() },
            },
        }
    };
    let mut pending: Option<VTerm> = if j < b.len() {
        Some(bterm(&b[j]))
    } else {
        None
    };
    while i < a.len() {
        let Some(bt) = pending.as_ref() else { break };
        match order.cmp(a[i].comp, &a[i].mono, bt.comp, &bt.mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = if j < b.len() {
                    Some(bterm(&b[j]))
                } else {
                    None
                };
            }
            Ordering::Equal => {
                let c = a[i].coeff.add(&bt.coeff);
                if !c.is_zero() {
                    out.push(VTerm {
                        comp: a[i].comp,
                        mono: a[i].mono.clone(),
                        coeff: c,
                    });
                }
                i += 1;
                j += 1;
                pending = if j < b.len() {
                    Some(bterm(&b[j]))
                } else {
                    None
                };
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    if let Some(bt) = pending {
        out.push(bt);
        for t in &b[j + 1..] {
            out.push(bterm(t));
        }
    }
    Vector { terms: out }
}
