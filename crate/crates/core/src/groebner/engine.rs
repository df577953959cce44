//! Buchberger's algorithm for submodules of graded free modules, with the
//! Gebauer–Möller pair update and sugar-degree pair selection.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing};

use super::vector::{merge_scaled, ModuleOrder, VTerm, Vector};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: i32,
}

/// Incremental Gröbner basis computation. Elements can be added at any time;
/// [`GbEngine::complete`] processes pending S-pairs, optionally only up to a
/// degree bound (useful for homogeneous input).
pub struct GbEngine {
    ring: Arc<PolyRing>,
    order: ModuleOrder,
    rank1: bool,
    basis: Vec<Vector>,
    sugar: Vec<i32>,
    redundant: Vec<bool>,
    pairs: Vec<Pair>,
    by_comp: Vec<Vec<usize>>,
}

impl GbEngine {
    pub fn new(ring: &Arc<PolyRing>, order: ModuleOrder) -> GbEngine {
        let rank = order.rank();
        GbEngine {
            ring: ring.clone(),
            rank1: rank == 1,
            order,
            basis: Vec::new(),
            sugar: Vec::new(),
            redundant: Vec::new(),
            pairs: Vec::new(),
            by_comp: vec![Vec::new(); rank],
        }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    fn find_reducer(&self, t: &VTerm) -> Option<usize> {
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&k| self.basis[k].terms[0].mono.divides(&t.mono))
    }

    /// Full normal form with respect to the current elements.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut p = v.terms.clone();
        let mut start = 0;
        let mut rem: Vec<VTerm> = Vec::new();
        while start < p.len() {
            let t = &p[start];
            match self.find_reducer(t) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.terms[0].mono.quotient_of(&t.mono);
                    let c = t.coeff.clone();
                    p = merge_scaled(&self.order, &p[start..], &g.terms, Some((&q, &c)), false)
                        .terms;
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Vector { terms: rem }
    }

    /// Reduces only the leading term until it is irreducible.
    fn top_reduce(&self, v: Vector) -> Vector {
        let mut p = v.terms;
        while let Some(t) = p.first() {
            match self.find_reducer(t) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.terms[0].mono.quotient_of(&t.mono);
                    let c = t.coeff.clone();
                    p = merge_scaled(&self.order, &p, &g.terms, Some((&q, &c)), false).terms;
                }
                None => break,
            }
        }
        Vector { terms: p }
    }

    /// Adds a generator (reduced against the current elements first).
    pub fn add(&mut self, v: &Vector) -> Result<()> {
        let s = v.sugar(&self.order);
        let r = self.reduce(v);
        if !r.is_zero() {
            self.insert(r.monic(), s)?;
        }
        Ok(())
    }

    fn insert(&mut self, h: Vector, sugar: i32) -> Result<()> {
        if self.basis.len() >= self.ring.limits().max_basis {
            return Err(Error::ResourceGuard(format!(
                "basis size exceeded {}",
                self.ring.limits().max_basis
            )));
        }
        let t = self.basis.len();
        let lt = h.terms[0].clone();
        let comp = lt.comp;
        self.basis.push(h);
        self.sugar.push(sugar);
        self.redundant.push(false);

        // old pairs: chain criterion
        let lcm_with = |basis: &Vec<Vector>, i: usize| basis[i].terms[0].mono.lcm(&lt.mono);
        let basis = &self.basis;
        self.pairs.retain(|p| {
            p.comp != comp
                || !lt.mono.divides(&p.lcm)
                || lcm_with(basis, p.i) == p.lcm
                || lcm_with(basis, p.j) == p.lcm
        });

        // new pairs
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for &i in &self.by_comp[comp as usize] {
            let m = &self.basis[i].terms[0].mono;
            let coprime = self.rank1 && m.is_coprime(&lt.mono);
            cands.push((i, m.lcm(&lt.mono), coprime));
        }
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        let mut idx = 0;
        while idx < cands.len() {
            let (i, ref l, coprime) = cands[idx];
            let dominated = cands[idx + 1..].iter().any(|c| c.1.divides(l))
                || kept.iter().any(|c| c.1.divides(l));
            if coprime || !dominated {
                kept.push((i, l.clone(), coprime));
            }
            idx += 1;
        }
        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            let si =
                self.sugar[i] + (l.degree() as i32 - self.basis[i].terms[0].mono.degree() as i32);
            let st = sugar + (l.degree() as i32 - lt.mono.degree() as i32);
            self.pairs.push(Pair {
                i,
                j: t,
                lcm: l,
                comp,
                sugar: si.max(st),
            });
        }

        // elements whose leading term is now divisible become redundant
        let list = &mut self.by_comp[comp as usize];
        let basis = &self.basis;
        let redundant = &mut self.redundant;
        list.retain(|&i| {
            if lt.mono.divides(&basis[i].terms[0].mono) {
                redundant[i] = true;
                false
            } else {
                true
            }
        });
        list.push(t);
        Ok(())
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let (f, g) = (&self.basis[p.i], &self.basis[p.j]);
        let qf = f.terms[0].mono.quotient_of(&p.lcm);
        let qg = g.terms[0].mono.quotient_of(&p.lcm);
        let one = self.ring.field().one();
        let a = f.mul_term(&qf, &one);
        // leading coefficients are one
        merge_scaled(&self.order, &a.terms, &g.terms, Some((&qg, &one)), false)
    }

    /// Processes pending pairs of sugar at most `max_degree` (all when `None`).
    pub fn complete(&mut self, max_degree: Option<i32>) -> Result<()> {
        let limit = self.ring.limits().max_degree;
        loop {
            let mut best: Option<usize> = None;
            for (k, p) in self.pairs.iter().enumerate() {
                if let Some(d) = max_degree {
                    if p.sugar > d {
                        continue;
                    }
                }
                best = match best {
                    None => Some(k),
                    Some(b) => {
                        let q = &self.pairs[b];
                        if (p.sugar, p.comp) < (q.sugar, q.comp)
                            || (p.sugar == q.sugar
                                && p.comp == q.comp
                                && self.order.mono.cmp(&p.lcm, &q.lcm).is_lt())
                        {
                            Some(k)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(k) = best else { return Ok(()) };
            let pair = self.pairs.swap_remove(k);
            if pair.sugar > limit {
                return Err(Error::ResourceGuard(format!(
                    "S-pair degree {} exceeds {}",
                    pair.sugar, limit
                )));
            }
            let s = self.spoly(&pair);
            let s = self.top_reduce(s);
            if !s.is_zero() {
                let s = self.reduce(&s);
                self.insert(s.monic(), pair.sugar)?;
            }
        }
    }

    /// True when no S-pair is pending.
    pub fn is_complete(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Interreduced monic basis sorted by increasing leading term.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let mut idx: Vec<usize> = self.by_comp.iter().flatten().copied().collect();
        let ord = &self.order;
        idx.sort_by(|&a, &b| {
            let (x, y) = (&self.basis[a].terms[0], &self.basis[b].terms[0]);
            ord.cmp(x.comp, &x.mono, y.comp, &y.mono)
        });
        idx.iter()
            .map(|&i| {
                let g = &self.basis[i];
                let tail = Vector {
                    terms: g.terms[1..].to_vec(),
                };
                let mut r = self.reduce(&tail);
                r.terms.insert(0, g.terms[0].clone());
                r
            })
            .collect()
    }

    /// Current minimal elements (not tail-reduced).
    pub fn elements(&self) -> Vec<&Vector> {
        self.by_comp
            .iter()
            .flatten()
            .map(|&i| &self.basis[i])
            .collect()
    }
}
