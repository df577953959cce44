use std::sync::Arc;

use crate::error::Result;
use crate::polyring::{Monomial, PolyRing, Polynomial};

use super::engine::GbEngine;
use super::vector::{merge_scaled, ModuleOrder, Vector};

/// A reduced, monic Gröbner basis of a submodule of a graded free module
/// (rank one for ideals), sorted by increasing leading term.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: ModuleOrder,
    elements: Vec<Vector>,
    by_comp: Vec<Vec<usize>>,
}

impl GroebnerBasis {
    pub fn compute(
        ring: &Arc<PolyRing>,
        order: &ModuleOrder,
        gens: &[Vector],
    ) -> Result<GroebnerBasis> {
        let mut eng = GbEngine::new(ring, order.clone());
        let mut sorted: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
        sorted.sort_by_key(|g| g.sugar(order));
        for g in sorted {
            eng.add(g)?;
        }
        eng.complete(None)?;
        Ok(Self::from_reduced(ring, order, eng.reduced_basis()))
    }

    pub(crate) fn from_reduced(
        ring: &Arc<PolyRing>,
        order: &ModuleOrder,
        elements: Vec<Vector>,
    ) -> GroebnerBasis {
        let mut by_comp = vec![Vec::new(); order.rank()];
        for (k, e) in elements.iter().enumerate() {
            by_comp[e.terms[0].comp as usize].push(k);
        }
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            elements,
            by_comp,
        }
    }

    /// Gröbner basis of the ideal generated by `gens` for the ring's order.
    pub fn of_ideal(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
        let order = ModuleOrder::ideal(ring.order().clone());
        let vs: Vec<Vector> = gens
            .iter()
            .map(|g| Vector::from_poly(&order, g, 0))
            .collect();
        Self::compute(ring, &order, &vs)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements as polynomials (rank-one case).
    pub fn polys(&self) -> Vec<Polynomial> {
        self.elements
            .iter()
            .map(|v| v.entry(&self.ring, 0))
            .collect()
    }

    /// Full normal form.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut p = v.terms.clone();
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            let t = &p[start];
            let found = self.by_comp[t.comp as usize]
                .iter()
                .map(|&k| &self.elements[k])
                .find(|g| g.terms[0].mono.divides(&t.mono));
            match found {
                Some(g) => {
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

    pub fn reduce_poly(&self, f: &Polynomial) -> Polynomial {
        let v = Vector::from_poly(&self.order, f, 0);
        self.reduce(&v).entry(&self.ring, 0)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        self.reduce_poly(f).is_zero()
    }

    /// Leading monomials grouped by component.
    pub fn leading_monomials(&self) -> Vec<Vec<Monomial>> {
        self.by_comp
            .iter()
            .map(|ks| {
                ks.iter()
                    .map(|&k| self.elements[k].terms[0].mono.clone())
                    .collect()
            })
            .collect()
    }

    /// True if the submodule is the whole free module.
    pub fn is_whole(&self) -> bool {
        self.by_comp
            .iter()
            .all(|ks| ks.iter().any(|&k| self.elements[k].terms[0].mono.is_one()))
    }

    /// True when the quotient of the rank-one ring is finite dimensional,
    /// i.e. some pure power of every variable is a leading monomial.
    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        let mut unit = false;
        for lm in self.leading_monomials().iter().flatten() {
            if lm.is_one() {
                unit = true;
            }
            if let Some(i) = lm.pure_power_var() {
                seen[i] = true;
            }
        }
        unit || seen.iter().all(|&s| s)
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, o: &Self) -> bool {
        *self.ring == *o.ring && self.order == o.order && self.elements == o.elements
    }
}
