//! Finitely presented graded modules and their invariants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{
    minimal_generators, prune_units, GradedMatrix, GroebnerBasis, ModuleOrder, VTerm, Vector,
};
use crate::hilbert::{self, HilbertPoly, HilbertSeries};
use crate::linalg;
use crate::polyring::{PolyRing, Polynomial};

use super::Ideal;

/// `⊕ S(-degrees[i]) / <relations>`.
#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: Arc<PolyRing>,
    degrees: Vec<i32>,
    relations: Vec<Vector>,
}

/// Generators of `N : k = { f : f k ∈ N }` for a vector `k` and a
/// submodule `N` of the free module described by `order`.
///
/// Uses the submodule of `F ⊕ S` generated by `(n_j, 0)` and `(k, 1)`:
/// under position-over-term the basis elements with vanishing `F` part
/// carry the colon in their last coordinate.
pub fn module_colon(
    ring: &Arc<PolyRing>,
    order: &ModuleOrder,
    n: &[Vector],
    k: &Vector,
) -> Result<Vec<Polynomial>> {
    if k.is_zero() {
        return Ok(vec![Polynomial::one(ring)]);
    }
    let r = order.rank();
    let mut degrees = order.degrees.clone();
    degrees.push(k.sugar(order));
    let aug = ModuleOrder::new(order.mono.clone(), degrees);
    let mut gens: Vec<Vector> = n.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut kk = k.clone();
    kk.terms.push(VTerm {
        comp: r as u32,
        mono: ring.one_monomial(),
        coeff: ring.field().one(),
    });
    gens.push(kk);
    let gb = GroebnerBasis::compute(ring, &aug, &gens)?;
    Ok(gb
        .elements()
        .iter()
        .filter(|v| v.terms()[0].comp as usize == r)
        .map(|v| v.entry(ring, r))
        .collect())
}

/// Annihilator of `K / N` where `k` generates `K` (all inside one free module).
pub fn quotient_annihilator(
    ring: &Arc<PolyRing>,
    order: &ModuleOrder,
    k: &[Vector],
    n: &[Vector],
) -> Result<Ideal> {
    let gb = GroebnerBasis::compute(ring, order, n)?;
    let mut acc = Ideal::unit(ring);
    for v in k {
        if gb.contains(v) {
            continue;
        }
        let c = Ideal::new(ring, module_colon(ring, order, n, v)?)?;
        acc = acc.intersect(&c)?;
    }
    Ok(acc)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All `k x k` minors of a row-major polynomial matrix (nonzero ones).
pub fn minors(rows: &[Vec<Polynomial>], k: usize) -> Vec<Polynomial> {
    let nr = rows.len();
    let nc = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut out = Vec::new();
    if k == 0 || k > nr || k > nc {
        return out;
    }
    for rs in subsets(nr, k) {
        for cs in subsets(nc, k) {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                .collect();
            let d = linalg::poly_det(&sub);
            if !d.is_zero() && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

impl GradedModule {
    pub fn new(
        ring: &Arc<PolyRing>,
        degrees: Vec<i32>,
        relations: Vec<Vector>,
    ) -> Result<GradedModule> {
        let order = ModuleOrder::new(ring.order().clone(), degrees.clone());
        for (k, r) in relations.iter().enumerate() {
            if r.terms().iter().any(|t| t.comp as usize >= degrees.len()) {
                return Err(Error::ComponentMismatch(format!(
                    "relation {} refers to a generator beyond {}",
                    k,
                    degrees.len()
                )));
            }
            if !r.is_homogeneous(&order) {
                return Err(Error::NotHomogeneous(format!("relation {}", k)));
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(GradedModule {
            ring: ring.clone(),
            degrees,
            relations,
        })
    }

    /// A free module.
    pub fn free(ring: &Arc<PolyRing>, degrees: Vec<i32>) -> GradedModule {
        GradedModule {
            ring: ring.clone(),
            degrees,
            relations: Vec::new(),
        }
    }

    /// Builds from a row-major relation matrix (columns are relations).
    pub fn from_matrix(
        ring: &Arc<PolyRing>,
        degrees: Vec<i32>,
        rows: &[Vec<Polynomial>],
    ) -> Result<GradedModule> {
        let m = GradedMatrix::from_rows(ring, degrees.clone(), rows)?;
        GradedModule::new(ring, degrees, m.columns)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn num_generators(&self) -> usize {
        self.degrees.len()
    }

    pub fn order(&self) -> ModuleOrder {
        ModuleOrder::new(self.ring.order().clone(), self.degrees.clone())
    }

    /// Relation matrix, row-major (one row per generator).
    pub fn matrix_rows(&self) -> Vec<Vec<Polynomial>> {
        let g = self.degrees.len();
        let cols: Vec<Vec<Polynomial>> = self
            .relations
            .iter()
            .map(|c| c.to_polys(&self.ring, g))
            .collect();
        (0..g)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    pub fn matrix(&self) -> GradedMatrix {
        let order = self.order();
        let cols: Vec<i32> = self.relations.iter().map(|r| r.sugar(&order)).collect();
        GradedMatrix::new(
            &self.ring,
            self.degrees.clone(),
            cols,
            self.relations.clone(),
        )
    }

    /// Rank of the relation matrix over the fraction field.
    pub fn relation_rank(&self) -> usize {
        if self.relations.is_empty() {
            return 0;
        }
        linalg::poly_rank(&self.matrix_rows())
    }

    /// Rank of the module at the generic point.
    pub fn generic_rank(&self) -> usize {
        self.degrees.len() - self.relation_rank()
    }

    /// A minimal presentation: generators killed by unit relations are
    /// removed and redundant relations dropped.
    pub fn minimize(&self) -> Result<GradedModule> {
        let p = prune_units(&self.ring, &self.degrees, &self.relations);
        let order = ModuleOrder::new(self.ring.order().clone(), p.degrees.clone());
        let rels = minimal_generators(&self.ring, &order, &p.columns)?;
        Ok(GradedModule {
            ring: self.ring.clone(),
            degrees: p.degrees,
            relations: rels,
        })
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.minimize()?.degrees.is_empty())
    }

    pub fn series(&self) -> Result<HilbertSeries> {
        hilbert::module_series(&self.ring, &self.degrees, &self.relations)
    }

    pub fn hilbert_polynomial(&self) -> Result<HilbertPoly> {
        hilbert::hilbert_polynomial(&self.series()?)
    }

    /// `ann(M)`, the intersection of `(N : e_i)` over the generators.
    pub fn annihilator(&self) -> Result<Ideal> {
        let order = self.order();
        let units: Vec<Vector> = (0..self.degrees.len())
            .map(|i| Vector::from_poly(&order, &Polynomial::one(&self.ring), i))
            .collect();
        quotient_annihilator(&self.ring, &order, &units, &self.relations)
    }

    /// `Fitt_r(M)`: the ideal of `(g - r)`-minors of the relation matrix.
    pub fn fitting_ideal(&self, r: i64) -> Result<Ideal> {
        let g = self.degrees.len() as i64;
        let k = g - r;
        if r < 0 {
            return Ok(Ideal::zero(&self.ring));
        }
        if k <= 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        Ideal::new(&self.ring, minors(&self.matrix_rows(), k as usize))
    }

    /// Locally free of rank `r` on the punctured spectrum: the relation
    /// matrix has generic rank `g - r` and `Fitt_r` is irrelevant-primary.
    /// Returns the verdict with the Fitting ideal as witness.
    pub fn locally_free(&self, r: usize) -> Result<(bool, Ideal)> {
        let fitt = self.fitting_ideal(r as i64)?;
        let g = self.degrees.len();
        if g < r || self.relation_rank() != g - r {
            return Ok((false, fitt));
        }
        let ok = fitt.is_irrelevant()?;
        Ok((ok, fitt))
    }

    /// Image in the ring `target` (same variables up to `var_map`).
    pub fn map_into(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Result<GradedModule> {
        let rows: Vec<Vec<Polynomial>> = self
            .matrix_rows()
            .iter()
            .map(|r| r.iter().map(|p| p.map_into(target, var_map)).collect())
            .collect();
        let order = ModuleOrder::new(target.order().clone(), self.degrees.clone());
        let ncols = self.relations.len();
        let cols: Vec<Vector> = (0..ncols)
            .map(|j| {
                let entries: Vec<Polynomial> = rows.iter().map(|r| r[j].clone()).collect();
                Vector::from_polys(&order, &entries, 0)
            })
            .collect();
        GradedModule::new(target, self.degrees.clone(), cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{polys, Field, TermOrder};

    fn ring3() -> Arc<PolyRing> {
        PolyRing::new(&["z0", "z1", "z2"], Field::Rational, TermOrder::Grevlex).unwrap()
    }

    fn column(r: &Arc<PolyRing>, degrees: &[i32], entries: &[&str]) -> Vector {
        let order = ModuleOrder::new(r.order().clone(), degrees.to_vec());
        Vector::from_polys(&order, &polys(r, entries).unwrap(), 0)
    }

    #[test]
    fn torsion_fitting_ideal() {
        let r = ring3();
        let m = GradedModule::new(
            &r,
            vec![2, 2, 2],
            vec![column(&r, &[2, 2, 2], &["0", "0", "z0"])],
        )
        .unwrap();
        let f = m.fitting_ideal(2).unwrap();
        assert!(f
            .equals(&Ideal::new(&r, polys(&r, &["z0"]).unwrap()).unwrap())
            .unwrap());
        let (free, _) = m.locally_free(2).unwrap();
        assert!(!free);
    }

    #[test]
    fn free_module_fitting() {
        let r = ring3();
        let m = GradedModule::free(&r, vec![2, 2, 2]);
        assert!(m.fitting_ideal(3).unwrap().is_whole().unwrap());
        assert!(m.fitting_ideal(2).unwrap().is_zero());
        assert!(m.locally_free(3).unwrap().0);
    }

    #[test]
    fn rank_two_quotient_is_locally_free() {
        let r = ring3();
        let m = GradedModule::new(
            &r,
            vec![2, 2, 2],
            vec![column(&r, &[2, 2, 2], &["z0", "z1", "z2"])],
        )
        .unwrap();
        let f = m.fitting_ideal(2).unwrap();
        assert!(f
            .equals(&Ideal::new(&r, polys(&r, &["z0", "z1", "z2"]).unwrap()).unwrap())
            .unwrap());
        assert!(m.locally_free(2).unwrap().0);
        assert_eq!(m.generic_rank(), 2);
    }

    #[test]
    fn annihilator_of_cyclic_module() {
        let r = ring3();
        let m = GradedModule::new(
            &r,
            vec![0],
            vec![column(&r, &[0], &["z0^2"]), column(&r, &[0], &["z0*z1"])],
        )
        .unwrap();
        let a = m.annihilator().unwrap();
        assert!(a
            .equals(&Ideal::new(&r, polys(&r, &["z0^2", "z0*z1"]).unwrap()).unwrap())
            .unwrap());
    }

    #[test]
    fn minors_of_a_column() {
        let r = ring3();
        let rows = vec![polys(&r, &["z0"]).unwrap(), polys(&r, &["z1"]).unwrap()];
        assert_eq!(minors(&rows, 1).len(), 2);
        assert!(minors(&rows, 2).is_empty());
    }
}
