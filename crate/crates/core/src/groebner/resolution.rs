//! Minimal graded free resolutions.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Result;
use crate::polyring::{PolyRing, Polynomial};

use super::matrix::GradedMatrix;
use super::syzygy::{minimal_generators, syzygies};
use super::vector::{ModuleOrder, Vector};

/// A presentation with unit entries removed, plus the images of the
/// original generators in terms of the surviving ones.
#[derive(Debug, Clone)]
pub struct PrunedPresentation {
    pub degrees: Vec<i32>,
    pub columns: Vec<Vector>,
    /// `gen_map[i]` expresses original generator `i` in the new basis.
    pub gen_map: Vec<Vector>,
}

/// Removes generators killed by relations with a unit entry. For
/// homogeneous presentations the result has no constant entries.
pub fn prune_units(
    ring: &Arc<PolyRing>,
    degrees: &[i32],
    columns: &[Vector],
) -> PrunedPresentation {
    let g = degrees.len();
    let order = ModuleOrder::new(ring.order().clone(), degrees.to_vec());
    // row-major entries
    let mut cols: Vec<Vec<Polynomial>> = columns.iter().map(|c| c.to_polys(ring, g)).collect();
    let mut degs = degrees.to_vec();
    let mut maps: Vec<Vec<Polynomial>> = (0..g)
        .map(|i| {
            (0..g)
                .map(|k| {
                    if i == k {
                        Polynomial::one(ring)
                    } else {
                        Polynomial::zero(ring)
                    }
                })
                .collect()
        })
        .collect();
    loop {
        let mut hit = None;
        'search: for (j, c) in cols.iter().enumerate() {
            for (i, e) in c.iter().enumerate() {
                if e.is_unit() {
                    hit = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = hit else { break };
        let pivot = cols[j].clone();
        let cinv = pivot[i].lead_coeff().unwrap().inv();
        for (jj, c) in cols.iter_mut().enumerate() {
            if jj == j || c[i].is_zero() {
                continue;
            }
            let f = c[i].scale(&cinv);
            for k in 0..c.len() {
                c[k] = &c[k] - &(&f * &pivot[k]);
            }
        }
        cols.remove(j);
        for c in cols.iter_mut() {
            c.remove(i);
        }
        // generator i = -(1/c) * sum_{k != i} pivot[k] e_k
        for m in maps.iter_mut() {
            let vi = m.remove(i);
            if vi.is_zero() {
                continue;
            }
            let f = vi.scale(&cinv.neg());
            let mut kk = 0;
            for k in 0..pivot.len() {
                if k == i {
                    continue;
                }
                m[kk] = &m[kk] + &(&f * &pivot[k]);
                kk += 1;
            }
        }
        degs.remove(i);
    }
    let new_order = ModuleOrder::new(order.mono.clone(), degs.clone());
    let columns = cols
        .iter()
        .map(|c| Vector::from_polys(&new_order, c, 0))
        .filter(|v| !v.is_zero())
        .collect();
    let gen_map = maps
        .iter()
        .map(|m| Vector::from_polys(&new_order, m, 0))
        .collect();
    PrunedPresentation {
        degrees: degs,
        columns,
        gen_map,
    }
}

/// A graded free resolution `... -> F_2 -> F_1 -> F_0`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub ring: Arc<PolyRing>,
    /// Generator degrees of each `F_i`.
    pub modules: Vec<Vec<i32>>,
    /// `maps[i]` is the differential `F_{i+1} -> F_i`.
    pub maps: Vec<GradedMatrix>,
    /// Set when the computation stopped at the length bound with a
    /// nonzero kernel remaining.
    pub truncated: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.maps.iter().filter(|m| m.ncols() > 0).count()
    }

    /// Graded Betti numbers: `(i, j) -> number of degree-j generators of F_i`.
    pub fn betti(&self) -> BTreeMap<(usize, i32), usize> {
        let mut b = BTreeMap::new();
        for (i, degs) in self.modules.iter().enumerate() {
            for &d in degs {
                *b.entry((i, d)).or_insert(0) += 1;
            }
        }
        b
    }

    /// Total Betti numbers (ranks of the free modules).
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.len()).collect()
    }

    /// The differential `F_i -> F_{i-1}` (zero map if beyond the end).
    pub fn differential(&self, i: usize) -> GradedMatrix {
        if i >= 1 && i <= self.maps.len() {
            self.maps[i - 1].clone()
        } else {
            let rows = if i >= 1 {
                self.modules.get(i - 1).cloned().unwrap_or_default()
            } else {
                Vec::new()
            };
            let cols = self.modules.get(i).cloned().unwrap_or_default();
            GradedMatrix::new(
                &self.ring,
                rows,
                cols.clone(),
                vec![Vector::zero(); cols.len()],
            )
        }
    }
}

/// Minimal free resolution of the module presented by `relations` on
/// generators of the given degrees, up to `max_len` differentials.
pub fn free_resolution(
    ring: &Arc<PolyRing>,
    gen_degrees: &[i32],
    relations: &[Vector],
    max_len: usize,
) -> Result<Resolution> {
    let pruned = prune_units(ring, gen_degrees, relations);
    let mut degrees = pruned.degrees;
    let mut order = ModuleOrder::new(ring.order().clone(), degrees.clone());
    let mut cols = minimal_generators(ring, &order, &pruned.columns)?;
    let mut modules = vec![degrees.clone()];
    let mut maps = Vec::new();
    let mut truncated = false;
    loop {
        if cols.is_empty() {
            break;
        }
        if maps.len() == max_len {
            truncated = true;
            break;
        }
        let col_degrees: Vec<i32> = cols.iter().map(|c| c.sugar(&order)).collect();
        maps.push(GradedMatrix::new(
            ring,
            degrees.clone(),
            col_degrees.clone(),
            cols.clone(),
        ));
        modules.push(col_degrees.clone());
        let next_order = ModuleOrder::new(ring.order().clone(), col_degrees.clone());
        let syz = syzygies(ring, &order, &cols)?;
        let syz = minimal_generators(ring, &next_order, &syz)?;
        degrees = col_degrees;
        order = next_order;
        cols = syz;
    }
    Ok(Resolution {
        ring: ring.clone(),
        modules,
        maps,
        truncated,
    })
}
