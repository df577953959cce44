//! Syzygies, kernels of graded maps and minimal generating sets.

use std::sync::Arc;

use crate::error::Result;
use crate::polyring::PolyRing;

use super::basis::GroebnerBasis;
use super::engine::GbEngine;
use super::vector::{ModuleOrder, VTerm, Vector};

/// Generators of the syzygy module of `gens` (elements of the free module
/// described by `order`). The result lives in a free module whose basis
/// vector `e_i` has the degree of `gens[i]`; see [`syzygy_order`].
///
/// Computed from a position-over-term Gröbner basis of the augmented
/// vectors `(g_i, e_i)`: the basis elements whose leading term lies in
/// the `e` block form a Gröbner basis of the syzygies.
pub fn syzygies(ring: &Arc<PolyRing>, order: &ModuleOrder, gens: &[Vector]) -> Result<Vec<Vector>> {
    let r = order.rank();
    let m = gens.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let syz_order = syzygy_order(order, gens);
    let mut degrees = order.degrees.clone();
    degrees.extend(syz_order.degrees.iter().copied());
    let aug_order = ModuleOrder::new(order.mono.clone(), degrees);
    let one = ring.field().one();
    let mut eng = GbEngine::new(ring, aug_order.clone());
    let mut aug: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = g.clone();
            v.terms.push(VTerm {
                comp: (r + i) as u32,
                mono: ring.one_monomial(),
                coeff: one.clone(),
            });
            v
        })
        .collect();
    aug.sort_by_key(|v| v.sugar(&aug_order));
    for v in &aug {
        eng.add(v)?;
    }
    eng.complete(None)?;
    Ok(eng
        .reduced_basis()
        .into_iter()
        .filter(|v| v.terms[0].comp as usize >= r)
        .map(|v| v.slice(r, r + m))
        .collect())
}

/// Order on the target of [`syzygies`]: generator degrees (or sugar for
/// inhomogeneous generators; zero generators get degree 0).
pub fn syzygy_order(order: &ModuleOrder, gens: &[Vector]) -> ModuleOrder {
    let degrees = gens
        .iter()
        .map(|g| if g.is_zero() { 0 } else { g.sugar(order) })
        .collect();
    ModuleOrder::new(order.mono.clone(), degrees)
}

/// Kernel of the map `F -> G` sending `e_j` to `columns[j]`, where the
/// columns are elements of `G` (ordered by `target`). The kernel lives in
/// `F` with the column degrees.
pub fn kernel_of_map(
    ring: &Arc<PolyRing>,
    target: &ModuleOrder,
    columns: &[Vector],
) -> Result<Vec<Vector>> {
    syzygies(ring, target, columns)
}

/// A minimal homogeneous generating set of the submodule generated by
/// `gens`. Non-homogeneous input is returned without zero entries.
pub fn minimal_generators(
    ring: &Arc<PolyRing>,
    order: &ModuleOrder,
    gens: &[Vector],
) -> Result<Vec<Vector>> {
    let mut nonzero: Vec<(i32, &Vector)> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        match g.degree(order) {
            Some(d) => nonzero.push((d, g)),
            None => return Ok(gens.iter().filter(|g| !g.is_zero()).cloned().collect()),
        }
    }
    nonzero.sort_by_key(|p| p.0);
    let mut eng = GbEngine::new(ring, order.clone());
    let mut kept = Vec::new();
    let mut current = i32::MIN;
    for (d, g) in nonzero {
        if d != current {
            eng.complete(Some(d))?;
            current = d;
        }
        let r = eng.reduce(g);
        if !r.is_zero() {
            kept.push(g.clone());
            eng.add(&r)?;
        }
    }
    Ok(kept)
}

/// True if every element of `a` lies in the submodule generated by `b`.
pub fn submodule_contains(
    ring: &Arc<PolyRing>,
    order: &ModuleOrder,
    b: &[Vector],
    a: &[Vector],
) -> Result<bool> {
    let gb = GroebnerBasis::compute(ring, order, b)?;
    Ok(a.iter().all(|v| gb.contains(v)))
}

/// Equality of the submodules generated by `a` and `b`.
pub fn submodules_equal(
    ring: &Arc<PolyRing>,
    order: &ModuleOrder,
    a: &[Vector],
    b: &[Vector],
) -> Result<bool> {
    let ga = GroebnerBasis::compute(ring, order, a)?;
    let gb = GroebnerBasis::compute(ring, order, b)?;
    Ok(ga == gb)
}
