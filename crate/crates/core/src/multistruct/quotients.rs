//! Maps from layer modules onto split bundles: thickenings and the
//! line-bundle quotient search.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{kernel_of_map, GroebnerBasis, ModuleOrder, VTerm, Vector};
use crate::idealcalc::{minors, GradedModule, Ideal};
use crate::linalg;
use crate::polyring::{Coeff, Monomial, PolyRing, Polynomial, TermOrder};

use super::MultiStructure;

use std::sync::Arc;

/// Generators of `{a : sum a_i g_i ∈ (h)}` as coefficient vectors.
pub fn relation_module(
    ring: &Arc<PolyRing>,
    g: &[Polynomial],
    h: &[Polynomial],
) -> Result<Vec<Vec<Polynomial>>> {
    let m = g.len();
    let mut degrees = vec![0];
    degrees.extend(g.iter().map(|p| p.degree().unwrap_or(0) as i32));
    let order = ModuleOrder::new(ring.order().clone(), degrees);
    let one = ring.field().one();
    let mut gens = Vec::with_capacity(m + h.len());
    for (i, p) in g.iter().enumerate() {
        let mut v = Vector::from_poly(&order, p, 0);
        v.terms.push(VTerm {
            comp: (i + 1) as u32,
            mono: ring.one_monomial(),
            coeff: one.clone(),
        });
        gens.push(Vector::from_terms(&order, v.terms));
    }
    for p in h.iter().filter(|p| !p.is_zero()) {
        gens.push(Vector::from_poly(&order, p, 0));
    }
    let gb = GroebnerBasis::compute(ring, &order, &gens)?;
    Ok(gb
        .elements()
        .iter()
        .filter(|v| v.terms()[0].comp >= 1)
        .map(|v| v.slice(1, m + 1).to_polys(ring, m))
        .collect())
}

/// A matrix over the support ring is surjective onto its split target
/// away from the irrelevant ideal: its maximal minors have no common zero.
pub fn is_surjective(rows: &[Vec<Polynomial>]) -> Result<bool> {
    let Some(first) = rows.iter().flatten().next() else {
        return Ok(rows.is_empty());
    };
    let ring = first.ring().clone();
    let r = rows.len();
    if rows[0].len() < r {
        return Ok(false);
    }
    Ideal::new(&ring, minors(rows, r))?.is_irrelevant()
}

fn target_degrees(rows: &[Vec<Polynomial>], degrees: &[i32]) -> Result<Vec<i32>> {
    rows.iter()
        .enumerate()
        .map(|(k, row)| {
            let mut e = None;
            for (i, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                if !p.is_homogeneous() {
                    return Err(Error::NotHomogeneous(format!("row {} entry {}", k, i)));
                }
                let d = degrees[i] - p.degree().unwrap() as i32;
                match e {
                    None => e = Some(d),
                    Some(x) if x != d => {
                        return Err(Error::NotHomogeneous(format!(
                            "row {} mixes target degrees {} and {}",
                            k, x, d
                        )))
                    }
                    _ => {}
                }
            }
            e.ok_or_else(|| Error::NotSurjective(format!("row {} is zero", k)))
        })
        .collect()
}

/// The thickening `W ⊃ Y` defined by a surjection `I_Y/I_Y I_X -> ⊕ O_X(-e_k)`
/// given by rows (ambient polynomials, read modulo `I_X`) indexed by the
/// generators of `I_Y` in order.
pub fn thicken(y: &MultiStructure, rows: &[Vec<Polynomial>]) -> Result<MultiStructure> {
    let emb = y.embedding();
    let gens = y.ideal().gens().to_vec();
    let m = gens.len();
    if let Some(k) = rows.iter().position(|r| r.len() != m) {
        return Err(Error::ComponentMismatch(format!(
            "row {} has {} entries for {} generators",
            k,
            rows[k].len(),
            m
        )));
    }
    let lam: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|r| r.iter().map(|p| emb.restrict(p)).collect())
        .collect();
    let degrees: Vec<i32> = gens
        .iter()
        .map(|p| p.degree().unwrap_or(0) as i32)
        .collect();
    let targets = target_degrees(&lam, &degrees)?;

    let iyix = y.ideal().product(emb.support())?;
    let pres = emb.quotient_module(&gens, &iyix)?;
    for (c, rel) in pres.relations().iter().enumerate() {
        let rho = rel.to_polys(pres.ring(), m);
        for (k, row) in lam.iter().enumerate() {
            let mut acc = Polynomial::zero(emb.support_ring());
            for (l, r) in row.iter().zip(&rho) {
                acc = &acc + &(l * r);
            }
            if !acc.is_zero() {
                return Err(Error::NotWellDefined(format!(
                    "row {} does not kill relation {} of the conormal presentation",
                    k, c
                )));
            }
        }
    }
    if !is_surjective(&lam)? {
        let locus = Ideal::new(emb.support_ring(), minors(&lam, lam.len()))?;
        return Err(Error::NotSurjective(format!(
            "maximal minors vanish on {}",
            locus
        )));
    }

    let sring = emb.support_ring();
    let target = ModuleOrder::new(sring.order().clone(), targets);
    let cols: Vec<Vector> = (0..m)
        .map(|i| {
            let entries: Vec<Polynomial> = lam.iter().map(|r| r[i].clone()).collect();
            Vector::from_polys(&target, &entries, 0)
        })
        .collect();
    let kernel = kernel_of_map(sring, &target, &cols)?;
    let mut new_gens = iyix.gens().to_vec();
    for v in &kernel {
        let a = v.to_polys(sring, m);
        let mut f = Polynomial::zero(emb.ring());
        for (ai, gi) in a.iter().zip(&gens) {
            f = &f + &(&emb.lift(ai) * gi);
        }
        new_gens.push(f);
    }
    let w = MultiStructure::new(emb, Ideal::new(emb.ring(), new_gens)?.minimized()?)?;
    let (mw, my) = (w.multiplicity()?, y.multiplicity()?);
    if mw != my + rows.len() {
        return Err(Error::Internal(format!(
            "thickening has multiplicity {} instead of {} + {}",
            mw,
            my,
            rows.len()
        )));
    }
    Ok(w)
}

/// Random-combination budget for the quotient search.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ParamSearch {
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING-KEBAB-CASE")]
pub enum QuotientVerdict {
    Found,
    /// No nonzero map at this twist.
    ExactNone,
    /// Nonzero maps exist but provably none is surjective.
    CertifiedNone {
        certificate: String,
    },
    /// No surjection among the basis and the sampled combinations.
    SampledNone {
        samples: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct TwistResult {
    pub twist: i32,
    /// Dimension of the space of maps `M -> O(twist)`.
    pub solution_dim: usize,
    pub verdict: QuotientVerdict,
    /// Components of a surjection, when found.
    #[serde(skip)]
    pub map: Option<Vec<Polynomial>>,
    pub map_text: Option<Vec<String>>,
}

/// For each twist `d`, the maps `M -> O(d)` (one component per generator,
/// the `i`-th of degree `d + deg g_i`) killing the relations, and whether
/// one of them is surjective.
pub fn line_bundle_quotients(
    m: &GradedModule,
    twists: RangeInclusive<i32>,
    search: &ParamSearch,
) -> Result<Vec<TwistResult>> {
    let mut out = Vec::new();
    for d in twists {
        out.push(quotients_at(m, d, search)?);
    }
    Ok(out)
}

fn quotients_at(m: &GradedModule, d: i32, search: &ParamSearch) -> Result<TwistResult> {
    let ring = m.ring();
    let field = ring.field();
    let zero = field.zero();
    let nv = ring.nvars();
    let g = m.num_generators();
    let limit = ring.limits().max_degree as i32;

    let comp_deg: Vec<i32> = m.degrees().iter().map(|e| d + e).collect();
    if let Some(&big) = comp_deg.iter().find(|&&t| t > limit) {
        return Err(Error::ResourceGuard(format!(
            "component degree {} exceeds {}",
            big, limit
        )));
    }
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    for (i, &t) in comp_deg.iter().enumerate() {
        if t >= 0 {
            unknowns.extend(
                Monomial::all_of_degree(nv, t as u32)
                    .into_iter()
                    .map(|mu| (i, mu)),
            );
        }
    }
    let n_unk = unknowns.len();
    if n_unk > ring.limits().max_basis {
        return Err(Error::ResourceGuard(format!(
            "{} unknown coefficients",
            n_unk
        )));
    }

    let mut row_of: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut eqs: Vec<Vec<Coeff>> = Vec::new();
    for (c, rel) in m.relations().iter().enumerate() {
        let rho = rel.to_polys(ring, g);
        for (u, (i, mu)) in unknowns.iter().enumerate() {
            for (nu, coeff) in rho[*i].terms() {
                let key = (c, mu.mul(nu));
                let r = *row_of.entry(key).or_insert_with(|| {
                    eqs.push(vec![zero.clone(); n_unk]);
                    eqs.len() - 1
                });
                eqs[r][u] = eqs[r][u].add(coeff);
            }
        }
    }
    let basis_coeffs = linalg::nullspace(&eqs, n_unk, &zero);
    let to_map = |coeffs: &[Coeff]| -> Vec<Polynomial> {
        let mut comps: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); g];
        for ((i, mu), c) in unknowns.iter().zip(coeffs) {
            if !c.is_zero() {
                comps[*i].push((mu.clone(), c.clone()));
            }
        }
        comps
            .into_iter()
            .map(|t| Polynomial::from_terms(ring, t))
            .collect()
    };
    let found = |map: Vec<Polynomial>, dim: usize| TwistResult {
        twist: d,
        solution_dim: dim,
        verdict: QuotientVerdict::Found,
        map_text: Some(map.iter().map(|p| p.to_string()).collect()),
        map: Some(map),
    };
    let none = |verdict: QuotientVerdict, dim: usize| TwistResult {
        twist: d,
        solution_dim: dim,
        verdict,
        map: None,
        map_text: None,
    };
    let dim = basis_coeffs.len();
    if dim == 0 {
        return Ok(none(QuotientVerdict::ExactNone, 0));
    }
    let basis: Vec<Vec<Polynomial>> = basis_coeffs.iter().map(|c| to_map(c)).collect();
    for b in &basis {
        if is_surjective(&[b.clone()])? {
            return Ok(found(b.clone(), dim));
        }
    }

    // components that can be nonzero; a constant one would have been found above
    let live: Vec<usize> = (0..g)
        .filter(|&i| basis.iter().any(|b| !b[i].is_zero()))
        .collect();
    if live.len() < nv {
        return Ok(none(
            QuotientVerdict::CertifiedNone {
                certificate: format!(
                    "only {} components can be nonzero, fewer than the {} needed to have no common zero",
                    live.len(),
                    nv
                ),
            },
            dim,
        ));
    }
    if live.iter().all(|&i| comp_deg[i] == 1) && dim <= 16 {
        let names: Vec<String> = (0..dim).map(|b| format!("c{}", b)).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let pring = PolyRing::new(&refs, field, TermOrder::Grevlex)?;
        let rows: Vec<Vec<Polynomial>> = live
            .iter()
            .map(|&i| {
                (0..nv)
                    .map(|j| {
                        let zj = Monomial::var(nv, j, 1);
                        let terms = basis
                            .iter()
                            .enumerate()
                            .map(|(b, lam)| (Monomial::var(dim, b, 1), lam[i].coeff_of(&zj)))
                            .filter(|(_, c)| !c.is_zero())
                            .collect();
                        Polynomial::from_terms(&pring, terms)
                    })
                    .collect()
            })
            .collect();
        if minors(&rows, nv).is_empty() {
            return Ok(none(
                QuotientVerdict::CertifiedNone {
                    certificate: format!(
                        "the {}x{} coefficient matrix of the linear components has all {}-minors identically zero",
                        live.len(),
                        nv,
                        nv
                    ),
                },
                dim,
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(search.seed ^ ((d as i64 as u64) << 32));
    for _ in 0..search.samples {
        let coeffs: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        if coeffs.iter().all(|&c| field.from_i64(c).is_zero()) {
            continue;
        }
        let mut map = vec![Polynomial::zero(ring); g];
        for (c, b) in coeffs.iter().zip(&basis) {
            let c = field.from_i64(*c);
            for (acc, p) in map.iter_mut().zip(b) {
                *acc = &*acc + &p.scale(&c);
            }
        }
        if is_surjective(&[map.clone()])? {
            return Ok(found(map, dim));
        }
    }
    Ok(none(
        QuotientVerdict::SampledNone {
            samples: search.samples,
            seed: search.seed,
        },
        dim,
    ))
}

#[cfg(test)]
mod tests {
    use super::super::tests::plane;
    use super::*;
    use crate::polyring::{polys, Field};

    #[test]
    fn free_module_projections() {
        let r = PolyRing::new(&["z0", "z1", "z2"], Field::Rational, TermOrder::Grevlex).unwrap();
        let m = GradedModule::free(&r, vec![2, 2, 2]);
        let res = line_bundle_quotients(
            &m,
            -3..=-1,
            &ParamSearch {
                samples: 10,
                seed: 7,
            },
        )
        .unwrap();
        assert_eq!(res[0].verdict, QuotientVerdict::ExactNone);
        assert_eq!(res[1].verdict, QuotientVerdict::Found);
        assert_eq!(res[1].solution_dim, 3);
    }

    #[test]
    fn two_twists_for_primitive_layer() {
        let e = plane();
        let k = Ideal::from_strs(e.ring(), &["x^2", "y"]).unwrap();
        let ik = k.product(e.support()).unwrap();
        let m = e.quotient_module(k.gens(), &ik).unwrap();
        let res = line_bundle_quotients(
            &m,
            -4..=0,
            &ParamSearch {
                samples: 30,
                seed: 3,
            },
        )
        .unwrap();
        let hits: Vec<i32> = res
            .iter()
            .filter(|r| r.verdict == QuotientVerdict::Found)
            .map(|r| r.twist)
            .collect();
        assert_eq!(hits, vec![-2, -1]);
        assert!(matches!(
            res[4].verdict,
            QuotientVerdict::CertifiedNone { .. }
        ));
    }

    #[test]
    fn thicken_square() {
        let e = plane();
        let y = MultiStructure::from_strs(&e, &["x^2", "x*y", "y^2"]).unwrap();
        let r = e.ring();
        let rows = vec![polys(r, &["0", "0", "1"]).unwrap()];
        let w = thicken(&y, &rows).unwrap();
        let want = Ideal::from_strs(r, &["x^2", "x*y", "y^3"]).unwrap();
        assert!(w.ideal().equals(&want).unwrap());
        assert_eq!(w.multiplicity().unwrap(), 4);
    }

    #[test]
    fn thicken_rejects_bad_maps() {
        let e = plane();
        let r = e.ring();
        let y = MultiStructure::from_strs(&e, &["x^2", "y"]).unwrap();
        // x^2 -> z0, y -> 0 is not surjective
        let rows = vec![polys(r, &["z0", "0"]).unwrap()];
        assert!(matches!(thicken(&y, &rows), Err(Error::NotSurjective(_))));
        let y = MultiStructure::from_strs(&e, &["x^2", "x*y", "y^2"]).unwrap();
        let rows = vec![polys(r, &["z0", "z1", "1"]).unwrap()];
        assert!(matches!(thicken(&y, &rows), Err(Error::NotHomogeneous(_))));
    }
}
