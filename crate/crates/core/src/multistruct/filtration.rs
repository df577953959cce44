//! The S1-filtration `X = Y_0 ⊂ Y_1 ⊂ ... ⊂ Y_k` and its layers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{minimal_generators, prune_units, ModuleOrder};
use crate::hilbert::HilbertPoly;
use crate::idealcalc::{GradedModule, Ideal};
use crate::polyring::Polynomial;

use super::quotients::{line_bundle_quotients, ParamSearch, QuotientVerdict};
use super::{unmixed_part, MultiStructure};

/// Properties of one filtration term.
#[derive(Debug, Clone, Serialize)]
pub struct TermFlags {
    pub locally_cm: bool,
    pub multiplicity: usize,
    /// Ext indices above the codimension with non-irrelevant annihilator.
    pub bad_ext_indices: Vec<usize>,
    #[serde(serialize_with = "ser_opt_ideal")]
    pub non_cm_locus: Option<Ideal>,
}

fn ser_opt_ideal<S: serde::Serializer>(
    i: &Option<Ideal>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match i {
        Some(i) => s.serialize_some(&i.to_string()),
        None => s.serialize_none(),
    }
}

/// `L_j = I_j / I_{j+1}` as a module over the coordinate ring of the support.
#[derive(Debug, Clone)]
pub struct Layer {
    pub index: usize,
    /// Generators of `I_j` indexing the presentation.
    pub generators: Vec<Polynomial>,
    /// Presentation on `generators`, not minimized.
    pub presentation: GradedModule,
    /// Minimal presentation.
    pub module: GradedModule,
    pub rank: usize,
    pub hilbert: HilbertPoly,
    pub locally_free: bool,
    pub fitting: Ideal,
}

#[derive(Debug, Clone)]
pub struct Filtration {
    /// `I_0 = I_X, ..., I_k`.
    pub terms: Vec<Ideal>,
    pub layers: Vec<Layer>,
    pub flags: Vec<TermFlags>,
    /// Whether the last term equals the ideal of the structure.
    pub reaches_structure: bool,
}

impl Filtration {
    pub(crate) fn compute(ms: &MultiStructure) -> Result<Filtration> {
        let emb = ms.embedding();
        let ix = emb.support();
        let k = ms.nilpotency_index()?;
        let mut terms = vec![ix.clone()];
        let mut power = ix.clone();
        for j in 1..=k {
            power = power.product(ix)?;
            let t = if j == k {
                unmixed_part(ms.ideal(), ix, None)?
            } else {
                unmixed_part(&ms.ideal().sum(&power)?, ix, None)?
            };
            terms.push(t.minimized()?);
        }
        let reaches_structure = terms[k].equals(ms.ideal())?;

        let (_, deg_x) = ix.dimension_degree()?;
        let mut flags = Vec::with_capacity(terms.len());
        for t in &terms {
            let data = t.cm_data()?;
            let (_, deg) = t.dimension_degree()?;
            let ok = data.bad_indices.is_empty();
            flags.push(TermFlags {
                locally_cm: ok,
                multiplicity: (deg / deg_x) as usize,
                bad_ext_indices: data.bad_indices,
                non_cm_locus: if ok { None } else { Some(data.locus) },
            });
        }

        let mut layers = Vec::with_capacity(k);
        for j in 0..k {
            let gens = terms[j].minimal_gens()?;
            let presentation = emb.quotient_module(&gens, &terms[j + 1])?;
            let module = presentation.minimize()?;
            let rank = module.generic_rank();
            let hilbert = module.hilbert_polynomial()?;
            let expected = terms[j + 1]
                .hilbert_polynomial()?
                .sub(&terms[j].hilbert_polynomial()?);
            if expected != hilbert {
                return Err(Error::Internal(format!(
                    "layer {} has Hilbert polynomial {} but the terms differ by {}",
                    j, hilbert, expected
                )));
            }
            let (locally_free, fitting) = module.locally_free(rank)?;
            layers.push(Layer {
                index: j,
                generators: gens,
                presentation,
                module,
                rank,
                hilbert,
                locally_free,
                fitting,
            });
        }
        Ok(Filtration {
            terms,
            layers,
            flags,
            reaches_structure,
        })
    }

    /// `Hilb(X) + sum Hilb(L_j)`, which equals `Hilb(Y_k)`.
    pub fn additive_hilbert(&self) -> Result<HilbertPoly> {
        let mut acc = self.terms[0].hilbert_polynomial()?;
        for l in &self.layers {
            acc = acc.add(&l.hilbert);
        }
        Ok(acc)
    }

    /// A surjection from `I_j / I_X I_j` onto a split bundle with kernel
    /// `I_{j+1}`, as rows over the support ring indexed by the layer's
    /// generators. Free layers use the pruned presentation; rank-one layers
    /// search line-bundle twists. `None` when neither applies.
    pub fn layer_quotient(
        &self,
        j: usize,
        search: &ParamSearch,
    ) -> Result<Option<Vec<Vec<Polynomial>>>> {
        let Some(layer) = self.layers.get(j) else {
            return Err(Error::InvalidParameters(format!("no layer {}", j)));
        };
        let p = &layer.presentation;
        let ring = p.ring();
        let pruned = prune_units(ring, p.degrees(), p.relations());
        let order = ModuleOrder::new(ring.order().clone(), pruned.degrees.clone());
        let rels = minimal_generators(ring, &order, &pruned.columns)?;
        if rels.is_empty() {
            let r = pruned.degrees.len();
            let rows = (0..r)
                .map(|k| pruned.gen_map.iter().map(|v| v.entry(ring, k)).collect())
                .collect();
            return Ok(Some(rows));
        }
        if layer.rank != 1 {
            return Ok(None);
        }
        let lo = -p.degrees().iter().max().copied().unwrap_or(0);
        let hi = -p.degrees().iter().min().copied().unwrap_or(0) + 2;
        for res in line_bundle_quotients(p, lo..=hi, search)? {
            if let QuotientVerdict::Found = res.verdict {
                return Ok(res.map.map(|m| vec![m]));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::plane;
    use super::super::thicken;
    use super::*;
    use crate::hilbert::HilbertPoly;

    fn b(i: i32) -> HilbertPoly {
        HilbertPoly::shifted_projective(2, i)
    }

    #[test]
    fn three_step_filtration() {
        let e = plane();
        let y = MultiStructure::from_strs(&e, &["x^3", "x*y", "y^2"]).unwrap();
        let f = y.filtration().unwrap();
        assert_eq!(f.terms.len(), 3);
        let sq = Ideal::from_strs(e.ring(), &["x^2", "x*y", "y^2"]).unwrap();
        assert!(f.terms[1].equals(&sq).unwrap());
        assert!(f.reaches_structure);
        assert_eq!(f.layers[0].rank, 2);
        assert_eq!(f.layers[1].rank, 1);
        assert!(f.layers.iter().all(|l| l.locally_free));
        assert_eq!(
            f.additive_hilbert().unwrap(),
            b(0).add(&b(1).scale(2)).add(&b(2))
        );
        assert!(y.is_type_i().unwrap().0);
    }

    #[test]
    fn example_with_embedded_point() {
        let e = plane();
        let y = MultiStructure::from_strs(&e, &["x^2 + z0*y", "y^2"]).unwrap();
        let f = y.filtration().unwrap();
        assert_eq!(f.terms.len(), 4);
        let want = [
            Ideal::from_strs(e.ring(), &["x", "y"]).unwrap(),
            Ideal::from_strs(e.ring(), &["x^2", "y"]).unwrap(),
            Ideal::from_strs(e.ring(), &["x^2 + z0*y", "x*y", "y^2"]).unwrap(),
            Ideal::from_strs(e.ring(), &["x^2 + z0*y", "y^2"]).unwrap(),
        ];
        for (t, w) in f.terms.iter().zip(&want) {
            assert!(t.equals(w).unwrap(), "{} vs {}", t, w);
        }
        assert!(f.reaches_structure);
        assert!(y.is_type_i().unwrap().0);
        assert_eq!(y.multiplicity().unwrap(), 4);
    }

    #[test]
    fn non_cm_term_flagged() {
        let e = plane();
        let y = MultiStructure::from_strs(
            &e,
            &[
                "z1^2*(z0*x + z1*y) - z2^2*x^2",
                "z0*z1*(z0*x + z1*y) + z2^2*x*y",
                "z0^2*(z0*x + z1*y) - z2^2*y^2",
                "x*(z0*x + z1*y)",
                "y*(z0*x + z1*y)",
                "x^3",
                "x^2*y",
                "x*y^2",
                "y^3",
            ],
        )
        .unwrap();
        assert!(y.is_locally_cm().unwrap());
        assert_eq!(y.multiplicity().unwrap(), 3);
        let (ti, flags) = y.is_type_i().unwrap();
        assert!(!ti);
        assert_eq!(flags, vec![true, false, true]);
        let f = y.filtration().unwrap();
        let z = Ideal::from_strs(e.ring(), &["z0*x + z1*y", "x^2", "x*y", "y^2"]).unwrap();
        assert!(f.terms[1].equals(&z).unwrap());
        assert!(f.layers.iter().any(|l| !l.locally_free));
    }

    #[test]
    fn round_trip_through_thickening() {
        let e = plane();
        let search = ParamSearch {
            samples: 20,
            seed: 1,
        };
        for gens in [
            vec!["x^3", "x*y", "y^2"],
            vec!["x^2 + z0*y", "y^2"],
            vec![
                "z1*y^2 - z2*x*y",
                "z0*y^2 - z2*x^2",
                "z0*x*y - z1*x^2",
                "x^3",
                "x^2*y",
                "x*y^2",
                "y^3",
            ],
        ] {
            let y = MultiStructure::from_strs(&e, &gens).unwrap();
            let f = y.filtration().unwrap();
            for j in 0..f.layers.len() {
                let rows = f.layer_quotient(j, &search).unwrap().expect("quotient map");
                let rows: Vec<Vec<Polynomial>> = rows
                    .iter()
                    .map(|r| r.iter().map(|p| e.lift(p)).collect())
                    .collect();
                let yj = MultiStructure::new(
                    &e,
                    Ideal::new(e.ring(), f.layers[j].generators.clone()).unwrap(),
                )
                .unwrap();
                let w = thicken(&yj, &rows).unwrap();
                assert!(
                    w.ideal().equals(&f.terms[j + 1]).unwrap(),
                    "{:?} layer {}",
                    gens,
                    j
                );
            }
        }
    }
}
