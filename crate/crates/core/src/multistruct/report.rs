//! JSON-ready summary of a multiple structure.

use serde::Serialize;

use crate::error::Result;

use super::MultiStructure;

#[derive(Debug, Clone, Serialize)]
pub struct FiltrationTerm {
    pub ideal: String,
    pub locally_cm: bool,
    pub unmixed: bool,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LayerSummary {
    pub rank: usize,
    pub hilb: String,
    pub locally_free: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdicts {
    pub cm: bool,
    pub s1: bool,
    pub type_i: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificates {
    /// Non-CM loci of filtration terms and Fitting ideals of non-free layers.
    pub witnesses: Vec<String>,
    /// Per filtration term, the Ext indices above the codimension that fail.
    pub ext_indices: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub ideal: String,
    pub support: String,
    pub char: u32,
    pub multiplicity: usize,
    pub nilpotency_index: usize,
    pub hilbert: String,
    pub filtration: Vec<FiltrationTerm>,
    pub layers: Vec<LayerSummary>,
    pub verdicts: Verdicts,
    pub certificates: Certificates,
    pub seed: Option<u64>,
}

impl StructureReport {
    pub fn build(ms: &MultiStructure, seed: Option<u64>) -> Result<StructureReport> {
        let f = ms.filtration()?;
        let filtration = f
            .terms
            .iter()
            .zip(&f.flags)
            .map(|(t, fl)| FiltrationTerm {
                ideal: t.to_string(),
                locally_cm: fl.locally_cm,
                unmixed: true,
                multiplicity: fl.multiplicity,
            })
            .collect();
        let layers = f
            .layers
            .iter()
            .map(|l| LayerSummary {
                rank: l.rank,
                hilb: l.hilbert.to_string(),
                locally_free: l.locally_free,
            })
            .collect();
        let mut witnesses = Vec::new();
        for (j, fl) in f.flags.iter().enumerate() {
            if let Some(locus) = &fl.non_cm_locus {
                witnesses.push(format!(
                    "term {} fails to be Cohen-Macaulay on V{}",
                    j, locus
                ));
            }
        }
        for l in f.layers.iter().filter(|l| !l.locally_free) {
            witnesses.push(format!(
                "layer {} is not locally free of rank {}: Fitting ideal {}",
                l.index, l.rank, l.fitting
            ));
        }
        let (type_i, _) = ms.is_type_i()?;
        Ok(StructureReport {
            ideal: ms.ideal().to_string(),
            support: ms.embedding().support().to_string(),
            char: ms.ring().characteristic(),
            multiplicity: ms.multiplicity()?,
            nilpotency_index: ms.nilpotency_index()?,
            hilbert: ms.ideal().hilbert_polynomial()?.to_string(),
            filtration,
            layers,
            verdicts: Verdicts {
                cm: ms.is_locally_cm()?,
                s1: f.reaches_structure,
                type_i,
            },
            certificates: Certificates {
                witnesses,
                ext_indices: f
                    .flags
                    .iter()
                    .map(|fl| fl.bad_ext_indices.clone())
                    .collect(),
            },
            seed,
        })
    }
}
