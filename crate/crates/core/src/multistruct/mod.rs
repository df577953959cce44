//! Multiple structures on linear subspaces: nilpotency, S1-filtrations,
//! layer modules, Cohen-Macaulay and type-I verdicts, thickenings and
//! parametric families.

mod families;
mod filtration;
mod quotients;
mod report;

use std::sync::{Arc, OnceLock};

pub use families::{build_family, Family, FamilyMember, Manifest};
pub use filtration::{Filtration, Layer, TermFlags};
pub use quotients::{
    is_surjective, line_bundle_quotients, relation_module, thicken, ParamSearch, QuotientVerdict,
    TwistResult,
};
pub use report::{FiltrationTerm, LayerSummary, StructureReport, Verdicts};

use crate::error::{Error, Result};
use crate::groebner::ModuleOrder;
use crate::idealcalc::{GradedModule, Ideal};
use crate::polyring::{PolyRing, Polynomial};

/// A linear subspace `X = V(x_i : i in vars)` of projective space.
#[derive(Debug, Clone)]
pub struct Embedding {
    ring: Arc<PolyRing>,
    support: Ideal,
    vars: Vec<usize>,
    support_ring: Arc<PolyRing>,
    to_support: Vec<Option<usize>>,
    from_support: Vec<usize>,
}

impl Embedding {
    /// The subspace cut out by the listed variables.
    pub fn linear(ring: &Arc<PolyRing>, vars: &[usize]) -> Result<Embedding> {
        let n = ring.nvars();
        let mut mask = vec![false; n];
        for &v in vars {
            if v >= n {
                return Err(Error::InvalidParameters(format!(
                    "no variable with index {}",
                    v
                )));
            }
            mask[v] = true;
        }
        if mask.iter().all(|&m| m) {
            return Err(Error::InvalidParameters("support would be empty".into()));
        }
        let mut vars: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
        vars.dedup();
        let (support_ring, to_support) = ring.drop_variables(&mask);
        let from_support = (0..n).filter(|&i| !mask[i]).collect();
        Ok(Embedding {
            ring: ring.clone(),
            support: Ideal::of_variables(ring, &vars),
            vars,
            support_ring,
            to_support,
            from_support,
        })
    }

    /// Builds from a support ideal, which must be generated by variables.
    pub fn from_ideal(support: &Ideal) -> Result<Embedding> {
        let ring = support.ring().clone();
        let mut vars = Vec::new();
        for g in support.basis()? {
            let lone = g.len() == 1 && g.degree() == Some(1);
            match g.lead_monomial().and_then(|m| m.pure_power_var()) {
                Some(v) if lone => vars.push(v),
                _ => {
                    return Err(Error::Unsupported(format!(
                        "support must be generated by coordinate variables; found `{}`",
                        g
                    )))
                }
            }
        }
        Embedding::linear(&ring, &vars)
    }

    /// The support spanned by the variables named in the ring that are
    /// not in `vars`; convenience for the `z..., x, y` layout.
    pub fn by_names(ring: &Arc<PolyRing>, names: &[&str]) -> Result<Embedding> {
        let vars = names
            .iter()
            .map(|n| {
                ring.var_index(n)
                    .ok_or_else(|| Error::UnknownVariable(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Embedding::linear(ring, &vars)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn support(&self) -> &Ideal {
        &self.support
    }

    /// Indices of the variables generating the support ideal.
    pub fn normal_vars(&self) -> &[usize] {
        &self.vars
    }

    /// Coordinate ring of the support, `k[z]`.
    pub fn support_ring(&self) -> &Arc<PolyRing> {
        &self.support_ring
    }

    pub fn codim(&self) -> usize {
        self.vars.len()
    }

    /// Projective dimension of the support.
    pub fn dim(&self) -> usize {
        self.ring.nvars() - self.vars.len() - 1
    }

    /// Reduction modulo the support ideal, as a polynomial on the support.
    pub fn restrict(&self, f: &Polynomial) -> Polynomial {
        f.restrict_zero(&self.support_ring, &self.to_support)
    }

    /// A polynomial on the support viewed in the ambient ring.
    pub fn lift(&self, f: &Polynomial) -> Polynomial {
        f.map_into(&self.ring, &self.from_support)
    }

    /// The module `⊕ S(-deg g_i) / {a : sum a_i g_i ∈ h}` over the support
    /// ring, for generators `g` of an ideal containing `h` and annihilated
    /// by the support ideal modulo `h`.
    pub fn quotient_module(&self, g: &[Polynomial], h: &Ideal) -> Result<GradedModule> {
        let rels = relation_module(&self.ring, g, h.gens())?;
        let degrees: Vec<i32> = g.iter().map(|p| p.degree().unwrap_or(0) as i32).collect();
        let order = ModuleOrder::new(self.support_ring.order().clone(), degrees.clone());
        let restricted: Vec<crate::groebner::Vector> = rels
            .iter()
            .map(|r| {
                let entries: Vec<Polynomial> = r.iter().map(|p| self.restrict(p)).collect();
                crate::groebner::Vector::from_polys(&order, &entries, 0)
            })
            .filter(|v| !v.is_zero())
            .collect();
        let rel = crate::groebner::minimal_generators(&self.support_ring, &order, &restricted)?;
        GradedModule::new(&self.support_ring, degrees, rel)
    }
}

/// A homogeneous ideal whose radical is the support ideal.
#[derive(Debug, Clone)]
pub struct MultiStructure {
    embedding: Arc<Embedding>,
    ideal: Ideal,
    nilpotency: OnceLock<usize>,
    filtration: OnceLock<Filtration>,
}

impl MultiStructure {
    /// Checks homogeneity and `rad(I_Y) = I_X`.
    pub fn new(embedding: &Arc<Embedding>, ideal: Ideal) -> Result<MultiStructure> {
        crate::polyring::check_same(embedding.ring(), ideal.ring())?;
        if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
        if !embedding.support().contains_ideal(&ideal)? {
            return Err(Error::RadicalMismatch(format!(
                "{} is not contained in the support ideal {}",
                ideal,
                embedding.support()
            )));
        }
        if !ideal.radical_contains_ideal(embedding.support())? {
            return Err(Error::RadicalMismatch(format!(
                "the radical of {} does not contain the support ideal {}",
                ideal,
                embedding.support()
            )));
        }
        Ok(MultiStructure {
            embedding: embedding.clone(),
            ideal,
            nilpotency: OnceLock::new(),
            filtration: OnceLock::new(),
        })
    }

    pub fn from_strs(embedding: &Arc<Embedding>, gens: &[&str]) -> Result<MultiStructure> {
        MultiStructure::new(embedding, Ideal::from_strs(embedding.ring(), gens)?)
    }

    pub fn embedding(&self) -> &Arc<Embedding> {
        &self.embedding
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.embedding.ring()
    }

    /// Minimal `k` with `I_X^{k+1} ⊆ I_Y`.
    pub fn nilpotency_index(&self) -> Result<usize> {
        if let Some(k) = self.nilpotency.get() {
            return Ok(*k);
        }
        let ix = self.embedding.support();
        let limit = self.ring().limits().max_degree as usize;
        let mut power = ix.clone();
        for k in 0..=limit {
            if self.ideal.contains_ideal(&power)? {
                return Ok(*self.nilpotency.get_or_init(|| k));
            }
            power = power.product(ix)?;
        }
        Err(Error::ResourceGuard(format!(
            "no power of the support ideal up to {} lies in the ideal",
            limit + 1
        )))
    }

    /// `deg Y / deg X`.
    pub fn multiplicity(&self) -> Result<usize> {
        let (dy, degy) = self.ideal.dimension_degree()?;
        let (dx, degx) = self.embedding.support().dimension_degree()?;
        if dy != dx || degx == 0 || degy % degx != 0 {
            return Err(Error::Internal(format!(
                "degree {} (dimension {}) is not a multiple of the support degree {} (dimension {})",
                degy, dy, degx, dx
            )));
        }
        Ok((degy / degx) as usize)
    }

    /// The S1-filtration (cached).
    pub fn filtration(&self) -> Result<&Filtration> {
        if let Some(f) = self.filtration.get() {
            return Ok(f);
        }
        let f = Filtration::compute(self)?;
        Ok(self.filtration.get_or_init(|| f))
    }

    pub fn is_locally_cm(&self) -> Result<bool> {
        self.ideal.is_locally_cm()
    }

    pub fn is_s1(&self) -> Result<bool> {
        is_s1(&self.ideal, self.embedding.support())
    }

    /// True when the filtration ends at `Y` and every term is locally
    /// Cohen-Macaulay, with the per-term flags.
    pub fn is_type_i(&self) -> Result<(bool, Vec<bool>)> {
        let f = self.filtration()?;
        let flags: Vec<bool> = f.flags.iter().map(|t| t.locally_cm).collect();
        Ok((f.reaches_structure && flags.iter().all(|&b| b), flags))
    }
}

/// The support-primary component of `j`. With a witness `w` outside the
/// support this is the saturation `j : w^∞`, verified to be unmixed;
/// otherwise the unmixed hull `ann Ext^c(S/j, S)`.
pub fn unmixed_part(j: &Ideal, support: &Ideal, witness: Option<&Polynomial>) -> Result<Ideal> {
    match witness {
        Some(w) => {
            if support.contains(w)? {
                return Err(Error::InvalidWitness(format!(
                    "{} lies in the support ideal",
                    w
                )));
            }
            let (sat, _) = j.saturate_poly(w)?;
            let sat = sat.minimized()?;
            let hull = sat.unmixed_hull()?;
            if !hull.equals(&sat)? {
                return Err(Error::Internal(format!(
                    "saturation by {} is not unmixed: {} vs hull {}",
                    w, sat, hull
                )));
            }
            Ok(sat)
        }
        None => j.unmixed_hull(),
    }
}

/// `j` has no embedded components: it equals its support-primary part.
pub fn is_s1(j: &Ideal, support: &Ideal) -> Result<bool> {
    unmixed_part(j, support, None)?.equals(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, Field, TermOrder};

    pub(crate) fn plane() -> Arc<Embedding> {
        let r = PolyRing::new(
            &["z0", "z1", "z2", "x", "y"],
            Field::Rational,
            TermOrder::Grevlex,
        )
        .unwrap();
        Arc::new(Embedding::by_names(&r, &["x", "y"]).unwrap())
    }

    #[test]
    fn nilpotency() {
        let e = plane();
        let y = MultiStructure::from_strs(&e, &["x^2 + z0*y", "y^2"]).unwrap();
        assert_eq!(y.nilpotency_index().unwrap(), 3);
        let x = MultiStructure::from_strs(&e, &["x", "y"]).unwrap();
        assert_eq!(x.nilpotency_index().unwrap(), 0);
        for nu in 2..5 {
            let g = format!("x^{}", nu);
            let y = MultiStructure::from_strs(&e, &[g.as_str(), "y"]).unwrap();
            assert_eq!(y.nilpotency_index().unwrap(), nu - 1);
        }
    }

    #[test]
    fn radical_checked() {
        let e = plane();
        assert!(matches!(
            MultiStructure::from_strs(&e, &["x^2", "y", "z0"]),
            Err(Error::RadicalMismatch(_))
        ));
        assert!(matches!(
            MultiStructure::from_strs(&e, &["x^2"]),
            Err(Error::RadicalMismatch(_))
        ));
    }

    #[test]
    fn unmixed_parts() {
        let e = plane();
        let r = e.ring().clone();
        let s = e.support();
        let j = Ideal::from_strs(&r, &["x^2 + z0*y", "y^2", "x^3"]).unwrap();
        let want = Ideal::from_strs(&r, &["x^2 + z0*y", "x*y", "y^2"]).unwrap();
        assert!(unmixed_part(&j, s, None).unwrap().equals(&want).unwrap());
        let z0 = parse_poly("z0", &r).unwrap();
        assert!(unmixed_part(&j, s, Some(&z0))
            .unwrap()
            .equals(&want)
            .unwrap());
        let j = Ideal::from_strs(&r, &["z0*y", "x^2", "x*y", "y^2"]).unwrap();
        let want = Ideal::from_strs(&r, &["x^2", "y"]).unwrap();
        assert!(unmixed_part(&j, s, None).unwrap().equals(&want).unwrap());
        assert!(unmixed_part(&want, s, None).unwrap().equals(&want).unwrap());
        let x = parse_poly("x", &r).unwrap();
        assert!(matches!(
            unmixed_part(&j, s, Some(&x)),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn s1_checks() {
        let e = plane();
        let r = e.ring().clone();
        let s = e.support();
        let z = Ideal::from_strs(&r, &["z0*x + z1*y", "x^2", "x*y", "y^2"]).unwrap();
        assert!(is_s1(&z, s).unwrap());
        let j = Ideal::from_strs(&r, &["x^2 + z0*y", "y^2", "x^3"]).unwrap();
        assert!(!is_s1(&j, s).unwrap());
        assert!(is_s1(s, s).unwrap());
    }

    #[test]
    fn multiplicities() {
        let e = plane();
        let m = |g: &[&str]| {
            MultiStructure::from_strs(&e, g)
                .unwrap()
                .multiplicity()
                .unwrap()
        };
        assert_eq!(m(&["x^2", "y"]), 2);
        assert_eq!(m(&["x^2", "x*y", "y^2"]), 3);
        assert_eq!(m(&["x^2 + z0*y", "y^2"]), 4);
    }

    #[test]
    fn support_from_ideal() {
        let e = plane();
        let r = e.ring().clone();
        let emb = Embedding::from_ideal(&Ideal::from_strs(&r, &["x", "y"]).unwrap()).unwrap();
        assert_eq!(emb.normal_vars(), &[3, 4]);
        assert_eq!(emb.dim(), 2);
        assert!(Embedding::from_ideal(&Ideal::from_strs(&r, &["x + z0", "y"]).unwrap()).is_err());
    }
}
