//! `Ext^i(S/J, S)` annihilators and the loci they cut out.

use serde::Serialize;

use crate::error::Result;
use crate::groebner::{
    free_resolution, kernel_of_map, minimal_generators, ModuleOrder, Resolution, Vector,
};
use crate::polyring::Polynomial;

use super::module::quotient_annihilator;
use super::Ideal;

/// Summary of the Ext computations behind a Cohen-Macaulay verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ExtData {
    /// Codimension of the ideal.
    pub codim: usize,
    /// Indices `i > codim` whose annihilator has a nonempty projective zero set.
    pub bad_indices: Vec<usize>,
    /// Intersection of those annihilators (the unit ideal when locally CM).
    #[serde(serialize_with = "ser_ideal")]
    pub locus: Ideal,
}

fn ser_ideal<S: serde::Serializer>(i: &Ideal, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&i.to_string())
}

impl Ideal {
    /// Minimal free resolution of `S/J` (cached).
    pub fn resolution(&self) -> Result<&Resolution> {
        if let Some(r) = self.res.get() {
            return Ok(r);
        }
        self.require_homogeneous()?;
        let order = ModuleOrder::ideal(self.ring.order().clone());
        let gens: Vec<Vector> = self
            .gens
            .iter()
            .map(|g| Vector::from_poly(&order, g, 0))
            .collect();
        let res = free_resolution(&self.ring, &[0], &gens, self.ring.nvars() + 1)?;
        Ok(self.res.get_or_init(|| res))
    }

    /// Projective dimension of `S/J`.
    pub fn projective_dimension(&self) -> Result<usize> {
        Ok(self.resolution()?.length())
    }

    /// `ann Ext^i(S/J, S)`, from the homology of the dual of the minimal
    /// resolution.
    pub fn ext_annihilator(&self, i: usize) -> Result<Ideal> {
        let res = self.resolution()?;
        let ring = &self.ring;
        let Some(fi) = res.modules.get(i) else {
            return Ok(Ideal::unit(ring));
        };
        if fi.is_empty() {
            return Ok(Ideal::unit(ring));
        }
        let dual_degrees: Vec<i32> = fi.iter().map(|d| -d).collect();
        let order = ModuleOrder::new(ring.order().clone(), dual_degrees.clone());
        // kernel of d_{i+1}^T : F_i^* -> F_{i+1}^*
        let kernel: Vec<Vector> = if i < res.maps.len() && res.maps[i].ncols() > 0 {
            let t = res.maps[i].transpose();
            let k = kernel_of_map(ring, &t.row_order(), &t.columns)?;
            minimal_generators(ring, &order, &k)?
        } else {
            (0..fi.len())
                .map(|c| Vector::from_poly(&order, &Polynomial::one(ring), c))
                .collect()
        };
        if kernel.is_empty() {
            return Ok(Ideal::unit(ring));
        }
        // image of d_i^T : F_{i-1}^* -> F_i^*
        let image: Vec<Vector> = if i >= 1 {
            res.maps[i - 1].transpose().columns
        } else {
            Vec::new()
        };
        quotient_annihilator(ring, &order, &kernel, &image)
    }

    /// The unmixed part: intersection of the primary components of
    /// minimal codimension, as `ann Ext^c(S/J, S)`.
    pub fn unmixed_hull(&self) -> Result<Ideal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let c = self.codim()?;
        if c > self.ring.nvars() {
            return Ok(Ideal::unit(&self.ring));
        }
        self.ext_annihilator(c)?.minimized()
    }

    /// Locally Cohen-Macaulay test on the punctured spectrum: every
    /// `Ext^i(S/J, S)` with `i > codim` has irrelevant support.
    pub fn cm_data(&self) -> Result<ExtData> {
        let c = self.codim()?;
        let mut bad = Vec::new();
        let mut locus = Ideal::unit(&self.ring);
        for i in c + 1..=self.ring.nvars() {
            let ann = self.ext_annihilator(i)?;
            if !ann.is_irrelevant()? {
                bad.push(i);
                locus = locus.intersect(&ann)?;
            }
        }
        Ok(ExtData {
            codim: c,
            bad_indices: bad,
            locus,
        })
    }

    pub fn is_locally_cm(&self) -> Result<bool> {
        Ok(self.cm_data()?.bad_indices.is_empty())
    }

    /// Arithmetically Cohen-Macaulay: projective dimension equals codimension.
    pub fn is_arithmetically_cm(&self) -> Result<bool> {
        Ok(self.projective_dimension()? == self.codim()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, PolyRing, TermOrder};
    use std::sync::Arc;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(
            &["z0", "z1", "z2", "x", "y"],
            Field::Rational,
            TermOrder::Grevlex,
        )
        .unwrap()
    }

    fn id(r: &Arc<PolyRing>, g: &[&str]) -> Ideal {
        Ideal::from_strs(r, g).unwrap()
    }

    #[test]
    fn koszul_ext() {
        let r = ring();
        let j = id(&r, &["x", "y"]);
        assert!(j.ext_annihilator(2).unwrap().equals(&j).unwrap());
        for i in [0, 1, 3, 4, 5] {
            assert!(
                j.ext_annihilator(i).unwrap().is_whole().unwrap(),
                "i = {}",
                i
            );
        }
    }

    #[test]
    fn embedded_plane_detected() {
        let r = ring();
        let j = id(&r, &["x^2 + z0*y", "y^2", "x^3"]);
        let a = j.ext_annihilator(3).unwrap();
        let p = id(&r, &["z0", "x", "y"]);
        assert!(a.radical_contains_ideal(&p).unwrap());
        assert!(p.contains_ideal(&a).unwrap());
        let hull = j.unmixed_hull().unwrap();
        assert!(hull.equals(&id(&r, &["x^2 + z0*y", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn non_cm_locus() {
        let r = ring();
        let z = id(&r, &["z0*x + z1*y", "x^2", "x*y", "y^2"]);
        let d = z.cm_data().unwrap();
        assert!(!d.bad_indices.is_empty());
        let p = id(&r, &["z0", "z1", "x", "y"]);
        assert!(d.locus.radical_contains_ideal(&p).unwrap());
        assert!(p.contains_ideal(&d.locus).unwrap());
        assert!(id(&r, &["x^2 + z0*y", "y^2"]).is_locally_cm().unwrap());
        assert!(id(&r, &["x", "y"]).is_locally_cm().unwrap());
    }
}
