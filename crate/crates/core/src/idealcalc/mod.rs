//! Ideal and module calculus on top of Gröbner bases.

mod ext;
mod module;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use ext::ExtData;
pub use module::{minors, module_colon, quotient_annihilator, GradedModule};

use crate::error::{Error, Result};
use crate::groebner::{minimal_generators, GroebnerBasis, ModuleOrder, Resolution, Vector};
use crate::hilbert::{self, HilbertPoly, HilbertSeries};
use crate::polyring::{check_same, parse_ideal, PolyRing, Polynomial, TermOrder};

/// An ideal given by generators, with its Gröbner basis and free
/// resolution computed on first use.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    res: OnceLock<Resolution>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            check_same(ring, g.ring())?;
        }
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
            res: OnceLock::new(),
        })
    }

    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Ideal> {
        Ideal::new(ring, parse_ideal(text, ring)?.generators)
    }

    /// Parses a list of generator texts.
    pub fn from_strs(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Ideal> {
        Ideal::new(ring, crate::polyring::polys(ring, gens)?)
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by the listed variables.
    pub fn of_variables(ring: &Arc<PolyRing>, vars: &[usize]) -> Ideal {
        Ideal::new(
            ring,
            vars.iter().map(|&i| Polynomial::var(ring, i)).collect(),
        )
        .expect("same ring")
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn require_homogeneous(&self) -> Result<()> {
        match self.gens.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(Error::NotHomogeneous(g.to_string())),
            None => Ok(()),
        }
    }

    /// Reduced Gröbner basis for the ring's order (cached).
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = GroebnerBasis::of_ideal(&self.ring, &self.gens)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Reduced Gröbner basis elements.
    pub fn basis(&self) -> Result<Vec<Polynomial>> {
        Ok(self.groebner()?.polys())
    }

    /// The same ideal generated by its reduced Gröbner basis.
    pub fn normalized(&self) -> Result<Ideal> {
        let gb = self.groebner()?.clone();
        let out = Ideal::new(&self.ring, gb.polys())?;
        let _ = out.gb.set(gb);
        Ok(out)
    }

    /// A minimal homogeneous generating set (input order for inhomogeneous ideals).
    pub fn minimal_gens(&self) -> Result<Vec<Polynomial>> {
        let order = ModuleOrder::ideal(self.ring.order().clone());
        let vs: Vec<Vector> = self
            .gens
            .iter()
            .map(|g| Vector::from_poly(&order, g, 0))
            .collect();
        Ok(minimal_generators(&self.ring, &order, &vs)?
            .iter()
            .map(|v| v.entry(&self.ring, 0))
            .collect())
    }

    /// The same ideal with a minimal generating set.
    pub fn minimized(&self) -> Result<Ideal> {
        let out = Ideal::new(&self.ring, self.minimal_gens()?)?;
        if let Some(gb) = self.gb.get() {
            let _ = out.gb.set(gb.clone());
        }
        Ok(out)
    }

    pub fn is_whole(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.groebner()?.is_whole())
    }

    /// True when the projective zero set is empty (the ideal is the unit
    /// ideal or primary to the irrelevant ideal).
    pub fn is_irrelevant(&self) -> Result<bool> {
        Ok(self.groebner()?.is_zero_dimensional())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        Ok(self.groebner()?.contains_poly(f))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, f.ring())?;
        Ok(self.groebner()?.reduce_poly(f))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        let gb = self.groebner()?;
        Ok(other.gens.iter().all(|g| gb.contains_poly(g)))
    }

    /// Equality of ideals via reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.groebner()?.elements() == other.groebner()?.elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    /// Adds polynomials to the generators.
    pub fn with(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ideal::new(&self.ring, g)?.minimized()
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `f · J`.
    pub fn times_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, f.ring())?;
        Ideal::new(&self.ring, self.gens.iter().map(|g| g * f).collect())
    }

    /// `J : f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, f.ring())?;
        let order = ModuleOrder::ideal(self.ring.order().clone());
        let n: Vec<Vector> = self
            .gens
            .iter()
            .map(|g| Vector::from_poly(&order, g, 0))
            .collect();
        let k = Vector::from_poly(&order, f, 0);
        let gens = module_colon(&self.ring, &order, &n, &k)?;
        Ideal::new(&self.ring, gens)
    }

    /// `J : K`, the intersection of `J : k` over generators of `K`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut acc = Ideal::unit(&self.ring);
        for k in &other.gens {
            acc = acc.intersect(&self.colon_poly(k)?)?;
        }
        Ok(acc)
    }

    /// `J : f^∞` by iterated colon, with the number of colon steps that
    /// enlarged the ideal.
    pub fn saturate_poly(&self, f: &Polynomial) -> Result<(Ideal, u32)> {
        let mut cur = self.clone();
        let mut steps = 0;
        loop {
            let next = cur.colon_poly(f)?;
            if next.equals(&cur)? {
                return Ok((cur, steps));
            }
            steps += 1;
            cur = next.normalized()?;
        }
    }

    /// `J : K^∞` by iterated colon.
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, u32)> {
        let mut cur = self.clone();
        let mut steps = 0;
        loop {
            let next = cur.colon(other)?;
            if next.equals(&cur)? {
                return Ok((cur, steps));
            }
            steps += 1;
            cur = next.normalized()?;
        }
    }

    /// `J ∩ K` via `t J + (1 - t) K` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if other.gens.iter().any(|g| g.is_constant()) {
            return Ok(self.clone());
        }
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(other.clone());
        }
        let n = self.ring.nvars();
        let mut mask = vec![false; n + 1];
        mask[0] = true;
        let (big, map) = self.ring.adjoin(&["t"], true, TermOrder::Elimination(mask));
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&t * &g.map_into(&big, &map));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.map_into(&big, &map));
        }
        let gb = GroebnerBasis::of_ideal(&big, &gens)?;
        let mut back: Vec<Option<usize>> = vec![None];
        back.extend((0..n).map(Some));
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| !p.involves(0))
            .map(|p| p.restrict_zero(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)?.minimized()
    }

    /// `J ∩ k[remaining variables]`, kept inside the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
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
        let elim = self.ring.with_order(TermOrder::Elimination(mask));
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.reorder(&elim)).collect();
        let gb = GroebnerBasis::of_ideal(&elim, &gens)?;
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| vars.iter().all(|&v| !p.involves(v)))
            .map(|p| p.reorder(&self.ring))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Whether some power of `f` lies in `J` (Rabinowitsch).
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.contains(f)? {
            return Ok(true);
        }
        let (big, map) = self.ring.adjoin(&["t"], false, TermOrder::Grevlex);
        let t = Polynomial::var(&big, self.ring.nvars());
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_into(&big, &map)).collect();
        gens.push(&Polynomial::one(&big) - &(&t * &f.map_into(&big, &map)));
        Ok(GroebnerBasis::of_ideal(&big, &gens)?.is_whole())
    }

    /// `other ⊆ rad(self)`.
    pub fn radical_contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hilbert series of `S/J`.
    pub fn series(&self) -> Result<HilbertSeries> {
        self.require_homogeneous()?;
        Ok(hilbert::series_from_basis(self.groebner()?))
    }

    /// Hilbert polynomial of `S/J` in the P-basis.
    pub fn hilbert_polynomial(&self) -> Result<HilbertPoly> {
        hilbert::hilbert_polynomial(&self.series()?)
    }

    /// Dimension of the projective zero set (-1 when empty) and degree.
    pub fn dimension_degree(&self) -> Result<(i32, i64)> {
        let hs = self.series()?;
        if hs.is_zero() {
            return Ok((-1, 0));
        }
        Ok((hs.krull_dimension() - 1, hs.degree()))
    }

    /// Codimension in the polynomial ring.
    pub fn codim(&self) -> Result<usize> {
        let hs = self.series()?;
        if hs.is_zero() {
            return Ok(self.ring.nvars() + 1);
        }
        Ok(self.ring.nvars() - hs.krull_dimension() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, Field};

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

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn colon_removes_embedded_plane() {
        let r = ring();
        let j = id(&r, &["x^2 + z0*y", "y^2", "x^3"]);
        let c = j.colon_poly(&p(&r, "z0")).unwrap();
        assert!(c.equals(&id(&r, &["x^2 + z0*y", "x*y", "y^2"])).unwrap());
        assert!(id(&r, &["x", "y"])
            .colon_poly(&p(&r, "x"))
            .unwrap()
            .is_whole()
            .unwrap());
        let c = id(&r, &["x^2", "x*y"]).colon_poly(&p(&r, "y")).unwrap();
        assert!(c.equals(&id(&r, &["x"])).unwrap());
    }

    #[test]
    fn saturation_exponents() {
        let r = ring();
        let (s, e) = id(&r, &["x^2 + z0*y", "y^2", "x^3"])
            .saturate_poly(&p(&r, "z0"))
            .unwrap();
        assert!(s.equals(&id(&r, &["x^2 + z0*y", "x*y", "y^2"])).unwrap());
        assert_eq!(e, 1);
        let (s, e) = id(&r, &["x^2", "x*y"]).saturate_poly(&p(&r, "y")).unwrap();
        assert!(s.equals(&id(&r, &["x"])).unwrap());
        assert_eq!(e, 1);
        let (s, e) = id(&r, &["x", "y"]).saturate_poly(&p(&r, "x")).unwrap();
        assert!(s.is_whole().unwrap());
        assert_eq!(e, 1);
    }

    #[test]
    fn intersections() {
        let r = ring();
        let i = id(&r, &["x"]).intersect(&id(&r, &["y"])).unwrap();
        assert!(i.equals(&id(&r, &["x*y"])).unwrap());
        let i = id(&r, &["x^2", "y"])
            .intersect(&id(&r, &["x", "y^2"]))
            .unwrap();
        assert!(i.equals(&id(&r, &["x^2", "x*y", "y^2"])).unwrap());
        let j = id(&r, &["x^2 + z0*y", "y^2"]);
        assert!(j.intersect(&Ideal::unit(&r)).unwrap().equals(&j).unwrap());
    }

    #[test]
    fn eliminations() {
        let r = PolyRing::new(&["t", "x", "z0", "w"], Field::Rational, TermOrder::Grevlex).unwrap();
        let e = id(&r, &["t*x - 1"]).eliminate(&[0]).unwrap();
        assert!(e.is_zero());
        let e = id(&r, &["1 - t*z0", "z0^2*w"]).eliminate(&[0]).unwrap();
        assert!(e.equals(&id(&r, &["w"])).unwrap());
        let r5 = ring();
        let e = id(&r5, &["x^2 + z0*y", "y^2"]).eliminate(&[3, 4]).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn equality() {
        let r = ring();
        assert!(id(&r, &["x", "y"])
            .equals(&id(&r, &["y", "x + y"]))
            .unwrap());
        assert!(!id(&r, &["x^2", "y"])
            .equals(&id(&r, &["x", "y^2"]))
            .unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = ring();
        assert!(id(&r, &["x^2 + z0*y", "y^2"])
            .radical_contains(&p(&r, "x"))
            .unwrap());
        assert!(!id(&r, &["x^2", "y"])
            .radical_contains(&p(&r, "z0"))
            .unwrap());
        assert!(id(&r, &["y^3"]).radical_contains(&p(&r, "y")).unwrap());
    }

    #[test]
    fn dimension_and_degree() {
        let r = ring();
        assert_eq!(id(&r, &["x", "y"]).dimension_degree().unwrap(), (2, 1));
        assert_eq!(id(&r, &["x^2", "y"]).dimension_degree().unwrap(), (2, 2));
        assert_eq!(
            id(&r, &["x^2 + z0*y", "y^2"]).dimension_degree().unwrap(),
            (2, 4)
        );
        assert_eq!(Ideal::zero(&r).dimension_degree().unwrap(), (4, 1));
        assert_eq!(Ideal::unit(&r).dimension_degree().unwrap(), (-1, 0));
    }

    #[test]
    fn powers_and_products() {
        let r = ring();
        let sq = id(&r, &["x", "y"]).power(2).unwrap();
        assert!(sq.equals(&id(&r, &["x^2", "x*y", "y^2"])).unwrap());
        assert_eq!(sq.gens().len(), 3);
    }
}
