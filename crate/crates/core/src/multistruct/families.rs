//! Builders for the parametric families of multiple structures, each with
//! a manifest of the properties the construction guarantees.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hilbert::HilbertPoly;
use crate::idealcalc::Ideal;
use crate::polyring::{polys, Field, PolyRing, TermOrder};

use super::{Embedding, MultiStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `(x^{ν+1}, y)`, `(x^ν, xy, y²)`, `(x^ν + z0^{ν-1} y, xy, y²)` on a plane.
    Primitive { nu: u32 },
    /// Kernel of `(x,y)^n / I(x,y)^n -> O(-n+d)` given by `z_i^d`, on `P^n`.
    Koszul { n: u32, d: u32 },
    /// The Koszul ideal read in a ring with one more support variable.
    KoszulExtended { n: u32, d: u32 },
    /// `(P_1x² + P_2xy + P_3y², (x,y)³)` with `P_i = z_{i-1}^{a-2}`.
    RankTwoQuotient { a: u32 },
    /// `(f_1x_1 + f_2x_2 + f_3x_3, (x_1,x_2,x_3)²)` with `f_i = z_{i-1}^{a+1}`.
    Bundle { a: u32 },
    /// Triple structure on a plane in `P^8` from `O ⊕ O`.
    Split,
    /// `(x_i : i ∉ S) + I²` for every `S ⊆ {1,2,3}`, plane in `P^5`.
    CiSubsets,
    /// Locally CM structure whose filtration passes through a non-CM term.
    NonTypeI { a: u32, b: u32 },
}

/// Properties the construction guarantees.
#[derive(Debug, Clone)]
pub struct Manifest {
    pub multiplicity: usize,
    pub locally_cm: Option<bool>,
    pub type_i: Option<bool>,
    pub hilbert: Option<HilbertPoly>,
    /// Values chosen for the free polynomials of the construction.
    pub instantiation: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub label: String,
    pub structure: MultiStructure,
    pub manifest: Manifest,
    /// Auxiliary ideals named by role (for example a filtration term or a locus).
    pub related: Vec<(String, Ideal)>,
}

fn plane_ring(extra: &[&str], field: Field) -> Result<Arc<PolyRing>> {
    let mut names = vec!["z0", "z1", "z2"];
    names.extend_from_slice(extra);
    PolyRing::new(&names, field, TermOrder::Grevlex)
}

fn power(base: &str, e: u32) -> String {
    match e {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{}^{}", base, e),
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(what.into()))
    }
}

/// The forms have no common zero on the support of `emb`.
fn require_no_common_zero(emb: &Embedding, name: &str, forms: &[String]) -> Result<()> {
    let refs: Vec<&str> = forms.iter().map(|s| s.as_str()).collect();
    let ideal = Ideal::new(emb.ring(), polys(emb.ring(), &refs)?)?.sum(emb.support())?;
    require(
        ideal.is_irrelevant()?,
        &format!("the forms {} must have no common projective zero", name),
    )
}

fn member(
    emb: &Arc<Embedding>,
    label: String,
    gens: &[String],
    manifest: Manifest,
) -> Result<FamilyMember> {
    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    Ok(FamilyMember {
        label,
        structure: MultiStructure::from_strs(emb, &refs)?,
        manifest,
        related: Vec::new(),
    })
}

fn b(n: u32, i: i32) -> HilbertPoly {
    HilbertPoly::shifted_projective(n, i)
}

/// Builds the members of a family over the given field.
pub fn build_family(family: &Family, field: Field) -> Result<Vec<FamilyMember>> {
    match *family {
        Family::Primitive { nu } => primitive(nu, field),
        Family::Koszul { n, d } => koszul(n, d, false, field),
        Family::KoszulExtended { n, d } => koszul(n, d, true, field),
        Family::RankTwoQuotient { a } => rank_two(a, field),
        Family::Bundle { a } => bundle(a, field),
        Family::Split => split(field),
        Family::CiSubsets => ci_subsets(field),
        Family::NonTypeI { a, b } => non_type_i(a, b, field),
    }
}

fn primitive(nu: u32, field: Field) -> Result<Vec<FamilyMember>> {
    require(nu >= 2, "nu >= 2")?;
    let r = plane_ring(&["x", "y"], field)?;
    let emb = Arc::new(Embedding::by_names(&r, &["x", "y"])?);
    let g = power("z0", nu - 1);
    let manifest = |inst: Vec<(String, String)>| Manifest {
        multiplicity: nu as usize + 1,
        locally_cm: Some(true),
        type_i: Some(true),
        hilbert: None,
        instantiation: inst,
    };
    Ok(vec![
        member(
            &emb,
            format!("primitive nu={} (cyclic)", nu),
            &[power("x", nu + 1), "y".into()],
            manifest(vec![]),
        )?,
        member(
            &emb,
            format!("primitive nu={} (monomial)", nu),
            &[power("x", nu), "x*y".into(), "y^2".into()],
            manifest(vec![]),
        )?,
        member(
            &emb,
            format!("primitive nu={} (twisted)", nu),
            &[
                format!("{} + {}*y", power("x", nu), g),
                "x*y".into(),
                "y^2".into(),
            ],
            manifest(vec![("G".into(), g.clone())]),
        )?,
    ])
}

fn koszul(n: u32, d: u32, extended: bool, field: Field) -> Result<Vec<FamilyMember>> {
    require(n >= 1, "n >= 1")?;
    require(d >= 1, "d >= 1")?;
    let mut names: Vec<String> = (0..=n).map(|i| format!("z{}", i)).collect();
    if extended {
        names.push(format!("z{}", n + 1));
    }
    names.push("x".into());
    names.push("y".into());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let r = PolyRing::new(&refs, field, TermOrder::Grevlex)?;
    let emb = Arc::new(Embedding::by_names(&r, &["x", "y"])?);
    let f: Vec<String> = (0..=n).map(|i| power(&format!("z{}", i), d)).collect();
    if !extended {
        require_no_common_zero(&emb, "F_i", &f)?;
    }
    let k: Vec<String> = (0..=n)
        .map(|i| {
            let (a, b) = (n - i, i);
            match (a, b) {
                (0, _) => power("y", b),
                (_, 0) => power("x", a),
                _ => format!("{}*{}", power("x", a), power("y", b)),
            }
        })
        .collect();
    let mut gens = Vec::new();
    for i in 0..=n as usize {
        for j in i + 1..=n as usize {
            gens.push(format!("{}*{} - {}*{}", f[j], k[i], f[i], k[j]));
        }
    }
    for e in 0..=n + 1 {
        let (a, b) = (n + 1 - e, e);
        gens.push(match (a, b) {
            (0, _) => power("y", b),
            (_, 0) => power("x", a),
            _ => format!("{}*{}", power("x", a), power("y", b)),
        });
    }
    let mut hilb = HilbertPoly::zero();
    let dim = if extended { n + 1 } else { n };
    for i in 0..n {
        hilb = hilb.add(&b(dim, i as i32).scale(i as i64 + 1));
    }
    let hilb = hilb.add(&b(dim, n as i32 - d as i32));
    let inst = (0..=n)
        .map(|i| (format!("F_{}", i), f[i as usize].clone()))
        .collect();
    let label = if extended {
        format!("koszul n={} d={} in one more support variable", n, d)
    } else {
        format!("koszul n={} d={}", n, d)
    };
    let mut m = member(
        &emb,
        label,
        &gens,
        Manifest {
            multiplicity: (n * (n + 1) / 2 + 1) as usize,
            locally_cm: Some(!extended),
            type_i: None,
            hilbert: if extended { None } else { Some(hilb) },
            instantiation: inst,
        },
    )?;
    if extended {
        let mut locus: Vec<String> = (0..=n).map(|i| format!("z{}", i)).collect();
        locus.push("x".into());
        locus.push("y".into());
        let refs: Vec<&str> = locus.iter().map(|s| s.as_str()).collect();
        m.related
            .push(("non-CM locus".into(), Ideal::from_strs(&r, &refs)?));
    }
    Ok(vec![m])
}

fn rank_two(a: u32, field: Field) -> Result<Vec<FamilyMember>> {
    require(a >= 2, "a >= 2")?;
    let r = plane_ring(&["x", "y"], field)?;
    let emb = Arc::new(Embedding::by_names(&r, &["x", "y"])?);
    let p: Vec<String> = (0..3).map(|i| power(&format!("z{}", i), a - 2)).collect();
    require_no_common_zero(&emb, "P_i", &p)?;
    let gens = vec![
        format!("{}*x^2 + {}*x*y + {}*y^2", p[0], p[1], p[2]),
        "x^3".into(),
        "x^2*y".into(),
        "x*y^2".into(),
        "y^3".into(),
    ];
    let hilb = b(2, 0)
        .add(&b(2, 1).scale(2))
        .add(&b(2, 2).scale(3))
        .sub(&b(2, a as i32));
    Ok(vec![member(
        &emb,
        format!("rank-two quotient a={}", a),
        &gens,
        Manifest {
            multiplicity: 5,
            locally_cm: Some(true),
            type_i: Some(true),
            hilbert: Some(hilb),
            instantiation: (0..3)
                .map(|i| (format!("P_{}", i + 1), p[i].clone()))
                .collect(),
        },
    )?])
}

fn bundle(a: u32, field: Field) -> Result<Vec<FamilyMember>> {
    let r = plane_ring(&["x1", "x2", "x3"], field)?;
    let emb = Arc::new(Embedding::by_names(&r, &["x1", "x2", "x3"])?);
    let f: Vec<String> = (0..3).map(|i| power(&format!("z{}", i), a + 1)).collect();
    require_no_common_zero(&emb, "f_i", &f)?;
    let mut gens = vec![format!("{}*x1 + {}*x2 + {}*x3", f[0], f[1], f[2])];
    for i in 1..=3 {
        for j in i..=3 {
            gens.push(format!("x{}*x{}", i, j));
        }
    }
    let hilb = b(2, 0).add(&b(2, 1).scale(3)).sub(&b(2, a as i32 + 2));
    Ok(vec![member(
        &emb,
        format!("bundle a={}", a),
        &gens,
        Manifest {
            multiplicity: 3,
            locally_cm: Some(true),
            type_i: Some(true),
            hilbert: Some(hilb),
            instantiation: (0..3)
                .map(|i| (format!("f_{}", i + 1), f[i].clone()))
                .collect(),
        },
    )?])
}

fn split(field: Field) -> Result<Vec<FamilyMember>> {
    let xs = ["xa0", "xa1", "xa2", "xb0", "xb1", "xb2"];
    let r = plane_ring(&xs, field)?;
    let emb = Arc::new(Embedding::by_names(&r, &xs)?);
    let binomials = |p: &str| -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                out.push(format!("{p}{i}*z{j} - {p}{j}*z{i}"));
            }
        }
        out
    };
    let squares = |vars: &[&str]| -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..vars.len() {
            for j in i..vars.len() {
                out.push(format!("{}*{}", vars[i], vars[j]));
            }
        }
        out
    };
    let mut gens = binomials("xa");
    gens.extend(binomials("xb"));
    gens.extend(squares(&xs));
    let mut sub = binomials("xa");
    sub.extend(["xb0", "xb1", "xb2"].iter().map(|s| s.to_string()));
    sub.extend(squares(&xs[..3]));
    let sub_refs: Vec<&str> = sub.iter().map(|s| s.as_str()).collect();
    let mut m = member(
        &emb,
        "split O+O on a plane".into(),
        &gens,
        Manifest {
            multiplicity: 3,
            locally_cm: Some(true),
            type_i: Some(true),
            hilbert: Some(HilbertPoly::from_pairs(&[(2, 3)])),
            instantiation: vec![("a".into(), "0".into()), ("b".into(), "0".into())],
        },
    )?;
    m.related.push((
        "double substructure".into(),
        Ideal::from_strs(&r, &sub_refs)?,
    ));
    Ok(vec![m])
}

fn ci_subsets(field: Field) -> Result<Vec<FamilyMember>> {
    let xs = ["x1", "x2", "x3"];
    let r = plane_ring(&xs, field)?;
    let emb = Arc::new(Embedding::by_names(&r, &xs)?);
    let mut out = Vec::new();
    for mask in 0u32..8 {
        let s: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
        let mut gens: Vec<String> = (0..3)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| xs[i].to_string())
            .collect();
        for i in 0..3 {
            for j in i..3 {
                gens.push(format!("{}*{}", xs[i], xs[j]));
            }
        }
        let label = format!(
            "S={{{}}}",
            s.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        out.push(member(
            &emb,
            label,
            &gens,
            Manifest {
                multiplicity: s.len() + 1,
                locally_cm: Some(true),
                type_i: Some(true),
                hilbert: None,
                instantiation: vec![("subset mask".into(), mask.to_string())],
            },
        )?);
    }
    Ok(out)
}

fn non_type_i(a: u32, b: u32, field: Field) -> Result<Vec<FamilyMember>> {
    require(a >= 1 && b >= 1, "a, b >= 1")?;
    require(a <= b, "a <= b (swap the roles of P and Q otherwise)")?;
    let r = plane_ring(&["x", "y"], field)?;
    let emb = Arc::new(Embedding::by_names(&r, &["x", "y"])?);
    let c = a.max(b) + 1;
    let f = power("z0", c - a);
    let g = power("z1", c - b);
    // degree of l from homogeneity of the first generator, with r = s = 1
    let l = if a == 1 { "z2^2" } else { "z2" }.to_string();
    require_no_common_zero(&emb, "l, f, g", &[l.clone(), f.clone(), g.clone()])?;
    let h = format!("({})*{} + ({})*{}", f, power("x", a), g, power("y", b));
    let gens: Vec<String> = if a == 1 && b == 1 {
        vec![
            format!("({g})^2*({h}) - {l}*x^2"),
            format!("({f})*({g})*({h}) + {l}*x*y"),
            format!("({f})^2*({h}) - {l}*y^2"),
            format!("x*({h})"),
            format!("y*({h})"),
            "x^3".into(),
            "x^2*y".into(),
            "x*y^2".into(),
            "y^3".into(),
        ]
    } else if a == 1 {
        vec![
            format!("({g})*({h}) - {l}*x*y"),
            format!("({f})*({h}) + {l}*{}", power("y", b + 1)),
            format!("y*({h})"),
            "x^2".into(),
            "x*y^2".into(),
            power("y", b + 2),
        ]
    } else {
        vec![
            format!("({g})*({h}) - {l}*{}", power("x", a + 1)),
            format!("({f})*({h}) + {l}*x*{}", power("y", b)),
            format!("({g})*({h}) - {l}*{}*y", power("x", a)),
            format!("({f})*({h}) + {l}*{}", power("y", b + 1)),
            format!("{} - {}*y", power("x", a + 1), power("x", a)),
            format!("x*{} - {}", power("y", b), power("y", b + 1)),
            format!("x*({h})"),
            format!("y*({h})"),
            power("x", a + 2),
            format!("x^2*{}", power("y", b)),
            format!("{}*y", power("x", a + 1)),
            format!("x*{}", power("y", b + 1)),
            format!("{}*y^2", power("x", a)),
            power("y", b + 2),
        ]
    };
    let mut m = member(
        &emb,
        format!("non-type-I a={} b={}", a, b),
        &gens,
        Manifest {
            multiplicity: (a * b + 2) as usize,
            locally_cm: Some(true),
            type_i: Some(false),
            hilbert: None,
            instantiation: vec![
                ("P".into(), "x".into()),
                ("Q".into(), "y".into()),
                ("f".into(), f.clone()),
                ("g".into(), g.clone()),
                ("l".into(), l.clone()),
                ("r".into(), "1".into()),
                ("s".into(), "1".into()),
            ],
        },
    )?;
    let z = vec![
        h.clone(),
        power("x", a + 1),
        format!("x*{}", power("y", b)),
        format!("{}*y", power("x", a)),
        power("y", b + 1),
    ];
    let z_refs: Vec<&str> = z.iter().map(|s| s.as_str()).collect();
    m.related
        .push(("non-CM term".into(), Ideal::from_strs(&r, &z_refs)?));
    m.related.push((
        "non-CM locus".into(),
        Ideal::from_strs(&r, &["z0", "z1", "x", "y"])?,
    ));
    Ok(vec![m])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_members() {
        let ms = build_family(&Family::Primitive { nu: 3 }, Field::Rational).unwrap();
        assert_eq!(ms.len(), 3);
        for m in &ms {
            assert_eq!(m.structure.multiplicity().unwrap(), 4);
        }
        assert_eq!(
            ms[2].structure.ideal().to_string(),
            "(x^3 + z0^2*y, x*y, y^2)"
        );
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(
            build_family(&Family::Primitive { nu: 1 }, Field::Rational),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            build_family(&Family::Koszul { n: 2, d: 0 }, Field::Rational),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn koszul_hilbert() {
        let m = &build_family(&Family::Koszul { n: 2, d: 1 }, Field::Rational).unwrap()[0];
        assert_eq!(m.structure.multiplicity().unwrap(), 4);
        let h = m.structure.ideal().hilbert_polynomial().unwrap();
        assert_eq!(Some(h), m.manifest.hilbert);
        assert!(m.structure.is_locally_cm().unwrap());
    }
}
