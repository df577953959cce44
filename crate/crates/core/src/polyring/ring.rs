use std::sync::Arc;

use crate::error::{Error, Result};

use super::coeff::{Coeff, Field};
use super::monomial::{Monomial, TermOrder};

/// Bounds applied by Gröbner computations over a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest Gröbner basis size before giving up.
    pub max_basis: usize,
    /// Largest S-pair degree processed before giving up.
    pub max_degree: i32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 20_000,
            max_degree: 40,
        }
    }
}

/// A polynomial ring: ordered variable names, coefficient field, term order.
#[derive(Debug, Clone)]
pub struct PolyRing {
    names: Vec<String>,
    field: Field,
    order: TermOrder,
    limits: Limits,
}

impl PartialEq for PolyRing {
    fn eq(&self, o: &Self) -> bool {
        self.names == o.names && self.field == o.field && self.order == o.order
    }
}

impl Eq for PolyRing {}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(names: &[&str], field: Field, order: TermOrder) -> Result<Arc<PolyRing>> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::from_names(names, field, order, Limits::default())
    }

    pub fn from_names(
        names: Vec<String>,
        field: Field,
        order: TermOrder,
        limits: Limits,
    ) -> Result<Arc<PolyRing>> {
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::Syntax {
                    offset: 0,
                    message: format!("invalid variable name `{}`", n),
                });
            }
            if names[..i].contains(n) {
                return Err(Error::Syntax {
                    offset: 0,
                    message: format!("duplicate variable `{}`", n),
                });
            }
        }
        if let TermOrder::Elimination(mask) = &order {
            if mask.len() != names.len() {
                return Err(Error::RingMismatch("elimination mask length".into()));
            }
        }
        Ok(Arc::new(PolyRing {
            names,
            field,
            order,
            limits,
        }))
    }

    /// Parses a declaration such as `ring z0,z1,z2,x,y / char 0 / grevlex`.
    pub fn parse_declaration(text: &str) -> Result<Arc<PolyRing>> {
        super::parse::parse_ring(text)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero_coeff(&self) -> Coeff {
        self.field.zero()
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// Same variables and field, different term order.
    pub fn with_order(&self, order: TermOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            names: self.names.clone(),
            field: self.field,
            order,
            limits: self.limits,
        })
    }

    pub fn with_limits(&self, limits: Limits) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            limits,
            ..self.clone()
        })
    }

    pub fn with_field(&self, field: Field) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            field,
            ..self.clone()
        })
    }

    /// Appends fresh variables; the new variables are placed in front when
    /// `front` is set. Returns the new ring and the positions of the old
    /// variables inside it.
    pub fn adjoin(
        &self,
        fresh: &[&str],
        front: bool,
        order: TermOrder,
    ) -> (Arc<PolyRing>, Vec<usize>) {
        let mut names = Vec::new();
        let mut taken: Vec<String> = self.names.clone();
        let mut fresh_names = Vec::new();
        for f in fresh {
            let mut name = f.to_string();
            while taken.contains(&name) {
                name.push('_');
            }
            taken.push(name.clone());
            fresh_names.push(name);
        }
        let map: Vec<usize>;
        if front {
            names.extend(fresh_names.iter().cloned());
            names.extend(self.names.iter().cloned());
            map = (0..self.nvars()).map(|i| i + fresh.len()).collect();
        } else {
            names.extend(self.names.iter().cloned());
            names.extend(fresh_names.iter().cloned());
            map = (0..self.nvars()).collect();
        }
        let ring = Arc::new(PolyRing {
            names,
            field: self.field,
            order,
            limits: self.limits,
        });
        (ring, map)
    }

    /// The ring on the variables not flagged in `drop`, with the same field
    /// and a grevlex order. Also returns, for each old variable, its new index.
    pub fn drop_variables(&self, drop: &[bool]) -> (Arc<PolyRing>, Vec<Option<usize>>) {
        let mut names = Vec::new();
        let mut map = Vec::new();
        for (i, n) in self.names.iter().enumerate() {
            if drop[i] {
                map.push(None);
            } else {
                map.push(Some(names.len()));
                names.push(n.clone());
            }
        }
        let ring = Arc::new(PolyRing {
            names,
            field: self.field,
            order: TermOrder::Grevlex,
            limits: self.limits,
        });
        (ring, map)
    }

    pub fn describe(&self) -> String {
        format!(
            "ring {} / char {} / {}",
            self.names.join(","),
            self.characteristic(),
            self.order.name()
        )
    }
}

pub fn check_same(a: &PolyRing, b: &PolyRing) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!(
            "`{}` vs `{}`",
            a.describe(),
            b.describe()
        )))
    }
}
