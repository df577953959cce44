//! Coefficient fields: the rationals and prime fields F_p with p < 2^31.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// A field element. Prime-field elements carry their modulus so that
/// arithmetic needs no outside context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    P { v: u32, p: u32 },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds the field of the given characteristic (0 for the rationals).
    pub fn from_characteristic(ch: u64) -> Result<Field> {
        if ch == 0 {
            Ok(Field::Rational)
        } else if ch < (1u64 << 31) && is_prime(ch) {
            Ok(Field::Prime(ch as u32))
        } else {
            Err(Error::InvalidCharacteristic(ch))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::zero()),
            Field::Prime(p) => Coeff::P { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::P {
                v: n.rem_euclid(*p as i64) as u32,
                p: *p,
            },
        }
    }

    /// Maps an integer into the field.
    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coeff::P {
                    v: r.to_u32().unwrap_or(0),
                    p: *p,
                }
            }
        }
    }

    /// Maps a rational number into the field; fails when the denominator
    /// vanishes modulo p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match self {
            Field::Rational => Ok(Coeff::Q(q.clone())),
            Field::Prime(p) => {
                let den = self.from_bigint(q.denom());
                if den.is_zero() {
                    return Err(Error::CoefficientNotRepresentable(q.to_string(), *p));
                }
                Ok(self.from_bigint(q.numer()).div(&den))
            }
        }
    }

    /// All elements of a prime field, or `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..*p).map(|v| Coeff::P { v, p: *p }).collect()),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rational,
            Coeff::P { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::P { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::P { v: a, p }, Coeff::P { v: b, .. }) => Coeff::P {
                v: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::P { v, p } => Coeff::P {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, o: &Coeff) -> Coeff {
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::P { v: a, p }, Coeff::P { v: b, .. }) => Coeff::P {
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coeff::Q(a) => Coeff::Q(a.recip()),
            Coeff::P { v, p } => Coeff::P {
                v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            },
        }
    }

    pub fn div(&self, o: &Coeff) -> Coeff {
        self.mul(&o.inv())
    }

    /// Small integer value if the element is an integer that fits in i64
    /// (for prime fields: the representative in [0, p)).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Q(q) if q.is_integer() => q.numer().to_i64(),
            Coeff::Q(_) => None,
            Coeff::P { v, .. } => Some(*v as i64),
        }
    }

    /// True for rational elements below zero; prime-field elements are
    /// printed as their representative in [0, p) and never count as negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Coeff::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => write!(f, "{}", q),
            Coeff::P { v, .. } => write!(f, "{}", v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(7);
        for n in 1..7 {
            let a = f.from_i64(n);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn rational_not_representable() {
        let f = Field::Prime(3);
        let q = BigRational::new(BigInt::from(1), BigInt::from(6));
        assert!(f.from_rational(&q).is_err());
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.from_rational(&q).unwrap(), f.from_i64(2));
    }

    #[test]
    fn characteristic_validation() {
        assert!(Field::from_characteristic(4).is_err());
        assert!(Field::from_characteristic(1 << 31).is_err());
        assert_eq!(Field::from_characteristic(2).unwrap(), Field::Prime(2));
        assert_eq!(
            Field::from_characteristic(2147483647).unwrap(),
            Field::Prime(2147483647)
        );
    }
}
