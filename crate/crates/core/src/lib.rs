//! Exact commutative algebra for multiple structures supported on linear
//! subvarieties of projective space: Gröbner bases, resolutions, Ext
//! annihilators, Hilbert polynomials, and the filtration machinery built
//! on top of them.

pub mod catalog;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod idealcalc;
pub mod linalg;
pub mod multistruct;
pub mod polyring;

pub use error::{Error, Result};
