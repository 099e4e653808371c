//! Exact resultants and irreducibility certificates for integer and
//! bivariate polynomials.

pub mod arith;
pub mod bivar;
pub mod bound;
pub mod cert;
pub mod criteria;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod resultant;
pub mod roots;
pub mod text;

pub use error::{Error, Result};
pub use poly::{BigRat, IntPoly, RatPoly};
