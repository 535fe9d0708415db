//! Exact arithmetic: cyclotomic scalars, sparse multivariate polynomials,
//! dense univariate polynomials and matrices, Gröbner bases, factorization.

pub mod cyclo;
pub mod error;
pub mod mpoly;
pub mod parse;
pub mod upoly;
pub mod mat;
pub mod groebner;
pub mod factor;

pub use cyclo::Cyclo;
pub use error::ExactError;
pub use malachite_nz::integer::Integer;
pub use malachite_nz::natural::Natural;
pub use malachite_q::Rational;
pub use mpoly::{add_into, MPoly, Mono, Ring};
pub use parse::{parse_cyclo, parse_poly};
pub use upoly::UPoly;
pub use mat::{Echelon, Mat};
pub use factor::{factor_irreducible, factor_rational, factor_cyclotomic};
