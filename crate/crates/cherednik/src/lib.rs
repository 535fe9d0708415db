//! Rational Cherednik algebras at t = 0 for small complex reflection groups.
pub mod arrangement;
pub mod cells;
pub mod center;
pub mod cli;
pub mod error;
pub mod families;
pub mod params;
pub mod pbw;
pub mod reflection;

pub use error::{Error, Result};
pub use reflection::{GroupSpec, ReflectionGroup};
