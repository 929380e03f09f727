//! Degree-0 Chekanov–Eliashberg algebra of Legendrian closures of positive
//! braids over GF(2), their canonical augmentation, and the monodromy of the
//! torus-knot loop.

pub mod augment;
pub mod braid;
pub mod corpus;
pub mod dga;
pub mod error;
pub mod monodromy;
pub mod rmoves;
pub mod z2poly;

pub use error::{Error, Result};
