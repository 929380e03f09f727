//! Free non-commutative polynomials over GF(2).

mod alphabet;
mod json;
mod map;
mod matrix_point;
mod poly;
mod ring;
mod word;

pub use alphabet::Alphabet;
pub use json::{poly_from_json, poly_to_json, PolyJson};
pub use map::GeneratorMap;
pub use matrix_point::{DegreeBound, Gf64, MatrixPoint, DIM as MATRIX_POINT_DIM};
pub use poly::Poly;
pub use ring::{Gf2, Ring};
pub use word::{GenId, Word};
