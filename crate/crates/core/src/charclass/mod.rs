//! Graded-commutative cohomology rings over ℚ, Chern character, Todd class
//! and the equivariant index pairing `(−1)^n ⟨Ch(a) · Td, [Y]⟩`.
//!
//! All arithmetic is exact.

mod builtin;
mod classes;
mod element;
mod indicial;
mod io;
mod ring;

use std::path::Path;

pub use builtin::{parse_builtin_ring, point, product, projective, sphere, torus, MAX_BASIS, MAX_TOP_DEGREE, MAX_TORUS_DIM};
pub use classes::{
    bernoulli_numbers, chern_character, index_pairing, power_sums, todd_class, todd_series, BundleData, PairingResult,
};
pub use element::RingElement;
pub use indicial::higher_indicial_k_groups;
pub use ring::{GradedRing, ProductRule, UNIT_LABEL};

use crate::error::CharClassError;

/// A ring from a JSON file path or a builtin spec.
pub fn load_ring(source: &str) -> Result<GradedRing, CharClassError> {
    let path = Path::new(source);
    if path.is_file() || source.ends_with(".json") {
        let text = std::fs::read_to_string(path).map_err(|e| CharClassError::Json(format!("{source}: {e}")))?;
        GradedRing::from_json(&text)
    } else {
        parse_builtin_ring(source)
    }
}
