//! Exact integer linear algebra.

mod matrix;
mod snf;

pub use matrix::IntegerMatrix;
pub(crate) use matrix::bigint_to_json;
pub use snf::{invariant_factors, rank, smith_normal_form, SmithForm};
