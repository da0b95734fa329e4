//! K-theoretic invariants of norm-closed algebras of b-pseudodifferential
//! operators on manifolds with corners.
//!
//! * [`complex`]: oriented face lattices and incidence numbers.
//! * [`linalg`] and [`group`]: exact integer matrices, Smith normal form and
//!   finitely generated abelian groups.
//! * [`ktheory`]: the E¹/E² pages of the composition-series spectral
//!   sequence, six-term exact sequence bookkeeping and the boundary cases.
//! * [`toeplitz`]: Toeplitz indices of Laurent symbols by winding number.
//! * [`charclass`]: graded cohomology rings, Chern character, Todd class and
//!   the equivariant index pairing.

pub mod charclass;
pub mod complex;
pub mod error;
pub mod group;
pub mod ktheory;
pub mod linalg;
pub mod toeplitz;

pub use charclass::{BundleData, GradedRing, RingElement};
pub use complex::{CornerComplex, Face, IncidenceEntry, Violation};
pub use error::{CharClassError, ComplexError, GroupError, KTheoryError, LinalgError, ToeplitzError};
pub use group::AbelianGroup;
pub use linalg::{smith_normal_form, IntegerMatrix, SmithForm};
pub use toeplitz::LaurentSymbol;
