//! Fredholm index of Toeplitz operators `T_φ` on the Hardy space `H²(S¹)`
//! with Laurent polynomial symbols.

mod roots;
mod symbol;
mod winding;

use log::debug;

use crate::error::ToeplitzError;
use crate::linalg::{self, IntegerMatrix};

pub use roots::{count_roots_inside, polynomial_roots, winding_number_roots, CIRCLE_MARGIN};
pub use symbol::{parse_rational, FloatSymbol, GaussianRational, LaurentSymbol};
pub use winding::{
    check_nonvanishing, winding_number, winding_number_numeric, DEFAULT_SAMPLES, MAX_SAMPLES,
    NONVANISHING_SAMPLES, NONVANISHING_TOLERANCE, RESIDUAL_TOLERANCE,
};

/// `ind T_φ = −wind(φ)`. The argument count and the root count must agree.
pub fn toeplitz_index(s: &LaurentSymbol) -> Result<i64, ToeplitzError> {
    let numeric = winding_number(s)?;
    let roots = winding_number_roots(s)?;
    debug!("winding of {s}: argument {numeric}, roots {roots}");
    if numeric != roots {
        return Err(ToeplitzError::OracleDisagreement { numeric, roots });
    }
    Ok(-numeric)
}

/// Like [`toeplitz_index`] with a fixed number of argument samples.
pub fn toeplitz_index_with_samples(s: &LaurentSymbol, samples: usize) -> Result<i64, ToeplitzError> {
    check_nonvanishing(s)?;
    let numeric = winding_number_numeric(s, samples)?;
    let roots = winding_number_roots(s)?;
    if numeric != roots {
        return Err(ToeplitzError::OracleDisagreement { numeric, roots });
    }
    Ok(-numeric)
}

/// Kernel and cokernel dimensions of `T_{z^k}` seen on the first
/// `truncation` Fourier modes.
///
/// For `k ≥ 0` the forward shift is taken as a map `C^N → C^{N+k}` so that
/// nothing is pushed out of range; for `k < 0` the backward shift is taken as
/// `C^N → C^{N−|k|}`. Both dimensions come from the exact rank.
pub fn shift_kernel_dims(k: i64, truncation: usize) -> Result<(usize, usize), ToeplitzError> {
    let shift = k.unsigned_abs() as usize;
    if truncation == 0 || shift >= truncation {
        return Err(ToeplitzError::TruncationTooSmall { k, truncation });
    }
    let n = truncation;
    let m = if k >= 0 { n + shift } else { n - shift };
    let mut t = IntegerMatrix::zeros(m, n);
    for col in 0..n {
        // e_col ↦ e_{col+k}
        let row = col as i64 + k;
        if row >= 0 && (row as usize) < m {
            t.set(row as usize, col, 1.into());
        }
    }
    let r = linalg::rank(&t);
    Ok((n - r, m - r))
}
