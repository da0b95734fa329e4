use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use super::LaurentSymbol;
use crate::error::ToeplitzError;

pub const NONVANISHING_SAMPLES: usize = 4096;
pub const NONVANISHING_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_SAMPLES: usize = 1024;
pub const MAX_SAMPLES: usize = 1 << 20;
pub const RESIDUAL_TOLERANCE: f64 = 0.1;

fn circle_point(k: usize, samples: usize) -> (f64, Complex64) {
    let t = TAU * k as f64 / samples as f64;
    (t, Complex64::from_polar(1.0, t))
}

/// Smallest `|φ|` over equispaced circle samples. Fails if it drops below
/// `1e-9` times the largest coefficient modulus.
pub fn check_nonvanishing(s: &LaurentSymbol) -> Result<f64, ToeplitzError> {
    min_modulus(s, NONVANISHING_SAMPLES)
}

fn min_modulus(s: &LaurentSymbol, samples: usize) -> Result<f64, ToeplitzError> {
    let floor = NONVANISHING_TOLERANCE * s.max_coefficient_modulus();
    let f = s.to_float();
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..samples {
        let (t, z) = circle_point(k, samples);
        let m = f.eval(z).norm();
        if m < best.0 {
            best = (m, t);
        }
    }
    if best.0 < floor || !best.0.is_finite() {
        return Err(ToeplitzError::VanishingSymbol {
            modulus: best.0,
            angle: best.1,
        });
    }
    Ok(best.0)
}

/// Winding number of `t ↦ φ(e^{it})` around 0 from principal-branch argument
/// increments over `samples` equispaced points.
///
/// A step whose increment exceeds π/2 in size means the curve is too coarsely
/// sampled to follow the argument reliably, and is reported as such.
pub fn winding_number_numeric(s: &LaurentSymbol, samples: usize) -> Result<i64, ToeplitzError> {
    let samples = samples.max(3);
    let floor = NONVANISHING_TOLERANCE * s.max_coefficient_modulus();
    let f = s.to_float();
    let values: Vec<(f64, Complex64)> = (0..samples)
        .map(|k| {
            let (t, z) = circle_point(k, samples);
            (t, f.eval(z))
        })
        .collect();
    if let Some(&(t, v)) = values.iter().find(|(_, v)| v.norm() < floor) {
        return Err(ToeplitzError::VanishingSymbol {
            modulus: v.norm(),
            angle: t,
        });
    }
    let mut total = 0.0;
    for k in 0..samples {
        let a = values[k].1;
        let b = values[(k + 1) % samples].1;
        let step = (b / a).arg();
        if step.abs() > FRAC_PI_2 {
            return Err(ToeplitzError::Undersampled {
                samples,
                increment: step,
            });
        }
        total += step;
    }
    let turns = total / TAU;
    let nearest = turns.round();
    let residual = (turns - nearest).abs();
    if residual >= RESIDUAL_TOLERANCE {
        return Err(ToeplitzError::Residual { samples, residual });
    }
    Ok(nearest as i64)
}

/// [`winding_number_numeric`] starting at 1024 samples and doubling until the
/// count is accepted, up to 2^20 samples.
pub fn winding_number(s: &LaurentSymbol) -> Result<i64, ToeplitzError> {
    check_nonvanishing(s)?;
    let mut samples = DEFAULT_SAMPLES;
    loop {
        match winding_number_numeric(s, samples) {
            Err(ToeplitzError::Undersampled { .. } | ToeplitzError::Residual { .. }) if samples < MAX_SAMPLES => {
                samples *= 2;
            }
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_loop() {
        assert_eq!(winding_number_numeric(&LaurentSymbol::monomial(1), 64).unwrap(), 1);
    }

    #[test]
    fn cubic_plus_small_constant() {
        let s: LaurentSymbol = "3:1,0:0.1".parse().unwrap();
        assert_eq!(winding_number(&s).unwrap(), 3);
    }

    #[test]
    fn pole_cancels_root() {
        let s = LaurentSymbol::from_ints(&[(0, 2), (-1, 1)]).unwrap();
        assert_eq!(winding_number(&s).unwrap(), 0);
    }

    #[test]
    fn coarse_sampling_is_detected() {
        let s = LaurentSymbol::monomial(5);
        assert!(matches!(
            winding_number_numeric(&s, 8),
            Err(ToeplitzError::Undersampled { .. })
        ));
        assert_eq!(winding_number_numeric(&s, 64).unwrap(), 5);
    }

    #[test]
    fn vanishing_symbol_is_detected() {
        // 1 + z vanishes at z = -1
        let s = LaurentSymbol::from_ints(&[(0, 1), (1, 1)]).unwrap();
        assert!(matches!(check_nonvanishing(&s), Err(ToeplitzError::VanishingSymbol { .. })));
        assert!(matches!(
            winding_number_numeric(&s, 64),
            Err(ToeplitzError::VanishingSymbol { .. })
        ));
    }
}
