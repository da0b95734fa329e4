//! Root counting inside the unit disk.
//!
//! Roots of `z^{-min_exp} φ(z)` are approximated by Aberth–Ehrlich iteration
//! and then enclosed in Weierstrass inclusion disks: with
//! `W_i = p(z_i) / (a_d Π_{j≠i} (z_i − z_j))`, the disks `|z − z_i| ≤ d |W_i|`
//! cover all roots and each connected union of `k` disks holds exactly `k`
//! of them. A union strictly on one side of the circle is counted.

use log::debug;
use num_complex::Complex64;
use num_traits::Zero;

use super::LaurentSymbol;
use crate::error::ToeplitzError;

/// Required separation between a root enclosure and the unit circle.
pub const CIRCLE_MARGIN: f64 = 1e-6;
const ITERATIONS_PER_ROUND: usize = 500;
const ROUNDS: usize = 4;

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    // value and derivative, coefficients lowest degree first
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn initial_guesses(monic: &[Complex64]) -> Vec<Complex64> {
    let d = monic.len() - 1;
    let r = monic[0].norm().powf(1.0 / d as f64).max(f64::MIN_POSITIVE);
    (0..d)
        .map(|k| Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect()
}

/// One batch of Aberth steps. Returns true once every correction is at
/// rounding level.
fn aberth(monic: &[Complex64], z: &mut [Complex64], iterations: usize) -> bool {
    let d = z.len();
    for _ in 0..iterations {
        let mut settled = true;
        for i in 0..d {
            let (p, dp) = horner(monic, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() > 4.0 * f64::EPSILON * z[i].norm().max(1.0) {
                settled = false;
            }
        }
        if settled {
            return true;
        }
    }
    false
}

/// Approximate roots of a polynomial given lowest degree first. The leading
/// coefficient must be nonzero.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let lead = *coeffs.last().expect("nonempty");
    let monic: Vec<Complex64> = coeffs.iter().map(|a| a / lead).collect();
    if monic.len() == 1 {
        return Vec::new();
    }
    let mut z = initial_guesses(&monic);
    aberth(&monic, &mut z, ITERATIONS_PER_ROUND * ROUNDS);
    z
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InclusionDisk {
    pub center: Complex64,
    pub radius: f64,
}

fn inclusion_disks(monic: &[Complex64], z: &[Complex64]) -> Vec<InclusionDisk> {
    let d = z.len();
    (0..d)
        .map(|i| {
            let (p, _) = horner(monic, z[i]);
            let denom: Complex64 = (0..d).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
            let w = (p / denom).norm();
            let slack = 8.0 * f64::EPSILON * (1.0 + z[i].norm());
            let radius = if w.is_finite() { d as f64 * w + slack } else { f64::INFINITY };
            InclusionDisk { center: z[i], radius }
        })
        .collect()
}

fn components(disks: &[InclusionDisk]) -> Vec<Vec<usize>> {
    let n = disks.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if (disks[i].center - disks[j].center).norm() <= disks[i].radius + disks[j].radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

enum Side {
    Inside(usize),
    Outside,
    Straddles,
}

fn classify(disks: &[InclusionDisk], group: &[usize]) -> Side {
    let outer = group
        .iter()
        .map(|&i| disks[i].center.norm() + disks[i].radius)
        .fold(0.0, f64::max);
    let inner = group
        .iter()
        .map(|&i| disks[i].center.norm() - disks[i].radius)
        .fold(f64::INFINITY, f64::min);
    if outer < 1.0 - CIRCLE_MARGIN {
        Side::Inside(group.len())
    } else if inner > 1.0 + CIRCLE_MARGIN {
        Side::Outside
    } else {
        Side::Straddles
    }
}

/// Certified number of roots of `coeffs` (lowest degree first) strictly
/// inside the unit disk, counted with multiplicity.
pub fn count_roots_inside(coeffs: &[Complex64]) -> Result<usize, ToeplitzError> {
    let lead = *coeffs.last().expect("nonempty");
    let monic: Vec<Complex64> = coeffs.iter().map(|a| a / lead).collect();
    let d = monic.len() - 1;
    if d == 0 {
        return Ok(0);
    }
    let mut z = initial_guesses(&monic);
    for round in 0..ROUNDS {
        aberth(&monic, &mut z, ITERATIONS_PER_ROUND);
        let disks = inclusion_disks(&monic, &z);
        let mut inside = 0;
        let mut undecided = false;
        for group in components(&disks) {
            match classify(&disks, &group) {
                Side::Inside(k) => inside += k,
                Side::Outside => {}
                Side::Straddles => undecided = true,
            }
        }
        if !undecided {
            return Ok(inside);
        }
        if let Some(near) = z.iter().find(|c| (c.norm() - 1.0).abs() < CIRCLE_MARGIN) {
            return Err(ToeplitzError::RootNearCircle {
                modulus: near.norm(),
                margin: CIRCLE_MARGIN,
            });
        }
        debug!("root enclosures straddle the circle after round {round}, refining");
    }
    Err(ToeplitzError::NoConvergence(d))
}

/// Winding number of `φ` as `(#roots of z^{-min_exp} φ inside the disk) + min_exp`.
pub fn winding_number_roots(s: &LaurentSymbol) -> Result<i64, ToeplitzError> {
    let inside = count_roots_inside(&s.polynomial_part())?;
    Ok(inside as i64 + s.min_exp())
}
