use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use crate::error::ToeplitzError;

pub type GaussianRational = Complex<BigRational>;

/// Laurent polynomial `φ(z) = Σ a_k z^k` with exact Gaussian-rational
/// coefficients. Floating-point input is converted exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSymbol {
    terms: BTreeMap<i64, GaussianRational>,
}

fn rational_from_f64(x: f64) -> Result<BigRational, ToeplitzError> {
    BigRational::from_f64(x).ok_or_else(|| ToeplitzError::Parse(format!("non-finite coefficient {x}")))
}

fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl LaurentSymbol {
    pub fn new(terms: impl IntoIterator<Item = (i64, GaussianRational)>) -> Result<Self, ToeplitzError> {
        let mut map: BTreeMap<i64, GaussianRational> = BTreeMap::new();
        for (k, a) in terms {
            *map.entry(k).or_insert_with(GaussianRational::zero) += a;
        }
        map.retain(|_, a| !a.is_zero());
        if map.is_empty() {
            return Err(ToeplitzError::ZeroSymbol);
        }
        Ok(Self { terms: map })
    }

    /// Real integer coefficients, e.g. `from_ints(&[(0, 2), (1, 1)])` is `2 + z`.
    pub fn from_ints(terms: &[(i64, i64)]) -> Result<Self, ToeplitzError> {
        Self::new(terms.iter().map(|&(k, a)| {
            (k, Complex::new(BigRational::from_integer(a.into()), BigRational::zero()))
        }))
    }

    pub fn from_f64(terms: &[(i64, Complex64)]) -> Result<Self, ToeplitzError> {
        let mut out = Vec::with_capacity(terms.len());
        for &(k, a) in terms {
            out.push((k, Complex::new(rational_from_f64(a.re)?, rational_from_f64(a.im)?)));
        }
        Self::new(out)
    }

    pub fn monomial(k: i64) -> Self {
        Self::from_ints(&[(k, 1)]).expect("nonzero")
    }

    pub fn terms(&self) -> &BTreeMap<i64, GaussianRational> {
        &self.terms
    }

    pub fn min_exp(&self) -> i64 {
        *self.terms.keys().next().expect("nonempty")
    }

    pub fn max_exp(&self) -> i64 {
        *self.terms.keys().next_back().expect("nonempty")
    }

    pub fn coefficient(&self, k: i64) -> GaussianRational {
        self.terms.get(&k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn coefficient_f64(&self, k: i64) -> Complex64 {
        self.terms
            .get(&k)
            .map_or(Complex64::zero(), |a| Complex64::new(rational_to_f64(&a.re), rational_to_f64(&a.im)))
    }

    pub fn max_coefficient_modulus(&self) -> f64 {
        self.terms
            .keys()
            .map(|&k| self.coefficient_f64(k).norm())
            .fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.to_float().eval(z)
    }

    /// Double-precision copy for repeated evaluation.
    pub fn to_float(&self) -> FloatSymbol {
        FloatSymbol {
            lo: self.min_exp(),
            coeffs: self.polynomial_part(),
        }
    }

    /// Coefficients of the polynomial `z^{-min_exp} φ(z)`, lowest degree first.
    pub fn polynomial_part(&self) -> Vec<Complex64> {
        (self.min_exp()..=self.max_exp())
            .map(|k| self.coefficient_f64(k))
            .collect()
    }

    /// Pointwise product on the circle: convolution of coefficients.
    pub fn mul(&self, other: &LaurentSymbol) -> LaurentSymbol {
        let mut out: BTreeMap<i64, GaussianRational> = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                *out.entry(i + j).or_insert_with(GaussianRational::zero) += a * b;
            }
        }
        Self::new(out).expect("product of nonzero Laurent polynomials is nonzero")
    }

    pub fn add_term(&self, k: i64, delta: GaussianRational) -> Result<LaurentSymbol, ToeplitzError> {
        Self::new(self.terms.clone().into_iter().chain([(k, delta)]))
    }

    /// Symbol of the adjoint operator: `Σ conj(a_k) z^{-k}`.
    pub fn conjugate_reflect(&self) -> LaurentSymbol {
        Self {
            terms: self.terms.iter().map(|(k, a)| (-k, a.conj())).collect(),
        }
    }
}

/// `z^lo · Σ coeffs[k] z^k` in floating point.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSymbol {
    lo: i64,
    coeffs: Vec<Complex64>,
}

impl FloatSymbol {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for &a in self.coeffs.iter().rev() {
            acc = acc * z + a;
        }
        acc * z.powi(self.lo as i32)
    }
}

/// Parses a coefficient literal: integer, decimal (`0.1`, `-2.5e-3` read
/// exactly as a rational) or fraction (`1/3`).
pub fn parse_rational(s: &str) -> Result<BigRational, ToeplitzError> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    let bad = || ToeplitzError::Parse(format!("bad coefficient {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

impl FromStr for LaurentSymbol {
    type Err = ToeplitzError;

    /// Comma-separated `exp:re` terms; a token without `:` is the imaginary
    /// part of the preceding term. `"0:2,1:1"` is `2 + z`, `"1:0,+1"` is `i z`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut terms: Vec<(i64, GaussianRational)> = Vec::new();
        let mut has_imag = false;
        for token in s.split(',').map(str::trim) {
            if let Some((exp, re)) = token.split_once(':') {
                let exp: i64 = exp
                    .trim()
                    .parse()
                    .map_err(|_| ToeplitzError::Parse(format!("bad exponent in {token:?}")))?;
                terms.push((exp, Complex::new(parse_rational(re)?, BigRational::zero())));
                has_imag = false;
            } else {
                let last = terms
                    .last_mut()
                    .filter(|_| !has_imag)
                    .ok_or_else(|| ToeplitzError::Parse(format!("stray token {token:?}")))?;
                last.1.im = parse_rational(token.trim_end_matches(['i', 'j']))?;
                has_imag = true;
            }
        }
        Self::new(terms)
    }
}

impl fmt::Display for LaurentSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, a)| {
                if a.im.is_zero() {
                    format!("{k}:{}", a.re)
                } else {
                    format!("{k}:{},{}", a.re, a.im)
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}
