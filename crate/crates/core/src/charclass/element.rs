use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::ring::{axpy, Coeffs, GradedRing};
use crate::error::CharClassError;
use crate::toeplitz::parse_rational;

/// Rational linear combination of basis elements of a [`GradedRing`].
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Arc<GradedRing>,
    coeffs: Coeffs,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement {}

pub(crate) fn same_ring(a: &Arc<GradedRing>, b: &Arc<GradedRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl RingElement {
    pub(crate) fn from_coeffs(ring: &Arc<GradedRing>, coeffs: Coeffs) -> Self {
        Self {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        Self::from_coeffs(ring, Coeffs::new())
    }

    pub fn constant(ring: &Arc<GradedRing>, q: BigRational) -> Self {
        let mut c = Coeffs::new();
        if !q.is_zero() {
            c.insert(ring.unit_index(), q);
        }
        Self::from_coeffs(ring, c)
    }

    pub fn one(ring: &Arc<GradedRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn basis(ring: &Arc<GradedRing>, label: &str) -> Result<Self, CharClassError> {
        let i = ring.position(label)?;
        Ok(Self::from_coeffs(ring, Coeffs::from([(i, BigRational::one())])))
    }

    pub fn from_terms<'a>(
        ring: &Arc<GradedRing>,
        terms: impl IntoIterator<Item = (&'a str, BigRational)>,
    ) -> Result<Self, CharClassError> {
        let mut c = Coeffs::new();
        for (label, q) in terms {
            let i = ring.position(label)?;
            axpy(&mut c, &q, &Coeffs::from([(i, BigRational::one())]));
        }
        Ok(Self::from_coeffs(ring, c))
    }

    /// Parses `label:coef` pairs separated by commas, e.g. `1:1,t1*t2:1`.
    /// A bare label has coefficient 1.
    pub fn parse(ring: &Arc<GradedRing>, s: &str) -> Result<Self, CharClassError> {
        let mut terms = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (label, coef) = match token.rsplit_once(':') {
                Some((l, c)) => (
                    l.trim(),
                    parse_rational(c).map_err(|_| CharClassError::Parse(format!("coefficient in {token:?}")))?,
                ),
                None => (token, BigRational::one()),
            };
            terms.push((label, coef));
        }
        if terms.is_empty() {
            return Err(CharClassError::Parse(format!("empty class {s:?}")));
        }
        Self::from_terms(ring, terms)
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn coefficient(&self, label: &str) -> Result<BigRational, CharClassError> {
        let i = self.ring.position(label)?;
        Ok(self.coeffs.get(&i).cloned().unwrap_or_else(BigRational::zero))
    }

    /// Nonzero `(label, coefficient)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, &BigRational)> {
        self.coeffs.iter().map(|(i, q)| (self.ring.label(*i), q))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeffs
            .get(&self.ring.unit_index())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn component(&self, degree: usize) -> Self {
        let c = self
            .coeffs
            .iter()
            .filter(|(i, _)| self.ring.degree(**i) == degree)
            .map(|(i, q)| (*i, q.clone()))
            .collect();
        Self::from_coeffs(&self.ring, c)
    }

    /// True for zero and for elements supported in the single given degree.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.coeffs.keys().all(|i| self.ring.degree(*i) == degree)
    }

    fn check_ring(&self, other: &Self) -> Result<(), CharClassError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(CharClassError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CharClassError> {
        self.check_ring(other)?;
        let mut c = self.coeffs.clone();
        axpy(&mut c, &BigRational::one(), &other.coeffs);
        Ok(Self::from_coeffs(&self.ring, c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CharClassError> {
        self.check_ring(other)?;
        let mut c = self.coeffs.clone();
        axpy(&mut c, &-BigRational::one(), &other.coeffs);
        Ok(Self::from_coeffs(&self.ring, c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CharClassError> {
        self.check_ring(other)?;
        Ok(Self::from_coeffs(&self.ring, self.ring.mul_coeffs(&self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut c = Coeffs::new();
        axpy(&mut c, q, &self.coeffs);
        Self::from_coeffs(&self.ring, c)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// `Σ_m a_m u^m` for `u = self` with zero constant term; the sum is
    /// finite since such `u` is nilpotent.
    pub fn compose_series(&self, series: impl Fn(usize) -> BigRational) -> Result<Self, CharClassError> {
        if !self.constant_term().is_zero() {
            return Err(CharClassError::Parse(format!(
                "series needs a class without degree-0 part, got {self}"
            )));
        }
        let mut acc = Self::constant(&self.ring, series(0));
        let mut power = Self::one(&self.ring);
        for m in 1..=self.ring.top_degree() {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power.scale(&series(m)))?;
        }
        Ok(acc)
    }

    /// `⟨x, [Y]⟩`: coefficient of the top basis element times the
    /// fundamental class sign.
    pub fn fundamental_class(&self) -> BigRational {
        let c = self
            .coeffs
            .get(&self.ring.top_index())
            .cloned()
            .unwrap_or_else(BigRational::zero);
        if self.ring.top_sign() < 0 {
            -c
        } else {
            c
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (label, q) in self.terms() {
            m.insert(label.to_string(), Value::String(q.to_string()));
        }
        Value::Object(m)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (label, q)) in self.terms().enumerate() {
            let neg = q.is_negative();
            let a = q.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if label == super::ring::UNIT_LABEL {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{a}*{label}")?;
            }
        }
        Ok(())
    }
}
