use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::element::{same_ring, RingElement};
use super::ring::GradedRing;
use crate::error::CharClassError;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).map(BigInt::from).product())
}

/// Complex vector bundle recorded by its rank and Chern classes `c₁..c_r`,
/// `c_i` homogeneous of degree `2i` (zero allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleData {
    rank: usize,
    chern: Vec<RingElement>,
    ring: Arc<GradedRing>,
}

impl BundleData {
    /// Missing trailing classes are zero.
    pub fn new(ring: &Arc<GradedRing>, rank: usize, chern: Vec<RingElement>) -> Result<Self, CharClassError> {
        if chern.len() > rank {
            return Err(CharClassError::TooManyClasses {
                rank,
                given: chern.len(),
            });
        }
        let mut classes = Vec::with_capacity(rank);
        for (k, c) in chern.into_iter().enumerate() {
            if !same_ring(c.ring(), ring) {
                return Err(CharClassError::RingMismatch);
            }
            let expected = 2 * (k + 1);
            if !c.is_homogeneous_of(expected) {
                return Err(CharClassError::ChernDegree {
                    index: k + 1,
                    got: c.to_string(),
                    expected,
                });
            }
            classes.push(c);
        }
        classes.resize_with(rank, || RingElement::zero(ring));
        Ok(Self {
            rank,
            chern: classes,
            ring: ring.clone(),
        })
    }

    pub fn trivial(ring: &Arc<GradedRing>, rank: usize) -> Self {
        Self::new(ring, rank, Vec::new()).expect("no classes")
    }

    /// Line bundle with first Chern class `x` (of degree 2).
    pub fn line(x: RingElement) -> Result<Self, CharClassError> {
        let ring = x.ring().clone();
        Self::new(&ring, 1, vec![x])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    /// `c_k` for `k ≥ 0`; `c₀ = 1` and `c_k = 0` above the rank.
    pub fn chern_class(&self, k: usize) -> RingElement {
        match k {
            0 => RingElement::one(&self.ring),
            _ if k <= self.rank => self.chern[k - 1].clone(),
            _ => RingElement::zero(&self.ring),
        }
    }

    pub fn chern_classes(&self) -> &[RingElement] {
        &self.chern
    }

    pub fn total_chern_class(&self) -> RingElement {
        (0..=self.rank).fold(RingElement::zero(&self.ring), |acc, k| {
            acc.add(&self.chern_class(k)).expect("same ring")
        })
    }

    /// `E ⊕ F`, whose total Chern class is `c(E)·c(F)`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, CharClassError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(CharClassError::RingMismatch);
        }
        let total = self.total_chern_class().mul(&other.total_chern_class())?;
        let rank = self.rank + other.rank;
        let chern = (1..=rank).map(|k| total.component(2 * k)).collect();
        Self::new(&self.ring, rank, chern)
    }

    /// `E ⊗ L` for a line bundle `L` with `c₁(L) = y`:
    /// `c_k(E⊗L) = Σ_{i≤k} C(r−i, k−i) c_i(E) y^{k−i}`.
    pub fn tensor_line(&self, line: &Self) -> Result<Self, CharClassError> {
        if !same_ring(&self.ring, &line.ring) {
            return Err(CharClassError::RingMismatch);
        }
        if line.rank != 1 {
            return Err(CharClassError::Parse(format!("tensor_line needs a line bundle, got rank {}", line.rank)));
        }
        let y = line.chern_class(1);
        let r = self.rank;
        let mut chern = Vec::with_capacity(r);
        for k in 1..=r {
            let mut ck = RingElement::zero(&self.ring);
            for i in 0..=k {
                let b = BigRational::from_integer(binomial(BigInt::from(r - i), BigInt::from(k - i)));
                let term = self.chern_class(i).mul(&y.pow(k - i))?.scale(&b);
                ck = ck.add(&term)?;
            }
            chern.push(ck);
        }
        Self::new(&self.ring, r, chern)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "chern": self.chern.iter().map(RingElement::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for BundleData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}, c = {}", self.rank, self.total_chern_class())
    }
}

fn max_power(ring: &GradedRing) -> usize {
    ring.top_degree() / 2
}

/// Power sums `p_k = Σ x_i^k` of the Chern roots for `1 ≤ k ≤ top/2`, by
/// Newton's identities `p_k = Σ_{i<k} (−1)^{i−1} c_i p_{k−i} + (−1)^{k−1} k c_k`.
pub fn power_sums(b: &BundleData) -> Vec<RingElement> {
    let ring = b.ring();
    let mut p: Vec<RingElement> = vec![RingElement::zero(ring)];
    for k in 1..=max_power(ring) {
        let mut pk = b.chern_class(k).scale(&int(if k % 2 == 1 { k as i64 } else { -(k as i64) }));
        for i in 1..k {
            let sign = if i % 2 == 1 { int(1) } else { int(-1) };
            let term = b.chern_class(i).mul(&p[k - i]).expect("same ring").scale(&sign);
            pk = pk.add(&term).expect("same ring");
        }
        p.push(pk);
    }
    p
}

/// `ch(E) = r + Σ_k p_k / k!`.
pub fn chern_character(b: &BundleData) -> RingElement {
    let ring = b.ring();
    let mut ch = RingElement::constant(ring, int(b.rank() as i64));
    for (k, pk) in power_sums(b).iter().enumerate().skip(1) {
        ch = ch.add(&pk.scale(&factorial(k).recip())).expect("same ring");
    }
    ch
}

/// Bernoulli numbers `B_0..B_n` with `B_1 = −1/2`, from
/// `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut s = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += BigRational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j))) * bj;
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Coefficients of `x / (1 − e^{−x}) = Σ (−1)^n B_n x^n / n!` up to `x^n`.
pub fn todd_series(n: usize) -> Vec<BigRational> {
    bernoulli_numbers(n)
        .into_iter()
        .enumerate()
        .map(|(k, bk)| {
            let s = bk / factorial(k);
            if k % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect()
}

/// Coefficients of `log f` for a power series `f` with `f₀ = 1`, from
/// `k l_k = k f_k − Σ_{j<k} j l_j f_{k−j}`.
fn log_series(f: &[BigRational]) -> Vec<BigRational> {
    let mut l = vec![BigRational::zero(); f.len()];
    for k in 1..f.len() {
        let mut s = int(k as i64) * &f[k];
        for j in 1..k {
            s -= int(j as i64) * &l[j] * &f[k - j];
        }
        l[k] = s / int(k as i64);
    }
    l
}

/// `Td(E) = Π x_i/(1 − e^{−x_i}) = exp(Σ_k a_k p_k)` where
/// `Σ a_k x^k = log(x/(1 − e^{−x}))`.
pub fn todd_class(b: &BundleData) -> RingElement {
    let ring = b.ring();
    let a = log_series(&todd_series(max_power(ring)));
    let mut s = RingElement::zero(ring);
    for (k, pk) in power_sums(b).iter().enumerate().skip(1) {
        s = s.add(&pk.scale(&a[k])).expect("same ring");
    }
    s.compose_series(|m| factorial(m).recip()).expect("no constant term")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingResult {
    pub value: BigRational,
    pub integral: bool,
}

impl PairingResult {
    pub fn warning(&self) -> Option<String> {
        (!self.integral).then(|| format!("pairing {} is not an integer", self.value))
    }
}

/// `(−1)^n ⟨a_ch · todd, [Y]⟩`.
pub fn index_pairing(a_ch: &RingElement, todd: &RingElement, n: usize) -> Result<PairingResult, CharClassError> {
    let v = a_ch.mul(todd)?.fundamental_class();
    let value = if n % 2 == 1 { -v } else { v };
    Ok(PairingResult {
        integral: value.is_integer(),
        value,
    })
}
