//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::GroupError;
use crate::linalg::{invariant_factors, IntegerMatrix};

/// `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k` with `1 < t₁ | t₂ | … | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Normalizes an arbitrary list of cyclic orders into invariant factors.
    /// An order of 0 stands for a copy of `Z`; orders of 1 vanish.
    pub fn from_cyclic_orders<I>(rank: usize, orders: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigUint>,
    {
        let mut rank = rank;
        let mut finite = Vec::new();
        for o in orders {
            let o: BigUint = o.into();
            if o.is_zero() {
                rank += 1;
            } else if !o.is_one() {
                finite.push(BigInt::from(o));
            }
        }
        let k = finite.len();
        let diag = IntegerMatrix::diagonal(k, k, &finite);
        let torsion = invariant_factors(&diag)
            .into_iter()
            .filter_map(|d| d.to_biguint())
            .filter(|d| !d.is_one())
            .collect();
        Self { rank, torsion }
    }

    /// Group presented by the cokernel of an integer relation matrix whose
    /// columns are relations among `rows` generators.
    pub fn cokernel(relations: &IntegerMatrix) -> Self {
        let d = invariant_factors(relations);
        let nonzero = d.iter().filter(|x| !x.is_zero()).count();
        let free = relations.rows() - nonzero;
        Self::from_cyclic_orders(free, d.into_iter().filter_map(|x| x.to_biguint()).filter(|x| !x.is_zero()))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        Self::from_cyclic_orders(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    pub fn torsion_subgroup(&self) -> AbelianGroup {
        Self {
            rank: 0,
            torsion: self.torsion.clone(),
        }
    }

    pub fn with_rank(&self, rank: usize) -> AbelianGroup {
        Self {
            rank,
            torsion: self.torsion.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let torsion: Vec<Value> = self
            .torsion
            .iter()
            .map(|t| crate::linalg::bigint_to_json(&BigInt::from(t.clone())))
            .collect();
        json!({ "rank": self.rank, "torsion": torsion })
    }
}

impl fmt::Display for AbelianGroup {
    /// `0`, `Z`, `Z^3`, `Z^2 + Z/2 + Z/4`, `Z/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for AbelianGroup {
    type Err = GroupError;

    /// Accepts the display form (`Z^2 + Z/2`) or the key form
    /// `rank=R[,torsion=D1:D2:...]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with("rank=") {
            return parse_key_form(s);
        }
        let bad = || GroupError::Parse(s.to_string());
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut rank = 0usize;
        let mut orders: Vec<BigUint> = Vec::new();
        for part in s.split('+') {
            let part: String = part.chars().filter(|c| !c.is_whitespace()).collect();
            if part == "Z" {
                rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                rank += r.parse::<usize>().map_err(|_| bad())?;
            } else if let Some(d) = part.strip_prefix("Z/") {
                let d: BigUint = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                orders.push(d);
            } else if part == "0" {
                continue;
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_cyclic_orders(rank, orders))
    }
}

fn parse_key_form(s: &str) -> Result<AbelianGroup, GroupError> {
    let bad = || GroupError::Parse(s.to_string());
    let mut rank = None;
    let mut orders: Vec<BigUint> = Vec::new();
    for item in s.split(',') {
        let (key, value) = item.split_once('=').ok_or_else(bad)?;
        match key.trim() {
            "rank" => rank = Some(value.trim().parse::<usize>().map_err(|_| bad())?),
            "torsion" => {
                for d in value.split(':').filter(|d| !d.trim().is_empty()) {
                    let d: BigUint = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    orders.push(d);
                }
            }
            _ => return Err(bad()),
        }
    }
    Ok(AbelianGroup::from_cyclic_orders(rank.ok_or_else(bad)?, orders))
}
