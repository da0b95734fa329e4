//! E¹ and E² pages of the spectral sequence of the composition series
//! `I₀ ⊃ I₁ ⊃ … ⊃ I_n`, where `I_l / I_{l+1}` is a sum over the faces of
//! dimension `l` of algebras `C₀(ℝ^{n-l}, 𝒦)`.

use log::debug;

use crate::complex::CornerComplex;
use crate::error::{ComplexError, KTheoryError};
use crate::group::AbelianGroup;
use crate::linalg::{invariant_factors, IntegerMatrix};
use num_traits::Zero;

/// `K_i(C₀(ℝ^j, 𝒦))`: `Z` when `i + j` is even, else `0`. Degrees are taken
/// mod 2.
pub fn bott_k_group(i: i64, j: usize) -> AbelianGroup {
    if (i.rem_euclid(2) as usize + j) % 2 == 0 {
        AbelianGroup::free(1)
    } else {
        AbelianGroup::trivial()
    }
}

fn parity(i: i64) -> usize {
    i.rem_euclid(2) as usize
}

/// One E¹ slot: the group and, when nonzero, the face ids of its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Slot {
    pub group: AbelianGroup,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Page {
    pub complex: String,
    pub n: usize,
    /// `slots[l][i]` for `0 ≤ l ≤ n`, `i ∈ {0, 1}`.
    pub slots: Vec<[E1Slot; 2]>,
}

impl E1Page {
    pub fn slot(&self, l: usize, i: i64) -> &E1Slot {
        &self.slots[l][parity(i)]
    }

    pub fn total_rank(&self) -> usize {
        self.slots
            .iter()
            .flat_map(|s| s.iter())
            .map(|s| s.group.rank())
            .sum()
    }
}

pub fn e1_page(c: &CornerComplex) -> Result<E1Page, KTheoryError> {
    c.require_valid()?;
    let n = c.dim();
    let slots = (0..=n)
        .map(|l| {
            [0i64, 1].map(|i| {
                // Morita invariance: each face of dimension l contributes K_i(C₀(ℝ^{n-l}))
                if bott_k_group(i, n - l).is_trivial() {
                    E1Slot {
                        group: AbelianGroup::trivial(),
                        generators: Vec::new(),
                    }
                } else {
                    let generators: Vec<String> = c.faces_of_dim(l).map(|f| f.id.clone()).collect();
                    E1Slot {
                        group: AbelianGroup::free(generators.len()),
                        generators,
                    }
                }
            })
        })
        .collect();
    Ok(E1Page {
        complex: c.name().to_string(),
        n,
        slots,
    })
}

/// `d₁: E¹_{l-1, i-1} → E¹_{l, i}`. The incidence matrix when `n - l + i` is
/// even. Otherwise both slots vanish and the map is the empty 0×0 matrix.
pub fn d1_differential(c: &CornerComplex, l: usize, i: i64) -> Result<IntegerMatrix, KTheoryError> {
    let n = c.dim();
    if l == 0 || l > n {
        return Err(ComplexError::LevelOutOfRange { l, top: n }.into());
    }
    if (n - l + parity(i)) % 2 == 0 {
        Ok(c.incidence_matrix(l)?)
    } else {
        Ok(IntegerMatrix::zeros(0, 0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Page {
    pub complex: String,
    pub n: usize,
    /// `groups[l][i]`.
    pub groups: Vec<[AbelianGroup; 2]>,
}

impl E2Page {
    pub fn group(&self, l: usize, i: i64) -> &AbelianGroup {
        &self.groups[l][parity(i)]
    }

    pub fn total_rank(&self) -> usize {
        self.groups.iter().flatten().map(AbelianGroup::rank).sum()
    }

    /// Nonzero slots as `(l, i, group)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, &AbelianGroup)> {
        let mut out = Vec::new();
        for (l, row) in self.groups.iter().enumerate() {
            for (i, g) in row.iter().enumerate() {
                if !g.is_trivial() {
                    out.push((l, i, g));
                }
            }
        }
        out
    }
}

/// Homology of E¹ under d₁: `E²_{l,i} = ker(d₁ out of (l,i)) / im(d₁ into (l,i))`.
///
/// The true K-theory of `I₀` may differ by higher differentials; only the E²
/// page is computed.
pub fn e2_page(c: &CornerComplex) -> Result<E2Page, KTheoryError> {
    let e1 = e1_page(c)?;
    let n = c.dim();
    // invariant factors of each nonzero d₁, keyed by target level l
    let factors: Vec<Option<Vec<num_bigint::BigInt>>> = (0..=n)
        .map(|l| {
            if l == 0 {
                None
            } else {
                Some(invariant_factors(&c.incidence_matrix(l).expect("level in range")))
            }
        })
        .collect();
    let rank_of = |f: &Option<Vec<num_bigint::BigInt>>| {
        f.as_ref()
            .map_or(0, |d| d.iter().filter(|x| !x.is_zero()).count())
    };
    let mut groups = Vec::with_capacity(n + 1);
    for l in 0..=n {
        let row = [0i64, 1].map(|i| {
            let slot = &e1.slot(l, i).group;
            if slot.is_trivial() {
                return AbelianGroup::trivial();
            }
            // both neighbours share the parity of (l, i), so they are nonzero
            // exactly when the incidence matrix is the differential
            let out_rank = if l < n { rank_of(&factors[l + 1]) } else { 0 };
            let (in_rank, torsion) = match &factors[l] {
                Some(d) if l > 0 => (
                    rank_of(&factors[l]),
                    d.iter()
                        .filter(|x| !x.is_zero())
                        .filter_map(|x| x.to_biguint())
                        .collect::<Vec<_>>(),
                ),
                _ => (0, Vec::new()),
            };
            AbelianGroup::from_cyclic_orders(slot.rank() - out_rank - in_rank, torsion)
        });
        groups.push(row);
    }
    debug!("e2 page of {} computed", c.name());
    Ok(E2Page {
        complex: c.name().to_string(),
        n,
        groups,
    })
}
