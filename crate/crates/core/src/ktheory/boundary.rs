//! Closed-form answers for manifolds with boundary and for families of them.

use std::fmt;

use crate::error::KTheoryError;
use crate::group::AbelianGroup;
use crate::linalg::IntegerMatrix;

/// `K₁(Q_M)` for a compact manifold with boundary, given `K₁(C₀(ᵇS*M))`.
///
/// The sequence `0 → Z → K₁(Q_M) → K₁(C₀(ᵇS*M)) → 0` is split by the index,
/// so the answer is `Z ⊕ input`.
pub fn boundary_case_k1_qm(k1_sstar: &AbelianGroup) -> AbelianGroup {
    AbelianGroup::free(1).direct_sum(k1_sstar)
}

/// Input for [`family_k_groups`]: `K⁰, K¹` of the fibrewise b-cosphere
/// bundle `ᵇS*_f Z`, and optionally `K⁰, K¹` of the base `X`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyInput {
    pub sstar: [Option<AbelianGroup>; 2],
    pub base: Option<[AbelianGroup; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientKGroup {
    /// `K^i(ℝ × X) = K^{i+1}(X)`.
    pub suspension: AbelianGroup,
    pub symbol: AbelianGroup,
    pub rank: usize,
    /// Present when `K^i(ᵇS*_f Z)` is free and the sequence must split.
    pub group: Option<AbelianGroup>,
    /// `Ind ∘ j_Z` on the free part of the suspension summand.
    pub index_on_suspension: IntegerMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    /// `K_i(𝔄_Z) ≅ K^i(ᵇS*_f Z)` through the principal symbol.
    pub algebra: [AbelianGroup; 2],
    pub quotient: Option<[QuotientKGroup; 2]>,
}

/// K-groups of the norm closure `𝔄_Z` of a family of b-operators on a
/// fibration with boundary, and of `Q_Z = 𝔄_Z / C₀(X, 𝒦)` when the base
/// K-theory is known. `0 → K^i(ℝ×X) → K_i(Q_Z) → K^i(ᵇS*_f Z) → 0` is exact;
/// extensions are only resolved when the right end is free.
pub fn family_k_groups(input: &FamilyInput) -> Result<FamilyReport, KTheoryError> {
    let [Some(s0), Some(s1)] = &input.sstar else {
        return Err(KTheoryError::MissingInput(
            "both K^0 and K^1 of the fibrewise b-cosphere bundle are required".into(),
        ));
    };
    let algebra = [s0.clone(), s1.clone()];
    let quotient = input.base.as_ref().map(|base| {
        std::array::from_fn(|i| {
            let suspension = base[(i + 1) % 2].clone();
            let symbol = algebra[i].clone();
            let rank = suspension.rank() + symbol.rank();
            let group = symbol.is_free().then(|| suspension.direct_sum(&symbol));
            QuotientKGroup {
                index_on_suspension: IntegerMatrix::identity(suspension.rank()),
                suspension,
                symbol,
                rank,
                group,
            }
        })
    });
    Ok(FamilyReport { algebra, quotient })
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.algebra.iter().enumerate() {
            writeln!(f, "K{i}(A_Z) = {g}")?;
        }
        if let Some(q) = &self.quotient {
            for (i, g) in q.iter().enumerate() {
                match &g.group {
                    Some(full) => writeln!(f, "K{i}(Q_Z) = {full}")?,
                    None => writeln!(
                        f,
                        "K{i}(Q_Z): rank {}, extension of {} by {} ambiguous",
                        g.rank, g.symbol, g.suspension
                    )?,
                }
            }
        }
        Ok(())
    }
}
