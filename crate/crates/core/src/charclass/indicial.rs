use crate::error::KTheoryError;
use crate::group::AbelianGroup;

/// `(K_{q+1}(𝔄_F), K_q(𝔄_F))` from `(K_{q+1}, K_q)` of the b-cosphere bundle
/// over the face: the first is the kernel of the surjection onto ℤ given by
/// the index pairing, the second is unchanged.
///
/// A surjection onto ℤ splits, so the kernel has rank one less and the same
/// torsion. Without surjectivity the kernel is not determined and the call
/// is refused.
pub fn higher_indicial_k_groups(
    k_y: (&AbelianGroup, &AbelianGroup),
    pairing_surjective: bool,
    q: i64,
) -> Result<(AbelianGroup, AbelianGroup), KTheoryError> {
    let (upper, lower) = k_y;
    if !pairing_surjective {
        return Err(KTheoryError::NotSurjective);
    }
    if upper.rank() == 0 {
        return Err(KTheoryError::ImpossibleSurjection(format!("K_{}(S*M|F) = {upper}", q + 1)));
    }
    Ok((upper.with_rank(upper.rank() - 1), lower.clone()))
}
