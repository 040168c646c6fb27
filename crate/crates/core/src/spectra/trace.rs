use num_bigint::BigInt;
use num_traits::Zero;

use crate::crystal::SignedPermutation;
use crate::error::{Error, Result};

/// Largest dimension accepted by [`trace_p_oracle`].
pub const ORACLE_MAX_DIM: usize = 12;

/// Trace of `B` on the p-th exterior power: the `t^p` coefficient of `det(Id + tB)`.
pub fn trace_p(b: &SignedPermutation, p: usize) -> BigInt {
    b.exterior_char_poly()
        .into_iter()
        .nth(p)
        .unwrap_or_else(BigInt::zero)
}

/// Same trace computed from the action of `B` on the basis `e_{i₁}∧…∧e_{i_p}`.
pub fn trace_p_oracle(b: &SignedPermutation, p: usize) -> Result<BigInt> {
    let n = b.dim();
    if n > ORACLE_MAX_DIM {
        return Err(Error::OutOfRange {
            what: "wedge-basis oracle dimension",
            detail: format!("n = {n} > {ORACLE_MAX_DIM}"),
        });
    }
    if p > n {
        return Ok(BigInt::zero());
    }
    let mut total: i64 = 0;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let image: Vec<usize> = subset.iter().map(|&i| b.perm()[i]).collect();
        let image_mask = image.iter().fold(0u32, |m, &i| m | (1 << i));
        if image_mask != mask {
            continue;
        }
        // reordering the wedge factors costs the sign of the sorting permutation
        let inversions = (0..p)
            .flat_map(|i| (i + 1..p).map(move |j| (i, j)))
            .filter(|&(i, j)| image[i] > image[j])
            .count();
        let sign: i64 = subset.iter().map(|&i| b.signs()[i] as i64).product();
        total += if inversions % 2 == 0 { sign } else { -sign };
    }
    Ok(BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixed_space_dim;
    use crate::numeric::binomial;
    use crate::spectra::krawtchouk;
    use proptest::prelude::*;

    fn sp(perm: &[usize], signs: &[i8]) -> SignedPermutation {
        SignedPermutation::from_one_based(perm, signs).unwrap()
    }

    #[test]
    fn swap_block_trace() {
        let b = sp(&[2, 1, 3], &[1, 1, 1]);
        assert_eq!(trace_p(&b, 1), BigInt::from(1));
        assert_eq!(trace_p(&b, 1), krawtchouk(3, 1, 1).unwrap());
    }

    #[test]
    fn identity_traces_are_binomials() {
        let id = SignedPermutation::identity(6);
        for p in 0..=6 {
            assert_eq!(trace_p(&id, p), BigInt::from(binomial(6, p as i64)));
        }
        assert_eq!(trace_p(&id, 7), BigInt::zero());
    }

    #[test]
    fn quarter_turn_block_trace() {
        // J̃ ⊕ diag(1,−1,−1,1): the invariant subspace of Λ² has dimension 3
        // but the trace itself is −1 (wedge-basis count: +1 from e1∧e2, −2 from the rest)
        let b = sp(&[2, 1, 3, 4, 5, 6], &[-1, 1, 1, -1, -1, 1]);
        assert_eq!(trace_p(&b, 2), BigInt::from(-1));
        assert_eq!(trace_p_oracle(&b, 2).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(trace_p_oracle(&SignedPermutation::identity(4), 2).unwrap(), BigInt::from(6));
        let d = SignedPermutation::diagonal(&[-1, -1, 1]).unwrap();
        assert_eq!(trace_p_oracle(&d, 2).unwrap(), BigInt::from(-1));
        let b = sp(&[2, 1, 3, 4], &[1, 1, -1, 1]);
        assert_eq!(trace_p_oracle(&b, 2).unwrap(), BigInt::from(-2));
        assert!(trace_p_oracle(&SignedPermutation::identity(13), 1).is_err());
    }

    fn signed_permutation() -> impl Strategy<Value = SignedPermutation> {
        (1usize..=8).prop_flat_map(|n| {
            (
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(prop_oneof![Just(-1i8), Just(1i8)], n),
            )
                .prop_map(|(p, s)| SignedPermutation::new(p, s).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn char_poly_matches_wedge_basis(b in signed_permutation()) {
            for p in 0..=b.dim() {
                prop_assert_eq!(trace_p(&b, p), trace_p_oracle(&b, p).unwrap());
            }
        }

        #[test]
        fn involution_traces_are_krawtchouk(b in signed_permutation()) {
            prop_assume!(b.order() <= 2);
            let n = b.dim() as u64;
            let x = n - fixed_space_dim(&b) as u64;
            for p in 0..=n {
                prop_assert_eq!(trace_p(&b, p as usize), krawtchouk(n, p, x).unwrap());
            }
        }
    }
}
