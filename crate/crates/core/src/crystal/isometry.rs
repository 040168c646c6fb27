use std::fmt;

use crate::crystal::SignedPermutation;
use crate::error::{Error, Result};
use crate::numeric::Rational4;

/// The isometry `B·L_b : x ↦ B(x + b)` with `b` stored reduced mod ℤⁿ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsometryElement {
    linear: SignedPermutation,
    translation: Vec<Rational4>,
}

impl IsometryElement {
    pub fn new(linear: SignedPermutation, translation: Vec<Rational4>) -> Result<Self> {
        if linear.dim() != translation.len() {
            return Err(Error::DimensionMismatch {
                expected: linear.dim(),
                found: translation.len(),
            });
        }
        let translation = translation.into_iter().map(Rational4::reduce_mod1).collect();
        Ok(IsometryElement {
            linear,
            translation,
        })
    }

    pub fn identity(n: usize) -> Self {
        IsometryElement {
            linear: SignedPermutation::identity(n),
            translation: vec![Rational4::ZERO; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn linear(&self) -> &SignedPermutation {
        &self.linear
    }

    pub fn translation(&self) -> &[Rational4] {
        &self.translation
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(|t| *t == Rational4::ZERO)
    }

    /// `(B_a L_{b_a})(B_b L_{b_b}) = B_a B_b · L_{B_b⁻¹ b_a + b_b}`, reduced mod ℤⁿ.
    pub fn compose(&self, other: &IsometryElement) -> Result<Self> {
        let linear = self.linear.compose(&other.linear)?;
        let pulled = other.linear.inverse().apply_rational(&self.translation);
        let translation = pulled
            .into_iter()
            .zip(&other.translation)
            .map(|(a, &b)| (a + b).reduce_mod1())
            .collect();
        Ok(IsometryElement {
            linear,
            translation,
        })
    }

    /// `e^{-2πi v·b}` is `quarter_root_power(character_quarters(v))`.
    pub fn character_quarters(&self, v: &[i64]) -> i64 {
        v.iter()
            .zip(&self.translation)
            .map(|(&x, t)| x * t.quarters())
            .sum()
    }
}

impl fmt::Display for IsometryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + (", self.linear)?;
        for (i, t) in self.translation.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}
