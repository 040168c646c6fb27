use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational4;

/// An orthogonal matrix stabilising ℤⁿ: `B e_j = signs[j] · e_{perm[j]}`.
///
/// Indices are 0-based internally; JSON and display use 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

/// One cycle of the underlying permutation.
///
/// `weights[k]` is the coefficient of `e_{indices[k]}` in `Σ_{i<len} Bⁱ e_{indices[0]}`;
/// when `sign` is `+1` that sum spans the fixed line of the block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub indices: Vec<usize>,
    pub weights: Vec<i8>,
    pub sign: i8,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        if n == 0 {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection of 1..{n}",
                    perm.iter().map(|p| p + 1).collect::<Vec<_>>()
                )));
            }
            seen[p] = true;
        }
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(Error::InvalidPermutation(format!("sign {s} is not ±1")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn from_one_based(perm: &[usize], signs: &[i8]) -> Result<Self> {
        let perm = perm
            .iter()
            .map(|&p| {
                p.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("positions are 1-based".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(perm, signs.to_vec())
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn diagonal(signs: &[i8]) -> Result<Self> {
        Self::new((0..signs.len()).collect(), signs.to_vec())
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SignedPermutation) -> Self {
        let shift = self.dim();
        let mut perm = self.perm.clone();
        perm.extend(other.perm.iter().map(|p| p + shift));
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        SignedPermutation { perm, signs }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn perm_one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (j, &x) in v.iter().enumerate() {
            out[self.perm[j]] = self.signs[j] as i64 * x;
        }
        out
    }

    pub fn apply_rational(&self, v: &[Rational4]) -> Vec<Rational4> {
        let mut out = vec![Rational4::ZERO; v.len()];
        for (j, &x) in v.iter().enumerate() {
            out[self.perm[j]] = x.scale(self.signs[j] as i64);
        }
        out
    }

    /// `Bv == v` without allocating.
    pub fn fixes(&self, v: &[i64]) -> bool {
        v.iter()
            .enumerate()
            .all(|(j, &x)| v[self.perm[j]] == self.signs[j] as i64 * x)
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = other
            .perm
            .iter()
            .zip(&other.signs)
            .map(|(&p, &s)| s * self.signs[p])
            .collect();
        Ok(SignedPermutation { perm, signs })
    }

    pub fn inverse(&self) -> Self {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            signs[self.perm[j]] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    pub fn determinant(&self) -> i8 {
        let parity: usize = self.cycles().iter().map(|c| c.indices.len() - 1).sum();
        let perm_sign = if parity % 2 == 0 { 1 } else { -1 };
        perm_sign * self.signs.iter().product::<i8>()
    }

    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.dim();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut indices = Vec::new();
            let mut weights = Vec::new();
            let mut j = start;
            let mut w: i8 = 1;
            loop {
                visited[j] = true;
                indices.push(j);
                weights.push(w);
                w *= self.signs[j];
                j = self.perm[j];
                if j == start {
                    break;
                }
            }
            // after a full turn `w` is the product of the signs along the cycle
            out.push(Cycle {
                indices,
                weights,
                sign: w,
            });
        }
        out
    }

    /// Multiplicative order of the matrix.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1usize, |acc, c| {
            let len = if c.sign == 1 {
                c.indices.len()
            } else {
                2 * c.indices.len()
            };
            acc.lcm(&len)
        })
    }

    /// `dim ker(B − Id)`: one fixed line per cycle whose sign product is `+1`.
    pub fn fixed_space_dim(&self) -> usize {
        self.cycles().iter().filter(|c| c.sign == 1).count()
    }

    /// Coefficients of `det(Id + tB)`, lowest degree first.
    ///
    /// A cycle of length `c` with sign product `ε` contributes the factor
    /// `1 − ε(−t)^c`; the coefficient of `t^p` is the trace of `B` on the
    /// p-th exterior power.
    pub fn exterior_char_poly(&self) -> Vec<BigInt> {
        let n = self.dim();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        let mut degree = 0;
        for c in self.cycles() {
            let len = c.indices.len();
            let odd = len % 2 == 1;
            // −ε(−1)^c
            let top: i64 = if (c.sign == 1) == odd { 1 } else { -1 };
            for d in (0..=degree).rev() {
                if coeffs[d].is_zero() {
                    continue;
                }
                let term = &coeffs[d] * top;
                coeffs[d + len] += term;
            }
            degree += len;
        }
        coeffs
    }

    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut m = vec![vec![0; n]; n];
        for j in 0..n {
            m[self.perm[j]][j] = self.signs[j] as i64;
        }
        m
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, s)) in self.perm.iter().zip(&self.signs).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}{}", if *s < 0 { "-" } else { "" }, p + 1)?;
        }
        Ok(())
    }
}
