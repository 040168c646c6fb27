use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{BieberbachGroup, IsometryElement, SignedPermutation};
use crate::error::{Error, Result};
use crate::numeric::Rational4;

/// Largest `n` enumerated by [`kn_family`] unless the caller asks otherwise.
pub const KN_FAMILY_CAP: usize = 8;

/// An `n × n` array over `{0, ½}` whose column `j` is the translation of the
/// `j`-th generator mod ℤⁿ; the last column belongs to the product of all
/// generators.
///
/// `half[i][j]` is true when entry `(i+1, j+1)` equals ½.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GhwArray {
    half: Vec<Vec<bool>>,
}

impl GhwArray {
    /// Validates the forced entries and the even parity of every row.
    pub fn new(half: Vec<Vec<bool>>) -> Result<Self> {
        let n = half.len();
        if n < 2 {
            return Err(Error::InvalidArray(format!("n = {n} < 2")));
        }
        if let Some(row) = half.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidArray(format!("row of length {} in a {n} x {n} array", row.len())));
        }
        let entry = |i: usize, j: usize| if half[i][j] { "1/2" } else { "0" };
        for i in 0..n {
            for j in 0..n {
                let forced = if i == j + 1 || (i == n - 1 && j == n - 1) {
                    Some(true)
                } else if i == j || i > j + 1 {
                    Some(false)
                } else {
                    None
                };
                if let Some(value) = forced {
                    if half[i][j] != value {
                        return Err(Error::InvalidArray(format!(
                            "entry ({}, {}) is {} but must be {}",
                            i + 1,
                            j + 1,
                            entry(i, j),
                            if value { "1/2" } else { "0" }
                        )));
                    }
                }
            }
            if half[i].iter().filter(|&&h| h).count() % 2 != 0 {
                return Err(Error::InvalidArray(format!("row {} has an odd number of 1/2 entries", i + 1)));
            }
        }
        Ok(GhwArray { half })
    }

    pub fn from_rationals(entries: &[Vec<Rational4>]) -> Result<Self> {
        let half = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| match x.reduce_mod1().quarters() {
                        0 => Ok(false),
                        2 => Ok(true),
                        _ => Err(Error::InvalidArray(format!("entry {x} is not 0 or 1/2"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::new(half)
    }

    /// Positions `(i, j)` (0-based, `i < j < n−1`) of the free entries, row-major.
    pub fn free_positions(n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..n.saturating_sub(1) {
            for j in i + 1..n - 1 {
                out.push((i, j));
            }
        }
        out
    }

    pub fn free_count(n: usize) -> usize {
        (n.saturating_sub(1)) * (n.saturating_sub(2)) / 2
    }

    /// The array whose free entries are the bits of `bits`, the first free
    /// position being the most significant bit.
    pub fn from_free_bits(n: usize, bits: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArray(format!("n = {n} < 2")));
        }
        let positions = Self::free_positions(n);
        if positions.len() > 63 || bits >> positions.len() != 0 {
            return Err(Error::InvalidArray(format!(
                "{bits} does not fit in {} free entries",
                positions.len()
            )));
        }
        let mut half = vec![vec![false; n]; n];
        for i in 1..n {
            half[i][i - 1] = true;
        }
        for (k, &(i, j)) in positions.iter().enumerate() {
            half[i][j] = bits >> (positions.len() - 1 - k) & 1 == 1;
        }
        for row in half.iter_mut() {
            let odd = row[..n - 1].iter().filter(|&&h| h).count() % 2 == 1;
            row[n - 1] = odd;
        }
        Self::new(half)
    }

    pub fn n(&self) -> usize {
        self.half.len()
    }

    pub fn is_half(&self, i: usize, j: usize) -> bool {
        self.half[i][j]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.half
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational4 {
        if self.half[i][j] {
            Rational4::HALF
        } else {
            Rational4::ZERO
        }
    }

    pub fn column(&self, j: usize) -> Vec<Rational4> {
        (0..self.n()).map(|i| self.entry(i, j)).collect()
    }

    /// Inverse of [`GhwArray::from_free_bits`].
    pub fn free_bits(&self) -> u64 {
        Self::free_positions(self.n())
            .iter()
            .fold(0u64, |acc, &(i, j)| acc << 1 | self.half[i][j] as u64)
    }
}

impl fmt::Display for GhwArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.half.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<&str> = row.iter().map(|&h| if h { "1/2" } else { "0" }).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for GhwArray {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Rational4>> = (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.entry(i, j)).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// The group generated by `C_i L_{c_i}`, `1 ≤ i ≤ n−1`, where `C_i` negates
/// `e_i` and `c_i` is column `i` of the array.
pub fn kn_group_from_array(array: &GhwArray) -> Result<BieberbachGroup> {
    let n = array.n();
    let generators = (0..n - 1)
        .map(|i| {
            let mut signs = vec![1i8; n];
            signs[i] = -1;
            IsometryElement::new(SignedPermutation::diagonal(&signs)?, array.column(i))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BieberbachGroup::from_generators(n, generators)?.with_name(format!("kn/{n}/{}", array.free_bits())))
}

/// Every valid array for dimension `n`, in free-bit order.
pub fn kn_arrays(n: usize) -> Result<Vec<GhwArray>> {
    kn_arrays_capped(n, KN_FAMILY_CAP)
}

pub fn kn_arrays_capped(n: usize, cap: usize) -> Result<Vec<GhwArray>> {
    if n > cap {
        return Err(Error::FamilyCapExceeded { n, cap });
    }
    if n < 2 {
        return Err(Error::InvalidFamilyParameters(format!("n = {n} < 2")));
    }
    (0..1u64 << GhwArray::free_count(n))
        .map(|bits| GhwArray::from_free_bits(n, bits))
        .collect()
}

/// All `2^{(n−1)(n−2)/2}` groups of the family, in free-bit order.
pub fn kn_family(n: usize) -> Result<Vec<BieberbachGroup>> {
    kn_family_capped(n, KN_FAMILY_CAP)
}

pub fn kn_family_capped(n: usize, cap: usize) -> Result<Vec<BieberbachGroup>> {
    kn_arrays_capped(n, cap)?
        .par_iter()
        .map(kn_group_from_array)
        .collect()
}
