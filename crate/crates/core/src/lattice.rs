//! Shells of the cubic lattice ℤⁿ and their vectors fixed by a holonomy element.
//!
//! The cubic lattice is self-dual, so dual-lattice shells are shells of ℤⁿ.
//! Shells are indexed by the integer squared norm `N`; the corresponding
//! Laplace eigenvalue is `4π²N`.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::crystal::SignedPermutation;
use crate::error::{Error, Result};

/// Largest squared norm enumerated unless the caller asks otherwise.
pub const DEFAULT_SHELL_CAP: u64 = 10_000;

pub type IntVector = Vec<i64>;

/// All integer vectors of a given squared norm, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shell {
    dim: usize,
    norm_sq: u64,
    // row-major, `dim` coordinates per vector
    coords: Vec<i64>,
}

impl Shell {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm_sq(&self) -> u64 {
        self.norm_sq
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[i64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn vectors(&self) -> Vec<IntVector> {
        self.iter().map(<[i64]>::to_vec).collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.dim && self.iter().any(|w| w == v)
    }
}

impl Serialize for Shell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Shell", 4)?;
        st.serialize_field("n", &self.dim)?;
        st.serialize_field("N", &self.norm_sq)?;
        st.serialize_field("count", &self.len())?;
        st.serialize_field("vectors", &self.vectors())?;
        st.end()
    }
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// The shell `{v ∈ ℤⁿ : Σ vᵢ² = N}` with the default cap.
pub fn shell_vectors(dim: usize, norm_sq: u64) -> Result<Shell> {
    shell_vectors_capped(dim, norm_sq, DEFAULT_SHELL_CAP)
}

pub fn shell_vectors_capped(dim: usize, norm_sq: u64, cap: u64) -> Result<Shell> {
    if dim == 0 {
        return Err(Error::OutOfRange {
            what: "dimension",
            detail: "shells need n >= 1".into(),
        });
    }
    if norm_sq > cap {
        return Err(Error::ShellCapExceeded { norm_sq, cap });
    }
    let mut coords = Vec::new();
    let mut current = vec![0i64; dim];
    fill(&mut current, 0, norm_sq, &mut coords);
    Ok(Shell {
        dim,
        norm_sq,
        coords,
    })
}

fn fill(current: &mut [i64], idx: usize, remaining: u64, out: &mut Vec<i64>) {
    let last = idx + 1 == current.len();
    let r = isqrt(remaining) as i64;
    if last {
        if (r * r) as u64 != remaining {
            return;
        }
        let values: &[i64] = if r == 0 { &[0] } else { &[-r, r] };
        for &x in values {
            current[idx] = x;
            out.extend_from_slice(current);
        }
        return;
    }
    for x in -r..=r {
        current[idx] = x;
        fill(current, idx + 1, remaining - (x * x) as u64, out);
    }
}

/// The sub-list of shell vectors with `Bv = v`, in shell order.
pub fn fixed_vectors(shell: &Shell, b: &SignedPermutation) -> Result<Vec<IntVector>> {
    if b.dim() != shell.dim() {
        return Err(Error::DimensionMismatch {
            expected: shell.dim(),
            found: b.dim(),
        });
    }
    Ok(shell
        .iter()
        .filter(|v| b.fixes(v))
        .map(<[i64]>::to_vec)
        .collect())
}

/// `dim ker(B − Id)`.
pub fn fixed_space_dim(b: &SignedPermutation) -> usize {
    b.fixed_space_dim()
}
