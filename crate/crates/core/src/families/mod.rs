//! Constructors for the manifold families and the named example groups.

mod catalog;
mod diagonal;
mod kn;
mod z2;

pub use catalog::{catalog, CATALOG_NAMES};
pub use diagonal::{diagonal_group, hantzsche_wendt, hantzsche_wendt_examples};
pub use kn::{
    kn_arrays, kn_arrays_capped, kn_family, kn_family_capped, kn_group_from_array, GhwArray,
    KN_FAMILY_CAP,
};
pub use z2::{z2_family, z2_family_size, z2_group, z2_linear_part, z2_parameters};

use std::fmt;
use std::str::FromStr;

use crate::crystal::BieberbachGroup;
use crate::error::{Error, Result};

/// Which family a CLI request or test refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Z2,
    Kn,
    Hw,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z2" => Ok(FamilyKind::Z2),
            "kn" => Ok(FamilyKind::Kn),
            "hw" | "hw-catalog" => Ok(FamilyKind::Hw),
            _ => Err(Error::InvalidFamilyParameters(format!(
                "unknown family {s:?}; expected z2, kn or hw"
            ))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Z2 => "z2",
            FamilyKind::Kn => "kn",
            FamilyKind::Hw => "hw",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilyDescriptor {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        FamilyDescriptor { kind, n }
    }

    pub fn build(&self) -> Result<Vec<BieberbachGroup>> {
        match self.kind {
            FamilyKind::Z2 => z2_family(self.n),
            FamilyKind::Kn => kn_family(self.n),
            FamilyKind::Hw => hantzsche_wendt_examples(self.n),
        }
    }

    /// Size predicted by the counting formulas, where one exists.
    pub fn expected_count(&self) -> Option<u128> {
        match self.kind {
            FamilyKind::Z2 if self.n >= 2 => Some(z2_family_size(self.n) as u128),
            FamilyKind::Kn if self.n >= 2 => 1u128.checked_shl(GhwArray::free_count(self.n) as u32),
            _ => None,
        }
    }
}
