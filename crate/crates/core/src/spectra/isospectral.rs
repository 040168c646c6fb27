use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::crystal::{classify_holonomy, BieberbachGroup};
use crate::error::{Error, Result};
use crate::numeric::json_uint;
use crate::spectra::{MultiplicityRow, SpectralEngine};

/// One line of a forms-isospectrality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub norm_sq: u64,
    pub shell_size: usize,
    pub forms: BigUint,
    pub even: BigUint,
    pub odd: BigUint,
    /// `2^{n−k}|shell|`.
    pub expected_forms: BigUint,
    pub passed: bool,
}

impl Serialize for TheoremRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TheoremRow", 7)?;
        st.serialize_field("N", &self.norm_sq)?;
        st.serialize_field("shell_size", &self.shell_size)?;
        st.serialize_field("d_f", &json_uint(&self.forms))?;
        st.serialize_field("d_e", &json_uint(&self.even))?;
        st.serialize_field("d_o", &json_uint(&self.odd))?;
        st.serialize_field("expected_d_f", &json_uint(&self.expected_forms))?;
        st.serialize_field("pass", &self.passed)?;
        st.end()
    }
}

/// Direct-summation check of `d_f = 2^{n−k}|shell|` and `d_e = d_o = 2^{n−k−1}|shell|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub group: String,
    pub dim: usize,
    pub rank: u32,
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremRow> {
        self.rows.iter().filter(|r| !r.passed)
    }
}

/// Checks forms-multiplicities of a `ℤ₂ᵏ`-holonomy group for `0 ≤ N ≤ max_norm`.
pub fn theorem_check(group: &BieberbachGroup, max_norm: u64) -> Result<TheoremReport> {
    theorem_check_with(&SpectralEngine::new(group), max_norm)
}

pub fn theorem_check_with(engine: &SpectralEngine<'_>, max_norm: u64) -> Result<TheoremReport> {
    let group = engine.group();
    let class = classify_holonomy(group.cosets());
    let rank = class
        .elementary_abelian_rank()
        .ok_or_else(|| Error::NotElementaryAbelian(class.to_string()))?;
    let n = group.dim();
    // a Bieberbach group never contains −Id, so k < n
    let half_factor = BigUint::one() << (n - rank as usize - 1);
    let rows = (0..=max_norm)
        .map(|norm_sq| {
            let row = engine.row(norm_sq)?;
            let half = &half_factor * row.shell_size;
            let expected_forms = &half * 2u32;
            Ok(TheoremRow {
                passed: row.forms == expected_forms && row.even == half && row.odd == half,
                norm_sq,
                shell_size: row.shell_size,
                forms: row.forms,
                even: row.even,
                odd: row.odd,
                expected_forms,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport {
        group: group.label(),
        dim: n,
        rank,
        rows,
    })
}

/// Which part of the spectrum two groups are compared on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumMode {
    /// p-forms; functions are degree 0.
    Degree(usize),
    Forms,
    Even,
    Odd,
    /// Every degree separately.
    AllDegrees,
}

impl SpectrumMode {
    pub const FUNCTIONS: SpectrumMode = SpectrumMode::Degree(0);
}

impl fmt::Display for SpectrumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumMode::Degree(p) => write!(f, "p={p}"),
            SpectrumMode::Forms => f.write_str("f"),
            SpectrumMode::Even => f.write_str("e"),
            SpectrumMode::Odd => f.write_str("o"),
            SpectrumMode::AllDegrees => f.write_str("all"),
        }
    }
}

impl FromStr for SpectrumMode {
    type Err = Error;

    /// Accepts `p=2`, `2`, `f`/`forms`, `e`/`even`, `o`/`odd`, `functions`, `all`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let mode = match t.as_str() {
            "f" | "forms" => SpectrumMode::Forms,
            "e" | "even" => SpectrumMode::Even,
            "o" | "odd" => SpectrumMode::Odd,
            "functions" => SpectrumMode::FUNCTIONS,
            "all" => SpectrumMode::AllDegrees,
            _ => {
                let digits = t.strip_prefix("p=").unwrap_or(&t);
                SpectrumMode::Degree(digits.parse().map_err(|_| Error::OutOfRange {
                    what: "spectrum mode",
                    detail: format!("{s:?} is not one of p=<k>, f, e, o, functions, all"),
                })?)
            }
        };
        Ok(mode)
    }
}

impl Serialize for SpectrumMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The first `(N, degree)` at which two spectra disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralDifference {
    pub norm_sq: u64,
    pub degree: Option<usize>,
    pub left: BigUint,
    pub right: BigUint,
}

impl Serialize for SpectralDifference {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpectralDifference", 4)?;
        st.serialize_field("N", &self.norm_sq)?;
        st.serialize_field("p", &self.degree)?;
        st.serialize_field("left", &json_uint(&self.left))?;
        st.serialize_field("right", &json_uint(&self.right))?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralComparison {
    pub left: String,
    pub right: String,
    pub mode: SpectrumMode,
    pub max_norm: u64,
    pub equal: bool,
    pub first_difference: Option<SpectralDifference>,
}

impl fmt::Display for SpectralComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vs {} [mode {}, N <= {}]: ", self.left, self.right, self.mode, self.max_norm)?;
        match &self.first_difference {
            None => f.write_str("equal"),
            Some(d) => {
                write!(f, "unequal at N={}", d.norm_sq)?;
                if let Some(p) = d.degree {
                    write!(f, " p={p}")?;
                }
                write!(f, " ({} vs {})", d.left, d.right)
            }
        }
    }
}

fn first_difference(mode: SpectrumMode, a: &MultiplicityRow, b: &MultiplicityRow) -> Option<SpectralDifference> {
    let diff = |degree, left: &BigUint, right: &BigUint| {
        (left != right).then(|| SpectralDifference {
            norm_sq: a.norm_sq,
            degree,
            left: left.clone(),
            right: right.clone(),
        })
    };
    match mode {
        SpectrumMode::Degree(p) => diff(Some(p), &a.degrees[p], &b.degrees[p]),
        SpectrumMode::Forms => diff(None, &a.forms, &b.forms),
        SpectrumMode::Even => diff(None, &a.even, &b.even),
        SpectrumMode::Odd => diff(None, &a.odd, &b.odd),
        SpectrumMode::AllDegrees => a
            .degrees
            .iter()
            .zip(&b.degrees)
            .enumerate()
            .find_map(|(p, (l, r))| diff(Some(p), l, r)),
    }
}

/// Compares the multiplicities of two groups for `0 ≤ N ≤ max_norm`, scanning
/// `N` ascending and then the degree ascending.
pub fn compare_spectra(
    left: &BieberbachGroup,
    right: &BieberbachGroup,
    mode: SpectrumMode,
    max_norm: u64,
) -> Result<SpectralComparison> {
    compare_with(&SpectralEngine::new(left), &SpectralEngine::new(right), mode, max_norm)
}

pub fn compare_with(
    left: &SpectralEngine<'_>,
    right: &SpectralEngine<'_>,
    mode: SpectrumMode,
    max_norm: u64,
) -> Result<SpectralComparison> {
    let n = left.group().dim();
    if right.group().dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: right.group().dim(),
        });
    }
    if let SpectrumMode::Degree(p) = mode {
        if p > n {
            return Err(Error::OutOfRange {
                what: "form degree",
                detail: format!("p = {p} > n = {n}"),
            });
        }
    }
    let mut found = None;
    for norm_sq in 0..=max_norm {
        let shell = left.shell(norm_sq)?;
        let a = left.row_for_shell(&shell)?;
        let b = right.row_for_shell(&shell)?;
        found = first_difference(mode, &a, &b);
        if found.is_some() {
            break;
        }
    }
    Ok(SpectralComparison {
        left: left.group().label(),
        right: right.group().label(),
        mode,
        max_norm,
        equal: found.is_none(),
        first_difference: found,
    })
}
