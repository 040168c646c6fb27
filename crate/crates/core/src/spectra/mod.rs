//! Multiplicities of the Hodge Laplacian on forms of a flat manifold `ℤⁿ\Γ`.
//!
//! For the eigenvalue `4π²N` the multiplicity on p-forms is
//! `(1/|F|) Σ_γ tr_p(B_γ) · Σ_{v: |v|²=N, B_γ v=v} e^{-2πi v·b_γ}`,
//! evaluated exactly with Gaussian integers.

mod closed_forms;
mod isospectral;
mod krawtchouk;
mod multiplicity;
pub mod table;
mod trace;

pub use closed_forms::{z2_betti_closed_form, z2_closed_forms, z2_trailing_ones, Z2ClosedForms};
pub use isospectral::{
    compare_spectra, compare_with, theorem_check, theorem_check_with, SpectralComparison,
    SpectralDifference, SpectrumMode, TheoremReport, TheoremRow,
};
pub use krawtchouk::{krawtchouk, KrawtchoukTable};
pub use multiplicity::{
    betti, betti_numbers, character_sum, character_sum_on_shell, d_e, d_f, d_o, d_p,
    multiplicity_row, MultiplicityRow, SpectralEngine,
};
pub use trace::{trace_p, trace_p_oracle, ORACLE_MAX_DIM};
