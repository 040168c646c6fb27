//! Bieberbach groups with cubic translation lattice.
//!
//! An element `γ = B·L_b` acts by `x ↦ B(x + b)`; products follow
//! `(B_a L_{b_a})(B_b L_{b_b}) = B_a B_b · L_{B_b⁻¹ b_a + b_b}`. Linear parts are
//! signed permutation matrices and translation parts are kept reduced mod ℤⁿ,
//! so a group is stored as one representative per holonomy element.

mod group;
mod isometry;
mod json;
mod signed_perm;

pub use group::{
    canonical_key, classify_holonomy, expand_holonomy, is_diagonal_type, is_orientable,
    is_torsion_free, table_key, validate, BieberbachGroup, CosetTable, HolonomyClass,
    ValidationReport, HOLONOMY_CAP,
};
pub use isometry::IsometryElement;
pub use json::{GeneratorSpec, GroupSpec};
pub use signed_perm::{Cycle, SignedPermutation};
