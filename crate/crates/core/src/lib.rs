//! Exact Hodge-Laplace spectra of compact flat manifolds given by Bieberbach
//! groups on the cubic lattice ℤⁿ.

pub mod crystal;
pub mod error;
pub mod families;
pub mod graph;
pub mod lattice;
pub mod numeric;
pub mod spectra;

pub use crystal::{BieberbachGroup, GroupSpec, IsometryElement, SignedPermutation};
pub use error::{Error, Result};
pub use families::{catalog, GhwArray};
pub use graph::GhwGraph;
pub use lattice::{shell_vectors, Shell};
pub use numeric::{GaussianInt, Rational4};
pub use spectra::{MultiplicityRow, SpectralEngine, SpectrumMode};
