//! Isoperimetric inequalities for hyperbolic polygonal cusps and the length
//! lower bound `(8g - 4) ln(√2 + 1)` for filling pairs on once-punctured
//! surfaces.
//!
//! - [`hyperbolic`]: closed-form trigonometry of finite and one-ideal-vertex triangles.
//! - [`cusp`]: polygonal cusps in the upper half-plane and regular cusps.
//! - [`optimize`]: numerical checks that regular cusps are extremal.
//! - [`fillpair`]: combinatorial maps of filling pairs, spread forests and gluing.

pub mod cusp;
pub mod error;
pub mod fillpair;
pub mod hyperbolic;
pub mod json;
pub mod optimize;
pub mod suites;

pub use cusp::{PolygonalCusp, PolygonalCuspDoc, RegularCusp};
pub use error::{Error, Result};
pub use hyperbolic::{CuspTriangle, FiniteTriangle, UhpPoint};
pub use optimize::{OptimizationReport, SearchBudget};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 1729;
