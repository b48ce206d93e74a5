//! Real rational curves on the quadric `−x0² + x1² + x2² + x3² − x4² = 0` in RP⁴.
//!
//! Everything is computed exactly over Q(√2) except where a numerical step is
//! explicitly documented (complex root location, crossing signs of complex
//! branches, and sampling-based geometric witnesses).

// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cli;
pub mod curve;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod glue;
pub mod io;
pub mod jacobian;
pub mod projective;
pub mod singular;
pub mod svg;
pub mod writhe;

pub use error::{Error, Result};
pub use exact::{HomPoly, RootBox, Scalar};
