//! Exact arithmetic over Q(√2): scalars, binary forms, elimination, roots.

pub mod interval;
pub mod linalg;
pub mod poly;
pub mod roots;
pub mod scalar;

pub use poly::{HomPoly, UPoly};
pub use roots::{complex_pair_roots, real_roots, refine, RealRoots, RootBox, RootLoc};
pub use scalar::Scalar;
