//! Locally Gabriel graphs.
//!
//! A geometric graph is locally Gabriel when, for every edge `(u, v)`, the
//! closed disk with diameter `uv` contains no neighbor of `u` or `v`. This
//! crate provides exact predicates for that condition, a verifier, the dense
//! grid construction, extremal constructions on convex point classes, an
//! exact maximum-size search for small inputs, and independent-set routines.

pub mod convex;
pub mod extremal;
pub mod geom;
pub mod graph;
pub mod independence;
pub mod grid;
pub mod io;
pub mod rng;
pub mod scaling;

pub use geom::{ConvexClass, ConvexKind, CoordKind, GeomError, Point, PointSet};
pub use graph::{ConflictReport, Graph, GraphError, Violation, ViolationKind};
