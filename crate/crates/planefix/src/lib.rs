//! planefix: validated fixed-point finding for plane maps.
//!
//! The crate checks boundary hypotheses of two plane fixed-point theorems on
//! concrete piecewise-defined maps, constructs outflanking arcs from periodic
//! orbits, and certifies the guaranteed fixed points numerically via the
//! topological degree of the displacement field.
//!
//! Every predicate over continuous sets that is checked by finite sampling
//! reports a three-valued verdict: SATISFIED with an achieved margin,
//! VIOLATED with a reproducible witness, or UNDECIDED at the working
//! resolution. Topology decisions (segment crossings, orientation signs) are
//! exact and never flip under rounding.

pub mod angles;
pub mod fixpoint;
pub mod geom;
pub mod maps;
pub mod outflank;
pub mod qivt;
pub mod render;
pub mod report;
pub mod scenario;

pub use geom::{Point, Polyline, Tolerances};
pub use maps::{MapExpr, TriState};
