//! Simplicial complexes, their d-dimensional cycles and chord sets, and
//! the linear-resolution tests for square-free monomial ideals that they
//! drive.
//!
//! Faces are bitmasks over at most 64 vertices. Everything is exact: ranks
//! are computed over GF(2), GF(p) or the rationals.

#![no_std]

extern crate alloc;

pub mod chordality;
pub mod complex;
pub mod cycles;
pub mod error;
pub mod face;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod named;
pub mod resolutions;

pub use chordality::{ChordSetRecord, ChordalityReport, ChordedVerdict};
pub use complex::{build_complex, Complex, Induced};
pub use cycles::{CycleRecord, DEFAULT_CAP};
pub use error::{Error, Result};
pub use face::{Face, Vertex, MAX_VERTICES};
pub use ideal::MonomialIdeal;
pub use linalg::FieldSpec;
pub use resolutions::{ComponentVerdict, GenerationDegree, ResolutionVerdict};
