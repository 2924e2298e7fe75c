//! Multi-window Gabor systems on discrete periodic sets.
//!
//! Given an NZ-periodic set S and parameters (L, M, N), this crate decides
//! whether an L-window Gabor system is complete / a frame / a Riesz basis /
//! an orthonormal basis for l2(S), computes optimal frame bounds from the
//! Zak-domain matrix inequality, constructs Parseval-frame windows when the
//! parameters admit them, and cross-validates every verdict with a
//! brute-force truncated frame-operator oracle.

pub mod admissibility;
pub mod arithmetic;
pub mod error;
pub mod frame_analysis;
pub mod oracle;
pub mod periodic_set;
pub mod report;
pub mod window_construction;
pub mod zak;
pub mod zak_matrix;

pub use arithmetic::{derive_params, GaborParams};
pub use error::{Error, Result};
pub use frame_analysis::{AnalysisOptions, FrameVerdict};
pub use periodic_set::PeriodicSet;
pub use zak::{FiniteSignal, ThetaGrid};
