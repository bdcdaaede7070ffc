//! Boolean equation systems, their structure graphs, and the modal
//! μ-calculus model-checking problems they encode.
//!
//! The crate covers the whole chain from a labelled transition system and a
//! formula to a solved equation system: [`mucalc::encode`] produces a BES,
//! [`sg::build`] derives its structure graph, [`sg::bisim_minimise`] and
//! [`sg::normalise`] reduce it, [`sg::to_bes`] translates it back, and
//! [`solve`] computes solutions.

pub mod bes;
pub mod check;
pub mod error;
pub mod gen;
pub mod io;
pub mod mucalc;
pub mod partition;
pub mod pipeline;
pub mod sg;
pub mod solve;

pub use error::{Error, Result};
