//! Exact enumeration for the Shi arrangements of types A and C: regions with
//! rational witnesses, the root posets whose antichains index them, the
//! labeling bijections onto parking-function-like sequences, and the
//! verification suites that tie the counts, class sizes and ceiling/floor
//! statistics together.

pub mod biject;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod lab;
pub mod model;
pub mod plot;
pub mod poset;

pub use error::{Error, Result};
