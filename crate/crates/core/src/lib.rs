//! Generalized graph saturation: `G` is `(H, F)`-saturated when it contains no
//! copy of `F` and adding any missing edge creates a new copy of `F`.

pub mod bounds;
pub mod builders;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod count;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod pattern;
pub mod saturation;
pub mod search;

pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::Pattern;
