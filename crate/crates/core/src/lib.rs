//! Operational/umbral coefficient calculus: truncated power series, Borel-type
//! coefficient transforms, special-function evaluators and a verified identity
//! catalog with numerical oracles.

pub mod catalog;
pub mod error;
pub mod gamma;
pub mod poly;
pub mod quad;
pub mod report;
pub mod series;
pub mod special;
pub mod umbral;

pub use error::{Error, Result};
