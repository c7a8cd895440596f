//! Exact-arithmetic tools for colorings of the unit cube `[0,1]^d` in which
//! no color meets two opposite faces (SLKKM colorings).
//!
//! The crate builds such colorings, validates them, evaluates the known
//! bounds on how many colors an l-infinity ball must meet, and finds
//! witness centers exactly.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod sampling;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
pub use scalar::Scalar;
