//! Exact computational algebra for Chevalley matrix models, Abels groups,
//! finitely presented groups and coset complexes.
//!
//! Everything is exact: rings are finite or carry canonical rational /
//! Laurent-polynomial forms, and every verdict is either a full enumeration
//! or an explicit "inconclusive" when a budget runs out.

pub mod abels;
pub mod chevalley;
pub mod cli;
pub mod complex;
pub mod error;
pub mod group;
pub mod laurent;
pub mod matrix;
pub mod presentation;
pub mod relations;
pub mod report;
pub mod ring;
pub mod snf;
pub mod suites;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use ring::{Ring, RingDescriptor, RingElement};
