//! Root systems, explicit matrix models of Chevalley groups, and the checks
//! run on them.

pub mod affine;
pub mod borel;
pub mod checks;
pub mod forms;
pub mod models;
pub mod roots;

pub use models::{matrix_model, MatrixModel};
pub use roots::{root_system, CartanType, RootDatum};
