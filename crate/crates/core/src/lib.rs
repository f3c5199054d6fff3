//! Exact computer algebra for finite-dimensional algebras, coalgebras,
//! Hopf algebras, entwining structures and their duals.

pub mod error;
pub mod exactlin;
pub mod report;
pub mod entwining;
pub mod structures;
pub mod doikoppinen;
pub mod duality;
pub mod document;
pub mod catalog;

pub use error::{Error, Result};
pub use report::{Report, Violation};
