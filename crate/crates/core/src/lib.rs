//! Exact homological algebra for finite-dimensional algebras over prime fields.

pub mod algdef;
pub mod cli;
pub mod conjlab;
pub mod error;
pub mod exactla;
pub mod homtools;
pub mod modrep;

pub use algdef::{Algebra, AlgebraSpec};
pub use error::{Error, Result};
pub use exactla::{Mat, Subspace};
pub use modrep::{ModMap, Module};
