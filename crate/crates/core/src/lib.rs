//! Exact-arithmetic toolkit for Hom-Poisson type algebras: identity checkers,
//! constructions, representations, matched pairs, bialgebra duality and
//! O-operators over finite-dimensional rational presentations.

pub mod axioms;
pub mod catalog;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod format;
pub mod linalg;
pub mod matched_pairs;
pub mod operators;
pub mod presentation;
pub mod report;
pub mod representations;
pub mod scalar;
pub mod tensor;

pub use axioms::AlgebraClass;
pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use presentation::{Algebra, Comultiplication, Representation};
pub use report::{CheckConfig, CheckReport, Execution, Family, Witness};
pub use scalar::{Coeff, ParameterBinding, Scalar};
pub use tensor::BilinearMap;
