//! Reduced words of finite Coxeter groups, their sign functions, and the
//! model-matrix determinants used to check signature matrices of subword
//! complexes, all in exact arithmetic.

pub mod complexes;
pub mod coxeter;
pub mod error;
pub mod polyring;
pub mod redgraph;
pub mod tensors;
pub mod words;

pub use coxeter::{AbelianSpectrum, Budget, CoxeterSystem, Element, Family};
pub use error::{Error, Result};
pub use words::{AbelianVector, Word};
