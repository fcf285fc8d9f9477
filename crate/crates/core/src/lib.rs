//! Classical and dual Garside normal forms of braids, the reduced Burau
//! representation over `Z[q, q⁻¹]`, non-vanishing criteria for that
//! representation, and recovery of dual normal forms from Burau matrices.

pub mod burau;
pub mod classical;
pub mod cli;
pub mod criteria;
pub mod dual;
pub mod error;
pub mod fixtures;
mod garside;
pub mod laurent;
pub mod random;
pub mod recovery;
pub mod words;

pub use error::{Error, Result};
pub use laurent::{BurauMatrix, Coeff, Degree, DegreeStats, LaurentPoly};
pub use words::{BraidWord, Generator, Token};
