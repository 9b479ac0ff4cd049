//! Exact combinatorial Hopf-algebra computations on reduced words, permutation
//! bialgebras and quasi-symmetric functions.

pub mod bialgebra;
pub mod coxeter;
pub mod error;
pub mod families;
pub mod linear;
pub mod oracle;
pub mod perm;
pub mod typebd;
pub mod verify;
pub mod pi;
pub mod psi;
pub mod qsym;
pub mod stanley;
pub mod wbialg;
pub mod word;
pub mod zeta;

pub use error::{Error, Result};
