//! Bijections between up-steps at odd height and peaks on Dyck and
//! bilateral Dyck paths.
//!
//! The crate provides step words ([`word`]), their statistics ([`stats`]),
//! the decompositions the maps are defined by ([`decompose`]), the maps
//! themselves ([`bijection`]), exhaustive and random generation
//! ([`enumerate`]), and a brute-force checker for the resulting
//! equidistribution theorems ([`verify`]).

pub mod bijection;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod render;
pub mod stats;
pub mod trace;
pub mod verify;
pub mod word;

pub use bijection::{alpha, beta, phi, phi_ext, psi, psi_ext, Bijection};
pub use error::{DyckViolation, Error, Result};
pub use word::{parse_word, HeightProfile, PathClass, PathWord, Step, WordBuilder};
