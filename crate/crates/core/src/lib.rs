//! Mod-p classification data of Shimura F-crystals computed from root-system
//! combinatorics, plus a finite-field brute-force oracle for split `GL_r`.

pub mod bruhat;
pub mod classify;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod lattice;
pub mod oracle;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
