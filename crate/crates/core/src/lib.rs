//! Ramified Witt vectors, arithmetic jet algebras and formal group laws over
//! p-adic bases, with tools that check the structure theorems for kernels of
//! jet spaces on finite nilpotent test algebras.

pub mod error;
pub mod eval;
pub mod fgl;
pub mod group;
pub mod frobenius;
pub mod jets;
pub mod nilp;
pub mod padic;
pub mod poly;
pub mod report;
pub mod cli;
pub mod ring;
pub mod shifted;
pub mod suites;
pub mod torsion;
pub mod witt;

pub use error::{Error, Result};
