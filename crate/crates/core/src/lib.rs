//! Presentations, coset enumeration and invariant tables for the fundamental
//! groups of Galois covers of degenerations to `E_n` Zappatic surfaces.
//!
//! The `parallel` feature (on by default) runs independent work items on a
//! rayon pool; without it everything runs on the calling thread.

pub mod certify;
pub mod deduction;
pub mod enumeration;
pub mod error;
pub mod invariants;
pub mod par;
pub mod presentation;
pub mod symverify;
pub mod words;

pub use error::{Error, Result};
