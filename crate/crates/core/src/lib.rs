//! Exact computations for wall-crossing of delta-stable coherent pairs of
//! rank 2 on P^3.
//!
//! Everything here is pure exact arithmetic over big rationals and builds
//! without `std`; the `pairwalls` crate adds the command line and file formats.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod cohom;
pub mod error;
pub mod numclass;
pub mod ratpoly;
pub mod spectrum;
pub mod stability;
pub mod subscheme;
pub mod walls;

pub use error::{Error, Result};
pub use numclass::NumClass;
pub use ratpoly::{RatPoly, Rational};
pub use subscheme::SchemeClass;
pub use walls::WallRecord;
