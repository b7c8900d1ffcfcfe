//! Hat-version knot Floer homology of the pretzel knots `K(-2a, 2b+1, 2c+1)`
//! and `K(2a, -(2b+1), 2c+1)`.
//!
//! The first family is computed from the Kauffman states of its standard
//! projection ([`kauffman`]) and reduced by cancelling pairs ([`hfk`]); both
//! families are also evaluated in closed form from the Alexander polynomial.
//! The Alexander polynomial is computed independently by Fox calculus on a
//! Wirtinger presentation ([`alexander`]).

pub mod alexander;
pub mod error;
pub mod hfk;
pub mod kauffman;
pub mod laurent;
pub mod pretzel;
pub mod snf;

pub use error::{Error, Result};
pub use hfk::{BigradedTable, HfkResult, PairingEntry, PairingKind};
pub use kauffman::{Bigrading, ChainSummary, Family, KauffmanState, Variant};
pub use laurent::LaurentPoly;
pub use pretzel::{classify, Abc, ClassTag, PretzelClass, PretzelParams, WirtingerPresentation};
