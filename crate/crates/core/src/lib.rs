//! Homology-level and factor-level bookkeeping for loop spaces of
//! moment-angle complexes.
//!
//! Given a finite simplicial complex `K` on vertices `1..=m`, this crate
//! computes:
//!
//! - full subcomplexes, neighbourliness, the clique family `C_K`, minimal
//!   missing faces and the pushout decomposition at a non-dominating vertex
//!   ([`complex`]);
//! - exact reduced integral homology through Smith normal form ([`homology`]);
//! - the suspension splitting of `ΣZ_K`, the unstable splitting of `Z_K` for
//!   sufficiently neighbourly complexes, and conversion of summands into
//!   spheres and Moore spaces ([`splitting`]);
//! - Hall bases, smash rewriting of Moore spaces and Hilton–Milnor loop-factor
//!   catalogs with Poincaré series ([`loops`]);
//! - the product-decomposition verdict and a checkable pushout certificate
//!   ([`classifier`], [`certificate`]);
//! - the excluded-prime set for the localized decomposition ([`localization`]).
//!
//! The crate is `no_std` (with `alloc`) when built without the default `std`
//! feature. All computations are exact and deterministic.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod certificate;
pub mod classifier;
pub mod complex;
mod error;
pub mod fixtures;
pub mod homology;
pub mod localization;
pub mod loops;
pub mod members;
pub mod primes;
#[cfg(feature = "serde")]
mod serde_util;
pub mod splitting;

pub use crate::certificate::{certificate_build, certificate_verify, Certificate};
pub use crate::classifier::{classify, Classification, Verdict};
pub use crate::complex::{FullSubcomplex, PushoutSquare, SimplicialComplex, VertexSubset};
pub use crate::error::{Error, Result};
pub use crate::homology::{DegreeGroup, HomologyProfile, PrimePower};
