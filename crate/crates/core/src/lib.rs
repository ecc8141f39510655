//! Exact, finitely supported distributions with coefficients in an
//! arbitrary rig (semiring), organised as a commutative monad.
//!
//! A [`Dist`] assigns coefficients from a [`Rig`] to finitely many
//! [`Element`]s. With `nat` coefficients these are multisets, with `bool`
//! subsets, with `rational` signed measures, with `tropical` weighted
//! min-plus terms. On top of the monad structure (`dirac`, `pushforward`,
//! `flatten`) the crate provides the strengths and tensor products
//! ([`strength`]), integration and the action of functions on
//! distributions ([`integration`]), the functional representation
//! ([`schwartz`]), probability-style operations ([`probability`]) and a
//! brute-force checker for all of the laws ([`lawcheck`]).
//!
//! ```
//! use rigdist::{Dist, Rational, strength::psi};
//!
//! let p = Dist::parse_weights(&Rational, [("a", "1/2"), ("b", "1/2")]).unwrap();
//! let q = Dist::parse_weights(&Rational, [("c", "1/3"), ("d", "2/3")]).unwrap();
//! let joint = psi(&p, &q).unwrap();
//! assert_eq!(joint.len(), 4);
//! assert_eq!(joint.total(), Rational.one());
//! # use rigdist::Rig;
//! ```

pub mod cli;
pub mod dist;
pub mod error;
pub mod format;
pub mod integration;
pub mod lawcheck;
pub mod probability;
pub mod rig;
pub mod schwartz;
pub mod space;
pub mod strength;

pub use dist::Dist;
pub use error::{Error, Result};
pub use integration::TestFn;
pub use rig::{Boolean, Mat2, Mat2Nat, MinPlus, Modular, Natural, Rational, Rig, RigName, Tropical};
pub use space::{Element, FinSpace, Side};
