//! Time-varying well-posed linear systems at desk scale.
//!
//! This crate builds finite-dimensional passive state-space realizations,
//! perturbs them with time-dependent coefficient pairs `(P(t), G(t))`, and
//! constructs the resulting evolution families by direct stepping, Volterra
//! fixed-point iteration, coefficient averaging and backward duality. On top
//! of the propagators it simulates the perturbed systems, keeps exact energy
//! ledgers, assembles the four-map structure `(T, Phi, Psi, F)` of a
//! well-posed system together with its Lax-Phillips windows, and provides an
//! exactly conservative staggered discretization of a 1-D wave equation with
//! scattering boundary control.
//!
//! The crate is `no_std` (with `alloc`); file formats, configuration and the
//! command-line harness live in the companion `tvwp-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coefficients;
pub mod error;
pub mod evolution;
pub mod grid;
pub mod linalg;
pub mod statespace;
pub mod wavelab;
pub mod wellposed;

pub use error::{Error, Result};
pub use grid::TimeGrid;
