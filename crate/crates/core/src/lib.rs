//! Exact computations in groupoid-graded multifusion categories.
//!
//! The category `Vec_G` of finite-dimensional vector spaces graded by a
//! finite groupoid `G` is a semisimple multiring category with left duals.
//! Its unit is simple exactly when `G` has one object. This crate builds
//! such categories over the rationals, constructs algebras and coalgebras
//! in them, and decides the separability-type properties of the tensor
//! functors `- ⊗ A` with explicit witnesses.

pub mod audit;
pub mod error;
pub mod exactlin;
pub mod functors;
pub mod groupoid;
pub mod grothendieck;
pub mod gvec;
pub mod internal;
pub mod morphcalc;
pub mod sampling;
pub mod trace;

pub use error::{Error, Result};
