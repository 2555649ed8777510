//! Exact-arithmetic toolkit for arrangements of difference hyperplanes
//! `{x_p - x_q = a}` with positive rational constants.
//!
//! The library enumerates the regions of such an arrangement by sign-vector
//! search, computes the Pak-Stanley label of each region, tests and
//! enumerates G-parking functions of the arrangement's oriented multigraph,
//! and constructively inverts the labeling by walking from the fundamental
//! region to a region with a prescribed label. Constructors for shifted
//! k-Shi and G-Shi arrangements are included, along with verification
//! routines for the classical facts: every label is a G-parking function,
//! the labeling is surjective onto them, and for k-Shi arrangements it is a
//! bijection with `(kn+1)^(n-1)` regions.
//!
//! All computation is exact: rationals are arbitrary-precision, strictness
//! of inequalities is tracked lexicographically, and no tolerance appears
//! anywhere.

mod error;
pub mod factory;
pub mod feasibility;
pub mod io;
pub mod parking;
pub mod regions;
pub mod types;
pub mod verify;
pub mod walk;

pub use error::Error;
pub use types::{
    ratio, ratio_int, Arrangement, Hyperplane, Multigraph, ParkVec, Point, Rational, Sign,
    SignVector,
};
