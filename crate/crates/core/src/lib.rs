//! Exact push-forwards of powers of the Plücker class on Grassmann bundles.
//!
//! For a rank-`r` bundle `E` on `X` and the Grassmann bundle
//! `π: G_X(d, E) → X` of rank-`d` quotients with Plücker class `θ = c_1(Q)`,
//! [`pushforward::pushforward_theta_power`] computes `π_* θ^N` as a
//! combination of Schur polynomials in the Segre classes of `E`. Degree
//! formulas for Grassmann bundles over projective space and for Grassmann
//! varieties follow. Everything is exact: big integers and rationals.
//!
//! The [`oracles`] and [`verify`] modules recompute the same quantities by
//! unrelated routes (localization over explicit roots, Schubert calculus in
//! a box, brute-force tableau enumeration).

pub mod arith;
pub mod chowring;
pub mod cli;
pub mod det;
pub mod error;
pub mod oracles;
pub mod partition;
pub mod pushforward;
pub mod ring;
pub mod rng;
pub mod symmfunc;
pub mod tableaux;
pub mod verify;

pub use chowring::{BundleModel, GradedPoly};
pub use error::Error;
pub use partition::Partition;
pub use symmfunc::SchurExpansion;
