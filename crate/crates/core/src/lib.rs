//! Balanced 4-valent planar maps and generic branched covers of the sphere.
//!
//! An oriented 4-valent map on the sphere arises as the preimage of a Jordan
//! curve through the critical values of a generic degree-d branched cover
//! exactly when it is *balanced*: its faces are Jordan domains, it has d blue
//! and d white faces, and every blue-left simple cycle encloses more blue than
//! white faces. This crate decides balance (by max flow, with a brute-force
//! cycle oracle), realizes balanced maps as transposition tuples, enumerates
//! and classifies covers of small degree, implements a tree bijection for the
//! Hurwitz count, and decomposes diagrams along 2- and 4-point cuts.

#![allow(clippy::needless_range_loop)]

pub mod balance;
pub mod colored;
pub mod corpus;
pub mod cycles;
pub mod decompose;
pub mod dps;
pub mod error;
pub mod flow;
pub mod generate;
pub mod hurwitz;
pub mod io;
pub mod map;
pub mod perm;
pub mod realize;

pub use colored::{checkerboard, ColoredMap};
pub use error::{Error, Result};
pub use map::{CanonicalCode, CombinatorialMap, Dart};
