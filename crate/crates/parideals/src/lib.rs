//! Exact enumeration of ad-nilpotent and abelian ideals of parabolic
//! subalgebras of simple Lie algebras.
//!
//! The crate builds finite irreducible root systems with an exact rational
//! bilinear form, enumerates the ideal posets by brute force, realizes the
//! bijection with affine Weyl group elements and alcove faces, and checks
//! every closed-form count against those oracles. All arithmetic is exact:
//! integer vectors for roots, big rationals for the geometry, big integers
//! for the counts. No floating point anywhere.

pub mod affweyl;
pub mod alcove;
pub mod census;
pub mod diagrams;
pub mod ideals;
mod ratlin;
pub mod rootsys;

pub use rootsys::{Family, Root, RootSystem, RootSystemType};

/// Exact rational scalar used throughout the geometric modules.
pub type Rat = num::BigRational;
