//! Strong embeddings of 3-connected cubic planar graphs on surfaces of low
//! genus: enumeration, verification, and classification up to equivalence
//! and up to isomorphism.
//!
//! The crate works with the dual picture throughout. A 3-connected cubic
//! planar graph has a unique sphere embedding; every other embedding in
//! scope is obtained by twisting the edges dual to a subgraph of the dual
//! triangulation. The [`patterns`] module enumerates the subgraph shapes
//! that yield strong embeddings on the projective plane, the torus and the
//! Klein bottle; [`classify`] counts them up to equivalence and up to
//! dual-automorphism orbits; [`orientable`] handles orientable surfaces of
//! higher genus; [`structure`] provides the cut decomposition and the
//! stacked-triangulation machinery behind the orientability dichotomy.

pub mod canon;
pub mod dual;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod generate;
pub mod patterns;
pub mod solids;

pub use error::{Error, Result};
