//! Cubical spheres from BBC sequences of simplicial balls.
//!
//! The crate builds the cubical `d`-spheres obtained from sequences of
//! simplicial `(d-1)`-balls `T_i = B_{i-1} * v_i` (with `B_{i-1}` contained in
//! the boundary of `T_{i-1}`) along two independent routes: iterated mirroring
//! and fissuring, and a direct sign-vector enumeration of the facets. It also
//! enumerates the facets of the neighborly cubical polytopes through the
//! cubical Gale evenness condition, relates both descriptions through the map
//! [`ncp::phi_map`], and builds the equivelar quad surfaces `M(4,q)` as mirror
//! complexes of polygons.
//!
//! Faces of the `n`-cube are [`SignVector`]s; faces of simplicial complexes are
//! [`VertexSet`]s, rendered in the complement encoding (a `0` marks a member).

pub mod bbc;
pub mod cli;
pub mod complex;
pub mod cubical;
pub mod error;
pub mod face;
pub mod fixtures;
pub mod fvector;
pub mod io;
pub mod ncp;
pub mod simplicial;
pub mod surfaces;
pub mod verify;

mod combinatorics;

pub use bbc::BbcSequence;
pub use cubical::CubicalComplex;
pub use error::{BbcError, Error, Result};
pub use face::{SignVector, VertexSet};
pub use fvector::FVector;
pub use simplicial::SimplicialComplex;
