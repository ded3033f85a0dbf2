//! Exact-arithmetic toolkit for resolving isolated surface singularities in
//! three variables through Newton polyhedra and their dual fans.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod lattice;
pub mod newton;
pub mod okagraph;
pub mod oracle;
pub mod poly;
pub mod nondeg;
pub mod resgraph;
pub mod catalog;

pub use error::{CatalogError, GraphError, LatticeError, NewtonError, OkaError};
pub use lattice::{cone_det, hj_expand, primitive, regular_subdivide, LatVec, SubdivisionChain};
pub use newton::{DualFan, Face, NewtonPolyhedron};
pub use poly::{gcd_poly, parse_poly, resultant, Monomial, MultiPoly, ParseError};
