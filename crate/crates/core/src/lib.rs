//! Permutahedra and c-associahedra of finite Coxeter groups.
//!
//! The crate builds a finite Coxeter system from its Coxeter matrix (all roots
//! of unit length, coordinates in the basis of simple roots), computes
//! c-sorting words and c-singletons, realizes the permutahedron and the
//! c-associahedron as intersections of labeled halfspaces, and classifies
//! which Coxeter elements give isometric associahedra and Cambrian fans.
//! Every classification can be cross-checked against a brute-force
//! congruence search on the vertex sets.
//!
//! ```
//! use coxassoc::{CoxeterSystem, BasePoint, Realization};
//!
//! let sys = CoxeterSystem::from_type("A3").unwrap();
//! let real = Realization::new(&sys, BasePoint::balanced(3)).unwrap();
//! let c = sys.parse_word("s2,s1,s3").unwrap();
//! let ass = real.associahedron(&c).unwrap();
//! assert_eq!(ass.vertices.len(), 14);
//! assert_eq!(ass.halfspaces.len(), 9);
//! ```

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod format;
pub mod geometry;
pub mod isometry;
pub mod sortable;

pub use coxeter::{CoxeterElement, CoxeterSystem, GraphAutomorphism, GroupElement, Word};
pub use error::{Error, Result};
pub use geometry::{BasePoint, Halfspace, Polytope, Realization, DEFAULT_EPSILON};
pub use isometry::{Classification, IsometryClass, LinearIsometry, Provenance};
pub use sortable::{Factorization, SingletonLattice};
