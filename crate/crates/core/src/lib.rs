//! Log-principalisations, local topological zeta functions and monodromy
//! eigenvalues for ideals in two variables, together with checkers for the
//! holomorphy statement relating them.

pub mod error;
pub mod graph;
pub mod graphio;
pub mod holomorphy;
pub mod ideal;
pub mod lattice;
pub mod monodromy;
pub mod poly;
pub mod principalize;
pub mod zeta;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use graph::{Component, ComponentKind, Edge, FiberStrata, ResolutionGraph};
pub use ideal::{newton_polygon, parse_ideal, support_value, Monomial, MonomialIdeal, NewtonPolygon};
pub use principalize::principalise;
pub use zeta::{topological_zeta, RationalFunction};
