//! Exact growth series of the right-angled structures attached to a finite
//! simple graph: the trace monoid, the right-angled Artin group and the
//! right-angled Coxeter group.
//!
//! Given a graph on nodes `1..=m`, generators `x_1..x_m` commute exactly when
//! their nodes share an edge. The crate computes, as exact rational functions
//! and integer series:
//!
//! * spherical growth (elements by length), in closed form from the clique
//!   polynomial and per type from the strict branching matrix
//!   ([`spherical`]);
//! * geodesic growth (reduced words by length), from the weak branching
//!   matrix and its resolvent ([`geodesic`]);
//! * the same for link-regular graphs from the link-size profile alone
//!   ([`link_regular`]);
//! * brute-force reference counts straight from the rewriting relations
//!   ([`oracle`]), used to cross-validate everything above.
//!
//! All arithmetic is exact. The kernels in [`exact`] are generic over the
//! integer scalar; the `Int*` aliases below fix [`num_bigint::BigInt`] so no
//! computation can overflow.
//!
//! ```
//! use growth::{Graph, Structure, Int};
//! use growth::spherical::spherical_gf_closed;
//!
//! // The square graph: its Artin group is F2 x F2.
//! let g = Graph::cycle(4);
//! let gf = spherical_gf_closed::<Int>(&g, Structure::Raag);
//! assert_eq!(gf.to_string(), "(1 + 2t + t^2)/(1 - 6t + 9t^2)");
//! assert_eq!(gf.expand(3).unwrap().coeffs()[..4].to_vec(),
//!            vec![Int::from(1), Int::from(8), Int::from(40), Int::from(168)]);
//! ```

pub mod exact;
pub mod geodesic;
pub mod graph;
pub mod link_regular;
pub mod oracle;
pub mod scalar;
pub mod spherical;

pub use crate::graph::{
    clique_polynomial, enumerate_cliques, induced_delete, link, link_regular_profile, Clique,
    CliqueIndex, Graph, GraphError, LinkProfile,
};
pub use crate::scalar::Scalar;
pub use crate::spherical::Structure;

/// The default exact scalar: arbitrary-precision integers.
pub type Int = num_bigint::BigInt;
/// Integer polynomial over [`Int`].
pub type IntPolynomial = exact::Polynomial<Int>;
/// Reduced rational function over [`Int`].
pub type IntRational = exact::RationalFunction<Int>;
/// Truncated integer series over [`Int`].
pub type IntSeries = exact::Series<Int>;
/// Square integer matrix over [`Int`].
pub type IntMatrix = exact::SquareMatrix<Int>;
