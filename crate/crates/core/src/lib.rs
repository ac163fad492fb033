//! Exact graded-dimension computations for finitely presented Lie algebras.
//!
//! Two independent pipelines compute the graded dimensions of a quotient of
//! a free Lie algebra by multihomogeneous relations of W-degree 0 or 1:
//!
//! * a brute-force oracle ([`oracle`]) that closes the relation ideal under
//!   bracketing and takes ranks componentwise in exact rational arithmetic;
//! * an elimination decomposition ([`elimination`]) that assembles the
//!   quotient as a semidirect product g x L(N) from much smaller linear
//!   algebra, where g is the V-part quotient and N a g-module carved out of
//!   the W-degree-1 slice.
//!
//! Agreement of the two on every multidegree is the correctness contract.
//! On top sits an application layer ([`gkm`]) that turns Borcherds-Cartan
//! matrices into Serre-type presentations and tabulates root multiplicities
//! of the nilpotent subalgebras, including the free partially commutative
//! special case.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! there is no floating point anywhere.

pub mod corpus;
pub mod elimination;
pub mod error;
pub mod freelie;
pub mod gkm;
pub mod linalg;
pub mod lyndon;
pub mod oracle;
pub mod presentation;
pub mod rational;
pub mod selfcheck;
pub mod series;

pub use error::{Error, Result};
pub use freelie::{bracket, ContextPool, FreeLieContext, LieCoordinates, NCPolynomial};
pub use linalg::{EchelonBasis, SparseMatrix, SparseVector};
pub use lyndon::{Alphabet, BracketTree, MultiDegree, Word};
pub use rational::Rational;
pub use series::{free_lie_dims, free_lie_on_module, pbw_series, witt_dim, GradedDims};
