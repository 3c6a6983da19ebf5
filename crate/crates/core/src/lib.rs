//! Discovery and verification of the multilinear polynomial identities
//! satisfied by the pre-Lie and pre-Jordan triple products in the free
//! dendriform dialgebra, in degrees 3, 5 and 7.
//!
//! The pipeline, bottom to top:
//!
//! - [`modlinalg`]: dense exact linear algebra over GF(p);
//! - [`symmetric`]: permutations, partitions, standard tableaux, Clifton
//!   representation matrices and group-algebra matrix units;
//! - [`freealg`]: ordered monomial bases of the multilinear spaces with
//!   two ternary operations (TT) and of the free dendriform dialgebra (DD);
//! - [`rewrite`]: normalization of dendriform monomials by the directed
//!   Gröbner-Shirshov rules;
//! - [`products`]: the trilinear operations under study and the expansion
//!   of TT-monomials into normalized DD combinations;
//! - [`identities`]: expansion matrices, liftings, module generators and
//!   the degree-3 submodule lattice;
//! - [`degree7`]: the per-irreducible-representation analysis in degree 7.

pub mod degree7;
pub mod error;
pub mod freealg;
pub mod identities;
pub mod modlinalg;
pub mod products;
pub mod rewrite;
pub mod symmetric;

pub use error::Error;
pub use modlinalg::{Gf, IdentityVector, ModMatrix};
