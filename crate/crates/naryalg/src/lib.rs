//! # naryalg
//!
//! An exact-arithmetic workbench for finite-dimensional n-ary algebras
//! given by structure constants.
//!
//! An n-ary algebra is a vector space `V = Q^p` with a multilinear
//! multiplication taking `n` arguments. This crate represents such products
//! sparsely by their structure constants, and provides:
//!
//! - **Identity checkers** ([`identities`]): the Filippov (n-Lie) Jacobi
//!   identity, the shuffle (sh) Jacobi identity of Lie n-algebras, the
//!   n-Leibniz condition, commutativity, partial/total associativity and
//!   their twists by a permutation, and 3-Lie admissibility. Every failure
//!   comes with a concrete witness tuple and exact defect vector.
//! - **Structure theory** ([`structure`]): derived and lower central
//!   series, nilpotency and solvability, Jordan-block characteristic
//!   sequences, filiform detection, derivation algebras, and the rank of
//!   the diagonal derivation torus.
//! - **Group-algebra machinery** ([`groupalg`]): exact computation in
//!   `Q[Sigma_m]`, shuffle enumeration, and the composition identity
//!   `w o v = alpha(n) w` that proves every n-Lie algebra is a sh-n-Lie
//!   algebra.
//! - **A catalog** ([`catalog`]) of the classical examples: the simple
//!   algebra `A_{n+1}`, filiform models and the 5-dimensional filiform
//!   family, truncated Jacobian algebras, twisted matrix products, cyclic
//!   tensor products, and Gerstenhaber insertion products.
//! - **Maurer-Cartan calculus** ([`exterior`]): the operator `d` on the
//!   dual space determined by the structure constants, with `d o d = 0`
//!   equivalent to the sh-Jacobi identity.
//!
//! All arithmetic is exact over the rationals; there is no floating point
//! anywhere, so every equality in the test suite is literal.
//!
//! ## Example
//!
//! ```
//! use naryalg::catalog;
//! use naryalg::identities::{check_filippov, Verdict};
//! use naryalg::structure::{is_nilpotent, characteristic_sequence};
//!
//! // the 4-dimensional filiform ternary algebra [v1,v2,v3] = v4
//! let algebra = catalog::filiform_model(3, 4);
//! assert_eq!(check_filippov(&algebra).unwrap(), Verdict::Pass);
//! assert!(is_nilpotent(&algebra));
//!
//! let (seq, certified) = characteristic_sequence(&algebra, &[], 0).unwrap();
//! assert_eq!(seq.parts(), &[2, 1, 1]);
//! assert!(certified);
//! ```
//!
//! The `naryalg` binary exposes the same machinery on algebra files; see
//! the book under `book/` and the README for the file format and the CLI.

pub mod catalog;
pub mod exterior;
pub mod fileformat;
pub mod groupalg;
pub mod identities;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod product;
pub mod rational;
pub mod report;
pub mod sampling;
pub mod structure;
pub mod subspace;

pub use identities::{Verdict, Witness};
pub use product::{NAryProduct, Symmetry};
pub use rational::Rational;
pub use subspace::Subspace;

/// The guide chapters, compiled as doc-tests so the book's code blocks stay
/// in sync with the library.
pub mod guide {
    #[doc = include_str!("../../../book/src/intro.md")]
    pub mod intro {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    pub mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/products.md")]
    pub mod products {}
    #[doc = include_str!("../../../book/src/identities.md")]
    pub mod identities {}
    #[doc = include_str!("../../../book/src/group-algebra.md")]
    pub mod group_algebra {}
    #[doc = include_str!("../../../book/src/structure.md")]
    pub mod structure {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    pub mod catalog {}
    #[doc = include_str!("../../../book/src/maurer-cartan.md")]
    pub mod maurer_cartan {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
