//! Exact decision procedures for block-diagonalizability of matrices and
//! quiver representations over the local ring of rational polynomials at
//! the origin.
//!
//! The library is organised bottom-up:
//!
//! * [`ring`]: rational polynomials, parsing, exact and series square roots;
//! * [`groebner`]: Gröbner bases, membership with cofactor witnesses, and
//!   local (at the origin) membership, intersection, colon and coprimality;
//! * [`matrix`]: polynomial matrices, determinants, Fitting ideals, kernels;
//! * [`decompose`]: the left-right decomposability checks for square and
//!   rectangular matrices, and the quadratic splitting helper;
//! * [`quiver`]: quiver representations, the Kronecker pencil embedding and
//!   the quiver and conjugation checks;
//! * [`oracle`]: a brute-force jet-space membership oracle and reproducible
//!   random instances;
//! * [`cli`]: the JSON job format and the command-line front end.
//!
//! Every positive answer carries a certificate that can be re-checked with
//! plain ring arithmetic.

pub mod cli;
pub mod decompose;
mod error;
pub mod groebner;
pub mod matrix;
pub mod oracle;
pub mod quiver;
pub mod ring;

pub use decompose::{Checker, Exactness, Status, Verdict};
pub use error::{Error, Result};
pub use groebner::{Ideal, MembershipWitness};
pub use matrix::PolyMatrix;
pub use quiver::{KroneckerForm, QuiverRep};
pub use ring::{MonomialOrder, Poly, Rational, VarTable, Vars};
