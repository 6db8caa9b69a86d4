//! Exact multivariate polynomials over the rationals.
//!
//! Elements of the local ring at the origin are represented by polynomials;
//! a polynomial is a unit there iff its constant term is nonzero. Power
//! series are handled as polynomials together with an explicit order bound.

mod monomial;
mod parse;
mod poly;
mod sqrt;
mod vars;

pub use monomial::{Monomial, MonomialOrder};
pub use poly::{poly_arith, ArithOp, Poly};
pub use sqrt::{local_unit_test, rational_sqrt, sqrt_exact, sqrt_series};
pub use vars::{VarKind, VarTable, Vars};

pub(crate) use vars::same_table;

/// Exact rational coefficient, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses a polynomial over `vars`.
pub fn parse_poly(text: &str, vars: &Vars) -> crate::Result<Poly> {
    Poly::parse(text, vars)
}

/// Drops every term of total degree `>= n`.
pub fn truncate(f: &Poly, n: u32) -> Poly {
    f.truncate(n)
}

/// Exact quotient `f / g`.
pub fn divide_exact(f: &Poly, g: &Poly) -> crate::Result<Poly> {
    f.divide_exact(g)
}

/// See [`Poly::y_profile`].
pub fn y_profile(f: &Poly, yvars: &[usize]) -> std::collections::BTreeSet<Vec<u32>> {
    f.y_profile(yvars)
}
