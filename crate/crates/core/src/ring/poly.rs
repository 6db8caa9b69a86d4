use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::vars::{same_table, Vars};
use super::Rational;
use crate::error::{Error, Result};

/// Multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map ordered by grevlex, so iteration runs from the
/// smallest monomial to the largest. No zero coefficient is ever stored.
#[derive(Clone)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic: fails when the operands live over different tables.
pub fn poly_arith(op: ArithOp, f: &Poly, g: &Poly) -> Result<Poly> {
    if !same_table(&f.vars, &g.vars) {
        return Err(Error::VarTableMismatch);
    }
    Ok(match op {
        ArithOp::Add => f.add_impl(g, false),
        ArithOp::Sub => f.add_impl(g, true),
        ArithOp::Mul => f.mul_impl(g),
    })
}

impl Poly {
    pub fn zero(vars: &Vars) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    /// The variable with index `i`.
    pub fn var(vars: &Vars, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    /// The variable called `name`.
    pub fn named(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UndeclaredVariable(name.to_string()))?;
        Ok(Self::var(vars, i))
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), vars.len(), "monomial length differs from table size");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(vars: &Vars, terms: I) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Largest term in grevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Order at the origin: the smallest total degree of a term.
    pub fn ord(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lowest-degree homogeneous part.
    pub fn lowest_form(&self) -> Poly {
        match self.ord() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    /// Drops every term of total degree `>= n`.
    pub fn truncate(&self, n: u32) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `var^k`, as a polynomial not involving `var`.
    pub fn coeff_in_var(&self, var: usize, k: u32) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut e = m.clone();
                e.0[var] = 0;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Sets the listed variables to zero.
    pub fn set_zero(&self, vars: &[usize]) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.0[v] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces variable `var` by the polynomial `value` (over the same table).
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero(&self.vars);
        let maxd = self.degree_in(var);
        let mut powers = vec![Poly::one(&self.vars)];
        for k in 1..=maxd as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = e.0[var] as usize;
            e.0[var] = 0;
            let t = Poly::monomial(&self.vars, e, c.clone());
            out = &out + &(&t * &powers[k]);
        }
        out
    }

    /// Re-expresses the polynomial over an extension of its table.
    pub fn embed(&self, target: &Vars) -> Result<Poly> {
        if same_table(&self.vars, target) {
            return Ok(self.clone());
        }
        if !self.vars.is_prefix_of(target) {
            return Err(Error::VarTableMismatch);
        }
        let n = target.len();
        Ok(Poly {
            vars: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.padded(n), c.clone()))
                .collect(),
        })
    }

    /// Re-expresses the polynomial over a table that is a prefix of its own.
    /// Fails if a dropped variable occurs.
    pub fn restrict(&self, target: &Vars) -> Result<Poly> {
        if !target.is_prefix_of(&self.vars) {
            return Err(Error::VarTableMismatch);
        }
        let n = target.len();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[n..].iter().any(|&e| e != 0) {
                return Err(Error::Precondition(
                    "polynomial involves variables outside the target table".into(),
                ));
            }
            terms.insert(Monomial(m.0[..n].to_vec()), c.clone());
        }
        Ok(Poly {
            vars: target.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient (grevlex). Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Multiplies by -1 when the leading (grevlex) coefficient of the
    /// lowest-degree part is negative.
    pub fn sign_normalized(&self) -> Poly {
        let low = self.lowest_form();
        match low.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Exact quotient `self / g`; fails if `g` does not divide `self`.
    pub fn divide_exact(&self, g: &Poly) -> Result<Poly> {
        if !same_table(&self.vars, &g.vars) {
            return Err(Error::VarTableMismatch);
        }
        let (lm, lc) = match g.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let t = lm.quotient_of(m).ok_or(Error::NotDivisible)?;
            let q = c / &lc;
            rem = rem.add_impl(&g.mul_monomial(&t, &q), true);
            quot.add_term(t, q);
        }
        Ok(quot)
    }

    /// Exponent vectors (restricted to `yvars`) of the monomials that involve
    /// no variable outside `yvars`.
    pub fn y_profile(&self, yvars: &[usize]) -> BTreeSet<Vec<u32>> {
        self.terms
            .keys()
            .filter(|m| {
                m.0.iter()
                    .enumerate()
                    .all(|(i, &e)| e == 0 || yvars.contains(&i))
            })
            .map(|m| yvars.iter().map(|&i| m.0[i]).collect())
            .collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_impl(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    fn check_same(&self, other: &Poly) {
        assert!(
            same_table(&self.vars, &other.vars),
            "polynomial operands live over different variable tables"
        );
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

// Operator impls panic on a table mismatch; use `poly_arith` for the checked form.
impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.check_same(rhs);
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.check_same(rhs);
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.check_same(rhs);
        self.mul_impl(rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Canonical form: terms in descending grevlex order, e.g. `x2^3 - 3/2*x1*y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.vars.name(i), e)),
                }
            }
            if factors.is_empty() {
                write_rational(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_rational(f, &abs)?;
                    write!(f, "*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    fn p(s: &str, vars: &Vars) -> Poly {
        Poly::parse(s, vars).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let v = VarTable::new(&["x", "y", "x1", "x2"]).unwrap();
        assert_eq!(&p("y - x", &v) * &p("y + x", &v), p("y^2 - x^2", &v));
        let f = p("x^2*y - 3*x + 1/2", &v);
        assert!((&f + &(-&f)).is_zero());
        assert_eq!(
            &p("x2 - x1^2", &v) * &p("x2^2 + x2*x1^2 + x1^4", &v),
            p("x2^3 - x1^6", &v)
        );
    }

    #[test]
    fn arith_rejects_mismatched_tables() {
        let a = VarTable::new(&["x"]).unwrap();
        let b = VarTable::new(&["y"]).unwrap();
        let r = poly_arith(ArithOp::Add, &Poly::var(&a, 0), &Poly::var(&b, 0));
        assert_eq!(r, Err(Error::VarTableMismatch));
        // structurally equal tables are compatible
        let c = VarTable::new(&["x"]).unwrap();
        assert!(poly_arith(ArithOp::Mul, &Poly::var(&a, 0), &Poly::var(&c, 0)).is_ok());
    }

    #[test]
    fn exact_division() {
        let v = VarTable::new(&["x", "y", "x1", "x2"]).unwrap();
        assert_eq!(
            p("y^2 - x^2", &v).divide_exact(&p("y - x", &v)).unwrap(),
            p("y + x", &v)
        );
        assert_eq!(
            p("x2^3 - x1^3", &v).divide_exact(&p("x2 - x1", &v)).unwrap(),
            p("x2^2 + x2*x1 + x1^2", &v)
        );
        assert_eq!(p("x", &v).divide_exact(&p("y", &v)), Err(Error::NotDivisible));
        assert_eq!(p("x", &v).divide_exact(&p("0", &v)), Err(Error::DivisionByZero));
    }

    #[test]
    fn truncation_and_units() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        assert_eq!(p("1 + x + x^2", &v).truncate(2), p("1 + x", &v));
        assert!(p("1 + x", &v).truncate(0).is_zero());
        assert_eq!(p("y^2 + x*y^3", &v).truncate(4), p("y^2", &v));
    }

    #[test]
    fn profile() {
        let v = VarTable::new(&["y1", "y2", "x12", "x21", "t", "d"]).unwrap();
        let f = p("y1^2*y2^2 - y1*y2*x12*x21*t + x12^2*x21^2*d", &v);
        let prof = f.y_profile(&[0, 1]);
        assert_eq!(prof.into_iter().collect::<Vec<_>>(), vec![vec![2, 2]]);
        assert!(p("x12*y1", &v).y_profile(&[0]).is_empty());
        let prof = p("y1 + y2", &v).y_profile(&[0, 1]);
        assert_eq!(prof.len(), 2);
        assert!(prof.contains(&vec![1, 0]) && prof.contains(&vec![0, 1]));
    }

    #[test]
    fn display_is_canonical() {
        let v = VarTable::new(&["x1", "x2", "y"]).unwrap();
        assert_eq!(p("(x2 - x1)*(x2^2 + x2*x1 + x1^2)", &v).to_string(), "-x1^3 + x2^3");
        assert_eq!(p("3/2*y - 1", &v).to_string(), "3/2*y - 1");
        assert_eq!(p("0", &v).to_string(), "0");
    }
}
