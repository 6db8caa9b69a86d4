//! Ideals of the polynomial ring and of its localization at the origin.
//!
//! Global membership is decided by reduction against a reduced Gröbner
//! basis that tracks how each basis element is built from the generators,
//! which yields explicit cofactors. Local membership uses
//! `f ∈ I·R_loc  ⇔  (I : f) ⊄ m`, where `m` is the ideal of all variables:
//! a generator `u` of the colon ideal with nonzero constant term is a local
//! unit with `u·f ∈ I`, and the cofactors of `u·f` complete the witness.

pub(crate) mod engine;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{local_unit_test, same_table, MonomialOrder, Poly, VarKind, Vars};
use engine::{Elem, Engine, Vector};

/// Cofactor certificate for `unit * f = Σ cofactors[i] * generators[i]`.
///
/// For global membership `unit` is one; for local membership it is a
/// polynomial with nonzero constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipWitness {
    pub cofactors: Vec<Poly>,
    pub unit: Poly,
}

impl MembershipWitness {
    /// Re-expands the certificate with plain ring arithmetic.
    pub fn verify(&self, f: &Poly, generators: &[Poly]) -> bool {
        if self.cofactors.len() != generators.len() || !local_unit_test(&self.unit) {
            return false;
        }
        let mut rhs = Poly::zero(f.vars());
        for (c, g) in self.cofactors.iter().zip(generators) {
            if !same_table(c.vars(), g.vars()) || !same_table(c.vars(), f.vars()) {
                return false;
            }
            rhs = &rhs + &(c * g);
        }
        same_table(self.unit.vars(), f.vars()) && &self.unit * f == rhs
    }

    /// Same check modulo terms of total degree `>= order`.
    pub fn verify_to_order(&self, f: &Poly, generators: &[Poly], order: u32) -> bool {
        if self.cofactors.len() != generators.len() || !local_unit_test(&self.unit) {
            return false;
        }
        let mut rhs = Poly::zero(f.vars());
        for (c, g) in self.cofactors.iter().zip(generators) {
            rhs = &rhs + &(c * g);
        }
        (&(&self.unit * f) - &rhs).truncate(order).is_zero()
    }
}

#[derive(Debug)]
struct Basis {
    polys: Vec<Poly>,
    elems: Vec<Elem>,
}

/// Finitely generated ideal with a lazily computed, cached Gröbner basis.
///
/// The zero ideal is represented by the single generator `0`.
#[derive(Debug, Clone)]
pub struct Ideal {
    vars: Vars,
    gens: Vec<Poly>,
    order: MonomialOrder,
    cache: OnceLock<Arc<Basis>>,
}

impl PartialEq for Ideal {
    /// Equality of generator lists, not of ideals; see [`equal_local`].
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.gens == other.gens
    }
}

impl Ideal {
    /// Ideal generated by `gens`. Zero and repeated generators are dropped;
    /// witnesses refer to [`Ideal::generators`].
    pub fn new(gens: Vec<Poly>) -> Result<Ideal> {
        Self::with_order(gens, MonomialOrder::Grevlex)
    }

    pub fn with_order(gens: Vec<Poly>, order: MonomialOrder) -> Result<Ideal> {
        let vars = gens
            .first()
            .map(|g| g.vars().clone())
            .ok_or_else(|| Error::Precondition("an ideal needs at least one generator".into()))?;
        if gens.iter().any(|g| !same_table(g.vars(), &vars)) {
            return Err(Error::VarTableMismatch);
        }
        Ok(Self::build(&vars, gens, order))
    }

    fn build(vars: &Vars, gens: Vec<Poly>, order: MonomialOrder) -> Ideal {
        let mut nonzero: Vec<Poly> = Vec::new();
        for g in gens {
            if !g.is_zero() && !nonzero.contains(&g) {
                nonzero.push(g);
            }
        }
        if nonzero.is_empty() {
            nonzero.push(Poly::zero(vars));
        }
        Ideal {
            vars: vars.clone(),
            gens: nonzero,
            order,
            cache: OnceLock::new(),
        }
    }

    pub fn zero(vars: &Vars) -> Ideal {
        Self::build(vars, vec![], MonomialOrder::Grevlex)
    }

    pub fn unit(vars: &Vars) -> Ideal {
        Self::build(vars, vec![Poly::one(vars)], MonomialOrder::Grevlex)
    }

    pub fn principal(f: &Poly) -> Ideal {
        Self::build(f.vars(), vec![f.clone()], MonomialOrder::Grevlex)
    }

    /// Same generators, different monomial order for basis computations.
    pub fn reordered(&self, order: MonomialOrder) -> Ideal {
        Self::build(&self.vars, self.gens.clone(), order)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(Poly::is_zero)
    }

    /// `true` iff some generator is a local unit, i.e. the ideal is the
    /// whole local ring.
    pub fn is_local_unit_ideal(&self) -> bool {
        self.gens.iter().any(local_unit_test)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_table(&self.vars, &other.vars) {
            return Err(Error::VarTableMismatch);
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::build(&self.vars, gens, self.order.clone()))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_table(&self.vars, &other.vars) {
            return Err(Error::VarTableMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ok(Self::build(&self.vars, gens, self.order.clone()))
    }

    fn basis(&self) -> &Basis {
        self.cache
            .get_or_init(|| Arc::new(compute_basis(&self.vars, &self.gens, &self.order)))
    }

    /// Reduced Gröbner basis in this ideal's own order (cached).
    pub fn groebner_basis(&self) -> &[Poly] {
        &self.basis().polys
    }
}

fn compute_basis(vars: &Vars, gens: &[Poly], order: &MonomialOrder) -> Basis {
    let eng = Engine::new(order.clone(), true);
    let input: Vec<Elem> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| Elem {
            v: Vector::from_poly(g, 0, &eng.ord),
            rep: Some(Vector::unit(i, vars.len())),
        })
        .collect();
    let elems = eng.groebner(input);
    let polys = elems.iter().map(|e| e.v.component(0, vars)).collect();
    Basis { polys, elems }
}

/// Reduced Gröbner basis of `ideal` in `order`. Cached when `order` is the
/// ideal's own order.
pub fn groebner_basis(ideal: &Ideal, order: &MonomialOrder) -> Vec<Poly> {
    if order == ideal.order() {
        ideal.groebner_basis().to_vec()
    } else {
        compute_basis(&ideal.vars, &ideal.gens, order).polys
    }
}

fn normal_form_with(f: &Poly, ideal: &Ideal, basis: &Basis) -> (Poly, MembershipWitness) {
    let vars = &ideal.vars;
    let eng = Engine::new(ideal.order.clone(), true);
    let fv = Vector::from_poly(f, 0, &eng.ord);
    let (rem, rep) = eng.reduce(fv, Some(Vector::zero()), &basis.elems, None);
    let rep = rep.expect("tracked");
    let cofactors = (0..ideal.gens.len())
        .map(|i| -rep.component(i, vars))
        .collect();
    (
        rem.component(0, vars),
        MembershipWitness {
            cofactors,
            unit: Poly::one(vars),
        },
    )
}

/// Normal form of `f` with respect to `ideal` in `order`, together with the
/// cofactors of `f - remainder` in terms of the ideal's generators.
pub fn normal_form(f: &Poly, ideal: &Ideal, order: &MonomialOrder) -> Result<(Poly, MembershipWitness)> {
    if !same_table(f.vars(), &ideal.vars) {
        return Err(Error::VarTableMismatch);
    }
    if order == ideal.order() {
        Ok(normal_form_with(f, ideal, ideal.basis()))
    } else {
        let other = ideal.reordered(order.clone());
        Ok(normal_form_with(f, &other, other.basis()))
    }
}

/// Membership in the polynomial ring.
pub fn member_global(f: &Poly, ideal: &Ideal) -> Result<(bool, Option<MembershipWitness>)> {
    if !same_table(f.vars(), &ideal.vars) {
        return Err(Error::VarTableMismatch);
    }
    let (rem, w) = normal_form_with(f, ideal, ideal.basis());
    Ok(if rem.is_zero() {
        (true, Some(w))
    } else {
        (false, None)
    })
}

/// Intersection by elimination of an auxiliary variable `t` from
/// `t·I + (1 - t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if !same_table(&a.vars, &b.vars) {
        return Err(Error::VarTableMismatch);
    }
    let vars = &a.vars;
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::build(vars, vec![], a.order.clone()));
    }
    let tname = vars.fresh_name("t", &[]);
    let ext = vars.extend(&[(tname, VarKind::Base)])?;
    let t = Poly::var(&ext, vars.len());
    let one_minus_t = &Poly::one(&ext) - &t;
    let order = MonomialOrder::elimination(ext.len(), &[vars.len()]);
    let eng = Engine::new(order, true);
    let mut input = Vec::new();
    for g in &a.gens {
        let g = &g.embed(&ext)? * &t;
        input.push(Elem {
            v: Vector::from_poly(&g, 0, &eng.ord),
            rep: None,
        });
    }
    for g in &b.gens {
        let g = &g.embed(&ext)? * &one_minus_t;
        input.push(Elem {
            v: Vector::from_poly(&g, 0, &eng.ord),
            rep: None,
        });
    }
    let gb = eng.groebner(input);
    let mut gens = Vec::new();
    for e in gb {
        let p = e.v.component(0, &ext);
        if p.degree_in(vars.len()) == 0 {
            gens.push(p.restrict(vars)?);
        }
    }
    Ok(Ideal::build(vars, gens, a.order.clone()))
}

/// The colon ideal `I : f = { g : g·f ∈ I }`.
pub fn colon(ideal: &Ideal, f: &Poly) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inter = intersect(ideal, &Ideal::principal(f).reordered(ideal.order.clone()))?;
    let gens = inter
        .gens
        .iter()
        .map(|g| g.divide_exact(f))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::build(&ideal.vars, gens, ideal.order.clone()))
}

/// Membership in the localization at the origin.
pub fn member_local(f: &Poly, ideal: &Ideal) -> Result<(bool, Option<MembershipWitness>)> {
    if !same_table(f.vars(), &ideal.vars) {
        return Err(Error::VarTableMismatch);
    }
    let vars = &ideal.vars;
    if f.is_zero() {
        return Ok((
            true,
            Some(MembershipWitness {
                cofactors: vec![Poly::zero(vars); ideal.gens.len()],
                unit: Poly::one(vars),
            }),
        ));
    }
    if ideal.is_zero_ideal() {
        return Ok((false, None));
    }
    if let (true, w) = member_global(f, ideal)? {
        return Ok((true, w));
    }
    let quotient = colon(ideal, f)?;
    // Fewest terms first keeps certificates small.
    let unit = quotient
        .gens
        .iter()
        .filter(|g| local_unit_test(g))
        .min_by_key(|g| g.num_terms())
        .cloned();
    let Some(unit) = unit else {
        return Ok((false, None));
    };
    let (rem, w) = normal_form_with(&(&unit * f), ideal, ideal.basis());
    debug_assert!(rem.is_zero(), "colon generator times f must lie in the ideal");
    if !rem.is_zero() {
        return Ok((false, None));
    }
    Ok((
        true,
        Some(MembershipWitness {
            cofactors: w.cofactors,
            unit,
        }),
    ))
}

/// Outcome of a generator-by-generator inclusion test.
#[derive(Debug, Clone)]
pub struct SubsetOutcome {
    pub holds: bool,
    /// One witness per generator checked, in order, up to the first failure.
    pub witnesses: Vec<(Poly, MembershipWitness)>,
    pub failing: Option<Poly>,
}

/// `I ⊆ J` in the localization; stops at the first generator of `I` that fails.
pub fn subset_local(i: &Ideal, j: &Ideal) -> Result<SubsetOutcome> {
    let mut witnesses = Vec::new();
    for g in &i.gens {
        match member_local(g, j)? {
            (true, Some(w)) => witnesses.push((g.clone(), w)),
            _ => {
                return Ok(SubsetOutcome {
                    holds: false,
                    witnesses,
                    failing: Some(g.clone()),
                })
            }
        }
    }
    Ok(SubsetOutcome {
        holds: true,
        witnesses,
        failing: None,
    })
}

/// Equality of ideals in the localization (mutual inclusion).
pub fn equal_local(i: &Ideal, j: &Ideal) -> Result<bool> {
    Ok(subset_local(i, j)?.holds && subset_local(j, i)?.holds)
}

/// Evidence behind a coprimality decision.
#[derive(Debug, Clone)]
pub struct CoprimeOutcome {
    pub coprime: bool,
    pub intersection: Ideal,
    pub product: Ideal,
    pub inclusion: SubsetOutcome,
}

/// `I ∩ J = I·J` locally. Only `I ∩ J ⊆ I·J` needs checking.
pub fn coprime_local_certified(i: &Ideal, j: &Ideal) -> Result<CoprimeOutcome> {
    let intersection = intersect(i, j)?;
    let product = i.product(j)?;
    let inclusion = subset_local(&intersection, &product)?;
    Ok(CoprimeOutcome {
        coprime: inclusion.holds,
        intersection,
        product,
        inclusion,
    })
}

pub fn coprime_local(i: &Ideal, j: &Ideal) -> Result<bool> {
    Ok(coprime_local_certified(i, j)?.coprime)
}

/// Is the ideal `(1)` globally? Cheap check through the cached basis.
pub fn is_unit_ideal_global(i: &Ideal) -> bool {
    let b = i.groebner_basis();
    b.len() == 1 && b[0].is_constant() && !b[0].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    fn ring(names: &[&str]) -> Vars {
        VarTable::new(names).unwrap()
    }

    fn p(s: &str, v: &Vars) -> Poly {
        Poly::parse(s, v).unwrap()
    }

    fn ideal(gens: &[&str], v: &Vars) -> Ideal {
        Ideal::new(gens.iter().map(|s| p(s, v)).collect()).unwrap()
    }

    #[test]
    fn basis_examples() {
        let v = ring(&["x", "y"]);
        assert_eq!(ideal(&["x", "y"], &v).groebner_basis(), &[p("x", &v), p("y", &v)]);
        assert_eq!(
            ideal(&["x^2 + y", "x*y"], &v).groebner_basis(),
            &[p("x^2 + y", &v), p("x*y", &v), p("y^2", &v)]
        );
        assert_eq!(ideal(&["2*x*y - 4"], &v).groebner_basis(), &[p("x*y - 2", &v)]);
        assert!(ideal(&["0"], &v).groebner_basis().is_empty());
        assert_eq!(ideal(&["x", "3"], &v).groebner_basis(), &[p("1", &v)]);
    }

    #[test]
    fn normal_forms() {
        let v = ring(&["x", "y"]);
        let i = ideal(&["x^2 + y"], &v);
        let f = p("x^2*y", &v);
        let (r, w) = normal_form(&f, &i, &MonomialOrder::Grevlex).unwrap();
        assert_eq!(r, p("-y^2", &v));
        assert_eq!(w.cofactors, vec![p("y", &v)]);
        assert_eq!(&(&w.cofactors[0] * &i.generators()[0]) + &r, f);

        let (r, _) = normal_form(&f, &ideal(&["x^2*y"], &v), &MonomialOrder::Lex).unwrap();
        assert!(r.is_zero());
        let (r, _) = normal_form(&p("1", &v), &ideal(&["x", "y"], &v), &MonomialOrder::Grevlex).unwrap();
        assert_eq!(r, p("1", &v));
    }

    #[test]
    fn global_membership() {
        let v = ring(&["x1", "x2"]);
        let (yes, w) = member_global(&p("x2^3 - x1^3", &v), &ideal(&["x2 - x1"], &v)).unwrap();
        assert!(yes);
        assert!(w.unwrap().verify(&p("x2^3 - x1^3", &v), &[p("x2 - x1", &v)]));
        let (no, _) = member_global(&p("x1*x2", &v), &ideal(&["x1^2", "x2^2"], &v)).unwrap();
        assert!(!no);
        let f = p("x1^2 + 3*x2", &v);
        let (yes, w) = member_global(&f, &Ideal::principal(&f)).unwrap();
        assert!(yes);
        assert_eq!(w.unwrap().cofactors, vec![p("1", &v)]);
    }

    #[test]
    fn intersections_and_colons() {
        let v = ring(&["x", "y", "x1", "x2"]);
        let xy = intersect(&ideal(&["x"], &v), &ideal(&["y"], &v)).unwrap();
        assert_eq!(xy.generators(), &[p("x*y", &v)]);
        let xx = intersect(&ideal(&["x"], &v), &ideal(&["x"], &v)).unwrap();
        assert_eq!(xx.generators(), &[p("x", &v)]);
        let i = intersect(&ideal(&["x2 - x1"], &v), &ideal(&["x2^2 + x2*x1 + x1^2"], &v)).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].monic(), p("x2^3 - x1^3", &v).monic());

        assert_eq!(colon(&ideal(&["x*y"], &v), &p("x", &v)).unwrap().generators(), &[p("y", &v)]);
        assert_eq!(colon(&ideal(&["x^2"], &v), &p("x", &v)).unwrap().generators(), &[p("x", &v)]);
        let c = colon(&ideal(&["x*y", "x^2"], &v), &p("x", &v)).unwrap();
        assert!(equal_local(&c, &ideal(&["x", "y"], &v)).unwrap());
        assert!(colon(&ideal(&["x"], &v), &p("0", &v)).is_err());
    }

    #[test]
    fn local_membership() {
        let v = ring(&["x", "y"]);
        let i = ideal(&["x^2 + x^3"], &v);
        let f = p("x^2", &v);
        let (yes, w) = member_local(&f, &i).unwrap();
        assert!(yes);
        let w = w.unwrap();
        assert_eq!(w.unit, p("1 + x", &v));
        assert!(w.verify(&f, i.generators()));
        assert!(!member_global(&f, &i).unwrap().0);

        assert!(!member_local(&p("x", &v), &ideal(&["x^2", "x*y"], &v)).unwrap().0);
    }

    #[test]
    fn subsets_and_coprimality() {
        let v = ring(&["x", "y", "x1", "x2"]);
        assert!(subset_local(&ideal(&["x"], &v), &ideal(&["x", "y"], &v)).unwrap().holds);
        let out = subset_local(&ideal(&["x", "y"], &v), &ideal(&["x"], &v)).unwrap();
        assert!(!out.holds);
        assert_eq!(out.failing, Some(p("y", &v)));

        assert!(coprime_local(&ideal(&["x"], &v), &ideal(&["y"], &v)).unwrap());
        assert!(!coprime_local(&ideal(&["x"], &v), &ideal(&["x + x^2"], &v)).unwrap());
        for n in 1..=3 {
            let f1 = format!("x2 - x1^{n}");
            let f2 = format!("x2^2 + x2*x1^{n} + x1^{}", 2 * n);
            assert!(coprime_local(&ideal(&[&f1], &v), &ideal(&[&f2], &v)).unwrap());
        }
    }

    #[test]
    fn conjugation_corollary_inclusion() {
        // A = [[x2, x1], [x1, x2]]: tr = 2*x2, sqrt(D) = 2*x1
        let v = ring(&["x", "y", "x1", "x2"]);
        let lhs = ideal(&["x*x1", "x*x1", "2*y + 2*x*x2", "0"], &v);
        let rhs = ideal(&["2*y + 2*x*x2", "2*x*x1"], &v);
        let out = subset_local(&lhs, &rhs).unwrap();
        assert!(out.holds);
        for (g, w) in &out.witnesses {
            assert!(w.verify(g, rhs.generators()));
        }
    }
}
