//! Left-right block-diagonalizability of matrices over the local ring.
//!
//! The checks follow the Fitting-ideal criteria: for a square `A` with
//! `det(A) = f1·f2`, non-unit non-zero-divisor coprime factors, `A` splits as
//! `A1 ⊕ A2` with `det(Ai) = fi` iff `I_{m-1}(A) ⊆ (f1) + (f2)` locally; the
//! rectangular version replaces the factors by ideals `J1, J2` with
//! `I_m(A) = J1·J2`, under a genericity condition on the kernel.
//!
//! Verdicts are three-valued. A failed hypothesis never produces
//! `NotDecomposable`; it produces `Inconclusive` naming the hypothesis.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{coprime_local_certified, subset_local, Ideal, MembershipWitness, SubsetOutcome};
use crate::matrix::{det, fitting_ideal, kernel_with_order, PolyMatrix};
use crate::ring::{local_unit_test, same_table, sqrt_exact, sqrt_series, MonomialOrder, Poly, Rational, Vars};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Decomposable,
    NotDecomposable,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Decomposable => "Decomposable",
            Status::NotDecomposable => "NotDecomposable",
            Status::Inconclusive => "Inconclusive",
        })
    }
}

/// Whether ideal tests were exact or carried out modulo `m^N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    ToOrder(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One certified inclusion `element ∈ (ideal)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inclusion {
    /// What the inclusion is evidence for, e.g. `"I_2(A) ⊆ (f1)+(f2)"`.
    pub label: String,
    pub element: Poly,
    pub ideal: Vec<Poly>,
    pub witness: MembershipWitness,
    /// `Some(N)` when the identity only holds modulo terms of degree `>= N`.
    pub order: Option<u32>,
}

impl Inclusion {
    pub fn verify(&self) -> bool {
        match self.order {
            None => self.witness.verify(&self.element, &self.ideal),
            Some(n) => self.witness.verify_to_order(&self.element, &self.ideal, n),
        }
    }
}

/// A determinant identity `det(matrix) = Π factors` (modulo degree `order` if set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetIdentity {
    pub matrix: PolyMatrix,
    pub factors: Vec<Poly>,
    pub order: Option<u32>,
}

impl DetIdentity {
    pub fn verify(&self) -> bool {
        let Ok(d) = det(&self.matrix) else {
            return false;
        };
        let prod = self
            .factors
            .iter()
            .fold(Poly::one(self.matrix.vars()), |acc, f| &acc * f);
        match self.order {
            None => d == prod,
            Some(n) => (&d - &prod).truncate(n).is_zero(),
        }
    }
}

/// Answer of a decomposability check together with its evidence.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub status: Status,
    pub hypotheses: Vec<HypothesisCheck>,
    pub inclusions: Vec<Inclusion>,
    pub det_identities: Vec<DetIdentity>,
    /// The minor (or other generator) outside the target ideal, for `NotDecomposable`.
    pub failing_element: Option<Poly>,
    /// The first hypothesis that failed, for `Inconclusive`.
    pub failed_hypothesis: Option<String>,
    /// Label of the inclusion that decides the verdict.
    pub deciding_inclusion: Option<String>,
    pub notes: Vec<String>,
    pub scope: String,
    pub exactness: Exactness,
    pub vars: Vars,
}

impl Verdict {
    pub(crate) fn new(vars: &Vars, scope: String) -> Self {
        Verdict {
            status: Status::Inconclusive,
            hypotheses: Vec::new(),
            inclusions: Vec::new(),
            det_identities: Vec::new(),
            failing_element: None,
            failed_hypothesis: None,
            deciding_inclusion: None,
            notes: Vec::new(),
            scope,
            exactness: Exactness::Exact,
            vars: vars.clone(),
        }
    }

    /// Records a hypothesis; returns `passed`.
    pub(crate) fn hypothesis(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.hypotheses.push(HypothesisCheck {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        if !passed && self.failed_hypothesis.is_none() {
            self.failed_hypothesis = Some(name.to_string());
            self.status = Status::Inconclusive;
        }
        passed
    }

    pub(crate) fn add_subset(&mut self, label: &str, target: &Ideal, outcome: &SubsetOutcome) {
        for (g, w) in &outcome.witnesses {
            self.inclusions.push(Inclusion {
                label: label.to_string(),
                element: g.clone(),
                ideal: target.generators().to_vec(),
                witness: w.clone(),
                order: None,
            });
        }
    }

    /// Sets the final status from the deciding inclusion.
    pub(crate) fn decide(&mut self, label: &str, target: &Ideal, outcome: &SubsetOutcome) {
        self.add_subset(label, target, outcome);
        self.deciding_inclusion = Some(label.to_string());
        if outcome.holds {
            self.status = Status::Decomposable;
        } else {
            self.status = Status::NotDecomposable;
            self.failing_element = outcome.failing.clone();
        }
    }

    /// Re-expands every witness and determinant identity with ring arithmetic.
    pub fn verify(&self) -> std::result::Result<(), String> {
        for (k, inc) in self.inclusions.iter().enumerate() {
            if !inc.verify() {
                return Err(format!("inclusion #{k} ({}) does not re-expand", inc.label));
            }
        }
        for (k, id) in self.det_identities.iter().enumerate() {
            if !id.verify() {
                return Err(format!("determinant identity #{k} does not hold"));
            }
        }
        if self.status == Status::Inconclusive && self.failed_hypothesis.is_none() {
            return Err("inconclusive verdict without a named hypothesis".into());
        }
        Ok(())
    }
}

/// Hypothesis names, in the order they are checked.
pub mod hypotheses {
    pub const DET_FACTORIZATION: &str = "determinant factorization";
    pub const FACTORS_PROPER: &str = "factors are non-units and non-zero-divisors";
    pub const FACTORS_COPRIME: &str = "factors are coprime";
    pub const ANNIHILATOR: &str = "maximal minors have zero annihilator";
    pub const KERNEL: &str = "kernel condition";
    pub const IDEALS_NONTRIVIAL: &str = "ideals are nontrivial";
    pub const IDEAL_FACTORIZATION: &str = "maximal minors factor as J1*J2";
    pub const IDEALS_COPRIME: &str = "ideals are coprime";
    pub const MONOMIAL_BOUND: &str = "factors contain a vertex monomial";
    pub const DISCRIMINANT_NONZERO: &str = "nondegenerate discriminant";
    pub const DISCRIMINANT_RATIONAL_ROOT: &str = "discriminant has a root in the ring";
}

const DOMAIN_NOTE: &str = "the ring is an integral domain: 'non-zero-divisor' and 'ann = 0' reduce to 'nonzero'";

/// Runs the checks with a fixed monomial order for all basis computations.
#[derive(Debug, Clone, Default)]
pub struct Checker {
    pub order: MonomialOrder,
}

pub(crate) fn align(f: &Poly, vars: &Vars) -> Result<Poly> {
    if same_table(f.vars(), vars) {
        Ok(f.clone())
    } else {
        f.embed(vars)
    }
}

impl Checker {
    pub fn new(order: MonomialOrder) -> Self {
        Checker { order }
    }

    pub(crate) fn ideal(&self, gens: Vec<Poly>) -> Result<Ideal> {
        Ideal::with_order(gens, self.order.clone())
    }

    /// `det(a) = f1·f2` exactly; records the identity on success.
    pub(crate) fn det_hypothesis(&self, verdict: &mut Verdict, a: &PolyMatrix, f1: &Poly, f2: &Poly) -> Result<bool> {
        let d = det(a)?;
        let product = f1 * f2;
        let ok = d == product;
        verdict.hypothesis(
            hypotheses::DET_FACTORIZATION,
            ok,
            if ok {
                "det = f1*f2 exactly".to_string()
            } else {
                format!("det = {d}, but f1*f2 = {product}")
            },
        );
        if ok {
            verdict.det_identities.push(DetIdentity {
                matrix: a.clone(),
                factors: vec![f1.clone(), f2.clone()],
                order: None,
            });
        }
        Ok(ok)
    }

    pub(crate) fn proper_hypothesis(&self, verdict: &mut Verdict, f1: &Poly, f2: &Poly) -> bool {
        let proper = |f: &Poly| !f.is_zero() && !local_unit_test(f);
        let ok = proper(f1) && proper(f2);
        verdict.hypothesis(
            hypotheses::FACTORS_PROPER,
            ok,
            if ok {
                "both factors are nonzero and vanish at the origin"
            } else {
                "a factor is zero or a local unit"
            },
        );
        if ok {
            verdict.notes.push(DOMAIN_NOTE.to_string());
        }
        ok
    }

    pub(crate) fn coprime_hypothesis(&self, verdict: &mut Verdict, f1: &Poly, f2: &Poly) -> Result<bool> {
        let i1 = self.ideal(vec![f1.clone()])?;
        let i2 = self.ideal(vec![f2.clone()])?;
        let cop = coprime_local_certified(&i1, &i2)?;
        let ok = verdict.hypothesis(
            hypotheses::FACTORS_COPRIME,
            cop.coprime,
            if cop.coprime {
                "(f1) ∩ (f2) ⊆ (f1*f2) locally".to_string()
            } else {
                format!(
                    "intersection generator {} is not in (f1*f2)",
                    cop.inclusion.failing.as_ref().map_or("?".into(), |g| g.to_string())
                )
            },
        );
        if ok {
            verdict.add_subset("(f1) ∩ (f2) ⊆ (f1*f2)", &cop.product, &cop.inclusion);
        }
        Ok(ok)
    }

    /// Square case: `A ~ A1 ⊕ A2` with `det(Ai) = fi` iff `I_{m-1}(A) ⊆ (f1)+(f2)`.
    pub fn check_square_lr(&self, a: &PolyMatrix, f1: &Poly, f2: &Poly) -> Result<Verdict> {
        if !a.is_square() {
            return Err(Error::Dimension(format!("expected a square matrix, got {}x{}", a.rows(), a.cols())));
        }
        let m = a.rows();
        if m <= 1 {
            return Err(Error::Dimension("the matrix must be at least 2x2".into()));
        }
        let f1 = align(f1, a.vars())?;
        let f2 = align(f2, a.vars())?;
        let mut verdict = Verdict::new(
            a.vars(),
            "relative to the supplied factor pair: decides whether A ~ A1 ⊕ A2 with det(A1) = f1, det(A2) = f2 (up to units); NotDecomposable excludes only such splittings".into(),
        );
        if !a.vanishes_at_origin() {
            verdict.notes.push("A has unit entries; the criterion is applied as stated".into());
        }
        if !self.det_hypothesis(&mut verdict, a, &f1, &f2)?
            || !self.proper_hypothesis(&mut verdict, &f1, &f2)
            || !self.coprime_hypothesis(&mut verdict, &f1, &f2)?
        {
            return Ok(verdict);
        }
        let minors = fitting_ideal(a, m - 1)?.reordered(self.order.clone());
        let target = self.ideal(vec![f1.clone(), f2.clone()])?;
        let outcome = subset_local(&minors, &target)?;
        verdict.decide(&format!("I_{}(A) ⊆ (f1)+(f2)", m - 1), &target, &outcome);
        Ok(verdict)
    }

    /// Rectangular case with a supplied ideal pair `J1, J2`.
    pub fn check_rect_lr(&self, a: &PolyMatrix, j1: &Ideal, j2: &Ideal) -> Result<Verdict> {
        let (m, n) = (a.rows(), a.cols());
        if m > n {
            return Err(Error::Dimension(format!("expected rows <= columns, got {m}x{n}")));
        }
        if m <= 1 {
            return Err(Error::Dimension("the matrix must have at least two rows".into()));
        }
        let vars = a.vars();
        let embed_ideal = |j: &Ideal| -> Result<Ideal> {
            let gens = j
                .generators()
                .iter()
                .map(|g| align(g, vars))
                .collect::<Result<Vec<_>>>()?;
            self.ideal(gens)
        };
        let j1 = embed_ideal(j1)?;
        let j2 = embed_ideal(j2)?;
        let mut verdict = Verdict::new(
            vars,
            "relative to the supplied ideal pair: decides whether A ~ A1 ⊕ A2 with I(A1) = J1, I(A2) = J2 for the maximal-minor ideals; NotDecomposable excludes only such splittings".into(),
        );

        let maximal = fitting_ideal(a, m)?.reordered(self.order.clone());
        let nonzero = !maximal.is_zero_ideal();
        if !verdict.hypothesis(
            hypotheses::ANNIHILATOR,
            nonzero,
            if nonzero { "I_m(A) ≠ (0)" } else { "I_m(A) = (0)" },
        ) {
            return Ok(verdict);
        }
        verdict.notes.push(DOMAIN_NOTE.to_string());

        let ker = kernel_with_order(a, &self.order);
        let mut kernel_ok = true;
        let mut detail = format!("{} kernel generator(s); all components lie in I_m(A)", ker.generators.len());
        'outer: for (k, v) in ker.generators.iter().enumerate() {
            for (i, c) in v.iter().enumerate() {
                let (yes, w) = crate::groebner::member_local(c, &maximal)?;
                if yes {
                    verdict.inclusions.push(Inclusion {
                        label: "ker(A) ⊆ I_m(A)·R^n".into(),
                        element: c.clone(),
                        ideal: maximal.generators().to_vec(),
                        witness: w.expect("witness"),
                        order: None,
                    });
                } else {
                    kernel_ok = false;
                    detail = format!("component {i} of kernel generator {k} ({c}) is not in I_m(A)");
                    break 'outer;
                }
            }
        }
        if !verdict.hypothesis(hypotheses::KERNEL, kernel_ok, detail) {
            return Ok(verdict);
        }

        let trivial = |j: &Ideal| j.is_zero_ideal() || j.is_local_unit_ideal();
        let nontrivial = !trivial(&j1) && !trivial(&j2);
        verdict.notes.push("'nontrivial' read as: neither (0) nor the unit ideal of the local ring".into());
        if !verdict.hypothesis(
            hypotheses::IDEALS_NONTRIVIAL,
            nontrivial,
            if nontrivial { "J1, J2 are proper nonzero ideals" } else { "J1 or J2 is (0) or (1)" },
        ) {
            return Ok(verdict);
        }

        let product = j1.product(&j2)?;
        let fwd = subset_local(&maximal, &product)?;
        let bwd = if fwd.holds { Some(subset_local(&product, &maximal)?) } else { None };
        let equal = fwd.holds && bwd.as_ref().is_some_and(|b| b.holds);
        if !verdict.hypothesis(
            hypotheses::IDEAL_FACTORIZATION,
            equal,
            if equal { "I_m(A) = J1*J2 locally" } else { "I_m(A) ≠ J1*J2 locally" },
        ) {
            return Ok(verdict);
        }
        verdict.add_subset("I_m(A) ⊆ J1*J2", &product, &fwd);
        verdict.add_subset("J1*J2 ⊆ I_m(A)", &maximal, bwd.as_ref().expect("checked"));

        let cop = coprime_local_certified(&j1, &j2)?;
        if !verdict.hypothesis(
            hypotheses::IDEALS_COPRIME,
            cop.coprime,
            if cop.coprime { "J1 ∩ J2 = J1*J2 locally" } else { "J1 ∩ J2 ≠ J1*J2 locally" },
        ) {
            return Ok(verdict);
        }
        verdict.add_subset("J1 ∩ J2 ⊆ J1*J2", &cop.product, &cop.inclusion);

        let minors = fitting_ideal(a, m - 1)?.reordered(self.order.clone());
        let target = j1.sum(&j2)?;
        let outcome = subset_local(&minors, &target)?;
        verdict.decide(&format!("I_{}(A) ⊆ J1+J2", m - 1), &target, &outcome);
        Ok(verdict)
    }
}

/// Square check with the default (grevlex) order.
pub fn check_square_lr(a: &PolyMatrix, f1: &Poly, f2: &Poly) -> Result<Verdict> {
    Checker::default().check_square_lr(a, f1, f2)
}

/// Rectangular check with the default (grevlex) order.
pub fn check_rect_lr(a: &PolyMatrix, j1: &Ideal, j2: &Ideal) -> Result<Verdict> {
    Checker::default().check_rect_lr(a, j1, j2)
}

/// Result of splitting a monic quadratic in one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSplit {
    /// `y - y_+` with `y_± = (-b ± √D)/2`.
    pub minus_root_plus: Poly,
    /// `y - y_-`.
    pub minus_root_minus: Poly,
    pub discriminant: Poly,
    /// `√D`, exact or truncated.
    pub root: Poly,
    pub exact: bool,
    /// For truncated splits: the product of the factors agrees with the
    /// (normalized) quadratic modulo terms of degree `>= congruence_order`.
    pub congruence_order: Option<u32>,
}

impl QuadSplit {
    pub fn factors(&self) -> (Poly, Poly) {
        (self.minus_root_plus.clone(), self.minus_root_minus.clone())
    }
}

/// Completes the square of `f = a*y^2 + b*y + c` (`a` a nonzero constant,
/// `b`, `c` free of `y`). Exact factors come from an exact root of the
/// discriminant; otherwise a series root truncated at relative order `order`
/// is used, and `None` is returned when neither exists.
pub fn quad_split_y(f: &Poly, y: usize, order: Option<u32>) -> Result<Option<QuadSplit>> {
    if f.degree_in(y) != 2 {
        return Err(Error::NotQuadratic(format!("degree {} in the variable", f.degree_in(y))));
    }
    let a = f.coeff_in_var(y, 2);
    if !a.is_constant() {
        return Err(Error::NotQuadratic("leading coefficient is not a nonzero constant".into()));
    }
    let inv = a.constant_term().recip();
    let b = f.coeff_in_var(y, 1).scale(&inv);
    let c = f.coeff_in_var(y, 0).scale(&inv);
    let disc = &(&b * &b) - &c.scale(&Rational::from_integer(4.into()));
    let yv = Poly::var(f.vars(), y);
    let half = Rational::new(1.into(), 2.into());
    let make = |root: &Poly| -> (Poly, Poly) {
        let plus = &yv + &(&b - root).scale(&half);
        let minus = &yv + &(&b + root).scale(&half);
        (plus, minus)
    };
    if let Some(root) = sqrt_exact(&disc) {
        let (plus, minus) = make(&root);
        let monic = f.scale(&inv);
        let q = monic.divide_exact(&plus)?;
        debug_assert_eq!(q, minus);
        return Ok(Some(QuadSplit {
            minus_root_plus: plus,
            minus_root_minus: q,
            discriminant: disc,
            root,
            exact: true,
            congruence_order: None,
        }));
    }
    let n = order.ok_or_else(|| {
        Error::OrderRequired("the discriminant has no exact square root".into())
    })?;
    match sqrt_series(&disc, n) {
        Ok(root) => {
            let (plus, minus) = make(&root);
            let congruence = n + disc.ord().unwrap_or(0);
            Ok(Some(QuadSplit {
                minus_root_plus: plus,
                minus_root_minus: minus,
                discriminant: disc,
                root,
                exact: false,
                congruence_order: Some(congruence),
            }))
        }
        Err(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    fn p(s: &str, v: &Vars) -> Poly {
        Poly::parse(s, v).unwrap()
    }

    fn mat(v: &Vars, rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse(v, &rows).unwrap()
    }

    #[test]
    fn square_diagonal_and_transformed() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let d = mat(&v, &[&["x", "0"], &["0", "y"]]);
        let verdict = check_square_lr(&d, &p("x", &v), &p("y", &v)).unwrap();
        assert_eq!(verdict.status, Status::Decomposable);
        verdict.verify().unwrap();

        // U * diag(x, y) * V with U = [[1,1],[0,1]], V = [[1,0],[1,1]]
        let u = mat(&v, &[&["1", "1"], &["0", "1"]]);
        let w = mat(&v, &[&["1", "0"], &["1", "1"]]);
        let a = u.mul(&d).unwrap().mul(&w).unwrap();
        assert_eq!(a, mat(&v, &[&["x + y", "y"], &["y", "y"]]));
        let verdict = check_square_lr(&a, &p("x", &v), &p("y", &v)).unwrap();
        assert_eq!(verdict.status, Status::Decomposable);
        verdict.verify().unwrap();
    }

    #[test]
    fn square_inconclusive_paths() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let d = mat(&v, &[&["x", "0"], &["0", "y"]]);
        let verdict = check_square_lr(&d, &p("x", &v), &p("x", &v)).unwrap();
        assert_eq!(verdict.status, Status::Inconclusive);
        assert_eq!(verdict.failed_hypothesis.as_deref(), Some(hypotheses::DET_FACTORIZATION));

        let d = mat(&v, &[&["x", "0"], &["0", "x"]]);
        let verdict = check_square_lr(&d, &p("x", &v), &p("x", &v)).unwrap();
        assert_eq!(verdict.failed_hypothesis.as_deref(), Some(hypotheses::FACTORS_COPRIME));

        let d = mat(&v, &[&["1 + x", "0"], &["0", "y"]]);
        let verdict = check_square_lr(&d, &p("1 + x", &v), &p("y", &v)).unwrap();
        assert_eq!(verdict.failed_hypothesis.as_deref(), Some(hypotheses::FACTORS_PROPER));

        assert!(check_square_lr(&mat(&v, &[&["x", "y"]]), &p("x", &v), &p("y", &v)).is_err());
        assert!(check_square_lr(&mat(&v, &[&["x"]]), &p("x", &v), &p("1", &v)).is_err());
    }

    #[test]
    fn rectangular_examples() {
        let v = VarTable::new(&["x", "y", "z"]).unwrap();
        let id = |gens: &[&str]| Ideal::new(gens.iter().map(|s| p(s, &v)).collect()).unwrap();
        let d = mat(&v, &[&["x", "0"], &["0", "y"]]);
        let verdict = check_rect_lr(&d, &id(&["x"]), &id(&["y"])).unwrap();
        assert_eq!(verdict.status, Status::Decomposable);
        verdict.verify().unwrap();

        let a = mat(&v, &[&["x", "0", "0"], &["0", "y", "z"]]);
        let verdict = check_rect_lr(&a, &id(&["x"]), &id(&["y", "z"])).unwrap();
        assert_eq!(verdict.status, Status::Inconclusive);
        assert_eq!(verdict.failed_hypothesis.as_deref(), Some(hypotheses::KERNEL));

        let a = mat(&v, &[&["x", "0", "0"], &["0", "y", "0"]]);
        let verdict = check_rect_lr(&a, &id(&["x"]), &id(&["y"])).unwrap();
        assert_eq!(verdict.failed_hypothesis.as_deref(), Some(hypotheses::KERNEL));

        let tall = mat(&v, &[&["x"], &["y"], &["z"]]);
        assert!(check_rect_lr(&tall, &id(&["x"]), &id(&["y"])).is_err());
    }

    #[test]
    fn quadratic_splits() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let s = quad_split_y(&p("y^2 - x^2", &v), 1, None).unwrap().unwrap();
        assert!(s.exact);
        assert_eq!(s.factors(), (p("y - x", &v), p("y + x", &v)));

        let s = quad_split_y(&p("y^2 - x^2*(1 + x)", &v), 1, Some(4)).unwrap().unwrap();
        assert!(!s.exact);
        let series = p("1 + 1/2*x - 1/8*x^2 + 1/16*x^3", &v);
        let xs = &p("x", &v) * &series;
        assert_eq!(s.factors(), (&p("y", &v) - &xs, &p("y", &v) + &xs));
        let prod = &s.minus_root_plus * &s.minus_root_minus;
        let diff = &prod - &p("y^2 - x^2*(1 + x)", &v);
        assert!(diff.truncate(s.congruence_order.unwrap()).is_zero());

        assert!(matches!(
            quad_split_y(&p("y^2 - x^2*(1 + x)", &v), 1, None),
            Err(Error::OrderRequired(_))
        ));
        assert!(matches!(quad_split_y(&p("y^3", &v), 1, None), Err(Error::NotQuadratic(_))));
        assert_eq!(quad_split_y(&p("y^2 - x^3", &v), 1, Some(4)).unwrap(), None);
    }
}
