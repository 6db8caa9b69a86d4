//! Quiver representations over the ring and their Kronecker pencils.
//!
//! A representation assigns a free module of rank `m_i` to each vertex and a
//! matrix `A_ij: M_j -> M_i` to each arrow `j -> i`. After completing the
//! quiver (one arrow per ordered pair, parallel arrows merged with fresh
//! variables), the representation is encoded by the block pencil
//!
//! ```text
//! 𝒜_Q = [ x_1_1·A_11 + y_1·1   x_1_2·A_12          ... ]
//!       [ x_2_1·A_21           x_2_2·A_22 + y_2·1  ... ]
//! ```
//!
//! whose left-right decompositions with a vertex monomial in each
//! determinant factor correspond to decompositions of the representation.

use std::collections::BTreeMap;

use crate::decompose::{align, hypotheses, Checker, DetIdentity, Exactness, Inclusion, Status, Verdict};
use crate::error::{Error, Result};
use crate::groebner::subset_local;
use crate::matrix::{det, fitting_ideal, PolyMatrix};
use crate::oracle::jet_member_witness;
use crate::ring::{rational_sqrt, same_table, sqrt_exact, sqrt_series, Poly, Rational, VarKind, Vars};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub rank: usize,
}

impl Vertex {
    pub fn new(id: impl Into<String>, rank: usize) -> Self {
        Vertex { id: id.into(), rank }
    }
}

/// Arrow `from -> to` carrying a `rank(to) × rank(from)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub matrix: PolyMatrix,
}

impl Arrow {
    pub fn new(from: usize, to: usize, matrix: PolyMatrix) -> Self {
        Arrow { from, to, matrix }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    vars: Vars,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl QuiverRep {
    /// Validates ranks, endpoints and matrix shapes. Arrow matrices over a
    /// prefix of `vars` are embedded.
    pub fn new(vars: &Vars, vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Dimension("a quiver needs at least one vertex".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.rank == 0 {
                return Err(Error::Dimension(format!("vertex {} has rank 0", v.id)));
            }
            if vertices[..i].iter().any(|w| w.id == v.id) {
                return Err(Error::Dimension(format!("duplicate vertex id {}", v.id)));
            }
        }
        let mut checked = Vec::with_capacity(arrows.len());
        for a in arrows {
            let (Some(src), Some(dst)) = (vertices.get(a.from), vertices.get(a.to)) else {
                return Err(Error::Dimension(format!("arrow {} -> {} has an unknown endpoint", a.from, a.to)));
            };
            if a.matrix.rows() != dst.rank || a.matrix.cols() != src.rank {
                return Err(Error::Dimension(format!(
                    "arrow {} -> {} must be {}x{}, got {}x{}",
                    src.id,
                    dst.id,
                    dst.rank,
                    src.rank,
                    a.matrix.rows(),
                    a.matrix.cols()
                )));
            }
            let matrix = if same_table(a.matrix.vars(), vars) {
                a.matrix
            } else {
                a.matrix.embed(vars)?
            };
            checked.push(Arrow { matrix, ..a });
        }
        Ok(QuiverRep {
            vars: vars.clone(),
            vertices,
            arrows: checked,
        })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn total_rank(&self) -> usize {
        self.vertices.iter().map(|v| v.rank).sum()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Exactly one arrow for every ordered pair of vertices, loops included.
    pub fn is_complete_reduced(&self) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![0usize; n * n];
        for a in &self.arrows {
            seen[a.to * n + a.from] += 1;
        }
        seen.iter().all(|&c| c == 1)
    }

    /// The arrow `from -> to` of a complete reduced quiver.
    pub fn arrow(&self, from: usize, to: usize) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.from == from && a.to == to)
    }
}

/// Adds zero arrows for missing pairs and merges parallel arrows
/// `A(1), ..., A(N)` into `z_i_j_1·A(1) + ... + z_i_j_N·A(N)`.
/// A quiver that is already complete reduced is returned unchanged.
pub fn complete_reduce(q: &QuiverRep) -> QuiverRep {
    if q.is_complete_reduced() {
        return q.clone();
    }
    let n = q.vertices.len();
    let mut groups: BTreeMap<(usize, usize), Vec<&PolyMatrix>> = BTreeMap::new();
    for a in &q.arrows {
        groups.entry((a.to, a.from)).or_default().push(&a.matrix);
    }
    let mut fresh: Vec<(String, VarKind)> = Vec::new();
    let mut slots: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (&(to, from), mats) in &groups {
        if mats.len() > 1 {
            let mut idx = Vec::new();
            for k in 0..mats.len() {
                let taken: Vec<String> = fresh.iter().map(|(s, _)| s.clone()).collect();
                let name = q.vars.fresh_name(&format!("z_{}_{}_{}", to + 1, from + 1, k + 1), &taken);
                idx.push(q.vars.len() + fresh.len());
                fresh.push((name, VarKind::Arrow));
            }
            slots.insert((to, from), idx);
        }
    }
    let vars = if fresh.is_empty() {
        q.vars.clone()
    } else {
        q.vars.extend(&fresh).expect("fresh names are unique identifiers")
    };
    let mut arrows = Vec::with_capacity(n * n);
    for from in 0..n {
        for to in 0..n {
            let (r, c) = (q.vertices[to].rank, q.vertices[from].rank);
            let matrix = match groups.get(&(to, from)) {
                None => PolyMatrix::zeros(&vars, r, c),
                Some(mats) if mats.len() == 1 => mats[0].embed(&vars).expect("prefix table"),
                Some(mats) => {
                    let mut sum = PolyMatrix::zeros(&vars, r, c);
                    for (m, &zi) in mats.iter().zip(&slots[&(to, from)]) {
                        let term = m.embed(&vars).expect("prefix table").scale(&Poly::var(&vars, zi));
                        sum = sum.add(&term).expect("same shape");
                    }
                    sum
                }
            };
            arrows.push(Arrow { from, to, matrix });
        }
    }
    QuiverRep {
        vars,
        vertices: q.vertices.clone(),
        arrows,
    }
}

/// The block pencil of a complete reduced representation.
#[derive(Debug, Clone)]
pub struct KroneckerForm {
    pub matrix: PolyMatrix,
    /// Variables of the representation (a prefix of `matrix.vars()`).
    pub base: Vars,
    /// `(to, from, variable)` for each arrow variable.
    pub arrow_vars: Vec<(usize, usize, usize)>,
    /// One `y` variable per vertex.
    pub vertex_vars: Vec<usize>,
    /// Row/column offset of each vertex block.
    pub offsets: Vec<usize>,
    pub ranks: Vec<usize>,
}

impl KroneckerForm {
    pub fn vars(&self) -> &Vars {
        self.matrix.vars()
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// Variables introduced by the construction.
    pub fn fresh_vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.arrow_vars.iter().map(|t| t.2).collect();
        v.extend(&self.vertex_vars);
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Block `(i, j)` of the pencil.
    pub fn block(&self, i: usize, j: usize) -> PolyMatrix {
        let rows: Vec<usize> = (self.offsets[i]..self.offsets[i] + self.ranks[i]).collect();
        let cols: Vec<usize> = (self.offsets[j]..self.offsets[j] + self.ranks[j]).collect();
        self.matrix.submatrix(&rows, &cols)
    }
}

fn extend_fresh(base: &Vars, wanted: &[String], kind: &[VarKind]) -> Vars {
    let mut taken: Vec<String> = Vec::new();
    let mut extra = Vec::new();
    for (w, k) in wanted.iter().zip(kind) {
        let name = base.fresh_name(w, &taken);
        taken.push(name.clone());
        extra.push((name, *k));
    }
    base.extend(&extra).expect("fresh names are unique identifiers")
}

/// Builds the pencil with fresh variables `x_i_j` (arrow `j -> i`) and `y_i`,
/// indices 1-based. Fails if the quiver is not complete reduced.
pub fn build_kronecker(q: &QuiverRep) -> Result<KroneckerForm> {
    if !q.is_complete_reduced() {
        return Err(Error::Precondition("the quiver must be complete reduced".into()));
    }
    let n = q.vertices.len();
    let mut names = Vec::new();
    let mut kinds = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("x_{}_{}", i + 1, j + 1));
            kinds.push(VarKind::Arrow);
        }
    }
    for i in 0..n {
        names.push(format!("y_{}", i + 1));
        kinds.push(VarKind::Vertex);
    }
    let vars = extend_fresh(&q.vars, &names, &kinds);
    let b = q.vars.len();
    let xvar = |i: usize, j: usize| b + i * n + j;
    let yvar = |i: usize| b + n * n + i;

    let ranks: Vec<usize> = q.vertices.iter().map(|v| v.rank).collect();
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0;
    for r in &ranks {
        offsets.push(acc);
        acc += r;
    }
    let mut m = PolyMatrix::zeros(&vars, acc, acc);
    let mut arrow_vars = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let a = q.arrow(j, i).expect("complete").matrix.embed(&vars)?;
            let x = Poly::var(&vars, xvar(i, j));
            arrow_vars.push((i, j, xvar(i, j)));
            for r in 0..ranks[i] {
                for c in 0..ranks[j] {
                    let mut e = a.get(r, c) * &x;
                    if i == j && r == c {
                        e = &e + &Poly::var(&vars, yvar(i));
                    }
                    m.set(offsets[i] + r, offsets[j] + c, e);
                }
            }
        }
    }
    Ok(KroneckerForm {
        matrix: m,
        base: q.vars.clone(),
        arrow_vars,
        vertex_vars: (0..n).map(yvar).collect(),
        offsets,
        ranks,
    })
}

/// `x_1·A_1 + ... + x_N·A_N + y·1` for simultaneous conjugation.
pub fn conj_pencil(matrices: &[PolyMatrix]) -> Result<KroneckerForm> {
    let first = matrices
        .first()
        .ok_or_else(|| Error::Dimension("empty matrix tuple".into()))?;
    let size = first.rows();
    let base = first.vars().clone();
    for a in matrices {
        if !a.is_square() || a.rows() != size {
            return Err(Error::Dimension("all matrices must be square of the same size".into()));
        }
        if !same_table(a.vars(), &base) {
            return Err(Error::VarTableMismatch);
        }
    }
    let mut names: Vec<String> = (1..=matrices.len()).map(|k| format!("x_{k}")).collect();
    names.push("y".into());
    let mut kinds = vec![VarKind::Arrow; matrices.len()];
    kinds.push(VarKind::Vertex);
    let vars = extend_fresh(&base, &names, &kinds);
    let b = base.len();
    let y = b + matrices.len();
    let mut m = PolyMatrix::identity(&vars, size).scale(&Poly::var(&vars, y));
    for (k, a) in matrices.iter().enumerate() {
        m = m.add(&a.embed(&vars)?.scale(&Poly::var(&vars, b + k)))?;
    }
    Ok(KroneckerForm {
        matrix: m,
        base,
        arrow_vars: (0..matrices.len()).map(|k| (0, 0, b + k)).collect(),
        vertex_vars: vec![y],
        offsets: vec![0],
        ranks: vec![size],
    })
}

const BOUND_NOTE: &str = "vertex monomial bound read as 0 < l_i < m_i for every vertex";

impl Checker {
    /// Decides whether the pencil splits with `det` factors `f1`, `f2` that
    /// each contain a vertex monomial `Π y_i^{l_i}`, `0 < l_i < m_i`.
    pub fn check_kronecker(&self, kf: &KroneckerForm, f1: &Poly, f2: &Poly) -> Result<Verdict> {
        let vars = kf.vars();
        let f1 = align(f1, vars)?;
        let f2 = align(f2, vars)?;
        let mut verdict = Verdict::new(
            vars,
            "relative to the supplied factor pair of det(𝒜_Q): decides whether 𝒜_Q ~ 𝒜_1 ⊕ 𝒜_2 with det(𝒜_k) = f_k, i.e. a decomposition of the representation matching this split".into(),
        );
        if !self.det_hypothesis(&mut verdict, &kf.matrix, &f1, &f2)? {
            return Ok(verdict);
        }
        verdict.notes.push(BOUND_NOTE.to_string());
        let bound_ok = |f: &Poly| -> Option<Vec<u32>> {
            f.y_profile(&kf.vertex_vars).into_iter().find(|l| {
                l.iter()
                    .zip(&kf.ranks)
                    .all(|(&e, &m)| e > 0 && (e as usize) < m)
            })
        };
        let (b1, b2) = (bound_ok(&f1), bound_ok(&f2));
        let detail = match (&b1, &b2) {
            (Some(l1), Some(l2)) => format!("f1 contains y^{l1:?}, f2 contains y^{l2:?}"),
            _ => format!(
                "{} has no vertex monomial within the bound (ranks {:?})",
                if b1.is_none() { "f1" } else { "f2" },
                kf.ranks
            ),
        };
        if !verdict.hypothesis(hypotheses::MONOMIAL_BOUND, b1.is_some() && b2.is_some(), detail) {
            return Ok(verdict);
        }
        verdict.notes.push(
            "the ring is an integral domain: 'non-zero-divisor' reduces to 'nonzero'".into(),
        );
        if !self.coprime_hypothesis(&mut verdict, &f1, &f2)? {
            return Ok(verdict);
        }
        let n = kf.size();
        let minors = fitting_ideal(&kf.matrix, n - 1)?.reordered(self.order.clone());
        let target = self.ideal(vec![f1, f2])?;
        let outcome = subset_local(&minors, &target)?;
        verdict.decide(&format!("I_{}(𝒜_Q) ⊆ (f1)+(f2)", n - 1), &target, &outcome);
        Ok(verdict)
    }

    /// The quiver criterion on a complete reduced representation.
    pub fn check_quiver(&self, q: &QuiverRep, f1: &Poly, f2: &Poly) -> Result<Verdict> {
        let kf = build_kronecker(q)?;
        self.check_kronecker(&kf, f1, f2)
    }

    /// Conjugation-diagonalizability of a 2×2 matrix via its discriminant.
    pub fn check_conj_2x2(&self, a: &PolyMatrix) -> Result<Verdict> {
        conj_2x2(self, a, None)
    }

    /// As [`Checker::check_conj_2x2`], but when the discriminant has only a
    /// power-series root the memberships are tested modulo `m^order`.
    pub fn check_conj_2x2_to_order(&self, a: &PolyMatrix, order: u32) -> Result<Verdict> {
        conj_2x2(self, a, Some(order))
    }
}

const ROOT_LABEL: &str = "(a12, a21, a11-a22) ⊆ (√D)";
const SQUARE_LABEL: &str = "D is a square in the ring";

fn conj_2x2(checker: &Checker, a: &PolyMatrix, jet: Option<u32>) -> Result<Verdict> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Dimension(format!("expected a 2x2 matrix, got {}x{}", a.rows(), a.cols())));
    }
    let vars = a.vars();
    let tr = a.trace();
    let d = det(a)?;
    let disc = &(&tr * &tr) - &d.scale(&Rational::from_integer(4.into()));
    let mut verdict = Verdict::new(
        vars,
        "diagonalizability of A by conjugation over the local ring (A ~ diag(λ1, λ2) with λ1 ≠ λ2)".into(),
    );
    verdict.notes.push(format!("D = tr(A)^2 - 4 det(A) = {disc}"));
    let nondegenerate = !disc.is_zero();
    if !verdict.hypothesis(
        hypotheses::DISCRIMINANT_NONZERO,
        nondegenerate,
        if nondegenerate { "tr(A)^2 ≠ 4 det(A)" } else { "degenerate discriminant: tr(A)^2 = 4 det(A)" },
    ) {
        return Ok(verdict);
    }
    let elements = vec![a.get(0, 1).clone(), a.get(1, 0).clone(), a.get(0, 0) - a.get(1, 1)];

    if let Some(root) = sqrt_exact(&disc) {
        verdict.hypothesis(hypotheses::DISCRIMINANT_RATIONAL_ROOT, true, format!("√D = {root}"));
        verdict.det_identities.push(DetIdentity {
            matrix: PolyMatrix::from_rows(vars, vec![vec![disc.clone()]])?,
            factors: vec![root.clone(), root.clone()],
            order: None,
        });
        let source = checker.ideal(elements)?;
        let target = checker.ideal(vec![root])?;
        let outcome = subset_local(&source, &target)?;
        verdict.decide(ROOT_LABEL, &target, &outcome);
        return Ok(verdict);
    }

    let not_square = |verdict: &mut Verdict, reason: String| {
        verdict.notes.push(reason);
        verdict.deciding_inclusion = Some(SQUARE_LABEL.to_string());
        verdict.failing_element = Some(disc.clone());
        verdict.status = Status::NotDecomposable;
    };
    let low = disc.lowest_form();
    let low_deg = low.degree().unwrap_or(0);
    if low_deg % 2 == 1 {
        not_square(&mut verdict, format!("lowest form of D has odd degree {low_deg}, so D has no square root"));
        return Ok(verdict);
    }
    let (_, lc) = low.leading_term().expect("nonzero");
    let lc = lc.clone();
    if sqrt_exact(&low.scale(&lc.recip())).is_none() {
        not_square(
            &mut verdict,
            "lowest form of D is not a square even over the algebraic closure".into(),
        );
        return Ok(verdict);
    }
    if rational_sqrt(&lc).is_none() {
        verdict.hypothesis(
            hypotheses::DISCRIMINANT_RATIONAL_ROOT,
            false,
            format!("a root of D needs the quadratic extension by √({lc})"),
        );
        return Ok(verdict);
    }
    let half = low_deg / 2;
    let probe = match jet {
        Some(n) if n > half => n - half,
        Some(n) => {
            return Err(Error::Precondition(format!(
                "jet order {n} must exceed the order {half} of √D"
            )))
        }
        None => disc.degree().unwrap_or(0) + 2,
    };
    let root = match sqrt_series(&disc, probe) {
        Err(_) => {
            not_square(&mut verdict, "D has no power-series square root".into());
            return Ok(verdict);
        }
        Ok(r) => r,
    };
    let Some(n) = jet else {
        verdict.hypothesis(
            hypotheses::DISCRIMINANT_RATIONAL_ROOT,
            false,
            format!("√D exists only as a power series (checked to relative order {probe}); a jet order is required"),
        );
        return Ok(verdict);
    };

    verdict.exactness = Exactness::ToOrder(n);
    verdict.hypothesis(
        hypotheses::DISCRIMINANT_RATIONAL_ROOT,
        true,
        format!("√D ≡ {root} modulo degree {n}"),
    );
    verdict.notes.push(format!("memberships decided in the jet ring modulo m^{n}"));
    verdict.det_identities.push(DetIdentity {
        matrix: PolyMatrix::from_rows(vars, vec![vec![disc.clone()]])?,
        factors: vec![root.clone(), root.clone()],
        order: Some(n),
    });
    verdict.deciding_inclusion = Some(ROOT_LABEL.to_string());
    verdict.status = Status::Decomposable;
    let gens = vec![root];
    for e in elements {
        match jet_member_witness(&e, &gens, n)? {
            Some(witness) => verdict.inclusions.push(Inclusion {
                label: ROOT_LABEL.to_string(),
                element: e,
                ideal: gens.clone(),
                witness,
                order: Some(n),
            }),
            None => {
                verdict.status = Status::NotDecomposable;
                verdict.failing_element = Some(e);
                break;
            }
        }
    }
    Ok(verdict)
}

pub fn check_quiver(q: &QuiverRep, f1: &Poly, f2: &Poly) -> Result<Verdict> {
    Checker::default().check_quiver(q, f1, f2)
}

pub fn check_conj_2x2(a: &PolyMatrix) -> Result<Verdict> {
    Checker::default().check_conj_2x2(a)
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
    fn completion_and_merging() {
        let v = VarTable::new(&["x"]).unwrap();
        let q = QuiverRep::new(
            &v,
            vec![Vertex::new("a", 1), Vertex::new("b", 1)],
            vec![Arrow::new(0, 1, mat(&v, &[&["x"]]))],
        )
        .unwrap();
        let c = complete_reduce(&q);
        assert!(c.is_complete_reduced());
        assert_eq!(c.arrow(1, 0).unwrap().matrix, mat(&v, &[&["0"]]));
        assert_eq!(complete_reduce(&c), c);

        let q = QuiverRep::new(
            &v,
            vec![Vertex::new("a", 2)],
            vec![
                Arrow::new(0, 0, mat(&v, &[&["x", "0"], &["0", "1"]])),
                Arrow::new(0, 0, mat(&v, &[&["0", "1"], &["0", "0"]])),
            ],
        )
        .unwrap();
        let c = complete_reduce(&q);
        assert_eq!(c.vars().names(), &["x", "z_1_1_1", "z_1_1_2"]);
        let w = c.vars();
        assert_eq!(
            c.arrow(0, 0).unwrap().matrix,
            mat(w, &[&["x*z_1_1_1", "z_1_1_2"], &["0", "z_1_1_1"]])
        );
    }

    #[test]
    fn kronecker_shapes() {
        let v = VarTable::new(&["x"]).unwrap();
        let a = mat(&v, &[&["x", "1"], &["0", "x"]]);
        let q = QuiverRep::new(&v, vec![Vertex::new("0", 2)], vec![Arrow::new(0, 0, a.clone())]).unwrap();
        let kf = build_kronecker(&q).unwrap();
        let w = kf.vars();
        assert_eq!(kf.matrix, mat(w, &[&["x*x_1_1 + y_1", "x_1_1"], &["0", "x*x_1_1 + y_1"]]));

        let cp = conj_pencil(&[a.clone(), a.clone()]).unwrap();
        let w = cp.vars();
        assert_eq!(w.names(), &["x", "x_1", "x_2", "y"]);
        assert_eq!(cp.matrix.get(0, 1), &p("x_1 + x_2", w));
        assert!(conj_pencil(&[]).is_err());

        // Name clash with the base ring gets a fresh suffix.
        let v = VarTable::new(&["y_1"]).unwrap();
        let q = QuiverRep::new(&v, vec![Vertex::new("0", 1)], vec![Arrow::new(0, 0, mat(&v, &[&["y_1"]]))]).unwrap();
        let kf = build_kronecker(&q).unwrap();
        assert_eq!(kf.vars().names(), &["y_1", "x_1_1", "y_1_"]);
    }

    #[test]
    fn conjugation_two_by_two() {
        let v = VarTable::new(&["x1", "x2"]).unwrap();
        let cases = [
            (mat(&v, &[&["x2", "x1"], &["x1", "x2"]]), Status::Decomposable),
            (mat(&v, &[&["x1", "0"], &["0", "x2^2"]]), Status::Decomposable),
            (mat(&v, &[&["x2", "x1"], &["x1^3", "x2"]]), Status::NotDecomposable),
            (mat(&v, &[&["x2", "x1"], &["x1^2", "x2"]]), Status::NotDecomposable),
            (mat(&v, &[&["x2", "x1"], &["0", "x2"]]), Status::Inconclusive),
            (mat(&v, &[&["0", "1"], &["2", "0"]]), Status::Inconclusive),
        ];
        for (a, expected) in cases {
            let verdict = check_conj_2x2(&a).unwrap();
            assert_eq!(verdict.status, expected, "{a}");
            verdict.verify().unwrap();
        }
    }

    #[test]
    fn conjugation_series_root() {
        let v = VarTable::new(&["x"]).unwrap();
        // D = 4x^2(1+x): no polynomial root, a series root 2x(1 + x/2 - ...).
        let a = mat(&v, &[&["x", "x"], &["x^2", "-x"]]);
        let verdict = check_conj_2x2(&a).unwrap();
        assert_eq!(verdict.status, Status::Inconclusive);
        let verdict = Checker::default().check_conj_2x2_to_order(&a, 6).unwrap();
        assert_eq!(verdict.status, Status::Decomposable);
        assert_eq!(verdict.exactness, Exactness::ToOrder(6));
        verdict.verify().unwrap();
    }
}
