//! Matrices over the polynomial ring: determinants, Fitting ideals and kernels.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::groebner::engine::{Elem, Engine, Vector};
use crate::groebner::Ideal;
use crate::ring::{same_table, MonomialOrder, Poly, Vars};

/// Rectangular matrix with polynomial entries over one variable table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: Vars,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_rows(vars: &Vars, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Dimension("matrices must have at least one row and one column".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("rows have different lengths".into()));
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| !same_table(e.vars(), vars)) {
            return Err(Error::VarTableMismatch);
        }
        Ok(PolyMatrix {
            vars: vars.clone(),
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Parses each entry with the polynomial grammar.
    pub fn parse<S: AsRef<str>>(vars: &Vars, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| Poly::parse(s.as_ref(), vars)).collect())
            .collect::<Result<Vec<Vec<Poly>>>>()?;
        Self::from_rows(vars, parsed)
    }

    pub fn zeros(vars: &Vars, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries: vec![Poly::zero(vars); rows * cols],
        }
    }

    pub fn identity(vars: &Vars, n: usize) -> Self {
        let mut m = Self::zeros(vars, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(vars));
        }
        m
    }

    pub fn diagonal(vars: &Vars, diag: &[Poly]) -> Self {
        let mut m = Self::zeros(vars, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Poly) {
        assert!(same_table(value.vars(), &self.vars), "entry over a foreign table");
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub fn map<F: Fn(&Poly) -> Poly>(&self, f: F) -> PolyMatrix {
        let entries: Vec<Poly> = self.entries.iter().map(f).collect();
        let vars = entries.first().map_or(self.vars.clone(), |e| e.vars().clone());
        PolyMatrix {
            vars,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Re-expresses all entries over an extension table.
    pub fn embed(&self, target: &Vars) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            vars: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        self.map(|e| e * c)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("addition of matrices of different shapes".into()));
        }
        if !same_table(&self.vars, &other.vars) {
            return Err(Error::VarTableMismatch);
        }
        Ok(PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if !same_table(&self.vars, &other.vars) {
            return Err(Error::VarTableMismatch);
        }
        let mut out = PolyMatrix::zeros(&self.vars, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.vars);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Applies `M` to a column vector.
    pub fn apply(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length differs from column count".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Poly::zero(&self.vars), |acc, j| &acc + &(self.get(i, j) * &v[j]))
            })
            .collect())
    }

    pub fn trace(&self) -> Poly {
        (0..self.rows.min(self.cols)).fold(Poly::zero(&self.vars), |acc, i| &acc + self.get(i, i))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix {
            vars: self.vars.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries: rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
                .collect(),
        }
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !same_table(&self.vars, &other.vars) {
            return Err(Error::VarTableMismatch);
        }
        let mut out = PolyMatrix::zeros(&self.vars, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// `true` when every entry vanishes at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.entries.iter().all(|e| !crate::ring::local_unit_test(e))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    Ok(cofactor_rec(m, &(0..m.rows).collect::<Vec<_>>(), &(0..m.cols).collect::<Vec<_>>()))
}

fn cofactor_rec(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Poly {
    match rows.len() {
        0 => Poly::one(&m.vars),
        1 => m.get(rows[0], cols[0]).clone(),
        2 => {
            &(m.get(rows[0], cols[0]) * m.get(rows[1], cols[1]))
                - &(m.get(rows[0], cols[1]) * m.get(rows[1], cols[0]))
        }
        _ => {
            let mut acc = Poly::zero(&m.vars);
            for (k, &c) in cols.iter().enumerate() {
                let entry = m.get(rows[0], c);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = cofactor_rec(m, &rows[1..], &rest);
                let term = entry * &minor;
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub fn det_bareiss(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut a: Vec<Vec<Poly>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = Poly::one(&m.vars);
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(Poly::zero(&m.vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.divide_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Exact determinant: cofactor expansion up to size 3, Bareiss beyond.
pub fn det(m: &PolyMatrix) -> Result<Poly> {
    if m.rows <= 3 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// Ideal of all `j x j` minors. `I_j = (1)` for `j = 0` and `(0)` beyond the
/// smaller dimension. Minors are enumerated in lexicographic order of row,
/// then column, index sets; zero and repeated minors are dropped.
pub fn fitting_ideal(m: &PolyMatrix, j: usize) -> Result<Ideal> {
    if j == 0 {
        return Ok(Ideal::unit(&m.vars));
    }
    if j > m.rows.min(m.cols) {
        return Ok(Ideal::zero(&m.vars));
    }
    let mut gens = Vec::new();
    for rows in (0..m.rows).combinations(j) {
        for cols in (0..m.cols).combinations(j) {
            let minor = det(&m.submatrix(&rows, &cols))?;
            if !minor.is_zero() && !gens.contains(&minor) {
                gens.push(minor);
            }
        }
    }
    if gens.is_empty() {
        return Ok(Ideal::zero(&m.vars));
    }
    Ideal::new(gens)
}

/// Generators of the kernel of `M : R^n -> R^m`, one column tuple each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub generators: Vec<Vec<Poly>>,
}

/// Syzygies of the columns of `m`.
///
/// Builds the module generated by `(column_j, e_j)` in `R^(m+n)` and computes
/// a Gröbner basis in a position-over-term order where the first `m`
/// positions dominate; basis elements whose leading position lies among the
/// last `n` have vanishing first part and their tails generate the kernel.
pub fn kernel(m: &PolyMatrix) -> KernelBasis {
    kernel_with_order(m, &MonomialOrder::Grevlex)
}

pub fn kernel_with_order(m: &PolyMatrix, order: &MonomialOrder) -> KernelBasis {
    let (rows, cols) = (m.rows, m.cols);
    let eng = Engine::new(order.clone(), false);
    let input: Vec<Elem> = (0..cols)
        .map(|j| {
            let mut comps: Vec<Poly> = (0..rows).map(|i| m.get(i, j).clone()).collect();
            for k in 0..cols {
                comps.push(if k == j { Poly::one(&m.vars) } else { Poly::zero(&m.vars) });
            }
            Elem {
                v: Vector::from_components(&comps, 0, &eng.ord),
                rep: None,
            }
        })
        .collect();
    let gb = eng.groebner(input);
    let generators = gb
        .iter()
        .filter(|e| e.v.lead().is_some_and(|t| t.0 >= rows))
        .map(|e| (0..cols).map(|k| e.v.component(rows + k, &m.vars)).collect())
        .collect();
    KernelBasis { generators }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::equal_local;
    use crate::ring::VarTable;

    fn mat(v: &Vars, rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse(v, &rows).unwrap()
    }

    fn p(s: &str, v: &Vars) -> Poly {
        Poly::parse(s, v).unwrap()
    }

    #[test]
    fn determinants() {
        let v = VarTable::new(&["x", "y", "x1", "x2", "a", "b", "c", "d"]).unwrap();
        assert_eq!(det(&PolyMatrix::identity(&v, 3)).unwrap(), p("1", &v));
        // det(x*A + y*1) = y^2 + x*y*tr(A) + x^2*det(A), symbolically in the entries
        let m = mat(&v, &[&["x*a + y", "x*b"], &["x*c", "x*d + y"]]);
        assert_eq!(
            det(&m).unwrap(),
            p("y^2 + x*y*(a + d) + x^2*(a*d - b*c)", &v)
        );
        for n in 1..=3u32 {
            for (k, l) in [(1u32, 1u32), (n, n), (1, 2)] {
                if k + l > 3 * n {
                    continue;
                }
                let m = mat(
                    &v,
                    &[
                        &["x2", &format!("x1^{k}"), "0"],
                        &["0", "x2", &format!("x1^{l}")],
                        &[&format!("-x1^{}", 3 * n - k - l), "0", "x2"],
                    ],
                );
                assert_eq!(det(&m).unwrap(), p(&format!("x2^3 - x1^{}", 3 * n), &v));
            }
        }
        assert!(det(&mat(&v, &[&["x", "y"]])).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor_with_pivoting() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let m = mat(
            &v,
            &[
                &["0", "x", "1", "y"],
                &["x", "0", "y", "1"],
                &["1", "y", "0", "x"],
                &["y", "1", "x", "x*y"],
            ],
        );
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn fitting_ideals() {
        let v = VarTable::new(&["x", "y", "x1", "x2"]).unwrap();
        let m = mat(&v, &[&["x", "y"], &["y", "x"]]);
        let i1 = fitting_ideal(&m, 1).unwrap();
        assert_eq!(i1.generators(), &[p("x", &v), p("y", &v)]);
        assert!(fitting_ideal(&m, 3).unwrap().is_zero_ideal());
        assert!(fitting_ideal(&m, 0).unwrap().is_local_unit_ideal());

        for n in 1..=2 {
            let e = format!("x1^{n}");
            let ne = format!("-x1^{n}");
            let a = mat(
                &v,
                &[&["y + x2", &e, "0"], &["0", "y + x2", &e], &[&ne, "0", "y + x2"]],
            );
            let i2 = fitting_ideal(&a, 2).unwrap();
            let expected = Ideal::new(vec![
                p("(y + x2)^2", &v),
                p(&format!("(y + x2)*x1^{n}"), &v),
                p(&format!("x1^{}", 2 * n), &v),
            ])
            .unwrap();
            assert!(equal_local(&i2, &expected).unwrap());
        }
    }

    #[test]
    fn kernels() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        assert!(kernel(&PolyMatrix::identity(&v, 3)).generators.is_empty());
        let k = kernel(&mat(&v, &[&["x", "y"]]));
        assert_eq!(k.generators, vec![vec![p("y", &v), p("-x", &v)]]);
        let m = mat(&v, &[&["x", "y", "0"], &["0", "x", "y"]]);
        let k = kernel(&m);
        assert_eq!(k.generators, vec![vec![p("y^2", &v), p("-x*y", &v), p("x^2", &v)]]);
        for g in &k.generators {
            assert!(m.apply(g).unwrap().iter().all(Poly::is_zero));
        }
        let k = kernel(&mat(&v, &[&["x", "0", "0"], &["0", "y", "0"]]));
        assert_eq!(k.generators, vec![vec![p("0", &v), p("0", &v), p("1", &v)]]);
    }
}
