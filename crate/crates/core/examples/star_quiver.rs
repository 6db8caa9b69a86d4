//! A star quiver where no split of the determinant meets the hypotheses.
//!
//! The centre carries a loop C; both satellites are joined by single
//! arrows. Every grouping of the irreducible factors into (f1, f2) is
//! reported as Inconclusive together with the first hypothesis that fails.

use fitting_decomp::matrix::det;
use fitting_decomp::quiver::{build_kronecker, check_quiver, complete_reduce, Arrow, Vertex};
use fitting_decomp::{Poly, PolyMatrix, QuiverRep, VarTable};

fn main() -> fitting_decomp::Result<()> {
    let v = VarTable::new(&["x1", "x2"])?;
    let c = PolyMatrix::parse(&v, &[vec!["x1", "x2"], vec!["x2", "x1"]])?;
    let b1 = PolyMatrix::parse(&v, &[vec!["1", "x1"]])?;
    let a2 = PolyMatrix::parse(&v, &[vec!["x2", "0"], vec!["1", "x1"]])?;
    let q = QuiverRep::new(
        &v,
        vec![Vertex::new("0", 2), Vertex::new("1", 1), Vertex::new("2", 2)],
        vec![Arrow::new(0, 0, c), Arrow::new(0, 1, b1), Arrow::new(2, 0, a2)],
    )?;
    let q = complete_reduce(&q);
    let kf = build_kronecker(&q)?;
    let w = kf.vars();
    println!("det = {}", det(&kf.matrix)?);

    let p = |s: &str| Poly::parse(s, w);
    let q1 = p("y_1 + x_1_1*x1 - x_1_1*x2")?;
    let q2 = p("y_1 + x_1_1*x1 + x_1_1*x2")?;
    let rest = p("y_2*y_3^2")?;
    for (f1, f2) in [(&q1 * &q2, rest.clone()), (q1.clone(), &q2 * &rest), (&q1 * &p("y_2")?, &q2 * &p("y_3^2")?)] {
        let verdict = check_quiver(&q, &f1, &f2)?;
        println!(
            "f1 = {f1}\n  -> {} ({})",
            verdict.status,
            verdict.failed_hypothesis.as_deref().unwrap_or("-")
        );
    }
    Ok(())
}
