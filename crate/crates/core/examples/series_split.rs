//! Factors that only exist as power series, checked to a finite order.
//!
//! The discriminant of A below is x^2 (1 + x), whose square root is not a
//! polynomial. The exact check stops at Inconclusive; the jet mode decides
//! the question modulo m^N.

use fitting_decomp::decompose::quad_split_y;
use fitting_decomp::matrix::det;
use fitting_decomp::quiver::conj_pencil;
use fitting_decomp::Checker;
use fitting_decomp::{PolyMatrix, VarTable};

fn main() -> fitting_decomp::Result<()> {
    let v = VarTable::new(&["x"])?;
    let a = PolyMatrix::parse(&v, &[vec!["0", "x"], vec!["x + x^2", "0"]])?;

    let checker = Checker::default();
    let exact = checker.check_conj_2x2(&a)?;
    println!("exact: {} ({})", exact.status, exact.failed_hypothesis.as_deref().unwrap_or("-"));
    for n in [4, 8] {
        let jet = checker.check_conj_2x2_to_order(&a, n)?;
        println!("to order {n}: {} [{:?}]", jet.status, jet.exactness);
    }

    let kf = conj_pencil(std::slice::from_ref(&a))?;
    let d = det(&kf.matrix)?;
    if let Some(split) = quad_split_y(&d, kf.vertex_vars[0], Some(5))? {
        let (f1, f2) = split.factors();
        println!("det = {d}\n  ≡ ({f1})·({f2}) mod m^{}", split.congruence_order.unwrap_or(0));
    }
    Ok(())
}
