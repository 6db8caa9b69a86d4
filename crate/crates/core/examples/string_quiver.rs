//! Kronecker pencil of a two-vertex cycle and its determinant.

use fitting_decomp::matrix::det;
use fitting_decomp::quiver::{build_kronecker, complete_reduce, Arrow, Vertex};
use fitting_decomp::{PolyMatrix, QuiverRep, VarTable};

fn main() -> fitting_decomp::Result<()> {
    let base = VarTable::new::<&str>(&[])?;
    let a = PolyMatrix::parse(&base, &[vec!["1", "2"], vec!["0", "1"]])?;
    let b = PolyMatrix::parse(&base, &[vec!["3", "0"], vec!["1", "-1"]])?;
    let q = QuiverRep::new(
        &base,
        vec![Vertex::new("1", 2), Vertex::new("2", 2)],
        vec![Arrow::new(1, 0, a), Arrow::new(0, 1, b)],
    )?;
    let kf = build_kronecker(&complete_reduce(&q))?;

    println!("ring: {}", kf.vars().names().join(", "));
    for row in kf.matrix.row_strings() {
        println!("  [{}]", row.join(", "));
    }
    println!("det = {}", det(&kf.matrix)?);
    Ok(())
}
