//! Conjugation of a 2×2 matrix to a diagonal one over the local ring.

use fitting_decomp::quiver::check_conj_2x2;
use fitting_decomp::{PolyMatrix, Status, VarTable};

fn main() -> fitting_decomp::Result<()> {
    let v = VarTable::new(&["x1", "x2"])?;
    for k in 1..=3 {
        for l in 1..=3 {
            let a = PolyMatrix::parse(&v, &[vec!["x2".into(), format!("x1^{k}")], vec![format!("x1^{l}"), "x2".into()]])?;
            let verdict = check_conj_2x2(&a)?;
            print!("[[x2, x1^{k}], [x1^{l}, x2]] -> {}", verdict.status);
            match verdict.status {
                Status::NotDecomposable => println!("  ({})", verdict.failing_element.as_ref().unwrap()),
                Status::Inconclusive => println!("  ({})", verdict.failed_hypothesis.as_ref().unwrap()),
                Status::Decomposable => println!(),
            }
        }
    }

    // The discriminant x1^3 is not a square, so no diagonal form exists.
    let cusp = PolyMatrix::parse(&v, &[vec!["0", "x1"], vec!["x1^2", "0"]])?;
    println!("cusp: {}", check_conj_2x2(&cusp)?.status);
    Ok(())
}
