//! Left-right equivalence of a square matrix to a block-diagonal one.
//!
//! Runs the 3×3 example family with A(k, l) where det A = x2^3 + x1^{3n}
//! factors as (x2 + x1^n)(x2^2 - x2 x1^n + x1^{2n}) over Q.

use fitting_decomp::decompose::check_square_lr;
use fitting_decomp::{Poly, PolyMatrix, VarTable};

fn main() -> fitting_decomp::Result<()> {
    let v = VarTable::new(&["x1", "x2"])?;
    let n = 2;
    let f1 = Poly::parse(&format!("x2 - x1^{n}"), &v)?;
    let f2 = Poly::parse(&format!("x2^2 + x2*x1^{n} + x1^{}", 2 * n), &v)?;

    for (k, l) in [(2, 2), (1, 2), (3, 1)] {
        let e = 3 * n - k - l;
        let a = PolyMatrix::parse(
            &v,
            &[
                vec!["x2".to_string(), format!("x1^{k}"), "0".into()],
                vec!["0".into(), "x2".into(), format!("x1^{l}")],
                vec![format!("-x1^{e}"), "0".into(), "x2".into()],
            ],
        )?;
        let verdict = check_square_lr(&a, &f1, &f2)?;
        println!("k = {k}, l = {l}: {}", verdict.status);
        if let Some(g) = &verdict.failing_element {
            println!("  minor outside (f1) + (f2): {g}");
        }
        println!("  {} inclusion witnesses, re-expansion: {:?}", verdict.inclusions.len(), verdict.verify());
    }
    Ok(())
}
