//! Rectangular check against a supplied pair of ideals.

use fitting_decomp::decompose::check_rect_lr;
use fitting_decomp::{Ideal, Poly, PolyMatrix, VarTable};

fn main() -> fitting_decomp::Result<()> {
    let v = VarTable::new(&["x", "y", "z"])?;
    let ideal = |gens: &[&str]| -> fitting_decomp::Result<Ideal> {
        Ideal::new(gens.iter().map(|g| Poly::parse(g, &v)).collect::<Result<_, _>>()?)
    };

    type Case<'a> = (&'a [&'a [&'a str]], &'a [&'a str], &'a [&'a str]);
    let cases: [Case; 3] = [
        (&[&["x", "0"], &["0", "y"]], &["x"], &["y"]),
        (&[&["x", "x*z"], &["y*z", "y + z^2"]], &["x"], &["y + z^2 - y*z^2"]),
        (&[&["x", "0", "0"], &["0", "y", "z"]], &["x"], &["y", "z"]),
    ];
    for (rows, j1, j2) in cases {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        let a = PolyMatrix::parse(&v, &rows)?;
        let verdict = check_rect_lr(&a, &ideal(j1)?, &ideal(j2)?)?;
        println!("{rows:?}  J1 = {j1:?}, J2 = {j2:?}");
        println!("  {}", verdict.status);
        for h in &verdict.hypotheses {
            println!("    [{}] {}: {}", if h.passed { "ok" } else { "no" }, h.name, h.detail);
        }
    }
    Ok(())
}
