//! Square roots of polynomials: exact (over the rationals) and as truncated
//! power series at the origin.

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::Rational;
use crate::error::{Error, Result};

/// Square root of a rational number, if it is a rational square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Returns `g` with `g^2 = f` and rational coefficients, if one exists.
/// The lowest-degree part of `g` has a positive leading coefficient.
pub fn sqrt_exact(f: &Poly) -> Option<Poly> {
    if f.is_zero() {
        return Some(f.clone());
    }
    let ord = f.ord().expect("nonzero");
    let (lm, lc) = f.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
    if lm.0.iter().any(|e| e % 2 == 1) {
        return None;
    }
    let lead_mono = super::Monomial(lm.0.iter().map(|e| e / 2).collect());
    let lead_coeff = rational_sqrt(&lc)?;
    let lead = Poly::monomial(f.vars(), lead_mono.clone(), lead_coeff.clone());
    let two_lead = lead_coeff.clone() + lead_coeff;

    let mut g = lead;
    let mut rem = f - &(&g * &g);
    // Each step cancels the leading term of the remainder, so the leading
    // monomials of the remainder strictly decrease and the loop terminates.
    while let Some((rm, rc)) = rem.leading_term() {
        let t = lead_mono.quotient_of(rm)?;
        if 2 * t.degree() < ord {
            return None;
        }
        let step = Poly::monomial(f.vars(), t, rc / &two_lead);
        let correction = &(&(&g + &g) * &step) + &(&step * &step);
        rem = &rem - &correction;
        g = &g + &step;
    }
    Some(g.sign_normalized())
}

/// Power-series inverse of a unit, modulo terms of degree `>= n`.
fn series_inverse(u: &Poly, n: u32) -> Poly {
    let c0 = u.constant_term();
    debug_assert!(!c0.is_zero());
    let two = Poly::from_int(u.vars(), 2);
    let mut v = Poly::constant(u.vars(), c0.recip());
    let mut prec = 1;
    while prec < n {
        prec = (prec * 2).min(n);
        let uv = (u * &v).truncate(prec);
        v = (&v * &(&two - &uv)).truncate(prec);
    }
    v
}

/// Newton iteration for the square root of a unit whose constant term is a
/// rational square. Result is exact modulo degree `>= n`.
fn newton_sqrt_unit(u: &Poly, n: u32) -> Result<Poly> {
    let c0 = u.constant_term();
    let s0 = rational_sqrt(&c0)
        .ok_or_else(|| Error::NoSeriesRoot("constant term is not a rational square".into()))?;
    let half = Rational::new(1.into(), 2.into());
    let mut s = Poly::constant(u.vars(), s0);
    let mut prec = 1;
    while prec < n {
        prec = (prec * 2).min(n);
        let inv = series_inverse(&s, prec);
        let quotient = (&u.truncate(prec) * &inv).truncate(prec);
        s = (&s + &quotient).scale(&half).truncate(prec);
    }
    Ok(s.truncate(n))
}

/// Series square root of `f` to relative order `n`.
///
/// With `d = ord(f) / 2`, returns `g` of degree `< n + d` such that
/// `g^2 - f` has only terms of degree `>= n + 2d`. The lowest form of `f`
/// must be the square of a rational form.
pub fn sqrt_series(f: &Poly, n: u32) -> Result<Poly> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let ord = f.ord().expect("nonzero");
    if ord % 2 == 1 {
        return Err(Error::NoSeriesRoot(format!("odd order {ord}")));
    }
    let d = ord / 2;
    let low = f.homogeneous_part(ord);
    let g0 = sqrt_exact(&low)
        .ok_or_else(|| Error::NoSeriesRoot("lowest form is not a square".into()))?;

    if d == 0 {
        return newton_sqrt_unit(f, n);
    }
    // f = g0^2 * u with u a unit: reduce to the unit case.
    if let Ok(u) = f.divide_exact(&(&g0 * &g0)) {
        let s = newton_sqrt_unit(&u, n)?;
        return Ok(&g0 * &s);
    }
    // General case: lift one homogeneous degree at a time,
    // 2*g0*g_k = [f - (g0 + ... + g_{k-1})^2]_{2d+k}.
    let two_g0 = g0.scale(&Rational::from_integer(2.into()));
    let mut g = g0;
    for k in 1..n {
        let rest = f - &(&g * &g);
        let part = rest.homogeneous_part(2 * d + k);
        if part.is_zero() {
            continue;
        }
        let gk = part.divide_exact(&two_g0).map_err(|_| {
            Error::NoSeriesRoot(format!("lifting fails at relative degree {k}"))
        })?;
        g = &g + &gk;
    }
    Ok(g)
}

/// `true` iff `f` is a unit of the local ring at the origin.
pub fn local_unit_test(f: &Poly) -> bool {
    !f.constant_term().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Vars, VarTable};

    fn p(s: &str, v: &Vars) -> Poly {
        Poly::parse(s, v).unwrap()
    }

    #[test]
    fn exact_roots() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        assert_eq!(sqrt_exact(&p("x^2", &v)), Some(p("x", &v)));
        let g = p("x + y + x*y", &v);
        assert_eq!(sqrt_exact(&(&g * &g)), Some(g.clone()));
        assert_eq!(sqrt_exact(&(&(-&g) * &(-&g))), Some(g));
        assert_eq!(sqrt_exact(&p("x^2 + y^2", &v)), None);
        assert_eq!(sqrt_exact(&p("4*x^2", &v)), Some(p("2*x", &v)));
        assert_eq!(sqrt_exact(&p("2*x^2", &v)), None);
        assert_eq!(sqrt_exact(&p("-x^2", &v)), None);
    }

    #[test]
    fn unit_test() {
        let v = VarTable::new(&["x"]).unwrap();
        assert!(local_unit_test(&p("1 + x", &v)));
        assert!(!local_unit_test(&p("x", &v)));
        assert!(!local_unit_test(&p("0", &v)));
    }

    #[test]
    fn series_roots() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let s = sqrt_series(&p("1 + x", &v), 4).unwrap();
        assert_eq!(s, p("1 + 1/2*x - 1/8*x^2 + 1/16*x^3", &v));
        let s = sqrt_series(&p("x^2 + x^3", &v), 4).unwrap();
        assert_eq!(s, p("x*(1 + 1/2*x - 1/8*x^2 + 1/16*x^3)", &v));
        assert!(matches!(sqrt_series(&p("x^3", &v), 5), Err(Error::NoSeriesRoot(_))));
        assert!(matches!(sqrt_series(&p("x^2 + y^3", &v), 4), Err(Error::NoSeriesRoot(_))));
        // general lifting path: no exact quotient by the square of the lowest form
        let f = p("x^2 + 2*x*y^2 + y^4 + x^3", &v);
        let g = sqrt_series(&f, 3).unwrap();
        let err = &(&g * &g) - &f;
        assert!(err.ord().unwrap() >= 5);
        assert!(g.degree().unwrap() < 4);
    }
}
