use std::cmp::Ordering;

/// Exponent vector, one entry per variable of the owning table.
///
/// The derived `Ord` is *not* used for storage; `Ord` below is graded reverse
/// lexicographic, which is the canonical storage order of [`crate::ring::Poly`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Pads with zero exponents up to `nvars` entries.
    pub fn padded(&self, nvars: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(nvars, 0);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

/// Admissible monomial orders. Variable 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Block order: any monomial with a larger total degree in the flagged
    /// variables is larger; ties are broken by grevlex on the full exponent.
    Elimination(Vec<bool>),
}

impl MonomialOrder {
    /// Elimination order over `nvars` variables that eliminates `vars`.
    pub fn elimination(nvars: usize, vars: &[usize]) -> Self {
        let mut mask = vec![false; nvars];
        for &v in vars {
            mask[v] = true;
        }
        MonomialOrder::Elimination(mask)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Lex => lex(&a.0, &b.0),
            MonomialOrder::Elimination(mask) => {
                let w = |m: &Monomial| -> u32 {
                    m.0.iter()
                        .zip(mask)
                        .filter(|(_, &f)| f)
                        .map(|(e, _)| *e)
                        .sum()
                };
                w(a).cmp(&w(b)).then_with(|| grevlex(&a.0, &b.0))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Elimination(_) => "elimination",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        // x > y, x^2 > x*y > y^2, x*y*z vs x^2*z ... degree first
        let m = |v: &[u32]| Monomial(v.to_vec());
        assert!(m(&[1, 0]) > m(&[0, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[0, 0, 3]) > m(&[2, 0, 0]));
        // x*z^2 < y^3 in grevlex with x > y > z
        assert!(m(&[1, 0, 2]) < m(&[0, 3, 0]));
    }

    #[test]
    fn elimination_prefers_flagged_degree() {
        let ord = MonomialOrder::elimination(3, &[2]);
        let a = Monomial(vec![0, 0, 1]);
        let b = Monomial(vec![5, 5, 0]);
        assert_eq!(ord.cmp(&a, &b), Ordering::Greater);
    }
}
