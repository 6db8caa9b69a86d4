//! Buchberger's algorithm on free-module elements.
//!
//! Ideals are the rank-one case. Module elements use a position-over-term
//! order in which a smaller position index is larger. Every element can
//! carry a representation vector expressing it in terms of the input
//! generators; reductions update it alongside.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::ring::{Monomial, MonomialOrder, Poly, Rational, Vars};

/// Position-over-term order built on a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TermOrder {
    pub mono: MonomialOrder,
}

impl TermOrder {
    pub fn new(mono: MonomialOrder) -> Self {
        TermOrder { mono }
    }

    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.mono.cmp(a.1, b.1))
    }
}

pub(crate) type Term = (usize, Monomial, Rational);

/// Sparse module element; terms sorted in descending term order.
#[derive(Debug, Clone, Default)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn unit(pos: usize, nvars: usize) -> Self {
        Vector {
            terms: vec![(pos, Monomial::one(nvars), Rational::one())],
        }
    }

    pub fn from_poly(p: &Poly, pos: usize, ord: &TermOrder) -> Self {
        Self::from_components(std::slice::from_ref(p), pos, ord)
    }

    /// Component `i` of `comps` is placed at position `offset + i`.
    pub fn from_components(comps: &[Poly], offset: usize, ord: &TermOrder) -> Self {
        let mut terms: Vec<Term> = comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms()
                    .map(move |(m, c)| (offset + i, m.clone(), c.clone()))
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp((b.0, &b.1), (a.0, &a.1)));
        Vector { terms }
    }

    /// The component at position `pos`, as a polynomial.
    pub fn component(&self, pos: usize, vars: &Vars) -> Poly {
        Poly::from_terms(
            vars,
            self.terms
                .iter()
                .filter(|t| t.0 == pos)
                .map(|t| (t.1.clone(), t.2.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(p, m, a)| (*p, m.clone(), a * c))
                .collect(),
        }
    }

    /// `self + c * shift * other`.
    pub fn add_scaled(
        &self,
        c: &Rational,
        shift: &Monomial,
        other: &Vector,
        ord: &TermOrder,
    ) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &Term| -> Term { (t.0, t.1.mul(shift), &t.2 * c) };
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = shifted(&other.terms[j]);
            match ord.cmp((a.0, &a.1), (b.0, &b.1)) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a.2 + &b.2;
                    if !s.is_zero() {
                        out.push((a.0, a.1.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(shifted));
        Vector { terms: out }
    }
}

/// Basis element together with its optional representation.
#[derive(Debug, Clone)]
pub(crate) struct Elem {
    pub v: Vector,
    pub rep: Option<Vector>,
}

impl Elem {
    fn monic(self) -> Elem {
        let lc = match self.v.lead() {
            Some(t) => t.2.clone(),
            None => return self,
        };
        if lc.is_one() {
            return self;
        }
        let inv = lc.recip();
        Elem {
            v: self.v.scale(&inv),
            rep: self.rep.map(|r| r.scale(&inv)),
        }
    }
}

pub(crate) struct Engine {
    pub ord: TermOrder,
    /// Whether all elements live in rank one (enables the coprime-lead criterion).
    pub rank_one: bool,
}

impl Engine {
    pub fn new(mono: MonomialOrder, rank_one: bool) -> Self {
        Engine {
            ord: TermOrder::new(mono),
            rank_one,
        }
    }

    fn find_reducer(&self, basis: &[Elem], skip: Option<usize>, pos: usize, m: &Monomial) -> Option<usize> {
        basis.iter().enumerate().position(|(k, b)| {
            if Some(k) == skip {
                return false;
            }
            let (bp, bm, _) = b.v.lead().expect("basis elements are nonzero");
            *bp == pos && bm.divides(m)
        })
    }

    /// Full reduction of `f` by `basis` (excluding `skip`). Every step
    /// `f -= q*b` is mirrored on `rep` as `rep -= q*rep(b)`, so a
    /// representation of `f` stays a representation of the result, and a
    /// zero start vector ends as minus the quotient.
    pub fn reduce(
        &self,
        f: Vector,
        mut rep: Option<Vector>,
        basis: &[Elem],
        skip: Option<usize>,
    ) -> (Vector, Option<Vector>) {
        let mut done: Vec<Term> = Vec::new();
        let mut f = f;
        while let Some((pos, m, c)) = f.terms.first().cloned() {
            match self.find_reducer(basis, skip, pos, &m) {
                Some(k) => {
                    let b = &basis[k];
                    let (_, bm, bc) = b.v.lead().expect("nonzero");
                    let shift = bm.quotient_of(&m).expect("divides");
                    let q = -(&c / bc);
                    f = f.add_scaled(&q, &shift, &b.v, &self.ord);
                    if let (Some(r), Some(br)) = (rep.as_mut(), b.rep.as_ref()) {
                        *r = r.add_scaled(&q, &shift, br, &self.ord);
                    }
                }
                None => {
                    done.push(f.terms.remove(0));
                }
            }
        }
        (Vector { terms: done }, rep)
    }

    fn spoly(&self, a: &Elem, b: &Elem) -> Elem {
        let (_, am, ac) = a.v.lead().expect("nonzero");
        let (_, bm, bc) = b.v.lead().expect("nonzero");
        let l = am.lcm(bm);
        let sa = am.quotient_of(&l).expect("lcm");
        let sb = bm.quotient_of(&l).expect("lcm");
        let ca = ac.recip();
        let cb = -bc.recip();
        let v = Vector::zero()
            .add_scaled(&ca, &sa, &a.v, &self.ord)
            .add_scaled(&cb, &sb, &b.v, &self.ord);
        let rep = match (&a.rep, &b.rep) {
            (Some(ra), Some(rb)) => Some(
                Vector::zero()
                    .add_scaled(&ca, &sa, ra, &self.ord)
                    .add_scaled(&cb, &sb, rb, &self.ord),
            ),
            _ => None,
        };
        Elem { v, rep }
    }

    fn lead_lcm(&self, a: &Elem, b: &Elem) -> Option<(usize, Monomial)> {
        let (ap, am, _) = a.v.lead()?;
        let (bp, bm, _) = b.v.lead()?;
        (ap == bp).then(|| (*ap, am.lcm(bm)))
    }

    fn is_constant_lead(&self, e: &Elem) -> bool {
        self.rank_one && e.v.lead().is_some_and(|t| t.1.is_one())
    }

    fn vector_degree(v: &Vector) -> u32 {
        v.terms.iter().map(|t| t.1.degree()).max().unwrap_or(0)
    }

    /// Reduced Gröbner basis of the elements `gens`, sorted by descending
    /// leading term, each with leading coefficient one.
    ///
    /// Pairs are selected by the normal strategy on sugar degrees: smallest
    /// sugar first, ties broken by the smaller lcm. Without the sugar
    /// component, elimination orders stall on high-degree pairs.
    pub fn groebner(&self, gens: Vec<Elem>) -> Vec<Elem> {
        let mut basis: Vec<Elem> = Vec::new();
        let mut sugar: Vec<u32> = Vec::new();
        let mut pending: Vec<(usize, usize)> = Vec::new();
        let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

        let add = |basis: &mut Vec<Elem>,
                   sugar: &mut Vec<u32>,
                   pending: &mut Vec<(usize, usize)>,
                   pending_set: &mut HashSet<(usize, usize)>,
                   e: Elem,
                   s: u32| {
            let k = basis.len();
            for (i, b) in basis.iter().enumerate() {
                if self.lead_lcm(b, &e).is_some() {
                    pending.push((i, k));
                    pending_set.insert((i, k));
                }
            }
            basis.push(e);
            sugar.push(s);
        };

        for g in gens {
            if g.v.is_zero() {
                continue;
            }
            let g = g.monic();
            if self.is_constant_lead(&g) {
                return vec![g];
            }
            let s = Self::vector_degree(&g.v);
            add(&mut basis, &mut sugar, &mut pending, &mut pending_set, g, s);
        }

        let pair_sugar = |basis: &[Elem], sugar: &[u32], i: usize, j: usize, lcm: &Monomial| -> u32 {
            let di = lcm.degree() - basis[i].v.lead().expect("nonzero").1.degree();
            let dj = lcm.degree() - basis[j].v.lead().expect("nonzero").1.degree();
            (sugar[i] + di).max(sugar[j] + dj)
        };

        while !pending.is_empty() {
            let mut best = 0;
            let mut best_key: Option<(u32, (usize, Monomial))> = None;
            for (idx, &(i, j)) in pending.iter().enumerate() {
                let key = self.lead_lcm(&basis[i], &basis[j]).expect("same position");
                let s = pair_sugar(&basis, &sugar, i, j, &key.1);
                let better = match &best_key {
                    None => true,
                    Some((bs, bk)) => {
                        s < *bs || (s == *bs && self.ord.cmp((key.0, &key.1), (bk.0, &bk.1)) == Ordering::Less)
                    }
                };
                if better {
                    best = idx;
                    best_key = Some((s, key));
                }
            }
            let (i, j) = pending.swap_remove(best);
            pending_set.remove(&(i, j));
            let (s_sugar, (pos, lcm)) = best_key.expect("nonempty");

            if self.rank_one {
                let am = &basis[i].v.lead().expect("nonzero").1;
                let bm = &basis[j].v.lead().expect("nonzero").1;
                if am.coprime(bm) {
                    continue;
                }
            }
            let chain = (0..basis.len()).any(|k| {
                if k == i || k == j {
                    return false;
                }
                let (kp, km, _) = basis[k].v.lead().expect("nonzero");
                *kp == pos
                    && km.divides(&lcm)
                    && !pending_set.contains(&(i.min(k), i.max(k)))
                    && !pending_set.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }

            let s = self.spoly(&basis[i], &basis[j]);
            let (h, rep) = self.reduce(s.v, s.rep, &basis, None);
            if h.is_zero() {
                continue;
            }
            let e = Elem { v: h, rep }.monic();
            if self.is_constant_lead(&e) {
                return vec![e];
            }
            let s = s_sugar.max(Self::vector_degree(&e.v));
            add(&mut basis, &mut sugar, &mut pending, &mut pending_set, e, s);
        }

        self.reduce_basis(basis)
    }

    /// Minimalises and inter-reduces a Gröbner basis.
    fn reduce_basis(&self, basis: Vec<Elem>) -> Vec<Elem> {
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            let (ip, im, _) = basis[i].v.lead().expect("nonzero");
            for j in 0..basis.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let (jp, jm, _) = basis[j].v.lead().expect("nonzero");
                if ip == jp && jm.divides(im) && (jm != im || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut minimal: Vec<Elem> = basis
            .into_iter()
            .zip(keep)
            .filter_map(|(e, k)| k.then_some(e))
            .collect();
        for i in 0..minimal.len() {
            let e = minimal[i].clone();
            let (v, rep) = self.reduce(e.v, e.rep, &minimal, Some(i));
            minimal[i] = Elem { v, rep }.monic();
        }
        minimal.sort_by(|a, b| {
            let (ap, am, _) = a.v.lead().expect("nonzero");
            let (bp, bm, _) = b.v.lead().expect("nonzero");
            self.ord.cmp((*bp, bm), (*ap, am))
        });
        minimal
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    #[test]
    fn buchberger_small_example() {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let eng = Engine::new(MonomialOrder::Grevlex, true);
        let gens = ["x^2 + y", "x*y"]
            .iter()
            .map(|s| Elem {
                v: Vector::from_poly(&Poly::parse(s, &v).unwrap(), 0, &eng.ord),
                rep: None,
            })
            .collect();
        let gb = eng.groebner(gens);
        let polys: Vec<String> = gb.iter().map(|e| e.v.component(0, &v).to_string()).collect();
        assert_eq!(polys, vec!["x^2 + y", "x*y", "y^2"]);
    }
}
