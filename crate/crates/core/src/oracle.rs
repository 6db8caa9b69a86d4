//! Brute-force cross-checks and reproducible random inputs.
//!
//! [`jet_member`] decides membership in `I + m^N` by exact linear algebra
//! over the monomials of degree `< N`; it never touches the Gröbner engine.
//! A positive answer at order `N` is only evidence of local membership, a
//! negative answer at any order is a proof of non-membership.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::MembershipWitness;
use crate::matrix::PolyMatrix;
use crate::quiver::{Arrow, QuiverRep, Vertex};
use crate::ring::{same_table, Monomial, Poly, Rational, VarTable, Vars};

/// The truncated ring `Q[x]/m^N` with a fixed monomial basis.
#[derive(Debug, Clone)]
pub struct JetSpace {
    vars: Vars,
    order: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

fn monomials_of_degree(nvars: usize, d: u32, out: &mut Vec<Monomial>) {
    fn rec(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(prefix, left - 1, d - e, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, d, out);
}

impl JetSpace {
    pub fn new(vars: &Vars, order: u32) -> Self {
        let mut basis = Vec::new();
        for d in 0..order {
            monomials_of_degree(vars.len(), d, &mut basis);
        }
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        JetSpace {
            vars: vars.clone(),
            order,
            basis,
            index,
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Monomials of degree `< N`, ordered by degree.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    fn coords(&self, f: &Poly) -> Row {
        f.terms()
            .filter_map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone())))
            .collect()
    }
}

type Row = BTreeMap<usize, Rational>;

fn axpy(dst: &mut Row, c: &Rational, src: &Row) {
    for (&k, v) in src {
        let e = dst.entry(k).or_insert_with(Rational::zero);
        *e -= c * v;
        if e.is_zero() {
            dst.remove(&k);
        }
    }
}

/// Row echelon form built incrementally, each row keyed by its first index.
struct Echelon {
    rows: HashMap<usize, (Row, Row)>,
}

impl Echelon {
    /// Reduces `(v, combo)`; on return `v` is zero or has a fresh pivot.
    fn reduce(&self, v: &mut Row, combo: &mut Row) {
        while let Some((p, c)) = v.iter().next().map(|(&p, c)| (p, c.clone())) {
            let Some((row, rc)) = self.rows.get(&p) else { break };
            let c = c / &row[&p];
            axpy(v, &c, row);
            axpy(combo, &c, rc);
        }
    }

    fn insert(&mut self, mut v: Row, mut combo: Row) {
        self.reduce(&mut v, &mut combo);
        if let Some(&p) = v.keys().next() {
            self.rows.insert(p, (v, combo));
        }
    }
}

/// Membership of `f` in `(gens) + m^N`; with a witness (unit `1`) on success.
pub fn jet_member_witness(f: &Poly, gens: &[Poly], order: u32) -> Result<Option<MembershipWitness>> {
    if order == 0 {
        return Err(Error::Precondition("jet order must be at least 1".into()));
    }
    let vars = f.vars();
    if gens.iter().any(|g| !same_table(g.vars(), vars)) {
        return Err(Error::VarTableMismatch);
    }
    let space = JetSpace::new(vars, order);
    // Unknowns are indexed by (generator, basis monomial).
    let mut unknowns = Vec::new();
    let mut ech = Echelon { rows: HashMap::new() };
    for (gi, g) in gens.iter().enumerate() {
        let Some(og) = g.ord() else { continue };
        if og >= order {
            continue;
        }
        for m in space.basis.iter().take_while(|m| m.degree() + og < order) {
            let prod = g.mul_monomial(m, &Rational::one()).truncate(order);
            let k = unknowns.len();
            unknowns.push((gi, m.clone()));
            ech.insert(space.coords(&prod), Row::from([(k, Rational::one())]));
        }
    }
    let mut v = space.coords(&f.truncate(order));
    let mut combo = Row::new();
    ech.reduce(&mut v, &mut combo);
    if !v.is_empty() {
        return Ok(None);
    }
    // reduce() subtracted the combination, so f = -Σ combo_k m_k g_k.
    let mut cofactors = vec![Poly::zero(vars); gens.len()];
    for (k, c) in combo {
        let (gi, m) = &unknowns[k];
        cofactors[*gi] = &cofactors[*gi] - &Poly::monomial(vars, m.clone(), c);
    }
    Ok(Some(MembershipWitness {
        cofactors,
        unit: Poly::one(vars),
    }))
}

/// Whether `truncate(f, N)` lies in the span of the truncated multiples of `gens`.
pub fn jet_member(f: &Poly, gens: &[Poly], order: u32) -> Result<bool> {
    Ok(jet_member_witness(f, gens, order)?.is_some())
}

/// What [`random_instance`] generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Poly,
    Matrix,
    Membership,
    Quiver,
}

/// Size bounds for random instances.
#[derive(Debug, Clone)]
pub struct Profile {
    pub kind: InstanceKind,
    pub nvars: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff_bound: i64,
    /// Matrix size, number of generators, or number of vertices.
    pub size: usize,
    /// Drop constant terms (so generators lie in the maximal ideal).
    pub vanish_at_origin: bool,
}

impl Profile {
    pub fn new(kind: InstanceKind, nvars: usize, max_degree: u32, size: usize) -> Self {
        Profile {
            kind,
            nvars,
            max_degree,
            max_terms: 3,
            coeff_bound: 3,
            size,
            vanish_at_origin: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Poly(Poly),
    Matrix(PolyMatrix),
    Membership { element: Poly, generators: Vec<Poly> },
    Quiver(QuiverRep),
}

/// The variable table `x1, ..., xn` used by the generators.
pub fn standard_vars(n: usize) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    VarTable::new(&names).expect("valid names")
}

fn random_monomial(rng: &mut impl Rng, nvars: usize, min_degree: u32, max_degree: u32) -> Monomial {
    let d = rng.gen_range(min_degree..=max_degree);
    let mut e = vec![0u32; nvars];
    if nvars > 0 {
        for _ in 0..d {
            e[rng.gen_range(0..nvars)] += 1;
        }
    }
    Monomial(e)
}

fn random_coeff(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return Rational::from_integer(c.into());
        }
    }
}

/// Random polynomial whose terms have degrees in `min_degree..=max_degree`.
pub fn random_poly_in(rng: &mut impl Rng, vars: &Vars, profile: &Profile, min_degree: u32) -> Poly {
    let min = if profile.vanish_at_origin { min_degree.max(1) } else { min_degree };
    let max = profile.max_degree.max(min);
    let n = rng.gen_range(1..=profile.max_terms.max(1));
    let terms = (0..n).map(|_| {
        (
            random_monomial(rng, vars.len(), min, max),
            random_coeff(rng, profile.coeff_bound),
        )
    });
    Poly::from_terms(vars, terms)
}

pub fn random_poly(rng: &mut impl Rng, vars: &Vars, profile: &Profile) -> Poly {
    random_poly_in(rng, vars, profile, 0)
}

pub fn random_matrix(rng: &mut impl Rng, vars: &Vars, profile: &Profile, rows: usize, cols: usize) -> PolyMatrix {
    let data = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(0.25) {
                        Poly::zero(vars)
                    } else {
                        random_poly(rng, vars, profile)
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(vars, data).expect("rectangular")
}

/// Product of random elementary matrices: polynomial entries, determinant ±1.
pub fn random_unimodular(rng: &mut impl Rng, vars: &Vars, profile: &Profile, n: usize) -> PolyMatrix {
    let mut u = PolyMatrix::identity(vars, n);
    if n < 2 {
        return u;
    }
    let small = Profile {
        max_terms: 2,
        vanish_at_origin: false,
        max_degree: profile.max_degree.min(2),
        ..profile.clone()
    };
    for _ in 0..(2 * n) {
        let mut e = PolyMatrix::identity(vars, n);
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        e.set(i, j, random_poly(rng, vars, &small));
        u = u.mul(&e).expect("square");
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    u.submatrix(&perm, &(0..n).collect::<Vec<_>>())
}

/// Reproducible instance for `seed` within the bounds of `profile`.
pub fn random_instance(seed: u64, profile: &Profile) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = standard_vars(profile.nvars);
    match profile.kind {
        InstanceKind::Poly => Instance::Poly(random_poly(&mut rng, &vars, profile)),
        InstanceKind::Matrix => {
            Instance::Matrix(random_matrix(&mut rng, &vars, profile, profile.size, profile.size))
        }
        InstanceKind::Membership => {
            let generators = (0..profile.size.max(1))
                .map(|_| random_poly(&mut rng, &vars, profile))
                .collect();
            let element = random_poly(&mut rng, &vars, profile);
            Instance::Membership { element, generators }
        }
        InstanceKind::Quiver => {
            let nv = profile.size.max(1);
            let vertices: Vec<Vertex> = (0..nv)
                .map(|i| Vertex::new(format!("v{}", i + 1), rng.gen_range(1..=2)))
                .collect();
            let mut arrows = Vec::new();
            for to in 0..nv {
                for from in 0..nv {
                    if rng.gen_bool(0.5) {
                        let m = random_matrix(&mut rng, &vars, profile, vertices[to].rank, vertices[from].rank);
                        arrows.push(Arrow::new(from, to, m));
                    }
                }
            }
            Instance::Quiver(QuiverRep::new(&vars, vertices, arrows).expect("consistent shapes"))
        }
    }
}

/// Local membership that holds only up to units: generators `u_i·g_i` with
/// `u_i(0) ≠ 0`, element `Σ c_i·g_i`.
pub fn positive_membership(seed: u64, profile: &Profile) -> (Poly, Vec<Poly>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = standard_vars(profile.nvars);
    let unit_profile = Profile {
        vanish_at_origin: true,
        max_degree: 2,
        max_terms: 2,
        ..profile.clone()
    };
    let mut f = Poly::zero(&vars);
    let mut gens = Vec::new();
    for _ in 0..profile.size.max(1) {
        let g = random_poly(&mut rng, &vars, profile);
        let u = &Poly::one(&vars) + &random_poly(&mut rng, &vars, &unit_profile);
        let c = random_poly_in(
            &mut rng,
            &vars,
            &Profile {
                vanish_at_origin: false,
                max_degree: 1,
                ..profile.clone()
            },
            0,
        );
        f = &f + &(&c * &g);
        gens.push(&u * &g);
    }
    (f, gens)
}

/// Non-membership with a degree-`d` obstruction: generators in `m^{d+1}`,
/// element `Σ c_i·g_i + h` with `h` a monomial of degree `d`.
pub fn negative_membership(seed: u64, profile: &Profile, d: u32) -> (Poly, Vec<Poly>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = standard_vars(profile.nvars);
    let high = Profile {
        max_degree: profile.max_degree.max(d + 1),
        ..profile.clone()
    };
    let gens: Vec<Poly> = (0..profile.size.max(1))
        .map(|_| random_poly_in(&mut rng, &vars, &high, d + 1))
        .collect();
    let mut f = Poly::monomial(&vars, random_monomial(&mut rng, vars.len(), d, d), Rational::one());
    for g in &gens {
        let c = random_coeff(&mut rng, profile.coeff_bound);
        f = &f + &g.scale(&c);
    }
    (f, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, v: &Vars) -> Poly {
        Poly::parse(s, v).unwrap()
    }

    #[test]
    fn small_memberships() {
        let v = VarTable::new(&["x"]).unwrap();
        assert!(!jet_member(&p("x", &v), &[p("x^2", &v)], 3).unwrap());
        let gens = [p("x^2 + x^3", &v)];
        let w = jet_member_witness(&p("x^2", &v), &gens, 4).unwrap().unwrap();
        assert!(w.verify_to_order(&p("x^2", &v), &gens, 4));
        assert!(!w.verify(&p("x^2", &v), &gens));
        assert!(jet_member(&p("x", &v), &[], 1).unwrap());
        assert!(jet_member(&p("x", &v), &[p("x^2", &v)], 0).is_err());
    }

    #[test]
    fn basis_size() {
        let v = standard_vars(3);
        // C(3 + 4 - 1 + 1, 3) monomials of degree < 4 in 3 variables
        assert_eq!(JetSpace::new(&v, 4).dimension(), 20);
        assert_eq!(JetSpace::new(&v, 1).basis(), &[Monomial::one(3)]);
    }

    #[test]
    fn determinism_and_bounds() {
        let prof = Profile::new(InstanceKind::Matrix, 2, 2, 2);
        assert_eq!(random_instance(7, &prof), random_instance(7, &prof));
        let Instance::Matrix(m) = random_instance(7, &prof) else { panic!() };
        assert!(m.entries().iter().all(|e| e.degree().unwrap_or(0) <= 2));

        let prof = Profile::new(InstanceKind::Membership, 3, 4, 2);
        let all: Vec<_> = (1..=100).map(|s| random_instance(s, &prof)).collect();
        for i in 0..all.len() {
            for j in 0..i {
                assert_ne!(all[i], all[j], "seeds {} and {}", j + 1, i + 1);
            }
        }
    }

    #[test]
    fn unimodular_has_unit_determinant() {
        let prof = Profile::new(InstanceKind::Matrix, 2, 2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = random_unimodular(&mut rng, &standard_vars(2), &prof, 3);
        let d = crate::matrix::det(&u).unwrap();
        assert!(d.is_constant() && (d.is_one() || (-&d).is_one()));
    }
}
