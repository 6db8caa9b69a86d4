use fitting_decomp::groebner::{member_global, member_local, Ideal};
use fitting_decomp::matrix::{det_bareiss, det_cofactor, fitting_ideal};
use fitting_decomp::oracle::{jet_member, random_matrix, random_poly, random_unimodular, standard_vars, InstanceKind, Profile};
use fitting_decomp::ring::sqrt_exact;
use fitting_decomp::Poly;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn profile() -> Profile {
    Profile::new(InstanceKind::Poly, 2, 3, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bareiss_matches_cofactor(seed in any::<u64>(), n in 1usize..=4) {
        let vars = standard_vars(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, &vars, &profile(), n, n);
        prop_assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn display_parse_round_trip(seed in any::<u64>()) {
        let vars = standard_vars(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&mut rng, &vars, &profile());
        prop_assert_eq!(Poly::parse(&f.to_string(), &vars).unwrap(), f);
    }

    #[test]
    fn square_roots_of_squares(seed in any::<u64>()) {
        let vars = standard_vars(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&mut rng, &vars, &profile());
        let g = sqrt_exact(&(&f * &f)).expect("a square has a root");
        prop_assert_eq!(&g * &g, &f * &f);
    }

    #[test]
    fn combinations_are_members(seed in any::<u64>()) {
        let vars = standard_vars(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Poly> = (0..2).map(|_| random_poly(&mut rng, &vars, &profile())).collect();
        let coeffs: Vec<Poly> = (0..2).map(|_| random_poly(&mut rng, &vars, &profile())).collect();
        let f = gens.iter().zip(&coeffs).fold(Poly::zero(&vars), |acc, (g, c)| &acc + &(g * c));
        let Ok(ideal) = Ideal::new(gens) else { return Ok(()) };
        let (yes, w) = member_global(&f, &ideal).unwrap();
        prop_assert!(yes);
        prop_assert!(w.unwrap().verify(&f, ideal.generators()));
    }

    #[test]
    fn local_members_pass_the_jet_oracle(seed in any::<u64>()) {
        let vars = standard_vars(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Poly> = (0..2).map(|_| random_poly(&mut rng, &vars, &profile())).collect();
        let f = random_poly(&mut rng, &vars, &profile());
        let Ok(ideal) = Ideal::new(gens.clone()) else { return Ok(()) };
        let (yes, w) = member_local(&f, &ideal).unwrap();
        if yes {
            prop_assert!(w.unwrap().verify(&f, ideal.generators()));
            prop_assert!(jet_member(&f, &gens, 5).unwrap());
        } else {
            prop_assert!(w.is_none());
        }
    }

    #[test]
    fn fitting_ideals_survive_unimodular_change(seed in any::<u64>()) {
        let vars = standard_vars(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let prof = Profile::new(InstanceKind::Matrix, 2, 2, 2);
        let a = random_matrix(&mut rng, &vars, &prof, 2, 2);
        let u = random_unimodular(&mut rng, &vars, &prof, 2);
        let b = u.mul(&a).unwrap();
        let i = fitting_ideal(&a, 1).unwrap();
        let j = fitting_ideal(&b, 1).unwrap();
        for g in j.generators() {
            prop_assert!(member_local(g, &i).unwrap().0);
        }
    }
}
