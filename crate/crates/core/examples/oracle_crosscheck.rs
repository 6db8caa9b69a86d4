//! Compares local membership by Gröbner bases with the truncated-jet oracle.

use fitting_decomp::groebner::{member_local, Ideal};
use fitting_decomp::oracle::{jet_member, random_instance, Instance, InstanceKind, Profile};

fn main() -> fitting_decomp::Result<()> {
    let profile = Profile::new(InstanceKind::Membership, 2, 3, 2);
    let (mut members, mut agree) = (0, 0);
    let total = 40;
    for seed in 0..total {
        let Instance::Membership { element: f, generators: gens } = random_instance(seed, &profile) else {
            unreachable!()
        };
        let ideal = Ideal::new(gens.clone())?;
        let (local, witness) = member_local(&f, &ideal)?;
        if let Some(w) = &witness {
            assert!(w.verify(&f, ideal.generators()));
        }
        // A local member lies in the ideal modulo every power of m.
        let jets = [4, 6, 8].map(|n| jet_member(&f, &gens, n));
        if jets.iter().all(|j| matches!(j, Ok(true)) || !local) {
            agree += 1;
        }
        members += local as usize;
    }
    println!("{total} instances, {members} local members, {agree} consistent with the jet oracle");
    Ok(())
}
