//! The irreducible representations of A4 over the 2-local integers, their
//! characters, and pairwise inequivalence decided by the mod-2 search.

use repring_a4::groups::{a1, a2, b, enumerate_g};
use repring_a4::reps::{
    are_equivalent, gamma_d, induce, is_irreducible, linear_characters_h, monomial_gamma2, tau, tau0,
    EquivalenceSearch, GroupModule,
};

fn main() -> repring_a4::Result<()> {
    println!("generators a1 = {}, a2 = {}, b = {}; |G| = {}", a1(), a2(), b(), enumerate_g().len());
    let reps = [
        ("tau0", tau0()),
        ("tau", tau()),
        ("Gamma1", gamma_d(1)?),
        ("Gamma2", gamma_d(2)?),
        ("Gamma4", gamma_d(4)?),
    ];
    for (name, r) in &reps {
        println!("{:>6}: degree {}, character {}, irreducible {}", name, r.degree(), r.character(), is_irreducible(r));
    }
    println!("Gamma2 b =\n{}", reps[3].1.b());

    let search = EquivalenceSearch::default();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let e = are_equivalent(&reps[i].1, &reps[j].1, &search)?;
            println!("{} ~ {}: {} ({:?})", reps[i].0, reps[j].0, e.equivalent, e.mode);
        }
    }
    let mono = are_equivalent(&reps[3].1, &monomial_gamma2(), &search)?;
    let ind = are_equivalent(&reps[3].1, &induce(&linear_characters_h()[2]), &search)?;
    println!("Gamma2 ~ monomial form: {}, ~ induced delta2: {}", mono.equivalent, ind.equivalent);
    if let Some(x) = mono.witness {
        println!("witness (det {}):\n{}", x.det(), x);
    }
    Ok(())
}
