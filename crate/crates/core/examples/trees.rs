//! Trees with nu_I = rho_e^o: recognise the spider family on every tree up
//! to 9 vertices and generate larger members.

use eopack::graph::enumerate_trees;
use eopack::invariants::{nu_i, rho_eo};
use eopack::trees::{generate_family_f, nu_i_tree, recognize_family_f, FamilyF, Wiring};

fn main() -> eopack::Result<()> {
    for n in 1..=9 {
        let (mut total, mut equal) = (0, 0);
        for t in enumerate_trees(n, true)? {
            let fam = recognize_family_f(&t)?;
            let eq = nu_i(&t)?.value == rho_eo(&t)?.value;
            assert_eq!(eq, fam.is_equality_tree());
            total += 1;
            equal += usize::from(eq);
            if let FamilyF::Member(p) = &fam {
                let legs: Vec<usize> = p.spiders.iter().map(|s| s.legs.len()).collect();
                println!("  n={n}: spiders with legs {legs:?}");
            }
        }
        println!("n={n}: {equal} of {total} trees have nu_I = rho_e^o");
    }
    let (t, part) = generate_family_f(&[3, 2, 4], &Wiring::Random, 7)?;
    println!(
        "random member: {} vertices, nu_I = {} (sum of legs {}), linear-time value {}",
        t.order(),
        nu_i(&t)?.value,
        part.total_legs(),
        nu_i_tree(&t)?.value
    );
    Ok(())
}
