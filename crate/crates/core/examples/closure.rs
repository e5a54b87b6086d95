//! Closures, membership and minimal generators on a small poset.
//!
//! cargo run --example closure

use qborel::borel::{is_q_borel, max_stabilizing_poset, min_q_generators, principal_membership};
use qborel::{Monomial, MonomialIdeal, Poset, QBorelIdeal, Variables};

fn main() -> qborel::Result<()> {
    let vars = Variables::standard(3);
    // a < b, a < c
    let vee = Poset::new(3, [(0, 1), (0, 2)])?;
    let bc = Monomial::new(vec![0, 1, 1]);

    let i = QBorelIdeal::principal(&vee, &bc)?;
    println!("poset      {}", vee.display(&vars));
    println!("Q(bc)    = {}", i.expansion().display(&vars));

    for exps in [[2, 0, 0], [0, 2, 0], [1, 0, 1], [0, 0, 3]] {
        let mu = Monomial::new(exps.to_vec());
        println!("  {} in Q(bc)? {}", mu.display(&vars), principal_membership(&vee, &bc, &mu));
    }

    // The same generators read as a plain monomial ideal.
    let plain = MonomialIdeal::new(3, i.expansion().generators().to_vec());
    let maxp = max_stabilizing_poset(&plain);
    println!("maximal stabilizing poset {}", maxp.display(&vars));
    println!("Borel for the chain? {}", is_q_borel(&Poset::chain(3), &plain));
    let gens: Vec<String> = min_q_generators(&vee, &plain)?.iter().map(|m| m.display(&vars).to_string()).collect();
    println!("minimal Q-generators: {}", gens.join(", "));

    // Intersections of Q-Borel ideals stay Q-Borel.
    let ab = QBorelIdeal::principal(&vee, &Monomial::new(vec![1, 1, 0]))?;
    let meet = i.intersect(&ab)?;
    let gens: Vec<String> = meet.q_generators().iter().map(|m| m.display(&vars).to_string()).collect();
    println!("Q(bc) ∩ Q(ab) = {} = Q({})", meet.expansion().display(&vars), gens.join(", "));
    Ok(())
}
