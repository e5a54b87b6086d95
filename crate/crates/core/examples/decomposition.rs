//! Prime factorization, primary, colon and irreducible decompositions of a
//! principal Q-Borel ideal.
//!
//! cargo run --example decomposition

use qborel::borel::principal_factorization;
use qborel::decomp::{
    associated_primes, colon_representation, irreducible_decomposition, principal_primary_decomposition,
};
use qborel::{Monomial, Poset, QBorelIdeal, Variables};

fn main() -> qborel::Result<()> {
    let vars = Variables::new(["a", "b", "c", "d", "e", "f"])?;
    // a < d < f, c < f, b < e, c < e
    let p = Poset::new(6, [(0, 3), (3, 5), (2, 5), (1, 4), (2, 4)])?;
    let m = Monomial::new(vec![0, 0, 0, 1, 1, 1]);
    println!("poset {}", p.display(&vars));

    let fact = principal_factorization(&p, &m)?;
    println!("Q(def) = {}", fact.display(&vars));

    let primary = principal_primary_decomposition(&p, &m)?;
    println!("       = {}", primary.display(&vars));

    let primes: Vec<String> = associated_primes(&p, &m)?.iter().map(|q| q.display(&vars).to_string()).collect();
    println!("associated primes: {}", primes.join(", "));

    let family = primary.primes().sum_closure();
    let colon = colon_representation(&primary, &family)?;
    println!("colon form: {} : {}", colon.numerator.display(&vars), colon.denominator.display(&vars));
    assert_eq!(colon.quotient_ideal(), primary.ideal());

    let i = QBorelIdeal::principal(&p, &m)?;
    let comps: Vec<String> = irreducible_decomposition(&i)?.iter().map(|c| c.display(&vars).to_string()).collect();
    println!("{} irreducible components:", comps.len());
    for c in comps {
        println!("  {c}");
    }
    Ok(())
}
