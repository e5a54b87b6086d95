//! Projective dimension, codimension and the Cohen-Macaulay property of
//! S/Q(m) over every naturally labeled poset on three variables, checked
//! against Betti numbers from Koszul homology.
//!
//! cargo run --example invariants

use qborel::resolution::{codim_principal, is_cohen_macaulay, koszul_betti, pdim_principal};
use qborel::{Monomial, Poset, QBorelIdeal, Variables};

fn main() -> qborel::Result<()> {
    let vars = Variables::standard(3);
    let m = Monomial::new(vec![1, 1, 2]);
    println!("m = {}", m.display(&vars));
    for p in Poset::all_naturally_labeled(3) {
        let pd = pdim_principal(&p, &m)?;
        let codim = codim_principal(&p, &m)?;
        let cm = is_cohen_macaulay(&p, &m)?;
        let i = QBorelIdeal::principal(&p, &m)?;
        let betti = koszul_betti(i.expansion(), m.degree() * 3).graded();
        // pd of the ideal is one less than pd of the quotient.
        let koszul_pd = betti.projective_dimension().map_or(0, |d| d + 1);
        assert_eq!(pd, koszul_pd);
        println!(
            "{:<18} pd {pd}  codim {codim}  betti {:<12} {cm}",
            p.display(&vars).to_string(),
            format!("{:?}", betti.ranks())
        );
    }
    Ok(())
}
