//! Eliahou-Kervaire, Y-Borel, Taylor and truncated resolutions, each
//! certified by the exact verifier.
//!
//! cargo run --example resolutions

use qborel::resolution::{
    ek_resolution, taylor_resolution, truncated_resolution, verify_complex, y_resolution, FreeComplex,
    TruncatedOptions, VerifyMode,
};
use qborel::{Monomial, MonomialIdeal, Poset, QBorelIdeal};

fn report(name: &str, cx: &FreeComplex, ideal: &MonomialIdeal) {
    let bound = ideal.generators().iter().fold(Monomial::one(ideal.nvars()), |l, g| l.lcm(g)).degree() + 1;
    let verdict = match verify_complex(cx, ideal, VerifyMode::Exactness { bound }) {
        Ok(c) => format!("exact through degree {bound} ({} multidegrees)", c.points),
        Err(f) => format!("FAILED: {f:?}"),
    };
    println!("{name}: ranks {:?}, minimal {}, {verdict}", cx.ranks(), cx.is_minimal());
    print!("{}", cx.betti().to_text());
}

fn main() -> qborel::Result<()> {
    // Classical Borel ideal generated by a^3 and bc.
    let chain = Poset::chain(3);
    let borel = QBorelIdeal::closure(&chain, &[Monomial::new(vec![0, 1, 1]), Monomial::new(vec![3, 0, 0])])?;
    report("eliahou-kervaire", &ek_resolution(borel.expansion())?, borel.expansion());

    // Q(yz) on the Y poset x < y, x < z.
    let y = Poset::y_poset(1);
    let yz = QBorelIdeal::principal(&y, &Monomial::new(vec![0, 1, 1]))?;
    let (cx, how) = y_resolution(1, yz.expansion())?;
    report(&format!("y-borel ({how:?})"), &cx, yz.expansion());

    // Any monomial ideal has a Taylor resolution; it is rarely minimal.
    let plain = MonomialIdeal::new(3, vec![Monomial::new(vec![1, 1, 0]), Monomial::new(vec![0, 1, 1]), Monomial::new(vec![1, 0, 1])]);
    report("taylor", &taylor_resolution(&plain)?, &plain);

    // Iterated mapping cones, with unit entries cancelled.
    let vee = Poset::new(3, [(0, 1), (0, 2)])?;
    let j = QBorelIdeal::closure(&vee, &[Monomial::new(vec![0, 1, 0]), Monomial::new(vec![0, 0, 1])])?;
    let opts = TruncatedOptions { cancel: true, ..TruncatedOptions::default() };
    report("truncated d=3", &truncated_resolution(&vee, &j, 3, opts)?, j.expansion());
    Ok(())
}
