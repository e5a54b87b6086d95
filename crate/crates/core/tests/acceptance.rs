//! One pass/fail line per acceptance criterion. Run with `--nocapture` to see
//! the report; the test fails if any criterion fails.

use std::time::Instant;

use qborel::borel::{max_stabilizing_poset, min_q_generators, witness_ideal};
use qborel::decomp::{
    associated_primes, borel_irreducible_split, colon_representation, irreducible_decomposition, primary_to_product,
    principal_primary_decomposition, product_to_primary, PrimePowerIntersection,
};
use qborel::monomial::Variables;
use qborel::oracle::{agree_up_to, comparison_degree, intersection_agrees};
use qborel::random;
use qborel::resolution::*;
use qborel::session::parse_monomial;
use qborel::{Monomial, MonomialIdeal, MonomialPrime, Poset, PrimeFactorization, QBorelIdeal};
use rand::Rng;

// Instance counts and slack degrees.
const PRIME_PRODUCTS: usize = 200;
const SUM_CLOSED_FAMILIES: usize = 50;
const Y_IDEALS_PER_T: usize = 30;
const Y_EXACTNESS_SLACK: u32 = 3;
const TRUNCATED_INSTANCES: usize = 20;
const IRREDUCIBLE_INSTANCES: usize = 50;
const IRREDUCIBLE_SLACK: u32 = 2;
const SPLIT_INSTANCES: usize = 20;
const SEED: u64 = 20_240_601;

fn mono(n: usize, s: &str) -> Monomial {
    parse_monomial(&Variables::standard(n), s).unwrap()
}

fn prime(vars: &[usize]) -> MonomialPrime {
    MonomialPrime::from_vars(vars.iter().copied())
}

type Outcome = Result<String, String>;

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

/// a < d < f, c < f, b < e, c < e and m = def.
fn criterion_1() -> Outcome {
    let p = Poset::new(6, [(0, 3), (3, 5), (2, 5), (1, 4), (2, 4)]).unwrap();
    let m = mono(6, "def");
    let ass = associated_primes(&p, &m).map_err(|e| e.to_string())?;
    let expected = vec![prime(&[0, 3]), prime(&[1, 2, 4]), prime(&[0, 2, 3, 5]), prime(&[0, 1, 2, 3, 4, 5])];
    check(ass == expected, format!("associated primes {ass:?}"))?;
    let d = principal_primary_decomposition(&p, &m).map_err(|e| e.to_string())?;
    let exps: Vec<u32> = expected.iter().map(|&q| d.exponent(q)).collect();
    check(exps == [1, 1, 2, 3] && d.len() == 4, format!("exponents {exps:?}"))?;
    let q = QBorelIdeal::principal(&p, &m).unwrap();
    check(agree_up_to(q.expansion(), &d.ideal(), 6), "decomposition differs from Q(def)")?;
    Ok("primes {(a,d),(b,c,e),(a,c,d,f),(a,b,c,d,e,f)}, exponents (1,1,2,3)".into())
}

fn criterion_2() -> Outcome {
    let vee = Poset::new(3, [(0, 1), (0, 2)]).unwrap();
    let gens = |i: &QBorelIdeal| -> Vec<Monomial> {
        let mut g = i.q_generators().to_vec();
        g.sort();
        g
    };
    let sorted = |mut v: Vec<Monomial>| {
        v.sort();
        v
    };
    for k in 1..=3u32 {
        let ak = Monomial::var_power(3, 0, k);
        let ak1 = Monomial::var_power(3, 0, k + 1);
        let (b, c) = (Monomial::var(3, 1), Monomial::var(3, 2));
        let x = QBorelIdeal::principal(&vee, &ak.mul(&b)).unwrap();
        let y = QBorelIdeal::principal(&vee, &ak.mul(&c)).unwrap();
        let meet = x.intersect(&y).map_err(|e| e.to_string())?;
        check(gens(&meet) == sorted(vec![ak.mul(&b).mul(&c), ak1.clone()]), format!("k={k}: first meet {:?}", gens(&meet)))?;
        let u = QBorelIdeal::principal(&vee, &ak.mul(&b).mul(&c)).unwrap();
        let v = QBorelIdeal::principal(&vee, &ak1).unwrap();
        let meet = u.intersect(&v).map_err(|e| e.to_string())?;
        check(gens(&meet) == sorted(vec![ak1.mul(&b), ak1.mul(&c)]), format!("k={k}: second meet {:?}", gens(&meet)))?;
    }
    Ok("k = 1, 2, 3".into())
}

fn criterion_3() -> Outcome {
    let mut r = random::rng(SEED + 3);
    for k in 0..PRIME_PRODUCTS {
        let n = r.gen_range(1..=5);
        let f = PrimeFactorization::new(n, random::prime_product(&mut r, n, 4, 3));
        let d = product_to_primary(&f);
        check(agree_up_to(&f.expand(), &d.ideal(), f.total_degree() + 1), format!("instance {k}: ideals differ"))?;
        let family = f.factors().keys().copied().collect::<qborel::PrimeFamily>().sum_closure();
        let back = primary_to_product(&d, &family).map_err(|e| e.to_string())?;
        let same = family.primes().iter().all(|&p| back.exponent(p) == i64::from(f.exponent(p)));
        check(same, format!("instance {k}: exponents not recovered"))?;
    }
    Ok(format!("{PRIME_PRODUCTS} products"))
}

fn criterion_4() -> Outcome {
    let mut r = random::rng(SEED + 4);
    for k in 0..SUM_CLOSED_FAMILIES {
        let n = r.gen_range(2..=4);
        let family = random::sum_closed_family(&mut r, n, 4);
        let a: Vec<u32> = family.primes().iter().map(|_| r.gen_range(0..=3)).collect();
        let decomp = PrimePowerIntersection::new(n, family.primes().iter().copied().zip(a.iter().copied()));
        let rep = colon_representation(&decomp, &family).map_err(|e| e.to_string())?;
        let total: u32 = a.iter().sum();
        check(agree_up_to(&rep.quotient_ideal(), &decomp.ideal(), total + 1), format!("instance {k}: quotient differs"))?;
    }
    Ok(format!("{SUM_CLOSED_FAMILIES} families"))
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for p in Poset::all_naturally_labeled(n) {
            for mask in 1u64..(1 << n) {
                let m = Monomial::from_mask(n, mask);
                let Ok(pd) = pdim_principal(&p, &m) else { continue };
                cases += 1;
                let q = QBorelIdeal::principal(&p, &m).unwrap();
                let e = q.expansion();
                let koszul_pd = koszul_betti(e, e.lcm().degree()).graded().projective_dimension().unwrap() + 1;
                check(pd == koszul_pd, format!("{p:?} m={m:?}: pd {pd} vs Koszul {koszul_pd}"))?;
                let codim = codim_principal(&p, &m).unwrap();
                let ass = associated_primes(&p, &m).unwrap();
                let min_support = ass.iter().map(|q| q.len()).min().unwrap();
                check(codim == min_support, format!("{p:?} m={m:?}: codim {codim} vs {min_support}"))?;
                let cm = is_cohen_macaulay(&p, &m).unwrap();
                check(cm.is_cohen_macaulay() == (koszul_pd == codim), format!("{p:?} m={m:?}: cm {cm}"))?;
                let classified = m.pure_power().is_some() || e.len() == 1;
                check(cm.is_cohen_macaulay() == classified, format!("{p:?} m={m:?}: classification"))?;
            }
        }
    }
    Ok(format!("{cases} (poset, m) pairs with n <= 5"))
}

fn criterion_6() -> Outcome {
    let mut r = random::rng(SEED + 6);
    for t in [1usize, 2] {
        let y = Poset::y_poset(t);
        for k in 0..Y_IDEALS_PER_T {
            let i = random::q_borel(&mut r, &y, 3, 4).map_err(|e| e.to_string())?;
            let e = i.expansion();
            let (cx, _) = y_resolution(t, e).map_err(|e| e.to_string())?;
            let here = format!("t={t} instance {k} {:?}", i.q_generators());
            check(verify_complex(&cx, e, VerifyMode::D2).is_ok(), format!("{here}: d^2"))?;
            let bound = e.max_degree().unwrap() + Y_EXACTNESS_SLACK;
            let v = verify_complex(&cx, e, VerifyMode::Exactness { bound });
            check(v.is_ok(), format!("{here}: {}", v.err().map(|f| f.to_string()).unwrap_or_default()))?;
            check(cx.is_minimal(), format!("{here}: unit entries"))?;
            check(cx.betti() == koszul_betti(e, e.lcm().degree()).graded(), format!("{here}: Betti"))?;
        }
    }
    let q = QBorelIdeal::principal(&Poset::y_poset(1), &mono(3, "bc")).unwrap();
    let (cx, _) = y_resolution(1, q.expansion()).map_err(|e| e.to_string())?;
    check(cx.ranks() == [4, 4, 1], format!("Q(yz) ranks {:?}", cx.ranks()))?;
    check(cx.level(2)[0].multidegree == mono(3, "aabc"), "second syzygy is not at x^2yz")?;
    Ok(format!("{} ideals for t = 1, 2; Q(yz) gives (4,4,1) at x^2yz", 2 * Y_IDEALS_PER_T))
}

fn criterion_7() -> Outcome {
    let mut r = random::rng(SEED + 7);
    let binom = |n: usize, k: usize| -> usize { (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1)) };
    for k in 0..TRUNCATED_INSTANCES {
        let n = r.gen_range(2..=3);
        let anti = Poset::antichain(n);
        let i = QBorelIdeal::from_ideal(&anti, random::ideal(&mut r, n, 4, 3)).unwrap();
        let g = i.q_generators().len();
        // Large enough that nothing is truncated away.
        let d = i.expansion().lcm().degree();
        let t = truncated_resolution(&anti, &i, d, TruncatedOptions::default()).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (0..g).map(|l| binom(g, l + 1)).collect();
        check(t.ranks() == expected, format!("antichain {k}: ranks {:?} vs {expected:?}", t.ranks()))?;
    }
    for k in 0..TRUNCATED_INSTANCES {
        let n = r.gen_range(2..=4);
        let chain = Poset::chain(n);
        let i = random::q_borel(&mut r, &chain, 3, 3).map_err(|e| e.to_string())?;
        let d = i.expansion().max_degree().unwrap();
        let opts = TruncatedOptions { cancel: true, ..Default::default() };
        let t = truncated_resolution(&chain, &i, d, opts).map_err(|e| e.to_string())?;
        let ek = ek_resolution(i.expansion()).map_err(|e| e.to_string())?;
        check(t.betti() == ek.betti(), format!("chain {k}: Betti differs from Eliahou-Kervaire"))?;
    }
    for k in 0..TRUNCATED_INSTANCES {
        let n = r.gen_range(2..=4);
        let p = random::poset(&mut r, n, 0.5);
        let i = random::q_borel(&mut r, &p, 3, 3).map_err(|e| e.to_string())?;
        let d = i.q_generators().iter().map(Monomial::degree).max().unwrap();
        let t = truncated_resolution(&p, &i, d, TruncatedOptions::default()).map_err(|e| e.to_string())?;
        let v = verify_complex(&t, i.expansion(), VerifyMode::Band { band: d });
        check(v.is_ok(), format!("general {k}: {}", v.err().map(|f| f.to_string()).unwrap_or_default()))?;
    }
    Ok(format!("{TRUNCATED_INSTANCES} antichain, chain and general instances"))
}

fn criterion_8() -> Outcome {
    let mut r = random::rng(SEED + 8);
    for k in 0..IRREDUCIBLE_INSTANCES {
        let n = r.gen_range(2..=4);
        let p = random::poset(&mut r, n, 0.4);
        let i = random::q_borel(&mut r, &p, 3, 3).map_err(|e| e.to_string())?;
        let comps = irreducible_decomposition(&i).map_err(|e| e.to_string())?;
        let parts: Vec<MonomialIdeal> = comps.iter().map(|c| c.ideal()).collect();
        let deg = comparison_degree([i.expansion()], IRREDUCIBLE_SLACK);
        check(intersection_agrees(i.expansion(), &parts, deg), format!("instance {k}: intersection differs"))?;
    }
    let mut splits = 0;
    while splits < SPLIT_INSTANCES {
        let n = r.gen_range(2..=4);
        let i = random::q_borel(&mut r, &Poset::chain(n), 3, 3).map_err(|e| e.to_string())?;
        let Ok((a, b)) = borel_irreducible_split(i.expansion()) else { continue };
        splits += 1;
        let deg = comparison_degree([i.expansion(), &a, &b], IRREDUCIBLE_SLACK);
        check(intersection_agrees(i.expansion(), &[a, b], deg), format!("split {splits}: intersection differs"))?;
    }
    Ok(format!("{IRREDUCIBLE_INSTANCES} decompositions, {SPLIT_INSTANCES} splits"))
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        for p in Poset::all_naturally_labeled(n) {
            let w = witness_ideal(&p).map_err(|e| e.to_string())?;
            check(max_stabilizing_poset(&w) == p, format!("{p:?}"))?;
            check(min_q_generators(&p, &w).is_ok(), format!("{p:?}: witness is not Q-Borel"))?;
            count += 1;
        }
    }
    Ok(format!("{count} posets with n <= 4"))
}

fn criterion_10() -> Outcome {
    let i = QBorelIdeal::from_ideal(&Poset::chain(3), MonomialIdeal::new(3, [mono(3, "a"), mono(3, "b"), mono(3, "c")])).unwrap();
    let mut ek = ek_resolution(i.expansion()).unwrap();
    check(verify_complex(&ek, i.expansion(), VerifyMode::D2).is_ok(), "uncorrupted complex fails")?;
    let e = ek.entries(2)[0].clone();
    ek.set_coefficient(2, e.row, e.col, -e.coef);
    let corrupted = verify_complex(&ek, i.expansion(), VerifyMode::D2);
    check(matches!(corrupted, Err(Failure::D2 { .. })), format!("corrupted sign not caught: {corrupted:?}"))?;

    let p = Poset::new(6, [(0, 3), (3, 5), (2, 5), (1, 4), (2, 4)]).unwrap();
    let m = mono(6, "def");
    let d = principal_primary_decomposition(&p, &m).unwrap();
    let q = QBorelIdeal::principal(&p, &m).unwrap();
    for &dropped in d.components().keys() {
        let rest = d.without(dropped);
        check(!agree_up_to(q.expansion(), &rest.ideal(), 7), format!("dropping {dropped:?} not caught"))?;
    }
    Ok("sign flip fails d^2 = 0; every dropped component breaks equality".into())
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1 primary decomposition of Q(def)", criterion_1),
        ("2 intersections on the vee", criterion_2),
        ("3 prime products and Moebius inversion", criterion_3),
        ("4 colon representations", criterion_4),
        ("5 pd, codim and Cohen-Macaulay", criterion_5),
        ("6 Y-Borel resolutions", criterion_6),
        ("7 truncated mapping cones", criterion_7),
        ("8 irreducible decompositions", criterion_8),
        ("9 witness ideals", criterion_9),
        ("10 negative controls", criterion_10),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({secs:.2}s)"),
            Err(msg) => {
                println!("FAIL criterion {name}: {msg} ({secs:.2}s)");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
