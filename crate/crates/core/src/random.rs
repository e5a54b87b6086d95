//! Seeded generators for random instances of every object the library handles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::borel::QBorelIdeal;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::mobius::PrimeFamily;
use crate::monomial::Monomial;
use crate::poset::Poset;
use crate::prime::MonomialPrime;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monomial of degree between 1 and `max_degree`.
pub fn monomial(rng: &mut InstanceRng, nvars: usize, max_degree: u32) -> Monomial {
    let deg = rng.gen_range(1..=max_degree);
    let mut e = vec![0u32; nvars];
    for _ in 0..deg {
        e[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(e)
}

/// A squarefree monomial with nonempty support.
pub fn squarefree(rng: &mut InstanceRng, nvars: usize) -> Monomial {
    let mask = rng.gen_range(1..(1u64 << nvars));
    Monomial::from_mask(nvars, mask)
}

/// A naturally labeled poset, each pair `i < j` related with probability `p`
/// before transitive closure.
pub fn poset(rng: &mut InstanceRng, nvars: usize, p: f64) -> Poset {
    let mut rel = Vec::new();
    for j in 0..nvars {
        for i in 0..j {
            if rng.gen_bool(p) {
                rel.push((i, j));
            }
        }
    }
    Poset::new(nvars, rel).expect("pairs i < j are naturally labeled")
}

/// An ideal with `1..=max_gens` random generators.
pub fn ideal(rng: &mut InstanceRng, nvars: usize, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    MonomialIdeal::new(nvars, (0..k).map(|_| monomial(rng, nvars, max_degree)))
}

/// The Q-Borel closure of `1..=max_gens` random monomials.
pub fn q_borel(rng: &mut InstanceRng, poset: &Poset, max_gens: usize, max_degree: u32) -> Result<QBorelIdeal> {
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..k).map(|_| monomial(rng, poset.len(), max_degree)).collect();
    QBorelIdeal::closure(poset, &gens)
}

/// A nonempty prime on `nvars` variables.
pub fn prime(rng: &mut InstanceRng, nvars: usize) -> MonomialPrime {
    MonomialPrime::from_mask(rng.gen_range(1..(1u64 << nvars)))
}

/// Up to `max_primes` distinct primes with exponents in `1..=max_exp`.
pub fn prime_product(rng: &mut InstanceRng, nvars: usize, max_primes: usize, max_exp: u32) -> Vec<(MonomialPrime, u32)> {
    let available = (1usize << nvars.min(20)) - 1;
    let k = rng.gen_range(1..=max_primes.min(available));
    let mut out: Vec<(MonomialPrime, u32)> = Vec::new();
    while out.len() < k {
        let p = prime(rng, nvars);
        if !out.iter().any(|(q, _)| *q == p) {
            out.push((p, rng.gen_range(1..=max_exp)));
        }
    }
    out
}

/// The sum closure of a few random primes.
pub fn sum_closed_family(rng: &mut InstanceRng, nvars: usize, max_primes: usize) -> PrimeFamily {
    let k = rng.gen_range(1..=max_primes);
    let seeds: PrimeFamily = (0..k).map(|_| prime(rng, nvars)).collect();
    seeds.sum_closure()
}

/// Pick an element uniformly.
pub fn choose<'a, T>(rng: &mut InstanceRng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("nonempty")
}

/// Tally of one randomized agreement check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SelfCheck {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl SelfCheck {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn tally(name: &'static str, rounds: usize, mut check: impl FnMut() -> bool) -> SelfCheck {
    let passed = (0..rounds).filter(|_| check()).count();
    SelfCheck { name, passed, total: rounds }
}

/// Random instances on which two independent routes must agree:
/// matching-based membership against closure by moves, prime products
/// against their primary form, Eliahou-Kervaire and Y-Borel resolutions
/// against Koszul homology, and irreducible decompositions against the ideal.
pub fn selfcheck(seed: u64, rounds: usize) -> Vec<SelfCheck> {
    use crate::borel::{principal_membership, PrimeFactorization};
    use crate::decomp::{irreducible_decomposition, product_to_primary};
    use crate::monomial::monomials_of_degree;
    use crate::oracle::{agree_up_to, comparison_degree, intersection_agrees};
    use crate::resolution::{ek_resolution, koszul_betti, verify_complex, y_resolution, VerifyMode};

    let mut r = rng(seed);
    let mut out = Vec::new();
    out.push(tally("membership", rounds, || {
        let n = r.gen_range(2..=4);
        let q = poset(&mut r, n, 0.4);
        let m = monomial(&mut r, n, 3);
        let Ok(closed) = QBorelIdeal::principal(&q, &m) else { return false };
        monomials_of_degree(n, m.degree())
            .iter()
            .all(|mu| principal_membership(&q, &m, mu) == closed.expansion().contains(mu))
    }));
    out.push(tally("prime products", rounds, || {
        let n = r.gen_range(2..=5);
        let f = PrimeFactorization::new(n, prime_product(&mut r, n, 4, 3));
        agree_up_to(&f.expand(), &product_to_primary(&f).ideal(), f.total_degree() + 1)
    }));
    out.push(tally("eliahou-kervaire", rounds, || {
        let Ok(i) = q_borel(&mut r, &Poset::chain(3), 3, 3) else { return false };
        let e = i.expansion();
        ek_resolution(e).is_ok_and(|cx| cx.betti() == koszul_betti(e, e.lcm().degree()).graded())
    }));
    out.push(tally("y-borel", rounds, || {
        let t = r.gen_range(1..=2);
        let Ok(i) = q_borel(&mut r, &Poset::y_poset(t), 3, 3) else { return false };
        let e = i.expansion();
        let bound = e.max_degree().unwrap_or(0) + 3;
        y_resolution(t, e).is_ok_and(|(cx, _)| {
            cx.is_minimal()
                && verify_complex(&cx, e, VerifyMode::Exactness { bound }).is_ok()
                && cx.betti() == koszul_betti(e, e.lcm().degree()).graded()
        })
    }));
    out.push(tally("irreducible", rounds, || {
        let n = r.gen_range(2..=4);
        let q = poset(&mut r, n, 0.4);
        let Ok(i) = q_borel(&mut r, &q, 3, 3) else { return false };
        let Ok(comps) = irreducible_decomposition(&i) else { return false };
        let parts: Vec<MonomialIdeal> = comps.iter().map(|c| c.ideal()).collect();
        let deg = comparison_degree([i.expansion()], 2);
        intersection_agrees(i.expansion(), &parts, deg)
    }));
    out
}
