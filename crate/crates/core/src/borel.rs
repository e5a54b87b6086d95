//! Ideals closed under the Borel moves of a poset.
//!
//! A Q-Borel move replaces a factor `x_j` of a monomial by some `x_i` with
//! `x_i <_Q x_j`. Moves preserve degree, so the closure of a finite set of
//! monomials is finite and can be enumerated.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{MembershipIndex, MonomialIdeal};
use crate::matching::saturates_left;
use crate::monomial::{Monomial, Variables};
use crate::poset::Poset;
use crate::prime::MonomialPrime;

/// Cap on the number of monomials visited by a closure computation.
pub const DEFAULT_NODE_LIMIT: usize = 2_000_000;

/// Largest poset for which [`witness_ideal`] is attempted.
pub const WITNESS_MAX_VARS: usize = 5;

/// A Q-Borel ideal together with its poset and minimal Q-generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QBorelIdeal {
    poset: Poset,
    q_gens: Vec<Monomial>,
    expansion: MonomialIdeal,
}

impl QBorelIdeal {
    /// `Q(gens)`, the smallest Q-Borel ideal containing `gens`.
    pub fn closure(poset: &Poset, gens: &[Monomial]) -> Result<Self> {
        q_closure(poset, gens, DEFAULT_NODE_LIMIT)
    }

    pub fn principal(poset: &Poset, m: &Monomial) -> Result<Self> {
        Self::closure(poset, std::slice::from_ref(m))
    }

    /// Wrap an ideal already known to be Q-Borel.
    pub fn from_ideal(poset: &Poset, ideal: MonomialIdeal) -> Result<Self> {
        let q_gens = min_q_generators(poset, &ideal)?;
        Ok(Self { poset: poset.clone(), q_gens, expansion: ideal })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn nvars(&self) -> usize {
        self.expansion.nvars()
    }

    pub fn q_generators(&self) -> &[Monomial] {
        &self.q_gens
    }

    pub fn expansion(&self) -> &MonomialIdeal {
        &self.expansion
    }

    pub fn into_expansion(self) -> MonomialIdeal {
        self.expansion
    }

    pub fn is_principal(&self) -> bool {
        self.q_gens.len() == 1
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.expansion.contains(m)
    }

    /// Intersections of Q-Borel ideals are Q-Borel.
    pub fn intersect(&self, other: &QBorelIdeal) -> Result<QBorelIdeal> {
        Self::from_ideal(&self.poset, self.expansion.intersect(&other.expansion))
    }

    pub fn sum(&self, other: &QBorelIdeal) -> Result<QBorelIdeal> {
        Self::from_ideal(&self.poset, self.expansion.sum(&other.expansion))
    }
}

/// Closure of `gens` under Q-Borel moves, visiting at most `node_limit` monomials.
pub fn q_closure(poset: &Poset, gens: &[Monomial], node_limit: usize) -> Result<QBorelIdeal> {
    let n = poset.len();
    if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::RingMismatch { expected: n, found: bad.nvars() });
    }
    // Moves on a multiple g*u of a generator g land in (Q(g)), so only the
    // minimal elements need exploring.
    let seeds = crate::ideal::minimalize(gens.iter().cloned());
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    for s in &seeds {
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(m) = queue.pop_front() {
        for j in m.support_vars().collect::<Vec<_>>() {
            let lower = poset.below_mask(j) & !(1 << j);
            for i in (0..j).filter(|i| (lower >> i) & 1 == 1) {
                let next = m.moved(j, i).expect("x_j divides m");
                if !seen.contains(&next) {
                    if seen.len() >= node_limit {
                        return Err(Error::NodeLimitExceeded(node_limit));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    let expansion = MonomialIdeal::new(n, seen);
    let q_gens = q_generators_unchecked(poset, &expansion);
    Ok(QBorelIdeal { poset: poset.clone(), q_gens, expansion })
}

/// Whether `ideal` is closed under the moves of `poset`. Checking the minimal
/// generators suffices: a move on `g*u` either moves a factor of `g`, giving a
/// multiple of a moved generator, or a factor of `u`, giving a multiple of `g`.
pub fn is_q_borel(poset: &Poset, ideal: &MonomialIdeal) -> bool {
    let index = MembershipIndex::new(ideal);
    ideal.generators().iter().all(|m| {
        m.support_vars().all(|j| {
            let lower = poset.below_mask(j) & !(1 << j);
            (0..j)
                .filter(|i| (lower >> i) & 1 == 1)
                .all(|i| index.contains(&m.moved(j, i).expect("x_j divides m")))
        })
    })
}

/// The largest poset (most relations) under which `ideal` is Q-Borel.
pub fn max_stabilizing_poset(ideal: &MonomialIdeal) -> Poset {
    let n = ideal.nvars();
    let index = MembershipIndex::new(ideal);
    let mut pairs = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let stable = ideal
                .generators()
                .iter()
                .filter(|m| m.exp(j) > 0)
                .all(|m| index.contains(&m.moved(j, i).expect("x_j divides m")));
            if stable {
                pairs.push((i, j));
            }
        }
    }
    let count = pairs.len();
    let poset = Poset::new(n, pairs).expect("pairs satisfy i < j");
    debug_assert_eq!(poset.relations().len(), count, "stabilizing pairs are transitively closed");
    poset
}

/// The unique minimal Q-generating subset of the minimal generators of a
/// Q-Borel ideal.
pub fn min_q_generators(poset: &Poset, ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if ideal.nvars() != poset.len() {
        return Err(Error::RingMismatch { expected: poset.len(), found: ideal.nvars() });
    }
    if !is_q_borel(poset, ideal) {
        return Err(Error::NotQBorel);
    }
    Ok(q_generators_unchecked(poset, ideal))
}

/// A minimal generator `m` is redundant iff it is the image of a single move
/// applied to another element of the ideal: the last step of any move path
/// from another generator to `m` starts at a monomial of the same degree,
/// which then must be a minimal generator itself.
fn q_generators_unchecked(poset: &Poset, ideal: &MonomialIdeal) -> Vec<Monomial> {
    let index = MembershipIndex::new(ideal);
    let n = poset.len();
    ideal
        .generators()
        .iter()
        .filter(|m| {
            let redundant = (0..n).filter(|&i| m.exp(i) > 0).any(|i| {
                (i + 1..n)
                    .filter(|&j| poset.lt(i, j))
                    .any(|j| index.contains(&m.moved(i, j).expect("x_i divides m")))
            });
            !redundant
        })
        .cloned()
        .collect()
}

/// The factorization `Q(m) = prod_i A(x_i)^{e_i}` into down-set primes.
pub fn principal_factorization(poset: &Poset, m: &Monomial) -> Result<PrimeFactorization> {
    if m.nvars() != poset.len() {
        return Err(Error::RingMismatch { expected: poset.len(), found: m.nvars() });
    }
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    let mut factors = BTreeMap::new();
    for i in m.support_vars() {
        *factors.entry(poset.principal_down_set(i)).or_insert(0) += m.exp(i);
    }
    Ok(PrimeFactorization { nvars: poset.len(), factors })
}

/// `mu in Q(m)`, decided by a bipartite matching: each factor `x_i` of `m`
/// must be matched to a distinct factor `x_j` of `mu` with `x_j <=_Q x_i`.
pub fn principal_membership(poset: &Poset, m: &Monomial, mu: &Monomial) -> bool {
    let left = m.factors();
    let right = mu.factors();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&i| (0..right.len()).filter(|&r| poset.leq(right[r], i)).collect())
        .collect();
    saturates_left(&adj, right.len())
}

/// The product of all nonempty order ideals of `poset`, whose maximal
/// stabilizing poset is `poset` itself.
pub fn witness_ideal(poset: &Poset) -> Result<MonomialIdeal> {
    let n = poset.len();
    if n > WITNESS_MAX_VARS {
        return Err(Error::TooLarge(format!(
            "witness ideal needs n <= {WITNESS_MAX_VARS}, got {n}"
        )));
    }
    let factors = poset.order_ideals().into_iter().filter(|&a| a != 0).fold(
        BTreeMap::new(),
        |mut acc, a| {
            *acc.entry(MonomialPrime::from_mask(a)).or_insert(0) += 1;
            acc
        },
    );
    Ok(PrimeFactorization { nvars: n, factors }.expand())
}

/// Exchange condition: for generators `u, v` and `i` with `u_i > v_i` there
/// is `j` with `u_j < v_j` and `x_j u / x_i` a generator.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    if !ideal.is_equigenerated() {
        return false;
    }
    let gens: HashSet<&Monomial> = ideal.generators().iter().collect();
    let n = ideal.nvars();
    ideal.generators().iter().all(|u| {
        ideal.generators().iter().all(|v| {
            (0..n).filter(|&i| u.exp(i) > v.exp(i)).all(|i| {
                (0..n)
                    .filter(|&j| u.exp(j) < v.exp(j))
                    .any(|j| gens.contains(&u.moved(i, j).expect("x_i divides u")))
            })
        })
    })
}

/// A product of powers of monomial primes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimeFactorization {
    nvars: usize,
    factors: BTreeMap<MonomialPrime, u32>,
}

impl PrimeFactorization {
    /// Exponent zero entries are dropped.
    pub fn new(nvars: usize, factors: impl IntoIterator<Item = (MonomialPrime, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (p, e) in factors {
            if e > 0 {
                *map.entry(p).or_insert(0) += e;
            }
        }
        Self { nvars, factors: map }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn factors(&self) -> &BTreeMap<MonomialPrime, u32> {
        &self.factors
    }

    pub fn exponent(&self, p: MonomialPrime) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    /// Empty products describe the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.values().sum()
    }

    /// Minimal generators of the product.
    pub fn expand(&self) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.product(&p.ideal(self.nvars));
            }
        }
        acc
    }

    /// Membership in the product without expanding it: each prime factor
    /// must claim a distinct variable factor of `mu` lying in it.
    pub fn contains(&self, mu: &Monomial) -> bool {
        let right = mu.factors();
        let adj: Vec<Vec<usize>> = self
            .factors
            .iter()
            .flat_map(|(&p, &e)| std::iter::repeat_n(p, e as usize))
            .map(|p| (0..right.len()).filter(|&r| p.contains_var(right[r])).collect())
            .collect();
        saturates_left(&adj, right.len())
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayFactorization<'a> {
        DisplayFactorization { fact: self, vars }
    }
}

pub struct DisplayFactorization<'a> {
    fact: &'a PrimeFactorization,
    vars: &'a Variables,
}

impl fmt::Display for DisplayFactorization<'_> {
    /// `(a,d)(b,c,e)^2`, or `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fact.factors.is_empty() {
            return write!(f, "1");
        }
        for (p, &e) in &self.fact.factors {
            write!(f, "{}", p.display(self.vars))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
