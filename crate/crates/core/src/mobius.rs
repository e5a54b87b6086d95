//! Finite families of monomial primes ordered by inclusion, and their Möbius function.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::Variables;
use crate::prime::MonomialPrime;

/// A set of monomial primes, kept sorted so that subsets precede supersets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PrimeFamily {
    primes: Vec<MonomialPrime>,
}

impl PrimeFamily {
    pub fn new(primes: impl IntoIterator<Item = MonomialPrime>) -> Self {
        let set: BTreeSet<MonomialPrime> = primes.into_iter().collect();
        Self { primes: set.into_iter().collect() }
    }

    pub fn primes(&self) -> &[MonomialPrime] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: MonomialPrime) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// The smallest superset closed under pairwise sums (unions of supports).
    pub fn sum_closure(&self) -> PrimeFamily {
        let mut set: BTreeSet<MonomialPrime> = self.primes.iter().copied().collect();
        loop {
            let current: Vec<MonomialPrime> = set.iter().copied().collect();
            let mut grew = false;
            for (k, &p) in current.iter().enumerate() {
                for &q in &current[k + 1..] {
                    grew |= set.insert(p.union(q));
                }
            }
            if !grew {
                return Self { primes: set.into_iter().collect() };
            }
        }
    }

    pub fn is_sum_closed(&self) -> bool {
        self.primes
            .iter()
            .enumerate()
            .all(|(k, &p)| self.primes[k + 1..].iter().all(|&q| self.contains(p.union(q))))
    }

    /// `mu(q, p)` on the family ordered by inclusion.
    pub fn mobius(&self, q: MonomialPrime, p: MonomialPrime) -> Result<i64> {
        if !self.contains(q) || !self.contains(p) || !q.is_subset(p) {
            return Err(Error::UndefinedMobiusPair);
        }
        Ok(self.mobius_from(q).into_iter().find(|&(r, _)| r == p).map_or(0, |(_, v)| v))
    }

    /// `mu(q, r)` for every `r` of the family containing `q`, by the defining
    /// recursion. The family order visits subsets first, so one pass suffices.
    pub fn mobius_from(&self, q: MonomialPrime) -> Vec<(MonomialPrime, i64)> {
        let mut vals: Vec<(MonomialPrime, i64)> = Vec::new();
        for &r in self.primes.iter().filter(|r| q.is_subset(**r)) {
            let v = if r == q {
                1
            } else {
                -vals
                    .iter()
                    .filter(|(s, _)| s.is_subset(r) && *s != r)
                    .map(|(_, v)| v)
                    .sum::<i64>()
            };
            vals.push((r, v));
        }
        vals
    }

    pub fn display(&self, vars: &Variables) -> String {
        let parts: Vec<String> = self.primes.iter().map(|p| p.display(vars).to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl FromIterator<MonomialPrime> for PrimeFamily {
    fn from_iter<T: IntoIterator<Item = MonomialPrime>>(iter: T) -> Self {
        Self::new(iter)
    }
}
