//! Monomial primes, i.e. ideals generated by a subset of the variables.

use std::fmt;

use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Variables};

/// The prime `(x_i : i in support)`, stored as a bitmask over at most 64 variables.
///
/// Ordered by `(size, mask)` so that iterating a sorted family visits every
/// prime after all of its proper subsets.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialPrime(u64);

impl MonomialPrime {
    pub fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    pub fn from_vars(vars: impl IntoIterator<Item = usize>) -> Self {
        Self(vars.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains_var(self, var: usize) -> bool {
        (self.0 >> var) & 1 == 1
    }

    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..64).filter(move |i| (mask >> i) & 1 == 1)
    }

    pub fn is_subset(self, other: MonomialPrime) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: MonomialPrime) -> MonomialPrime {
        Self(self.0 | other.0)
    }

    /// Number of variable factors of `m` (with multiplicity) lying in the prime.
    pub fn count_in(self, m: &Monomial) -> u32 {
        m.degree_in(self.0)
    }

    pub fn ideal(self, nvars: usize) -> MonomialIdeal {
        MonomialIdeal::prime_power(nvars, self.0, 1)
    }

    pub fn power(self, nvars: usize, k: u32) -> MonomialIdeal {
        MonomialIdeal::prime_power(nvars, self.0, k)
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayPrime<'a> {
        DisplayPrime { prime: *self, vars }
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| other.0.reverse_bits().cmp(&self.0.reverse_bits()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.vars().collect::<Vec<_>>())
    }
}

pub struct DisplayPrime<'a> {
    prime: MonomialPrime,
    vars: &'a Variables,
}

impl fmt::Display for DisplayPrime<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vars.mask_names(self.prime.mask()).join(","))
    }
}
