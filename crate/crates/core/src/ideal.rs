//! Monomial ideals stored by their minimal generating sets.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, Variables};

/// A monomial ideal given by its minimal generators in canonical order.
///
/// No generator divides another, so two ideals are equal exactly when their
/// generator lists are equal. The empty list is the zero ideal; the list
/// `[1]` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Self { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The ideal generated by `gens`, minimalized.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        Self { nvars, gens: minimalize(gens) }
    }

    /// Like [`MonomialIdeal::new`] but rejecting monomials in a different ring.
    pub fn try_new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::RingMismatch { expected: nvars, found: bad.nvars() });
        }
        Ok(Self::new(nvars, gens))
    }

    /// `(x_i : i in mask)^power`.
    pub fn prime_power(nvars: usize, mask: u64, power: u32) -> Self {
        let vars: Vec<usize> = (0..nvars).filter(|i| (mask >> i) & 1 == 1).collect();
        if power == 0 {
            return Self::unit(nvars);
        }
        if vars.is_empty() {
            return Self::zero(nvars);
        }
        let gens = monomials_of_degree(vars.len(), power).into_iter().map(|sub| {
            let mut exps = vec![0; nvars];
            for (k, &v) in vars.iter().enumerate() {
                exps[v] = sub.exp(k);
            }
            Monomial::new(exps)
        });
        Self::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn into_generators(self) -> Vec<Monomial> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// Same as [`is_zero`](Self::is_zero): no generators.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        let deg = m.degree();
        self.gens
            .iter()
            .take_while(|g| g.degree() <= deg)
            .any(|g| g.divides(m))
    }

    /// True iff every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// lcm of all generators (1 for the zero ideal).
    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.mul(h)));
        Self::new(self.nvars, gens)
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        (0..k).fold(Self::unit(self.nvars), |acc, _| acc.product(self))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h)));
        Self::new(self.nvars, gens)
    }

    /// `(self : (h))` for a single monomial `h`.
    pub fn quotient_monomial(&self, h: &Monomial) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().map(|g| g.colon(h)))
    }

    /// The colon ideal `(self : other)`.
    pub fn quotient(&self, other: &MonomialIdeal) -> MonomialIdeal {
        other
            .gens
            .iter()
            .map(|h| self.quotient_monomial(h))
            .reduce(|acc, q| acc.intersect(&q))
            .unwrap_or_else(|| Self::unit(self.nvars))
    }

    /// `(self : x_var^infinity)`.
    pub fn saturate_var(&self, var: usize) -> MonomialIdeal {
        Self::new(
            self.nvars,
            self.gens.iter().map(|g| {
                let mut exps = g.exps().to_vec();
                exps[var] = 0;
                Monomial::new(exps)
            }),
        )
    }

    /// Number of monomials of total degree exactly `degree` lying in the ideal.
    pub fn graded_count(&self, degree: u32) -> usize {
        monomials_of_degree(self.nvars, degree)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    /// Generators of degree at most `degree`.
    pub fn truncate(&self, degree: u32) -> MonomialIdeal {
        Self {
            nvars: self.nvars,
            gens: self.gens.iter().filter(|g| g.degree() <= degree).cloned().collect(),
        }
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayIdeal<'a> {
        DisplayIdeal { ideal: self, vars }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = Variables::standard(self.nvars);
        write!(f, "{}", self.display(&vars))
    }
}

/// Divisibility-minimal subset of `gens` in canonical order.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    all.sort();
    all.dedup();
    let Some(first) = all.first() else {
        return all;
    };
    let d0 = first.degree();
    if all.iter().all(|g| g.degree() == d0) {
        return all;
    }
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        // `kept` is sorted by degree, so only strictly lower degrees can divide.
        let deg = m.degree();
        if !kept.iter().take_while(|k| k.degree() < deg).any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// Fast repeated membership tests against a fixed ideal.
pub(crate) struct MembershipIndex<'a> {
    ideal: &'a MonomialIdeal,
    gens: HashSet<&'a Monomial>,
}

impl<'a> MembershipIndex<'a> {
    pub fn new(ideal: &'a MonomialIdeal) -> Self {
        Self { ideal, gens: ideal.gens.iter().collect() }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        if self.gens.contains(m) {
            return true;
        }
        let deg = m.degree();
        self.ideal
            .gens
            .iter()
            .take_while(|g| g.degree() < deg)
            .any(|g| g.divides(m))
    }
}

pub struct DisplayIdeal<'a> {
    ideal: &'a MonomialIdeal,
    vars: &'a Variables,
}

impl fmt::Display for DisplayIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(self.vars))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)))
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(2, &[&[2, 0], &[2, 1], &[1, 1]]);
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[1, 1])]);
        assert!(ideal(2, &[]).is_zero());
        let j = ideal(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(j.generators(), &[m(&[1, 0]), m(&[0, 1])]);
    }

    #[test]
    fn products_and_powers() {
        let a = ideal(2, &[&[1, 0]]);
        let ab = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(a.product(&ab), ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(ab.power(2), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(ab.power(0), MonomialIdeal::unit(2));
    }

    #[test]
    fn intersections() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b), ideal(2, &[&[1, 1]]));
        let left = ideal(2, &[&[2, 0], &[0, 1]]);
        let right = ideal(2, &[&[1, 0], &[0, 2]]);
        assert_eq!(left.intersect(&right), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(left.intersect(&left), left);
        assert!(left.intersect(&MonomialIdeal::zero(2)).is_zero());
    }

    #[test]
    fn quotients() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.quotient(&ideal(2, &[&[1, 0]])), ideal(2, &[&[1, 0], &[0, 1]]));
        let ab = ideal(2, &[&[1, 1]]);
        let max = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(ab.quotient(&max), ab);
        assert_eq!(i.quotient(&MonomialIdeal::unit(2)), i);
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&m(&[2, 1])));
        assert!(!i.contains(&m(&[0, 3])));
        assert!(!MonomialIdeal::zero(2).contains(&m(&[0, 0])));
    }

    #[test]
    fn graded_counts() {
        let max3 = MonomialIdeal::prime_power(3, 0b111, 2);
        assert_eq!(max3.graded_count(2), 6);
        assert_eq!(ideal(2, &[&[1, 1]]).graded_count(2), 1);
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(i.graded_count(3), 8);
    }

    #[test]
    fn saturation_removes_variable() {
        let i = ideal(2, &[&[1, 1], &[0, 3]]);
        assert_eq!(i.saturate_var(1), MonomialIdeal::unit(2));
    }
}
