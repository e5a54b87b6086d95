//! Products of monomial primes as intersections of prime powers, and back.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::borel::{principal_factorization, PrimeFactorization};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::mobius::PrimeFamily;
use crate::monomial::{monomials_of_degree, Monomial, Variables};
use crate::poset::Poset;
use crate::prime::MonomialPrime;

/// `prod_p p^{a_p}` read as an intersection: `bigcap_p p^{a_p}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimePowerIntersection {
    nvars: usize,
    components: BTreeMap<MonomialPrime, u32>,
}

impl PrimePowerIntersection {
    /// Components with exponent zero are the unit ideal and are dropped.
    pub fn new(nvars: usize, components: impl IntoIterator<Item = (MonomialPrime, u32)>) -> Self {
        let components = components.into_iter().filter(|&(_, a)| a > 0).collect();
        Self { nvars, components }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &BTreeMap<MonomialPrime, u32> {
        &self.components
    }

    pub fn exponent(&self, p: MonomialPrime) -> u32 {
        self.components.get(&p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> PrimeFamily {
        self.components.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `mu` lies in `p^a` iff at least `a` of its variable factors are in `p`.
    pub fn contains(&self, mu: &Monomial) -> bool {
        self.components.iter().all(|(p, &a)| p.count_in(mu) >= a)
    }

    /// The intersection as a monomial ideal.
    pub fn ideal(&self) -> MonomialIdeal {
        self.components
            .iter()
            .map(|(p, &a)| p.power(self.nvars, a))
            .reduce(|acc, q| acc.intersect(&q))
            .unwrap_or_else(|| MonomialIdeal::unit(self.nvars))
    }

    /// The decomposition with component `p` removed.
    pub fn without(&self, p: MonomialPrime) -> Self {
        let mut components = self.components.clone();
        components.remove(&p);
        Self { nvars: self.nvars, components }
    }

    /// Whether dropping `p^{a_p}` leaves the intersection unchanged.
    ///
    /// Localizing at `p`: the component is needed iff some monomial supported
    /// on `p` of degree `a_p - 1` lies in `q^{a_q}` for every smaller `q`.
    /// Components whose primes are not inside `p` can always be satisfied by
    /// high powers of variables outside `p`.
    pub fn is_redundant(&self, p: MonomialPrime) -> bool {
        let Some(&a) = self.components.get(&p) else {
            return true;
        };
        let smaller: Vec<(MonomialPrime, u32)> = self
            .components
            .iter()
            .filter(|(q, _)| q.is_subset(p) && **q != p)
            .map(|(q, &b)| (*q, b))
            .collect();
        let vars: Vec<usize> = p.vars().collect();
        !monomials_of_degree(vars.len(), a - 1).iter().any(|sub| {
            let mut exps = vec![0; self.nvars];
            for (k, &v) in vars.iter().enumerate() {
                exps[v] = sub.exp(k);
            }
            let nu = Monomial::new(exps);
            smaller.iter().all(|(q, b)| q.count_in(&nu) >= *b)
        })
    }

    pub fn is_irredundant(&self) -> bool {
        self.components.keys().all(|&p| !self.is_redundant(p))
    }

    /// Drop redundant components, smallest primes first. Redundancy of `p`
    /// only depends on components strictly inside `p`, and a redundant
    /// component is implied by the ones below it, so one pass suffices.
    pub fn irredundant(&self) -> Self {
        let mut out = self.clone();
        for &p in self.components.keys() {
            if out.is_redundant(p) {
                out.components.remove(&p);
            }
        }
        out
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayIntersection<'a> {
        DisplayIntersection { inter: self, vars }
    }
}

pub struct DisplayIntersection<'a> {
    inter: &'a PrimePowerIntersection,
    vars: &'a Variables,
}

impl fmt::Display for DisplayIntersection<'_> {
    /// `(a,d) ∩ (b,c,e) ∩ (a,c,d,f)^2`, or `(1)` when there are no components.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inter.components.is_empty() {
            return write!(f, "(1)");
        }
        for (k, (p, &a)) in self.inter.components.iter().enumerate() {
            if k > 0 {
                write!(f, " ∩ ")?;
            }
            write!(f, "{}", p.display(self.vars))?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

/// Integer exponents `e_p`, possibly negative, on a finite set of primes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPrimeExponents {
    nvars: usize,
    exps: BTreeMap<MonomialPrime, i64>,
}

impl SignedPrimeExponents {
    pub fn new(nvars: usize, exps: impl IntoIterator<Item = (MonomialPrime, i64)>) -> Self {
        Self { nvars, exps: exps.into_iter().filter(|&(_, e)| e != 0).collect() }
    }

    pub fn exponents(&self) -> &BTreeMap<MonomialPrime, i64> {
        &self.exps
    }

    pub fn exponent(&self, p: MonomialPrime) -> i64 {
        self.exps.get(&p).copied().unwrap_or(0)
    }

    /// The product, when no exponent is negative.
    pub fn to_factorization(&self) -> Result<PrimeFactorization> {
        if self.exps.values().any(|&e| e < 0) {
            return Err(Error::NegativeExponent);
        }
        Ok(PrimeFactorization::new(self.nvars, self.exps.iter().map(|(&p, &e)| (p, e as u32))))
    }

    /// Positive and negative parts as two products.
    pub fn split(&self) -> (PrimeFactorization, PrimeFactorization) {
        let pos = self.exps.iter().filter(|(_, &e)| e > 0).map(|(&p, &e)| (p, e as u32));
        let neg = self.exps.iter().filter(|(_, &e)| e < 0).map(|(&p, &e)| (p, (-e) as u32));
        (PrimeFactorization::new(self.nvars, pos), PrimeFactorization::new(self.nvars, neg))
    }
}

/// `prod q^{e_q} = bigcap p^{a_p}` with `a_p = sum_{q subseteq p} e_q`, over the
/// sum closure of the factors. Redundant components are kept; see
/// [`PrimePowerIntersection::irredundant`].
pub fn product_to_primary(fact: &PrimeFactorization) -> PrimePowerIntersection {
    let support: PrimeFamily = fact.factors().keys().copied().collect();
    let closure = support.sum_closure();
    PrimePowerIntersection::new(
        fact.nvars(),
        closure.primes().iter().map(|&p| {
            let a = fact
                .factors()
                .iter()
                .filter(|(q, _)| q.is_subset(p))
                .map(|(_, &e)| e)
                .sum::<u32>();
            (p, a)
        }),
    )
}

/// Möbius inversion on `family`: `e_p = sum_{q <= p} mu(q, p) a_q`.
pub fn primary_to_product(
    decomp: &PrimePowerIntersection,
    family: &PrimeFamily,
) -> Result<SignedPrimeExponents> {
    if decomp.components.keys().any(|&p| !family.contains(p)) {
        return Err(Error::FamilyMissingPrime);
    }
    let mut exps: BTreeMap<MonomialPrime, i64> = BTreeMap::new();
    for (&q, &a) in &decomp.components {
        for (p, mu) in family.mobius_from(q) {
            *exps.entry(p).or_insert(0) += mu * i64::from(a);
        }
    }
    Ok(SignedPrimeExponents::new(decomp.nvars, exps))
}

/// The numerator and denominator of `I = (J : K)` for a prime-power
/// intersection `I` over a sum-closed family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColonRepresentation {
    pub numerator: PrimeFactorization,
    pub denominator: PrimeFactorization,
}

impl ColonRepresentation {
    pub fn quotient_ideal(&self) -> MonomialIdeal {
        self.numerator.expand().quotient(&self.denominator.expand())
    }
}

pub fn colon_representation(
    decomp: &PrimePowerIntersection,
    family: &PrimeFamily,
) -> Result<ColonRepresentation> {
    if !family.is_sum_closed() {
        return Err(Error::NotSumClosed);
    }
    let (numerator, denominator) = primary_to_product(decomp, family)?.split();
    let rep = ColonRepresentation { numerator, denominator };
    debug_assert_eq!(rep.quotient_ideal(), decomp.ideal());
    Ok(rep)
}

/// Primes `A(T)` for `T` a nonempty subset of the support of `m` with
/// `A(T)` connected, in family order.
pub fn associated_primes(poset: &Poset, m: &Monomial) -> Result<Vec<MonomialPrime>> {
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    let support: Vec<usize> = m.support_vars().collect();
    if support.len() > 24 {
        return Err(Error::TooLarge(format!("{} variables in the support", support.len())));
    }
    let mut out = BTreeSet::new();
    for subset in 1u64..(1 << support.len()) {
        let mask = support
            .iter()
            .enumerate()
            .filter(|(k, _)| (subset >> k) & 1 == 1)
            .fold(0u64, |acc, (_, &v)| acc | (1 << v));
        let p = poset.down_set(mask);
        if poset.component_count_within(p.mask()) == 1 {
            out.insert(p);
        }
    }
    Ok(out.into_iter().collect())
}

/// The irredundant primary decomposition of `Q(m)`: one component per
/// associated prime `p`, with exponent the number of factors `x_i` of `m`
/// (with multiplicity) such that `A(x_i) subseteq p`.
pub fn principal_primary_decomposition(poset: &Poset, m: &Monomial) -> Result<PrimePowerIntersection> {
    let fact = principal_factorization(poset, m)?;
    let primes = associated_primes(poset, m)?;
    let decomp = PrimePowerIntersection::new(
        poset.len(),
        primes.into_iter().map(|p| {
            let a = fact.factors().iter().filter(|(q, _)| q.is_subset(p)).map(|(_, &e)| e).sum();
            (p, a)
        }),
    );
    debug_assert!(decomp.is_irredundant());
    Ok(decomp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::tests::{ideal, mono, six_variable_poset};
    use crate::borel::QBorelIdeal;
    use crate::oracle::agree_up_to;

    fn p(vars: &[usize]) -> MonomialPrime {
        MonomialPrime::from_vars(vars.iter().copied())
    }

    #[test]
    fn small_product_round_trip() {
        let fact = PrimeFactorization::new(2, [(p(&[0]), 1), (p(&[0, 1]), 1)]);
        let dec = product_to_primary(&fact);
        assert_eq!(dec, PrimePowerIntersection::new(2, [(p(&[0]), 1), (p(&[0, 1]), 2)]));
        assert_eq!(dec.ideal(), ideal(2, &["aa", "ab"]));
        assert!(agree_up_to(&dec.ideal(), &fact.expand(), 3));
        let fam = PrimeFamily::new([p(&[0]), p(&[0, 1])]);
        let back = primary_to_product(&dec, &fam).unwrap();
        assert_eq!(back.exponent(p(&[0])), 1);
        assert_eq!(back.exponent(p(&[0, 1])), 1);
    }

    #[test]
    fn signed_inversion() {
        let dec = PrimePowerIntersection::new(2, [(p(&[0]), 1), (p(&[1]), 1), (p(&[0, 1]), 1)]);
        let fam = dec.primes().sum_closure();
        let e = primary_to_product(&dec, &fam).unwrap();
        assert_eq!(e.exponent(p(&[0])), 1);
        assert_eq!(e.exponent(p(&[1])), 1);
        assert_eq!(e.exponent(p(&[0, 1])), -1);
        assert_eq!(e.to_factorization(), Err(Error::NegativeExponent));
        let single = PrimePowerIntersection::new(3, [(p(&[0, 2]), 4)]);
        let e = primary_to_product(&single, &single.primes()).unwrap();
        assert_eq!(e.exponents().len(), 1);
        assert_eq!(e.exponent(p(&[0, 2])), 4);
    }

    #[test]
    fn colon_examples() {
        let dec = PrimePowerIntersection::new(2, [(p(&[0]), 1), (p(&[1]), 1), (p(&[0, 1]), 1)]);
        let fam = dec.primes();
        let rep = colon_representation(&dec, &fam).unwrap();
        assert_eq!(rep.numerator, PrimeFactorization::new(2, [(p(&[0]), 1), (p(&[1]), 1)]));
        assert_eq!(rep.denominator, PrimeFactorization::new(2, [(p(&[0, 1]), 1)]));
        assert_eq!(rep.quotient_ideal(), ideal(2, &["ab"]));

        let single = PrimePowerIntersection::new(2, [(p(&[0, 1]), 3)]);
        let rep = colon_representation(&single, &single.primes()).unwrap();
        assert!(rep.denominator.is_unit());
        assert_eq!(rep.quotient_ideal(), single.ideal());

        let open = PrimeFamily::new([p(&[0]), p(&[1])]);
        let dec = PrimePowerIntersection::new(2, [(p(&[0]), 1)]);
        assert_eq!(colon_representation(&dec, &open), Err(Error::NotSumClosed));
        let missing = PrimePowerIntersection::new(2, [(p(&[0, 1]), 1)]);
        assert_eq!(
            primary_to_product(&missing, &PrimeFamily::new([p(&[0])])),
            Err(Error::FamilyMissingPrime)
        );
    }

    #[test]
    fn six_variable_poset_decomposition() {
        let q = six_variable_poset();
        let m = mono("def", 6);
        let ass = associated_primes(&q, &m).unwrap();
        assert_eq!(ass, vec![p(&[0, 3]), p(&[1, 2, 4]), p(&[0, 2, 3, 5]), p(&[0, 1, 2, 3, 4, 5])]);
        let dec = principal_primary_decomposition(&q, &m).unwrap();
        let exps: Vec<u32> = dec.components().values().copied().collect();
        assert_eq!(exps, vec![1, 1, 2, 3]);
        let vars = Variables::standard(6);
        assert_eq!(
            dec.display(&vars).to_string(),
            "(a,d) ∩ (b,c,e) ∩ (a,c,d,f)^2 ∩ (a,b,c,d,e,f)^3"
        );
        let closure = QBorelIdeal::principal(&q, &m).unwrap();
        assert_eq!(&dec.ideal(), closure.expansion());

        // The full decomposition from the factorization carries (a,b,c,d,e)^2,
        // which is redundant.
        let full = product_to_primary(&principal_factorization(&q, &m).unwrap());
        assert_eq!(full.exponent(p(&[0, 1, 2, 3, 4])), 2);
        assert!(full.is_redundant(p(&[0, 1, 2, 3, 4])));
        assert_eq!(full.irredundant(), dec);
    }

    #[test]
    fn chain_antichain_and_vee() {
        let chain3 = Poset::chain(3);
        let dec = principal_primary_decomposition(&chain3, &mono("cc", 3)).unwrap();
        assert_eq!(dec, PrimePowerIntersection::new(3, [(p(&[0, 1, 2]), 2)]));
        let ass = associated_primes(&chain3, &mono("ac", 3)).unwrap();
        assert_eq!(ass, vec![p(&[0]), p(&[0, 1, 2])]);
        let anti = Poset::antichain(2);
        assert_eq!(associated_primes(&anti, &mono("aab", 2)).unwrap(), vec![p(&[0]), p(&[1])]);
        let vee = Poset::new(3, [(0, 1), (0, 2)]).unwrap();
        let dec = principal_primary_decomposition(&vee, &mono("bc", 3)).unwrap();
        assert_eq!(
            dec,
            PrimePowerIntersection::new(3, [(p(&[0, 1]), 1), (p(&[0, 2]), 1), (p(&[0, 1, 2]), 2)])
        );
        assert_eq!(dec.ideal(), ideal(3, &["aa", "ab", "ac", "bc"]));
    }

    #[test]
    fn redundancy_agrees_with_direct_intersection() {
        // Localized test against recomputing the intersection without p.
        for q in Poset::all_naturally_labeled(4) {
            for m in [mono("bcd", 4), mono("ccdd", 4), mono("abd", 4)] {
                let full = product_to_primary(&principal_factorization(&q, &m).unwrap());
                let whole = full.ideal();
                for &pr in full.components().keys() {
                    assert_eq!(full.is_redundant(pr), full.without(pr).ideal() == whole);
                }
            }
        }
    }

    #[test]
    fn unit_monomial_rejected() {
        let q = Poset::chain(2);
        assert_eq!(associated_primes(&q, &Monomial::one(2)), Err(Error::UnitMonomial));
    }
}
