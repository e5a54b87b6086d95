//! Projective dimension, codimension and the Cohen-Macaulay property of
//! principal Q-Borel ideals.

use std::fmt;

use crate::borel::{max_stabilizing_poset, QBorelIdeal};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poset::Poset;

/// `pd(S/Q(m)) = n - #components(Q) + 1`.
///
/// Requires `Q` to be the maximal stabilizing poset of `Q(m)` and every
/// `Q`-maximal element to divide `m`.
pub fn pdim_principal(poset: &Poset, m: &Monomial) -> Result<usize> {
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    let ideal = QBorelIdeal::principal(poset, m)?;
    if &max_stabilizing_poset(ideal.expansion()) != poset {
        return Err(Error::HypothesesViolated("Q not maximal stabilizing".into()));
    }
    let maximal = poset.maximal_elements();
    if let Some(v) = (0..poset.len()).find(|&v| (maximal >> v) & 1 == 1 && m.exp(v) == 0) {
        return Err(Error::HypothesesViolated(format!(
            "maximal element x{} does not divide m",
            v + 1
        )));
    }
    Ok(poset.len() - poset.connected_components() + 1)
}

/// `codim Q(m) = min |A(x_i)|` over the variables dividing `m`.
pub fn codim_principal(poset: &Poset, m: &Monomial) -> Result<usize> {
    m.support_vars()
        .map(|v| poset.principal_down_set(v).len())
        .min()
        .ok_or(Error::UnitMonomial)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CmCase {
    /// `m = x_i^d`, so `Q(m) = A(x_i)^d`.
    PrimePower { var: usize, exp: u32 },
    /// No move applies to `m`: `Q(m) = (m)`.
    Principal,
    NotCohenMacaulay,
}

impl CmCase {
    pub fn is_cohen_macaulay(self) -> bool {
        !matches!(self, CmCase::NotCohenMacaulay)
    }
}

impl fmt::Display for CmCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmCase::PrimePower { .. } => f.write_str("prime power"),
            CmCase::Principal => f.write_str("principal"),
            CmCase::NotCohenMacaulay => f.write_str("not Cohen-Macaulay"),
        }
    }
}

/// Whether `S/Q(m)` is Cohen-Macaulay, by the classification: exactly when
/// `m` is a pure power or `Q(m)` is a principal ideal.
pub fn is_cohen_macaulay(poset: &Poset, m: &Monomial) -> Result<CmCase> {
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    let case = if let Some((var, exp)) = m.pure_power() {
        CmCase::PrimePower { var, exp }
    } else if QBorelIdeal::principal(poset, m)?.expansion().len() == 1 {
        CmCase::Principal
    } else {
        CmCase::NotCohenMacaulay
    };
    if let Ok(pd) = pdim_principal(poset, m) {
        debug_assert_eq!(case.is_cohen_macaulay(), pd == codim_principal(poset, m)?);
    }
    Ok(case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::tests::{mono, six_variable_poset};

    #[test]
    fn examples() {
        let y = Poset::y_poset(1);
        assert_eq!(pdim_principal(&y, &mono("bc", 3)).unwrap(), 3);
        assert_eq!(codim_principal(&y, &mono("bc", 3)).unwrap(), 2);
        assert_eq!(is_cohen_macaulay(&y, &mono("bc", 3)).unwrap(), CmCase::NotCohenMacaulay);

        let anti = Poset::antichain(3);
        assert_eq!(pdim_principal(&anti, &mono("abc", 3)).unwrap(), 1);
        assert_eq!(codim_principal(&anti, &mono("aab", 3)).unwrap(), 1);
        assert_eq!(is_cohen_macaulay(&anti, &mono("aab", 3)).unwrap(), CmCase::Principal);

        let chain = Poset::chain(3);
        assert_eq!(pdim_principal(&chain, &mono("bc", 3)).unwrap(), 3);
        assert_eq!(codim_principal(&chain, &mono("ccc", 3)).unwrap(), 3);
        assert_eq!(is_cohen_macaulay(&chain, &mono("cc", 3)).unwrap(), CmCase::PrimePower { var: 2, exp: 2 });

        assert_eq!(codim_principal(&six_variable_poset(), &mono("def", 6)).unwrap(), 2);
        assert!(matches!(pdim_principal(&chain, &mono("ab", 3)), Err(Error::HypothesesViolated(_))));
    }
}
