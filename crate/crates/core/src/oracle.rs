//! Brute-force membership comparisons used to certify algebraic results.
//!
//! Every monomial ideal is determined by its monomials, so two constructions
//! that agree on all monomials up to a degree at least their largest
//! generator degree define the same ideal.

use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};

/// First monomial of degree `<= degree` on which the two predicates disagree.
pub fn first_disagreement(
    nvars: usize,
    degree: u32,
    lhs: impl Fn(&Monomial) -> bool,
    rhs: impl Fn(&Monomial) -> bool,
) -> Option<Monomial> {
    (0..=degree)
        .flat_map(|d| monomials_of_degree(nvars, d))
        .find(|m| lhs(m) != rhs(m))
}

/// Whether two ideals contain the same monomials of degree `<= degree`.
pub fn agree_up_to(a: &MonomialIdeal, b: &MonomialIdeal, degree: u32) -> bool {
    a.nvars() == b.nvars()
        && first_disagreement(a.nvars(), degree, |m| a.contains(m), |m| b.contains(m)).is_none()
}

/// Whether `a` equals the intersection of `parts`, compared monomial by monomial.
pub fn intersection_agrees(a: &MonomialIdeal, parts: &[MonomialIdeal], degree: u32) -> bool {
    first_disagreement(a.nvars(), degree, |m| a.contains(m), |m| parts.iter().all(|p| p.contains(m)))
        .is_none()
}

/// Degree bound at which membership comparison of `ideals` is conclusive,
/// padded by `slack`.
pub fn comparison_degree<'a>(ideals: impl IntoIterator<Item = &'a MonomialIdeal>, slack: u32) -> u32 {
    ideals.into_iter().filter_map(MonomialIdeal::max_degree).max().unwrap_or(0) + slack
}
