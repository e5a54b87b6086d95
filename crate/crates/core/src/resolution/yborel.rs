//! Minimal resolutions of ideals stable under the poset
//! `x_1 < ... < x_t < y`, `x_t < z`.
//!
//! Variables are indexed `x_1..x_t, y, z`, so `y` is index `t` and `z` is
//! index `t + 1`; `max` and `min` refer to this order.

use std::collections::{BTreeMap, HashSet};

use super::complex::{BasisSymbol, FreeComplex, Label};
use super::cone::{cancel_units, mapping_cone, shift};
use super::ek::{add_ek_differentials, beg_end_ordered, ek_unchecked, push_ek_symbols, squarefree_subsets, SymbolIndex};
use super::linalg::int;
use super::verify::{verify_complex, VerifyMode};
use crate::borel::is_q_borel;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poset::Poset;

/// How a target `[Beg(m alpha_i), (alpha/alpha_i) y^k']` with `k'` different
/// from `k_m` enters `d([m, alpha y^(k_m)])`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PowerMismatch {
    /// Only targets with `k' = k_m` contribute.
    Drop,
    /// Targets with `k' <= k_m` contribute with an extra `y^(k_m - k')`.
    Absorb,
}

/// Which construction produced a Y-Borel resolution.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum YConstruction {
    Formula(PowerMismatch),
    /// Mapping cone of `I_1 (+) z I_z` followed by cancellation.
    Cone,
}

fn check_y(t: usize, ideal: &MonomialIdeal) -> Result<()> {
    if t == 0 || ideal.nvars() != t + 2 || !is_q_borel(&Poset::y_poset(t), ideal) {
        return Err(Error::NotYBorel);
    }
    Ok(())
}

/// Least `k` with `(m/z) y^k` in the ideal, or `None` if `z` does not divide
/// `m` or no power works.
pub fn y_power_index(t: usize, ideal: &MonomialIdeal, m: &Monomial) -> Option<u32> {
    let (y, z) = (t, t + 1);
    let base = m.without_var(z)?;
    ideal
        .generators()
        .iter()
        .filter(|g| (0..m.nvars()).all(|v| v == y || g.exp(v) <= base.exp(v)))
        .map(|g| g.exp(y).saturating_sub(base.exp(y)))
        .min()
}

/// The beginning of `mu`: the initial segment of `mu` in the order
/// `x_1 < .. < x_t < y < z` that is a minimal generator, or failing that the
/// one in the order with `z` before `y` (`y` and `z` are incomparable in the
/// poset, and a monomial like `x y z^2` may only split with `z` first).
pub fn y_beginning(t: usize, gens: &HashSet<&Monomial>, mu: &Monomial) -> Option<Monomial> {
    let mut order: Vec<usize> = (0..t + 2).collect();
    if let Some((b, _)) = beg_end_ordered(gens, mu, &order) {
        return Some(b);
    }
    order.swap(t, t + 1);
    beg_end_ordered(gens, mu, &order).map(|(b, _)| b)
}

/// The basis of the resolution: `[m, alpha]` for squarefree `alpha` on
/// `x_1..x_t` below `max(m)`, and `[m, alpha y^(k_m)]` when `z | m` and `k_m`
/// is finite.
fn push_symbols(t: usize, ideal: &MonomialIdeal, cx: &mut FreeComplex, index: &mut SymbolIndex) {
    let n = ideal.nvars();
    push_ek_symbols(cx, index, ideal, t);
    let xs: Vec<usize> = (0..t).collect();
    for m in ideal.generators() {
        let Some(k) = y_power_index(t, ideal, m) else { continue };
        let yk = Monomial::var_power(n, t, k);
        for alpha in squarefree_subsets(n, &xs) {
            let md = m.mul(&alpha).mul(&yk);
            let label = Label::YPower { m: m.clone(), alpha: alpha.clone(), k };
            index.push(cx, 1 + alpha.degree() as usize, BasisSymbol::new(label, md));
        }
    }
}

/// The resolution by the explicit differential, with missing symbols read as
/// zero. Not every choice of `mode` yields a complex; callers verify.
pub fn y_resolution_formula(t: usize, ideal: &MonomialIdeal, mode: PowerMismatch) -> Result<FreeComplex> {
    check_y(t, ideal)?;
    let n = ideal.nvars();
    let mut cx = FreeComplex::new(n);
    let mut index = SymbolIndex::default();
    push_symbols(t, ideal, &mut cx, &mut index);
    let gens: HashSet<&Monomial> = ideal.generators().iter().collect();
    let beg = |mu: &Monomial| y_beginning(t, &gens, mu);
    add_ek_differentials(&mut cx, &index, beg);
    let ks: BTreeMap<Monomial, u32> = ideal
        .generators()
        .iter()
        .filter_map(|m| y_power_index(t, ideal, m).map(|k| (m.clone(), k)))
        .collect();
    let cols: Vec<(usize, usize, Monomial, Monomial, u32)> = cx
        .levels()
        .iter()
        .enumerate()
        .flat_map(|(i, lvl)| {
            lvl.iter().enumerate().filter_map(move |(c, s)| match &s.label {
                Label::YPower { m, alpha, k } => Some((i, c, m.clone(), alpha.clone(), *k)),
                _ => None,
            })
        })
        .collect();
    for (level, col, m, alpha, k) in cols {
        let last = if alpha.degree() % 2 == 0 { 1 } else { -1 };
        for (i, v) in alpha.support_vars().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let face = alpha.without_var(v).expect("v divides alpha");
            if let Some((_, row)) = index.get(&Label::YPower { m: m.clone(), alpha: face.clone(), k }) {
                cx.add_entry(level, row, col, int(sign));
            }
            let Some(b) = beg(&m.times_var(v)) else { continue };
            let Some(&kb) = ks.get(&b) else { continue };
            let keep = match mode {
                PowerMismatch::Drop => kb == k,
                PowerMismatch::Absorb => kb <= k,
            };
            if keep {
                if let Some((_, row)) = index.get(&Label::YPower { m: b, alpha: face, k: kb }) {
                    cx.add_entry(level, row, col, int(-sign));
                }
            }
        }
        if let Some((_, row)) = index.get(&Label::Ek { m: m.clone(), alpha: alpha.clone() }) {
            cx.add_entry(level, row, col, int(last));
        }
        let myk = m.mul(&Monomial::var_power(n, t, k));
        if let Some(b) = beg(&myk) {
            if let Some((_, row)) = index.get(&Label::Ek { m: b, alpha: alpha.clone() }) {
                cx.add_entry(level, row, col, int(-last));
            }
        }
    }
    cx.trim();
    Ok(cx)
}

/// `I_1` (generators prime to `z`) and `I_z = (I ∩ (z)) / z`.
fn split_z(t: usize, ideal: &MonomialIdeal) -> (MonomialIdeal, MonomialIdeal) {
    let (n, z) = (ideal.nvars(), t + 1);
    let i1 = MonomialIdeal::new(n, ideal.generators().iter().filter(|g| g.exp(z) == 0).cloned());
    let iz = MonomialIdeal::new(n, ideal.generators().iter().map(|g| g.without_var(z).unwrap_or_else(|| g.clone())));
    (i1, iz)
}

/// The resolution assembled from the sequence
/// `0 -> z I_1 -> I_1 (+) z I_z -> I -> 0` by induction on the `z`-degree,
/// then minimized by cancellation.
pub fn y_resolution_cone(t: usize, ideal: &MonomialIdeal) -> Result<FreeComplex> {
    check_y(t, ideal)?;
    let cx = cone_rec(t, ideal)?;
    Ok(relabel(t, ideal, cx))
}

fn cone_rec(t: usize, ideal: &MonomialIdeal) -> Result<FreeComplex> {
    let (n, z) = (ideal.nvars(), t + 1);
    if ideal.generators().iter().all(|g| g.exp(z) == 0) {
        return Ok(ek_unchecked(ideal));
    }
    let (i1, iz) = split_z(t, ideal);
    let zmono = Monomial::var(n, z);
    let h = shift(&cone_rec(t, &iz)?, &zmono);
    if i1.is_zero() {
        return Ok(h);
    }
    let g = ek_unchecked(&i1);
    let k = shift(&g, &zmono);
    Ok(cancel_units(&mapping_cone(&g, &h, &k)?))
}

/// Give a cone-built resolution the labels of the symbol basis, matched by
/// level and multidegree. Leaves the labels alone if the counts differ.
fn relabel(t: usize, ideal: &MonomialIdeal, cx: FreeComplex) -> FreeComplex {
    let mut basis = FreeComplex::new(ideal.nvars());
    let mut index = SymbolIndex::default();
    push_symbols(t, ideal, &mut basis, &mut index);
    let mut pool: BTreeMap<(usize, Monomial), Vec<Label>> = BTreeMap::new();
    for (i, lvl) in basis.levels().iter().enumerate() {
        for s in lvl {
            pool.entry((i, s.multidegree.clone())).or_default().push(s.label.clone());
        }
    }
    for lvl in pool.values_mut() {
        lvl.reverse();
    }
    let mut labels: Vec<Vec<Label>> = Vec::new();
    for (i, lvl) in cx.levels().iter().enumerate() {
        let mut row = Vec::new();
        for s in lvl {
            match pool.get_mut(&(i, s.multidegree.clone())).and_then(Vec::pop) {
                Some(l) => row.push(l),
                None => return cx,
            }
        }
        labels.push(row);
    }
    if pool.values().any(|v| !v.is_empty()) {
        return cx;
    }
    let mut out = FreeComplex::new(cx.nvars());
    for (i, lvl) in cx.levels().iter().enumerate() {
        out.ensure_level(i);
        for (s, l) in lvl.iter().zip(&labels[i]) {
            out.push_symbol(i, BasisSymbol::new(l.clone(), s.multidegree.clone()));
        }
    }
    for i in 1..cx.len() {
        for e in cx.entries(i) {
            out.insert_raw(i, e.row, e.col, e.coef, e.mono);
        }
    }
    out
}

/// The minimal resolution of a Y-Borel ideal. The explicit differential
/// (absorbing mismatched `y` powers, then dropping them) is tried first and
/// kept if it certifies: `d^2 = 0`, exactness through the degree of the lcm
/// of the generators, and no unit entries. Otherwise the cone construction
/// is used.
pub fn y_resolution(t: usize, ideal: &MonomialIdeal) -> Result<(FreeComplex, YConstruction)> {
    check_y(t, ideal)?;
    let bound = ideal.lcm().degree() + 1;
    for mode in [PowerMismatch::Absorb, PowerMismatch::Drop] {
        let cx = y_resolution_formula(t, ideal, mode)?;
        if cx.is_minimal() && verify_complex(&cx, ideal, VerifyMode::Exactness { bound }).is_ok() {
            return Ok((cx, YConstruction::Formula(mode)));
        }
    }
    Ok((y_resolution_cone(t, ideal)?, YConstruction::Cone))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::tests::{ideal, mono};
    use crate::borel::QBorelIdeal;
    use crate::resolution::koszul::koszul_betti;

    #[test]
    fn beginning_with_z_first() {
        // a y z^2 * b has no initial segment in (a, b, y, z) order that is a
        // generator, but a b z is one with z ahead of y.
        let i = QBorelIdeal::closure(&Poset::y_poset(2), &[mono("abd", 4), mono("accdd", 4)]).unwrap();
        let e = i.expansion();
        let gens: HashSet<&Monomial> = e.generators().iter().collect();
        assert_eq!(y_beginning(2, &gens, &mono("abcdd", 4)), Some(mono("abd", 4)));
        let f = y_resolution_formula(2, e, PowerMismatch::Absorb).unwrap();
        verify_complex(&f, e, VerifyMode::Exactness { bound: e.lcm().degree() + 1 }).unwrap();
        assert_eq!(f.betti(), koszul_betti(e, e.lcm().degree() + 1).graded());
    }

    #[test]
    fn flagship_quadric() {
        let i = ideal(3, &["aa", "ab", "ac", "bc"]);
        assert_eq!(y_power_index(1, &i, &mono("ac", 3)), Some(1));
        assert_eq!(y_power_index(1, &i, &mono("bc", 3)), None);
        for mode in [PowerMismatch::Drop, PowerMismatch::Absorb] {
            let f = y_resolution_formula(1, &i, mode).unwrap();
            assert_eq!(f.ranks(), vec![4, 4, 1]);
            assert_eq!(f.level(2)[0].multidegree, mono("aabc", 3));
            verify_complex(&f, &i, VerifyMode::Exactness { bound: 6 }).unwrap();
        }
        let c = y_resolution_cone(1, &i).unwrap();
        verify_complex(&c, &i, VerifyMode::Exactness { bound: 6 }).unwrap();
        assert_eq!(c.betti(), koszul_betti(&i, 6).graded());
        assert_eq!(y_resolution(1, &ideal(3, &["b"])).unwrap_err(), Error::NotYBorel);
        let (x, _) = y_resolution(1, &ideal(3, &["a"])).unwrap();
        assert_eq!(x.ranks(), vec![1]);
    }

    #[test]
    fn two_x_variables() {
        let y = Poset::y_poset(2);
        let i = QBorelIdeal::closure(&y, &[mono("bc", 4), mono("bd", 4)]).unwrap();
        let e = i.expansion();
        let (r, _) = y_resolution(2, e).unwrap();
        assert!(r.is_minimal());
        verify_complex(&r, e, VerifyMode::Exactness { bound: 7 }).unwrap();
        assert_eq!(r.betti(), koszul_betti(e, 10).graded());
    }
}
