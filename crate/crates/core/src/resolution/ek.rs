//! Beginning/end factorizations and the Eliahou-Kervaire resolution.

use std::collections::{HashMap, HashSet};

use super::complex::{BasisSymbol, FreeComplex, Label};
use super::linalg::int;
use crate::borel::is_q_borel;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poset::Poset;

/// `mu = Beg * End` with `Beg` a minimal generator and `max(Beg) <= min(End)`.
///
/// `Beg` must be an initial segment of the variables of `mu` in index order,
/// and at most one initial segment can be a minimal generator.
pub(crate) fn beg_end_in(gens: &HashSet<&Monomial>, mu: &Monomial) -> Option<(Monomial, Monomial)> {
    let order: Vec<usize> = (0..mu.nvars()).collect();
    beg_end_ordered(gens, mu, &order)
}

/// [`beg_end_in`] with `max` and `min` taken along `order`.
pub(crate) fn beg_end_ordered(gens: &HashSet<&Monomial>, mu: &Monomial, order: &[usize]) -> Option<(Monomial, Monomial)> {
    let mut prefix = Monomial::one(mu.nvars());
    if gens.contains(&prefix) {
        return Some((prefix, mu.clone()));
    }
    for &v in order {
        for _ in 0..mu.exp(v) {
            prefix = prefix.times_var(v);
            if gens.contains(&prefix) {
                let end = mu.div(&prefix).expect("prefix divides");
                return Some((prefix, end));
            }
        }
    }
    None
}

/// Beginning and end of `mu` in `ideal`. For Borel ideals this always exists
/// for `mu` in the ideal; for other ideals it may not.
pub fn beg_end(ideal: &MonomialIdeal, mu: &Monomial) -> Result<(Monomial, Monomial)> {
    if !ideal.contains(mu) {
        return Err(Error::NotInIdeal);
    }
    let gens: HashSet<&Monomial> = ideal.generators().iter().collect();
    beg_end_in(&gens, mu)
        .ok_or_else(|| Error::HypothesesViolated("no beginning/end factorization".into()))
}

/// Squarefree monomials on the variables in `vars` (any order), smallest first.
pub(crate) fn squarefree_subsets(nvars: usize, vars: &[usize]) -> Vec<Monomial> {
    let r = vars.len();
    let mut masks: Vec<u32> = (0u32..(1 << r)).collect();
    masks.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
    masks
        .into_iter()
        .map(|s| {
            let mut e = vec![0u32; nvars];
            for (k, &v) in vars.iter().enumerate() {
                if (s >> k) & 1 == 1 {
                    e[v] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect()
}

/// Symbol positions by label, used to resolve targets of the differential.
#[derive(Default)]
pub(crate) struct SymbolIndex {
    pos: HashMap<Label, (usize, usize)>,
}

impl SymbolIndex {
    pub fn push(&mut self, cx: &mut FreeComplex, level: usize, sym: BasisSymbol) {
        let label = sym.label.clone();
        let idx = cx.push_symbol(level, sym);
        self.pos.insert(label, (level, idx));
    }

    pub fn get(&self, label: &Label) -> Option<(usize, usize)> {
        self.pos.get(label).copied()
    }
}

/// Push every `[m, alpha]` with `alpha` squarefree on variables below
/// `min(max(m), alpha_limit)`.
pub(crate) fn push_ek_symbols(cx: &mut FreeComplex, index: &mut SymbolIndex, ideal: &MonomialIdeal, alpha_limit: usize) {
    let n = ideal.nvars();
    for m in ideal.generators() {
        let top = m.max_var().map_or(0, |v| v.min(alpha_limit));
        let vars: Vec<usize> = (0..top).collect();
        for alpha in squarefree_subsets(n, &vars) {
            let sym = BasisSymbol::new(Label::Ek { m: m.clone(), alpha: alpha.clone() }, m.mul(&alpha));
            index.push(cx, alpha.degree() as usize, sym);
        }
    }
}

/// `d[m, alpha] = sum (-1)^(1+i) alpha_i [m, alpha/alpha_i]
///              - sum (-1)^(1+i) End(m alpha_i) [Beg(m alpha_i), alpha/alpha_i]`,
/// with missing symbols read as zero.
pub(crate) fn add_ek_differentials(
    cx: &mut FreeComplex,
    index: &SymbolIndex,
    beg: impl Fn(&Monomial) -> Option<Monomial>,
) {
    let cols: Vec<(usize, usize, Monomial, Monomial)> = cx
        .levels()
        .iter()
        .enumerate()
        .flat_map(|(i, lvl)| {
            lvl.iter().enumerate().filter_map(move |(c, s)| match &s.label {
                Label::Ek { m, alpha } if i > 0 => Some((i, c, m.clone(), alpha.clone())),
                _ => None,
            })
        })
        .collect();
    for (level, col, m, alpha) in cols {
        for (i, v) in alpha.support_vars().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let face = alpha.without_var(v).expect("v divides alpha");
            let same = Label::Ek { m: m.clone(), alpha: face.clone() };
            if let Some((_, row)) = index.get(&same) {
                cx.add_entry(level, row, col, int(sign));
            }
            if let Some(b) = beg(&m.times_var(v)) {
                let other = Label::Ek { m: b, alpha: face };
                if let Some((_, row)) = index.get(&other) {
                    cx.add_entry(level, row, col, int(-sign));
                }
            }
        }
    }
}

/// The Eliahou-Kervaire resolution of a Borel (chain-stable) ideal.
pub fn ek_resolution(ideal: &MonomialIdeal) -> Result<FreeComplex> {
    let n = ideal.nvars();
    if !is_q_borel(&Poset::chain(n), ideal) {
        return Err(Error::NotBorel);
    }
    Ok(ek_unchecked(ideal))
}

pub(crate) fn ek_unchecked(ideal: &MonomialIdeal) -> FreeComplex {
    let n = ideal.nvars();
    let mut cx = FreeComplex::new(n);
    let mut index = SymbolIndex::default();
    push_ek_symbols(&mut cx, &mut index, ideal, n);
    let gens: HashSet<&Monomial> = ideal.generators().iter().collect();
    add_ek_differentials(&mut cx, &index, |mu| beg_end_in(&gens, mu).map(|(b, _)| b));
    cx.trim();
    cx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::tests::{ideal, mono};
    use crate::resolution::koszul::koszul_betti;
    use crate::resolution::verify::{verify_complex, VerifyMode};

    #[test]
    fn beginnings_and_ends() {
        let i = ideal(2, &["aa", "ab", "bb"]);
        assert_eq!(beg_end(&i, &mono("aab", 2)).unwrap(), (mono("aa", 2), mono("b", 2)));
        assert_eq!(beg_end(&i, &mono("ab", 2)).unwrap(), (mono("ab", 2), mono("", 2)));
        assert_eq!(beg_end(&ideal(1, &["a"]), &mono("aaa", 1)).unwrap(), (mono("a", 1), mono("aa", 1)));
        assert_eq!(beg_end(&i, &mono("a", 2)), Err(Error::NotInIdeal));
        // y^2 z in (x^2, xy, xz, yz) has no such factorization.
        let y = ideal(3, &["aa", "ab", "ac", "bc"]);
        assert!(matches!(beg_end(&y, &mono("bbc", 3)), Err(Error::HypothesesViolated(_))));
    }

    #[test]
    fn small_resolutions() {
        let i = ideal(2, &["aa", "ab", "bb"]);
        let r = ek_resolution(&i).unwrap();
        assert_eq!(r.ranks(), vec![3, 2]);
        let labels: Vec<(Monomial, Monomial)> = r.level(1)
            .iter()
            .map(|s| match &s.label {
                Label::Ek { m, alpha } => (m.clone(), alpha.clone()),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(labels, vec![(mono("ab", 2), mono("a", 2)), (mono("bb", 2), mono("a", 2))]);
        assert!(r.is_minimal());
        verify_complex(&r, &i, VerifyMode::Exactness { bound: 5 }).unwrap();

        assert_eq!(ek_resolution(&ideal(1, &["a"])).unwrap().ranks(), vec![1]);

        let b = ideal(3, &["aa", "ab", "bb", "ac", "bc"]);
        let r = ek_resolution(&b).unwrap();
        verify_complex(&r, &b, VerifyMode::Exactness { bound: 6 }).unwrap();
        assert_eq!(r.betti(), koszul_betti(&b, 6).graded());

        assert_eq!(ek_resolution(&ideal(2, &["b"])), Err(Error::NotBorel));
    }
}
