//! Linear quotients and the iterated mapping-cone resolution they induce.

use std::cmp::Ordering;

use super::betti::BettiTable;
use super::complex::{BasisSymbol, FreeComplex, Label};
use super::cone::{cancel_units, mapping_cone};
use super::linalg::int;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum GeneratorOrder {
    /// By degree, then descending in reverse lexicographic order:
    /// `a^2, ab, b^2`.
    #[default]
    DescendingRevlex,
    /// By degree, then ascending in reverse lexicographic order:
    /// `b^2, ab, a^2`.
    AscendingRevlex,
}

fn revlex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.exps().iter().rev().cmp(b.exps().iter().rev()))
}

/// The minimal generators in the requested order.
pub fn ordered_generators(ideal: &MonomialIdeal, order: GeneratorOrder) -> Vec<Monomial> {
    let mut gens = ideal.generators().to_vec();
    match order {
        GeneratorOrder::DescendingRevlex => gens.sort_by(revlex_desc),
        GeneratorOrder::AscendingRevlex => {
            gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| revlex_desc(b, a)))
        }
    }
    gens
}

/// Each generator with the variables generating `(m_1, ..., m_{j-1}) : m_j`.
/// Fails with the first (0-based) index whose colon is not generated by
/// variables.
pub fn linear_quotients(ideal: &MonomialIdeal, order: GeneratorOrder) -> Result<Vec<(Monomial, Vec<usize>)>> {
    let gens = ordered_generators(ideal, order);
    let mut out = Vec::with_capacity(gens.len());
    for (j, m) in gens.iter().enumerate() {
        let colon = MonomialIdeal::new(ideal.nvars(), gens[..j].iter().map(|g| g.colon(m)));
        let mut vars = Vec::new();
        for g in colon.generators() {
            match g.pure_power() {
                Some((v, 1)) => vars.push(v),
                _ => return Err(Error::NoLinearQuotients(j)),
            }
        }
        vars.sort_unstable();
        out.push((m.clone(), vars));
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `beta_{i, deg m_j + i} = sum_j C(|q_j|, i)`.
pub fn lq_betti(ideal: &MonomialIdeal, order: GeneratorOrder) -> Result<BettiTable> {
    let lq = linear_quotients(ideal, order)?;
    let mut t = BettiTable::default();
    for (m, q) in &lq {
        for i in 0..=q.len() {
            t.add(i, m.degree() + i as u32, binomial(q.len(), i));
        }
    }
    Ok(t)
}

/// `pd(S/I) = 1 + max |q_j|`.
pub fn lq_projective_dimension(ideal: &MonomialIdeal, order: GeneratorOrder) -> Result<usize> {
    let lq = linear_quotients(ideal, order)?;
    Ok(1 + lq.iter().map(|(_, q)| q.len()).max().unwrap_or(0))
}

/// The Koszul complex on `vars` resolving `m * (vars)`, with level `i`
/// spanned by `m * e_w` for `|w| = i + 1`.
pub fn shifted_koszul(m: &Monomial, vars: &[usize]) -> FreeComplex {
    let n = m.nvars();
    let r = vars.len();
    let mut cx = FreeComplex::new(n);
    let mut subsets: Vec<u32> = (1u32..(1 << r)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
    let mut index = vec![usize::MAX; 1 << r];
    let as_mono = |s: u32| {
        let mut e = vec![0u32; n];
        for (k, &v) in vars.iter().enumerate() {
            if (s >> k) & 1 == 1 {
                e[v] = 1;
            }
        }
        Monomial::new(e)
    };
    for &s in &subsets {
        let w = as_mono(s);
        let sym = BasisSymbol::new(Label::Koszul { m: m.clone(), w: w.clone() }, m.mul(&w));
        index[s as usize] = cx.push_symbol(s.count_ones() as usize - 1, sym);
    }
    for &s in &subsets {
        let level = s.count_ones() as usize - 1;
        if level == 0 {
            continue;
        }
        let mut sign = 1;
        for k in 0..r {
            if (s >> k) & 1 == 1 {
                cx.add_entry(level, index[(s & !(1 << k)) as usize], index[s as usize], int(sign));
                sign = -sign;
            }
        }
    }
    cx
}

/// Iterated mapping cone along the linear quotients: step `j` glues the
/// Koszul complex of `q_j` (shifted by `m_j`) onto the resolution of
/// `(m_1, ..., m_{j-1})`. Symbols are `m_j * e_w` with `w` a subset of `q_j`.
pub fn lq_resolution(ideal: &MonomialIdeal, order: GeneratorOrder) -> Result<FreeComplex> {
    let lq = linear_quotients(ideal, order)?;
    let n = ideal.nvars();
    let mut res = FreeComplex::new(n);
    for (j, (m, q)) in lq.iter().enumerate() {
        let mut single = FreeComplex::new(n);
        let one = Monomial::one(n);
        single.push_symbol(0, BasisSymbol::new(Label::Koszul { m: m.clone(), w: one }, m.clone()));
        if j == 0 {
            res = single;
            continue;
        }
        let k = shifted_koszul(m, q);
        res = strip_tags(&mapping_cone(&single, &res, &k)?);
    }
    // A degree-compatible order already gives a minimal cone; cancel anyway so
    // other orders still produce minimal output.
    Ok(cancel_units(&res))
}

/// Drop mapping-cone tags, keeping the innermost labels.
pub fn strip_tags(cx: &FreeComplex) -> FreeComplex {
    fn inner(l: &Label) -> Label {
        match l {
            Label::Part(_, b) => inner(b),
            other => other.clone(),
        }
    }
    let mut out = FreeComplex::new(cx.nvars());
    for (i, level) in cx.levels().iter().enumerate() {
        out.ensure_level(i);
        for s in level {
            out.push_symbol(i, BasisSymbol::new(inner(&s.label), s.multidegree.clone()));
        }
    }
    for i in 1..cx.len() {
        for e in cx.entries(i) {
            out.insert_raw(i, e.row, e.col, e.coef, e.mono);
        }
    }
    out
}
