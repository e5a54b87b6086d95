//! Mapping cones of `K -> G (+) H` and Gaussian cancellation of unit entries.
//!
//! If `G`, `H`, `K` resolve ideals `A`, `B` and `A ∩ B`, the cone resolves
//! `A + B`. The comparison map `K -> G (+) H` lifts `u -> (u, -u)` and is
//! solved one multidegree at a time over the rationals.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::complex::{BasisSymbol, Coeff, FreeComplex, Label};
use super::linalg::solve;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A chain map `K -> C`: `maps[i][k]` is the image of `K_i` symbol `k` as a
/// sparse vector over `C_i` symbols (monomials are forced by multidegree).
pub type ChainMap = Vec<Vec<BTreeMap<usize, Coeff>>>;

/// `G (+) H`, with symbols tagged `G` and `H`.
pub fn direct_sum(g: &FreeComplex, h: &FreeComplex) -> FreeComplex {
    let mut c = FreeComplex::new(g.nvars());
    let top = g.len().max(h.len());
    for i in 0..top {
        c.ensure_level(i);
        for s in g.level(i) {
            c.push_symbol(i, tagged('G', s));
        }
        for s in h.level(i) {
            c.push_symbol(i, tagged('H', s));
        }
    }
    for i in 1..top {
        let (go, gp) = (g.level(i).len(), g.level(i - 1).len());
        for e in g.entries(i) {
            c.insert_raw(i, e.row, e.col, e.coef, e.mono);
        }
        for e in h.entries(i) {
            c.insert_raw(i, gp + e.row, go + e.col, e.coef, e.mono);
        }
    }
    c
}

fn tagged(tag: char, s: &BasisSymbol) -> BasisSymbol {
    BasisSymbol::new(Label::Part(tag, Box::new(s.label.clone())), s.multidegree.clone())
}

/// Lift the comparison map. `split` is the number of `G_0` symbols at the
/// front of `c`'s level 0; each `K_0` symbol goes to `+` the first `G_0`
/// symbol dividing it and `-` the first `H_0` symbol dividing it.
pub fn lift_comparison(c: &FreeComplex, split: usize, k: &FreeComplex) -> Result<ChainMap> {
    let mut maps: ChainMap = Vec::new();
    let mut phi0 = Vec::new();
    for s in k.level(0) {
        let b = &s.multidegree;
        let c0 = c.level(0);
        let gi = (0..split).find(|&j| c0[j].multidegree.divides(b));
        let hi = (split..c0.len()).find(|&j| c0[j].multidegree.divides(b));
        let (Some(gi), Some(hi)) = (gi, hi) else {
            return Err(Error::LiftFailed { level: 0, degree: format!("{b:?}") });
        };
        phi0.push(BTreeMap::from([(gi, Coeff::one()), (hi, -Coeff::one())]));
    }
    maps.push(phi0);
    for i in 1..k.len() {
        let mut phi = Vec::new();
        for (col, s) in k.level(i).iter().enumerate() {
            let mut target: BTreeMap<usize, Coeff> = BTreeMap::new();
            for (row, coef, _) in k.column(i, col) {
                for (r, v) in &maps[i - 1][row] {
                    *target.entry(*r).or_insert_with(Coeff::zero) += coef * v;
                }
            }
            target.retain(|_, v| !v.is_zero());
            phi.push(lift_one(c, i, &s.multidegree, &target)?);
        }
        maps.push(phi);
    }
    Ok(maps)
}

/// Solve `d_C(x) = target` for `x` in `C_i` at multidegree `b`.
fn lift_one(c: &FreeComplex, i: usize, b: &Monomial, target: &BTreeMap<usize, Coeff>) -> Result<BTreeMap<usize, Coeff>> {
    if target.is_empty() {
        return Ok(BTreeMap::new());
    }
    let unknowns: Vec<usize> = (0..c.level(i).len()).filter(|&u| c.level(i)[u].multidegree.divides(b)).collect();
    let rows: Vec<usize> = (0..c.level(i - 1).len())
        .filter(|&r| c.level(i - 1)[r].multidegree.divides(b))
        .collect();
    let row_pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
    let fail = || Error::LiftFailed { level: i, degree: format!("{b:?}") };
    let mut a = vec![vec![Coeff::zero(); unknowns.len()]; rows.len()];
    for (u, &col) in unknowns.iter().enumerate() {
        for (row, coef, _) in c.column(i, col) {
            if let Some(&p) = row_pos.get(&row) {
                a[p][u] = coef.clone();
            }
        }
    }
    let mut rhs = vec![Coeff::zero(); rows.len()];
    for (r, v) in target {
        rhs[*row_pos.get(r).ok_or_else(fail)?] = v.clone();
    }
    if unknowns.is_empty() {
        return Err(fail());
    }
    let x = solve(&a, &rhs).ok_or_else(fail)?;
    Ok(unknowns.into_iter().zip(x).filter(|(_, v)| !v.is_zero()).collect())
}

/// The cone of the lifted comparison map `K -> G (+) H`:
/// `F_i = G_i (+) H_i (+) K_{i-1}`, `d(c, k) = (d c + phi(k), -d k)`.
pub fn mapping_cone(g: &FreeComplex, h: &FreeComplex, k: &FreeComplex) -> Result<FreeComplex> {
    let c = direct_sum(g, h);
    let phi = lift_comparison(&c, g.level(0).len(), k)?;
    let top = c.len().max(k.len() + 1);
    let mut f = FreeComplex::new(g.nvars());
    for i in 0..top {
        f.ensure_level(i);
        for s in c.level(i) {
            f.push_symbol(i, s.clone());
        }
        if i >= 1 {
            for s in k.level(i - 1) {
                f.push_symbol(i, tagged('K', s));
            }
        }
    }
    for i in 1..top {
        let off = c.level(i).len();
        let off_prev = c.level(i - 1).len();
        if i < c.len() {
            for e in c.entries(i) {
                f.insert_raw(i, e.row, e.col, e.coef, e.mono);
            }
        }
        if let Some(level) = phi.get(i - 1) {
            for (kk, image) in level.iter().enumerate() {
                for (&row, coef) in image {
                    f.add_entry(i, row, off + kk, coef.clone());
                }
            }
        }
        if i >= 2 {
            for e in k.entries(i - 1) {
                f.insert_raw(i, off_prev + e.row, off + e.col, -e.coef, e.mono);
            }
        }
    }
    f.trim();
    Ok(f)
}

/// Multiply every multidegree by `shift`; entries are unchanged.
pub fn shift(cx: &FreeComplex, shift: &Monomial) -> FreeComplex {
    let mut out = FreeComplex::new(cx.nvars());
    for (i, level) in cx.levels().iter().enumerate() {
        out.ensure_level(i);
        for s in level {
            out.push_symbol(i, BasisSymbol::new(s.label.clone(), s.multidegree.mul(shift)));
        }
    }
    for i in 1..cx.len() {
        for e in cx.entries(i) {
            out.insert_raw(i, e.row, e.col, e.coef, e.mono);
        }
    }
    out
}

/// Working copy with row and column indices for repeated elimination.
struct Work {
    syms: Vec<Vec<Option<BasisSymbol>>>,
    // cols[i][c]: rows of d_i(c); rows[i][r]: columns of d_i touching row r.
    cols: Vec<Vec<BTreeMap<usize, Coeff>>>,
    rows: Vec<Vec<BTreeSet<usize>>>,
}

impl Work {
    fn new(cx: &FreeComplex) -> Self {
        let syms: Vec<Vec<Option<BasisSymbol>>> =
            cx.levels().iter().map(|l| l.iter().cloned().map(Some).collect()).collect();
        let mut cols: Vec<Vec<BTreeMap<usize, Coeff>>> =
            cx.levels().iter().map(|l| vec![BTreeMap::new(); l.len()]).collect();
        let mut rows: Vec<Vec<BTreeSet<usize>>> = Vec::with_capacity(cx.len());
        rows.push(Vec::new());
        for i in 1..cx.len() {
            let mut r = vec![BTreeSet::new(); cx.level(i - 1).len()];
            for e in cx.entries(i) {
                cols[i][e.col].insert(e.row, e.coef);
                r[e.row].insert(e.col);
            }
            rows.push(r);
        }
        Self { syms, cols, rows }
    }

    fn find_unit(&self) -> Option<(usize, usize, usize)> {
        for i in 1..self.syms.len() {
            for (c, entries) in self.cols[i].iter().enumerate() {
                let Some(cs) = &self.syms[i][c] else { continue };
                for r in entries.keys() {
                    let rs = self.syms[i - 1][*r].as_ref().expect("live row");
                    if rs.multidegree == cs.multidegree {
                        return Some((i, *r, c));
                    }
                }
            }
        }
        None
    }

    fn set(&mut self, i: usize, r: usize, c: usize, v: Coeff) {
        if v.is_zero() {
            self.cols[i][c].remove(&r);
            self.rows[i][r].remove(&c);
        } else {
            self.cols[i][c].insert(r, v);
            self.rows[i][r].insert(c);
        }
    }

    /// Eliminate the unit entry of `d_i` at `(r, c)`.
    fn cancel(&mut self, i: usize, r: usize, c: usize) {
        let u_inv = self.cols[i][c][&r].recip();
        let col_c: Vec<(usize, Coeff)> =
            self.cols[i][c].iter().filter(|(&rr, _)| rr != r).map(|(&rr, v)| (rr, v.clone())).collect();
        let others: Vec<usize> = self.rows[i][r].iter().copied().filter(|&cc| cc != c).collect();
        for cc in others {
            let a = self.cols[i][cc][&r].clone();
            let factor = &a * &u_inv;
            for (rr, b) in &col_c {
                let old = self.cols[i][cc].get(rr).cloned().unwrap_or_else(Coeff::zero);
                self.set(i, *rr, cc, old - b * &factor);
            }
        }
        // Drop column c and row r of d_i.
        for rr in std::mem::take(&mut self.cols[i][c]).into_keys() {
            self.rows[i][rr].remove(&c);
        }
        for cc in std::mem::take(&mut self.rows[i][r]) {
            self.cols[i][cc].remove(&r);
        }
        // Row c of d_{i+1} and column r of d_{i-1}.
        if i + 1 < self.syms.len() {
            for cc in std::mem::take(&mut self.rows[i + 1][c]) {
                self.cols[i + 1][cc].remove(&c);
            }
        }
        if i >= 2 {
            for rr in std::mem::take(&mut self.cols[i - 1][r]).into_keys() {
                self.rows[i - 1][rr].remove(&r);
            }
        }
        self.syms[i][c] = None;
        self.syms[i - 1][r] = None;
    }

    fn finish(self, nvars: usize) -> FreeComplex {
        let mut out = FreeComplex::new(nvars);
        let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
        for (i, level) in self.syms.iter().enumerate() {
            out.ensure_level(i);
            maps.push(level.iter().map(|s| s.clone().map(|s| out.push_symbol(i, s))).collect());
        }
        for i in 1..self.syms.len() {
            for (c, entries) in self.cols[i].iter().enumerate() {
                let Some(nc) = maps[i][c] else { continue };
                for (r, v) in entries {
                    if let Some(nr) = maps[i - 1][*r] {
                        out.add_entry(i, nr, nc, v.clone());
                    }
                }
            }
        }
        out.trim();
        out
    }
}

/// Remove unit entries by Gaussian elimination until the complex is minimal.
/// The result is homotopy equivalent to the input.
pub fn cancel_units(cx: &FreeComplex) -> FreeComplex {
    let mut w = Work::new(cx);
    while let Some((i, r, c)) = w.find_unit() {
        w.cancel(i, r, c);
    }
    w.finish(cx.nvars())
}
