//! Exact certification of free complexes: homogeneity, `d^2 = 0`, and
//! per-multidegree exactness against a target ideal.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::complex::{Coeff, FreeComplex};
use super::linalg::rank;
use crate::ideal::{MembershipIndex, MonomialIdeal};
use crate::monomial::Monomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyMode {
    /// Homogeneity, `d^2 = 0` and the augmentation only.
    D2,
    /// Also exactness at every multidegree of total degree `<= bound`.
    Exactness { bound: u32 },
    /// Exactness only in bidegrees `(i, j)` with `j - i <= band`.
    Band { band: u32 },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub mode: VerifyMode,
    /// Multidegrees at which ranks were computed.
    pub points: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Failure {
    Inhomogeneous { level: usize, row: usize, col: usize },
    /// A nonzero entry of `d_{level-1} d_level`.
    D2 { level: usize, row: usize, col: usize, mono: Monomial },
    /// `d_1` of this column does not map to zero in the ideal.
    Augmentation { col: usize },
    /// Level-0 multidegrees do not generate the ideal.
    Generators,
    Homology { level: usize, multidegree: Monomial, dim: usize },
    /// `dim coker d_1` at `multidegree` differs from the ideal's Hilbert function.
    Cokernel { multidegree: Monomial, expected: usize, found: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Inhomogeneous { level, row, col } => {
                write!(f, "inhomogeneous entry in d_{level} at ({row}, {col})")
            }
            Failure::D2 { level, row, col, mono } => {
                write!(f, "d_{} d_{level} has a nonzero entry at ({row}, {col}), monomial {mono:?}", level - 1)
            }
            Failure::Augmentation { col } => write!(f, "d_1 column {col} does not vanish in the ideal"),
            Failure::Generators => write!(f, "level 0 does not generate the ideal"),
            Failure::Homology { level, multidegree, dim } => {
                write!(f, "H_{level} has dimension {dim} at {multidegree:?}")
            }
            Failure::Cokernel { multidegree, expected, found } => {
                write!(f, "H_0 at {multidegree:?} has dimension {found}, expected {expected}")
            }
        }
    }
}

impl std::error::Error for Failure {}

/// Check `cx` as a resolution of `ideal` (as a module) in the requested mode.
pub fn verify_complex(cx: &FreeComplex, ideal: &MonomialIdeal, mode: VerifyMode) -> Result<Certificate, Failure> {
    check_homogeneous(cx)?;
    check_d2(cx)?;
    // A band check only sees low degrees, where level 0 may generate a
    // truncation of the ideal.
    check_augmentation(cx, ideal, !matches!(mode, VerifyMode::Band { .. }))?;
    let points = match mode {
        VerifyMode::D2 => 0,
        VerifyMode::Exactness { bound } => check_exact(cx, ideal, bound, None)?,
        VerifyMode::Band { band } => {
            let top = cx.len() as u32 + band;
            check_exact(cx, ideal, top, Some(band))?
        }
    };
    Ok(Certificate { mode, points })
}

fn check_homogeneous(cx: &FreeComplex) -> Result<(), Failure> {
    for i in 1..cx.len() {
        for e in cx.entries(i) {
            let row = &cx.level(i - 1)[e.row].multidegree;
            let col = &cx.level(i)[e.col].multidegree;
            if row.nvars() != e.mono.nvars() || &row.mul(&e.mono) != col {
                return Err(Failure::Inhomogeneous { level: i, row: e.row, col: e.col });
            }
        }
    }
    Ok(())
}

/// Composes `d_{i-1} d_i` symbolically, grouping by target row and monomial.
fn check_d2(cx: &FreeComplex) -> Result<(), Failure> {
    for i in 2..cx.len() {
        for col in 0..cx.level(i).len() {
            let mut acc: BTreeMap<(usize, Monomial), Coeff> = BTreeMap::new();
            for (mid, c1, m1) in cx.column(i, col) {
                for (row, c2, m2) in cx.column(i - 1, mid) {
                    *acc.entry((row, m1.mul(m2))).or_insert_with(Coeff::zero) += c1 * c2;
                }
            }
            if let Some(((row, mono), _)) = acc.into_iter().find(|(_, c)| !c.is_zero()) {
                return Err(Failure::D2 { level: i, row, col, mono });
            }
        }
    }
    Ok(())
}

/// Level-0 symbols map to their multidegree monomials, so `d_1` composes to
/// zero iff its coefficients sum to zero in every column.
fn check_augmentation(cx: &FreeComplex, ideal: &MonomialIdeal, generators: bool) -> Result<(), Failure> {
    let level0 = MonomialIdeal::new(ideal.nvars(), cx.level(0).iter().map(|s| s.multidegree.clone()));
    if generators && &level0 != ideal {
        return Err(Failure::Generators);
    }
    if cx.len() > 1 {
        for col in 0..cx.level(1).len() {
            let sum: Coeff = cx.column(1, col).map(|(_, c, _)| c.clone()).sum();
            if !sum.is_zero() {
                return Err(Failure::Augmentation { col });
            }
        }
    }
    Ok(())
}

/// Every multidegree `b <= lcm` of total degree `<= bound`. Restricting the
/// complex to `b` only depends on `gcd(b, lcm)`, so this covers every `b`.
fn box_points(lcm: &Monomial, bound: u32) -> Vec<Monomial> {
    let n = lcm.nvars();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(v: usize, left: u32, lcm: &Monomial, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=lcm.exp(v).min(left) {
            cur[v] = e;
            rec(v + 1, left - e, lcm, cur, out);
        }
        cur[v] = 0;
    }
    rec(0, bound, lcm, &mut cur, &mut out);
    out
}

fn check_exact(cx: &FreeComplex, ideal: &MonomialIdeal, bound: u32, band: Option<u32>) -> Result<usize, Failure> {
    let n = ideal.nvars();
    let mut lcm = ideal.lcm();
    for level in cx.levels() {
        for s in level {
            lcm = lcm.lcm(&s.multidegree);
        }
    }
    if lcm.nvars() != n {
        lcm = Monomial::one(n);
    }
    let index = MembershipIndex::new(ideal);
    let points = box_points(&lcm, bound);
    let top = cx.len();
    for b in &points {
        let deg = b.degree();
        let in_band = |i: usize| band.is_none_or(|d| deg <= d + i as u32);
        if !(0..top).any(in_band) {
            continue;
        }
        // Symbols whose multidegree divides b, with their positions per level.
        let present: Vec<Vec<usize>> = cx
            .levels()
            .iter()
            .map(|lvl| (0..lvl.len()).filter(|&k| lvl[k].multidegree.divides(b)).collect())
            .collect();
        let mut ranks = vec![0usize; top + 1];
        for i in 1..top {
            if present[i].is_empty() || present[i - 1].is_empty() {
                continue;
            }
            if !(in_band(i) || in_band(i - 1)) {
                continue;
            }
            let row_pos: BTreeMap<usize, usize> = present[i - 1].iter().enumerate().map(|(p, &r)| (r, p)).collect();
            let mut m = vec![vec![Coeff::zero(); present[i].len()]; present[i - 1].len()];
            for (c, &col) in present[i].iter().enumerate() {
                for (row, coef, _) in cx.column(i, col) {
                    if let Some(&r) = row_pos.get(&row) {
                        m[r][c] = coef.clone();
                    }
                }
            }
            ranks[i] = rank(m);
        }
        for i in 0..top {
            if !in_band(i) {
                continue;
            }
            let dim = present[i].len() - ranks[i] - ranks[i + 1];
            if i == 0 {
                let expected = usize::from(index.contains(b));
                if dim != expected {
                    return Err(Failure::Cokernel { multidegree: b.clone(), expected, found: dim });
                }
            } else if dim != 0 {
                return Err(Failure::Homology { level: i, multidegree: b.clone(), dim });
            }
        }
    }
    Ok(points.len())
}

/// Whether the complex has no unit entries, i.e. is minimal.
pub fn is_minimal(cx: &FreeComplex) -> bool {
    cx.is_minimal()
}
