//! Monomials as exponent vectors, plus the variable names used to print them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_n^{e_n}` in a fixed number of variables.
///
/// The ordering is the canonical generator order used throughout the crate:
/// ascending total degree, then lexicographic with `x_1 > x_2 > ... > x_n`
/// (so `a^2 < a*b < b^2` among quadrics).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The unit monomial in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    /// `x_var^exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Self { exps }
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::var_power(nvars, var, 1)
    }

    /// The squarefree monomial on the variables of `mask`.
    pub fn from_mask(nvars: usize, mask: u64) -> Self {
        Self {
            exps: (0..nvars).map(|i| ((mask >> i) & 1) as u32).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`: the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn times_var(&self, var: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[var] = exps[var].checked_add(1).expect("exponent overflow");
        Monomial { exps }
    }

    /// `self / x_var`, if `x_var` divides `self`.
    pub fn without_var(&self, var: usize) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        exps[var] = exps[var].checked_sub(1)?;
        Some(Monomial { exps })
    }

    /// The Borel move `self * x_to / x_from`.
    pub fn moved(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Some(Monomial { exps })
    }

    /// Bitmask of the variables dividing `self`.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    pub fn support_vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `Some((var, exp))` if `self = x_var^exp` with `exp >= 1`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Largest index of a variable dividing `self`.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Smallest index of a variable dividing `self`.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Sum of the exponents over the variables in `mask`.
    pub fn degree_in(&self, mask: u64) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &e)| e)
            .sum()
    }

    /// Variable factors with multiplicity, in index order.
    pub fn factors(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, vars }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// in canonical order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, var: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == nvars {
            cur[var] = left;
            out.push(Monomial::new(cur.clone()));
            cur[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e;
            rec(nvars, var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(nvars, 0, degree, &mut vec![0; nvars], &mut out);
    out
}

/// All monomials of degree at most `degree`, in canonical order.
pub fn monomials_up_to_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    (0..=degree).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}

/// All monomials dividing `m`.
pub fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(m.nvars())];
    for (i, &e) in m.exps().iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            for k in 0..=e {
                let mut exps = d.exps.clone();
                exps[i] = k;
                next.push(Monomial::new(exps));
            }
        }
        out = next;
    }
    out
}

/// Names of the ring variables `x_1, ..., x_n` (0-indexed internally).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variables {
    names: Vec<String>,
}

impl Variables {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > 64 {
            return Err(Error::TooManyVariables(names.len()));
        }
        Ok(Self { names })
    }

    /// `a, b, c, ...` for up to 26 variables, `x1, x2, ...` beyond that.
    pub fn standard(nvars: usize) -> Self {
        let names = if nvars <= 26 {
            (0..nvars).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=nvars).map(|i| format!("x{i}")).collect()
        };
        Self { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Names of the variables in a bitmask, in index order.
    pub fn mask_names(&self, mask: u64) -> Vec<&str> {
        (0..self.len())
            .filter(|i| (mask >> i) & 1 == 1)
            .map(|i| self.name(i))
            .collect()
    }
}

pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    vars: &'a Variables,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.vars.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn canonical_order_puts_lex_leading_first() {
        let mut v = vec![m(&[0, 2]), m(&[2, 0]), m(&[1, 1]), m(&[1, 0])];
        v.sort();
        assert_eq!(v, vec![m(&[1, 0]), m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn colon_and_division() {
        let a2b = m(&[2, 1]);
        assert_eq!(a2b.colon(&m(&[1, 3])), m(&[1, 0]));
        assert_eq!(a2b.div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(a2b.div(&m(&[0, 2])), None);
    }

    #[test]
    fn overflow_is_reported() {
        let big = m(&[u32::MAX]);
        assert_eq!(big.checked_mul(&m(&[1])), Err(Error::ExponentOverflow));
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_up_to_degree(2, 2).len(), 6);
        assert_eq!(divisors(&m(&[2, 1])).len(), 6);
    }

    #[test]
    fn display_uses_caret_syntax() {
        let vars = Variables::standard(3);
        assert_eq!(m(&[2, 1, 0]).display(&vars).to_string(), "a^2*b");
        assert_eq!(m(&[0, 0, 0]).display(&vars).to_string(), "1");
    }
}
