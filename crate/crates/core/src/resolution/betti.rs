//! Graded and multigraded Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{Map, Value};

use crate::monomial::Monomial;

/// `beta_{i,j}`: number of basis elements in homological degree `i` and
/// internal degree `j`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn new(entries: impl IntoIterator<Item = ((usize, u32), usize)>) -> Self {
        let mut t = Self::default();
        for ((i, j), b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: u32, count: usize) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), usize> {
        &self.entries
    }

    /// Total Betti number per homological degree, `[beta_0, beta_1, ...]`.
    pub fn ranks(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|&(i, _)| i).max();
        let Some(top) = top else {
            return Vec::new();
        };
        let mut out = vec![0; top + 1];
        for (&(i, _), &b) in &self.entries {
            out[i] += b;
        }
        out
    }

    /// Largest `i` with `beta_i != 0`: the projective dimension of the module
    /// (for an ideal `I`, `pd(S/I)` is one more).
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// All nonzero `beta_{i,j}` have `j - i` equal to the same value.
    pub fn is_linear(&self) -> bool {
        let mut shifts = self.entries.keys().map(|&(i, j)| j as i64 - i as i64);
        match shifts.next() {
            None => true,
            Some(s) => shifts.all(|t| t == s),
        }
    }

    /// `{"i": {"j": beta_ij}}`, matching the session output.
    pub fn to_json(&self) -> Value {
        let mut outer = Map::new();
        for (&(i, j), &b) in &self.entries {
            let inner = outer.entry(i.to_string()).or_insert_with(|| Value::Object(Map::new()));
            inner.as_object_mut().expect("object").insert(j.to_string(), Value::from(b));
        }
        Value::Object(outer)
    }

    /// Macaulay-style grid: columns are homological degrees, rows are `j - i`.
    pub fn to_text(&self) -> String {
        let Some(top) = self.projective_dimension() else {
            return "0\n".into();
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).collect();
            r.sort();
            r.dedup();
            r
        };
        let lo = rows[0];
        let hi = *rows.last().expect("nonempty");
        let ranks = self.ranks();
        let width = ranks.iter().map(|b| b.to_string().len()).max().unwrap_or(1).max(top.to_string().len());
        let label_w = (hi.to_string().len() + 1).max("total:".len());
        let mut s = String::new();
        let _ = write!(s, "{:>label_w$}", "");
        for i in 0..=top {
            let _ = write!(s, " {:>width$}", i);
        }
        s.push('\n');
        let _ = write!(s, "{:>label_w$}", "total:");
        for b in &ranks {
            let _ = write!(s, " {:>width$}", b);
        }
        s.push('\n');
        for row in lo..=hi {
            let _ = write!(s, "{:>label_w$}", format!("{row}:"));
            for i in 0..=top {
                let j = row + i as i64;
                let b = if j >= 0 { self.get(i, j as u32) } else { 0 };
                let cell = if b == 0 { ".".to_string() } else { b.to_string() };
                let _ = write!(s, " {:>width$}", cell);
            }
            s.push('\n');
        }
        s
    }
}

/// `beta_{i,b}` for multidegrees `b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiBetti {
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl MultiBetti {
    pub fn add(&mut self, i: usize, b: Monomial, count: usize) {
        if count > 0 {
            *self.entries.entry((i, b)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.entries
    }

    pub fn graded(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for ((i, b), &c) in &self.entries {
            t.add(*i, b.degree(), c);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_and_json() {
        let t = BettiTable::new([((0, 2), 4), ((1, 3), 4), ((2, 4), 1)]);
        assert_eq!(t.ranks(), vec![4, 4, 1]);
        assert!(t.is_linear());
        assert_eq!(t.to_json().to_string(), r#"{"0":{"2":4},"1":{"3":4},"2":{"4":1}}"#);
        assert_eq!(t.to_text(), "       0 1 2\ntotal: 4 4 1\n    2: 4 4 1\n");
        let u = BettiTable::new([((0, 2), 3), ((1, 3), 2), ((1, 4), 1)]);
        assert!(!u.is_linear());
        assert_eq!(u.to_text(), "       0 1\ntotal: 3 3\n    2: 3 2\n    3: . 1\n");
    }
}
