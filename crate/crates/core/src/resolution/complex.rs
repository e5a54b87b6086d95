//! Multigraded free complexes with sparse monomial-coefficient differentials.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::betti::{BettiTable, MultiBetti};
use crate::monomial::{Monomial, Variables};

pub type Coeff = BigRational;

/// What a basis element stands for.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    /// Eliahou-Kervaire symbol `[m, alpha]`, `alpha` squarefree.
    Ek { m: Monomial, alpha: Monomial },
    /// `[m, alpha y^k]` in a Y-Borel resolution.
    YPower { m: Monomial, alpha: Monomial, k: u32 },
    /// A subset of the generators (by index) in a Taylor complex.
    Taylor(Vec<usize>),
    /// `m` times a squarefree `w` in a linear-quotient mapping cone.
    Koszul { m: Monomial, w: Monomial },
    /// A symbol of a mapping-cone summand: `G`, `H` or `K`.
    Part(char, Box<Label>),
}

impl Label {
    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayLabel<'a> {
        DisplayLabel { label: self, vars }
    }
}

pub struct DisplayLabel<'a> {
    label: &'a Label,
    vars: &'a Variables,
}

impl fmt::Display for DisplayLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.vars;
        match self.label {
            Label::Ek { m, alpha } => write!(f, "[{}, {}]", m.display(v), alpha.display(v)),
            Label::YPower { m, alpha, k } => {
                let y = alpha.nvars().saturating_sub(2);
                let ext = alpha.mul(&Monomial::var_power(alpha.nvars(), y, *k));
                write!(f, "[{}, {}]", m.display(v), ext.display(v))
            }
            Label::Taylor(s) => {
                let idx: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                write!(f, "T{{{}}}", idx.join(","))
            }
            Label::Koszul { m, w } => write!(f, "{}*e[{}]", m.display(v), w.display(v)),
            Label::Part(tag, inner) => write!(f, "{tag}:{}", inner.display(v)),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisSymbol {
    pub label: Label,
    pub multidegree: Monomial,
}

impl BasisSymbol {
    pub fn new(label: Label, multidegree: Monomial) -> Self {
        Self { label, multidegree }
    }

    pub fn degree(&self) -> u32 {
        self.multidegree.degree()
    }
}

/// One nonzero entry of a differential: `d(col) = ... + coef * mono * row + ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub coef: Coeff,
    pub mono: Monomial,
}

/// Levels `F_0, F_1, ...` of basis symbols and differentials `d_i: F_i -> F_{i-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeComplex {
    nvars: usize,
    levels: Vec<Vec<BasisSymbol>>,
    // diffs[i] is d_i keyed by (col, row); diffs[0] is always empty.
    diffs: Vec<BTreeMap<(usize, usize), (Coeff, Monomial)>>,
}

impl FreeComplex {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, levels: Vec::new(), diffs: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of levels, including empty trailing ones.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(Vec::is_empty)
    }

    pub fn levels(&self) -> &[Vec<BasisSymbol>] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &[BasisSymbol] {
        self.levels.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Make sure levels `0..=i` exist.
    pub fn ensure_level(&mut self, i: usize) {
        while self.levels.len() <= i {
            self.levels.push(Vec::new());
            self.diffs.push(BTreeMap::new());
        }
    }

    /// Append a symbol at level `i`, returning its index there.
    pub fn push_symbol(&mut self, i: usize, sym: BasisSymbol) -> usize {
        self.ensure_level(i);
        self.levels[i].push(sym);
        self.levels[i].len() - 1
    }

    /// Add `coef` to the entry of `d_i` at `(row, col)`; the monomial is forced
    /// by homogeneity. Panics if `row`'s multidegree does not divide `col`'s.
    pub fn add_entry(&mut self, i: usize, row: usize, col: usize, coef: Coeff) {
        if coef.is_zero() {
            return;
        }
        let mono = self.levels[i][col]
            .multidegree
            .div(&self.levels[i - 1][row].multidegree)
            .expect("differential entries are homogeneous");
        self.insert_raw(i, row, col, coef, mono);
    }

    /// Add an entry with an explicit monomial. Used to build deliberately
    /// broken complexes; [`super::verify`] checks homogeneity.
    pub fn insert_raw(&mut self, i: usize, row: usize, col: usize, coef: Coeff, mono: Monomial) {
        let slot = self.diffs[i].entry((col, row));
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert((coef, mono));
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let (c, m) = o.get_mut();
                if *m == mono {
                    *c += coef;
                    if c.is_zero() {
                        o.remove();
                    }
                } else {
                    // Two different monomials in one slot cannot be merged; keep
                    // the later one so the verifier sees an inhomogeneous entry.
                    *c = coef;
                    *m = mono;
                }
            }
        }
    }

    /// Replace the coefficient of an existing entry.
    pub fn set_coefficient(&mut self, i: usize, row: usize, col: usize, coef: Coeff) {
        if let Some(e) = self.diffs[i].get_mut(&(col, row)) {
            e.0 = coef;
        }
    }

    pub fn entries(&self, i: usize) -> Vec<Entry> {
        self.diffs.get(i).map_or_else(Vec::new, |d| {
            d.iter()
                .map(|(&(col, row), (coef, mono))| Entry { row, col, coef: coef.clone(), mono: mono.clone() })
                .collect()
        })
    }

    /// `d_i(col)` as `(row, coef, mono)` triples.
    pub fn column(&self, i: usize, col: usize) -> impl Iterator<Item = (usize, &Coeff, &Monomial)> {
        self.diffs
            .get(i)
            .into_iter()
            .flat_map(move |d| d.range((col, 0)..(col + 1, 0)))
            .map(|(&(_, row), (c, m))| (row, c, m))
    }

    pub fn entry_count(&self) -> usize {
        self.diffs.iter().map(BTreeMap::len).sum()
    }

    /// Entries whose monomial is 1, which would make the complex non-minimal.
    pub fn unit_entries(&self) -> Vec<(usize, Entry)> {
        (1..self.levels.len())
            .flat_map(|i| self.entries(i).into_iter().map(move |e| (i, e)))
            .filter(|(_, e)| e.mono.is_one())
            .collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.unit_entries().is_empty()
    }

    /// Remove empty top levels.
    pub fn trim(&mut self) {
        while self.levels.last().is_some_and(Vec::is_empty) {
            self.levels.pop();
            self.diffs.pop();
        }
    }

    /// The subcomplex of symbols of total degree at most `degree`.
    /// Differentials never raise degree, so this is closed under `d`.
    pub fn truncate_degree(&self, degree: u32) -> FreeComplex {
        self.restrict(|s| s.degree() <= degree)
    }

    /// Keep the symbols satisfying `keep`, dropping entries to or from the
    /// others. Only a subcomplex if the kept set is closed under `d`.
    pub fn restrict(&self, keep: impl Fn(&BasisSymbol) -> bool) -> FreeComplex {
        let mut out = FreeComplex::new(self.nvars);
        let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
        for (i, level) in self.levels.iter().enumerate() {
            out.ensure_level(i);
            let map = level
                .iter()
                .map(|s| keep(s).then(|| out.push_symbol(i, s.clone())))
                .collect();
            maps.push(map);
        }
        for i in 1..self.levels.len() {
            for (&(col, row), (c, m)) in &self.diffs[i] {
                if let (Some(nc), Some(nr)) = (maps[i][col], maps[i - 1][row]) {
                    out.insert_raw(i, nr, nc, c.clone(), m.clone());
                }
            }
        }
        out.trim();
        out
    }

    pub fn betti(&self) -> BettiTable {
        self.multigraded_betti().graded()
    }

    pub fn multigraded_betti(&self) -> MultiBetti {
        let mut mb = MultiBetti::default();
        for (i, level) in self.levels.iter().enumerate() {
            for s in level {
                mb.add(i, s.multidegree.clone(), 1);
            }
        }
        mb
    }

    /// Symbols and sparse differential triples.
    pub fn to_json(&self, vars: &Variables) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .map(|lvl| {
                Value::Array(
                    lvl.iter()
                        .map(|s| {
                            json!({
                                "label": s.label.display(vars).to_string(),
                                "multidegree": s.multidegree.display(vars).to_string(),
                            })
                        })
                        .collect(),
                )
            })
            .collect();
        let diffs: Vec<Value> = (1..self.levels.len())
            .map(|i| {
                Value::Array(
                    self.entries(i)
                        .iter()
                        .map(|e| {
                            json!([e.row, e.col, format!("{}", e.coef), e.mono.display(vars).to_string()])
                        })
                        .collect(),
                )
            })
            .collect();
        json!({ "levels": levels, "differentials": diffs })
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayComplex<'a> {
        DisplayComplex { cx: self, vars }
    }
}

pub struct DisplayComplex<'a> {
    cx: &'a FreeComplex,
    vars: &'a Variables,
}

impl fmt::Display for DisplayComplex<'_> {
    /// One line per symbol with its differential, e.g.
    /// `F1 [b^2, a] -> b*[a*b, 1] - a*[b^2, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.cx.levels.iter().enumerate() {
            for (col, s) in level.iter().enumerate() {
                write!(f, "F{i} {}", s.label.display(self.vars))?;
                if i > 0 {
                    let terms: Vec<String> = self
                        .cx
                        .column(i, col)
                        .map(|(row, c, m)| {
                            let target = self.cx.levels[i - 1][row].label.display(self.vars).to_string();
                            let coef = if c.is_one() {
                                String::new()
                            } else if *c == -Coeff::one() {
                                "-".into()
                            } else {
                                format!("{c}*")
                            };
                            if m.is_one() {
                                format!("{coef}{target}")
                            } else {
                                format!("{coef}{}*{target}", m.display(self.vars))
                            }
                        })
                        .collect();
                    let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                    write!(f, " -> {}", body.replace("+ -", "- "))?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
