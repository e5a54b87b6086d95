//! Naturally labeled posets on the variables `x_1, ..., x_n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Variables;
use crate::prime::MonomialPrime;

/// A partial order on `{0, ..., n-1}` in which `i <_Q j` implies `i < j`.
///
/// Stored as the reflexive down-set of every element plus the cover relations
/// (the transitive reduction).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    below: Vec<u64>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Build a poset from strict relations `(i, j)` meaning `x_i < x_j`
    /// (0-based). The transitive closure is taken and covers recomputed.
    pub fn new(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVariables(n));
        }
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, j) in relations {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::VariableOutOfRange { index: idx, nvars: n });
                }
            }
            if i >= j {
                return Err(Error::NaturalLabeling { lower: i + 1, upper: j + 1 });
            }
            preds[j].push(i);
        }
        let mut below = vec![0u64; n];
        for j in 0..n {
            let mut mask = 1u64 << j;
            for &i in &preds[j] {
                mask |= below[i];
            }
            below[j] = mask;
        }
        for j in 0..n {
            for i in 0..j {
                if (below[j] >> i) & 1 == 1 && (below[i] >> j) & 1 == 1 {
                    return Err(Error::CyclicRelation(i + 1));
                }
            }
        }
        Ok(Self::from_below(below))
    }

    fn from_below(below: Vec<u64>) -> Self {
        let n = below.len();
        let mut covers = Vec::new();
        for j in 0..n {
            let strict = below[j] & !(1 << j);
            for i in 0..j {
                if (strict >> i) & 1 == 0 {
                    continue;
                }
                // i is covered by j unless some k strictly between them exists.
                let between = (i + 1..j).any(|k| (strict >> k) & 1 == 1 && (below[k] >> i) & 1 == 1);
                if !between {
                    covers.push((i, j));
                }
            }
        }
        Self { n, below, covers }
    }

    pub fn chain(n: usize) -> Self {
        Self::new(n, (1..n).map(|j| (j - 1, j))).expect("chain is naturally labeled")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_below((0..n).map(|j| 1u64 << j).collect())
    }

    /// The poset `x_1 < ... < x_t < y`, `x_t < z` on `t + 2` elements.
    pub fn y_poset(t: usize) -> Self {
        assert!(t >= 1, "Y poset needs t >= 1");
        let mut rel: Vec<(usize, usize)> = (1..=t).map(|j| (j - 1, j)).collect();
        rel.push((t - 1, t + 1));
        Self::new(t + 2, rel).expect("Y poset is naturally labeled")
    }

    /// Every naturally labeled poset on `n` elements, without repetition.
    pub fn all_naturally_labeled(n: usize) -> Vec<Poset> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        assert!(pairs.len() < 32, "too many elements to enumerate");
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for subset in 0u32..(1 << pairs.len()) {
            let rel = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| (subset >> k) & 1 == 1)
                .map(|(_, &p)| p);
            let q = Poset::new(n, rel).expect("pairs are naturally labeled");
            if seen.insert(q.below.clone()) {
                out.push(q);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        (self.below[j] >> i) & 1 == 1
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// All strict relations `(i, j)` with `i <_Q j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|j| (0..j).filter(move |&i| self.leq(i, j)).map(move |i| (i, j)))
            .collect()
    }

    /// Mask of `{i : x_i <= x_j}`.
    pub fn below_mask(&self, j: usize) -> u64 {
        self.below[j]
    }

    /// Union of the principal down-sets of the elements of `mask`.
    pub fn down_set(&self, mask: u64) -> MonomialPrime {
        MonomialPrime::from_mask(
            (0..self.n)
                .filter(|j| (mask >> j) & 1 == 1)
                .fold(0, |acc, j| acc | self.below[j]),
        )
    }

    pub fn principal_down_set(&self, j: usize) -> MonomialPrime {
        MonomialPrime::from_mask(self.below[j])
    }

    pub fn is_order_ideal(&self, mask: u64) -> bool {
        self.down_set(mask).mask() == mask
    }

    /// Whether the order ideal `mask` cannot be split into two disjoint
    /// nonempty order ideals. Computed with union-find over the covers inside it.
    pub fn is_connected_order_ideal(&self, mask: u64) -> Result<bool> {
        if !self.is_order_ideal(mask) {
            return Err(Error::NotOrderIdeal);
        }
        Ok(self.component_count_within(mask) == 1)
    }

    /// Number of connected components of the Hasse diagram restricted to `mask`.
    pub fn component_count_within(&self, mask: u64) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &(i, j) in &self.covers {
            if (mask >> i) & 1 == 1 && (mask >> j) & 1 == 1 {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
        (0..self.n)
            .filter(|&v| (mask >> v) & 1 == 1)
            .filter(|&v| find(&mut parent, v) == v)
            .count()
    }

    /// Connected components of the whole poset.
    pub fn connected_components(&self) -> usize {
        self.component_count_within(self.full_mask())
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Mask of the maximal elements.
    pub fn maximal_elements(&self) -> u64 {
        (0..self.n)
            .filter(|&i| (i + 1..self.n).all(|j| !self.leq(i, j)))
            .fold(0, |acc, i| acc | (1 << i))
    }

    /// Maximal elements of the subposet on `mask`.
    pub fn maximal_within(&self, mask: u64) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| (mask >> i) & 1 == 1)
            .filter(|&i| (i + 1..self.n).all(|j| (mask >> j) & 1 == 0 || !self.leq(i, j)))
            .collect()
    }

    /// Every order ideal, including the empty one.
    pub fn order_ideals(&self) -> Vec<u64> {
        fn rec(q: &Poset, j: usize, cur: u64, out: &mut Vec<u64>) {
            if j == q.n {
                out.push(cur);
                return;
            }
            rec(q, j + 1, cur, out);
            let preds = q.below[j] & !(1 << j);
            if preds & !cur == 0 {
                rec(q, j + 1, cur | (1 << j), out);
            }
        }
        let mut out = Vec::new();
        rec(self, 0, 0, &mut out);
        out
    }

    /// True if every relation of `other` is a relation of `self`.
    pub fn refines(&self, other: &Poset) -> bool {
        self.n == other.n && (0..self.n).all(|j| other.below[j] & !self.below[j] == 0)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|j| self.below[j].count_ones() as usize == j + 1)
    }

    pub fn is_antichain(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayPoset<'a> {
        DisplayPoset { poset: self, vars }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

pub struct DisplayPoset<'a> {
    poset: &'a Poset,
    vars: &'a Variables,
}

impl fmt::Display for DisplayPoset<'_> {
    /// `{ a < d; d < f }` with one entry per cover relation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &(i, j)) in self.poset.covers.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            write!(f, " {} < {}", self.vars.name(i), self.vars.name(j))?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// a<d, d<f, c<f, b<e, c<e on a..f.
    pub(crate) fn six_variable_poset() -> Poset {
        Poset::new(6, [(0, 3), (3, 5), (2, 5), (1, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn vee_and_antichain() {
        let vee = Poset::new(3, [(0, 1), (0, 2)]).unwrap();
        assert!(vee.lt(0, 1) && vee.lt(0, 2) && !vee.comparable(1, 2));
        assert_eq!(vee.covers(), &[(0, 1), (0, 2)]);
        let anti = Poset::new(3, []).unwrap();
        assert!(anti.is_antichain());
        assert_eq!(anti.connected_components(), 3);
    }

    #[test]
    fn natural_labeling_is_enforced() {
        assert_eq!(
            Poset::new(2, [(1, 0)]),
            Err(Error::NaturalLabeling { lower: 2, upper: 1 })
        );
        assert!(matches!(Poset::new(2, [(0, 5)]), Err(Error::VariableOutOfRange { .. })));
    }

    #[test]
    fn closure_and_reduction() {
        let q = Poset::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(q.covers(), &[(0, 1), (1, 2)]);
        assert!(q.is_chain());
        let again = Poset::new(3, q.relations()).unwrap();
        assert_eq!(again, q);
    }

    #[test]
    fn six_variable_poset_down_sets() {
        let q = six_variable_poset();
        let mask = |v: &[usize]| v.iter().fold(0u64, |a, &i| a | (1 << i));
        assert_eq!(q.down_set(mask(&[3])).mask(), mask(&[0, 3]));
        assert_eq!(q.down_set(mask(&[4])).mask(), mask(&[1, 2, 4]));
        assert_eq!(q.down_set(mask(&[5])).mask(), mask(&[0, 2, 3, 5]));
        assert_eq!(q.down_set(mask(&[3, 5])).mask(), mask(&[0, 2, 3, 5]));
        assert_eq!(q.down_set(mask(&[3, 4])).mask(), mask(&[0, 1, 2, 3, 4]));
        assert_eq!(q.down_set(mask(&[4, 5])).mask(), mask(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(q.down_set(0).mask(), 0);
    }

    #[test]
    fn six_variable_poset_connectivity() {
        let q = six_variable_poset();
        assert_eq!(q.is_connected_order_ideal(0b011111), Ok(false));
        assert_eq!(q.is_connected_order_ideal(0b111111), Ok(true));
        assert_eq!(q.is_connected_order_ideal(0b000001), Ok(true));
        assert_eq!(q.is_connected_order_ideal(0b001000), Err(Error::NotOrderIdeal));
    }

    #[test]
    fn hasse_connectivity_matches_disjoint_union_criterion() {
        // An order ideal is disconnected iff it is a disjoint union of two
        // nonempty order ideals; compare against that definition directly.
        for n in 1..=5 {
            for q in Poset::all_naturally_labeled(n) {
                let ideals = q.order_ideals();
                for &a in ideals.iter().filter(|&&a| a != 0) {
                    let splits = ideals.iter().any(|&b| {
                        b != 0 && b & a == b && b != a && q.is_order_ideal(a & !b)
                    });
                    assert_eq!(q.is_connected_order_ideal(a).unwrap(), !splits, "{q:?} {a:b}");
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // Natural partial orders on 1..n: 1, 2, 7, 40, 357.
        let counts: Vec<usize> = (1..=5).map(|n| Poset::all_naturally_labeled(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 40, 357]);
    }

    #[test]
    fn order_ideals_are_closed() {
        let q = six_variable_poset();
        for a in q.order_ideals() {
            assert!(q.is_order_ideal(a));
        }
        assert_eq!(Poset::chain(4).order_ideals().len(), 5);
        assert_eq!(Poset::antichain(3).order_ideals().len(), 8);
    }
}
