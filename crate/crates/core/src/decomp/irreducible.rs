//! Decompositions into Q-irreducible ideals and into irreducible ideals.
//!
//! A Q-Borel ideal is Q-irreducible when its Q-generators are pure powers of
//! variables. Such an ideal is an explicit finite intersection of ideals
//! `(x_1^{f_1}, ..., x_n^{f_n})`, so splitting a Q-Borel ideal into
//! Q-irreducible pieces yields an irreducible decomposition.

use std::collections::BTreeSet;
use std::fmt;

use crate::borel::{is_q_borel, max_stabilizing_poset, min_q_generators, QBorelIdeal};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Variables};
use crate::poset::Poset;

/// Default cap on the number of nodes in a splitting tree.
pub const DEFAULT_SPLIT_LIMIT: usize = 100_000;

/// An exponent in `N ∪ {∞}`; `x^∞` stands for zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ExtNat {
    Fin(u32),
    Inf,
}

impl ExtNat {
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Fin(e) => Some(e),
            ExtNat::Inf => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(e) => write!(f, "{e}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

/// The irreducible ideal `(x_i^{f_i} : f_i < ∞)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    exps: Vec<ExtNat>,
}

impl IrreducibleComponent {
    pub fn new(exps: Vec<ExtNat>) -> Result<Self> {
        if exps.iter().all(|e| !e.is_finite()) {
            return Err(Error::AllInfinite);
        }
        Ok(Self { exps })
    }

    pub fn exps(&self) -> &[ExtNat] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.exps
            .iter()
            .enumerate()
            .any(|(i, e)| e.finite().is_some_and(|f| m.exp(i) >= f))
    }

    /// `self ⊆ other` iff every finite exponent of `other` is matched by a
    /// finite exponent of `self` at least as small.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| match (a, b) {
            (ExtNat::Inf, _) => true,
            (ExtNat::Fin(_), ExtNat::Inf) => false,
            (ExtNat::Fin(x), ExtNat::Fin(y)) => x >= y,
        })
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.exps.len();
        MonomialIdeal::new(
            n,
            self.exps
                .iter()
                .enumerate()
                .filter_map(|(i, e)| e.finite().map(|f| Monomial::var_power(n, i, f))),
        )
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> DisplayComponent<'a> {
        DisplayComponent { comp: self, vars }
    }
}

pub struct DisplayComponent<'a> {
    comp: &'a IrreducibleComponent,
    vars: &'a Variables,
}

impl fmt::Display for DisplayComponent<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for (i, e) in self.comp.exps.iter().enumerate() {
            if let ExtNat::Fin(k) = e {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{}", self.vars.name(i))?;
                if *k != 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        write!(f, ")")
    }
}

/// A Q-irreducible ideal `Q(x_1^{e_1}, ..., x_n^{e_n})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QIrreducible {
    pub poset: Poset,
    pub exps: Vec<ExtNat>,
}

impl QIrreducible {
    /// Read off the pure-power Q-generators of `ideal`, if they all are.
    pub fn from_q_borel(ideal: &QBorelIdeal) -> Option<Self> {
        let n = ideal.nvars();
        let mut exps = vec![ExtNat::Inf; n];
        for g in ideal.q_generators() {
            let (v, e) = g.pure_power()?;
            exps[v] = ExtNat::Fin(e);
        }
        Some(Self { poset: ideal.poset().clone(), exps })
    }

    pub fn closure(&self) -> Result<QBorelIdeal> {
        let n = self.exps.len();
        let gens: Vec<Monomial> = self
            .exps
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.finite().map(|f| Monomial::var_power(n, i, f)))
            .collect();
        QBorelIdeal::closure(&self.poset, &gens)
    }

    pub fn components(&self) -> Result<Vec<IrreducibleComponent>> {
        q_irreducible_expand(&self.poset, &self.exps)
    }
}

/// All componentwise-maximal `f` with `f_i >= 1` such that (i) `f_i` is
/// finite whenever `x_i <= x_k` for some finite `e_k`, and (ii) for every `k`,
/// `sum_{x_i <= x_k} (f_i - 1) <= e_k - 1`. Their intersection is
/// `Q(x_1^{e_1}, ..., x_n^{e_n})`.
///
/// An empty result means some `e_k = 0`, i.e. the unit ideal.
pub fn q_irreducible_expand(poset: &Poset, e: &[ExtNat]) -> Result<Vec<IrreducibleComponent>> {
    let n = poset.len();
    if e.len() != n {
        return Err(Error::RingMismatch { expected: n, found: e.len() });
    }
    let finite: Vec<(usize, u32)> = (0..n).filter_map(|k| e[k].finite().map(|f| (k, f))).collect();
    if finite.is_empty() {
        return Err(Error::AllInfinite);
    }
    if finite.iter().any(|&(_, f)| f == 0) {
        return Ok(Vec::new());
    }
    let bounded = finite.iter().fold(0u64, |acc, &(k, _)| acc | poset.below_mask(k));
    let bvars: Vec<usize> = (0..n).filter(|i| (bounded >> i) & 1 == 1).collect();
    // Constraint k: sum of g_i over i <= k is at most e_k - 1.
    let cons: Vec<(u64, u32)> = finite.iter().map(|&(k, f)| (poset.below_mask(k), f - 1)).collect();

    let mut out = Vec::new();
    let mut g = vec![0u32; n];
    let mut used = vec![0u32; cons.len()];
    enumerate_maximal(&bvars, 0, &cons, &mut g, &mut used, &mut |g| {
        let exps = (0..n)
            .map(|i| if (bounded >> i) & 1 == 1 { ExtNat::Fin(g[i] + 1) } else { ExtNat::Inf })
            .collect();
        out.push(IrreducibleComponent { exps });
    });
    out.sort();
    Ok(out)
}

fn enumerate_maximal(
    vars: &[usize],
    pos: usize,
    cons: &[(u64, u32)],
    g: &mut [u32],
    used: &mut [u32],
    emit: &mut impl FnMut(&[u32]),
) {
    if pos == vars.len() {
        // Maximal iff every variable sits in some tight constraint.
        let maximal = vars.iter().all(|&i| {
            cons.iter().zip(used.iter()).any(|(&(mask, cap), &u)| (mask >> i) & 1 == 1 && u == cap)
        });
        if maximal {
            emit(g);
        }
        return;
    }
    let i = vars[pos];
    let room = cons
        .iter()
        .zip(used.iter())
        .filter(|((mask, _), _)| (mask >> i) & 1 == 1)
        .map(|((_, cap), &u)| cap - u)
        .min()
        .expect("bounded variables lie below a finite exponent");
    for v in (0..=room).rev() {
        g[i] = v;
        for (k, &(mask, _)) in cons.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                used[k] += v;
            }
        }
        enumerate_maximal(vars, pos + 1, cons, g, used, emit);
        for (k, &(mask, _)) in cons.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                used[k] -= v;
            }
        }
    }
    g[i] = 0;
}

/// Split `m = z^{e_z} mu nu` with `mu` the part strictly below `z` and `nu` the
/// part incomparable to `z`, returning `(z^{e_z + deg mu} nu, mu nu)`; then
/// `Q(m) = Q(first) ∩ Q(second)`. `z` must be Q-maximal in the support of `m`.
pub fn principal_split_at(poset: &Poset, m: &Monomial, z: usize) -> Result<(Monomial, Monomial)> {
    if m.exp(z) == 0 || m.support_vars().any(|x| poset.lt(z, x)) {
        return Err(Error::HypothesesViolated(format!(
            "x{} is not maximal among the variables of the monomial",
            z + 1
        )));
    }
    let n = m.nvars();
    let mut mu = vec![0; n];
    let mut nu = vec![0; n];
    for x in m.support_vars().filter(|&x| x != z) {
        if poset.lt(x, z) {
            mu[x] = m.exp(x);
        } else {
            nu[x] = m.exp(x);
        }
    }
    let (mu, nu) = (Monomial::new(mu), Monomial::new(nu));
    if mu.is_one() {
        return Err(Error::NoStrictLowerPart);
    }
    let first = Monomial::var_power(n, z, m.exp(z) + mu.degree()).mul(&nu);
    Ok((first, mu.mul(&nu)))
}

/// [`principal_split_at`] with `z` the first Q-maximal variable of `m` (by
/// index) that has something strictly below it in `m`.
pub fn principal_split(poset: &Poset, m: &Monomial) -> Result<(Monomial, Monomial)> {
    let candidates: Vec<usize> = m
        .support_vars()
        .filter(|&z| !m.support_vars().any(|x| poset.lt(z, x)))
        .collect();
    for z in candidates {
        match principal_split_at(poset, m, z) {
            Err(Error::NoStrictLowerPart) => continue,
            other => return other,
        }
    }
    Err(Error::NoStrictLowerPart)
}

/// Split a Q-Borel ideal into Q-irreducible ideals whose intersection is the
/// input. Leaves may carry a coarser poset than the input; see below.
///
/// At each node, `z` is Q-maximal among the variables of the non-pure-power
/// Q-generators (ties to the largest index) and `m1` is the first such
/// generator divisible by `z`. Writing `I = Q(rest) + Q(m1)`, distributivity
/// of the monomial-ideal lattice turns `Q(m1) = Q(z^{e+d} nu) ∩ Q(mu nu)` into
/// `I = (Q(rest) + Q(z^{e+d} nu)) ∩ (Q(rest) + Q(mu nu))`. When every
/// generator has trivial `mu` for every admissible `z`, the generator is split
/// as a plain monomial, `(z^e nu) = (z^e) ∩ (nu)`; the two pieces are Borel
/// only for the relations of Q that they still satisfy, and the recursion
/// continues under that coarser poset.
pub fn q_irreducible_decomposition(ideal: &QBorelIdeal, node_limit: usize) -> Result<Vec<QIrreducible>> {
    if ideal.expansion().is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut leaves = Vec::new();
    let mut stack = vec![ideal.clone()];
    let mut nodes = 0usize;
    while let Some(node) = stack.pop() {
        nodes += 1;
        if nodes > node_limit {
            return Err(Error::NodeLimitExceeded(node_limit));
        }
        if node.expansion().is_unit() {
            continue;
        }
        if let Some(leaf) = QIrreducible::from_q_borel(&node) {
            leaves.push(leaf);
            continue;
        }
        let (left, right) = split_node(&node)?;
        // Right first so the left branch is expanded first.
        stack.push(right);
        stack.push(left);
    }
    let total = leaves
        .iter()
        .map(|l| l.closure().map(QBorelIdeal::into_expansion))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .reduce(|a, b| a.intersect(&b))
        .unwrap_or_else(|| MonomialIdeal::unit(ideal.nvars()));
    if &total != ideal.expansion() {
        return Err(Error::CertificationFailed(
            "Q-irreducible leaves do not intersect to the input".into(),
        ));
    }
    Ok(leaves)
}

fn split_node(node: &QBorelIdeal) -> Result<(QBorelIdeal, QBorelIdeal)> {
    let poset = node.poset();
    let gens = node.q_generators();
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.pure_power().is_none()).collect();
    let vars_mask = mixed.iter().fold(0u64, |acc, g| acc | g.support());
    let maximal = poset.maximal_within(vars_mask);
    let z = *maximal.last().expect("a non-pure-power generator exists");
    let m1 = *mixed.iter().find(|g| g.exp(z) > 0).expect("z divides some generator");

    let rest = |skip: &Monomial| -> Vec<Monomial> { gens.iter().filter(|g| *g != skip).cloned().collect() };
    let with = |skip: &Monomial, extra: Monomial| -> Result<QBorelIdeal> {
        let mut g = rest(skip);
        g.push(extra);
        QBorelIdeal::closure(poset, &g)
    };

    // Preferred choice first, then any generator and any variable maximal in
    // its support that has a strictly lower part.
    let mut attempts: Vec<(&Monomial, usize)> = vec![(m1, z)];
    for g in &mixed {
        let mut zs = poset.maximal_within(g.support());
        zs.reverse();
        attempts.extend(zs.into_iter().map(|z| (*g, z)));
    }
    for (g, z) in attempts {
        if let Ok((hi, lo)) = principal_split_at(poset, g, z) {
            return Ok((with(g, hi)?, with(g, lo)?));
        }
    }

    // Plain monomial split of m1 = z^e * nu.
    let e = m1.exp(z);
    let n = node.nvars();
    let nu = m1.div(&Monomial::var_power(n, z, e)).expect("z^e divides m1");
    let others: Vec<Monomial> = node
        .expansion()
        .generators()
        .iter()
        .filter(|g| *g != m1)
        .cloned()
        .collect();
    let piece = |extra: Monomial| -> Result<QBorelIdeal> {
        let mut g = others.clone();
        g.push(extra);
        let ideal = MonomialIdeal::new(n, g);
        let coarse = common_refinement(poset, &max_stabilizing_poset(&ideal));
        debug_assert!(is_q_borel(&coarse, &ideal));
        let q_gens = min_q_generators(&coarse, &ideal)?;
        QBorelIdeal::closure(&coarse, &q_gens)
    };
    Ok((piece(Monomial::var_power(n, z, e))?, piece(nu)?))
}

/// The poset whose relations are those of both `a` and `b`.
fn common_refinement(a: &Poset, b: &Poset) -> Poset {
    let rel = a.relations().into_iter().filter(|&(i, j)| b.leq(i, j));
    Poset::new(a.len(), rel).expect("relations of a naturally labeled poset")
}

/// An irredundant irreducible decomposition of a Q-Borel ideal, obtained by
/// expanding every Q-irreducible leaf and discarding components that contain
/// another.
pub fn irreducible_decomposition(ideal: &QBorelIdeal) -> Result<Vec<IrreducibleComponent>> {
    let leaves = q_irreducible_decomposition(ideal, DEFAULT_SPLIT_LIMIT)?;
    let mut all = BTreeSet::new();
    for leaf in &leaves {
        all.extend(leaf.components()?);
    }
    let all: Vec<IrreducibleComponent> = all.into_iter().collect();
    Ok(all
        .iter()
        .filter(|c| !all.iter().any(|d| d != *c && d.is_subset_of(c)))
        .cloned()
        .collect())
}

/// For a Borel ideal `I = N + M` (N generated by the Borel generators
/// divisible by the last variable, all of degree `d`, and M by the rest):
/// `I = (Borel(x_n^d) + M) ∩ (M + (N : x_n^∞))`.
///
/// The Borel generators in N must share one degree. Otherwise the identity
/// fails: for `I = Borel(ac, b^2 c)` the right side contains `b^2`.
pub fn borel_irreducible_split(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let n = ideal.nvars();
    if n == 0 || ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let chain = Poset::chain(n);
    if !is_q_borel(&chain, ideal) {
        return Err(Error::NotBorel);
    }
    let last = n - 1;
    if ideal.generators().iter().any(|g| g.pure_power().is_some_and(|(v, _)| v == last)) {
        return Err(Error::PurePowerOfLastVariable);
    }
    let borel_gens = min_q_generators(&chain, ideal)?;
    let (n_gens, m_gens): (Vec<Monomial>, Vec<Monomial>) =
        borel_gens.into_iter().partition(|g| g.exp(last) > 0);
    let Some(d) = n_gens.iter().map(Monomial::degree).min() else {
        return Err(Error::LastVariableUnused);
    };
    if n_gens.iter().any(|g| g.degree() != d) {
        return Err(Error::HypothesesViolated(
            "Borel generators divisible by the last variable have different degrees".into(),
        ));
    }
    let big_m = QBorelIdeal::closure(&chain, &m_gens)?.into_expansion();
    let big_n = QBorelIdeal::closure(&chain, &n_gens)?.into_expansion();
    let power = MonomialIdeal::prime_power(n, chain.full_mask(), d);
    let left = power.sum(&big_m);
    let right = big_m.sum(&big_n.saturate_var(last));
    if &left.intersect(&right) != ideal {
        return Err(Error::CertificationFailed("split does not intersect to the ideal".into()));
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::tests::{ideal, mono};
    use crate::oracle::intersection_agrees;

    const I: ExtNat = ExtNat::Inf;
    fn f(k: u32) -> ExtNat {
        ExtNat::Fin(k)
    }

    fn vee() -> Poset {
        Poset::new(3, [(0, 1), (0, 2)]).unwrap()
    }

    fn intersect_components(n: usize, comps: &[IrreducibleComponent]) -> MonomialIdeal {
        comps
            .iter()
            .map(IrreducibleComponent::ideal)
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(|| MonomialIdeal::unit(n))
    }

    #[test]
    fn expand_examples() {
        let chain = Poset::chain(2);
        let comps = q_irreducible_expand(&chain, &[I, f(2)]).unwrap();
        let got: Vec<&[ExtNat]> = comps.iter().map(|c| c.exps()).collect();
        assert_eq!(got, vec![&[f(1), f(2)][..], &[f(2), f(1)][..]]);
        assert_eq!(intersect_components(2, &comps), ideal(2, &["aa", "ab", "bb"]));

        let anti = Poset::antichain(3);
        let comps = q_irreducible_expand(&anti, &[f(2), f(3), I]).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].exps(), &[f(2), f(3), I]);

        let comps = q_irreducible_expand(&chain, &[f(1), I]).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].exps(), &[f(1), I]);

        assert_eq!(q_irreducible_expand(&chain, &[I, I]), Err(Error::AllInfinite));
        assert!(q_irreducible_expand(&chain, &[f(0), f(2)]).unwrap().is_empty());
    }

    #[test]
    fn expansion_matches_closure_exhaustively() {
        for n in 1..=4 {
            for q in Poset::all_naturally_labeled(n) {
                for code in 1..(4u32.pow(n as u32)) {
                    // Exponents in {inf, 1, 2, 3}, at least one finite.
                    let e: Vec<ExtNat> = (0..n)
                        .map(|i| match (code / 4u32.pow(i as u32)) % 4 {
                            0 => I,
                            k => f(k),
                        })
                        .collect();
                    let leaf = QIrreducible { poset: q.clone(), exps: e };
                    let comps = leaf.components().unwrap();
                    assert_eq!(&intersect_components(n, &comps), leaf.closure().unwrap().expansion());
                }
            }
        }
    }

    #[test]
    fn principal_split_examples() {
        let q = vee();
        assert_eq!(principal_split(&q, &mono("ab", 3)).unwrap(), (mono("bb", 3), mono("a", 3)));
        assert_eq!(principal_split(&q, &mono("abc", 3)).unwrap(), (mono("bbc", 3), mono("ac", 3)));
        assert_eq!(principal_split_at(&q, &mono("abc", 3), 2).unwrap(), (mono("bcc", 3), mono("ab", 3)));
        assert_eq!(
            principal_split(&Poset::chain(2), &mono("ab", 2)).unwrap(),
            (mono("bb", 2), mono("a", 2))
        );
        assert_eq!(principal_split(&q, &mono("bc", 3)), Err(Error::NoStrictLowerPart));
        assert!(matches!(principal_split_at(&q, &mono("ab", 3), 0), Err(Error::HypothesesViolated(_))));
        for (m, q) in [("abc", vee()), ("ab", vee()), ("aabc", vee()), ("abbc", Poset::chain(3))] {
            let m = mono(m, 3);
            let (x, y) = principal_split(&q, &m).unwrap();
            let whole = QBorelIdeal::principal(&q, &m).unwrap();
            let parts = [x, y].map(|g| QBorelIdeal::principal(&q, &g).unwrap().into_expansion());
            assert_eq!(&parts[0].intersect(&parts[1]), whole.expansion());
        }
    }

    #[test]
    fn vee_decomposition() {
        let q = vee();
        let i = QBorelIdeal::principal(&q, &mono("ab", 3)).unwrap();
        let leaves = q_irreducible_decomposition(&i, DEFAULT_SPLIT_LIMIT).unwrap();
        let exps: Vec<Vec<ExtNat>> = leaves.iter().map(|l| l.exps.clone()).collect();
        assert_eq!(exps, vec![vec![I, f(2), I], vec![f(1), I, I]]);
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(&intersect_components(3, &comps), i.expansion());
    }

    #[test]
    fn antichain_matches_classical_splitting() {
        let q = Poset::antichain(3);
        let i = QBorelIdeal::closure(&q, &[mono("aab", 3), mono("bcc", 3), mono("ac", 3)]).unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        let vars = Variables::standard(3);
        let shown: Vec<String> = comps.iter().map(|c| c.display(&vars).to_string()).collect();
        // (a^2 b, a c, b c^2) = (a, b) ∩ (a, c^2) ∩ (a^2, c) ∩ (b, c), by hand.
        assert_eq!(shown, vec!["(a, b)", "(a, c^2)", "(a^2, c)", "(b, c)"]);
        assert!(intersection_agrees(
            i.expansion(),
            &comps.iter().map(IrreducibleComponent::ideal).collect::<Vec<_>>(),
            6
        ));
    }

    #[test]
    fn already_irreducible() {
        let q = Poset::chain(2);
        let i = QBorelIdeal::principal(&q, &mono("bb", 2)).unwrap();
        let leaves = q_irreducible_decomposition(&i, DEFAULT_SPLIT_LIMIT).unwrap();
        assert_eq!(leaves.len(), 1);
        assert_eq!(leaves[0].exps, vec![I, f(2)]);
    }

    #[test]
    fn borel_split_examples() {
        let i = ideal(2, &["aa", "ab"]);
        let (l, r) = borel_irreducible_split(&i).unwrap();
        assert_eq!(l, ideal(2, &["aa", "ab", "bb"]));
        assert_eq!(r, ideal(2, &["a"]));
        assert_eq!(l.intersect(&r), i);
        assert_eq!(borel_irreducible_split(&ideal(2, &["a", "bbb"])), Err(Error::PurePowerOfLastVariable));
        assert_eq!(borel_irreducible_split(&ideal(2, &["a"])), Err(Error::LastVariableUnused));
        assert_eq!(borel_irreducible_split(&ideal(2, &["b"])), Err(Error::NotBorel));
    }

    #[test]
    fn borel_split_needs_one_degree() {
        // Borel(ac, b^2 c): d = 2 and (I : c^inf) = (a, b^2), so b^2 would
        // land in the intersection.
        let i = ideal(3, &["aa", "ab", "ac", "bbb", "bbc"]);
        assert!(matches!(borel_irreducible_split(&i), Err(Error::HypothesesViolated(_))));
        let left = MonomialIdeal::prime_power(3, 0b111, 2);
        let right = i.saturate_var(2);
        assert!(left.intersect(&right).contains(&mono("bb", 3)));
    }

    #[test]
    fn borel_split_needs_no_pure_power() {
        // With b^3 present the formula overshoots, which is why it is rejected:
        // N = Borel(ab, b^3) = (a^2, ab, b^3), d = 2, so Borel(b^2) sits in
        // the left piece and (N : b^inf) is the unit ideal.
        let n_part = ideal(2, &["aa", "ab", "bbb"]);
        let left = MonomialIdeal::prime_power(2, 0b11, 2);
        let right = n_part.saturate_var(1);
        assert_ne!(left.intersect(&right), n_part);
    }
}
