//! Multigraded Betti numbers from upper Koszul simplicial complexes.
//!
//! `beta_{i,b}(I) = dim H~_{i-1}(K^b)` where `K^b` is the complex of
//! squarefree `w` dividing `b` with `x^(b-w)` in `I`. This is independent of
//! every resolution construction and serves as their oracle.

use std::collections::BTreeSet;

use super::betti::MultiBetti;
use super::linalg::rank_i64;
use crate::ideal::{MembershipIndex, MonomialIdeal};
use crate::monomial::Monomial;

/// Lcms of nonempty subsets of the generators, restricted to degree `<= bound`.
/// Betti numbers vanish off this set.
pub fn lcm_lattice(ideal: &MonomialIdeal, bound: u32) -> BTreeSet<Monomial> {
    let mut set: BTreeSet<Monomial> =
        ideal.generators().iter().filter(|g| g.degree() <= bound).cloned().collect();
    let gens: Vec<Monomial> = set.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in &gens {
                let l = f.lcm(g);
                if l.degree() <= bound && set.insert(l.clone()) {
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    set
}

/// Reduced Betti numbers of the upper Koszul complex at `b`: entry `i` is
/// `dim H~_{i-1}`.
pub fn koszul_homology_at(ideal: &MonomialIdeal, b: &Monomial) -> Vec<usize> {
    let index = MembershipIndex::new(ideal);
    upper_koszul_homology(&index, b)
}

fn upper_koszul_homology(index: &MembershipIndex<'_>, b: &Monomial) -> Vec<usize> {
    let n = b.nvars();
    let support: Vec<usize> = b.support_vars().collect();
    let s = support.len();
    // faces[k] holds faces with k vertices, as masks over `support` positions.
    let mut faces: Vec<Vec<u64>> = vec![Vec::new(); s + 1];
    for mask in 0u64..(1u64 << s) {
        let mut w = vec![0u32; n];
        for (p, &v) in support.iter().enumerate() {
            if (mask >> p) & 1 == 1 {
                w[v] = 1;
            }
        }
        let rest = b.div(&Monomial::new(w)).expect("w divides b");
        if index.contains(&rest) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    // boundary[k]: faces with k vertices -> faces with k-1 vertices.
    let mut ranks = vec![0usize; s + 2];
    for k in 1..=s {
        if faces[k].is_empty() || faces[k - 1].is_empty() {
            continue;
        }
        let pos: std::collections::HashMap<u64, usize> =
            faces[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut rows = vec![vec![0i64; faces[k].len()]; faces[k - 1].len()];
        for (c, &f) in faces[k].iter().enumerate() {
            let mut sign = 1i64;
            for p in 0..s {
                if (f >> p) & 1 == 1 {
                    let r = pos[&(f & !(1 << p))];
                    rows[r][c] = sign;
                    sign = -sign;
                }
            }
        }
        ranks[k] = rank_i64(&rows);
    }
    (0..=s)
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Multigraded Betti numbers of `ideal` (as a module) in degrees `<= bound`.
pub fn koszul_betti(ideal: &MonomialIdeal, bound: u32) -> MultiBetti {
    let index = MembershipIndex::new(ideal);
    let mut out = MultiBetti::default();
    for b in lcm_lattice(ideal, bound) {
        for (i, dim) in upper_koszul_homology(&index, &b).into_iter().enumerate() {
            out.add(i, b.clone(), dim);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::tests::{ideal, mono};

    #[test]
    fn quadric_example() {
        let i = ideal(3, &["aa", "ab", "ac", "bc"]);
        let mb = koszul_betti(&i, 10);
        assert_eq!(mb.get(1, &mono("abc", 3)), 2);
        assert_eq!(mb.get(1, &mono("aab", 3)), 1);
        assert_eq!(mb.get(1, &mono("aac", 3)), 1);
        assert_eq!(mb.get(2, &mono("aabc", 3)), 1);
        assert_eq!(mb.graded().ranks(), vec![4, 4, 1]);
    }

    #[test]
    fn small_cases() {
        let t = koszul_betti(&ideal(2, &["a", "b"]), 4);
        assert_eq!(t.get(1, &mono("ab", 2)), 1);
        assert_eq!(t.graded().ranks(), vec![2, 1]);
        assert_eq!(koszul_betti(&ideal(3, &["abbc"]), 6).graded().ranks(), vec![1]);
        assert_eq!(koszul_betti(&ideal(3, &["a", "b", "c"]), 3).graded().ranks(), vec![3, 3, 1]);
        assert_eq!(koszul_betti(&ideal(2, &["aa", "ab", "bb"]), 4).graded().ranks(), vec![3, 2]);
    }
}
