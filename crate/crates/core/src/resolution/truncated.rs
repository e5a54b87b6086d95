//! Degree-truncated mapping-cone complexes for arbitrary Q-Borel ideals.
//!
//! `I = Q(m) + J_m` with `Q(m) ∩ J_m = sum_t Q(m) ∩ Q(t)`, so a complex for
//! `I` is the cone over complexes for the three pieces. Recursion works on
//! formal lists of Q-generators, which keeps repeated and redundant
//! generators apart (this is what makes the antichain case the Taylor
//! complex). Everything above degree `D = d + n - 1` is discarded; the
//! result is exact in every internal degree `<= D`, hence in every
//! bidegree with `j - i <= d`.

use super::complex::FreeComplex;
use super::cone::{cancel_units, mapping_cone};
use super::lq::{lq_resolution, strip_tags, GeneratorOrder};
use crate::borel::QBorelIdeal;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poset::Poset;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TruncatedOptions {
    /// Cancel unit entries after every cone.
    pub cancel: bool,
    /// Maximum number of recursive calls.
    pub node_limit: usize,
}

impl Default for TruncatedOptions {
    fn default() -> Self {
        Self { cancel: false, node_limit: 20_000 }
    }
}

/// A complex `F` with `F_0` mapping onto `I` in degrees `<= d` and
/// `H_i(F)_j = 0` whenever `j - i <= d`.
pub fn truncated_resolution(poset: &Poset, ideal: &QBorelIdeal, d: u32, opts: TruncatedOptions) -> Result<FreeComplex> {
    let gens = ideal.q_generators();
    let min = gens.iter().map(Monomial::degree).min().ok_or(Error::ZeroIdeal)?;
    if d < min {
        return Err(Error::HypothesesViolated(format!(
            "degree bound {d} is below the smallest Q-generator degree {min}"
        )));
    }
    let top = d + poset.len() as u32 - 1;
    let mut calls = 0;
    let cx = rec(poset, gens.to_vec(), top, opts, &mut calls)?;
    Ok(strip_tags(&cx))
}

fn principal(poset: &Poset, m: &Monomial, top: u32) -> Result<FreeComplex> {
    let q = QBorelIdeal::principal(poset, m)?;
    Ok(lq_resolution(q.expansion(), GeneratorOrder::AscendingRevlex)?.truncate_degree(top))
}

fn rec(poset: &Poset, gens: Vec<Monomial>, top: u32, opts: TruncatedOptions, calls: &mut usize) -> Result<FreeComplex> {
    *calls += 1;
    if *calls > opts.node_limit {
        return Err(Error::NodeLimitExceeded(opts.node_limit));
    }
    let mut gens: Vec<Monomial> = gens.into_iter().filter(|g| g.degree() <= top).collect();
    let n = poset.len();
    if gens.is_empty() {
        return Ok(FreeComplex::new(n));
    }
    if gens.len() == 1 {
        return principal(poset, &gens[0], top);
    }
    let pick = (0..gens.len()).min_by_key(|&i| gens[i].degree()).expect("nonempty");
    let m = gens.remove(pick);
    let qm = QBorelIdeal::principal(poset, &m)?;
    let mut meet = Vec::new();
    for t in &gens {
        let qt = QBorelIdeal::principal(poset, t)?;
        meet.extend(qm.intersect(&qt)?.q_generators().iter().cloned());
    }
    let g = principal(poset, &m, top)?;
    let h = rec(poset, gens, top, opts, calls)?;
    let k = rec(poset, meet, top, opts, calls)?;
    let mut f = mapping_cone(&g, &h, &k)?.truncate_degree(top);
    if opts.cancel {
        f = cancel_units(&f);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::tests::{ideal, mono};
    use crate::resolution::ek::ek_resolution;
    use crate::resolution::taylor::taylor_resolution;
    use crate::resolution::verify::{verify_complex, VerifyMode};

    #[test]
    fn antichain_gives_taylor() {
        let anti = Poset::antichain(2);
        let i = QBorelIdeal::closure(&anti, &[mono("a", 2), mono("b", 2)]).unwrap();
        let t = truncated_resolution(&anti, &i, 2, TruncatedOptions::default()).unwrap();
        assert_eq!(t.ranks(), taylor_resolution(i.expansion()).unwrap().ranks());
        verify_complex(&t, i.expansion(), VerifyMode::Band { band: 2 }).unwrap();
    }

    #[test]
    fn chain_with_cancellation_gives_ek() {
        let chain = Poset::chain(2);
        let i = QBorelIdeal::from_ideal(&chain, ideal(2, &["aa", "ab", "bb"])).unwrap();
        let opts = TruncatedOptions { cancel: true, ..Default::default() };
        let t = truncated_resolution(&chain, &i, 2, opts).unwrap();
        assert_eq!(t.betti(), ek_resolution(i.expansion()).unwrap().betti());
        assert_eq!(t.ranks(), vec![3, 2]);
    }

    #[test]
    fn principal_and_band() {
        let y = Poset::y_poset(1);
        let q = QBorelIdeal::principal(&y, &mono("bc", 3)).unwrap();
        let t = truncated_resolution(&y, &q, 2, TruncatedOptions::default()).unwrap();
        assert_eq!(t.ranks(), vec![4, 4, 1]);

        // Q(b, c) on the vee: the syzygy of a and bc sits in degree 2.
        let vee = Poset::new(3, [(0, 1), (0, 2)]).unwrap();
        let i = QBorelIdeal::closure(&vee, &[mono("b", 3), mono("c", 3)]).unwrap();
        let t = truncated_resolution(&vee, &i, 1, TruncatedOptions::default()).unwrap();
        verify_complex(&t, i.expansion(), VerifyMode::Band { band: 1 }).unwrap();
        let opts = TruncatedOptions { cancel: true, ..Default::default() };
        let full = truncated_resolution(&vee, &i, 3, opts).unwrap();
        verify_complex(&full, i.expansion(), VerifyMode::Exactness { bound: 5 }).unwrap();
        assert_eq!(full.ranks(), vec![3, 3, 1]);
    }
}
