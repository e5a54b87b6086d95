//! The Taylor resolution.

use super::complex::{BasisSymbol, FreeComplex, Label};
use super::linalg::int;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Generator counts above this are refused: the complex has `2^r - 1` symbols.
pub const TAYLOR_MAX_GENERATORS: usize = 16;

/// Level `i` is spanned by the `(i+1)`-subsets of the minimal generators,
/// with multidegree their lcm.
pub fn taylor_resolution(ideal: &MonomialIdeal) -> Result<FreeComplex> {
    let gens = ideal.generators();
    let r = gens.len();
    if r > TAYLOR_MAX_GENERATORS {
        return Err(Error::TooLarge(format!("Taylor complex on {r} generators")));
    }
    let mut cx = FreeComplex::new(ideal.nvars());
    if r == 0 {
        return Ok(cx);
    }
    let mut subsets: Vec<u32> = (1u32..(1 << r)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
    let mut index = vec![usize::MAX; 1 << r];
    for &s in &subsets {
        let members: Vec<usize> = (0..r).filter(|k| (s >> k) & 1 == 1).collect();
        let lcm = members.iter().fold(Monomial::one(ideal.nvars()), |acc, &k| acc.lcm(&gens[k]));
        let level = members.len() - 1;
        index[s as usize] = cx.push_symbol(level, BasisSymbol::new(Label::Taylor(members), lcm));
    }
    for &s in &subsets {
        let level = s.count_ones() as usize - 1;
        if level == 0 {
            continue;
        }
        let mut sign = 1;
        for k in 0..r {
            if (s >> k) & 1 == 1 {
                let face = s & !(1 << k);
                cx.add_entry(level, index[face as usize], index[s as usize], int(sign));
                sign = -sign;
            }
        }
    }
    Ok(cx)
}
