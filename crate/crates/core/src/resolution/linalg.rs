//! Exact rank and linear solves over the rationals.
//!
//! Integer matrices go through fraction-free elimination in `i128` with
//! checked arithmetic and fall back to big rationals on overflow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::complex::Coeff;

/// Rank of a dense integer matrix.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_rank(&mut m) {
        Some(r) => r,
        None => rank_rational(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        ),
    }
}

/// Rank of a dense rational matrix.
pub fn rank(rows: Vec<Vec<Coeff>>) -> usize {
    if let Some(ints) = as_small_integers(&rows) {
        return rank_i64(&ints);
    }
    rank_rational(rows)
}

fn as_small_integers(rows: &[Vec<Coeff>]) -> Option<Vec<Vec<i64>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
                .collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination; `None` on overflow.
fn bareiss_rank(m: &mut [Vec<i128>]) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in rank + 1..nrows {
            let factor = m[r][col];
            for c in col..ncols {
                let v = m[r][c].checked_mul(pivot)?.checked_sub(m[rank][c].checked_mul(factor)?)?;
                m[r][c] = v / prev;
            }
            // Entries left of the pivot column are already zero below `rank`.
        }
        prev = pivot;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn rank_rational(mut m: Vec<Vec<Coeff>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for r in rank + 1..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..ncols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Some `x` with `a x = b`, or `None` if the system is inconsistent.
/// `a` is given by rows.
pub fn solve(a: &[Vec<Coeff>], b: &[Coeff]) -> Option<Vec<Coeff>> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Coeff>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for c in col..=ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=ncols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Coeff::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

pub fn int(x: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_i64(&[vec![1, 0, -1], vec![0, 1, -1], vec![1, -1, 0]]), 2);
        assert_eq!(rank_i64(&[]), 0);
        assert_eq!(rank_i64(&[vec![0, 0]]), 0);
        let big = i64::MAX / 2;
        assert_eq!(rank_i64(&[vec![big, big - 1], vec![big - 1, big]]), 2);
        assert_eq!(rank_i64(&[vec![big, big], vec![big, big]]), 1);
    }

    #[test]
    fn rational_rank_and_solve() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let a = vec![vec![half.clone(), int(1)], vec![int(1), int(2)]];
        assert_eq!(rank(a.clone()), 1);
        let x = solve(&a, &[int(1), int(2)]).unwrap();
        assert_eq!(&a[0][0] * &x[0] + &a[0][1] * &x[1], int(1));
        assert!(solve(&a, &[int(1), int(3)]).is_none());
    }

    #[test]
    fn bareiss_matches_rational_elimination() {
        let mut seed = 7u64;
        for _ in 0..200 {
            let rows: Vec<Vec<i64>> = (0..4)
                .map(|_| {
                    (0..5)
                        .map(|_| {
                            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            ((seed >> 33) % 5) as i64 - 2
                        })
                        .collect()
                })
                .collect();
            let rat = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            assert_eq!(rank_i64(&rows), rank_rational(rat));
        }
    }
}
