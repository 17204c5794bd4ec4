//! Exact matrix rank.
//!
//! Over the rationals the rank is computed by fraction-free elimination on
//! integer rows: each elimination step is a cross-multiplication followed by
//! division by the row content, so every intermediate row is an integer
//! multiple of a rational row operation and the rank is exact. Elimination runs
//! on `i64` with checked arithmetic first and restarts on `BigInt` if a value
//! would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
pub enum Coefficients {
    #[default]
    Rational,
    /// `Z/p` for a prime `p < 2^32`.
    Prime(u64),
}

impl Coefficients {
    pub fn prime(p: u64) -> Result<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p >= 1 << 32 {
            return Err(Error::InvalidParameter(format!("{p} is not a prime below 2^32")));
        }
        Ok(Coefficients::Prime(p))
    }
}

/// Rank of an integer matrix over the given field.
pub fn rank(rows: &[Vec<i64>], coefficients: Coefficients) -> usize {
    match coefficients {
        Coefficients::Rational => rank_rational(rows),
        Coefficients::Prime(p) => rank_mod_p(rows, p),
    }
}

pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    if let Some(r) = fraction_free_rank(rows.to_vec()) {
        return r;
    }
    let big = rows.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
    fraction_free_rank(big).expect("BigInt arithmetic does not overflow")
}

fn fraction_free_rank<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        // smallest pivot keeps the multipliers small; units are common
        let Some(p) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let a = pivot_row[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = a.gcd(&row[col]);
            let fa = a.clone() / g.clone();
            let fb = row[col].clone() / g;
            let mut content = T::zero();
            for k in col..ncols {
                let lhs = fa.checked_mul(&row[k])?;
                let rhs = fb.checked_mul(&pivot_row[k])?;
                row[k] = lhs.checked_sub(&rhs)?;
                content = content.gcd(&row[k]);
            }
            if !content.is_zero() && !content.is_one() {
                for x in row[col..].iter_mut() {
                    *x = x.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        let (mut base, mut exp, mut acc) = (a, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let scale = inv(m[rank][col]);
        for x in m[rank][col..].iter_mut() {
            *x = mulmod(*x, scale);
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for k in col..ncols {
                row[k] = (row[k] + p - mulmod(f, pivot[k])) % p;
            }
        }
        rank += 1;
    }
    rank
}
