//! Exact integer scalars and the combinatorial primitives built on them.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact integer type: arbitrary precision (`BigUint`, `BigInt`) or a
/// fixed-width primitive whose overflow is reported, never wrapped.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Hash
    + Ord
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Hash
        + Ord
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

/// A [`Scalar`] that also carries a sign.
pub trait SignedScalar: Scalar + Signed {}

impl<T: Scalar + Signed> SignedScalar for T {}

pub(crate) fn from_u64<T: Scalar>(v: u64, what: &'static str) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow(what))
}

pub(crate) fn from_i64<T: Scalar>(v: i64, what: &'static str) -> Result<T> {
    T::from_i64(v).ok_or(Error::Overflow(what))
}

pub(crate) fn add<T: Scalar>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// `(-1)^e`.
pub(crate) fn sign_power<T: SignedScalar>(e: u64) -> T {
    if e.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// `n!`.
pub fn factorial<T: Scalar>(n: u64) -> Result<T> {
    let mut acc = T::one();
    for i in 2..=n {
        acc = mul(&acc, &from_u64(i, "factorial")?, "factorial")?;
    }
    Ok(acc)
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
///
/// Uses the multiplicative formula; after step `i` the accumulator equals
/// `C(n-k+i, i)`, so every division is exact.
pub fn binomial<T: Scalar>(n: u64, k: i64) -> Result<T> {
    if k < 0 || k as u64 > n {
        return Ok(T::zero());
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = T::one();
    for i in 1..=k {
        acc = mul(&acc, &from_u64(n - k + i, "binomial")?, "binomial")?;
        acc = acc / from_u64(i, "binomial")?;
    }
    Ok(acc)
}

/// `a / b` when `b` divides `a`.
pub fn checked_div<T: Scalar>(a: &T, b: &T) -> Result<T> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonDivisible {
            dividend: a.to_string(),
            divisor: b.to_string(),
        })
    }
}

/// Precomputed rows `0..=max_n` of Pascal's triangle.
///
/// Immutable once built, so it can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct BinomialTable<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> BinomialTable<T> {
    pub fn new(max_n: u64) -> Result<Self> {
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![T::one()]);
        for n in 1..=max_n as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(T::one());
            for k in 1..n {
                row.push(add(&prev[k - 1], &prev[k], "Pascal table")?);
            }
            row.push(T::one());
            rows.push(row);
        }
        Ok(BinomialTable { rows })
    }

    pub fn max_n(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    /// `C(n, k)` with the same zero convention as [`binomial`]; `None` when
    /// `n` lies beyond the table.
    pub fn get(&self, n: u64, k: i64) -> Option<T> {
        let row = self.rows.get(n as usize)?;
        if k < 0 || k as u64 > n {
            Some(T::zero())
        } else {
            Some(row[k as usize].clone())
        }
    }

    pub fn row(&self, n: u64) -> Option<&[T]> {
        self.rows.get(n as usize).map(Vec::as_slice)
    }
}
