//! Binary Krawtchouk polynomials at integer points and the MacWilliams
//! transform of weight distributions.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{add, binomial, mul, sign_power, BinomialTable, SignedScalar};
use crate::super_catalan::ScnIndex;

/// A validated evaluation point `(d, j, x)` with `0 <= j, x <= d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KrawtchoukPoint {
    d: u32,
    j: u32,
    x: u32,
}

impl KrawtchoukPoint {
    pub fn new(d: u32, j: u32, x: u32) -> Result<Self> {
        if j > d || x > d {
            return Err(Error::Domain(format!(
                "Krawtchouk point needs 0 <= j, x <= d, got d={d}, j={j}, x={x}"
            )));
        }
        Ok(KrawtchoukPoint { d, j, x })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn x(&self) -> u32 {
        self.x
    }
}

/// `K_j^d(x) = Σ_{h=0}^{j} (-1)^h C(x,h) C(d-x, j-h)`.
pub fn krawtchouk<T: SignedScalar>(p: KrawtchoukPoint) -> Result<T> {
    let (d, j, x) = (u64::from(p.d), i64::from(p.j), u64::from(p.x));
    let mut sum = T::zero();
    for h in 0..=j.min(x as i64) {
        let term = mul(&binomial::<T>(x, h)?, &binomial::<T>(d - x, j - h)?, "Krawtchouk term")?;
        sum = add(&sum, &(sign_power::<T>(h as u64) * term), "Krawtchouk sum")?;
    }
    Ok(sum)
}

/// Shorthand for `krawtchouk(KrawtchoukPoint::new(d, j, x)?)`.
pub fn krawtchouk_at<T: SignedScalar>(d: u32, j: u32, x: u32) -> Result<T> {
    krawtchouk(KrawtchoukPoint::new(d, j, x)?)
}

/// All values `K_j^d(x)` for one `d`, one row per degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukTable<T> {
    d: u32,
    rows: Vec<Vec<T>>,
}

impl<T: SignedScalar> KrawtchoukTable<T> {
    pub fn new(d: u32) -> Result<Self> {
        let pascal = BinomialTable::<T>::new(d.into())?;
        let rows = (0..=d)
            .into_par_iter()
            .map(|j| (0..=d).map(|x| table_entry(&pascal, d, j, x)).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(KrawtchoukTable { d, rows })
    }
}

impl<T> KrawtchoukTable<T> {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn get(&self, j: u32, x: u32) -> Option<&T> {
        self.rows.get(j as usize)?.get(x as usize)
    }

    pub fn row(&self, j: u32) -> Option<&[T]> {
        self.rows.get(j as usize).map(Vec::as_slice)
    }

    /// Rows in degree order, each listing `x = 0..=d`.
    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }
}

fn table_entry<T: SignedScalar>(pascal: &BinomialTable<T>, d: u32, j: u32, x: u32) -> Result<T> {
    let lookup = |n: u32, k: i64| pascal.get(n.into(), k).ok_or(Error::Internal("Pascal table too small".into()));
    let mut sum = T::zero();
    for h in 0..=j.min(x) {
        let term = mul(&lookup(x, h.into())?, &lookup(d - x, i64::from(j) - i64::from(h))?, "Krawtchouk term")?;
        sum = add(&sum, &(sign_power::<T>(h.into()) * term), "Krawtchouk sum")?;
    }
    Ok(sum)
}

/// `S(m,n)` read off the Krawtchouk value `K_{m+n}^{2(m+n)}(2m) = (-1)^m S(m,n)`.
///
/// A negative signed result would falsify that identity and is reported as
/// [`Error::ClaimFailed`].
pub fn scn_via_krawtchouk<T: SignedScalar>(idx: ScnIndex) -> Result<T> {
    let total = idx.total();
    let value = sign_power::<T>(idx.m.into()) * krawtchouk_at::<T>(2 * total, total, 2 * idx.m)?;
    if value.is_negative() {
        return Err(Error::ClaimFailed(format!(
            "(-1)^m K_{total}^{}({}) = {value} is negative for (m, n) = {idx}",
            2 * total,
            2 * idx.m
        )));
    }
    Ok(value)
}

/// Number of words of each Hamming weight `0..=d` in a binary code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution<T> {
    d: u32,
    counts: Vec<T>,
}

impl<T: SignedScalar> WeightDistribution<T> {
    pub fn new(d: u32, counts: Vec<T>) -> Result<Self> {
        if counts.len() != d as usize + 1 {
            return Err(Error::Domain(format!(
                "weight distribution of length d={d} needs {} counts, got {}",
                d as usize + 1,
                counts.len()
            )));
        }
        if let Some(i) = counts.iter().position(|c| c.is_negative()) {
            return Err(Error::Domain(format!("count of weight {i} is negative")));
        }
        Ok(WeightDistribution { d, counts })
    }

    pub fn from_slice(counts: &[i64]) -> Result<Self> {
        let d = counts.len().checked_sub(1).ok_or(Error::Domain("empty weight distribution".into()))?;
        let counts = counts
            .iter()
            .map(|&c| T::from_i64(c).ok_or(Error::Overflow("weight distribution")))
            .collect::<Result<_>>()?;
        Self::new(d as u32, counts)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn counts(&self) -> &[T] {
        &self.counts
    }

    /// Total number of words, `Σ_i A_i`.
    pub fn total(&self) -> Result<T> {
        self.counts.iter().try_fold(T::zero(), |acc, c| add(&acc, c, "code size"))
    }
}

/// `B_j = (1/|C|) Σ_i A_i K_j^d(i)` for `j = 0..=d`, kept exact.
///
/// For a binary linear code the output is the weight distribution of its
/// dual; for other inputs the entries may be non-integral.
pub fn macwilliams_transform<T: SignedScalar>(w: &WeightDistribution<T>, code_size: &T) -> Result<Vec<Ratio<T>>> {
    if !code_size.is_positive() {
        return Err(Error::Domain(format!("code size must be at least 1, got {code_size}")));
    }
    let table = KrawtchoukTable::<T>::new(w.d)?;
    table
        .rows()
        .iter()
        .map(|row| {
            let sum = row
                .iter()
                .zip(&w.counts)
                .try_fold(T::zero(), |acc, (k, a)| add(&acc, &mul(k, a, "MacWilliams term")?, "MacWilliams sum"))?;
            Ok(Ratio::new(sum, code_size.clone()))
        })
        .collect()
}
