//! Right/Up lattice paths from `(0,0)` to `(N,N)` and brute-force checks of
//! the signed path sum and the height histogram.
//!
//! A path is packed into a `u64`: step `t` (0-based) is bit `2N-1-t`, with
//! `1` for Up and `0` for Right. Numeric order on the packed value is then
//! lexicographic order on the step string with `R < U`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bits::{low_mask, FixedWeight};
use crate::error::{Error, Result};
use crate::exact::{binomial, from_i64, from_u64, mul, Scalar, SignedScalar};
use crate::limits::Limits;
use crate::super_catalan::ScnIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::Right => 'R',
            Step::Up => 'U',
        }
    }
}

/// A path in `𝒫_N`: `2N` steps, exactly `N` of them Up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    half_len: u32,
    bits: u64,
}

impl LatticePath {
    /// Wraps a packed step sequence; `bits` must be a `2N`-bit value with `N` ones.
    pub fn from_bits(half_len: u32, bits: u64) -> Result<Self> {
        if half_len > Limits::MAX_PATH_HALF_LENGTH {
            return Err(Error::Domain(format!(
                "path half-length {half_len} exceeds {}",
                Limits::MAX_PATH_HALF_LENGTH
            )));
        }
        if bits & !low_mask(2 * half_len) != 0 || bits.count_ones() != half_len {
            return Err(Error::Domain(format!(
                "{bits:#b} is not a balanced path of length {}",
                2 * half_len
            )));
        }
        Ok(LatticePath { half_len, bits })
    }

    pub(crate) fn from_bits_unchecked(half_len: u32, bits: u64) -> Self {
        debug_assert_eq!(bits.count_ones(), half_len);
        LatticePath { half_len, bits }
    }

    /// `N`: number of Up steps, equal to the number of Right steps.
    pub fn half_len(&self) -> u32 {
        self.half_len
    }

    pub fn len(&self) -> u32 {
        2 * self.half_len
    }

    pub fn is_empty(&self) -> bool {
        self.half_len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn step(&self, t: u32) -> Option<Step> {
        (t < self.len()).then(|| {
            if self.bits >> (self.len() - 1 - t) & 1 == 1 {
                Step::Up
            } else {
                Step::Right
            }
        })
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).filter_map(move |t| self.step(t))
    }

    /// Height after `t` steps, i.e. the number of Up steps among the first `t`.
    pub fn height_after(&self, t: u32) -> Result<u32> {
        if t > self.len() {
            return Err(Error::Domain(format!(
                "step index {t} outside 0..={} for path {self}",
                self.len()
            )));
        }
        Ok(self.height_unchecked(t))
    }

    #[inline]
    pub(crate) fn height_unchecked(&self, t: u32) -> u32 {
        if t == 0 {
            0
        } else {
            (self.bits >> (self.len() - t)).count_ones()
        }
    }

    /// The path with steps `a` and `b` exchanged.
    pub fn swap_steps(&self, a: u32, b: u32) -> Option<LatticePath> {
        let (sa, sb) = (self.step(a)?, self.step(b)?);
        if sa == sb {
            return Some(*self);
        }
        let flip = (1u64 << (self.len() - 1 - a)) | (1u64 << (self.len() - 1 - b));
        Some(LatticePath::from_bits_unchecked(self.half_len, self.bits ^ flip))
    }

    /// Number of step positions where the two paths differ.
    pub fn hamming_distance(&self, other: &LatticePath) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if !s.len().is_multiple_of(2) || s.len() > 2 * Limits::MAX_PATH_HALF_LENGTH as usize {
            return Err(Error::Domain(format!("path string {s:?} has unusable length {}", s.len())));
        }
        let bits = s.chars().try_fold(0u64, |acc, c| match c {
            'R' => Ok(acc << 1),
            'U' => Ok(acc << 1 | 1),
            other => Err(Error::Domain(format!("invalid step {other:?} in path {s:?}"))),
        })?;
        LatticePath::from_bits(s.len() as u32 / 2, bits)
    }
}

/// Every path of `𝒫_N`, in strictly increasing lexicographic order.
#[derive(Debug, Clone)]
pub struct Paths {
    half_len: u32,
    masks: FixedWeight,
}

impl Iterator for Paths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        self.masks
            .next()
            .map(|bits| LatticePath::from_bits_unchecked(self.half_len, bits))
    }
}

/// Streams `𝒫_N`; refuses `N` above the enumeration cap.
pub fn enumerate_paths(half_len: u32, limits: &Limits) -> Result<Paths> {
    limits.check_enumeration(half_len)?;
    Ok(Paths {
        half_len,
        masks: FixedWeight::new(2 * half_len, half_len),
    })
}

const PREFIX_BITS: u32 = 10;

/// A run of consecutive paths sharing a fixed step prefix.
#[derive(Debug, Clone, Copy)]
struct Block {
    half_len: u32,
    prefix: u64,
    suffix_width: u32,
    suffix_ones: u32,
}

impl Block {
    fn paths(self) -> impl Iterator<Item = LatticePath> {
        FixedWeight::new(self.suffix_width, self.suffix_ones).map(move |s| {
            LatticePath::from_bits_unchecked(self.half_len, self.prefix << self.suffix_width | s)
        })
    }
}

/// Partitions `𝒫_N` by the first few steps; blocks come in lexicographic order.
fn blocks(half_len: u32) -> Vec<Block> {
    let len = 2 * half_len;
    let prefix_len = len.min(PREFIX_BITS);
    let suffix_width = len - prefix_len;
    (0..1u64 << prefix_len)
        .filter_map(|prefix| {
            let ups = prefix.count_ones();
            let rights = prefix_len - ups;
            (ups <= half_len && rights <= half_len).then(|| Block {
                half_len,
                prefix,
                suffix_width,
                suffix_ones: half_len - ups,
            })
        })
        .collect()
}

/// Folds `f` over all of `𝒫_N` in parallel blocks. `combine` must be
/// associative; integer accumulators make the result independent of the
/// thread count.
pub fn par_fold_paths<A, F, C>(half_len: u32, limits: &Limits, identity: impl Fn() -> A + Sync + Send, f: F, combine: C) -> Result<A>
where
    A: Send,
    F: Fn(&mut A, LatticePath) + Sync + Send,
    C: Fn(A, A) -> A + Sync + Send,
{
    limits.check_enumeration(half_len)?;
    Ok(blocks(half_len)
        .into_par_iter()
        .map(|block| {
            let mut acc = identity();
            block.paths().for_each(|p| f(&mut acc, p));
            acc
        })
        .reduce(&identity, &combine))
}

/// `Σ_{P ∈ 𝒫_{m+n}} (-1)^{h_{2m}(P)}`, by enumerating every path.
pub fn signed_sum_enumerated<T: SignedScalar>(idx: ScnIndex, limits: &Limits) -> Result<T> {
    let prefix = 2 * idx.m;
    let sum = par_fold_paths(
        idx.total(),
        limits,
        || 0i64,
        |acc, p| *acc += if p.height_unchecked(prefix) % 2 == 0 { 1 } else { -1 },
        |a, b| a + b,
    )?;
    from_i64(sum, "signed path sum")
}

/// Highest possible `h_{2m}` over `𝒫_{m+n}`.
pub fn max_height(idx: ScnIndex) -> u32 {
    (2 * idx.m).min(idx.total())
}

/// Path counts by `h_{2m}`, enumerated and from `C(2m,h) C(2n, m+n-h)`,
/// over `h = 0..=min(2m, m+n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathHistogram<T> {
    pub m: u32,
    pub n: u32,
    pub enumerated: Vec<T>,
    pub closed_form: Vec<T>,
}

impl<T: Scalar> PathHistogram<T> {
    pub fn index(&self) -> ScnIndex {
        ScnIndex::new(self.m, self.n)
    }

    pub fn columns_agree(&self) -> bool {
        self.enumerated == self.closed_form
    }
}

/// The closed-form column alone; no enumeration, so no cap.
pub fn closed_form_histogram<T: Scalar>(idx: ScnIndex) -> Result<Vec<T>> {
    let (m, n, total) = (u64::from(idx.m), u64::from(idx.n), i64::from(idx.total()));
    (0..=i64::from(max_height(idx)))
        .map(|h| mul(&binomial::<T>(2 * m, h)?, &binomial::<T>(2 * n, total - h)?, "histogram"))
        .collect()
}

/// Counts of `h_{2m}` over `𝒫_{m+n}` by enumeration.
pub fn enumerated_histogram<T: Scalar>(idx: ScnIndex, limits: &Limits) -> Result<Vec<T>> {
    let width = max_height(idx) as usize + 1;
    let prefix = 2 * idx.m;
    let counts = par_fold_paths(
        idx.total(),
        limits,
        || vec![0u64; width],
        |acc, p| acc[p.height_unchecked(prefix) as usize] += 1,
        add_counts,
    )?;
    counts.into_iter().map(|c| from_u64(c, "histogram")).collect()
}

pub fn histogram<T: Scalar>(idx: ScnIndex, limits: &Limits) -> Result<PathHistogram<T>> {
    Ok(PathHistogram {
        m: idx.m,
        n: idx.n,
        enumerated: enumerated_histogram(idx, limits)?,
        closed_form: closed_form_histogram(idx)?,
    })
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}

/// Height counts `h_{2m}` for every `m = 0..=N` gathered in one pass over
/// `𝒫_N`, so a sweep over all `(m, N-m)` enumerates each `N` only once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightCensus {
    half_len: u32,
    paths: u64,
    // counts[m][h] = #{P : h_{2m}(P) = h}
    counts: Vec<Vec<u64>>,
}

impl HeightCensus {
    pub fn new(half_len: u32, limits: &Limits) -> Result<Self> {
        let shape = move || -> (u64, Vec<Vec<u64>>) {
            let counts = (0..=half_len)
                .map(|m| vec![0u64; max_height(ScnIndex::new(m, half_len - m)) as usize + 1])
                .collect();
            (0, counts)
        };
        let (paths, counts) = par_fold_paths(
            half_len,
            limits,
            shape,
            |(paths, counts), p| {
                *paths += 1;
                for (m, row) in counts.iter_mut().enumerate() {
                    row[p.height_unchecked(2 * m as u32) as usize] += 1;
                }
            },
            |(pa, mut ca), (pb, cb)| {
                for (ra, rb) in ca.iter_mut().zip(cb) {
                    ra.iter_mut().zip(rb).for_each(|(x, y)| *x += y);
                }
                (pa + pb, ca)
            },
        )?;
        Ok(HeightCensus { half_len, paths, counts })
    }

    pub fn half_len(&self) -> u32 {
        self.half_len
    }

    /// Number of paths visited, `C(2N, N)` when complete.
    pub fn paths(&self) -> u64 {
        self.paths
    }

    pub fn counts(&self, m: u32) -> Option<&[u64]> {
        self.counts.get(m as usize).map(Vec::as_slice)
    }

    pub fn histogram<T: Scalar>(&self, m: u32) -> Result<PathHistogram<T>> {
        let idx = self.index(m)?;
        Ok(PathHistogram {
            m,
            n: idx.n,
            enumerated: self.counts[m as usize]
                .iter()
                .map(|&c| from_u64(c, "histogram"))
                .collect::<Result<_>>()?,
            closed_form: closed_form_histogram(idx)?,
        })
    }

    /// `Σ_P (-1)^{h_{2m}(P)}` from the enumerated counts.
    pub fn signed_sum<T: SignedScalar>(&self, m: u32) -> Result<T> {
        self.index(m)?;
        let sum: i64 = self.counts[m as usize]
            .iter()
            .enumerate()
            .map(|(h, &c)| if h % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        from_i64(sum, "signed path sum")
    }

    fn index(&self, m: u32) -> Result<ScnIndex> {
        if m > self.half_len {
            return Err(Error::Domain(format!("m={m} exceeds N={}", self.half_len)));
        }
        Ok(ScnIndex::new(m, self.half_len - m))
    }
}
