//! `S(m,n)` by the factorial closed form and by von Szily's alternating sum,
//! together with the classical special cases.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{add, binomial, checked_div, factorial, from_u64, mul, sign_power, Scalar, SignedScalar};

/// The index pair `(m, n)` of `S(m,n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScnIndex {
    pub m: u32,
    pub n: u32,
}

impl ScnIndex {
    pub const fn new(m: u32, n: u32) -> Self {
        ScnIndex { m, n }
    }

    /// `m + n`, the half-length of the lattice paths involved.
    pub const fn total(&self) -> u32 {
        self.m + self.n
    }

    pub const fn swapped(&self) -> Self {
        ScnIndex { m: self.n, n: self.m }
    }

    /// All pairs with `m + n = total`, in increasing `m`.
    pub fn with_total(total: u32) -> impl Iterator<Item = ScnIndex> {
        (0..=total).map(move |m| ScnIndex::new(m, total - m))
    }

    /// All pairs with `m + n <= max_total`, grouped by `m + n`.
    pub fn up_to(max_total: u32) -> impl Iterator<Item = ScnIndex> {
        (0..=max_total).flat_map(ScnIndex::with_total)
    }
}

impl fmt::Display for ScnIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `S(m,n) = (2m)! (2n)! / (m! n! (m+n)!)`.
///
/// The division is checked; a remainder would contradict integrality of
/// `S(m,n)` and is reported as [`Error::Internal`].
pub fn scn_closed_form<T: Scalar>(idx: ScnIndex) -> Result<T> {
    let (m, n) = (u64::from(idx.m), u64::from(idx.n));
    let numerator = mul(&factorial::<T>(2 * m)?, &factorial(2 * n)?, "S(m,n) numerator")?;
    let denominator = mul(
        &mul(&factorial::<T>(m)?, &factorial(n)?, "S(m,n) denominator")?,
        &factorial(m + n)?,
        "S(m,n) denominator",
    )?;
    checked_div(&numerator, &denominator).map_err(|e| match e {
        Error::NonDivisible { .. } => Error::Internal(format!("S{idx} is not integral: {e}")),
        other => other,
    })
}

/// von Szily: `S(m,n) = Σ_k (-1)^k C(2m, m+k) C(2n, n-k)`.
///
/// Only `|k| <= min(m, n)` contributes. The result is signed so that the
/// comparison against the closed form is a genuine check.
pub fn scn_von_szily<T: SignedScalar>(idx: ScnIndex) -> Result<T> {
    let (m, n) = (i64::from(idx.m), i64::from(idx.n));
    let reach = m.min(n);
    let mut sum = T::zero();
    for k in -reach..=reach {
        let term = mul(
            &binomial::<T>(2 * m as u64, m + k)?,
            &binomial::<T>(2 * n as u64, n - k)?,
            "von Szily term",
        )?;
        let term = if k.rem_euclid(2) == 0 { term } else { -term };
        sum = add(&sum, &term, "von Szily sum")?;
    }
    Ok(sum)
}

/// `(-1)^m S(m,n)`, the signed form shared by the path sum and the Krawtchouk value.
pub fn signed_scn<T: SignedScalar>(idx: ScnIndex) -> Result<T> {
    Ok(sign_power::<T>(idx.m.into()) * scn_closed_form::<T>(idx)?)
}

/// The Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan<T: Scalar>(n: u32) -> Result<T> {
    let n = u64::from(n);
    checked_div(&middle_binomial::<T>(n as u32)?, &from_u64(n + 1, "Catalan")?)
}

/// The central binomial coefficient `C(2n, n)`.
pub fn middle_binomial<T: Scalar>(n: u32) -> Result<T> {
    binomial(2 * u64::from(n), n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, Nat};

    #[test]
    fn closed_form_examples() {
        assert_eq!(scn_closed_form::<Nat>(ScnIndex::new(0, 0)).unwrap(), Nat::from(1u8));
        assert_eq!(scn_closed_form::<Nat>(ScnIndex::new(1, 2)).unwrap(), Nat::from(4u8));
        // 4!·6! / (2!·3!·5!) = 17280 / 1440
        assert_eq!(scn_closed_form::<Nat>(ScnIndex::new(2, 3)).unwrap(), Nat::from(12u8));
        assert_eq!(scn_closed_form::<u64>(ScnIndex::new(3, 3)).unwrap(), 20);
    }

    #[test]
    fn von_szily_examples() {
        assert_eq!(scn_von_szily::<Int>(ScnIndex::new(0, 0)).unwrap(), Int::from(1));
        // -C(2,0)C(4,3) + C(2,1)C(4,2) - C(2,2)C(4,1) = -4 + 12 - 4
        assert_eq!(scn_von_szily::<Int>(ScnIndex::new(1, 2)).unwrap(), Int::from(4));
        assert_eq!(scn_von_szily::<Int>(ScnIndex::new(3, 3)).unwrap(), Int::from(20));
        assert_eq!(scn_von_szily::<i64>(ScnIndex::new(2, 3)).unwrap(), 12);
    }

    #[test]
    fn catalan_and_middle_binomial_examples() {
        assert_eq!(catalan::<u64>(0).unwrap(), 1);
        assert_eq!(catalan::<u64>(2).unwrap(), 2);
        assert_eq!(catalan::<u64>(3).unwrap(), 5);
        assert_eq!(middle_binomial::<u64>(0).unwrap(), 1);
        assert_eq!(middle_binomial::<u64>(2).unwrap(), 6);
        assert_eq!(middle_binomial::<u64>(10).unwrap(), 184_756);
    }

    #[test]
    fn signed_form_alternates_with_m() {
        assert_eq!(signed_scn::<i64>(ScnIndex::new(1, 1)).unwrap(), -2);
        assert_eq!(signed_scn::<i64>(ScnIndex::new(2, 1)).unwrap(), 4);
        assert_eq!(signed_scn::<i64>(ScnIndex::new(0, 3)).unwrap(), 20);
    }

    #[test]
    fn index_sweeps() {
        assert_eq!(ScnIndex::up_to(10).count(), 66);
        assert_eq!(ScnIndex::up_to(20).count(), 231);
        let n3: Vec<_> = ScnIndex::with_total(3).collect();
        assert_eq!(n3.first(), Some(&ScnIndex::new(0, 3)));
        assert_eq!(n3.last(), Some(&ScnIndex::new(3, 0)));
    }
}
