//! Exact arithmetic in `Z[√m]`.
//!
//! Elements are stored as a pair of `i128` parts. Every operation that can
//! leave the `i128` range is checked and reports [`Error::Overflow`].

use core::fmt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn sum(terms: &[i128]) -> Result<i128> {
    terms.iter().try_fold(0i128, |acc, &t| add(acc, t))
}

#[inline]
pub(crate) fn neg(a: i128) -> Result<i128> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// True iff `m` is a valid radicand: `m >= 2` and not a perfect square.
pub fn is_nonsquare(m: i128) -> bool {
    if m < 2 {
        return false;
    }
    let r = m.isqrt();
    r * r != m
}

/// The ring `Z[√m]` for a fixed non-square radicand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    m: i128,
}

impl RingContext {
    pub fn new(m: i128) -> Result<Self> {
        if is_nonsquare(m) {
            Ok(RingContext { m })
        } else {
            Err(Error::InvalidRadicand(m))
        }
    }

    #[inline]
    pub fn m(&self) -> i128 {
        self.m
    }

    pub fn mul(&self, x: QuadInt, y: QuadInt) -> Result<QuadInt> {
        let rat = add(mul(x.rat, y.rat)?, mul(mul(x.irr, y.irr)?, self.m)?)?;
        let irr = add(mul(x.rat, y.irr)?, mul(x.irr, y.rat)?)?;
        Ok(QuadInt { rat, irr })
    }

    /// `rat² − irr²·m`, the product of `x` with its conjugate.
    pub fn norm(&self, x: QuadInt) -> Result<i128> {
        sub(mul(x.rat, x.rat)?, mul(mul(x.irr, x.irr)?, self.m)?)
    }

    /// Multiplies by an integer scalar.
    pub fn scale(&self, x: QuadInt, k: i128) -> Result<QuadInt> {
        Ok(QuadInt {
            rat: mul(x.rat, k)?,
            irr: mul(x.irr, k)?,
        })
    }
}

/// An element `rat + irr·√m` of `Z[√m]`.
///
/// The ring context is carried separately; the representation is unique, so
/// derived equality is ring equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QuadInt {
    pub rat: i128,
    pub irr: i128,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { rat: 0, irr: 0 };
    pub const ONE: QuadInt = QuadInt { rat: 1, irr: 0 };
    /// `√m` itself.
    pub const ROOT: QuadInt = QuadInt { rat: 0, irr: 1 };

    #[inline]
    pub const fn new(rat: i128, irr: i128) -> Self {
        QuadInt { rat, irr }
    }

    #[inline]
    pub const fn rational(rat: i128) -> Self {
        QuadInt { rat, irr: 0 }
    }

    pub fn conjugate(self) -> Result<QuadInt> {
        Ok(QuadInt {
            rat: self.rat,
            irr: neg(self.irr)?,
        })
    }

    pub fn checked_add(self, other: QuadInt) -> Result<QuadInt> {
        Ok(QuadInt {
            rat: add(self.rat, other.rat)?,
            irr: add(self.irr, other.irr)?,
        })
    }

    pub fn checked_sub(self, other: QuadInt) -> Result<QuadInt> {
        Ok(QuadInt {
            rat: sub(self.rat, other.rat)?,
            irr: sub(self.irr, other.irr)?,
        })
    }

    pub fn checked_neg(self) -> Result<QuadInt> {
        Ok(QuadInt {
            rat: neg(self.rat)?,
            irr: neg(self.irr)?,
        })
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.rat == 0 && self.irr == 0
    }

    /// Both parts nonnegative, i.e. an element of `N[√m]`.
    #[inline]
    pub fn is_natural(&self) -> bool {
        self.rat >= 0 && self.irr >= 0
    }

    /// Componentwise `self >= other`.
    #[inline]
    pub fn dominates(&self, other: &QuadInt) -> bool {
        self.rat >= other.rat && self.irr >= other.irr
    }
}

/// Formats as `A+Br` or `A-Br`, where `r` stands for `√m`.
impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.irr < 0 { '-' } else { '+' };
        write!(f, "{}{}{}r", self.rat, sign, self.irr.unsigned_abs())
    }
}

/// Bezout data for a pair `(p, q)`: `u·p + v·q = g` with `g = gcd(|p|, |q|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EgcdResult {
    pub g: i128,
    pub u: i128,
    pub v: i128,
}

/// Extended Euclid. The returned pair is the one the iteration produces,
/// sign-normalized so that `g >= 0`.
pub fn egcd(p: i128, q: i128) -> Result<EgcdResult> {
    if p == 0 && q == 0 {
        return Err(Error::ZeroGcd);
    }
    let (mut old_r, mut r) = (p, q);
    let (mut old_u, mut u) = (1i128, 0i128);
    let (mut old_v, mut v) = (0i128, 1i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, sub(old_r, mul(quot, r)?)?);
        (old_u, u) = (u, sub(old_u, mul(quot, u)?)?);
        (old_v, v) = (v, sub(old_v, mul(quot, v)?)?);
    }
    if old_r < 0 {
        old_r = neg(old_r)?;
        old_u = neg(old_u)?;
        old_v = neg(old_v)?;
    }
    Ok(EgcdResult {
        g: old_r,
        u: old_u,
        v: old_v,
    })
}

/// `gcd(|p|, |q|)`, with `gcd(0, 0) = 0`.
pub fn gcd(p: i128, q: i128) -> i128 {
    let (mut x, mut y) = (p.unsigned_abs(), q.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    // only gcd(i128::MIN, 0) exceeds i128::MAX; clamp instead of wrapping
    i128::try_from(x).unwrap_or(i128::MAX)
}

/// Floor division: `n = q·d + r` with `0 <= r < d`.
pub fn floor_divmod(n: i128, d: i128) -> Result<(i128, i128)> {
    if d <= 0 {
        return Err(Error::NonPositiveDivisor(d));
    }
    Ok((n.div_euclid(d), n.rem_euclid(d)))
}
