//! Semigroup membership with certificates.
//!
//! A target `t` lies in `SG(α₁, α₂)` when `t = λ₁α₁ + λ₂α₂` for some
//! `λ₁, λ₂ ∈ N[√m]`. For a pure generator next to a mixed one the decision
//! reduces to the sign of the canonical solution; for two pure generators it
//! splits into two classical coin problems over `Z`.

use crate::diophantine::{CanonicalSolution, MixedSystem};
use crate::error::Result;
use crate::quad::{self, gcd, QuadInt, RingContext};

/// Coefficients in `N[√m]` witnessing `lambda1·α₁ + lambda2·α₂ = target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub lambda1: QuadInt,
    pub lambda2: QuadInt,
}

impl Certificate {
    pub fn new(lambda1: QuadInt, lambda2: QuadInt) -> Self {
        Certificate { lambda1, lambda2 }
    }

    pub fn zero() -> Self {
        Certificate::new(QuadInt::ZERO, QuadInt::ZERO)
    }

    /// Same certificate with the coefficients swapped, for a swapped pair.
    pub fn swapped(self) -> Self {
        Certificate::new(self.lambda2, self.lambda1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MembershipResult {
    pub member: bool,
    pub certificate: Option<Certificate>,
    /// The canonical solution that decided a mixed system.
    pub canonical: Option<CanonicalSolution>,
}

impl MembershipResult {
    pub fn member(certificate: Certificate) -> Self {
        MembershipResult {
            member: true,
            certificate: Some(certificate),
            canonical: None,
        }
    }

    pub fn non_member() -> Self {
        MembershipResult {
            member: false,
            certificate: None,
            canonical: None,
        }
    }

    fn with_canonical(mut self, canonical: CanonicalSolution) -> Self {
        self.canonical = Some(canonical);
        self
    }
}

/// Decides a mixed system by the sign of its canonical solution.
pub fn member_mixed(sys: &MixedSystem) -> Result<MembershipResult> {
    let canonical = sys.solve_canonical()?;
    let sol = canonical.sol;
    let result = if sol.x >= 0 && sol.y >= 0 {
        MembershipResult::member(Certificate::new(sol.lambda1(), sol.lambda2()))
    } else {
        MembershipResult::non_member()
    };
    Ok(result.with_canonical(canonical))
}

/// Writes `n = i·p + j·q` with `i, j >= 0`, if possible.
///
/// Only `i < q / gcd(p, q)` needs checking: any larger `i` can trade `q/g`
/// copies of `p` for `p/g` copies of `q`.
pub fn coin_decompose(p: i128, q: i128, n: i128) -> Option<(i128, i128)> {
    if n < 0 || p < 1 || q < 1 {
        return if n == 0 { Some((0, 0)) } else { None };
    }
    let period = q / gcd(p, q);
    let limit = (n / p).min(period - 1);
    (0..=limit).find_map(|i| {
        let rest = n - i * p;
        (rest % q == 0).then(|| (i, rest / q))
    })
}

/// True iff `n` is a nonnegative integer combination of `p` and `q`.
pub fn coin_member(p: i128, q: i128, n: i128) -> bool {
    coin_decompose(p, q, n).is_some()
}

/// Pairs of pure generators with a known coin-problem reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitShape {
    /// Generators `a` and `b`.
    RatRat { a: i128, b: i128 },
    /// Generators `a` and `b√m`.
    RatRootMult { a: i128, b: i128 },
}

impl SplitShape {
    pub fn generators(&self) -> (QuadInt, QuadInt) {
        match *self {
            SplitShape::RatRat { a, b } => (QuadInt::rational(a), QuadInt::rational(b)),
            SplitShape::RatRootMult { a, b } => (QuadInt::rational(a), QuadInt::new(0, b)),
        }
    }
}

/// Coefficient expansion of the semigroup definition for two pure generators.
///
/// For `(a, b)` the rational and irrational parts are independent coin
/// problems in `SG_Z(a, b)`. For `(a, b√m)` the rational part lies in
/// `SG_Z(a, bm)` and the irrational part in `SG_Z(a, b)`.
pub fn member_split(
    shape: SplitShape,
    target: QuadInt,
    ctx: RingContext,
) -> Result<MembershipResult> {
    let (p1, q1, p2, q2) = match shape {
        SplitShape::RatRat { a, b } => {
            let (Some((p1, p2)), Some((q1, q2))) = (
                coin_decompose(a, b, target.rat),
                coin_decompose(a, b, target.irr),
            ) else {
                return Ok(MembershipResult::non_member());
            };
            (p1, q1, p2, q2)
        }
        SplitShape::RatRootMult { a, b } => {
            let bm = quad::mul(b, ctx.m())?;
            let (Some((p1, q2)), Some((q1, p2))) = (
                coin_decompose(a, bm, target.rat),
                coin_decompose(a, b, target.irr),
            ) else {
                return Ok(MembershipResult::non_member());
            };
            (p1, q1, p2, q2)
        }
    };
    Ok(MembershipResult::member(Certificate::new(
        QuadInt::new(p1, q1),
        QuadInt::new(p2, q2),
    )))
}

/// Accepts `cert` iff both coefficients lie in `N[√m]` and
/// `lambda1·alpha1 + lambda2·alpha2 == target` exactly.
pub fn certificate_check(
    alpha1: QuadInt,
    alpha2: QuadInt,
    target: QuadInt,
    cert: &Certificate,
    ctx: RingContext,
) -> Result<bool> {
    if !cert.lambda1.is_natural() || !cert.lambda2.is_natural() {
        return Ok(false);
    }
    let sum = ctx
        .mul(cert.lambda1, alpha1)?
        .checked_add(ctx.mul(cert.lambda2, alpha2)?)?;
    Ok(sum == target)
}
