//! Classification of generator pairs, spanning of 1, and the Frobenius set
//! `Frob(α₁, α₂) = {w : w + N[√m] ⊆ SG(α₁, α₂)}`.
//!
//! Whenever the pair spans 1 and one generator has a vanishing part, the set
//! is the translated cone `(α₁−1)(α₂−1)(1+√m) + N[√m]`. Two fully mixed
//! generators never have a nonempty Frobenius set.

use core::fmt;

use crate::diophantine::{Case, MixedSystem};
use crate::error::{Error, Result};
use crate::membership::{member_mixed, member_split, Certificate, MembershipResult, SplitShape};
use crate::quad::{self, gcd, QuadInt, RingContext};

/// Part-vanishing pattern of a normalized pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorTag {
    /// `(a, b)`
    RatRat,
    /// `(a, b√m)`
    RatRootMult,
    /// `(a√m, b√m)`
    RootRootMult,
    /// `(a, b+c√m)`
    RatMixed,
    /// `(a√m, b+c√m)`
    RootMixed,
    /// `(a+b√m, c+d√m)`, all parts nonzero
    MixedMixed,
}

impl GeneratorTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            GeneratorTag::RatRat => "RatRat",
            GeneratorTag::RatRootMult => "RatRootMult",
            GeneratorTag::RootRootMult => "RootRootMult",
            GeneratorTag::RatMixed => "RatMixed",
            GeneratorTag::RootMixed => "RootMixed",
            GeneratorTag::MixedMixed => "MixedMixed",
        }
    }
}

impl fmt::Display for GeneratorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Rational,
    Root,
    Mixed,
}

fn kind_of(g: QuadInt) -> Kind {
    match (g.rat, g.irr) {
        (_, 0) => Kind::Rational,
        (0, _) => Kind::Root,
        _ => Kind::Mixed,
    }
}

/// Two generators in `N[√m] \ {0}`, ordered pure-rational first, then
/// pure-irrational, then mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorPair {
    alpha1: QuadInt,
    alpha2: QuadInt,
    ctx: RingContext,
    tag: GeneratorTag,
    swapped: bool,
}

impl GeneratorPair {
    pub fn alpha1(&self) -> QuadInt {
        self.alpha1
    }

    pub fn alpha2(&self) -> QuadInt {
        self.alpha2
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn tag(&self) -> GeneratorTag {
        self.tag
    }

    /// Whether normalization exchanged the caller's argument order.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// The mixed system for `target`, for `RatMixed` and `RootMixed` pairs.
    ///
    /// Fails with [`Error::NotCoprime`] when the pair does not span 1.
    pub fn mixed_system(&self, target: QuadInt) -> Result<MixedSystem> {
        let case = match self.tag {
            GeneratorTag::RatMixed => Case::RationalGen,
            GeneratorTag::RootMixed => Case::RootGen,
            _ => {
                return Err(Error::UnsupportedShape(
                    "mixed system needs a pure and a mixed generator",
                ))
            }
        };
        let a = match case {
            Case::RationalGen => self.alpha1.rat,
            Case::RootGen => self.alpha1.irr,
        };
        MixedSystem::new(case, a, self.alpha2.rat, self.alpha2.irr, self.ctx, target)
    }

    /// The coin-problem shape, for `RatRat` and `RatRootMult` pairs.
    pub fn split_shape(&self) -> Option<SplitShape> {
        match self.tag {
            GeneratorTag::RatRat => Some(SplitShape::RatRat {
                a: self.alpha1.rat,
                b: self.alpha2.rat,
            }),
            GeneratorTag::RatRootMult => Some(SplitShape::RatRootMult {
                a: self.alpha1.rat,
                b: self.alpha2.irr,
            }),
            _ => None,
        }
    }
}

/// Validates and normalizes a generator pair.
pub fn classify(alpha1: QuadInt, alpha2: QuadInt, ctx: RingContext) -> Result<GeneratorPair> {
    for g in [alpha1, alpha2] {
        if g.is_zero() || !g.is_natural() {
            return Err(Error::InvalidGenerator(g));
        }
    }
    let (k1, k2) = (kind_of(alpha1), kind_of(alpha2));
    let swapped = k2 < k1;
    let (alpha1, alpha2, k1, k2) = if swapped {
        (alpha2, alpha1, k2, k1)
    } else {
        (alpha1, alpha2, k1, k2)
    };
    let tag = match (k1, k2) {
        (Kind::Rational, Kind::Rational) => GeneratorTag::RatRat,
        (Kind::Rational, Kind::Root) => GeneratorTag::RatRootMult,
        (Kind::Root, Kind::Root) => GeneratorTag::RootRootMult,
        (Kind::Rational, Kind::Mixed) => GeneratorTag::RatMixed,
        (Kind::Root, Kind::Mixed) => GeneratorTag::RootMixed,
        (Kind::Mixed, Kind::Mixed) => GeneratorTag::MixedMixed,
        _ => unreachable!("pair is sorted by kind"),
    };
    Ok(GeneratorPair {
        alpha1,
        alpha2,
        ctx,
        tag,
        swapped,
    })
}

/// Generic spanning test: the pair spans 1 iff the `Z`-lattice generated by
/// `α₁, √m·α₁, α₂, √m·α₂` (as vectors of parts) is all of `Z²`, i.e. iff
/// the gcd of the 2×2 minors of that 2×4 matrix is 1.
pub fn lattice_spans_one(alpha1: QuadInt, alpha2: QuadInt, ctx: RingContext) -> Result<bool> {
    let cols = [
        alpha1,
        ctx.mul(QuadInt::ROOT, alpha1)?,
        alpha2,
        ctx.mul(QuadInt::ROOT, alpha2)?,
    ];
    let mut g = 0;
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            let minor = quad::sub(
                quad::mul(cols[i].rat, cols[j].irr)?,
                quad::mul(cols[j].rat, cols[i].irr)?,
            )?;
            g = gcd(g, minor);
            if g == 1 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether the pair generates the unit ideal of `Z[√m]`.
pub fn spans_one(pair: &GeneratorPair) -> Result<bool> {
    let (a1, a2, m) = (pair.alpha1, pair.alpha2, pair.ctx.m());
    Ok(match pair.tag {
        GeneratorTag::RatRat => gcd(a1.rat, a2.rat) == 1,
        GeneratorTag::RatRootMult => gcd(a1.rat, quad::mul(a2.irr, m)?) == 1,
        GeneratorTag::RootRootMult => false,
        GeneratorTag::RatMixed => gcd(a1.rat, pair.ctx.norm(a2)?) == 1,
        GeneratorTag::RootMixed => gcd(quad::mul(a1.irr, m)?, pair.ctx.norm(a2)?) == 1,
        GeneratorTag::MixedMixed => lattice_spans_one(a1, a2, pair.ctx)?,
    })
}

/// Shape of `Frob(α₁, α₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrobResult {
    /// The pair does not span 1, so no element has its quadrant in `SG`.
    NotSpanning,
    /// Spans 1, but both generators are fully mixed.
    EmptyFrob,
    /// `Frob = corner + N[√m]`.
    Cone(QuadInt),
}

impl FrobResult {
    pub fn corner(&self) -> Option<QuadInt> {
        match self {
            FrobResult::Cone(c) => Some(*c),
            _ => None,
        }
    }
}

/// `(α₁−1)(α₂−1)(1+√m)` in exact ring arithmetic.
pub fn corner_product(alpha1: QuadInt, alpha2: QuadInt, ctx: RingContext) -> Result<QuadInt> {
    let left = alpha1.checked_sub(QuadInt::ONE)?;
    let right = alpha2.checked_sub(QuadInt::ONE)?;
    ctx.mul(ctx.mul(left, right)?, QuadInt::new(1, 1))
}

pub fn frobenius_set(pair: &GeneratorPair) -> Result<FrobResult> {
    if !spans_one(pair)? {
        return Ok(FrobResult::NotSpanning);
    }
    match pair.tag {
        GeneratorTag::MixedMixed => Ok(FrobResult::EmptyFrob),
        GeneratorTag::RootRootMult => Ok(FrobResult::NotSpanning),
        _ => Ok(FrobResult::Cone(corner_product(
            pair.alpha1,
            pair.alpha2,
            pair.ctx,
        )?)),
    }
}

/// Nonnegative certificate for a target at or above the closed-form
/// frontier of a mixed system.
pub fn representable_above(sys: &MixedSystem) -> Result<Certificate> {
    let bound = sys.frontier()?;
    let target = sys.target();
    if !target.dominates(&bound) {
        return Err(Error::BelowFrontier { target, bound });
    }
    let canonical = sys.solve_canonical()?;
    debug_assert!(canonical.sol.x >= 0 && canonical.sol.y >= 0);
    Ok(Certificate::new(
        canonical.sol.lambda1(),
        canonical.sol.lambda2(),
    ))
}

/// Membership through the formula route for the pair's shape, or `None`
/// when no formula route exists (two mixed generators, two `√m`
/// multiples, or a mixed pair that does not span 1). Certificates are
/// given in the pair's normalized generator order.
pub fn formula_member(pair: &GeneratorPair, target: QuadInt) -> Result<Option<MembershipResult>> {
    match pair.tag {
        GeneratorTag::RatRat | GeneratorTag::RatRootMult => {
            let shape = pair.split_shape().expect("split tag");
            member_split(shape, target, pair.ctx).map(Some)
        }
        GeneratorTag::RatMixed | GeneratorTag::RootMixed => match pair.mixed_system(target) {
            Ok(sys) => member_mixed(&sys).map(Some),
            Err(Error::NotCoprime { .. }) => Ok(None),
            Err(e) => Err(e),
        },
        GeneratorTag::RootRootMult | GeneratorTag::MixedMixed => Ok(None),
    }
}
