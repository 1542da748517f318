//! Integer solutions of the two mixed linear systems
//!
//! ```text
//! RationalGen:  a(x+y√m)  + (b+c√m)(z+w√m) = A+B√m
//! RootGen:      a√m(x+y√m) + (b+c√m)(z+w√m) = A+B√m
//! ```
//!
//! Writing out rational and irrational parts gives two scalar equations in
//! four unknowns. When the gcd precondition holds every target is solvable,
//! the solution set is a rank-two lattice coset, and there is exactly one
//! solution with `0 <= z < zmod`, `0 <= w < a`. That canonical solution is
//! found by two floor-division shifts along the lattice directions.

use crate::error::{Error, Result};
use crate::quad::{self, egcd, floor_divmod, gcd, QuadInt, RingContext};

/// Which pure generator sits next to the mixed generator `b + c√m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// First generator is the integer `a`.
    RationalGen,
    /// First generator is `a√m`.
    RootGen,
}

/// An integer 4-tuple `(x, y, z, w)`, i.e. the pair of coefficients
/// `x + y√m` and `z + w√m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Solution4 {
    pub x: i128,
    pub y: i128,
    pub z: i128,
    pub w: i128,
}

impl Solution4 {
    pub const fn new(x: i128, y: i128, z: i128, w: i128) -> Self {
        Solution4 { x, y, z, w }
    }

    /// `self + k·step`, componentwise.
    fn offset(&self, step: &Solution4, k: i128) -> Result<Solution4> {
        Ok(Solution4 {
            x: quad::add(self.x, quad::mul(step.x, k)?)?,
            y: quad::add(self.y, quad::mul(step.y, k)?)?,
            z: quad::add(self.z, quad::mul(step.z, k)?)?,
            w: quad::add(self.w, quad::mul(step.w, k)?)?,
        })
    }

    /// The first coefficient `x + y√m`.
    pub fn lambda1(&self) -> QuadInt {
        QuadInt::new(self.x, self.y)
    }

    /// The second coefficient `z + w√m`.
    pub fn lambda2(&self) -> QuadInt {
        QuadInt::new(self.z, self.w)
    }
}

/// The unique solution with `0 <= z < zmod` and `0 <= w < wmod`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalSolution {
    pub sol: Solution4,
    pub zmod: i128,
    pub wmod: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixedSystem {
    case: Case,
    a: i128,
    b: i128,
    c: i128,
    ctx: RingContext,
    target: QuadInt,
    norm: i128,
}

impl MixedSystem {
    /// Builds the system, rejecting coefficients below 1 and pairs failing
    /// the spanning criterion `gcd(a, b²−c²m) = 1` (resp. `gcd(am, b²−c²m) = 1`).
    pub fn new(
        case: Case,
        a: i128,
        b: i128,
        c: i128,
        ctx: RingContext,
        target: QuadInt,
    ) -> Result<Self> {
        if a < 1 || b < 1 || c < 1 {
            return Err(Error::NonPositiveCoefficient);
        }
        let norm = ctx.norm(QuadInt::new(b, c))?;
        let modulus = match case {
            Case::RationalGen => a,
            Case::RootGen => quad::mul(a, ctx.m())?,
        };
        if gcd(modulus, norm) != 1 {
            return Err(Error::NotCoprime { modulus, norm });
        }
        Ok(MixedSystem {
            case,
            a,
            b,
            c,
            ctx,
            target,
            norm,
        })
    }

    /// Same coefficients, different right-hand side.
    pub fn with_target(&self, target: QuadInt) -> MixedSystem {
        MixedSystem { target, ..*self }
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn coefficients(&self) -> (i128, i128, i128) {
        (self.a, self.b, self.c)
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn target(&self) -> QuadInt {
        self.target
    }

    /// `b² − c²m`, the norm of the mixed generator.
    pub fn norm(&self) -> i128 {
        self.norm
    }

    /// The pure generator: `a` or `a√m`.
    pub fn alpha1(&self) -> QuadInt {
        match self.case {
            Case::RationalGen => QuadInt::new(self.a, 0),
            Case::RootGen => QuadInt::new(0, self.a),
        }
    }

    /// The mixed generator `b + c√m`.
    pub fn alpha2(&self) -> QuadInt {
        QuadInt::new(self.b, self.c)
    }

    /// Modulus of the canonical `z` range: `a`, or `a·m` for [`Case::RootGen`].
    pub fn zmod(&self) -> i128 {
        match self.case {
            Case::RationalGen => self.a,
            // cannot overflow: checked in `new`
            Case::RootGen => self.a * self.ctx.m(),
        }
    }

    pub fn wmod(&self) -> i128 {
        self.a
    }

    /// Left-hand sides of the two scalar equations evaluated at `sol`,
    /// as `(rational, irrational)`.
    pub fn evaluate(&self, sol: &Solution4) -> Result<QuadInt> {
        let (a, b, c, m) = (self.a, self.b, self.c, self.ctx.m());
        let cm = quad::mul(c, m)?;
        let mixed_rat = quad::add(quad::mul(b, sol.z)?, quad::mul(cm, sol.w)?)?;
        let mixed_irr = quad::add(quad::mul(c, sol.z)?, quad::mul(b, sol.w)?)?;
        let (rat, irr) = match self.case {
            // a·x + b·z + c·m·w,  a·y + c·z + b·w
            Case::RationalGen => (
                quad::add(quad::mul(a, sol.x)?, mixed_rat)?,
                quad::add(quad::mul(a, sol.y)?, mixed_irr)?,
            ),
            // a·m·y + b·z + c·m·w,  a·x + c·z + b·w
            Case::RootGen => (
                quad::add(quad::mul(quad::mul(a, m)?, sol.y)?, mixed_rat)?,
                quad::add(quad::mul(a, sol.x)?, mixed_irr)?,
            ),
        };
        Ok(QuadInt::new(rat, irr))
    }

    pub fn is_solution(&self, sol: &Solution4) -> Result<bool> {
        Ok(self.evaluate(sol)? == self.target)
    }

    /// Lattice direction moved by [`shift_primary`](Self::shift_primary).
    pub fn primary_step(&self) -> Result<Solution4> {
        let (a, b, c, m) = (self.a, self.b, self.c, self.ctx.m());
        let b_minus_cm = quad::sub(b, quad::mul(c, m)?)?;
        let b_minus_c = b - c;
        Ok(match self.case {
            Case::RationalGen => Solution4::new(quad::neg(b_minus_cm)?, b_minus_c, a, -a),
            Case::RootGen => Solution4::new(b_minus_cm, -b_minus_c, self.zmod(), -a),
        })
    }

    /// Lattice direction moved by [`shift_secondary`](Self::shift_secondary).
    pub fn secondary_step(&self) -> Result<Solution4> {
        let (a, b, c, m) = (self.a, self.b, self.c, self.ctx.m());
        Ok(match self.case {
            Case::RationalGen => Solution4::new(b, c, -a, 0),
            Case::RootGen => Solution4::new(quad::mul(c, m)?, b, -self.zmod(), 0),
        })
    }

    /// Some integer solution, built from a Bezout pair of
    /// `(a, b²−c²m)` (resp. `(am, b²−c²m)`).
    pub fn particular_solution(&self) -> Result<Solution4> {
        let bezout = egcd(self.zmod(), self.norm)?;
        debug_assert_eq!(bezout.g, 1);
        let first = match self.case {
            Case::RationalGen => self.ctx.scale(self.target, bezout.u)?,
            Case::RootGen => self
                .ctx
                .mul(QuadInt::ROOT, self.ctx.scale(self.target, bezout.u)?)?,
        };
        let conj = self.alpha2().conjugate()?;
        let second = self.ctx.mul(conj, self.ctx.scale(self.target, bezout.v)?)?;
        Ok(Solution4::new(first.rat, first.irr, second.rat, second.irr))
    }

    /// Moves `sol` by `k` steps along the direction that changes `w` by `−a·k`.
    pub fn shift_primary(&self, sol: &Solution4, k: i128) -> Result<Solution4> {
        sol.offset(&self.primary_step()?, k)
    }

    /// Moves `sol` by `l` steps along the direction that changes only `x`, `y`, `z`.
    pub fn shift_secondary(&self, sol: &Solution4, l: i128) -> Result<Solution4> {
        sol.offset(&self.secondary_step()?, l)
    }

    /// Reduces `w` into `[0, a)` and then `z` into `[0, zmod)`.
    pub fn canonicalize(&self, sol: &Solution4) -> Result<CanonicalSolution> {
        let (k, _) = floor_divmod(sol.w, self.wmod())?;
        let shifted = self.shift_primary(sol, k)?;
        let (l, _) = floor_divmod(shifted.z, self.zmod())?;
        let reduced = self.shift_secondary(&shifted, l)?;
        Ok(CanonicalSolution {
            sol: reduced,
            zmod: self.zmod(),
            wmod: self.wmod(),
        })
    }

    pub fn solve_canonical(&self) -> Result<CanonicalSolution> {
        self.canonicalize(&self.particular_solution()?)
    }

    /// The frontier element from the closed-form bounds: every target
    /// dominating it componentwise is representable over `N[√m]`.
    ///
    /// RationalGen: `((a−1)(b−1+cm), (a−1)(b−1+c))`.
    /// RootGen: `(abm+acm−am−cm−b+1, acm+ab−a−b−c+1)`.
    pub fn frontier(&self) -> Result<QuadInt> {
        let (a, b, c, m) = (self.a, self.b, self.c, self.ctx.m());
        let cm = quad::mul(c, m)?;
        match self.case {
            Case::RationalGen => Ok(QuadInt::new(
                quad::mul(a - 1, quad::add(b - 1, cm)?)?,
                quad::mul(a - 1, b - 1 + c)?,
            )),
            Case::RootGen => {
                let am = quad::mul(a, m)?;
                let abm = quad::mul(am, b)?;
                let acm = quad::mul(am, c)?;
                let ab = quad::mul(a, b)?;
                let rat = quad::sum(&[abm, acm, -am, -cm, -b, 1])?;
                let irr = quad::sum(&[acm, ab, -a, -b, -c, 1])?;
                Ok(QuadInt::new(rat, irr))
            }
        }
    }
}
