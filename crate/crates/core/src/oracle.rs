//! Brute-force ground truth.
//!
//! [`oracle_member`] enumerates coefficients straight from the semigroup
//! definition and shares no code with the canonical-solution route. The
//! region and witness checks then compare the closed forms against it on
//! finite boxes.

use alloc::vec::Vec;

use crate::diophantine::Solution4;
use crate::error::{Error, Result};
use crate::frobenius::{formula_member, frobenius_set, FrobResult, GeneratorPair, GeneratorTag};
use crate::membership::{Certificate, MembershipResult};
use crate::quad::{self, QuadInt, RingContext};

/// Inclusive bounds on the rational (`a_*`) and irrational (`b_*`) parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TargetBox {
    pub a_min: i128,
    pub a_max: i128,
    pub b_min: i128,
    pub b_max: i128,
}

impl TargetBox {
    pub fn new(a_min: i128, a_max: i128, b_min: i128, b_max: i128) -> Result<Self> {
        if a_min > a_max || b_min > b_max {
            return Err(Error::InvalidBox);
        }
        Ok(TargetBox {
            a_min,
            a_max,
            b_min,
            b_max,
        })
    }

    /// `[−⌈pad/2⌉, corner.rat + pad] × [−⌈pad/2⌉, corner.irr + pad]`.
    pub fn around_corner(corner: QuadInt, pad: i128) -> Result<Self> {
        let margin = -((pad + 1) / 2);
        TargetBox::new(
            margin.min(0),
            quad::add(corner.rat, pad)?,
            margin.min(0),
            quad::add(corner.irr, pad)?,
        )
    }

    pub fn len(&self) -> usize {
        let width = (self.a_max - self.a_min + 1) as usize;
        let height = (self.b_max - self.b_min + 1) as usize;
        width * height
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lattice points in `(rational, irrational)` lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = QuadInt> + '_ {
        (self.a_min..=self.a_max)
            .flat_map(move |a| (self.b_min..=self.b_max).map(move |b| QuadInt::new(a, b)))
    }
}

/// Largest `v >= 0` with `coef·v <= total` over every equation where the
/// coefficient is positive.
fn var_bound(terms: [(i128, i128); 2]) -> i128 {
    terms
        .iter()
        .filter(|(coef, _)| *coef > 0)
        .map(|(coef, total)| total / coef)
        .min()
        .expect("every variable has a positive coefficient in some equation")
}

/// Exact solve of `λ·alpha = residual` for `λ` over `N[√m]`.
fn divide_natural(residual: QuadInt, alpha: QuadInt, ctx: RingContext) -> Result<Option<QuadInt>> {
    let det = ctx.norm(alpha)?;
    let m = ctx.m();
    let p_num = quad::sub(
        quad::mul(residual.rat, alpha.rat)?,
        quad::mul(quad::mul(alpha.irr, m)?, residual.irr)?,
    )?;
    let q_num = quad::sub(
        quad::mul(residual.irr, alpha.rat)?,
        quad::mul(alpha.irr, residual.rat)?,
    )?;
    if p_num % det != 0 || q_num % det != 0 {
        return Ok(None);
    }
    let lambda = QuadInt::new(p_num / det, q_num / det);
    Ok(lambda.is_natural().then_some(lambda))
}

/// Exhaustive membership test over the coefficient box implied by the
/// target.
///
/// Coefficients `(p, q)` of one generator range over `0..=bound`, each bound
/// coming from a positive generator part in one of the two scalar
/// equations; the other generator's coefficients are then forced and
/// checked for integrality and sign. The first certificate found in
/// lexicographic order is returned.
pub fn oracle_member(
    alpha1: QuadInt,
    alpha2: QuadInt,
    target: QuadInt,
    ctx: RingContext,
) -> Result<MembershipResult> {
    if !alpha1.is_natural() || !alpha2.is_natural() || alpha1.is_zero() || alpha2.is_zero() {
        return Err(Error::InvalidGenerator(
            if alpha1.is_natural() && !alpha1.is_zero() {
                alpha2
            } else {
                alpha1
            },
        ));
    }
    if !target.is_natural() {
        return Ok(MembershipResult::non_member());
    }
    let m = ctx.m();
    let bounds = |g: QuadInt| -> Result<(i128, i128)> {
        let gm = quad::mul(g.irr, m)?;
        Ok((
            var_bound([(g.rat, target.rat), (g.irr, target.irr)]),
            var_bound([(gm, target.rat), (g.rat, target.irr)]),
        ))
    };
    // walk the smaller coefficient box
    let (b1, b2) = (bounds(alpha1)?, bounds(alpha2)?);
    let cost = |b: (i128, i128)| (b.0 + 1).saturating_mul(b.1 + 1);
    let walk_first = cost(b1) < cost(b2);
    let (walked, forced, (p_max, q_max)) = if walk_first {
        (alpha1, alpha2, b1)
    } else {
        (alpha2, alpha1, b2)
    };
    for p in 0..=p_max {
        for q in 0..=q_max {
            let lambda = QuadInt::new(p, q);
            let residual = target.checked_sub(ctx.mul(lambda, walked)?)?;
            if !residual.is_natural() {
                // residual only shrinks as q grows
                break;
            }
            if let Some(other) = divide_natural(residual, forced, ctx)? {
                let cert = if walk_first {
                    Certificate::new(lambda, other)
                } else {
                    Certificate::new(other, lambda)
                };
                return Ok(MembershipResult::member(cert));
            }
        }
    }
    Ok(MembershipResult::non_member())
}

/// Formula and oracle verdicts at one lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegionRow {
    pub target: QuadInt,
    pub formula: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport {
    pub corner: QuadInt,
    pub total: usize,
    pub agreements: usize,
    pub mismatches: Vec<RegionRow>,
    /// Points dominating the corner that the oracle rejects.
    pub cone_violations: Vec<QuadInt>,
    /// Every evaluated point, sorted by target.
    pub rows: Vec<RegionRow>,
}

impl RegionReport {
    /// Builds the report from rows evaluated in any order.
    pub fn assemble(corner: QuadInt, mut rows: Vec<RegionRow>) -> Self {
        rows.sort_unstable_by_key(|r| r.target);
        let mismatches: Vec<_> = rows
            .iter()
            .filter(|r| r.formula != r.oracle)
            .copied()
            .collect();
        let cone_violations = rows
            .iter()
            .filter(|r| r.target.dominates(&corner) && !r.oracle)
            .map(|r| r.target)
            .collect();
        RegionReport {
            corner,
            total: rows.len(),
            agreements: rows.len() - mismatches.len(),
            mismatches,
            cone_violations,
            rows,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.cone_violations.is_empty()
    }
}

/// The corner of a pair whose Frobenius set is a cone.
pub fn cone_corner(pair: &GeneratorPair) -> Result<QuadInt> {
    match frobenius_set(pair)? {
        FrobResult::Cone(corner) => Ok(corner),
        _ => Err(Error::NoCone),
    }
}

/// Evaluates both deciders at one point.
pub fn check_point(pair: &GeneratorPair, target: QuadInt) -> Result<RegionRow> {
    let formula = formula_member(pair, target)?.ok_or(Error::NoCone)?;
    let oracle = oracle_member(pair.alpha1(), pair.alpha2(), target, pair.ctx())?;
    Ok(RegionRow {
        target,
        formula: formula.member,
        oracle: oracle.member,
    })
}

/// Compares the formula decider with the oracle over every point of `bounds`.
pub fn verify_box(pair: &GeneratorPair, bounds: &TargetBox) -> Result<RegionReport> {
    let corner = cone_corner(pair)?;
    let rows = bounds
        .points()
        .map(|t| check_point(pair, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(RegionReport::assemble(corner, rows))
}

/// [`verify_box`] over [`TargetBox::around_corner`].
pub fn verify_region(pair: &GeneratorPair, pad: i128) -> Result<RegionReport> {
    let corner = cone_corner(pair)?;
    verify_box(pair, &TargetBox::around_corner(corner, pad)?)
}

/// Which coordinate of the frontier a witness family sits just below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessFamily {
    /// Rational part one below the corner, irrational part growing.
    RationalGap,
    /// Irrational part one below the corner, rational part growing.
    IrrationalGap,
}

impl WitnessFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            WitnessFamily::RationalGap => "rational-gap",
            WitnessFamily::IrrationalGap => "irrational-gap",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessEntry {
    pub family: WitnessFamily,
    pub index: i128,
    pub target: QuadInt,
    /// The canonical solution the construction predicts (mixed shapes only).
    pub expected_canonical: Option<Solution4>,
    /// Whether the computed canonical solution equals the prediction.
    pub canonical_ok: Option<bool>,
    /// Oracle verdict, `None` when the witness has a negative part and was skipped.
    pub oracle_member: Option<bool>,
}

impl WitnessEntry {
    pub fn skipped(&self) -> bool {
        self.oracle_member.is_none()
    }

    /// Every witness is expected to be a non-member.
    pub fn failed(&self) -> bool {
        self.oracle_member == Some(true) || self.canonical_ok == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub tag: GeneratorTag,
    pub entries: Vec<WitnessEntry>,
}

impl WitnessReport {
    pub fn failures(&self) -> impl Iterator<Item = &WitnessEntry> {
        self.entries.iter().filter(|e| e.failed())
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn checked(&self) -> usize {
        self.entries.iter().filter(|e| !e.skipped()).count()
    }
}

struct Witness {
    family: WitnessFamily,
    index: i128,
    target: QuadInt,
    expected: Option<Solution4>,
}

/// Targets just below the frontier that must not be representable.
fn witness_targets(pair: &GeneratorPair, count: i128) -> Result<Vec<Witness>> {
    use WitnessFamily::*;
    let (a1, a2, m) = (pair.alpha1(), pair.alpha2(), pair.ctx().m());
    let mut out = Vec::new();
    let mut push = |family, index, rat, irr, expected| {
        out.push(Witness {
            family,
            index,
            target: QuadInt::new(rat, irr),
            expected,
        })
    };
    let (add, mul) = (quad::add, quad::mul);
    match pair.tag() {
        GeneratorTag::RatMixed => {
            let (a, b, c) = (a1.rat, a2.rat, a2.irr);
            let cm = mul(c, m)?;
            for k in 0..count {
                // canonical (−1, k, a−1, a−1)
                let rat = mul(a - 1, add(b - 1, cm)?)? - 1;
                let irr = add(mul(a - 1, b + c)?, mul(a, k)?)?;
                push(
                    RationalGap,
                    k,
                    rat,
                    irr,
                    Some(Solution4::new(-1, k, a - 1, a - 1)),
                );
            }
            for l in 0..count {
                // canonical (l, −1, a−1, a−1)
                let rat = add(mul(a - 1, add(b, cm)?)?, mul(a, l)?)?;
                let irr = mul(a - 1, b - 1 + c)? - 1;
                push(
                    IrrationalGap,
                    l,
                    rat,
                    irr,
                    Some(Solution4::new(l, -1, a - 1, a - 1)),
                );
            }
        }
        GeneratorTag::RootMixed => {
            let (a, b, c) = (a1.irr, a2.rat, a2.irr);
            let am = mul(a, m)?;
            let (abm, acm, cm, ab) = (mul(am, b)?, mul(am, c)?, mul(c, m)?, mul(a, b)?);
            for k in 0..count {
                // canonical (k, −1, am−1, a−1)
                let rat = quad::sum(&[abm, acm, -am, -cm, -b])?;
                let irr = quad::sum(&[acm, ab, -b, -c, mul(a, k)?])?;
                push(
                    RationalGap,
                    k,
                    rat,
                    irr,
                    Some(Solution4::new(k, -1, am - 1, a - 1)),
                );
            }
            for l in 0..count {
                // canonical (−1, l, am−1, a−1)
                let rat = quad::sum(&[abm, acm, -cm, -b, mul(am, l)?])?;
                let irr = quad::sum(&[acm, ab, -a, -b, -c])?;
                push(
                    IrrationalGap,
                    l,
                    rat,
                    irr,
                    Some(Solution4::new(-1, l, am - 1, a - 1)),
                );
            }
        }
        GeneratorTag::RatRat | GeneratorTag::RatRootMult => {
            let a = a1.rat;
            let (b, rat_partner) = match pair.tag() {
                GeneratorTag::RatRat => (a2.rat, a2.rat),
                _ => (a2.irr, mul(a2.irr, m)?),
            };
            // classical gaps: SG_Z(a, rat_partner) for the rational part,
            // SG_Z(a, b) for the irrational part
            let rat_gap = mul(a - 1, rat_partner - 1)? - 1;
            let irr_gap = mul(a - 1, b - 1)? - 1;
            let step_rat = mul(a, rat_partner)?;
            let step_irr = mul(a, b)?;
            for k in 0..count {
                push(
                    RationalGap,
                    k,
                    rat_gap,
                    add(irr_gap + 1, mul(step_irr, k)?)?,
                    None,
                );
            }
            for l in 0..count {
                push(
                    IrrationalGap,
                    l,
                    add(rat_gap + 1, mul(step_rat, l)?)?,
                    irr_gap,
                    None,
                );
            }
        }
        GeneratorTag::RootRootMult | GeneratorTag::MixedMixed => return Err(Error::NoCone),
    }
    Ok(out)
}

/// Checks the frontier-minimality witness families of a cone pair against
/// the oracle. Witnesses with a negative part are recorded as skipped.
pub fn falsify_frontier(pair: &GeneratorPair, count: i128) -> Result<WitnessReport> {
    cone_corner(pair)?;
    let mut entries = Vec::new();
    for w in witness_targets(pair, count)? {
        let canonical_ok = match w.expected {
            Some(expected) => {
                let sys = pair.mixed_system(w.target)?;
                let predicted_ok = sys.is_solution(&expected)?;
                Some(predicted_ok && sys.solve_canonical()?.sol == expected)
            }
            None => None,
        };
        let oracle_member = if w.target.is_natural() {
            Some(oracle_member(pair.alpha1(), pair.alpha2(), w.target, pair.ctx())?.member)
        } else {
            None
        };
        entries.push(WitnessEntry {
            family: w.family,
            index: w.index,
            target: w.target,
            expected_canonical: w.expected,
            canonical_ok,
            oracle_member,
        });
    }
    Ok(WitnessReport {
        tag: pair.tag(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::classify;
    use crate::membership::certificate_check;

    fn q(rat: i128, irr: i128) -> QuadInt {
        QuadInt::new(rat, irr)
    }

    fn ctx(m: i128) -> RingContext {
        RingContext::new(m).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let c = ctx(2);
        let r = oracle_member(q(3, 0), q(1, 1), q(4, 2), c).unwrap();
        assert!(r.member);
        assert!(certificate_check(q(3, 0), q(1, 1), q(4, 2), &r.certificate.unwrap(), c).unwrap());
        assert!(!oracle_member(q(3, 0), q(1, 1), q(3, 4), c).unwrap().member);
        let r = oracle_member(q(2, 1), q(1, 3), q(0, 0), c).unwrap();
        assert_eq!(r.certificate, Some(Certificate::zero()));
        assert!(!oracle_member(q(3, 0), q(1, 1), q(-1, 9), c).unwrap().member);
        assert!(oracle_member(q(0, 0), q(1, 1), q(1, 1), c).is_err());
    }

    #[test]
    fn box_geometry() {
        let b = TargetBox::around_corner(q(4, 2), 8).unwrap();
        assert_eq!(b, TargetBox::new(-4, 12, -4, 10).unwrap());
        assert_eq!(b.len(), 17 * 15);
        let pts: Vec<_> = b.points().collect();
        assert_eq!(pts.len(), b.len());
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(TargetBox::around_corner(q(0, 1), 5).unwrap().a_min, -3);
        assert_eq!(TargetBox::new(1, 0, 0, 0), Err(Error::InvalidBox));
    }

    #[test]
    fn region_examples() {
        let pair = classify(q(3, 0), q(1, 1), ctx(2)).unwrap();
        let rep = verify_region(&pair, 8).unwrap();
        assert_eq!(rep.corner, q(4, 2));
        assert_eq!(rep.total, 17 * 15);
        assert!(rep.is_clean(), "{:?}", rep.mismatches);

        let pair = classify(q(2, 0), q(3, 0), ctx(3)).unwrap();
        let rep = verify_region(&pair, 6).unwrap();
        assert_eq!(rep.corner, q(2, 2));
        assert!(rep.is_clean());

        let pair = classify(q(0, 1), q(1, 1), ctx(2)).unwrap();
        let rep = verify_region(&pair, 6).unwrap();
        assert_eq!(rep.corner, q(0, 1));
        assert!(rep.is_clean());

        let pair = classify(q(1, 1), q(2, 1), ctx(2)).unwrap();
        assert_eq!(verify_region(&pair, 4), Err(Error::NoCone));
    }

    #[test]
    fn witness_examples() {
        let pair = classify(q(3, 0), q(1, 1), ctx(2)).unwrap();
        let rep = falsify_frontier(&pair, 3).unwrap();
        let targets: Vec<_> = rep.entries.iter().map(|e| e.target).collect();
        assert_eq!(
            targets,
            [q(3, 4), q(3, 7), q(3, 10), q(6, 1), q(9, 1), q(12, 1)]
        );
        assert!(rep.is_clean());
        assert_eq!(rep.checked(), 6);

        let pair = classify(q(0, 1), q(1, 1), ctx(2)).unwrap();
        let rep = falsify_frontier(&pair, 2).unwrap();
        let rational: Vec<_> = rep
            .entries
            .iter()
            .filter(|e| e.family == WitnessFamily::RationalGap)
            .collect();
        assert!(rational.iter().all(|e| e.skipped() && e.target.rat == -1));
        let irrational: Vec<_> = rep
            .entries
            .iter()
            .filter(|e| e.family == WitnessFamily::IrrationalGap)
            .map(|e| e.target)
            .collect();
        assert_eq!(irrational, [q(1, 0), q(3, 0)]);
        assert!(rep.is_clean());

        let pair = classify(q(2, 0), q(3, 0), ctx(3)).unwrap();
        let rep = falsify_frontier(&pair, 2).unwrap();
        assert!(rep
            .entries
            .iter()
            .all(|e| e.target.rat == 1 || e.target.irr == 1));
        assert!(rep.is_clean());
    }
}
