//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails.
//!
//! Run with `cargo test -p frobq --test acceptance -- --nocapture` to see
//! the report.

use frobq::region::{verify_box_par, verify_region_par};
use frobq_core::*;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RADICANDS: [i128; 3] = [2, 3, 5];
const TARGETS_PER_SYSTEM: usize = 50;
const PRESHIFTS: usize = 20;
const TARGET_RANGE: (i128, i128) = (-20, 50);
const BOX_LOW: i128 = -3;
const BOX_PAD: i128 = 8;
const REGION_PAD: i128 = 8;
const WITNESS_COUNT: i128 = 4;
const ALGEBRA_PAIRS: usize = 1000;

/// Every (case, m, a, b, c) in the sweep that satisfies the gcd precondition.
fn sweep(case: Case) -> Vec<MixedSystem> {
    let mut out = Vec::new();
    for m in RADICANDS {
        let ctx = RingContext::new(m).unwrap();
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    if let Ok(sys) = MixedSystem::new(case, a, b, c, ctx, QuadInt::ZERO) {
                        out.push(sys);
                    }
                }
            }
        }
    }
    out
}

fn pair_of(sys: &MixedSystem) -> GeneratorPair {
    classify(sys.alpha1(), sys.alpha2(), sys.ctx()).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: u32, title: &str, outcome: &Outcome) {
    let tag = if outcome.pass { "PASS" } else { "FAIL" };
    println!("[{tag}] AC{id} {title}: {}", outcome.detail);
}

fn canonical_correctness(case: Case, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let systems = sweep(case);
    let mut failures = Vec::new();
    let mut checks = 0usize;
    for base in &systems {
        for _ in 0..TARGETS_PER_SYSTEM {
            let t = QuadInt::new(
                rng.random_range(TARGET_RANGE.0..=TARGET_RANGE.1),
                rng.random_range(TARGET_RANGE.0..=TARGET_RANGE.1),
            );
            let sys = base.with_target(t);
            let canon = sys.solve_canonical().unwrap();
            let s = canon.sol;
            let ok = sys.is_solution(&s).unwrap()
                && (0..canon.zmod).contains(&s.z)
                && (0..canon.wmod).contains(&s.w);
            if !ok {
                failures.push(format!("{:?} target {t}", sys.coefficients()));
                continue;
            }
            let particular = sys.particular_solution().unwrap();
            for _ in 0..PRESHIFTS {
                let k = rng.random_range(-25i128..=25);
                let l = rng.random_range(-25i128..=25);
                let moved = sys
                    .shift_primary(&sys.shift_secondary(&particular, l).unwrap(), k)
                    .unwrap();
                checks += 1;
                if sys.canonicalize(&moved).unwrap() != canon {
                    failures.push(format!("{:?} target {t} k={k} l={l}", sys.coefficients()));
                }
            }
        }
    }
    Outcome {
        pass: failures.is_empty() && !systems.is_empty(),
        detail: format!(
            "{} systems x {TARGETS_PER_SYSTEM} targets, {checks} pre-shift checks, {} failures {:?}",
            systems.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn membership_equivalence() -> Outcome {
    let mut points = 0usize;
    let mut mismatches = Vec::new();
    let mut systems = 0usize;
    for case in [Case::RationalGen, Case::RootGen] {
        for sys in sweep(case) {
            systems += 1;
            let pair = pair_of(&sys);
            let corner = sys.frontier().unwrap();
            let bounds =
                TargetBox::new(BOX_LOW, corner.rat + BOX_PAD, BOX_LOW, corner.irr + BOX_PAD)
                    .unwrap();
            let rep = verify_box_par(&pair, &bounds).unwrap();
            points += rep.total;
            for row in rep.mismatches {
                mismatches.push(format!(
                    "{:?} m={} at {}",
                    sys.coefficients(),
                    sys.ctx().m(),
                    row.target
                ));
            }
        }
    }
    Outcome {
        pass: mismatches.is_empty(),
        detail: format!(
            "{systems} systems, {points} lattice points, {} mismatches {:?}",
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

/// Frontier expansions written out from the bounds of the existence results.
fn expected_corner(sys: &MixedSystem) -> QuadInt {
    let (a, b, c) = sys.coefficients();
    let m = sys.ctx().m();
    match sys.case() {
        Case::RationalGen => QuadInt::new((a - 1) * (b - 1 + c * m), (a - 1) * (b - 1 + c)),
        Case::RootGen => QuadInt::new(
            a * b * m + a * c * m - a * m - c * m - b + 1,
            a * c * m + a * b - a - b - c + 1,
        ),
    }
}

fn frontier_reproduction() -> Outcome {
    let mut bad = Vec::new();
    let mut systems = 0usize;
    for case in [Case::RationalGen, Case::RootGen] {
        for sys in sweep(case) {
            systems += 1;
            let got = frobenius_set(&pair_of(&sys)).unwrap();
            if got != FrobResult::Cone(expected_corner(&sys)) {
                bad.push(format!(
                    "{:?} m={}: {got:?}",
                    sys.coefficients(),
                    sys.ctx().m()
                ));
            }
        }
    }
    let r2 = RingContext::new(2).unwrap();
    let named = [
        (QuadInt::new(3, 0), QuadInt::new(1, 1), QuadInt::new(4, 2)),
        (QuadInt::new(0, 1), QuadInt::new(1, 1), QuadInt::new(0, 1)),
    ];
    for (g1, g2, corner) in named {
        let pair = classify(g1, g2, r2).unwrap();
        let rep = verify_region_par(&pair, REGION_PAD).unwrap();
        if rep.corner != corner || !rep.is_clean() {
            bad.push(format!(
                "Frob({g1}, {g2}) corner {} mismatches {} violations {}",
                rep.corner,
                rep.mismatches.len(),
                rep.cone_violations.len()
            ));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "{systems} closed-form corners, Frob(3, 1+r)=4+2r and Frob(r, 1+r)=0+1r region-verified at pad {REGION_PAD}; {} failures {:?}",
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn witness_non_membership() -> Outcome {
    let (mut checked, mut skipped) = (0usize, 0usize);
    let mut bad = Vec::new();
    for case in [Case::RationalGen, Case::RootGen] {
        for sys in sweep(case) {
            let rep = falsify_frontier(&pair_of(&sys), WITNESS_COUNT).unwrap();
            checked += rep.checked();
            skipped += rep.entries.len() - rep.checked();
            for e in rep.failures() {
                bad.push(format!(
                    "{:?} m={} witness {}",
                    sys.coefficients(),
                    sys.ctx().m(),
                    e.target
                ));
            }
        }
    }
    Outcome {
        pass: bad.is_empty() && checked > 0,
        detail: format!(
            "{checked} witnesses oracle-rejected with predicted canonical form, {skipped} skipped (negative part), {} failures {:?}",
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn split_cases() -> Outcome {
    let mut bad = Vec::new();
    let mut verified = 0usize;
    for m in [2i128, 3] {
        let ctx = RingContext::new(m).unwrap();
        for (a, b) in [(2i128, 3i128), (3, 4), (2, 5), (3, 1)] {
            let mut shapes = Vec::new();
            if a != 3 || b != 1 {
                let g = (a - 1) * (b - 1);
                shapes.push((QuadInt::new(a, 0), QuadInt::new(b, 0), QuadInt::new(g, g)));
            }
            if gcd(a, b * m) == 1 {
                shapes.push((
                    QuadInt::new(a, 0),
                    QuadInt::new(0, b),
                    QuadInt::new((a - 1) * (b * m - 1), (a - 1) * (b - 1)),
                ));
            }
            for (g1, g2, corner) in shapes {
                let pair = classify(g1, g2, ctx).unwrap();
                let rep = verify_region_par(&pair, REGION_PAD).unwrap();
                let wit = falsify_frontier(&pair, WITNESS_COUNT).unwrap();
                verified += 1;
                if rep.corner != corner || !rep.is_clean() || !wit.is_clean() {
                    bad.push(format!("m={m} ({g1}, {g2}) corner {}", rep.corner));
                }
            }
        }
    }
    let frob_3_r2 = frobenius_set(
        &classify(
            QuadInt::new(3, 0),
            QuadInt::ROOT,
            RingContext::new(2).unwrap(),
        )
        .unwrap(),
    )
    .unwrap();
    if frob_3_r2 != FrobResult::Cone(QuadInt::new(2, 0)) {
        bad.push(format!("Frob(3, r) with m=2 is {frob_3_r2:?}"));
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "{verified} split pairs region- and witness-verified, Frob(3, r)=2+0r at m=2; {} failures {:?}",
            bad.len(),
            bad
        ),
    }
}

fn spanning_criteria() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    for m in RADICANDS {
        let ctx = RingContext::new(m).unwrap();
        for a in 1..=4i128 {
            for b in 1..=4i128 {
                for c in 1..=4i128 {
                    for alpha1 in [QuadInt::new(a, 0), QuadInt::new(0, a)] {
                        pairs += 1;
                        let alpha2 = QuadInt::new(b, c);
                        let pair = classify(alpha1, alpha2, ctx).unwrap();
                        let by_gcd = spans_one(&pair).unwrap();
                        let by_lattice = lattice_spans_one(alpha1, alpha2, ctx).unwrap();
                        let constructive = match pair.mixed_system(QuadInt::ONE) {
                            Ok(sys) => {
                                let s = sys.particular_solution().unwrap();
                                sys.is_solution(&s).unwrap()
                            }
                            Err(Error::NotCoprime { .. }) => false,
                            Err(e) => panic!("{e}"),
                        };
                        if by_gcd != by_lattice || by_gcd != constructive {
                            bad.push(format!("m={m} ({alpha1}, {alpha2})"));
                        }
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "{pairs} pairs, gcd = lattice = constructive; {} disagreements {:?}",
            bad.len(),
            bad
        ),
    }
}

fn algebra_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0A16_EB4A);
    let mut bad = Vec::new();
    let big = 1i128 << 40;
    for i in 0..ALGEBRA_PAIRS {
        let ctx = RingContext::new([2, 3, 5, 6, 7, 10, 9973][i % 7]).unwrap();
        let mut q = || {
            QuadInt::new(
                rng.random_range(-100_000i128..=100_000),
                rng.random_range(-100_000i128..=100_000),
            )
        };
        let (x, y) = (q(), q());
        let prod = ctx.mul(x, y).unwrap();
        if ctx.norm(prod).unwrap() != ctx.norm(x).unwrap() * ctx.norm(y).unwrap() {
            bad.push(format!("norm {x} {y}"));
        }
        let lhs = prod.conjugate().unwrap();
        let rhs = ctx
            .mul(x.conjugate().unwrap(), y.conjugate().unwrap())
            .unwrap();
        if lhs != rhs {
            bad.push(format!("conjugate {x} {y}"));
        }
    }
    for _ in 0..ALGEBRA_PAIRS {
        let (p, q) = (rng.random_range(-big..=big), rng.random_range(-big..=big));
        if p == 0 && q == 0 {
            continue;
        }
        let r = egcd(p, q).unwrap();
        if r.u * p + r.v * q != r.g || r.g != gcd(p, q) {
            bad.push(format!("egcd({p}, {q})"));
        }
    }
    for _ in 0..ALGEBRA_PAIRS {
        let n = rng.random_range(-big..=big);
        let d = rng.random_range(1..=1_000_000i128);
        let (q, r) = floor_divmod(n, d).unwrap();
        if q * d + r != n || !(0..d).contains(&r) {
            bad.push(format!("floor_divmod({n}, {d})"));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "{ALGEBRA_PAIRS} pairs each for norm/conjugation, egcd, floor_divmod; {} failures {:?}",
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

#[test]
fn acceptance() {
    let results = [
        (
            1,
            "canonical solution, pure rational generator",
            canonical_correctness(Case::RationalGen, 1),
        ),
        (
            2,
            "canonical solution, sqrt(m)-multiple generator",
            canonical_correctness(Case::RootGen, 2),
        ),
        (
            3,
            "membership equivalence with the oracle",
            membership_equivalence(),
        ),
        (4, "frontier reproduction", frontier_reproduction()),
        (5, "witness non-membership", witness_non_membership()),
        (6, "split cases", split_cases()),
        (7, "spanning criteria", spanning_criteria()),
        (8, "algebra suite", algebra_suite()),
    ];
    for (id, title, outcome) in &results {
        report(*id, title, outcome);
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
