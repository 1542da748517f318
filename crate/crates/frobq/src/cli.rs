//! `frobq --m M <classify|span|solve|member|frob|verify> GEN1 GEN2 [TARGET]`
//!
//! Exit codes: 0 when the computation finished (whatever the verdict), 1
//! when `verify` found a disagreement, 2 for usage, parse and precondition
//! errors. Nothing is written to stdout unless the command succeeds.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use frobq_core::{
    classify, falsify_frontier, formula_member, frobenius_set, gcd, oracle_member,
    quad::is_nonsquare, FrobResult, GeneratorPair, GeneratorTag, QuadInt, RegionReport,
    RingContext, Solution4, TargetBox, WitnessReport,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::element::{parse_element, ParseElementError};
use crate::json;
use crate::region::verify_box_par;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseElementError),
    #[error(transparent)]
    Core(#[from] frobq_core::Error),
    #[error("writing {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "frobq",
    version,
    about = "Two-generator Frobenius problem of the first kind in Z[√m]",
    after_help = "Elements are written INT, INTr, INT+INTr or INT-INTr, where r stands for √m."
)]
struct Cli {
    /// Radicand: an integer >= 2 that is not a perfect square.
    #[arg(long = "m", value_name = "M", allow_hyphen_values = true)]
    m: String,

    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normalize the generator order and report the shape.
    Classify(PairArgs),
    /// Decide whether the generators span 1.
    Span(PairArgs),
    /// Canonical solution of the mixed system for TARGET.
    Solve(TargetArgs),
    /// Semigroup membership of TARGET, with a certificate.
    Member(TargetArgs),
    /// Closed-form Frobenius set.
    Frob(PairArgs),
    /// Check the frontier against the brute-force oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(value_name = "GEN1", allow_hyphen_values = true)]
    gen1: String,
    #[arg(value_name = "GEN2", allow_hyphen_values = true)]
    gen2: String,
}

#[derive(Debug, Args)]
struct TargetArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(value_name = "TARGET", allow_hyphen_values = true)]
    target: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Box margin beyond the corner.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pad: u32,
    /// Witnesses per frontier family.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,
    /// Write per-point verdicts as CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

struct Outcome {
    text: String,
    result: Value,
    witnesses: Option<Value>,
    failed: bool,
}

impl Outcome {
    fn ok(text: String, result: Value) -> Self {
        Outcome {
            text,
            result,
            witnesses: None,
            failed: false,
        }
    }
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok((header, outcome)) => {
            let written = if cli.json {
                let mut doc = header;
                doc["result"] = outcome.result;
                if let Some(w) = outcome.witnesses {
                    doc["witnesses"] = w;
                }
                writeln!(out, "{doc}")
            } else {
                out.write_all(outcome.text.as_bytes())
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if outcome.failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn parse_ring(m: &str) -> Result<RingContext, CliError> {
    let m: i128 = m
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("m must be an integer (got {m:?})")))?;
    if !is_nonsquare(m) {
        return Err(frobq_core::Error::InvalidRadicand(m).into());
    }
    Ok(RingContext::new(m)?)
}

fn execute(cli: &Cli) -> Result<(Value, Outcome), CliError> {
    let ctx = parse_ring(&cli.m)?;
    let (name, pair_args) = match &cli.command {
        Command::Classify(p) => ("classify", p),
        Command::Span(p) => ("span", p),
        Command::Solve(t) => ("solve", &t.pair),
        Command::Member(t) => ("member", &t.pair),
        Command::Frob(p) => ("frob", p),
        Command::Verify(v) => ("verify", &v.pair),
    };
    let g1 = parse_element(&pair_args.gen1)?;
    let g2 = parse_element(&pair_args.gen2)?;
    let pair = classify(g1, g2, ctx)?;
    let header = json!({
        "command": name,
        "m": json::int(ctx.m()),
        "generators": [g1.to_string(), g2.to_string()],
    });
    let outcome = match &cli.command {
        Command::Classify(_) => cmd_classify(&pair),
        Command::Span(_) => cmd_span(&pair)?,
        Command::Solve(t) => cmd_solve(&pair, parse_element(&t.target)?)?,
        Command::Member(t) => cmd_member(&pair, parse_element(&t.target)?)?,
        Command::Frob(_) => cmd_frob(&pair)?,
        Command::Verify(v) => cmd_verify(&pair, v)?,
    };
    Ok((header, outcome))
}

fn cmd_classify(pair: &GeneratorPair) -> Outcome {
    let text = format!(
        "tag: {}\nalpha1: {}\nalpha2: {}\nswapped: {}\n",
        pair.tag(),
        pair.alpha1(),
        pair.alpha2(),
        pair.swapped()
    );
    Outcome::ok(
        text,
        json!({
            "tag": pair.tag().as_str(),
            "alpha1": json::quad(pair.alpha1()),
            "alpha2": json::quad(pair.alpha2()),
            "swapped": pair.swapped(),
        }),
    )
}

fn cmd_span(pair: &GeneratorPair) -> Result<Outcome, CliError> {
    let spans = frobq_core::spans_one(pair)?;
    let (a1, a2, m) = (pair.alpha1(), pair.alpha2(), pair.ctx().m());
    let gcd_text = |p: i128, q: i128| format!("gcd({p}, {q}) = {}", gcd(p, q));
    let times_m = |v: i128| v.checked_mul(m).ok_or(frobq_core::Error::Overflow);
    let criterion = match pair.tag() {
        GeneratorTag::RatRat => gcd_text(a1.rat, a2.rat),
        GeneratorTag::RatRootMult => gcd_text(a1.rat, times_m(a2.irr)?),
        GeneratorTag::RootRootMult => "both generators are multiples of r".to_string(),
        GeneratorTag::RatMixed => gcd_text(a1.rat, pair.ctx().norm(a2)?),
        GeneratorTag::RootMixed => gcd_text(times_m(a1.irr)?, pair.ctx().norm(a2)?),
        GeneratorTag::MixedMixed => "gcd of 2x2 minors of the ideal lattice".to_string(),
    };
    Ok(Outcome::ok(
        format!("spans 1: {spans}\ncriterion: {criterion}\n"),
        json!({ "spans": spans, "criterion": criterion, "tag": pair.tag().as_str() }),
    ))
}

fn fmt_tuple(s: &Solution4) -> String {
    format!("({}, {}, {}, {})", s.x, s.y, s.z, s.w)
}

fn cmd_solve(pair: &GeneratorPair, target: QuadInt) -> Result<Outcome, CliError> {
    let sys = pair.mixed_system(target)?;
    let particular = sys.particular_solution()?;
    let canon = sys.canonicalize(&particular)?;
    let (primary, secondary) = (sys.primary_step()?, sys.secondary_step()?);
    let text = format!(
        "system: ({})(x+yr) + ({})(z+wr) = {}\n\
         case: {:?}\n\
         canonical: {}  with 0 <= z < {}, 0 <= w < {}\n\
         particular: {}\n\
         primary step: {}\n\
         secondary step: {}\n",
        sys.alpha1(),
        sys.alpha2(),
        target,
        sys.case(),
        fmt_tuple(&canon.sol),
        canon.zmod,
        canon.wmod,
        fmt_tuple(&particular),
        fmt_tuple(&primary),
        fmt_tuple(&secondary),
    );
    Ok(Outcome::ok(
        text,
        json!({
            "case": format!("{:?}", sys.case()),
            "alpha1": json::quad(sys.alpha1()),
            "alpha2": json::quad(sys.alpha2()),
            "target": json::quad(target),
            "canonical": json::tuple(&canon.sol),
            "zmod": json::int(canon.zmod),
            "wmod": json::int(canon.wmod),
            "particular": json::tuple(&particular),
            "primary_step": json::tuple(&primary),
            "secondary_step": json::tuple(&secondary),
        }),
    ))
}

fn cmd_member(pair: &GeneratorPair, target: QuadInt) -> Result<Outcome, CliError> {
    let (result, method) = match formula_member(pair, target)? {
        Some(r) => (r, "formula"),
        None => (
            oracle_member(pair.alpha1(), pair.alpha2(), target, pair.ctx())?,
            "oracle",
        ),
    };
    // report coefficients in the caller's generator order
    let cert = result
        .certificate
        .map(|c| if pair.swapped() { c.swapped() } else { c });
    let mut text = format!("member: {}\nmethod: {method}\n", result.member);
    if let Some(c) = &cert {
        let _ = writeln!(
            text,
            "certificate: lambda1 = {}, lambda2 = {}",
            c.lambda1, c.lambda2
        );
    }
    if let Some(canon) = &result.canonical {
        let _ = writeln!(text, "canonical: {}", fmt_tuple(&canon.sol));
    }
    Ok(Outcome::ok(
        text,
        json!({
            "member": result.member,
            "method": method,
            "target": json::quad(target),
            "certificate": cert.as_ref().map(json::certificate),
            "canonical": result.canonical.as_ref().map(|c| json::tuple(&c.sol)),
        }),
    ))
}

fn cmd_frob(pair: &GeneratorPair) -> Result<Outcome, CliError> {
    let result = frobenius_set(pair)?;
    let (kind, corner) = match result {
        FrobResult::NotSpanning => ("NotSpanning", None),
        FrobResult::EmptyFrob => ("EmptyFrob", None),
        FrobResult::Cone(c) => ("Cone", Some(c)),
    };
    let text = match corner {
        Some(c) => format!("corner: {c}\nFrob = {c} + N[r]\n"),
        None => format!("kind: {kind}\n"),
    };
    Ok(Outcome::ok(
        text,
        json!({ "kind": kind, "corner": corner.map(json::quad) }),
    ))
}

fn write_csv(path: &Path, report: &RegionReport) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["A", "B", "member_formula", "member_oracle"])?;
    for row in &report.rows {
        w.write_record([
            row.target.rat.to_string(),
            row.target.irr.to_string(),
            u8::from(row.formula).to_string(),
            u8::from(row.oracle).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn witness_json(report: &WitnessReport) -> Value {
    report
        .entries
        .iter()
        .map(|e| {
            json!({
                "family": e.family.as_str(),
                "index": json::int(e.index),
                "target": json::quad(e.target),
                "expected_member": false,
                "expected_canonical": e.expected_canonical.as_ref().map(json::tuple),
                "canonical_ok": e.canonical_ok,
                "oracle_member": e.oracle_member,
                "skipped": e.skipped(),
            })
        })
        .collect()
}

fn cmd_verify(pair: &GeneratorPair, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let corner = match frobenius_set(pair)? {
        FrobResult::Cone(c) => c,
        other => {
            return Err(CliError::Usage(format!(
                "verify needs a pair with a cone-shaped Frobenius set (got {other:?})"
            )))
        }
    };
    let bounds = TargetBox::around_corner(corner, i128::from(args.pad))?;
    let region = verify_box_par(pair, &bounds)?;
    let witnesses = falsify_frontier(pair, i128::from(args.count))?;
    if let Some(path) = &args.csv {
        write_csv(path, &region).map_err(|source| CliError::Csv {
            path: path.clone(),
            source,
        })?;
    }
    let failed = !region.is_clean() || !witnesses.is_clean();

    let mut text = String::new();
    let _ = writeln!(text, "corner: {corner}");
    let _ = writeln!(
        text,
        "box: [{}, {}] x [{}, {}]",
        bounds.a_min, bounds.a_max, bounds.b_min, bounds.b_max
    );
    let _ = writeln!(
        text,
        "points: {}, agreements: {}, mismatches: {}, cone violations: {}",
        region.total,
        region.agreements,
        region.mismatches.len(),
        region.cone_violations.len()
    );
    for row in &region.mismatches {
        let _ = writeln!(
            text,
            "  mismatch at {}: formula {}, oracle {}",
            row.target, row.formula, row.oracle
        );
    }
    for t in &region.cone_violations {
        let _ = writeln!(text, "  cone violation at {t}");
    }
    let skipped = witnesses.entries.iter().filter(|e| e.skipped()).count();
    let _ = writeln!(
        text,
        "witnesses: {} checked, {} skipped, {} failed",
        witnesses.checked(),
        skipped,
        witnesses.failures().count()
    );
    for e in &witnesses.entries {
        let verdict = match e.oracle_member {
            None => "skipped",
            Some(false) => "non-member",
            Some(true) => "MEMBER",
        };
        let canon = match e.canonical_ok {
            Some(true) => ", canonical ok",
            Some(false) => ", canonical MISMATCH",
            None => "",
        };
        let _ = writeln!(
            text,
            "  {} #{} {}: {verdict}{canon}",
            e.family.as_str(),
            e.index,
            e.target
        );
    }
    let _ = writeln!(text, "verdict: {}", if failed { "FAIL" } else { "PASS" });

    let result = json!({
        "corner": json::quad(corner),
        "box": {
            "a_min": json::int(bounds.a_min),
            "a_max": json::int(bounds.a_max),
            "b_min": json::int(bounds.b_min),
            "b_max": json::int(bounds.b_max),
        },
        "total": region.total,
        "agreements": region.agreements,
        "mismatches": region.mismatches.iter().map(|r| json!({
            "target": json::quad(r.target),
            "formula": r.formula,
            "oracle": r.oracle,
        })).collect::<Vec<_>>(),
        "cone_violations": region.cone_violations.iter().copied().map(json::quad).collect::<Vec<_>>(),
        "verdict": if failed { "fail" } else { "pass" },
    });
    Ok(Outcome {
        text,
        result,
        witnesses: Some(witness_json(&witnesses)),
        failed,
    })
}
