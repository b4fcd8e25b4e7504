//! The verify subcommand: dual-route consistency checks with serialized
//! counterexamples.

use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};

use polyqt_core::bijections::{merge_map, merge_map_inverse};
use polyqt_core::enumerators::{check_recursion, check_two_car, ConsistencyReport, Mismatch};
use polyqt_core::symfunc::checks::{
    check_final, check_final_certified, check_identity_1, check_identity_2, check_lemma,
    check_pmaj_conjecture, sample_points, CheckCase, CheckReport, OraclePool,
};
use polyqt_core::symfunc::DEFAULT_DEGREE_BOUND;
use polyqt_core::{statistics, DecoratedPolyomino, ReducedPolyomino};

use crate::commands::subsets_of_size;
use crate::error::CliError;
use crate::wire::{polynomial_to_json, polyomino_to_json, rational_string};
use crate::{OutputArgs, OutputFormat};

/// Environment variable raising the symmetric-function degree bound.
const DEGREE_BOUND_VAR: &str = "POLYQT_DEGREE_BOUND";

fn degree_bound() -> Result<usize, CliError> {
    match std::env::var(DEGREE_BOUND_VAR) {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            CliError::input(format!("{DEGREE_BOUND_VAR} must be a positive integer"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_DEGREE_BOUND),
        Err(e) => Err(CliError::input(format!("{DEGREE_BOUND_VAR}: {e}"))),
    }
}

/// Consistency check selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum CheckArg {
    /// Bounce recursion against brute force, every tuple up to the bounds.
    Recursion,
    /// Two-car parking against valley polyominoes, every tuple up to the
    /// bounds.
    Wilson,
    /// Merge-map statistic transport object by object, up to the bounds.
    ZetaTransport,
    /// Hook expansion against the primed operator at one (m, n, k).
    #[value(name = "identity1")]
    Identity1,
    /// Scaled-alphabet sum against the hook expansion at one (m, n, k).
    #[value(name = "identity2")]
    Identity2,
    /// One scaled-alphabet term against the zero-refined enumerator at
    /// (m, n, r, k).
    Lemma,
    /// Enumerator, hook side, and primed side three ways at one (m, n, k).
    Final,
    /// Per-content pmaj enumerator against the operator side at (m, n, k).
    PmajConjecture,
}

/// Flags of the verify subcommand.
#[derive(Args)]
pub struct VerifyArgs {
    /// Which consistency check to run.
    #[arg(long, value_enum)]
    check: CheckArg,
    /// First parameter: an upper bound for the sweeping checks, exact
    /// otherwise.
    #[arg(long)]
    m: usize,
    /// Second parameter: an upper bound for the sweeping checks, exact
    /// otherwise.
    #[arg(long)]
    n: usize,
    /// Decoration parameter, same reading.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Zero statistic for the lemma check, between 1 and m + 1.
    #[arg(long)]
    r: Option<usize>,
    /// Sample points per identity check.
    #[arg(long, default_value_t = 3)]
    points: usize,
    /// Seed for sample-point selection.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Also certify the final check by polynomial interpolation.
    #[arg(long)]
    certify: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A fully assembled verification report, rendered per output format.
struct VerifyReport {
    check: &'static str,
    parameters: Vec<(&'static str, i64)>,
    checked: Value,
    equal: bool,
    counterexample: Option<Value>,
    extras: Vec<(&'static str, Value)>,
}

pub fn run(args: &VerifyArgs) -> Result<bool, CliError> {
    let report = match args.check {
        CheckArg::Recursion => {
            let (report, alternate_failures) = check_recursion(args.m, args.n, args.k);
            let mut assembled = sweep_report("recursion", args, report);
            assembled
                .extras
                .push(("alternate_base_failures", json!(alternate_failures)));
            assembled
        }
        CheckArg::Wilson => sweep_report("wilson", args, check_two_car(args.m, args.n, args.k)),
        CheckArg::ZetaTransport => transport_sweep(args),
        CheckArg::Identity1 | CheckArg::Identity2 | CheckArg::Final | CheckArg::Lemma => {
            scalar_check(args)?
        }
        CheckArg::PmajConjecture => pmaj_check(args)?,
    };
    emit(args, &report)?;
    Ok(report.equal)
}

// ---- combinatorial sweeps ----

fn mismatch_json(mismatch: &Mismatch) -> Value {
    let (m, n, s, k) = mismatch.parameters;
    json!({
        "m": m, "n": n, "s": s, "k": k,
        "left": polynomial_to_json(&mismatch.left),
        "right": polynomial_to_json(&mismatch.right),
    })
}

fn sweep_report(check: &'static str, args: &VerifyArgs, report: ConsistencyReport) -> VerifyReport {
    VerifyReport {
        check,
        parameters: vec![
            ("max_m", args.m as i64),
            ("max_n", args.n as i64),
            ("max_k", args.k as i64),
        ],
        checked: json!(report.checked),
        equal: report.passed(),
        counterexample: report.mismatches.first().map(mismatch_json),
        extras: vec![("routes", json!(report.label))],
    }
}

/// Object-by-object statistic transport and round trip under the merge
/// map; the counterexample is a polyomino object that stats and map accept
/// back.
fn transport_sweep(args: &VerifyArgs) -> VerifyReport {
    let mut checked = 0usize;
    let mut counterexample: Option<Value> = None;
    'sweep: for m in 0..=args.m {
        for n in 0..=args.n {
            for poly in ReducedPolyomino::enumerate(m, n) {
                for size in 0..=args.k {
                    for valleys in subsets_of_size(&poly.red_valleys(), size) {
                        checked += 1;
                        let source = DecoratedPolyomino::with_valleys(poly, valleys)
                            .expect("enumerated valleys are legal");
                        if let Some(reason) = transport_failure(&source) {
                            counterexample = Some(json!({
                                "object": polyomino_to_json(&source, None),
                                "reason": reason,
                            }));
                            break 'sweep;
                        }
                    }
                }
            }
        }
    }
    VerifyReport {
        check: "zeta-transport",
        parameters: vec![
            ("max_m", args.m as i64),
            ("max_n", args.n as i64),
            ("max_k", args.k as i64),
        ],
        checked: json!(checked),
        equal: counterexample.is_none(),
        counterexample,
        extras: Vec::new(),
    }
}

fn transport_failure(source: &DecoratedPolyomino) -> Option<String> {
    let word = source.poly.area_word();
    let image = match merge_map(source) {
        Ok(image) => image,
        Err(e) => return Some(format!("merge map failed: {e}")),
    };
    let image_word = image.poly.area_word();
    if statistics::dinv(&image_word) != statistics::area(&word) {
        return Some("image dinv differs from source area".into());
    }
    if statistics::area_decorated(&image_word, &image.rises)
        != statistics::bounce_decorated(&source.poly, &source.valleys)
    {
        return Some("image decorated area differs from source decorated bounce".into());
    }
    if statistics::star_zeros(&image_word) != statistics::bullet_zeros(&source.poly) {
        return Some("image zero letters differ from source zero statistic".into());
    }
    match merge_map_inverse(&image) {
        Ok(back) if back == *source => None,
        Ok(_) => Some("inverse does not round-trip".into()),
        Err(e) => Some(format!("inverse failed: {e}")),
    }
}

// ---- identity checks ----

fn case_json(case: &CheckCase) -> Value {
    json!({
        "q": rational_string(&case.point.0),
        "t": rational_string(&case.point.1),
        "values": case.values.iter().map(rational_string).collect::<Vec<_>>(),
        "equal": case.equal,
    })
}

fn check_error(e: impl std::fmt::Display) -> CliError {
    CliError::engine(e.to_string())
}

fn from_check_report(check: &'static str, report: CheckReport) -> VerifyReport {
    let counterexample = report.cases.iter().find(|c| !c.equal).map(case_json);
    VerifyReport {
        check,
        parameters: report.parameters,
        checked: Value::Array(report.cases.iter().map(case_json).collect()),
        equal: report.equal,
        counterexample,
        extras: Vec::new(),
    }
}

fn scalar_check(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    if args.k > args.n {
        return Err(CliError::input("these checks need k <= n"));
    }
    if args.points == 0 {
        return Err(CliError::input("at least one sample point is needed"));
    }
    let points = sample_points(args.points, args.seed);
    let mut pool = OraclePool::new(degree_bound()?);
    match args.check {
        CheckArg::Identity1 => {
            if args.r.is_some() {
                return Err(CliError::input("--r applies only to the lemma check"));
            }
            let report =
                check_identity_1(&mut pool, args.m, args.n, args.k, &points).map_err(check_error)?;
            Ok(from_check_report("identity1", report))
        }
        CheckArg::Identity2 => {
            if args.r.is_some() {
                return Err(CliError::input("--r applies only to the lemma check"));
            }
            let report =
                check_identity_2(&mut pool, args.m, args.n, args.k, &points).map_err(check_error)?;
            Ok(from_check_report("identity2", report))
        }
        CheckArg::Lemma => {
            let r = args.r.ok_or_else(|| CliError::input("the lemma check needs --r"))?;
            if r == 0 || r > args.m + 1 {
                return Err(CliError::input(format!(
                    "r must be between 1 and {} for width {}",
                    args.m + 1,
                    args.m
                )));
            }
            let report = check_lemma(&mut pool, args.m, args.n, r, args.k, &points)
                .map_err(check_error)?;
            Ok(from_check_report("lemma", report))
        }
        CheckArg::Final => {
            if args.r.is_some() {
                return Err(CliError::input("--r applies only to the lemma check"));
            }
            if args.certify {
                let report = check_final_certified(&mut pool, args.m, args.n, args.k, &points)
                    .map_err(check_error)?;
                let counterexample = report.cases.iter().find(|c| !c.equal).map(case_json);
                Ok(VerifyReport {
                    check: "final",
                    parameters: report.parameters,
                    checked: Value::Array(report.cases.iter().map(case_json).collect()),
                    equal: report.equal,
                    counterexample,
                    extras: vec![
                        ("combinatorial", polynomial_to_json(&report.combinatorial)),
                        ("interpolated", polynomial_to_json(&report.interpolated)),
                        ("certified", json!(report.combinatorial == report.interpolated)),
                    ],
                })
            } else {
                let report = check_final(&mut pool, args.m, args.n, args.k, &points)
                    .map_err(check_error)?;
                Ok(from_check_report("final", report))
            }
        }
        _ => unreachable!("scalar_check handles identity checks only"),
    }
}

fn pmaj_check(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    if args.k > args.n {
        return Err(CliError::input("these checks need k <= n"));
    }
    if args.points == 0 {
        return Err(CliError::input("at least one sample point is needed"));
    }
    if args.r.is_some() {
        return Err(CliError::input("--r applies only to the lemma check"));
    }
    let points = sample_points(args.points, args.seed);
    let mut pool = OraclePool::new(degree_bound()?);
    let report = check_pmaj_conjecture(&mut pool, args.m, args.n, args.k, &points)
        .map_err(check_error)?;
    let mut contents = Vec::new();
    let mut counterexample = None;
    for (content, cases) in &report.contents {
        let parts: Vec<u64> = content.parts().iter().map(|&p| u64::from(p)).collect();
        if counterexample.is_none() {
            if let Some(case) = cases.iter().find(|c| !c.equal) {
                let mut doc = case_json(case);
                doc.as_object_mut()
                    .expect("case document")
                    .insert("content".into(), json!(parts));
                counterexample = Some(doc);
            }
        }
        contents.push(json!({
            "content": parts,
            "cases": cases.iter().map(case_json).collect::<Vec<_>>(),
            "equal": cases.iter().all(|c| c.equal),
        }));
    }
    Ok(VerifyReport {
        check: "pmaj-conjecture",
        parameters: report.parameters,
        checked: Value::Array(contents),
        equal: report.equal,
        counterexample,
        extras: Vec::new(),
    })
}

// ---- rendering ----

fn emit(args: &VerifyArgs, report: &VerifyReport) -> Result<(), CliError> {
    let rendered = match args.output.output {
        OutputFormat::Json => {
            let mut parameters = Map::new();
            for (name, value) in &report.parameters {
                parameters.insert((*name).into(), json!(value));
            }
            let mut doc = Map::new();
            doc.insert("check".into(), json!(report.check));
            doc.insert("parameters".into(), Value::Object(parameters));
            doc.insert("checked".into(), report.checked.clone());
            doc.insert("equal".into(), json!(report.equal));
            doc.insert(
                "counterexample".into(),
                report.counterexample.clone().unwrap_or(Value::Null),
            );
            for (name, value) in &report.extras {
                doc.insert((*name).into(), value.clone());
            }
            format!(
                "{}\n",
                serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")
            )
        }
        OutputFormat::Text => {
            let mut out = format!("check: {}\n", report.check);
            let shown: Vec<String> =
                report.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("parameters: {}\n", shown.join(" ")));
            match &report.checked {
                Value::Array(cases) => out.push_str(&format!("cases: {}\n", cases.len())),
                other => out.push_str(&format!("checked: {other}\n")),
            }
            for (name, value) in &report.extras {
                out.push_str(&format!("{name}: {value}\n"));
            }
            out.push_str(&format!("equal: {}\n", report.equal));
            if let Some(cx) = &report.counterexample {
                out.push_str(&format!(
                    "counterexample: {}\n",
                    serde_json::to_string(cx).expect("serializable")
                ));
            }
            out
        }
        OutputFormat::Csv => return Err(CliError::input("verify has no csv form")),
    };
    args.output.emit(&rendered)
}
