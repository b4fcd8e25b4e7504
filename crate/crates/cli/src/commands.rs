//! The computing subcommands: enumerate, stats, map, enumerator,
//! recursion, and selftest.

use std::collections::BTreeSet;

use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};

use polyqt_core::bijections::{
    labelled_to_stacked, merge_map, merge_map_inverse, parking_to_polyomino,
    polyomino_to_parking, stacked_to_labelled,
};
use polyqt_core::enumerators::{
    brute_enumerator, recursion_enumerator_with_base, visit_labelled_polyominoes,
    BaseConvention, EnumeratorError, EnumeratorQuery, Family, StatPair,
};
use polyqt_core::dyck::visit_labelled;
use polyqt_core::{selftest, statistics, DecoratedPolyomino, QtPolynomial, ReducedPolyomino};

use crate::error::CliError;
use crate::wire::{
    object_stats, parse_object, path_to_json, polynomial_to_json, polyomino_to_json,
    PathObject, PolyominoObject, WireObject,
};
use crate::{OutputArgs, OutputFormat};

// ---- shared helpers ----

/// Reads a `--in` value: inline JSON when it starts with a brace, the
/// contents of a file otherwise.
fn read_input(raw: &str) -> Result<Value, CliError> {
    let text = if raw.trim_start().starts_with('{') {
        raw.to_string()
    } else {
        std::fs::read_to_string(raw)?
    };
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("json: {e}")))
}

/// All k-element subsets of a sorted index set, in deterministic order.
pub fn subsets_of_size(set: &BTreeSet<usize>, k: usize) -> Vec<BTreeSet<usize>> {
    let items: Vec<usize> = set.iter().copied().collect();
    if k > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for bits in 0u64..(1 << items.len()) {
        if bits.count_ones() as usize == k {
            out.push(
                items
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| (bits >> j) & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    out
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn set_text(set: &BTreeSet<usize>) -> String {
    format!("{{{}}}", join(set.iter(), ","))
}

fn parse_content(raw: &str, expected_sum: usize) -> Result<Vec<usize>, CliError> {
    let content: Vec<usize> = raw
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::input(format!("content entry \"{tok}\" is not an integer")))
        })
        .collect::<Result<_, _>>()?;
    if content.iter().sum::<usize>() != expected_sum {
        return Err(CliError::input(format!(
            "content multiplicities must sum to {expected_sum}"
        )));
    }
    Ok(content)
}

// ---- enumerate ----

/// Object family selector shared by enumerate and enumerator.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FamilyArg {
    /// Valley-decorated polyominoes; statistics (area, decorated bounce).
    #[value(alias = "rp-bullet")]
    ValleyPolyomino,
    /// Rise-decorated polyominoes; statistics (dinv, decorated area).
    #[value(alias = "rp-star")]
    RisePolyomino,
    /// Rise-decorated two-car parking functions; statistics (dinv,
    /// decorated area).
    #[value(alias = "pf2")]
    TwoCarParking,
    /// Rise-decorated partially labelled paths; statistics (decorated
    /// area, pmaj).
    #[value(alias = "pldp")]
    LabelledPath,
    /// Column-strict labelled polyominoes (enumerate only).
    #[value(alias = "labelled")]
    LabelledPolyomino,
}

impl FamilyArg {
    fn to_query_family(self) -> Result<Family, CliError> {
        match self {
            FamilyArg::ValleyPolyomino => Ok(Family::ValleyPolyomino),
            FamilyArg::RisePolyomino => Ok(Family::RisePolyomino),
            FamilyArg::TwoCarParking => Ok(Family::TwoCarParking),
            FamilyArg::LabelledPath => Ok(Family::LabelledPath),
            FamilyArg::LabelledPolyomino => Err(CliError::input(
                "labelled polyominoes have no summed enumerator; use enumerate",
            )),
        }
    }
}

/// Flags of the enumerate subcommand.
#[derive(Args)]
pub struct EnumerateArgs {
    /// Object family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// First size: frame width, or ones, or blank rows.
    #[arg(long)]
    m: usize,
    /// Second size: frame height, or twos, or positive labels minus one.
    #[arg(long)]
    n: usize,
    /// Decorations per object.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Label multiplicities for the labelled families (entry i counts
    /// label i), comma separated; default one of each.
    #[arg(long)]
    content: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

/// One enumerated object rendered three ways.
struct Listed {
    value: Value,
    line: String,
    row: String,
}

pub fn enumerate(args: &EnumerateArgs) -> Result<(), CliError> {
    let (m, n, k) = (args.m, args.n, args.k);
    let mut items: Vec<Listed> = Vec::new();
    let header;
    match args.family {
        FamilyArg::ValleyPolyomino | FamilyArg::RisePolyomino => {
            header = "m,n,red,green,rise_dec,valley_dec";
            if args.content.is_some() {
                return Err(CliError::input("polyomino families take no content"));
            }
            let on_valleys = args.family == FamilyArg::ValleyPolyomino;
            for poly in ReducedPolyomino::enumerate(m, n) {
                let positions =
                    if on_valleys { poly.red_valleys() } else { poly.area_word().rises() };
                for chosen in subsets_of_size(&positions, k) {
                    let dp = if on_valleys {
                        DecoratedPolyomino::with_valleys(poly, chosen)
                    } else {
                        DecoratedPolyomino::with_rises(poly, chosen)
                    }
                    .expect("enumerated decorations are legal");
                    items.push(listed_polyomino(&dp, None));
                }
            }
        }
        FamilyArg::TwoCarParking | FamilyArg::LabelledPath => {
            header = "path,labels,dec_rises";
            let (blanks, content) = match args.family {
                FamilyArg::TwoCarParking => {
                    if args.content.is_some() {
                        return Err(CliError::input(
                            "two-car parking content is fixed by --m and --n",
                        ));
                    }
                    (0, vec![m, n])
                }
                _ => {
                    let content = match &args.content {
                        Some(raw) => parse_content(raw, n + 1)?,
                        None => vec![1; n + 1],
                    };
                    (m, content)
                }
            };
            visit_labelled(blanks, &content, &mut |pldp| {
                for chosen in subsets_of_size(&pldp.rises(), k) {
                    items.push(Listed {
                        value: path_to_json(pldp, &chosen),
                        line: format!(
                            "path={} labels=[{}] rises={}",
                            polyqt_core::polyomino::path_to_string(&pldp.path().steps()),
                            join(pldp.labels().iter(), ","),
                            set_text(&chosen),
                        ),
                        row: format!(
                            "{},{},{}",
                            polyqt_core::polyomino::path_to_string(&pldp.path().steps()),
                            join(pldp.labels().iter(), " "),
                            join(chosen.iter(), " "),
                        ),
                    });
                }
            });
        }
        FamilyArg::LabelledPolyomino => {
            header = "m,n,red,green,first,labels";
            if k != 0 {
                return Err(CliError::input("labelled polyominoes carry no decorations"));
            }
            let content = match &args.content {
                Some(raw) => parse_content(raw, n + 1)?,
                None => vec![1; n + 1],
            };
            visit_labelled_polyominoes(m, n, &content, &mut |lp| {
                let dp = DecoratedPolyomino::plain(lp.poly);
                items.push(Listed {
                    value: polyomino_to_json(&dp, Some(lp)),
                    line: format!(
                        "red={} green={} first={} labels=[{}]",
                        polyqt_core::polyomino::path_to_string(&lp.poly.red_steps()),
                        polyqt_core::polyomino::path_to_string(&lp.poly.green_steps()),
                        lp.first_label,
                        join(lp.red_labels.iter(), ","),
                    ),
                    row: format!(
                        "{},{},{},{},{},{}",
                        lp.poly.m(),
                        lp.poly.n(),
                        polyqt_core::polyomino::path_to_string(&lp.poly.red_steps()),
                        polyqt_core::polyomino::path_to_string(&lp.poly.green_steps()),
                        lp.first_label,
                        join(lp.red_labels.iter(), " "),
                    ),
                });
            });
        }
    }
    let rendered = match args.output.output {
        OutputFormat::Json => {
            let all: Vec<Value> = items.into_iter().map(|i| i.value).collect();
            format!("{}\n", serde_json::to_string(&all).expect("serializable"))
        }
        OutputFormat::Text => {
            items.into_iter().map(|i| i.line + "\n").collect::<String>()
        }
        OutputFormat::Csv => {
            let mut out = String::from(header);
            out.push('\n');
            for i in items {
                out.push_str(&i.row);
                out.push('\n');
            }
            out
        }
    };
    args.output.emit(&rendered)
}

fn listed_polyomino(dp: &DecoratedPolyomino, labels: Option<&polyqt_core::LabelledPolyomino>) -> Listed {
    let red = polyqt_core::polyomino::path_to_string(&dp.poly.red_steps());
    let green = polyqt_core::polyomino::path_to_string(&dp.poly.green_steps());
    Listed {
        value: polyomino_to_json(dp, labels),
        line: format!(
            "red={} green={} rises={} valleys={} word={}",
            red,
            green,
            set_text(&dp.rises),
            set_text(&dp.valleys),
            dp.poly.area_word(),
        ),
        row: format!(
            "{},{},{},{},{},{}",
            dp.poly.m(),
            dp.poly.n(),
            red,
            green,
            join(dp.rises.iter(), " "),
            join(dp.valleys.iter(), " "),
        ),
    }
}

// ---- stats ----

/// Flags of the stats subcommand.
#[derive(Args)]
pub struct StatsArgs {
    /// Serialized object: inline JSON, or a path to a JSON file.
    #[arg(long, value_name = "JSON|FILE")]
    r#in: String,
    #[command(flatten)]
    output: OutputArgs,
}

pub fn stats(args: &StatsArgs) -> Result<(), CliError> {
    let object = parse_object(&read_input(&args.r#in)?)?;
    let dict = object_stats(&object);
    let rendered = match args.output.output {
        OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&dict).expect("serializable")),
        OutputFormat::Text => dict_lines(&dict),
        OutputFormat::Csv => {
            let map = dict.as_object().expect("stats is a dictionary");
            format!(
                "{}\n{}\n",
                join(map.keys(), ","),
                join(map.values().map(render_scalar), ",")
            )
        }
    };
    args.output.emit(&rendered)
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dict_lines(dict: &Value) -> String {
    dict.as_object()
        .expect("stats is a dictionary")
        .iter()
        .map(|(k, v)| format!("{k}: {}\n", render_scalar(v)))
        .collect()
}

fn dict_inline(dict: &Value) -> String {
    dict.as_object()
        .expect("stats is a dictionary")
        .iter()
        .map(|(k, v)| format!("{k}={}", render_scalar(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

// ---- map ----

/// Bijection selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BijectionArg {
    /// Valley-decorated polyomino to rise-decorated polyomino on the
    /// transposed frame.
    Zeta,
    /// Inverse of zeta.
    ZetaInv,
    /// Two-car parking function to rise-decorated polyomino.
    Pf2,
    /// Inverse of pf2.
    Pf2Inv,
    /// Fully stacked labelled path to labelled polyomino.
    Pldp,
    /// Inverse of pldp.
    PldpInv,
}

/// Flags of the map subcommand.
#[derive(Args)]
pub struct MapArgs {
    /// Bijection to apply.
    #[arg(long, value_enum)]
    bijection: BijectionArg,
    /// Serialized object: inline JSON, or a path to a JSON file.
    #[arg(long, value_name = "JSON|FILE")]
    r#in: String,
    #[command(flatten)]
    output: OutputArgs,
}

fn want_polyomino(object: WireObject, what: &str) -> Result<PolyominoObject, CliError> {
    match object {
        WireObject::Polyomino(p) => Ok(p),
        WireObject::Path(_) => Err(CliError::input(format!("{what} takes a polyomino object"))),
    }
}

fn want_path(object: WireObject, what: &str) -> Result<PathObject, CliError> {
    match object {
        WireObject::Path(p) => Ok(p),
        WireObject::Polyomino(_) => {
            Err(CliError::input(format!("{what} takes a labelled path object")))
        }
    }
}

pub fn map(args: &MapArgs) -> Result<(), CliError> {
    let object = parse_object(&read_input(&args.r#in)?)?;
    let (image, source_stats, image_stats) = apply_bijection(args.bijection, object)?;
    let rendered = match args.output.output {
        OutputFormat::Json => {
            let report =
                json!({"image": image, "source_stats": source_stats, "image_stats": image_stats});
            format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"))
        }
        OutputFormat::Text => format!(
            "image = {}\nsource stats: {}\nimage stats: {}\n",
            serde_json::to_string(&image).expect("serializable"),
            dict_inline(&source_stats),
            dict_inline(&image_stats),
        ),
        OutputFormat::Csv => return Err(CliError::input("map has no csv form")),
    };
    args.output.emit(&rendered)
}

fn pair(names: [&str; 2], values: [u64; 2]) -> Value {
    let mut map = Map::new();
    map.insert(names[0].into(), json!(values[0]));
    map.insert(names[1].into(), json!(values[1]));
    Value::Object(map)
}

fn apply_bijection(
    bijection: BijectionArg,
    object: WireObject,
) -> Result<(Value, Value, Value), CliError> {
    match bijection {
        BijectionArg::Zeta => {
            let src = want_polyomino(object, "zeta")?;
            if !src.dp.rises.is_empty() {
                return Err(CliError::input("zeta takes valley decorations, not rises"));
            }
            let image = merge_map(&src.dp).map_err(|e| CliError::input(e.to_string()))?;
            let word = src.dp.poly.area_word();
            let image_word = image.poly.area_word();
            Ok((
                polyomino_to_json(&image, None),
                pair(
                    ["area", "bounce_dec"],
                    [
                        statistics::area(&word),
                        statistics::bounce_decorated(&src.dp.poly, &src.dp.valleys),
                    ],
                ),
                pair(
                    ["dinv", "area_dec"],
                    [
                        statistics::dinv(&image_word),
                        statistics::area_decorated(&image_word, &image.rises),
                    ],
                ),
            ))
        }
        BijectionArg::ZetaInv => {
            let src = want_polyomino(object, "zeta-inv")?;
            if !src.dp.valleys.is_empty() {
                return Err(CliError::input("zeta-inv takes rise decorations, not valleys"));
            }
            let image = merge_map_inverse(&src.dp).map_err(|e| CliError::input(e.to_string()))?;
            let word = src.dp.poly.area_word();
            let image_word = image.poly.area_word();
            Ok((
                polyomino_to_json(&image, None),
                pair(
                    ["dinv", "area_dec"],
                    [
                        statistics::dinv(&word),
                        statistics::area_decorated(&word, &src.dp.rises),
                    ],
                ),
                pair(
                    ["area", "bounce_dec"],
                    [
                        statistics::area(&image_word),
                        statistics::bounce_decorated(&image.poly, &image.valleys),
                    ],
                ),
            ))
        }
        BijectionArg::Pf2 => {
            let src = want_path(object, "pf2")?;
            let image = parking_to_polyomino(&src.pldp, &src.dec)
                .map_err(|e| CliError::input(e.to_string()))?;
            let image_word = image.poly.area_word();
            Ok((
                polyomino_to_json(&image, None),
                pair(
                    ["dinv", "area_dec"],
                    [src.pldp.dinv(), src.pldp.area_decorated(&src.dec)],
                ),
                pair(
                    ["dinv", "area_dec"],
                    [
                        statistics::dinv(&image_word),
                        statistics::area_decorated(&image_word, &image.rises),
                    ],
                ),
            ))
        }
        BijectionArg::Pf2Inv => {
            let src = want_polyomino(object, "pf2-inv")?;
            if !src.dp.valleys.is_empty() {
                return Err(CliError::input("pf2-inv takes rise decorations, not valleys"));
            }
            let (pldp, dec) =
                polyomino_to_parking(&src.dp).map_err(|e| CliError::input(e.to_string()))?;
            let word = src.dp.poly.area_word();
            Ok((
                path_to_json(&pldp, &dec),
                pair(
                    ["dinv", "area_dec"],
                    [
                        statistics::dinv(&word),
                        statistics::area_decorated(&word, &src.dp.rises),
                    ],
                ),
                pair(["dinv", "area_dec"], [pldp.dinv(), pldp.area_decorated(&dec)]),
            ))
        }
        BijectionArg::Pldp => {
            let src = want_path(object, "pldp")?;
            if !src.dec.is_empty() && src.dec != src.pldp.rises() {
                return Err(CliError::input("the stacking map decorates every rise"));
            }
            let image = stacked_to_labelled(&src.pldp).map_err(|e| CliError::input(e.to_string()))?;
            let image_word = image.poly.area_word();
            Ok((
                polyomino_to_json(&DecoratedPolyomino::plain(image.poly), Some(&image)),
                pair(
                    ["area_dec", "pmaj"],
                    [src.pldp.area_decorated(&src.pldp.rises()), src.pldp.pmaj()],
                ),
                pair(
                    ["area", "bounce"],
                    [statistics::area(&image_word), statistics::bounce(&image.poly)],
                ),
            ))
        }
        BijectionArg::PldpInv => {
            let src = want_polyomino(object, "pldp-inv")?;
            let labelled = src
                .labels
                .ok_or_else(|| CliError::input("pldp-inv needs the labels field"))?;
            let (pldp, dec) =
                labelled_to_stacked(&labelled).map_err(|e| CliError::input(e.to_string()))?;
            let word = labelled.poly.area_word();
            Ok((
                path_to_json(&pldp, &dec),
                pair(
                    ["area", "bounce"],
                    [statistics::area(&word), statistics::bounce(&labelled.poly)],
                ),
                pair(["area_dec", "pmaj"], [pldp.area_decorated(&dec), pldp.pmaj()]),
            ))
        }
    }
}

// ---- enumerator and recursion ----

/// Flags of the enumerator subcommand.
#[derive(Args)]
pub struct EnumeratorArgs {
    /// Object family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// First size: frame width, or ones, or blank rows.
    #[arg(long)]
    m: usize,
    /// Second size: frame height, or twos, or positive labels minus one.
    #[arg(long)]
    n: usize,
    /// Decorations per object.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Restrict to one value of the family's zero statistic.
    #[arg(long)]
    zeros: Option<usize>,
    /// Statistic pair: "area,bounce", "dinv,area", or "area,pmaj";
    /// default is the family's own pair.
    #[arg(long)]
    stats: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_stat_pair(raw: &str) -> Result<StatPair, CliError> {
    let token: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    match token.as_str() {
        "area,bounce" => Ok(StatPair::AreaBounceDec),
        "dinv,area" => Ok(StatPair::DinvAreaDec),
        "area,pmaj" => Ok(StatPair::AreaDecPmaj),
        _ => Err(CliError::input(
            "stats must be \"area,bounce\", \"dinv,area\", or \"area,pmaj\"",
        )),
    }
}

fn enumerator_error(e: EnumeratorError) -> CliError {
    match e {
        EnumeratorError::NegativeExponent(..) => CliError::engine(e.to_string()),
        _ => CliError::input(e.to_string()),
    }
}

/// Renders a polynomial in the requested format; csv rows are
/// (m, n, k, s, polynomial-text).
fn emit_polynomial(
    output: &OutputArgs,
    poly: &QtPolynomial,
    m: usize,
    n: usize,
    k: usize,
    s: Option<usize>,
) -> Result<(), CliError> {
    let text = poly.to_string();
    let rendered = match output.output {
        OutputFormat::Text => format!("{text}\n"),
        OutputFormat::Json => {
            let mut doc = polynomial_to_json(poly);
            doc.as_object_mut()
                .expect("polynomial document")
                .insert("text".into(), json!(text));
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        OutputFormat::Csv => format!(
            "m,n,k,s,polynomial\n{m},{n},{k},{},{text}\n",
            s.map(|v| v.to_string()).unwrap_or_default()
        ),
    };
    output.emit(&rendered)
}

pub fn enumerator(args: &EnumeratorArgs) -> Result<(), CliError> {
    let family = args.family.to_query_family()?;
    let stats = match &args.stats {
        Some(raw) => parse_stat_pair(raw)?,
        None => family.stats(),
    };
    let mut query = EnumeratorQuery::plain(family, args.m, args.n, args.k);
    query.stats = stats;
    if let Some(s) = args.zeros {
        query = query.with_zeros(s);
    }
    let poly = brute_enumerator(&query).map_err(enumerator_error)?;
    emit_polynomial(&args.output, &poly, args.m, args.n, args.k, args.zeros)
}

/// Base convention selector for the recursion.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BaseArg {
    /// All-zeros base contributes only when no decorations remain.
    EmptyUnlessUndecorated,
    /// All-zeros base always contributes the full binomial.
    AlwaysFull,
}

/// Flags of the recursion subcommand.
#[derive(Args)]
pub struct RecursionArgs {
    /// Frame width.
    #[arg(long)]
    m: usize,
    /// Frame height.
    #[arg(long)]
    n: usize,
    /// Zero statistic, between 1 and n + 1.
    #[arg(long)]
    s: usize,
    /// Decorated valleys.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Convention for the all-zeros base case.
    #[arg(long, value_enum, default_value = "empty-unless-undecorated")]
    base: BaseArg,
    #[command(flatten)]
    output: OutputArgs,
}

pub fn recursion(args: &RecursionArgs) -> Result<(), CliError> {
    if args.s == 0 || args.s > args.n + 1 {
        return Err(CliError::input(format!(
            "s must be between 1 and {} for height {}",
            args.n + 1,
            args.n
        )));
    }
    let base = match args.base {
        BaseArg::EmptyUnlessUndecorated => BaseConvention::EmptyUnlessUndecorated,
        BaseArg::AlwaysFull => BaseConvention::AlwaysFull,
    };
    let poly = recursion_enumerator_with_base(args.m, args.n, args.s, args.k, base)
        .map_err(enumerator_error)?;
    emit_polynomial(&args.output, &poly, args.m, args.n, args.k, Some(args.s))
}

// ---- selftest ----

/// Flags of the selftest subcommand.
#[derive(Args)]
pub struct SelftestArgs {
    /// Emit machine-readable verdicts (same as --output json).
    #[arg(long, conflicts_with = "output")]
    json: bool,
    /// Corrupt one pin and require the suite to catch it by name.
    #[arg(long)]
    negative_control: bool,
    #[command(flatten)]
    output: OutputArgs,
}

pub fn selftest(args: &SelftestArgs) -> Result<bool, CliError> {
    let report = if args.negative_control {
        selftest::negative_control()
    } else {
        selftest::run()
    };
    // A negative control succeeds exactly when the corruption was caught.
    let verdict = if args.negative_control {
        !report.passed() && !report.failures().is_empty()
    } else {
        report.passed()
    };
    let format = if args.json { OutputFormat::Json } else { args.output.output };
    let rendered = match format {
        OutputFormat::Json => {
            let cases: Vec<Value> = report
                .cases
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            let mut doc = Map::new();
            if args.negative_control {
                doc.insert("mode".into(), json!("negative-control"));
                doc.insert("caught".into(), json!(verdict));
                doc.insert("failures".into(), json!(report.failures()));
            }
            doc.insert("cases".into(), Value::Array(cases));
            doc.insert("passed".into(), json!(report.passed()));
            format!(
                "{}\n",
                serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")
            )
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for case in &report.cases {
                let tag = if case.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{tag} {}: {}\n", case.name, case.detail));
            }
            let failed = report.cases.iter().filter(|c| !c.passed).count();
            out.push_str(&format!("{} passed, {} failed\n", report.cases.len() - failed, failed));
            if args.negative_control {
                out.push_str(if verdict {
                    "negative control caught the corrupted pin\n"
                } else {
                    "negative control missed the corrupted pin\n"
                });
            }
            out
        }
        OutputFormat::Csv => return Err(CliError::input("selftest has no csv form")),
    };
    args.output.emit(&rendered)?;
    Ok(verdict)
}
