//! JSON wire formats for objects, statistics, and polynomials.
//!
//! Polyomino objects: `{"m","n","red","green","rise_dec","valley_dec",
//! "labels":{"first","steps":{"<red step index>":label}}}` with paths as
//! strings over {N, E} and absent fields meaning none. Labelled path
//! objects: `{"path","labels","dec_rises"}` with labels bottom to top per
//! north step and 0 for a blank row. Polynomials:
//! `{"terms":[{"q","t","c"}]}` with the coefficient as a decimal string,
//! terms in the canonical rendering order.

use std::collections::BTreeSet;

use polyqt_core::polyomino::{path_from_str, path_to_string};
use polyqt_core::{
    dyck::{DyckPath, PartiallyLabelledDyckPath},
    statistics, BigRational, DecoratedPolyomino, LabelledPolyomino, QtPolynomial,
    ReducedPolyomino,
};
use serde_json::{json, Map, Value};

use crate::error::CliError;

/// A deserialized polyomino with its decorations and optional labelling.
pub struct PolyominoObject {
    /// The polyomino with rise and valley decoration sets.
    pub dp: DecoratedPolyomino,
    /// Optional column-strict labelling of the same polyomino.
    pub labels: Option<LabelledPolyomino>,
}

/// A deserialized partially labelled path with its decorated rises.
pub struct PathObject {
    /// The labelled path.
    pub pldp: PartiallyLabelledDyckPath,
    /// Decorated rise positions.
    pub dec: BTreeSet<usize>,
}

/// Either serialized object kind.
pub enum WireObject {
    /// Polyomino form, recognized by the "red" field.
    Polyomino(PolyominoObject),
    /// Path form, recognized by the "path" field.
    Path(PathObject),
}

// ---- readers ----

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value, CliError> {
    v.get(name).ok_or_else(|| CliError::input(format!("missing field \"{name}\"")))
}

fn as_usize(v: &Value, name: &str) -> Result<usize, CliError> {
    v.as_u64()
        .and_then(|u| usize::try_from(u).ok())
        .ok_or_else(|| CliError::input(format!("field \"{name}\" must be a small non-negative integer")))
}

fn as_str<'v>(v: &'v Value, name: &str) -> Result<&'v str, CliError> {
    v.as_str().ok_or_else(|| CliError::input(format!("field \"{name}\" must be a string")))
}

fn index_set(v: &Value, name: &str) -> Result<BTreeSet<usize>, CliError> {
    let items = v
        .as_array()
        .ok_or_else(|| CliError::input(format!("field \"{name}\" must be an array")))?;
    items.iter().map(|x| as_usize(x, name)).collect()
}

/// Parses either object kind, dispatching on the identifying field.
pub fn parse_object(v: &Value) -> Result<WireObject, CliError> {
    if v.get("path").is_some() {
        parse_path(v).map(WireObject::Path)
    } else if v.get("red").is_some() {
        parse_polyomino(v).map(WireObject::Polyomino)
    } else {
        Err(CliError::input("object must have a \"red\" or a \"path\" field"))
    }
}

/// Parses the polyomino object form.
pub fn parse_polyomino(v: &Value) -> Result<PolyominoObject, CliError> {
    let m = as_usize(field(v, "m")?, "m")?;
    let n = as_usize(field(v, "n")?, "n")?;
    let red = path_from_str(as_str(field(v, "red")?, "red")?)
        .map_err(|e| CliError::input(format!("red: {e}")))?;
    let green = path_from_str(as_str(field(v, "green")?, "green")?)
        .map_err(|e| CliError::input(format!("green: {e}")))?;
    let poly = ReducedPolyomino::new(m, n, &red, &green)
        .map_err(|e| CliError::input(format!("polyomino: {e}")))?;
    let rises = match v.get("rise_dec") {
        Some(r) => index_set(r, "rise_dec")?,
        None => BTreeSet::new(),
    };
    let valleys = match v.get("valley_dec") {
        Some(r) => index_set(r, "valley_dec")?,
        None => BTreeSet::new(),
    };
    let legal_rises = poly.area_word().rises();
    if let Some(&bad) = rises.iter().find(|i| !legal_rises.contains(i)) {
        return Err(CliError::input(format!("rise_dec position {bad} is not a rise")));
    }
    let legal_valleys = poly.red_valleys();
    if let Some(&bad) = valleys.iter().find(|i| !legal_valleys.contains(i)) {
        return Err(CliError::input(format!("valley_dec position {bad} is not a red valley")));
    }
    let labels = match v.get("labels") {
        Some(l) => Some(parse_labels(l, &poly)?),
        None => None,
    };
    Ok(PolyominoObject { dp: DecoratedPolyomino { poly, rises, valleys }, labels })
}

fn parse_labels(v: &Value, poly: &ReducedPolyomino) -> Result<LabelledPolyomino, CliError> {
    let first = as_usize(field(v, "first")?, "first")? as u32;
    let steps = field(v, "steps")?
        .as_object()
        .ok_or_else(|| CliError::input("labels.steps must be an object"))?;
    let mut by_index: Vec<(usize, u32)> = Vec::with_capacity(steps.len());
    for (key, value) in steps {
        let i: usize = key
            .parse()
            .map_err(|_| CliError::input(format!("labels.steps key \"{key}\" is not an index")))?;
        if i == 0 || i > poly.m() + poly.n() || !poly.red_is_north(i) {
            return Err(CliError::input(format!("labels.steps key {i} is not a red north step")));
        }
        by_index.push((i, as_usize(value, "labels.steps")? as u32));
    }
    by_index.sort_unstable();
    if by_index.len() != poly.n() {
        return Err(CliError::input(format!(
            "labels.steps must cover all {} red north steps",
            poly.n()
        )));
    }
    let red_labels = by_index.into_iter().map(|(_, l)| l).collect();
    LabelledPolyomino::new(*poly, first, red_labels)
        .map_err(|e| CliError::input(format!("labelling: {e}")))
}

/// Parses the labelled path object form.
pub fn parse_path(v: &Value) -> Result<PathObject, CliError> {
    let steps = path_from_str(as_str(field(v, "path")?, "path")?)
        .map_err(|e| CliError::input(format!("path: {e}")))?;
    let path = DyckPath::new(&steps).map_err(|e| CliError::input(format!("path: {e}")))?;
    let labels = field(v, "labels")?
        .as_array()
        .ok_or_else(|| CliError::input("field \"labels\" must be an array"))?
        .iter()
        .map(|x| as_usize(x, "labels").map(|u| u as u32))
        .collect::<Result<Vec<u32>, CliError>>()?;
    let pldp = PartiallyLabelledDyckPath::new(path, labels)
        .map_err(|e| CliError::input(format!("labelling: {e}")))?;
    let dec = match v.get("dec_rises") {
        Some(r) => index_set(r, "dec_rises")?,
        None => BTreeSet::new(),
    };
    let legal = pldp.rises();
    if let Some(&bad) = dec.iter().find(|i| !legal.contains(i)) {
        return Err(CliError::input(format!("dec_rises position {bad} is not a rise")));
    }
    Ok(PathObject { pldp, dec })
}

// ---- writers ----

/// Serializes a decorated polyomino, with its labelling when given.
pub fn polyomino_to_json(dp: &DecoratedPolyomino, labels: Option<&LabelledPolyomino>) -> Value {
    let mut map = Map::new();
    map.insert("m".into(), json!(dp.poly.m()));
    map.insert("n".into(), json!(dp.poly.n()));
    map.insert("red".into(), json!(path_to_string(&dp.poly.red_steps())));
    map.insert("green".into(), json!(path_to_string(&dp.poly.green_steps())));
    if !dp.rises.is_empty() {
        map.insert("rise_dec".into(), json!(dp.rises.iter().collect::<Vec<_>>()));
    }
    if !dp.valleys.is_empty() {
        map.insert("valley_dec".into(), json!(dp.valleys.iter().collect::<Vec<_>>()));
    }
    if let Some(lp) = labels {
        let mut steps = Map::new();
        let mut j = 0;
        for i in 1..=lp.poly.m() + lp.poly.n() {
            if lp.poly.red_is_north(i) {
                steps.insert(i.to_string(), json!(lp.red_labels[j]));
                j += 1;
            }
        }
        map.insert("labels".into(), json!({"first": lp.first_label, "steps": steps}));
    }
    Value::Object(map)
}

/// Serializes a labelled path with its decorated rises.
pub fn path_to_json(pldp: &PartiallyLabelledDyckPath, dec: &BTreeSet<usize>) -> Value {
    let mut map = Map::new();
    map.insert("path".into(), json!(path_to_string(&pldp.path().steps())));
    map.insert("labels".into(), json!(pldp.labels()));
    if !dec.is_empty() {
        map.insert("dec_rises".into(), json!(dec.iter().collect::<Vec<_>>()));
    }
    Value::Object(map)
}

/// Serializes a polynomial, terms ordered as in the text rendering.
pub fn polynomial_to_json(p: &QtPolynomial) -> Value {
    let mut terms: Vec<(u32, u32)> = p.terms().map(|((a, b), _)| (a, b)).collect();
    terms.sort_by_key(|&(a, b)| (a + b, b));
    let rendered: Vec<Value> = terms
        .into_iter()
        .map(|(a, b)| json!({"q": a, "t": b, "c": p.coeff(a, b).to_string()}))
        .collect();
    json!({ "terms": rendered })
}

/// Renders an exact rational as a decimal or fraction string.
pub fn rational_string(r: &BigRational) -> String {
    r.to_string()
}

// ---- statistics dictionaries ----

/// The statistics of one polyomino object, decorated variants included.
pub fn polyomino_stats(obj: &PolyominoObject) -> Value {
    let word = obj.dp.poly.area_word();
    let mut map = Map::new();
    map.insert("area".into(), json!(statistics::area(&word)));
    map.insert("area_dec".into(), json!(statistics::area_decorated(&word, &obj.dp.rises)));
    map.insert("dinv".into(), json!(statistics::dinv(&word)));
    map.insert("bounce".into(), json!(statistics::bounce(&obj.dp.poly)));
    map.insert(
        "bounce_dec".into(),
        json!(statistics::bounce_decorated(&obj.dp.poly, &obj.dp.valleys)),
    );
    map.insert("s_bullet".into(), json!(statistics::bullet_zeros(&obj.dp.poly)));
    map.insert("s_star".into(), json!(statistics::star_zeros(&word)));
    if let Some(lp) = &obj.labels {
        if let Ok((pldp, _)) = polyqt_core::bijections::labelled_to_stacked(lp) {
            map.insert("pmaj".into(), json!(pldp.pmaj()));
        }
    }
    Value::Object(map)
}

/// The statistics of one labelled path object.
pub fn path_stats(obj: &PathObject) -> Value {
    json!({
        "area": obj.pldp.area(),
        "area_dec": obj.pldp.area_decorated(&obj.dec),
        "dinv": obj.pldp.dinv(),
        "pmaj": obj.pldp.pmaj(),
    })
}

/// The statistics of either object kind.
pub fn object_stats(obj: &WireObject) -> Value {
    match obj {
        WireObject::Polyomino(p) => polyomino_stats(p),
        WireObject::Path(p) => path_stats(p),
    }
}
