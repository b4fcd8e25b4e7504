//! Point checks tying the scalar-product expressions to the enumerators.
//!
//! Each check evaluates both sides of one claimed equality exactly, at a
//! list of rational sample points, and reports every case. Sample points are
//! drawn deterministically from a seed; both coordinates are small primes
//! and q never equals t, which keeps the Macdonald basis nonsingular.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_traits::Zero;

use crate::enumerators::{
    brute_enumerator, labelled_content_enumerator, EnumeratorError, EnumeratorQuery, Family,
};
use crate::qt::{interpolate_with_nodes, prime_nodes, InterpolateError, QtPolynomial};
use crate::BigRational;

use super::delta::Generator;
use super::partition::{partitions_of, Partition};
use super::{rational, Oracle, OracleError, Shared, SymFunc};

/// A sample point (q, t).
pub type Point = (BigRational, BigRational);

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic distinct sample points from a seed: both coordinates are
/// small primes and q != t at every point.
pub fn sample_points(count: usize, seed: u64) -> Vec<Point> {
    assert!(count <= 100, "sample pool supports at most 100 distinct points");
    let pool = prime_nodes(32);
    let mut state = seed;
    let mut out: Vec<Point> = Vec::with_capacity(count);
    while out.len() < count {
        let qi = (splitmix64(&mut state) % 32) as usize;
        let ti = (splitmix64(&mut state) % 32) as usize;
        if qi == ti {
            continue;
        }
        let point = (pool[qi].clone(), pool[ti].clone());
        if !out.contains(&point) {
            out.push(point);
        }
    }
    out
}

/// A family of engines sharing the (q, t)-independent tables, one engine
/// per sample point.
pub struct OraclePool {
    bound: usize,
    shared: Rc<RefCell<Shared>>,
    oracles: BTreeMap<Point, Oracle>,
}

impl OraclePool {
    /// A pool whose engines all use the given degree bound.
    pub fn new(bound: usize) -> Self {
        OraclePool { bound, shared: Rc::new(RefCell::new(Shared::default())), oracles: BTreeMap::new() }
    }

    /// The engine at one point, created on first use.
    pub fn oracle(&mut self, point: &Point) -> &mut Oracle {
        let bound = self.bound;
        let shared = self.shared.clone();
        self.oracles
            .entry(point.clone())
            .or_insert_with(|| Oracle::with_shared(point.0.clone(), point.1.clone(), bound, shared))
    }
}

/// One evaluated sample point: the values of every side, in check order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckCase {
    /// The (q, t) used.
    pub point: Point,
    /// Exact value of each side.
    pub values: Vec<BigRational>,
    /// Whether all sides agree.
    pub equal: bool,
}

/// Outcome of one check at a fixed parameter tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    /// Stable name of the check.
    pub label: String,
    /// Named integer parameters of the tuple.
    pub parameters: Vec<(&'static str, i64)>,
    /// One case per sample point.
    pub cases: Vec<CheckCase>,
    /// Whether every case agreed.
    pub equal: bool,
}

/// Outcome of the certified polynomial comparison: the scalar side is
/// interpolated into a polynomial on a prime grid and compared exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertifiedReport {
    /// Stable name of the check.
    pub label: String,
    /// Named integer parameters of the tuple.
    pub parameters: Vec<(&'static str, i64)>,
    /// The combinatorial polynomial.
    pub combinatorial: QtPolynomial,
    /// The scalar side, interpolated on the grid.
    pub interpolated: QtPolynomial,
    /// Pointwise three-way cases at the extra sample points.
    pub cases: Vec<CheckCase>,
    /// Whether the polynomials match and every case agreed.
    pub equal: bool,
}

/// Outcome of a per-content sweep at a fixed parameter tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContentReport {
    /// Stable name of the check.
    pub label: String,
    /// Named integer parameters of the tuple.
    pub parameters: Vec<(&'static str, i64)>,
    /// One sub-report per content partition.
    pub contents: Vec<(Partition, Vec<CheckCase>)>,
    /// Whether every content agreed at every point.
    pub equal: bool,
}

/// Failure modes of a check run (distinct from a counterexample, which is
/// reported as data).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckError {
    /// The engine failed (degree bound or singular point).
    Oracle(OracleError),
    /// The combinatorial side was queried inconsistently.
    Enumerator(EnumeratorError),
    /// Interpolation of the scalar side failed.
    Interpolation(InterpolateError),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Oracle(e) => write!(f, "{e}"),
            CheckError::Enumerator(e) => write!(f, "{e}"),
            CheckError::Interpolation(e) => write!(f, "{e}"),
        }
    }
}

impl From<OracleError> for CheckError {
    fn from(e: OracleError) -> Self {
        CheckError::Oracle(e)
    }
}

impl From<EnumeratorError> for CheckError {
    fn from(e: EnumeratorError) -> Self {
        CheckError::Enumerator(e)
    }
}

impl From<InterpolateError> for CheckError {
    fn from(e: InterpolateError) -> Self {
        CheckError::Interpolation(e)
    }
}

fn report(label: &str, parameters: Vec<(&'static str, i64)>, cases: Vec<CheckCase>) -> CheckReport {
    let equal = cases.iter().all(|c| c.equal);
    CheckReport { label: String::from(label), parameters, cases, equal }
}

// ---- scalar sides ----

/// <Delta_{h_m} e_{n+1}, s_{(k+1, 1^(n-k))}>.
fn hook_side(o: &mut Oracle, m: usize, n: usize, k: usize) -> Result<BigRational, OracleError> {
    let d = o.delta(Generator::Homogeneous(m as i64), &SymFunc::elementary(n + 1))?;
    o.hall(&d, &SymFunc::schur(Partition::hook(k + 1, n - k)))
}

/// <Delta'_{e_(m+n-k-1)} e_(m+n), h_m h_n>.
fn primed_side(o: &mut Oracle, m: usize, n: usize, k: usize) -> Result<BigRational, OracleError> {
    let j = m as i64 + n as i64 - k as i64 - 1;
    let d = o.delta_prime(Generator::Elementary(j), &SymFunc::elementary(m + n))?;
    o.hall(&d, &SymFunc::homogeneous_product(&[m, n]))
}

/// t^j <Delta_{h_j} Delta_{e_k} e_n[X (1 - q^r) / (1 - q)], e_n> for j >= 0.
fn scaled_term(o: &mut Oracle, j: usize, k: usize, n: usize, r: usize) -> Result<BigRational, OracleError> {
    let spread = o.pleth_scale(&SymFunc::elementary(n), r)?;
    let inner = o.delta(Generator::Elementary(k as i64), &spread)?;
    let outer = o.delta(Generator::Homogeneous(j as i64), &inner)?;
    let paired = o.hall(&outer, &SymFunc::elementary(n))?;
    let mut t_power = rational(1);
    for _ in 0..j {
        t_power *= o.t();
    }
    Ok(t_power * paired)
}

// ---- checks ----

/// The hook expansion against the primed operator:
/// <Delta_{h_m} e_{n+1}, s_{(k+1, 1^(n-k))}> = <Delta'_{e_(m+n-k-1)} e_(m+n), h_m h_n>.
pub fn check_identity_1(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    k: usize,
    points: &[Point],
) -> Result<CheckReport, CheckError> {
    assert!(k <= n, "hook tail needs k <= n");
    let mut cases = Vec::with_capacity(points.len());
    for point in points {
        let o = pool.oracle(point);
        let left = hook_side(o, m, n, k)?;
        let right = primed_side(o, m, n, k)?;
        let equal = left == right;
        cases.push(CheckCase { point: point.clone(), values: vec![left, right], equal });
    }
    Ok(report("identity1", vec![("m", m as i64), ("n", n as i64), ("k", k as i64)], cases))
}

/// The summed expansion over batch sizes:
/// sum_{r=1}^{m+1-k} t^(m+1-r-k) <Delta_{h_(m+1-r-k)} Delta_{e_k}
/// e_n[X (1 - q^r) / (1 - q)], e_n> = <Delta_{h_m} e_{n+1}, s_{(k+1, 1^(n-k))}>.
pub fn check_identity_2(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    k: usize,
    points: &[Point],
) -> Result<CheckReport, CheckError> {
    assert!(k <= n, "hook tail needs k <= n");
    let mut cases = Vec::with_capacity(points.len());
    for point in points {
        let o = pool.oracle(point);
        let mut left = BigRational::zero();
        for r in 1..=(m + 1).saturating_sub(k) {
            let j = m + 1 - r - k;
            left += scaled_term(o, j, k, n, r)?;
        }
        let right = hook_side(o, m, n, k)?;
        let equal = left == right;
        cases.push(CheckCase { point: point.clone(), values: vec![left, right], equal });
    }
    Ok(report("identity2", vec![("m", m as i64), ("n", n as i64), ("k", k as i64)], cases))
}

/// [`check_identity_2`] with the sum bounded by m instead of m + 1: the
/// uncorrected form, kept so its failure stays observable.
pub fn check_identity_2_as_printed(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    k: usize,
    points: &[Point],
) -> Result<CheckReport, CheckError> {
    assert!(k <= n, "hook tail needs k <= n");
    let mut cases = Vec::with_capacity(points.len());
    for point in points {
        let o = pool.oracle(point);
        let mut left = BigRational::zero();
        for r in 1..=m.saturating_sub(k) {
            let j = m - r - k;
            left += scaled_term(o, j, k, n, r)?;
        }
        let right = hook_side(o, m, n, k)?;
        let equal = left == right;
        cases.push(CheckCase { point: point.clone(), values: vec![left, right], equal });
    }
    Ok(report("identity2-as-printed", vec![("m", m as i64), ("n", n as i64), ("k", k as i64)], cases))
}

/// One batch of the expansion: the enumerator over width m, height n with
/// zero statistic r and k decorated rises equals
/// t^(m+1-r-k) <Delta_{h_(m+1-r-k)} Delta_{e_k} e_n[X (1 - q^r) / (1 - q)], e_n>,
/// the scalar side read as zero when its homogeneous index is negative.
pub fn check_lemma(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    r: usize,
    k: usize,
    points: &[Point],
) -> Result<CheckReport, CheckError> {
    assert!((1..=m + 1).contains(&r), "zero statistic ranges over 1..=m+1");
    let query = EnumeratorQuery::plain(Family::RisePolyomino, m, n, k).with_zeros(r);
    let combinatorial = brute_enumerator(&query)?;
    let mut cases = Vec::with_capacity(points.len());
    for point in points {
        let left = combinatorial.eval(&point.0, &point.1);
        let o = pool.oracle(point);
        let right = if m + 1 < r + k {
            BigRational::zero()
        } else {
            scaled_term(o, m + 1 - r - k, k, n, r)?
        };
        let equal = left == right;
        cases.push(CheckCase { point: point.clone(), values: vec![left, right], equal });
    }
    Ok(report(
        "lemma",
        vec![("m", m as i64), ("n", n as i64), ("r", r as i64), ("k", k as i64)],
        cases,
    ))
}

/// [`check_lemma`] with the scalar side's homogeneous index lowered by one:
/// the uncorrected form, kept so its failure stays observable.
pub fn check_lemma_as_printed(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    r: usize,
    k: usize,
    points: &[Point],
) -> Result<CheckReport, CheckError> {
    assert!((1..=m + 1).contains(&r), "zero statistic ranges over 1..=m+1");
    let query = EnumeratorQuery::plain(Family::RisePolyomino, m, n, k).with_zeros(r);
    let combinatorial = brute_enumerator(&query)?;
    let mut cases = Vec::with_capacity(points.len());
    for point in points {
        let left = combinatorial.eval(&point.0, &point.1);
        let o = pool.oracle(point);
        let right = if m < r + k {
            BigRational::zero()
        } else {
            scaled_term(o, m - r - k, k, n, r)?
        };
        let equal = left == right;
        cases.push(CheckCase { point: point.clone(), values: vec![left, right], equal });
    }
    Ok(report(
        "lemma-as-printed",
        vec![("m", m as i64), ("n", n as i64), ("r", r as i64), ("k", k as i64)],
        cases,
    ))
}

/// The three-way comparison: the rise enumerator on width m, height n with k
/// decorations equals both scalar sides of the hook expansion.
pub fn check_final(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    k: usize,
    points: &[Point],
) -> Result<CheckReport, CheckError> {
    assert!(k <= n, "hook tail needs k <= n");
    let combinatorial = brute_enumerator(&EnumeratorQuery::plain(Family::RisePolyomino, m, n, k))?;
    let mut cases = Vec::with_capacity(points.len());
    for point in points {
        let value = combinatorial.eval(&point.0, &point.1);
        let o = pool.oracle(point);
        let hook = hook_side(o, m, n, k)?;
        let primed = primed_side(o, m, n, k)?;
        let equal = value == hook && value == primed;
        cases.push(CheckCase { point: point.clone(), values: vec![value, hook, primed], equal });
    }
    Ok(report("final", vec![("m", m as i64), ("n", n as i64), ("k", k as i64)], cases))
}

/// [`check_final`] plus a polynomial certificate: the hook side is
/// interpolated on a prime grid sized by the combinatorial polynomial's
/// degrees (disjoint q and t nodes, so q never equals t) and must equal that
/// polynomial exactly; the extra sample points guard against the scalar side
/// exceeding the claimed degrees.
pub fn check_final_certified(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    k: usize,
    points: &[Point],
) -> Result<CertifiedReport, CheckError> {
    let pointwise = check_final(pool, m, n, k, points)?;
    let combinatorial = brute_enumerator(&EnumeratorQuery::plain(Family::RisePolyomino, m, n, k))?;
    let dq = combinatorial.deg_q().unwrap_or(0) as usize;
    let dt = combinatorial.deg_t().unwrap_or(0) as usize;
    let all = prime_nodes(2 * (dq + 1).max(dt + 1));
    let q_nodes: Vec<BigRational> = all.iter().step_by(2).take(dq + 1).cloned().collect();
    let t_nodes: Vec<BigRational> = all.iter().skip(1).step_by(2).take(dt + 1).cloned().collect();
    let mut failure: Option<CheckError> = None;
    let interpolated = interpolate_with_nodes(
        |qv, tv| {
            if failure.is_some() {
                return BigRational::zero();
            }
            let o = pool.oracle(&(qv.clone(), tv.clone()));
            match hook_side(o, m, n, k) {
                Ok(v) => v,
                Err(e) => {
                    failure = Some(e.into());
                    BigRational::zero()
                }
            }
        },
        &q_nodes,
        &t_nodes,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    let equal = pointwise.equal && interpolated == combinatorial;
    Ok(CertifiedReport {
        label: String::from("final-interpolated"),
        parameters: pointwise.parameters,
        combinatorial,
        interpolated,
        cases: pointwise.cases,
        equal,
    })
}

/// The labelled-path comparison, one content at a time: for every partition
/// lambda of n + 1, the enumerator over partial labellings with m blanks,
/// content lambda, and k decorated rises equals
/// <Delta_{h_m} Delta'_{e_(n-k)} e_{n+1}, h_lambda>.
pub fn check_pmaj_conjecture(
    pool: &mut OraclePool,
    m: usize,
    n: usize,
    k: usize,
    points: &[Point],
) -> Result<ContentReport, CheckError> {
    assert!(k <= n, "decorations are bounded by n");
    let mut contents = Vec::new();
    let mut equal = true;
    for lambda in partitions_of(n + 1) {
        let counts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
        let combinatorial = labelled_content_enumerator(m, &counts, k);
        let mut cases = Vec::with_capacity(points.len());
        for point in points {
            let left = combinatorial.eval(&point.0, &point.1);
            let o = pool.oracle(point);
            let primed = o.delta_prime(Generator::Elementary(n as i64 - k as i64), &SymFunc::elementary(n + 1))?;
            let outer = o.delta(Generator::Homogeneous(m as i64), &primed)?;
            let factors: Vec<usize> = counts.clone();
            let right = o.hall(&outer, &SymFunc::homogeneous_product(&factors))?;
            let case_equal = left == right;
            equal &= case_equal;
            cases.push(CheckCase { point: point.clone(), values: vec![left, right], equal: case_equal });
        }
        contents.push((lambda, cases));
    }
    Ok(ContentReport {
        label: String::from("pmaj-conjecture"),
        parameters: vec![("m", m as i64), ("n", n as i64), ("k", k as i64)],
        contents,
        equal,
    })
}
