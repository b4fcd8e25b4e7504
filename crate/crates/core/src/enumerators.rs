//! Brute-force q,t-enumerators for the object families, the recursive
//! evaluation of the valley-decorated enumerator, and consistency checks
//! comparing the independent routes.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bijections::labelled_to_stacked;
use crate::dyck::visit_labelled;
use crate::polyomino::{LabelledPolyomino, ReducedPolyomino};
use crate::qt::{qbinom, QtPolynomial};
use crate::statistics::{self, BouncePath};

/// Object family a brute-force enumerator sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Valley-decorated polyominoes, weighted q^area t^(decorated bounce).
    ValleyPolyomino,
    /// Rise-decorated polyominoes, weighted q^dinv t^(decorated area).
    RisePolyomino,
    /// Rise-decorated two-car parking functions, weighted q^dinv t^(decorated area).
    TwoCarParking,
    /// Rise-decorated partial labellings with distinct positive labels,
    /// weighted q^(decorated area) t^pmaj.
    LabelledPath,
}

/// Statistic pair weighting an enumerator, as (q-exponent, t-exponent).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatPair {
    /// q^area t^(decorated bounce); valley-decorated polyominoes.
    AreaBounceDec,
    /// q^dinv t^(decorated area); rise-decorated polyominoes and two-car
    /// parking functions.
    DinvAreaDec,
    /// q^(decorated area) t^pmaj; partial labellings.
    AreaDecPmaj,
}

impl Family {
    /// The statistic pair this family carries.
    pub fn stats(self) -> StatPair {
        match self {
            Family::ValleyPolyomino => StatPair::AreaBounceDec,
            Family::RisePolyomino | Family::TwoCarParking => StatPair::DinvAreaDec,
            Family::LabelledPath => StatPair::AreaDecPmaj,
        }
    }
}

/// Parameters of a brute-force enumeration.
///
/// `m` and `n` are the literal frame for the polyomino families (width,
/// height), the label counts (ones, twos) for two-car parking functions, and
/// (blanks, positive labels minus one) for partial labellings. The valley
/// family on frame (m, n) matches the rise family on frame (n, m).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumeratorQuery {
    /// Object family.
    pub family: Family,
    /// First size parameter.
    pub m: usize,
    /// Second size parameter.
    pub n: usize,
    /// Number of decorated positions per object.
    pub k: usize,
    /// Optional filter on the family's zero statistic.
    pub zeros: Option<usize>,
    /// Requested statistic pair; must match the family's.
    pub stats: StatPair,
}

impl EnumeratorQuery {
    /// Query with the family's canonical statistics and no zero filter.
    pub fn plain(family: Family, m: usize, n: usize, k: usize) -> Self {
        EnumeratorQuery { family, m, n, k, zeros: None, stats: family.stats() }
    }

    /// The same query restricted to one value of the zero statistic.
    pub fn with_zeros(mut self, s: usize) -> Self {
        self.zeros = Some(s);
        self
    }
}

/// Error raised for a malformed enumerator query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumeratorError {
    /// The zero statistic is at least 1 on every object.
    BadZeroStatistic,
    /// The requested family has no zero-statistic filter.
    FilterUnsupported,
    /// The requested statistic pair does not belong to the family.
    StatsIncompatible,
    /// The recursion produced a nonzero batch with a negative bounce
    /// exponent at the recorded (m, n, s, k); the always-full base
    /// convention does this.
    NegativeExponent(usize, usize, usize, usize),
}

impl core::fmt::Display for EnumeratorError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumeratorError::BadZeroStatistic => write!(f, "zero statistic must be at least 1"),
            EnumeratorError::FilterUnsupported => {
                write!(f, "this family has no zero-statistic filter")
            }
            EnumeratorError::StatsIncompatible => {
                write!(f, "statistic pair does not match the family")
            }
            EnumeratorError::NegativeExponent(m, n, s, k) => write!(
                f,
                "recursion produced a negative bounce exponent at ({m}, {n}, {s}, {k})"
            ),
        }
    }
}

// ---- accumulation helpers ----

/// Exponent grid with machine-word counts, converted to a polynomial at the end.
#[derive(Default)]
struct Accum(BTreeMap<(u32, u32), u64>);

impl Accum {
    fn add(&mut self, q: u64, t: u64, count: u64) {
        let entry = self
            .0
            .entry((u32::try_from(q).unwrap(), u32::try_from(t).unwrap()))
            .or_insert(0);
        *entry = entry.checked_add(count).expect("enumerator count overflow");
    }

    fn into_polynomial(self) -> QtPolynomial {
        let mut poly = QtPolynomial::zero();
        for ((a, b), c) in self.0 {
            poly.add_term(a, b, crate::BigInt::from(c));
        }
        poly
    }
}

/// Sums of k-element subsets of `values`, with multiplicities.
fn k_subset_sums(values: &[u64], k: usize) -> Vec<(u64, u64)> {
    let mut table: Vec<BTreeMap<u64, u64>> = vec![BTreeMap::new(); k + 1];
    table[0].insert(0, 1);
    for &v in values {
        for j in (0..k).rev() {
            let snapshot: Vec<(u64, u64)> = table[j].iter().map(|(&s, &c)| (s, c)).collect();
            for (sum, count) in snapshot {
                *table[j + 1].entry(sum + v).or_insert(0) += count;
            }
        }
    }
    table.pop().unwrap().into_iter().collect()
}

// ---- brute-force enumerators ----

/// Evaluates the query by direct enumeration of every object and every
/// k-element decoration subset.
pub fn brute_enumerator(query: &EnumeratorQuery) -> Result<QtPolynomial, EnumeratorError> {
    if query.zeros == Some(0) {
        return Err(EnumeratorError::BadZeroStatistic);
    }
    if query.stats != query.family.stats() {
        return Err(EnumeratorError::StatsIncompatible);
    }
    match query.family {
        Family::ValleyPolyomino => Ok(valley_enumerator(query.m, query.n, query.k, query.zeros)),
        Family::RisePolyomino => Ok(rise_enumerator(query.m, query.n, query.k, query.zeros)),
        Family::TwoCarParking => Ok(parking_enumerator(query.m, query.n, query.k, query.zeros)),
        Family::LabelledPath => {
            if query.zeros.is_some() {
                return Err(EnumeratorError::FilterUnsupported);
            }
            let content = vec![1usize; query.n + 1];
            Ok(labelled_content_enumerator(query.m, &content, query.k))
        }
    }
}

fn valley_enumerator(m: usize, n: usize, k: usize, zeros: Option<usize>) -> QtPolynomial {
    let mut acc = Accum::default();
    ReducedPolyomino::visit_all(m, n, &mut |p| {
        if let Some(s) = zeros {
            if statistics::bullet_zeros(&p) != s {
                return;
            }
        }
        let area = statistics::area(&p.area_word());
        let bounce_path = BouncePath::of(&p);
        let bounce = bounce_path.bounce();
        if k == 0 {
            acc.add(area, bounce, 1);
            return;
        }
        let valleys = p.red_valleys();
        if valleys.len() < k {
            return;
        }
        // Decorating the valley in row y discounts that row's bounce label.
        let mut deductions = Vec::with_capacity(valleys.len());
        let mut row = 0usize;
        for i in 1..=m + n {
            if p.red_is_north(i) {
                if valleys.contains(&i) {
                    deductions.push(u64::from(bounce_path.row_label(row).value));
                }
                row += 1;
            }
        }
        for (sum, count) in k_subset_sums(&deductions, k) {
            acc.add(area, bounce - sum, count);
        }
    });
    acc.into_polynomial()
}

fn rise_enumerator(m: usize, n: usize, k: usize, zeros: Option<usize>) -> QtPolynomial {
    let mut acc = Accum::default();
    ReducedPolyomino::visit_all(m, n, &mut |p| {
        let word = p.area_word();
        if let Some(s) = zeros {
            if statistics::star_zeros(&word) != s {
                return;
            }
        }
        let area = statistics::area(&word);
        let dinv = statistics::dinv(&word);
        if k == 0 {
            acc.add(dinv, area, 1);
            return;
        }
        let rises = word.rises();
        if rises.len() < k {
            return;
        }
        // Decorating the rise at position i discounts that letter's value.
        let deductions: Vec<u64> = rises
            .iter()
            .map(|&i| u64::from(word.letter(i).value))
            .collect();
        for (sum, count) in k_subset_sums(&deductions, k) {
            acc.add(dinv, area - sum, count);
        }
    });
    acc.into_polynomial()
}

fn parking_enumerator(ones: usize, twos: usize, k: usize, zeros: Option<usize>) -> QtPolynomial {
    let mut acc = Accum::default();
    let content = [ones, twos];
    visit_labelled(0, &content, &mut |pf| {
        if let Some(s) = zeros {
            if pf.diagonal_rows_with_label(2) + 1 != s {
                return;
            }
        }
        let area = pf.area();
        let dinv = pf.dinv();
        if k == 0 {
            acc.add(dinv, area, 1);
            return;
        }
        let rises = pf.rises();
        if rises.len() < k {
            return;
        }
        let vector = pf.path().area_vector();
        let deductions: Vec<u64> = rises.iter().map(|&i| u64::from(vector[i - 1])).collect();
        for (sum, count) in k_subset_sums(&deductions, k) {
            acc.add(dinv, area - sum, count);
        }
    });
    acc.into_polynomial()
}

/// Sum of q^(decorated area) t^pmaj over partial labellings with `blanks`
/// blank rows, positive labels of the given content, and every k-element
/// subset of decorated rises. `content[i]` is the multiplicity of label i+1.
pub fn labelled_content_enumerator(blanks: usize, content: &[usize], k: usize) -> QtPolynomial {
    let mut acc = Accum::default();
    visit_labelled(blanks, content, &mut |pldp| {
        let area = pldp.area();
        let pmaj = pldp.pmaj();
        if k == 0 {
            acc.add(area, pmaj, 1);
            return;
        }
        let rises = pldp.rises();
        if rises.len() < k {
            return;
        }
        let vector = pldp.path().area_vector();
        let deductions: Vec<u64> = rises.iter().map(|&i| u64::from(vector[i - 1])).collect();
        for (sum, count) in k_subset_sums(&deductions, k) {
            acc.add(area - sum, pmaj, count);
        }
    });
    acc.into_polynomial()
}

/// Visits every column-strict labelling of every frame-(m, n) polyomino,
/// with `content[v - 1]` copies of label v, in deterministic order.
pub fn visit_labelled_polyominoes(
    m: usize,
    n: usize,
    content: &[usize],
    f: &mut impl FnMut(&LabelledPolyomino),
) {
    if content.iter().sum::<usize>() != n + 1 {
        return;
    }
    ReducedPolyomino::visit_all(m, n, &mut |p| {
        // Label slots in reading order: the corner label, then each red
        // north step. A slot continues a stack when the previous red step
        // is north (step 1 stacks on the corner label).
        let mut stacked = Vec::with_capacity(n);
        let mut slots = 0usize;
        for i in 1..=m + n {
            if p.red_is_north(i) {
                stacked.push(i == 1 || p.red_is_north(i - 1));
                slots += 1;
            }
        }
        debug_assert_eq!(slots, n);
        let mut remaining: Vec<usize> = content.to_vec();
        let mut labels = Vec::with_capacity(n);
        assign_labels(&p, &stacked, &mut remaining, &mut labels, 0, f);
    });
}

/// Sum of q^area t^pmaj over labelled polyominoes of frame (m, n) with
/// positive labels of the given content, pmaj read through the stacked
/// labelled-path preimage. Dual route to [`labelled_content_enumerator`]
/// with every rise decorated.
pub fn labelled_polyomino_enumerator(m: usize, n: usize, content: &[usize]) -> QtPolynomial {
    let mut acc = Accum::default();
    visit_labelled_polyominoes(m, n, content, &mut |lp| {
        let area = statistics::area(&lp.poly.area_word());
        let (pldp, _) = labelled_to_stacked(lp).expect("labelled polyominoes are stacked images");
        acc.add(area, pldp.pmaj(), 1);
    });
    acc.into_polynomial()
}

/// Depth-first assignment of the corner label and red labels; visits each
/// complete column-strict assignment.
fn assign_labels(
    p: &ReducedPolyomino,
    stacked: &[bool],
    remaining: &mut Vec<usize>,
    labels: &mut Vec<u32>,
    depth: usize,
    f: &mut impl FnMut(&LabelledPolyomino),
) {
    if depth == stacked.len() + 1 {
        let first = labels[0];
        let lp = LabelledPolyomino::new(*p, first, labels[1..].to_vec())
            .expect("assignment respects column strictness");
        f(&lp);
        return;
    }
    let floor = if depth == 0 || !stacked[depth - 1] {
        0
    } else {
        labels[depth - 1]
    };
    for value in 1..=remaining.len() {
        if remaining[value - 1] == 0 || (value as u32) <= floor {
            continue;
        }
        remaining[value - 1] -= 1;
        labels.push(value as u32);
        assign_labels(p, stacked, remaining, labels, depth + 1, f);
        labels.pop();
        remaining[value - 1] += 1;
    }
}

// ---- recursive evaluation ----

/// Convention for the all-zeros base case (zero statistic n + 1) when
/// decorations remain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseConvention {
    /// The base set is empty unless k = 0: a path with every letter zero
    /// has no valley to decorate.
    EmptyUnlessUndecorated,
    /// The base contributes the full lattice-path count for every k.
    AlwaysFull,
}

/// Recursive evaluation of the valley-decorated enumerator on frame (m, n)
/// with zero statistic `s` and `k` decorations, peeling one bounce batch
/// per step.
pub fn recursion_enumerator(
    m: usize,
    n: usize,
    s: usize,
    k: usize,
) -> Result<QtPolynomial, EnumeratorError> {
    recursion_enumerator_with_base(m, n, s, k, BaseConvention::EmptyUnlessUndecorated)
}

/// [`recursion_enumerator`] with an explicit base-case convention.
pub fn recursion_enumerator_with_base(
    m: usize,
    n: usize,
    s: usize,
    k: usize,
    base: BaseConvention,
) -> Result<QtPolynomial, EnumeratorError> {
    if s == 0 {
        return Err(EnumeratorError::BadZeroStatistic);
    }
    let mut memo = BTreeMap::new();
    recursion_step(m, n, s, k, base, &mut memo)
}

fn recursion_step(
    m: usize,
    n: usize,
    s: usize,
    k: usize,
    base: BaseConvention,
    memo: &mut BTreeMap<(usize, usize, usize, usize), QtPolynomial>,
) -> Result<QtPolynomial, EnumeratorError> {
    if s > n + 1 {
        return Ok(QtPolynomial::zero());
    }
    if s == n + 1 {
        return Ok(if k == 0 || base == BaseConvention::AlwaysFull {
            qbinom((m + n) as u32, m as u32)
        } else {
            QtPolynomial::zero()
        });
    }
    if m == 0 {
        // Width zero with a letter above zero is impossible.
        return Ok(QtPolynomial::zero());
    }
    if let Some(hit) = memo.get(&(m, n, s, k)) {
        return Ok(hit.clone());
    }
    let mut total = QtPolynomial::zero();
    for r in 1..=m {
        let t_exponent = (m + n + 1) as i64 - (r + s + k) as i64;
        let mut inner = QtPolynomial::zero();
        for h in 0..=k.min(r) {
            let choose_h = qbinom(r as u32, h as u32);
            let mut v_sum = QtPolynomial::zero();
            for v in 1..=n - s + 1 {
                if r + v < h + 1 {
                    continue;
                }
                let weight = qbinom((r + v - h - 1) as u32, (r - 1) as u32);
                if weight.is_zero() {
                    continue;
                }
                let sub = recursion_step(m - r, n - s, v, k - h, base, memo)?;
                if sub.is_zero() {
                    continue;
                }
                v_sum = v_sum + weight * sub;
            }
            if v_sum.is_zero() {
                continue;
            }
            let pairs = (h * h.saturating_sub(1) / 2) as u32;
            inner = inner + QtPolynomial::monomial(pairs, 0, 1) * choose_h * v_sum;
        }
        if inner.is_zero() {
            continue;
        }
        let term = qbinom((r + s - 1) as u32, r as u32) * inner;
        if term.is_zero() {
            continue;
        }
        if t_exponent < 0 {
            return Err(EnumeratorError::NegativeExponent(m, n, s, k));
        }
        total = total + term.shifted(0, t_exponent as u32);
    }
    memo.insert((m, n, s, k), total.clone());
    Ok(total)
}

// ---- consistency checks ----

/// One parameter tuple where two enumeration routes disagreed.
#[derive(Clone, Debug)]
pub struct Mismatch {
    /// Parameters (m, n, s, k) of the disagreeing tuple.
    pub parameters: (usize, usize, usize, usize),
    /// Value from the first route.
    pub left: QtPolynomial,
    /// Value from the second route.
    pub right: QtPolynomial,
}

/// Outcome of sweeping two enumeration routes over a parameter box.
#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    /// Name of the comparison.
    pub label: String,
    /// Number of parameter tuples compared.
    pub checked: usize,
    /// Tuples where the routes disagreed.
    pub mismatches: Vec<Mismatch>,
}

impl ConsistencyReport {
    /// True when every tuple agreed.
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Sweeps an evaluator against brute-force valley enumeration over
/// m <= max_m, n <= max_n, 1 <= s <= n + 1, 0 <= k <= max_k.
fn compare_with_valleys(
    label: &str,
    max_m: usize,
    max_n: usize,
    max_k: usize,
    mut eval: impl FnMut(usize, usize, usize, usize) -> QtPolynomial,
) -> ConsistencyReport {
    let mut report = ConsistencyReport {
        label: String::from(label),
        checked: 0,
        mismatches: Vec::new(),
    };
    for m in 0..=max_m {
        for n in 0..=max_n {
            for s in 1..=n + 1 {
                for k in 0..=max_k {
                    let valley = valley_enumerator(m, n, k, Some(s));
                    let other = eval(m, n, s, k);
                    report.checked += 1;
                    if valley != other {
                        report.mismatches.push(Mismatch {
                            parameters: (m, n, s, k),
                            left: valley,
                            right: other,
                        });
                    }
                }
            }
        }
    }
    report
}

/// Compares the recursive evaluation against the brute-force valley
/// enumerator and against the rise enumerator on the transposed frame, for
/// every m <= max_m, n <= max_n, 1 <= s <= n + 1, 0 <= k <= max_k. Also
/// counts how many tuples the always-full base convention gets wrong.
pub fn check_recursion(max_m: usize, max_n: usize, max_k: usize) -> (ConsistencyReport, usize) {
    let mut report = compare_with_valleys(
        "recursion vs brute force",
        max_m,
        max_n,
        max_k,
        |m, n, s, k| recursion_enumerator(m, n, s, k).expect("empty-base recursion is total"),
    );
    let rises = compare_with_valleys(
        "rise enumerator on the transposed frame vs valleys",
        max_m,
        max_n,
        max_k,
        |m, n, s, k| rise_enumerator(n, m, k, Some(s)),
    );
    report.checked += rises.checked;
    report.mismatches.extend(rises.mismatches);
    let mut alternate_failures = 0usize;
    for m in 0..=max_m {
        for n in 0..=max_n {
            for s in 1..=n + 1 {
                for k in 0..=max_k {
                    // The always-full base either evaluates to the wrong
                    // polynomial or aborts on a negative bounce exponent.
                    match recursion_enumerator_with_base(m, n, s, k, BaseConvention::AlwaysFull) {
                        Ok(alternate) if alternate == valley_enumerator(m, n, k, Some(s)) => {}
                        _ => alternate_failures += 1,
                    }
                }
            }
        }
    }
    (report, alternate_failures)
}

/// Compares two-car parking functions (m ones, n twos, s - 1 twos on the
/// diagonal) against valley-decorated polyominoes on frame (m, n) for every
/// m <= max_m, n <= max_n, 1 <= s <= n + 1, 0 <= k <= max_k.
pub fn check_two_car(max_m: usize, max_n: usize, max_k: usize) -> ConsistencyReport {
    compare_with_valleys(
        "two-car parking vs valley polyominoes",
        max_m,
        max_n,
        max_k,
        |m, n, s, k| parking_enumerator(m, n, k, Some(s)),
    )
}

/// Compares the rise enumerator on the transposed frame against valleys,
/// pointwise over the same ranges; the generating-function face of the
/// merge map.
pub fn check_transport(max_m: usize, max_n: usize, max_k: usize) -> ConsistencyReport {
    compare_with_valleys(
        "rise enumerator on the transposed frame vs valleys",
        max_m,
        max_n,
        max_k,
        |m, n, s, k| rise_enumerator(n, m, k, Some(s)),
    )
}
