//! Pinned regression suite over the reference examples.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bijections::{
    labelled_to_stacked, merge_map, merge_map_inverse, parking_to_polyomino,
    polyomino_to_parking, stacked_to_labelled,
};
use crate::dyck::{DyckPath, PartiallyLabelledDyckPath};
use crate::polyomino::{
    path_from_str, path_to_string, DecoratedPolyomino, ReducedPolyomino, Step,
};
use crate::statistics;

/// Verdict for one pinned case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    /// Stable case name, usable as a failure handle.
    pub name: &'static str,
    /// Whether every pin in the case matched.
    pub passed: bool,
    /// "ok" on success, otherwise the first mismatch.
    pub detail: String,
}

/// Outcome of the whole suite, one entry per case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// Per-case verdicts in suite order.
    pub cases: Vec<CaseReport>,
}

impl Report {
    /// True when every case passed.
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    /// Names of the failed cases, in suite order.
    pub fn failures(&self) -> Vec<&'static str> {
        self.cases.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }
}

/// Expected values for the pinned cases.
#[derive(Clone, Debug)]
pub struct Fixtures {
    tall_red: String,
    tall_green: String,
    tall_word: String,
    tall_area: u64,
    wide_red: String,
    wide_green: String,
    wide_corners: Vec<(usize, usize)>,
    wide_bounce: u64,
    wide_valleys: Vec<usize>,
    wide_bounce_dec: u64,
    wide_area: u64,
    merge_word: String,
    merge_rises: Vec<usize>,
    merge_dinv: u64,
    merge_area_dec: u64,
    parking_path: String,
    parking_labels: Vec<u32>,
    parking_word: String,
    parking_frame: (usize, usize),
    stacked_path: String,
    stacked_labels: Vec<u32>,
    image_red: String,
    image_green: String,
    image_first: u32,
    image_red_labels: Vec<u32>,
    image_area: u64,
}

impl Fixtures {
    /// The reference pins.
    pub fn pinned() -> Self {
        Fixtures {
            tall_red: "NNNEEENEENEEENNEEEE".to_string(),
            tall_green: "EEENEENNEENEEENEENN".to_string(),
            tall_word: "0 0' 1 1' 2 2' 3 2 2 2' 1 1' 2 1 1 1' 2 2' 2 2".to_string(),
            tall_area: 30,
            wide_red: "NNNEEENEENEEENEEEEN".to_string(),
            wide_green: "EENNNEEEEENEEENEENN".to_string(),
            wide_corners: alloc::vec![(0, 0), (0, 3), (7, 3), (7, 5), (12, 5), (12, 7)],
            wide_bounce: 11,
            wide_valleys: alloc::vec![10, 14],
            wide_bounce_dec: 8,
            wide_area: 19,
            merge_word: "0 0' 0' 0 0 0 0' 1 1' 2 1' 1' 0' 0' 1 1' 1' 2 0' 0'".to_string(),
            merge_rises: alloc::vec![10, 15],
            merge_dinv: 19,
            merge_area_dec: 8,
            parking_path: "NENNENENENENENEENENENE".to_string(),
            parking_labels: alloc::vec![1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1],
            parking_word: "0 0' 0' 1 1 1' 1' 1' 1 0' 0 0'".to_string(),
            parking_frame: (4, 7),
            stacked_path: "NNNEENNNNENEEEENNEEENNEE".to_string(),
            stacked_labels: alloc::vec![1, 2, 4, 0, 5, 7, 8, 0, 0, 3, 0, 6],
            image_red: "NNENNNEENEN".to_string(),
            image_green: "NEENNNENNEN".to_string(),
            image_first: 1,
            image_red_labels: alloc::vec![2, 4, 5, 7, 8, 3, 6],
            image_area: 6,
        }
    }

    /// The pins with one expected value deliberately wrong, for exercising
    /// failure reporting.
    pub fn corrupted() -> Self {
        let mut f = Self::pinned();
        f.wide_bounce = 12;
        f
    }
}

/// Runs the suite against the reference pins.
pub fn run() -> Report {
    run_with(&Fixtures::pinned())
}

/// Runs the suite against deliberately corrupted pins; a healthy build
/// reports exactly one named failure.
pub fn negative_control() -> Report {
    run_with(&Fixtures::corrupted())
}

/// Runs every case against the given pins.
pub fn run_with(fixtures: &Fixtures) -> Report {
    let checks: [(&'static str, fn(&Fixtures) -> Result<String, String>); 5] = [
        ("tall-area-word", check_tall),
        ("wide-bounce-path", check_wide),
        ("merge-image", check_merge),
        ("two-car-image", check_two_car),
        ("stack-image", check_stack),
    ];
    let cases = checks
        .iter()
        .map(|&(name, check)| match check(fixtures) {
            Ok(detail) => CaseReport { name, passed: true, detail },
            Err(detail) => CaseReport { name, passed: false, detail },
        })
        .collect();
    Report { cases }
}

fn expect<T: PartialEq + core::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

fn build_polyomino(red: &str, green: &str) -> Result<ReducedPolyomino, String> {
    let red = path_from_str(red).map_err(|e| format!("red path: {e}"))?;
    let green = path_from_str(green).map_err(|e| format!("green path: {e}"))?;
    let m = red.iter().filter(|&&s| s == Step::E).count();
    let n = red.len() - m;
    ReducedPolyomino::new(m, n, &red, &green).map_err(|e| format!("polyomino: {e}"))
}

/// Area counted as unit cells between the two paths, independent of the
/// area-word letter sum.
fn cells_between(p: &ReducedPolyomino) -> u64 {
    let heights = |steps: &[Step]| -> Vec<u64> {
        let mut h = 0u64;
        let mut profile = Vec::new();
        for &s in steps {
            match s {
                Step::N => h += 1,
                Step::E => profile.push(h),
            }
        }
        profile
    };
    let red = heights(&p.red_steps());
    let green = heights(&p.green_steps());
    red.iter().zip(&green).map(|(r, g)| r - g).sum()
}

fn check_tall(f: &Fixtures) -> Result<String, String> {
    let p = build_polyomino(&f.tall_red, &f.tall_green)?;
    let word = p.area_word();
    expect("area word", word.to_string(), f.tall_word.clone())?;
    expect("area by letter sum", statistics::area(&word), f.tall_area)?;
    expect("area by cell count", cells_between(&p), f.tall_area)?;
    expect(
        "word round trip",
        ReducedPolyomino::from_area_word(&word).map_err(|e| e.to_string())?,
        p,
    )?;
    Ok(format!("word of {} letters, area {}", word.len(), f.tall_area))
}

fn check_wide(f: &Fixtures) -> Result<String, String> {
    let p = build_polyomino(&f.wide_red, &f.wide_green)?;
    let bp = statistics::BouncePath::of(&p);
    expect("bounce corners", bp.corners(), f.wide_corners.clone())?;
    expect("bounce", bp.bounce(), f.wide_bounce)?;
    let valleys: BTreeSet<usize> = f.wide_valleys.iter().copied().collect();
    expect(
        "decorated bounce",
        statistics::bounce_decorated(&p, &valleys),
        f.wide_bounce_dec,
    )?;
    expect("area by letter sum", statistics::area(&p.area_word()), f.wide_area)?;
    expect("area by cell count", cells_between(&p), f.wide_area)?;
    Ok(format!(
        "bounce {}, decorated {}, area {}",
        f.wide_bounce, f.wide_bounce_dec, f.wide_area
    ))
}

fn check_merge(f: &Fixtures) -> Result<String, String> {
    let p = build_polyomino(&f.wide_red, &f.wide_green)?;
    let valleys: BTreeSet<usize> = f.wide_valleys.iter().copied().collect();
    let from = DecoratedPolyomino::with_valleys(p, valleys.clone())
        .map_err(|e| format!("decoration: {e}"))?;
    let to = merge_map(&from).map_err(|e| format!("merge map: {e}"))?;
    let word = to.poly.area_word();
    expect("image word", word.to_string(), f.merge_word.clone())?;
    expect(
        "image rises",
        to.rises.iter().copied().collect::<Vec<_>>(),
        f.merge_rises.clone(),
    )?;
    expect("image dinv", statistics::dinv(&word), f.merge_dinv)?;
    expect(
        "image decorated area",
        statistics::area_decorated(&word, &to.rises),
        f.merge_area_dec,
    )?;
    expect("dinv = source area", statistics::dinv(&word), statistics::area(&p.area_word()))?;
    expect(
        "decorated area = source decorated bounce",
        statistics::area_decorated(&word, &to.rises),
        statistics::bounce_decorated(&p, &valleys),
    )?;
    let back = merge_map_inverse(&to).map_err(|e| format!("inverse: {e}"))?;
    expect("round trip polyomino", back.poly, p)?;
    expect("round trip valleys", back.valleys, valleys)?;
    Ok(format!("dinv {}, decorated area {}", f.merge_dinv, f.merge_area_dec))
}

fn check_two_car(f: &Fixtures) -> Result<String, String> {
    let path = DyckPath::new(&path_from_str(&f.parking_path).map_err(|e| e.to_string())?)
        .map_err(|e| format!("path: {e}"))?;
    let pf = PartiallyLabelledDyckPath::new(path, f.parking_labels.clone())
        .map_err(|e| format!("labelling: {e}"))?;
    let to = parking_to_polyomino(&pf, &BTreeSet::new()).map_err(|e| format!("map: {e}"))?;
    let word = to.poly.area_word();
    expect("image word", word.to_string(), f.parking_word.clone())?;
    expect("image frame", (to.poly.m(), to.poly.n()), f.parking_frame)?;
    expect("dinv preserved", statistics::dinv(&word), pf.dinv())?;
    expect("area preserved", statistics::area_decorated(&word, &to.rises), pf.area())?;
    let (back, dec) = polyomino_to_parking(&to).map_err(|e| format!("inverse: {e}"))?;
    expect("round trip labelling", back, pf)?;
    expect("round trip decorations", dec, BTreeSet::new())?;
    Ok(format!("image frame {:?}", f.parking_frame))
}

fn check_stack(f: &Fixtures) -> Result<String, String> {
    let path = DyckPath::new(&path_from_str(&f.stacked_path).map_err(|e| e.to_string())?)
        .map_err(|e| format!("path: {e}"))?;
    let pldp = PartiallyLabelledDyckPath::new(path, f.stacked_labels.clone())
        .map_err(|e| format!("labelling: {e}"))?;
    let lp = stacked_to_labelled(&pldp).map_err(|e| format!("map: {e}"))?;
    expect("image red path", path_to_string(&lp.poly.red_steps()), f.image_red.clone())?;
    expect("image green path", path_to_string(&lp.poly.green_steps()), f.image_green.clone())?;
    expect("image first label", lp.first_label, f.image_first)?;
    expect("image red labels", lp.red_labels.clone(), f.image_red_labels.clone())?;
    expect(
        "source decorated area",
        pldp.area_decorated(&pldp.rises()),
        f.image_area,
    )?;
    expect("image area", statistics::area(&lp.poly.area_word()), f.image_area)?;
    let (back, dec) = labelled_to_stacked(&lp).map_err(|e| format!("inverse: {e}"))?;
    expect("round trip labelling", back, pldp.clone())?;
    expect("round trip decorations", dec, pldp.rises())?;
    Ok(format!("image area {} matches decorated source area", f.image_area))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_suite_passes() {
        let report = run();
        assert!(report.passed(), "failures: {:?}", report.cases);
        assert_eq!(report.cases.len(), 5);
        assert!(report.failures().is_empty());
    }

    #[test]
    fn negative_control_names_the_failure() {
        let report = negative_control();
        assert!(!report.passed());
        assert_eq!(report.failures(), ["wide-bounce-path"]);
        let failed = report.cases.iter().find(|c| !c.passed).unwrap();
        assert!(failed.detail.contains("bounce"), "detail: {}", failed.detail);
    }

    #[test]
    fn cell_count_matches_letter_sum_on_small_frames() {
        for (m, n) in [(2usize, 2usize), (3, 2), (1, 4)] {
            ReducedPolyomino::visit_all(m, n, &mut |p| {
                assert_eq!(cells_between(&p), statistics::area(&p.area_word()));
            });
        }
    }
}
