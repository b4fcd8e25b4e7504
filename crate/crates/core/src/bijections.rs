//! Structure-preserving maps between the three object families: the merge
//! map from valley-decorated polyominoes to rise-decorated ones, the barring
//! map between two-car parking functions and rise-decorated polyominoes, and
//! the colouring map between fully rise-decorated partial labellings and
//! labelled polyominoes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::dyck::{DyckError, DyckPath, PartiallyLabelledDyckPath};
use crate::polyomino::{
    AreaWord, DecoratedPolyomino, LabelledPolyomino, Letter, PolyominoError, ReducedPolyomino, Step,
};
use crate::statistics::BouncePath;

/// Failure modes of the maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BijectionError {
    /// The labelling has blanks or labels outside {1, 2}.
    NotTwoCar,
    /// The labelling is not fully rise-decorated: some positive row beyond
    /// the first is not stacked on its predecessor.
    NotFullyStacked,
    /// The green east heights fail to be monotone, so no green path exists.
    NoGreenPath,
    /// An intermediate word or polyomino failed validation.
    Word(PolyominoError),
    /// An intermediate path or labelling failed validation.
    Path(DyckError),
}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionError::NotTwoCar => f.write_str("labels must be 1 or 2 with no blanks"),
            BijectionError::NotFullyStacked => {
                f.write_str("every positive row beyond the first must sit directly on its predecessor")
            }
            BijectionError::NoGreenPath => f.write_str("green east heights must be nondecreasing"),
            BijectionError::Word(e) => write!(f, "{e}"),
            BijectionError::Path(e) => write!(f, "{e}"),
        }
    }
}

impl From<PolyominoError> for BijectionError {
    fn from(e: PolyominoError) -> Self {
        BijectionError::Word(e)
    }
}

impl From<DyckError> for BijectionError {
    fn from(e: DyckError) -> Self {
        BijectionError::Path(e)
    }
}

// ---- the merge map ----

/// Sends a valley-decorated polyomino of frame (m, n) to a rise-decorated
/// one of frame (n, m), carrying area to dinv, decorated bounce to decorated
/// area, and the zero statistics to each other.
///
/// The image word is grown level by level along the bounce path: the green
/// path segment between bounce corners weaves barred letters in between the
/// plain ones, then the red segment one row higher inserts the next plain
/// letter after selected barred ones, decorated exactly when the red north
/// step it came from is a decorated valley.
pub fn merge_map(dp: &DecoratedPolyomino) -> Result<DecoratedPolyomino, BijectionError> {
    let p = &dp.poly;
    let bounce = BouncePath::of(p);
    let vs = bounce.vertical_runs();
    let hs = bounce.horizontal_runs();
    let v0 = vs.first().copied().unwrap_or(0);

    // Working word with per-letter decoration flags; positions are 1-based,
    // anchor 0 is the virtual start.
    let mut word: Vec<(Letter, bool)> = alloc::vec![(Letter::plain(0), false); v0 + 1];
    let (mut a, mut b) = (0usize, v0);
    for level in 0..hs.len() {
        let (h, red_base) = (hs[level], a + b);
        // Green segment from one lower bounce corner to the next: north
        // steps walk the anchor along the plain letters of this level, east
        // steps insert barred copies right after it.
        let green_from = a + b - if level == 0 { v0 } else { vs[level] };
        let green_to = a + h + b;
        let mut anchor = if level == 0 { 1 } else { 0 };
        let target = Letter::plain(level as u32);
        for i in green_from + 1..=green_to {
            if p.green_is_north(i) {
                anchor = next_position(&word, anchor, target);
            } else {
                word.insert(anchor, (Letter::barred(level as u32), false));
                anchor += 1;
            }
        }
        a += h;
        if level + 1 >= vs.len() {
            break;
        }
        // Red segment one row up: east steps walk the anchor along this
        // level's barred letters, north steps insert the next plain letter,
        // decorated when the red step is a decorated valley.
        let v_next = vs[level + 1];
        let red_to = red_base + h + v_next;
        let mut anchor = 0;
        let target = Letter::barred(level as u32);
        for i in red_base + 1..=red_to {
            if p.red_is_north(i) {
                word.insert(anchor, (Letter::plain(level as u32 + 1), dp.valleys.contains(&i)));
                anchor += 1;
            } else {
                anchor = next_position(&word, anchor, target);
            }
        }
        b += v_next;
    }

    let letters: Vec<Letter> = word.iter().map(|&(l, _)| l).collect();
    let rises: BTreeSet<usize> = word
        .iter()
        .enumerate()
        .filter(|(_, &(_, dec))| dec)
        .map(|(i, _)| i + 1)
        .collect();
    let image = ReducedPolyomino::from_area_word(&AreaWord::new(letters)?)?;
    Ok(DecoratedPolyomino::with_rises(image, rises)?)
}

/// 1-based position of the first `target` letter strictly after `anchor`.
fn next_position(word: &[(Letter, bool)], anchor: usize, target: Letter) -> usize {
    word[anchor..]
        .iter()
        .position(|&(l, _)| l == target)
        .map(|off| anchor + off + 1)
        .expect("merge map ran out of letters to anchor on")
}

/// Inverse of [`merge_map`]: reads both paths straight out of the area word.
/// The green path is the level-by-level concatenation of the plain/barred
/// subwords, the red path prepends the initial climb to the concatenation of
/// the barred/next-plain subwords, and decorated rises mark the red north
/// steps they came from as decorated valleys.
pub fn merge_map_inverse(dp: &DecoratedPolyomino) -> Result<DecoratedPolyomino, BijectionError> {
    let word = dp.poly.area_word();
    let letters = word.letters();
    let max_value = letters.iter().map(|l| l.value).max().unwrap_or(0);
    let v0 = letters.iter().filter(|l| **l == Letter::plain(0)).count() - 1;

    let mut green: Vec<Step> = Vec::new();
    for level in 0..=max_value {
        for (i, l) in letters.iter().enumerate() {
            if l.value != level {
                continue;
            }
            if l.barred {
                green.push(Step::E);
            } else if i > 0 || level > 0 {
                green.push(Step::N);
            }
        }
    }

    let mut red: Vec<Step> = alloc::vec![Step::N; v0];
    let mut valleys = BTreeSet::new();
    for level in 0..=max_value {
        for (i, l) in letters.iter().enumerate() {
            if l.barred && l.value == level {
                red.push(Step::E);
            } else if !l.barred && l.value == level + 1 {
                red.push(Step::N);
                if dp.rises.contains(&(i + 1)) {
                    valleys.insert(red.len());
                }
            }
        }
    }

    let width = green.iter().filter(|&&s| s == Step::E).count();
    let height = green.len() - width;
    let image = ReducedPolyomino::new(width, height, &red, &green)?;
    Ok(DecoratedPolyomino::with_valleys(image, valleys)?)
}

// ---- the barring map ----

/// Sends a rise-decorated two-car parking function to a rise-decorated
/// polyomino: row areas become letter values, label 1 bars its letter, and a
/// plain 0 is prepended. dinv, area, decorations, and the zero statistics
/// carry over unchanged (rows shift by one position).
pub fn parking_to_polyomino(
    pf: &PartiallyLabelledDyckPath,
    dec: &BTreeSet<usize>,
) -> Result<DecoratedPolyomino, BijectionError> {
    if pf.labels().iter().any(|&l| l != 1 && l != 2) {
        return Err(BijectionError::NotTwoCar);
    }
    let a = pf.path().area_vector();
    let mut letters = Vec::with_capacity(a.len() + 1);
    letters.push(Letter::plain(0));
    for (i, &ai) in a.iter().enumerate() {
        letters.push(Letter { value: ai, barred: pf.label(i + 1) == 1 });
    }
    let rises = dec.iter().map(|&i| i + 1).collect();
    let image = ReducedPolyomino::from_area_word(&AreaWord::new(letters)?)?;
    Ok(DecoratedPolyomino::with_rises(image, rises)?)
}

/// Inverse of [`parking_to_polyomino`].
pub fn polyomino_to_parking(
    dp: &DecoratedPolyomino,
) -> Result<(PartiallyLabelledDyckPath, BTreeSet<usize>), BijectionError> {
    let word = dp.poly.area_word();
    let rows = &word.letters()[1..];
    let areas: Vec<u32> = rows.iter().map(|l| l.value).collect();
    let labels: Vec<u32> = rows.iter().map(|l| if l.barred { 1 } else { 2 }).collect();
    let path = DyckPath::from_area_vector(&areas)?;
    let pf = PartiallyLabelledDyckPath::new(path, labels)?;
    let dec = dp.rises.iter().map(|&p| p - 1).collect();
    Ok((pf, dec))
}

// ---- the colouring map ----

/// Sends a fully stacked partial labelling (every positive row beyond the
/// first sits directly on its predecessor, so the rises are exactly the
/// positive rows past row 1) to a labelled polyomino: positive rows become
/// labelled red north steps, blank rows become red east steps, and each
/// blank's area prescribes how far below red the matching green east step
/// sits.
pub fn stacked_to_labelled(
    pldp: &PartiallyLabelledDyckPath,
) -> Result<LabelledPolyomino, BijectionError> {
    let a = pldp.path().area_vector();
    let rises = pldp.rises();
    for i in 2..=a.len() {
        if (pldp.label(i) > 0) != rises.contains(&i) {
            return Err(BijectionError::NotFullyStacked);
        }
    }
    let mut red: Vec<Step> = Vec::with_capacity(a.len() - 1);
    let mut red_labels = Vec::new();
    let mut green_e_heights = Vec::new();
    let mut y = 0usize;
    for i in 2..=a.len() {
        if pldp.label(i) > 0 {
            red.push(Step::N);
            red_labels.push(pldp.label(i));
            y += 1;
        } else {
            red.push(Step::E);
            green_e_heights.push(y - a[i - 1] as usize);
        }
    }
    let mut green: Vec<Step> = Vec::with_capacity(red.len());
    let mut gy = 0usize;
    for &h in &green_e_heights {
        if h < gy {
            return Err(BijectionError::NoGreenPath);
        }
        green.extend(core::iter::repeat(Step::N).take(h - gy));
        green.push(Step::E);
        gy = h;
    }
    let n = red_labels.len();
    green.extend(core::iter::repeat(Step::N).take(n - gy));
    let m = green_e_heights.len();
    let poly = ReducedPolyomino::new(m, n, &red, &green)?;
    Ok(LabelledPolyomino::new(poly, pldp.label(1), red_labels)?)
}

/// Inverse of [`stacked_to_labelled`]; the decoration set of the preimage is
/// all of its rises.
pub fn labelled_to_stacked(
    lp: &LabelledPolyomino,
) -> Result<(PartiallyLabelledDyckPath, BTreeSet<usize>), BijectionError> {
    let p = &lp.poly;
    let (m, n) = (p.m(), p.n());
    let red_e_heights: Vec<usize> = heights_of_east_steps(|i| p.red_is_north(i), m + n);
    let green_e_heights: Vec<usize> = heights_of_east_steps(|i| p.green_is_north(i), m + n);

    let mut areas: Vec<u32> = alloc::vec![0];
    let mut labels: Vec<u32> = alloc::vec![lp.first_label];
    let mut red_row = 0usize;
    let mut east = 0usize;
    for i in 1..=m + n {
        if p.red_is_north(i) {
            areas.push(areas.last().expect("nonempty") + 1);
            labels.push(lp.red_labels[red_row]);
            red_row += 1;
        } else {
            areas.push((red_e_heights[east] - green_e_heights[east]) as u32);
            labels.push(0);
            east += 1;
        }
    }
    let path = DyckPath::from_area_vector(&areas)?;
    let pldp = PartiallyLabelledDyckPath::new(path, labels)?;
    let dec = pldp.rises();
    Ok((pldp, dec))
}

fn heights_of_east_steps(is_north: impl Fn(usize) -> bool, len: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut y = 0usize;
    for i in 1..=len {
        if is_north(i) {
            y += 1;
        } else {
            out.push(y);
        }
    }
    out
}
