//! Reduced parallelogram polyominoes: pairs of monotone lattice paths from
//! (0,0) to (m,n) with the red path weakly above the green one, their area
//! words, decorations, and labellings.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

// ---- steps and letters ----

/// A unit lattice step. `E` sorts before `N`, so path order is lexicographic
/// with east first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    /// Unit step east, (x, y) to (x+1, y).
    E,
    /// Unit step north, (x, y) to (x, y+1).
    N,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::E => "E",
            Step::N => "N",
        })
    }
}

/// Parses a path from a string of `E`/`N` characters.
pub fn path_from_str(s: &str) -> Result<Vec<Step>, PolyominoError> {
    s.chars()
        .map(|c| match c {
            'E' | 'e' => Ok(Step::E),
            'N' | 'n' => Ok(Step::N),
            other => Err(PolyominoError::BadStepChar(other)),
        })
        .collect()
}

/// Renders a path as a string of `E`/`N` characters.
pub fn path_to_string(path: &[Step]) -> String {
    path.iter().map(|s| if *s == Step::N { 'N' } else { 'E' }).collect()
}

/// A letter of the two-row alphabet `0 < 0' < 1 < 1' < 2 < ...`, where the
/// primed (barred) copy of each value sits immediately above the plain one.
/// The derived order on `(value, barred)` is exactly this alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    /// Numeric value, the letter's contribution to area.
    pub value: u32,
    /// Whether this is the barred copy of the value.
    pub barred: bool,
}

impl Letter {
    /// The plain letter of the given value.
    pub fn plain(value: u32) -> Self {
        Letter { value, barred: false }
    }

    /// The barred letter of the given value.
    pub fn barred(value: u32) -> Self {
        Letter { value, barred: true }
    }

    /// Immediate successor in the alphabet: `v -> v'` and `v' -> v+1`.
    pub fn succ(self) -> Self {
        if self.barred {
            Letter::plain(self.value + 1)
        } else {
            Letter::barred(self.value)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.barred {
            f.write_str("'")?;
        }
        Ok(())
    }
}

// ---- errors ----

/// Failure modes when building polyominoes, words, or labellings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyominoError {
    /// A path character other than `E`/`N`.
    BadStepChar(char),
    /// A path's length or step counts do not match the claimed frame.
    BadPathShape {
        /// Expected east steps.
        m: usize,
        /// Expected north steps.
        n: usize,
    },
    /// The red path dips strictly below the green path somewhere.
    PathsCross,
    /// Combined size m+n exceeds the 63-step backing store.
    TooLarge,
    /// The word is empty, does not start with the plain letter 0, or has a
    /// letter exceeding the successor of its predecessor.
    BadWord,
    /// A decoration index points at a position that is not a rise (for star
    /// decorations) or not a valley (for bullet decorations).
    BadDecoration(usize),
    /// A labelling has the wrong count, a zero label, or a column whose
    /// labels fail to increase strictly from bottom to top.
    BadLabelling,
}

impl fmt::Display for PolyominoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyominoError::BadStepChar(c) => write!(f, "invalid step character {c:?}, expected E or N"),
            PolyominoError::BadPathShape { m, n } => {
                write!(f, "path must consist of exactly {m} east and {n} north steps")
            }
            PolyominoError::PathsCross => f.write_str("red path must stay weakly above the green path"),
            PolyominoError::TooLarge => f.write_str("polyomino size m+n must be at most 63"),
            PolyominoError::BadWord => f.write_str("not a valid area word"),
            PolyominoError::BadDecoration(i) => write!(f, "position {i} cannot carry a decoration"),
            PolyominoError::BadLabelling => f.write_str("labels must be positive and strictly increase up each column"),
        }
    }
}

// ---- reduced polyominoes ----

/// A reduced parallelogram polyomino of width `m` and height `n`: a red and a
/// green monotone path from (0,0) to (m,n), red weakly above green. The paths
/// may touch and even coincide.
///
/// Paths are stored as bitmasks, bit `i` set when step `i+1` is north, so the
/// type is `Copy` and cheap to enumerate in bulk.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ReducedPolyomino {
    m: u8,
    n: u8,
    red: u64,
    green: u64,
}

impl ReducedPolyomino {
    /// Builds a polyomino from explicit step sequences.
    pub fn new(m: usize, n: usize, red: &[Step], green: &[Step]) -> Result<Self, PolyominoError> {
        if m + n > 63 {
            return Err(PolyominoError::TooLarge);
        }
        let mask = |path: &[Step]| -> Result<u64, PolyominoError> {
            if path.len() != m + n || path.iter().filter(|&&s| s == Step::N).count() != n {
                return Err(PolyominoError::BadPathShape { m, n });
            }
            Ok(path
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == Step::N)
                .fold(0u64, |acc, (i, _)| acc | (1u64 << i)))
        };
        let red = mask(red)?;
        let green = mask(green)?;
        // Red weakly above green is equivalent to every prefix of red holding
        // at least as many north steps as the same-length prefix of green.
        let mut yr = 0u32;
        let mut yg = 0u32;
        for i in 0..m + n {
            yr += ((red >> i) & 1) as u32;
            yg += ((green >> i) & 1) as u32;
            if yr < yg {
                return Err(PolyominoError::PathsCross);
            }
        }
        Ok(ReducedPolyomino { m: m as u8, n: n as u8, red, green })
    }

    /// Width: east steps per path.
    pub fn m(&self) -> usize {
        self.m as usize
    }

    /// Height: north steps per path.
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Whether red step `i` (1-based) is north.
    pub fn red_is_north(&self, i: usize) -> bool {
        (self.red >> (i - 1)) & 1 == 1
    }

    /// Whether green step `i` (1-based) is north.
    pub fn green_is_north(&self, i: usize) -> bool {
        (self.green >> (i - 1)) & 1 == 1
    }

    /// The red path as a step sequence.
    pub fn red_steps(&self) -> Vec<Step> {
        (1..=self.m() + self.n())
            .map(|i| if self.red_is_north(i) { Step::N } else { Step::E })
            .collect()
    }

    /// The green path as a step sequence.
    pub fn green_steps(&self) -> Vec<Step> {
        (1..=self.m() + self.n())
            .map(|i| if self.green_is_north(i) { Step::N } else { Step::E })
            .collect()
    }

    /// 1-based indices of red valleys: north steps immediately preceded by an
    /// east step. These are the positions eligible for valley decorations.
    pub fn red_valleys(&self) -> BTreeSet<usize> {
        (2..=self.m() + self.n())
            .filter(|&i| self.red_is_north(i) && !self.red_is_north(i - 1))
            .collect()
    }

    /// The area word: interleave the two paths into a Dyck-like 0/1 sequence
    /// (red step, then complemented green step, framed by a leading 1 and a
    /// trailing 0) and read one letter off each up-step, plain letters at odd
    /// heights and barred letters at even heights.
    pub fn area_word(&self) -> AreaWord {
        let len = self.m() + self.n();
        let mut letters = Vec::with_capacity(len + 1);
        let mut h = 0i64;
        let up = |letters: &mut Vec<Letter>, h: &mut i64| {
            *h += 1;
            let h = *h as u32;
            letters.push(if h % 2 == 1 {
                Letter::plain((h - 1) / 2)
            } else {
                Letter::barred(h / 2 - 1)
            });
        };
        up(&mut letters, &mut h);
        for i in 1..=len {
            if self.red_is_north(i) {
                up(&mut letters, &mut h);
            } else {
                h -= 1;
            }
            if !self.green_is_north(i) {
                up(&mut letters, &mut h);
            } else {
                h -= 1;
            }
        }
        debug_assert_eq!(h, 1, "interleaved walk must end one above ground");
        AreaWord { letters }
    }

    /// Rebuilds the polyomino whose area word is `word`.
    pub fn from_area_word(word: &AreaWord) -> Result<Self, PolyominoError> {
        let (m, n) = word.frame();
        if m + n > 63 {
            return Err(PolyominoError::TooLarge);
        }
        // Invert the interleaving: letter k sits at walk height 2v+1 (plain)
        // or 2v+2 (barred); descents fill the gaps between consecutive ups.
        let mut bits: Vec<bool> = Vec::with_capacity(2 * (m + n + 1));
        let mut h = 0i64;
        for &l in word.letters() {
            let target = if l.barred { 2 * l.value as i64 + 2 } else { 2 * l.value as i64 + 1 };
            while h >= target {
                bits.push(false);
                h -= 1;
            }
            bits.push(true);
            h = target;
        }
        while h > 0 {
            bits.push(false);
            h -= 1;
        }
        debug_assert_eq!(bits.len(), 2 * (m + n + 1), "walk length fixed by frame");
        let mut red = 0u64;
        let mut green = 0u64;
        for i in 1..=m + n {
            if bits[2 * i - 1] {
                red |= 1 << (i - 1);
            }
            if !bits[2 * i] {
                green |= 1 << (i - 1);
            }
        }
        if (red.count_ones() as usize) != n || (green.count_ones() as usize) != n {
            return Err(PolyominoError::BadWord);
        }
        let mut yr = 0u32;
        let mut yg = 0u32;
        for i in 0..m + n {
            yr += ((red >> i) & 1) as u32;
            yg += ((green >> i) & 1) as u32;
            if yr < yg {
                return Err(PolyominoError::BadWord);
            }
        }
        Ok(ReducedPolyomino { m: m as u8, n: n as u8, red, green })
    }

    /// Calls `f` on every polyomino of the given frame, ordered by red path
    /// then green path, lexicographically with `E < N`.
    pub fn visit_all(m: usize, n: usize, f: &mut impl FnMut(ReducedPolyomino)) {
        assert!(m + n <= 63, "polyomino frame too large");
        let mut red_heights = Vec::with_capacity(m + n + 1);
        visit_red(m, n, 0, 0, &mut red_heights, f);
    }

    /// All polyominoes of the given frame, in `visit_all` order.
    pub fn enumerate(m: usize, n: usize) -> Vec<ReducedPolyomino> {
        let mut out = Vec::new();
        Self::visit_all(m, n, &mut |p| out.push(p));
        out
    }
}

/// Enumerates red paths in lexicographic order, tracking prefix heights.
fn visit_red(
    m: usize,
    n: usize,
    i: usize,
    y: usize,
    heights: &mut Vec<usize>,
    f: &mut impl FnMut(ReducedPolyomino),
) {
    heights.push(y);
    if i == m + n {
        visit_green(m, n, 0, 0, 0, heights, f);
    } else {
        if i - y < m {
            visit_red(m, n, i + 1, y, heights, f);
        }
        if y < n {
            visit_red(m, n, i + 1, y + 1, heights, f);
        }
    }
    heights.pop();
}

/// Enumerates green paths under the fixed red prefix heights; a green north
/// step is allowed only while staying weakly below red, and every such prefix
/// is completable by postponing the remaining north steps.
fn visit_green(
    m: usize,
    n: usize,
    i: usize,
    green: u64,
    y: usize,
    red_heights: &[usize],
    f: &mut impl FnMut(ReducedPolyomino),
) {
    if i == m + n {
        f(ReducedPolyomino {
            m: m as u8,
            n: n as u8,
            red: red_mask_from_heights(red_heights),
            green,
        });
        return;
    }
    if i - y < m {
        visit_green(m, n, i + 1, green, y, red_heights, f);
    }
    if y < n && y + 1 <= red_heights[i + 1] {
        visit_green(m, n, i + 1, green | (1 << i), y + 1, red_heights, f);
    }
}

fn red_mask_from_heights(heights: &[usize]) -> u64 {
    let mut mask = 0u64;
    for i in 1..heights.len() {
        if heights[i] > heights[i - 1] {
            mask |= 1 << (i - 1);
        }
    }
    mask
}

// ---- area words ----

/// The area word of a polyomino: a sequence over the two-row alphabet that
/// starts with the plain 0 and never jumps past the successor of its
/// predecessor. Width-m, height-n polyominoes give words with m+1 plain and n
/// barred letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AreaWord {
    letters: Vec<Letter>,
}

impl AreaWord {
    /// Validates and wraps a letter sequence.
    pub fn new(letters: Vec<Letter>) -> Result<Self, PolyominoError> {
        if letters.first() != Some(&Letter::plain(0)) {
            return Err(PolyominoError::BadWord);
        }
        for pair in letters.windows(2) {
            if pair[1] > pair[0].succ() {
                return Err(PolyominoError::BadWord);
            }
        }
        Ok(AreaWord { letters })
    }

    /// Parses a whitespace-separated word like `0 0' 1 1' 2`.
    pub fn parse(s: &str) -> Result<Self, PolyominoError> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let (digits, barred) = match tok.strip_suffix('\'') {
                    Some(rest) => (rest, true),
                    None => (tok, false),
                };
                digits
                    .parse::<u32>()
                    .map(|value| Letter { value, barred })
                    .map_err(|_| PolyominoError::BadWord)
            })
            .collect::<Result<Vec<_>, _>>()?;
        AreaWord::new(letters)
    }

    /// The letters, first position is index 0.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word is empty. Valid words never are.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Frame (m, n) of the polyomino this word encodes: plain letters minus
    /// one, and barred letters.
    pub fn frame(&self) -> (usize, usize) {
        let barred = self.letters.iter().filter(|l| l.barred).count();
        (self.letters.len() - barred - 1, barred)
    }

    /// 1-based positions of rises: a letter equal to the successor of a
    /// barred predecessor. These are the positions eligible for star
    /// decorations.
    pub fn rises(&self) -> BTreeSet<usize> {
        (2..=self.letters.len())
            .filter(|&i| {
                let prev = self.letters[i - 2];
                prev.barred && self.letters[i - 1] == prev.succ()
            })
            .collect()
    }

    /// Number of plain 0 letters, counting the leading one.
    pub fn plain_zeros(&self) -> usize {
        self.letters.iter().filter(|l| !l.barred && l.value == 0).count()
    }
}

impl fmt::Display for AreaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

// ---- decorations ----

/// A polyomino together with decoration sets: star decorations on rises of
/// the area word and bullet decorations on valleys of the red path. The two
/// families use one kind at a time; both sets are carried so that maps
/// between the families can transport them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecoratedPolyomino {
    /// The underlying polyomino.
    pub poly: ReducedPolyomino,
    /// 1-based area word positions carrying a star decoration.
    pub rises: BTreeSet<usize>,
    /// 1-based red step indices carrying a bullet decoration.
    pub valleys: BTreeSet<usize>,
}

impl DecoratedPolyomino {
    /// Wraps a polyomino with no decorations.
    pub fn plain(poly: ReducedPolyomino) -> Self {
        DecoratedPolyomino { poly, rises: BTreeSet::new(), valleys: BTreeSet::new() }
    }

    /// Decorates rises of the area word; every index must be a rise.
    pub fn with_rises(poly: ReducedPolyomino, rises: BTreeSet<usize>) -> Result<Self, PolyominoError> {
        let legal = poly.area_word().rises();
        if let Some(&bad) = rises.iter().find(|i| !legal.contains(i)) {
            return Err(PolyominoError::BadDecoration(bad));
        }
        Ok(DecoratedPolyomino { poly, rises, valleys: BTreeSet::new() })
    }

    /// Decorates valleys of the red path; every index must be a valley.
    pub fn with_valleys(poly: ReducedPolyomino, valleys: BTreeSet<usize>) -> Result<Self, PolyominoError> {
        let legal = poly.red_valleys();
        if let Some(&bad) = valleys.iter().find(|i| !legal.contains(i)) {
            return Err(PolyominoError::BadDecoration(bad));
        }
        Ok(DecoratedPolyomino { poly, rises: BTreeSet::new(), valleys })
    }
}

// ---- labellings ----

/// A polyomino whose red north steps carry positive labels, strictly
/// increasing up each column, together with a label for the first area word
/// letter that sits below an initial north run. Width-m, height-n
/// polyominoes carry n+1 labels in total.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledPolyomino {
    /// The underlying polyomino.
    pub poly: ReducedPolyomino,
    /// Label attached to the first area word letter.
    pub first_label: u32,
    /// Labels of the red north steps, bottom to top (step order).
    pub red_labels: Vec<u32>,
}

impl LabelledPolyomino {
    /// Validates column-strictness and wraps the labelling.
    pub fn new(
        poly: ReducedPolyomino,
        first_label: u32,
        red_labels: Vec<u32>,
    ) -> Result<Self, PolyominoError> {
        if red_labels.len() != poly.n() || first_label == 0 || red_labels.contains(&0) {
            return Err(PolyominoError::BadLabelling);
        }
        // Consecutive red north steps share a column exactly when no east
        // step separates them; an initial north run additionally sits on top
        // of the first label.
        let mut j = 0;
        let mut prev: Option<u32> = if poly.red_is_north(1) { Some(first_label) } else { None };
        for i in 1..=poly.m() + poly.n() {
            if poly.red_is_north(i) {
                if let Some(p) = prev {
                    if red_labels[j] <= p {
                        return Err(PolyominoError::BadLabelling);
                    }
                }
                prev = Some(red_labels[j]);
                j += 1;
            } else {
                prev = None;
            }
        }
        Ok(LabelledPolyomino { poly, first_label, red_labels })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    fn poly(m: usize, n: usize, red: &str, green: &str) -> ReducedPolyomino {
        ReducedPolyomino::new(m, n, &path_from_str(red).unwrap(), &path_from_str(green).unwrap())
            .unwrap()
    }

    fn word_str(p: &ReducedPolyomino) -> String {
        p.area_word().to_string()
    }

    #[test]
    fn unit_square_words() {
        // The three 1x1 polyominoes and their area words.
        assert_eq!(word_str(&poly(1, 1, "NE", "NE")), "0 0' 0");
        assert_eq!(word_str(&poly(1, 1, "NE", "EN")), "0 0' 1");
        assert_eq!(word_str(&poly(1, 1, "EN", "EN")), "0 0 0'");
        assert_eq!(
            ReducedPolyomino::new(1, 1, &path_from_str("EN").unwrap(), &path_from_str("NE").unwrap()),
            Err(PolyominoError::PathsCross)
        );
    }

    #[test]
    fn degenerate_frames() {
        // Width m, height 0: the word is m+1 plain zeros.
        assert_eq!(word_str(&poly(3, 0, "EEE", "EEE")), "0 0 0 0");
        // Width 0, height n: a plain zero then n barred zeros.
        assert_eq!(word_str(&poly(0, 2, "NN", "NN")), "0 0' 0'");
        // The empty polyomino still has the one-letter word.
        assert_eq!(word_str(&poly(0, 0, "", "")), "0");
    }

    #[test]
    fn large_example_word() {
        // 12x7 reference polyomino used across the statistics tests.
        let p = poly(
            12,
            7,
            "NNNEEENEENEEENEEEEN",
            "EENNNEEEEENEEENEENN",
        );
        assert_eq!(
            word_str(&p),
            "0 0' 1 1' 2 2' 0 0' 1 1 1 1' 2 1 1 1' 2 1 1 0'"
        );
        assert_eq!(p.red_valleys().into_iter().collect::<Vec<_>>(), [7, 10, 14, 19]);
    }

    #[test]
    fn word_round_trip_small_frames() {
        for (m, n) in [(0usize, 0usize), (1, 1), (2, 3), (3, 2), (3, 3)] {
            for p in ReducedPolyomino::enumerate(m, n) {
                let w = p.area_word();
                assert!(AreaWord::new(w.letters().to_vec()).is_ok(), "word of {p:?} must validate");
                assert_eq!(ReducedPolyomino::from_area_word(&w).unwrap(), p);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // Pair-of-paths counts: 1x1 has 3, 2x2 has 20 (binomial determinant
        // C(4,2)^2 - C(4,1)C(4,3) = 36 - 16).
        assert_eq!(ReducedPolyomino::enumerate(1, 1).len(), 3);
        assert_eq!(ReducedPolyomino::enumerate(2, 2).len(), 20);
        assert_eq!(ReducedPolyomino::enumerate(0, 4).len(), 1);
        assert_eq!(ReducedPolyomino::enumerate(4, 0).len(), 1);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = ReducedPolyomino::enumerate(1, 1);
        let keys: Vec<(String, String)> = all
            .iter()
            .map(|p| (path_to_string(&p.red_steps()), path_to_string(&p.green_steps())))
            .collect();
        assert_eq!(
            keys,
            [
                ("EN".to_string(), "EN".to_string()),
                ("NE".to_string(), "EN".to_string()),
                ("NE".to_string(), "NE".to_string()),
            ]
        );
    }

    #[test]
    fn rises_and_decorations() {
        // 0 0' 1 has a rise at position 3 (letter 1 follows 0').
        let p = poly(1, 1, "NE", "EN");
        assert_eq!(p.area_word().rises().into_iter().collect::<Vec<_>>(), [3]);
        assert!(DecoratedPolyomino::with_rises(p, [3].into()).is_ok());
        assert_eq!(
            DecoratedPolyomino::with_rises(p, [2].into()),
            Err(PolyominoError::BadDecoration(2))
        );
        // NENE has a single valley at step 3.
        let p = poly(2, 2, "NENE", "NENE");
        assert_eq!(p.red_valleys().into_iter().collect::<Vec<_>>(), [3]);
        assert!(DecoratedPolyomino::with_valleys(p, [3].into()).is_ok());
        assert_eq!(
            DecoratedPolyomino::with_valleys(p, [1].into()),
            Err(PolyominoError::BadDecoration(1))
        );
    }

    #[test]
    fn labelling_column_strictness() {
        // Red NNE,E: both north steps share column 0, labels must increase.
        let p = poly(2, 2, "NNEE", "EENN");
        assert!(LabelledPolyomino::new(p, 1, alloc::vec![2, 3]).is_ok());
        assert_eq!(
            LabelledPolyomino::new(p, 1, alloc::vec![3, 2]),
            Err(PolyominoError::BadLabelling)
        );
        // Separated columns may repeat labels.
        let p = poly(2, 2, "NENE", "EENN");
        assert!(LabelledPolyomino::new(p, 1, alloc::vec![2, 2]).is_ok());
        // An initial north run sits on top of the first label.
        let p = poly(2, 2, "NNEE", "EENN");
        assert_eq!(
            LabelledPolyomino::new(p, 3, alloc::vec![2, 4]),
            Err(PolyominoError::BadLabelling)
        );
        let p = poly(2, 2, "ENNE", "EENN");
        assert!(LabelledPolyomino::new(p, 3, alloc::vec![1, 2]).is_ok());
    }

    #[test]
    fn letter_order_and_succ() {
        let a = Letter::plain(0);
        assert!(a < a.succ());
        assert!(a.succ() < a.succ().succ());
        assert_eq!(a.succ().succ(), Letter::plain(1));
        assert_eq!(format!("{} {}", Letter::barred(2), Letter::plain(3)), "2' 3");
    }
}

