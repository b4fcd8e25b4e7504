//! Dyck paths and their partial labellings: blanks on valleys, positive
//! labels strictly increasing up columns, and the pmaj and dinv statistics.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::polyomino::Step;

/// Failure modes when building Dyck paths and labellings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DyckError {
    /// Step counts unbalanced or a prefix dips below the diagonal.
    BadPath,
    /// Path size exceeds the 31-row backing store.
    TooLarge,
    /// Label count mismatch, a blank in row 1, or a column whose labels fail
    /// to increase strictly from bottom to top.
    BadLabelling,
    /// A decoration index points at a row that is not a rise.
    BadDecoration(usize),
}

impl fmt::Display for DyckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyckError::BadPath => f.write_str("not a Dyck path"),
            DyckError::TooLarge => f.write_str("path size must be at most 31"),
            DyckError::BadLabelling => {
                f.write_str("labels must increase strictly up columns, with no blank in row 1")
            }
            DyckError::BadDecoration(i) => write!(f, "row {i} is not a rise"),
        }
    }
}

// ---- paths ----

/// A Dyck path of size N: N north and N east steps from (0,0) to (N,N),
/// staying weakly above the diagonal. Stored as a bitmask, bit i set when
/// step i+1 is north.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DyckPath {
    size: u8,
    mask: u64,
}

impl DyckPath {
    /// Validates and wraps a step sequence.
    pub fn new(steps: &[Step]) -> Result<Self, DyckError> {
        if steps.len() % 2 != 0 {
            return Err(DyckError::BadPath);
        }
        let size = steps.len() / 2;
        if size > 31 {
            return Err(DyckError::TooLarge);
        }
        let mut mask = 0u64;
        let mut y = 0i64;
        for (i, &s) in steps.iter().enumerate() {
            if s == Step::N {
                mask |= 1 << i;
                y += 1;
            } else {
                y -= 1;
                if y < 0 {
                    return Err(DyckError::BadPath);
                }
            }
        }
        if y != 0 {
            return Err(DyckError::BadPath);
        }
        Ok(DyckPath { size: size as u8, mask })
    }

    /// Rebuilds the path whose row areas are `a`: row i sits a_i cells left
    /// of the diagonal, so consecutive rows satisfy `a_{i+1} <= a_i + 1`.
    pub fn from_area_vector(a: &[u32]) -> Result<Self, DyckError> {
        if a.len() > 31 {
            return Err(DyckError::TooLarge);
        }
        if a.first().is_some_and(|&v| v != 0) {
            return Err(DyckError::BadPath);
        }
        for w in a.windows(2) {
            if w[1] > w[0] + 1 {
                return Err(DyckError::BadPath);
            }
        }
        let n = a.len();
        let mut steps = Vec::with_capacity(2 * n);
        let mut x = 0u32;
        for (i, &ai) in a.iter().enumerate() {
            // Row i+1 has its north step at x = i - a_i.
            let target = i as u32 - ai;
            while x < target {
                steps.push(Step::E);
                x += 1;
            }
            steps.push(Step::N);
        }
        while (x as usize) < n {
            steps.push(Step::E);
            x += 1;
        }
        DyckPath::new(&steps)
    }

    /// Number of north steps.
    pub fn size(&self) -> usize {
        self.size as usize
    }

    /// Whether step `i` (1-based, over all 2N steps) is north.
    pub fn is_north(&self, i: usize) -> bool {
        (self.mask >> (i - 1)) & 1 == 1
    }

    /// The step sequence.
    pub fn steps(&self) -> Vec<Step> {
        (1..=2 * self.size())
            .map(|i| if self.is_north(i) { Step::N } else { Step::E })
            .collect()
    }

    /// Row areas: a_i is the number of full cells between the path and the
    /// diagonal in row i (1-based).
    pub fn area_vector(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        let mut x = 0u32;
        let mut y = 0u32;
        for i in 1..=2 * self.size() {
            if self.is_north(i) {
                out.push(y - x);
                y += 1;
            } else {
                x += 1;
            }
        }
        out
    }

    /// Calls `f` on every Dyck path of the given size, in lexicographic step
    /// order with `E < N`.
    pub fn visit_all(size: usize, f: &mut impl FnMut(DyckPath)) {
        assert!(size <= 31, "path size too large");
        fn rec(size: usize, i: usize, mask: u64, y: u32, f: &mut impl FnMut(DyckPath)) {
            if i == 2 * size {
                f(DyckPath { size: size as u8, mask });
                return;
            }
            let x = i as u32 - y;
            if x < y {
                rec(size, i + 1, mask, y, f);
            }
            if (y as usize) < size {
                rec(size, i + 1, mask | (1 << i), y + 1, f);
            }
        }
        rec(size, 0, 0, 0, f);
    }
}

// ---- partial labellings ----

/// A Dyck path whose rows carry labels: 0 marks a blank, positive values are
/// genuine labels. Labels increase strictly up each column, which forces
/// every blank to the bottom of its column; row 1 must carry a positive
/// label, so blanks sit only on valleys.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartiallyLabelledDyckPath {
    path: DyckPath,
    labels: Vec<u32>,
}

impl PartiallyLabelledDyckPath {
    /// Validates the labelling against the path.
    pub fn new(path: DyckPath, labels: Vec<u32>) -> Result<Self, DyckError> {
        if labels.len() != path.size() {
            return Err(DyckError::BadLabelling);
        }
        if labels.first().is_some_and(|&l| l == 0) {
            return Err(DyckError::BadLabelling);
        }
        let a = path.area_vector();
        for i in 1..labels.len() {
            // Rows i and i+1 share a column exactly when a_{i+1} = a_i + 1.
            if a[i] == a[i - 1] + 1 && labels[i] <= labels[i - 1] {
                return Err(DyckError::BadLabelling);
            }
        }
        Ok(PartiallyLabelledDyckPath { path, labels })
    }

    /// The underlying path.
    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// The labels, row i at index i-1.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Label of 1-based row i.
    pub fn label(&self, i: usize) -> u32 {
        self.labels[i - 1]
    }

    /// Number of blank rows.
    pub fn blanks(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 0).count()
    }

    /// Sum of the row areas.
    pub fn area(&self) -> u64 {
        self.path.area_vector().iter().map(|&a| a as u64).sum()
    }

    /// 1-based rows that sit directly on top of the previous row (the row
    /// areas grow by one). These are the positions eligible for star
    /// decorations.
    pub fn rises(&self) -> BTreeSet<usize> {
        let a = self.path.area_vector();
        (2..=a.len()).filter(|&i| a[i - 1] == a[i - 2] + 1).collect()
    }

    /// Area after discounting the row areas of the decorated rises.
    pub fn area_decorated(&self, dec: &BTreeSet<usize>) -> u64 {
        let a = self.path.area_vector();
        self.area() - dec.iter().map(|&i| a[i - 1] as u64).sum::<u64>()
    }

    /// Number of rows on the diagonal (area 0) carrying the given label.
    pub fn diagonal_rows_with_label(&self, label: u32) -> usize {
        self.path
            .area_vector()
            .iter()
            .zip(&self.labels)
            .filter(|&(&a, &l)| a == 0 && l == label)
            .count()
    }

    /// Number of pairs of rows i < j that attack each other: equal areas with
    /// the lower label smaller (primary), or the earlier area one larger with
    /// the lower label larger (secondary). Blanks take part as label 0.
    pub fn dinv(&self) -> u64 {
        let a = self.path.area_vector();
        let l = &self.labels;
        let mut count = 0u64;
        for j in 1..a.len() {
            for i in 0..j {
                let primary = a[i] == a[j] && l[i] < l[j];
                let secondary = a[i] == a[j] + 1 && l[i] > l[j];
                if primary || secondary {
                    count += 1;
                }
            }
        }
        count
    }

    /// The parking word: scan columns left to right, keeping a pool of the
    /// labels whose columns have been reached; each column writes the
    /// largest pooled label not exceeding the previously written one, or the
    /// largest overall when none fits.
    fn parking_word(&self) -> Vec<u32> {
        let n = self.path.size();
        let a = self.path.area_vector();
        let mut columns: Vec<Vec<u32>> = alloc::vec![Vec::new(); n];
        for i in 0..n {
            // Row i+1 has its north step at x = i - a_i.
            columns[i - a[i] as usize].push(self.labels[i]);
        }
        let mut pool: BTreeMap<u32, usize> = BTreeMap::new();
        let mut word = Vec::with_capacity(n);
        for col in columns {
            for l in col {
                *pool.entry(l).or_insert(0) += 1;
            }
            let pick = match word.last() {
                Some(&prev) => pool
                    .range(..=prev)
                    .next_back()
                    .map(|(&l, _)| l)
                    .unwrap_or_else(|| *pool.keys().next_back().expect("pool nonempty")),
                None => *pool.keys().next_back().expect("pool nonempty"),
            };
            match pool.get_mut(&pick) {
                Some(c) if *c > 1 => *c -= 1,
                _ => {
                    pool.remove(&pick);
                }
            }
            word.push(pick);
        }
        word
    }

    /// Sum of the descent positions of the reversed parking word.
    pub fn pmaj(&self) -> u64 {
        let mut word = self.parking_word();
        word.reverse();
        word.windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i as u64 + 1)
            .sum()
    }
}

// ---- enumeration ----

/// Calls `f` on every partial labelling with `blanks` blank rows and the
/// positive label i+1 used exactly `content[i]` times. Paths come in
/// lexicographic step order, labellings in increasing label order per row.
pub fn visit_labelled(blanks: usize, content: &[usize], f: &mut impl FnMut(&PartiallyLabelledDyckPath)) {
    let size = blanks + content.iter().sum::<usize>();
    assert!(size <= 31, "path size too large");

    struct State<'a, F> {
        size: usize,
        remaining_blanks: usize,
        remaining: Vec<usize>,
        steps_north: u64,
        labels: Vec<u32>,
        f: &'a mut F,
    }

    fn rec<F: FnMut(&PartiallyLabelledDyckPath)>(
        st: &mut State<'_, F>,
        i: usize,
        y: usize,
        prev_in_column: Option<u32>,
    ) {
        if i == 2 * st.size {
            let path = DyckPath { size: st.size as u8, mask: st.steps_north };
            let pldp = PartiallyLabelledDyckPath { path, labels: st.labels.clone() };
            (st.f)(&pldp);
            return;
        }
        let x = i - y;
        if x < y {
            rec(st, i + 1, y, None);
        }
        if y < st.size {
            st.steps_north |= 1 << i;
            // A blank may open a column anywhere except row 1.
            if st.remaining_blanks > 0 && y > 0 && prev_in_column.is_none() {
                st.remaining_blanks -= 1;
                st.labels.push(0);
                rec(st, i + 1, y + 1, Some(0));
                st.labels.pop();
                st.remaining_blanks += 1;
            }
            for v in 0..st.remaining.len() {
                let label = v as u32 + 1;
                if st.remaining[v] == 0 || prev_in_column.is_some_and(|p| label <= p) {
                    continue;
                }
                st.remaining[v] -= 1;
                st.labels.push(label);
                rec(st, i + 1, y + 1, Some(label));
                st.labels.pop();
                st.remaining[v] += 1;
            }
            st.steps_north &= !(1 << i);
        }
    }

    let mut st = State {
        size,
        remaining_blanks: blanks,
        remaining: content.to_vec(),
        steps_north: 0,
        labels: Vec::with_capacity(size),
        f,
    };
    rec(&mut st, 0, 0, None);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino::path_from_str;

    fn pldp(path: &str, labels: &[u32]) -> PartiallyLabelledDyckPath {
        let p = DyckPath::new(&path_from_str(path).unwrap()).unwrap();
        PartiallyLabelledDyckPath::new(p, labels.to_vec()).unwrap()
    }

    #[test]
    fn area_vectors() {
        let p = DyckPath::new(&path_from_str("NENNENENENENENEENENENE").unwrap()).unwrap();
        assert_eq!(p.area_vector(), [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0]);
        let round = DyckPath::from_area_vector(&p.area_vector()).unwrap();
        assert_eq!(round, p);
    }

    #[test]
    fn two_row_statistics() {
        // Size-2 labelled paths and their (area, dinv, pmaj).
        let cases: [(&str, &[u32], u64, u64, u64); 4] = [
            ("NNEE", &[1, 2], 1, 0, 0),
            ("NENE", &[1, 2], 0, 1, 1),
            ("NENE", &[2, 1], 0, 0, 0),
            ("NENE", &[1, 1], 0, 0, 0),
        ];
        for (path, labels, a, d, p) in cases {
            let x = pldp(path, labels);
            assert_eq!(x.area(), a, "area of {path} {labels:?}");
            assert_eq!(x.dinv(), d, "dinv of {path} {labels:?}");
            assert_eq!(x.pmaj(), p, "pmaj of {path} {labels:?}");
        }
        // Stacked equal labels are not column-strict.
        let p = DyckPath::new(&path_from_str("NNEE").unwrap()).unwrap();
        assert_eq!(
            PartiallyLabelledDyckPath::new(p, alloc::vec![1, 1]),
            Err(DyckError::BadLabelling)
        );
    }

    #[test]
    fn blank_placement() {
        // Blanks sit at column bottoms only, never in row 1.
        let p = DyckPath::new(&path_from_str("NENE").unwrap()).unwrap();
        assert!(PartiallyLabelledDyckPath::new(p, alloc::vec![1, 0]).is_ok());
        assert_eq!(
            PartiallyLabelledDyckPath::new(p, alloc::vec![0, 1]),
            Err(DyckError::BadLabelling)
        );
        let p = DyckPath::new(&path_from_str("NNEE").unwrap()).unwrap();
        assert_eq!(
            PartiallyLabelledDyckPath::new(p, alloc::vec![1, 0]),
            Err(DyckError::BadLabelling)
        );
    }

    #[test]
    fn large_example_rises_and_area() {
        // Size-12 reference labelling: one column is 0,5,7,8 stacked.
        let x = pldp(
            "NNNEENNNNENEEEENNEEENNEE",
            &[1, 2, 4, 0, 5, 7, 8, 0, 0, 3, 0, 6],
        );
        assert_eq!(x.path().area_vector(), [0, 1, 2, 1, 2, 3, 4, 4, 1, 2, 0, 1]);
        assert_eq!(x.blanks(), 4);
        assert_eq!(
            x.rises().into_iter().collect::<Vec<_>>(),
            [2, 3, 5, 6, 7, 10, 12]
        );
        assert_eq!(x.area(), 21);
        assert_eq!(x.area_decorated(&x.rises()), 6);
    }

    #[test]
    fn enumeration_counts() {
        // Size 2, no blanks, labels {1,2}: the three column-strict objects.
        let mut count = 0;
        visit_labelled(0, &[1, 1], &mut |_| count += 1);
        assert_eq!(count, 3);
        // One blank, two distinct labels: paths of size 3 with a non-leading
        // blank at a column bottom.
        let mut seen = Vec::new();
        visit_labelled(1, &[1, 1], &mut |p| {
            seen.push((p.path().steps().len(), p.labels().to_vec()))
        });
        assert!(seen.iter().all(|(len, labels)| *len == 6 && labels.len() == 3));
        assert!(seen.iter().all(|(_, labels)| labels[0] != 0));
        // Every labelling validates.
        visit_labelled(1, &[2], &mut |p| {
            assert!(PartiallyLabelledDyckPath::new(*p.path(), p.labels().to_vec()).is_ok());
        });
    }

    #[test]
    fn pmaj_with_blanks() {
        // Blanks enter the parking word as zeros.
        let x = pldp("NENE", &[1, 0]);
        // Columns: {1}, {0}; word 1,0; reversed 0,1; no descent.
        assert_eq!(x.pmaj(), 0);
        let x = pldp("NNEE", &[2, 3]);
        // Single column {2,3}: word 3,2; reversed 2,3; no descent.
        assert_eq!(x.pmaj(), 0);
    }

    #[test]
    fn parking_word_permutes_the_labels() {
        // The written word spends every label exactly once, zeros included.
        let combos: [(usize, &[usize]); 5] =
            [(0, &[1, 1, 1]), (0, &[2, 1]), (1, &[1, 1]), (2, &[1, 1]), (1, &[3])];
        for (blanks, content) in combos {
            visit_labelled(blanks, content, &mut |p| {
                let mut word = p.parking_word();
                let mut labels = p.labels().to_vec();
                word.sort_unstable();
                labels.sort_unstable();
                assert_eq!(word, labels, "parking word of {:?}", p.labels());
            });
        }
    }
}
