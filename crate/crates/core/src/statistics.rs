//! Statistics on reduced parallelogram polyominoes: area and dinv of the
//! area word, the bounce path with its labels, and the decorated variants
//! that discount decorated positions.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::polyomino::{AreaWord, Letter, ReducedPolyomino, Step};

/// Sum of the letter values of the area word.
pub fn area(word: &AreaWord) -> u64 {
    word.letters().iter().map(|l| l.value as u64).sum()
}

/// Area after discounting the values of star-decorated rise positions.
pub fn area_decorated(word: &AreaWord, rises: &BTreeSet<usize>) -> u64 {
    area(word) - rises.iter().map(|&i| word.letter(i).value as u64).sum::<u64>()
}

/// Number of pairs i < j whose earlier letter is the immediate successor of
/// the later one.
pub fn dinv(word: &AreaWord) -> u64 {
    let letters = word.letters();
    let mut count = 0u64;
    for j in 1..letters.len() {
        let target = letters[j].succ();
        count += letters[..j].iter().filter(|&&l| l == target).count() as u64;
    }
    count
}

/// Zero statistic of the star family: the number of plain 0 letters in the
/// area word, the leading letter included.
pub fn star_zeros(word: &AreaWord) -> usize {
    word.plain_zeros()
}

/// Zero statistic of the bullet family: one more than the length of the
/// bounce path's initial vertical run.
pub fn bullet_zeros(p: &ReducedPolyomino) -> usize {
    BouncePath::of(p).vertical_runs().first().copied().unwrap_or(0) + 1
}

// ---- bounce ----

/// The bounce path of a polyomino: a single monotone path from (0,0) to
/// (m,n) that climbs until the red path turns east, travels east until the
/// green path turns north, and repeats. Its runs are labelled 0, 0', 1, 1',
/// ... and the bounce statistic is the sum of the label values over all
/// steps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BouncePath {
    steps: Vec<Step>,
    /// Whether the path begins with an east run (the initial vertical run is
    /// empty). Interior runs are never empty.
    starts_east: bool,
}

impl BouncePath {
    /// Computes the bounce path by the alternating chasing rule. The mode
    /// flips at a lattice point where the followed path (red while climbing,
    /// green while travelling east) turns; only the initial climb can be
    /// empty.
    pub fn of(p: &ReducedPolyomino) -> Self {
        let (m, n) = (p.m(), p.n());
        // Outgoing step direction of each path by lattice point: 0 absent,
        // 1 east, 2 north. Flat grid keeps the sweep allocation-light.
        let idx = |x: usize, y: usize| x * (n + 1) + y;
        let mut red_out = alloc::vec![0u8; (m + 1) * (n + 1)];
        let mut green_out = alloc::vec![0u8; (m + 1) * (n + 1)];
        let fill = |out: &mut [u8], north_at: &dyn Fn(usize) -> bool| {
            let (mut x, mut y) = (0usize, 0usize);
            for i in 1..=m + n {
                if north_at(i) {
                    out[idx(x, y)] = 2;
                    y += 1;
                } else {
                    out[idx(x, y)] = 1;
                    x += 1;
                }
            }
        };
        fill(&mut red_out, &|i| p.red_is_north(i));
        fill(&mut green_out, &|i| p.green_is_north(i));

        let mut steps = Vec::with_capacity(m + n);
        let mut vertical = true;
        let (mut x, mut y) = (0usize, 0usize);
        let mut switches_without_step = 0u32;
        while (x, y) != (m, n) {
            assert!(switches_without_step <= 2, "bounce path stalled at ({x}, {y})");
            if vertical {
                if red_out[idx(x, y)] == 1 {
                    vertical = false;
                    switches_without_step += 1;
                    continue;
                }
                steps.push(Step::N);
                y += 1;
            } else {
                if green_out[idx(x, y)] == 2 {
                    vertical = true;
                    switches_without_step += 1;
                    continue;
                }
                steps.push(Step::E);
                x += 1;
            }
            switches_without_step = 0;
        }
        let starts_east = steps.first() == Some(&Step::E);
        BouncePath { steps, starts_east }
    }

    /// The steps of the path.
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Run label of each step, in order: the j-th vertical run is labelled
    /// with the plain letter j, the j-th horizontal run with the barred j.
    pub fn labels(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut v_runs = 0u32;
        let mut h_runs: u32 = if self.starts_east { 1 } else { 0 };
        let mut prev: Option<Step> = None;
        for &s in &self.steps {
            if prev.is_some() && prev != Some(s) {
                match s {
                    Step::N => v_runs += 1,
                    Step::E => h_runs += 1,
                }
            }
            out.push(match s {
                Step::N => Letter::plain(v_runs),
                Step::E => Letter::barred(h_runs.saturating_sub(1)),
            });
            prev = Some(s);
        }
        out
    }

    /// Sum of label values over all steps.
    pub fn bounce(&self) -> u64 {
        self.labels().iter().map(|l| l.value as u64).sum()
    }

    /// Lengths of the vertical runs, the possibly-empty initial one first.
    pub fn vertical_runs(&self) -> Vec<usize> {
        self.runs(Step::N, self.starts_east)
    }

    /// Lengths of the horizontal runs.
    pub fn horizontal_runs(&self) -> Vec<usize> {
        self.runs(Step::E, false)
    }

    fn runs(&self, dir: Step, prepend_empty: bool) -> Vec<usize> {
        let mut out = Vec::new();
        if prepend_empty {
            out.push(0);
        }
        let mut prev: Option<Step> = None;
        for &s in &self.steps {
            if s == dir {
                if prev == Some(dir) {
                    *out.last_mut().expect("run in progress") += 1;
                } else {
                    out.push(1);
                }
            }
            prev = Some(s);
        }
        out
    }

    /// Label of the vertical step crossing row y (from (x,y) to (x,y+1)).
    pub fn row_label(&self, y: usize) -> Letter {
        let mut row = 0usize;
        for (s, l) in self.steps.iter().zip(self.labels()) {
            if *s == Step::N {
                if row == y {
                    return l;
                }
                row += 1;
            }
        }
        panic!("row {y} out of range");
    }

    /// Interior corner points plus both endpoints, in path order.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = alloc::vec![(0usize, 0usize)];
        let (mut x, mut y) = (0usize, 0usize);
        let mut prev: Option<Step> = None;
        for &s in &self.steps {
            if prev.is_some() && prev != Some(s) {
                out.push((x, y));
            }
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            prev = Some(s);
        }
        out.push((x, y));
        out
    }
}

/// Sum of label values of the bounce path.
pub fn bounce(p: &ReducedPolyomino) -> u64 {
    BouncePath::of(p).bounce()
}

/// Bounce after discounting, for every bullet-decorated valley, the value of
/// the bounce label in the valley's row.
pub fn bounce_decorated(p: &ReducedPolyomino, valleys: &BTreeSet<usize>) -> u64 {
    let bp = BouncePath::of(p);
    let mut total = bp.bounce();
    let mut row = 0usize;
    for i in 1..=p.m() + p.n() {
        if p.red_is_north(i) {
            if valleys.contains(&i) {
                total -= bp.row_label(row).value as u64;
            }
            row += 1;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino::path_from_str;

    fn poly(m: usize, n: usize, red: &str, green: &str) -> ReducedPolyomino {
        ReducedPolyomino::new(m, n, &path_from_str(red).unwrap(), &path_from_str(green).unwrap())
            .unwrap()
    }

    #[test]
    fn unit_square_statistics() {
        // (area, bounce, dinv) of the three 1x1 polyominoes.
        let cases = [
            ("NE", "NE", 0, 0, 1, 2),
            ("NE", "EN", 1, 0, 0, 2),
            ("EN", "EN", 0, 1, 0, 1),
        ];
        for (red, green, a, b, d, s) in cases {
            let p = poly(1, 1, red, green);
            let w = p.area_word();
            assert_eq!(area(&w), a, "area of {red}/{green}");
            assert_eq!(bounce(&p), b, "bounce of {red}/{green}");
            assert_eq!(dinv(&w), d, "dinv of {red}/{green}");
            assert_eq!(bullet_zeros(&p), s, "zeros of {red}/{green}");
        }
    }

    #[test]
    fn large_example_statistics() {
        let p = poly(12, 7, "NNNEEENEENEEENEEEEN", "EENNNEEEEENEEENEENN");
        let w = p.area_word();
        assert_eq!(area(&w), 19);
        let bp = BouncePath::of(&p);
        assert_eq!(
            bp.corners(),
            [(0, 0), (0, 3), (7, 3), (7, 5), (12, 5), (12, 7)]
        );
        assert_eq!(bp.vertical_runs(), [3, 2, 2]);
        assert_eq!(bp.horizontal_runs(), [7, 5]);
        assert_eq!(bp.bounce(), 11);
        // Valleys at steps 10 and 14 sit in rows 4 and 5; the bounce labels
        // there are 1 and 2.
        assert_eq!(bounce_decorated(&p, &[10, 14].into()), 8);
        assert_eq!(bounce_decorated(&p, &BTreeSet::new()), 11);
        assert_eq!(bullet_zeros(&p), 4);
    }

    #[test]
    fn tall_example_area() {
        // Pinned area word of a 12x7 sibling with area 30.
        let w = AreaWord::parse("0 0' 1 1' 2 2' 3 2 2 2' 1 1' 2 1 1 1' 2 2' 2 2").unwrap();
        assert_eq!(area(&w), 30);
        assert_eq!(w.frame(), (12, 7));
    }

    #[test]
    fn decorated_area_discounts_rise_values() {
        let w = AreaWord::parse("0 0' 0' 0 0 0 0' 1 1' 2 1' 1' 0' 0' 1 1' 1' 2 0' 0'").unwrap();
        assert_eq!(area(&w), 11);
        assert_eq!(dinv(&w), 19);
        assert_eq!(w.rises().into_iter().collect::<alloc::vec::Vec<_>>(), [8, 10, 15, 18]);
        // Decorating the rises at positions 10 (letter 2) and 15 (letter 1).
        assert_eq!(area_decorated(&w, &[10, 15].into()), 8);
    }

    #[test]
    fn degenerate_bounce() {
        // Height 0: a single horizontal run labelled 0', bounce 0.
        let p = poly(3, 0, "EEE", "EEE");
        assert_eq!(bounce(&p), 0);
        assert_eq!(bullet_zeros(&p), 1);
        // Width 0: a single vertical run labelled 0.
        let p = poly(0, 3, "NNN", "NNN");
        assert_eq!(bounce(&p), 0);
        assert_eq!(bullet_zeros(&p), 4);
        // The empty polyomino.
        let p = poly(0, 0, "", "");
        assert_eq!(bounce(&p), 0);
        assert_eq!(bullet_zeros(&p), 1);
    }

    #[test]
    fn star_zero_statistic() {
        let w = AreaWord::parse("0 0' 0' 0 0 0 0' 1 1' 2 1' 1' 0' 0' 1 1' 1' 2 0' 0'").unwrap();
        assert_eq!(star_zeros(&w), 4);
        assert_eq!(star_zeros(&AreaWord::parse("0 0' 1").unwrap()), 1);
    }
}
