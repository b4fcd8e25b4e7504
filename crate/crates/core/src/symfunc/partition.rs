//! Integer partitions with the cell data the eigenoperators need.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::BigInt;

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u8>);

impl Partition {
    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn from_parts(mut parts: Vec<u8>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-part partition (n), or empty when n = 0.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![u8::try_from(n).expect("part fits in u8")])
        }
    }

    /// The hook (head, 1^legs); head must be positive unless legs is 0 too.
    pub fn hook(head: usize, legs: usize) -> Self {
        if head == 0 {
            assert_eq!(legs, 0, "hook with empty first row");
            return Partition::empty();
        }
        let mut parts = vec![u8::try_from(head).expect("part fits in u8")];
        parts.extend(core::iter::repeat(1).take(legs));
        Partition(parts)
    }

    /// Parts, weakly decreasing.
    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    /// Sum of parts.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate partition (transpose of the diagram).
    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            let height = self.0.iter().filter(|&&p| p as usize > c).count();
            parts.push(u8::try_from(height).expect("part fits in u8"));
        }
        Partition(parts)
    }

    /// Cells as (row, column), both 0-based; row 0 is the longest row.
    /// The row index is the coleg of the cell, the column index its coarm.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &p) in self.0.iter().enumerate() {
            for c in 0..p as u32 {
                out.push((r as u32, c));
            }
        }
        out
    }

    /// The centralizer order z = prod over part values v of v^mult * mult!.
    pub fn z(&self) -> BigInt {
        let mut mult: BTreeMap<u8, u64> = BTreeMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_insert(0) += 1;
        }
        let mut z = BigInt::from(1);
        for (v, m) in mult {
            for _ in 0..m {
                z *= BigInt::from(v);
            }
            for i in 1..=m {
                z *= BigInt::from(i);
            }
        }
        z
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of n in descending lexicographic order, (n) first and
/// (1^n) last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n.min(255), &mut stack, &mut out);
    out
}

fn descend(remaining: usize, cap: usize, stack: &mut Vec<u8>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(stack.clone()));
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        stack.push(part as u8);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_and_order() {
        // p(n) for n = 0..8: 1, 1, 2, 3, 5, 7, 11, 15, 22.
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let of_four = partitions_of(4);
        let rendered: Vec<String> = of_four.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn conjugate_and_cells() {
        let p = Partition::from_parts(vec![3, 1, 1]);
        assert_eq!(p.conjugate(), Partition::from_parts(vec![3, 1, 1]).conjugate());
        assert_eq!(p.conjugate().parts(), &[3, 1, 1]);
        let q = Partition::from_parts(vec![2, 2, 1]);
        assert_eq!(q.conjugate().parts(), &[3, 2]);
        assert_eq!(
            q.cells(),
            vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
        );
        assert_eq!(Partition::hook(3, 2).parts(), &[3, 1, 1]);
        assert_eq!(Partition::hook(1, 0).parts(), &[1]);
    }

    #[test]
    fn centralizer_orders() {
        // z(2) = 2, z(1,1) = 2, z(2,1) = 2, z(3,1,1) = 3 * 1 * 2 = 6.
        assert_eq!(Partition::from_parts(vec![2]).z(), BigInt::from(2));
        assert_eq!(Partition::from_parts(vec![1, 1]).z(), BigInt::from(2));
        assert_eq!(Partition::from_parts(vec![2, 1]).z(), BigInt::from(2));
        assert_eq!(Partition::from_parts(vec![3, 1, 1]).z(), BigInt::from(6));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
    }
}
