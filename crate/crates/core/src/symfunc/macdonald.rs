//! Modified Macdonald polynomials from filling statistics, two routes.
//!
//! Diagrams are drawn with row 0 the longest row at the bottom; the reading
//! order runs over rows from top to bottom, left to right within a row.
//! A filling's descent set holds the cells strictly greater than their
//! southern neighbour; maj sums leg + 1 over descents; inv counts attacking
//! inversions (same row, or consecutive rows with the upper cell strictly
//! right of the lower) minus the arms of the descents.

use alloc::vec;
use alloc::vec::Vec;

use crate::qt::QtPolynomial;

use super::partition::Partition;

/// Cell geometry of one diagram, precomputed for filling statistics.
struct Shape {
    /// Total number of cells.
    size: usize,
    /// For each reading position, the reading position of the cell directly
    /// below it, when that cell exists.
    south: Vec<Option<usize>>,
    /// leg + 1 for each reading position.
    leg_plus_one: Vec<u64>,
    /// Arm length for each reading position.
    arm: Vec<u64>,
    /// Attacking pairs (earlier, later) in reading order.
    attacking: Vec<(usize, usize)>,
}

impl Shape {
    fn new(mu: &Partition) -> Self {
        let parts = mu.parts();
        let rows = parts.len();
        // Reading order: top row first, left to right.
        let mut cells: Vec<(usize, usize)> = Vec::with_capacity(mu.size());
        for r in (0..rows).rev() {
            for c in 0..parts[r] as usize {
                cells.push((r, c));
            }
        }
        let position = |r: usize, c: usize| -> usize {
            // Rows above r hold sum of their lengths; all of them are read first.
            let before: usize = parts[r + 1..].iter().map(|&p| p as usize).sum();
            before + c
        };
        let south = cells
            .iter()
            .map(|&(r, c)| if r > 0 { Some(position(r - 1, c)) } else { None })
            .collect();
        let leg_plus_one = cells
            .iter()
            .map(|&(r, c)| 1 + parts[r + 1..].iter().filter(|&&p| p as usize > c).count() as u64)
            .collect();
        let arm = cells.iter().map(|&(r, c)| (parts[r] as usize - 1 - c) as u64).collect();
        let mut attacking = Vec::new();
        for (i, &(r, c)) in cells.iter().enumerate() {
            for (j, &(r2, c2)) in cells.iter().enumerate().skip(i + 1) {
                let same_row = r2 == r;
                let upper_right = r == r2 + 1 && c > c2;
                if same_row || upper_right {
                    attacking.push((i, j));
                }
            }
        }
        Shape { size: cells.len(), south, leg_plus_one, arm, attacking }
    }

    /// (q-exponent, t-exponent) of one filling, given as values in reading
    /// order. Values may repeat; comparisons are strict.
    fn stats(&self, values: &[u32]) -> (u64, u64) {
        let mut maj = 0u64;
        let mut arm_sum = 0i64;
        for i in 0..self.size {
            if let Some(s) = self.south[i] {
                if values[i] > values[s] {
                    maj += self.leg_plus_one[i];
                    arm_sum += self.arm[i] as i64;
                }
            }
        }
        let mut inversions = 0i64;
        for &(i, j) in &self.attacking {
            if values[i] > values[j] {
                inversions += 1;
            }
        }
        let inv = inversions - arm_sum;
        debug_assert!(inv >= 0, "attacking inversions dominate descent arms");
        (inv as u64, maj)
    }
}

fn visit_permutations(n: usize, f: &mut impl FnMut(&[u32])) {
    let mut values: Vec<u32> = (1..=n as u32).collect();
    fn rec(values: &mut [u32], k: usize, f: &mut impl FnMut(&[u32])) {
        if k == values.len() {
            // Re-borrow as immutable for the visitor.
            f(values);
            return;
        }
        for i in k..values.len() {
            values.swap(k, i);
            rec(values, k + 1, f);
            values.swap(k, i);
        }
    }
    rec(&mut values, 0, f);
}

/// Bitmask with bit i set (1-based descent positions) for each proper prefix
/// sum of the partition.
fn prefix_sum_mask(nu: &Partition) -> u32 {
    let total = nu.size();
    let mut mask = 0u32;
    let mut acc = 0usize;
    for &p in nu.parts() {
        acc += p as usize;
        if acc < total {
            mask |= 1 << acc;
        }
    }
    mask
}

/// Monomial-basis coefficients of the modified Macdonald polynomials of one
/// degree, indexed [shape][monomial] in the given partition order. Computed
/// from bijective fillings: each contributes q^inv t^maj to every monomial
/// whose prefix-sum set contains the inverse descent set of its reading word.
pub fn macdonald_in_m(parts: &[Partition]) -> Vec<Vec<QtPolynomial>> {
    let degree = parts.first().map(Partition::size).unwrap_or(0);
    let masks: Vec<u32> = parts.iter().map(prefix_sum_mask).collect();
    parts
        .iter()
        .map(|mu| {
            let shape = Shape::new(mu);
            let mut rows = vec![QtPolynomial::zero(); parts.len()];
            visit_permutations(degree, &mut |word| {
                let (inv, maj) = shape.stats(word);
                // Inverse descents: i such that i + 1 is read before i.
                let mut pos = vec![0usize; degree + 1];
                for (p, &v) in word.iter().enumerate() {
                    pos[v as usize] = p;
                }
                let mut ides = 0u32;
                for i in 1..degree {
                    if pos[i + 1] < pos[i] {
                        ides |= 1 << i;
                    }
                }
                for (row, &mask) in rows.iter_mut().zip(&masks) {
                    if ides & !mask == 0 {
                        row.add_term(inv as u32, maj as u32, 1);
                    }
                }
            });
            rows
        })
        .collect()
}

/// The same coefficients by direct enumeration of fillings with fixed
/// content: the reference route, kept independent of the bijective one.
pub fn macdonald_in_m_by_content(parts: &[Partition]) -> Vec<Vec<QtPolynomial>> {
    parts
        .iter()
        .map(|mu| {
            let shape = Shape::new(mu);
            parts
                .iter()
                .map(|nu| {
                    let mut counts: Vec<u32> = nu.parts().iter().map(|&p| p as u32).collect();
                    let mut values = vec![0u32; shape.size];
                    let mut poly = QtPolynomial::zero();
                    fill(&shape, &mut counts, &mut values, 0, &mut poly);
                    poly
                })
                .collect()
        })
        .collect()
}

fn fill(shape: &Shape, counts: &mut Vec<u32>, values: &mut Vec<u32>, at: usize, poly: &mut QtPolynomial) {
    if at == shape.size {
        let (inv, maj) = shape.stats(values);
        poly.add_term(inv as u32, maj as u32, 1);
        return;
    }
    for letter in 0..counts.len() {
        if counts[letter] > 0 {
            counts[letter] -= 1;
            values[at] = letter as u32 + 1;
            fill(shape, counts, values, at + 1, poly);
            counts[letter] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partition::partitions_of;

    fn coeff<'a>(
        table: &'a [Vec<QtPolynomial>],
        parts: &[Partition],
        mu: &[u8],
        nu: &[u8],
    ) -> &'a QtPolynomial {
        let find = |target: &[u8]| {
            parts
                .iter()
                .position(|p| p.parts() == target)
                .expect("partition present")
        };
        &table[find(mu)][find(nu)]
    }

    #[test]
    fn degree_two_pins() {
        // Row shape: m_2 + (1 + q) m_11. Column shape: m_2 + (1 + t) m_11.
        let parts = partitions_of(2);
        let table = macdonald_in_m(&parts);
        assert_eq!(coeff(&table, &parts, &[2], &[2]).to_string(), "1");
        assert_eq!(coeff(&table, &parts, &[2], &[1, 1]).to_string(), "1 + q");
        assert_eq!(coeff(&table, &parts, &[1, 1], &[2]).to_string(), "1");
        assert_eq!(coeff(&table, &parts, &[1, 1], &[1, 1]).to_string(), "1 + t");
    }

    #[test]
    fn degree_three_pins() {
        // Shape (2,1): m_3 + (1 + q + t) m_21 + (1 + 2q + 2t + qt) m_111.
        let parts = partitions_of(3);
        let table = macdonald_in_m(&parts);
        assert_eq!(coeff(&table, &parts, &[2, 1], &[3]).to_string(), "1");
        assert_eq!(coeff(&table, &parts, &[2, 1], &[2, 1]).to_string(), "1 + q + t");
        assert_eq!(
            coeff(&table, &parts, &[2, 1], &[1, 1, 1]).to_string(),
            "1 + 2q + 2t + qt"
        );
        // Single column: the m_111 coefficient is (1)(1 + t)(1 + t + t^2).
        assert_eq!(
            coeff(&table, &parts, &[1, 1, 1], &[1, 1, 1]).to_string(),
            "1 + 2t + 2t^2 + t^3"
        );
        // Single row mirrors it in q.
        assert_eq!(
            coeff(&table, &parts, &[3], &[1, 1, 1]).to_string(),
            "1 + 2q + 2q^2 + q^3"
        );
    }

    #[test]
    fn routes_agree_through_degree_five() {
        for degree in 0..=5 {
            let parts = partitions_of(degree);
            let fast = macdonald_in_m(&parts);
            let reference = macdonald_in_m_by_content(&parts);
            assert_eq!(fast, reference, "degree {degree}");
        }
    }

    #[test]
    fn specialization_counts_fillings() {
        // At q = t = 1 every bijective filling counts once toward m_{1^n},
        // so that coefficient is n!.
        let parts = partitions_of(4);
        let table = macdonald_in_m(&parts);
        let ones = parts.iter().position(|p| p.parts() == [1, 1, 1, 1]).unwrap();
        let one = crate::BigRational::from(crate::BigInt::from(1));
        for row in &table {
            assert_eq!(row[ones].eval(&one, &one), crate::BigRational::from(crate::BigInt::from(24)));
        }
    }
}
