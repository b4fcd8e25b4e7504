//! Eigenvalues of the delta operators on the Macdonald basis.
//!
//! Each shape mu has the alphabet B_mu = sum over cells of q^coarm t^coleg.
//! Delta-type operators scale the Macdonald element for mu by f evaluated on
//! that alphabet (or on B_mu - 1 for the primed variant); the evaluation for
//! f = e_j or h_j comes from power sums via Newton's identities.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::qt::QtPolynomial;
use crate::BigRational;

use super::partition::Partition;

/// One-generator symmetric functions that may index a delta operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    /// e_j; negative j makes the operator vanish away from the empty shape.
    Elementary(i64),
    /// h_j.
    Homogeneous(i64),
}

/// The cell alphabet of a shape: sum of q^coarm t^coleg over its cells.
pub fn cell_alphabet(mu: &Partition) -> QtPolynomial {
    let mut b = QtPolynomial::zero();
    for (row, col) in mu.cells() {
        b.add_term(col, row, 1);
    }
    b
}

/// Power sums p_1..p_max of the alphabet at a point; the alphabet B has
/// p_i = B(q^i, t^i), and subtracting one from the alphabet subtracts one
/// from every power sum.
fn power_values(
    alphabet: &QtPolynomial,
    q: &BigRational,
    t: &BigRational,
    max: usize,
    minus_one: bool,
) -> Vec<BigRational> {
    let mut qi = BigRational::one();
    let mut ti = BigRational::one();
    let mut out = Vec::with_capacity(max);
    for _ in 0..max {
        qi *= q;
        ti *= t;
        let mut v = alphabet.eval(&qi, &ti);
        if minus_one {
            v -= BigRational::one();
        }
        out.push(v);
    }
    out
}

/// e_j of an alphabet with the given power sums, by Newton's identities:
/// j e_j = sum_{i=1..j} (-1)^{i-1} p_i e_{j-i}.
fn elementary_from_powers(p: &[BigRational], j: usize) -> BigRational {
    let mut e = vec![BigRational::one()];
    for m in 1..=j {
        let mut acc = BigRational::zero();
        let mut sign = BigRational::one();
        for i in 1..=m {
            acc += &sign * &p[i - 1] * &e[m - i];
            sign = -sign;
        }
        e.push(acc / BigRational::from(crate::BigInt::from(m as i64)));
    }
    e[j].clone()
}

/// h_j of an alphabet with the given power sums: j h_j = sum p_i h_{j-i}.
fn homogeneous_from_powers(p: &[BigRational], j: usize) -> BigRational {
    let mut h = vec![BigRational::one()];
    for m in 1..=j {
        let mut acc = BigRational::zero();
        for i in 1..=m {
            acc += &p[i - 1] * &h[m - i];
        }
        h.push(acc / BigRational::from(crate::BigInt::from(m as i64)));
    }
    h[j].clone()
}

/// The scaling factor a delta operator applies on the shape mu: the
/// generator evaluated on the cell alphabet (primed: alphabet minus one).
///
/// Negative indices follow the boundary convention that makes degree zero
/// consistent: the operator for e_{-1} fixes the empty shape and kills
/// everything else, and every other negative index gives zero.
pub fn eigenvalue(
    generator: Generator,
    mu: &Partition,
    q: &BigRational,
    t: &BigRational,
    primed: bool,
) -> BigRational {
    let j = match generator {
        Generator::Elementary(j) | Generator::Homogeneous(j) => j,
    };
    if j < 0 {
        if j == -1 && mu.is_empty() && matches!(generator, Generator::Elementary(_)) && primed {
            return BigRational::one();
        }
        return BigRational::zero();
    }
    let j = j as usize;
    if j == 0 {
        return BigRational::one();
    }
    let alphabet = cell_alphabet(mu);
    let p = power_values(&alphabet, q, t, j, primed);
    match generator {
        Generator::Elementary(_) => elementary_from_powers(&p, j),
        Generator::Homogeneous(_) => homogeneous_from_powers(&p, j),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn alphabets() {
        // B_(2) = 1 + q, B_(1,1) = 1 + t, B_(2,1) = 1 + q + t.
        assert_eq!(cell_alphabet(&Partition::from_parts(vec![2])).to_string(), "1 + q");
        assert_eq!(cell_alphabet(&Partition::from_parts(vec![1, 1])).to_string(), "1 + t");
        assert_eq!(
            cell_alphabet(&Partition::from_parts(vec![2, 1])).to_string(),
            "1 + q + t"
        );
        assert!(cell_alphabet(&Partition::empty()).is_zero());
    }

    #[test]
    fn newton_identities_match_direct_expansion() {
        // Alphabet {a, b}: e_1 = a + b, e_2 = ab, h_2 = a^2 + ab + b^2.
        let a = rat(3);
        let b = rat(5);
        let p: Vec<BigRational> = (1..=3)
            .map(|i| {
                let mut ai = BigRational::one();
                let mut bi = BigRational::one();
                for _ in 0..i {
                    ai *= &a;
                    bi *= &b;
                }
                ai + bi
            })
            .collect();
        assert_eq!(elementary_from_powers(&p, 1), rat(8));
        assert_eq!(elementary_from_powers(&p, 2), rat(15));
        assert_eq!(elementary_from_powers(&p, 3), rat(0));
        assert_eq!(homogeneous_from_powers(&p, 2), rat(9 + 15 + 25));
    }

    #[test]
    fn eigenvalue_pins() {
        let q = rat(2);
        let t = rat(3);
        // e_1[B_(2)] = 1 + q = 3; e_1[B_(2) - 1] = q = 2.
        let two = Partition::from_parts(vec![2]);
        assert_eq!(eigenvalue(Generator::Elementary(1), &two, &q, &t, false), rat(3));
        assert_eq!(eigenvalue(Generator::Elementary(1), &two, &q, &t, true), rat(2));
        // e_2[B_(2,1)] = q + t + qt = 11 at (2,3).
        let staircase = Partition::from_parts(vec![2, 1]);
        assert_eq!(eigenvalue(Generator::Elementary(2), &staircase, &q, &t, false), rat(11));
        // h_0 and e_0 act as the identity.
        assert_eq!(eigenvalue(Generator::Homogeneous(0), &staircase, &q, &t, false), rat(1));
        // Boundary: e_{-1} primed fixes the empty shape, kills the rest.
        assert_eq!(eigenvalue(Generator::Elementary(-1), &Partition::empty(), &q, &t, true), rat(1));
        assert_eq!(eigenvalue(Generator::Elementary(-1), &two, &q, &t, true), rat(0));
        assert_eq!(eigenvalue(Generator::Homogeneous(-1), &Partition::empty(), &q, &t, false), rat(0));
    }
}
