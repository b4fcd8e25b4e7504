//! Expansions of the classical bases into monomial coordinates, exact.
//!
//! A symmetric function of degree n is pinned down by its restriction to n
//! variables, so each generator is expanded as a polynomial in n variables
//! keyed by exponent vectors, and monomial coefficients are read off at
//! weakly decreasing exponents.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{BigInt, BigRational};

use super::partition::{partitions_of, Partition};

/// Polynomial in a fixed number of variables, keyed by exponent vector.
type VarPoly = BTreeMap<Vec<u8>, BigInt>;

fn mul(a: &VarPoly, b: &VarPoly) -> VarPoly {
    let mut out = VarPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(exps).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out
}

fn one_poly(vars: usize) -> VarPoly {
    let mut out = VarPoly::new();
    out.insert(vec![0; vars], BigInt::one());
    out
}

/// Complete homogeneous generator h_r in `vars` variables.
fn gen_h(r: usize, vars: usize) -> VarPoly {
    let mut out = VarPoly::new();
    let mut exps = vec![0u8; vars];
    fn rec(out: &mut VarPoly, exps: &mut Vec<u8>, var: usize, left: usize) {
        if var + 1 == exps.len() {
            exps[var] = left as u8;
            out.insert(exps.clone(), BigInt::one());
            exps[var] = 0;
            return;
        }
        for take in 0..=left {
            exps[var] = take as u8;
            rec(out, exps, var + 1, left - take);
        }
        exps[var] = 0;
    }
    if vars == 0 {
        if r == 0 {
            out.insert(Vec::new(), BigInt::one());
        }
        return out;
    }
    rec(&mut out, &mut exps, 0, r);
    out
}

/// Elementary generator e_r in `vars` variables.
fn gen_e(r: usize, vars: usize) -> VarPoly {
    let mut out = VarPoly::new();
    if r > vars {
        return out;
    }
    let mut exps = vec![0u8; vars];
    fn rec(out: &mut VarPoly, exps: &mut Vec<u8>, var: usize, left: usize) {
        if left == 0 {
            out.insert(exps.clone(), BigInt::one());
            return;
        }
        if exps.len() - var < left {
            return;
        }
        exps[var] = 1;
        rec(out, exps, var + 1, left - 1);
        exps[var] = 0;
        rec(out, exps, var + 1, left);
    }
    rec(&mut out, &mut exps, 0, r);
    out
}

/// Power sum generator p_r in `vars` variables.
fn gen_p(r: usize, vars: usize) -> VarPoly {
    let mut out = VarPoly::new();
    if r == 0 {
        return one_poly(vars);
    }
    for v in 0..vars {
        let mut exps = vec![0u8; vars];
        exps[v] = r as u8;
        out.insert(exps, BigInt::one());
    }
    out
}

/// Reads monomial-basis coefficients from a degree-n polynomial in n
/// variables: one representative exponent vector per partition.
fn monomial_coefficients(poly: &VarPoly, parts: &[Partition], index: &BTreeMap<Partition, usize>) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); parts.len()];
    for (exps, coeff) in poly {
        // Representative exponent vector: parts weakly decreasing and packed
        // to the front, zeros after.
        let leading = exps.iter().take_while(|&&e| e > 0).count();
        if exps[leading..].iter().all(|&e| e == 0)
            && exps[..leading].windows(2).all(|w| w[0] >= w[1])
        {
            let p = Partition::from_parts(exps[..leading].to_vec());
            out[index[&p]] = coeff.clone();
        }
    }
    out
}

/// Number of semistandard tableaux of the given shape and content, by
/// peeling horizontal strips from the largest letter down.
fn kostka(shape: &Partition, content: &Partition) -> BigInt {
    fn strips(shape: &[u8], size: usize) -> Vec<Vec<u8>> {
        // All inner shapes mu with shape/mu a horizontal strip of the size:
        // mu interlaces shape and loses `size` cells.
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(shape: &[u8], row: usize, left: usize, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if row == shape.len() {
                if left == 0 {
                    out.push(current.clone());
                }
                return;
            }
            let upper = shape[row] as usize;
            let lower = shape.get(row + 1).copied().unwrap_or(0) as usize;
            let prev = if row == 0 { usize::MAX } else { current[row - 1] as usize };
            for keep in lower.max(upper.saturating_sub(left))..=upper.min(prev) {
                current.push(keep as u8);
                rec(shape, row + 1, left - (upper - keep), current, out);
                current.pop();
            }
        }
        rec(shape, 0, size, &mut current, &mut out);
        out
    }

    fn count(shape: Vec<u8>, content: &[u8], memo: &mut BTreeMap<(Vec<u8>, usize), BigInt>) -> BigInt {
        let letters = content.len();
        if letters == 0 {
            return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
        }
        if let Some(v) = memo.get(&(shape.clone(), letters)) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for inner in strips(&shape, content[letters - 1] as usize) {
            let trimmed: Vec<u8> = inner.into_iter().filter(|&p| p > 0).collect();
            total += count(trimmed, &content[..letters - 1], memo);
        }
        memo.insert((shape, letters), total.clone());
        total
    }

    let mut memo = BTreeMap::new();
    count(shape.parts().to_vec(), content.parts(), &mut memo)
}

/// Monomial expansions of the classical bases in one degree.
pub(crate) struct DegreeTables {
    /// Partitions of the degree, descending lexicographic.
    pub parts: Vec<Partition>,
    /// Position of each partition in `parts`.
    pub index: BTreeMap<Partition, usize>,
    /// Row i: coefficients of h_{parts[i]} on the monomial basis.
    pub h_in_m: Vec<Vec<BigInt>>,
    /// Row i: coefficients of e_{parts[i]} on the monomial basis.
    pub e_in_m: Vec<Vec<BigInt>>,
    /// Row i: coefficients of p_{parts[i]} on the monomial basis.
    pub p_in_m: Vec<Vec<BigInt>>,
    /// Row i: coefficients of s_{parts[i]} on the monomial basis.
    pub s_in_m: Vec<Vec<BigInt>>,
    /// Centralizer orders z_{parts[i]}.
    pub z: Vec<BigInt>,
}

impl DegreeTables {
    pub fn build(degree: usize) -> Self {
        let parts = partitions_of(degree);
        let index: BTreeMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let expand = |gen: &dyn Fn(usize, usize) -> VarPoly| -> Vec<Vec<BigInt>> {
            parts
                .iter()
                .map(|lambda| {
                    let mut poly = one_poly(degree);
                    for &part in lambda.parts() {
                        poly = mul(&poly, &gen(part as usize, degree));
                    }
                    monomial_coefficients(&poly, &parts, &index)
                })
                .collect()
        };
        let h_in_m = expand(&gen_h);
        let e_in_m = expand(&gen_e);
        let p_in_m = expand(&gen_p);
        let s_in_m = parts
            .iter()
            .map(|lambda| parts.iter().map(|mu| kostka(lambda, mu)).collect())
            .collect();
        let z = parts.iter().map(Partition::z).collect();
        DegreeTables { parts, index, h_in_m, e_in_m, p_in_m, s_in_m, z }
    }
}

/// Solves a * x = b exactly by Gaussian elimination; None when singular.
pub(crate) fn solve_rational(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..n {
                    a[r][c] = &a[r][c] - &factor * &a[col][c];
                }
                b[r] = &b[r] - &factor * &b[col];
            }
        }
    }
    Some(b)
}
