//! Sparse polynomials in q and t with exact big-integer coefficients,
//! q-binomial coefficients, and interpolation from rational sample values.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in q and t with `BigInt` coefficients, stored sparsely.
///
/// The term map never contains zero coefficients, so structural equality is
/// polynomial equality. Term order (and hence rendering and serialization
/// order) is lexicographic on `(deg_q, deg_t)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QtPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QtPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QtPolynomial { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c.into())
    }

    /// The monomial `c * q^deg_q * t^deg_t`.
    pub fn monomial(deg_q: u32, deg_t: u32, c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert((deg_q, deg_t), c);
        }
        QtPolynomial { terms }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `q^deg_q * t^deg_t` (zero if the term is absent).
    pub fn coeff(&self, deg_q: u32, deg_t: u32) -> BigInt {
        self.terms.get(&(deg_q, deg_t)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates the nonzero terms in lexicographic `(deg_q, deg_t)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c * q^deg_q * t^deg_t` in place.
    pub fn add_term(&mut self, deg_q: u32, deg_t: u32, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((deg_q, deg_t)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(deg_q, deg_t));
        }
    }

    /// Degree in q, or `None` for the zero polynomial.
    pub fn deg_q(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    /// Degree in t, or `None` for the zero polynomial.
    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Multiplies by the monomial `q^deg_q * t^deg_t`.
    pub fn shifted(&self, deg_q: u32, deg_t: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| ((a + deg_q, b + deg_t), c.clone()))
            .collect();
        QtPolynomial { terms }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&d, k)| (d, k * c)).collect();
        QtPolynomial { terms }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let dq = self.deg_q().unwrap_or(0) as usize;
        let dt = self.deg_t().unwrap_or(0) as usize;
        let q_pow = powers(q, dq);
        let t_pow = powers(t, dt);
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += &q_pow[a as usize] * &t_pow[b as usize] * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Swaps the roles of q and t.
    pub fn swap_qt(&self) -> Self {
        let terms = self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect();
        QtPolynomial { terms }
    }
}

fn powers(x: &BigRational, up_to: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(BigRational::one());
    for i in 0..up_to {
        let next = &out[i] * x;
        out.push(next);
    }
    out
}

// ---- arithmetic ----

impl Add for &QtPolynomial {
    type Output = QtPolynomial;
    fn add(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &QtPolynomial {
    type Output = QtPolynomial;
    fn sub(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c.clone());
        }
        out
    }
}

impl Mul for &QtPolynomial {
    type Output = QtPolynomial;
    fn mul(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QtPolynomial {
    type Output = QtPolynomial;
    fn neg(self) -> QtPolynomial {
        let terms = self.terms.iter().map(|(&d, c)| (d, -c)).collect();
        QtPolynomial { terms }
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $method:ident),*) => {$(
        impl $op for QtPolynomial {
            type Output = QtPolynomial;
            fn $method(self, rhs: QtPolynomial) -> QtPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $op<&QtPolynomial> for QtPolynomial {
            type Output = QtPolynomial;
            fn $method(self, rhs: &QtPolynomial) -> QtPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $op<QtPolynomial> for &QtPolynomial {
            type Output = QtPolynomial;
            fn $method(self, rhs: QtPolynomial) -> QtPolynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

// ---- rendering ----

impl fmt::Display for QtPolynomial {
    /// Canonical text form: terms in graded order (total degree, then
    /// descending q-power), e.g. `1 + q + 2q^2 + q^3 + q^4` or `1 + q + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&(u32, u32), &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(a, b), _)| (a + b, b));
        for (i, (&(a, b), c)) in ordered.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            f.write_str(&term_string(a, b, &c.abs()))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPolynomial({self})")
    }
}

fn term_string(deg_q: u32, deg_t: u32, c: &BigInt) -> String {
    let mut s = String::new();
    if (deg_q, deg_t) == (0, 0) || !c.is_one() {
        s.push_str(&c.to_string());
    }
    for (var, deg) in [("q", deg_q), ("t", deg_t)] {
        match deg {
            0 => {}
            1 => s.push_str(var),
            d => {
                s.push_str(var);
                s.push('^');
                s.push_str(&d.to_string());
            }
        }
    }
    s
}

// ---- q-binomials ----

/// The Gaussian binomial coefficient `[a choose b]_q` as a polynomial in q.
///
/// Returns the zero polynomial when `b > a`, and 1 when `b = 0` or `b = a`.
pub fn qbinom(a: u32, b: u32) -> QtPolynomial {
    if b > a {
        return QtPolynomial::zero();
    }
    // Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k], row by row.
    let b = b.min(a - b);
    let mut row: Vec<QtPolynomial> = Vec::with_capacity(b as usize + 1);
    row.push(QtPolynomial::one());
    for n in 1..=a {
        let top = b.min(n);
        if top as usize == row.len() {
            row.push(QtPolynomial::zero());
        }
        for k in (1..=top).rev() {
            let shifted = row[k as usize].shifted(k, 0);
            row[k as usize] = &row[k as usize - 1] + &shifted;
        }
    }
    row.swap_remove(b as usize)
}

// ---- interpolation ----

/// Failure modes of [`interpolate`] and [`interpolate_with_nodes`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InterpolateError {
    /// A node list repeats a value, making the linear system singular.
    DuplicateNode,
    /// The interpolated coefficient of `q^deg_q t^deg_t` is not an integer,
    /// so the sampled function is not an integer polynomial of the claimed
    /// degrees. Carries the offending coefficient.
    NonIntegerCoefficient {
        /// q-degree of the offending term.
        deg_q: u32,
        /// t-degree of the offending term.
        deg_t: u32,
        /// The non-integer value produced by interpolation.
        value: BigRational,
    },
}

impl fmt::Display for InterpolateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterpolateError::DuplicateNode => f.write_str("interpolation nodes must be pairwise distinct"),
            InterpolateError::NonIntegerCoefficient { deg_q, deg_t, value } => {
                write!(f, "coefficient of q^{deg_q} t^{deg_t} interpolates to the non-integer {value}")
            }
        }
    }
}

/// The first `count` primes, as rationals, used as default interpolation nodes.
pub fn prime_nodes(count: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(count);
    let mut candidate: u64 = 2;
    while out.len() < count {
        if (2..candidate).take_while(|d| d * d <= candidate).all(|d| candidate % d != 0) {
            out.push(BigRational::from_integer(BigInt::from(candidate)));
        }
        candidate += 1;
    }
    out
}

/// Recovers the integer polynomial of degree at most `deg_q` in q and `deg_t`
/// in t from exact evaluations on a grid of small prime nodes.
pub fn interpolate<F>(eval: F, deg_q: u32, deg_t: u32) -> Result<QtPolynomial, InterpolateError>
where
    F: FnMut(&BigRational, &BigRational) -> BigRational,
{
    let q_nodes = prime_nodes(deg_q as usize + 1);
    let t_nodes = prime_nodes(deg_t as usize + 1);
    interpolate_with_nodes(eval, &q_nodes, &t_nodes)
}

/// As [`interpolate`], but with caller-chosen grid nodes (each axis pairwise
/// distinct).
pub fn interpolate_with_nodes<F>(
    mut eval: F,
    q_nodes: &[BigRational],
    t_nodes: &[BigRational],
) -> Result<QtPolynomial, InterpolateError>
where
    F: FnMut(&BigRational, &BigRational) -> BigRational,
{
    for nodes in [q_nodes, t_nodes] {
        for i in 0..nodes.len() {
            if nodes[i + 1..].contains(&nodes[i]) {
                return Err(InterpolateError::DuplicateNode);
            }
        }
    }
    // Interpolate in t along each q-node row, then in q for each t-degree.
    let t_coeffs_per_q: Vec<Vec<BigRational>> = q_nodes
        .iter()
        .map(|qn| {
            let values: Vec<BigRational> = t_nodes.iter().map(|tn| eval(qn, tn)).collect();
            univariate_coeffs(t_nodes, &values)
        })
        .collect();
    let mut out = QtPolynomial::zero();
    for b in 0..t_nodes.len() {
        let row: Vec<BigRational> = t_coeffs_per_q.iter().map(|c| c[b].clone()).collect();
        let q_coeffs = univariate_coeffs(q_nodes, &row);
        for (a, c) in q_coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return Err(InterpolateError::NonIntegerCoefficient {
                    deg_q: a as u32,
                    deg_t: b as u32,
                    value: c,
                });
            }
            out.add_term(a as u32, b as u32, c.to_integer());
        }
    }
    Ok(out)
}

/// Monomial coefficients of the unique polynomial of degree `< nodes.len()`
/// through the points `(nodes[i], values[i])`, by Newton divided differences.
fn univariate_coeffs(nodes: &[BigRational], values: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(nodes.len(), values.len(), "univariate_coeffs: node/value length mismatch");
    let n = nodes.len();
    let mut dd: Vec<BigRational> = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &nodes[i] - &nodes[i - level];
            dd[i] = num / den;
        }
    }
    // Horner expansion of the Newton form into monomial coefficients.
    let mut coeffs = alloc::vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        for i in (1..n).rev() {
            let prev = coeffs[i - 1].clone();
            let scaled = &coeffs[i] * &nodes[k];
            coeffs[i] = prev - scaled;
        }
        let scaled = &coeffs[0] * &nodes[k];
        coeffs[0] = &dd[k] - &scaled;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn qbinom_small_values() {
        // [4 2]_q = 1 + q + 2q^2 + q^3 + q^4
        let p = qbinom(4, 2);
        assert_eq!(p.to_string(), "1 + q + 2q^2 + q^3 + q^4");
        assert_eq!(qbinom(7, 0), QtPolynomial::one());
        assert_eq!(qbinom(7, 7), QtPolynomial::one());
        assert_eq!(qbinom(3, 5), QtPolynomial::zero());
    }

    #[test]
    fn qbinom_counts_at_one() {
        // Evaluating [a b]_q at q = 1 gives the ordinary binomial coefficient.
        let one = BigRational::one();
        assert_eq!(qbinom(6, 3).eval(&one, &one), rat(20, 1));
        assert_eq!(qbinom(10, 4).eval(&one, &one), rat(210, 1));
    }

    #[test]
    fn eval_is_exact() {
        // (q t) at (2/3, 3/5) = 2/5
        let p = QtPolynomial::monomial(1, 1, 1);
        assert_eq!(p.eval(&rat(2, 3), &rat(3, 5)), rat(2, 5));
    }

    #[test]
    fn ring_ops_agree_with_hand_expansion() {
        // (1 + q)(1 + t) = 1 + q + t + qt
        let a = &QtPolynomial::one() + &QtPolynomial::monomial(1, 0, 1);
        let b = &QtPolynomial::one() + &QtPolynomial::monomial(0, 1, 1);
        let prod = &a * &b;
        assert_eq!(prod.to_string(), "1 + q + t + qt");
        // Subtraction cancels to structural zero.
        assert!((&prod - &prod).is_zero());
    }

    #[test]
    fn display_signs_and_exponents() {
        let mut p = QtPolynomial::constant(-2);
        p.add_term(2, 3, 5);
        p.add_term(1, 0, -1);
        assert_eq!(p.to_string(), "-2 - q + 5q^2t^3");
        assert_eq!(QtPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = {
            let mut p = QtPolynomial::constant(3);
            p.add_term(2, 1, -7);
            p.add_term(0, 2, 1);
            p
        };
        let q = interpolate(|a, b| p.eval(a, b), 2, 2).expect("interpolation");
        assert_eq!(p, q);
    }

    #[test]
    fn interpolation_rejects_non_integer() {
        // f(q, t) = q/2 is not an integer polynomial.
        let err = interpolate(|a, _| a / rat(2, 1), 1, 0).unwrap_err();
        match err {
            InterpolateError::NonIntegerCoefficient { deg_q: 1, deg_t: 0, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
        let nodes = vec![rat(2, 1), rat(2, 1)];
        let err = interpolate_with_nodes(|_, _| BigRational::zero(), &nodes, &nodes[..1]).unwrap_err();
        assert_eq!(err, InterpolateError::DuplicateNode);
    }

    #[test]
    fn prime_nodes_are_primes() {
        let nodes = prime_nodes(6);
        let expect: Vec<BigRational> =
            [2, 3, 5, 7, 11, 13].iter().map(|&p| rat(p, 1)).collect();
        assert_eq!(nodes, expect);
    }
}
