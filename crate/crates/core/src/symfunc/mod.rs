//! Exact symmetric function engine at a fixed rational (q, t).
//!
//! Functions live one degree at a time as coefficient vectors over a chosen
//! basis. Conversions pass through monomial coordinates; the Hall pairing
//! passes through power sums; the Macdonald basis is grounded in its filling
//! formula and carries the delta operators diagonally. The tables that do
//! not depend on (q, t) can be shared between engines through [`checks::OraclePool`].

pub mod checks;
mod classical;
mod delta;
mod macdonald;
mod partition;

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_traits::{One, Zero};

use crate::qt::QtPolynomial;
use crate::{BigInt, BigRational};
use classical::{solve_rational, DegreeTables};

pub use delta::{cell_alphabet, Generator};
pub use macdonald::{macdonald_in_m, macdonald_in_m_by_content};
pub use partition::{partitions_of, Partition};

/// Default cap on the degree of anything the engine is asked to expand.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// Coefficient bases understood by the engine.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Basis {
    /// Monomial symmetric functions m.
    Monomial,
    /// Products of elementary generators e.
    Elementary,
    /// Products of complete homogeneous generators h.
    Homogeneous,
    /// Products of power sums p.
    PowerSum,
    /// Schur functions s.
    Schur,
    /// Modified Macdonald polynomials; coordinates depend on (q, t).
    Macdonald,
}

impl Basis {
    /// Short lowercase name, stable for serialization.
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Elementary => "elementary",
            Basis::Homogeneous => "homogeneous",
            Basis::PowerSum => "powersum",
            Basis::Schur => "schur",
            Basis::Macdonald => "macdonald",
        }
    }
}

/// Failure modes of the engine.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleError {
    /// A requested degree exceeds the configured bound.
    DegreeBound {
        /// Requested degree.
        degree: usize,
        /// Configured maximum.
        bound: usize,
    },
    /// The Macdonald elements are linearly dependent at this (q, t); the
    /// caller should resample the point.
    MacdonaldSingular {
        /// Degree whose transition matrix is singular.
        degree: usize,
    },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::DegreeBound { degree, bound } => {
                write!(f, "degree {degree} exceeds the configured bound {bound}")
            }
            OracleError::MacdonaldSingular { degree } => {
                write!(f, "Macdonald basis is singular at this point in degree {degree}; resample (q, t)")
            }
        }
    }
}

/// A homogeneous symmetric function: exact coefficients over one basis.
///
/// Coefficients are keyed by partitions of the degree; zero coefficients are
/// never stored. Macdonald coordinates are only meaningful relative to the
/// (q, t) of the engine that produced them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    /// Builds from explicit coefficients; keys must partition the degree.
    pub fn new(basis: Basis, degree: usize, coeffs: BTreeMap<Partition, BigRational>) -> Self {
        for p in coeffs.keys() {
            assert_eq!(p.size(), degree, "coefficient keyed by a partition of the degree");
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymFunc { degree, basis, coeffs }
    }

    /// The zero function of one degree.
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    /// A single basis element with coefficient 1.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, BigRational::one());
        SymFunc { degree, basis, coeffs }
    }

    /// The constant 1, as a degree-zero function.
    pub fn one() -> Self {
        Self::basis_element(Basis::Monomial, Partition::empty())
    }

    /// The elementary generator e_n (1 when n = 0).
    pub fn elementary(n: usize) -> Self {
        Self::basis_element(Basis::Elementary, Partition::single(n))
    }

    /// The homogeneous generator h_n (1 when n = 0).
    pub fn homogeneous(n: usize) -> Self {
        Self::basis_element(Basis::Homogeneous, Partition::single(n))
    }

    /// A product of homogeneous generators; zero factors drop out.
    pub fn homogeneous_product(factors: &[usize]) -> Self {
        let parts = factors
            .iter()
            .map(|&f| u8::try_from(f).expect("factor fits in u8"))
            .collect();
        Self::basis_element(Basis::Homogeneous, Partition::from_parts(parts))
    }

    /// The Schur function for one shape.
    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    /// Degree of the function.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Basis the coefficients refer to.
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// The stored coefficients (zero coefficients omitted).
    pub fn coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coeffs
    }

    /// The coefficient of one partition.
    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Whether all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis, self.degree);
        }
        let coeffs = self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)).collect();
        SymFunc { degree: self.degree, basis: self.basis, coeffs }
    }
}

/// Tables that do not depend on (q, t): classical expansions per degree and
/// the symbolic Macdonald coefficients. Shareable between engines.
#[derive(Default)]
struct Shared {
    classical: BTreeMap<usize, Rc<DegreeTables>>,
    mac_symbolic: BTreeMap<usize, Rc<Vec<Vec<QtPolynomial>>>>,
}

/// The engine: conversion tables and Macdonald data at one rational (q, t).
pub struct Oracle {
    q: BigRational,
    t: BigRational,
    bound: usize,
    shared: Rc<RefCell<Shared>>,
    mac_numeric: BTreeMap<usize, Rc<Vec<Vec<BigRational>>>>,
}

impl Oracle {
    /// Engine at (q, t) with the default degree bound.
    pub fn new(q: BigRational, t: BigRational) -> Self {
        Self::with_bound(q, t, DEFAULT_DEGREE_BOUND)
    }

    /// Engine at (q, t) with an explicit degree bound.
    pub fn with_bound(q: BigRational, t: BigRational, bound: usize) -> Self {
        Self::with_shared(q, t, bound, Rc::new(RefCell::new(Shared::default())))
    }

    fn with_shared(q: BigRational, t: BigRational, bound: usize, shared: Rc<RefCell<Shared>>) -> Self {
        Oracle { q, t, bound, shared, mac_numeric: BTreeMap::new() }
    }

    /// The q of the context.
    pub fn q(&self) -> &BigRational {
        &self.q
    }

    /// The t of the context.
    pub fn t(&self) -> &BigRational {
        &self.t
    }

    /// The configured degree bound.
    pub fn bound(&self) -> usize {
        self.bound
    }

    fn tables(&self, degree: usize) -> Result<Rc<DegreeTables>, OracleError> {
        if degree > self.bound {
            return Err(OracleError::DegreeBound { degree, bound: self.bound });
        }
        let mut shared = self.shared.borrow_mut();
        Ok(shared
            .classical
            .entry(degree)
            .or_insert_with(|| Rc::new(DegreeTables::build(degree)))
            .clone())
    }

    fn mac(&mut self, degree: usize) -> Result<Rc<Vec<Vec<BigRational>>>, OracleError> {
        if let Some(rows) = self.mac_numeric.get(&degree) {
            return Ok(rows.clone());
        }
        let tables = self.tables(degree)?;
        let symbolic = {
            let mut shared = self.shared.borrow_mut();
            shared
                .mac_symbolic
                .entry(degree)
                .or_insert_with(|| Rc::new(macdonald::macdonald_in_m(&tables.parts)))
                .clone()
        };
        let numeric: Vec<Vec<BigRational>> = symbolic
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&self.q, &self.t)).collect())
            .collect();
        let numeric = Rc::new(numeric);
        self.mac_numeric.insert(degree, numeric.clone());
        Ok(numeric)
    }

    /// Coefficients on the monomial basis, in the partition order of the
    /// degree's table.
    fn to_monomial_vec(&mut self, f: &SymFunc) -> Result<Vec<BigRational>, OracleError> {
        let tables = self.tables(f.degree)?;
        let count = tables.parts.len();
        let mut v = alloc::vec![BigRational::zero(); count];
        match f.basis {
            Basis::Monomial => {
                for (p, c) in &f.coeffs {
                    v[tables.index[p]] = c.clone();
                }
            }
            Basis::Elementary | Basis::Homogeneous | Basis::PowerSum | Basis::Schur => {
                let rows = match f.basis {
                    Basis::Elementary => &tables.e_in_m,
                    Basis::Homogeneous => &tables.h_in_m,
                    Basis::PowerSum => &tables.p_in_m,
                    _ => &tables.s_in_m,
                };
                for (p, c) in &f.coeffs {
                    for (slot, entry) in v.iter_mut().zip(&rows[tables.index[p]]) {
                        *slot += c * BigRational::from(entry.clone());
                    }
                }
            }
            Basis::Macdonald => {
                let rows = self.mac(f.degree)?;
                for (p, c) in &f.coeffs {
                    for (slot, entry) in v.iter_mut().zip(&rows[tables.index[p]]) {
                        *slot += c * entry;
                    }
                }
            }
        }
        Ok(v)
    }

    /// Solves for coefficients on the target basis from monomial coordinates.
    fn from_monomial_vec(
        &mut self,
        v: Vec<BigRational>,
        target: Basis,
        degree: usize,
    ) -> Result<BTreeMap<Partition, BigRational>, OracleError> {
        let tables = self.tables(degree)?;
        let solved = match target {
            Basis::Monomial => v,
            Basis::Elementary | Basis::Homogeneous | Basis::PowerSum | Basis::Schur => {
                let rows = match target {
                    Basis::Elementary => &tables.e_in_m,
                    Basis::Homogeneous => &tables.h_in_m,
                    Basis::PowerSum => &tables.p_in_m,
                    _ => &tables.s_in_m,
                };
                let a = transposed_rational(rows.len(), |i, j| BigRational::from(rows[j][i].clone()));
                solve_rational(a, v).expect("classical transition matrices are invertible")
            }
            Basis::Macdonald => {
                let rows = self.mac(degree)?;
                let a = transposed_rational(rows.len(), |i, j| rows[j][i].clone());
                solve_rational(a, v).ok_or(OracleError::MacdonaldSingular { degree })?
            }
        };
        Ok(tables
            .parts
            .iter()
            .zip(solved)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c))
            .collect())
    }

    /// Re-expresses a function on another basis, exactly.
    pub fn convert(&mut self, f: &SymFunc, target: Basis) -> Result<SymFunc, OracleError> {
        if f.basis == target {
            return Ok(f.clone());
        }
        let v = self.to_monomial_vec(f)?;
        let coeffs = self.from_monomial_vec(v, target, f.degree)?;
        Ok(SymFunc { degree: f.degree, basis: target, coeffs })
    }

    /// The Hall pairing, through power sums: p_lambda pairs to z_lambda with
    /// itself and to 0 with every other power sum. Mixed degrees pair to 0.
    pub fn hall(&mut self, f: &SymFunc, g: &SymFunc) -> Result<BigRational, OracleError> {
        if f.degree != g.degree {
            return Ok(BigRational::zero());
        }
        let fp = self.convert(f, Basis::PowerSum)?;
        let gp = self.convert(g, Basis::PowerSum)?;
        let tables = self.tables(f.degree)?;
        let mut acc = BigRational::zero();
        for (p, c) in &fp.coeffs {
            let d = gp.coeff(p);
            if !d.is_zero() {
                let z = BigRational::from(tables.z[tables.index[p]].clone());
                acc += c * d * z;
            }
        }
        Ok(acc)
    }

    /// The Macdonald element for one shape, on the monomial basis.
    pub fn macdonald(&mut self, mu: &Partition) -> Result<SymFunc, OracleError> {
        let degree = mu.size();
        let rows = self.mac(degree)?;
        let tables = self.tables(degree)?;
        let row = &rows[tables.index[mu]];
        let coeffs = tables
            .parts
            .iter()
            .zip(row)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        Ok(SymFunc { degree, basis: Basis::Monomial, coeffs })
    }

    /// Substitutes r geometrically spaced copies of the alphabet: on power
    /// sums, p_k picks up the factor 1 + q^k + ... + q^((r-1)k). With r = 0
    /// this empties the alphabet; positive-degree functions vanish.
    pub fn pleth_scale(&mut self, f: &SymFunc, r: usize) -> Result<SymFunc, OracleError> {
        let fp = self.convert(f, Basis::PowerSum)?;
        let mut scaled = BTreeMap::new();
        for (lambda, c) in &fp.coeffs {
            let mut factor = BigRational::one();
            for &part in lambda.parts() {
                let step = rational_power(&self.q, part as usize);
                let mut geometric = BigRational::zero();
                let mut power = BigRational::one();
                for _ in 0..r {
                    geometric += &power;
                    power *= &step;
                }
                factor *= geometric;
            }
            let value = c * factor;
            if !value.is_zero() {
                scaled.insert(lambda.clone(), value);
            }
        }
        let result = SymFunc { degree: f.degree, basis: Basis::PowerSum, coeffs: scaled };
        self.convert(&result, f.basis)
    }

    /// The delta operator for one generator: diagonal on the Macdonald
    /// basis, scaling the element of shape mu by the generator evaluated on
    /// the cell alphabet of mu.
    pub fn delta(&mut self, generator: Generator, g: &SymFunc) -> Result<SymFunc, OracleError> {
        self.delta_impl(generator, g, false)
    }

    /// The primed delta operator: the generator is evaluated on the cell
    /// alphabet minus one.
    pub fn delta_prime(&mut self, generator: Generator, g: &SymFunc) -> Result<SymFunc, OracleError> {
        self.delta_impl(generator, g, true)
    }

    fn delta_impl(&mut self, generator: Generator, g: &SymFunc, primed: bool) -> Result<SymFunc, OracleError> {
        let degree = g.degree;
        let v = self.to_monomial_vec(g)?;
        let mac_coords = self.from_monomial_vec(v, Basis::Macdonald, degree)?;
        let mut scaled = BTreeMap::new();
        for (mu, c) in mac_coords {
            let factor = delta::eigenvalue(generator, &mu, &self.q, &self.t, primed);
            let value = c * factor;
            if !value.is_zero() {
                scaled.insert(mu, value);
            }
        }
        let result = SymFunc { degree, basis: Basis::Macdonald, coeffs: scaled };
        self.convert(&result, Basis::Monomial)
    }
}

fn transposed_rational(
    size: usize,
    entry: impl Fn(usize, usize) -> BigRational,
) -> Vec<Vec<BigRational>> {
    (0..size).map(|i| (0..size).map(|j| entry(i, j)).collect()).collect()
}

fn rational_power(x: &BigRational, exp: usize) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..exp {
        out *= x;
    }
    out
}

/// Convenience: an integer as an exact rational.
pub fn rational(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn oracle() -> Oracle {
        Oracle::new(rational(7), rational(3))
    }

    fn part(parts: &[u8]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    #[test]
    fn conversions_round_trip() {
        let mut o = oracle();
        let bases = [
            Basis::Monomial,
            Basis::Elementary,
            Basis::Homogeneous,
            Basis::PowerSum,
            Basis::Schur,
            Basis::Macdonald,
        ];
        for degree in 0..=4 {
            for lambda in partitions_of(degree) {
                let f = SymFunc::schur(lambda);
                for &b in &bases {
                    let there = o.convert(&f, b).unwrap();
                    let back = o.convert(&there, Basis::Schur).unwrap();
                    assert_eq!(back, f, "round trip through {b:?}");
                }
            }
        }
    }

    #[test]
    fn classical_expansions() {
        let mut o = oracle();
        // s_21 = h_21 - h_3 in the homogeneous basis.
        let s21 = o.convert(&SymFunc::schur(part(&[2, 1])), Basis::Homogeneous).unwrap();
        assert_eq!(s21.coeff(&part(&[2, 1])), rational(1));
        assert_eq!(s21.coeff(&part(&[3])), rational(-1));
        // e_2 = (p_11 - p_2) / 2.
        let e2 = o.convert(&SymFunc::elementary(2), Basis::PowerSum).unwrap();
        assert_eq!(e2.coeff(&part(&[1, 1])), BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(e2.coeff(&part(&[2])), BigRational::new(BigInt::from(-1), BigInt::from(2)));
    }

    #[test]
    fn hall_pairing_pins() {
        let mut o = oracle();
        // <p_2, p_2> = 2; <h_lambda, m_mu> is the Kronecker delta.
        let p2 = SymFunc::basis_element(Basis::PowerSum, part(&[2]));
        assert_eq!(o.hall(&p2, &p2).unwrap(), rational(2));
        let h2 = SymFunc::homogeneous(2);
        let m2 = SymFunc::basis_element(Basis::Monomial, part(&[2]));
        let m11 = SymFunc::basis_element(Basis::Monomial, part(&[1, 1]));
        assert_eq!(o.hall(&h2, &m2).unwrap(), rational(1));
        assert_eq!(o.hall(&h2, &m11).unwrap(), rational(0));
        let h11 = SymFunc::homogeneous_product(&[1, 1]);
        assert_eq!(o.hall(&h11, &m11).unwrap(), rational(1));
        let e3 = SymFunc::elementary(3);
        assert_eq!(o.hall(&e3, &SymFunc::schur(part(&[1, 1, 1]))).unwrap(), rational(1));
        assert_eq!(o.hall(&e3, &SymFunc::schur(part(&[2, 1]))).unwrap(), rational(0));
        // Mixed degrees pair to zero.
        assert_eq!(o.hall(&h2, &e3).unwrap(), rational(0));
        // Degree zero pairs constants by multiplication.
        let c = SymFunc::one().scaled(&rational(5));
        assert_eq!(o.hall(&c, &c).unwrap(), rational(25));
    }

    #[test]
    fn schur_orthonormality_small() {
        let mut o = oracle();
        for degree in 0..=4 {
            let parts = partitions_of(degree);
            for a in &parts {
                for b in &parts {
                    let want = if a == b { rational(1) } else { rational(0) };
                    let got = o
                        .hall(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone()))
                        .unwrap();
                    assert_eq!(got, want, "<s_{a}, s_{b}>");
                }
            }
        }
    }

    #[test]
    fn macdonald_pins_at_a_point() {
        let mut o = oracle();
        // Row shape: s_2 + q s_11; column shape: s_2 + t s_11.
        let row = o.macdonald(&part(&[2])).unwrap();
        let row_s = o.convert(&row, Basis::Schur).unwrap();
        assert_eq!(row_s.coeff(&part(&[2])), rational(1));
        assert_eq!(row_s.coeff(&part(&[1, 1])), rational(7));
        let col = o.macdonald(&part(&[1, 1])).unwrap();
        let col_s = o.convert(&col, Basis::Schur).unwrap();
        assert_eq!(col_s.coeff(&part(&[1, 1])), rational(3));
        // (H_2 - H_11) / (q - t) = e_2.
        let mut diff = BTreeMap::new();
        diff.insert(part(&[2]), BigRational::one());
        diff.insert(part(&[1, 1]), -BigRational::one());
        let numerator = SymFunc::new(Basis::Macdonald, 2, diff);
        let m = o.convert(&numerator, Basis::Elementary).unwrap();
        let scale = (rational(7) - rational(3)).recip();
        assert_eq!(m.scaled(&scale), SymFunc::elementary(2));
    }

    #[test]
    fn delta_pins() {
        let mut o = oracle();
        // <Delta_e2 e_2, s_11> = q + t.
        let d = o.delta(Generator::Elementary(2), &SymFunc::elementary(2)).unwrap();
        let paired = o.hall(&d, &SymFunc::schur(part(&[1, 1]))).unwrap();
        assert_eq!(paired, rational(7 + 3));
        // Delta_h0 and Delta'_e0 are the identity.
        let f = SymFunc::schur(part(&[2, 1]));
        let fm = o.convert(&f, Basis::Monomial).unwrap();
        assert_eq!(o.delta(Generator::Homogeneous(0), &f).unwrap(), fm);
        assert_eq!(o.delta_prime(Generator::Elementary(0), &f).unwrap(), fm);
        // Delta'_{e_-1} fixes degree zero and kills positive degrees.
        let one = SymFunc::one();
        assert_eq!(o.delta_prime(Generator::Elementary(-1), &one).unwrap(), one);
        assert!(o.delta_prime(Generator::Elementary(-1), &f).unwrap().is_zero());
    }

    #[test]
    fn pleth_scale_small_cases() {
        let mut o = oracle();
        // r = 1 is the identity substitution.
        let e2 = SymFunc::elementary(2);
        assert_eq!(o.pleth_scale(&e2, 1).unwrap(), e2);
        // r = 0 empties the alphabet.
        assert!(o.pleth_scale(&e2, 0).unwrap().is_zero());
        let one = SymFunc::one();
        assert_eq!(o.pleth_scale(&one, 0).unwrap(), one);
        // e_1 with r copies scales by 1 + q + ... + q^(r-1).
        let e1 = SymFunc::elementary(1);
        let scaled = o.pleth_scale(&e1, 3).unwrap();
        assert_eq!(scaled, e1.scaled(&rational(1 + 7 + 49)));
        // e_2 at r = 2, checked against the power sum route directly.
        let direct = o.pleth_scale(&e2, 2).unwrap();
        let p = o.convert(&e2, Basis::PowerSum).unwrap();
        let mut expect = BTreeMap::new();
        for (lambda, c) in p.coeffs() {
            let factor: BigRational = lambda
                .parts()
                .iter()
                .map(|&k| rational(1) + rational_power(&rational(7), k as usize))
                .product();
            expect.insert(lambda.clone(), c * factor);
        }
        let expect = SymFunc::new(Basis::PowerSum, 2, expect);
        assert_eq!(o.convert(&direct, Basis::PowerSum).unwrap(), expect);
    }

    #[test]
    fn degree_bound_is_enforced() {
        let mut o = Oracle::with_bound(rational(2), rational(3), 3);
        let err = o.convert(&SymFunc::elementary(4), Basis::Monomial).unwrap_err();
        assert_eq!(err, OracleError::DegreeBound { degree: 4, bound: 3 });
    }

    #[test]
    fn singular_context_is_reported() {
        // At q = t the row and column Macdonald elements of degree 2 agree.
        let mut o = Oracle::new(rational(5), rational(5));
        let err = o.delta(Generator::Elementary(1), &SymFunc::elementary(2)).unwrap_err();
        assert_eq!(err, OracleError::MacdonaldSingular { degree: 2 });
    }

    #[test]
    fn alphabet_matches_shifted_enumeration() {
        // B_(2,2) = 1 + q + t + qt.
        let b = cell_alphabet(&part(&[2, 2]));
        let expect = {
            let mut p = QtPolynomial::one();
            p.add_term(1, 0, 1);
            p.add_term(0, 1, 1);
            p.add_term(1, 1, 1);
            p
        };
        assert_eq!(b.to_string(), expect.to_string());
    }

    #[test]
    fn shared_tables_are_reused() {
        let shared = Rc::new(RefCell::new(Shared::default()));
        let mut a = Oracle::with_shared(rational(2), rational(3), 8, shared.clone());
        let mut b = Oracle::with_shared(rational(5), rational(11), 8, shared.clone());
        let f = SymFunc::elementary(3);
        a.convert(&f, Basis::Schur).unwrap();
        b.convert(&f, Basis::Schur).unwrap();
        assert_eq!(shared.borrow().classical.len(), 1);
        let va = a.delta(Generator::Elementary(1), &f).unwrap();
        let vb = b.delta(Generator::Elementary(1), &f).unwrap();
        // Same symbolic table, different numeric contexts.
        assert_eq!(shared.borrow().mac_symbolic.len(), 1);
        assert_ne!(va, vb);
    }
}
