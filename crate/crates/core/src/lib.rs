//! Exact q,t-combinatorics of reduced parallelogram polyominoes and
//! partially labelled Dyck paths.
//!
//! The crate computes, in exact arithmetic only, the classical statistics of
//! these lattice objects (area, bounce, dinv, pmaj and their decorated
//! variants), the bijections that transport the statistics between the
//! families, a q,t-recursion for the decorated enumerators, and a symmetric
//! function engine (monomial/elementary/homogeneous/powersum/Schur bases plus
//! the modified Macdonald basis at a fixed rational point) strong enough to
//! verify the scalar-product identities these enumerators satisfy.
//!
//! Everything is `no_std` compatible; only `alloc` is required. There are no
//! floating point numbers anywhere: coefficients are big integers and big
//! rationals throughout.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod bijections;
pub mod dyck;
pub mod enumerators;
pub mod polyomino;
pub mod qt;
pub mod selftest;
pub mod statistics;
pub mod symfunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use polyomino::{AreaWord, DecoratedPolyomino, LabelledPolyomino, Letter, ReducedPolyomino, Step};
pub use qt::{qbinom, QtPolynomial};
