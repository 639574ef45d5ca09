//! Exact-algebra engine for 2-generator quasi-cyclic codes over GF(4).
//!
//! The crate builds index-2 quasi-cyclic codes from a pair of divisor
//! polynomials of xⁿ−1 and a mixing polynomial ν, verifies Hermitian
//! dual-containment by two independent routes, computes true minimum
//! distances by Gray-code and information-set enumeration, and derives
//! binary quantum code parameters via the Hermitian construction and the
//! standard propagation rules.
//!
//! Modules follow the pipeline:
//!
//! - [`gf4`], [`linalg`]: exact field and matrix arithmetic;
//! - [`poly`]: F₄[x]/(xⁿ−1), the coefficient-string notation, factorization
//!   of xⁿ−1;
//! - [`cosets`]: 4-cyclotomic cosets and defining sets;
//! - [`cyclic`]: cyclic codes, check polynomials, Hermitian dual generators,
//!   circulants;
//! - [`qc2`]: the two-generator construction, its dual, and dual-containment
//!   verdicts;
//! - [`distance`]: minimum distances, weight enumerators, the dual-enumerator
//!   transform;
//! - [`quantum`]: quantum parameters, propagation closure, records
//!   comparison.

pub mod cosets;
pub mod cyclic;
pub mod distance;
pub mod error;
pub mod gf4;
mod gf4ext;
pub mod linalg;
pub mod poly;
pub mod qc2;
pub mod quantum;

pub use error::{Error, Result};
