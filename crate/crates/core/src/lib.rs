//! Exact computations for Ariki-Koike algebras of type `G(l,1,n)` and
//! cyclotomic Hecke algebras of type `G(l,p,n)`.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised as:
//!
//! * [`combinatorics`]: partitions, multipartitions, generalised hooks,
//!   shifted symbols and the two combinatorial a-value routes.
//! * [`exactalg`]: multivariate Laurent polynomials over big integers,
//!   cyclotomic integers and specialisation maps.
//! * [`schur`]: the three Schur element formulas, the supporting identities,
//!   semisimplicity and defect-0 criteria, and the valuation a-value.
//! * [`basicset`]: the Dipper-Mathas reduction, Uglov multipartitions via the
//!   Fock space crystal, and canonical basic sets for `G(l,1,n)` and
//!   `G(l,p,n)`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod basicset;
pub mod combinatorics;
mod error;
pub mod exactalg;
pub mod schur;

pub use error::{Error, Result};

/// Exact rational number used for charges, symbols and a-values.
pub type Rational = num_rational::Ratio<i64>;
