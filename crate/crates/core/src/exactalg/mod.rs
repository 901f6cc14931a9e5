//! Exact arithmetic: Laurent polynomials in `q, Q_0, …, Q_{l-1}`, cyclotomic
//! integers and the specialisations between them.

mod cyclotomic;
mod factored;
mod laurent;
mod specialise;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInt, CyclotomicRing, IntPoly};
pub(crate) use factored::FactoredLaurent;
pub use laurent::{Monomial, MultiLaurent};
pub use specialise::{CycloLaurent, SpecMap};
