use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::cyclotomic::{CyclotomicInt, CyclotomicRing};
use super::laurent::MultiLaurent;
use crate::{Error, Result};

/// Laurent polynomial in one variable `u` over `Z[ζ_N]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloLaurent {
    ring: Arc<CyclotomicRing>,
    terms: BTreeMap<i64, CyclotomicInt>,
}

impl CycloLaurent {
    pub fn zero(ring: &Arc<CyclotomicRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `c · u^k`.
    pub fn monomial(c: CyclotomicInt, k: i64) -> Self {
        let mut out = Self::zero(c.ring());
        if !c.is_zero() {
            out.terms.insert(k, c);
        }
        out
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms by increasing `u`-exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &CyclotomicInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Least `u`-exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Result<i64> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or_else(|| Error::Domain("valuation of zero".into()))
    }

    /// The coefficient of `u^0`.
    pub fn constant_term(&self) -> CyclotomicInt {
        self.terms
            .get(&0)
            .cloned()
            .unwrap_or_else(|| CyclotomicInt::zero(&self.ring))
    }

    fn insert(&mut self, k: i64, c: CyclotomicInt) -> Result<()> {
        let sum = match self.terms.remove(&k) {
            Some(old) => old.checked_add(&c)?,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
        Ok(())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring.conductor() != other.ring.conductor() {
            return Err(Error::Mismatch(alloc::format!(
                "conductors {} and {}",
                self.ring.conductor(),
                other.ring.conductor()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone())?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.ring);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.insert(ka + kb, ca.checked_mul(cb)?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CycloLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let nonzero = c.coeffs().iter().filter(|x| !x.is_zero()).count();
            match (*k, nonzero > 1) {
                (0, true) => write!(f, "({})", c)?,
                (0, false) => write!(f, "{}", c)?,
                (1, true) => write!(f, "({})*u", c)?,
                (1, false) => write!(f, "{}*u", c)?,
                (k, true) => write!(f, "({})*u^{}", c, k)?,
                (k, false) => write!(f, "{}*u^{}", c, k)?,
            }
        }
        Ok(())
    }
}

/// A ring homomorphism `Z[q^±, Q_0^±, …] → Z[ζ_N][u^±]` given on the
/// generators: each variable goes to `ζ_N^a u^b`.
#[derive(Clone, Debug)]
pub struct SpecMap {
    ring: Arc<CyclotomicRing>,
    q: (i64, i64),
    big_q: Vec<(i64, i64)>,
}

impl SpecMap {
    /// `q ↦ ζ^{q.0} u^{q.1}`, `Q_j ↦ ζ^{big_q[j].0} u^{big_q[j].1}`.
    pub fn new(ring: Arc<CyclotomicRing>, q: (i64, i64), big_q: Vec<(i64, i64)>) -> Self {
        Self { ring, q, big_q }
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn level(&self) -> usize {
        self.big_q.len()
    }

    /// Image of a monomial as `(ζ-exponent, u-exponent)`.
    pub fn image_of(&self, exponents: &[i64]) -> (i64, i64) {
        let mut a = exponents[0] * self.q.0;
        let mut b = exponents[0] * self.q.1;
        for (e, (ja, jb)) in exponents[1..].iter().zip(&self.big_q) {
            a += e * ja;
            b += e * jb;
        }
        (a.rem_euclid(self.ring.conductor() as i64), b)
    }

    pub fn specialise(&self, f: &MultiLaurent) -> Result<CycloLaurent> {
        if f.level() != self.level() {
            return Err(Error::Mismatch(alloc::format!(
                "polynomial in {} Q-variables, specialisation for {}",
                f.level(),
                self.level()
            )));
        }
        let mut buckets: BTreeMap<i64, CyclotomicInt> = BTreeMap::new();
        for (m, c) in f.terms() {
            let (a, b) = self.image_of(m.exponents());
            buckets
                .entry(b)
                .or_insert_with(|| CyclotomicInt::zero(&self.ring))
                .add_scaled_power(c, a);
        }
        buckets.retain(|_, c| !c.is_zero());
        Ok(CycloLaurent {
            ring: self.ring.clone(),
            terms: buckets,
        })
    }
}
