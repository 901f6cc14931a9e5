//! The ring of cyclotomic integers `Z[ζ_N]` in the power basis modulo `Φ_N`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer polynomial, coefficients from degree 0 upwards.
pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division by a monic polynomial; panics on a nonzero remainder.
fn poly_div_monic(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    trim(&mut quot);
    quot
}

fn x_pow_minus_one(n: usize) -> IntPoly {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::from(-1);
    p[n] = BigInt::one();
    p
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn cyclotomic_table(n: usize) -> BTreeMap<usize, IntPoly> {
    let mut table: BTreeMap<usize, IntPoly> = BTreeMap::new();
    for d in divisors(n) {
        let mut p = x_pow_minus_one(d);
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            p = poly_div_monic(&p, &table[&e]);
        }
        table.insert(d, p);
    }
    table
}

/// `Φ_N`, by dividing `x^N - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: usize) -> IntPoly {
    assert!(n >= 1, "conductor must be positive");
    cyclotomic_table(n).remove(&n).unwrap()
}

/// Arithmetic context for one conductor `N`: `Φ_N` and the reduced powers
/// `ζ^0, …, ζ^{N-1}`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicRing {
    n: usize,
    phi: IntPoly,
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicRing {
    /// Builds the ring, checking `∏_{d|N} Φ_d = x^N - 1`.
    pub fn new(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::Domain("conductor must be positive".into()));
        }
        let table = cyclotomic_table(n);
        let product = table.values().fold(vec![BigInt::one()], |acc, p| poly_mul(&acc, p));
        if product != x_pow_minus_one(n) {
            return Err(Error::Internal(alloc::format!(
                "cyclotomic factorisation of x^{} - 1 failed",
                n
            )));
        }
        let phi = table[&n].clone();
        let degree = phi.len() - 1;
        let mut ring = CyclotomicRing {
            n,
            phi,
            powers: Vec::with_capacity(n),
        };
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..n {
            ring.powers.push(cur.clone());
            // multiply by x and reduce
            let mut next = vec![BigInt::zero(); degree + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            cur = ring.reduce(next);
        }
        Ok(Arc::new(ring))
    }

    pub fn conductor(&self) -> usize {
        self.n
    }

    /// `φ(N)`, the dimension of the power basis.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[BigInt] {
        &self.phi
    }

    /// Coordinates of `ζ^a`.
    pub fn zeta_power(&self, a: i64) -> &[BigInt] {
        &self.powers[a.rem_euclid(self.n as i64) as usize]
    }

    fn reduce(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        if p.len() > d {
            for top in (d..p.len()).rev() {
                let c = core::mem::take(&mut p[top]);
                if c.is_zero() {
                    continue;
                }
                for (i, f) in self.phi.iter().enumerate().take(d) {
                    p[top - d + i] -= &c * f;
                }
            }
        }
        p.resize(d, BigInt::zero());
        p
    }
}

/// Element of `Z[ζ_N]` as its `φ(N)` power-basis coordinates.
#[derive(Clone, Debug)]
pub struct CyclotomicInt {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(ring: &Arc<CyclotomicRing>) -> Self {
        Self {
            ring: ring.clone(),
            coeffs: vec![BigInt::zero(); ring.degree()],
        }
    }

    pub fn from_int(ring: &Arc<CyclotomicRing>, c: impl Into<BigInt>) -> Self {
        Self::zeta_pow(ring, 0).scale(&c.into())
    }

    /// `ζ_N^a`.
    pub fn zeta_pow(ring: &Arc<CyclotomicRing>, a: i64) -> Self {
        Self {
            ring: ring.clone(),
            coeffs: ring.zeta_power(a).to_vec(),
        }
    }

    /// Builds from coordinates of any length, reducing modulo `Φ_N`.
    pub fn from_poly(ring: &Arc<CyclotomicRing>, poly: Vec<BigInt>) -> Self {
        Self {
            ring: ring.clone(),
            coeffs: ring.reduce(poly),
        }
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring.n != other.ring.n {
            return Err(Error::Mismatch(alloc::format!(
                "cyclotomic integers of conductors {} and {}",
                self.ring.n,
                other.ring.n
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let prod = poly_mul(&self.coeffs, &other.coeffs);
        Ok(Self::from_poly(&self.ring, prod))
    }

    pub fn neg(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub(crate) fn add_scaled_power(&mut self, c: &BigInt, a: i64) {
        for (x, p) in self.coeffs.iter_mut().zip(self.ring.zeta_power(a)) {
            if !p.is_zero() {
                *x += c * p;
            }
        }
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.n == other.ring.n && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInt {}

/// Renders in the power basis with `z = ζ_N`, highest power first.
impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", abs)?;
                    }
                    f.write_str("z")?;
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_polynomial_examples() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_two() {
        let p = cyclotomic_polynomial(105);
        assert_eq!(p.len(), 49);
        assert!(p.contains(&BigInt::from(-2)));
    }

    #[test]
    fn factorisation_holds_up_to_24() {
        for n in 1..=24 {
            let ring = CyclotomicRing::new(n).unwrap();
            let phi_n = (1..=n)
                .filter(|k| num_integer::gcd(*k, n) == 1)
                .count();
            assert_eq!(ring.degree(), phi_n);
        }
    }

    #[test]
    fn multiplication_examples() {
        let r4 = CyclotomicRing::new(4).unwrap();
        let z = CyclotomicInt::zeta_pow(&r4, 1);
        assert_eq!(z.checked_mul(&z).unwrap(), CyclotomicInt::from_int(&r4, -1));
        let r3 = CyclotomicRing::new(3).unwrap();
        let z = CyclotomicInt::zeta_pow(&r3, 1);
        let expected = CyclotomicInt::from_poly(&r3, ints(&[-1, -1]));
        assert_eq!(z.checked_mul(&z).unwrap(), expected);
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..=24 {
            let ring = CyclotomicRing::new(n).unwrap();
            let z = CyclotomicInt::zeta_pow(&ring, 1);
            let mut acc = CyclotomicInt::from_int(&ring, 1);
            for k in 1..=n {
                acc = acc.checked_mul(&z).unwrap();
                assert_eq!(acc.is_zero(), false);
                assert_eq!(acc == CyclotomicInt::from_int(&ring, 1), k == n, "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn mismatched_conductors_error() {
        let a = CyclotomicInt::from_int(&CyclotomicRing::new(3).unwrap(), 1);
        let b = CyclotomicInt::from_int(&CyclotomicRing::new(4).unwrap(), 1);
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn rendering() {
        let r4 = CyclotomicRing::new(4).unwrap();
        let x = CyclotomicInt::from_int(&r4, 1).checked_sub(&CyclotomicInt::zeta_pow(&r4, 1)).unwrap();
        assert_eq!(x.to_string(), "-z + 1");
        assert_eq!(CyclotomicInt::zero(&r4).to_string(), "0");
        let r1 = CyclotomicRing::new(1).unwrap();
        assert_eq!(CyclotomicInt::from_int(&r1, 5).to_string(), "5");
    }
}
