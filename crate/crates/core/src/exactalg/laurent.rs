use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponent vector `(e_q, e_{Q_0}, …, e_{Q_{l-1}})`.
///
/// Ordered graded-lexicographically: total degree first, then the exponents
/// from `q` onwards, larger exponent meaning larger monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| -a).collect())
    }

    /// Whether the monomial is greater than `1` in the monomial order.
    pub fn is_positive(&self) -> bool {
        self.cmp(&Monomial::one(self.0.len())) == Ordering::Greater
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in `q, Q_0, …, Q_{l-1}` with big integer coefficients.
///
/// Terms are kept in a map ordered by [`Monomial`] and never store a zero
/// coefficient, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiLaurent {
    l: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiLaurent {
    pub fn zero(l: usize) -> Self {
        Self {
            l,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(l: usize) -> Self {
        Self::constant(l, 1)
    }

    pub fn constant(l: usize, c: impl Into<BigInt>) -> Self {
        Self::term(l, Monomial::one(l + 1), c)
    }

    /// `c · m`.
    pub fn term(l: usize, m: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(m.0.len(), l + 1, "monomial has the wrong number of variables");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { l, terms }
    }

    /// `q^a`.
    pub fn q_pow(l: usize, a: i64) -> Self {
        let mut e = alloc::vec![0; l + 1];
        e[0] = a;
        Self::term(l, Monomial(e), 1)
    }

    /// `Q_j^a`.
    pub fn big_q_pow(l: usize, j: usize, a: i64) -> Self {
        assert!(j < l, "Q index out of range");
        let mut e = alloc::vec![0; l + 1];
        e[j + 1] = a;
        Self::term(l, Monomial(e), 1)
    }

    /// Builds from `(exponents, coefficient)` pairs in any order, merging
    /// repeated monomials.
    pub fn from_terms<I, C>(l: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(l);
        for (e, c) in terms {
            assert_eq!(e.len(), l + 1, "monomial has the wrong number of variables");
            out.add_term(Monomial(e), c.into());
        }
        out
    }

    /// Number of `Q` variables.
    pub fn level(&self) -> usize {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn trailing_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.l != other.l {
            return Err(Error::Mismatch(alloc::format!(
                "polynomials in {} and {} Q-variables",
                self.l,
                other.l
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.l);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by `c · m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.l);
        }
        Self {
            l: self.l,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.l);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Componentwise minimum of the exponents of all terms.
    fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = it.next().expect("nonzero polynomial").clone();
        it.fold(first, |acc, m| {
            Monomial(acc.0.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect())
        })
    }

    /// Exact quotient `self / den`.
    ///
    /// Both operands are first multiplied by a monomial so that every
    /// variable has minimal exponent zero; a Laurent quotient then has to be
    /// an ordinary polynomial, and plain multivariate division in the graded
    /// lexicographic order terminates. Any leading term that cannot be
    /// divided means the quotient is not a Laurent polynomial.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.l));
        }
        let shift_num = self.min_exponents();
        let shift_den = den.min_exponents();
        let mut rem = self.mul_term(&shift_num.inverse(), &BigInt::one());
        let den0 = den.mul_term(&shift_den.inverse(), &BigInt::one());
        let (lead_m, lead_c) = den0.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quotient = Self::zero(self.l);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lead_m);
            if qm.0.iter().any(|&e| e < 0) {
                return Err(Error::InexactDivision);
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (dm, dc) in &den0.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient.mul_term(&shift_num.div(&shift_den), &BigInt::one()))
    }
}

impl Add for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_add(rhs).expect("MultiLaurent addition")
    }
}

impl Sub for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_sub(rhs).expect("MultiLaurent subtraction")
    }
}

impl Mul for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.try_mul(rhs).expect("MultiLaurent multiplication")
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent {
            l: self.l,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Canonical rendering: terms in decreasing monomial order, e.g.
/// `q^2*Q0 - Q1 + 1`.
impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{}", abs)?;
                first = false;
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if v == 0 {
                    f.write_str("q")?;
                } else {
                    write!(f, "Q{}", v - 1)?;
                }
                if e != 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn q(l: usize) -> MultiLaurent {
        MultiLaurent::q_pow(l, 1)
    }

    #[test]
    fn ring_examples() {
        let one = MultiLaurent::one(1);
        let a = &q(1) + &one;
        let b = &q(1) - &one;
        assert_eq!(&a * &b, &MultiLaurent::q_pow(1, 2) - &one);
        assert!((&a + &(-&a)).is_zero());
        let x = &MultiLaurent::q_pow(1, -1) * &MultiLaurent::big_q_pow(1, 0, 1);
        let y = &MultiLaurent::q_pow(1, 1) * &MultiLaurent::big_q_pow(1, 0, -1);
        assert_eq!(&x * &y, one);
    }

    #[test]
    fn mismatched_levels_error() {
        assert!(MultiLaurent::one(1).try_add(&MultiLaurent::one(2)).is_err());
        assert!(MultiLaurent::one(1).try_mul(&MultiLaurent::one(2)).is_err());
        assert!(MultiLaurent::one(1).exact_div(&MultiLaurent::one(2)).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let l = 2;
        let q2q0 = MultiLaurent::from_terms(l, vec![(vec![2, 1, 0], 1), (vec![0, 0, 1], -1)]);
        let qq0 = MultiLaurent::from_terms(l, vec![(vec![1, 1, 0], 1), (vec![0, 0, 1], -1)]);
        let prod = &q2q0 * &qq0;
        assert_eq!(prod.exact_div(&qq0).unwrap(), q2q0);
        assert_eq!(q2q0.exact_div(&MultiLaurent::one(l)).unwrap(), q2q0);

        let one = MultiLaurent::one(0);
        let num = &MultiLaurent::q_pow(0, 2) - &one;
        let den = &MultiLaurent::q_pow(0, 1) - &one;
        assert_eq!(num.exact_div(&den).unwrap(), &MultiLaurent::q_pow(0, 1) + &one);
    }

    #[test]
    fn inexact_division_is_reported() {
        let one = MultiLaurent::one(0);
        let num = &MultiLaurent::q_pow(0, 2) + &one;
        let den = &MultiLaurent::q_pow(0, 1) - &one;
        assert_eq!(num.exact_div(&den), Err(Error::InexactDivision));
        assert_eq!(num.exact_div(&MultiLaurent::zero(0)), Err(Error::DivisionByZero));
        let two = MultiLaurent::constant(0, 2);
        assert_eq!(one.exact_div(&two), Err(Error::InexactDivision));
    }

    #[test]
    fn laurent_division_with_negative_exponents() {
        // (q^-1 Q0 - 1)(q^2 - Q0^-1) / (q^2 - Q0^-1)
        let a = MultiLaurent::from_terms(1, vec![(vec![-1, 1], 1), (vec![0, 0], -1)]);
        let b = MultiLaurent::from_terms(1, vec![(vec![2, 0], 1), (vec![0, -1], -1)]);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
    }

    #[test]
    fn rendering() {
        let f = MultiLaurent::from_terms(
            2,
            vec![(vec![0, 0, 0], 1), (vec![2, 1, 0], 1), (vec![0, 0, 1], -1)],
        );
        assert_eq!(f.to_string(), "q^2*Q0 - Q1 + 1");
        assert_eq!(MultiLaurent::zero(1).to_string(), "0");
        assert_eq!(MultiLaurent::one(1).to_string(), "1");
        let g = MultiLaurent::from_terms(1, vec![(vec![-1, 0], -3), (vec![0, 2], 1)]);
        assert_eq!(g.to_string(), "Q0^2 - 3*q^-1");
        assert_eq!((-&MultiLaurent::one(0)).to_string(), "-1");
    }

    #[test]
    fn monomial_order_is_graded() {
        let a = Monomial::new(vec![0, 2]);
        let b = Monomial::new(vec![1, 0]);
        assert!(a > b);
        assert!(Monomial::new(vec![1, -1]).is_positive());
        assert!(!Monomial::new(vec![-1, 1]).is_positive());
        assert!(!Monomial::one(2).is_positive());
    }
}
