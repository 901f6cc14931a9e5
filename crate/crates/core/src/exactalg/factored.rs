//! Products and quotients of unit binomials kept in factored form.
//!
//! Every factor `m1 - m2` with unit coefficients is normalised to
//! `±m · (x - 1)` with `x > 1` in the monomial order, so that syntactically
//! equal factors in a numerator and a denominator cancel before anything is
//! expanded. Whatever survives is expanded and divided exactly.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::laurent::{Monomial, MultiLaurent};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct FactoredLaurent {
    l: usize,
    negative: bool,
    monomial: Monomial,
    binomials: BTreeMap<Monomial, i64>,
}

impl FactoredLaurent {
    pub fn one(l: usize) -> Self {
        Self {
            l,
            negative: false,
            monomial: Monomial::one(l + 1),
            binomials: BTreeMap::new(),
        }
    }

    pub fn negate_if(&mut self, cond: bool) {
        self.negative ^= cond;
    }

    pub fn mul_monomial(&mut self, m: &Monomial) {
        self.monomial = self.monomial.mul(m);
    }

    fn bump(&mut self, x: Monomial, by: i64) {
        let e = self.binomials.entry(x.clone()).or_insert(0);
        *e += by;
        if *e == 0 {
            self.binomials.remove(&x);
        }
    }

    /// Multiplies by `(a - b)^power` (negative powers divide).
    pub fn mul_difference(&mut self, a: &Monomial, b: &Monomial, power: i64) -> Result<()> {
        if a == b {
            return Err(Error::Domain(alloc::format!(
                "factor {:?} - {:?} is zero",
                a.exponents(),
                b.exponents()
            )));
        }
        // a - b = b (x - 1) with x = a/b, or -a (x^{-1} - 1) when x < 1
        let x = a.div(b);
        let (unit, x, flip) = if x.is_positive() {
            (b.clone(), x, false)
        } else {
            (a.clone(), x.inverse(), true)
        };
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                self.monomial = self.monomial.mul(&unit);
            } else {
                self.monomial = self.monomial.div(&unit);
            }
            self.negative ^= flip;
        }
        self.bump(x, power);
        Ok(())
    }

    #[cfg(test)]
    /// Multiplies by `[h]_q = (q^h - 1)/(q - 1)` for `h ≥ 1`.
    pub fn mul_q_integer(&mut self, h: i64) -> Result<()> {
        if h < 1 {
            return Err(Error::Internal(alloc::format!("[{}]_q with nonpositive argument", h)));
        }
        let mut qh = alloc::vec![0; self.l + 1];
        qh[0] = h;
        let mut q1 = alloc::vec![0; self.l + 1];
        q1[0] = 1;
        let one = Monomial::one(self.l + 1);
        self.mul_difference(&Monomial::new(qh), &one, 1)?;
        self.mul_difference(&Monomial::new(q1), &one, -1)
    }

    /// Expands the surviving numerator factors, then divides by each
    /// surviving denominator binomial in turn.
    pub fn expand(&self) -> Result<MultiLaurent> {
        let sign: BigInt = if self.negative { (-1).into() } else { 1.into() };
        let mut value = MultiLaurent::term(self.l, self.monomial.clone(), sign);
        let one = MultiLaurent::one(self.l);
        for (x, &e) in self.binomials.iter().filter(|(_, e)| **e > 0) {
            let factor = &MultiLaurent::term(self.l, x.clone(), 1) - &one;
            for _ in 0..e {
                value = &value * &factor;
            }
        }
        let denominators: Vec<(&Monomial, i64)> = self
            .binomials
            .iter()
            .filter(|(_, e)| **e < 0)
            .map(|(x, e)| (x, -e))
            .collect();
        for (x, e) in denominators {
            let factor = &MultiLaurent::term(self.l, x.clone(), 1) - &one;
            for _ in 0..e {
                value = value.exact_div(&factor)?;
            }
        }
        Ok(value)
    }

    #[cfg(test)]
    /// Number of binomial factors left in numerator and denominator.
    pub fn counts(&self) -> (i64, i64) {
        self.binomials.values().fold((0, 0), |(p, n), &e| {
            if e > 0 {
                (p + e, n)
            } else {
                (p, n - e)
            }
        })
    }
}
