//! Shifted `m`-symbols, `κ`-sequences and the combinatorial a-values.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::multipartition::Multipartition;
use super::partition::gen_hook_unchecked;
use crate::error::domain;
use crate::{Rational, Result};

/// Integer charges `r_0..r_{l-1}` over a positive denominator `r`, giving
/// `m_j = r_j / r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChargeData {
    r: i64,
    charges: Vec<i64>,
}

impl ChargeData {
    pub fn new(r: i64, charges: Vec<i64>) -> Result<Self> {
        if r < 1 {
            return Err(domain!("r must be positive, got {}", r));
        }
        if charges.is_empty() {
            return Err(domain!("at least one charge is required"));
        }
        Ok(Self { r, charges })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    pub fn m(&self, j: usize) -> Rational {
        Rational::new(self.charges[j], self.r)
    }

    /// `⌊m_j⌋`, rounding towards negative infinity (so `⌊-1/6⌋ = -1`).
    pub fn floor_m(&self, j: usize) -> i64 {
        self.m(j).floor().to_integer()
    }

    fn check_level(&self, mp: &Multipartition) -> Result<()> {
        if mp.level() != self.level() {
            return Err(domain!(
                "{} has {} components but {} charges were given",
                mp,
                mp.level(),
                self.level()
            ));
        }
        Ok(())
    }
}

/// The shifted `m`-symbol of a multipartition: row `j` holds
/// `λ^j_i - i + s + m_j` for `i = 1..=s+⌊m_j⌋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSymbol {
    size: usize,
    rows: Vec<Vec<Rational>>,
}

impl ShiftedSymbol {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Rows indexed by component; entry `i-1` of row `j` is `𝔅^j_i`.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn kappa(&self) -> KappaSequence {
        let mut entries: Vec<Rational> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        KappaSequence::from_sorted(entries)
    }
}

/// All entries of a shifted symbol in decreasing order, with
/// `n_m = Σ (i-1) κ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaSequence {
    entries: Vec<Rational>,
    n_m: Rational,
}

impl KappaSequence {
    fn from_sorted(entries: Vec<Rational>) -> Self {
        let n_m = weighted_sum(&entries);
        Self { entries, n_m }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn n_m(&self) -> Rational {
        self.n_m
    }

    /// Dominance comparison with another `κ`-sequence; see [`dominance`].
    pub fn dominance(&self, other: &KappaSequence) -> Result<Option<Ordering>> {
        dominance(&self.entries, &other.entries)
    }
}

fn weighted_sum(entries: &[Rational]) -> Rational {
    entries
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, k)| acc + *k * Rational::from_integer(i as i64))
}

/// Smallest admissible symbol size for `mp`: at least `ℓ(λ)+1`, and large
/// enough that every component row `s+⌊m_j⌋` covers all parts of `λ^j`.
pub fn auto_symbol_size(mp: &Multipartition, m: &ChargeData) -> usize {
    let mut s = (mp.length() + 1) as i64;
    for (j, comp) in mp.components().iter().enumerate() {
        s = s.max(comp.len() as i64 - m.floor_m(j));
    }
    s.max(1) as usize
}

pub fn shifted_symbol(mp: &Multipartition, m: &ChargeData, s: usize) -> Result<ShiftedSymbol> {
    m.check_level(mp)?;
    let mut rows = Vec::with_capacity(mp.level());
    for (j, comp) in mp.components().iter().enumerate() {
        let len = s as i64 + m.floor_m(j);
        if len < comp.len() as i64 {
            return Err(domain!(
                "symbol size {} too small: component {} of {} needs {} rows, has {}",
                s,
                j,
                mp,
                comp.len(),
                len
            ));
        }
        let mj = m.m(j);
        let row: Vec<Rational> = (1..=len as usize)
            .map(|i| Rational::from_integer(comp.part(i) as i64 - i as i64 + s as i64) + mj)
            .collect();
        if let Some(neg) = row.iter().find(|x| x.is_negative()) {
            return Err(domain!("symbol size {} gives negative entry {}", s, neg));
        }
        rows.push(row);
    }
    Ok(ShiftedSymbol { size: s, rows })
}

/// `κ_m(λ)` computed with the automatically selected symbol size.
pub fn kappa(mp: &Multipartition, m: &ChargeData) -> Result<KappaSequence> {
    Ok(shifted_symbol(mp, m, auto_symbol_size(mp, m))?.kappa())
}

/// `r (n_m(λ) - n_m(∅))` with the automatically selected symbol size.
pub fn a_value_combinatorial(mp: &Multipartition, m: &ChargeData) -> Result<Rational> {
    a_value_combinatorial_with_size(mp, m, auto_symbol_size(mp, m))
}

/// `r (n_m(λ) - n_m(∅))` using symbols of size `s` for both `λ` and `∅`.
pub fn a_value_combinatorial_with_size(mp: &Multipartition, m: &ChargeData, s: usize) -> Result<Rational> {
    let lam = shifted_symbol(mp, m, s)?.kappa();
    let empty = shifted_symbol(&Multipartition::empty(mp.level()), m, s)?.kappa();
    Ok((lam.n_m - empty.n_m) * Rational::from_integer(m.r))
}

/// `r ( n(λ̄) - Σ_s Σ_{(i,j)∈[λ^s]} Σ_{t≠s} min(h^{λ^s,λ^t}_{i,j} + m_s - m_t, 0) )`.
pub fn a_value_hook_formula(mp: &Multipartition, m: &ChargeData) -> Result<Rational> {
    m.check_level(mp)?;
    let l = mp.level();
    let mut correction = Rational::zero();
    for (s, i, j) in mp.nodes() {
        let lam_s = mp.component(s);
        for t in (0..l).filter(|&t| t != s) {
            let h = gen_hook_unchecked(lam_s, mp.component(t), i, j);
            let v = Rational::from_integer(h) + m.m(s) - m.m(t);
            if v.is_negative() {
                correction += v;
            }
        }
    }
    let n_bar = Rational::from_integer(mp.rebar().n_function() as i64);
    Ok((n_bar - correction) * Rational::from_integer(m.r))
}

/// Dominance of two sequences by partial sums, after padding the shorter
/// one with zeros.
///
/// Returns `Some(Greater)` when `x ⊳ y` strictly, `Some(Equal)` when they
/// coincide, `Some(Less)` when `y ⊳ x`, and `None` when incomparable. The
/// totals must agree.
pub fn dominance(x: &[Rational], y: &[Rational]) -> Result<Option<Ordering>> {
    let len = x.len().max(y.len());
    let at = |v: &[Rational], i: usize| v.get(i).copied().unwrap_or_else(Rational::zero);
    let total_x: Rational = x.iter().copied().sum();
    let total_y: Rational = y.iter().copied().sum();
    if total_x != total_y {
        return Err(domain!("dominance needs equal totals, got {} and {}", total_x, total_y));
    }
    let (mut ge, mut le) = (true, true);
    let (mut sx, mut sy) = (Rational::zero(), Rational::zero());
    for i in 0..len {
        sx += at(x, i);
        sy += at(y, i);
        match sx.cmp(&sy) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    })
}

/// `x ⊵ y` for multisets: both are sorted decreasingly and compared by
/// [`dominance`]. Cardinalities and totals must agree.
pub fn multiset_dominates(x: &[Rational], y: &[Rational]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(domain!("multisets have sizes {} and {}", x.len(), y.len()));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_unstable_by(|a, b| b.cmp(a));
    ys.sort_unstable_by(|a, b| b.cmp(a));
    Ok(matches!(
        dominance(&xs, &ys)?,
        Some(Ordering::Greater) | Some(Ordering::Equal)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_multipartitions;
    use alloc::vec;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a)
    }

    fn mp(parts: &[&[usize]]) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    #[test]
    fn floor_rounds_down_for_negatives() {
        let m = ChargeData::new(6, vec![3, -1, -2, -6, -7]).unwrap();
        assert_eq!(
            (0..5).map(|j| m.floor_m(j)).collect::<Vec<_>>(),
            vec![0, -1, -1, -1, -2]
        );
    }

    #[test]
    fn symbol_examples() {
        let m = ChargeData::new(1, vec![0, 0]).unwrap();
        let sym = shifted_symbol(&mp(&[&[1], &[1]]), &m, 1).unwrap();
        assert_eq!(sym.rows(), &[vec![q(1)], vec![q(1)]]);
        let k = sym.kappa();
        assert_eq!(k.entries(), &[q(1), q(1)]);
        assert_eq!(k.n_m(), q(1));

        let k = shifted_symbol(&mp(&[&[], &[]]), &m, 2).unwrap().kappa();
        assert_eq!(k.entries(), &[q(1), q(1), q(0), q(0)]);
        assert_eq!(k.n_m(), q(1));
    }

    #[test]
    fn symbol_too_small_is_rejected() {
        let m = ChargeData::new(1, vec![0]).unwrap();
        assert!(shifted_symbol(&mp(&[&[1, 1]]), &m, 1).is_err());
        let neg = ChargeData::new(2, vec![-3]).unwrap();
        // s + ⌊-3/2⌋ = 1 row cannot hold the part of (1,1)
        assert!(shifted_symbol(&mp(&[&[1, 1]]), &neg, 3).is_err());
        assert!(shifted_symbol(&mp(&[&[1, 1]]), &neg, 4).is_ok());
    }

    #[test]
    fn a_value_combinatorial_examples() {
        let m1 = ChargeData::new(1, vec![0]).unwrap();
        assert_eq!(a_value_combinatorial(&mp(&[&[1, 1]]), &m1).unwrap(), q(1));
        let m3 = ChargeData::new(6, vec![3, -1, -2]).unwrap();
        assert_eq!(a_value_combinatorial(&Multipartition::empty(3), &m3).unwrap(), q(0));
        for n in 0..=6 {
            assert_eq!(a_value_combinatorial(&mp(&[&[n]]), &m1).unwrap(), q(0));
        }
    }

    #[test]
    fn a_value_hook_examples() {
        let m1 = ChargeData::new(1, vec![0]).unwrap();
        assert_eq!(a_value_hook_formula(&mp(&[&[1, 1]]), &m1).unwrap(), q(1));
        let m2 = ChargeData::new(1, vec![0, 0]).unwrap();
        assert_eq!(a_value_hook_formula(&Multipartition::empty(2), &m2).unwrap(), q(0));
        assert_eq!(a_value_hook_formula(&mp(&[&[1], &[]]), &m2).unwrap(), q(0));
    }

    #[test]
    fn type_a_a_value_is_n_of_lambda() {
        let m1 = ChargeData::new(1, vec![0]).unwrap();
        for lam in enumerate_multipartitions(1, 6) {
            let expected = q(lam.component(0).n_function() as i64);
            assert_eq!(a_value_combinatorial(&lam, &m1).unwrap(), expected);
            assert_eq!(a_value_hook_formula(&lam, &m1).unwrap(), expected);
        }
    }

    #[test]
    fn a_value_independent_of_symbol_size() {
        let charges = [
            ChargeData::new(6, vec![3, -1, -2]).unwrap(),
            ChargeData::new(1, vec![0, 0, 0]).unwrap(),
            ChargeData::new(4, vec![-7, 5, 0]).unwrap(),
        ];
        for m in &charges {
            for lam in enumerate_multipartitions(3, 3) {
                let s = auto_symbol_size(&lam, m);
                let base = a_value_combinatorial_with_size(&lam, m, s).unwrap();
                for extra in 1..=3 {
                    assert_eq!(a_value_combinatorial_with_size(&lam, m, s + extra).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance(&[q(2), q(0)], &[q(1), q(1)]).unwrap(), Some(Ordering::Greater));
        let x = [q(3), q(1)];
        assert_eq!(dominance(&x, &x).unwrap(), Some(Ordering::Equal));
        assert_eq!(dominance(&[q(3), q(0), q(1)], &[q(2), q(2), q(0)]).unwrap(), None);
        assert_eq!(dominance(&[q(1), q(1)], &[q(2)]).unwrap(), Some(Ordering::Less));
        assert!(dominance(&[q(1)], &[q(2)]).is_err());
    }

    #[test]
    fn multiset_dominance_examples() {
        let left: Vec<_> = [2, 1, 3].iter().map(|&a| q(a)).collect();
        let right: Vec<_> = [1, 2, 3].iter().map(|&a| q(a)).collect();
        assert!(multiset_dominates(&left, &right).unwrap());
        assert!(multiset_dominates(&[q(3), q(1)], &[q(2), q(2)]).unwrap());
        assert!(!multiset_dominates(&[q(2), q(2)], &[q(3), q(1)]).unwrap());
        assert!(multiset_dominates(&[q(1)], &[q(1), q(0)]).is_err());
    }
}
