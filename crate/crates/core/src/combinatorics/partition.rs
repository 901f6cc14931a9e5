use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::domain;
use crate::Result;

/// An integer partition, stored as its nonzero parts in weakly decreasing
/// order.
///
/// The `Ord` implementation is the canonical listing order: larger size
/// first, then parts compared lexicographically with the larger sequence
/// first. Under it `(3) < (2,1) < (1,1,1) < (2) < (1) < ()`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition from parts, dropping trailing zeros.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain!("parts {:?} are not weakly decreasing", parts));
        }
        if parts.contains(&0) {
            return Err(domain!("zero part inside {:?}", parts));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary parts into a partition (zeros dropped).
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part with 1-based indexing; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_function(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i * p) as u64)
            .sum()
    }

    /// `n(λ)` through the conjugate: `½ Σ (λ'_i - 1) λ'_i`.
    pub fn n_function_via_conjugate(&self) -> u64 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| (c * (c - 1) / 2) as u64)
            .sum()
    }

    pub fn contains_node(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// Nodes `(i, j)` of the Young diagram in row-major order, 1-based.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Classical hook length `arm + leg + 1` of a node.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<i64> {
        if !self.contains_node(row, col) {
            return Err(domain!("node ({}, {}) not in {}", row, col, self));
        }
        let arm = self.part(row) - col;
        let leg = self.parts[row..].iter().take_while(|&&p| p >= col).count();
        Ok((arm + leg + 1) as i64)
    }

    /// Nodes that can be added to keep a partition, as `(row, col)`.
    pub fn addable_nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let col = self.part(i) + 1;
            if i == 1 || self.part(i - 1) >= col {
                out.push((i, col));
            }
        }
        out
    }

    /// Nodes whose removal leaves a partition, as `(row, col)`.
    pub fn removable_nodes(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i)))
            .collect()
    }

    pub(crate) fn with_node_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition { parts }
    }
}

/// Generalised hook length `h^{λ,μ}_{i,j} = λ_i - i + μ'_j - j + 1` for a
/// node `(i, j)` of `λ`. It can be zero or negative when `μ ≠ λ`.
pub fn generalized_hook(lam: &Partition, mu: &Partition, row: usize, col: usize) -> Result<i64> {
    if !lam.contains_node(row, col) {
        return Err(domain!("node ({}, {}) not in {}", row, col, lam));
    }
    Ok(gen_hook_unchecked(lam, mu, row, col))
}

/// Same as [`generalized_hook`] for callers that already iterate nodes of
/// `lam`.
pub(crate) fn gen_hook_unchecked(lam: &Partition, mu: &Partition, row: usize, col: usize) -> i64 {
    let mu_conj_col = mu.parts.iter().take_while(|&&p| p >= col).count();
    lam.part(row) as i64 - row as i64 + mu_conj_col as i64 - col as i64 + 1
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n`, in canonical order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn n_function_examples() {
        assert_eq!(Partition::empty().n_function(), 0);
        assert_eq!(p(&[1, 1, 1]).n_function(), 3);
        assert_eq!(p(&[4, 2, 1, 1]).n_function(), 7);
    }

    #[test]
    fn n_function_two_forms_agree() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.n_function(), lam.n_function_via_conjugate(), "{}", lam);
            }
        }
    }

    #[test]
    fn generalized_hook_examples() {
        assert_eq!(generalized_hook(&p(&[2]), &p(&[2]), 1, 1).unwrap(), 2);
        assert_eq!(generalized_hook(&p(&[1]), &Partition::empty(), 1, 1).unwrap(), 0);
        assert!(generalized_hook(&p(&[1]), &p(&[1]), 1, 2).is_err());
        assert!(generalized_hook(&p(&[1]), &p(&[1]), 2, 1).is_err());
    }

    #[test]
    fn generalized_hook_reduces_to_classical() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                for (i, j) in lam.nodes() {
                    assert_eq!(
                        generalized_hook(&lam, &lam, i, j).unwrap(),
                        lam.hook_length(i, j).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn partitions_of_three_in_order() {
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn addable_and_removable() {
        let lam = p(&[2, 1]);
        assert_eq!(lam.addable_nodes(), vec![(1, 3), (2, 2), (3, 1)]);
        assert_eq!(lam.removable_nodes(), vec![(1, 2), (2, 1)]);
        assert_eq!(Partition::empty().addable_nodes(), vec![(1, 1)]);
        assert!(Partition::empty().removable_nodes().is_empty());
    }
}
