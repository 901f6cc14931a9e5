use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::partition::{partitions_of, Partition};
use crate::error::domain;
use crate::Result;

/// An ordered `l`-tuple of partitions.
///
/// `Ord` is the canonical listing order: components are compared left to
/// right with the [`Partition`] order, so the "largest" multipartition is
/// listed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(domain!("a multipartition needs at least one component"));
        }
        Ok(Self { components })
    }

    /// The multipartition `(∅, …, ∅)` with `l` components.
    pub fn empty(l: usize) -> Self {
        assert!(l >= 1, "l must be positive");
        Self {
            components: alloc::vec![Partition::empty(); l],
        }
    }

    /// Builds from raw part lists, validating each component.
    pub fn from_parts(parts: &[&[usize]]) -> Result<Self> {
        let comps = parts
            .iter()
            .map(|c| Partition::new(c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, s: usize) -> &Partition {
        &self.components[s]
    }

    /// Number of components `l`.
    pub fn level(&self) -> usize {
        self.components.len()
    }

    /// Total size `n`.
    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `ℓ(λ)`, the maximal component length.
    pub fn length(&self) -> usize {
        self.components.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// Nodes as `(component, row, col)`.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(s, p)| p.nodes().map(move |(i, j)| (s, i, j)))
    }

    /// `λ̄`: all parts of all components sorted into one partition.
    pub fn rebar(&self) -> Partition {
        Partition::from_multiset(
            self.components
                .iter()
                .flat_map(|c| c.parts().iter().copied())
                .collect(),
        )
    }

    /// The `L`-symbol: per component, the beta numbers `λ_i + L - i` for
    /// `i = 1..=L`.
    pub fn l_symbol(&self, big_l: usize) -> Result<Vec<Vec<usize>>> {
        if big_l < self.length() {
            return Err(domain!(
                "symbol size {} is smaller than the length {} of {}",
                big_l,
                self.length(),
                self
            ));
        }
        Ok(self
            .components
            .iter()
            .map(|c| (1..=big_l).map(|i| c.part(i) + big_l - i).collect())
            .collect())
    }

    /// Restriction to the components listed in `indices`.
    pub fn project(&self, indices: &[usize]) -> Multipartition {
        Multipartition {
            components: indices.iter().map(|&i| self.components[i].clone()).collect(),
        }
    }

    /// Cyclic shift of the `l = p·d` components by one `d`-package:
    /// `(λ^0,…,λ^{pd-1}) ↦ (λ^{pd-d},…,λ^{pd-1},λ^0,…,λ^{pd-d-1})`.
    pub fn sigma(&self, p: usize, d: usize) -> Result<Multipartition> {
        if p == 0 || d == 0 || p * d != self.level() {
            return Err(domain!(
                "sigma action needs l = p*d, got l = {}, p = {}, d = {}",
                self.level(),
                p,
                d
            ));
        }
        let mut components = self.components.clone();
        components.rotate_right(d);
        Ok(Multipartition { components })
    }

    /// Orbit under `⟨σ⟩` in canonical order, and the stabiliser order
    /// `p / |orbit|`.
    pub fn orbit_and_stabilizer(&self, p: usize, d: usize) -> Result<(BTreeSet<Multipartition>, usize)> {
        let mut orbit = BTreeSet::new();
        let mut current = self.clone();
        for _ in 0..p {
            orbit.insert(current.clone());
            current = current.sigma(p, d)?;
        }
        debug_assert_eq!(&current, self);
        if !p.is_multiple_of(orbit.len()) {
            return Err(crate::Error::Internal(alloc::format!(
                "orbit size {} does not divide {}",
                orbit.len(),
                p
            )));
        }
        let stab = p / orbit.len();
        Ok((orbit, stab))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str("]")
    }
}

/// All `l`-multipartitions of `n` in canonical order.
pub fn enumerate_multipartitions(l: usize, n: usize) -> Vec<Multipartition> {
    assert!(l >= 1, "l must be positive");
    let tables: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(l);
    fill(l, n, &tables, &mut current, &mut out);
    out.sort();
    out
}

fn fill(
    l: usize,
    remaining: usize,
    tables: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    if current.len() + 1 == l {
        for p in &tables[remaining] {
            current.push(p.clone());
            out.push(Multipartition {
                components: current.clone(),
            });
            current.pop();
        }
        return;
    }
    for size in (0..=remaining).rev() {
        for p in &tables[size] {
            current.push(p.clone());
            fill(l, remaining - size, tables, current, out);
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mp(parts: &[&[usize]]) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    #[test]
    fn rebar_examples() {
        assert_eq!(mp(&[&[4, 1], &[], &[2, 1]]).rebar().parts(), &[4, 2, 1, 1]);
        assert!(mp(&[&[], &[]]).rebar().is_empty());
        assert_eq!(mp(&[&[1], &[1], &[1]]).rebar().parts(), &[1, 1, 1]);
    }

    #[test]
    fn rebar_ignores_component_order() {
        for lam in enumerate_multipartitions(3, 4) {
            let mut comps = lam.components().to_vec();
            comps.reverse();
            let rev = Multipartition::new(comps).unwrap();
            assert_eq!(lam.rebar(), rev.rebar());
            assert_eq!(lam.rebar(), lam.sigma(3, 1).unwrap().rebar());
        }
    }

    #[test]
    fn l_symbol_examples() {
        assert_eq!(mp(&[&[1], &[]]).l_symbol(1).unwrap(), vec![vec![1], vec![0]]);
        assert_eq!(mp(&[&[], &[]]).l_symbol(2).unwrap(), vec![vec![1, 0], vec![1, 0]]);
        assert_eq!(mp(&[&[2, 1], &[]]).l_symbol(3).unwrap()[0], vec![4, 2, 0]);
        assert!(mp(&[&[1, 1], &[]]).l_symbol(1).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_multipartitions(1, 3),
            vec![mp(&[&[3]]), mp(&[&[2, 1]]), mp(&[&[1, 1, 1]])]
        );
        assert_eq!(
            enumerate_multipartitions(2, 1),
            vec![mp(&[&[1], &[]]), mp(&[&[], &[1]])]
        );
        assert_eq!(enumerate_multipartitions(3, 4).len(), 51);
        assert_eq!(enumerate_multipartitions(2, 0), vec![Multipartition::empty(2)]);
    }

    #[test]
    fn enumeration_has_no_duplicates_and_right_rank() {
        for l in 1..=3 {
            for n in 0..=5 {
                let all = enumerate_multipartitions(l, n);
                let set: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len());
                assert!(all.iter().all(|m| m.rank() == n && m.level() == l));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let lam = mp(&[&[1], &[1], &[]]);
        assert_eq!(lam.sigma(3, 1).unwrap(), mp(&[&[], &[1], &[1]]));
        let other = mp(&[&[2], &[1], &[1, 1]]);
        assert_eq!(other.sigma(1, 3).unwrap(), other);
        assert!(lam.sigma(2, 1).is_err());
    }

    #[test]
    fn sigma_has_order_p() {
        for (p, d) in [(1, 4), (2, 2), (4, 1), (3, 1), (2, 1)] {
            for n in 0..=4 {
                for lam in enumerate_multipartitions(p * d, n) {
                    let mut cur = lam.clone();
                    for _ in 0..p {
                        cur = cur.sigma(p, d).unwrap();
                    }
                    assert_eq!(cur, lam);
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let (orbit, stab) = mp(&[&[1], &[1], &[]]).orbit_and_stabilizer(3, 1).unwrap();
        assert_eq!((orbit.len(), stab), (3, 1));
        assert_eq!(orbit.iter().next().unwrap(), &mp(&[&[1], &[1], &[]]));
        let (orbit, stab) = mp(&[&[1], &[1], &[1]]).orbit_and_stabilizer(3, 1).unwrap();
        assert_eq!((orbit.len(), stab), (1, 3));
        let (orbit, stab) = mp(&[&[2], &[]]).orbit_and_stabilizer(2, 1).unwrap();
        assert_eq!(stab, 1);
        assert_eq!(
            orbit.into_iter().collect::<Vec<_>>(),
            vec![mp(&[&[2], &[]]), mp(&[&[], &[2]])]
        );
    }

    #[test]
    fn display_is_json_like() {
        assert_eq!(alloc::format!("{}", mp(&[&[2], &[], &[1, 1]])), "[[2],[],[1,1]]");
    }
}
