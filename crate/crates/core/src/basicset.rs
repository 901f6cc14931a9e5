//! Canonical basic sets.
//!
//! For `G(l,1,n)` the specialised algebra splits (Dipper-Mathas) into
//! tensor products of smaller algebras, one per class of the parameter
//! partition. Each factor contributes its Uglov multipartitions, read off
//! the Fock space crystal. For `G(l,p,n)` the `G(l,1,n)` set is grouped into
//! orbits of the cyclic shift by `d`-packages.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::combinatorics::{enumerate_multipartitions, Multipartition, Partition};
use crate::error::domain;
use crate::schur::{is_semisimple, CycloSpec, SpecMode};
use crate::{Error, Rational, Result};

/// The parameter classes `I_1 ⊔ … ⊔ I_p` of `{0,…,l-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DmPartition {
    classes: Vec<Vec<usize>>,
    residual: Vec<Vec<Rational>>,
}

impl DmPartition {
    /// Classes sorted ascending, ordered by least element.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// `m^i = π_i(m)` with `m_j = r_j / r`.
    pub fn residual(&self, class: usize) -> &[Rational] {
        &self.residual[class]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

fn require_cyclotomic(spec: &CycloSpec) -> Result<()> {
    if spec.mode() != SpecMode::Cyclotomic {
        return Err(domain!("basic sets need a cyclotomic-mode specialisation"));
    }
    Ok(())
}

/// Whether `η_l^{i-j} η^{r_i - r_j} = η^{rd}` for some `|d| < n`.
pub fn dm_linked(spec: &CycloSpec, n: usize, i: usize, j: usize) -> bool {
    let l = spec.level() as i64;
    let (e, k, r) = (spec.e(), spec.k(), spec.r());
    let rc = spec.charges();
    let modulus = l * e;
    let base = (i as i64 - j as i64) * e + k * l * (rc[i] - rc[j]);
    let n = n as i64;
    (1 - n..n).any(|d| (base - k * l * r * d).rem_euclid(modulus) == 0)
}

/// Connected components of the linking graph on `{0,…,l-1}`.
pub fn dm_partition(spec: &CycloSpec, n: usize) -> Result<DmPartition> {
    require_cyclotomic(spec)?;
    let l = spec.level();
    let mut label: Vec<usize> = (0..l).collect();
    for i in 0..l {
        for j in i + 1..l {
            if dm_linked(spec, n, i, j) {
                let (a, b) = (label[i], label[j]);
                if a != b {
                    let (keep, drop) = (a.min(b), a.max(b));
                    label.iter_mut().filter(|x| **x == drop).for_each(|x| *x = keep);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..l {
        if label[i] == i {
            classes.push((0..l).filter(|&j| label[j] == i).collect());
        }
    }
    let residual = classes
        .iter()
        .map(|c| c.iter().map(|&j| Rational::new(spec.charges()[j], spec.r())).collect())
        .collect();
    Ok(DmPartition { classes, residual })
}

/// Charge data for one factor of the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UglovCharge {
    e_prime: i64,
    s: Vec<i64>,
    modulus: i64,
    diagnostics: Vec<String>,
}

impl UglovCharge {
    pub fn new(e_prime: i64, s: Vec<i64>) -> Result<Self> {
        if e_prime < 1 {
            return Err(domain!("quantum characteristic must be positive, got {}", e_prime));
        }
        if s.is_empty() {
            return Err(domain!("empty multicharge"));
        }
        Ok(Self {
            e_prime,
            s,
            modulus: 0,
            diagnostics: Vec::new(),
        })
    }

    /// Order of `η^r`.
    pub fn e_prime(&self) -> i64 {
        self.e_prime
    }

    pub fn s(&self) -> &[i64] {
        &self.s
    }

    /// Each `s_j` is determined modulo this number; 0 when not derived from
    /// a congruence.
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Notes on rational relations between `m` and `s` that fail to hold.
    pub fn diagnostics(&self) -> &[String] {
        &self.diagnostics
    }
}

/// The smallest `|x|` with `a x ≡ c (mod m)`, preferring `x > 0` on ties,
/// together with the period of the solution set.
fn min_congruence_solution(a: i64, c: i64, m: i64) -> Option<(i64, i64)> {
    let a = a.rem_euclid(m);
    let c = c.rem_euclid(m);
    let g = a.gcd(&m);
    if c % g != 0 {
        return None;
    }
    let period = m / g;
    let x0 = (0..period).find(|x| (a * x - c).rem_euclid(m) == 0)?;
    let below = x0 - period;
    if x0 == 0 || x0 <= -below {
        Some((x0, period))
    } else {
        Some((below, period))
    }
}

/// Multicharge `s^i` and quantum characteristic `e / gcd(e, r)` for a class.
pub fn charge_for(dm: &DmPartition, class: usize, spec: &CycloSpec) -> Result<UglovCharge> {
    require_cyclotomic(spec)?;
    let members = dm
        .classes
        .get(class)
        .ok_or_else(|| domain!("class index {} out of range", class))?;
    let l = spec.level() as i64;
    let (e, k, r) = (spec.e(), spec.k(), spec.r());
    let rc = spec.charges();
    let i1 = members[0];
    let mut s = vec![0];
    let mut modulus = 1;
    let mut diagnostics = Vec::new();
    for &ij in &members[1..] {
        let di = ij as i64 - i1 as i64;
        let c = di * e + k * l * (rc[ij] - rc[i1]);
        let (sj, period) = min_congruence_solution(k * l * r, c, l * e).ok_or_else(|| {
            Error::Internal(format!("no charge links parameters {} and {} of one class", i1, ij))
        })?;
        let lhs = Rational::new(rc[ij] - rc[i1], r);
        let rhs = Rational::from_integer(sj) - Rational::new(e * di, k * l * r);
        if lhs != rhs {
            diagnostics.push(format!(
                "m_{} - m_{} = {} but s - e(i_j - i_1)/(klr) = {} for s = {}",
                ij, i1, lhs, rhs, sj
            ));
        }
        s.push(sj);
        modulus = period;
    }
    Ok(UglovCharge {
        e_prime: e / e.gcd(&r),
        s,
        modulus,
        diagnostics,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Addable,
    Removable,
}

/// `f̃_t`: adds the good `t`-node, if any.
fn crystal_f(mp: &Multipartition, t: i64, charge: &UglovCharge) -> Option<Multipartition> {
    let ep = charge.e_prime;
    // (γ, component, row, kind)
    let mut word: Vec<(i64, usize, usize, Kind)> = Vec::new();
    for (c, part) in mp.components().iter().enumerate() {
        let sc = charge.s[c];
        for (i, j) in part.addable_nodes() {
            let g = j as i64 - i as i64 + sc;
            if g.rem_euclid(ep) == t {
                word.push((g, c, i, Kind::Addable));
            }
        }
        for (i, j) in part.removable_nodes() {
            let g = j as i64 - i as i64 + sc;
            if g.rem_euclid(ep) == t {
                word.push((g, c, i, Kind::Removable));
            }
        }
    }
    word.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut open: Vec<usize> = Vec::new();
    for (idx, node) in word.iter().enumerate() {
        match node.3 {
            Kind::Addable => open.push(idx),
            Kind::Removable => {
                open.pop();
            }
        }
    }
    let &(_, c, row, _) = word.get(*open.first()?)?;
    let mut components: Vec<Partition> = mp.components().to_vec();
    components[c] = components[c].with_node_added(row);
    Some(Multipartition::new(components).expect("adding a node keeps a multipartition"))
}

/// Uglov `lc`-multipartitions of `nc`: the rank-`nc` vertices of the
/// crystal component of the empty multipartition.
pub fn uglov_multipartitions(lc: usize, nc: usize, charge: &UglovCharge) -> Result<BTreeSet<Multipartition>> {
    if lc < 1 {
        return Err(domain!("level must be positive"));
    }
    if charge.s.len() != lc {
        return Err(domain!("multicharge has {} entries, level is {}", charge.s.len(), lc));
    }
    if charge.e_prime == 1 {
        // q = 1 and all eigenvalues equal: semisimple exactly when there is
        // no pair of eigenvalues to collide
        if lc == 1 || nc == 0 {
            return Ok(enumerate_multipartitions(lc, nc).into_iter().collect());
        }
        return Err(domain!(
            "quantum characteristic 1 with {} equal eigenvalues at rank {} is not semisimple; no crystal is available",
            lc,
            nc
        ));
    }
    let mut frontier: BTreeSet<Multipartition> = BTreeSet::new();
    frontier.insert(Multipartition::empty(lc));
    for _ in 0..nc {
        let mut next = BTreeSet::new();
        for mp in &frontier {
            for t in 0..charge.e_prime {
                if let Some(up) = crystal_f(mp, t, charge) {
                    next.insert(up);
                }
            }
        }
        frontier = next;
    }
    Ok(frontier)
}

/// A canonical basic set for a specialised `G(l,1,n)` algebra.
#[derive(Clone, Debug)]
pub struct BasicSet {
    spec: CycloSpec,
    n: usize,
    semisimple: bool,
    dm: DmPartition,
    charges: Vec<UglovCharge>,
    elements: BTreeSet<Multipartition>,
}

impl BasicSet {
    pub fn spec(&self) -> &CycloSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_semisimple(&self) -> bool {
        self.semisimple
    }

    pub fn dm_partition(&self) -> &DmPartition {
        &self.dm
    }

    /// One charge per class of [`BasicSet::dm_partition`].
    pub fn charges(&self) -> &[UglovCharge] {
        &self.charges
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &BTreeSet<Multipartition> {
        &self.elements
    }
}

fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `B_θ` for the specialisation `spec` at rank `n`.
pub fn assemble_basic_set(spec: &CycloSpec, n: usize) -> Result<BasicSet> {
    require_cyclotomic(spec)?;
    let l = spec.level();
    let dm = dm_partition(spec, n)?;
    let charges = (0..dm.len())
        .map(|i| charge_for(&dm, i, spec))
        .collect::<Result<Vec<_>>>()?;
    let semisimple = is_semisimple(spec, n)?;
    let elements = if semisimple {
        enumerate_multipartitions(l, n).into_iter().collect()
    } else {
        // phi[i][ni] = Φ^{l_i}_{ni}(s^i)
        let mut phi: Vec<Vec<Vec<Multipartition>>> = Vec::new();
        for (class, charge) in dm.classes.iter().zip(&charges) {
            let mut row = Vec::new();
            for ni in 0..=n {
                row.push(uglov_multipartitions(class.len(), ni, charge)?.into_iter().collect());
            }
            phi.push(row);
        }
        let mut elements = BTreeSet::new();
        for comp in weak_compositions(n, dm.len()) {
            let mut partial: Vec<Vec<Partition>> = vec![vec![Partition::empty(); l]];
            for (i, &ni) in comp.iter().enumerate() {
                let mut grown = Vec::new();
                for base in &partial {
                    for piece in &phi[i][ni] {
                        let mut next = base.clone();
                        for (pos, &idx) in dm.classes[i].iter().enumerate() {
                            next[idx] = piece.component(pos).clone();
                        }
                        grown.push(next);
                    }
                }
                partial = grown;
            }
            for comps in partial {
                elements.insert(Multipartition::new(comps)?);
            }
        }
        elements
    };
    Ok(BasicSet {
        spec: spec.clone(),
        n,
        semisimple,
        dm,
        charges,
        elements,
    })
}

/// One `σ`-orbit of `B_θ` and the irreducible labels it contributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDatum {
    representative: Multipartition,
    orbit_size: usize,
    stabilizer_size: usize,
}

impl OrbitDatum {
    /// The orbit element listed first in canonical order.
    pub fn representative(&self) -> &Multipartition {
        &self.representative
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    pub fn stabilizer_size(&self) -> usize {
        self.stabilizer_size
    }

    /// `E^{λ}` when the stabiliser is trivial, otherwise `E^{λ,0}`, `E^{λ,1}`, ….
    pub fn labels(&self) -> Vec<String> {
        if self.stabilizer_size == 1 {
            return vec![format!("E^{}", self.representative)];
        }
        (0..self.stabilizer_size)
            .map(|i| format!("E^{},{}", self.representative, i))
            .collect()
    }
}

/// Parameters of a cyclotomic Hecke algebra of type `G(l,p,n)` at a root of
/// unity: `η = exp(2πik/e)`, `m_i = r_i / (pr)` for the `d = l/p` charges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpnSpec {
    pub e: i64,
    pub k: i64,
    pub r: i64,
    pub charges: Vec<i64>,
    pub l: usize,
    pub p: usize,
    pub n: usize,
}

impl GpnSpec {
    /// The specialisation of the ambient `G(l,1,n)` algebra: `pr` in place
    /// of `r`, with the `d` charges repeated `p` times.
    pub fn ambient(&self) -> Result<CycloSpec> {
        if self.p == 0 || !self.l.is_multiple_of(self.p) {
            return Err(domain!("p must divide l, got l={} p={}", self.l, self.p));
        }
        let d = self.l / self.p;
        if self.charges.len() != d {
            return Err(domain!("expected d = l/p = {} charges, got {}", d, self.charges.len()));
        }
        if !(self.n > 2 || (self.n == 2 && self.p % 2 == 1)) {
            return Err(domain!("need n > 2, or n = 2 with p odd; got n={} p={}", self.n, self.p));
        }
        let charges = (0..self.l).map(|j| self.charges[j % d]).collect();
        CycloSpec::cyclotomic(self.e, self.k, self.p as i64 * self.r, charges)
    }
}

/// `B̄_θ` as `σ`-orbits of the ambient `B_θ`.
pub fn assemble_basic_set_gpn(spec: &GpnSpec) -> Result<(BasicSet, Vec<OrbitDatum>)> {
    let ambient = spec.ambient()?;
    let d = spec.l / spec.p;
    let basic = assemble_basic_set(&ambient, spec.n)?;
    let mut seen: BTreeSet<Multipartition> = BTreeSet::new();
    let mut orbits = Vec::new();
    for mp in basic.elements() {
        if seen.contains(mp) {
            continue;
        }
        let (orbit, stab) = mp.orbit_and_stabilizer(spec.p, d)?;
        if let Some(stray) = orbit.iter().find(|x| !basic.elements().contains(*x)) {
            return Err(Error::Internal(format!(
                "basic set is not stable under the shift: {} is missing",
                stray
            )));
        }
        let representative = orbit.iter().next().cloned().expect("orbit is nonempty");
        orbits.push(OrbitDatum {
            representative,
            orbit_size: orbit.len(),
            stabilizer_size: stab,
        });
        seen.extend(orbit);
    }
    Ok((basic, orbits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: &[&[usize]]) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    fn set(items: &[&[&[usize]]]) -> BTreeSet<Multipartition> {
        items.iter().map(|x| mp(x)).collect()
    }

    fn example_57() -> CycloSpec {
        CycloSpec::cyclotomic(12, 1, 6, vec![3, -1, -2]).unwrap()
    }

    #[test]
    fn dm_partition_examples() {
        let dm = dm_partition(&example_57(), 2).unwrap();
        assert_eq!(dm.classes(), &[vec![0, 1], vec![2]]);
        assert_eq!(dm.residual(0), &[Rational::new(1, 2), Rational::new(-1, 6)]);
        assert_eq!(dm.residual(1), &[Rational::new(-1, 3)]);

        let ambient = CycloSpec::cyclotomic(12, 1, 6, vec![0, 0, 0]).unwrap();
        let dm = dm_partition(&ambient, 2).unwrap();
        assert_eq!(dm.classes(), &[vec![0], vec![1], vec![2]]);

        let far = CycloSpec::cyclotomic(101, 1, 1, vec![0, 5, 9]).unwrap();
        assert_eq!(dm_partition(&far, 3).unwrap().len(), 3);
    }

    #[test]
    fn charge_examples() {
        let spec = example_57();
        let dm = dm_partition(&spec, 2).unwrap();
        let c = charge_for(&dm, 0, &spec).unwrap();
        assert_eq!(c.s(), &[0, 0]);
        assert_eq!(c.e_prime(), 2);
        assert!(c.diagnostics().is_empty());
        assert_eq!(charge_for(&dm, 1, &spec).unwrap().s(), &[0]);

        let ambient = CycloSpec::cyclotomic(12, 1, 6, vec![0, 0, 0]).unwrap();
        let dm = dm_partition(&ambient, 2).unwrap();
        for i in 0..3 {
            let c = charge_for(&dm, i, &ambient).unwrap();
            assert_eq!((c.s(), c.e_prime()), (&[0][..], 2));
        }
    }

    #[test]
    fn congruence_solutions() {
        assert_eq!(min_congruence_solution(18, 0, 36), Some((0, 2)));
        assert_eq!(min_congruence_solution(1, 3, 6), Some((3, 6)));
        assert_eq!(min_congruence_solution(1, 4, 6), Some((-2, 6)));
        assert_eq!(min_congruence_solution(18, 12, 36), None);
    }

    #[test]
    fn uglov_examples() {
        let c2 = UglovCharge::new(2, vec![0, 0]).unwrap();
        assert_eq!(uglov_multipartitions(2, 2, &c2).unwrap(), set(&[&[&[2], &[]], &[&[1], &[1]]]));
        assert_eq!(uglov_multipartitions(2, 1, &c2).unwrap(), set(&[&[&[1], &[]]]));
        let c1 = UglovCharge::new(2, vec![0]).unwrap();
        assert_eq!(uglov_multipartitions(1, 2, &c1).unwrap(), set(&[&[&[2]]]));
        assert_eq!(uglov_multipartitions(1, 1, &c1).unwrap(), set(&[&[&[1]]]));
        assert_eq!(uglov_multipartitions(1, 0, &c1).unwrap(), set(&[&[&[]]]));
    }

    #[test]
    fn uglov_sets_grow_by_good_nodes() {
        let c = UglovCharge::new(3, vec![0, 1, -1]).unwrap();
        for nc in 1..=4 {
            let below = uglov_multipartitions(3, nc - 1, &c).unwrap();
            for x in uglov_multipartitions(3, nc, &c).unwrap() {
                assert_eq!(x.rank(), nc);
                assert!((0..3).any(|t| below.iter().any(|y| crystal_f(y, t, &c).as_ref() == Some(&x))));
            }
        }
    }

    #[test]
    fn degenerate_characteristic() {
        let c = UglovCharge::new(1, vec![0]).unwrap();
        assert_eq!(uglov_multipartitions(1, 3, &c).unwrap().len(), 3);
        let c = UglovCharge::new(1, vec![0, 0]).unwrap();
        assert!(uglov_multipartitions(2, 1, &c).is_err());
    }

    #[test]
    fn basic_set_example_57() {
        let b = assemble_basic_set(&example_57(), 2).unwrap();
        assert!(!b.is_semisimple());
        let expected = set(&[
            &[&[2], &[], &[]],
            &[&[1], &[1], &[]],
            &[&[1], &[], &[1]],
            &[&[], &[], &[2]],
        ]);
        assert_eq!(b.elements(), &expected);
    }

    #[test]
    fn basic_set_rank_zero() {
        let b = assemble_basic_set(&example_57(), 0).unwrap();
        assert_eq!(b.elements(), &set(&[&[&[], &[], &[]]]));
    }

    #[test]
    fn gpn_example_65() {
        let spec = GpnSpec {
            e: 12,
            k: 1,
            r: 2,
            charges: vec![0],
            l: 3,
            p: 3,
            n: 2,
        };
        let (basic, orbits) = assemble_basic_set_gpn(&spec).unwrap();
        let expected = set(&[
            &[&[1], &[1], &[]],
            &[&[], &[1], &[1]],
            &[&[1], &[], &[1]],
            &[&[2], &[], &[]],
            &[&[], &[2], &[]],
            &[&[], &[], &[2]],
        ]);
        assert_eq!(basic.elements(), &expected);
        let reps: Vec<_> = orbits.iter().map(|o| (o.representative().clone(), o.orbit_size(), o.stabilizer_size())).collect();
        assert_eq!(reps, vec![(mp(&[&[2], &[], &[]]), 3, 1), (mp(&[&[1], &[1], &[]]), 3, 1)]);
        assert_eq!(orbits[1].labels(), vec![String::from("E^[[1],[1],[]]")]);
    }

    #[test]
    fn gpn_preconditions() {
        let mut spec = GpnSpec {
            e: 12,
            k: 1,
            r: 2,
            charges: vec![0],
            l: 3,
            p: 2,
            n: 3,
        };
        assert!(spec.ambient().is_err());
        spec.p = 3;
        spec.n = 1;
        assert!(spec.ambient().is_err());
        spec = GpnSpec { l: 4, p: 2, n: 2, charges: vec![0, 1], ..spec };
        assert!(spec.ambient().is_err());
    }
}
