//! Exhaustive and randomised verification suites behind `arikoike verify`.
//!
//! Every suite builds its list of cases up front from a fixed seed, checks
//! them in parallel and merges the results in case order, so the report does
//! not depend on the number of worker threads.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use arikoike_core::basicset::{
    assemble_basic_set, assemble_basic_set_gpn, charge_for, dm_partition, uglov_multipartitions, GpnSpec, UglovCharge,
};
use arikoike_core::combinatorics::{
    a_value_combinatorial, a_value_combinatorial_with_size, a_value_hook_formula, auto_symbol_size,
    enumerate_multipartitions, multiset_dominates, partitions_of, shifted_symbol, ChargeData, Multipartition,
    Partition,
};
use arikoike_core::exactalg::{CyclotomicInt, CyclotomicRing, MultiLaurent, SpecMap};
use arikoike_core::schur::{
    a_value_via_valuation, alpha_identity, conj_content_identity, is_defect_zero, is_defect_zero_via_schur,
    is_semisimple, is_semisimple_via_schur, schur_cancellation_free, schur_gim, schur_mathas, xst_factor, CycloSpec,
};
use arikoike_core::Rational;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Outcome of one named check over a list of cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: PASS ({} cases)", self.name, self.checked)
        } else if self.checked == 0 {
            write!(f, "{}: FAIL (no cases)", self.name)
        } else {
            write!(
                f,
                "{}: FAIL ({} of {} cases); first counterexample: {}",
                self.name,
                self.failed,
                self.checked,
                self.first_failure.as_deref().unwrap_or("?")
            )
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemmas,
    Formulas,
    Semisimple,
    Defect0,
    Avalues,
    Examples,
    Properties,
    Basicsets,
    All,
}

impl Suite {
    const EACH: [Suite; 8] = [
        Suite::Lemmas,
        Suite::Formulas,
        Suite::Semisimple,
        Suite::Defect0,
        Suite::Avalues,
        Suite::Examples,
        Suite::Properties,
        Suite::Basicsets,
    ];
}

/// Optional overrides of each suite's default ranges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_l: Option<usize>,
    pub max_n: Option<usize>,
}

impl Bounds {
    pub fn new(max_l: usize, max_n: usize) -> Self {
        Self {
            max_l: Some(max_l),
            max_n: Some(max_n),
        }
    }

    fn or(&self, l: usize, n: usize) -> (usize, usize) {
        (self.max_l.unwrap_or(l), self.max_n.unwrap_or(n))
    }
}

pub struct Runner {
    pool: rayon::ThreadPool,
}

impl Runner {
    /// `jobs = None` lets rayon pick the thread count.
    pub fn new(jobs: Option<usize>) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.unwrap_or(0))
            .build()
            .expect("thread pool");
        Self { pool }
    }

    pub fn check<T, F>(&self, name: &str, cases: &[T], f: F) -> Check
    where
        T: Sync,
        F: Fn(&T) -> Result<(), String> + Sync,
    {
        let results: Vec<Result<(), String>> = self.pool.install(|| cases.par_iter().map(&f).collect());
        let failed = results.iter().filter(|r| r.is_err()).count();
        let first_failure = results.into_iter().find_map(Result::err);
        Check {
            name: name.to_string(),
            checked: cases.len(),
            failed,
            first_failure,
        }
    }

    fn single(&self, name: &str, f: impl Fn() -> Result<(), String> + Sync) -> Check {
        self.check(name, &[()], |_| f())
    }
}

pub fn run_suite(suite: Suite, bounds: Bounds, runner: &Runner) -> Vec<Check> {
    match suite {
        Suite::Lemmas => lemmas(bounds, runner),
        Suite::Formulas => formulas(bounds, runner),
        Suite::Semisimple => semisimple(bounds, runner),
        Suite::Defect0 => defect0(bounds, runner),
        Suite::Avalues => avalues(bounds, runner),
        Suite::Examples => examples(runner),
        Suite::Properties => properties(bounds, runner),
        Suite::Basicsets => basicsets(bounds, runner),
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| run_suite(s, bounds, runner))
            .collect(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid(max_l: usize, max_n: usize) -> Vec<Multipartition> {
    (1..=max_l)
        .flat_map(|l| (0..=max_n).flat_map(move |n| enumerate_multipartitions(l, n)))
        .collect()
}

fn coprime_k(rng: &mut ChaCha8Rng, e: i64) -> i64 {
    loop {
        let k = rng.random_range(1..e);
        if gcd(k, e) == 1 {
            return k;
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn random_charges(rng: &mut ChaCha8Rng, l: usize, bound: i64) -> Vec<i64> {
    (0..l).map(|_| rng.random_range(-bound..=bound)).collect()
}

pub fn lemmas(bounds: Bounds, runner: &Runner) -> Vec<Check> {
    let (max_l, max_n) = bounds.or(3, 6);
    let cases: Vec<(Partition, usize)> = (1..=max_n)
        .flat_map(partitions_of)
        .flat_map(|p| (1..=p.part(1)).map(move |k| (p.clone(), k)))
        .collect();
    let rim = runner.check("lemmas/rim-content", &cases, |(p, k)| match conj_content_identity(p, *k) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("{} with k={}", p, k)),
        Err(e) => Err(format!("{} with k={}: {}", p, k, e)),
    });
    let mps = grid(max_l, max_n);
    let alpha = runner.check("lemmas/alpha", &mps, |m| ensure(alpha_identity(m), || m.to_string()));
    vec![rim, alpha]
}

fn q_integer(h: usize) -> MultiLaurent {
    MultiLaurent::from_terms(1, (0..h as i64).map(|a| (vec![a, 0], 1)))
}

pub fn three_formulas(m: &Multipartition) -> Result<(), String> {
    let err = |e: arikoike_core::Error| format!("{}: {}", m, e);
    let cf = schur_cancellation_free(m).map_err(err)?;
    let mathas = schur_mathas(m).map_err(err)?;
    ensure(mathas == cf, || format!("{}: Mathas {} vs {}", m, mathas, cf))?;
    let ell = m.length();
    for big_l in [ell, ell + 1, ell + 3] {
        let gim = schur_gim(m, big_l).map_err(err)?;
        ensure(gim == cf, || format!("{} with L={}: beta-number formula {} vs {}", m, big_l, gim, cf))?;
    }
    Ok(())
}

pub fn formulas(bounds: Bounds, runner: &Runner) -> Vec<Check> {
    let shapes = match (bounds.max_l, bounds.max_n) {
        (None, None) => vec![(3, 4), (4, 3)],
        _ => vec![bounds.or(3, 4)],
    };
    let mps: Vec<Multipartition> = shapes
        .iter()
        .flat_map(|&(l, n)| grid(l, n))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let three = runner.check("formulas/three-way", &mps, three_formulas);
    let pairs: Vec<(Multipartition, usize, usize)> = mps
        .iter()
        .flat_map(|m| {
            let l = m.level();
            (0..l).flat_map(move |s| (s + 1..l).map(move |t| (m.clone(), s, t)))
        })
        .collect();
    let xst = runner.check("formulas/x-factor", &pairs, |(m, s, t)| {
        xst_factor(m, *s, *t).map(|_| ()).map_err(|e| e.to_string())
    });
    let parts: Vec<Partition> = (0..=6).flat_map(partitions_of).collect();
    let type_a = runner.check("formulas/type-a", &parts, |p| {
        let m = Multipartition::new(vec![p.clone()]).map_err(|e| e.to_string())?;
        let mut expected = MultiLaurent::q_pow(1, -(p.n_function() as i64));
        for (i, j) in p.nodes() {
            expected = &expected * &q_integer(p.hook_length(i, j).map_err(|e| e.to_string())? as usize);
        }
        let got = schur_cancellation_free(&m).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("{}: {} vs {}", p, got, expected))
    });
    vec![three, xst, type_a]
}

pub fn semisimple(bounds: Bounds, runner: &Runner) -> Vec<Check> {
    let (max_l, max_n) = bounds.or(3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e_5e);
    let mut cases = Vec::new();
    for l in 1..=max_l {
        for n in 1..=max_n {
            for e in 2..=12 {
                let k = coprime_k(&mut rng, e);
                let r = rng.random_range(1..=6);
                let charges = random_charges(&mut rng, l, 6);
                cases.push((CycloSpec::cyclotomic(e, k, r, charges).expect("valid spec"), n));
            }
        }
    }
    let negatives = AtomicUsize::new(0);
    let agree = runner.check("semisimple/criterion-vs-schur", &cases, |(spec, n)| {
        let describe = || format!("{:?} n={}", spec, n);
        let p = is_semisimple(spec, *n).map_err(|e| format!("{}: {}", describe(), e))?;
        let s = is_semisimple_via_schur(spec, *n).map_err(|e| format!("{}: {}", describe(), e))?;
        if !p {
            negatives.fetch_add(1, AtomicOrdering::Relaxed);
        }
        ensure(p == s, || format!("{}: criterion {} vs Schur elements {}", describe(), p, s))
    });
    let neg = negatives.load(AtomicOrdering::Relaxed);
    let total = cases.len();
    let mixed = runner.single("semisimple/both-verdicts-occur", || {
        ensure(neg > 0 && neg < total, || format!("{} of {} specs not semisimple", neg, total))
    });
    vec![agree, mixed]
}

pub fn defect0(bounds: Bounds, runner: &Runner) -> Vec<Check> {
    let (max_l, max_n) = bounds.or(3, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(0xde_f0);
    let mut cases = Vec::new();
    for l in 1..=max_l {
        for e in [2i64, 3, 4, 6] {
            for _ in 0..5 {
                let k = coprime_k(&mut rng, e);
                let v = random_charges(&mut rng, l, 6);
                for n in 0..=max_n {
                    for m in enumerate_multipartitions(l, n) {
                        cases.push((m, e, k, v.clone()));
                    }
                }
            }
        }
    }
    let agree = runner.check("defect0/divisibility-vs-schur", &cases, |(m, e, k, v)| {
        let spec = CycloSpec::root_of_unity(*e, *k, v.clone()).map_err(|e| e.to_string())?;
        let a = is_defect_zero(m, *e, v).map_err(|e| e.to_string())?;
        let b = is_defect_zero_via_schur(m, &spec).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{} e={} k={} v={:?}: {} vs {}", m, e, k, v, a, b))
    });
    vec![agree]
}

pub fn avalues(bounds: Bounds, runner: &Runner) -> Vec<Check> {
    let (max_l, max_n) = bounds.or(3, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(0xa_a1);
    let mut cases = Vec::new();
    for l in 1..=max_l {
        for _ in 0..10 {
            let m = ChargeData::new(rng.random_range(1..=6), random_charges(&mut rng, l, 6)).expect("valid charges");
            for n in 0..=max_n {
                for x in enumerate_multipartitions(l, n) {
                    cases.push((x, m.clone()));
                }
            }
        }
    }
    let triple = runner.check("avalues/three-routes", &cases, |(x, m)| {
        let c = a_value_combinatorial(x, m).map_err(|e| e.to_string())?;
        let h = a_value_hook_formula(x, m).map_err(|e| e.to_string())?;
        let v = a_value_via_valuation(x, m).map_err(|e| e.to_string())?;
        ensure(c == h && h == Rational::from_integer(v), || {
            format!("{} with {:?}: {} / {} / {}", x, m, c, h, v)
        })
    });
    let sizes = runner.check("avalues/symbol-size", &cases, |(x, m)| {
        let s = auto_symbol_size(x, m);
        let a = a_value_combinatorial_with_size(x, m, s).map_err(|e| e.to_string())?;
        for t in [s + 1, s + 2] {
            let b = a_value_combinatorial_with_size(x, m, t).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{} with {:?}: size {} gives {}, size {} gives {}", x, m, s, a, t, b))?;
        }
        Ok(())
    });
    let mut periodic = Vec::new();
    for l in 2..=max_l.max(4) {
        for p in (2..=l).filter(|p| l % p == 0) {
            let d = l / p;
            for _ in 0..3 {
                let block = random_charges(&mut rng, d, 6);
                let charges: Vec<i64> = (0..l).map(|j| block[j % d]).collect();
                let m = ChargeData::new(rng.random_range(1..=6), charges).expect("valid charges");
                for n in 0..=max_n {
                    for x in enumerate_multipartitions(l, n) {
                        periodic.push((x, m.clone(), p, d));
                    }
                }
            }
        }
    }
    let shift = runner.check("avalues/shift-invariance", &periodic, |(x, m, p, d)| {
        let sx = x.sigma(*p, *d).map_err(|e| e.to_string())?;
        let a = a_value_combinatorial(x, m).map_err(|e| e.to_string())?;
        let b = a_value_combinatorial(&sx, m).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{} -> {} with {:?}: {} vs {}", x, sx, m, a, b))
    });
    vec![triple, sizes, shift]
}

fn mp(parts: &[&[usize]]) -> Multipartition {
    Multipartition::from_parts(parts).expect("valid literal")
}

fn mset(items: &[&[&[usize]]]) -> BTreeSet<Multipartition> {
    items.iter().map(|x| mp(x)).collect()
}

fn show(set: &BTreeSet<Multipartition>) -> String {
    let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn same_set(what: &str, got: &BTreeSet<Multipartition>, want: &BTreeSet<Multipartition>) -> Result<(), String> {
    ensure(got == want, || format!("{}: got {}, expected {}", what, show(got), show(want)))
}

/// `G(3,1,2)` at `η = ζ_12`, `r = 6`, charges `(3,-1,-2)`.
pub fn example_g312_spec() -> CycloSpec {
    CycloSpec::cyclotomic(12, 1, 6, vec![3, -1, -2]).expect("valid spec")
}

/// `G(3,3,2)` at `η = ζ_12`, `r = 2`, charge `0`.
pub fn example_g332_spec() -> GpnSpec {
    GpnSpec {
        e: 12,
        k: 1,
        r: 2,
        charges: vec![0],
        l: 3,
        p: 3,
        n: 2,
    }
}

pub fn example_g312_uglov() -> Result<(), String> {
    let spec = example_g312_spec();
    let dm = dm_partition(&spec, 2).map_err(|e| e.to_string())?;
    ensure(dm.classes() == [vec![0, 1], vec![2]], || format!("classes {:?}", dm.classes()))?;
    let c0 = charge_for(&dm, 0, &spec).map_err(|e| e.to_string())?;
    let c1 = charge_for(&dm, 1, &spec).map_err(|e| e.to_string())?;
    let phi = |lc, nc, c: &UglovCharge| uglov_multipartitions(lc, nc, c).map_err(|e| e.to_string());
    same_set("Phi^2_2", &phi(2, 2, &c0)?, &mset(&[&[&[2], &[]], &[&[1], &[1]]]))?;
    same_set("Phi^2_1", &phi(2, 1, &c0)?, &mset(&[&[&[1], &[]]]))?;
    same_set("Phi^1_1", &phi(1, 1, &c1)?, &mset(&[&[&[1]]]))?;
    same_set("Phi^1_2", &phi(1, 2, &c1)?, &mset(&[&[&[2]]]))
}

pub fn example_g312_basic_set() -> Result<(), String> {
    let b = assemble_basic_set(&example_g312_spec(), 2).map_err(|e| e.to_string())?;
    let want = mset(&[
        &[&[2], &[], &[]],
        &[&[1], &[1], &[]],
        &[&[1], &[], &[1]],
        &[&[], &[], &[2]],
    ]);
    same_set("basic set", b.elements(), &want)
}

/// On the `G(3,1,2)` basic set: the three a-value routes agree, and any two
/// elements differ in `κ` or in a-value.
pub fn example_g312_a_values() -> Result<(), String> {
    let spec = example_g312_spec();
    let b = assemble_basic_set(&spec, 2).map_err(|e| e.to_string())?;
    let m = ChargeData::new(spec.r(), spec.charges().to_vec()).map_err(|e| e.to_string())?;
    let elems: Vec<&Multipartition> = b.elements().iter().collect();
    let s = elems.iter().map(|x| auto_symbol_size(x, &m)).max().unwrap_or(1);
    let mut data = Vec::new();
    for x in &elems {
        let c = a_value_combinatorial(x, &m).map_err(|e| e.to_string())?;
        let h = a_value_hook_formula(x, &m).map_err(|e| e.to_string())?;
        let v = a_value_via_valuation(x, &m).map_err(|e| e.to_string())?;
        ensure(c == h && h == Rational::from_integer(v), || format!("{}: {} / {} / {}", x, c, h, v))?;
        let kappa = shifted_symbol(x, &m, s).map_err(|e| e.to_string())?.kappa();
        data.push((kappa.entries().to_vec(), c));
    }
    for i in 0..data.len() {
        for j in i + 1..data.len() {
            ensure(data[i] != data[j], || format!("{} and {} share κ and a-value", elems[i], elems[j]))?;
        }
    }
    Ok(())
}

pub fn example_g332() -> Result<(), String> {
    let (basic, orbits) = assemble_basic_set_gpn(&example_g332_spec()).map_err(|e| e.to_string())?;
    let want = mset(&[
        &[&[1], &[1], &[]],
        &[&[], &[1], &[1]],
        &[&[1], &[], &[1]],
        &[&[2], &[], &[]],
        &[&[], &[2], &[]],
        &[&[], &[], &[2]],
    ]);
    same_set("basic set", basic.elements(), &want)?;
    let got: BTreeSet<(Multipartition, usize, usize)> = orbits
        .iter()
        .map(|o| (o.representative().clone(), o.orbit_size(), o.stabilizer_size()))
        .collect();
    let expected: BTreeSet<_> = [(mp(&[&[1], &[1], &[]]), 3, 1), (mp(&[&[2], &[], &[]]), 3, 1)]
        .into_iter()
        .collect();
    ensure(got == expected, || format!("orbits {:?}", got))
}

pub fn examples(runner: &Runner) -> Vec<Check> {
    vec![
        runner.single("examples/g312-uglov", example_g312_uglov),
        runner.single("examples/g312-basic-set", example_g312_basic_set),
        runner.single("examples/g312-a-values", example_g312_a_values),
        runner.single("examples/g332-orbits", example_g332),
    ]
}

fn random_laurent(rng: &mut ChaCha8Rng, l: usize) -> Vec<(Vec<i64>, i64)> {
    let len = rng.random_range(0..6);
    (0..len)
        .map(|_| {
            let e = (0..=l).map(|_| rng.random_range(-3..=3)).collect();
            (e, rng.random_range(-5..=5))
        })
        .collect()
}

fn robin_hood(rng: &mut ChaCha8Rng, x: &[Rational]) -> Vec<Rational> {
    let mut y = x.to_vec();
    for _ in 0..rng.random_range(0..4) {
        y.sort_unstable_by(|a, b| b.cmp(a));
        let i = rng.random_range(0..y.len());
        let j = rng.random_range(0..y.len());
        let (hi, lo) = (i.min(j), i.max(j));
        let delta = (y[hi] - y[lo]) * Rational::new(rng.random_range(0..=4), 8);
        y[hi] -= delta;
        y[lo] += delta;
    }
    y
}

fn random_rationals(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..rng.random_range(1..6))
        .map(|_| Rational::new(rng.random_range(1..=12), rng.random_range(1..=4)))
        .collect()
}

fn sorted_desc(v: &[Rational]) -> Vec<Rational> {
    let mut v = v.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn brute_dominates(x: &[Rational], y: &[Rational]) -> bool {
    let (x, y) = (sorted_desc(x), sorted_desc(y));
    let mut sx = Rational::from_integer(0);
    let mut sy = Rational::from_integer(0);
    x.iter().zip(&y).all(|(a, b)| {
        sx += a;
        sy += b;
        sx >= sy
    })
}

pub fn properties(bounds: Bounds, runner: &Runner) -> Vec<Check> {
    let (max_l, max_n) = bounds.or(3, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x9_0b);

    let mut kappa_cases = Vec::new();
    for l in 1..=max_l {
        let mut charge_sets = vec![ChargeData::new(1, vec![0; l]).expect("valid")];
        for _ in 0..4 {
            charge_sets.push(ChargeData::new(rng.random_range(1..=6), random_charges(&mut rng, l, 6)).expect("valid"));
        }
        for m in charge_sets {
            for n in 0..=max_n {
                kappa_cases.push((l, n, m.clone()));
            }
        }
    }
    let kappa = runner.check("properties/kappa-dominance", &kappa_cases, |(l, n, m)| {
        let all = enumerate_multipartitions(*l, *n);
        let s = all.iter().map(|x| auto_symbol_size(x, m)).max().unwrap_or(1);
        let mut rows = Vec::new();
        for x in &all {
            let k = shifted_symbol(x, m, s).map_err(|e| e.to_string())?.kappa();
            let a = a_value_combinatorial(x, m).map_err(|e| e.to_string())?;
            rows.push((k, a));
        }
        for (i, (ki, ai)) in rows.iter().enumerate() {
            for (j, (kj, aj)) in rows.iter().enumerate() {
                if ki.dominance(kj).map_err(|e| e.to_string())? == Some(Ordering::Greater) {
                    ensure(aj > ai, || format!("{} dominates {} with {:?} but a-values {} / {}", all[i], all[j], m, ai, aj))?;
                }
            }
        }
        Ok(())
    });

    let concat_cases: Vec<_> = (0..1000)
        .map(|_| {
            let x1 = random_rationals(&mut rng);
            let x2 = random_rationals(&mut rng);
            let y1 = robin_hood(&mut rng, &x1);
            let y2 = robin_hood(&mut rng, &x2);
            (x1, x2, y1, y2)
        })
        .collect();
    let concat = runner.check("properties/concatenation", &concat_cases, |(x1, x2, y1, y2)| {
        let err = |e: arikoike_core::Error| e.to_string();
        ensure(brute_dominates(x1, y1) && brute_dominates(x2, y2), || "hypothesis".into())?;
        ensure(multiset_dominates(x1, y1).map_err(err)?, || format!("{:?} vs {:?}", x1, y1))?;
        let xs: Vec<Rational> = x1.iter().chain(x2).copied().collect();
        let ys: Vec<Rational> = y1.iter().chain(y2).copied().collect();
        let fast = multiset_dominates(&xs, &ys).map_err(err)?;
        ensure(fast && brute_dominates(&xs, &ys), || format!("{:?} vs {:?}", xs, ys))?;
        if sorted_desc(&xs) == sorted_desc(&ys) {
            ensure(sorted_desc(x1) == sorted_desc(y1) && sorted_desc(x2) == sorted_desc(y2), || {
                format!("equal concatenations from unequal parts {:?} {:?}", xs, ys)
            })?;
        }
        Ok(())
    });

    let canon_cases: Vec<_> = (0..1000)
        .map(|_| {
            let l = rng.random_range(0..=2);
            let a = random_laurent(&mut rng, l);
            let mut b = a.clone();
            b.shuffle(&mut rng);
            if rng.random_bool(0.5) {
                b.extend(random_laurent(&mut rng, l));
            }
            (l, a, b)
        })
        .collect();
    let canon = runner.check("properties/canonical-form", &canon_cases, |(l, a, b)| {
        let f = MultiLaurent::from_terms(*l, a.clone());
        let g = MultiLaurent::from_terms(*l, b.clone());
        let mut a_rev = a.clone();
        a_rev.reverse();
        let f2 = MultiLaurent::from_terms(*l, a_rev);
        ensure(f == f2, || format!("{} vs {}", f, f2))?;
        ensure((&f - &g).is_zero() == (f == g), || format!("{} vs {}", f, g))?;
        let no_zero = f.terms().all(|(_, c)| *c != BigInt::from(0));
        ensure(no_zero, || format!("zero coefficient in {}", f))
    });

    let pair_cases: Vec<_> = (0..500)
        .map(|_| {
            let l = rng.random_range(0..=2);
            let n = rng.random_range(1..=12usize);
            let q = (rng.random_range(0..12), rng.random_range(-3..=3));
            let big_q: Vec<(i64, i64)> = (0..l).map(|_| (rng.random_range(0..12), rng.random_range(-3..=3))).collect();
            (l, random_laurent(&mut rng, l), random_laurent(&mut rng, l), n, q, big_q)
        })
        .collect();
    let hom = runner.check("properties/homomorphism", &pair_cases, |(l, a, b, n, q, big_q)| {
        let err = |e: arikoike_core::Error| e.to_string();
        let theta = SpecMap::new(CyclotomicRing::new(*n).map_err(err)?, *q, big_q.clone());
        let f = MultiLaurent::from_terms(*l, a.clone());
        let g = MultiLaurent::from_terms(*l, b.clone());
        let (tf, tg) = (theta.specialise(&f).map_err(err)?, theta.specialise(&g).map_err(err)?);
        ensure(theta.specialise(&(&f * &g)).map_err(err)? == tf.checked_mul(&tg).map_err(err)?, || {
            format!("product of {} and {}", f, g)
        })?;
        ensure(theta.specialise(&(&f + &g)).map_err(err)? == tf.checked_add(&tg).map_err(err)?, || {
            format!("sum of {} and {}", f, g)
        })
    });
    let div = runner.check("properties/exact-division", &pair_cases, |(l, a, b, ..)| {
        let f = MultiLaurent::from_terms(*l, a.clone());
        let g = MultiLaurent::from_terms(*l, b.clone());
        if g.is_zero() {
            return ensure(f.exact_div(&g).is_err(), || "division by zero accepted".into());
        }
        let back = (&f * &g).exact_div(&g).map_err(|e| format!("({})*({}): {}", f, g, e))?;
        ensure(back == f, || format!("({})*({}) / ({}) = {}", f, g, g, back))
    });

    let cyclo_cases: Vec<_> = (0..400)
        .map(|i| {
            let n = rng.random_range(1..=24usize);
            let coeffs: Vec<i64> = (0..rng.random_range(1..30)).map(|_| rng.random_range(-9..=9)).collect();
            (i % 2 == 0, n, coeffs)
        })
        .collect();
    let cyclo = runner.check("properties/cyclotomic-zero-test", &cyclo_cases, |(difference, n, coeffs)| {
        let ring = CyclotomicRing::new(*n).map_err(|e| e.to_string())?;
        if *difference {
            let x = CyclotomicInt::from_poly(&ring, coeffs.iter().map(|&c| BigInt::from(c)).collect());
            let d = x.checked_sub(&x).map_err(|e| e.to_string())?;
            return ensure(d.is_zero(), || format!("{} - itself is nonzero", x));
        }
        let mut canonical: Vec<BigInt> = coeffs.iter().take(ring.degree()).map(|&c| BigInt::from(c)).collect();
        if canonical.iter().all(|c| *c == BigInt::from(0)) {
            canonical[0] = BigInt::from(1);
        }
        let y = CyclotomicInt::from_poly(&ring, canonical);
        ensure(!y.is_zero(), || format!("nonzero vector {} tests as zero", y))
    });
    vec![kappa, concat, canon, hom, div, cyclo]
}

/// `ζ_N`-exponent of `η^a η_l^b` for `η = ζ_e^k` and `N = lcm(l, e)`.
fn root_exponent(spec: &CycloSpec, eta_power: i64, eta_l_power: i64) -> (usize, i64) {
    let l = spec.level() as i64;
    let n = l * spec.e() / gcd(l, spec.e());
    (n as usize, (n / spec.e()) * spec.k() * eta_power + (n / l) * eta_l_power)
}

fn random_nondegenerate_spec(rng: &mut ChaCha8Rng, l: usize) -> CycloSpec {
    loop {
        let e = rng.random_range(2..=12);
        let r = rng.random_range(1..=6);
        if r % e == 0 {
            continue;
        }
        let k = coprime_k(rng, e);
        return CycloSpec::cyclotomic(e, k, r, random_charges(rng, l, 6)).expect("valid spec");
    }
}

pub fn basicsets(bounds: Bounds, runner: &Runner) -> Vec<Check> {
    let (max_l, max_n) = bounds.or(3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(0xb_a5e);
    let mut specs = Vec::new();
    for l in 1..=max_l {
        for n in 0..=max_n {
            for _ in 0..5 {
                specs.push((random_nondegenerate_spec(&mut rng, l), n));
            }
        }
    }

    // η^{rd} = η_l^{i-j} η^{r_i - r_j}, tested in Z[ζ_N]
    let linked = |spec: &CycloSpec, n: usize, i: usize, j: usize| -> bool {
        let rc = spec.charges();
        let (big_n, rhs) = root_exponent(spec, rc[i] - rc[j], i as i64 - j as i64);
        let ring = CyclotomicRing::new(big_n).expect("ring");
        let target = CyclotomicInt::zeta_pow(&ring, rhs);
        (1 - n as i64..n as i64).any(|d| {
            let (_, lhs) = root_exponent(spec, spec.r() * d, 0);
            CyclotomicInt::zeta_pow(&ring, lhs) == target
        })
    };
    let classes = runner.check("basicsets/parameter-classes", &specs, |(spec, n)| {
        let dm = dm_partition(spec, *n).map_err(|e| e.to_string())?;
        let l = spec.level();
        let mut seen = vec![false; l];
        for class in dm.classes() {
            for &i in class {
                ensure(!seen[i], || format!("{:?}: {} in two classes", spec, i))?;
                seen[i] = true;
            }
            // connected through linked pairs
            let mut reach = vec![class[0]];
            let mut frontier = vec![class[0]];
            while let Some(i) = frontier.pop() {
                for &j in class {
                    if !reach.contains(&j) && linked(spec, *n, i, j) {
                        reach.push(j);
                        frontier.push(j);
                    }
                }
            }
            ensure(reach.len() == class.len(), || format!("{:?} n={}: class {:?} not connected", spec, n, class))?;
        }
        ensure(seen.iter().all(|&x| x), || format!("{:?}: classes do not cover", spec))?;
        for (a, ca) in dm.classes().iter().enumerate() {
            for cb in &dm.classes()[a + 1..] {
                for &i in ca {
                    for &j in cb {
                        ensure(!linked(spec, *n, i, j), || {
                            format!("{:?} n={}: {} and {} linked across classes", spec, n, i, j)
                        })?;
                    }
                }
            }
        }
        Ok(())
    });

    let charges = runner.check("basicsets/class-charges", &specs, |(spec, n)| {
        let dm = dm_partition(spec, *n).map_err(|e| e.to_string())?;
        let rc = spec.charges();
        for (ci, class) in dm.classes().iter().enumerate() {
            let c = charge_for(&dm, ci, spec).map_err(|e| e.to_string())?;
            let (big_n, eta_r) = root_exponent(spec, spec.r(), 0);
            let ring = CyclotomicRing::new(big_n).map_err(|e| e.to_string())?;
            let order = (1..=spec.e())
                .find(|&t| CyclotomicInt::zeta_pow(&ring, eta_r * t) == CyclotomicInt::from_int(&ring, 1))
                .unwrap_or(0);
            ensure(order == c.e_prime(), || format!("{:?}: order of η^r is {}, got {}", spec, order, c.e_prime()))?;
            let i1 = class[0];
            for (pos, &ij) in class.iter().enumerate() {
                let (_, lhs) = root_exponent(spec, spec.r() * c.s()[pos], 0);
                let (_, rhs) = root_exponent(spec, rc[ij] - rc[i1], ij as i64 - i1 as i64);
                ensure(CyclotomicInt::zeta_pow(&ring, lhs) == CyclotomicInt::zeta_pow(&ring, rhs), || {
                    format!("{:?}: charge {} for parameter {} fails", spec, c.s()[pos], ij)
                })?;
            }
        }
        Ok(())
    });

    let mut uglov_cases = Vec::new();
    for lc in 1..=3usize {
        for _ in 0..4 {
            let ep = rng.random_range(2..=5);
            uglov_cases.push(UglovCharge::new(ep, random_charges(&mut rng, lc, 3)).expect("valid charge"));
        }
    }
    let growth = runner.check("basicsets/uglov-growth", &uglov_cases, |c| {
        let lc = c.s().len();
        let mut below = uglov_multipartitions(lc, 0, c).map_err(|e| e.to_string())?;
        for nc in 1..=4 {
            let level = uglov_multipartitions(lc, nc, c).map_err(|e| e.to_string())?;
            ensure(!level.is_empty(), || format!("{:?}: no Uglov multipartitions of {}", c, nc))?;
            for x in &level {
                ensure(x.level() == lc && x.rank() == nc, || format!("{:?}: {} has wrong shape", c, x))?;
                let parent = x.components().iter().enumerate().any(|(ci, part)| {
                    part.removable_nodes().iter().any(|&(row, _)| {
                        let mut parts = part.parts().to_vec();
                        parts[row - 1] -= 1;
                        let mut comps = x.components().to_vec();
                        comps[ci] = Partition::new(parts).expect("removable node");
                        below.contains(&Multipartition::new(comps).expect("multipartition"))
                    })
                });
                ensure(parent, || format!("{:?}: {} has no parent of rank {}", c, x, nc - 1))?;
            }
            below = level;
        }
        Ok(())
    });

    let assembled = runner.check("basicsets/assembled", &specs, |(spec, n)| {
        let b = assemble_basic_set(spec, *n).map_err(|e| format!("{:?} n={}: {}", spec, n, e))?;
        ensure(!b.elements().is_empty(), || format!("{:?} n={}: empty basic set", spec, n))?;
        ensure(b.elements().iter().all(|x| x.level() == spec.level() && x.rank() == *n), || {
            format!("{:?} n={}: element of wrong shape", spec, n)
        })
    });

    let mut gpn_cases = vec![example_g332_spec()];
    while gpn_cases.len() < 6 {
        let e = rng.random_range(2..=12);
        let r = rng.random_range(1..=6);
        if (2 * r) % e == 0 {
            continue;
        }
        gpn_cases.push(GpnSpec {
            e,
            k: coprime_k(&mut rng, e),
            r,
            charges: random_charges(&mut rng, 1, 6),
            l: 2,
            p: 2,
            n: 3,
        });
    }
    let orbits = runner.check("basicsets/shift-orbits", &gpn_cases, |spec| {
        let (basic, orbits) = assemble_basic_set_gpn(spec).map_err(|e| format!("{:?}: {}", spec, e))?;
        let covered: usize = orbits.iter().map(|o| o.orbit_size()).sum();
        ensure(covered == basic.elements().len(), || format!("{:?}: orbits cover {} elements", spec, covered))?;
        for o in &orbits {
            ensure(o.orbit_size() * o.stabilizer_size() == spec.p, || format!("{:?}: bad orbit data", spec))?;
            for x in basic.elements() {
                let sx = x.sigma(spec.p, spec.l / spec.p).map_err(|e| e.to_string())?;
                ensure(basic.elements().contains(&sx), || format!("{:?}: {} not shift-stable", spec, x))?;
            }
        }
        Ok(())
    });
    vec![classes, charges, growth, assembled, orbits]
}
