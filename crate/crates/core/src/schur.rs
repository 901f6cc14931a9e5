//! Schur elements of Ariki-Koike algebras and what can be read off them.
//!
//! Polynomials live in `Z[q^±, Q_0^±, …, Q_{l-1}^±]` as [`MultiLaurent`]
//! values. Specialisations go to `Z[ζ_N][u^±]`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::combinatorics::{enumerate_multipartitions, gen_hook_unchecked, ChargeData, Multipartition, Partition};
use crate::error::domain;
use crate::exactalg::{CycloLaurent, CyclotomicInt, CyclotomicRing, FactoredLaurent, Monomial, MultiLaurent, SpecMap};
use crate::{Error, Result};

/// How the generic parameters are sent to roots of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecMode {
    /// `q ↦ η^r`, `Q_j ↦ η_l^j η^{r_j}`.
    Cyclotomic,
    /// `q ↦ η`, `Q_j ↦ η^{v_j}`.
    RootOfUnity,
}

/// A specialisation of the parameters at `η = exp(2πik/e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloSpec {
    e: i64,
    k: i64,
    r: i64,
    charges: Vec<i64>,
    mode: SpecMode,
}

impl CycloSpec {
    pub fn cyclotomic(e: i64, k: i64, r: i64, charges: Vec<i64>) -> Result<Self> {
        Self::validate(e, k, r, &charges)?;
        Ok(Self {
            e,
            k,
            r,
            charges,
            mode: SpecMode::Cyclotomic,
        })
    }

    pub fn root_of_unity(e: i64, k: i64, v: Vec<i64>) -> Result<Self> {
        Self::validate(e, k, 1, &v)?;
        Ok(Self {
            e,
            k,
            r: 1,
            charges: v,
            mode: SpecMode::RootOfUnity,
        })
    }

    fn validate(e: i64, k: i64, r: i64, charges: &[i64]) -> Result<()> {
        if e < 2 {
            return Err(domain!("e must be at least 2, got {}", e));
        }
        if k.gcd(&e) != 1 {
            return Err(domain!("gcd(k,e) must be 1, got k={} e={}", k, e));
        }
        if r < 1 {
            return Err(domain!("r must be positive, got {}", r));
        }
        if charges.is_empty() {
            return Err(domain!("at least one charge is needed"));
        }
        Ok(())
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn mode(&self) -> SpecMode {
        self.mode
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    /// The map `θ` into `Z[ζ_N]` with `N = lcm(l, e)` (cyclotomic mode) or
    /// `N = e` (root-of-unity mode). Every image has `u`-degree 0.
    pub fn spec_map(&self) -> Result<SpecMap> {
        let l = self.level() as i64;
        match self.mode {
            SpecMode::Cyclotomic => {
                let n = l.lcm(&self.e);
                let ring = CyclotomicRing::new(n as usize)?;
                let eta = n / self.e * self.k;
                let big_q = self
                    .charges
                    .iter()
                    .enumerate()
                    .map(|(j, rj)| ((n / l) * j as i64 + eta * rj, 0))
                    .collect();
                Ok(SpecMap::new(ring, (eta * self.r, 0), big_q))
            }
            SpecMode::RootOfUnity => {
                let ring = CyclotomicRing::new(self.e as usize)?;
                let big_q = self.charges.iter().map(|v| (self.k * v, 0)).collect();
                Ok(SpecMap::new(ring, (self.k, 0), big_q))
            }
        }
    }
}

fn mono(l: usize, q: i64, big_q: &[(usize, i64)]) -> Monomial {
    let mut e = vec![0; l + 1];
    e[0] = q;
    for &(j, a) in big_q {
        e[j + 1] += a;
    }
    Monomial::new(e)
}

/// `[h]_q = 1 + q + … + q^{h-1}`.
fn q_integer(l: usize, h: i64) -> Result<MultiLaurent> {
    if h < 1 {
        return Err(Error::Internal(format!("[{}]_q with nonpositive argument", h)));
    }
    Ok(MultiLaurent::from_terms(
        l,
        (0..h).map(|a| {
            let mut e = vec![0; l + 1];
            e[0] = a;
            (e, 1)
        }),
    ))
}

fn sign(l: usize, odd: bool) -> MultiLaurent {
    MultiLaurent::constant(l, if odd { -1 } else { 1 })
}

/// `s_λ` as a pure product of `[h]_q` and `(q^h Q_s Q_t^{-1} - 1)` factors.
pub fn schur_cancellation_free(mp: &Multipartition) -> Result<MultiLaurent> {
    let l = mp.level();
    let n = mp.rank();
    let one = MultiLaurent::one(l);
    let n_bar = mp.rebar().n_function() as i64;
    let mut out = sign(l, (n * (l - 1)) % 2 == 1).mul_term(&mono(l, -n_bar, &[]), &1.into());
    for (s, i, j) in mp.nodes() {
        let lam_s = mp.component(s);
        out = &out * &q_integer(l, gen_hook_unchecked(lam_s, lam_s, i, j))?;
        for t in (0..l).filter(|&t| t != s) {
            let h = gen_hook_unchecked(lam_s, mp.component(t), i, j);
            let f = &MultiLaurent::term(l, mono(l, h, &[(s, 1), (t, -1)]), 1) - &one;
            out = &out * &f;
        }
    }
    Ok(out)
}

/// `α(λ') = ½ Σ_s Σ_i (λ^{s'}_i - 1) λ^{s'}_i`.
pub fn alpha_conjugate(mp: &Multipartition) -> i64 {
    mp.components()
        .iter()
        .map(|c| {
            c.conjugate()
                .parts()
                .iter()
                .map(|&x| (x as i64 - 1) * x as i64)
                .sum::<i64>()
        })
        .sum::<i64>()
        / 2
}

fn conj_dot(a: &Partition, b: &Partition) -> i64 {
    let (ac, bc) = (a.conjugate(), b.conjugate());
    ac.parts().iter().zip(bc.parts()).map(|(x, y)| (x * y) as i64).sum()
}

fn check_pair(mp: &Multipartition, s: usize, t: usize) -> Result<()> {
    if s >= t || t >= mp.level() {
        return Err(domain!("need 0 <= s < t < {}, got s={} t={}", mp.level(), s, t));
    }
    Ok(())
}

fn xst_mathas(mp: &Multipartition, s: usize, t: usize) -> Result<MultiLaurent> {
    let l = mp.level();
    let (lam_s, lam_t) = (mp.component(s), mp.component(t));
    let lam_t_conj = lam_t.conjugate();
    let t1 = lam_t.part(1) as i64;
    let mut f = FactoredLaurent::one(l);
    for (i, j) in lam_t.nodes() {
        let c = j as i64 - i as i64;
        f.mul_difference(&mono(l, c, &[(t, 1)]), &mono(l, 0, &[(s, 1)]), 1)?;
    }
    for (i, j) in lam_s.nodes() {
        let c = j as i64 - i as i64;
        let a = mono(l, c, &[(s, 1)]);
        f.mul_difference(&a, &mono(l, t1, &[(t, 1)]), 1)?;
        for k in 1..=t1 {
            let tk = lam_t_conj.part(k as usize) as i64;
            f.mul_difference(&a, &mono(l, k - 1 - tk, &[(t, 1)]), 1)?;
            f.mul_difference(&a, &mono(l, k - tk, &[(t, 1)]), -1)?;
        }
    }
    f.expand()
}

fn xst_closed(mp: &Multipartition, s: usize, t: usize) -> MultiLaurent {
    let l = mp.level();
    let one = MultiLaurent::one(l);
    let (lam_s, lam_t) = (mp.component(s), mp.component(t));
    let lead = mono(
        l,
        -conj_dot(lam_s, lam_t),
        &[(s, lam_t.size() as i64), (t, lam_s.size() as i64)],
    );
    let mut out = MultiLaurent::term(l, lead, 1);
    for (i, j) in lam_s.nodes() {
        let h = gen_hook_unchecked(lam_s, lam_t, i, j);
        out = &out * &(&MultiLaurent::term(l, mono(l, h, &[(s, 1), (t, -1)]), 1) - &one);
    }
    for (i, j) in lam_t.nodes() {
        let h = gen_hook_unchecked(lam_t, lam_s, i, j);
        out = &out * &(&MultiLaurent::term(l, mono(l, h, &[(t, 1), (s, -1)]), 1) - &one);
    }
    out
}

/// The factor `X_st` of the Mathas formula, computed from its defining
/// quotient and from its closed product form. The two must agree.
pub fn xst_factor(mp: &Multipartition, s: usize, t: usize) -> Result<MultiLaurent> {
    check_pair(mp, s, t)?;
    let quotient = xst_mathas(mp, s, t)?;
    let closed = xst_closed(mp, s, t);
    if quotient != closed {
        return Err(Error::FormulaMismatch(format!(
            "X_{}{} for {}: {} vs {}",
            s, t, mp, quotient, closed
        )));
    }
    Ok(closed)
}

/// `s_λ` by the Mathas formula.
pub fn schur_mathas(mp: &Multipartition) -> Result<MultiLaurent> {
    let l = mp.level();
    let n = mp.rank() as i64;
    let mut lead: Vec<(usize, i64)> = (0..l).map(|s| (s, -n)).collect();
    for (s, c) in mp.components().iter().enumerate() {
        lead.push((s, c.size() as i64));
    }
    let mut out = sign(l, (n * (l as i64 - 1)) % 2 == 1).mul_term(&mono(l, -alpha_conjugate(mp), &lead), &1.into());
    for (s, i, j) in mp.nodes() {
        let lam_s = mp.component(s);
        out = &out * &q_integer(l, gen_hook_unchecked(lam_s, lam_s, i, j))?;
    }
    for s in 0..l {
        for t in s + 1..l {
            out = &out * &xst_mathas(mp, s, t)?;
        }
    }
    Ok(out)
}

/// `s_λ` by the beta-number formula with symbol size `big_l ≥ ℓ(λ)`.
pub fn schur_gim(mp: &Multipartition, big_l: usize) -> Result<MultiLaurent> {
    let b = mp.l_symbol(big_l)?;
    let l = mp.level();
    let n = mp.rank() as i64;
    let (li, ll) = (l as i64, big_l as i64);
    let a_l = n * (li - 1) + li * (li - 1) / 2 * (ll * (ll - 1) / 2);
    let b_l = li * ll * (ll - 1) * (2 * li * ll - li - 3) / 12;

    let mut f = FactoredLaurent::one(l);
    f.negate_if(a_l % 2 != 0);
    let lead: Vec<(usize, i64)> = (0..l).map(|s| (s, -n)).collect();
    f.mul_monomial(&mono(l, b_l, &lead));
    f.mul_difference(&mono(l, 1, &[]), &mono(l, 0, &[]), -n)?;
    for s in 0..l {
        for t in s + 1..l {
            f.mul_difference(&mono(l, 0, &[(s, 1)]), &mono(l, 0, &[(t, 1)]), ll)?;
        }
    }
    for s in 0..l {
        for t in 0..l {
            for &bs in &b[s] {
                for k in 1..=bs as i64 {
                    f.mul_difference(&mono(l, k, &[(s, 1)]), &mono(l, 0, &[(t, 1)]), 1)?;
                }
            }
        }
    }
    for s in 0..l {
        for t in s + 1..l {
            for &bs in &b[s] {
                for &bt in &b[t] {
                    f.mul_difference(&mono(l, bs as i64, &[(s, 1)]), &mono(l, bt as i64, &[(t, 1)]), -1)?;
                }
            }
        }
        for i in 0..big_l {
            for j in i + 1..big_l {
                f.mul_difference(&mono(l, b[s][i] as i64, &[(s, 1)]), &mono(l, b[s][j] as i64, &[(s, 1)]), -1)?;
            }
        }
    }
    f.expand()
}

/// Checks the rim-content identity for `λ` and `1 ≤ k ≤ λ_1` by clearing
/// denominators and comparing both sides in `Z[q^±, y]`.
pub fn conj_content_identity(p: &Partition, k: usize) -> Result<bool> {
    if k < 1 || k > p.part(1) {
        return Err(domain!("k must satisfy 1 <= k <= {}, got {}", p.part(1), k));
    }
    // y plays the role of Q_0 in a one-parameter ring
    let one = MultiLaurent::one(1);
    let bin = |a: i64| &MultiLaurent::term(1, mono(1, a, &[(0, 1)]), 1) - &one;
    let conj = p.conjugate();
    let lam = |i: usize| p.part(i) as i64;
    let lamc = |j: usize| conj.part(j) as i64;

    let mut lhs_num = one.clone();
    let mut lhs_den = bin(lam(1));
    for i in 1..=conj.part(k) {
        lhs_num = &lhs_num * &bin(lam(i) - i as i64 + 1);
        lhs_den = &lhs_den * &bin(lam(i) - i as i64);
    }
    let mut rhs_num = one.clone();
    let mut rhs_den = bin(-lamc(k) + k as i64 - 1);
    for j in k..=p.part(1) {
        rhs_num = &rhs_num * &bin(-lamc(j) + j as i64 - 1);
        rhs_den = &rhs_den * &bin(-lamc(j) + j as i64);
    }
    Ok(&lhs_num * &rhs_den == &rhs_num * &lhs_den)
}

/// Checks `α(λ') + Σ_{s<t} Σ_i λ^{s'}_i λ^{t'}_i = n(λ̄)`.
pub fn alpha_identity(mp: &Multipartition) -> bool {
    let mut lhs = alpha_conjugate(mp);
    for s in 0..mp.level() {
        for t in s + 1..mp.level() {
            lhs += conj_dot(mp.component(s), mp.component(t));
        }
    }
    lhs == mp.rebar().n_function() as i64
}

fn ariki_factors(l: usize, n: usize) -> Vec<MultiLaurent> {
    let mut out = Vec::new();
    for i in 2..=n as i64 {
        out.push(q_integer(l, i).expect("i >= 2"));
    }
    let ni = n as i64;
    for s in 0..l {
        for t in s + 1..l {
            for k in 1 - ni..ni {
                out.push(
                    &MultiLaurent::term(l, mono(l, k, &[(s, 1)]), 1) - &MultiLaurent::term(l, mono(l, 0, &[(t, 1)]), 1),
                );
            }
        }
    }
    out
}

/// `P(q) = Π_{i≤n} [i]_q · Π_{s<t} Π_{-n<k<n} (q^k Q_s - Q_t)`.
pub fn ariki_poly(l: usize, n: usize) -> Result<MultiLaurent> {
    if l < 1 || n < 1 {
        return Err(domain!("l and n must be positive, got l={} n={}", l, n));
    }
    Ok(ariki_factors(l, n)
        .iter()
        .fold(MultiLaurent::one(l), |acc, f| &acc * f))
}

/// `θ(P)`, computed factor by factor in `Z[ζ_N]`.
pub fn ariki_poly_specialised(spec: &CycloSpec, n: usize) -> Result<CycloLaurent> {
    let l = spec.level();
    if n < 1 {
        return Err(domain!("n must be positive, got {}", n));
    }
    let theta = spec.spec_map()?;
    let mut acc = CycloLaurent::monomial(CyclotomicInt::from_int(theta.ring(), 1), 0);
    for f in ariki_factors(l, n) {
        acc = acc.checked_mul(&theta.specialise(&f)?)?;
    }
    Ok(acc)
}

/// Semisimplicity of the specialised algebra of rank `n` and level
/// `spec.level()`, read off `θ(P) ≠ 0`.
pub fn is_semisimple(spec: &CycloSpec, n: usize) -> Result<bool> {
    let verdict = n == 0 || !ariki_poly_specialised(spec, n)?.is_zero();
    #[cfg(debug_assertions)]
    {
        let other = is_semisimple_via_schur(spec, n)?;
        if other != verdict {
            return Err(Error::FormulaMismatch(format!(
                "semisimplicity: P-criterion says {}, Schur elements say {}",
                verdict, other
            )));
        }
    }
    Ok(verdict)
}

/// Semisimplicity read off `θ(s_λ) ≠ 0` for every `λ ∈ Π^l_n`.
pub fn is_semisimple_via_schur(spec: &CycloSpec, n: usize) -> Result<bool> {
    let theta = spec.spec_map()?;
    for mp in enumerate_multipartitions(spec.level(), n) {
        if theta.specialise(&schur_cancellation_free(&mp)?)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_charges(mp: &Multipartition, v: &[i64]) -> Result<()> {
    if v.len() != mp.level() {
        return Err(domain!("{} charges given for a {}-multipartition", v.len(), mp.level()));
    }
    Ok(())
}

/// Whether `λ` is alone in its block at `q = η`, `Q_j = η^{v_j}` with `η` a
/// primitive `e`-th root of unity: no `h^{λ^s,λ^t}_{i,j} + v_s - v_t` is
/// divisible by `e`.
pub fn is_defect_zero(mp: &Multipartition, e: i64, v: &[i64]) -> Result<bool> {
    if e < 2 {
        return Err(domain!("e must be at least 2, got {}", e));
    }
    check_charges(mp, v)?;
    let l = mp.level();
    let verdict = mp.nodes().all(|(s, i, j)| {
        (0..l).all(|t| {
            let h = gen_hook_unchecked(mp.component(s), mp.component(t), i, j);
            (h + v[s] - v[t]).rem_euclid(e) != 0
        })
    });
    #[cfg(debug_assertions)]
    {
        let other = is_defect_zero_via_schur(mp, &CycloSpec::root_of_unity(e, 1, v.to_vec())?)?;
        if other != verdict {
            return Err(Error::FormulaMismatch(format!(
                "defect 0 for {}: divisibility says {}, Schur element says {}",
                mp, verdict, other
            )));
        }
    }
    Ok(verdict)
}

/// Defect 0 read off `θ(s_λ) ≠ 0`.
pub fn is_defect_zero_via_schur(mp: &Multipartition, spec: &CycloSpec) -> Result<bool> {
    check_charges(mp, spec.charges())?;
    Ok(!spec.spec_map()?.specialise(&schur_cancellation_free(mp)?)?.is_zero())
}

/// `-val_u θ(s_λ)` for `θ(q) = u^r`, `θ(Q_j) = ζ_l^j u^{r_j}`.
pub fn a_value_via_valuation(mp: &Multipartition, m: &ChargeData) -> Result<i64> {
    check_charges(mp, m.charges())?;
    let l = mp.level();
    let ring = CyclotomicRing::new(l)?;
    let big_q = m
        .charges()
        .iter()
        .enumerate()
        .map(|(j, &rj)| (j as i64, rj))
        .collect();
    let theta = SpecMap::new(ring, (0, m.r()), big_q);
    let image = theta.specialise(&schur_cancellation_free(mp)?)?;
    if image.is_zero() {
        return Err(Error::Internal(format!("specialised Schur element of {} vanishes", mp)));
    }
    Ok(-image.valuation()?)
}
