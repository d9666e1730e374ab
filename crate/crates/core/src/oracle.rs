//! Brute-force reference computations on explicit polynomials.
//!
//! Nothing here touches the Littlewood–Richardson, character or plethysm code
//! in [`crate::symfunc`]; symmetric functions are realised as polynomials in
//! finitely many variables built from semistandard tableaux, and read back into
//! the Schur basis through Kostka numbers.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::series::{SeriesId, SeriesName};
use crate::symfunc::{SchurExpansion, TensorExpansion};

/// Up to 16 variables, 8 bits of exponent each.
pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        Monomial(exps.iter().enumerate().fold(0u128, |acc, (i, &e)| acc | (e as u128) << (8 * i)))
    }

    pub fn exponent(self, i: usize) -> u8 {
        (self.0 >> (8 * i)) as u8
    }

    pub fn exponents(self, n: usize) -> Vec<u8> {
        (0..n).map(|i| self.exponent(i)).collect()
    }

    pub fn degree(self) -> u32 {
        self.0.to_le_bytes().iter().map(|&b| b as u32).sum()
    }

    /// Product; caller guarantees no exponent exceeds 255.
    pub fn times(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }

    pub fn pow(self, k: u32) -> Monomial {
        Monomial(self.0 * k as u128)
    }

    pub fn divides(self, other: Monomial) -> bool {
        let (a, b) = (self.0.to_le_bytes(), other.0.to_le_bytes());
        a.iter().zip(&b).all(|(x, y)| x <= y)
    }
}

/// Integer polynomial in `nvars` commuting variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: HashMap<Monomial, i64>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MonomialPoly { nvars, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::ONE, 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: Monomial) -> i64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul_truncated(&self, other: &MonomialPoly, max_degree: u32) -> MonomialPoly {
        let mut out = MonomialPoly::zero(self.nvars);
        for (a, ca) in self.terms() {
            let da = a.degree();
            for (b, cb) in other.terms() {
                if da + b.degree() <= max_degree {
                    out.add_term(a.times(b), ca * cb);
                }
            }
        }
        out
    }

    /// Is the polynomial invariant under permutations of the variables in `block`?
    /// Checked on adjacent transpositions, which generate the symmetric group.
    pub fn is_symmetric_in(&self, block: std::ops::Range<usize>) -> bool {
        self.terms().all(|(m, c)| {
            let e = m.exponents(self.nvars);
            (block.start..block.end.saturating_sub(1)).all(|i| {
                let mut t = e.clone();
                t.swap(i, i + 1);
                self.coeff(Monomial::from_exponents(&t)) == c
            })
        })
    }
}

/// Chains `inner = ν_0 ⊂ ν_1 ⊂ …` of horizontal strips inside `outer`:
/// all `ν ⊇ inner` with `ν/inner` a horizontal strip of size `k`, `ν ⊆ outer`.
fn horizontal_strips(inner: &[u32], outer: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn go(inner: &[u32], outer: &[u32], r: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            let mut v = cur.clone();
            v.extend_from_slice(inner.get(r..).unwrap_or(&[]));
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
            return;
        }
        if r >= outer.len() {
            return;
        }
        let base = inner.get(r).copied().unwrap_or(0);
        let roof = if r == 0 { outer[0] } else { outer[r].min(inner.get(r - 1).copied().unwrap_or(0)) };
        for add in 0..=left.min(roof.saturating_sub(base)) {
            cur.push(base + add);
            go(inner, outer, r + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(inner, outer, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `lambda` with content `content`
/// (any composition).
pub fn kostka(lambda: &Partition, content: &[u32]) -> i64 {
    fn go(shape: &[u32], lambda: &[u32], content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
        let i = content.len();
        if i == 0 {
            return (shape == lambda) as i64;
        }
        let key = (shape.to_vec(), i);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = horizontal_strips(shape, lambda, content[0]).iter().map(|nu| go(nu, lambda, &content[1..], memo)).sum();
        memo.insert(key, v);
        v
    }
    if content.iter().sum::<u32>() != lambda.weight() {
        return 0;
    }
    go(&[], lambda.parts(), content, &mut HashMap::new())
}

/// Monomials of `s_λ(x_1..x_n)` that divide `bound`, each with its multiplicity.
fn tableau_monomials(lambda: &Partition, n: usize, bound: Option<Monomial>) -> Vec<(Monomial, i64)> {
    fn go(
        shape: &[u32],
        lambda: &[u32],
        i: usize,
        n: usize,
        mono: Monomial,
        bound: Option<Monomial>,
        acc: &mut HashMap<Monomial, i64>,
    ) {
        let filled: u32 = shape.iter().sum();
        let total: u32 = lambda.iter().sum();
        if filled == total {
            *acc.entry(mono).or_insert(0) += 1;
            return;
        }
        if i == n {
            return;
        }
        let cap = bound.map_or(total - filled, |b| (b.exponent(i) as u32).min(total - filled));
        for k in 0..=cap {
            for nu in horizontal_strips(shape, lambda, k) {
                let mut e = [0u8; MAX_VARS];
                e[i] = k as u8;
                go(&nu, lambda, i + 1, n, mono.times(Monomial::from_exponents(&e)), bound, acc);
            }
        }
    }
    let mut acc = HashMap::new();
    if lambda.len() <= n {
        go(&[], lambda.parts(), 0, n, Monomial::ONE, bound, &mut acc);
    }
    let mut v: Vec<_> = acc.into_iter().collect();
    v.sort();
    v
}

/// `s_λ(x_1, …, x_n)` by tableau enumeration.
pub fn schur_poly(lambda: &Partition, n: usize) -> MonomialPoly {
    let mut p = MonomialPoly::zero(n);
    for (m, c) in tableau_monomials(lambda, n, None) {
        p.add_term(m, c);
    }
    p
}

/// `F(x_1, …, x_n)`, summing tableau monomials term by term.
pub fn expand_in_variables(f: &SchurExpansion, n: usize) -> MonomialPoly {
    let mut p = MonomialPoly::zero(n);
    for (lam, c) in f.iter() {
        for (m, k) in tableau_monomials(lam, n, None) {
            p.add_term(m, c * k);
        }
    }
    p
}

fn padded(alpha: &Partition, n: usize) -> Vec<u8> {
    let mut e: Vec<u8> = alpha.parts().iter().map(|&p| p as u8).collect();
    e.resize(n, 0);
    e
}

/// Solve `d_α = Σ_λ c_λ K_{λα}` over `α ⊢ weight`, `ℓ(α) ≤ n`.
fn unitriangular_solve(weight: u32, n: usize, dominant: impl Fn(&Partition) -> i64) -> SchurExpansion {
    let alphas: Vec<Partition> = partitions_of(weight, Some(n), None).collect();
    let mut found: Vec<(Partition, i64)> = Vec::new();
    for alpha in &alphas {
        let mut c = dominant(alpha);
        for (lam, cl) in &found {
            c -= cl * kostka(lam, alpha.parts());
        }
        if c != 0 {
            found.push((alpha.clone(), c));
        }
    }
    found.into_iter().collect()
}

/// Reads a symmetric polynomial back in the Schur basis. The answer is exact
/// for every `s_λ` with `ℓ(λ) ≤ nvars`.
pub fn schur_decompose(p: &MonomialPoly) -> Result<SchurExpansion> {
    let n = p.nvars();
    if !p.is_symmetric_in(0..n) {
        return Err(Error::NotSymmetric);
    }
    let max_deg = p.terms().map(|(m, _)| m.degree()).max().unwrap_or(0);
    let mut out = SchurExpansion::zero();
    for d in 0..=max_deg {
        let part = unitriangular_solve(d, n, |a| p.coeff(Monomial::from_exponents(&padded(a, n))));
        out += &part;
    }
    Ok(out)
}

/// `s_μ · s_ν` from monomial coefficients in `n` variables.
pub fn lr_oracle(mu: &Partition, nu: &Partition, n: usize) -> SchurExpansion {
    let pm = schur_poly(mu, n);
    let pn = schur_poly(nu, n);
    unitriangular_solve(mu.weight() + nu.weight(), n, |alpha| {
        let target = Monomial::from_exponents(&padded(alpha, n));
        pm.terms().filter(|(m, _)| m.divides(target)).map(|(m, c)| c * pn.coeff(Monomial(target.0 - m.0))).sum()
    })
}

/// `s_μ[s_λ]` in `n` variables: `s_μ` evaluated on the monomials of `s_λ(x)`,
/// one dominant coefficient at a time, by building tableaux of shape `μ`
/// filled with those monomials.
pub fn plethysm_oracle(lambda: &Partition, mu: &Partition, n: usize) -> SchurExpansion {
    let weight = lambda.weight() * mu.weight();
    unitriangular_solve(weight, n, |alpha| {
        let target = Monomial::from_exponents(&padded(alpha, n));
        let ys = tableau_monomials(lambda, n, Some(target));
        let mut states: HashMap<(Vec<u32>, Monomial), i64> = HashMap::from([((Vec::new(), Monomial::ONE), 1)]);
        for (y, mult) in ys {
            for _ in 0..mult {
                let mut next: HashMap<(Vec<u32>, Monomial), i64> = HashMap::new();
                for ((shape, mono), c) in &states {
                    let room = mu.weight() - shape.iter().sum::<u32>();
                    for k in 0..=room {
                        let m = mono.times(y.pow(k));
                        if k > 0 && !m.divides(target) {
                            break;
                        }
                        for nu in horizontal_strips(shape, mu.parts(), k) {
                            *next.entry((nu, m)).or_insert(0) += c;
                        }
                    }
                }
                states = next;
            }
        }
        states.get(&(mu.parts().to_vec(), target)).copied().unwrap_or(0)
    })
}

/// One factor of a generating product, `(1 ∓ w)^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `1 - w`
    OneMinus,
    /// `1 + w`
    OnePlus,
    /// `(1 - w)^{-1}`
    InvOneMinus,
    /// `(1 + w)^{-1}`
    InvOnePlus,
}

/// Monomials `x_i`.
pub fn linear_monomials(n: usize) -> Vec<Monomial> {
    (0..n)
        .map(|i| {
            let mut e = vec![0u8; n];
            e[i] = 1;
            Monomial::from_exponents(&e)
        })
        .collect()
}

/// Monomials `x_i x_j` over `i < j`, or `i ≤ j` when `diagonal`.
pub fn quadratic_monomials(n: usize, diagonal: bool) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && !diagonal {
                continue;
            }
            let mut e = vec![0u8; n];
            e[i] += 1;
            e[j] += 1;
            out.push(Monomial::from_exponents(&e));
        }
    }
    out
}

/// The monomials of `s_π(x_1..x_n)`, repeated by multiplicity.
pub fn schur_monomials(pi: &Partition, n: usize) -> Vec<Monomial> {
    tableau_monomials(pi, n, None).into_iter().flat_map(|(m, c)| std::iter::repeat_n(m, c as usize)).collect()
}

/// Expands `Π (1 ∓ w)^{±1}` to degree `d` in `n` variables.
pub fn generating_product(factors: &[(Monomial, FactorKind)], n: usize, d: u32) -> MonomialPoly {
    let mut acc = MonomialPoly::one(n);
    for &(w, kind) in factors {
        let deg = w.degree();
        if deg == 0 || deg > d {
            continue;
        }
        let mut f = MonomialPoly::one(n);
        match kind {
            FactorKind::OneMinus => f.add_term(w, -1),
            FactorKind::OnePlus => f.add_term(w, 1),
            FactorKind::InvOneMinus | FactorKind::InvOnePlus => {
                let step = if kind == FactorKind::InvOneMinus { 1 } else { -1 };
                let mut sign = 1;
                for k in 1..=d / deg {
                    sign *= step;
                    f.add_term(w.pow(k), sign);
                }
            }
        }
        acc = acc.mul_truncated(&f, d);
    }
    acc
}

fn invert(kind: FactorKind) -> FactorKind {
    match kind {
        FactorKind::OneMinus => FactorKind::InvOneMinus,
        FactorKind::OnePlus => FactorKind::InvOnePlus,
        FactorKind::InvOneMinus => FactorKind::OneMinus,
        FactorKind::InvOnePlus => FactorKind::OnePlus,
    }
}

fn with_kind(ws: Vec<Monomial>, kind: FactorKind) -> Vec<(Monomial, FactorKind)> {
    ws.into_iter().map(|w| (w, kind)).collect()
}

fn named_factors(name: SeriesName, n: usize) -> Vec<(Monomial, FactorKind)> {
    use FactorKind::*;
    use SeriesName::*;
    let squares: Vec<Monomial> = linear_monomials(n).into_iter().map(|w| w.pow(2)).collect();
    let pair = |a: SeriesName, b: SeriesName| [named_factors(a, n), named_factors(b, n)].concat();
    match name {
        L => with_kind(linear_monomials(n), OneMinus),
        M => with_kind(linear_monomials(n), InvOneMinus),
        Q => with_kind(linear_monomials(n), OnePlus),
        P => with_kind(linear_monomials(n), InvOnePlus),
        A => with_kind(quadratic_monomials(n, false), OneMinus),
        B => with_kind(quadratic_monomials(n, false), InvOneMinus),
        C => with_kind(quadratic_monomials(n, true), OneMinus),
        D => with_kind(quadratic_monomials(n, true), InvOneMinus),
        V => with_kind(squares, OneMinus),
        W => with_kind(squares, InvOneMinus),
        E => pair(L, A),
        F => pair(M, B),
        G => pair(Q, A),
        H => pair(P, B),
        R => pair(L, P),
        S => pair(M, Q),
    }
}

/// The factors `(1 ∓ w)^{±1}` whose product defines the series in `n` variables.
pub fn generating_factors(id: &SeriesId, n: usize) -> Vec<(Monomial, FactorKind)> {
    match id {
        SeriesId::Named(name) => named_factors(*name, n),
        SeriesId::MPi(pi) => with_kind(schur_monomials(pi, n), FactorKind::InvOneMinus),
        SeriesId::LPi(pi) => with_kind(schur_monomials(pi, n), FactorKind::OneMinus),
        SeriesId::Product(v) => v.iter().flat_map(|x| generating_factors(x, n)).collect(),
        SeriesId::Inverse(x) => generating_factors(x, n).into_iter().map(|(w, k)| (w, invert(k))).collect(),
    }
}

/// A series expanded from its generating product in `n` variables, through degree `d`.
pub fn series_product_oracle(id: &SeriesId, n: usize, d: u32) -> MonomialPoly {
    generating_product(&generating_factors(id, n), n, d)
}

/// `Δ F` read off `F(x_1..x_m, y_1..y_n)`. Exact for terms `ξ⊗η` with
/// `ℓ(ξ) ≤ m`, `ℓ(η) ≤ n`.
pub fn coproduct_oracle(f: &SchurExpansion, m: usize, n: usize) -> Result<TensorExpansion> {
    let d = f.max_weight().unwrap_or(0);
    bisymmetric_decompose(&expand_in_variables(f, m + n), m, n, d)
}

/// `Δ` of a series given by its generating product, through total weight `d`,
/// e.g. `M_π(x, y) = Π_{w ∈ s_π(x,y)} (1 - w)^{-1}`.
pub fn series_coproduct_oracle(id: &SeriesId, d: u32, m: usize, n: usize) -> Result<TensorExpansion> {
    bisymmetric_decompose(&series_product_oracle(id, m + n, d), m, n, d)
}

/// Splits a polynomial symmetric in `x_1..x_m` and in `y_1..y_n` (the next
/// `n` variables) as `Σ c s_ξ(x) s_η(y)`.
fn bisymmetric_decompose(poly: &MonomialPoly, m: usize, n: usize, d: u32) -> Result<TensorExpansion> {
    let total = m + n;
    if !poly.is_symmetric_in(0..m) || !poly.is_symmetric_in(m..total) {
        return Err(Error::NotSymmetric);
    }
    let mut pairs = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for alpha in partitions_of(a, Some(m), None) {
                for beta in partitions_of(b, Some(n), None) {
                    pairs.push((alpha.clone(), beta));
                }
            }
        }
    }
    // Pairs that dominate are solved first.
    pairs.sort_by(|(a1, b1), (a2, b2)| {
        (a1.weight(), b1.weight()).cmp(&(a2.weight(), b2.weight())).then_with(|| a1.cmp(a2)).then_with(|| b1.cmp(b2))
    });
    let mut found: Vec<((Partition, Partition), i64)> = Vec::new();
    for (alpha, beta) in pairs {
        let mut e = padded(&alpha, m);
        e.extend(padded(&beta, n));
        let mut c = poly.coeff(Monomial::from_exponents(&e));
        for ((xi, eta), cx) in &found {
            if xi.weight() == alpha.weight() && eta.weight() == beta.weight() {
                c -= cx * kostka(xi, alpha.parts()) * kostka(eta, beta.parts());
            }
        }
        if c != 0 {
            found.push(((alpha, beta), c));
        }
    }
    Ok(found.into_iter().collect())
}
