//! Symmetric group characters and the power-sum basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::SchurExpansion;

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn z(rho: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let mut i = 0;
    let parts = rho.parts();
    while i < parts.len() {
        let p = parts[i];
        let m = parts[i..].iter().take_while(|&&q| q == p).count();
        for k in 1..=m {
            out *= BigInt::from(p) * BigInt::from(k);
        }
        i += m;
    }
    out
}

/// `χ^λ(ρ)` by Murnaghan–Nakayama on beta-sets.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    if lambda.weight() != rho.weight() {
        return 0;
    }
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = cache.read().unwrap().get(&key) {
        return v;
    }
    let v = if rho.is_empty() {
        1
    } else {
        let k = rho.part(0);
        let rest = Partition::new(rho.parts()[1..].to_vec()).expect("tail of partition");
        remove_rim_hooks(lambda, k).into_iter().map(|(mu, sign)| sign * character(&mu, &rest)).sum()
    };
    cache.write().unwrap().insert(key, v);
    v
}

/// All `(λ minus a rim hook of length k, (-1)^{height})`.
fn remove_rim_hooks(lambda: &Partition, k: u32) -> Vec<(Partition, i64)> {
    let l = lambda.len() as u32;
    let beta: Vec<u32> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb.iter().enumerate().map(|(i, &x)| x - (l - 1 - i as u32)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::new(parts).expect("rim hook removal"), sign));
    }
    out
}

/// Rational combination of power-sum products `p_ρ`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PowerSum(BTreeMap<Partition, BigRational>);

impl PowerSum {
    pub fn one() -> Self {
        PowerSum(BTreeMap::from([(Partition::empty(), BigRational::one())]))
    }

    pub fn p(rho: Partition) -> Self {
        PowerSum(BTreeMap::from([(rho, BigRational::one())]))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.0.iter()
    }

    fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(rho) {
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

    pub fn add(&self, other: &PowerSum) -> PowerSum {
        let mut out = self.clone();
        for (k, v) in &other.0 {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> PowerSum {
        let mut out = PowerSum::default();
        for (k, v) in &self.0 {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Product, dropping every `p_ρ` with `|ρ| > max_weight`.
    pub fn mul_truncated(&self, other: &PowerSum, max_weight: Option<u32>) -> PowerSum {
        let mut out = PowerSum::default();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                if max_weight.is_some_and(|d| a.weight() + b.weight() > d) {
                    continue;
                }
                let mut parts = [a.parts(), b.parts()].concat();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                out.add_term(Partition::new(parts).expect("merged parts"), ca * cb);
            }
        }
        out
    }

    /// `p_j ↦ p_{kj}`.
    pub fn dilate(&self, k: u32) -> PowerSum {
        PowerSum(
            self.0
                .iter()
                .map(|(rho, c)| {
                    let parts: Vec<u32> = rho.parts().iter().map(|&p| p * k).collect();
                    (Partition::new(parts).expect("dilated"), c.clone())
                })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ · p_ρ`.
pub fn schur_to_power(f: &SchurExpansion) -> PowerSum {
    let mut out = PowerSum::default();
    for (lambda, c) in f.iter() {
        for rho in partitions_of(lambda.weight(), None, None) {
            let chi = character(lambda, &rho);
            if chi != 0 {
                out.add_term(rho.clone(), BigRational::new(BigInt::from(chi) * BigInt::from(c), z(&rho)));
            }
        }
    }
    out
}

/// `p_ρ = Σ_λ χ^λ(ρ) s_λ`. Fails if the result has non-integer coefficients.
pub fn power_to_schur(f: &PowerSum) -> Result<SchurExpansion> {
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (rho, c) in f.terms() {
        for lambda in partitions_of(rho.weight(), None, None) {
            let chi = character(&lambda, rho);
            if chi != 0 {
                *acc.entry(lambda).or_insert_with(BigRational::zero) += c * BigInt::from(chi);
            }
        }
    }
    let mut out = SchurExpansion::zero();
    for (lambda, c) in acc {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::Internal(format!("non-integral Schur coefficient {c} at {lambda}")));
        }
        let v = c.to_integer();
        let v = v.to_i64().ok_or_else(|| Error::Internal(format!("coefficient {v} overflows i64")))?;
        out.add_term(lambda, v);
    }
    Ok(out)
}
