//! Coproducts, antipode, counit and the inner (Kronecker) product.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::partition::{partitions_of, Partition};
use crate::symfunc::power::{character, z};
use crate::symfunc::{plethysm, skew_coefficients, SchurExpansion, TensorExpansion};

pub fn tensor(f: &SchurExpansion, g: &SchurExpansion) -> TensorExpansion {
    let mut out = TensorExpansion::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

/// `Δ{λ} = Σ_{μ,ν} c^λ_{μν} {μ}⊗{ν}`.
pub fn outer_coproduct(f: &SchurExpansion) -> TensorExpansion {
    let mut out = TensorExpansion::zero();
    for (lam, c) in f.iter() {
        for eta in lam.subpartitions() {
            for (xi, m) in skew_coefficients(lam, &eta).iter() {
                out.add_term((xi.clone(), eta.clone()), c * m);
            }
        }
    }
    out
}

/// `{μ} ∗ {ν} = Σ_λ g_{μνλ} {λ}`, memoized.
pub fn kronecker(mu: &Partition, nu: &Partition) -> Arc<SchurExpansion> {
    type Cache = RwLock<HashMap<(Partition, Partition), Arc<SchurExpansion>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    if mu.weight() != nu.weight() {
        return Arc::new(SchurExpansion::zero());
    }
    let cache = CACHE.get_or_init(Default::default);
    let key = if mu <= nu { (mu.clone(), nu.clone()) } else { (nu.clone(), mu.clone()) };
    if let Some(hit) = cache.read().unwrap().get(&key) {
        return hit.clone();
    }
    let n = mu.weight();
    let classes: Vec<(Partition, BigRational)> = partitions_of(n, None, None)
        .filter_map(|rho| {
            let w = character(mu, &rho) * character(nu, &rho);
            (w != 0).then(|| {
                let c = BigRational::new(BigInt::from(w), z(&rho));
                (rho, c)
            })
        })
        .collect();
    let mut out = SchurExpansion::zero();
    for lam in partitions_of(n, None, None) {
        let mut g = BigRational::zero();
        for (rho, w) in &classes {
            let chi = character(&lam, rho);
            if chi != 0 {
                g += w * BigInt::from(chi);
            }
        }
        assert!(g.is_integer(), "Kronecker coefficient must be integral");
        out.add_term(lam, g.to_integer().to_i64().expect("Kronecker coefficient fits i64"));
    }
    let value = Arc::new(out);
    cache.write().unwrap().insert(key, value.clone());
    value
}

/// Inner product `F ∗ G`; components of different weight annihilate.
pub fn inner_product(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    f.bilinear(g, |a, b| (*kronecker(a, b)).clone())
}

/// `δ{λ} = Σ_{μ,ν} g_{λμν} {μ}⊗{ν}`.
pub fn inner_coproduct(f: &SchurExpansion) -> TensorExpansion {
    let mut out = TensorExpansion::zero();
    for (lam, c) in f.iter() {
        for mu in partitions_of(lam.weight(), None, None) {
            for (nu, g) in kronecker(lam, &mu).iter() {
                out.add_term((mu.clone(), nu.clone()), c * g);
            }
        }
    }
    out
}

/// `S{μ} = (-1)^{|μ|}{μ'}`.
pub fn antipode(f: &SchurExpansion) -> SchurExpansion {
    f.conjugate().flip_odd_weights()
}

/// Coefficient of `{0}`.
pub fn counit(f: &SchurExpansion) -> i64 {
    f.coeff(&Partition::empty())
}

/// Hall scalar product `⟨F, G⟩`, for which the Schur functions are orthonormal.
pub fn scalar(f: &SchurExpansion, g: &SchurExpansion) -> i64 {
    f.iter().map(|(p, c)| c * g.coeff(p)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlethysmCoproductRoute {
    /// Expand the plethysm, then take its outer coproduct.
    Direct,
    /// Factor through the outer coproduct of the base, iterated coproducts of
    /// the exponent and inner coproducts, never forming the full plethysm.
    Factored,
}

/// `Δ(base ⊗̲ exponent)`.
pub fn plethysm_coproduct(
    base: &SchurExpansion,
    exponent: &SchurExpansion,
    route: PlethysmCoproductRoute,
) -> TensorExpansion {
    match route {
        PlethysmCoproductRoute::Direct => outer_coproduct(&plethysm(base, exponent)),
        PlethysmCoproductRoute::Factored => factored(base, exponent),
    }
}

struct Factored {
    /// Terms `ξ⊗η` of `Δ(base)`, one entry per unit of multiplicity; the flag
    /// marks a negative unit.
    cuts: Vec<(Partition, Partition, bool)>,
    memo: HashMap<(usize, Partition), TensorExpansion>,
}

impl Factored {
    /// `(±ξ_k⊗η_k) ⊗̲ {μ} = Σ_{[C]} (ξ_k ⊗̲ C[1]) ⊗ (η_k ⊗̲ C[2])` with `C = {μ}`,
    /// or `C = S{μ}` for a negative unit.
    fn single(&self, k: usize, mu: &Partition) -> TensorExpansion {
        let (xi, eta, neg) = &self.cuts[k];
        let c = SchurExpansion::basis(mu.clone());
        let c = if *neg { antipode(&c) } else { c };
        let xi = SchurExpansion::basis(xi.clone());
        let eta = SchurExpansion::basis(eta.clone());
        inner_coproduct(&c).map_factors(
            |a| plethysm(&xi, &SchurExpansion::basis(a.clone())),
            |b| plethysm(&eta, &SchurExpansion::basis(b.clone())),
        )
    }

    /// `(Σ_{j ≥ k} cut_j) ⊗̲ {μ}`.
    fn chain(&mut self, k: usize, mu: &Partition) -> TensorExpansion {
        if k + 1 == self.cuts.len() {
            return self.single(k, mu);
        }
        if let Some(hit) = self.memo.get(&(k, mu.clone())) {
            return hit.clone();
        }
        let mut out = TensorExpansion::zero();
        let split = outer_coproduct(&SchurExpansion::basis(mu.clone()));
        for ((a, b), c) in split.iter() {
            let left = self.single(k, a);
            if left.is_zero() {
                continue;
            }
            let right = self.chain(k + 1, b);
            out.add_scaled(&left.product(&right), c);
        }
        self.memo.insert((k, mu.clone()), out.clone());
        out
    }
}

fn factored(base: &SchurExpansion, exponent: &SchurExpansion) -> TensorExpansion {
    let mut cuts = Vec::new();
    for ((xi, eta), c) in outer_coproduct(base).iter() {
        for _ in 0..c.unsigned_abs() {
            cuts.push((xi.clone(), eta.clone(), c < 0));
        }
    }
    if cuts.is_empty() {
        // 0 ⊗̲ {μ} = δ_{μ,0}{0}
        let unit = counit(exponent);
        return TensorExpansion::from_terms([((Partition::empty(), Partition::empty()), unit)]);
    }
    let mut state = Factored { cuts, memo: HashMap::new() };
    let mut out = TensorExpansion::zero();
    for (mu, c) in exponent.iter() {
        out.add_scaled(&state.chain(0, mu), c);
    }
    out
}
