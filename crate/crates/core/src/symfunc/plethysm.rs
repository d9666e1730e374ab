use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partition::Partition;
use crate::symfunc::power::{power_to_schur, schur_to_power, PowerSum};
use crate::symfunc::SchurExpansion;

/// `base ⊗̲ exponent`, i.e. `s_exponent[base]`.
///
/// Evaluated through power sums (`p_k[F] = F(p_j ↦ p_{kj})`), which gives the
/// λ-ring meaning for any integer combination: negatives, sums and `0` included.
pub fn plethysm(base: &SchurExpansion, exponent: &SchurExpansion) -> SchurExpansion {
    plethysm_truncated(base, exponent, None)
}

/// As [`plethysm`], dropping every term of weight above `max_weight`.
pub fn plethysm_truncated(base: &SchurExpansion, exponent: &SchurExpansion, max_weight: Option<u32>) -> SchurExpansion {
    if let (Some((lam, 1)), 1) = (base.iter().next(), base.len()) {
        let mut out = SchurExpansion::zero();
        for (mu, c) in exponent.iter() {
            if max_weight.is_some_and(|d| lam.weight() * mu.weight() > d) {
                continue;
            }
            out.add_scaled(&plethysm_basis(lam, mu), c);
        }
        return out;
    }
    let base_p = schur_to_power(&base.truncate(max_weight.unwrap_or(u32::MAX)));
    let result = substitute(&base_p, &schur_to_power(exponent), max_weight);
    power_to_schur(&result)
        .expect("plethysm of integral expansions is integral")
        .truncate(max_weight.unwrap_or(u32::MAX))
}

fn substitute(base_p: &PowerSum, exp_p: &PowerSum, max_weight: Option<u32>) -> PowerSum {
    let mut dilated: HashMap<u32, PowerSum> = HashMap::new();
    let mut out = PowerSum::default();
    for (rho, c) in exp_p.terms() {
        let mut prod = PowerSum::one();
        for &k in rho.parts() {
            let d = dilated.entry(k).or_insert_with(|| base_p.dilate(k));
            prod = prod.mul_truncated(d, max_weight);
            if prod.is_zero() {
                break;
            }
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// `{λ} ⊗̲ {μ}`, memoized.
pub fn plethysm_basis(lambda: &Partition, mu: &Partition) -> Arc<SchurExpansion> {
    type Cache = RwLock<HashMap<(Partition, Partition), Arc<SchurExpansion>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = cache.read().unwrap().get(&key) {
        return hit.clone();
    }
    let base_p = schur_to_power(&SchurExpansion::basis(lambda.clone()));
    let exp_p = schur_to_power(&SchurExpansion::basis(mu.clone()));
    let value =
        Arc::new(power_to_schur(&substitute(&base_p, &exp_p, None)).expect("plethysm of Schur functions is integral"));
    cache.write().unwrap().insert(key, value.clone());
    value
}
