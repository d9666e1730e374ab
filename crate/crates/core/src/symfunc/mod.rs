//! Exact arithmetic on symmetric functions in the Schur basis.

mod hopf;
mod lr;
mod plethysm;
pub mod power;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linear::{render_terms, Combination};
use crate::partition::Partition;

pub use hopf::{
    antipode, counit, inner_coproduct, inner_product, kronecker, outer_coproduct, plethysm_coproduct, scalar, tensor,
    PlethysmCoproductRoute,
};
pub use lr::{lr_coefficients, skew_coefficients};
pub use plethysm::{plethysm, plethysm_basis, plethysm_truncated};

/// Integer combination `Σ c_λ {λ}`.
pub type SchurExpansion = Combination<Partition>;

/// Integer combination `Σ c {μ}⊗{ν}`.
pub type TensorExpansion = Combination<(Partition, Partition)>;

impl Combination<Partition> {
    pub fn basis(lambda: Partition) -> Self {
        Self::term(lambda)
    }

    /// The unit `{0}`.
    pub fn one() -> Self {
        Self::term(Partition::empty())
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.keys().map(Partition::weight).max()
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.keys().map(Partition::weight).min()
    }

    pub fn component(&self, k: u32) -> Self {
        self.filter(|p| p.weight() == k)
    }

    pub fn truncate(&self, d: u32) -> Self {
        self.filter(|p| p.weight() <= d)
    }

    pub fn restrict_length(&self, max_len: usize) -> Self {
        self.filter(|p| p.len() <= max_len)
    }

    /// `{λ} ↦ {λ'}`, no sign.
    pub fn conjugate(&self) -> Self {
        self.map_keys(Partition::conjugate)
    }

    /// `{λ} ↦ (-1)^{|λ|}{λ}`.
    pub fn flip_odd_weights(&self) -> Self {
        Combination::from_terms(self.iter().map(|(p, c)| (p.clone(), if p.weight() % 2 == 0 { c } else { -c })))
    }
}

/// `F · G` (Littlewood–Richardson).
pub fn outer_product(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    outer_product_truncated(f, g, None)
}

/// `F · G` keeping only weights `≤ max_weight`.
pub fn outer_product_truncated(f: &SchurExpansion, g: &SchurExpansion, max_weight: Option<u32>) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            if max_weight.is_some_and(|d| a.weight() + b.weight() > d) {
                continue;
            }
            for (lam, c) in lr_coefficients(a, b).iter() {
                out.add_term(lam.clone(), ca * cb * c);
            }
        }
    }
    out
}

/// `{μ}·{ν}`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> SchurExpansion {
    lr_coefficients(mu, nu).iter().cloned().collect()
}

/// `{ν}/{μ}`; zero unless `μ ⊆ ν`.
pub fn skew(nu: &Partition, mu: &Partition) -> SchurExpansion {
    skew_coefficients(nu, mu).iter().cloned().collect()
}

/// `F / G`, bilinear extension of [`skew`].
pub fn skew_by(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (lam, ca) in f.iter() {
        for (mu, cb) in g.iter() {
            if mu.weight() > lam.weight() {
                continue;
            }
            for (nu, c) in skew_coefficients(lam, mu).iter() {
                out.add_term(nu.clone(), ca * cb * c);
            }
        }
    }
    out
}

impl fmt::Display for Combination<Partition> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.iter().map(|(p, c)| (format!("{{{}}}", p.compact()), c));
        f.write_str(&render_terms(terms, "*"))
    }
}

impl fmt::Debug for Combination<Partition> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Combination<(Partition, Partition)> {
    pub fn truncate(&self, d: u32) -> Self {
        self.filter(|(a, b)| a.weight() + b.weight() <= d)
    }

    pub fn swap(&self) -> Self {
        self.map_keys(|(a, b)| (b.clone(), a.clone()))
    }

    /// Componentwise outer product, truncated by total weight.
    pub fn product_truncated(&self, other: &Self, max_weight: Option<u32>) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in self.iter() {
            for ((x, y), c2) in other.iter() {
                if max_weight.is_some_and(|d| a.weight() + b.weight() + x.weight() + y.weight() > d) {
                    continue;
                }
                let left = lr_coefficients(a, x);
                let right = lr_coefficients(b, y);
                for (l, cl) in left.iter() {
                    for (r, cr) in right.iter() {
                        out.add_term((l.clone(), r.clone()), c1 * c2 * cl * cr);
                    }
                }
            }
        }
        out
    }

    pub fn product(&self, other: &Self) -> Self {
        self.product_truncated(other, None)
    }

    /// `Σ c · f(μ) ⊗ g(ν)` for linear maps `f`, `g` given on basis elements.
    pub fn map_factors(
        &self,
        mut f: impl FnMut(&Partition) -> SchurExpansion,
        mut g: impl FnMut(&Partition) -> SchurExpansion,
    ) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in self.iter() {
            out.add_scaled(&tensor(&f(a), &g(b)), c);
        }
        out
    }

    /// `m(T)`: multiply the two factors back together.
    pub fn multiply_out(&self) -> SchurExpansion {
        let mut out = SchurExpansion::zero();
        for ((a, b), c) in self.iter() {
            for (l, cl) in lr_coefficients(a, b).iter() {
                out.add_term(l.clone(), c * cl);
            }
        }
        out
    }
}

impl fmt::Display for Combination<(Partition, Partition)> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.iter().map(|((a, b), c)| (format!("{{{}}}⊗{{{}}}", a.compact(), b.compact()), c));
        f.write_str(&render_terms(terms, "*"))
    }
}

impl fmt::Debug for Combination<(Partition, Partition)> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct SchurTermJson {
    partition: Partition,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct SchurJson {
    basis: String,
    terms: Vec<SchurTermJson>,
}

impl Serialize for Combination<Partition> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SchurJson {
            basis: "schur".into(),
            terms: self.iter().map(|(p, c)| SchurTermJson { partition: p.clone(), coeff: c }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Combination<Partition> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SchurJson::deserialize(deserializer)?;
        if raw.basis != "schur" {
            return Err(serde::de::Error::custom(format!("unsupported basis `{}`", raw.basis)));
        }
        Ok(raw.terms.into_iter().map(|t| (t.partition, t.coeff)).collect())
    }
}
