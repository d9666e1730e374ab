//! Branching `GL(n) ↓ H_π`, formal characters and their products.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linear::{render_terms, Combination};
use crate::partition::{partitions_of, Partition};
use crate::series::{cut_coproduct_kernel, l_pi, m_pi, TruncatedSeries};
use crate::symfunc::{
    lr_product, outer_coproduct, outer_product, plethysm_basis, scalar, skew, skew_by, SchurExpansion,
};

/// The subgroup `H_π` of `GL(n)`; `n` is optional for formal, `n`-free work.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupTag {
    pub pi: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

impl GroupTag {
    pub fn new(pi: Partition, n: Option<u32>) -> Self {
        GroupTag { pi, n }
    }
}

/// `Σ c ε^r ((μ))_π`, with `ε` the determinant character of `GL(n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    pub group: GroupTag,
    terms: Combination<(u32, Partition)>,
}

impl FormalCharacter {
    pub fn zero(group: GroupTag) -> Self {
        FormalCharacter { group, terms: Combination::zero() }
    }

    /// Reads each `{μ}` as `((μ))`.
    pub fn from_schur(group: GroupTag, f: &SchurExpansion) -> Self {
        FormalCharacter { group, terms: f.map_keys(|p| (0, p.clone())) }
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.group.n = Some(n);
        self
    }

    pub fn add_term(&mut self, eps: u32, mu: Partition, coeff: i64) {
        assert!(eps == 0 || self.group.n.is_some(), "ε needs a fixed n");
        self.terms.add_term((eps, mu), coeff);
    }

    pub fn add_scaled(&mut self, other: &FormalCharacter, c: i64) {
        for ((e, p), v) in other.terms.iter() {
            self.add_term(*e, p.clone(), c * v);
        }
    }

    pub fn coeff(&self, eps: u32, mu: &Partition) -> i64 {
        self.terms.coeff(&(eps, mu.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// The `ε^0` part as a Schur expansion.
    pub fn untwisted(&self) -> SchurExpansion {
        self.terms.iter().filter(|((e, _), _)| *e == 0).map(|((_, p), c)| (p.clone(), c)).collect()
    }

    /// Terms in display order: by `GL(n)` weight `|μ| + n·r` descending, then
    /// `ε` power ascending, then reverse-lexicographic.
    pub fn terms(&self) -> Vec<(u32, Partition, i64)> {
        let n = self.group.n.unwrap_or(0);
        let mut v: Vec<_> = self.terms.iter().map(|((e, p), c)| (*e, p.clone(), c)).collect();
        v.sort_by(|a, b| {
            let wa = a.1.weight() + n * a.0;
            let wb = b.1.weight() + n * b.0;
            wb.cmp(&wa).then(a.0.cmp(&b.0)).then_with(|| match a.1.weight().cmp(&b.1.weight()) {
                Ordering::Equal => a.1.cmp(&b.1),
                o => o.reverse(),
            })
        });
        v
    }

    /// `dim ((μ))` at `n` for each term; `None` without `n`.
    pub fn term_dimension(&self, mu: &Partition) -> Option<i64> {
        self.group.n.map(|n| crate::modify::dim_formal(mu, &self.group.pi, n))
    }

    /// Total dimension `Σ c · dim ((μ))` (ε has dimension one).
    pub fn dimension(&self) -> Option<i64> {
        let n = self.group.n?;
        Some(self.terms.iter().map(|((_, p), c)| c * crate::modify::dim_formal(p, &self.group.pi, n)).sum())
    }

    /// `((43))_24 + e((1))_4`; subscripts only when `n` is set.
    pub fn to_text(&self) -> String {
        self.render(|p| format!("(({}))", p.label()), "*", true)
    }

    /// Notation of the printed tables: `[μ]` for `π = (2)`, `⟨μ⟩` for `π = (1²)`,
    /// `((μ))` otherwise; `ε` spelled out.
    pub fn to_table_form(&self) -> String {
        let (open, close) = group_brackets(&self.group.pi);
        self.render(|p| format!("{open}{}{close}", p.label()), "", false)
    }

    fn render(&self, label: impl Fn(&Partition) -> String, coeff_sep: &str, ascii: bool) -> String {
        let eps = if ascii { "e" } else { "ε" };
        let terms = self.terms().into_iter().map(|(e, p, c)| {
            let mut body = match e {
                0 => String::new(),
                1 => eps.to_string(),
                k => format!("{eps}^{k}"),
            };
            body.push_str(&label(&p));
            if let Some(d) = self.term_dimension(&p) {
                body.push_str(&format!("_{d}"));
            }
            (body, c)
        });
        render_terms(terms, coeff_sep)
    }
}

pub fn group_brackets(pi: &Partition) -> (&'static str, &'static str) {
    match pi.parts() {
        [2] => ("[", "]"),
        [1, 1] => ("⟨", "⟩"),
        _ => ("((", "))"),
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}", self.group.pi)?;
        if let Some(n) = self.group.n {
            write!(f, "({n})")?;
        }
        write!(f, ": {}", self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    eps: u32,
    partition: Partition,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    group: GroupTag,
    terms: Vec<TermJson>,
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterJson {
            group: self.group.clone(),
            terms: self.terms().into_iter().map(|(eps, partition, coeff)| TermJson { eps, partition, coeff }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = CharacterJson::deserialize(deserializer)?;
        if raw.group.n.is_none() && raw.terms.iter().any(|t| t.eps > 0) {
            return Err(serde::de::Error::custom("ε powers need a fixed n"));
        }
        let mut out = FormalCharacter::zero(raw.group);
        for t in raw.terms {
            out.add_term(t.eps, t.partition, t.coeff);
        }
        Ok(out)
    }
}

/// `{λ} ↦ ((λ/M_π))_π`.
pub fn branch_gl_to_hpi(lambda: &Partition, pi: &Partition) -> FormalCharacter {
    let m = m_pi(pi, lambda.weight());
    FormalCharacter::from_schur(
        GroupTag::new(pi.clone(), None),
        &skew_by(&SchurExpansion::basis(lambda.clone()), &m.body),
    )
}

/// Linear extension of [`branch_gl_to_hpi`] to a Schur expansion.
pub fn branch_expansion(f: &SchurExpansion, pi: &Partition) -> FormalCharacter {
    let d = f.max_weight().unwrap_or(0);
    FormalCharacter::from_schur(GroupTag::new(pi.clone(), None), &skew_by(f, &m_pi(pi, d).body))
}

/// `((μ))_π ↦ {μ/L_π}`, the inverse of [`branch_gl_to_hpi`].
pub fn lift_hpi_to_gl(mu: &Partition, pi: &Partition) -> SchurExpansion {
    let l = l_pi(pi, mu.weight()).expect("M_π has constant term 1");
    skew_by(&SchurExpansion::basis(mu.clone()), &l.body)
}

/// `Σ c {μ/L_π}` over the `ε^0` terms of a formal character.
pub fn lift_expansion(f: &SchurExpansion, pi: &Partition) -> SchurExpansion {
    f.linear(|mu| lift_hpi_to_gl(mu, pi))
}

/// `GL(n) ↓ GL(n-1)`: `{λ/M}`, the interlacing partitions.
pub fn branch_gl_to_gl_minus_one(lambda: &Partition) -> Vec<(Partition, i64)> {
    branch_gl_to_hpi(lambda, &Partition::of(&[1])).untwisted().into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewProductRoute {
    /// `({μ}{ν}) / Z`.
    MultiplyThenSkew,
    /// `Σ_{Δ Z} {μ/σ}{ν/τ}`.
    Coproduct,
}

/// `({μ}{ν}) / Z`.
pub fn skew_product_by_series(
    mu: &Partition,
    nu: &Partition,
    z: &TruncatedSeries,
    route: SkewProductRoute,
) -> SchurExpansion {
    let d = mu.weight() + nu.weight();
    assert!(z.degree >= d, "series must be known through weight {d}");
    let body = z.body.truncate(d);
    match route {
        SkewProductRoute::MultiplyThenSkew => skew_by(&lr_product(mu, nu), &body),
        SkewProductRoute::Coproduct => {
            let mut out = SchurExpansion::zero();
            for ((sigma, tau), c) in outer_coproduct(&body).truncate(d).iter() {
                let left = skew(mu, sigma);
                if left.is_zero() {
                    continue;
                }
                out.add_scaled(&outer_product(&left, &skew(nu, tau)), c);
            }
            out
        }
    }
}

/// `({μ}{ν}) / M_π = Σ_{u⊗v ∈ K_π} {μ/(M_π u)}{ν/(M_π v)}`.
pub fn skew_product_by_m_pi_kernel(mu: &Partition, nu: &Partition, pi: &Partition) -> SchurExpansion {
    let d = mu.weight() + nu.weight();
    let m = m_pi(pi, d);
    let mu_b = skew_by(&SchurExpansion::basis(mu.clone()), &m.body);
    let nu_b = skew_by(&SchurExpansion::basis(nu.clone()), &m.body);
    let mut out = SchurExpansion::zero();
    for ((u, v), c) in cut_coproduct_kernel(pi, d).iter() {
        let left = skew_by(&mu_b, &SchurExpansion::basis(u.clone()));
        if left.is_zero() {
            continue;
        }
        let right = skew_by(&nu_b, &SchurExpansion::basis(v.clone()));
        out.add_scaled(&outer_product(&left, &right), c);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductRoute {
    /// Lift both factors to `GL`, multiply, branch back.
    LiftMultiplyBranch,
    /// `Σ_{u⊗v ∈ K_π} {μ/u}{ν/v}` with the cut-coproduct kernel.
    Kernel,
}

/// The unmodified product `((μ))·((ν))` in `H_π`, as a Schur expansion of labels.
pub fn product_hpi_expansion(mu: &Partition, nu: &Partition, pi: &Partition, route: ProductRoute) -> SchurExpansion {
    let d = mu.weight() + nu.weight();
    match route {
        ProductRoute::LiftMultiplyBranch => {
            let prod = outer_product(&lift_hpi_to_gl(mu, pi), &lift_hpi_to_gl(nu, pi));
            skew_by(&prod, &m_pi(pi, d).body)
        }
        ProductRoute::Kernel => {
            let mut out = SchurExpansion::zero();
            for ((u, v), c) in cut_coproduct_kernel(pi, d).iter() {
                let left = skew(mu, u);
                if left.is_zero() {
                    continue;
                }
                out.add_scaled(&outer_product(&left, &skew(nu, v)), c);
            }
            out
        }
    }
}

/// `((μ))·((ν))` in `H_π`, formal (no modification).
pub fn product_hpi(mu: &Partition, nu: &Partition, pi: &Partition) -> FormalCharacter {
    FormalCharacter::from_schur(
        GroupTag::new(pi.clone(), None),
        &product_hpi_expansion(mu, nu, pi, ProductRoute::Kernel),
    )
}

/// `Σ_σ {μ/σ}{ν/σ}`: the Newell–Littlewood rule with a single shared `σ`.
pub fn newell_littlewood(mu: &Partition, nu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for k in 0..=mu.weight().min(nu.weight()) {
        for sigma in partitions_of(k, None, None) {
            out += &outer_product(&skew(mu, &sigma), &skew(nu, &sigma));
        }
    }
    out
}

/// The scalar products `(x|y)_π` written out for `π ∈ {(1), (2), (1²), (1³)}`.
pub fn pi_scalar_product(x: &Partition, y: &Partition, pi: &Partition) -> Result<i64> {
    match pi.parts() {
        [1] => Ok((x.is_empty() && y.is_empty()) as i64),
        [2] | [1, 1] => Ok((x == y) as i64),
        [1, 1, 1] => {
            let e2 = Partition::of(&[1, 1]);
            let dx = outer_coproduct(&SchurExpansion::basis(x.clone()));
            let dy = outer_coproduct(&SchurExpansion::basis(y.clone()));
            let mut total = 0;
            for ((x1, x2), cx) in dx.iter() {
                for ((y1, y2), cy) in dy.iter() {
                    if x1.weight() != 2 * y1.weight() || y2.weight() != 2 * x2.weight() {
                        continue;
                    }
                    let a = scalar(&SchurExpansion::basis(x1.clone()), &plethysm_basis(&e2, y1));
                    if a == 0 {
                        continue;
                    }
                    let b = scalar(&plethysm_basis(&e2, x2), &SchurExpansion::basis(y2.clone()));
                    total += cx * cy * a * b;
                }
            }
            Ok(total)
        }
        _ => Err(Error::UnsupportedGroup(format!("scalar product for π = {pi}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn branch_examples() {
        let b = branch_gl_to_hpi(&p(&[1, 1, 1]), &p(&[1, 1, 1]));
        assert_eq!(b.to_text(), "((111)) + ((0))");
        assert_eq!(b.clone().with_n(4).to_text(), "((111))_3 + ((0))_1");
        assert_eq!(branch_gl_to_hpi(&p(&[1]), &p(&[2, 1])).to_text(), "((1))");
        assert_eq!(
            branch_gl_to_hpi(&p(&[2, 2, 2, 1]), &p(&[1, 1, 1])).to_text(),
            "((2221)) + ((211)) + ((1111)) + ((1))"
        );
        assert_eq!(branch_gl_to_hpi(&p(&[]), &p(&[2])).to_text(), "((0))");
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_hpi_to_gl(&p(&[1, 1, 1, 1]), &p(&[1, 1, 1])).to_string(), "-{1} + {1^4}");
        assert_eq!(lift_hpi_to_gl(&p(&[2, 1]), &p(&[2])).to_string(), "-{1} + {2,1}");
        assert_eq!(lift_hpi_to_gl(&p(&[]), &p(&[3])).to_string(), "{0}");
    }

    #[test]
    fn gl_minus_one() {
        let got: Vec<String> =
            branch_gl_to_gl_minus_one(&p(&[2, 1])).into_iter().map(|(q, c)| format!("{c}{q}")).collect();
        assert_eq!(got, ["1[1]", "1[2]", "1[1^2]", "1[2,1]"]);
    }

    #[test]
    fn product_examples() {
        let got = product_hpi(&p(&[2, 2]), &p(&[2, 1]), &p(&[1, 1, 1]));
        assert_eq!(
            got.to_text(),
            "((43)) + ((421)) + ((331)) + ((322)) + ((3211)) + ((2221)) + 2*((31)) + 2*((22)) + 3*((211)) + ((1111)) + 2*((1))"
        );
        let o = product_hpi(&p(&[2]), &p(&[2]), &p(&[2]));
        assert_eq!(o.to_table_form(), "[4] + [31] + [22] + [2] + [11] + [0]");
        assert_eq!(product_hpi(&p(&[3, 1]), &p(&[]), &p(&[2, 1])).to_text(), "((31))");
    }

    #[test]
    fn skew_product_examples() {
        let m2 = m_pi(&p(&[2]), 2);
        for route in [SkewProductRoute::MultiplyThenSkew, SkewProductRoute::Coproduct] {
            let got = skew_product_by_series(&p(&[1]), &p(&[1]), &m2, route);
            assert_eq!(got.to_string(), "{0} + {2} + {1^2}");
        }
        assert_eq!(skew_product_by_m_pi_kernel(&p(&[1]), &p(&[1]), &p(&[2])).to_string(), "{0} + {2} + {1^2}");
    }

    #[test]
    fn scalar_products() {
        assert_eq!(pi_scalar_product(&p(&[2, 1]), &p(&[2, 1]), &p(&[2])).unwrap(), 1);
        assert_eq!(pi_scalar_product(&p(&[]), &p(&[]), &p(&[1])).unwrap(), 1);
        assert_eq!(pi_scalar_product(&p(&[1]), &p(&[1]), &p(&[1])).unwrap(), 0);
        assert_eq!(pi_scalar_product(&p(&[]), &p(&[]), &p(&[1, 1, 1])).unwrap(), 1);
        assert!(pi_scalar_product(&p(&[]), &p(&[]), &p(&[3])).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let mut f = FormalCharacter::zero(GroupTag::new(p(&[1, 1, 1]), Some(4)));
        f.add_term(0, p(&[3, 1, 1]), 1);
        f.add_term(1, p(&[1]), 1);
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(
            j,
            r#"{"group":{"pi":[1,1,1],"n":4},"terms":[{"eps":0,"partition":[3,1,1],"coeff":1},{"eps":1,"partition":[1],"coeff":1}]}"#
        );
        let back: FormalCharacter = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.to_text(), "((311))_26 + e((1))_4");
    }
}
