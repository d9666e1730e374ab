//! Modification rules: reading formal characters at a fixed `n`.

use crate::branching::{lift_hpi_to_gl, product_hpi, FormalCharacter, GroupTag};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::lr_product;

/// `{λ} = ε^{λ_n} {λ - λ_n 1^n}` in `GL(n)`; `None` when `ℓ(λ) > n`.
pub fn gl_column_reduce(lambda: &Partition, n: u32) -> Option<(u32, Partition)> {
    let n = n as usize;
    if lambda.len() > n {
        return None;
    }
    if lambda.len() < n {
        return Some((0, lambda.clone()));
    }
    let r = lambda.part(n - 1);
    let rest: Vec<u32> = lambda.parts().iter().map(|&p| p - r).collect();
    Some((r, Partition::new(rest).expect("column removal keeps order")))
}

/// `dim ((μ))_π` at `n`: the `GL(n)` dimension of `{μ/L_π}`.
pub fn dim_formal(mu: &Partition, pi: &Partition, n: u32) -> i64 {
    lift_hpi_to_gl(mu, pi).iter().map(|(rho, c)| c * rho.dim_gl(n)).sum()
}

/// True when every `GL` constituent of `{μ/L_π}` has more than `n` rows, so
/// `((μ))` is the zero character of `H_π(n)`.
pub fn vanishes_at(mu: &Partition, pi: &Partition, n: u32) -> bool {
    lift_hpi_to_gl(mu, pi).keys().all(|rho| rho.len() > n as usize)
}

/// Removes the terms that are identically zero at the character's `n`.
pub fn drop_vanishing(f: &FormalCharacter) -> FormalCharacter {
    let Some(n) = f.group.n else { return f.clone() };
    let mut out = FormalCharacter::zero(f.group.clone());
    for (e, p, c) in f.terms() {
        if !vanishes_at(&p, &f.group.pi, n) {
            out.add_term(e, p, c);
        }
    }
    out
}

/// A single rewrite `((pattern)) = Σ c ε^r ((μ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub pattern: Partition,
    pub replacement: Vec<(u32, Partition, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModificationRuleSet {
    /// `GL(m)` column removal with `ε` powers; `H_[1](n) = GL(n-1)`.
    GlColumn(u32),
    /// `SL(3) = H_{1³}(3)`; `ε = 1`, standard labels have length ≤ 2.
    Sl3,
    /// `H_{1³}(4)`; standard labels have length ≤ 3, with `ε` powers.
    H13_4,
}

impl ModificationRuleSet {
    /// The rule set for `H_π(n)`, if one is known.
    pub fn for_group(pi: &Partition, n: u32) -> Option<Self> {
        match (pi.parts(), n) {
            ([1], n) if n > 0 => Some(ModificationRuleSet::GlColumn(n - 1)),
            ([1, 1, 1], 3) => Some(ModificationRuleSet::Sl3),
            ([1, 1, 1], 4) => Some(ModificationRuleSet::H13_4),
            _ => None,
        }
    }

    pub fn apply(self, f: &FormalCharacter) -> Result<FormalCharacter> {
        match self {
            ModificationRuleSet::GlColumn(m) => {
                let mut out = FormalCharacter::zero(f.group.clone());
                for (e, p, c) in f.terms() {
                    if let Some((r, q)) = gl_column_reduce(&p, m) {
                        out.add_term(e + r, q, c);
                    }
                }
                Ok(out)
            }
            ModificationRuleSet::Sl3 => sl3_modify(f),
            ModificationRuleSet::H13_4 => h13_4_modify(f),
        }
    }
}

/// Applies the known rule set for the character's group.
pub fn modify(f: &FormalCharacter) -> Result<FormalCharacter> {
    let n = f.group.n.ok_or_else(|| Error::UnsupportedGroup(format!("H_{} without n", f.group.pi)))?;
    ModificationRuleSet::for_group(&f.group.pi, n)
        .ok_or_else(|| Error::UnsupportedGroup(format!("H_{}({n})", f.group.pi)))?
        .apply(f)
}

fn sl3_rule(lambda: &Partition) -> Result<Vec<(Partition, i64)>> {
    let l = lambda.parts();
    let v = |a: u32, b: u32| Partition::new(vec![a, b]).expect("two-row label");
    Ok(match *l {
        [] | [_] | [_, _] => vec![(lambda.clone(), 1)],
        [_, _, _] => Vec::new(),
        [a, b, 1, 1] if a == b => vec![(v(a, a - 1), -1)],
        [a, b, 1, 1] => vec![(v(a, b - 1), -1), (v(a - 1, b), -1)],
        [_, _, 2, 1] => Vec::new(),
        [a, b, 2, 2] => vec![(v(a - 1, b - 1), 1)],
        [_, _, c, _] if c >= 3 => Vec::new(),
        _ => return Err(Error::UnsupportedLength { length: l.len(), max: 4 }),
    })
}

/// `SL(3)`: rewrites every label to length ≤ 2; `ε` is trivial and dropped.
pub fn sl3_modify(f: &FormalCharacter) -> Result<FormalCharacter> {
    require_pi_111(f)?;
    let mut out = FormalCharacter::zero(GroupTag::new(f.group.pi.clone(), Some(3)));
    for (_, p, c) in f.terms() {
        for (q, k) in sl3_rule(&p)? {
            out.add_term(0, q, c * k);
        }
    }
    Ok(out)
}

fn require_pi_111(f: &FormalCharacter) -> Result<()> {
    if f.group.pi != Partition::of(&[1, 1, 1]) {
        return Err(Error::UnsupportedGroup(format!("H_{}", f.group.pi)));
    }
    Ok(())
}

/// The identities for length-4 labels of `H_{1³}(4)`.
pub fn h13_4_rules() -> Vec<RewriteRule> {
    let p = Partition::of;
    let rule = |pat: &[u32], rep: Vec<(u32, Partition, i64)>| RewriteRule { pattern: p(pat), replacement: rep };
    vec![
        rule(&[1, 1, 1, 1], vec![(1, p(&[]), 1), (0, p(&[1]), -1)]),
        rule(&[2, 1, 1, 1], vec![(1, p(&[1]), 1), (0, p(&[2]), -1), (0, p(&[1, 1]), -1)]),
        rule(&[2, 2, 1, 1], vec![(1, p(&[1, 1]), 1), (0, p(&[2, 1]), -1), (0, p(&[1, 1, 1]), -1)]),
        rule(&[2, 2, 2, 1], vec![(1, p(&[1, 1, 1]), 1), (0, p(&[2, 1, 1]), -1)]),
        rule(&[2, 2, 2, 2], vec![(2, p(&[]), 1), (1, p(&[1]), -1), (0, p(&[1, 1]), 1)]),
        rule(&[3, 1, 1, 1], vec![(1, p(&[2]), 1), (0, p(&[3]), -1), (0, p(&[2, 1]), -1)]),
    ]
}

/// `H_{1³}(4)`: looks up the known identities for length-4 labels.
pub fn h13_4_modify(f: &FormalCharacter) -> Result<FormalCharacter> {
    require_pi_111(f)?;
    let rules = h13_4_rules();
    let mut out = FormalCharacter::zero(GroupTag::new(f.group.pi.clone(), Some(4)));
    for (e, p, c) in f.terms() {
        match p.len() {
            0..=3 => out.add_term(e, p, c),
            4 => {
                let rule = rules
                    .iter()
                    .find(|r| r.pattern == p)
                    .ok_or_else(|| Error::NoKnownRule(format!("(({})) in H_[1^3](4)", p.label())))?;
                for (r, q, k) in &rule.replacement {
                    out.add_term(e + r, q.clone(), c * k);
                }
            }
            len => return Err(Error::UnsupportedLength { length: len, max: 4 }),
        }
    }
    Ok(out)
}

/// `((μ))·((ν))` in `SL(3)`, through the `H_{1³}` product and the `SL(3)` rules.
pub fn modified_product_sl3(mu: &Partition, nu: &Partition) -> Result<FormalCharacter> {
    sl3_modify(&product_hpi(mu, nu, &Partition::of(&[1, 1, 1])).with_n(3))
}

/// The same product computed in `GL(3)` with columns of length 3 removed.
pub fn sl3_product_via_gl3(mu: &Partition, nu: &Partition) -> FormalCharacter {
    let mut out = FormalCharacter::zero(GroupTag::new(Partition::of(&[1, 1, 1]), Some(3)));
    for (lam, c) in lr_product(mu, nu).iter() {
        if let Some((_, q)) = gl_column_reduce(lam, 3) {
            out.add_term(0, q, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    fn single(parts: &[u32], n: u32) -> FormalCharacter {
        let mut f = FormalCharacter::zero(GroupTag::new(p(&[1, 1, 1]), Some(n)));
        f.add_term(0, p(parts), 1);
        f
    }

    #[test]
    fn column_reduction() {
        assert_eq!(gl_column_reduce(&p(&[2, 2, 1, 1]), 4), Some((1, p(&[1, 1]))));
        assert_eq!(gl_column_reduce(&p(&[3]), 4), Some((0, p(&[3]))));
        assert_eq!(gl_column_reduce(&p(&[1, 1, 1, 1, 1]), 4), None);
    }

    #[test]
    fn gl_minus_one_rules() {
        let mut f = FormalCharacter::zero(GroupTag::new(p(&[1]), Some(4)));
        f.add_term(0, p(&[1, 1, 1, 1]), 1);
        f.add_term(0, p(&[1, 1, 1]), 1);
        f.add_term(0, p(&[2, 1]), 1);
        assert_eq!(modify(&f).unwrap().to_text(), "e((0))_1 + ((21))_8");
        assert!(matches!(modify(&f.clone().with_n(0)), Err(Error::UnsupportedGroup(_))));
    }

    #[test]
    fn sl3_rules() {
        assert!(sl3_modify(&single(&[1, 1, 1], 3)).unwrap().is_zero());
        assert_eq!(sl3_modify(&single(&[2, 2, 2, 2], 3)).unwrap().to_text(), "((11))_3");
        assert_eq!(sl3_modify(&single(&[4, 3], 3)).unwrap().to_text(), "((43))_24");
        assert!(matches!(sl3_modify(&single(&[1, 1, 1, 1, 1], 3)), Err(Error::UnsupportedLength { length: 5, .. })));
    }

    #[test]
    fn h13_4_rules_apply() {
        assert_eq!(h13_4_modify(&single(&[1, 1, 1, 1], 4)).unwrap().to_text(), "e((0))_1 - ((1))_4");
        assert_eq!(h13_4_modify(&single(&[2, 2, 2, 2], 4)).unwrap().to_text(), "e^2((0))_1 - e((1))_4 + ((11))_6");
        assert_eq!(h13_4_modify(&single(&[2, 1], 4)).unwrap().to_text(), "((21))_20");
        assert!(matches!(h13_4_modify(&single(&[3, 2, 1, 1], 4)), Err(Error::NoKnownRule(_))));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_formal(&p(&[1, 1, 1, 1]), &p(&[1, 1, 1]), 4), -3);
        assert_eq!(dim_formal(&p(&[]), &p(&[3]), 7), 1);
        assert_eq!(dim_formal(&p(&[2, 1]), &p(&[2, 1]), 4), 19);
        assert_eq!(dim_formal(&p(&[2, 1, 1, 1]), &p(&[1, 1, 1]), 4), -12);
        assert_eq!(dim_formal(&p(&[3, 1]), &p(&[2, 1]), 4), 41);
    }

    #[test]
    fn vanishing_labels() {
        assert!(vanishes_at(&p(&[1, 1, 1, 1, 1]), &p(&[2, 1]), 4));
        assert!(!vanishes_at(&p(&[2, 1, 1, 1]), &p(&[2, 1]), 4));
        // dimension zero but not the zero character
        assert!(!vanishes_at(&p(&[1, 1, 1]), &p(&[1, 1, 1]), 3));
    }

    #[test]
    fn sl3_products() {
        let got = modified_product_sl3(&p(&[2, 2]), &p(&[2, 1])).unwrap();
        assert_eq!(got.to_text(), "((43))_24 + ((31))_15 + ((22))_6 + ((1))_3");
        assert_eq!(got, sl3_product_via_gl3(&p(&[2, 2]), &p(&[2, 1])));
        assert_eq!(modified_product_sl3(&p(&[1]), &p(&[])).unwrap().to_text(), "((1))_3");
        assert_eq!(modified_product_sl3(&p(&[1]), &p(&[1])).unwrap().to_text(), "((2))_6 + ((11))_3");
    }

    #[test]
    fn h13_4_product() {
        let f = product_hpi(&p(&[2]), &p(&[1, 1, 1]), &p(&[1, 1, 1])).with_n(4);
        assert_eq!(h13_4_modify(&f).unwrap().to_text(), "((311))_26 + e((1))_4");
    }
}
