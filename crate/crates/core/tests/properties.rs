use proptest::prelude::*;
use proptest::sample::select;

use hpi_core::branching::{
    branch_expansion, branch_gl_to_hpi, lift_hpi_to_gl, newell_littlewood, product_hpi, product_hpi_expansion,
    skew_product_by_series, ProductRoute, SkewProductRoute,
};
use hpi_core::modify::{
    dim_formal, gl_column_reduce, h13_4_rules, modified_product_sl3, modify, sl3_modify, sl3_product_via_gl3,
};
use hpi_core::oracle::{
    expand_in_variables, generating_product, plethysm_oracle, schur_decompose, series_coproduct_oracle,
    series_product_oracle, FactorKind, Monomial, MonomialPoly,
};
use hpi_core::series::{l_pi, l_pi_by_plethysm, m_pi, m_pi_coproduct, named_series, series_coeffs, series_product};
use hpi_core::symfunc::{
    antipode, counit, inner_coproduct, lr_product, outer_coproduct, outer_product, plethysm, plethysm_coproduct,
    scalar, tensor, PlethysmCoproductRoute,
};
use hpi_core::{
    partitions_of, partitions_up_to, FormalCharacter, GroupTag, Partition, SchurExpansion, SeriesId, SeriesName,
    TensorExpansion,
};

fn p(parts: &[u32]) -> Partition {
    Partition::of(parts)
}

fn s(lambda: &Partition) -> SchurExpansion {
    SchurExpansion::basis(lambda.clone())
}

fn part(max: u32) -> impl Strategy<Value = Partition> {
    select(partitions_up_to(max).collect::<Vec<_>>())
}

/// Pairs with `|μ| + |ν| ≤ total`.
fn pair(total: u32) -> impl Strategy<Value = (Partition, Partition)> {
    let all: Vec<_> = partitions_up_to(total)
        .flat_map(|a| partitions_up_to(total - a.weight()).map(move |b| (a.clone(), b)).collect::<Vec<_>>())
        .collect();
    select(all)
}

/// Non-empty pairs with `|λ|·|μ| ≤ bound`.
fn pleth_pair(bound: u32) -> impl Strategy<Value = (Partition, Partition)> {
    let mut all = Vec::new();
    for a in 1..=bound {
        for b in 1..=bound / a {
            for x in partitions_of(a, None, None) {
                for y in partitions_of(b, None, None) {
                    all.push((x.clone(), y));
                }
            }
        }
    }
    select(all)
}

/// Non-empty `(A, B, C)` with `(|A| + |B|)·|C| ≤ bound`.
fn triple(bound: u32) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    let mut all = Vec::new();
    for c in partitions_up_to(bound / 2).filter(|x| !x.is_empty()) {
        let room = bound / c.weight();
        for a in partitions_up_to(room - 1).filter(|x| !x.is_empty()) {
            for b in partitions_up_to(room - a.weight()).filter(|x| !x.is_empty()) {
                all.push((a.clone(), b, c.clone()));
            }
        }
    }
    select(all)
}

fn hpi_group() -> impl Strategy<Value = Partition> {
    select(vec![p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])])
}

/// `(Δ ⊗ id) Δ` or `(id ⊗ Δ) Δ` as a map of triples.
fn iterated(
    f: &SchurExpansion,
    cop: impl Fn(&SchurExpansion) -> TensorExpansion,
    left: bool,
) -> std::collections::BTreeMap<(Partition, Partition, Partition), i64> {
    let mut out = std::collections::BTreeMap::new();
    for ((a, b), c) in cop(f).iter() {
        let split = if left { a } else { b };
        for ((x, y), k) in cop(&s(split)).iter() {
            let key = if left { (x.clone(), y.clone(), b.clone()) } else { (a.clone(), x.clone(), y.clone()) };
            *out.entry(key).or_insert(0) += c * k;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

#[test]
fn partition_counts() {
    let counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627];
    for (k, &want) in counts.iter().enumerate() {
        assert_eq!(partitions_of(k as u32, None, None).count(), want, "k = {k}");
    }
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn conjugate_is_an_involution(lam in part(12)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().weight(), lam.weight());
    }

    #[test]
    fn partition_text_round_trip(lam in part(12)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
        let (a, b) = lam.frobenius();
        prop_assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), lam);
    }

    #[test]
    fn dim_counts_tableaux(lam in part(6), n in 1usize..=5) {
        let poly = expand_in_variables(&s(&lam), n);
        let total: i64 = poly.terms().map(|(_, c)| c).sum();
        prop_assert_eq!(lam.dim_gl(n as u32), total);
    }

    #[test]
    fn lr_symmetries((mu, nu) in pair(8)) {
        let prod = lr_product(&mu, &nu);
        prop_assert_eq!(&prod, &lr_product(&nu, &mu));
        prop_assert_eq!(lr_product(&mu.conjugate(), &nu.conjugate()), prod.conjugate());
    }

    #[test]
    fn coproduct_is_dual_to_product(f in part(8), (g, h) in pair(8)) {
        let pairing = outer_coproduct(&s(&f)).coeff(&(g.clone(), h.clone()));
        prop_assert_eq!(scalar(&lr_product(&g, &h), &s(&f)), pairing);
    }

    #[test]
    fn outer_coproduct_coassociative(f in part(8)) {
        prop_assert_eq!(iterated(&s(&f), outer_coproduct, true), iterated(&s(&f), outer_coproduct, false));
    }

    #[test]
    fn inner_coproduct_coassociative(f in part(6)) {
        prop_assert_eq!(iterated(&s(&f), inner_coproduct, true), iterated(&s(&f), inner_coproduct, false));
    }

    #[test]
    fn antipode_axiom(f in part(8)) {
        let mut lhs = SchurExpansion::zero();
        for ((a, b), c) in outer_coproduct(&s(&f)).iter() {
            lhs.add_scaled(&outer_product(&antipode(&s(a)), &s(b)), c);
        }
        prop_assert_eq!(lhs, SchurExpansion::one().scale(counit(&s(&f))));
    }

    #[test]
    fn coproduct_is_multiplicative((mu, nu) in pair(6)) {
        let lhs = outer_coproduct(&lr_product(&mu, &nu));
        prop_assert_eq!(lhs, outer_coproduct(&s(&mu)).product(&outer_coproduct(&s(&nu))));
    }

    #[test]
    fn plethysm_right_rules((b, c, a) in triple(10)) {
        let (sa, sb, sc) = (s(&a), s(&b), s(&c));
        prop_assert_eq!(plethysm(&sa, &(&sb + &sc)), &plethysm(&sa, &sb) + &plethysm(&sa, &sc));
        prop_assert_eq!(
            plethysm(&sa, &lr_product(&b, &c)),
            outer_product(&plethysm(&sa, &sb), &plethysm(&sa, &sc))
        );
    }

    #[test]
    fn plethysm_left_rules((a, b, c) in triple(10)) {
        let (sa, sb, sc) = (s(&a), s(&b), s(&c));
        // {C}[A + B] through Δ and {C}[A·B] through δ
        let mut sum = SchurExpansion::zero();
        for ((x, y), k) in outer_coproduct(&sc).iter() {
            sum.add_scaled(&outer_product(&plethysm(&sa, &s(x)), &plethysm(&sb, &s(y))), k);
        }
        prop_assert_eq!(plethysm(&(&sa + &sb), &sc), sum);
        prop_assume!(a.weight() * b.weight() * c.weight() <= 10);
        let mut prod = SchurExpansion::zero();
        for ((x, y), k) in inner_coproduct(&sc).iter() {
            prod.add_scaled(&outer_product(&plethysm(&sa, &s(x)), &plethysm(&sb, &s(y))), k);
        }
        prop_assert_eq!(plethysm(&lr_product(&a, &b), &sc), prod);
    }

    #[test]
    fn plethysm_associative((a, b) in pleth_pair(8), k in 1u32..=2) {
        prop_assume!(a.weight() * b.weight() * k <= 8);
        let c = s(&Partition::row(k));
        let lhs = plethysm(&plethysm(&s(&a), &s(&b)), &c);
        prop_assert_eq!(lhs, plethysm(&s(&a), &plethysm(&s(&b), &c)));
    }

    #[test]
    fn plethysm_matches_oracle((a, b) in pleth_pair(8)) {
        let n = (a.weight() * b.weight()) as usize;
        prop_assert_eq!(plethysm(&s(&a), &s(&b)), plethysm_oracle(&a, &b, n));
    }

    #[test]
    fn plethysm_coproduct_routes_agree((a, b) in pleth_pair(8)) {
        let direct = plethysm_coproduct(&s(&a), &s(&b), PlethysmCoproductRoute::Direct);
        prop_assert_eq!(&direct, &plethysm_coproduct(&s(&a), &s(&b), PlethysmCoproductRoute::Factored));
        prop_assert_eq!(direct, outer_coproduct(&plethysm(&s(&a), &s(&b))));
    }
}

#[test]
fn series_inverse_pairs() {
    use SeriesName::*;
    for (x, y) in [(L, M), (P, Q), (A, B), (C, D)] {
        let prod = series_product(&named_series(x, 10), &named_series(y, 10));
        assert_eq!(prod.body, SchurExpansion::one(), "{x}{y}");
    }
    for pi in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])] {
        let prod = series_product(&m_pi(&pi, 10), &l_pi(&pi, 10).unwrap());
        assert_eq!(prod.body, SchurExpansion::one(), "π = {pi}");
        assert_eq!(l_pi(&pi, 8).unwrap().body, l_pi_by_plethysm(&pi, 8).body, "π = {pi}");
    }
}

#[test]
fn adjoint_relations() {
    let l = named_series(SeriesName::L, 10);
    assert_eq!(named_series(SeriesName::Q, 10).body, l.flip_odd_weights().body);
    assert_eq!(named_series(SeriesName::P, 10).body, l.conjugate().body);
}

#[test]
fn series_coproducts_match_two_alphabets() {
    for pi in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
        let want = series_coproduct_oracle(&SeriesId::MPi(pi.clone()), 4, 4, 4).unwrap();
        assert_eq!(m_pi_coproduct(&pi, 4), want, "π = {pi}");
    }
}

#[test]
fn named_series_match_generating_products() {
    for name in SeriesName::ALL {
        let id = SeriesId::Named(name);
        let series = series_coeffs(&id, 5).unwrap();
        assert_eq!(expand_in_variables(&series.body, 6), series_product_oracle(&id, 6, 5), "{name}");
    }
}

/// `Π_{i,a} (1 ∓ x_i y_a)^{∓1}` in `m + m` variables.
fn cauchy_product(m: usize, kind: FactorKind, d: u32) -> MonomialPoly {
    let mut factors = Vec::new();
    for i in 0..m {
        for a in 0..m {
            let mut e = vec![0u8; 2 * m];
            e[i] = 1;
            e[m + a] = 1;
            factors.push((Monomial::from_exponents(&e), kind));
        }
    }
    generating_product(&factors, 2 * m, d)
}

fn two_alphabet(f: &TensorExpansion, m: usize) -> MonomialPoly {
    let mut out = MonomialPoly::zero(2 * m);
    let shift = |poly: MonomialPoly, offset: usize| {
        let mut q = MonomialPoly::zero(2 * m);
        for (mono, c) in poly.terms() {
            let mut e = vec![0u8; 2 * m];
            e[offset..offset + m].copy_from_slice(&mono.exponents(m));
            q.add_term(Monomial::from_exponents(&e), c);
        }
        q
    };
    for ((x, y), c) in f.iter() {
        let px = shift(expand_in_variables(&s(x), m), 0);
        let py = shift(expand_in_variables(&s(y), m), m);
        for (mono, k) in px.mul_truncated(&py, u32::MAX).terms() {
            out.add_term(mono, c * k);
        }
    }
    out
}

#[test]
fn cauchy_identities() {
    let (m, d) = (3, 10);
    let direct: TensorExpansion = partitions_up_to(d / 2).map(|x| ((x.clone(), x), 1)).collect();
    assert_eq!(cauchy_product(m, FactorKind::InvOneMinus, d), two_alphabet(&direct, m));
    let inverse: TensorExpansion = partitions_up_to(d / 2)
        .map(|x| {
            let sign = if x.weight() % 2 == 0 { 1 } else { -1 };
            ((x.clone(), x.conjugate()), sign)
        })
        .collect();
    assert_eq!(cauchy_product(m, FactorKind::OneMinus, d), two_alphabet(&inverse, m));
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn branch_lift_round_trip(lam in part(8), pi in hpi_group()) {
        let back = branch_expansion(&lift_hpi_to_gl(&lam, &pi), &pi);
        prop_assert_eq!(back.untwisted(), s(&lam));
        let down = branch_gl_to_hpi(&lam, &pi);
        let mut up = SchurExpansion::zero();
        for (_, mu, c) in down.terms() {
            up.add_scaled(&lift_hpi_to_gl(&mu, &pi), c);
        }
        prop_assert_eq!(up, s(&lam));
    }

    #[test]
    fn product_routes_agree((mu, nu) in pair(7), pi in hpi_group()) {
        let lifted = product_hpi_expansion(&mu, &nu, &pi, ProductRoute::LiftMultiplyBranch);
        prop_assert_eq!(lifted, product_hpi_expansion(&mu, &nu, &pi, ProductRoute::Kernel));
    }

    #[test]
    fn newell_littlewood_specialization((mu, nu) in pair(7)) {
        let nl = newell_littlewood(&mu, &nu);
        prop_assert_eq!(&product_hpi_expansion(&mu, &nu, &p(&[2]), ProductRoute::Kernel), &nl);
        prop_assert_eq!(&product_hpi_expansion(&mu, &nu, &p(&[1, 1]), ProductRoute::Kernel), &nl);
    }

    #[test]
    fn product_commutes_with_unit((mu, nu) in pair(7), pi in hpi_group()) {
        prop_assert_eq!(product_hpi(&mu, &nu, &pi), product_hpi(&nu, &mu, &pi));
        prop_assert_eq!(product_hpi(&mu, &Partition::empty(), &pi).untwisted(), s(&mu));
    }

    #[test]
    fn skew_product_routes_agree(
        (mu, nu) in pair(6),
        z in select(vec![None, Some(p(&[2])), Some(p(&[1, 1])), Some(p(&[3])), Some(p(&[2, 1])), Some(p(&[1, 1, 1]))]),
    ) {
        let d = mu.weight() + nu.weight();
        let series = match z {
            None => named_series(SeriesName::M, d),
            Some(pi) => m_pi(&pi, d),
        };
        prop_assert_eq!(
            skew_product_by_series(&mu, &nu, &series, SkewProductRoute::MultiplyThenSkew),
            skew_product_by_series(&mu, &nu, &series, SkewProductRoute::Coproduct)
        );
    }

    #[test]
    fn sl3_routes_agree((mu, nu) in pair(8)) {
        // length-3 labels are non-standard for SL(3): ((111)) is zero there, {111} is not
        prop_assume!(mu.len() <= 2 && nu.len() <= 2);
        prop_assert_eq!(modified_product_sl3(&mu, &nu).unwrap(), sl3_product_via_gl3(&mu, &nu));
    }

    #[test]
    fn column_reduction_keeps_dimension(lam in part(8), n in 1u32..=5) {
        prop_assume!(lam.len() <= n as usize);
        let (_, rho) = gl_column_reduce(&lam, n).unwrap();
        prop_assert_eq!(rho.dim_gl(n), lam.dim_gl(n));
    }

    #[test]
    fn gl_minus_one_branching_keeps_dimension(lam in part(8), n in 2u32..=5) {
        prop_assume!(lam.len() <= n as usize);
        let f = modify(&branch_gl_to_hpi(&lam, &p(&[1])).with_n(n)).unwrap();
        let total: i64 = f.terms().iter().map(|(_, q, c)| c * q.dim_gl(n - 1)).sum();
        prop_assert_eq!(total, lam.dim_gl(n));
        prop_assert_eq!(f.dimension(), Some(lam.dim_gl(n)));
    }

    #[test]
    fn oracle_round_trip(terms in proptest::collection::vec((part(6), -3i64..=3), 0..4), n in 1usize..=6) {
        let f: SchurExpansion = terms.into_iter().filter(|(x, _)| x.len() <= n).collect();
        prop_assert_eq!(schur_decompose(&expand_in_variables(&f, n)).unwrap(), f);
    }

    #[test]
    fn schur_json_round_trip(terms in proptest::collection::vec((part(8), -5i64..=5), 0..6)) {
        let f: SchurExpansion = terms.into_iter().collect();
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<SchurExpansion>(&json).unwrap(), f);
    }

    #[test]
    fn character_json_round_trip(lam in part(8), pi in hpi_group(), n in proptest::option::of(3u32..=6)) {
        let mut f = branch_gl_to_hpi(&lam, &pi);
        if let Some(n) = n {
            f = f.with_n(n);
        }
        let json = serde_json::to_string(&f).unwrap();
        let back: FormalCharacter = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
        prop_assert_eq!(back, f);
    }
}

#[test]
fn modification_rules_keep_dimension() {
    let pi = p(&[1, 1, 1]);
    for rule in h13_4_rules() {
        let rhs: i64 = rule.replacement.iter().map(|(_, q, c)| c * dim_formal(q, &pi, 4)).sum();
        assert_eq!(dim_formal(&rule.pattern, &pi, 4), rhs, "(({}))", rule.pattern.label());
    }
    assert_eq!(dim_formal(&p(&[2, 2, 1, 1]), &pi, 4), -17);
    for lam in partitions_up_to(12).filter(|x| x.len() <= 4 && (x.len() < 4 || x.part(2) <= 2)) {
        let mut f = FormalCharacter::zero(GroupTag::new(pi.clone(), Some(3)));
        f.add_term(0, lam.clone(), 1);
        let rhs: i64 = sl3_modify(&f).unwrap().terms().iter().map(|(_, q, c)| c * dim_formal(q, &pi, 3)).sum();
        assert_eq!(dim_formal(&lam, &pi, 3), rhs, "(({}))", lam.label());
    }
}

#[test]
fn outer_coproduct_is_tensor_of_series() {
    let m = named_series(SeriesName::M, 6);
    assert_eq!(outer_coproduct(&m.body).truncate(6), tensor(&m.body, &m.body).truncate(6));
}
