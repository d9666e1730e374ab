//! Infinite Schur function series, truncated by weight.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{
    outer_coproduct, outer_product_truncated, plethysm_basis, plethysm_truncated, tensor, SchurExpansion,
    TensorExpansion,
};

/// A series `Σ c_λ {λ}` known through weight `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    pub label: String,
    pub degree: u32,
    pub body: SchurExpansion,
}

impl TruncatedSeries {
    pub fn new(label: impl Into<String>, degree: u32, body: SchurExpansion) -> Self {
        TruncatedSeries { label: label.into(), degree, body: body.truncate(degree) }
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.body.coeff(lambda)
    }

    pub fn constant_term(&self) -> i64 {
        self.body.coeff(&Partition::empty())
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn restrict_length(&self, max_len: usize) -> Self {
        TruncatedSeries { label: self.label.clone(), degree: self.degree, body: self.body.restrict_length(max_len) }
    }

    /// `t ↦ -t` on a series built from `L_t`: flips the sign of odd weights.
    pub fn flip_odd_weights(&self) -> Self {
        TruncatedSeries::new(format!("{}~", self.label), self.degree, self.body.flip_odd_weights())
    }

    pub fn conjugate(&self) -> Self {
        TruncatedSeries::new(format!("{}'", self.label), self.degree, self.body.conjugate())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body)
    }
}

/// The sixteen named series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    L,
    M,
    P,
    Q,
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    R,
    S,
    V,
    W,
}

impl SeriesName {
    pub const ALL: [SeriesName; 16] = [
        SeriesName::L,
        SeriesName::M,
        SeriesName::P,
        SeriesName::Q,
        SeriesName::A,
        SeriesName::B,
        SeriesName::C,
        SeriesName::D,
        SeriesName::E,
        SeriesName::F,
        SeriesName::G,
        SeriesName::H,
        SeriesName::R,
        SeriesName::S,
        SeriesName::V,
        SeriesName::W,
    ];

    /// The partner series under `t ↦ -t` (`L ↔ Q`, `M ↔ P`, ...).
    pub fn inverse_partner(self) -> SeriesName {
        use SeriesName::*;
        match self {
            L => M,
            M => L,
            P => Q,
            Q => P,
            A => B,
            B => A,
            C => D,
            D => C,
            E => F,
            F => E,
            G => H,
            H => G,
            R => S,
            S => R,
            V => W,
            W => V,
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SeriesName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL.into_iter().find(|n| n.to_string() == s).ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

/// A series expression: a named series, `Mpi:[π]`, `Lpi:[π]`, products
/// (`A*B`) and inverses (`X^-1`), with parentheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesId {
    Named(SeriesName),
    MPi(Partition),
    LPi(Partition),
    Product(Vec<SeriesId>),
    Inverse(Box<SeriesId>),
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesId::Named(n) => write!(f, "{n}"),
            SeriesId::MPi(p) => write!(f, "Mpi:{p}"),
            SeriesId::LPi(p) => write!(f, "Lpi:{p}"),
            SeriesId::Product(v) => {
                let s: Vec<String> = v
                    .iter()
                    .map(|x| match x {
                        SeriesId::Product(_) => format!("({x})"),
                        _ => x.to_string(),
                    })
                    .collect();
                f.write_str(&s.join("*"))
            }
            SeriesId::Inverse(x) => match **x {
                SeriesId::Product(_) => write!(f, "({x})^-1"),
                _ => write!(f, "{x}^-1"),
            },
        }
    }
}

impl FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = SeriesParser { src: s, pos: 0 };
        let id = p.product()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(Error::UnknownSeries(s.to_string()));
        }
        Ok(id)
    }
}

struct SeriesParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SeriesParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn fail(&self) -> Error {
        Error::UnknownSeries(self.src.to_string())
    }

    fn product(&mut self) -> Result<SeriesId> {
        let mut factors = vec![self.factor()?];
        while self.eat("*") {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { SeriesId::Product(factors) })
    }

    fn factor(&mut self) -> Result<SeriesId> {
        let mut atom = self.atom()?;
        while self.eat("^-1") {
            atom = SeriesId::Inverse(Box::new(atom));
        }
        Ok(atom)
    }

    fn partition(&mut self) -> Result<Partition> {
        self.skip_ws();
        let end = self.rest().find(']').ok_or_else(|| self.fail())?;
        let text = &self.rest()[..=end];
        let p = text.parse::<Partition>()?;
        self.pos += end + 1;
        Ok(p)
    }

    fn atom(&mut self) -> Result<SeriesId> {
        if self.eat("(") {
            let inner = self.product()?;
            if !self.eat(")") {
                return Err(self.fail());
            }
            return Ok(inner);
        }
        if self.eat("Mpi:") {
            return Ok(SeriesId::MPi(self.partition()?));
        }
        if self.eat("Lpi:") {
            return Ok(SeriesId::LPi(self.partition()?));
        }
        self.skip_ws();
        let name = self.rest().chars().next().ok_or_else(|| self.fail())?;
        let parsed = name.to_string().parse::<SeriesName>().map_err(|_| self.fail())?;
        self.pos += name.len_utf8();
        Ok(SeriesId::Named(parsed))
    }
}

/// `L_t = Σ_m (-1)^m {1^m}` through weight `d`; `L_{-t}` when `negate_t`.
fn l_t(d: u32, negate_t: bool) -> SchurExpansion {
    (0..=d)
        .map(|m| {
            let sign = if !negate_t && m % 2 == 1 { -1 } else { 1 };
            (Partition::column(m), sign)
        })
        .collect()
}

fn s(parts: &[u32]) -> SchurExpansion {
    SchurExpansion::basis(Partition::of(parts))
}

fn primitive(name: SeriesName, d: u32) -> Option<SchurExpansion> {
    use SeriesName::*;
    let lt = l_t(d, false);
    let lmt = l_t(d, true);
    let body = match name {
        L => plethysm_truncated(&s(&[1]), &lt, Some(d)),
        M => plethysm_truncated(&-s(&[1]), &lt, Some(d)),
        Q => plethysm_truncated(&s(&[1]), &lmt, Some(d)),
        P => plethysm_truncated(&-s(&[1]), &lmt, Some(d)),
        A => plethysm_truncated(&s(&[1, 1]), &lt, Some(d)),
        B => plethysm_truncated(&-s(&[1, 1]), &lt, Some(d)),
        C => plethysm_truncated(&s(&[2]), &lt, Some(d)),
        D => plethysm_truncated(&-s(&[2]), &lt, Some(d)),
        _ => return None,
    };
    Some(body)
}

/// The defining product of each derived series.
pub fn derived_factors(name: SeriesName) -> Option<(SeriesName, SeriesName)> {
    use SeriesName::*;
    Some(match name {
        E => (L, A),
        F => (M, B),
        G => (Q, A),
        H => (P, B),
        R => (L, P),
        S => (M, Q),
        V => (C, B),
        W => (A, D),
        _ => return None,
    })
}

pub fn named_series(name: SeriesName, d: u32) -> TruncatedSeries {
    let body = match primitive(name, d) {
        Some(b) => b,
        None => {
            let (x, y) = derived_factors(name).expect("every name is primitive or derived");
            outer_product_truncated(&named_series(x, d).body, &named_series(y, d).body, Some(d))
        }
    };
    TruncatedSeries::new(name.to_string(), d, body)
}

/// Evaluates a series expression through weight `d`.
pub fn series_coeffs(id: &SeriesId, d: u32) -> Result<TruncatedSeries> {
    let out = match id {
        SeriesId::Named(n) => named_series(*n, d),
        SeriesId::MPi(pi) => m_pi(pi, d),
        SeriesId::LPi(pi) => l_pi(pi, d)?,
        SeriesId::Product(factors) => {
            let mut acc = TruncatedSeries::new("1", d, SchurExpansion::one());
            for f in factors {
                acc = series_product(&acc, &series_coeffs(f, d)?);
            }
            acc
        }
        SeriesId::Inverse(x) => series_inverse(&series_coeffs(x, d)?)?,
    };
    Ok(out.relabel(id.to_string()))
}

/// `M_π = Σ_m {π} ⊗̲ {m}` through weight `d`.
pub fn m_pi(pi: &Partition, d: u32) -> TruncatedSeries {
    let mut body = SchurExpansion::one();
    for m in 1..=d.checked_div(pi.weight()).unwrap_or(0) {
        body += &*plethysm_basis(pi, &Partition::row(m));
    }
    TruncatedSeries::new(format!("Mpi:{pi}"), d, body)
}

/// `L_π = M_π^{-1}` through weight `d`.
pub fn l_pi(pi: &Partition, d: u32) -> Result<TruncatedSeries> {
    Ok(series_inverse(&m_pi(pi, d))?.relabel(format!("Lpi:{pi}")))
}

/// `Σ_m (-1)^m {π} ⊗̲ {1^m}`, which must agree with [`l_pi`].
pub fn l_pi_by_plethysm(pi: &Partition, d: u32) -> TruncatedSeries {
    let mut body = SchurExpansion::one();
    for m in 1..=d.checked_div(pi.weight()).unwrap_or(0) {
        let sign = if m % 2 == 1 { -1 } else { 1 };
        body.add_scaled(&plethysm_basis(pi, &Partition::column(m)), sign);
    }
    TruncatedSeries::new(format!("Lpi:{pi}"), d, body)
}

pub fn series_product(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let d = a.degree.min(b.degree);
    let label = match (a.label.as_str(), b.label.as_str()) {
        ("1", l) | (l, "1") => l.to_string(),
        (x, y) => format!("{x}*{y}"),
    };
    TruncatedSeries::new(label, d, outer_product_truncated(&a.body, &b.body, Some(d)))
}

/// Degreewise inverse; needs a constant term of `±1`.
pub fn series_inverse(sr: &TruncatedSeries) -> Result<TruncatedSeries> {
    let c0 = sr.constant_term();
    if c0.abs() != 1 {
        return Err(Error::NotInvertible(c0));
    }
    let d = sr.degree;
    let parts: Vec<SchurExpansion> = (0..=d).map(|k| sr.body.component(k)).collect();
    let mut inv: Vec<SchurExpansion> = vec![SchurExpansion::one().scale(c0)];
    for k in 1..=d {
        let mut acc = SchurExpansion::zero();
        for j in 1..=k {
            acc += &outer_product_truncated(&parts[j as usize], &inv[(k - j) as usize], None);
        }
        inv.push(acc.scale(-c0));
    }
    let body = inv.iter().fold(SchurExpansion::zero(), |a, b| a + b.clone());
    Ok(TruncatedSeries::new(format!("({})^-1", sr.label), d, body))
}

/// `Δ(S) = S ⊗ S` through total weight `S.degree`.
pub fn is_group_like(sr: &TruncatedSeries) -> bool {
    let d = sr.degree;
    outer_coproduct(&sr.body).truncate(d) == tensor(&sr.body, &sr.body).truncate(d)
}

/// The cut factor `K_π` with `Δ M_π = (M_π ⊗ M_π) · K_π`: one factor
/// `Σ_σ (ξ ⊗̲ σ) ⊗ (η ⊗̲ σ)` per term `ξ⊗η` of `Δ{π}` with both sides
/// non-empty, repeated by multiplicity. Truncated to total weight `d`.
pub fn cut_coproduct_kernel(pi: &Partition, d: u32) -> TensorExpansion {
    let unit = (Partition::empty(), Partition::empty());
    let mut kernel = TensorExpansion::from_terms([(unit.clone(), 1)]);
    let w = pi.weight();
    if w == 0 {
        return kernel;
    }
    for ((xi, eta), mult) in outer_coproduct(&SchurExpansion::basis(pi.clone())).iter() {
        if xi.is_empty() || eta.is_empty() {
            continue;
        }
        let mut factor = TensorExpansion::from_terms([(unit.clone(), 1)]);
        for k in 1..=d / w {
            for sigma in crate::partition::partitions_of(k, None, None) {
                factor += &tensor(&plethysm_basis(xi, &sigma), &plethysm_basis(eta, &sigma));
            }
        }
        for _ in 0..mult {
            kernel = kernel.product_truncated(&factor, Some(d));
        }
    }
    kernel
}

/// `(M_π, K_π)`: the group-like part and the cut kernel of `Δ M_π`,
/// both through total weight `d`.
pub fn series_outer_coproduct(pi: &Partition, d: u32) -> (TruncatedSeries, TensorExpansion) {
    (m_pi(pi, d), cut_coproduct_kernel(pi, d))
}

/// `Δ M_π = (M_π ⊗ M_π) · K_π` through total weight `d`.
pub fn m_pi_coproduct(pi: &Partition, d: u32) -> TensorExpansion {
    let (m, kernel) = series_outer_coproduct(pi, d);
    tensor(&m.body, &m.body).product_truncated(&kernel, Some(d))
}
