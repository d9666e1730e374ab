//! Integer partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The total order is the canonical one used everywhere in output: by weight,
/// then reverse-lexicographically (so `[3]` precedes `[2,1]` precedes `[1^3]`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part inside {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Build from a literal. Panics if `parts` is not a partition.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("literal partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-row partition `(k)`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0) as usize;
        let mut out = vec![0u32; first];
        for &p in &self.0 {
            for slot in out.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Partition(out)
    }

    /// Frobenius coordinates `(a | b)` with `a_i = λ_i - i`, `b_i = λ'_i - i` (1-based `i`).
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let rank = self.0.iter().enumerate().take_while(|&(i, &p)| p as usize > i).count();
        let a = (0..rank).map(|i| self.0[i] - i as u32 - 1).collect();
        let b = (0..rank).map(|i| conj.0[i] - i as u32 - 1).collect();
        (a, b)
    }

    pub fn from_frobenius(a: &[u32], b: &[u32]) -> Result<Self> {
        if a.len() != b.len() || a.windows(2).any(|w| w[0] <= w[1]) || b.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("bad Frobenius coordinates ({a:?} | {b:?})")));
        }
        let r = a.len();
        let len = if r == 0 { 0 } else { b[0] as usize + 1 };
        let mut parts = vec![0u32; len];
        for i in 0..r {
            parts[i] = a[i] + i as u32 + 1;
        }
        // Rows below the diagonal block: row i has #{j < r : b_j + j >= i} cells.
        for (i, part) in parts.iter_mut().enumerate().skip(r) {
            *part = (0..r).filter(|&j| b[j] as usize + j >= i).count() as u32;
        }
        Partition::new(parts)
    }

    /// True when the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Every partition whose diagram fits inside this one, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[u32], i: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i == outer.len() {
                return;
            }
            for p in 1..=bound.min(outer[i]) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Dimension of the GL(n) irrep with highest weight `self` (hook-content formula).
    pub fn dim_gl(&self, n: u32) -> i64 {
        if self.len() > n as usize {
            return 0;
        }
        let conj = self.conjugate();
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                num *= n as i64 + j as i64 - i as i64;
                den *= (row as i64 - j as i64) + (conj.0[j] as i64 - i as i64) - 1;
            }
        }
        (num / den).to_i64().expect("dimension fits in i64")
    }

    /// Compact label used inside formal characters: digits run together when
    /// every part is below ten (`431`), comma separated otherwise, `0` for `∅`.
    pub fn label(&self) -> String {
        if self.is_empty() {
            "0".to_string()
        } else if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            join(self.0.iter(), ",")
        }
    }

    /// Comma form with exponent runs: `3,2^2,1`. Zero partition renders as `0`.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&q| q == p).count();
            if run >= 2 {
                items.push(format!("{p}^{run}"));
            } else {
                items.push(p.to_string());
            }
            i += run;
        }
        items.join(",")
    }
}

fn join<T: fmt::Display>(items: impl Iterator<Item = T>, sep: &str) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.compact())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,2,1]`, `[2^3]`, `[2^2,1]`, `[0]`, `[]`; brackets optional.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("partition `{s}`: {why}"));
        let t = s.trim();
        let inner = match (t.strip_prefix('['), t.strip_suffix(']')) {
            (Some(_), Some(_)) if t.len() >= 2 => &t[1..t.len() - 1],
            (None, None) => t,
            _ => return Err(bad("unbalanced brackets")),
        };
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in inner.split(',') {
            let item = item.trim();
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let base: u32 = base.parse().map_err(|_| bad("expected a number"))?;
            let exp: usize = exp.parse().map_err(|_| bad("expected an exponent"))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|e| match e {
            Error::InvalidPartition(m) => bad(&m),
            other => other,
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Partitions of `k` in reverse-lexicographic order, optionally bounded in
/// length and largest part.
pub fn partitions_of(k: u32, max_length: Option<usize>, max_part: Option<u32>) -> impl Iterator<Item = Partition> {
    fn go(rest: u32, bound: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=bound.min(rest)).rev() {
            // Remaining slots must be able to hold what is left.
            if (p as u64) * (slots as u64) < rest as u64 {
                break;
            }
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, max_part.unwrap_or(k), max_length.unwrap_or(k as usize), &mut Vec::new(), &mut out);
    out.into_iter()
}

/// All partitions of weight at most `d`, in canonical order.
pub fn partitions_up_to(d: u32) -> impl Iterator<Item = Partition> {
    (0..=d).flat_map(|k| partitions_of(k, None, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_strips_trailing_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), Partition::of(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn parse_and_render() {
        for (s, p) in [
            ("[3,2,1]", Partition::of(&[3, 2, 1])),
            ("[2^3]", Partition::of(&[2, 2, 2])),
            ("[ 2^2 , 1 ]", Partition::of(&[2, 2, 1])),
            ("[0]", Partition::empty()),
            ("[]", Partition::empty()),
            ("4,1", Partition::of(&[4, 1])),
        ] {
            assert_eq!(s.parse::<Partition>().unwrap(), p, "{s}");
        }
        assert_eq!(Partition::of(&[2, 2, 1]).to_string(), "[2^2,1]");
        assert_eq!(Partition::empty().to_string(), "[0]");
        assert_eq!(Partition::of(&[1, 1, 1, 1]).compact(), "1^4");
        assert_eq!(Partition::of(&[4, 3]).label(), "43");
        assert_eq!(Partition::of(&[12, 3]).label(), "12,3");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[2,1".parse::<Partition>().is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![
            Partition::of(&[1, 1, 1]),
            Partition::of(&[2]),
            Partition::of(&[3]),
            Partition::of(&[2, 1]),
            Partition::empty(),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Partition::empty(),
                Partition::of(&[2]),
                Partition::of(&[3]),
                Partition::of(&[2, 1]),
                Partition::of(&[1, 1, 1]),
            ]
        );
    }

    #[test]
    fn enumerates_in_reverse_lex() {
        let got: Vec<_> = partitions_of(4, None, None).map(|p| p.compact()).collect();
        assert_eq!(got, ["4", "3,1", "2^2", "2,1^2", "1^4"]);
        assert_eq!(partitions_of(10, None, None).count(), 42);
        assert_eq!(partitions_of(6, Some(2), None).count(), 4);
        assert_eq!(partitions_of(6, None, Some(2)).count(), 4);
        assert_eq!(partitions_of(0, None, None).count(), 1);
    }

    #[test]
    fn frobenius_roundtrip() {
        let p = Partition::of(&[4, 3, 1]);
        let (a, b) = p.frobenius();
        assert_eq!((a.clone(), b.clone()), (vec![3, 1], vec![2, 0]));
        assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), p);
        for k in 0..9 {
            for p in partitions_of(k, None, None) {
                let (a, b) = p.frobenius();
                assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), p);
            }
        }
    }

    #[test]
    fn gl_dimensions() {
        assert_eq!(Partition::of(&[2, 1]).dim_gl(3), 8);
        assert_eq!(Partition::of(&[3, 1, 1]).dim_gl(4), 36);
        assert_eq!(Partition::of(&[4, 2]).dim_gl(4), 126);
        assert_eq!(Partition::of(&[1, 1, 1, 1]).dim_gl(3), 0);
        assert_eq!(Partition::empty().dim_gl(5), 1);
    }

    #[test]
    fn subpartitions_count() {
        // Subdiagrams of a 2x2 box: 0, 1, 2, 11, 21, 22.
        assert_eq!(Partition::of(&[2, 2]).subpartitions().len(), 6);
    }
}
