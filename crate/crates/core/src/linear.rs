//! Finite integer linear combinations over an ordered basis.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord>(BTreeMap<K, i64>);

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K) -> Self {
        Self::from_terms([(key, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.0.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, key: &K) -> i64 {
        self.0.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> + '_ {
        self.0.iter().map(|(k, &c)| (k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Combination(self.0.iter().map(|(k, &v)| (k.clone(), v * c)).collect())
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Combination(self.0.iter().filter(|(k, _)| keep(k)).map(|(k, &v)| (k.clone(), v)).collect())
    }

    /// Re-index through `f`, merging colliding keys.
    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> Combination<J> {
        Combination::from_terms(self.0.iter().map(|(k, &c)| (f(k), c)))
    }

    /// Bilinear extension of `f` on basis pairs.
    pub fn bilinear<J: Ord + Clone, L: Ord + Clone>(
        &self,
        other: &Combination<J>,
        mut f: impl FnMut(&K, &J) -> Combination<L>,
    ) -> Combination<L> {
        let mut out = Combination::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_scaled(&f(a, b), ca * cb);
            }
        }
        out
    }

    /// Linear extension of `f` on basis elements.
    pub fn linear<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<J>) -> Combination<J> {
        let mut out = Combination::zero();
        for (a, c) in self.iter() {
            out.add_scaled(&f(a), c);
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: i64) {
        if c == 0 {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Ord> IntoIterator for Combination<K> {
    type Item = (K, i64);
    type IntoIter = btree_map::IntoIter<K, i64>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        self.add_scaled(rhs, 1);
    }
}

impl<K: Ord + Clone> SubAssign<&Combination<K>> for Combination<K> {
    fn sub_assign(&mut self, rhs: &Combination<K>) {
        self.add_scaled(rhs, -1);
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: Self) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: Self) -> Combination<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;
    fn add(mut self, rhs: Self) -> Combination<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for Combination<K> {
    type Output = Combination<K>;
    fn sub(mut self, rhs: Self) -> Combination<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        self.scale(-1)
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        self.scale(-1)
    }
}

impl<K: Ord + Clone> Mul<i64> for &Combination<K> {
    type Output = Combination<K>;
    fn mul(self, c: i64) -> Combination<K> {
        self.scale(c)
    }
}

/// Joins rendered basis elements with their coefficients: `a + 2*b - c`.
pub(crate) fn render_terms(terms: impl IntoIterator<Item = (String, i64)>, coeff_sep: &str) -> String {
    let mut out = String::new();
    for (i, (body, c)) in terms.into_iter().enumerate() {
        let mag = c.unsigned_abs();
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if mag != 1 {
            out.push_str(&mag.to_string());
            out.push_str(coeff_sep);
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a = Combination::from_terms([("x", 2), ("y", 1)]);
        a.add_term("x", -2);
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(&"x"), 0);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn rendering() {
        let t = vec![("a".to_string(), -1), ("b".to_string(), 3), ("c".to_string(), -2)];
        assert_eq!(render_terms(t, "*"), "-a + 3*b - 2*c");
        assert_eq!(render_terms(Vec::new(), "*"), "0");
    }
}
