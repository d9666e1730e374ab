//! Littlewood–Richardson coefficients, for products and for skews.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partition::Partition;

type Terms = Arc<[(Partition, i64)]>;
type Cache = RwLock<HashMap<(Partition, Partition), Terms>>;

fn cached(
    cache: &'static OnceLock<Cache>,
    key: (Partition, Partition),
    compute: impl FnOnce() -> Vec<(Partition, i64)>,
) -> Terms {
    let cache = cache.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(&key) {
        return hit.clone();
    }
    let value: Terms = compute().into();
    cache.write().unwrap().insert(key, value.clone());
    value
}

/// `{μ}·{ν} = Σ_λ c^λ_{μν} {λ}`, as `(λ, c)` pairs sorted canonically.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> Terms {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    // Strip-adding cost grows with the added content, so add the smaller one.
    let (base, added) = if (nu.weight(), nu.len()) <= (mu.weight(), mu.len()) { (mu, nu) } else { (nu, mu) };
    cached(&CACHE, (base.clone(), added.clone()), || {
        let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
        let mut state = StripState { shape: base.parts().to_vec(), labels: vec![Vec::new(); base.len()] };
        add_strips(&mut state, added.parts(), 0, &mut acc);
        finish(acc)
    })
}

fn finish(acc: HashMap<Vec<u32>, i64>) -> Vec<(Partition, i64)> {
    let mut out: Vec<_> = acc.into_iter().map(|(p, c)| (Partition::new(p).expect("LR shape"), c)).collect();
    out.sort();
    out
}

struct StripState {
    shape: Vec<u32>,
    /// `labels[r][i]`: how many cells of row `r` carry label `i`.
    labels: Vec<Vec<u32>>,
}

impl StripState {
    fn label_count(&self, row: usize, label: usize) -> u32 {
        self.labels.get(row).and_then(|l| l.get(label)).copied().unwrap_or(0)
    }
}

fn add_strips(st: &mut StripState, content: &[u32], label: usize, acc: &mut HashMap<Vec<u32>, i64>) {
    if label == content.len() {
        *acc.entry(st.shape.clone()).or_insert(0) += 1;
        return;
    }
    let old = st.shape.clone();
    place_row(st, &old, content, label, 0, content[label], 0, 0, acc);
}

/// Distributes the `label`-th horizontal strip row by row. `cum` is how many
/// cells of this label sit in rows above `row`; `prev_cum` the same for the
/// previous label, also counting only rows above `row`.
#[allow(clippy::too_many_arguments)]
fn place_row(
    st: &mut StripState,
    old: &[u32],
    content: &[u32],
    label: usize,
    row: usize,
    remaining: u32,
    cum: u32,
    prev_cum: u32,
    acc: &mut HashMap<Vec<u32>, i64>,
) {
    if remaining == 0 {
        add_strips(st, content, label + 1, acc);
        return;
    }
    if row > old.len() {
        return;
    }
    let cur = old.get(row).copied().unwrap_or(0);
    let cap = if row == 0 { remaining } else { old[row - 1] - cur };
    let mut hi = cap.min(remaining);
    if label > 0 {
        // Lattice word: label i never outnumbers label i-1 in the reading prefix.
        hi = hi.min(prev_cum.saturating_sub(cum));
    }
    let prev_here = if label > 0 { st.label_count(row, label - 1) } else { 0 };
    for k in (0..=hi).rev() {
        if k > 0 {
            if row == st.shape.len() {
                st.shape.push(0);
                st.labels.push(Vec::new());
            }
            st.shape[row] += k;
            let l = &mut st.labels[row];
            if l.len() <= label {
                l.resize(label + 1, 0);
            }
            l[label] += k;
        }
        place_row(st, old, content, label, row + 1, remaining - k, cum + k, prev_cum + prev_here, acc);
        if k > 0 {
            st.shape[row] -= k;
            st.labels[row][label] -= k;
            if st.shape[row] == 0 {
                st.shape.pop();
                st.labels.pop();
            }
        }
    }
}

/// `{λ}/{μ} = Σ_ν c^λ_{μν} {ν}`; empty when `μ ⊄ λ`.
pub fn skew_coefficients(outer: &Partition, inner: &Partition) -> Terms {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    cached(&CACHE, (outer.clone(), inner.clone()), || {
        if !outer.contains(inner) {
            return Vec::new();
        }
        let cells: Vec<(usize, usize)> = (0..outer.len())
            .flat_map(|r| (inner.part(r) as usize..outer.part(r) as usize).rev().map(move |c| (r, c)))
            .collect();
        let mut grid: Vec<Vec<u32>> = outer.parts().iter().map(|&p| vec![0; p as usize]).collect();
        let mut counts: Vec<u32> = Vec::new();
        let mut acc = HashMap::new();
        fill_skew(outer, inner, &cells, 0, &mut grid, &mut counts, &mut acc);
        finish(acc)
    })
}

fn fill_skew(
    outer: &Partition,
    inner: &Partition,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    acc: &mut HashMap<Vec<u32>, i64>,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        *acc.entry(counts.clone()).or_insert(0) += 1;
        return;
    };
    // Rows weakly increase left to right; we fill right to left.
    let hi = if c + 1 < outer.part(r) as usize { grid[r][c + 1] } else { counts.len() as u32 + 1 };
    // Columns strictly increase downward.
    let lo = if r > 0 && c >= inner.part(r - 1) as usize { grid[r - 1][c] + 1 } else { 1 };
    for v in lo..=hi.min(counts.len() as u32 + 1) {
        let i = v as usize - 1;
        if i > 0 && counts[i - 1] <= counts.get(i).copied().unwrap_or(0) {
            continue;
        }
        if i == counts.len() {
            counts.push(0);
        }
        counts[i] += 1;
        grid[r][c] = v;
        fill_skew(outer, inner, cells, idx + 1, grid, counts, acc);
        counts[i] -= 1;
        if counts[i] == 0 && i + 1 == counts.len() {
            counts.pop();
        }
    }
    grid[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    fn as_pairs(t: &Terms) -> Vec<(String, i64)> {
        t.iter().map(|(p, c)| (p.compact(), *c)).collect()
    }

    #[test]
    fn small_products() {
        let got = as_pairs(&lr_coefficients(&p(&[2, 1]), &p(&[2, 1])));
        let want: Vec<(String, i64)> =
            [("4,2", 1), ("4,1^2", 1), ("3^2", 1), ("3,2,1", 2), ("3,1^3", 1), ("2^3", 1), ("2^2,1^2", 1)]
                .iter()
                .map(|(s, c)| (s.to_string(), *c))
                .collect();
        let mut want = want;
        want.sort_by_key(|(s, _)| s.parse::<Partition>().unwrap());
        assert_eq!(got, want);
        assert_eq!(as_pairs(&lr_coefficients(&p(&[1]), &p(&[]))), vec![("1".into(), 1)]);
    }

    #[test]
    fn skew_matches_product() {
        // {321}/{21} = {3} + 2{21} + {111}
        let got = as_pairs(&skew_coefficients(&p(&[3, 2, 1]), &p(&[2, 1])));
        assert_eq!(got, vec![("3".into(), 1), ("2,1".into(), 2), ("1^3".into(), 1)]);
        assert!(skew_coefficients(&p(&[2]), &p(&[1, 1])).is_empty());
        assert_eq!(as_pairs(&skew_coefficients(&p(&[2, 2]), &p(&[2, 2]))), vec![("0".into(), 1)]);
    }

    #[test]
    fn product_and_skew_are_adjoint() {
        use crate::partition::partitions_of;
        for a in 0..5 {
            for b in 0..4 {
                for mu in partitions_of(a, None, None) {
                    for nu in partitions_of(b, None, None) {
                        for (lam, c) in lr_coefficients(&mu, &nu).iter() {
                            let sk = skew_coefficients(lam, &mu);
                            let back = sk.iter().find(|(x, _)| *x == nu).map(|x| x.1).unwrap_or(0);
                            assert_eq!(back, *c, "{lam}/{mu} vs {nu}");
                        }
                    }
                }
            }
        }
    }
}
