//! Inputs shared by the benchmarks in `benches/`.

use hpi_core::{partitions_up_to, Partition};

/// The groups `H_π` with non-trivial cut kernels that the benches exercise.
pub fn groups() -> Vec<Partition> {
    vec![Partition::of(&[2]), Partition::of(&[2, 1]), Partition::of(&[1, 1, 1])]
}

/// All pairs `(μ, ν)` with `|μ| + |ν| = total`.
pub fn pairs_of_weight(total: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for mu in partitions_up_to(total) {
        for nu in partitions_up_to(total - mu.weight()).filter(|nu| nu.weight() + mu.weight() == total) {
            out.push((mu.clone(), nu));
        }
    }
    out
}
