//! Seeded random inputs for property checks.

use rand::Rng;

use crate::partition::Partition;
use crate::staircase::Staircase;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_160_503;

/// A staircase of height at most `max_height`: each row steps right by zero
/// (half the time) or by `1..=6`.
pub fn staircase<R: Rng>(rng: &mut R, max_height: usize) -> Staircase {
    let height = rng.gen_range(0..=max_height);
    let mut offset = 0;
    let mut profile = Vec::with_capacity(height);
    for r in 0..height {
        if r > 0 && rng.gen_bool(0.5) {
            offset += rng.gen_range(1..=6);
        }
        profile.push(offset);
    }
    Staircase::from_profile(&profile)
}

/// A partition with at most `rows` parts, each at most `cols`.
pub fn partition_in_box<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Partition {
    if cols == 0 {
        return Partition::empty();
    }
    let len = rng.gen_range(0..=rows);
    let mut parts: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=cols)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted positive parts")
}

/// `(n, k, μ)` with `n ≤ max_n`, `k ≤ max_k` and `μ` in the `n × k` box.
pub fn box_instance<R: Rng>(rng: &mut R, max_n: usize, max_k: usize) -> (usize, usize, Partition) {
    let n = rng.gen_range(0..=max_n);
    let k = rng.gen_range(0..=max_k);
    (n, k, partition_in_box(rng, n, k))
}

/// A strict partition with parts at most `max_part`, each part kept with
/// probability one half.
pub fn strict_partition<R: Rng>(rng: &mut R, max_part: usize) -> Partition {
    let parts: Vec<usize> = (1..=max_part).rev().filter(|_| rng.gen_bool(0.5)).collect();
    Partition::new(parts).expect("distinct decreasing parts")
}
