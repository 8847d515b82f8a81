//! Integer partitions, Frobenius coordinates, and the bounded enumerators
//! that feed the sweep harness.
//!
//! Parts are accessed 1-indexed through [`Partition::part`], with `μ_k = 0`
//! for every `k > ℓ(μ)`. The min/max index helpers rely on that convention.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {index} is zero; parts must be positive")]
    ZeroPart { index: usize },
    #[error("parts are not weakly decreasing at position {index} ({prev} < {next})")]
    Increasing {
        index: usize,
        prev: usize,
        next: usize,
    },
    #[error("partition ({0}) is not strict")]
    NotStrict(Partition),
    #[error("arms and legs differ in length ({arms} vs {legs})")]
    FrobeniusLength { arms: usize, legs: usize },
    #[error("{which} of a Frobenius form must be strictly decreasing")]
    FrobeniusOrder { which: &'static str },
    #[error("size of partition overflows")]
    Overflow,
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        for (index, pair) in parts.windows(2).enumerate() {
            if pair[0] < pair[1] {
                return Err(PartitionError::Increasing {
                    index: index + 1,
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart { index });
        }
        parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or(PartitionError::Overflow)?;
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, `ℓ(μ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|μ|`, the number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// 1-indexed part access; zero outside `1..=ℓ(μ)`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `μ₁`, or zero for the empty partition.
    pub fn largest(&self) -> usize {
        self.part(1)
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.largest() <= cols
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `min{k ≥ 1 : μ_k ≤ d}`; always in `1..=ℓ(μ)+1`.
    pub fn first_at_most(&self, d: usize) -> usize {
        self.0.iter().position(|&p| p <= d).unwrap_or(self.len()) + 1
    }

    /// `max{1 ≤ k ≤ ℓ(μ) : μ_k ≥ bound}`, or zero when no part qualifies.
    pub fn last_at_least(&self, bound: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= bound).count()
    }

    /// Transpose of the Ferrers diagram: `μ′_j = #{i : μ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    pub fn to_frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let rank = (1..=self.len()).take_while(|&i| self.part(i) >= i).count();
        FrobeniusForm {
            arms: (1..=rank).map(|i| self.part(i) - i).collect(),
            legs: (1..=rank).map(|i| conj.part(i) - i).collect(),
        }
    }

    pub fn from_frobenius(form: &FrobeniusForm) -> Partition {
        let rank = form.rank();
        let mut parts: Vec<usize> = form
            .arms
            .iter()
            .enumerate()
            .map(|(idx, &arm)| arm + idx + 1)
            .collect();
        // Rows below the diagonal square: row i meets column j exactly when
        // the j-th leg reaches down to it.
        let mut i = rank + 1;
        loop {
            let count = form
                .legs
                .iter()
                .enumerate()
                .filter(|&(idx, &leg)| leg + idx + 1 >= i)
                .count();
            if count == 0 {
                break;
            }
            parts.push(count);
            i += 1;
        }
        Partition(parts)
    }

    /// The partition `(λ₁,…,λ_s | λ₁−1,…,λ_s−1)` in Frobenius notation.
    pub fn doubled_shifted(lambda: &Partition) -> Result<Partition, PartitionError> {
        if !lambda.is_strict() {
            return Err(PartitionError::NotStrict(lambda.clone()));
        }
        let form = FrobeniusForm {
            arms: lambda.0.clone(),
            legs: lambda.0.iter().map(|&p| p - 1).collect(),
        };
        Ok(Partition::from_frobenius(&form))
    }

    pub fn is_doubled_shifted(&self) -> bool {
        let form = self.to_frobenius();
        form.arms
            .iter()
            .zip(&form.legs)
            .all(|(&arm, &leg)| arm >= 1 && leg == arm - 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (idx, item) in items.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl FromStr for Partition {
    type Err = crate::literal::LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::literal::parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Diagonal hook data `(α₁,…,α_s | β₁,…,β_s)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusForm {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self, PartitionError> {
        if arms.len() != legs.len() {
            return Err(PartitionError::FrobeniusLength {
                arms: arms.len(),
                legs: legs.len(),
            });
        }
        if !arms.windows(2).all(|w| w[0] > w[1]) {
            return Err(PartitionError::FrobeniusOrder { which: "arms" });
        }
        if !legs.windows(2).all(|w| w[0] > w[1]) {
            return Err(PartitionError::FrobeniusOrder { which: "legs" });
        }
        Ok(FrobeniusForm { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Number of diagonal cells.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_list(f, &self.arms)?;
        f.write_str(" | ")?;
        write_list(f, &self.legs)?;
        f.write_str(")")
    }
}

/// Every partition with at most `rows` parts, each at most `cols`.
///
/// Order is graded: by size first, then reverse-lexicographic within a size,
/// so `(2)` precedes `(1,1)`. The order is part of the contract; sweep
/// reports depend on it.
pub fn partitions_in_box(rows: usize, cols: usize) -> PartitionsInBox {
    PartitionsInBox {
        rows,
        cols,
        size: 0,
        current: Some(Vec::new()),
    }
}

#[derive(Debug, Clone)]
pub struct PartitionsInBox {
    rows: usize,
    cols: usize,
    size: usize,
    current: Option<Vec<usize>>,
}

impl PartitionsInBox {
    fn capacity(&self) -> usize {
        self.rows * self.cols
    }

    /// Lexicographically largest partition of `size` inside the box.
    fn first_of_size(&self, size: usize) -> Option<Vec<usize>> {
        if size > self.capacity() {
            return None;
        }
        Some(greedy_fill(size, self.cols))
    }

    /// Next partition of the same size in reverse-lex order.
    fn successor(&self, parts: &[usize]) -> Option<Vec<usize>> {
        let mut tail: usize = 0;
        for i in (0..parts.len()).rev() {
            tail += parts[i];
            let lowered = parts[i] - 1;
            let remaining = tail - parts[i] + 1;
            let slots = self.rows - i - 1;
            if lowered >= 1 && remaining <= slots * lowered {
                let mut next = parts[..i].to_vec();
                next.push(lowered);
                next.extend(greedy_fill(remaining, lowered));
                return Some(next);
            }
        }
        None
    }
}

fn greedy_fill(mut amount: usize, cap: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    while amount > 0 {
        let p = amount.min(cap);
        parts.push(p);
        amount -= p;
    }
    parts
}

impl Iterator for PartitionsInBox {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        self.current = self.successor(&current).or_else(|| {
            self.size += 1;
            self.first_of_size(self.size)
        });
        Some(Partition(current))
    }
}

/// Every strict partition whose largest part is at most `max_part`,
/// graded by size then reverse-lexicographic (the same order as
/// [`partitions_in_box`]).
pub fn strict_partitions_max(max_part: usize) -> impl Iterator<Item = Partition> {
    assert!(
        max_part < usize::BITS as usize,
        "too many strict partitions"
    );
    let mut all: Vec<Vec<usize>> = (0u64..1 << max_part)
        .map(|mask| {
            (1..=max_part)
                .rev()
                .filter(|&v| mask & (1 << (v - 1)) != 0)
                .collect()
        })
        .collect();
    all.sort_by(|a, b| {
        let sa: usize = a.iter().sum();
        let sb: usize = b.iter().sum();
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    all.into_iter().map(Partition)
}
