//! Staircases, broken-column leg sequences on either side of one, and the
//! master bijection between them.
//!
//! A staircase is a monotone lattice path with vertical pieces `v₁,…,v_p`
//! (bottom to top) separated by horizontal pieces `h₁,…,h_{p−1}`. Row `r`
//! (counted from the bottom) sits at horizontal offset `X_r`, the total of
//! the horizontal pieces below it.
//!
//! The bijection works on leg sequences that split into runs of consecutive
//! integers `m, m+1, …, M` starting at `0`. Each run is a "stack"; stacks are
//! kept as closed integer intervals.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::partition::{write_list, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaircaseError {
    #[error("expected {expected} horizontal pieces for {vertical} vertical pieces, got {got}")]
    PieceCount {
        vertical: usize,
        expected: usize,
        got: usize,
    },
    #[error("partition ({mu}) has more than {rows} parts")]
    TooManyParts { mu: Partition, rows: usize },
    #[error("staircase dimensions overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("sequence must start with 0, found {0}")]
    BadStart(usize),
    #[error("entry {index} jumps from {prev} to {next}; runs must increase by exactly one")]
    Gap {
        index: usize,
        prev: usize,
        next: usize,
    },
    #[error("cascade from stack {stack} would leave a non-contiguous stack")]
    NonContiguous { stack: usize },
    #[error("cascade would empty stack {stack}")]
    EmptiedStack { stack: usize },
    #[error("stack {stack} is malformed ({lo} > {hi})")]
    Malformed { stack: usize, lo: usize, hi: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Staircase {
    vertical: Vec<usize>,
    horizontal: Vec<usize>,
}

impl Staircase {
    /// Normalizes on construction: zero-length pieces vanish, pieces of the
    /// same direction that become adjacent are merged, and horizontal pieces
    /// at either end are dropped. A path with no vertical length is the
    /// height-zero staircase (no pieces at all).
    pub fn new(vertical: Vec<usize>, horizontal: Vec<usize>) -> Result<Self, StaircaseError> {
        if vertical.is_empty() && horizontal.is_empty() {
            return Ok(Staircase::default());
        }
        if vertical.len() != horizontal.len() + 1 {
            return Err(StaircaseError::PieceCount {
                vertical: vertical.len(),
                expected: vertical.len().saturating_sub(1),
                got: horizontal.len(),
            });
        }
        let mut v: Vec<usize> = Vec::new();
        let mut h: Vec<usize> = Vec::new();
        let mut pending = 0usize;
        for (i, &up) in vertical.iter().enumerate() {
            if up > 0 {
                if v.is_empty() {
                    v.push(up);
                } else if pending == 0 {
                    let last = v.last_mut().expect("non-empty");
                    *last = last.checked_add(up).ok_or(StaircaseError::Overflow)?;
                } else {
                    h.push(pending);
                    v.push(up);
                }
                pending = 0;
            }
            if let Some(&across) = horizontal.get(i) {
                if !v.is_empty() {
                    pending = pending
                        .checked_add(across)
                        .ok_or(StaircaseError::Overflow)?;
                }
            }
        }
        v.iter()
            .try_fold(0usize, |acc, &x| acc.checked_add(x))
            .ok_or(StaircaseError::Overflow)?;
        h.iter()
            .try_fold(0usize, |acc, &x| acc.checked_add(x))
            .ok_or(StaircaseError::Overflow)?;
        Ok(Staircase {
            vertical: v,
            horizontal: h,
        })
    }

    /// Staircase with the given weakly increasing row offsets (bottom to top).
    pub fn from_profile(profile: &[usize]) -> Self {
        let mut vertical = Vec::new();
        let mut horizontal = Vec::new();
        for (idx, &x) in profile.iter().enumerate() {
            if idx == 0 {
                vertical.push(1);
                continue;
            }
            let prev = profile[idx - 1];
            assert!(x >= prev, "staircase profile must be weakly increasing");
            if x == prev {
                *vertical.last_mut().expect("non-empty") += 1;
            } else {
                horizontal.push(x - prev);
                vertical.push(1);
            }
        }
        Staircase {
            vertical,
            horizontal,
        }
    }

    /// The boundary between `SR_{n,k}(μ)` and the rotated `SR_{n,k}(μ̃)`:
    /// `X_r = μ_{n−r}`.
    pub fn of_partition(mu: &Partition, rows: usize) -> Result<Self, StaircaseError> {
        if mu.len() > rows {
            return Err(StaircaseError::TooManyParts {
                mu: mu.clone(),
                rows,
            });
        }
        let profile: Vec<usize> = (0..rows).map(|r| mu.part(rows - r)).collect();
        Ok(Self::from_profile(&profile))
    }

    pub fn vertical(&self) -> &[usize] {
        &self.vertical
    }

    pub fn horizontal(&self) -> &[usize] {
        &self.horizontal
    }

    /// Number of vertical pieces, `p`.
    pub fn pieces(&self) -> usize {
        self.vertical.len()
    }

    /// Total height `n = Σ v_i`.
    pub fn height(&self) -> usize {
        self.vertical.iter().sum()
    }

    /// Horizontal offset of each row, bottom to top, starting at 0.
    pub fn profile(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.height());
        let mut offset = 0;
        for (i, &v) in self.vertical.iter().enumerate() {
            out.extend(std::iter::repeat_n(offset, v));
            if let Some(&h) = self.horizontal.get(i) {
                offset += h;
            }
        }
        out
    }

    /// Legs of the broken column in distance `d` left of the staircase,
    /// bottom to top: `l_r = #{r′ < r : X_{r′} ≥ X_r − d}`.
    pub fn left_legs(&self, d: usize) -> Vec<usize> {
        let x = self.profile();
        // X is weakly increasing, so the qualifying rows form a suffix of
        // 0..r; walk its start forward.
        let mut start = 0;
        (0..x.len())
            .map(|r| {
                while start < r && x[start] + d < x[r] {
                    start += 1;
                }
                r - start
            })
            .collect()
    }

    /// Legs of the broken column in distance `d` right of the staircase, top
    /// to bottom: `l′_r = #{r′ > r : X_{r′} ≤ X_r + d}` for `r = n−1, …, 0`.
    pub fn right_legs(&self, d: usize) -> Vec<usize> {
        let x = self.profile();
        let n = x.len();
        let mut end = n;
        (0..n)
            .rev()
            .map(|r| {
                while end > r + 1 && x[end - 1] > x[r] + d {
                    end -= 1;
                }
                end - r - 1
            })
            .collect()
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("v:")?;
        write_list(f, &self.vertical)?;
        f.write_str(";h:")?;
        write_list(f, &self.horizontal)
    }
}

impl FromStr for Staircase {
    type Err = crate::literal::LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::literal::parse_staircase(s)
    }
}

/// The stack `lo, lo+1, …, hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Run {
    pub lo: usize,
    pub hi: usize,
}

impl Run {
    pub fn new(lo: usize, hi: usize) -> Self {
        Run { lo, hi }
    }
}

/// 1-based range of vertical pieces `low..=high` whose lengths make up one
/// run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PieceSpan {
    pub low: usize,
    pub high: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct RunDecomposition {
    pub runs: Vec<Run>,
    /// Piece ranges, parallel to `runs`, when derived from a staircase.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spans: Option<Vec<PieceSpan>>,
}

impl RunDecomposition {
    pub fn from_runs(runs: Vec<Run>) -> Self {
        RunDecomposition { runs, spans: None }
    }

    /// Concatenation of the runs, first to last.
    pub fn flatten(&self) -> Vec<usize> {
        self.runs.iter().flat_map(|r| r.lo..=r.hi).collect()
    }
}

/// MB1: split into maximal runs of consecutive integers.
pub fn mb_split(seq: &[usize]) -> Result<RunDecomposition, BijectionError> {
    let mut runs: Vec<Run> = Vec::new();
    for (index, &x) in seq.iter().enumerate() {
        match runs.last_mut() {
            None if x != 0 => return Err(BijectionError::BadStart(x)),
            None => runs.push(Run::new(0, 0)),
            Some(run) if x == run.hi + 1 => run.hi = x,
            Some(run) if x > run.hi + 1 => {
                return Err(BijectionError::Gap {
                    index,
                    prev: run.hi,
                    next: x,
                })
            }
            Some(_) => runs.push(Run::new(x, x)),
        }
    }
    Ok(RunDecomposition::from_runs(runs))
}

fn check_runs(runs: &[Run]) -> Result<(), BijectionError> {
    for (stack, run) in runs.iter().enumerate() {
        if run.lo > run.hi {
            return Err(BijectionError::Malformed {
                stack,
                lo: run.lo,
                hi: run.hi,
            });
        }
    }
    Ok(())
}

/// MB2: for each stack in turn, move its entries below the bottom of the
/// next stack onto that stack.
pub fn mb_cascade(rd: &RunDecomposition) -> Result<RunDecomposition, BijectionError> {
    check_runs(&rd.runs)?;
    let mut stacks = rd.runs.clone();
    for t in 0..stacks.len().saturating_sub(1) {
        let threshold = stacks[t + 1].lo;
        let current = stacks[t];
        if current.lo >= threshold {
            continue;
        }
        let moved_hi = current.hi.min(threshold - 1);
        if moved_hi + 1 != threshold {
            return Err(BijectionError::NonContiguous { stack: t });
        }
        if current.hi < threshold {
            return Err(BijectionError::EmptiedStack { stack: t });
        }
        stacks[t + 1].lo = current.lo;
        stacks[t].lo = threshold;
    }
    Ok(RunDecomposition::from_runs(stacks))
}

/// Undo [`mb_cascade`] on stacks of the shape it produces.
pub fn mb_uncascade(rd: &RunDecomposition) -> Result<RunDecomposition, BijectionError> {
    check_runs(&rd.runs)?;
    let stacks = &rd.runs;
    let q = stacks.len();
    if q == 0 {
        return Ok(RunDecomposition::default());
    }
    if stacks[q - 1].lo != 0 {
        return Err(BijectionError::BadStart(stacks[q - 1].lo));
    }
    let mut runs = Vec::with_capacity(q);
    for t in 0..q {
        let lo = if t == 0 { 0 } else { stacks[t - 1].lo };
        let run = Run::new(lo, stacks[t].hi);
        if run.lo > run.hi {
            return Err(BijectionError::Malformed {
                stack: t,
                lo: run.lo,
                hi: run.hi,
            });
        }
        runs.push(run);
    }
    Ok(RunDecomposition::from_runs(runs))
}

/// MB3: read stacks from last to first, each bottom to top.
pub fn mb_read(rd: &RunDecomposition) -> Vec<usize> {
    rd.runs.iter().rev().flat_map(|r| r.lo..=r.hi).collect()
}

/// MB1, MB2, MB3 in sequence.
pub fn master_bijection(seq: &[usize]) -> Result<Vec<usize>, BijectionError> {
    Ok(mb_read(&mb_cascade(&mb_split(seq)?)?))
}

pub fn inverse_master_bijection(seq: &[usize]) -> Result<Vec<usize>, BijectionError> {
    let mut stacks = mb_split(seq)?;
    stacks.runs.reverse();
    let original = mb_uncascade(&stacks)?;
    // Re-splitting must recover the same runs, otherwise `seq` was not in
    // the image of the forward map.
    let flat = original.flatten();
    let resplit = mb_split(&flat)?;
    if resplit.runs != original.runs {
        return Err(BijectionError::NonContiguous { stack: 0 });
    }
    Ok(flat)
}

/// Run bounds of the left broken column straight from the piece lengths:
/// `j₁ = 1`, `i_t` is the first piece with `h_{j_t}+…+h_{i_t} > d` (or `p`),
/// `j_{t+1}` the first piece with `h_{j_{t+1}}+…+h_{i_t} ≤ d`, and
/// `M_t = v_{j_t}+…+v_{i_t} − 1`, `m_{t+1} = v_{j_{t+1}}+…+v_{i_t}`.
pub fn run_bounds_left(s: &Staircase, d: usize) -> RunDecomposition {
    let v = s.vertical();
    let h = s.horizontal();
    let p = v.len();
    if p == 0 {
        return RunDecomposition {
            runs: Vec::new(),
            spans: Some(Vec::new()),
        };
    }
    // Prefix sums over 1-based pieces.
    let vsum = prefix(v);
    let hsum = prefix(h);
    let v_range = |a: usize, b: usize| if b < a { 0 } else { vsum[b] - vsum[a - 1] };
    let h_range = |a: usize, b: usize| if b < a { 0 } else { hsum[b] - hsum[a - 1] };

    let mut runs = Vec::new();
    let mut spans = Vec::new();
    let mut j = 1;
    let mut lo = 0;
    loop {
        let mut i = j;
        while i < p && h_range(j, i) <= d {
            i += 1;
        }
        runs.push(Run::new(lo, v_range(j, i) - 1));
        spans.push(PieceSpan { low: j, high: i });
        if i == p {
            break;
        }
        let mut next = j + 1;
        while h_range(next, i) > d {
            next += 1;
        }
        lo = v_range(next, i);
        j = next;
    }
    RunDecomposition {
        runs,
        spans: Some(spans),
    }
}

/// Run bounds of the right broken column, in reading order (top to bottom),
/// worked downward from the top piece: `j̃_q = p`, `ĩ_t` is the lowest piece
/// with `h_{ĩ_t}+…+h_{j̃_t−1} ≤ d` (pieces below piece 1 count as unbounded),
/// and `j̃_{t−1}` the highest piece with `h_{ĩ_t−1}+…+h_{j̃_{t−1}−1} ≤ d`.
/// Spans are `(ĩ_t, j̃_t)`.
pub fn run_bounds_right(s: &Staircase, d: usize) -> RunDecomposition {
    let v = s.vertical();
    let h = s.horizontal();
    let p = v.len();
    if p == 0 {
        return RunDecomposition {
            runs: Vec::new(),
            spans: Some(Vec::new()),
        };
    }
    let vsum = prefix(v);
    let hsum = prefix(h);
    let v_range = |a: usize, b: usize| if b < a { 0 } else { vsum[b] - vsum[a - 1] };
    let h_range = |a: usize, b: usize| if b < a { 0 } else { hsum[b] - hsum[a - 1] };

    let mut runs = Vec::new();
    let mut spans = Vec::new();
    let mut top = p;
    let mut lo = 0;
    loop {
        let mut bottom = top;
        while bottom > 1 && h_range(bottom - 1, top - 1) <= d {
            bottom -= 1;
        }
        runs.push(Run::new(lo, v_range(bottom, top) - 1));
        spans.push(PieceSpan {
            low: bottom,
            high: top,
        });
        if bottom == 1 {
            break;
        }
        let mut next = top - 1;
        while h_range(bottom - 1, next - 1) > d {
            next -= 1;
        }
        lo = v_range(bottom, next);
        top = next;
    }
    RunDecomposition {
        runs,
        spans: Some(spans),
    }
}

fn prefix(values: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(values.len() + 1);
    out.push(0);
    let mut acc = 0;
    for &x in values {
        acc += x;
        out.push(acc);
    }
    out
}

/// Outcome of [`verify_lemma`]; `failure` names the first check that broke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub staircase: String,
    pub d: usize,
    pub left_legs: Vec<usize>,
    pub right_legs: Vec<usize>,
    pub output: Option<Vec<usize>>,
    pub pass: bool,
    pub failure: Option<String>,
}

/// Checks the broken-column lemma for one staircase and distance:
/// equal leg multisets, the master bijection maps the left sequence onto the
/// right one exactly, inversion round-trips, both run-bound formulas agree
/// with the sequences, and the two run systems are dual to each other.
pub fn verify_lemma(s: &Staircase, d: usize) -> LemmaReport {
    let left = s.left_legs(d);
    let right = s.right_legs(d);
    let mut report = LemmaReport {
        staircase: s.to_string(),
        d,
        left_legs: left.clone(),
        right_legs: right.clone(),
        output: None,
        pass: false,
        failure: None,
    };
    match lemma_failure(s, d, &left, &right, &mut report.output) {
        None => report.pass = true,
        Some(msg) => report.failure = Some(msg),
    }
    report
}

fn lemma_failure(
    s: &Staircase,
    d: usize,
    left: &[usize],
    right: &[usize],
    output: &mut Option<Vec<usize>>,
) -> Option<String> {
    let mut sorted_left = left.to_vec();
    let mut sorted_right = right.to_vec();
    sorted_left.sort_unstable();
    sorted_right.sort_unstable();
    if sorted_left != sorted_right {
        return Some("leg multisets differ".into());
    }
    let forward = match master_bijection(left) {
        Ok(seq) => seq,
        Err(e) => return Some(format!("master bijection rejected left legs: {e}")),
    };
    *output = Some(forward.clone());
    if forward != right {
        return Some("master bijection output differs from right legs".into());
    }
    match inverse_master_bijection(&forward) {
        Ok(back) if back == left => {}
        Ok(_) => return Some("inverse does not recover left legs".into()),
        Err(e) => return Some(format!("inverse rejected output: {e}")),
    }
    let left_bounds = run_bounds_left(s, d);
    let right_bounds = run_bounds_right(s, d);
    match mb_split(left) {
        Ok(rd) if rd.runs == left_bounds.runs => {}
        _ => return Some("left run bounds disagree with the left legs".into()),
    }
    match mb_split(right) {
        Ok(rd) if rd.runs == right_bounds.runs => {}
        _ => return Some("right run bounds disagree with the right legs".into()),
    }
    duality_failure(&left_bounds, &right_bounds)
}

/// With the right system indexed `t = q, …, 1` in reading order:
/// `M̃_t = M_t`, `m̃_t = m_{t+1}`, `j̃_t = i_t`, `ĩ_t = j_t`.
fn duality_failure(left: &RunDecomposition, right: &RunDecomposition) -> Option<String> {
    let q = left.runs.len();
    if right.runs.len() != q {
        return Some(format!(
            "run counts differ ({} left, {} right)",
            q,
            right.runs.len()
        ));
    }
    let (ls, rs) = (left.spans.as_deref()?, right.spans.as_deref()?);
    for (t, span) in ls.iter().enumerate() {
        let tilde = q - 1 - t;
        if right.runs[tilde].hi != left.runs[t].hi {
            return Some(format!("M̃_{} ≠ M_{}", t + 1, t + 1));
        }
        if t + 1 < q && right.runs[tilde].lo != left.runs[t + 1].lo {
            return Some(format!("m̃_{} ≠ m_{}", t + 1, t + 2));
        }
        if rs[tilde].high != span.high {
            return Some(format!("j̃_{} ≠ i_{}", t + 1, t + 1));
        }
        if rs[tilde].low != span.low {
            return Some(format!("ĩ_{} ≠ j_{}", t + 1, t + 1));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_example() -> Staircase {
        Staircase::new(vec![2, 1, 2, 2, 1, 2], vec![1, 2, 1, 1, 2]).unwrap()
    }

    fn runs(pairs: &[(usize, usize)]) -> Vec<Run> {
        pairs.iter().map(|&(lo, hi)| Run::new(lo, hi)).collect()
    }

    /// Left legs straight from the counting definition.
    fn left_legs_by_count(x: &[usize], d: usize) -> Vec<usize> {
        (0..x.len())
            .map(|r| (0..r).filter(|&s| x[s] + d >= x[r]).count())
            .collect()
    }

    fn right_legs_by_count(x: &[usize], d: usize) -> Vec<usize> {
        (0..x.len())
            .rev()
            .map(|r| (r + 1..x.len()).filter(|&s| x[s] <= x[r] + d).count())
            .collect()
    }

    #[test]
    fn staircase_of_partition() {
        let mu = Partition::new(vec![7, 7, 5, 4, 4, 3, 3, 1]).unwrap();
        assert_eq!(Staircase::of_partition(&mu, 10).unwrap(), running_example());
        let flat = Staircase::of_partition(&Partition::empty(), 4).unwrap();
        assert_eq!(flat.vertical(), &[4]);
        assert!(flat.horizontal().is_empty());
        let one = Staircase::of_partition(&Partition::new(vec![1]).unwrap(), 2).unwrap();
        assert_eq!((one.vertical(), one.horizontal()), (&[1, 1][..], &[1][..]));
        assert!(Staircase::of_partition(&mu, 7).is_err());
    }

    #[test]
    fn normalization() {
        let s = Staircase::new(vec![1, 0, 2], vec![1, 1]).unwrap();
        assert_eq!((s.vertical(), s.horizontal()), (&[1, 2][..], &[2][..]));
        let s = Staircase::new(vec![1, 2], vec![0]).unwrap();
        assert_eq!((s.vertical(), s.horizontal()), (&[3][..], &[][..]));
        let s = Staircase::new(vec![0, 2, 0], vec![4, 5]).unwrap();
        assert_eq!((s.vertical(), s.horizontal()), (&[2][..], &[][..]));
        let s = Staircase::new(vec![0], vec![]).unwrap();
        assert_eq!(s.pieces(), 0);
        assert!(Staircase::new(vec![1, 1], vec![]).is_err());
        assert!(Staircase::new(vec![usize::MAX, 1], vec![0]).is_err());
    }

    #[test]
    fn leg_sequences_of_running_example() {
        let s = running_example();
        assert_eq!(s.profile(), vec![0, 0, 1, 3, 3, 4, 4, 5, 7, 7]);
        assert_eq!(s.left_legs(2), vec![0, 1, 2, 1, 2, 2, 3, 4, 1, 2]);
        assert_eq!(s.right_legs(2), vec![0, 1, 2, 1, 2, 3, 4, 2, 1, 2]);
    }

    #[test]
    fn straight_walls_and_wide_distances() {
        let wall = Staircase::new(vec![5], vec![]).unwrap();
        for d in 0..4 {
            assert_eq!(wall.left_legs(d), vec![0, 1, 2, 3, 4]);
            assert_eq!(wall.right_legs(d), vec![0, 1, 2, 3, 4]);
        }
        let s = running_example();
        let total: usize = s.horizontal().iter().sum();
        assert_eq!(s.left_legs(total), (0..10).collect::<Vec<_>>());
        assert_eq!(s.right_legs(total + 3), (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn fast_legs_match_counting() {
        for profile in [vec![0, 0, 1, 3, 3, 4, 4, 5, 7, 7], vec![0, 5, 5, 6], vec![]] {
            let s = Staircase::from_profile(&profile);
            for d in 0..9 {
                assert_eq!(s.left_legs(d), left_legs_by_count(&profile, d));
                assert_eq!(s.right_legs(d), right_legs_by_count(&profile, d));
            }
        }
    }

    #[test]
    fn split_examples() {
        let rd = mb_split(&[0, 1, 2, 1, 2, 2, 3, 4, 1, 2]).unwrap();
        assert_eq!(rd.runs, runs(&[(0, 2), (1, 2), (2, 4), (1, 2)]));
        assert_eq!(mb_split(&[0, 1, 2]).unwrap().runs, runs(&[(0, 2)]));
        assert!(mb_split(&[]).unwrap().runs.is_empty());
        assert_eq!(mb_split(&[1, 2]), Err(BijectionError::BadStart(1)));
        assert!(matches!(mb_split(&[0, 2]), Err(BijectionError::Gap { .. })));
    }

    #[test]
    fn cascade_examples() {
        let rd = RunDecomposition::from_runs(runs(&[(0, 2), (1, 2), (2, 4), (1, 2)]));
        assert_eq!(
            mb_cascade(&rd).unwrap().runs,
            runs(&[(1, 2), (2, 2), (1, 4), (0, 2)])
        );
        let single = RunDecomposition::from_runs(runs(&[(0, 5)]));
        assert_eq!(mb_cascade(&single).unwrap(), single);
        let pair = RunDecomposition::from_runs(runs(&[(0, 1), (1, 1)]));
        assert_eq!(mb_cascade(&pair).unwrap().runs, runs(&[(1, 1), (0, 1)]));

        let gap = RunDecomposition::from_runs(runs(&[(0, 1), (3, 4)]));
        assert!(matches!(
            mb_cascade(&gap),
            Err(BijectionError::NonContiguous { .. })
        ));
        let touching = RunDecomposition::from_runs(runs(&[(0, 1), (2, 4)]));
        assert!(matches!(
            mb_cascade(&touching),
            Err(BijectionError::EmptiedStack { .. })
        ));
    }

    #[test]
    fn read_examples() {
        let rd = RunDecomposition::from_runs(runs(&[(1, 2), (2, 2), (1, 4), (0, 2)]));
        assert_eq!(mb_read(&rd), vec![0, 1, 2, 1, 2, 3, 4, 2, 1, 2]);
        assert_eq!(
            mb_read(&RunDecomposition::from_runs(runs(&[(0, 3)]))),
            vec![0, 1, 2, 3]
        );
        assert!(mb_read(&RunDecomposition::default()).is_empty());
    }

    #[test]
    fn bijection_examples() {
        let left = [0, 1, 2, 1, 2, 2, 3, 4, 1, 2];
        let right = [0, 1, 2, 1, 2, 3, 4, 2, 1, 2];
        assert_eq!(master_bijection(&left).unwrap(), right);
        assert_eq!(inverse_master_bijection(&right).unwrap(), left);
        let ramp: Vec<usize> = (0..6).collect();
        assert_eq!(master_bijection(&ramp).unwrap(), ramp);
        assert_eq!(inverse_master_bijection(&ramp).unwrap(), ramp);
        assert!(master_bijection(&[0, 3]).is_err());
    }

    #[test]
    fn run_bounds_of_running_example() {
        let s = running_example();
        let left = run_bounds_left(&s, 2);
        assert_eq!(left.runs, runs(&[(0, 2), (1, 2), (2, 4), (1, 2)]));
        let spans: Vec<(usize, usize)> = left
            .spans
            .unwrap()
            .iter()
            .map(|sp| (sp.low, sp.high))
            .collect();
        assert_eq!(spans, vec![(1, 2), (2, 3), (3, 5), (5, 6)]);

        let right = run_bounds_right(&s, 2);
        assert_eq!(right.runs, runs(&[(0, 2), (1, 4), (2, 2), (1, 2)]));
        // ĩ_t = j_t and j̃_t = i_t, read in reverse.
        let rspans: Vec<(usize, usize)> = right
            .spans
            .unwrap()
            .iter()
            .rev()
            .map(|sp| (sp.low, sp.high))
            .collect();
        assert_eq!(rspans, spans);
    }

    #[test]
    fn run_bounds_degenerate() {
        let wall = Staircase::new(vec![4], vec![]).unwrap();
        let left = run_bounds_left(&wall, 0);
        assert_eq!(left.runs, runs(&[(0, 3)]));
        assert_eq!(left.spans.unwrap(), vec![PieceSpan { low: 1, high: 1 }]);
        let s = running_example();
        let wide = run_bounds_left(&s, 7);
        assert_eq!(wide.runs, runs(&[(0, 9)]));
        assert!(run_bounds_left(&Staircase::default(), 3).runs.is_empty());
    }

    #[test]
    fn lemma_on_examples() {
        let report = verify_lemma(&running_example(), 2);
        assert!(report.pass, "{report:?}");
        assert_eq!(report.output.unwrap(), vec![0, 1, 2, 1, 2, 3, 4, 2, 1, 2]);
        let wall = Staircase::new(vec![3], vec![]).unwrap();
        assert!((0..5).all(|d| verify_lemma(&wall, d).pass));
    }

    #[test]
    fn lemma_exhaustive_small() {
        // n ≤ 6, pieces ≤ 3, d ≤ 8
        let mut checked = 0;
        for p in 1..=6usize {
            let mut v = vec![1; p];
            loop {
                if v.iter().sum::<usize>() <= 6 {
                    let mut h = vec![1; p - 1];
                    loop {
                        let s = Staircase::new(v.clone(), h.clone()).unwrap();
                        for d in 0..=8 {
                            let report = verify_lemma(&s, d);
                            assert!(report.pass, "{report:?}");
                            checked += 1;
                        }
                        if !bump(&mut h, 3) {
                            break;
                        }
                    }
                }
                if !bump(&mut v, 3) {
                    break;
                }
            }
        }
        assert!(checked > 1000);
    }

    fn bump(digits: &mut [usize], max: usize) -> bool {
        for x in digits.iter_mut() {
            if *x < max {
                *x += 1;
                return true;
            }
            *x = 1;
        }
        false
    }
}
