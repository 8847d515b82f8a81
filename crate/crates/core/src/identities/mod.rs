//! Verifiers for the three hook-pair identities and the per-distance leg
//! equations used to prove the second and third.
//!
//! Every verifier checks the identity directly (compare the two hook-pair
//! multisets) and along its proof route, distance by distance. A route stops
//! at the first distance that fails.

mod report;

pub use report::{CheckReport, Evidence, Failure, Instance, Report, Theorem, Verdict};

use thiserror::Error;

use crate::multiset::{HookPairMultiset, LegMultiset};
use crate::partition::{Partition, PartitionError};
use crate::region::{self, HookPair, Region, RegionError, StDecomposition};
use crate::staircase::{master_bijection, Staircase, StaircaseError};
use report::Checker;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
    #[error("{0}")]
    Precondition(String),
}

/// `[[N]] = {0, …, N−1}`.
pub fn interval(n: usize) -> LegMultiset {
    LegMultiset::interval(n)
}

/// `Lf(μ; d)` listed bottom to top: for `i = ℓ, …, 1`,
/// `#{i′ > i : μ_{i′} ≥ μ_i − d}`.
pub fn fake_extended_leg_sequence(mu: &Partition, d: usize) -> Vec<usize> {
    let parts = mu.parts();
    (0..parts.len())
        .rev()
        .map(|i| {
            parts[i + 1..]
                .iter()
                .filter(|&&p| p + d >= parts[i])
                .count()
        })
        .collect()
}

pub fn fake_extended_legs(mu: &Partition, d: usize) -> LegMultiset {
    fake_extended_leg_sequence(mu, d).into_iter().collect()
}

/// `Lf(T₂; d)` listed bottom to top. Each of the bottom `ℓ(μ)` rows of `SQ`
/// gets a (possibly fake) cell at arm `d`; its leg counts the rows below
/// that reach its column.
pub fn fake_extended_leg_sequence_t2(
    rows: usize,
    cols: usize,
    mu: &Partition,
    d: usize,
) -> Result<Vec<usize>, IdentityError> {
    let whole = region::sq(rows, cols, mu)?;
    let hi: Vec<i64> = (0..rows as i64)
        .map(|r| whole.row_span(r).map_or(-1, |(_, hi)| hi))
        .collect();
    Ok((rows - mu.len()..rows)
        .rev()
        .map(|r| {
            let col = hi[r] - d as i64;
            hi[r + 1..].iter().filter(|&&h| h >= col).count()
        })
        .collect())
}

pub fn fake_extended_legs_t2(
    rows: usize,
    cols: usize,
    mu: &Partition,
    d: usize,
) -> Result<LegMultiset, IdentityError> {
    Ok(fake_extended_leg_sequence_t2(rows, cols, mu, d)?
        .into_iter()
        .collect())
}

fn check_box(rows: usize, cols: usize, mu: &Partition) -> Result<(), IdentityError> {
    if mu.fits_in_box(rows, cols) {
        Ok(())
    } else {
        Err(RegionError::BoxViolation {
            mu: mu.clone(),
            rows,
            cols,
        }
        .into())
    }
}

fn check_distance(mu: &Partition, d: usize) -> Result<(), IdentityError> {
    if d < mu.largest() {
        Ok(())
    } else {
        Err(IdentityError::Precondition(format!(
            "distance {d} is outside 0..{} for mu=({mu})",
            mu.largest()
        )))
    }
}

fn box_instance(rows: usize, cols: usize, mu: &Partition) -> Instance {
    Instance::Box {
        k: cols,
        mu: mu.clone(),
        n: rows,
    }
}

/// Per-distance leg multisets on the `μ`/`T₁` side.
struct Eq7Sides {
    mu: LegMultiset,
    t1: LegMultiset,
}

fn eq7_into(
    ch: &mut Checker<'_>,
    st: &StDecomposition,
    rows: usize,
    mu: &Partition,
    d: usize,
) -> Result<Option<Eq7Sides>, IdentityError> {
    let at = Some(d);
    let shape = region::ferrers(mu);
    let l_mu = shape.broken_column_legs(&shape, d)?;
    let l_t1 = st.rect.broken_column_legs(&st.t1, d)?;
    let lf = fake_extended_legs(mu, d);
    let fake = interval(mu.len() + 1 - mu.first_at_most(d));
    let k1 = interval(mu.last_at_least(mu.largest() - d));
    let n = interval(rows);

    let mut ok = ch.multisets(
        "Lf(mu) = L(mu) + [[l(mu)+1-k0]]",
        at,
        &lf,
        &l_mu.union(&fake),
    );
    match ch.difference("[[n]] \\ [[K1]]", at, &n, &k1) {
        Some(expected) => ok &= ch.multisets("L(T1) = [[n]] \\ [[K1]]", at, &l_t1, &expected),
        None => ok = false,
    }
    if let Some(rhs) = ch.difference(
        "(Lf(mu) + [[n]]) \\ ([[l(mu)+1-k0]] + [[K1]])",
        at,
        &lf.union(&n),
        &fake.union(&k1),
    ) {
        ok &= ch.multisets(
            "L(mu) + L(T1) = (Lf(mu) + [[n]]) \\ ([[l(mu)+1-k0]] + [[K1]])",
            at,
            &l_mu.union(&l_t1),
            &rhs,
        );
    } else {
        ok = false;
    }
    Ok(ok.then_some(Eq7Sides { mu: l_mu, t1: l_t1 }))
}

fn eq8_into(
    ch: &mut Checker<'_>,
    st: &StDecomposition,
    rows: usize,
    cols: usize,
    mu: &Partition,
    d: usize,
) -> Result<Option<LegMultiset>, IdentityError> {
    let at = Some(d);
    let l_t2 = st.sq.broken_column_legs(&st.t2, d)?;
    let lf_mu_seq = fake_extended_leg_sequence(mu, d);
    let lf_t2_seq = fake_extended_leg_sequence_t2(rows, cols, mu, d)?;
    let lf_mu: LegMultiset = lf_mu_seq.iter().copied().collect();
    let lf_t2: LegMultiset = lf_t2_seq.iter().copied().collect();
    let k0 = mu.first_at_most(d);
    let fake = interval(mu.len() + 1 - k0);
    let k2 = interval(mu.last_at_least(mu.largest() - d));
    let n = interval(rows);

    let mut ok = ch.multisets("Lf(mu) = Lf(T2)", at, &lf_mu, &lf_t2);
    match master_bijection(&lf_mu_seq) {
        Ok(out) => {
            ok &= ch.sequences(
                "MB(Lf(mu)) = Lf(T2) read bottom to top",
                at,
                &out,
                &lf_t2_seq,
            )
        }
        Err(e) => {
            ch.fail(
                "MB(Lf(mu)) = Lf(T2) read bottom to top",
                at,
                Evidence::Message(e.to_string()),
                Evidence::Sequence(lf_t2_seq.clone()),
            );
            ok = false;
        }
    }
    let first = ch.difference("Lf(T2) \\ [[K2]]", at, &lf_t2, &k2);
    let second = ch.difference("[[n]] \\ [[l(mu)+1-k0]]", at, &n, &fake);
    match (first, second) {
        (Some(a), Some(b)) => {
            ok &= ch.multisets(
                "L(T2) = (Lf(T2) \\ [[K2]]) + ([[n]] \\ [[l(mu)+1-k0]])",
                at,
                &l_t2,
                &a.union(&b),
            )
        }
        _ => ok = false,
    }
    if let Some(rhs) = ch.difference(
        "(Lf(T2) + [[n]]) \\ ([[K2]] + [[l(mu)+1-k0]])",
        at,
        &lf_t2.union(&n),
        &k2.union(&fake),
    ) {
        ok &= ch.multisets(
            "L(T2) = (Lf(T2) + [[n]]) \\ ([[K2]] + [[l(mu)+1-k0]])",
            at,
            &l_t2,
            &rhs,
        );
    } else {
        ok = false;
    }
    Ok(ok.then_some(l_t2))
}

/// Checks the leg multisets of `μ` and `T₁` at distance `d` against their
/// closed forms. Vacuous for the empty partition.
pub fn eq7_check(
    rows: usize,
    cols: usize,
    mu: &Partition,
    d: usize,
) -> Result<CheckReport, IdentityError> {
    check_box(rows, cols, mu)?;
    if mu.is_empty() {
        return Ok(CheckReport::from_failures(Vec::new()));
    }
    check_distance(mu, d)?;
    let st = region::s_t_decomposition(rows, cols, mu)?;
    let instance = box_instance(rows, cols, mu);
    let mut ch = Checker::new(&instance);
    eq7_into(&mut ch, &st, rows, mu, d)?;
    Ok(CheckReport::from_failures(ch.failures))
}

/// Checks the leg multiset of `T₂` at distance `d` against its closed form,
/// and the fake-extended columns of `μ` and `T₂` against each other. Vacuous
/// for the empty partition.
pub fn eq8_check(
    rows: usize,
    cols: usize,
    mu: &Partition,
    d: usize,
) -> Result<CheckReport, IdentityError> {
    check_box(rows, cols, mu)?;
    if mu.is_empty() {
        return Ok(CheckReport::from_failures(Vec::new()));
    }
    check_distance(mu, d)?;
    let st = region::s_t_decomposition(rows, cols, mu)?;
    let instance = box_instance(rows, cols, mu);
    let mut ch = Checker::new(&instance);
    eq8_into(&mut ch, &st, rows, cols, mu, d)?;
    Ok(CheckReport::from_failures(ch.failures))
}

/// Tags every leg with its arm `d`.
fn with_arm(d: usize, legs: &LegMultiset) -> HookPairMultiset {
    let mut out = HookPairMultiset::new();
    for (&leg, count) in legs.iter() {
        out.insert_many(HookPair::new(d, leg), count);
    }
    out
}

fn reversed(column: Vec<(region::Cell, usize)>) -> Vec<usize> {
    column.into_iter().rev().map(|(_, leg)| leg).collect()
}

/// `HP(SR_{n,k}(μ)) = HP(SR_{n,k}(μ̃))`.
pub fn verify_theorem1(rows: usize, cols: usize, mu: &Partition) -> Result<Verdict, IdentityError> {
    check_box(rows, cols, mu)?;
    let instance = box_instance(rows, cols, mu);
    let mut ch = Checker::new(&instance);
    let left = region::sr(rows, cols, mu)?;
    let right = region::sr_tilde(rows, cols, mu)?;
    let lhs = left.own_hook_pairs();
    let rhs = right.own_hook_pairs();

    ch.counts("|HP(SR(mu))| = nk", lhs.total(), rows * cols);
    ch.counts("|HP(SR(mu~))| = nk", rhs.total(), rows * cols);
    ch.multisets("HP(SR(mu)) = HP(SR(mu~))", None, &lhs, &rhs);

    // Bijective route: per arm, the master bijection carries the broken
    // column of SR(μ) onto that of SR(μ̃).
    let stairs = Staircase::of_partition(mu, rows)?;
    for d in 0..cols {
        let at = Some(d);
        let from = reversed(left.broken_column(&left, d)?);
        let to = reversed(right.broken_column(&right, d)?);
        let walked = stairs.left_legs(d);
        if !ch.sequences(
            "broken column of SR(mu) = left legs of the staircase",
            at,
            &from,
            &walked,
        ) {
            break;
        }
        let clean = match master_bijection(&from) {
            Ok(out) => ch.sequences(
                "MB(broken column of SR(mu)) = broken column of SR(mu~)",
                at,
                &out,
                &to,
            ),
            Err(e) => {
                ch.fail(
                    "MB(broken column of SR(mu)) = broken column of SR(mu~)",
                    at,
                    Evidence::Message(e.to_string()),
                    Evidence::Sequence(to),
                );
                false
            }
        };
        if !clean {
            break;
        }
    }
    let failures = ch.failures;
    Ok(Verdict::new(Theorem::One, instance, failures))
}

/// Row `r` of a region as `(arm, leg)` pairs, left to right.
fn row_pairs(whole: &Region, sub: &Region, row: i64) -> Result<Vec<HookPair>, IdentityError> {
    let Some((lo, hi)) = sub.row_span(row) else {
        return Ok(Vec::new());
    };
    (lo..=hi)
        .map(|col| Ok(whole.hook_pair(region::Cell::new(row, col))?))
        .collect()
}

fn pair_sequence(pairs: &[HookPair]) -> Vec<usize> {
    pairs.iter().flat_map(|p| [p.arm, p.leg]).collect()
}

/// `HP(SQ(n,k,μ)) = HP(R_{n,k}) ⊎ HP(μ)`.
pub fn verify_theorem2(rows: usize, cols: usize, mu: &Partition) -> Result<Verdict, IdentityError> {
    check_box(rows, cols, mu)?;
    let instance = box_instance(rows, cols, mu);
    let mut ch = Checker::new(&instance);
    let st = region::s_t_decomposition(rows, cols, mu)?;
    let shape = region::ferrers(mu);
    let lhs = st.sq.own_hook_pairs();
    let rhs = st.rect.own_hook_pairs().union(&shape.own_hook_pairs());

    ch.counts("|HP(SQ)| = nk + |mu|", lhs.total(), rows * cols + mu.size());
    ch.counts(
        "|HP(R) + HP(mu)| = nk + |mu|",
        rhs.total(),
        rows * cols + mu.size(),
    );
    ch.multisets("HP(SQ) = HP(R) + HP(mu)", None, &lhs, &rhs);

    // S₁ and S₂ agree row by row, cell by cell.
    let mut rows_clean = true;
    for r in 0..rows as i64 {
        let a = row_pairs(&st.rect, &st.s1, r)?;
        let b = row_pairs(&st.sq, &st.s2, r)?;
        if !ch.sequences(
            &format!("row {r} of HP_R(S1) = row {r} of HP_SQ(S2)"),
            None,
            &pair_sequence(&a),
            &pair_sequence(&b),
        ) {
            rows_clean = false;
            break;
        }
    }

    if rows_clean && ch.is_clean() {
        let mut left = st.rect.hook_pairs(&st.s1)?;
        let mut right = st.sq.hook_pairs(&st.s2)?;
        let mut complete = true;
        for d in 0..mu.largest() {
            let sides = eq7_into(&mut ch, &st, rows, mu, d)?;
            let t2 = eq8_into(&mut ch, &st, rows, cols, mu, d)?;
            let (Some(sides), Some(t2)) = (sides, t2) else {
                complete = false;
                break;
            };
            let joined = sides.mu.union(&sides.t1);
            if !ch.multisets("L(mu) + L(T1) = L(T2)", Some(d), &joined, &t2) {
                complete = false;
                break;
            }
            left = left.union(&with_arm(d, &joined));
            right = right.union(&with_arm(d, &t2));
        }
        if complete {
            ch.multisets(
                "HP_R(S1) + per-arm legs of mu and T1 = HP(R) + HP(mu)",
                None,
                &left,
                &rhs,
            );
            ch.multisets(
                "HP_SQ(S2) + per-arm legs of T2 = HP(SQ)",
                None,
                &right,
                &lhs,
            );
        }
    }
    let failures = ch.failures;
    Ok(Verdict::new(Theorem::Two, instance, failures))
}

/// The diagonal-split identity
/// `HP_μ(p(μ)) ⊎ HP_{R(a)}(q(R(a))) = HP_{SQ}(q(A)) ⊎ HP_{SQ}(A₂)` for
/// `μ = (λ | λ−1)` and `a ≥ λ₁`.
pub fn verify_theorem3(side: usize, lambda: &Partition) -> Result<Verdict, IdentityError> {
    if !lambda.is_strict() {
        return Err(PartitionError::NotStrict(lambda.clone()).into());
    }
    if side < lambda.largest() {
        return Err(IdentityError::Precondition(format!(
            "side {side} is below lambda_1 = {}",
            lambda.largest()
        )));
    }
    let mu = Partition::doubled_shifted(lambda)?;
    let instance = Instance::Shifted {
        a: side,
        lambda: lambda.clone(),
    };
    let mut ch = Checker::new(&instance);
    let shape = region::ferrers(&mu);
    let p = region::split_p(&mu);
    let rect = region::rect_a(side);
    let q = region::split_q_rect(side);
    let split = region::split_sq(side, &mu)?;

    let lhs = shape.hook_pairs(&p)?.union(&rect.hook_pairs(&q)?);
    let rhs = split
        .whole
        .hook_pairs(&split.q_a)?
        .union(&split.whole.hook_pairs(&split.a2)?);
    let expected = lambda.size() + side * (side + 1) / 2;
    ch.counts(
        "|HP(p(mu)) + HP(q(R(a)))| = |lambda| + a(a+1)/2",
        lhs.total(),
        expected,
    );
    ch.counts(
        "|HP(q(A)) + HP(A2)| = |lambda| + a(a+1)/2",
        rhs.total(),
        expected,
    );
    ch.multisets(
        "HP(p(mu)) + HP(q(R(a))) = HP(q(A)) + HP(A2)",
        None,
        &lhs,
        &rhs,
    );

    let a_set = interval(side);
    let mut left = HookPairMultiset::new();
    let mut right = HookPairMultiset::new();
    let mut complete = true;
    for d in 0..mu.largest().max(side) {
        let at = Some(d);
        let l_p = shape.broken_column_legs(&p, d)?;
        let l_q = rect.broken_column_legs(&q, d)?;
        let l_qa = split.whole.broken_column_legs(&split.q_a, d)?;
        let l_a2 = split.whole.broken_column_legs(&split.a2, d)?;
        // Padding counts from the row count `a`, not from ℓ(μ).
        let pad = interval(side + 1 - mu.first_at_most(d));
        let d_set = interval(d);
        let lf_p = l_p.union(&pad);
        let lf_qa = l_qa.union(&d_set);

        let mut ok = ch.multisets("Lf(p) = Lf(q(A))", at, &lf_p, &lf_qa);
        let rect_rest = ch.difference("[[a]] \\ [[d]]", at, &a_set, &d_set);
        let top_rest = ch.difference("[[a]] \\ [[a+1-k0]]", at, &a_set, &pad);
        match (rect_rest, top_rest) {
            (Some(rect_rest), Some(top_rest)) => {
                ok &= ch.multisets("L(q(R(a))) = [[a]] \\ [[d]]", at, &l_q, &rect_rest);
                ok &= ch.multisets("L(A2) = [[a]] \\ [[a+1-k0]]", at, &l_a2, &top_rest);
                if let Some(base) = ch.difference("Lf(p) \\ [[a+1-k0]]", at, &lf_p, &pad) {
                    ok &= ch.multisets(
                        "L(p) + L(q(R(a))) = (Lf(p) \\ [[a+1-k0]]) + ([[a]] \\ [[d]])",
                        at,
                        &l_p.union(&l_q),
                        &base.union(&rect_rest),
                    );
                } else {
                    ok = false;
                }
                if let Some(base) = ch.difference("Lf(q(A)) \\ [[d]]", at, &lf_qa, &d_set) {
                    ok &= ch.multisets(
                        "L(q(A)) + L(A2) = (Lf(q(A)) \\ [[d]]) + ([[a]] \\ [[a+1-k0]])",
                        at,
                        &l_qa.union(&l_a2),
                        &base.union(&top_rest),
                    );
                } else {
                    ok = false;
                }
            }
            _ => ok = false,
        }
        let joined_left = l_p.union(&l_q);
        let joined_right = l_qa.union(&l_a2);
        ok &= ch.multisets(
            "L(p) + L(q(R(a))) = L(q(A)) + L(A2)",
            at,
            &joined_left,
            &joined_right,
        );
        if !ok {
            complete = false;
            break;
        }
        left = left.union(&with_arm(d, &joined_left));
        right = right.union(&with_arm(d, &joined_right));
    }
    if complete {
        ch.multisets(
            "per-arm legs of p and q(R(a)) = HP(p(mu)) + HP(q(R(a)))",
            None,
            &left,
            &lhs,
        );
        ch.multisets(
            "per-arm legs of q(A) and A2 = HP(q(A)) + HP(A2)",
            None,
            &right,
            &rhs,
        );
    }
    let failures = ch.failures;
    Ok(Verdict::new(Theorem::Three, instance, failures))
}

/// Dispatches on the instance shape.
pub fn verify(theorem: Theorem, instance: &Instance) -> Result<Verdict, IdentityError> {
    match (theorem, instance) {
        (Theorem::One, Instance::Box { k, mu, n }) => verify_theorem1(*n, *k, mu),
        (Theorem::Two, Instance::Box { k, mu, n }) => verify_theorem2(*n, *k, mu),
        (Theorem::Three, Instance::Shifted { a, lambda }) => verify_theorem3(*a, lambda),
        (theorem, instance) => Err(IdentityError::Precondition(format!(
            "theorem {theorem} does not take an instance of the form {instance}"
        ))),
    }
}

#[cfg(test)]
mod tests;
