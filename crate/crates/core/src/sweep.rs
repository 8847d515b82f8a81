//! Bounded-family sweeps over the identity verifiers.
//!
//! Instances are enumerated in a fixed order and verified on a rayon pool;
//! results are collected in enumeration order, so the report does not depend
//! on the worker count.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::identities::{self, Evidence, Failure, Instance, Report, Theorem};
use crate::partition::{partitions_in_box, strict_partitions_max};
use crate::sample;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("theorem {theorem} takes {expected} bounds")]
    WrongBounds {
        theorem: Theorem,
        expected: &'static str,
    },
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Bounds of a sweep family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Bounds {
    /// Every `n ≤ max_n`, `k ≤ max_k` and `μ` in the `n × k` box.
    Box { max_k: usize, max_n: usize },
    /// Every strict `λ` with `λ₁ ≤ max_lambda` and `a ∈ [λ₁, λ₁ + a_span]`.
    Shifted { a_span: usize, max_lambda: usize },
}

fn check_bounds(theorem: Theorem, bounds: Bounds) -> Result<(), SweepError> {
    match (theorem, bounds) {
        (Theorem::One | Theorem::Two, Bounds::Box { .. })
        | (Theorem::Three, Bounds::Shifted { .. }) => Ok(()),
        (Theorem::Three, _) => Err(SweepError::WrongBounds {
            theorem,
            expected: "--max-lambda/--a-span",
        }),
        _ => Err(SweepError::WrongBounds {
            theorem,
            expected: "--max-n/--max-k",
        }),
    }
}

/// The family in enumeration order: `n`, then `k`, then `μ` graded by size;
/// or `λ` graded by size, then `a`.
pub fn instances(theorem: Theorem, bounds: Bounds) -> Result<Vec<Instance>, SweepError> {
    check_bounds(theorem, bounds)?;
    Ok(match bounds {
        Bounds::Box { max_k, max_n } => (0..=max_n)
            .flat_map(|n| {
                (0..=max_k).flat_map(move |k| {
                    partitions_in_box(n, k).map(move |mu| Instance::Box { k, mu, n })
                })
            })
            .collect(),
        Bounds::Shifted { a_span, max_lambda } => strict_partitions_max(max_lambda)
            .flat_map(|lambda| {
                let first = lambda.largest();
                (first..=first + a_span).map(move |a| Instance::Shifted {
                    a,
                    lambda: lambda.clone(),
                })
            })
            .collect(),
    })
}

/// `count` instances drawn from the family with a seeded generator.
pub fn random_instances<R: Rng>(
    theorem: Theorem,
    bounds: Bounds,
    count: usize,
    rng: &mut R,
) -> Result<Vec<Instance>, SweepError> {
    check_bounds(theorem, bounds)?;
    Ok((0..count)
        .map(|_| match bounds {
            Bounds::Box { max_k, max_n } => {
                let (n, k, mu) = sample::box_instance(rng, max_n, max_k);
                Instance::Box { k, mu, n }
            }
            Bounds::Shifted { a_span, max_lambda } => {
                let lambda = sample::strict_partition(rng, max_lambda);
                let a = lambda.largest() + rng.gen_range(0..=a_span);
                Instance::Shifted { a, lambda }
            }
        })
        .collect())
}

fn verify_one(theorem: Theorem, instance: &Instance) -> Vec<Failure> {
    match identities::verify(theorem, instance) {
        Ok(verdict) => verdict.failures,
        Err(e) => vec![Failure {
            check: "verifier accepted the instance".into(),
            d: None,
            instance: instance.clone(),
            lhs: Evidence::Message(e.to_string()),
            lhs_only: None,
            rhs: Evidence::Message("ok".into()),
            rhs_only: None,
        }],
    }
}

/// Verifies `instances` on `jobs` workers. Failures come back in enumeration
/// order, so the first one belongs to the smallest counterexample.
pub fn run(
    theorem: Theorem,
    params: serde_json::Value,
    instances: &[Instance],
    jobs: usize,
) -> Result<Report, SweepError> {
    if jobs == 0 {
        return Err(SweepError::NoWorkers);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let per_instance: Vec<Vec<Failure>> = pool.install(|| {
        instances
            .par_iter()
            .map(|i| verify_one(theorem, i))
            .collect()
    });
    let failures: Vec<Failure> = per_instance.into_iter().flatten().collect();
    Ok(Report {
        elapsed_ms: None,
        pass: failures.is_empty(),
        failures,
        instances_checked: instances.len(),
        params,
        theorem,
    })
}

/// Exhaustive sweep over the bounded family.
pub fn sweep(theorem: Theorem, bounds: Bounds, jobs: usize) -> Result<Report, SweepError> {
    let family = instances(theorem, bounds)?;
    let params = serde_json::to_value(bounds).expect("bounds serialize");
    run(theorem, params, &family, jobs)
}
