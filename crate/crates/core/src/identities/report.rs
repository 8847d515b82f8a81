use std::fmt;

use serde::Serialize;

use crate::multiset::{HookPairMultiset, LegMultiset, Multiset, MultisetRow};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `HP(SR_{n,k}(μ)) = HP(SR_{n,k}(μ̃))`.
    One,
    /// `HP(SQ(n,k,μ)) = HP(R_{n,k}) ⊎ HP(μ)`.
    Two,
    /// The diagonal-split identity for `μ = (λ | λ−1)`.
    Three,
}

impl Theorem {
    pub fn number(self) -> u8 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
            Theorem::Three => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Theorem::One),
            2 => Some(Theorem::Two),
            3 => Some(Theorem::Three),
            _ => None,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

/// Parameters of one verifier call.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Instance {
    /// `μ` inside the `n × k` box (Theorems 1 and 2).
    Box { k: usize, mu: Partition, n: usize },
    /// Strict `λ` with side `a ≥ λ₁` (Theorem 3).
    Shifted { a: usize, lambda: Partition },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Box { k, mu, n } => write!(f, "n={n} k={k} mu=({mu})"),
            Instance::Shifted { a, lambda } => write!(f, "a={a} lambda=({lambda})"),
        }
    }
}

/// One side of a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    Legs(LegMultiset),
    HookPairs(HookPairMultiset),
    Sequence(Vec<usize>),
    Count(usize),
    Message(String),
}

impl From<LegMultiset> for Evidence {
    fn from(m: LegMultiset) -> Self {
        Evidence::Legs(m)
    }
}

impl From<HookPairMultiset> for Evidence {
    fn from(m: HookPairMultiset) -> Self {
        Evidence::HookPairs(m)
    }
}

/// A violated equation. `lhs_only`/`rhs_only` hold the symmetric difference
/// when both sides are multisets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub d: Option<usize>,
    pub instance: Instance,
    pub lhs: Evidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_only: Option<Evidence>,
    pub rhs: Evidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_only: Option<Evidence>,
}

/// Accumulates failures for one instance.
pub(crate) struct Checker<'a> {
    instance: &'a Instance,
    pub(crate) failures: Vec<Failure>,
}

impl<'a> Checker<'a> {
    pub(crate) fn new(instance: &'a Instance) -> Self {
        Checker {
            instance,
            failures: Vec::new(),
        }
    }

    pub(crate) fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn fail(&mut self, check: &str, d: Option<usize>, lhs: Evidence, rhs: Evidence) {
        self.failures.push(Failure {
            check: check.to_string(),
            d,
            instance: self.instance.clone(),
            lhs,
            lhs_only: None,
            rhs,
            rhs_only: None,
        });
    }

    pub(crate) fn multisets<T>(
        &mut self,
        check: &str,
        d: Option<usize>,
        lhs: &Multiset<T>,
        rhs: &Multiset<T>,
    ) -> bool
    where
        T: Ord + Clone + MultisetRow,
        Multiset<T>: Into<Evidence>,
    {
        if lhs == rhs {
            return true;
        }
        self.failures.push(Failure {
            check: check.to_string(),
            d,
            instance: self.instance.clone(),
            lhs: lhs.clone().into(),
            lhs_only: Some(lhs.excess_over(rhs).into()),
            rhs: rhs.clone().into(),
            rhs_only: Some(rhs.excess_over(lhs).into()),
        });
        false
    }

    pub(crate) fn sequences(
        &mut self,
        check: &str,
        d: Option<usize>,
        lhs: &[usize],
        rhs: &[usize],
    ) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(
            check,
            d,
            Evidence::Sequence(lhs.to_vec()),
            Evidence::Sequence(rhs.to_vec()),
        );
        false
    }

    pub(crate) fn counts(&mut self, check: &str, lhs: usize, rhs: usize) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(check, None, Evidence::Count(lhs), Evidence::Count(rhs));
        false
    }

    /// `minuend ∖ subtrahend`, recording a failure when containment breaks.
    pub(crate) fn difference(
        &mut self,
        check: &str,
        d: Option<usize>,
        minuend: &LegMultiset,
        subtrahend: &LegMultiset,
    ) -> Option<LegMultiset> {
        match minuend.difference(subtrahend) {
            Ok(out) => Some(out),
            Err(_) => {
                self.fail(
                    &format!("containment in {check}"),
                    d,
                    minuend.clone().into(),
                    subtrahend.clone().into(),
                );
                None
            }
        }
    }
}

/// Result of verifying a single instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: Theorem,
    pub instance: Instance,
    pub pass: bool,
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub(crate) fn new(theorem: Theorem, instance: Instance, failures: Vec<Failure>) -> Self {
        Verdict {
            theorem,
            instance,
            pass: failures.is_empty(),
            failures,
        }
    }
}

/// Result of a per-distance leg check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub pass: bool,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub(crate) fn from_failures(failures: Vec<Failure>) -> Self {
        CheckReport {
            pass: failures.is_empty(),
            failures,
        }
    }
}

/// The report document: `{elapsed_ms?, failures, instances_checked,
/// params, pass, theorem}`. Keys are emitted sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub failures: Vec<Failure>,
    pub instances_checked: usize,
    pub params: serde_json::Value,
    pub pass: bool,
    pub theorem: Theorem,
}

impl Report {
    pub fn from_verdict(verdict: Verdict, elapsed_ms: Option<u64>) -> Self {
        Report {
            elapsed_ms,
            params: serde_json::to_value(&verdict.instance).expect("instance serializes"),
            failures: verdict.failures,
            instances_checked: 1,
            pass: verdict.pass,
            theorem: verdict.theorem,
        }
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_document(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}
