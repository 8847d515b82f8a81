//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hookpair_core::identities::{self, Instance, Theorem};
use hookpair_core::partition::Partition;
use hookpair_core::region::{self, Cell, HookPair};
use hookpair_core::sample::{self, DEFAULT_SEED};
use hookpair_core::staircase::{
    inverse_master_bijection, master_bijection, mb_cascade, mb_read, mb_split, verify_lemma, Run,
    Staircase,
};
use hookpair_core::sweep::{self, Bounds};
use hookpair_core::LegMultiset;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn runs(pairs: &[(usize, usize)]) -> Vec<Run> {
    pairs.iter().map(|&(lo, hi)| Run::new(lo, hi)).collect()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn arm_leg() -> Outcome {
    let shape = region::ferrers(&p(&[5, 3, 3, 1]));
    let pair = shape
        .hook_pair(Cell::new(0, 1))
        .map_err(|e| e.to_string())?;
    expect("hook pair of (0,1)", pair, HookPair::new(3, 2))?;
    Ok("(arm, leg) = (3, 2)".into())
}

fn pipeline() -> Outcome {
    let s: Staircase = "v:2,1,2,2,1,2;h:1,2,1,1,2"
        .parse()
        .map_err(|e: hookpair_core::LiteralError| e.to_string())?;
    let left = s.left_legs(2);
    expect(
        "left legs",
        left.clone(),
        vec![0, 1, 2, 1, 2, 2, 3, 4, 1, 2],
    )?;
    let split = mb_split(&left).map_err(|e| e.to_string())?;
    expect(
        "MB1 stacks",
        split.runs.clone(),
        runs(&[(0, 2), (1, 2), (2, 4), (1, 2)]),
    )?;
    let cascaded = mb_cascade(&split).map_err(|e| e.to_string())?;
    expect(
        "MB2 stacks",
        cascaded.runs.clone(),
        runs(&[(1, 2), (2, 2), (1, 4), (0, 2)]),
    )?;
    let out = mb_read(&cascaded);
    expect(
        "MB3 output",
        out.clone(),
        vec![0, 1, 2, 1, 2, 3, 4, 2, 1, 2],
    )?;
    expect("right legs", s.right_legs(2), out)?;
    Ok("stacks and output match".into())
}

/// Every staircase with pieces of 1..=3 units, at most 4 vertical pieces and
/// total height at most 7, plus the empty one.
fn small_staircases() -> Vec<Staircase> {
    fn grow(vertical: &mut Vec<usize>, horizontal: &mut Vec<usize>, out: &mut Vec<Staircase>) {
        out.push(Staircase::new(vertical.clone(), horizontal.clone()).expect("valid pieces"));
        if vertical.len() == 4 {
            return;
        }
        let height: usize = vertical.iter().sum();
        for h in 1..=3 {
            for v in 1..=3 {
                if height + v > 7 {
                    continue;
                }
                horizontal.push(h);
                vertical.push(v);
                grow(vertical, horizontal, out);
                vertical.pop();
                horizontal.pop();
            }
        }
    }
    let mut out = vec![Staircase::default()];
    for v in 1..=3 {
        grow(&mut vec![v], &mut Vec::new(), &mut out);
    }
    out
}

fn lemma_exhaustive() -> Outcome {
    let all = small_staircases();
    let mut checked = 0;
    for s in &all {
        for d in 0..=10 {
            let report = verify_lemma(s, d);
            if !report.pass {
                return Err(format!(
                    "{s} at d={d}: {}",
                    report.failure.unwrap_or_default()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{} staircases, {checked} cases", all.len()))
}

fn family(theorem: Theorem, bounds: Bounds) -> Outcome {
    let report = sweep::sweep(theorem, bounds, jobs()).map_err(|e| e.to_string())?;
    if let Some(first) = report.failures.first() {
        return Err(format!(
            "{} failures; first at {} ({})",
            report.failures.len(),
            first.instance,
            first.check
        ));
    }
    Ok(format!("{} instances", report.instances_checked))
}

fn large_shifted() -> Outcome {
    let lambda = p(&[21, 20, 19, 12, 11, 10, 8, 7, 6, 5, 4, 3]);
    let mu = Partition::doubled_shifted(&lambda).map_err(|e| e.to_string())?;
    let split = region::split_sq(21, &mu).map_err(|e| e.to_string())?;
    expect("|p(mu)|", region::split_p(&mu).len(), 126)?;
    expect("|q(R(21))|", region::split_q_rect(21).len(), 231)?;
    expect("|A2|", split.a2.len(), 252)?;
    expect("|qA|", split.q_a.len(), 105)?;
    let verdict = identities::verify_theorem3(21, &lambda).map_err(|e| e.to_string())?;
    if !verdict.pass {
        return Err(format!("verifier failed: {}", verdict.failures[0].check));
    }
    Ok("126 / 231 / 252 / 105, identity holds".into())
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let cases: Vec<(Staircase, usize)> = (0..10_000)
        .map(|_| {
            let s = sample::staircase(&mut rng, 40);
            (s, rand::Rng::gen_range(&mut rng, 0..=60))
        })
        .collect();
    let broken = cases.par_iter().find_first(|(s, d)| {
        let left = s.left_legs(*d);
        let Ok(out) = master_bijection(&left) else {
            return true;
        };
        let same: bool = left.iter().copied().collect::<LegMultiset>()
            == out.iter().copied().collect::<LegMultiset>();
        !same || inverse_master_bijection(&out).ok().as_deref() != Some(&left[..])
    });
    if let Some((s, d)) = broken {
        return Err(format!("staircase {s} at d={d}"));
    }

    let instances: Vec<Instance> = (0..10_000)
        .map(|_| {
            let (n, k, mu) = sample::box_instance(&mut rng, 12, 12);
            Instance::Box { k, mu, n }
        })
        .collect();
    for theorem in [Theorem::One, Theorem::Two] {
        let report = sweep::run(theorem, serde_json::Value::Null, &instances, jobs())
            .map_err(|e| e.to_string())?;
        if let Some(first) = report.failures.first() {
            return Err(format!(
                "theorem {theorem} at {}: {}",
                first.instance, first.check
            ));
        }
    }
    Ok(format!(
        "10000 staircases, 10000 boxes, seed {DEFAULT_SEED}"
    ))
}

fn determinism() -> Outcome {
    let bounds = Bounds::Box { max_k: 5, max_n: 5 };
    let one = sweep::sweep(Theorem::One, bounds, 1).map_err(|e| e.to_string())?;
    let eight = sweep::sweep(Theorem::One, bounds, 8).map_err(|e| e.to_string())?;
    let (a, b) = (one.to_document(), eight.to_document());
    if a != b {
        return Err("documents differ between 1 and 8 workers".into());
    }
    Ok(format!("{} bytes identical", a.len()))
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 arm/leg pin", Duration::from_secs(1), arm_leg),
        ("2 bijection pipeline pin", Duration::from_secs(1), pipeline),
        (
            "3 staircase lemma exhaustive",
            Duration::from_secs(10),
            lemma_exhaustive,
        ),
        ("4 theorem 1 exhaustive", Duration::from_secs(60), || {
            family(Theorem::One, Bounds::Box { max_k: 5, max_n: 5 })
        }),
        ("5 theorem 2 exhaustive", Duration::from_secs(60), || {
            family(Theorem::Two, Bounds::Box { max_k: 5, max_n: 5 })
        }),
        ("6 theorem 3 exhaustive", Duration::from_secs(60), || {
            family(
                Theorem::Three,
                Bounds::Shifted {
                    a_span: 3,
                    max_lambda: 5,
                },
            )
        }),
        ("7 large shifted pin", Duration::from_secs(5), large_shifted),
        ("8 seeded properties", Duration::from_secs(120), properties),
        ("9 sweep determinism", Duration::from_secs(60), determinism),
    ];
    let mut all_pass = true;
    for (name, limit, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}, but took longer than {limit:?}")),
            Err(why) => Err(why),
        };
        match verdict {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                all_pass = false;
                println!("FAIL criterion {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
