use super::*;
use crate::partition::{partitions_in_box, strict_partitions_max};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn legs(values: &[usize]) -> LegMultiset {
    values.iter().copied().collect()
}

fn three_blocks() -> Partition {
    p(&[15, 15, 15, 6, 6, 6, 3, 3, 3, 3, 3, 3])
}

#[test]
fn fake_extended_legs_pad_the_real_column() {
    let mu = three_blocks();
    assert_eq!(mu.first_at_most(4), 7);
    let shape = region::ferrers(&mu);
    let real = shape.broken_column_legs(&shape, 4).unwrap();
    assert_eq!(fake_extended_legs(&mu, 4), real.union(&interval(6)));
    assert!(fake_extended_legs(&Partition::empty(), 3).is_empty());
    assert_eq!(fake_extended_legs(&p(&[3, 2, 2]), 3), interval(3));
    assert_eq!(fake_extended_legs(&p(&[3, 2, 2]), 9), interval(3));
}

#[test]
fn single_row_broken_column() {
    let mu = p(&[2]);
    let shape = region::ferrers(&mu);
    assert_eq!(shape.broken_column_legs(&shape, 0).unwrap(), legs(&[0]));
    assert_eq!(shape.broken_column_legs(&shape, 1).unwrap(), legs(&[0]));
}

#[test]
fn fake_t2_sequence_is_the_master_bijection_image() {
    let mu = three_blocks();
    for d in 0..15 {
        let left = fake_extended_leg_sequence(&mu, d);
        let right = fake_extended_leg_sequence_t2(18, 24, &mu, d).unwrap();
        assert_eq!(master_bijection(&left).unwrap(), right, "d={d}");
    }
}

#[test]
fn leg_checks_on_pinned_parameters() {
    let mu = three_blocks();
    assert!(eq7_check(18, 24, &mu, 4).unwrap().pass);
    assert!(eq8_check(18, 24, &mu, 4).unwrap().pass);
    assert!(eq7_check(2, 2, &p(&[2, 2]), 1).unwrap().pass);
    assert!(eq7_check(2, 2, &p(&[1]), 0).unwrap().pass);
    assert!(eq8_check(2, 2, &p(&[1]), 0).unwrap().pass);
    assert!(eq7_check(3, 3, &Partition::empty(), 2).unwrap().pass);
    assert!(eq8_check(3, 3, &Partition::empty(), 0).unwrap().pass);
}

#[test]
fn leg_checks_reject_bad_input() {
    assert!(matches!(
        eq7_check(2, 2, &p(&[3]), 0),
        Err(IdentityError::Region(RegionError::BoxViolation { .. }))
    ));
    assert!(matches!(
        eq8_check(2, 2, &p(&[1]), 1),
        Err(IdentityError::Precondition(_))
    ));
}

#[test]
fn t1_closed_form() {
    // μ = (3,1) in a 3×4 box at d = 1: K1 = #{μ_k ≥ 2} = 1.
    let mu = p(&[3, 1]);
    let st = region::s_t_decomposition(3, 4, &mu).unwrap();
    assert_eq!(
        st.rect.broken_column_legs(&st.t1, 1).unwrap(),
        legs(&[1, 2])
    );
}

#[test]
fn theorem_one_examples() {
    assert!(verify_theorem1(4, 6, &p(&[5, 2, 1])).unwrap().pass);
    let v = verify_theorem1(2, 2, &p(&[1])).unwrap();
    assert!(v.pass);
    let sr = region::sr(2, 2, &p(&[1])).unwrap();
    let expected: HookPairMultiset = [(1, 1), (1, 0), (0, 0), (0, 0)]
        .into_iter()
        .map(|(a, l)| HookPair::new(a, l))
        .collect();
    assert_eq!(sr.own_hook_pairs(), expected);
    assert!(verify_theorem1(3, 2, &Partition::empty()).unwrap().pass);
    assert!(verify_theorem1(0, 0, &Partition::empty()).unwrap().pass);
    assert!(verify_theorem1(1, 1, &p(&[2])).is_err());
}

#[test]
fn theorem_two_examples() {
    assert!(verify_theorem2(4, 6, &p(&[4, 2, 1])).unwrap().pass);
    let sq = region::sq(1, 2, &p(&[2])).unwrap();
    let expected: HookPairMultiset = [(1, 0), (1, 0), (0, 0), (0, 0)]
        .into_iter()
        .map(|(a, l)| HookPair::new(a, l))
        .collect();
    assert_eq!(sq.own_hook_pairs(), expected);
    assert!(verify_theorem2(1, 2, &p(&[2])).unwrap().pass);
    assert!(verify_theorem2(2, 5, &Partition::empty()).unwrap().pass);
    assert!(verify_theorem2(18, 24, &three_blocks()).unwrap().pass);
}

#[test]
fn theorem_three_examples() {
    let v = verify_theorem3(1, &p(&[1])).unwrap();
    assert!(v.pass, "{:?}", v.failures);
    assert!(verify_theorem3(3, &Partition::empty()).unwrap().pass);
    assert!(verify_theorem3(0, &Partition::empty()).unwrap().pass);
    let big = p(&[21, 20, 19, 12, 11, 10, 8, 7, 6, 5, 4, 3]);
    assert!(verify_theorem3(21, &big).unwrap().pass);
    assert!(matches!(
        verify_theorem3(2, &p(&[3])),
        Err(IdentityError::Precondition(_))
    ));
    assert!(matches!(
        verify_theorem3(3, &p(&[2, 2])),
        Err(IdentityError::Partition(PartitionError::NotStrict(_)))
    ));
}

/// Padding by `ℓ(μ)` instead of `a` breaks once the side exceeds `λ₁`:
/// with `a = 2`, `λ = (1)`, `μ = (2)`, `d = 0`, the column of `p(μ)` is
/// empty and `ℓ(μ)+1−k0 = 0`, while `Lf(q(A)) = {0}`.
#[test]
fn padding_counts_from_the_side() {
    let lambda = p(&[1]);
    let mu = Partition::doubled_shifted(&lambda).unwrap();
    assert_eq!(mu.parts(), &[2]);
    let split = region::split_sq(2, &mu).unwrap();
    let shape = region::ferrers(&mu);
    let l_p = shape.broken_column_legs(&region::split_p(&mu), 0).unwrap();
    let l_qa = split.whole.broken_column_legs(&split.q_a, 0).unwrap();
    let k0 = mu.first_at_most(0);
    let by_length = l_p.union(&interval(mu.len() + 1 - k0));
    let by_side = l_p.union(&interval(2 + 1 - k0));
    assert_ne!(by_length, l_qa.union(&interval(0)));
    assert_eq!(by_side, l_qa.union(&interval(0)));
    assert!(verify_theorem3(2, &lambda).unwrap().pass);
}

#[test]
fn small_families_pass_every_route() {
    for n in 0..=4 {
        for k in 0..=4 {
            for mu in partitions_in_box(n, k) {
                let one = verify_theorem1(n, k, &mu).unwrap();
                assert!(one.pass, "{:?}", one.failures);
                let two = verify_theorem2(n, k, &mu).unwrap();
                assert!(two.pass, "{:?}", two.failures);
            }
        }
    }
    for lambda in strict_partitions_max(4) {
        for a in lambda.largest()..=lambda.largest() + 2 {
            let v = verify_theorem3(a, &lambda).unwrap();
            assert!(v.pass, "{:?}", v.failures);
        }
    }
}

#[test]
fn dispatch_checks_instance_shape() {
    let boxed = Instance::Box {
        k: 2,
        mu: p(&[1]),
        n: 2,
    };
    assert!(verify(Theorem::One, &boxed).unwrap().pass);
    assert!(verify(Theorem::Three, &boxed).is_err());
}

#[test]
fn failures_serialize_with_sorted_rows() {
    let instance = Instance::Box {
        k: 1,
        mu: Partition::empty(),
        n: 1,
    };
    let mut ch = Checker::new(&instance);
    assert!(!ch.multisets("x", Some(0), &legs(&[0, 1]), &legs(&[1, 2])));
    let report = Report {
        elapsed_ms: None,
        failures: ch.failures,
        instances_checked: 1,
        params: serde_json::to_value(&instance).unwrap(),
        pass: false,
        theorem: Theorem::One,
    };
    let doc: serde_json::Value = serde_json::from_str(&report.to_document()).unwrap();
    assert_eq!(doc["failures"][0]["lhs_only"], serde_json::json!([[0, 1]]));
    assert_eq!(doc["failures"][0]["rhs_only"], serde_json::json!([[2, 1]]));
    assert_eq!(doc["params"], serde_json::json!({"k": 1, "mu": [], "n": 1}));
    assert!(doc.get("elapsed_ms").is_none());
}
