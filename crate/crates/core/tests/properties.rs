use dual_jacobsthal::{
    alpha_q, binet_j3, binet_jl3, binet_jln_quat, binet_jn_quat, jn_quat, naive_sum_jn, quat_sum_jn, sum_j3,
    third_jacobsthal, third_jacobsthal_lucas, u3, un_quat, v3, vn_quat, IdentityId, NilQuat, Sweep,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        (-50i64..50).prop_map(BigInt::from),
        any::<i64>().prop_map(BigInt::from),
        (any::<i128>(), 0u32..200).prop_map(|(v, shift)| BigInt::from(v) << shift),
    ]
}

fn quat() -> impl Strategy<Value = NilQuat> {
    (big(), big(), big(), big()).prop_map(|(s, x, y, z)| NilQuat { s, x, y, z })
}

fn vector() -> impl Strategy<Value = NilQuat> {
    (big(), big(), big()).prop_map(|(x, y, z)| NilQuat {
        s: BigInt::from(0),
        x,
        y,
        z,
    })
}

proptest! {
    #[test]
    fn multiplication_commutes(p in quat(), q in quat()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_associates(p in quat(), q in quat(), r in quat()) {
        prop_assert_eq!((&p * &q) * &r, &p * (&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in quat(), q in quat(), r in quat()) {
        prop_assert_eq!(&p * (&q + &r), &p * &q + &p * &r);
    }

    #[test]
    fn vectors_are_nilpotent(v in vector(), w in vector()) {
        prop_assert!(v.square().is_zero());
        prop_assert!((&v * &w).is_zero());
    }

    #[test]
    fn conjugate_product_is_norm(q in quat()) {
        let expect = NilQuat::scalar(q.norm_sq());
        prop_assert_eq!(&q * q.conj(), expect.clone());
        prop_assert_eq!(q.conj() * &q, expect);
        prop_assert_eq!(q.conj().conj(), q);
    }

    #[test]
    fn scaling_then_dividing_is_identity(q in quat(), d in big().prop_filter("nonzero", |d| d != &BigInt::from(0))) {
        prop_assert_eq!(q.scale(&d).div_exact(&d).unwrap(), q);
    }

    #[test]
    fn json_round_trip(q in quat()) {
        let text = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<NilQuat>(&text).unwrap(), q);
    }

    #[test]
    fn binet_matches_recurrence(n in 0usize..3000) {
        prop_assert_eq!(binet_j3(n).unwrap(), third_jacobsthal(n));
        prop_assert_eq!(binet_jl3(n).unwrap(), third_jacobsthal_lucas(n));
    }

    #[test]
    fn periodic_sequences(n in 0usize..100_000) {
        prop_assert_eq!(v3(n + 3), v3(n));
        prop_assert_eq!(v3(n) + v3(n + 1) + v3(n + 2), 0);
        prop_assert_eq!(7 * u3(n + 1), 2 * v3(n) - v3(n + 1));
        prop_assert_eq!(vn_quat(n + 3), vn_quat(n));
        prop_assert_eq!(un_quat(n + 3), un_quat(n));
    }

    #[test]
    fn quaternion_binet_rearranged(m in 0usize..1500) {
        prop_assert_eq!(binet_jn_quat(m).unwrap(), jn_quat(m));
        prop_assert_eq!(binet_jln_quat(m).unwrap(), dual_jacobsthal::jln_quat(m));
        let lhs = jn_quat(m).scale(&BigInt::from(7)) + vn_quat(m);
        prop_assert_eq!(lhs, alpha_q().scale(&(BigInt::from(1) << (m + 1))));
    }

    #[test]
    fn sums_agree(m in 0usize..400) {
        prop_assert_eq!(quat_sum_jn(m).unwrap(), naive_sum_jn(m));
        let naive: BigInt = (0..=m).map(third_jacobsthal).sum();
        prop_assert_eq!(sum_j3(m).unwrap(), naive);
    }
}

#[test]
fn reports_identical_across_worker_counts() {
    let serial = Sweep::new(IdentityId::ALL, 30)
        .pair_budget(Some(200))
        .threads(Some(1))
        .run()
        .unwrap();
    let parallel = Sweep::new(IdentityId::ALL, 30)
        .pair_budget(Some(200))
        .threads(Some(8))
        .run()
        .unwrap();
    assert_eq!(
        serial.to_json_without_meta().unwrap(),
        parallel.to_json_without_meta().unwrap()
    );
    assert_eq!(serial.to_csv().unwrap(), parallel.to_csv().unwrap());
    assert!(serial.all_passed());
}

#[test]
fn concurrent_cache_extension() {
    let handles: Vec<_> = (0..8)
        .map(|t| std::thread::spawn(move || (0..400).rev().step_by(t + 1).map(third_jacobsthal).count()))
        .collect();
    for h in handles {
        h.join().unwrap();
    }
    for n in 3..400 {
        assert_eq!(
            third_jacobsthal(n),
            third_jacobsthal(n - 1) + third_jacobsthal(n - 2) + 2 * third_jacobsthal(n - 3)
        );
    }
}
