use kronecker_hall::hall::*;
use kronecker_hall::kronrep::*;
use kronecker_hall::scalars::ScalarQ;
use proptest::prelude::*;

fn classes(max: DimVec, q: u32) -> Vec<IsoClass> {
    max.below().flat_map(|d| enumerate_iso_classes(d, q)).collect()
}

fn elem(cs: &[IsoClass], picks: &[(usize, i32, i64)], q: u32) -> HallElement {
    let mut e = HallElement::zero(q);
    for &(i, k, c) in picks {
        let x = HallElement::class(cs[i % cs.len()].clone(), q).shift(k);
        e = e.add(&x.scale(&ScalarQ::from_int(c, q)));
    }
    e
}

fn picks() -> impl Strategy<Value = Vec<(usize, i32, i64)>> {
    prop::collection::vec((0usize..1000, -3i32..=3, -4i64..=4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hall_product_is_associative(i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let q = 2;
        let cs = classes(DimVec::new(2, 2), q);
        let [a, b, c] = [i, j, k].map(|n| HallElement::class(cs[n % cs.len()].clone(), q));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn green_pair_is_symmetric(a in picks(), b in picks(), q in prop::sample::select(vec![2u32, 3])) {
        let cs = classes(DimVec::new(2, 1), q);
        let (x, y) = (elem(&cs, &a, q), elem(&cs, &b, q));
        prop_assert_eq!(green_pair(&x, &y), green_pair(&y, &x));
    }

    #[test]
    fn hall_json_round_trips(a in picks(), q in prop::sample::select(vec![2u32, 3, 5])) {
        let cs = classes(DimVec::new(2, 2), q);
        let x = elem(&cs, &a, q);
        let v = serde_json::to_value(&x).unwrap();
        prop_assert_eq!(HallElement::from_json(&v, q).unwrap(), x);
    }

    #[test]
    fn double_json_round_trips(i in 0usize..1000, j in 0usize..1000, k in -2i64..=2) {
        let q = 2;
        let cs = classes(DimVec::new(1, 1), q);
        let p = DoubleElement::plus_class(cs[i % cs.len()].clone(), q);
        let m = DoubleElement::minus_class(cs[j % cs.len()].clone(), q);
        let x = m.mul(&p).unwrap().mul_k_left(KClass::new(k, 2 * k));
        let v = serde_json::to_value(&x).unwrap();
        prop_assert_eq!(DoubleElement::from_json(&v, q).unwrap(), x);
    }

    #[test]
    fn decompose_inverts_canonical_rep(i in 0usize..1000, q in prop::sample::select(vec![2u32, 3])) {
        let cs = classes(DimVec::new(3, 3), q);
        let c = &cs[i % cs.len()];
        prop_assert_eq!(&decompose(&canonical_rep(c, q)), c);
    }
}
