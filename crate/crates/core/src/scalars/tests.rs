use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, r(c, 1))))
}

fn rf(num: &[(i32, i64)], den: &[(i32, i64)]) -> RatFun {
    RatFun::new(lp(num), lp(den)).unwrap()
}

#[test]
fn self_division_is_one() {
    let x = v_minus_vinv();
    assert!(x.div(&x).unwrap().is_one());
}

#[test]
fn two_factors() {
    let x = rf(&[(2, 1), (-2, -1)], &[(1, 1), (-1, -1)]);
    assert_eq!(x, quantum_int(2));
}

#[test]
fn cross_multiplied_quotient() {
    let x = rf(&[(0, 1), (2, -1)], &[(-1, 1), (1, -1)]);
    assert_eq!(x, RatFun::v_pow(1));
}

#[test]
fn division_by_zero_errors() {
    assert_eq!(RatFun::one().div(&RatFun::zero()), Err(crate::Error::DivisionByZero));
    assert!(RatFun::new(lp(&[(0, 1)]), LaurentPoly::zero()).is_err());
}

#[test]
fn quantum_integers() {
    assert!(quantum_int(1).is_one());
    assert!(quantum_int(0).is_zero());
    assert_eq!(quantum_int(2), lp(&[(1, 1), (-1, 1)]).into());
    assert_eq!(quantum_int(-3), quantum_int(3).neg());
    for n in -6..=6 {
        let direct = RatFun::v_pow(n as i32)
            .sub(&RatFun::v_pow(-(n as i32)))
            .div(&v_minus_vinv())
            .unwrap();
        assert_eq!(direct, quantum_int(n));
    }
}

#[test]
fn quantum_factorials() {
    assert!(quantum_factorial(0).is_one());
    assert_eq!(quantum_factorial(2), quantum_int(2));
    let expected = RatFun::from(lp(&[(1, 1), (-1, 1)])).mul(&lp(&[(2, 1), (0, 1), (-2, 1)]).into());
    assert_eq!(quantum_factorial(3), expected);
}

#[test]
fn specialization_examples() {
    assert_eq!(specialize(&RatFun::v_pow(-2), 3).unwrap(), ScalarQ::from_int(3, 3));
    assert_eq!(
        specialize(&quantum_int(2), 2).unwrap(),
        ScalarQ::new(r(0, 1), r(3, 2), 2)
    );
    assert!(specialize(&RatFun::one(), 5).unwrap().is_one());
    // 1 - 2 v^2 vanishes at v^2 = 1/2
    let pole = rf(&[(0, 1)], &[(0, 1), (2, -2)]);
    assert_eq!(specialize(&pole, 2), Err(crate::Error::SpecializationPole { q: 2 }));
}

#[test]
fn rendering() {
    assert_eq!(quantum_int(2).to_string(), "1*v^1 + 1*v^-1");
    assert_eq!(RatFun::zero().to_string(), "0");
    let s = ScalarQ::new(r(1, 2), r(-3, 4), 2);
    let j = serde_json::to_string(&s).unwrap();
    assert_eq!(j, r#"{"a":"1/2","b":"-3/4","q":2}"#);
    assert_eq!(serde_json::from_str::<ScalarQ>(&j).unwrap(), s);
}

#[test]
fn exp_order_one() {
    // exp(c t) = 1 + c t at order 1
    let c = RatFun::v_pow(3);
    let e = series_exp(&RatFunAlgebra, &FormalSeries::new(vec![RatFun::zero(), c.clone()])).unwrap();
    assert!(e.coeff(0).is_one());
    assert_eq!(e.coeff(1), &c);
}

#[test]
fn series_constant_term_errors() {
    let bad = FormalSeries::new(vec![RatFun::one(), RatFun::one()]);
    assert!(series_exp(&RatFunAlgebra, &bad).is_err());
    let bad = FormalSeries::new(vec![RatFun::zero(), RatFun::one()]);
    assert!(series_log(&RatFunAlgebra, &bad).is_err());
}

#[test]
fn exp_of_t_is_exponential() {
    let s = FormalSeries::new(vec![RatFun::zero(), RatFun::one(), RatFun::zero(), RatFun::zero()]);
    let e = series_exp(&RatFunAlgebra, &s).unwrap();
    let fact = [1, 1, 2, 6];
    for n in 0..4 {
        assert_eq!(e.coeff(n), &RatFun::from_rational(r(1, fact[n])));
    }
}

fn small_ratfun() -> impl Strategy<Value = RatFun> {
    (
        prop::collection::vec((-3i32..=3, -4i64..=4), 0..4),
        prop::collection::vec((0i32..=2, -3i64..=3), 1..3),
    )
        .prop_filter_map("nonzero denominator", |(n, d)| {
            let den = lp(&d);
            if den.is_zero() {
                return None;
            }
            Some(RatFun::new(lp(&n), den).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfun_ring_axioms(a in small_ratfun(), b in small_ratfun(), c in small_ratfun()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn specialize_is_multiplicative(a in small_ratfun(), b in small_ratfun(), q in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let (sa, sb) = (specialize(&a, q), specialize(&b, q));
        if let (Ok(sa), Ok(sb)) = (sa, sb) {
            prop_assert_eq!(specialize(&a.mul(&b), q).unwrap(), sa.mul(&sb));
            prop_assert_eq!(specialize(&a.add(&b), q).unwrap(), sa.add(&sb));
        }
    }

    #[test]
    fn quantum_int_specializes_directly(n in -8i64..=8, q in prop::sample::select(vec![2u32, 3, 5, 7])) {
        // (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}) computed in Q[sqrt q]
        let sq = ScalarQ::new(r(0, 1), r(1, 1), q);
        let pow = |k: i64| -> ScalarQ { sq.pow(k as i32).unwrap() };
        let direct = pow(n).sub(&pow(-n)).div(&pow(1).sub(&pow(-1))).unwrap();
        prop_assert_eq!(specialize(&quantum_int(n), q).unwrap(), direct);
    }

    #[test]
    fn exp_log_round_trip(cs in prop::collection::vec(small_ratfun(), 4)) {
        let mut coeffs = vec![RatFun::zero()];
        coeffs.extend(cs);
        let s = FormalSeries::new(coeffs);
        let e = series_exp(&RatFunAlgebra, &s).unwrap();
        prop_assert_eq!(series_log(&RatFunAlgebra, &e).unwrap(), s.clone());
        let mut shifted = s.into_coeffs();
        shifted[0] = RatFun::one();
        let s1 = FormalSeries::new(shifted);
        let l = series_log(&RatFunAlgebra, &s1).unwrap();
        prop_assert_eq!(series_exp(&RatFunAlgebra, &l).unwrap(), s1);
    }

    #[test]
    fn scalarq_field_ops(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in 1i64..9, q in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let x = ScalarQ::new(r(a, d), r(b, 1), q);
        let y = ScalarQ::new(r(c, 1), r(a, d), q);
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }
}
