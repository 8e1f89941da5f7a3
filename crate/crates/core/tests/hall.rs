use kronecker_hall::fq::ClosedPoint;
use kronecker_hall::hall::*;
use kronecker_hall::kronrep::*;
use kronecker_hall::scalars::{quantum_int, specialize, v_minus_vinv, RatFun, ScalarQ};
use num_bigint::BigInt;
use num_rational::BigRational;

fn cls(s: &str, q: u32) -> IsoClass {
    IsoClass::parse(s, q).unwrap()
}

fn h(s: &str, q: u32) -> HallElement {
    HallElement::class(cls(s, q), q)
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn sc(f: &RatFun, q: u32) -> ScalarQ {
    specialize(f, q).unwrap()
}

#[test]
fn unit_and_simple_products() {
    let q = 2;
    let a = h("P1", q).add(&h("T1(inf)", q));
    assert_eq!(HallElement::one(q).mul(&a).unwrap(), a);
    // [S2][S1] = [S1+S2]
    assert_eq!(h("S2", q).mul(&h("S1", q)).unwrap(), h("S1+S2", q));
    // [S1][S2] = v^2 ([S1+S2] + three tubes)
    let mut expected = h("S1+S2", q);
    for p in ClosedPoint::all_of_degree(1, q) {
        expected = expected.add(&HallElement::class(IsoClass::tube(p, 1), q));
    }
    assert_eq!(h("S1", q).mul(&h("S2", q)).unwrap(), expected.shift(2));
}

#[test]
fn k_commutation() {
    for &q in &[2u32, 3] {
        for alpha in [KClass::new(1, 0), KClass::new(0, 1), KClass::new(-1, 2)] {
            for x in ["S1", "S2", "P1", "I1", "T1(inf)"] {
                let k = HallElement::k(alpha, q);
                let lhs = k.mul(&h(x, q)).unwrap();
                let rhs = h(x, q).mul(&k).unwrap().shift(-sym_form(alpha, cls(x, q).class()) as i32);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn coproduct_examples() {
    let q = 2;
    let s1 = cls("S1", q);
    let d = h("S1", q).coproduct().unwrap();
    let k1 = KClass::new(1, 0);
    assert_eq!(d.len(), 2);
    assert!(d.contains(&((s1.clone(), KClass::zero()), (IsoClass::zero(), KClass::zero()), ScalarQ::one(q))));
    assert!(d.contains(&((IsoClass::zero(), k1), (s1.clone(), KClass::zero()), ScalarQ::one(q))));
    let a = KClass::new(2, -1);
    assert_eq!(
        HallElement::k(a, q).coproduct().unwrap(),
        vec![((IsoClass::zero(), a), (IsoClass::zero(), a), ScalarQ::one(q))]
    );
    // middle coefficient of Δ([2S1]) is v^{-1}/2
    let d = h("2S1", q).coproduct().unwrap();
    let mid = d.iter().find(|(l, rr, _)| l.0 == s1 && rr.0 == s1).unwrap();
    assert_eq!(mid.0 .1, k1);
    assert_eq!(mid.2, ScalarQ::v_pow(-1, q).scale(&r(1, 2)));
    assert_eq!(d.len(), 3);
}

#[test]
fn green_pair_examples() {
    let q = 2;
    assert!(green_pair(&h("S1", q), &h("S2", q)).is_zero());
    assert!(green_pair(&h("S1", q), &h("S1", q)).is_one());
    let p = green_pair(&HallElement::k(KClass::new(1, 0), q), &HallElement::k(KClass::new(0, 1), q));
    assert_eq!(p, ScalarQ::from_rational(r(1, 2), q));
}

#[test]
fn divided_power_examples() {
    for &q in &[2u32, 3] {
        for x in ["S1", "S2", "P1", "I1"] {
            assert_eq!(h(x, q).divided_power(1).unwrap(), h(x, q));
            for n in 1..=3u32 {
                let lhs = HallElement::class(cls(x, q).power(n), q);
                let rhs = h(x, q).divided_power(n).unwrap().shift((n * (n - 1)) as i32);
                assert_eq!(lhs, rhs, "{x} n={n} q={q}");
            }
        }
    }
}

#[test]
fn one_alpha_and_tube_one() {
    assert_eq!(one_alpha(DimVec::new(1, 0), 2), h("S1", 2));
    assert_eq!(one_alpha(DimVec::new(1, 1), 2).len(), 4);
    assert_eq!(one_alpha(DimVec::new(0, 2), 2), h("2S2", 2));
    assert_eq!(tube_one(1, 2).len(), 3);
    assert_eq!(tube_one(1, 3).len(), 4);
    // r = 2 at q = 2: partitions (2), (1,1) at three points, three pairs of
    // distinct points, one degree-two point
    assert_eq!(tube_one(2, 2).len(), 3 * 2 + 3 + 1);
    let non_regular = one_alpha(DimVec::new(2, 2), 2)
        .terms()
        .filter(|(x, _, _)| !x.is_regular())
        .count();
    assert_eq!(tube_one(2, 2).len() + non_regular, one_alpha(DimVec::new(2, 2), 2).len());
}

fn small_classes(max: DimVec, q: u32) -> Vec<IsoClass> {
    let mut out = Vec::new();
    for d in max.below() {
        out.extend(enumerate_iso_classes(d, q));
    }
    out
}

#[test]
fn associativity() {
    let q = 2;
    let cs = small_classes(DimVec::new(2, 2), q);
    let mut count = 0;
    for (i, a) in cs.iter().enumerate() {
        for (j, b) in cs.iter().enumerate() {
            let c = &cs[(i * 7 + j * 3) % cs.len()];
            if !(a.dim() + b.dim() + c.dim()).le(&DimVec::new(4, 4)) {
                continue;
            }
            let (a, b, c) = (HallElement::class(a.clone(), q), HallElement::class(b.clone(), q), HallElement::class(c.clone(), q));
            assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            count += 1;
        }
    }
    assert!(count > 50);
}

#[test]
fn green_compatibility_small() {
    for &q in &[2u32, 3] {
        let cs = small_classes(DimVec::new(2, 2), q);
        for a in &cs {
            for b in &cs {
                let dc = a.dim() + b.dim();
                if !dc.le(&DimVec::new(2, 2)) {
                    continue;
                }
                let (ha, hb) = (HallElement::class(a.clone(), q), HallElement::class(b.clone(), q));
                let ab = ha.mul(&hb).unwrap();
                for c in enumerate_iso_classes(dc, q) {
                    let hc = HallElement::class(c, q);
                    let lhs = green_pair(&ab, &hc);
                    let rhs = green_pair_tensor(&ha, &hb, &hc.coproduct().unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

fn apply_left(terms: &[TensorTerm], q: u32) -> Vec<(HallElement, HallElement, HallElement)> {
    // (Δ ⊗ 1) Δ
    let mut out = Vec::new();
    for ((x, kx), (y, ky), c) in terms {
        let l = HallElement::term(x.clone(), *kx, c.clone());
        for ((a, ka), (b, kb), d) in l.coproduct().unwrap() {
            out.push((
                HallElement::term(a, ka, d),
                HallElement::term(b, kb, ScalarQ::one(q)),
                HallElement::term(y.clone(), *ky, ScalarQ::one(q)),
            ));
        }
    }
    out
}

fn apply_right(terms: &[TensorTerm], q: u32) -> Vec<(HallElement, HallElement, HallElement)> {
    let mut out = Vec::new();
    for ((x, kx), (y, ky), c) in terms {
        let rr = HallElement::term(y.clone(), *ky, c.clone());
        for ((a, ka), (b, kb), d) in rr.coproduct().unwrap() {
            out.push((
                HallElement::term(x.clone(), *kx, d),
                HallElement::term(a, ka, ScalarQ::one(q)),
                HallElement::term(b, kb, ScalarQ::one(q)),
            ));
        }
    }
    out
}

fn canon(v: Vec<(HallElement, HallElement, HallElement)>, q: u32) -> Vec<String> {
    use std::collections::BTreeMap;
    let mut acc: BTreeMap<String, ScalarQ> = BTreeMap::new();
    for (a, b, c) in v {
        let mut coeff = ScalarQ::one(q);
        let mut key = String::new();
        for e in [&a, &b, &c] {
            let (x, k, cc) = e.terms().next().unwrap();
            coeff = coeff.mul(cc);
            key.push_str(&format!("{x}|{k}|"));
        }
        let e = acc.entry(key).or_insert_with(|| ScalarQ::zero(q));
        *e = e.add(&coeff);
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("{k}{c}")).collect()
}

#[test]
fn coassociativity() {
    for &q in &[2u32, 3] {
        for z in small_classes(DimVec::new(2, 2), q) {
            let d = HallElement::class(z, q).coproduct().unwrap();
            assert_eq!(canon(apply_left(&d, q), q), canon(apply_right(&d, q), q));
        }
    }
}

#[test]
fn green_pair_is_symmetric() {
    let q = 3;
    let a = h("S1", q).add(&h("P1", q).shift(3)).add(&HallElement::k(KClass::new(1, 2), q));
    let b = h("P1", q).shift(-1).add(&HallElement::k(KClass::new(1, 2), q)).add(&h("S1", q));
    assert_eq!(green_pair(&a, &b), green_pair(&b, &a));
}

fn e(i: u32, q: u32) -> DoubleElement {
    DoubleElement::plus_class(if i == 1 { IsoClass::s1() } else { IsoClass::s2() }, q)
}

fn f(i: u32, q: u32) -> DoubleElement {
    DoubleElement::minus_class(if i == 1 { IsoClass::s1() } else { IsoClass::s2() }, q)
}

fn kk(i: u32, n: i64, q: u32) -> DoubleElement {
    let a = if i == 1 { KClass::new(n, 0) } else { KClass::new(0, n) };
    DoubleElement::k(a, q)
}

#[test]
fn straighten_examples() {
    let q = 2;
    let s = straighten(&IsoClass::s1(), &IsoClass::s2(), q).unwrap();
    assert_eq!(s.len(), 1);
    let t = s.terms().next().unwrap();
    assert_eq!((t.0, t.2), (&IsoClass::s2(), &IsoClass::s1()));
}

fn div_pow(x: &DoubleElement, n: u32) -> DoubleElement {
    let q = x.q();
    let fact = sc(&kronecker_hall::scalars::quantum_factorial(n), q);
    x.pow(n).unwrap().scale(&fact.inv().unwrap())
}

#[test]
fn drinfeld_jimbo_relations() {
    for &q in &[2u32, 3] {
        let c = |i: u32, j: u32| if i == j { 2 } else { -2 };
        let scale = sc(&RatFun::v_pow(1).div(&v_minus_vinv()).unwrap(), q);
        for i in 1..=2 {
            assert_eq!(kk(i, 1, q).mul(&kk(i, -1, q)).unwrap(), DoubleElement::one(q));
            for j in 1..=2 {
                assert_eq!(
                    kk(i, 1, q).mul(&e(j, q)).unwrap(),
                    e(j, q).mul(&kk(i, 1, q)).unwrap().shift(-c(i, j))
                );
                assert_eq!(
                    kk(i, 1, q).mul(&f(j, q)).unwrap(),
                    f(j, q).mul(&kk(i, 1, q)).unwrap().shift(c(i, j))
                );
                let br = dbracket(&e(i, q), &f(j, q)).unwrap();
                if i == j {
                    let expected = kk(i, 1, q).sub(&kk(i, -1, q)).scale(&scale);
                    assert_eq!(br, expected);
                } else {
                    assert!(br.is_zero());
                }
                if i != j {
                    for gen in [e as fn(u32, u32) -> DoubleElement, f] {
                        let mut total = DoubleElement::zero(q);
                        for k in 0..=3u32 {
                            let t = div_pow(&gen(i, q), k)
                                .mul(&gen(j, q))
                                .unwrap()
                                .mul(&div_pow(&gen(i, q), 3 - k))
                                .unwrap();
                            total = if k % 2 == 0 { total.add(&t) } else { total.sub(&t) };
                        }
                        assert!(total.is_zero(), "Serre ({i},{j}) q={q}");
                    }
                }
            }
        }
        // Z = K1 K2 is central
        let z = kk(1, 1, q).mul(&kk(2, 1, q)).unwrap();
        for i in 1..=2 {
            assert_eq!(z.mul(&e(i, q)).unwrap(), e(i, q).mul(&z).unwrap());
            assert_eq!(z.mul(&f(i, q)).unwrap(), f(i, q).mul(&z).unwrap());
        }
        let _ = quantum_int(2);
    }
}

#[test]
fn wing_embeddings_are_multiplicative() {
    let q = 2;
    let a = h("S1", q).add(&h("P1", q));
    let b = h("S2", q).add(&h("I1", q).shift(1));
    let pa = DoubleElement::plus(&a);
    let pb = DoubleElement::plus(&b);
    assert_eq!(pa.mul(&pb).unwrap(), DoubleElement::plus(&a.mul(&b).unwrap()));
    let ma = DoubleElement::minus(&a);
    let mb = DoubleElement::minus(&b);
    assert_eq!(ma.mul(&mb).unwrap(), DoubleElement::minus(&a.mul(&b).unwrap()));
    assert_eq!(DoubleElement::one(q).mul(&pa).unwrap(), pa);
    assert!(dbracket(&e(1, q), &f(2, q)).unwrap().is_zero());
}

/// Both sides of the double relation for `([Y], [X])` agree once every
/// product is straightened.
#[test]
fn straightening_satisfies_double_relation() {
    let q = 2;
    let cs = small_classes(DimVec::new(2, 2), q);
    for y in &cs {
        for x in &cs {
            if y.is_zero() || x.is_zero() || (y.dim() + x.dim()).total() > 6 {
                continue;
            }
            let dy = HallElement::class(y.clone(), q).coproduct().unwrap();
            let dx = HallElement::class(x.clone(), q).coproduct().unwrap();
            let mut lhs = DoubleElement::zero(q);
            let mut rhs = DoubleElement::zero(q);
            for ((a1, ka1), (a2, ka2), ca) in &dy {
                for ((b1, kb1), (b2, kb2), cb) in &dx {
                    let c = ca.mul(cb);
                    let a1e = HallElement::term(a1.clone(), *ka1, ScalarQ::one(q));
                    let a2e = HallElement::term(a2.clone(), *ka2, ScalarQ::one(q));
                    let b1e = HallElement::term(b1.clone(), *kb1, ScalarQ::one(q));
                    let b2e = HallElement::term(b2.clone(), *kb2, ScalarQ::one(q));
                    let pl = green_pair(&a2e, &b1e);
                    if !pl.is_zero() {
                        let t = DoubleElement::minus(&a1e).mul(&DoubleElement::plus(&b2e)).unwrap();
                        lhs = lhs.add(&t.scale(&pl.mul(&c)));
                    }
                    let pr = green_pair(&a1e, &b2e);
                    if !pr.is_zero() {
                        let t = DoubleElement::plus(&b1e).mul(&DoubleElement::minus(&a2e)).unwrap();
                        rhs = rhs.add(&t.scale(&pr.mul(&c)));
                    }
                }
            }
            assert_eq!(lhs, rhs, "Y={y} X={x}");
        }
    }
}
