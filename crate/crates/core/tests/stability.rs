use kronecker_hall::hall::{one_alpha, tube_one, HallElement};
use kronecker_hall::kronrep::{DimVec, IsoClass};
use kronecker_hall::stability::*;

fn dims(max_total: u32) -> Vec<DimVec> {
    let mut out = Vec::new();
    for a in 0..=max_total {
        for b in 0..=max_total - a {
            if a + b > 0 {
                out.push(DimVec::new(a, b));
            }
        }
    }
    out
}

#[test]
fn hn_matches_reineke() {
    let z = default_stability();
    for q in [2u32, 3] {
        for d in dims(5) {
            assert_eq!(hn_semistable(d, &z, q).unwrap(), reineke_semistable(d, &z, q).unwrap(), "{d} q={q}");
        }
    }
}

#[test]
fn hn_matches_brute_force() {
    let z = default_stability();
    for d in dims(4).into_iter().filter(|d| d.d1 <= 2 && d.d2 <= 2) {
        let hn = hn_semistable(d, &z, 2).unwrap();
        assert_eq!(brute_semistable(d, &z, 2), hn, "{d}");
        let support = one_alpha(d, 2);
        for (x, _, c) in hn.terms() {
            assert!(c.is_one() && !support.coeff(x, &Default::default()).is_zero());
        }
    }
}

#[test]
fn non_strict_order_disagrees_with_oracle() {
    let z = default_stability();
    for d in [DimVec::new(0, 2), DimVec::new(2, 0), DimVec::new(2, 2)] {
        assert_ne!(hn_semistable_with(d, &z, 2, HnOrder::NonStrict).unwrap(), brute_semistable(d, &z, 2));
    }
}

#[test]
fn tubes_are_semistable() {
    let z = default_stability();
    for q in [2u32, 3] {
        for r in 1..=2 {
            assert_eq!(tube_one(r, q), hn_semistable(DimVec::new(r, r), &z, q).unwrap());
        }
    }
    let _ = (HallElement::zero(2), IsoClass::zero());
}
