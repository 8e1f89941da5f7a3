use super::*;
use proptest::prelude::*;
use std::collections::HashSet;

#[test]
fn rank_examples() {
    assert_eq!(FqMatrix::identity(3, 2).rank(), 3);
    assert_eq!(FqMatrix::zeros(2, 2, 2).rank(), 0);
    let m = FqMatrix::from_rows(&[vec![1, 1], vec![1, 1]], 2, 2);
    assert_eq!(m.kernel().len(), 1);
    assert_eq!(m.nullity(), 1);
}

#[test]
fn solve_consistent_and_not() {
    let m = FqMatrix::from_rows(&[vec![1, 1], vec![1, 1]], 2, 3);
    assert!(m.solve(&[1, 2]).is_none());
    let x = m.solve(&[2, 2]).unwrap();
    assert_eq!(m.mul_vec(&x), vec![2, 2]);
}

#[test]
fn subspace_counts() {
    assert_eq!(enumerate_subspaces(2, 1, 2).len(), 3);
    assert_eq!(enumerate_subspaces(3, 0, 2).len(), 1);
    assert_eq!(enumerate_subspaces(2, 1, 3).len(), 4);
}

#[test]
fn subspaces_are_distinct_rref_and_counted() {
    for &q in &[2u32, 3] {
        for n in 0..=4 {
            for k in 0..=n {
                let subs = enumerate_subspaces(n, k, q);
                assert_eq!(subs.len() as u128, gaussian_binomial(n, k, q));
                let set: HashSet<_> = subs.iter().cloned().collect();
                assert_eq!(set.len(), subs.len());
                for s in &subs {
                    assert_eq!(&s.rref().0, s);
                    assert_eq!(s.rank(), k);
                }
            }
        }
    }
}

#[test]
fn superspaces_contain_and_count() {
    let q = 3;
    let s = FqMatrix::from_rows(&[vec![1, 2, 0, 1]], 4, q);
    let (s, piv) = s.rref();
    for k in 1..=4 {
        let mut count = 0;
        for_each_superspace(&s, &piv, k, &mut |u, _| {
            let mut both = FqMatrix::zeros(u.rows() + 1, 4, q);
            both.set_block(0, 0, u);
            both.set_block(u.rows(), 0, &s);
            assert_eq!(both.rank(), k);
            count += 1;
        });
        assert_eq!(count as u128, gaussian_binomial(3, k - 1, q));
    }
}

#[test]
fn irreducible_examples() {
    let i1 = irreducibles(1, 2);
    assert_eq!(i1.len(), 2);
    assert_eq!(i1[0], FqPoly::y(2));
    assert_eq!(i1[1], FqPoly::new(vec![1, 1], 2));
    assert_eq!(*irreducibles(2, 2), vec![FqPoly::new(vec![1, 1, 1], 2)]);
    assert_eq!(irreducibles(3, 2).len(), 2);
}

#[test]
fn census_examples() {
    assert_eq!(point_census(1, 2), 3);
    assert_eq!(point_census(1, 3), 4);
    assert_eq!(point_census(2, 2), 1);
    assert_eq!(point_census(3, 2), 2);
}

#[test]
fn census_counts_extension_points() {
    for &q in &[2u32, 3, 5] {
        for n in 1..=4usize {
            let total: usize = (1..=n).filter(|d| n % d == 0).map(|d| d * point_census(d, q)).sum();
            assert_eq!(total, (q as usize).pow(n as u32) + 1, "q={q} n={n}");
        }
    }
}

#[test]
fn irreducibles_have_no_roots_and_no_factors() {
    for &q in &[2u32, 3, 5] {
        for d in 1..=3 {
            for p in irreducibles(d, q).iter() {
                if d >= 2 {
                    assert!((0..q as u8).all(|x| p.eval(x) != 0));
                }
                assert_eq!(p.factor(), vec![(p.clone(), 1)]);
                for e in 1..d {
                    for f in irreducibles(e, q).iter() {
                        assert!(!p.rem(f).is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn points_order_infinity_first() {
    let pts = ClosedPoint::all_of_degree(1, 2);
    assert_eq!(pts[0], ClosedPoint::Infinity);
    let mut sorted = pts.clone();
    sorted.sort();
    assert_eq!(sorted, pts);
    assert_eq!(serde_json::to_string(&pts[0]).unwrap(), "\"inf\"");
    assert_eq!(serde_json::to_string(&pts[1]).unwrap(), "[0,1]");
}

fn poly_strategy(q: u32) -> impl Strategy<Value = FqPoly> {
    prop::collection::vec(0u8..q as u8, 0..6).prop_map(move |c| FqPoly::new(c, q))
}

proptest! {
    #[test]
    fn factor_multiplies_back(p in poly_strategy(3)) {
        prop_assume!(!p.is_zero());
        let prod = p.factor().iter().fold(FqPoly::one(3), |acc, (f, m)| acc.mul(&f.pow(*m)));
        prop_assert_eq!(prod, p.monic());
    }

    #[test]
    fn divrem_identity(a in poly_strategy(5), b in poly_strategy(5)) {
        prop_assume!(!b.is_zero());
        let (qq, r) = a.divrem(&b);
        prop_assert_eq!(qq.mul(&b).add(&r), a);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn kernel_is_kernel(rows in prop::collection::vec(prop::collection::vec(0i64..3, 4), 0..4)) {
        let m = FqMatrix::from_rows(&rows, 4, 3);
        let ker = m.kernel();
        prop_assert_eq!(ker.len() + m.rank(), 4);
        for v in ker {
            prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }
}
