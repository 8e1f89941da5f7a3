use kronecker_hall::scalars::{quantum_int, RatFun};
use kronecker_hall::uv::*;

fn nf(s: &str, variant: LoopVariant) -> LoopNormalForm {
    let t = parse_term(s).unwrap();
    Rewriter::new(variant, Strategy::Leftmost, RewriteBounds::default()).normal_form(&t).unwrap()
}

fn same(a: &LoopNormalForm, b: &str) -> bool {
    *a == nf(b, LoopVariant::Corrected)
}

#[test]
fn rewriting_examples() {
    let a = nf("X[0]+ * X[1]+", LoopVariant::Corrected);
    assert!(same(&a, "v^2 * X[1]+ * X[0]+"), "{a}");
    let b = nf("H[1]*X[0]+ - X[0]+*H[1]", LoopVariant::Corrected);
    let mut want = LoopNormalForm::default();
    want.terms.insert(
        Mono { w: vec![LoopLetter::Xp(1)], k: 0, c2: -1 },
        quantum_int(2),
    );
    assert_eq!(b, want, "{b}");
    let lit = nf("X[0]+*X[0]- - X[0]-*X[0]+", LoopVariant::Literal);
    assert!(lit.is_zero(), "{lit}");
    let cor = nf("X[0]+*X[0]- - X[0]-*X[0]+", LoopVariant::Corrected);
    let f = RatFun::v_pow(1).div(&RatFun::v_pow(1).sub(&RatFun::v_pow(-1))).unwrap();
    let mut want = LoopNormalForm::default();
    want.terms.insert(Mono { w: vec![], k: 1, c2: 0 }, f.clone());
    want.terms.insert(Mono { w: vec![], k: -1, c2: 0 }, f.neg());
    assert_eq!(cor, want, "{cor}");
}

#[test]
fn rewriting_matches_evaluation() {
    let words = [
        "X[0]+*X[1]+", "X[-1]+*X[1]+", "X[1]-*X[0]-", "X[-1]-*X[1]-",
        "H[1]*X[0]+", "H[-1]*X[0]+", "H[-1]*X[0]-", "X[0]-*H[1]",
        "H[-1]*H[1]", "H[-2]*H[2]", "H[2]*X[-1]+", "X[0]-*X[0]+",
        "X[0]-*X[1]+", "X[1]-*X[0]+", "X[-1]-*X[0]+", "X[0]-*X[-1]+",
        "X[0]-*X[2]+", "X[0]+*K*X[1]-*X[-1]+", "X[-1]+*X[0]-*X[1]+",
        "H[-1]*X[1]-*X[0]+*H[1]",
    ];
    for s in words {
        let t = parse_term(s).unwrap();
        let n = nf(s, LoopVariant::Corrected);
        for q in [2, 3] {
            let lhs = ev_q(&t, q).unwrap();
            let rhs = ev_q(&n.to_term(), q).unwrap();
            assert_eq!(lhs, rhs, "{s} at q={q}: nf {n}");
        }
    }
}

fn big() -> Rewriter {
    Rewriter::new(LoopVariant::Corrected, Strategy::Leftmost, RewriteBounds { max_len: 40, max_index: 30 })
}

fn failing(table: GTable, variant: LoopVariant) -> usize {
    let mut rw = Rewriter::new(variant, Strategy::Leftmost, RewriteBounds { max_len: 40, max_index: 30 });
    verify_hom(&dj_relators(), table, &mut rw).unwrap().iter().filter(|c| !c.holds()).count()
}

#[test]
fn drinfeld_beck_is_a_homomorphism() {
    assert_eq!(failing(GTable::Corrected, LoopVariant::Corrected), 0);
    assert_eq!(failing(GTable::Literal, LoopVariant::Literal), 8);
    assert_eq!(failing(GTable::Corrected, LoopVariant::Literal), 2);
}

#[test]
fn drinfeld_beck_agrees_after_evaluation() {
    for g in ["E1", "E2", "F1", "F2", "K1", "K2", "K1^-1", "K2^-1"] {
        let t = parse_term(g).unwrap();
        let img = map_g(&t, GTable::Corrected).unwrap();
        for q in [2, 3] {
            assert_eq!(ev_q(&t, q).unwrap(), ev_q(&img, q).unwrap(), "{g} q={q}");
        }
    }
}

fn generators() -> Vec<PresTerm> {
    ["E1", "E2", "F1", "F2", "K1", "K2"].iter().map(|g| parse_term(g).unwrap()).collect()
}

#[test]
fn corrected_symmetries() {
    let mut rw = big();
    let mut nf = |t: &PresTerm| rw.normal_form(&map_g(t, GTable::Corrected).unwrap()).unwrap();
    for s in [Sym::Plus, Sym::Minus] {
        let other = if s == Sym::Plus { Sym::Minus } else { Sym::Plus };
        for r in dj_relators() {
            assert!(nf(&lusztig_s(&r.term, s, SymTable::Corrected).unwrap()).is_zero(), "{s:?} {}", r.name);
        }
        for t in generators() {
            let back = lusztig_s(&lusztig_s(&t, s, SymTable::Corrected).unwrap(), other, SymTable::Corrected).unwrap();
            assert_eq!(nf(&back), nf(&t), "{s:?} inverse on {t}");
            let lhs = big().normal_form(&coxeter_a_loop(&map_g(&t, GTable::Corrected).unwrap(), s).unwrap()).unwrap();
            assert_eq!(lhs, nf(&coxeter_a(&t, s, SymTable::Corrected).unwrap()), "{s:?} square on {t}");
        }
    }
}

#[test]
fn printed_symmetries_fail() {
    let mut rw = big();
    let mut nf = |t: &PresTerm| rw.normal_form(&map_g(t, GTable::Corrected).unwrap()).unwrap();
    let bad = dj_relators()
        .into_iter()
        .filter(|r| !nf(&lusztig_s(&r.term, Sym::Minus, SymTable::Literal).unwrap()).is_zero())
        .count();
    assert_eq!(bad, 6);
    let e1 = parse_term("E1").unwrap();
    let back = lusztig_s(&lusztig_s(&e1, Sym::Plus, SymTable::Literal).unwrap(), Sym::Minus, SymTable::Literal).unwrap();
    assert_ne!(nf(&back), nf(&e1));
}

#[test]
fn symmetries_after_evaluation() {
    for s in [Sym::Plus, Sym::Minus] {
        let other = if s == Sym::Plus { Sym::Minus } else { Sym::Plus };
        for t in generators() {
            let back = lusztig_s(&lusztig_s(&t, s, SymTable::Corrected).unwrap(), other, SymTable::Corrected).unwrap();
            for q in [2, 3] {
                assert_eq!(ev_q(&back, q).unwrap(), ev_q(&t, q).unwrap(), "{t} q={q}");
            }
        }
    }
}

