//! The individual checks, grouped into suites.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Check, Config, Job};
use crate::error::Result;
use crate::hall::{dbracket, green_pair, green_pair_tensor, one_alpha, tube_one, DoubleElement, HallElement};
use crate::kronrep::{enumerate_iso_classes, DimVec, Indec, IsoClass};
use crate::p1::{
    c_half, k_gen, lb_coproduct_check, line_bundle, t_double, t_elem, t_tilde, theta_census, theta_elem,
    theta_tilde, szanto_check, szanto_rhs, Sign, SzantoForm,
};
use crate::scalars::{quantum_int, specialize, RatFun, ScalarQ};
use crate::stability::{
    brute_semistable, default_stability, hn_semistable, hn_semistable_with, reineke_semistable, HnOrder,
};
use crate::uv::{
    certify_p, coxeter_a, coxeter_a_loop, dj_relators, ev_q, is_integral, lusztig_s, map_g, one_ab, one_ab_printed,
    p_elem, parse_term, pbw_rank, plus_twist, random_loop_word, refl_formula, small_pbw_monomials, verify_hom,
    GTable, Letter, LoopVariant, Mono, PSeries, PresTerm, ReflWeight, RewriteBounds, Rewriter, Strategy, Sym,
    SymTable,
};

pub type SuiteBuilder = fn() -> Vec<Job>;

pub static SUITES: &[(&str, SuiteBuilder)] = &[
    ("dj-relations", dj_relations),
    ("p1-relations", p1_relations),
    ("double-relations", double_relations),
    ("szanto", szanto),
    ("drinfeld-beck", drinfeld_beck),
    ("lusztig", lusztig),
    ("hn-reineke", hn_reineke),
    ("series", series),
    ("integral-form", integral_form),
    ("pairing", pairing),
];

fn job(f: impl Fn(&Config) -> Result<Vec<Check>> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn sc(f: &RatFun, q: u32) -> Result<ScalarQ> {
    specialize(f, q)
}

/// `[2r] / r`
fn two_r_over_r(r: u32) -> RatFun {
    quantum_int(2 * r as i64).scale(&num_rational::BigRational::new(1.into(), (r as i64).into()))
}

fn v_inv_minus_v() -> RatFun {
    RatFun::v_pow(-1).sub(&RatFun::v_pow(1))
}

fn rewriter(cfg: &Config, variant: LoopVariant) -> Rewriter {
    Rewriter::new(variant, Strategy::Leftmost, RewriteBounds { max_len: cfg.max_word_len, max_index: 30 })
}

fn generators() -> Vec<(&'static str, PresTerm)> {
    ["E1", "E2", "F1", "F2", "K1", "K2"]
        .into_iter()
        .map(|g| (g, parse_term(g).expect("generator")))
        .collect()
}

fn other(s: Sym) -> Sym {
    match s {
        Sym::Plus => Sym::Minus,
        Sym::Minus => Sym::Plus,
    }
}

fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

const DJ: &str = "Drinfeld-Jimbo relations";
const REFL: &str = "reflection formulas";
const GREEN: &str = "Green's formula";
const TORSION_PAIRING: &str = "pairing of torsion generators";
const THETA: &str = "closed form of Theta";
const LB: &str = "coproduct of line bundles";
const P1REL: &str = "relations of the composition algebra of P1";
const DOUBLE: &str = "relations of the reduced double";
const SZANTO: &str = "Szanto's formula";
const DB: &str = "Drinfeld-Beck isomorphism";
const LUSZTIG: &str = "Lusztig symmetries";
const MEMBERSHIP: &str = "preprojectives and preinjectives in the composition algebra";
const HN: &str = "Harder-Narasimhan recursion";
const REINEKE: &str = "Reineke inversion";
const SEMIST: &str = "semistable characteristic functions";
const DIVPOW: &str = "divided powers of exceptional classes";
const ONEAB: &str = "sum of all classes of a dimension";
const PR: &str = "imaginary root vectors P_r";
const PBW: &str = "PBW basis";
const REWRITE: &str = "loop presentation";

fn dj_relations() -> Vec<Job> {
    dj_relators()
        .into_iter()
        .map(|r| {
            job(move |cfg| {
                let e = ev_q(&r.term, cfg.q)?;
                Ok(vec![Check::exact(format!("dj/{}", r.name), DJ, e.is_zero(), format!("{} terms", e.len()))])
            })
        })
        .collect()
}

fn lusztig() -> Vec<Job> {
    let mut jobs = vec![job(|cfg| {
        let q = cfg.q;
        let p1 = DoubleElement::plus_class(IsoClass::preproj(1), q);
        let i1 = DoubleElement::plus_class(IsoClass::preinj(1), q);
        let ev = |x: &Indec, w| -> Result<DoubleElement> { ev_q(&refl_formula(x, w)?, q) };
        Ok(vec![
            Check::exact("lusztig/refl-P1", REFL, ev(&Indec::P(1), ReflWeight::Right)? == p1, "v^{-b} weight"),
            Check::corrected(
                "lusztig/refl-I1",
                REFL,
                ev(&Indec::I(1), ReflWeight::Right)? == i1,
                ev(&Indec::I(1), ReflWeight::Left)? == i1,
                "corrected weight v^{-a}",
            ),
        ])
    })];
    for s in [Sym::Plus, Sym::Minus] {
        for r in dj_relators() {
            jobs.push(job(move |cfg| {
                let mut rw = rewriter(cfg, LoopVariant::Corrected);
                let mut routes = Vec::new();
                let mut z = |t| -> Result<bool> {
                    let (zero, route) = evaluates_to_zero(&lusztig_s(&r.term, s, t)?, cfg.q, &mut rw)?;
                    routes.push(route);
                    Ok(zero)
                };
                let (p, c) = (z(SymTable::Literal)?, z(SymTable::Corrected)?);
                Ok(vec![Check::corrected(
                    format!("lusztig/S{}/{}", sym_name(s), r.name),
                    LUSZTIG,
                    p,
                    c,
                    format!("relator image evaluates to 0 ({})", routes.join(", ")),
                )])
            }));
        }
        jobs.push(job(move |cfg| {
            let mut out = Vec::new();
            for (g, t) in generators() {
                let inv = |table| -> Result<bool> {
                    let back = lusztig_s(&lusztig_s(&t, s, table)?, other(s), table)?;
                    Ok(ev_q(&back, cfg.q)? == ev_q(&t, cfg.q)?)
                };
                out.push(Check::corrected(
                    format!("lusztig/inverse-S{}/{g}", sym_name(s)),
                    LUSZTIG,
                    inv(SymTable::Literal)?,
                    inv(SymTable::Corrected)?,
                    "S(-s) S(s) fixes the generator",
                ));
            }
            Ok(out)
        }));
    }
    jobs.push(job(|cfg| {
        let mut rw = rewriter(cfg, LoopVariant::Corrected);
        let mut out = Vec::new();
        for n in 0..=3 {
            for x in [Indec::P(n), Indec::I(n)] {
                let t = plus_twist(&x, SymTable::Corrected, cfg.q, &mut rw)?;
                let detail = match &t {
                    Some((c, k)) => format!("coefficient {c}, twist K{k}"),
                    None => "image is not a single class".into(),
                };
                out.push(Check::exact(format!("lusztig/composition-{x}"), MEMBERSHIP, t.is_some(), detail));
            }
        }
        Ok(out)
    }));
    jobs
}

/// Whether `ev_q(t) = 0`. Terms whose direct evaluation exceeds the
/// enumeration bounds are first pushed through `G` and normalized; `G`
/// commutes with evaluation on generators, so the verdict is the same.
fn evaluates_to_zero(t: &PresTerm, q: u32, rw: &mut Rewriter) -> Result<(bool, &'static str)> {
    match ev_q(t, q) {
        Ok(e) => Ok((e.is_zero(), "direct")),
        Err(crate::Error::TooLarge { .. }) => {
            let nf = rw.normal_form(&map_g(t, GTable::Corrected)?)?;
            Ok((ev_q(&nf.to_term(), q)?.is_zero(), "via loop normal form"))
        }
        Err(e) => Err(e),
    }
}

fn sym_name(s: Sym) -> &'static str {
    match s {
        Sym::Plus => "+",
        Sym::Minus => "-",
    }
}

fn drinfeld_beck() -> Vec<Job> {
    vec![
        job(|cfg| {
            let mut lit = rewriter(cfg, LoopVariant::Literal);
            let mut cor = rewriter(cfg, LoopVariant::Corrected);
            let rels = dj_relators();
            let a = verify_hom(&rels, GTable::Literal, &mut lit)?;
            let b = verify_hom(&rels, GTable::Corrected, &mut cor)?;
            Ok(a.iter()
                .zip(&b)
                .map(|(x, y)| {
                    Check::corrected(
                        format!("drinfeld-beck/G/{}", x.relator),
                        DB,
                        x.holds(),
                        y.holds(),
                        "printed generator table and loop relation against corrected ones",
                    )
                })
                .collect())
        }),
        job(|cfg| {
            let mut out = Vec::new();
            for g in ["E1", "E2", "F1", "F2", "K1", "K2", "K1^-1", "K2^-1"] {
                let t = parse_term(g)?;
                let want = ev_q(&t, cfg.q)?;
                let same = |table| -> Result<bool> { Ok(ev_q(&map_g(&t, table)?, cfg.q)? == want) };
                out.push(Check::corrected(
                    format!("drinfeld-beck/ev/{g}"),
                    DB,
                    same(GTable::Literal)?,
                    same(GTable::Corrected)?,
                    "G commutes with evaluation",
                ));
            }
            let x0 = ev_q(&map_g(&parse_term("E2")?, GTable::Corrected)?, cfg.q)?;
            out.push(Check::exact("drinfeld-beck/ev/X0+", DB, x0 == line_bundle(0, Sign::Plus, cfg.q), "G(E2) = L_0^+"));
            Ok(out)
        }),
        job(|cfg| {
            let mut rw = rewriter(cfg, LoopVariant::Corrected);
            let mut out = Vec::new();
            for s in [Sym::Plus, Sym::Minus] {
                for (g, t) in generators() {
                    let lhs = rw.normal_form(&coxeter_a_loop(&map_g(&t, GTable::Corrected)?, s)?)?;
                    let mut square = |table| -> Result<bool> {
                        Ok(rw.normal_form(&map_g(&coxeter_a(&t, s, table)?, GTable::Corrected)?)? == lhs)
                    };
                    let (p, c) = (square(SymTable::Literal)?, square(SymTable::Corrected)?);
                    out.push(Check::corrected(
                        format!("drinfeld-beck/coxeter{}/{g}", sym_name(s)),
                        DB,
                        p,
                        c,
                        "A G = G A",
                    ));
                }
            }
            Ok(out)
        }),
    ]
}

fn dims_up_to_total(t: u32) -> Vec<DimVec> {
    let mut out = Vec::new();
    for a in 0..=t {
        for b in 0..=t - a {
            if a + b > 0 {
                out.push(DimVec::new(a, b));
            }
        }
    }
    out
}

fn hn_reineke() -> Vec<Job> {
    vec![
        job(|cfg| {
            let z = default_stability();
            let mut out = Vec::new();
            for d in dims_up_to_total(cfg.max_total) {
                let hn = hn_semistable(d, &z, cfg.q)?;
                let re = reineke_semistable(d, &z, cfg.q)?;
                out.push(Check::exact(format!("hn/reineke{d}"), REINEKE, hn == re, format!("{} classes", hn.len())));
            }
            Ok(out)
        }),
        job(|cfg| {
            let z = default_stability();
            let mut out = Vec::new();
            if cfg.q != 2 {
                return Ok(out);
            }
            for d in dims_up_to_total(4).into_iter().filter(|d| d.le(&DimVec::new(2, 2))) {
                let brute = brute_semistable(d, &z, cfg.q);
                let strict = hn_semistable(d, &z, cfg.q)?;
                let weak = hn_semistable_with(d, &z, cfg.q, HnOrder::NonStrict)?;
                let support = one_alpha(d, cfg.q);
                let inside = strict
                    .terms()
                    .all(|(x, k, c)| c.is_one() && !support.coeff(x, k).is_zero());
                out.push(Check::exact(format!("hn/oracle{d}"), HN, strict == brute && inside, "strictly decreasing slopes"));
                out.push(Check::corrected(
                    format!("hn/convention{d}"),
                    HN,
                    weak == brute,
                    strict == brute,
                    "printed: non-increasing slopes; corrected: strictly decreasing",
                ));
            }
            Ok(out)
        }),
        job(|cfg| {
            let z = default_stability();
            let mut out = Vec::new();
            for r in 1..=2 {
                let ok = tube_one(r, cfg.q) == hn_semistable(DimVec::new(r, r), &z, cfg.q)?;
                out.push(Check::exact(format!("hn/tube{r}"), SEMIST, ok, "regular classes are the semistables"));
            }
            Ok(out)
        }),
    ]
}

fn pairing() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for da in dims_up_to_total(6) {
        for db in dims_up_to_total(6) {
            jobs.push(job(move |cfg| {
                let dc = da + db;
                if !dc.le(&cfg.max_dim) {
                    return Ok(vec![]);
                }
                let q = cfg.q;
                let cs = enumerate_iso_classes(dc, q);
                let mut bad = 0;
                let mut count = 0;
                for a in enumerate_iso_classes(da, q) {
                    let ha = HallElement::class(a, q);
                    for b in enumerate_iso_classes(db, q) {
                        let hb = HallElement::class(b, q);
                        let ab = ha.mul(&hb)?;
                        for c in &cs {
                            let hc = HallElement::class(c.clone(), q);
                            count += 1;
                            if green_pair(&ab, &hc) != green_pair_tensor(&ha, &hb, &hc.coproduct()?) {
                                bad += 1;
                            }
                        }
                    }
                }
                Ok(vec![Check::exact(
                    format!("pairing/green{da}{db}"),
                    GREEN,
                    bad == 0,
                    format!("{count} triples, {bad} failing"),
                )])
            }));
        }
    }
    jobs.push(job(|cfg| {
        let q = cfg.q;
        let mut out = Vec::new();
        let inv = sc(&RatFun::one().div(&v_inv_minus_v())?, q)?;
        for r in 1..=cfg.max_deg {
            let tr = t_elem(r, q)?;
            for s in 1..=cfg.max_deg {
                let want = if r == s { sc(&two_r_over_r(r), q)?.mul(&inv) } else { ScalarQ::zero(q) };
                let got = green_pair(&tr, &t_elem(s, q)?);
                out.push(Check::exact(format!("pairing/T{r}T{s}"), TORSION_PAIRING, got == want, format!("{got}")));
            }
            let got = green_pair(&theta_elem(r, q)?, &tr);
            let ok = got == sc(&two_r_over_r(r), q)?;
            out.push(Check::exact(format!("pairing/Theta{r}T{r}"), TORSION_PAIRING, ok, format!("{got}")));
        }
        Ok(out)
    }));
    jobs
}

fn series() -> Vec<Job> {
    vec![
        job(|cfg| {
            let mut out = Vec::new();
            for r in 1..=cfg.max_deg {
                let ok = theta_census(r, cfg.q) == theta_elem(r, cfg.q)?;
                out.push(Check::exact(format!("series/theta{r}"), THETA, ok, "series against closed form"));
            }
            Ok(out)
        }),
        job(|cfg| {
            let mut out = Vec::new();
            for n in [-1i64, 0, 1, 2] {
                for row in lb_coproduct_check(n, cfg.max_deg, cfg.q)? {
                    out.push(Check::exact(
                        format!("series/lb-coproduct/n{n}/r{}", row.r),
                        LB,
                        row.equal,
                        "quotient census against Theta_r",
                    ));
                }
            }
            Ok(out)
        }),
    ]
}

fn l(n: i64, s: Sign, q: u32) -> DoubleElement {
    line_bundle(n, s, q)
}

fn commutes(a: &DoubleElement, b: &DoubleElement) -> Result<bool> {
    Ok(dbracket(a, b)?.is_zero())
}

fn p1_relations() -> Vec<Job> {
    let mut jobs = vec![job(|cfg| {
        let q = cfg.q;
        let c = c_half(1, q);
        let k = k_gen(1, q);
        let mut ok_c = true;
        let mut ok_k = true;
        for n in -2..=2 {
            for s in [Sign::Plus, Sign::Minus] {
                ok_c &= commutes(&c, &l(n, s, q))?;
                let lhs = k.mul(&l(n, s, q))?;
                let rhs = l(n, s, q).mul(&k)?.shift(-2 * s.unit() as i32);
                ok_k &= lhs == rhs;
            }
        }
        let mut ok_t = true;
        for r in 1..=cfg.max_deg {
            let tr = t_double(r, Sign::Plus, q)?;
            ok_c &= commutes(&c, &tr)?;
            ok_t &= commutes(&k, &tr)?;
            for s in 1..=cfg.max_deg {
                ok_t &= commutes(&tr, &t_double(s, Sign::Plus, q)?)?;
            }
        }
        Ok(vec![
            Check::exact("p1/C-central", P1REL, ok_c, "C commutes with L_n and T_r"),
            Check::exact("p1/T-commute", P1REL, ok_t, "[K, T_r] = [T_r, T_s] = 0"),
            Check::exact("p1/K-L", P1REL, ok_k, "K L_n = v^{-2} L_n K"),
        ])
    })];
    for r in 1..=3u32 {
        jobs.push(job(move |cfg| {
            if r > cfg.max_deg {
                return Ok(vec![]);
            }
            let q = cfg.q;
            let tr = t_double(r, Sign::Plus, q)?;
            let f = sc(&two_r_over_r(r), q)?;
            let mut out = Vec::new();
            for n in -2..=2i64 {
                let lhs = dbracket(&tr, &l(n, Sign::Plus, q))?;
                let ok = lhs == l(n + r as i64, Sign::Plus, q).scale(&f);
                out.push(Check::exact(format!("p1/T{r}-L{n}"), P1REL, ok, "[T_r, L_n] = [2r]/r L_{n+r}"));
            }
            Ok(out)
        }));
    }
    jobs.push(job(|cfg| {
        let q = cfg.q;
        let mut out = Vec::new();
        let ll = |a: i64, b: i64| l(a, Sign::Plus, q).mul(&l(b, Sign::Plus, q));
        for m in -2..=2i64 {
            for n in -2..=2i64 {
                let lhs = ll(m, n + 1)?.add(&ll(n, m + 1)?);
                let rhs = ll(n + 1, m)?.add(&ll(m + 1, n)?).shift(2);
                out.push(Check::exact(format!("p1/quadratic/m{m}/n{n}"), P1REL, lhs == rhs, ""));
            }
        }
        Ok(out)
    }));
    jobs
}

fn double_relations() -> Vec<Job> {
    let mut jobs = vec![job(|cfg| {
        let q = cfg.q;
        let k = k_gen(1, q);
        let mut ok_t = true;
        let mut ok_k = true;
        for s in [Sign::Plus, Sign::Minus] {
            for r in 1..=cfg.max_deg {
                let tr = t_tilde(r, s, q)?;
                ok_t &= commutes(&k, &tr)?;
                for u in 1..=cfg.max_deg {
                    ok_t &= commutes(&tr, &t_tilde(u, s, q)?)?;
                }
            }
            for n in -2..=2 {
                ok_k &= k.mul(&l(n, s, q))? == l(n, s, q).mul(&k)?.shift(-2 * s.unit() as i32);
            }
        }
        Ok(vec![
            Check::exact("double/T-commute", DOUBLE, ok_t, "[K, T~_r] = [T~_r, T~_s] = 0"),
            Check::exact("double/K-L", DOUBLE, ok_k, "K L_n^± = v^{∓2} L_n^± K"),
        ])
    })];
    for r in 1..=3u32 {
        for s in [Sign::Plus, Sign::Minus] {
            jobs.push(job(move |cfg| {
                if r > cfg.max_deg {
                    return Ok(vec![]);
                }
                let q = cfg.q;
                let f = sc(&two_r_over_r(r), q)?;
                let c = c_half(-s.unit() * r as i64, q);
                let mut out = Vec::new();
                let (tr, tr_op) = (t_tilde(r, s, q)?, t_tilde(r, s.flip(), q)?);
                for n in -2..=2i64 {
                    let lhs = dbracket(&tr, &l(n, s, q))?;
                    let ok = lhs == l(n + r as i64, s, q).mul(&c)?.scale(&f);
                    out.push(Check::exact(format!("double/T{r}{}-L{n}", sign_name(s)), DOUBLE, ok, ""));
                    let lhs = dbracket(&l(n, s, q), &tr_op)?;
                    let ok = lhs == l(n - r as i64, s, q).mul(&c)?.scale(&f);
                    out.push(Check::exact(format!("double/L{n}{}-T{r}", sign_name(s)), DOUBLE, ok, ""));
                }
                Ok(out)
            }));
        }
    }
    jobs.push(job(|cfg| {
        let q = cfg.q;
        let mut out = Vec::new();
        let inv = sc(&RatFun::one().div(&v_inv_minus_v())?, q)?;
        for r in 1..=cfg.max_deg {
            for s in 1..=cfg.max_deg {
                let lhs = dbracket(&t_tilde(r, Sign::Plus, q)?, &t_tilde(s, Sign::Minus, q)?)?;
                let want = if r == s {
                    c_half(-2 * r as i64, q)
                        .sub(&c_half(2 * r as i64, q))
                        .scale(&sc(&two_r_over_r(r), q)?.mul(&inv))
                } else {
                    DoubleElement::zero(q)
                };
                out.push(Check::exact(format!("double/T{r}+T{s}-"), DOUBLE, lhs == want, ""));
            }
        }
        Ok(out)
    }));
    for n in -2..=2i64 {
        jobs.push(job(move |cfg| {
            let q = cfg.q;
            let v_over = |d: RatFun| -> Result<ScalarQ> { sc(&RatFun::v_pow(1).div(&d)?, q) };
            let mut out = Vec::new();
            for m in -2..=2i64 {
                let lhs = dbracket(&l(n, Sign::Plus, q), &l(m, Sign::Minus, q))?;
                let id = format!("double/L{n}+L{m}-");
                if n > m {
                    let want = theta_tilde((n - m) as u32, Sign::Plus, q)?
                        .mul(&k_gen(1, q))?
                        .mul(&c_half(m + n, q))?
                        .scale(&v_over(v_inv_minus_v().neg())?);
                    out.push(Check::exact(id, DOUBLE, lhs == want, "n > m"));
                } else if n < m {
                    let want = theta_tilde((m - n) as u32, Sign::Minus, q)?
                        .mul(&k_gen(-1, q))?
                        .mul(&c_half(-(m + n), q))?
                        .scale(&v_over(v_inv_minus_v())?);
                    out.push(Check::exact(id, DOUBLE, lhs == want, "n < m"));
                } else {
                    let want = k_gen(1, q)
                        .mul(&c_half(2 * n, q))?
                        .sub(&k_gen(-1, q).mul(&c_half(-2 * n, q))?)
                        .scale(&v_over(v_inv_minus_v().neg())?);
                    out.push(Check::corrected(
                        id,
                        DOUBLE,
                        lhs.is_zero(),
                        lhs == want,
                        "n = m: printed 0, corrected v/(v - v^-1) (K C^n - K^-1 C^-n)",
                    ));
                }
            }
            Ok(out)
        }));
    }
    jobs
}

fn szanto() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for total in 0..=6u32 {
        for m in 0..=total {
            jobs.push(job(move |cfg| {
                if total + 1 > cfg.max_deg {
                    return Ok(vec![]);
                }
                let n = total - m;
                let q = cfg.q;
                Ok(vec![Check::corrected(
                    format!("szanto/m{m}/n{n}"),
                    SZANTO,
                    szanto_check(m, n, q, SzantoForm::Literal)?,
                    szanto_check(m, n, q, SzantoForm::Corrected)?,
                    "corrected prefactor carries an extra v^2",
                )])
            }));
        }
    }
    jobs.push(job(|cfg| {
        let mut out = Vec::new();
        if cfg.max_deg < 3 {
            return Ok(out);
        }
        let a = szanto_rhs(0, 2, cfg.q, SzantoForm::Corrected)?;
        let ok = szanto_rhs(1, 1, cfg.q, SzantoForm::Corrected)? == a && szanto_rhs(2, 0, cfg.q, SzantoForm::Corrected)? == a;
        let lhs_ok = crate::p1::szanto_lhs(0, 2, cfg.q)? == crate::p1::szanto_lhs(1, 1, cfg.q)?
            && crate::p1::szanto_lhs(1, 1, cfg.q)? == crate::p1::szanto_lhs(2, 0, cfg.q)?;
        out.push(Check::exact("szanto/sum-symmetry", SZANTO, ok && lhs_ok, "m + n = 2"));
        Ok(out)
    }));
    jobs
}

fn integral_form() -> Vec<Job> {
    vec![
        job(|cfg| {
            let q = cfg.q;
            let mut out = Vec::new();
            for x in [IsoClass::s1(), IsoClass::s2(), IsoClass::preproj(1), IsoClass::preinj(1)] {
                for n in 1..=3u32 {
                    let lhs = HallElement::class(x.power(n), q);
                    let rhs = HallElement::class(x.clone(), q).divided_power(n)?.shift((n * (n - 1)) as i32);
                    out.push(Check::exact(format!("integral/divided-power/{x}/{n}"), DIVPOW, lhs == rhs, ""));
                }
            }
            Ok(out)
        }),
        job(|cfg| {
            let q = cfg.q;
            let mut out = Vec::new();
            for d in cfg.max_dim.below().filter(|d| !d.is_zero()) {
                let want = DoubleElement::plus(&one_alpha(d, q));
                let printed = ev_q(&one_ab_printed(d.d1, d.d2)?, q)? == want;
                let corrected = ev_q(&one_ab(d.d1, d.d2)?, q)? == want;
                out.push(Check::corrected(
                    format!("integral/one{d}"),
                    ONEAB,
                    printed,
                    corrected,
                    "corrected: v^{a(a-1)+b(b-1)-2ab} E1^(a) E2^(b)",
                ));
            }
            Ok(out)
        }),
        job(|cfg| {
            let q = cfg.q;
            let mut rw = rewriter(cfg, LoopVariant::Corrected);
            let z = default_stability();
            let mut out = Vec::new();
            for r in 1..=2u32.min(cfg.max_deg) {
                let tube = DoubleElement::plus(&tube_one(r, q));
                let printed = is_integral(&p_elem(r, PSeries::Psi)?, &mut rw)?.integral;
                let cert = certify_p(r, PSeries::H, &z, &mut rw)?;
                out.push(Check::corrected(
                    format!("integral/P{r}/integral"),
                    PR,
                    printed,
                    cert.holds(),
                    "corrected: P_r is the image of a Laurent combination of divided powers",
                ));
                out.push(Check::corrected(
                    format!("integral/P{r}/evaluation"),
                    PR,
                    ev_q(&p_elem(r, PSeries::Psi)?, q)? == tube,
                    ev_q(&p_elem(r, PSeries::H)?, q)? == tube,
                    "corrected: exponential of H_r/[r]",
                ));
                out.push(Check::exact(format!("integral/P{r}/certificate"), PR, ev_q(&cert.word, q)? == tube, ""));
            }
            let mut ok = true;
            for n in -2..=2 {
                for m in 1..=3 {
                    for l in [Letter::Xp(n), Letter::Xm(n)] {
                        ok &= is_integral(&PresTerm::letter(l).divided_power(m)?, &mut rw)?.integral;
                    }
                }
            }
            out.push(Check::exact("integral/divided-loop-powers", DIVPOW, ok, "X_n^(m) for |n| <= 2, m <= 3"));
            Ok(out)
        }),
        job(|cfg| {
            let monos: Vec<Mono> = small_pbw_monomials(3).into_iter().take(60).collect();
            let rank = pbw_rank(&monos, cfg.q)?;
            Ok(vec![Check::exact(
                "integral/pbw-rank",
                PBW,
                rank == monos.len(),
                format!("rank {rank} of {} monomials", monos.len()),
            )])
        }),
        job(|cfg| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let b = RewriteBounds { max_len: cfg.max_word_len, max_index: 30 };
            let mut left = Rewriter::new(LoopVariant::Corrected, Strategy::Leftmost, b);
            let mut right = Rewriter::new(LoopVariant::Corrected, Strategy::Rightmost, b);
            let (mut confluent, mut sound) = (0, 0);
            let mut bad = Vec::new();
            for i in 0..200 {
                let w = random_loop_word(&mut rng, 5, 2);
                let a = left.normal_form(&w)?;
                if a == right.normal_form(&w)? {
                    confluent += 1;
                } else {
                    bad.push(w.to_string());
                }
                if i % 10 == 0 {
                    if ev_q(&w, cfg.q)? == ev_q(&a.to_term(), cfg.q)? {
                        sound += 1;
                    } else {
                        bad.push(w.to_string());
                    }
                }
            }
            Ok(vec![
                Check::exact("integral/confluence", REWRITE, confluent == 200, format!("{confluent}/200 {bad:?}")),
                Check::exact("integral/soundness", REWRITE, sound == 20, format!("{sound}/20")),
            ])
        }),
    ]
}

