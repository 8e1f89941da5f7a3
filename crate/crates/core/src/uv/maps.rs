//! The Drinfeld–Beck map, Lusztig symmetries, Coxeter automorphisms and the
//! list of Drinfeld–Jimbo relators.

use super::loop_nf::{LoopNormalForm, Rewriter};
use super::term::{parse_term, Letter, PresTerm};
use crate::error::{Error, Result};
use crate::scalars::RatFun;

/// Which generator table to use for `G`. The tables differ only in the
/// `K C` twist carried by the images of `E_1` and `F_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GTable {
    /// `E_1 ↦ v^{-1} X_1^- K C^{-1}`, `F_1 ↦ v^{-1} X_{-1}^+ K^{-1} C`.
    Literal,
    /// `E_1 ↦ v^{-1} X_1^- K^{-1} C`, `F_1 ↦ v^{-1} X_{-1}^+ K C^{-1}`.
    Corrected,
}

fn loop_word(letters: &[Letter], vpow: i32) -> PresTerm {
    PresTerm::word(letters.to_vec(), RatFun::v_pow(vpow))
}

/// Image of one Drinfeld–Jimbo generator under `G`.
pub fn g_letter(l: Letter, table: GTable) -> Result<PresTerm> {
    use Letter::*;
    let (kt, ct) = match table {
        GTable::Literal => (1, -2),
        GTable::Corrected => (-1, 2),
    };
    Ok(match l {
        E(1) => loop_word(&[Xm(1), K(kt), C(ct)], -1),
        E(2) => PresTerm::letter(Xp(0)),
        F(1) => loop_word(&[Xp(-1), K(-kt), C(-ct)], -1),
        F(2) => PresTerm::letter(Xm(0)),
        Ki(1, e) => loop_word(&[K(-e), C(2 * e)], 0),
        Ki(2, e) => loop_word(&[K(e)], 0),
        other => return Err(Error::Invalid(format!("{other} is not a Drinfeld-Jimbo generator"))),
    })
}

/// The Drinfeld–Beck map on Drinfeld–Jimbo terms.
pub fn map_g(t: &PresTerm, table: GTable) -> Result<PresTerm> {
    t.substitute(&|l| g_letter(l, table))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sym {
    Plus,
    Minus,
}

/// Which table of Lusztig symmetries to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymTable {
    /// Braid sums weighted `(-1)^a v^{-b}`, `S^+(E_2) = v^{-1} K_1^{-1} F_1`,
    /// `S^+(F_2) = v E_1 K_1` and the mirrored rows for `S^-`.
    Literal,
    /// `S^+` braid sums weighted `(-1)^a v^{-a}` (the `S^-` ones keep
    /// `v^{-b}`), `S^+(E_2) = v^{-1} K_1 F_1`, `S^+(F_2) = v E_1 K_1^{-1}`,
    /// `S^-(E_1) = v^{-1} F_2 K_2^{-1}`, `S^-(F_1) = v K_2 E_2`. This is the
    /// table under which `S^-` inverts `S^+` and `(S^+)^2` matches the loop
    /// shift through `G`.
    Corrected,
}

/// `sum_{a+b=2} (-1)^a v^{wa*a + wb*b} x^{(a)} y x^{(b)}`
fn braid_sum(x: Letter, y: Letter, wa: i32, wb: i32) -> Result<PresTerm> {
    let x = PresTerm::letter(x);
    let y = PresTerm::letter(y);
    let mut out = PresTerm::zero();
    for a in 0..=2i32 {
        let b = 2 - a;
        let t = x.divided_power(a as u32)?.mul(&y)?.mul(&x.divided_power(b as u32)?)?;
        let sign = if a % 2 == 0 { 1 } else { -1 };
        out = out.add(&t.scale(&RatFun::v_pow(wa * a + wb * b).mul(&RatFun::from_int(sign))));
    }
    Ok(out)
}

/// Image of one generator under `S^+` or `S^-`.
pub fn lusztig_letter(l: Letter, s: Sym, table: SymTable) -> Result<PresTerm> {
    use Letter::*;
    let w = |ls: &[Letter], k: i32| PresTerm::word(ls.to_vec(), RatFun::v_pow(k));
    let lit = table == SymTable::Literal;
    let (wa, wb) = if lit { (0, -1) } else { (-1, 0) };
    let kt = if lit { -1 } else { 1 };
    Ok(match (s, l) {
        (Sym::Plus, E(1)) => braid_sum(E(1), E(2), wa, wb)?,
        (Sym::Plus, F(1)) => braid_sum(F(1), F(2), wa, wb)?,
        (Sym::Plus, E(2)) => w(&[Ki(1, kt), F(1)], -1),
        (Sym::Plus, F(2)) => w(&[E(1), Ki(1, -kt)], 1),
        (Sym::Plus, Ki(1, e)) => w(&[Ki(1, 2 * e), Ki(2, e)], 0),
        (Sym::Plus, Ki(2, e)) => w(&[Ki(1, -e)], 0),
        (Sym::Minus, E(2)) => braid_sum(E(2), E(1), 0, -1)?,
        (Sym::Minus, F(2)) => braid_sum(F(2), F(1), 0, -1)?,
        (Sym::Minus, E(1)) => w(&[F(2), Ki(2, -kt)], -1),
        (Sym::Minus, F(1)) => w(&[Ki(2, kt), E(2)], 1),
        (Sym::Minus, Ki(1, e)) => w(&[Ki(2, -e)], 0),
        (Sym::Minus, Ki(2, e)) => w(&[Ki(1, e), Ki(2, 2 * e)], 0),
        (_, other) => return Err(Error::Invalid(format!("{other} is not a Drinfeld-Jimbo generator"))),
    })
}

pub fn lusztig_s(t: &PresTerm, s: Sym, table: SymTable) -> Result<PresTerm> {
    t.substitute(&|l| lusztig_letter(l, s, table))
}

/// `A^{±1} = (S^±)^2` on Drinfeld–Jimbo terms.
pub fn coxeter_a(t: &PresTerm, s: Sym, table: SymTable) -> Result<PresTerm> {
    lusztig_s(&lusztig_s(t, s, table)?, s, table)
}

/// The loop-side Coxeter automorphism: `A` shifts `X_n^± ↦ X_{n∓2}^±` and
/// `K ↦ K C^{-2}`; `A^{-1}` undoes it. `H` and `C` are fixed.
pub fn coxeter_a_loop(t: &PresTerm, s: Sym) -> Result<PresTerm> {
    let d = if s == Sym::Plus { 1 } else { -1 };
    t.substitute(&|l| {
        Ok(match l {
            Letter::Xp(n) => PresTerm::letter(Letter::Xp(n - 2 * d)),
            Letter::Xm(n) => PresTerm::letter(Letter::Xm(n + 2 * d)),
            Letter::K(e) => PresTerm::word(vec![Letter::K(e), Letter::C(-4 * d as i32 * e)], RatFun::one()),
            Letter::H(_) | Letter::C(_) => PresTerm::letter(l),
            other => return Err(Error::Invalid(format!("{other} is not a loop generator"))),
        })
    })
}

/// A named Drinfeld–Jimbo relator.
#[derive(Clone, Debug)]
pub struct Relator {
    pub name: String,
    pub term: PresTerm,
}

/// All defining relators: `K`-inverses, centrality of `K_1 K_2`, `K`–`E`/`F`
/// commutation, the `E`/`F` commutator and both quantum Serre relations.
pub fn dj_relators() -> Vec<Relator> {
    let c = |i: u8, j: u8| if i == j { 2 } else { -2 };
    let mut out = Vec::new();
    let mut push = |name: String, term: PresTerm| out.push(Relator { name, term });
    let p = |s: &str| parse_term(s).expect("relator syntax");
    for i in 1..=2u8 {
        push(format!("K{i} K{i}^-1 = 1"), p(&format!("K{i}*K{i}^-1 - 1")));
        push(format!("K{i}^-1 K{i} = 1"), p(&format!("K{i}^-1*K{i} - 1")));
    }
    for g in ["E1", "E2", "F1", "F2"] {
        push(format!("K1K2 central with {g}"), p(&format!("K1*K2*{g} - {g}*K1*K2")));
    }
    let frac = RatFun::v_pow(1).div(&RatFun::v_pow(1).sub(&RatFun::v_pow(-1))).expect("nonzero");
    for i in 1..=2u8 {
        for j in 1..=2u8 {
            let e = -c(i, j);
            push(format!("K{i} E{j} = v^{e} E{j} K{i}"), p(&format!("K{i}*E{j}*K{i}^-1 - v^{e}*E{j}")));
            let e = c(i, j);
            push(format!("K{i} F{j} = v^{e} F{j} K{i}"), p(&format!("K{i}*F{j}*K{i}^-1 - v^{e}*F{j}")));
            let br = p(&format!("E{i}*F{j} - F{j}*E{i}"));
            if i == j {
                let rhs = p(&format!("K{i} - K{i}^-1")).scale(&frac);
                push(format!("[E{i},F{i}] = v(K{i}-K{i}^-1)/(v-v^-1)"), br.sub(&rhs));
            } else {
                push(format!("[E{i},F{j}] = 0"), br);
            }
        }
    }
    for (i, j) in [(1u8, 2u8), (2, 1)] {
        for g in ["E", "F"] {
            let s: String = (0..=3)
                .map(|k| format!(" {} {g}{i}^({k})*{g}{j}*{g}{i}^({})", if k % 2 == 0 { "+" } else { "-" }, 3 - k))
                .collect();
            push(format!("Serre {g}({i},{j})"), p(&s[3..]));
        }
    }
    out
}

/// Verdict for one relator under `G`.
#[derive(Clone, Debug)]
pub struct HomCheck {
    pub relator: String,
    pub normal_form: LoopNormalForm,
}

impl HomCheck {
    pub fn holds(&self) -> bool {
        self.normal_form.is_zero()
    }
}

/// Normal forms of `G(r)` for every relator `r`.
pub fn verify_hom(relators: &[Relator], table: GTable, rw: &mut Rewriter) -> Result<Vec<HomCheck>> {
    relators
        .iter()
        .map(|r| {
            Ok(HomCheck {
                relator: r.name.clone(),
                normal_form: rw.normal_form(&map_g(&r.term, table)?)?,
            })
        })
        .collect()
}
