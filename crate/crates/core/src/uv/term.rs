//! Words in the Drinfeld–Jimbo and loop generators with rational-function
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{quantum_factorial, RatFun};

/// One generator. `Ki(i, e)` is `K_i^e`; `C(k)` is `C^{k/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E(u8),
    F(u8),
    Ki(u8, i32),
    Xp(i64),
    Xm(i64),
    H(i64),
    K(i32),
    C(i32),
}

impl Letter {
    pub fn is_dj(&self) -> bool {
        matches!(self, Letter::E(_) | Letter::F(_) | Letter::Ki(..))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pow = |e: i32| if e == 1 { String::new() } else { format!("^{e}") };
        match self {
            Letter::E(i) => write!(f, "E{i}"),
            Letter::F(i) => write!(f, "F{i}"),
            Letter::Ki(i, e) => write!(f, "K{i}{}", pow(*e)),
            Letter::Xp(n) => write!(f, "X[{n}]+"),
            Letter::Xm(n) => write!(f, "X[{n}]-"),
            Letter::H(r) => write!(f, "H[{r}]"),
            Letter::K(e) => write!(f, "K{}", pow(*e)),
            Letter::C(k) if k % 2 == 0 => write!(f, "C{}", pow(k / 2)),
            Letter::C(k) => write!(f, "C^{{{k}/2}}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    DrinfeldJimbo,
    Loop,
}

pub type Word = Vec<Letter>;

/// A linear combination of words, all in one presentation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PresTerm {
    terms: BTreeMap<Word, RatFun>,
}

impl PresTerm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(vec![], RatFun::one())
    }

    pub fn scalar(c: RatFun) -> Self {
        Self::word(vec![], c)
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(vec![l], RatFun::one())
    }

    pub fn word(w: Word, c: RatFun) -> Self {
        let mut t = Self::zero();
        t.add_word(w, c);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFun)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The presentation of the letters used; `None` for scalars.
    pub fn presentation(&self) -> Option<Presentation> {
        let mut out = None;
        for l in self.terms.keys().flatten() {
            let p = if l.is_dj() { Presentation::DrinfeldJimbo } else { Presentation::Loop };
            out = Some(p);
        }
        out
    }

    pub fn add_word(&mut self, w: Word, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_word(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFun::from_int(-1))
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        let mut out = Self::zero();
        for (w, d) in &self.terms {
            out.add_word(w.clone(), d.mul(c));
        }
        out
    }

    /// Concatenation product; mixing presentations is an error.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.presentation(), o.presentation()) {
            if a != b {
                return Err(Error::Invalid("product mixes Drinfeld-Jimbo and loop letters".into()));
            }
        }
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `x^n / [n]!`
    pub fn divided_power(&self, n: u32) -> Result<Self> {
        Ok(self.pow(n)?.scale(&quantum_factorial(n).inv()?))
    }

    /// Applies a letterwise algebra map.
    pub fn substitute(&self, f: &dyn Fn(Letter) -> Result<PresTerm>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(c.clone());
            for l in w {
                acc = acc.mul(&f(*l)?)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

/// `ab - ba`
pub fn commutator(a: &PresTerm, b: &PresTerm) -> Result<PresTerm> {
    Ok(a.mul(b)?.sub(&b.mul(a)?))
}

impl fmt::Display for PresTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let letters: Vec<String> = w.iter().map(|l| l.to_string()).collect();
                if letters.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}) {}", letters.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Parser for the term language: `E1 F2 K1^-1`, `X[3]+ H[-2] C^{1/2}`,
/// `E1^(3)`, with `v^k`, rationals, `*`, `+`, `-` and parentheses.
pub fn parse_term(s: &str) -> Result<PresTerm> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let t = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected input"));
    }
    Ok(t)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos] == b'-' || self.s[self.pos] == b'+') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| {
                let e = Error::Parse { pos: start, msg: "expected an integer".into() };
                self.pos = start;
                e
            })
    }

    fn expr(&mut self) -> Result<PresTerm> {
        let mut acc = if self.eat(b'-') { self.product()?.neg() } else { self.product()? };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.product()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<PresTerm> {
        let mut acc = self.factor()?;
        loop {
            self.eat(b'*');
            match self.peek() {
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// `^e`, `^(e)` divided power, `^{k/2}` for `C`; returns (exponent,
    /// divided, half-denominator).
    fn exponent(&mut self) -> Result<Option<(i64, bool, bool)>> {
        if !self.eat(b'^') {
            return Ok(None);
        }
        if self.eat(b'(') {
            let e = self.int()?;
            self.expect(b')')?;
            return Ok(Some((e, true, false)));
        }
        if self.eat(b'{') {
            let e = self.int()?;
            let half = if self.eat(b'/') {
                if self.int()? != 2 {
                    return Err(self.err("only halves are supported"));
                }
                true
            } else {
                false
            };
            self.expect(b'}')?;
            return Ok(Some((e, false, half)));
        }
        Ok(Some((self.int()?, false, false)))
    }

    fn factor(&mut self) -> Result<PresTerm> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        let base = if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(b')')?;
            e
        } else if c.is_ascii_digit() {
            let n = self.int()?;
            let d = if self.eat(b'/') { self.int()? } else { 1 };
            if d == 0 {
                return Err(self.err("zero denominator"));
            }
            PresTerm::scalar(RatFun::from_rational(num_rational::BigRational::new(n.into(), d.into())))
        } else {
            self.pos += 1;
            match c {
                b'v' => PresTerm::scalar(RatFun::v_pow(1)),
                b'E' | b'F' => {
                    let i = self.int()?;
                    if i != 1 && i != 2 {
                        return Err(self.err("index must be 1 or 2"));
                    }
                    PresTerm::letter(if c == b'E' { Letter::E(i as u8) } else { Letter::F(i as u8) })
                }
                b'K' => match self.s.get(self.pos) {
                    Some(b'1') | Some(b'2') => {
                        let i = self.s[self.pos] - b'0';
                        self.pos += 1;
                        PresTerm::letter(Letter::Ki(i, 1))
                    }
                    _ => PresTerm::letter(Letter::K(1)),
                },
                b'C' => PresTerm::letter(Letter::C(2)),
                b'X' | b'H' => {
                    self.expect(b'[')?;
                    let n = self.int()?;
                    self.expect(b']')?;
                    if c == b'H' {
                        if n == 0 {
                            return Err(self.err("H[0] is not a generator"));
                        }
                        PresTerm::letter(Letter::H(n))
                    } else if self.eat(b'+') {
                        PresTerm::letter(Letter::Xp(n))
                    } else if self.eat(b'-') {
                        PresTerm::letter(Letter::Xm(n))
                    } else {
                        return Err(self.err("expected '+' or '-' after X[n]"));
                    }
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.err("unknown symbol"));
                }
            }
        };
        let Some((e, divided, half)) = self.exponent()? else {
            return Ok(base);
        };
        // single group-like letters take arbitrary integer exponents
        if let Some((w, _)) = base.terms().next().filter(|_| base.len() == 1) {
            if let [l] = w.as_slice() {
                match l {
                    Letter::Ki(i, _) if !divided && !half => return Ok(PresTerm::letter(Letter::Ki(*i, e as i32))),
                    Letter::K(_) if !divided && !half => return Ok(PresTerm::letter(Letter::K(e as i32))),
                    Letter::C(_) if !divided => {
                        return Ok(PresTerm::letter(Letter::C(if half { e as i32 } else { 2 * e as i32 })))
                    }
                    _ => {}
                }
            }
            if w.is_empty() && !divided && !half {
                let c = base.terms().next().unwrap().1.pow(e as i32)?;
                return Ok(PresTerm::scalar(c));
            }
        }
        if half || e < 0 {
            return Err(self.err("invalid exponent"));
        }
        if divided {
            base.divided_power(e as u32)
        } else {
            base.pow(e as u32)
        }
    }
}
