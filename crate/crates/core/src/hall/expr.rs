//! A small expression language for elements of the double.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | 'v^' int | '(' expr ')' | atom [sign]
//! atom   := '[' class ']' | 'one(' a ',' b ')' | 'tube(' r ')' | 'L(' n ')'
//!         | 'T(' r ')' | 'Theta(' r ')' | 'K(' a ',' b ')' | 'C(' halves ')'
//! ```
//!
//! A trailing `+` or `-` after an atom picks the wing; it is read as a sign
//! only when followed by `*`, `)`, another sign or the end of input.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{one_alpha, tube_one, DoubleElement, HallElement};
use crate::error::{Error, Result};
use crate::kronrep::{DimVec, IsoClass, KClass};
use crate::p1::{c_half, line_bundle, t_elem, theta_elem, Sign};
use crate::scalars::ScalarQ;

pub fn parse_double(s: &str, q: u32) -> Result<DoubleElement> {
    let mut p = P { s: s.as_bytes(), pos: 0, q };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected input"));
    }
    Ok(e)
}

struct P<'a> {
    s: &'a [u8],
    pos: usize,
    q: u32,
}

impl P<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, t: &str) -> bool {
        self.ws();
        if self.s[self.pos..].starts_with(t.as_bytes()) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{t}'")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse { pos: start, msg: "expected integer".into() })
    }

    fn uint(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.int()?;
        u32::try_from(n).map_err(|_| Error::Parse { pos: at, msg: "expected nonnegative integer".into() })
    }

    fn expr(&mut self) -> Result<DoubleElement> {
        let neg = self.eat("-");
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat("+") {
                acc = acc.add(&self.term()?);
            } else if self.eat("-") {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<DoubleElement> {
        let mut acc = self.factor()?;
        while self.eat("*") {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn scalar(&self, c: ScalarQ) -> DoubleElement {
        DoubleElement::one(self.q).scale(&c)
    }

    fn factor(&mut self) -> Result<DoubleElement> {
        let q = self.q;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                let d = if self.eat("/") { self.int()? } else { 1 };
                if d == 0 {
                    return Err(self.err("zero denominator"));
                }
                Ok(self.scalar(ScalarQ::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)), q)))
            }
            Some(b'v') => {
                self.pos += 1;
                let k = if self.eat("^") {
                    if self.eat("(") {
                        let k = self.int()?;
                        self.expect(")")?;
                        k
                    } else {
                        self.int()?
                    }
                } else {
                    1
                };
                Ok(self.scalar(ScalarQ::v_pow(k as i32, q)))
            }
            Some(b'[') => {
                self.pos += 1;
                let start = self.pos;
                let end = self.s[start..]
                    .iter()
                    .position(|&c| c == b']')
                    .map(|i| start + i)
                    .ok_or_else(|| self.err("unclosed '['"))?;
                let text = std::str::from_utf8(&self.s[start..end]).map_err(|_| self.err("bad utf-8"))?;
                let x = IsoClass::parse(text, q).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse { pos: start + pos, msg },
                    other => other,
                })?;
                self.pos = end + 1;
                let h = HallElement::class(x, q);
                Ok(self.wing(&h))
            }
            _ => self.named(),
        }
    }

    fn wing(&mut self, h: &HallElement) -> DoubleElement {
        match self.sign_suffix() {
            Sign::Plus => DoubleElement::plus(h),
            Sign::Minus => DoubleElement::minus(h),
        }
    }

    fn sign_suffix(&mut self) -> Sign {
        let save = self.pos;
        let s = match self.peek() {
            Some(b'+') => Sign::Plus,
            Some(b'-') => Sign::Minus,
            _ => return Sign::Plus,
        };
        self.pos += 1;
        match self.peek() {
            None | Some(b'*') | Some(b')') | Some(b'+') | Some(b'-') => s,
            _ => {
                self.pos = save;
                Sign::Plus
            }
        }
    }

    fn named(&mut self) -> Result<DoubleElement> {
        let q = self.q;
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("").to_string();
        if name.is_empty() {
            return Err(self.err("expected a factor"));
        }
        self.expect("(")?;
        let out = match name.as_str() {
            "one" | "K" => {
                let a = self.int()?;
                self.expect(",")?;
                let b = self.int()?;
                self.expect(")")?;
                if name == "K" {
                    return Ok(DoubleElement::k(KClass::new(a, b), q));
                }
                let (a, b) = (u32::try_from(a), u32::try_from(b));
                let (Ok(a), Ok(b)) = (a, b) else {
                    return Err(Error::Parse { pos: start, msg: "dimensions must be nonnegative".into() });
                };
                let h = one_alpha(DimVec::new(a, b), q);
                return Ok(self.wing(&h));
            }
            "C" => {
                let k = self.int()?;
                self.expect(")")?;
                return Ok(c_half(k, q));
            }
            "L" => {
                let n = self.int()?;
                self.expect(")")?;
                let s = self.sign_suffix();
                return Ok(line_bundle(n, s, q));
            }
            "tube" => {
                let r = self.uint()?;
                self.expect(")")?;
                tube_one(r, q)
            }
            "T" => {
                let r = self.uint()?;
                self.expect(")")?;
                t_elem(r, q)?
            }
            "Theta" => {
                let r = self.uint()?;
                self.expect(")")?;
                theta_elem(r, q)?
            }
            _ => return Err(Error::Parse { pos: start, msg: format!("unknown function {name}") }),
        };
        Ok(self.wing(&out))
    }
}
