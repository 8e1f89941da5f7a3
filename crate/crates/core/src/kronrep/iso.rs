//! Isomorphism classes of Kronecker representations.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::classes::{DimVec, KClass};
use crate::error::{Error, Result};
use crate::fq::{ClosedPoint, FqPoly};

/// An indecomposable representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indec {
    /// Preprojective `P_n`, dimension `(n, n+1)`.
    P(u32),
    /// Preinjective `I_n`, dimension `(n+1, n)`.
    I(u32),
    /// Tube module `T_{t, x}`, dimension `(t deg x, t deg x)`.
    T(ClosedPoint, u32),
}

impl Indec {
    pub fn dim(&self) -> DimVec {
        match self {
            Indec::P(n) => DimVec::new(*n, n + 1),
            Indec::I(n) => DimVec::new(n + 1, *n),
            Indec::T(x, t) => {
                let d = t * x.degree() as u32;
                DimVec::new(d, d)
            }
        }
    }

    /// Degree over `F_q` of the residue field of its endomorphism ring.
    pub fn top_degree(&self) -> u32 {
        match self {
            Indec::T(x, _) => x.degree() as u32,
            _ => 1,
        }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indec::P(n) => write!(f, "P{n}"),
            Indec::I(n) => write!(f, "I{n}"),
            Indec::T(ClosedPoint::Infinity, t) => write!(f, "T{t}(inf)"),
            Indec::T(ClosedPoint::Finite(p), t) => {
                let c: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                write!(f, "T{t}({})", c.join(","))
            }
        }
    }
}

/// Multiplicities of `P_n` and `I_n` and a partition per closed point.
/// The derived order is the canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IsoClass {
    pub p: BTreeMap<u32, u32>,
    pub i: BTreeMap<u32, u32>,
    /// Partitions sorted descending.
    pub r: BTreeMap<ClosedPoint, Vec<u32>>,
}

impl IsoClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_empty() && self.i.is_empty() && self.r.is_empty()
    }

    pub fn indec(x: &Indec) -> Self {
        let mut c = Self::zero();
        c.add_indec(x, 1);
        c
    }

    pub fn preproj(n: u32) -> Self {
        Self::indec(&Indec::P(n))
    }

    pub fn preinj(n: u32) -> Self {
        Self::indec(&Indec::I(n))
    }

    pub fn tube(x: ClosedPoint, t: u32) -> Self {
        Self::indec(&Indec::T(x, t))
    }

    /// The simple at vertex 1, `I_0`.
    pub fn s1() -> Self {
        Self::preinj(0)
    }

    /// The simple at vertex 2, `P_0`.
    pub fn s2() -> Self {
        Self::preproj(0)
    }

    pub fn add_indec(&mut self, x: &Indec, m: u32) {
        if m == 0 {
            return;
        }
        match x {
            Indec::P(n) => *self.p.entry(*n).or_default() += m,
            Indec::I(n) => *self.i.entry(*n).or_default() += m,
            Indec::T(pt, t) => {
                let parts = self.r.entry(pt.clone()).or_default();
                parts.extend(std::iter::repeat(*t).take(m as usize));
                parts.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut c = self.clone();
        for (x, m) in o.summands() {
            c.add_indec(&x, m);
        }
        c
    }

    /// `X^{⊕n}`
    pub fn power(&self, n: u32) -> Self {
        (0..n).fold(Self::zero(), |acc, _| acc.direct_sum(self))
    }

    /// Indecomposable summands with multiplicities, in canonical order.
    pub fn summands(&self) -> Vec<(Indec, u32)> {
        let mut out: Vec<(Indec, u32)> = Vec::new();
        for (&n, &m) in &self.p {
            out.push((Indec::P(n), m));
        }
        for (&n, &m) in &self.i {
            out.push((Indec::I(n), m));
        }
        for (pt, parts) in &self.r {
            let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
            for &t in parts {
                *counts.entry(t).or_default() += 1;
            }
            for (t, m) in counts {
                out.push((Indec::T(pt.clone(), t), m));
            }
        }
        out
    }

    pub fn dim(&self) -> DimVec {
        self.summands()
            .iter()
            .fold(DimVec::default(), |acc, (x, m)| {
                let d = x.dim();
                DimVec::new(acc.d1 + m * d.d1, acc.d2 + m * d.d2)
            })
    }

    pub fn class(&self) -> KClass {
        self.dim().class()
    }

    pub fn is_regular(&self) -> bool {
        self.p.is_empty() && self.i.is_empty()
    }

    pub fn is_indecomposable(&self) -> bool {
        let s = self.summands();
        s.len() == 1 && s[0].1 == 1
    }

    /// Parses `S1`, `S2`, `P<n>`, `I<n>`, `T<t>(inf)`, `T<t>(c0,c1,...)`,
    /// optionally prefixed by a multiplicity and joined by `+`; `0` is the
    /// zero class.
    pub fn parse(s: &str, q: u32) -> Result<Self> {
        let mut c = Self::zero();
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(c);
        }
        let mut offset = 0;
        for part in split_top_level(s) {
            let (mult, x) = parse_summand(part.trim(), q).map_err(|msg| Error::Parse {
                pos: offset,
                msg,
            })?;
            c.add_indec(&x, mult);
            offset += part.len() + 1;
        }
        Ok(c)
    }

    pub fn from_json(v: &Value, q: u32) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("iso class json: {m}"));
        let obj = v.as_object().ok_or_else(|| bad("not an object"))?;
        let mut c = Self::zero();
        for (key, ctor) in [("P", Indec::P as fn(u32) -> Indec), ("I", Indec::I)] {
            if let Some(m) = obj.get(key) {
                for (n, mult) in m.as_object().ok_or_else(|| bad(key))? {
                    let n: u32 = n.parse().map_err(|_| bad("index"))?;
                    let mult = mult.as_u64().ok_or_else(|| bad("multiplicity"))? as u32;
                    c.add_indec(&ctor(n), mult);
                }
            }
        }
        if let Some(rs) = obj.get("R") {
            for entry in rs.as_array().ok_or_else(|| bad("R"))? {
                let pt = entry.get("point").ok_or_else(|| bad("point"))?;
                let pt = ClosedPoint::from_json(pt.clone(), q).map_err(|e| bad(&e.to_string()))?;
                let parts = entry
                    .get("partition")
                    .and_then(|p| p.as_array())
                    .ok_or_else(|| bad("partition"))?;
                for t in parts {
                    let t = t.as_u64().ok_or_else(|| bad("part"))? as u32;
                    c.add_indec(&Indec::T(pt.clone(), t), 1);
                }
            }
        }
        Ok(c)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_summand(s: &str, q: u32) -> std::result::Result<(u32, Indec), String> {
    let digits = s.chars().take_while(|c| c.is_ascii_digit()).count();
    let mult = if digits > 0 {
        s[..digits].parse().map_err(|_| format!("bad multiplicity in {s}"))?
    } else {
        1
    };
    let body = s[digits..].trim();
    let num = |t: &str| -> std::result::Result<u32, String> {
        t.parse().map_err(|_| format!("bad index in {s}"))
    };
    let x = match body.chars().next() {
        Some('S') => match &body[1..] {
            "1" => Indec::I(0),
            "2" => Indec::P(0),
            _ => return Err(format!("unknown simple {body}")),
        },
        Some('P') => Indec::P(num(&body[1..])?),
        Some('I') => Indec::I(num(&body[1..])?),
        Some('T') => {
            let open = body.find('(').ok_or_else(|| format!("missing point in {body}"))?;
            if !body.ends_with(')') {
                return Err(format!("missing ')' in {body}"));
            }
            let t = num(&body[1..open])?;
            if t == 0 {
                return Err("tube length must be positive".into());
            }
            let inner = body[open + 1..body.len() - 1].trim();
            let pt = if inner == "inf" {
                ClosedPoint::Infinity
            } else {
                let coeffs: std::result::Result<Vec<u8>, _> =
                    inner.split(',').map(|c| c.trim().parse::<u8>()).collect();
                let coeffs = coeffs.map_err(|_| format!("bad point {inner}"))?;
                let p = FqPoly::new(coeffs, q);
                if p.degree().unwrap_or(0) == 0 || p.lead() != 1 || p.factor() != vec![(p.clone(), 1)] {
                    return Err(format!("point {inner} is not monic irreducible"));
                }
                ClosedPoint::Finite(p)
            };
            Indec::T(pt, t)
        }
        _ => return Err(format!("unknown summand {s}")),
    };
    Ok((mult, x))
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands()
            .iter()
            .map(|(x, m)| if *m == 1 { x.to_string() } else { format!("{m}{x}") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

struct RegularEntry<'a> {
    point: &'a ClosedPoint,
    partition: &'a [u32],
}

impl Serialize for RegularEntry<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("point", self.point)?;
        m.serialize_entry("partition", self.partition)?;
        m.end()
    }
}

impl Serialize for IsoClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        // integer map keys become JSON strings
        m.serialize_entry("P", &self.p)?;
        m.serialize_entry("I", &self.i)?;
        let regs: Vec<RegularEntry> = self
            .r
            .iter()
            .map(|(point, parts)| RegularEntry { point, partition: parts })
            .collect();
        m.serialize_entry("R", &regs)?;
        m.end()
    }
}
