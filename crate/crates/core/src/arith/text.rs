//! Canonical text and JSON forms of [`LaurentPoly`].
//!
//! Text: terms in descending `(e1, e2)` order joined by ` + ` / ` - `; unit
//! coefficients are omitted, `ζ` prints as `i`, coefficients with both a real
//! and an imaginary part are parenthesized: `(1/2+3/2*i)*t1^-1*t2`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::gauss::{fmt_q, fmt_q_full, GaussianRational, Q};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

fn monomial_text(e1: i32, e2: i32) -> String {
    let var = |name: &str, e: i32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [var("t1", e1), var("t2", e2)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// Splits a coefficient into a sign and the text of its magnitude
/// (empty magnitude means 1).
fn coeff_text(c: &GaussianRational) -> (bool, String) {
    let one = Q::from_integer(1);
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let a = c.re.abs();
        return (neg, if a == one { String::new() } else { fmt_q(&a) });
    }
    if c.re.is_zero() {
        let neg = c.im.is_negative();
        let a = c.im.abs();
        return (neg, if a == one { "i".into() } else { format!("{}*i", fmt_q(&a)) });
    }
    (false, format!("({c})"))
}

/// Canonical text of `p`; `"0"` for the zero polynomial.
pub fn emit_canonical(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, ((e1, e2), c)) in p.terms().iter().rev().enumerate() {
        let (neg, mag) = coeff_text(c);
        let mono = monomial_text(*e1, *e2);
        let body = match (mag.is_empty(), mono.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => mono,
            (false, true) => mag,
            (false, false) => format!("{mag}*{mono}"),
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
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

    fn integer(&mut self) -> Result<i128> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos] == b'-' || self.s[self.pos] == b'+') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse::<i128>().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            let neg = if self.eat(b'-') {
                true
            } else {
                if !self.eat(b'+') && !first {
                    break;
                }
                false
            };
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
            match self.peek() {
                Some(b'+') | Some(b'-') => continue,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(p)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(LaurentPoly::zeta())
            }
            Some(b't') => {
                self.pos += 1;
                let var = match self.s.get(self.pos) {
                    Some(b'1') => 1,
                    Some(b'2') => 2,
                    _ => return Err(self.err("expected t1 or t2")),
                };
                self.pos += 1;
                let e = if self.eat(b'^') { self.integer()? } else { 1 };
                let e = i32::try_from(e).map_err(|_| self.err("exponent out of range"))?;
                Ok(if var == 1 { LaurentPoly::mono(e, 0) } else { LaurentPoly::mono(0, e) })
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.integer()?
                } else {
                    1
                };
                if den == 0 {
                    return Err(self.err("zero denominator"));
                }
                Ok(LaurentPoly::constant(GaussianRational::new(Q::new(num, den), Q::zero())))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Parses the canonical text form (and any sum of products of numbers, `i`,
/// `t1^k`, `t2^k` and parenthesized sub-expressions).
pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let out = p.poly()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonTerm {
    pub e1: i32,
    pub e2: i32,
    pub re: String,
    pub im: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonPoly {
    pub terms: Vec<JsonTerm>,
}

fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i128>().map_err(|_| bad())?, d.trim().parse::<i128>().map_err(|_| bad())?),
        None => (s.trim().parse::<i128>().map_err(|_| bad())?, 1),
    };
    if d == 0 {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// JSON form, terms in canonical (descending) order.
pub fn to_json(p: &LaurentPoly) -> JsonPoly {
    JsonPoly {
        terms: p
            .terms()
            .iter()
            .rev()
            .map(|((e1, e2), c)| JsonTerm { e1: *e1, e2: *e2, re: fmt_q_full(&c.re), im: fmt_q_full(&c.im) })
            .collect(),
    }
}

pub fn from_json(j: &JsonPoly) -> Result<LaurentPoly> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        terms.push(((t.e1, t.e2), GaussianRational::new(parse_q(&t.re)?, parse_q(&t.im)?)));
    }
    Ok(LaurentPoly::from_terms(terms))
}
