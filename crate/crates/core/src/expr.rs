//! A small expression language for operations.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := "-" unary | atom
//! atom   := number | "psi(" int ")" | "sigma(" int ")" | list | "(" expr ")"
//! number := int | int "/" int
//! list   := "[" (entry ("," entry)*)? "]"     entry: number, optionally quoted
//! ```
//!
//! Numbers stand for multiples of the identity operation. `*` between a
//! number and an operation scales; between two operations it composes
//! (pointwise product of eigenvalues).

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{from_bigint, parse_rational};
use crate::stirling::{factorial, stirling2};

/// Where an expression is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Context {
    pub truncation: usize,
    /// Index stride: `psi(k)` evaluates to `k^(stride*j)`. `1` for ordinary
    /// sequences, `p - 1` for Adams-summand sequences.
    pub stride: usize,
}

impl Context {
    pub fn new(truncation: usize) -> Self {
        Self { truncation, stride: 1 }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Scalar(BigRational),
    Seq(Vec<BigRational>),
}

impl Value {
    fn into_seq(self, n: usize) -> Vec<BigRational> {
        match self {
            Value::Seq(v) => v,
            Value::Scalar(c) => vec![c; n + 1],
        }
    }
}

/// Evaluates an expression to a sequence of length `truncation + 1`.
///
/// A list shorter than that is a capacity error; a longer one is truncated.
pub fn evaluate(src: &str, ctx: Context) -> Result<Vec<BigRational>> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, ctx };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v.into_seq(ctx.truncation))
}

/// Length minus one of the longest list literal, if any; a default
/// truncation for expressions containing lists.
pub fn list_truncation(src: &str) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut depth_start = None;
    let mut commas = 0usize;
    let mut nonempty = false;
    for (i, c) in src.char_indices() {
        match c {
            '[' => {
                depth_start = Some(i);
                commas = 0;
                nonempty = false;
            }
            ',' if depth_start.is_some() => commas += 1,
            ']' => {
                if depth_start.take().is_some() && nonempty {
                    best = Some(best.map_or(commas, |b| b.max(commas)));
                }
            }
            c if depth_start.is_some() && !c.is_whitespace() => nonempty = true,
            _ => {}
        }
    }
    best
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: Context,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
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
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = self.combine(acc, rhs, |a, b| a + b);
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = self.combine(acc, rhs, |a, b| a - b);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let rhs = self.unary()?;
            acc = self.combine(acc, rhs, |a, b| a * b);
        }
        Ok(acc)
    }

    fn combine(&self, a: Value, b: Value, op: fn(&BigRational, &BigRational) -> BigRational) -> Value {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(op(&x, &y)),
            (a, b) => {
                let n = self.ctx.truncation;
                let (a, b) = (a.into_seq(n), b.into_seq(n));
                Value::Seq(a.iter().zip(&b).map(|(x, y)| op(x, y)).collect())
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat(b'-') {
            return Ok(match self.unary()? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Seq(v) => Value::Seq(v.into_iter().map(|x| -x).collect()),
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'[') => self.list(),
            Some(c) if c.is_ascii_digit() => Ok(Value::Scalar(self.number()?)),
            Some(c) if c.is_ascii_alphabetic() => self.call(),
            _ => Err(self.error("expected a number, list, psi(k) or sigma(n)")),
        }
    }

    fn number(&mut self) -> Result<BigRational> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos > s
        };
        if !digits(self) {
            return Err(self.error("expected digits"));
        }
        let save = self.pos;
        if self.eat(b'/') {
            self.skip_ws();
            if !digits(self) {
                self.pos = save;
                return Err(self.error("expected a denominator"));
            }
        }
        let text: String = String::from_utf8_lossy(&self.src[start..self.pos]).split_whitespace().collect();
        parse_rational(&text)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: i64 = text.parse().map_err(|_| self.error("expected an integer"))?;
        Ok(if neg { -v } else { v })
    }

    fn call(&mut self) -> Result<Value> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        self.expect(b'(')?;
        let arg = self.signed_int()?;
        self.expect(b')')?;
        let n = self.ctx.truncation;
        let stride = self.ctx.stride;
        match name.as_str() {
            "psi" => {
                let k = BigRational::from_integer(arg.into());
                let mut v = Vec::with_capacity(n + 1);
                let step = num_traits::pow(k, stride);
                let mut power = BigRational::one();
                for _ in 0..=n {
                    v.push(power.clone());
                    power *= &step;
                }
                Ok(Value::Seq(v))
            }
            "sigma" => {
                let k = usize::try_from(arg).map_err(|_| self.error("sigma index must be nonnegative"))?;
                let f = factorial(k);
                Ok(Value::Seq((0..=n).map(|j| from_bigint(&f * stirling2(stride * j, k))).collect()))
            }
            _ => Err(self.error(&format!("unknown function `{name}`"))),
        }
    }

    fn list(&mut self) -> Result<Value> {
        self.expect(b'[')?;
        let mut entries = Vec::new();
        if !self.eat(b']') {
            loop {
                let quoted = self.eat(b'"');
                let start = self.pos;
                while self.pos < self.src.len() && !matches!(self.src[self.pos], b',' | b']' | b'"') {
                    self.pos += 1;
                }
                let text = String::from_utf8_lossy(&self.src[start..self.pos]).trim().to_string();
                if quoted {
                    self.expect(b'"')?;
                }
                entries.push(parse_rational(&text)?);
                if self.eat(b']') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        let n = self.ctx.truncation;
        if entries.len() < n + 1 {
            return Err(Error::Capacity(format!(
                "list has {} entries but truncation {n} needs {}",
                entries.len(),
                n + 1
            )));
        }
        entries.truncate(n + 1);
        Ok(Value::Seq(entries))
    }
}

/// Reads a JSON-style array of integers or rational strings.
pub fn parse_sequence(values: &[String]) -> Result<Vec<BigRational>> {
    if values.is_empty() {
        return Err(Error::Empty);
    }
    values.iter().map(|s| parse_rational(s)).collect()
}
