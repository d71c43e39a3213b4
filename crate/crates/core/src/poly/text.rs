//! Canonical text form of polynomials and a small expression parser.
//!
//! Terms are printed in descending powers, e.g. `z^6 + (-7/4)*z^3 + 1/2`.
//! The parser accepts the printed grammar plus ordinary arithmetic over
//! `+ - * / ^` and parentheses, where division is only by nonzero constants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{BiPoly, RatPoly};
use crate::arith::{write_rational, BigRational};
use crate::error::{Error, Result};

fn monomial(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => String::from(var),
        _ => format!("{var}^{k}"),
    }
}

fn push_term(out: &mut String, neg: bool, body: &str) {
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    out.push_str(body);
}

/// Body and sign of a term whose coefficient is a rational constant.
fn rational_term(q: &BigRational, mon: &str) -> (bool, String) {
    let mut body = String::new();
    if mon.is_empty() {
        write_rational(&mut body, &q.abs());
        return (q.is_negative(), body);
    }
    if q.abs().is_one() {
        return (q.is_negative(), String::from(mon));
    }
    if q.is_integer() {
        write_rational(&mut body, &q.abs());
        body.push('*');
        body.push_str(mon);
        return (q.is_negative(), body);
    }
    body.push('(');
    write_rational(&mut body, q);
    body.push_str(")*");
    body.push_str(mon);
    (false, body)
}

pub(crate) fn render(p: &RatPoly, var: &str) -> String {
    let mut out = String::new();
    for (k, q) in p.coeffs().iter().enumerate().rev() {
        if q.is_zero() {
            continue;
        }
        let (neg, body) = rational_term(q, &monomial(var, k));
        push_term(&mut out, neg, &body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn render_bivariate(p: &BiPoly, zvar: &str, cvar: &str) -> String {
    let mut out = String::new();
    for (k, coeff) in p.coeffs().iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        let mon = monomial(zvar, k);
        let (neg, body) = if coeff.is_constant() {
            rational_term(&coeff.coeffs()[0], &mon)
        } else {
            let nonzero: Vec<(usize, &BigRational)> = coeff
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .collect();
            let mut body;
            let mut neg = false;
            if let [(j, q)] = nonzero[..] {
                if q.abs().is_one() {
                    neg = q.is_negative();
                    body = monomial(cvar, j);
                } else {
                    body = format!("({})", render(coeff, cvar));
                }
            } else {
                body = format!("({})", render(coeff, cvar));
            }
            if !mon.is_empty() {
                body.push('*');
                body.push_str(&mon);
            }
            (neg, body)
        };
        push_term(&mut out, neg, &body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Sparse polynomial in (z, c) used while parsing; key = (z-degree, c-degree).
type Sparse = BTreeMap<(usize, usize), BigRational>;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            tokens.push(Token::Int(digits.parse().expect("ascii digits")));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            tokens.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            tokens.push(Token::Sym(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {ch:?}")));
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    zvar: &'a str,
    cvar: Option<&'a str>,
}

fn constant(q: BigRational) -> Sparse {
    let mut m = Sparse::new();
    if !q.is_zero() {
        m.insert((0, 0), q);
    }
    m
}

fn add_into(acc: &mut Sparse, other: Sparse, sign: bool) {
    for (k, v) in other {
        let entry = acc.entry(k).or_insert_with(BigRational::zero);
        if sign {
            *entry += v;
        } else {
            *entry -= v;
        }
        if entry.is_zero() {
            acc.remove(&k);
        }
    }
}

fn mul_sparse(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for ((i1, j1), x) in a {
        for ((i2, j2), y) in b {
            let key = (i1 + i2, j1 + j2);
            let entry = out.entry(key).or_insert_with(BigRational::zero);
            *entry += x * y;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

fn as_constant(a: &Sparse) -> Option<BigRational> {
    match a.len() {
        0 => Some(BigRational::zero()),
        1 => a.get(&(0, 0)).cloned(),
        _ => None,
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, sym: char) -> bool {
        if self.peek() == Some(&Token::Sym(sym)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = Sparse::new();
        let mut sign = if self.eat('-') {
            false
        } else {
            self.eat('+');
            true
        };
        loop {
            let t = self.term()?;
            add_into(&mut acc, t, sign);
            if self.eat('+') {
                sign = true;
            } else if self.eat('-') {
                sign = false;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let rhs = self.power()?;
                acc = mul_sparse(&acc, &rhs);
            } else if self.eat('/') {
                let rhs = self.power()?;
                let d = as_constant(&rhs)
                    .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
                if d.is_zero() {
                    return Err(Error::Parse("division by zero".into()));
                }
                let inv = constant(d.recip());
                acc = mul_sparse(&acc, &inv);
            } else if matches!(self.peek(), Some(Token::Ident(_)) | Some(Token::Sym('('))) {
                let rhs = self.power()?;
                acc = mul_sparse(&acc, &rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.tokens.get(self.pos) {
            Some(Token::Int(n)) => {
                self.pos += 1;
                u32::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?
            }
            _ => return Err(Error::Parse("expected integer exponent".into())),
        };
        let mut acc = constant(BigRational::one());
        for _ in 0..e {
            acc = mul_sparse(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Sparse> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(constant(BigRational::from_integer(n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let key = if name == self.zvar {
                    (1, 0)
                } else if Some(name.as_str()) == self.cvar {
                    (0, 1)
                } else {
                    return Err(Error::Parse(format!("unknown variable {name:?}")));
                };
                let mut m = Sparse::new();
                m.insert(key, BigRational::one());
                Ok(m)
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            Some(Token::Sym('-')) => {
                self.pos += 1;
                let inner = self.power()?;
                let mut out = Sparse::new();
                add_into(&mut out, inner, false);
                Ok(out)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_sparse(s: &str, zvar: &str, cvar: Option<&str>) -> Result<Sparse> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        zvar,
        cvar,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            parser.pos
        )));
    }
    Ok(value)
}

pub(crate) fn parse_univariate(s: &str, var: &str) -> Result<RatPoly> {
    let sparse = parse_sparse(s, var, None)?;
    let deg = sparse.keys().map(|k| k.0).max().unwrap_or(0);
    let mut coeffs = alloc::vec![BigRational::zero(); deg + 1];
    for ((k, _), v) in sparse {
        coeffs[k] = v;
    }
    Ok(RatPoly::from_coeffs(coeffs))
}

pub(crate) fn parse_bivariate(s: &str, zvar: &str, cvar: &str) -> Result<BiPoly> {
    let sparse = parse_sparse(s, zvar, Some(cvar))?;
    let zdeg = sparse.keys().map(|k| k.0).max().unwrap_or(0);
    let mut rows: Vec<Vec<BigRational>> = alloc::vec![Vec::new(); zdeg + 1];
    for ((i, j), v) in sparse {
        let row = &mut rows[i];
        if row.len() <= j {
            row.resize(j + 1, BigRational::zero());
        }
        row[j] = v;
    }
    Ok(BiPoly::from_coeffs(
        rows.into_iter().map(RatPoly::from_coeffs).collect(),
    ))
}
