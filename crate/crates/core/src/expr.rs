//! Mini-grammar for representation expressions.
//!
//! Atoms: `V<n>` (su(2) irreducible), `triv`, `w(<ints>)` (torus weight
//! pair). Operators: `+`, tensor as `⊗` or `*`, `sym2(..)`, `alt2(..)`,
//! optional integer multiplicity prefixes like `2V1`. A query suffix
//! `:inv`, `:fs` or `:dim` asks for a scalar instead of a decomposition.

use crate::rep::{self, FrobeniusSchur, Su2Rep};
use crate::weights::{TorusRep, WeightVector};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at position {pos}: {msg}")]
pub struct ExprError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError {
        pos,
        msg: msg.into(),
    })
}

/// A representation value: su(2), torus, or a pile of trivial summands not
/// yet committed to either category.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Su2(Su2Rep),
    Torus(TorusRep),
    Neutral(u32),
}

impl Value {
    pub fn dim(&self) -> u64 {
        match self {
            Value::Su2(r) => r.dim(),
            Value::Torus(r) => r.dim_real(),
            Value::Neutral(m) => *m as u64,
        }
    }

    pub fn invariant_multiplicity(&self) -> u32 {
        match self {
            Value::Su2(r) => r.invariant_multiplicity(),
            Value::Torus(r) => r.invariant_multiplicity(),
            Value::Neutral(m) => *m,
        }
    }

    fn into_su2(self) -> Option<Su2Rep> {
        match self {
            Value::Su2(r) => Some(r),
            Value::Neutral(m) => Some(Su2Rep::from_pairs(&[(0, m)])),
            Value::Torus(_) => None,
        }
    }

    fn into_torus(self) -> Option<TorusRep> {
        match self {
            Value::Torus(r) => Some(r),
            Value::Neutral(m) => Some(TorusRep::trivial(m)),
            Value::Su2(_) => None,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::Su2(r) => r.render(),
            Value::Torus(r) => r.render(),
            Value::Neutral(m) => Value::Su2(Su2Rep::from_pairs(&[(0, *m)])).render(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Query {
    Plain,
    Inv,
    Fs,
    Dim,
}

#[derive(Clone, Debug, PartialEq)]
pub enum EvalOutput {
    Rep(Value),
    Count(u32),
    Fs(FrobeniusSchur),
    Dim(u64),
}

/// Parses and evaluates a full query string.
pub fn eval_query(input: &str) -> Result<EvalOutput, ExprError> {
    let (expr_part, query) = split_query(input)?;
    let value = eval_expr(expr_part)?;
    match query {
        Query::Plain => Ok(EvalOutput::Rep(value)),
        Query::Inv => Ok(EvalOutput::Count(value.invariant_multiplicity())),
        Query::Dim => Ok(EvalOutput::Dim(value.dim())),
        Query::Fs => match &value {
            Value::Su2(r) => match r.as_single_irreducible() {
                Some(n) => Ok(EvalOutput::Fs(rep::frobenius_schur(n))),
                None => err(
                    input.len(),
                    "Frobenius-Schur type is defined for a single irreducible",
                ),
            },
            Value::Neutral(1) => Ok(EvalOutput::Fs(rep::frobenius_schur(0))),
            _ => err(
                input.len(),
                "Frobenius-Schur type is defined for a single su(2) irreducible",
            ),
        },
    }
}

/// Parses and evaluates the expression part only.
pub fn eval_expr(input: &str) -> Result<Value, ExprError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return err(p.current_pos(), "unexpected trailing input");
    }
    Ok(v)
}

fn split_query(input: &str) -> Result<(&str, Query), ExprError> {
    match input.rfind(':') {
        None => Ok((input, Query::Plain)),
        Some(i) => {
            let q = input[i + 1..].trim();
            let query = match q {
                "inv" => Query::Inv,
                "fs" => Query::Fs,
                "dim" => Query::Dim,
                other => return err(i + 1, format!("unknown query suffix {other:?}")),
            };
            Ok((&input[..i], query))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u32),
    V(u32),
    Triv,
    W,
    Sym2,
    Alt2,
    Plus,
    Tensor,
    LParen,
    RParen,
    Comma,
    SignedInt(i64),
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((at, Tok::Plus));
                i += 1;
            }
            '*' | '⊗' => {
                out.push((at, Tok::Tensor));
                i += 1;
            }
            '(' => {
                out.push((at, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((at, Tok::RParen));
                i += 1;
            }
            ',' => {
                out.push((at, Tok::Comma));
                i += 1;
            }
            '-' | '0'..='9' => {
                let neg = c == '-';
                let mut j = if neg { i + 1 } else { i };
                let start = j;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                if j == start {
                    return err(at, "expected digits");
                }
                let digits: String = chars[start..j].iter().map(|&(_, c)| c).collect();
                let n: i64 = digits.parse().map_err(|_| ExprError {
                    pos: at,
                    msg: "integer too large".into(),
                })?;
                if neg {
                    out.push((at, Tok::SignedInt(-n)));
                } else {
                    out.push((at, Tok::Int(n as u32)));
                }
                i = j;
            }
            'V' | 'v' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return err(at, "expected a label after V");
                }
                let digits: String = chars[i + 1..j].iter().map(|&(_, c)| c).collect();
                let n: u32 = digits.parse().map_err(|_| ExprError {
                    pos: at,
                    msg: "label too large".into(),
                })?;
                out.push((at, Tok::V(n)));
                i = j;
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_ascii_alphanumeric()) {
                    j += 1;
                }
                let word: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                let tok = match word.as_str() {
                    "triv" => Tok::Triv,
                    "w" => Tok::W,
                    "sym2" => Tok::Sym2,
                    "alt2" => Tok::Alt2,
                    other => return err(at, format!("unknown atom {other:?}")),
                };
                out.push((at, tok));
                i = j;
            }
            other => return err(at, format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

impl Parser {
    fn current_pos(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(p, _)| p)
            .unwrap_or_else(|| self.tokens.last().map(|&(p, _)| p + 1).unwrap_or(0))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ExprError> {
        let at = self.current_pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => err(at, format!("expected {what}")),
        }
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            let rhs = self.term()?;
            acc = add_values(acc, rhs, self.current_pos())?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Tensor) {
            self.bump();
            let rhs = self.factor()?;
            acc = tensor_values(acc, rhs, self.current_pos())?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, ExprError> {
        // optional multiplicity prefix
        if let Some(&Tok::Int(m)) = self.peek() {
            self.bump();
            let at = self.current_pos();
            let v = self.atom()?;
            return scale_value(v, m, at);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Value, ExprError> {
        let at = self.current_pos();
        match self.bump() {
            Some(Tok::V(n)) => Ok(Value::Su2(Su2Rep::irreducible(n))),
            Some(Tok::Triv) => Ok(Value::Neutral(1)),
            Some(Tok::W) => {
                self.expect(Tok::LParen, "( after w")?;
                let mut comps = Vec::new();
                loop {
                    let at2 = self.current_pos();
                    match self.bump() {
                        Some(Tok::Int(n)) => comps.push(n as i64),
                        Some(Tok::SignedInt(n)) => comps.push(n),
                        _ => return err(at2, "expected an integer weight component"),
                    }
                    match self.bump() {
                        Some(Tok::Comma) => continue,
                        Some(Tok::RParen) => break,
                        _ => return err(self.current_pos(), "expected , or ) in weight vector"),
                    }
                }
                let w = WeightVector::new(comps);
                if w.is_zero() {
                    return err(at, "zero weight: use triv for trivial summands");
                }
                Ok(Value::Torus(TorusRep::pair(w)))
            }
            Some(Tok::Sym2) => {
                self.expect(Tok::LParen, "( after sym2")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, ") closing sym2")?;
                Ok(square_value(inner, true))
            }
            Some(Tok::Alt2) => {
                self.expect(Tok::LParen, "( after alt2")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, ") closing alt2")?;
                Ok(square_value(inner, false))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "closing )")?;
                Ok(inner)
            }
            _ => err(at, "expected an atom"),
        }
    }
}

fn add_values(a: Value, b: Value, pos: usize) -> Result<Value, ExprError> {
    combine(
        a,
        b,
        pos,
        |x, y| Value::Su2(x.add(&y)),
        |x, y| Value::Torus(x.add(&y)),
        |m, k| Value::Neutral(m + k),
    )
}

fn tensor_values(a: Value, b: Value, pos: usize) -> Result<Value, ExprError> {
    combine(
        a,
        b,
        pos,
        |x, y| Value::Su2(rep::tensor(&x, &y)),
        |x, y| Value::Torus(x.tensor(&y)),
        |m, k| Value::Neutral(m * k),
    )
}

fn combine(
    a: Value,
    b: Value,
    pos: usize,
    su2_op: impl Fn(Su2Rep, Su2Rep) -> Value,
    torus_op: impl Fn(TorusRep, TorusRep) -> Value,
    neutral_op: impl Fn(u32, u32) -> Value,
) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Neutral(m), Value::Neutral(k)) => Ok(neutral_op(m, k)),
        (Value::Su2(_), Value::Torus(_)) | (Value::Torus(_), Value::Su2(_)) => {
            err(pos, "cannot mix su(2) and torus atoms")
        }
        (a, b @ Value::Su2(_)) | (a @ Value::Su2(_), b) => {
            Ok(su2_op(a.into_su2().unwrap(), b.into_su2().unwrap()))
        }
        (a, b) => Ok(torus_op(a.into_torus().unwrap(), b.into_torus().unwrap())),
    }
}

fn scale_value(v: Value, m: u32, pos: usize) -> Result<Value, ExprError> {
    if m == 0 {
        return err(pos, "zero multiplicity");
    }
    Ok(match v {
        Value::Su2(r) => Value::Su2(r.scale(m)),
        Value::Neutral(k) => Value::Neutral(k * m),
        Value::Torus(r) => {
            let mut out = TorusRep::trivial(r.zero_mult * m);
            for (w, k) in r.pairs() {
                out.add_pair(w.clone(), k * m);
            }
            Value::Torus(out)
        }
    })
}

fn square_value(v: Value, symmetric: bool) -> Value {
    match v {
        Value::Su2(r) => Value::Su2(if symmetric {
            rep::sym2(&r)
        } else {
            rep::alt2(&r)
        }),
        Value::Torus(r) => Value::Torus(if symmetric { r.sym2() } else { r.alt2() }),
        Value::Neutral(m) => Value::Neutral(if symmetric {
            m * (m + 1) / 2
        } else {
            m * m.saturating_sub(1) / 2
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(input: &str) -> String {
        match eval_query(input).unwrap() {
            EvalOutput::Rep(v) => v.render(),
            EvalOutput::Count(n) => n.to_string(),
            EvalOutput::Fs(t) => t.to_string(),
            EvalOutput::Dim(d) => d.to_string(),
        }
    }

    #[test]
    fn basic_expressions() {
        assert_eq!(render("V2*V2"), "V4+V2+V0");
        assert_eq!(render("V2⊗V2"), "V4+V2+V0");
        assert_eq!(render("sym2(V0+V2)"), "V4+V2+2V0");
        assert_eq!(render("sym2(V0+V2)*V2:inv"), "1");
        assert_eq!(render("V3:fs"), "symplectic (quaternionic)");
        assert_eq!(render("V3*V3:dim"), "16");
        assert_eq!(render("2V1+triv"), "2V1+V0");
    }

    #[test]
    fn torus_expressions() {
        assert_eq!(render("w(1,0)*w(0,1)"), "(1,-1)+(1,1)");
        assert_eq!(render("w(1,0)*w(1,0):inv"), "2");
        assert_eq!(render("triv+w(1,2)"), "triv+(1,2)");
    }

    #[test]
    fn errors_carry_positions() {
        let e = eval_query("V2**V2").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(eval_query("V2+w(1,0)").is_err());
        assert!(eval_query("V2:fsx").is_err());
        assert!(eval_query("(V1+V1:fs").is_err());
    }
}
