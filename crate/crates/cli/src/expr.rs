//! Tiny arithmetic for command-line numbers: `pi`, `e`, `sqrt(x)`, `*`, `/`
//! and parentheses, e.g. `pi/2` or `sqrt(5)`.

use std::f64::consts::{E, PI};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    Num(f64),
    Pi,
    E,
    Sqrt,
    Mul,
    Div,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' => {
                i += 1;
                continue;
            }
            b'*' => out.push((start, Token::Mul)),
            b'/' => out.push((start, Token::Div)),
            b'(' => out.push((start, Token::Open)),
            b')' => out.push((start, Token::Close)),
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                // Exponent only when digits follow, so `2e` is not a number.
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &src[start..i];
                let v = text.parse::<f64>().map_err(|e| {
                    CliError::parse(format!("`{src}` at {start}"), format!("{text}: {e}"))
                })?;
                out.push((start, Token::Num(v)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let tok = match &src[start..i] {
                    "pi" | "PI" => Token::Pi,
                    "e" => Token::E,
                    "sqrt" => Token::Sqrt,
                    word => {
                        return Err(CliError::parse(
                            format!("`{src}` at {start}"),
                            format!("unknown name `{word}`"),
                        ))
                    }
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                return Err(CliError::parse(
                    format!("`{src}` at {start}"),
                    format!(
                        "unexpected `{}`",
                        src[start..].chars().next().unwrap_or('?')
                    ),
                ))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> CliError {
        let at = self.tokens.get(self.pos).map_or(self.src.len(), |t| t.0);
        CliError::parse(format!("`{}` at {at}", self.src), message)
    }

    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn expr(&mut self) -> Result<f64> {
        let mut v = self.factor()?;
        while let Some(op @ (Token::Mul | Token::Div)) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            v = if op == Token::Mul { v * rhs } else { v / rhs };
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<f64> {
        let tok = self.peek().ok_or_else(|| self.error("expected a value"))?;
        self.pos += 1;
        match tok {
            Token::Num(v) => Ok(v),
            Token::Pi => Ok(PI),
            Token::E => Ok(E),
            Token::Sqrt => {
                if self.peek() != Some(Token::Open) {
                    return Err(self.error("expected `(` after sqrt"));
                }
                Ok(self.factor()?.sqrt())
            }
            Token::Open => {
                let v = self.expr()?;
                if self.peek() != Some(Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a value"))
            }
        }
    }
}

/// Evaluates one expression.
pub fn eval(src: &str) -> Result<f64> {
    let mut p = Parser {
        src,
        tokens: tokenize(src)?,
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

/// Evaluates a comma-separated list of expressions.
pub fn eval_list(src: &str) -> Result<Vec<f64>> {
    src.split(',').map(|s| eval(s.trim())).collect()
}
