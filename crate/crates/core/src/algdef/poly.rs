//! Parser for relation expressions such as `a*b - c*d` or `x^2 + 2*x*y`.
//!
//! Terms are products of identifiers with an optional integer coefficient.
//! Factor order is preserved; commutative callers sort it themselves.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    /// Identifiers in product order (left to right).
    pub factors: Vec<String>,
    /// Byte offset of the term in the source expression.
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(src: &str, name: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: i64 = src[start..i].parse().map_err(|_| err(name, start, "integer too large"))?;
                out.push((Tok::Int(v), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
            }
            _ => return Err(err(name, i, &format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

fn err(name: &str, offset: usize, msg: &str) -> Error {
    Error::Parse { source_name: name.to_string(), line: 1, column: offset + 1, message: msg.to_string() }
}

/// Parse a sum of terms. `name` labels diagnostics (e.g. `relations[2]`).
pub fn parse_expression(src: &str, name: &str) -> Result<Vec<Term>> {
    let toks = lex(src, name)?;
    if toks.is_empty() {
        return Err(err(name, 0, "empty expression"));
    }
    let mut terms = Vec::new();
    let mut pos = 0;
    let mut sign: i64 = 1;
    loop {
        // leading or binary signs
        while pos < toks.len() && matches!(toks[pos].0, Tok::Plus | Tok::Minus) {
            if toks[pos].0 == Tok::Minus {
                sign = -sign;
            }
            pos += 1;
        }
        let Some((_, offset)) = toks.get(pos).cloned() else {
            return Err(err(name, src.len(), "expected a term"));
        };
        let mut coeff = sign;
        let mut factors = Vec::new();
        loop {
            match toks.get(pos).cloned() {
                Some((Tok::Int(v), _)) => {
                    coeff = coeff.checked_mul(v).ok_or_else(|| err(name, offset, "coefficient overflow"))?;
                    pos += 1;
                }
                Some((Tok::Ident(id), at)) => {
                    pos += 1;
                    let mut times = 1;
                    if let Some((Tok::Caret, _)) = toks.get(pos) {
                        pos += 1;
                        match toks.get(pos) {
                            Some((Tok::Int(e), _)) if *e >= 1 && *e <= 64 => times = *e as usize,
                            _ => return Err(err(name, at, "exponent must be an integer between 1 and 64")),
                        }
                        pos += 1;
                    }
                    factors.extend(std::iter::repeat_n(id, times));
                }
                Some((_, at)) => return Err(err(name, at, "expected a coefficient or identifier")),
                None => return Err(err(name, src.len(), "expected a factor")),
            }
            match toks.get(pos) {
                Some((Tok::Star, _)) => pos += 1,
                _ => break,
            }
        }
        terms.push(Term { coeff, factors, offset });
        match toks.get(pos) {
            None => break,
            Some((Tok::Plus, _)) | Some((Tok::Minus, _)) => sign = 1,
            Some((_, at)) => return Err(err(name, *at, "expected '+', '-' or end of expression")),
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_difference_of_paths() {
        let t = parse_expression("a*b - c*d", "r").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].coeff, 1);
        assert_eq!(t[0].factors, vec!["a", "b"]);
        assert_eq!(t[1].coeff, -1);
        assert_eq!(t[1].factors, vec!["c", "d"]);
    }

    #[test]
    fn parses_powers_and_coefficients() {
        let t = parse_expression("x^2 + 2*x*y - 3y", "r");
        assert!(t.is_err(), "juxtaposition is not multiplication");
        let t = parse_expression("x^2 + 2*x*y", "r").unwrap();
        assert_eq!(t[0].factors, vec!["x", "x"]);
        assert_eq!(t[1].coeff, 2);
    }

    #[test]
    fn constant_term_is_a_term_without_factors() {
        let t = parse_expression("x + 1", "r").unwrap();
        assert!(t[1].factors.is_empty());
        assert_eq!(t[1].coeff, 1);
    }

    #[test]
    fn reports_position() {
        match parse_expression("x * $", "relations[0]") {
            Err(Error::Parse { column, source_name, .. }) => {
                assert_eq!(column, 5);
                assert_eq!(source_name, "relations[0]");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
