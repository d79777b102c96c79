//! Text syntax: variables `x<i>`, integer constants, `+ - * ^` and
//! parentheses, e.g. `x0*x2 - x1^2`.

use super::{MultiPoly, PolyError};
use crate::field::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u128),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let v = s[start..i]
                    .parse::<u128>()
                    .map_err(|_| PolyError::Parse { pos: start, msg: "integer too large".into() })?;
                out.push((start, Tok::Num(v)));
                continue;
            }
            b'x' => {
                i += 1;
                let ds = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(PolyError::Parse { pos: start, msg: "expected variable index after 'x'".into() });
                }
                let idx = s[ds..i]
                    .parse::<usize>()
                    .map_err(|_| PolyError::Parse { pos: start, msg: "bad variable index".into() })?;
                out.push((start, Tok::Var(idx)));
                continue;
            }
            _ => return Err(PolyError::Parse { pos: start, msg: format!("unexpected character {:?}", c as char) }),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    num_vars: usize,
    first: usize,
    prime: u64,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.here(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::zero(self.num_vars, self.prime);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            return Ok(f.scale(-Scalar::one(self.prime)));
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(e)) if *e <= u32::MAX as u128 => {
                    let e = *e as u32;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                let c = Scalar::new((v % self.prime as u128) as u64, self.prime);
                Ok(MultiPoly::constant(c, self.num_vars))
            }
            Some(Tok::Var(i)) => {
                if i < self.first || i - self.first >= self.num_vars {
                    return Err(PolyError::UnknownVariable {
                        index: i,
                        first: self.first,
                        last: self.first + self.num_vars.saturating_sub(1),
                    });
                }
                self.pos += 1;
                Ok(MultiPoly::var(i - self.first, self.num_vars, self.prime))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.err("expected number, variable or '('"),
        }
    }
}

/// Parses `s` as a polynomial in variables `x{first}..x{first+num_vars-1}`.
pub fn parse_poly(s: &str, num_vars: usize, first: usize, prime: u64) -> Result<MultiPoly, PolyError> {
    let toks = lex(s)?;
    let mut p = Parser { toks: &toks, pos: 0, end: s.len(), num_vars, first, prime };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_forms() {
        let q = parse_poly("x0*x2 - x1^2", 3, 0, 101).unwrap();
        assert_eq!(q.num_terms(), 2);
        let r = parse_poly("(x0 + x1)^2 - 2*x0*x1", 2, 0, 101).unwrap();
        assert_eq!(r, parse_poly("x0^2 + x1^2", 2, 0, 101).unwrap());
        let n = parse_poly("-x1 + -3", 2, 1, 101).unwrap();
        assert_eq!(n.to_text(1), "-x1 - 3");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_poly("x0 +", 2, 0, 101), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("y", 2, 0, 101), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x0 + x3", 2, 0, 101), Err(PolyError::UnknownVariable { index: 3, .. })));
        assert!(matches!(parse_poly("x0", 2, 1, 101), Err(PolyError::UnknownVariable { index: 0, .. })));
        assert!(matches!(parse_poly("x0 x1", 2, 0, 101), Err(PolyError::Parse { .. })));
    }
}
