use super::monomial::{Monomial, MAX_VARS};
use super::poly::{Polynomial, Term};
use super::ring::Ring;
use crate::error::{Error, Result};

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> &'a [u8] {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.s[start..self.pos]
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("")
    }
}

/// Parses `text` into a polynomial of `ring`.
///
/// Accepted: `term (('+'|'-') term)*` with an optional leading sign, where a
/// term is an optional integer coefficient followed by factors
/// `var` or `var^n`, optionally separated by `*`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let field = ring.field();
    let p = field.modulus() as u64;
    let mut lx = Lexer {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<Term> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            None if first => return lx.err("empty polynomial"),
            None => return lx.err("expected a term after sign"),
            Some(b'+') => lx.pos += 1,
            Some(b'-') => {
                negative = true;
                lx.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return lx.err(format!("expected '+' or '-', found '{}'", c as char)),
        }
        first = false;
        let term_start = lx.pos;
        let mut coeff: u64 = 1;
        let mut have_any = false;
        if lx.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = lx
                .digits()
                .iter()
                .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
            have_any = true;
        }
        let mut exps = [0u32; MAX_VARS];
        loop {
            match lx.peek() {
                Some(b'*') => {
                    lx.pos += 1;
                    if !lx
                        .peek()
                        .is_some_and(|c| c.is_ascii_alphabetic() || c == b'_')
                    {
                        return lx.err("expected a variable after '*'");
                    }
                }
                Some(c) if c.is_ascii_alphabetic() => {}
                _ => break,
            }
            let at = lx.pos;
            let name = lx.ident();
            let Some(v) = ring.var_index(name) else {
                lx.pos = at;
                return lx.err(format!("unknown variable `{name}`"));
            };
            let mut e = 1u32;
            if lx.peek() == Some(b'^') {
                lx.pos += 1;
                let d = lx.digits();
                if d.is_empty() {
                    return lx.err("malformed exponent");
                }
                let s = std::str::from_utf8(d).unwrap();
                e = match s.parse::<u32>() {
                    Ok(e) if e <= 255 => e,
                    _ => return lx.err("exponent too large"),
                };
            }
            exps[v] += e;
            if exps[v] > 255 {
                return lx.err("exponent too large");
            }
            have_any = true;
        }
        if !have_any {
            lx.pos = term_start;
            return match lx.peek() {
                Some(c) => lx.err(format!("unexpected '{}'", c as char)),
                None => lx.err("expected a term"),
            };
        }
        let mut c = coeff as u32;
        if negative {
            c = field.neg(c);
        }
        terms.push((Monomial::from_exps(&exps[..ring.nvars()]), c));
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        parse_poly(text, ring)
    }
}
