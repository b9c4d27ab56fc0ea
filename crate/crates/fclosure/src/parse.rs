//! Text formats: the polynomial grammar and the line-oriented ring file.
//!
//! Polynomial grammar (whitespace insignificant):
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff | [coeff '*'] factor ('*' factor)*
//! factor := var ['^' nat]
//! coeff  := nat
//! ```
//!
//! Ring file (one directive per line, `#` starts a comment):
//!
//! ```text
//! char <p>
//! vars <v1> <v2> ...
//! order <grevlex|lex>
//! rel <poly>
//! ```

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::{Monomial, OrderKind};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingPresentation};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Nat(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col_base: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line, col_base: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col_base + self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn next_token(&mut self) -> Result<Option<(Token, usize)>> {
        self.skip_ws();
        let start = self.pos;
        let Some(&b) = self.src.get(self.pos) else {
            return Ok(None);
        };
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Token::Plus
            }
            b'-' => {
                self.pos += 1;
                Token::Minus
            }
            b'*' => {
                self.pos += 1;
                Token::Star
            }
            b'^' => {
                self.pos += 1;
                Token::Caret
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                let n: u64 = text
                    .parse()
                    .map_err(|_| self.err(format!("number `{text}` out of range")))?;
                self.pos = end;
                Token::Nat(n)
            }
            b if (b as char).is_ascii_alphabetic() || b == b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && ((self.src[end] as char).is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                Token::Ident(name)
            }
            other => return Err(self.err(format!("unexpected character `{}`", other as char))),
        };
        Ok(Some((tok, self.col_base + start)))
    }
}

struct PolyParser<'a> {
    lexer: Lexer<'a>,
    lookahead: Option<(Token, usize)>,
    p: u64,
    vars: &'a [String],
}

impl<'a> PolyParser<'a> {
    fn new(src: &'a str, line: usize, p: u64, vars: &'a [String]) -> Result<Self> {
        let mut lexer = Lexer::new(src, line);
        let lookahead = lexer.next_token()?;
        Ok(PolyParser { lexer, lookahead, p, vars })
    }

    fn advance(&mut self) -> Result<Option<(Token, usize)>> {
        let out = self.lookahead.take();
        self.lookahead = self.lexer.next_token()?;
        Ok(out)
    }

    fn err_at(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.lexer.line, col, msg: msg.into() }
    }

    fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn parse_poly(&mut self) -> Result<Polynomial> {
        let nvars = self.vars.len();
        if self.lookahead.is_none() {
            return Err(self.err_at(1, "empty polynomial"));
        }
        let mut acc = self.parse_term()?;
        while let Some((tok, col)) = self.lookahead.clone() {
            match tok {
                Token::Plus => {
                    self.advance()?;
                    acc = acc.add(&self.parse_term()?);
                }
                Token::Minus => {
                    self.advance()?;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Err(self.err_at(col, "expected `+` or `-` between terms")),
            }
        }
        debug_assert_eq!(acc.nvars(), nvars);
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let nvars = self.vars.len();
        let mut coeff = Fp::one(self.p);
        let mut mono = Monomial::one(nvars);
        let mut saw_factor = false;

        // optional leading coefficient
        if let Some((Token::Nat(n), _)) = self.lookahead.clone() {
            self.advance()?;
            coeff = Fp::from_u64(n, self.p);
            match self.lookahead.clone() {
                Some((Token::Star, _)) => {
                    self.advance()?;
                }
                // bare constant term
                _ => return Ok(Polynomial::monomial(mono, coeff)),
            }
        }

        while let Some((tok, col)) = self.lookahead.clone() {
            match tok {
                Token::Ident(name) => {
                    self.advance()?;
                    let idx = self.var_index(&name)?;
                    let mut exp = 1u64;
                    if let Some((Token::Caret, caret_col)) = self.lookahead.clone() {
                        self.advance()?;
                        match self.advance()? {
                            Some((Token::Nat(n), _)) => exp = n,
                            _ => return Err(self.err_at(caret_col, "expected exponent after `^`")),
                        }
                    }
                    let mut step = Monomial::one(nvars);
                    step.0[idx] = exp;
                    mono = mono.mul(&step)?;
                    saw_factor = true;
                }
                _ if !saw_factor => {
                    return Err(self.err_at(col, "expected a variable or coefficient"));
                }
                _ => break,
            }
            // between factors only `*` continues the term
            match self.lookahead.clone() {
                Some((Token::Star, _)) => {
                    self.advance()?;
                }
                _ => break,
            }
        }
        if !saw_factor {
            let col = self.lookahead.as_ref().map(|(_, c)| *c).unwrap_or(1);
            return Err(self.err_at(col, "expected a variable after `*`"));
        }
        Ok(Polynomial::monomial(mono, coeff))
    }
}

/// Parse one polynomial against a declared variable list.
pub fn parse_polynomial_raw(text: &str, p: u64, vars: &[String], line: usize) -> Result<Polynomial> {
    let mut parser = PolyParser::new(text, line, p, vars)?;
    parser.parse_poly()
}

/// Parse one polynomial in the given ring.
pub fn poly_parse(text: &str, ring: &RingPresentation) -> Result<Polynomial> {
    parse_polynomial_raw(text, ring.p(), ring.vars(), 1)
}

/// Parse a comma-separated generator list in the given ring.
pub fn parse_generators(text: &str, ring: &RingPresentation) -> Result<Vec<Polynomial>> {
    text.split(',')
        .map(|chunk| poly_parse(chunk.trim(), ring))
        .collect()
}

fn is_valid_ident(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parse a full ring file into a presentation (characteristic, variables,
/// order, defining relations).
pub fn parse_ring_file(text: &str) -> Result<Ring> {
    let mut p: Option<u64> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order = OrderKind::Grevlex;
    let mut rels: Vec<Polynomial> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_num = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        let err = |msg: String| Error::Parse { line: line_num, col: 1, msg };
        match keyword {
            "char" => {
                let n: u64 = rest.parse().map_err(|_| err(format!("bad characteristic `{rest}`")))?;
                p = Some(crate::field::check_prime(n)?);
            }
            "vars" => {
                let names: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
                if names.is_empty() {
                    return Err(err("`vars` needs at least one variable".into()));
                }
                for n in &names {
                    if !is_valid_ident(n) {
                        return Err(err(format!("invalid variable name `{n}`")));
                    }
                }
                let mut seen = names.clone();
                seen.sort();
                seen.dedup();
                if seen.len() != names.len() {
                    return Err(err("duplicate variable name".into()));
                }
                vars = Some(names);
            }
            "order" => {
                order = match rest {
                    "grevlex" => OrderKind::Grevlex,
                    "lex" => OrderKind::Lex,
                    other => return Err(err(format!("unknown order `{other}`"))),
                };
            }
            "rel" => {
                let p = p.ok_or_else(|| err("`rel` before `char`".into()))?;
                let vars = vars.as_ref().ok_or_else(|| err("`rel` before `vars`".into()))?;
                rels.push(parse_polynomial_raw(rest, p, vars, line_num)?);
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let p = p.ok_or(Error::Invalid("ring file missing `char`".into()))?;
    let vars = vars.ok_or(Error::Invalid("ring file missing `vars`".into()))?;
    RingPresentation::new(p, vars, order, rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_fermat_quartic() {
        let vars = names(&["x", "y", "z"]);
        let f = parse_polynomial_raw("x^4+y^4+z^4", 5, &vars, 1).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(4));
    }

    #[test]
    fn zero_and_reduced_coefficients() {
        let vars = names(&["x"]);
        assert!(parse_polynomial_raw("0", 5, &vars, 1).unwrap().is_zero());
        let f = parse_polynomial_raw("6*x", 5, &vars, 1).unwrap();
        assert_eq!(f, parse_polynomial_raw("x", 5, &vars, 1).unwrap());
        // 5*x = 0 over F_5
        assert!(parse_polynomial_raw("5*x", 5, &vars, 1).unwrap().is_zero());
    }

    #[test]
    fn subtraction_and_whitespace() {
        let vars = names(&["x", "y"]);
        let f = parse_polynomial_raw(" x - y ", 7, &vars, 1).unwrap();
        let g = parse_polynomial_raw("x+6*y", 7, &vars, 1).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn error_positions_and_unknown_vars() {
        let vars = names(&["x"]);
        match parse_polynomial_raw("x+*y", 5, &vars, 3) {
            Err(Error::Parse { line: 3, col, .. }) => assert_eq!(col, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_polynomial_raw("x+y", 5, &vars, 1) {
            Err(Error::UnknownVariable(v)) => assert_eq!(v, "y"),
            other => panic!("expected unknown variable, got {other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let vars = names(&["x", "y", "z"]);
        let order = MonomialOrder::grevlex(3);
        for text in ["x^4+y^4+z^4", "4*y^4+4*z^4", "x^3*y*z", "1", "0", "2*x^2*y+3"] {
            let f = parse_polynomial_raw(text, 5, &vars, 1).unwrap();
            let printed = f.to_text(&vars, &order);
            let g = parse_polynomial_raw(&printed, 5, &vars, 1).unwrap();
            assert_eq!(f, g, "round trip failed for `{text}` -> `{printed}`");
        }
    }

    #[test]
    fn ring_file_round_trip() {
        let text = "# Fermat quartic chart\nchar 5\nvars x y z\norder grevlex\nrel x^4+y^4+z^4\n";
        let ring = parse_ring_file(text).unwrap();
        assert_eq!(ring.p(), 5);
        assert_eq!(ring.vars().len(), 3);
        assert_eq!(ring.dim(), 2);
    }

    #[test]
    fn ring_file_rejects_bad_input() {
        assert!(parse_ring_file("char 4\nvars x\n").is_err());
        assert!(parse_ring_file("vars x\n").is_err());
        assert!(parse_ring_file("char 5\nvars x x\n").is_err());
        assert!(parse_ring_file("char 5\nvars x\nrel y\n").is_err());
    }
}
