//! Text form of algebra elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '(' gauss ')' | rational | 'ph(' rational ')'
//!         | 'u' ['^' int] | 's(' nat ')' | 's*(' nat ')' | '1'
//! ```
//!
//! `gauss` is `a/b`, `a/b+c/d i`, `c/d i` or `i`. `ph(θ)` is `e^{iθ}`.
//! Factors are multiplied in the engine, so `s(2)*s(3)` picks up the twist.

use num_traits::{One, Zero};

use super::engine::Engine;
use super::word::{nat, AlgebraElem, Word};
use crate::coeff::{parse_rational, ExactScalar, GaussRat};
use crate::error::{Error, Result};

/// Canonical text: one `(c)*ph(θ)*word` term per phase, joined by `" + "`.
pub fn serialize(x: &AlgebraElem) -> String {
    let mut parts = Vec::new();
    for (w, c) in x.terms() {
        for (theta, g) in c.terms() {
            let mut factors = Vec::new();
            let unit = g.im.is_zero() && g.re.is_one();
            if !unit {
                factors.push(format!("({g})"));
            }
            if !theta.is_zero() {
                factors.push(format!("ph({theta})"));
            }
            if *w != Word::one() || factors.is_empty() {
                factors.push(w.to_string());
            }
            parts.push(factors.join("*"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Parses the text form, multiplying factors with `engine`.
pub fn parse(engine: &Engine, text: &str) -> Result<AlgebraElem> {
    let mut p = Parser {
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        engine,
    };
    let out = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    engine: &'a Engine,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        Error::Parse(format!("{what} at offset {} (near {rest:?})", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<AlgebraElem> {
        if self.chars.len() == 1 && self.chars[0] == '0' {
            self.pos = 1;
            return Ok(AlgebraElem::zero());
        }
        let mut negate = !self.eat('+') && self.eat('-');
        let mut out = AlgebraElem::zero();
        loop {
            let t = self.term()?;
            out = if negate { out.sub(&t) } else { out.add(&t) };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElem> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = self.engine.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn until_close(&mut self) -> Result<String> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == ')' {
                let body: String = self.chars[start..self.pos].iter().collect();
                self.pos += 1;
                return Ok(body);
            }
            self.pos += 1;
        }
        Err(self.error("unclosed parenthesis"))
    }

    fn number(&mut self) -> Result<String> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn nat_arg(&mut self) -> Result<u64> {
        self.expect('(')?;
        let body = self.until_close()?;
        match body.parse::<u64>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Error::Parse(format!("expected a positive integer, got {body:?}"))),
        }
    }

    fn factor(&mut self) -> Result<AlgebraElem> {
        let scalar = |c: ExactScalar| AlgebraElem::monomial(c, Word::one());
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let body = self.until_close()?;
                let g: GaussRat = body.parse()?;
                Ok(scalar(ExactScalar::from_gauss(g)))
            }
            Some('p') => {
                self.pos += 1;
                self.expect('h')?;
                self.expect('(')?;
                let body = self.until_close()?;
                Ok(scalar(ExactScalar::phase(parse_rational(&body)?)))
            }
            Some('i') => {
                self.pos += 1;
                Ok(scalar(ExactScalar::imag_unit()))
            }
            Some('u') => {
                self.pos += 1;
                let k = if self.eat('^') {
                    let s = self.number()?;
                    s.parse::<i64>().map_err(|_| self.error("expected an integer exponent"))?
                } else {
                    1
                };
                Ok(AlgebraElem::word(Word::u(k)))
            }
            Some('s') => {
                self.pos += 1;
                if self.peek() == Some('*') && self.chars.get(self.pos + 1) == Some(&'(') {
                    self.pos += 1;
                    let n = self.nat_arg()?;
                    Ok(AlgebraElem::word(Word::new(0, nat(1), nat(n), 0)))
                } else {
                    let m = self.nat_arg()?;
                    Ok(AlgebraElem::word(Word::new(0, nat(m), nat(1), 0)))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let s = self.number()?;
                Ok(scalar(ExactScalar::from_rational(parse_rational(&s)?)))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Bicharacter;
    use crate::coeff::rat;

    #[test]
    fn round_trip() {
        let e = Engine::new(Bicharacter::from_ints(2, 3, [1, 2, 3, 5]).unwrap());
        let x = AlgebraElem::monomial(ExactScalar::phase(rat(3, 4)).scale(&rat(1, 2)), Word::from_ints(2, 6, 4, 1))
            .add(&AlgebraElem::monomial(ExactScalar::from_int(-3), Word::u(1)))
            .add(&AlgebraElem::monomial(
                ExactScalar::from_gauss(GaussRat::new(rat(1, 3), rat(-2, 1))),
                Word::one(),
            ));
        let text = serialize(&x);
        assert_eq!(parse(&e, &text).unwrap(), x, "{text}");
        assert_eq!(parse(&e, "0").unwrap(), AlgebraElem::zero());
        assert_eq!(serialize(&AlgebraElem::zero()), "0");
    }

    #[test]
    fn products_and_signs() {
        let e = Engine::new(Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap());
        let x = parse(&e, "s(2)*s(3) - ph(1)*s(6)").unwrap();
        assert!(x.is_zero());
        let y = parse(&e, "u^-1*s*(2) + 2*u").unwrap();
        assert_eq!(y, AlgebraElem::word(Word::from_ints(-1, 1, 2, 0)).add(&AlgebraElem::monomial(ExactScalar::from_int(2), Word::u(1))));
        assert_eq!(serialize(&parse(&e, "(1/2)*ph(3/4)*u^2*s(6)*s*(4)*u^-1").unwrap()), "(1/2)*ph(3/4)*u^2*s(6)*s*(4)*u^-1");
        assert!(parse(&e, "s(0)").is_err());
        assert!(parse(&e, "u^").is_err());
        assert!(parse(&e, "(1/2").is_err());
    }
}
