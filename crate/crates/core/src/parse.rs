//! Text form of polynomials.
//!
//! ```text
//! poly   := [sign] term { sign term }        sign := '+' | '-'
//! term   := [integer ['/' integer] '*'] word | integer ['/' integer]
//! word   := factor { '*' factor }
//! factor := NAME | 'Inv[' NAME ']'
//! NAME   := letter { letter | digit }
//! ```
//!
//! Whitespace is ignored. `**` is accepted as a synonym for `*`.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{inverse_name, Sym};
use crate::error::{AlgebraError, Result};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::word::Word;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: &'a Arc<MonomialOrder>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Syntax { offset: self.pos, message: message.into() })
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_star(&mut self) -> bool {
        if self.eat(b'*') {
            // `**` is the Mathematica spelling of noncommutative product.
            if self.src.get(self.pos) == Some(&b'*') {
                self.pos += 1;
            }
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn name(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return self.error("expected a symbol name"),
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        Ok((String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(), start))
    }

    fn factor(&mut self) -> Result<Sym> {
        let (mut name, start) = self.name()?;
        if name == "Inv" && self.src.get(self.pos) == Some(&b'[') {
            self.pos += 1;
            let (inner, _) = self.name()?;
            if !self.eat(b']') {
                return self.error("expected `]`");
            }
            name = inverse_name(&inner);
        }
        self.order
            .alphabet()
            .lookup(&name)
            .ok_or(AlgebraError::UnknownSymbol { name, offset: start })
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = vec![self.factor()?];
        while self.eat_star() {
            letters.push(self.factor()?);
        }
        Ok(Word::from(letters))
    }

    fn term(&mut self) -> Result<(Rational, Word)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let coeff = if self.eat(b'/') {
                    let den = self.integer()?;
                    if den.bytes().all(|b| b == b'0') {
                        return self.error("zero denominator");
                    }
                    format!("{num}/{den}")
                } else {
                    num
                };
                let coeff: Rational = coeff.parse().expect("digits form a valid rational");
                if self.eat_star() {
                    Ok((coeff, self.word()?))
                } else {
                    Ok((coeff, Word::empty()))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => Ok((Rational::ONE, self.word()?)),
            Some(_) => self.error("expected a term"),
            None => self.error("unexpected end of input"),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, w) = self.term()?;
            terms.push((if negative { -c } else { c }, w));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(_) => return self.error("expected `+`, `-` or end of input"),
            }
        }
        Polynomial::from_terms(self.order, terms)
    }
}

/// Parses a polynomial over `order`'s alphabet and normalizes it.
pub fn parse_polynomial(text: &str, order: &Arc<MonomialOrder>) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, order };
    p.polynomial()
}

/// Formats a polynomial with terms in descending order.
pub fn format_polynomial(p: &Polynomial) -> String {
    p.to_string()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let alphabet = self.order().alphabet();
        for (i, t) in self.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = t.coeff.abs();
            if t.word.is_empty() {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                write!(f, "{}", t.word.display(alphabet))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;

    fn order() -> Arc<MonomialOrder> {
        MonomialOrder::from_spec(OrderKind::MultiGradedLex, "k1<k2<<u1", &["k1", "k2"]).unwrap()
    }

    #[test]
    fn inverse_relation() {
        let o = order();
        let p = parse_polynomial("k1*Inv[k1] - 1", &o).unwrap();
        assert_eq!(p.len(), 2);
        let k1 = o.alphabet().lookup("k1").unwrap();
        let k1i = o.alphabet().lookup("Inv[k1]").unwrap();
        assert_eq!(p.terms()[0].word, Word::from_letters(&[k1, k1i]));
        assert!(p.terms()[0].coeff.is_one());
        assert_eq!(p.terms()[1].word, Word::empty());
        assert_eq!(p.terms()[1].coeff, Rational::from(-1));
        assert_eq!(parse_polynomial("-1+k1**Inv[k1]", &o).unwrap(), p);
    }

    #[test]
    fn zero_and_like_terms() {
        let o = order();
        assert!(parse_polynomial("0", &o).unwrap().is_zero());
        assert!(parse_polynomial(" u1 - u1 ", &o).unwrap().is_zero());
        let p = parse_polynomial("2*u1*k2 + u1*k2", &o).unwrap();
        assert_eq!(p.to_string(), "3*u1*k2");
    }

    #[test]
    fn formats_rationals_and_constants() {
        let o = order();
        let p = parse_polynomial("-1/2*k1*u1 + 3 - u1", &o).unwrap();
        assert_eq!(p.to_string(), "-1/2*k1*u1 - u1 + 3");
        assert_eq!(parse_polynomial(&p.to_string(), &o).unwrap(), p);
    }

    #[test]
    fn errors_carry_offsets() {
        let o = order();
        match parse_polynomial("k1 + + u1", &o) {
            Err(AlgebraError::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
        match parse_polynomial("k1*zz", &o) {
            Err(AlgebraError::UnknownSymbol { name, offset }) => {
                assert_eq!(name, "zz");
                assert_eq!(offset, 3);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("", &o), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0", &o), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_polynomial("Inv[k1", &o), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_polynomial("Inv[u1]", &o), Err(AlgebraError::UnknownSymbol { .. })));
    }
}
