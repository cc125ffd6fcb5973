//! Recursive descent with one token of lookahead.
//!
//! ```text
//! expr   := name | dp | block | call
//! call   := ("conv"|"mul"|"compose"|"ladd") "(" expr "," expr ")"
//! dp     := "Dp" "[" integer "]"
//! block  := ("cadd"|"cmul") "{" [pairs] [";" "default" defval] "}"
//! pairs  := pair {"," pair}
//! pair   := integer ":" ratio
//! ratio  := ["-"] integer ["/" integer]
//! defval := ratio | "p" | "1/p"
//! ```

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::ast::{Block, Combinator, DefaultValue, FnExpr};
use super::lexer::{tokenize, Token, TokenKind};
use super::ParseError;
use crate::numtheory::{is_prime, rat_normalize, Rational};

pub fn parse(input: &str) -> Result<FnExpr, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, idx: 0 };
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    idx: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.idx]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.idx].clone();
        if t.kind != TokenKind::Eof {
            self.idx += 1;
        }
        t
    }

    fn error_at(&self, tok: &Token, expected: impl Into<String>) -> ParseError {
        ParseError {
            position: tok.pos,
            expected: expected.into(),
            found: tok.text.clone(),
        }
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.bump();
        if t.kind == TokenKind::Punct(c) {
            Ok(())
        } else {
            Err(self.error_at(&t, format!("`{c}`")))
        }
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if self.peek().kind == TokenKind::Punct(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect_eof(&mut self) -> Result<(), ParseError> {
        let t = self.peek().clone();
        if t.kind == TokenKind::Eof {
            Ok(())
        } else {
            Err(self.error_at(&t, "end of input"))
        }
    }

    fn integer(&mut self) -> Result<(BigUint, Token), ParseError> {
        let t = self.bump();
        match &t.kind {
            TokenKind::Int(v) => Ok((v.clone(), t)),
            _ => Err(self.error_at(&t, "an integer")),
        }
    }

    fn prime(&mut self) -> Result<BigUint, ParseError> {
        let (v, t) = self.integer()?;
        if !is_prime(&v) {
            return Err(self.error_at(&t, "a prime"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<FnExpr, ParseError> {
        let t = self.bump();
        let name = match &t.kind {
            TokenKind::Ident(name) => name.clone(),
            _ => return Err(self.error_at(&t, "a function expression")),
        };
        if let Some(c) = Combinator::from_keyword(&name) {
            self.expect_punct('(')?;
            let a = self.expr()?;
            self.expect_punct(',')?;
            let b = self.expr()?;
            self.expect_punct(')')?;
            return Ok(FnExpr::call(c, a, b));
        }
        match name.as_str() {
            "Dp" => {
                self.expect_punct('[')?;
                let p = self.prime()?;
                self.expect_punct(']')?;
                Ok(FnExpr::Dp(p))
            }
            "cadd" => Ok(FnExpr::CAdd(self.block()?)),
            "cmul" => Ok(FnExpr::CMul(self.block()?)),
            _ => Ok(FnExpr::Name(name)),
        }
    }

    fn block(&mut self) -> Result<Block, ParseError> {
        self.expect_punct('{')?;
        let mut block = Block::default();
        if self.eat_punct('}') {
            return Ok(block);
        }
        if !self.at_default() {
            loop {
                let key_tok = self.peek().clone();
                let key = self.prime()?;
                self.expect_punct(':')?;
                let value = self.ratio()?;
                if block.pairs.insert(key, value).is_some() {
                    return Err(self.error_at(&key_tok, "a key not already assigned"));
                }
                if !self.eat_punct(',') {
                    break;
                }
            }
            if self.eat_punct('}') {
                return Ok(block);
            }
            self.expect_punct(';')?;
        } else {
            // `{; default ...}` is accepted as well as `{default ...}`
            self.eat_punct(';');
        }
        let t = self.bump();
        if t.kind != TokenKind::Ident("default".into()) {
            return Err(self.error_at(&t, "`default`"));
        }
        block.default = Some(self.default_value()?);
        self.expect_punct('}')?;
        Ok(block)
    }

    fn at_default(&self) -> bool {
        match &self.peek().kind {
            TokenKind::Ident(s) => s == "default",
            TokenKind::Punct(';') => true,
            _ => false,
        }
    }

    fn ratio(&mut self) -> Result<Rational, ParseError> {
        let negative = self.eat_punct('-');
        let (num, _) = self.integer()?;
        let num = if negative { -BigInt::from(num) } else { BigInt::from(num) };
        if !self.eat_punct('/') {
            return Ok(Rational::from_integer(num));
        }
        let (den, t) = self.integer()?;
        if den.is_zero() {
            return Err(self.error_at(&t, "a nonzero denominator"));
        }
        Ok(rat_normalize(num, BigInt::from(den)).expect("nonzero denominator"))
    }

    fn default_value(&mut self) -> Result<DefaultValue, ParseError> {
        if self.peek().kind == TokenKind::Ident("p".into()) {
            self.bump();
            return Ok(DefaultValue::Prime);
        }
        let start = self.peek().clone();
        let negative = self.eat_punct('-');
        let (num, _) = self.integer()?;
        if !self.eat_punct('/') {
            let num = if negative { -BigInt::from(num) } else { BigInt::from(num) };
            return Ok(DefaultValue::Ratio(Rational::from_integer(num)));
        }
        if self.peek().kind == TokenKind::Ident("p".into()) {
            self.bump();
            if negative || !num.is_one() {
                return Err(self.error_at(&start, "`p`, `1/p` or a rational"));
            }
            return Ok(DefaultValue::Reciprocal);
        }
        let (den, t) = self.integer()?;
        if den.is_zero() {
            return Err(self.error_at(&t, "a nonzero denominator"));
        }
        let num = if negative { -BigInt::from(num) } else { BigInt::from(num) };
        Ok(DefaultValue::Ratio(
            rat_normalize(num, BigInt::from(den)).expect("nonzero denominator"),
        ))
    }
}
