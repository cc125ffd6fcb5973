use num_bigint::BigUint;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Ident(String),
    Int(BigUint),
    Punct(char),
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub pos: usize,
    pub text: String,
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let text = &input[pos..end];
            tokens.push(Token {
                kind: TokenKind::Ident(text.to_string()),
                pos,
                text: text.to_string(),
            });
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            let text = &input[pos..end];
            tokens.push(Token {
                kind: TokenKind::Int(text.parse().expect("ascii digits")),
                pos,
                text: text.to_string(),
            });
        } else if "()[]{},;:/-".contains(c) {
            chars.next();
            tokens.push(Token {
                kind: TokenKind::Punct(c),
                pos,
                text: c.to_string(),
            });
        } else {
            return Err(ParseError {
                position: pos,
                expected: "a token".into(),
                found: c.to_string(),
            });
        }
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        pos: input.len(),
        text: String::new(),
    });
    Ok(tokens)
}
