//! Text grammar for presentations:
//!
//! ```text
//! presentation := '<'? names '|' relators? '>'?
//! relators     := word (',' word)*
//! word         := '1' | factor (('*' | space) factor)*
//! factor       := (name | '(' word ')') ('^' integer)?
//! ```

use thiserror::Error;

use super::{reduce, FinitePresentation, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected {found} at byte {pos}, expected {expected}")]
    Unexpected {
        pos: usize,
        found: String,
        expected: &'static str,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid presentation: {0}")]
    Invalid(String),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn unexpected(&mut self, expected: &'static str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        };
        ParseError::Unexpected {
            pos: self.pos,
            found,
            expected,
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        self.pos += end;
        Some(&rest[..end])
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let sign_len = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign_len..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - sign_len);
        if digits == 0 {
            return Err(self.unexpected("integer"));
        }
        let text = &rest[..sign_len + digits];
        let value = text
            .parse::<i64>()
            .map_err(|e| ParseError::Invalid(format!("exponent `{text}`: {e}")))?;
        self.pos += sign_len + digits;
        Ok(value)
    }
}

fn parse_exponent(cur: &mut Cursor<'_>) -> Result<i64, ParseError> {
    if cur.eat('^') {
        cur.integer()
    } else {
        Ok(1)
    }
}

fn parse_factor(cur: &mut Cursor<'_>, names: &[String]) -> Result<Word, ParseError> {
    if cur.eat('(') {
        let inner = parse_word(cur, names)?;
        if !cur.eat(')') {
            return Err(cur.unexpected("`)`"));
        }
        let e = parse_exponent(cur)?;
        return Ok(inner.pow(e));
    }
    let name = cur.ident().ok_or_else(|| cur.unexpected("generator"))?;
    let idx = names
        .iter()
        .position(|g| g == name)
        .ok_or_else(|| ParseError::UnknownGenerator(name.to_string()))?;
    let e = parse_exponent(cur)?;
    Ok(reduce([Letter::new(idx as u32, e)]))
}

fn parse_word(cur: &mut Cursor<'_>, names: &[String]) -> Result<Word, ParseError> {
    if cur.peek() == Some('1') {
        cur.pos += 1;
        return Ok(Word::identity());
    }
    let mut w = parse_factor(cur, names)?;
    loop {
        match cur.peek() {
            Some('*') => {
                cur.pos += 1;
                w = &w * &parse_factor(cur, names)?;
            }
            Some(c) if c == '(' || c.is_ascii_alphabetic() || c == '_' => {
                w = &w * &parse_factor(cur, names)?;
            }
            _ => return Ok(w),
        }
    }
}

/// Parse a single word over the given generator names.
pub fn parse_word_over(src: &str, names: &[String]) -> Result<Word, ParseError> {
    let mut cur = Cursor { src, pos: 0 };
    let w = parse_word(&mut cur, names)?;
    if cur.peek().is_some() {
        return Err(cur.unexpected("end of word"));
    }
    Ok(w)
}

pub(super) fn parse_presentation(src: &str) -> Result<FinitePresentation, ParseError> {
    let mut cur = Cursor { src, pos: 0 };
    let bracketed = cur.eat('<');
    let mut names = Vec::new();
    loop {
        let name = cur.ident().ok_or_else(|| cur.unexpected("generator name"))?;
        names.push(name.to_string());
        if !cur.eat(',') {
            break;
        }
    }
    if !cur.eat('|') {
        return Err(cur.unexpected("`|`"));
    }
    let mut relators = Vec::new();
    let closes = |c: Option<char>| c.is_none() || c == Some('>');
    if !closes(cur.peek()) {
        loop {
            relators.push(parse_word(&mut cur, &names)?);
            if !cur.eat(',') {
                break;
            }
        }
    }
    if bracketed && !cur.eat('>') {
        return Err(cur.unexpected("`>`"));
    }
    if cur.peek().is_some() {
        return Err(cur.unexpected("end of presentation"));
    }
    FinitePresentation::new(names, relators).map_err(|e| ParseError::Invalid(e.to_string()))
}
