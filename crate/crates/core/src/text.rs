//! Small hand-rolled cursor shared by the literal grammars.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect_str(&mut self, s: &str) -> Result<()> {
        if self.eat_str(s) {
            Ok(())
        } else {
            self.error(format!("expected \"{s}\""))
        }
    }

    fn digits(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    pub(crate) fn nat(&mut self) -> Result<u64> {
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return self.error("expected a natural number");
        }
        digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("natural number {digits} out of range"),
        })
    }

    pub(crate) fn int(&mut self) -> Result<BigInt> {
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        let digits = self.digits();
        if digits.is_empty() {
            return self.error("expected an integer");
        }
        let magnitude: BigInt = digits.parse().expect("ascii digits");
        Ok(if negative { -magnitude } else { magnitude })
    }

    /// A possibly empty run of `0`/`1` characters.
    pub(crate) fn bits(&mut self) -> Vec<bool> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c| c != '0' && c != '1').unwrap_or(rest.len());
        self.pos += len;
        rest[..len].bytes().map(|b| b == b'1').collect()
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected trailing '{c}'")),
        }
    }
}

pub(crate) fn format_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Runs `f` over the whole input, rejecting trailing text.
pub(crate) fn parse_all<T>(src: &str, f: impl FnOnce(&mut Cursor<'_>) -> Result<T>) -> Result<T> {
    let mut cur = Cursor::new(src);
    let value = f(&mut cur)?;
    cur.finish()?;
    Ok(value)
}
