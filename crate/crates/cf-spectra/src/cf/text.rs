//! Text syntax for continued fractions: `[a0; p1, p2, (q1, q2, q3)]` with
//! parentheses marking the period. Parser and printer are inverse bijections
//! on canonical forms.

use crate::cf::{PeriodicCF, Word};
use crate::{Error, Result};
use num_bigint::BigInt;

pub(crate) struct Scanner<'a> {
    src: &'a [u8],
    pub pos: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).map(|&b| b as char)
    }

    pub fn eat(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn try_eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    pub fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') || self.src.get(self.pos) == Some(&b'+') {
            self.pos += 1;
        }
        let digits_from = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_from {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<BigInt>().map_err(|e| self.error(e.to_string()))
    }

    pub fn letter(&mut self) -> Result<u32> {
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| self.error("partial quotient out of range"))
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }
}

/// Parse `[a0; p1, p2, (q1, q2)]`; `[a0]` and `[a0; p1]` denote finite
/// expansions, `[a0; (q1)]` a purely periodic one.
pub fn parse_periodic_cf(input: &str) -> Result<PeriodicCF> {
    let mut sc = Scanner::new(input);
    let cf = scan_periodic_cf(&mut sc)?;
    if !sc.at_end() {
        return Err(sc.error("trailing input after continued fraction"));
    }
    Ok(cf)
}

pub(crate) fn scan_periodic_cf(sc: &mut Scanner) -> Result<PeriodicCF> {
    sc.eat('[')?;
    let a0 = sc.integer()?;
    let mut pre = Vec::new();
    let mut per = Vec::new();
    if sc.try_eat(';') {
        loop {
            if sc.try_eat('(') {
                loop {
                    per.push(sc.letter()?);
                    if !sc.try_eat(',') {
                        break;
                    }
                }
                sc.eat(')')?;
                break;
            }
            pre.push(sc.letter()?);
            if !sc.try_eat(',') {
                break;
            }
        }
    }
    sc.eat(']')?;
    let preperiod = Word::new(pre).map_err(|e| Error::Parse {
        pos: sc.pos,
        msg: e.to_string(),
    })?;
    let period = Word::new(per).map_err(|e| Error::Parse {
        pos: sc.pos,
        msg: e.to_string(),
    })?;
    Ok(PeriodicCF {
        a0,
        preperiod,
        period,
    })
}
