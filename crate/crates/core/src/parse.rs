//! Text format for monomial ideals.
//!
//! ```text
//! ideal    := "n" "=" INT ":" gens | "n" "=" INT ":" "0"
//! gens     := monomial ("," monomial)*
//! monomial := "1" | factor ("*" factor)*
//! factor   := "x" INT ("^" INT)?
//! ```
//!
//! Whitespace is ignored everywhere. Error positions are byte offsets into the
//! original text.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_AMBIENT, MAX_EXPONENT};

struct Cursor {
    toks: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor { toks: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), at: 0, end: text.len() }
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.at).map(|t| t.1)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.at += 1;
                Ok(())
            }
            Some(d) => self.error(format!("expected '{c}', found '{d}'")),
            None => self.error(format!("expected '{c}', found end of input")),
        }
    }

    fn int(&mut self) -> Result<(usize, u64)> {
        let start = self.pos();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value.saturating_mul(10).saturating_add(d as u64);
            digits += 1;
            self.at += 1;
        }
        if digits == 0 {
            return self.error("expected integer");
        }
        Ok((start, value))
    }

    fn done(&self) -> bool {
        self.at == self.toks.len()
    }
}

/// Parses an ideal, returning it minimalized.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(text);
    cur.expect('n')?;
    cur.expect('=')?;
    let (_, n) = cur.int()?;
    if n < 1 || n > MAX_AMBIENT as u64 {
        return Err(Error::AmbientOutOfRange(n.min(usize::MAX as u64) as usize));
    }
    let n = n as usize;
    cur.expect(':')?;
    if cur.peek() == Some('0') {
        cur.at += 1;
        if !cur.done() {
            return cur.error("trailing input after zero ideal");
        }
        return Ok(MonomialIdeal::zero(n));
    }
    let mut gens = vec![parse_monomial_at(&mut cur, n)?];
    while cur.peek() == Some(',') {
        cur.at += 1;
        gens.push(parse_monomial_at(&mut cur, n)?);
    }
    if !cur.done() {
        return cur.error("unexpected trailing input");
    }
    MonomialIdeal::minimalize(gens, n)
}

/// Parses a single monomial (`1` or a product of factors) in ambient `n`.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let mut cur = Cursor::new(text);
    let m = parse_monomial_at(&mut cur, n)?;
    if !cur.done() {
        return cur.error("unexpected trailing input");
    }
    Ok(m)
}

fn parse_monomial_at(cur: &mut Cursor, n: usize) -> Result<Monomial> {
    if cur.peek() == Some('1') {
        cur.at += 1;
        return Ok(Monomial::one(n));
    }
    let mut exps = vec![0u32; n];
    loop {
        cur.expect('x')?;
        let (_, index) = cur.int()?;
        if index < 1 || index > n as u64 {
            return Err(Error::IndexOutOfRange { index: index as usize, ambient: n });
        }
        let mut exponent = 1u64;
        if cur.peek() == Some('^') {
            cur.at += 1;
            exponent = cur.int()?.1;
            if exponent == 0 || exponent > MAX_EXPONENT as u64 {
                return Err(Error::ExponentOutOfRange {
                    exponent: exponent.min(u32::MAX as u64) as u32,
                    max: MAX_EXPONENT,
                });
            }
        }
        let slot = &mut exps[index as usize - 1];
        *slot += exponent as u32;
        if *slot > MAX_EXPONENT as u32 {
            return Err(Error::ExponentOutOfRange { exponent: *slot, max: MAX_EXPONENT });
        }
        if cur.peek() != Some('*') {
            break;
        }
        cur.at += 1;
    }
    Monomial::from_exponents(exps.into_iter().map(|e| e as u8).collect())
}
