//! Text form of cyclotomic scalars: rational literals `p/q`, the symbol `z`
//! for `z_N`, `+ - *`, integer powers `^k` and parentheses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CycScalar;
use crate::error::{Error, Result};

/// Canonical rendering: ascending powers of `z`, reduced rationals.
pub fn render(s: &CycScalar) -> String {
    let mut out = String::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let monomial = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        if monomial.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&format!("{mag}*{monomial}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses an expression over `Q(z_order)`. Error columns are 1-based.
pub fn parse_expr(text: &str, order: u64) -> Result<CycScalar> {
    parse_expr_at(text, order, 1, 1)
}

/// As [`parse_expr`], reporting errors at `line` with columns offset by `col0 - 1`.
pub(crate) fn parse_expr_at(text: &str, order: u64, line: usize, col0: usize) -> Result<CycScalar> {
    if order == 0 {
        return Err(Error::parse(line, col0, "order must be positive"));
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, order, line, col0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: u64,
    line: usize,
    col0: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::parse(self.line, self.col0 + self.pos, reason)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<CycScalar> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<CycScalar> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<CycScalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<CycScalar> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ => false,
            };
            let start = self.pos;
            let e = self.integer()?;
            let e: i64 = e
                .try_into()
                .map_err(|_| Error::parse(self.line, self.col0 + start, "exponent too large"))?;
            let e = if neg { -e } else { e };
            return base.pow(e).map_err(|_| Error::parse(self.line, self.col0 + start, "negative power of zero"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<CycScalar> {
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                Ok(CycScalar::zeta(self.order))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::one();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                }
                Ok(CycScalar::from_rational(BigRational::new(num, den), self.order))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}
