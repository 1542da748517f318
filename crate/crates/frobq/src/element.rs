//! Text form of ring elements: `INT`, `INTr`, `INT+INTr`, `INT-INTr`.
//!
//! The literal `r` stands for `√m`; a bare `r` means `1r`. Only the leading
//! integer may carry a sign. Surrounding whitespace is ignored.

use std::fmt;

use frobq_core::QuadInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseElementError {
    pub input: String,
    pub token: String,
    pub position: usize,
}

impl fmt::Display for ParseElementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.token.is_empty() {
            write!(
                f,
                "malformed element {:?}: unexpected end of input",
                self.input
            )
        } else {
            write!(
                f,
                "malformed element {:?}: unexpected {:?} at position {}",
                self.input, self.token, self.position
            )
        }
    }
}

impl std::error::Error for ParseElementError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> i128 {
        if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn error(&self, input: &str) -> ParseElementError {
        let rest = &self.text[self.pos..];
        let token = rest
            .split(['+', '-'])
            .find(|t| !t.is_empty())
            .unwrap_or(rest)
            .to_string();
        ParseElementError {
            input: input.to_string(),
            token: if rest.is_empty() {
                String::new()
            } else {
                token
            },
            position: self.pos,
        }
    }
}

fn magnitude(
    digits: &str,
    sign: i128,
    cursor: &Cursor<'_>,
    input: &str,
) -> Result<i128, ParseElementError> {
    // parse with the sign attached so that i128::MIN is accepted
    let signed = if sign < 0 {
        format!("-{digits}")
    } else {
        digits.to_string()
    };
    signed.parse::<i128>().map_err(|_| ParseElementError {
        input: input.to_string(),
        token: digits.to_string(),
        position: cursor.pos - digits.len(),
    })
}

pub fn parse_element(input: &str) -> Result<QuadInt, ParseElementError> {
    let text = input.trim();
    let mut cur = Cursor { text, pos: 0 };
    let sign = cur.sign();
    let lead = cur.digits();
    if cur.eat('r') {
        if cur.peek().is_some() {
            return Err(cur.error(input));
        }
        let irr = if lead.is_empty() {
            sign
        } else {
            magnitude(lead, sign, &cur, input)?
        };
        return Ok(QuadInt::new(0, irr));
    }
    if lead.is_empty() {
        return Err(cur.error(input));
    }
    let rat = magnitude(lead, sign, &cur, input)?;
    if cur.peek().is_none() {
        return Ok(QuadInt::new(rat, 0));
    }
    let irr_sign = match cur.peek() {
        Some('+') => 1,
        Some('-') => -1,
        _ => return Err(cur.error(input)),
    };
    cur.pos += 1;
    let tail = cur.digits();
    if !cur.eat('r') || cur.peek().is_some() {
        return Err(cur.error(input));
    }
    let irr = if tail.is_empty() {
        irr_sign
    } else {
        magnitude(tail, irr_sign, &cur, input)?
    };
    Ok(QuadInt::new(rat, irr))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rat: i128, irr: i128) -> QuadInt {
        QuadInt::new(rat, irr)
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_element("1+1r").unwrap(), q(1, 1));
        assert_eq!(parse_element("2r").unwrap(), q(0, 2));
        assert_eq!(parse_element("-3+0r").unwrap(), q(-3, 0));
        assert_eq!(parse_element("r").unwrap(), q(0, 1));
        assert_eq!(parse_element("  7 ").unwrap(), q(7, 0));
        assert_eq!(parse_element("4-2r").unwrap(), q(4, -2));
        assert_eq!(parse_element("1+r").unwrap(), q(1, 1));
        assert_eq!(parse_element("-r").unwrap(), q(0, -1));
        assert_eq!(parse_element("+5").unwrap(), q(5, 0));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "", "x", "1+", "1+2", "1r+2", "1++2r", "1+2rr", "2 r", "1.5", "r2", "--1", "1+-2r",
            "3x",
        ] {
            assert!(parse_element(bad).is_err(), "accepted {bad:?}");
        }
        let e = parse_element("1+2x").unwrap_err();
        assert_eq!(e.token, "x");
        assert!(e.to_string().contains("\"x\""));
        let e = parse_element("3x").unwrap_err();
        assert_eq!((e.token.as_str(), e.position), ("x", 1));
    }

    #[test]
    fn out_of_range_is_an_error() {
        let big = "1".repeat(50);
        assert!(parse_element(&big).is_err());
        let min = format!("0{}r", i128::MIN);
        assert_eq!(parse_element(&min).unwrap(), q(0, i128::MIN));
    }
}
