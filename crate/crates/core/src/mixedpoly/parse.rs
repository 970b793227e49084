//! Lexer and recursive-descent parser for the mixed polynomial grammar.
//!
//! ```text
//! poly   := ws term (ws ('+'|'-') ws term)* ws
//! term   := factor (ws '*'? ws factor)*
//! factor := coeff | var power?
//! var    := 'u' | 'v' | '~u' | '~v' | 'ub' | 'vb'
//! power  := '^' uint
//! coeff  := number | 'i' | '(' signedNumber (('+'|'-') number? 'i')? ')'
//! number := uint ('.' digits)?
//! ```
//!
//! Whitespace juxtaposition is multiplication; `~u` and `ub` both denote ū.

use num_complex::Complex64;

use super::{MixedPolynomial, Variable};
use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    ImagUnit,
    Var(Variable),
    // `integral` records whether the literal had no fractional part, so
    // exponents can insist on uints.
    Number { value: f64, integral: bool },
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token and its starting byte offset; `None` at end of input.
    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let b = self.src[self.pos];
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'i' => {
                self.pos += 1;
                Tok::ImagUnit
            }
            b'u' | b'v' => {
                self.pos += 1;
                let conj = self.src.get(self.pos) == Some(&b'b');
                if conj {
                    self.pos += 1;
                }
                Tok::Var(match (b, conj) {
                    (b'u', false) => Variable::U,
                    (b'u', true) => Variable::UBar,
                    (b'v', false) => Variable::V,
                    (b'v', true) => Variable::VBar,
                    _ => unreachable!(),
                })
            }
            b'~' => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(b'u') => {
                        self.pos += 1;
                        Tok::Var(Variable::UBar)
                    }
                    Some(b'v') => {
                        self.pos += 1;
                        Tok::Var(Variable::VBar)
                    }
                    _ => {
                        return Err(Error::Syntax {
                            pos: self.pos,
                            expected: "'u' or 'v' after '~'".into(),
                        })
                    }
                }
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let mut integral = true;
                if self.src.get(end) == Some(&b'.') {
                    integral = false;
                    end += 1;
                    let frac_start = end;
                    while end < self.src.len() && self.src[end].is_ascii_digit() {
                        end += 1;
                    }
                    if end == frac_start {
                        return Err(Error::Syntax {
                            pos: end,
                            expected: "digits after '.'".into(),
                        });
                    }
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).expect("ascii digits");
                let value: f64 = text.parse().map_err(|_| Error::Syntax {
                    pos: start,
                    expected: "a representable number".into(),
                })?;
                if !value.is_finite() {
                    return Err(Error::Syntax {
                        pos: start,
                        expected: "a number representable in double precision".into(),
                    });
                }
                self.pos = end;
                Tok::Number { value, integral }
            }
            _ => {
                return Err(Error::Syntax {
                    pos: start,
                    expected: "term, operator or end of input".into(),
                })
            }
        };
        Ok(Some((start, tok)))
    }
}

type RawTerms = Vec<(Complex64, (u32, u32, u32, u32))>;

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| *t);
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.idx += 1;
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: self.pos(),
                expected: what.into(),
            })
        }
    }

    fn parse_poly(&mut self) -> Result<RawTerms> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.idx += 1;
                -1.0
            }
            Some(Tok::Plus) => {
                self.idx += 1;
                1.0
            }
            _ => 1.0,
        };
        loop {
            let (coeff, quad) = self.parse_term()?;
            terms.push((coeff * sign, quad));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => {
                    self.idx += 1;
                    sign = 1.0;
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    sign = -1.0;
                }
                Some(_) => {
                    return Err(Error::Syntax {
                        pos: self.pos(),
                        expected: "'+', '-' or end of input".into(),
                    })
                }
            }
        }
        Ok(terms)
    }

    fn parse_term(&mut self) -> Result<(Complex64, (u32, u32, u32, u32))> {
        let mut coeff = Complex64::new(1.0, 0.0);
        let mut exps = [0u32; 4];
        let mut nfactors = 0usize;
        loop {
            match self.peek() {
                Some(Tok::Number { .. })
                | Some(Tok::ImagUnit)
                | Some(Tok::LParen)
                | Some(Tok::Var(_)) => {
                    self.parse_factor(&mut coeff, &mut exps)?;
                    nfactors += 1;
                }
                Some(Tok::Star) => {
                    self.idx += 1;
                    if !matches!(
                        self.peek(),
                        Some(Tok::Number { .. })
                            | Some(Tok::ImagUnit)
                            | Some(Tok::LParen)
                            | Some(Tok::Var(_))
                    ) {
                        return Err(Error::Syntax {
                            pos: self.pos(),
                            expected: "factor after '*'".into(),
                        });
                    }
                }
                _ => break,
            }
        }
        if nfactors == 0 {
            return Err(Error::Syntax {
                pos: self.pos(),
                expected: "term".into(),
            });
        }
        Ok((coeff, (exps[0], exps[1], exps[2], exps[3])))
    }

    fn parse_factor(&mut self, coeff: &mut Complex64, exps: &mut [u32; 4]) -> Result<()> {
        match self.bump().expect("caller checked a factor starts here") {
            Tok::Number { value, .. } => {
                *coeff *= value;
            }
            Tok::ImagUnit => {
                *coeff *= Complex64::new(0.0, 1.0);
            }
            Tok::LParen => {
                let c = self.parse_paren_coeff()?;
                *coeff *= c;
            }
            Tok::Var(var) => {
                let exp = if self.peek() == Some(&Tok::Caret) {
                    self.idx += 1;
                    self.parse_uint()?
                } else {
                    1
                };
                let slot = match var {
                    Variable::U => 0,
                    Variable::V => 1,
                    Variable::UBar => 2,
                    Variable::VBar => 3,
                };
                exps[slot] = exps[slot].checked_add(exp).ok_or_else(|| Error::Syntax {
                    pos: self.pos(),
                    expected: "a smaller exponent".into(),
                })?;
            }
            _ => unreachable!("peeked token set"),
        }
        Ok(())
    }

    fn parse_uint(&mut self) -> Result<u32> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Number {
                value,
                integral: true,
            }) if value >= 0.0 && value <= u32::MAX as f64 => Ok(value as u32),
            Some(Tok::Minus) => Err(Error::NegativeExponent { pos }),
            _ => Err(Error::Syntax {
                pos,
                expected: "a nonnegative integer exponent".into(),
            }),
        }
    }

    /// `'(' signedNumber (('+'|'-') number? 'i')? ')'`
    fn parse_paren_coeff(&mut self) -> Result<Complex64> {
        let re_sign = match self.peek() {
            Some(Tok::Minus) => {
                self.idx += 1;
                -1.0
            }
            Some(Tok::Plus) => {
                self.idx += 1;
                1.0
            }
            _ => 1.0,
        };
        let re = match self.bump() {
            Some(Tok::Number { value, .. }) => value * re_sign,
            _ => {
                return Err(Error::Syntax {
                    pos: self.pos(),
                    expected: "number inside '('".into(),
                })
            }
        };
        let mut im = 0.0;
        match self.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => {
                let im_sign = if self.peek() == Some(&Tok::Minus) {
                    -1.0
                } else {
                    1.0
                };
                self.idx += 1;
                let magnitude = match self.peek() {
                    Some(&Tok::Number { value, .. }) => {
                        self.idx += 1;
                        value
                    }
                    _ => 1.0,
                };
                self.expect(Tok::ImagUnit, "'i' to close the imaginary part")?;
                im = im_sign * magnitude;
            }
            _ => {}
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(Complex64::new(re, im))
    }
}

pub(super) fn parse(text: &str) -> Result<MixedPolynomial> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    while let Some(tok) = lexer.next()? {
        toks.push(tok);
    }
    let mut parser = Parser {
        toks,
        idx: 0,
        end: text.len(),
    };
    if parser.peek().is_none() {
        return Err(Error::Syntax {
            pos: 0,
            expected: "a polynomial".into(),
        });
    }
    let terms = parser.parse_poly()?;
    MixedPolynomial::from_terms(terms)
}
