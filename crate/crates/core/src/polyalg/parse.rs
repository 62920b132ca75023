//! Text grammar for polynomials.
//!
//! ```text
//! poly   := sign* term (sign+ term)*
//! term   := rational ['*'] factor (['*'] factor)* | rational | factor (['*'] factor)*
//! factor := var ['^' int]
//! rational := int ['/' int]
//! ```
//!
//! Whitespace is insignificant. Juxtaposed variables such as `x1x2^2` are
//! split against the allowed variable names.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{Monomial, MultiPoly, PolyError, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
            continue;
        }
        if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            other => {
                return Err(PolyError::Unexpected {
                    found: other.to_string(),
                    column: col,
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

/// Splits an identifier into a sequence of allowed variable names, preferring
/// longer names first.
fn split_ident<'a>(ident: &str, allowed: &[&'a str]) -> Option<Vec<&'a str>> {
    if ident.is_empty() {
        return Some(Vec::new());
    }
    let mut candidates: Vec<&str> = allowed
        .iter()
        .copied()
        .filter(|v| ident.starts_with(v))
        .collect();
    candidates.sort_by_key(|v| std::cmp::Reverse(v.len()));
    for v in candidates {
        if let Some(mut rest) = split_ident(&ident[v.len()..], allowed) {
            rest.insert(0, v);
            return Some(rest);
        }
    }
    None
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    allowed: &'a [&'a str],
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |&(_, c)| c)
    }

    fn unexpected(&self) -> PolyError {
        match self.toks.get(self.pos) {
            Some((t, c)) => PolyError::Unexpected {
                found: describe(t),
                column: *c,
            },
            None => PolyError::UnexpectedEnd,
        }
    }

    /// Consumes a run of `+`/`-` and returns the accumulated sign.
    fn signs(&mut self) -> (bool, usize) {
        let mut negative = false;
        let mut n = 0;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {}
                Tok::Minus => negative = !negative,
                _ => break,
            }
            self.pos += 1;
            n += 1;
        }
        (negative, n)
    }

    fn rational(&mut self) -> Result<Option<Rational>, PolyError> {
        let num = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return Ok(None),
        };
        self.pos += 1;
        if self.peek() != Some(&Tok::Slash) {
            return Ok(Some(Rational::from_integer(num)));
        }
        self.pos += 1;
        let col = self.col();
        match self.peek() {
            Some(Tok::Int(den)) => {
                let den = den.clone();
                self.pos += 1;
                if den.is_zero() {
                    return Err(PolyError::ZeroDenominator { column: col });
                }
                Ok(Some(Rational::new(num, den)))
            }
            _ => Err(self.unexpected()),
        }
    }

    fn factor(&mut self, pairs: &mut Vec<(String, u32)>) -> Result<(), PolyError> {
        let col = self.col();
        let ident = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(self.unexpected()),
        };
        self.pos += 1;
        let names = split_ident(&ident, self.allowed).ok_or(PolyError::UnknownVariable {
            name: ident.clone(),
            column: col,
        })?;
        let mut last_exp = 1;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let col = self.col();
            last_exp = match self.peek() {
                Some(Tok::Int(e)) => e
                    .to_u32()
                    .ok_or(PolyError::MalformedExponent { column: col })?,
                _ => return Err(PolyError::MalformedExponent { column: col }),
            };
            self.pos += 1;
        }
        let n = names.len();
        for (k, name) in names.into_iter().enumerate() {
            let e = if k + 1 == n { last_exp } else { 1 };
            pairs.push((name.to_string(), e));
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Rational, Monomial), PolyError> {
        let coeff = self.rational()?;
        let mut pairs = Vec::new();
        let mut first = true;
        loop {
            match self.peek() {
                Some(Tok::Star) if coeff.is_some() || !first => {
                    self.pos += 1;
                    self.factor(&mut pairs)?;
                }
                Some(Tok::Ident(_)) => self.factor(&mut pairs)?,
                _ if coeff.is_none() && first => return Err(self.unexpected()),
                _ => break,
            }
            first = false;
        }
        let mono = Monomial::from_pairs(pairs.iter().map(|(v, e)| (v.as_str(), *e)));
        Ok((coeff.unwrap_or_else(Rational::one), mono))
    }

    fn poly(&mut self) -> Result<MultiPoly, PolyError> {
        if self.toks.is_empty() {
            return Err(PolyError::Empty);
        }
        let mut out = Vec::new();
        let (mut negative, _) = self.signs();
        loop {
            let (c, m) = self.term()?;
            out.push((m, if negative { -c } else { c }));
            if self.peek().is_none() {
                break;
            }
            let (neg, n) = self.signs();
            if n == 0 {
                return Err(self.unexpected());
            }
            negative = neg;
        }
        Ok(MultiPoly::from_terms(out))
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => n.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Slash => "/".into(),
        Tok::Caret => "^".into(),
    }
}

/// Parses `text` into a canonical polynomial over the `allowed` variables.
pub fn parse_poly(text: &str, allowed: &[&str]) -> Result<MultiPoly, PolyError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        allowed,
        end_col: text.chars().count() + 1,
    };
    parser.poly()
}

/// Parses a single rational literal such as `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rational, PolyError> {
    let p = parse_poly(text, &[])?;
    match p.as_constant() {
        Some(c) => Ok(c),
        None => Err(PolyError::Unexpected {
            found: text.trim().to_string(),
            column: 1,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, ratio};

    const XS: &[&str] = &["x1", "x2"];

    fn mono(pairs: &[(&str, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn single_monomial() {
        let p = parse_poly("x1^3", XS).unwrap();
        assert_eq!(p, MultiPoly::term(rat(1), mono(&[("x1", 3)])));
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_poly("3/2 x1^2 x2 - x2^3", XS).unwrap();
        let expected = MultiPoly::from_terms([
            (mono(&[("x1", 2), ("x2", 1)]), ratio(3, 2)),
            (mono(&[("x2", 3)]), rat(-1)),
        ]);
        assert_eq!(p, expected);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn cancellation_gives_empty_term_map() {
        let p = parse_poly("x1 - x1", XS).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn juxtaposition_and_stars_agree() {
        let a = parse_poly("3x1^2x2", XS).unwrap();
        let b = parse_poly("3*x1^2*x2", XS).unwrap();
        let c = parse_poly("3 * x1 ^ 2 x2", XS).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn unary_minus_and_constants() {
        let p = parse_poly("-x1 + -2 - -5", XS).unwrap();
        assert_eq!(p.coeff(&mono(&[("x1", 1)])), rat(-1));
        assert_eq!(p.coeff(&Monomial::one()), rat(3));
        assert_eq!(parse_rational(" -3/6 ").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_poly("x1 + x3", XS),
            Err(PolyError::UnknownVariable {
                name: "x3".into(),
                column: 6
            })
        );
        assert_eq!(
            parse_poly("x1^", XS),
            Err(PolyError::MalformedExponent { column: 4 })
        );
        assert_eq!(
            parse_poly("x1^x2", XS),
            Err(PolyError::MalformedExponent { column: 4 })
        );
        assert_eq!(
            parse_poly("1/0 x1", XS),
            Err(PolyError::ZeroDenominator { column: 3 })
        );
        assert_eq!(parse_poly("   ", XS), Err(PolyError::Empty));
        assert!(matches!(
            parse_poly("x1 x1 +", XS),
            Err(PolyError::UnexpectedEnd)
        ));
        assert!(matches!(
            parse_poly("x1 2", XS),
            Err(PolyError::Unexpected { .. })
        ));
        assert!(matches!(
            parse_poly("x1 ; x2", XS),
            Err(PolyError::Unexpected { .. })
        ));
    }

    #[test]
    fn symbolic_names_split() {
        let vars = ["F1_111", "F2_112", "z1"];
        let p = parse_poly("2F1_111F2_112z1^2", &vars).unwrap();
        assert_eq!(
            p.coeff(&mono(&[("F1_111", 1), ("F2_112", 1), ("z1", 2)])),
            rat(2)
        );
    }
}
