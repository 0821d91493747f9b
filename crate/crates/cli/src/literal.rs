//! Text form of multivectors: `3 - 5e1 + 2/3*e12 + e{1,3,14}`.
//!
//! A term is `coef`, `coef*eIDX`, `coefeIDX` or `eIDX`. `IDX` is an
//! ascending digit string when `n <= 9` and the comma form `{1,3,14}`
//! otherwise (the comma form is accepted everywhere). A bare `e` is the
//! identity. Repeated blades accumulate.

use gasylv_core::{Blade, Multivector, Rational, Scalar, Signature};
use num_traits::{Signed, Zero};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("parse error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("blade {blade} does not exist in {sig} (indices run from 1 to {dim})")]
    BladeOutOfRange {
        blade: String,
        sig: String,
        dim: usize,
    },
}

impl LiteralError {
    fn at(offset: usize, message: impl Into<String>) -> Self {
        LiteralError::Syntax {
            offset,
            message: message.into(),
        }
    }

    pub fn offset(&self) -> Option<usize> {
        match self {
            LiteralError::Syntax { offset, .. } => Some(*offset),
            LiteralError::BladeOutOfRange { .. } => None,
        }
    }
}

/// Scalars that can be read from and written to coefficient tokens.
pub trait Coefficient: Scalar {
    /// Parses an unsigned token: digits, `a/b`, or (float ring) a decimal.
    fn parse_token(token: &str) -> Result<Self, String>;

    /// Unsigned magnitude as the parser reads it back.
    fn magnitude(&self) -> String;

    fn is_negative(&self) -> bool;

    fn to_json(&self) -> Value;
}

impl Coefficient for Rational {
    fn parse_token(token: &str) -> Result<Self, String> {
        if token.contains('.') {
            return Err(format!(
                "decimal coefficient `{token}` needs the f64 scalar ring"
            ));
        }
        let (num, den) = match token.split_once('/') {
            Some((n, d)) => (n, d),
            None => (token, "1"),
        };
        let num = num.parse().map_err(|_| format!("bad integer `{num}`"))?;
        let den: num_bigint::BigInt = den
            .parse()
            .map_err(|_| format!("bad denominator `{den}`"))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(num, den))
    }

    fn magnitude(&self) -> String {
        Scalar::abs(self).to_string()
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Coefficient for f64 {
    fn parse_token(token: &str) -> Result<Self, String> {
        let parse = |s: &str| s.parse::<f64>().map_err(|_| format!("bad number `{s}`"));
        match token.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d == 0.0 {
                    return Err("zero denominator".into());
                }
                Ok(parse(n)? / d)
            }
            None => parse(token),
        }
    }

    fn magnitude(&self) -> String {
        // `Display` for f64 never uses exponent notation and round-trips.
        format!("{}", f64::abs(*self))
    }

    fn is_negative(&self) -> bool {
        self.is_sign_negative() && *self != 0.0
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self)
            .map(Value::Number)
            .unwrap_or_else(|| Value::String(self.to_string()))
    }
}

/// Blade name: `e` for the identity, `e134` for `n <= 9`, `e{1,3,14}` above.
pub fn blade_name(blade: Blade, sig: Signature) -> String {
    if blade.mask() == 0 {
        return "e".into();
    }
    let idx: Vec<String> = blade.indices().map(|i| i.to_string()).collect();
    if sig.dim() <= 9 {
        format!("e{}", idx.concat())
    } else {
        format!("e{{{}}}", idx.join(","))
    }
}

pub fn format_multivector<S: Coefficient>(mv: &Multivector<S>) -> String {
    let sig = mv.sig();
    let mut terms: Vec<(Blade, &S)> = mv.terms().collect();
    terms.sort_by(|a, b| a.0.display_cmp(b.0));
    let mut out = String::new();
    for (i, (blade, coef)) in terms.into_iter().enumerate() {
        let neg = coef.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = coef.magnitude();
        if blade.mask() == 0 {
            out.push_str(&mag);
        } else {
            let name = blade_name(blade, sig);
            if mag == "1" {
                out.push_str(&name);
            } else if mag.bytes().all(|b| b.is_ascii_digit()) {
                out.push_str(&mag);
                out.push_str(&name);
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&name);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Nonzero coefficients keyed by blade name, in display order.
pub fn multivector_json<S: Coefficient>(mv: &Multivector<S>) -> Value {
    let mut terms: Vec<(Blade, &S)> = mv.terms().collect();
    terms.sort_by(|a, b| a.0.display_cmp(b.0));
    let map = terms
        .into_iter()
        .map(|(blade, c)| (blade_name(blade, mv.sig()), c.to_json()))
        .collect();
    Value::Object(map)
}

pub fn parse_multivector<S: Coefficient>(
    text: &str,
    sig: Signature,
) -> Result<Multivector<S>, LiteralError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        sig,
    };
    let mut terms: Vec<(u32, S)> = Vec::new();
    p.skip_ws();
    if p.at_end() {
        return Err(LiteralError::at(0, "empty expression"));
    }
    let mut first = true;
    while !p.at_end() {
        let negative = match p.peek() {
            Some('+') => {
                p.pos += 1;
                false
            }
            Some('-') => {
                p.pos += 1;
                true
            }
            _ if first => false,
            Some(c) => {
                return Err(LiteralError::at(
                    p.pos,
                    format!("expected `+` or `-`, found `{c}`"),
                ))
            }
            None => unreachable!(),
        };
        p.skip_ws();
        let (mask, mut coef) = p.term::<S>()?;
        if negative {
            coef = -coef;
        }
        terms.push((mask, coef));
        p.skip_ws();
        first = false;
    }
    Ok(Multivector::from_terms(sig, terms).expect("masks checked while parsing"))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    sig: Signature,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn term<S: Coefficient>(&mut self) -> Result<(u32, S), LiteralError> {
        let start = self.pos;
        let coef = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => Some(self.coefficient::<S>()?),
            Some('e') => None,
            Some(c) => {
                return Err(LiteralError::at(
                    start,
                    format!("expected a term, found `{c}`"),
                ))
            }
            None => return Err(LiteralError::at(start, "expected a term after the sign")),
        };
        self.skip_ws();
        let explicit_star = self.peek() == Some('*');
        if explicit_star {
            self.pos += 1;
            self.skip_ws();
        }
        let mask = if self.peek() == Some('e') {
            self.blade()?
        } else if explicit_star {
            return Err(LiteralError::at(self.pos, "expected a blade after `*`"));
        } else if coef.is_none() {
            unreachable!("term starts with a digit or `e`");
        } else {
            0
        };
        Ok((mask, coef.unwrap_or_else(S::one)))
    }

    fn coefficient<S: Coefficient>(&mut self) -> Result<S, LiteralError> {
        let start = self.pos;
        let mut token = self.take_while(|c| c.is_ascii_digit() || c == '.');
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.take_while(|c| c.is_ascii_digit());
            if den.is_empty() {
                return Err(LiteralError::at(
                    self.pos,
                    "expected a denominator after `/`",
                ));
            }
            token.push('/');
            token.push_str(&den);
        }
        if token.matches('.').count() > 1 || token == "." {
            return Err(LiteralError::at(
                start,
                format!("malformed number `{token}`"),
            ));
        }
        S::parse_token(&token).map_err(|msg| LiteralError::at(start, msg))
    }

    fn blade(&mut self) -> Result<u32, LiteralError> {
        let start = self.pos;
        self.pos += 1;
        let indices: Vec<usize> = match self.peek() {
            Some('{') => {
                self.pos += 1;
                let mut idx = Vec::new();
                loop {
                    self.skip_ws();
                    let at = self.pos;
                    let digits = self.take_while(|c| c.is_ascii_digit());
                    if digits.is_empty() {
                        return Err(LiteralError::at(at, "expected a generator index"));
                    }
                    idx.push(
                        digits
                            .parse()
                            .map_err(|_| LiteralError::at(at, "index too large"))?,
                    );
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        Some('}') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(LiteralError::at(self.pos, "expected `,` or `}`")),
                    }
                }
                idx
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                if self.sig.dim() > 9 && digits.len() > 1 {
                    return Err(LiteralError::at(
                        start,
                        format!("`e{digits}` is ambiguous for n > 9; use e{{i,j,...}}"),
                    ));
                }
                digits.chars().map(|c| c as usize - '0' as usize).collect()
            }
            _ => Vec::new(),
        };
        let name = self.chars[start..self.pos].iter().collect::<String>();
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LiteralError::at(
                start,
                format!("indices of `{name}` must be strictly ascending"),
            ));
        }
        let dim = self.sig.dim();
        if indices.iter().any(|&i| i == 0 || i > dim) {
            return Err(LiteralError::BladeOutOfRange {
                blade: name,
                sig: self.sig.to_string(),
                dim,
            });
        }
        Ok(Blade::from_indices(&indices).mask())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn simple_terms() {
        let s = sig(1, 3);
        let mv: Multivector<Rational> = parse_multivector("3 - 5e1 + e12", s).unwrap();
        assert_eq!(mv.coeff(Blade::SCALAR), &rat(3, 1));
        assert_eq!(mv.coeff(Blade::new(1)), &rat(-5, 1));
        assert_eq!(mv.coeff(Blade::new(3)), &rat(1, 1));
        assert_eq!(mv.terms().count(), 3);
    }

    #[test]
    fn repeated_blades_accumulate() {
        let mv: Multivector<Rational> = parse_multivector("e1 + e1", sig(1, 3)).unwrap();
        assert_eq!(mv.coeff(Blade::new(1)), &rat(2, 1));
        assert_eq!(mv.terms().count(), 1);
    }

    #[test]
    fn term_forms() {
        let s = sig(2, 2);
        let mv: Multivector<Rational> =
            parse_multivector(" -2/3 * e13 +4e24-e + 7/2e1234 ", s).unwrap();
        assert_eq!(mv.coeff(Blade::new(0b0101)), &rat(-2, 3));
        assert_eq!(mv.coeff(Blade::new(0b1010)), &rat(4, 1));
        assert_eq!(mv.coeff(Blade::SCALAR), &rat(-1, 1));
        assert_eq!(mv.coeff(Blade::new(0b1111)), &rat(7, 2));
    }

    #[test]
    fn comma_form() {
        let s = sig(10, 4);
        let mv: Multivector<Rational> = parse_multivector("e{1,3,14} - 2e{10}", s).unwrap();
        assert_eq!(mv.coeff(Blade::from_indices(&[1, 3, 14])), &rat(1, 1));
        assert_eq!(mv.coeff(Blade::from_indices(&[10])), &rat(-2, 1));
        assert_eq!(format_multivector(&mv), "-2e{10} + e{1,3,14}");
        let small: Multivector<Rational> = parse_multivector("e{1,3}", sig(3, 0)).unwrap();
        assert_eq!(format_multivector(&small), "e13");
    }

    #[test]
    fn floats() {
        let s = sig(3, 0);
        let mv: Multivector<f64> = parse_multivector("1.5 - .25*e12 + 3/4e3", s).unwrap();
        assert_eq!(mv.coeffs()[0], 1.5);
        assert_eq!(mv.coeff(Blade::new(3)), &-0.25);
        assert_eq!(mv.coeff(Blade::new(4)), &0.75);
        assert_eq!(format_multivector(&mv), "1.5 + 0.75*e3 - 0.25*e12");
    }

    #[test]
    fn errors_carry_offsets() {
        let s = sig(1, 3);
        let err = parse_multivector::<Rational>("3 + 2e31", s).unwrap_err();
        assert_eq!(err.offset(), Some(5));
        let err = parse_multivector::<Rational>("3 $ e1", s).unwrap_err();
        assert_eq!(err.offset(), Some(2));
        let err = parse_multivector::<Rational>("1.5", s).unwrap_err();
        assert!(err.to_string().contains("f64"));
        let err = parse_multivector::<Rational>("1/0", s).unwrap_err();
        assert_eq!(err.offset(), Some(0));
        let err = parse_multivector::<Rational>("2*", s).unwrap_err();
        assert_eq!(err.offset(), Some(2));
        let err = parse_multivector::<Rational>("", s).unwrap_err();
        assert_eq!(err.offset(), Some(0));
        let err = parse_multivector::<Rational>("e1 e2", s).unwrap_err();
        assert_eq!(err.offset(), Some(3));
        let err = parse_multivector::<f64>("1e5", s).unwrap_err();
        assert!(matches!(err, LiteralError::BladeOutOfRange { .. }));
        let err = parse_multivector::<Rational>("e12", sig(10, 0)).unwrap_err();
        assert_eq!(err.offset(), Some(0));
    }

    #[test]
    fn out_of_range_names_the_blade() {
        let err = parse_multivector::<Rational>("e1 + 4e25", sig(1, 3)).unwrap_err();
        assert_eq!(
            err,
            LiteralError::BladeOutOfRange {
                blade: "e25".into(),
                sig: "Cl(1,3)".into(),
                dim: 4
            }
        );
        assert!(err.to_string().contains("e25"));
        let err = parse_multivector::<Rational>("e0", sig(1, 3)).unwrap_err();
        assert!(matches!(err, LiteralError::BladeOutOfRange { .. }));
    }

    #[test]
    fn printing() {
        let s = sig(1, 3);
        let mv: Multivector<Rational> =
            parse_multivector("e14 + e23 - 1/2e2 - 3 + e1 + 2e1234", s).unwrap();
        assert_eq!(
            format_multivector(&mv),
            "-3 + e1 - 1/2*e2 + e14 + e23 + 2e1234"
        );
        assert_eq!(format_multivector(&Multivector::<Rational>::zero(s)), "0");
        let json = multivector_json(&mv);
        let keys: Vec<&String> = json.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["e", "e1", "e2", "e14", "e23", "e1234"]);
        assert_eq!(json["e2"], "-1/2");
    }
}
