//! Eigenvalue sequences: closed forms, explicit prefixes, and the little
//! expression grammar the command line uses.
//!
//! Grammar:
//!
//! ```text
//! poly:<c0>,<c1>,...        a_n = c0 + c1 n + c2 n^2 + ...
//! list:<v0>,<v1>,...        explicit prefix, defined only on its window
//! geom:<r>[:<c>]            a_n = c r^n          (c defaults to 1)
//! recip-factorial[:<c>]     a_n = c / n!
//! alt:<expr>                a_n = (-1)^n expr(n)
//! ```
//!
//! Parse errors carry the byte offset of the offending token.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::{factorial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    Explicit(Vec<Rational>),
    PolynomialInN(Polynomial),
    /// c * r^n
    Geometric {
        ratio: Rational,
        scale: Rational,
    },
    /// c / n!
    ReciprocalFactorial {
        scale: Rational,
    },
    /// (-1)^n * inner(n)
    SignAlternating(Box<SequenceSpec>),
}

impl SequenceSpec {
    /// Exact a_n. Explicit sequences are defined only on their window.
    pub fn eval(&self, n: usize) -> Result<Rational> {
        match self {
            SequenceSpec::Explicit(values) => values.get(n).cloned().ok_or(Error::SequenceWindow {
                index: n,
                len: values.len(),
            }),
            SequenceSpec::PolynomialInN(p) => Ok(p.eval(&Rational::from(n as i64))),
            SequenceSpec::Geometric { ratio, scale } => Ok(scale * ratio.pow(n as u32)),
            SequenceSpec::ReciprocalFactorial { scale } => Ok(scale / factorial(n)),
            SequenceSpec::SignAlternating(inner) => {
                let v = inner.eval(n)?;
                Ok(if n % 2 == 1 { -v } else { v })
            }
        }
    }

    /// Length bound for explicit data, `None` when the sequence is total.
    pub fn window_len(&self) -> Option<usize> {
        match self {
            SequenceSpec::Explicit(values) => Some(values.len()),
            SequenceSpec::SignAlternating(inner) => inner.window_len(),
            _ => None,
        }
    }

    /// Fold sign alternation into the wrapped form where that is exact:
    /// `alt:alt:e` is `e`, and alternating a geometric sequence negates its
    /// ratio. Explicit data absorbs the signs directly.
    pub fn normalized(&self) -> SequenceSpec {
        match self {
            SequenceSpec::SignAlternating(inner) => match inner.normalized() {
                SequenceSpec::SignAlternating(x) => *x,
                SequenceSpec::Geometric { ratio, scale } => SequenceSpec::Geometric {
                    ratio: -ratio,
                    scale,
                },
                SequenceSpec::Explicit(values) => SequenceSpec::Explicit(
                    values
                        .into_iter()
                        .enumerate()
                        .map(|(n, v)| if n % 2 == 1 { -v } else { v })
                        .collect(),
                ),
                SequenceSpec::PolynomialInN(p) if p.is_zero() => {
                    SequenceSpec::PolynomialInN(Polynomial::zero())
                }
                other => SequenceSpec::SignAlternating(Box::new(other)),
            },
            other => other.clone(),
        }
    }

    /// The constant value of a provably constant closed form. Explicit
    /// prefixes never count: a prefix proves nothing about the tail.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.normalized() {
            SequenceSpec::PolynomialInN(p) => match p.degree() {
                None => Some(Rational::zero()),
                Some(0) => Some(p.coeff(0)),
                _ => None,
            },
            SequenceSpec::Geometric { ratio, scale } => {
                if scale.is_zero() {
                    Some(Rational::zero())
                } else if ratio.is_one() {
                    Some(scale)
                } else {
                    None
                }
            }
            SequenceSpec::ReciprocalFactorial { scale } => scale.is_zero().then(Rational::zero),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<SequenceSpec> {
        parse_expr(s, 0)
    }
}

impl FromStr for SequenceSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SequenceSpec::parse(s)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Explicit(values) => {
                write!(f, "list:{}", join(values))
            }
            SequenceSpec::PolynomialInN(p) => {
                if p.is_zero() {
                    write!(f, "poly:0")
                } else {
                    write!(f, "poly:{}", join(p.coeffs()))
                }
            }
            SequenceSpec::Geometric { ratio, scale } => {
                if scale.is_one() {
                    write!(f, "geom:{ratio}")
                } else {
                    write!(f, "geom:{ratio}:{scale}")
                }
            }
            SequenceSpec::ReciprocalFactorial { scale } => {
                if scale.is_one() {
                    write!(f, "recip-factorial")
                } else {
                    write!(f, "recip-factorial:{scale}")
                }
            }
            SequenceSpec::SignAlternating(inner) => write!(f, "alt:{inner}"),
        }
    }
}

fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn parse_rational_at(s: &str, offset: usize) -> Result<Rational> {
    let trimmed_start = s.len() - s.trim_start().len();
    s.parse::<Rational>().map_err(|e| match e {
        Error::Parse { message, .. } => parse_err(offset + trimmed_start, message),
        other => other,
    })
}

fn parse_rational_list(s: &str, offset: usize) -> Result<Vec<Rational>> {
    if s.is_empty() {
        return Err(parse_err(offset, "expected at least one value"));
    }
    let mut out = Vec::new();
    let mut cursor = 0usize;
    for piece in s.split(',') {
        if piece.trim().is_empty() {
            return Err(parse_err(offset + cursor, "empty value"));
        }
        out.push(parse_rational_at(piece, offset + cursor)?);
        cursor += piece.len() + 1;
    }
    Ok(out)
}

fn parse_expr(s: &str, base: usize) -> Result<SequenceSpec> {
    if s.is_empty() {
        return Err(parse_err(base, "expected a sequence expression"));
    }
    if let Some(rest) = s.strip_prefix("alt:") {
        let inner = parse_expr(rest, base + 4)?;
        return Ok(SequenceSpec::SignAlternating(Box::new(inner)));
    }
    if s == "recip-factorial" {
        return Ok(SequenceSpec::ReciprocalFactorial {
            scale: Rational::one(),
        });
    }
    if let Some(rest) = s.strip_prefix("recip-factorial:") {
        let scale = parse_rational_at(rest, base + 16)?;
        return Ok(SequenceSpec::ReciprocalFactorial { scale });
    }
    if let Some(rest) = s.strip_prefix("poly:") {
        let coeffs = parse_rational_list(rest, base + 5)?;
        return Ok(SequenceSpec::PolynomialInN(Polynomial::from_coeffs(coeffs)));
    }
    if let Some(rest) = s.strip_prefix("list:") {
        let values = parse_rational_list(rest, base + 5)?;
        return Ok(SequenceSpec::Explicit(values));
    }
    if let Some(rest) = s.strip_prefix("geom:") {
        let mut parts = rest.splitn(3, ':');
        let r_part = parts
            .next()
            .filter(|p| !p.is_empty())
            .ok_or_else(|| parse_err(base + 5, "expected a ratio"))?;
        let ratio = parse_rational_at(r_part, base + 5)?;
        let scale = match parts.next() {
            None => Rational::one(),
            Some(c_part) => parse_rational_at(c_part, base + 5 + r_part.len() + 1)?,
        };
        if parts.next().is_some() {
            return Err(parse_err(
                base + 5 + rest.len(),
                "too many ':' separated parts in geometric expression",
            ));
        }
        return Ok(SequenceSpec::Geometric { ratio, scale });
    }
    let kind = s.split(':').next().unwrap_or(s);
    Err(parse_err(
        base,
        format!(
            "unknown sequence kind {kind:?}, expected poly, list, geom, recip-factorial or alt"
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SequenceSpec {
        SequenceSpec::parse(s).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(
            seq("recip-factorial").eval(4).unwrap(),
            Rational::new(1, 24)
        );
        assert_eq!(seq("alt:poly:0,1").eval(3).unwrap(), Rational::from(-3));
        assert_eq!(seq("geom:2").eval(5).unwrap(), Rational::from(32));
        assert_eq!(seq("geom:2:3").eval(2).unwrap(), Rational::from(12));
        assert_eq!(seq("list:1,1,3").eval(2).unwrap(), Rational::from(3));
        assert_eq!(
            seq("list:1,1,3").eval(3),
            Err(Error::SequenceWindow { index: 3, len: 3 })
        );
    }

    #[test]
    fn zero_ratio_keeps_the_n_zero_term() {
        let g = seq("geom:0:5");
        assert_eq!(g.eval(0).unwrap(), Rational::from(5));
        assert_eq!(g.eval(1).unwrap(), Rational::zero());
        assert_eq!(g.eval(7).unwrap(), Rational::zero());
    }

    #[test]
    fn parser_reports_positions() {
        match SequenceSpec::parse("poly:1,x,3") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("expected parse error, got {other:?}"),
        }
        match SequenceSpec::parse("alt:geom:") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("expected parse error, got {other:?}"),
        }
        match SequenceSpec::parse("wibble:1") {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 0);
                assert!(message.contains("wibble"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match SequenceSpec::parse("geom:2:1:9") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 10),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(SequenceSpec::parse("").is_err());
        assert!(SequenceSpec::parse("list:").is_err());
        assert!(SequenceSpec::parse("list:1,,2").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "poly:0,1",
            "list:1,1,3",
            "geom:2",
            "geom:-1/2:3",
            "recip-factorial",
            "recip-factorial:-2/3",
            "alt:poly:0,1",
            "alt:recip-factorial",
        ] {
            assert_eq!(seq(s).to_string(), s);
        }
    }

    #[test]
    fn normalization_folds_alternation() {
        let double = seq("alt:alt:poly:0,1");
        assert_eq!(double.normalized(), seq("poly:0,1"));
        let alt_geom = seq("alt:geom:2:3");
        assert_eq!(
            alt_geom.normalized(),
            SequenceSpec::Geometric {
                ratio: Rational::from(-2),
                scale: Rational::from(3)
            }
        );
        let alt_list = seq("alt:list:1,2,3");
        assert_eq!(
            alt_list.normalized(),
            SequenceSpec::Explicit(vec![
                Rational::from(1),
                Rational::from(-2),
                Rational::from(3)
            ])
        );
        // normalizing does not change any value
        let spec = seq("alt:geom:-3:2");
        let norm = spec.normalized();
        for n in 0..10 {
            assert_eq!(spec.eval(n).unwrap(), norm.eval(n).unwrap());
        }
    }

    #[test]
    fn constant_detection() {
        assert_eq!(seq("poly:5").constant_value(), Some(Rational::from(5)));
        assert_eq!(seq("geom:1:7").constant_value(), Some(Rational::from(7)));
        assert_eq!(seq("geom:3:0").constant_value(), Some(Rational::zero()));
        assert_eq!(
            seq("recip-factorial:0").constant_value(),
            Some(Rational::zero())
        );
        assert_eq!(seq("recip-factorial").constant_value(), None);
        assert_eq!(seq("alt:poly:1").constant_value(), None);
        assert_eq!(seq("list:4,4,4").constant_value(), None);
    }
}
