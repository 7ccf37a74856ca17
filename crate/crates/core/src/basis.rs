//! Simple polynomial bases: the classical families plus user-supplied ones.
//!
//! A simple basis has deg(B_n) = n for every n and a nonzero B_0. Built-in
//! families are generated from their three-term recurrences:
//!
//! * Hermite (physicists'): H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}
//! * Legendre: (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
//! * Laguerre: (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}
//! * Chebyshev T: T_{n+1} = 2x T_n - T_{n-1}
//!
//! Generated polynomials are memoized per `Basis` instance; the memo is an
//! idempotent fill guarded by a mutex.

use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisSpec {
    Monomial,
    Hermite,
    Legendre,
    Laguerre,
    ChebyshevT,
    Custom(Vec<Polynomial>),
}

impl BasisSpec {
    /// Built-in basis by CLI name.
    pub fn builtin(name: &str) -> Option<BasisSpec> {
        match name {
            "monomial" => Some(BasisSpec::Monomial),
            "hermite" => Some(BasisSpec::Hermite),
            "legendre" => Some(BasisSpec::Legendre),
            "laguerre" => Some(BasisSpec::Laguerre),
            "chebyshev" => Some(BasisSpec::ChebyshevT),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BasisSpec::Monomial => "monomial",
            BasisSpec::Hermite => "hermite",
            BasisSpec::Legendre => "legendre",
            BasisSpec::Laguerre => "laguerre",
            BasisSpec::ChebyshevT => "chebyshev",
            BasisSpec::Custom(_) => "custom",
        }
    }
}

impl fmt::Display for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts iff deg(B_n) = n for every supplied index (so B_0 is a nonzero
/// constant); reports the first violating index.
pub fn validate_custom(polys: &[Polynomial]) -> Result<()> {
    for (index, p) in polys.iter().enumerate() {
        if p.is_zero() {
            return Err(Error::InvalidBasis {
                index,
                reason: "must not be the zero polynomial".into(),
            });
        }
        if p.degree() != Some(index) {
            return Err(Error::InvalidBasis {
                index,
                reason: format!(
                    "degree is {}, expected {index}",
                    p.degree().expect("nonzero")
                ),
            });
        }
    }
    Ok(())
}

/// Generator for one basis, with the generated polynomials cached.
#[derive(Debug)]
pub struct Basis {
    spec: BasisSpec,
    memo: Mutex<Vec<Polynomial>>,
}

impl Basis {
    /// Validates custom bases up front; built-ins never fail.
    pub fn new(spec: BasisSpec) -> Result<Basis> {
        if let BasisSpec::Custom(polys) = &spec {
            validate_custom(polys)?;
        }
        Ok(Basis {
            spec,
            memo: Mutex::new(Vec::new()),
        })
    }

    pub fn spec(&self) -> &BasisSpec {
        &self.spec
    }

    /// The basis element B_n.
    pub fn poly(&self, n: usize) -> Result<Polynomial> {
        if let BasisSpec::Custom(polys) = &self.spec {
            if n >= polys.len() {
                return Err(Error::CustomIndexOutOfRange {
                    index: n,
                    len: polys.len(),
                });
            }
        }
        let mut memo = self.memo.lock().expect("basis memo poisoned");
        while memo.len() <= n {
            let k = memo.len();
            let next = self.generate(k, &memo);
            memo.push(next);
        }
        Ok(memo[n].clone())
    }

    fn generate(&self, k: usize, prev: &[Polynomial]) -> Polynomial {
        let x = Polynomial::x();
        match &self.spec {
            BasisSpec::Monomial => Polynomial::monomial(Rational::one(), k),
            BasisSpec::Hermite => match k {
                0 => Polynomial::one(),
                1 => Polynomial::from_ints(&[0, 2]),
                _ => {
                    let two_x = Polynomial::from_ints(&[0, 2]);
                    &two_x * &prev[k - 1] - prev[k - 2].scale(&Rational::from(2 * (k as i64 - 1)))
                }
            },
            BasisSpec::Legendre => match k {
                0 => Polynomial::one(),
                1 => x,
                _ => {
                    let lead = (&x * &prev[k - 1]).scale(&Rational::from(2 * k as i64 - 1));
                    let tail = prev[k - 2].scale(&Rational::from(k as i64 - 1));
                    (lead - tail).scale(&Rational::new(1, k as i64))
                }
            },
            BasisSpec::Laguerre => match k {
                0 => Polynomial::one(),
                1 => Polynomial::from_ints(&[1, -1]),
                _ => {
                    let factor = Polynomial::from_coeffs(vec![
                        Rational::from(2 * k as i64 - 1),
                        Rational::from(-1),
                    ]);
                    let lead = &factor * &prev[k - 1];
                    let tail = prev[k - 2].scale(&Rational::from(k as i64 - 1));
                    (lead - tail).scale(&Rational::new(1, k as i64))
                }
            },
            BasisSpec::ChebyshevT => match k {
                0 => Polynomial::one(),
                1 => x,
                _ => {
                    let two_x = Polynomial::from_ints(&[0, 2]);
                    &two_x * &prev[k - 1] - &prev[k - 2]
                }
            },
            BasisSpec::Custom(polys) => polys[k].clone(),
        }
    }

    /// Coordinates c_0..c_d of `p` in this basis, via back-substitution on
    /// the triangular change-of-basis system. Empty for the zero polynomial.
    pub fn expand(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let Some(d) = p.degree() else {
            return Ok(Vec::new());
        };
        self.poly(d)?;
        let memo = self.memo.lock().expect("basis memo poisoned");
        let mut coords = vec![Rational::zero(); d + 1];
        let mut rem = p.clone();
        for n in (0..=d).rev() {
            let c = rem.coeff(n) / memo[n].coeff(n);
            if !c.is_zero() {
                rem = &rem - &memo[n].scale(&c);
            }
            coords[n] = c;
        }
        debug_assert!(rem.is_zero());
        Ok(coords)
    }

    /// Rebuild sum(c_n B_n) from coordinates.
    pub fn combine(&self, coords: &[Rational]) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        for (n, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc + self.poly(n)?.scale(c);
        }
        Ok(acc)
    }
}
