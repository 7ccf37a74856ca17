//! Multiplier-sequence diagnostics and counterexample search.
//!
//! Everything here certifies NEGATIVES only: a Turan violation, an
//! inadmissible sign pattern, a non-increasing eigenvalue run, or a corpus
//! element whose image fails the real-rootedness check each prove that an
//! operator does not preserve hyperbolicity. The absence of all of them
//! proves nothing, and the reports say so.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::classify::{classify_sequence, SequenceVerdict};
use crate::error::Result;
use crate::operator::OperatorRep;
use crate::polynomial::Polynomial;
use crate::rational::{factorial, Rational};
use crate::sequence::SequenceSpec;
use crate::sturm::{count_real_roots, is_hyperbolic, square_free_part};
use crate::transform::eigen_from_leading;

/// One failed Turan inequality: gamma_{k+1}^2 - gamma_k gamma_{k+2} < 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranViolation {
    pub index: usize,
    pub value: Rational,
}

/// All k with a negative Turan expression, exact arithmetic.
pub fn turan_check(prefix: &[Rational]) -> Vec<TuranViolation> {
    let mut out = Vec::new();
    for k in 0..prefix.len().saturating_sub(2) {
        let value = &prefix[k + 1] * &prefix[k + 1] - &prefix[k] * &prefix[k + 2];
        if value.is_negative() {
            out.push(TuranViolation { index: k, value });
        }
    }
    out
}

/// Admissible multiplier-sequence sign patterns; zeros match anything.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignPattern {
    NonNegative,
    NonPositive,
    AlternatingFromEven,
    AlternatingFromOdd,
    Irregular,
}

pub fn sign_pattern(prefix: &[Rational]) -> SignPattern {
    let fits = |expected: fn(usize) -> i8| {
        prefix
            .iter()
            .enumerate()
            .all(|(k, v)| v.is_zero() || v.signum() == expected(k))
    };
    if fits(|_| 1) {
        SignPattern::NonNegative
    } else if fits(|_| -1) {
        SignPattern::NonPositive
    } else if fits(|k| if k % 2 == 0 { 1 } else { -1 }) {
        SignPattern::AlternatingFromEven
    } else if fits(|k| if k % 2 == 0 { -1 } else { 1 }) {
        SignPattern::AlternatingFromOdd
    } else {
        SignPattern::Irregular
    }
}

/// Scale the k-th monomial coefficient of `p` by a_k.
pub fn apply_sequence_monomial(eigen: &SequenceSpec, p: &Polynomial) -> Result<Polynomial> {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Ok(c * eigen.eval(k)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Expand `p` in the basis, scale coordinate n by a_n, rebuild.
pub fn apply_sequence_basis(
    eigen: &SequenceSpec,
    basis: &Basis,
    p: &Polynomial,
) -> Result<Polynomial> {
    let coords = basis.expand(p)?;
    let scaled = coords
        .into_iter()
        .enumerate()
        .map(|(n, c)| Ok(c * eigen.eval(n)?))
        .collect::<Result<Vec<_>>>()?;
    basis.combine(&scaled)
}

/// Deterministic corpus of real-rooted polynomials up to `max_degree`:
/// fixed families (powers of x and x+1, alternating-grid products, Hermite,
/// Legendre) plus seeded random products of rational linear factors. Every
/// element has only real zeros by construction.
pub fn corpus_generate(max_degree: usize, seed: u64) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let hermite = Basis::new(crate::basis::BasisSpec::Hermite).expect("builtin");
    let legendre = Basis::new(crate::basis::BasisSpec::Legendre).expect("builtin");
    let grid_roots: Vec<Rational> = (1..)
        .map(|i: i64| {
            let v = (i + 1) / 2;
            Rational::from(if i % 2 == 1 { v } else { -v })
        })
        .take(max_degree.max(1))
        .collect();
    for n in 1..=max_degree {
        out.push(Polynomial::monomial(Rational::one(), n));
        out.push(Polynomial::from_ints(&[1, 1]).pow(n as u32));
        let distinct = grid_roots[..n].iter().fold(Polynomial::one(), |acc, r| {
            &acc * &Polynomial::linear_factor(r)
        });
        out.push(distinct);
        out.push(hermite.poly(n).expect("builtin"));
        out.push(legendre.poly(n).expect("builtin"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<Rational> = (-6i64..=6)
        .flat_map(|n| [Rational::from(n), Rational::new(n, 2)])
        .collect();
    for n in 1..=max_degree {
        for _ in 0..4 {
            let p = (0..n).fold(Polynomial::one(), |acc, _| {
                let root = &pool[rng.gen_range(0..pool.len())];
                &acc * &Polynomial::linear_factor(root)
            });
            out.push(p);
        }
    }
    out
}

/// A corpus element whose image lost real-rootedness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: Polynomial,
    pub image: Polynomial,
}

/// First corpus element (by index) whose image under `op` is not real
/// rooted; `None` means no counterexample FOUND, never a proof. Elements
/// beyond the operator window are skipped. Corpus entries are checked in
/// parallel and merged by index.
pub fn hyperbolicity_sample(op: &OperatorRep, corpus: &[Polynomial]) -> Option<Counterexample> {
    corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, p)| {
            if p.degree().is_some_and(|d| d > op.max_order()) {
                return None;
            }
            let image = op.apply(p).expect("degree checked");
            (!is_hyperbolic(&image)).then(|| (i, p.clone(), image))
        })
        .min_by_key(|(i, _, _)| *i)
        .map(|(_, input, image)| Counterexample { input, image })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum IncreasingVerdict {
    Pass,
    FailAt {
        k: usize,
    },
    /// The hypotheses (a_0 > 0, non-constant polynomial eigenvalues) do not
    /// hold, so the criterion says nothing.
    NotApplicable,
}

/// For a_0 > 0 and polynomial-interpolated non-constant eigenvalues, a
/// hyperbolicity preserver must have strictly increasing eigenvalues; a
/// failure here certifies the operator is not one.
pub fn increasing_eigenvalue_check(
    eigen: &SequenceSpec,
    window: usize,
) -> Result<IncreasingVerdict> {
    match classify_sequence(eigen, window) {
        SequenceVerdict::InterpolatedDegree { degree } if degree >= 1 => {}
        _ => return Ok(IncreasingVerdict::NotApplicable),
    }
    if !eigen.eval(0)?.is_positive() {
        return Ok(IncreasingVerdict::NotApplicable);
    }
    let mut prev = eigen.eval(0)?;
    for k in 0..window {
        let next = eigen.eval(k + 1)?;
        if prev >= next {
            return Ok(IncreasingVerdict::FailAt { k });
        }
        prev = next;
    }
    Ok(IncreasingVerdict::Pass)
}

/// The interpolation side of the degree-profile assertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterpolationClaim {
    Degree(usize),
    NotInterpolatable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FinalDegreeOutcome {
    Pass,
    FailAt {
        k: usize,
        degree: Option<usize>,
    },
    /// The eigenvalues read off the operator are not positive and strictly
    /// increasing, so no certification is attempted.
    HypothesesNotMet {
        reason: String,
    },
}

/// Under the hypotheses 0 < a_n < a_{n+1} (checked from the operator's own
/// leading values), a hyperbolicity-preserving operator must have
/// deg Q_k = k up to the interpolation degree, or everywhere when the
/// eigenvalues are not interpolatable. A failure under verified hypotheses
/// certifies non-preservation.
pub fn final_degree_check(
    op: &OperatorRep,
    claim: InterpolationClaim,
) -> Result<FinalDegreeOutcome> {
    let leading = op.leading_values()?;
    let n = op.max_order();
    let eigen: Vec<Rational> = (0..=n).map(|k| eigen_from_leading(&leading, k)).collect();
    if !eigen[0].is_positive() {
        return Ok(FinalDegreeOutcome::HypothesesNotMet {
            reason: "a_0 is not positive".into(),
        });
    }
    for k in 0..n {
        if eigen[k] >= eigen[k + 1] {
            return Ok(FinalDegreeOutcome::HypothesesNotMet {
                reason: format!("eigenvalues are not strictly increasing at k = {k}"),
            });
        }
    }
    let limit = match claim {
        InterpolationClaim::Degree(m) => m.min(n),
        InterpolationClaim::NotInterpolatable => n,
    };
    for k in 0..=limit {
        let degree = op.coeff(k).degree();
        if degree != Some(k) {
            return Ok(FinalDegreeOutcome::FailAt { k, degree });
        }
    }
    Ok(FinalDegreeOutcome::Pass)
}

/// n-th Maclaurin coefficient of e^{-x} * sum_k a_k x^k / k!, computed as
/// the finite Cauchy-product sum. It equals the n-th forward difference of
/// the sequence divided by n!.
pub fn expneg_series_coefficient(eigen: &SequenceSpec, n: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for j in 0..=n {
        let term = eigen.eval(j)? / (factorial(j) * factorial(n - j));
        acc = if (n - j) % 2 == 1 {
            acc - term
        } else {
            acc + term
        };
    }
    Ok(acc)
}

/// Counterexample with the image re-verified by Sturm counting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub input: Polynomial,
    pub image: Polynomial,
    pub image_square_free_degree: usize,
    pub image_distinct_real_roots: usize,
}

impl CounterexampleReport {
    pub fn new(ce: Counterexample) -> CounterexampleReport {
        let sf = square_free_part(&ce.image).expect("counterexample image is nonzero");
        let image_square_free_degree = sf.degree().unwrap_or(0);
        let image_distinct_real_roots = count_real_roots(&sf).expect("square-free");
        CounterexampleReport {
            input: ce.input,
            image: ce.image,
            image_square_free_degree,
            image_distinct_real_roots,
        }
    }
}

/// Full multiplier-sequence report for one eigen/basis pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MsReport {
    pub seed: u64,
    pub prefix: Vec<Rational>,
    pub turan_violations: Vec<TuranViolation>,
    pub sign_pattern: SignPattern,
    pub increasing: IncreasingVerdict,
    pub counterexample: Option<CounterexampleReport>,
}

impl MsReport {
    /// Whether any necessary condition failed. `false` certifies nothing.
    pub fn refuted(&self) -> bool {
        !self.turan_violations.is_empty()
            || self.sign_pattern == SignPattern::Irregular
            || matches!(self.increasing, IncreasingVerdict::FailAt { .. })
            || self.counterexample.is_some()
    }
}

/// Run every necessary-condition check for the sequence on the given basis.
/// Explicit sequences cap both windows at the data they carry.
pub fn ms_report(
    eigen: &SequenceSpec,
    basis: &crate::basis::BasisSpec,
    max_order: usize,
    prefix_len: usize,
    seed: u64,
) -> Result<MsReport> {
    let (order, plen) = match eigen.window_len() {
        Some(len) => (max_order.min(len.saturating_sub(1)), prefix_len.min(len)),
        None => (max_order, prefix_len),
    };
    let prefix = (0..plen)
        .map(|n| eigen.eval(n))
        .collect::<Result<Vec<_>>>()?;
    let turan_violations = turan_check(&prefix);
    let pattern = sign_pattern(&prefix);
    let increasing = increasing_eigenvalue_check(eigen, plen.saturating_sub(1))?;
    let spec = crate::operator::DiagonalSpec::new(basis.clone(), eigen.clone(), order);
    let rep = crate::operator::derive_diagonal(&spec)?;
    let corpus = corpus_generate(order, seed);
    let counterexample = hyperbolicity_sample(&rep, &corpus).map(CounterexampleReport::new);
    Ok(MsReport {
        seed,
        prefix,
        turan_violations,
        sign_pattern: pattern,
        increasing,
        counterexample,
    })
}
