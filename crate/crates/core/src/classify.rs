//! Interpolability of eigenvalue sequences and finite/infinite operator
//! order.
//!
//! A sequence that a polynomial of degree m interpolates forces deg Q_m = m
//! and deg Q_k < k beyond, and its forward differences vanish past order m.
//! The converse direction is only ever certified from closed forms: a finite
//! prefix proves nothing, so explicit data gets a `PrefixConsistentWithDegree`
//! verdict and operators a `UndeterminedWithinWindow` unless the window
//! itself exhibits a vanishing tail.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::operator::{derive_diagonal, DiagonalSpec, OperatorRep};
use crate::polynomial::Polynomial;
use crate::rational::{binomial, factorial, Rational};
use crate::sequence::SequenceSpec;
use crate::transform::eigen_from_leading;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReasonCode {
    BoundedNonConstant,
    MonotoneWrongDirection,
    AlternatingNonConstant,
    NonvanishingDifferences,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SequenceVerdict {
    /// The sequence is a_n = p(n) for a closed-form polynomial of this degree.
    InterpolatedDegree { degree: usize },
    /// Provably not interpolatable, with the deciding criterion.
    NotInterpolatable { reason: ReasonCode },
    /// Prefix evidence only: differences vanish above `degree` within the
    /// examined window. Never a proof.
    PrefixConsistentWithDegree { degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OperatorVerdict {
    FiniteOrderAtMost { order: usize },
    InfiniteOrder,
    UndeterminedWithinWindow,
}

/// Verdicts plus the evidence they rest on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub sequence: SequenceVerdict,
    pub operator: OperatorVerdict,
    /// Forward differences (delta^n a)_0 for n up to the window.
    pub difference_diagonal: Vec<Rational>,
    /// deg Q_k per k; `null` marks the zero polynomial.
    pub degree_profile: Vec<Option<usize>>,
}

/// Standard forward-difference triangle: row 0 holds a_0..a_depth, row j
/// the j-th differences.
pub fn finite_difference_table(spec: &SequenceSpec, depth: usize) -> Result<Vec<Vec<Rational>>> {
    let row0 = (0..=depth)
        .map(|n| spec.eval(n))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = vec![row0];
    for j in 1..=depth {
        let prev = &rows[j - 1];
        let row = (0..prev.len() - 1)
            .map(|i| &prev[i + 1] - &prev[i])
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// The diagonal (delta^n a)_0 for n = 0..=depth.
pub fn difference_diagonal(spec: &SequenceSpec, depth: usize) -> Result<Vec<Rational>> {
    Ok(finite_difference_table(spec, depth)?
        .into_iter()
        .map(|row| row[0].clone())
        .collect())
}

fn prefix_verdict(spec: &SequenceSpec, window: usize) -> SequenceVerdict {
    let depth = match spec.window_len() {
        Some(len) => window.min(len.saturating_sub(1)),
        None => window,
    };
    let diag = difference_diagonal(spec, depth).expect("window already capped");
    let degree = diag.iter().rposition(|d| !d.is_zero()).unwrap_or(0);
    SequenceVerdict::PrefixConsistentWithDegree { degree }
}

/// Exact verdicts for closed forms; prefix evidence for explicit data.
pub fn classify_sequence(spec: &SequenceSpec, window: usize) -> SequenceVerdict {
    let norm = spec.normalized();
    if norm.constant_value().is_some() {
        return SequenceVerdict::InterpolatedDegree { degree: 0 };
    }
    match &norm {
        SequenceSpec::PolynomialInN(p) => SequenceVerdict::InterpolatedDegree {
            degree: p.degree().unwrap_or(0),
        },
        SequenceSpec::ReciprocalFactorial { .. } => SequenceVerdict::NotInterpolatable {
            reason: ReasonCode::BoundedNonConstant,
        },
        SequenceSpec::Geometric { ratio, .. } => {
            if ratio.is_zero() {
                // (c, 0, 0, ...) with c != 0: no closed-form certificate
                // either way, so report prefix evidence only
                prefix_verdict(&norm, window)
            } else {
                // differences are c (r-1)^n, never zero for r outside {0, 1}
                SequenceVerdict::NotInterpolatable {
                    reason: ReasonCode::NonvanishingDifferences,
                }
            }
        }
        SequenceSpec::SignAlternating(_) => SequenceVerdict::NotInterpolatable {
            reason: ReasonCode::AlternatingNonConstant,
        },
        SequenceSpec::Explicit(_) => prefix_verdict(&norm, window),
    }
}

/// Combine the degree profile with the sequence verdict. Finite order is
/// reported only with a witness in the window: the interpolation degree m
/// must show deg Q_m = m, every later coefficient must drop degree, and the
/// window must end in actual zero coefficients.
pub fn classify_operator(op: &OperatorRep, sequence: &SequenceVerdict) -> OperatorVerdict {
    match sequence {
        SequenceVerdict::NotInterpolatable { .. } => OperatorVerdict::InfiniteOrder,
        SequenceVerdict::PrefixConsistentWithDegree { .. } => {
            OperatorVerdict::UndeterminedWithinWindow
        }
        SequenceVerdict::InterpolatedDegree { degree: m } => {
            let n = op.max_order();
            let Some(ord) = op.order() else {
                return OperatorVerdict::FiniteOrderAtMost { order: 0 };
            };
            let degree_matches = op.coeff(*m).degree() == Some(*m);
            let later_degrees_drop =
                (m + 1..=n).all(|k| op.coeff(k).degree().is_none_or(|d| d < k));
            if degree_matches && later_degrees_drop && ord < n {
                OperatorVerdict::FiniteOrderAtMost { order: ord }
            } else {
                OperatorVerdict::UndeterminedWithinWindow
            }
        }
    }
}

/// Derive the representation for a diagonal spec and classify both the
/// sequence and the operator, with evidence.
pub fn classify(spec: &DiagonalSpec) -> Result<ClassificationReport> {
    let rep = derive_diagonal(spec)?;
    let sequence = classify_sequence(&spec.eigen, spec.max_order);
    let operator = classify_operator(&rep, &sequence);
    let depth = match spec.eigen.window_len() {
        Some(len) => spec.max_order.min(len.saturating_sub(1)),
        None => spec.max_order,
    };
    Ok(ClassificationReport {
        sequence,
        operator,
        difference_diagonal: difference_diagonal(&spec.eigen, depth)?,
        degree_profile: rep.degree_profile(),
    })
}

/// Degree-k binomial-coefficient polynomial x(x-1)...(x-k+1)/k!.
fn binom_poly(k: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 0..k {
        acc = &acc * &Polynomial::linear_factor(&Rational::from(i as i64));
    }
    acc.scale(&factorial(k).recip())
}

/// Newton-form polynomial p(x) = sum_{k<=m} C(x,k) Q_k^(k) reconstructing
/// a_n from its leading values, verified against the full supplied window
/// before returning.
pub fn interpolating_polynomial(leading: &[Rational], m: usize) -> Result<Polynomial> {
    for (k, v) in leading.iter().enumerate().skip(m + 1) {
        if !v.is_zero() {
            return Err(crate::error::Error::InterpolationMismatch { n: k });
        }
    }
    let mut p = Polynomial::zero();
    for (k, v) in leading.iter().enumerate().take(m + 1) {
        if !v.is_zero() {
            p = p + binom_poly(k).scale(v);
        }
    }
    for n in 0..leading.len() {
        if p.eval(&Rational::from(n as i64)) != eigen_from_leading(leading, n) {
            return Err(crate::error::Error::InterpolationMismatch { n });
        }
    }
    Ok(p)
}

/// sum_{k<=n} C(n,k) p(k) (-1)^(n-k): zero for n above deg p, and
/// n! times the leading coefficient at n = deg p.
pub fn alternating_binomial_poly_sum(p: &Polynomial, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let term = binomial(n, k) * p.eval(&Rational::from(k as i64));
        acc = if (n - k) % 2 == 1 {
            acc - term
        } else {
            acc + term
        };
    }
    acc
}
