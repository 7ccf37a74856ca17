//! Truncated differential-operator representations sum Q_k(x) D^k.
//!
//! A representation carries Q_0..Q_N for a fixed window N. Application to a
//! polynomial of degree <= N is exact because every discarded term contains
//! a derivative that annihilates the input; higher degrees are refused
//! rather than silently truncated.
//!
//! The derivation recursion solves for Q_n from the images `T[B_n]` of any
//! simple basis:
//!
//! ```text
//! Q_n = ( T[B_n] - sum_{k<n} Q_k B_n^(k) ) / B_n^(n)
//! ```
//!
//! where the denominator is the constant n! times the leading coefficient.

use serde::{Deserialize, Serialize};

use crate::basis::{Basis, BasisSpec};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::{binomial, factorial, Rational};
use crate::sequence::SequenceSpec;
use crate::transform::eigen_from_leading;

/// sum_{k=0}^{N} Q_k(x) D^k with N = `max_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorRep {
    q: Vec<Polynomial>,
}

impl OperatorRep {
    /// Wraps coefficient list `q[k] = Q_k`. An empty list is the zero operator
    /// of window 0.
    pub fn new(q: Vec<Polynomial>) -> OperatorRep {
        if q.is_empty() {
            OperatorRep {
                q: vec![Polynomial::zero()],
            }
        } else {
            OperatorRep { q }
        }
    }

    pub fn zero(max_order: usize) -> OperatorRep {
        OperatorRep {
            q: vec![Polynomial::zero(); max_order + 1],
        }
    }

    pub fn identity() -> OperatorRep {
        OperatorRep::new(vec![Polynomial::one()])
    }

    pub fn max_order(&self) -> usize {
        self.q.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.q
    }

    /// Q_k, zero beyond the window.
    pub fn coeff(&self, k: usize) -> Polynomial {
        self.q.get(k).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Largest k with Q_k nonzero, `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.q.iter().rposition(|p| !p.is_zero())
    }

    /// deg Q_k for each k, with the zero polynomial reported as `None`.
    pub fn degree_profile(&self) -> Vec<Option<usize>> {
        self.q.iter().map(Polynomial::degree).collect()
    }

    /// sum Q_k p^(k). Exact for deg p <= max_order, refused above.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if let Some(d) = p.degree() {
            if d > self.max_order() {
                return Err(Error::DegreeExceedsOrder {
                    degree: d,
                    max_order: self.max_order(),
                });
            }
        }
        let mut acc = Polynomial::zero();
        let mut dk = p.clone();
        for qk in &self.q {
            if dk.is_zero() {
                break;
            }
            acc = acc + qk * &dk;
            dk = dk.derivative();
        }
        Ok(acc)
    }

    /// Representation of `self` after `other`, window = sum of windows.
    /// A term Q_k D^k acting on R_j D^j contributes C(k,i) Q_k R_j^(i)
    /// at order k - i + j for each i <= k.
    pub fn compose(&self, other: &OperatorRep) -> OperatorRep {
        let n = self.max_order() + other.max_order();
        let mut out = vec![Polynomial::zero(); n + 1];
        for (k, qk) in self.q.iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            for (j, rj) in other.q.iter().enumerate() {
                if rj.is_zero() {
                    continue;
                }
                let mut deriv = rj.clone();
                for i in 0..=k {
                    if deriv.is_zero() {
                        break;
                    }
                    let term = (qk * &deriv).scale(&binomial(k, i));
                    out[k - i + j] = &out[k - i + j] + &term;
                    deriv = deriv.derivative();
                }
            }
        }
        OperatorRep::new(out)
    }

    pub fn scaled(&self, c: &Rational) -> OperatorRep {
        OperatorRep {
            q: self.q.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &OperatorRep) -> OperatorRep {
        let n = self.max_order().max(other.max_order());
        let q = (0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        OperatorRep::new(q)
    }

    /// Re-window to `max_order`, padding with zeros or erroring if a
    /// nonzero coefficient would be dropped.
    pub fn truncated(&self, max_order: usize) -> Result<OperatorRep> {
        for (k, p) in self.q.iter().enumerate().skip(max_order + 1) {
            if !p.is_zero() {
                return Err(Error::TruncationLoss {
                    k,
                    target_order: max_order,
                });
            }
        }
        let q = (0..=max_order).map(|k| self.coeff(k)).collect();
        Ok(OperatorRep::new(q))
    }

    /// The constants `Q_k^(k) = k! [x^k] Q_k`. Requires deg Q_k <= k, which
    /// holds for every representation derived from a diagonal action.
    pub fn leading_values(&self) -> Result<Vec<Rational>> {
        self.q
            .iter()
            .enumerate()
            .map(|(k, p)| {
                if let Some(d) = p.degree() {
                    if d > k {
                        return Err(Error::CoefficientDegreeTooHigh { k, degree: d });
                    }
                }
                Ok(factorial(k) * p.coeff(k))
            })
            .collect()
    }

    /// The companion representation (Q_k^(k)/k!) x^k D^k, diagonal on the
    /// monomials with the same eigenvalue sequence.
    pub fn to_monomial_diagonal(&self) -> Result<OperatorRep> {
        let leading = self.leading_values()?;
        let q = leading
            .into_iter()
            .enumerate()
            .map(|(k, c)| Polynomial::monomial(c / factorial(k), k))
            .collect();
        Ok(OperatorRep::new(q))
    }
}

/// Images `T[B_n]` for n = 0..=N; general linear actions are allowed, so the
/// image degrees are unconstrained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTable {
    pub images: Vec<Polynomial>,
}

impl ActionTable {
    pub fn new(images: Vec<Polynomial>) -> ActionTable {
        ActionTable { images }
    }
}

/// The data of a diagonal operator: `T[B_n] = a_n B_n` for n up to the window.
#[derive(Clone, Debug)]
pub struct DiagonalSpec {
    pub basis: BasisSpec,
    pub eigen: SequenceSpec,
    pub max_order: usize,
}

impl DiagonalSpec {
    pub fn new(basis: BasisSpec, eigen: SequenceSpec, max_order: usize) -> DiagonalSpec {
        DiagonalSpec {
            basis,
            eigen,
            max_order,
        }
    }
}

/// `images[n] = a_n B_n` for n = 0..=max_order.
pub fn diagonal_action(spec: &DiagonalSpec) -> Result<ActionTable> {
    let basis = Basis::new(spec.basis.clone())?;
    diagonal_action_with(&basis, &spec.eigen, spec.max_order)
}

fn diagonal_action_with(
    basis: &Basis,
    eigen: &SequenceSpec,
    max_order: usize,
) -> Result<ActionTable> {
    let images = (0..=max_order)
        .map(|n| Ok(basis.poly(n)?.scale(&eigen.eval(n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ActionTable::new(images))
}

/// The unique Q_0..Q_N with `sum Q_k B_n^(k) = T[B_n]` for every n <= N,
/// computed by the derivation recursion. The action table supplies `T[B_n]`.
pub fn peetre_derive(action: &ActionTable, basis: &Basis) -> Result<OperatorRep> {
    if action.images.is_empty() {
        return Err(Error::EmptyAction);
    }
    let n_max = action.images.len() - 1;
    let mut q: Vec<Polynomial> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let bn = basis.poly(n)?;
        debug_assert_eq!(bn.degree(), Some(n), "basis must be simple");
        // B_n^(n) is the constant n! times the leading coefficient
        let denom = factorial(n) * bn.coeff(n);
        let mut acc = action.images[n].clone();
        let mut bk = bn;
        for qk in q.iter() {
            acc = acc - qk * &bk;
            bk = bk.derivative();
        }
        q.push(acc.scale(&denom.recip()));
    }
    Ok(OperatorRep::new(q))
}

/// Derive the representation of a diagonal operator and check the degree
/// bound deg Q_k <= k that diagonality forces.
pub fn derive_diagonal(spec: &DiagonalSpec) -> Result<OperatorRep> {
    let basis = Basis::new(spec.basis.clone())?;
    let action = diagonal_action_with(&basis, &spec.eigen, spec.max_order)?;
    let rep = peetre_derive(&action, &basis)?;
    for (k, p) in rep.coeffs().iter().enumerate() {
        assert!(
            p.degree().is_none_or(|d| d <= k),
            "diagonal action produced deg Q_{k} > {k}"
        );
    }
    Ok(rep)
}

/// p(W) = sum c_j W^j by Horner, re-windowed to `target_order` with a hard
/// error if any dropped coefficient is nonzero.
pub fn operator_polynomial(
    p: &Polynomial,
    w: &OperatorRep,
    target_order: usize,
) -> Result<OperatorRep> {
    let Some(d) = p.degree() else {
        return OperatorRep::zero(0).truncated(target_order);
    };
    let mut acc = OperatorRep::new(vec![Polynomial::constant(p.coeff(d))]);
    for j in (0..d).rev() {
        acc = acc.compose(w);
        let c = p.coeff(j);
        if !c.is_zero() {
            acc = acc.add(&OperatorRep::new(vec![Polynomial::constant(c)]));
        }
    }
    acc.truncated(target_order)
}

/// Outcome of checking apply(op, B_n) = a_n B_n across a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checked_through: usize,
    pub first_failure: Option<usize>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Check that `op` diagonalizes the given basis with the given eigenvalues,
/// exactly, for every n up to the spec window. Failures are data, not
/// errors; only a window wider than the operator is refused.
pub fn verify_diagonal(op: &OperatorRep, spec: &DiagonalSpec) -> Result<VerifyReport> {
    if spec.max_order > op.max_order() {
        return Err(Error::WindowExceedsOrder {
            window: spec.max_order,
            max_order: op.max_order(),
        });
    }
    let basis = Basis::new(spec.basis.clone())?;
    let mut first_failure = None;
    for n in 0..=spec.max_order {
        let bn = basis.poly(n)?;
        let image = op.apply(&bn)?;
        let expected = bn.scale(&spec.eigen.eval(n)?);
        if image != expected {
            first_failure = Some(n);
            break;
        }
    }
    Ok(VerifyReport {
        checked_through: spec.max_order,
        first_failure,
    })
}

/// The unique monic degree-m polynomial v with apply(op, v) = a_m v, where
/// the a_k are read off the operator itself. Because the operator does not
/// raise degree (deg Q_k <= k), the system is triangular in the monomial
/// coefficients and solves by back-substitution. Repeated eigenvalues below
/// m break uniqueness and are rejected.
pub fn eigenvector_solve(op: &OperatorRep, m: usize) -> Result<Polynomial> {
    if m > op.max_order() {
        return Err(Error::DegreeExceedsOrder {
            degree: m,
            max_order: op.max_order(),
        });
    }
    let mut leading = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let qk = op.coeff(k);
        if let Some(d) = qk.degree() {
            if d > k {
                return Err(Error::CoefficientDegreeTooHigh { k, degree: d });
            }
        }
        leading.push(factorial(k) * qk.coeff(k));
    }
    let eigen: Vec<Rational> = (0..=m).map(|k| eigen_from_leading(&leading, k)).collect();
    for k in 0..m {
        if eigen[k] == eigen[m] {
            return Err(Error::EigenvalueCollision { m, k });
        }
    }
    // images[j] = op applied to x^j; entry (i, j) is its x^i coefficient
    let images: Vec<Polynomial> = (0..=m)
        .map(|j| op.apply(&Polynomial::monomial(Rational::one(), j)))
        .collect::<Result<_>>()?;
    let mut v = vec![Rational::zero(); m + 1];
    v[m] = Rational::one();
    for i in (0..m).rev() {
        let mut s = Rational::zero();
        for (j, vj) in v.iter().enumerate().skip(i + 1) {
            if !vj.is_zero() {
                s = s + images[j].coeff(i) * vj;
            }
        }
        v[i] = s / (&eigen[m] - &eigen[i]);
    }
    let vec_poly = Polynomial::from_coeffs(v);
    debug_assert_eq!(
        op.apply(&vec_poly).unwrap(),
        vec_poly.scale(&eigen[m]),
        "eigenvector back-substitution must satisfy the eigen relation"
    );
    Ok(vec_poly)
}

/// On-disk operator format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    pub max_order: usize,
    pub q: Vec<Polynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<OperatorMeta>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorMeta {
    pub basis: String,
    pub eigen: String,
}

impl OperatorFile {
    pub fn from_rep(rep: &OperatorRep, meta: Option<OperatorMeta>) -> OperatorFile {
        OperatorFile {
            max_order: rep.max_order(),
            q: rep.coeffs().to_vec(),
            meta,
        }
    }

    pub fn into_rep(self) -> Result<OperatorRep> {
        if self.q.len() != self.max_order + 1 {
            return Err(Error::InvalidOperatorFile {
                message: format!(
                    "max_order {} requires {} coefficients, found {}",
                    self.max_order,
                    self.max_order + 1,
                    self.q.len()
                ),
            });
        }
        Ok(OperatorRep::new(self.q))
    }
}
