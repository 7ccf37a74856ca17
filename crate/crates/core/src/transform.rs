//! Binomial transforms and the duality between eigenvalues and leading
//! values.
//!
//! The two directions are mutually inverse: `c_n = sum C(n,k) a_k` and
//! `a_n = sum C(n,k) c_k (-1)^(n-k)`. The alternating direction is exactly
//! the n-th forward difference of the sequence at 0.

use crate::error::Result;
use crate::rational::{binomial, Rational};
use crate::sequence::SequenceSpec;

/// Forward binomial transform: c_n = sum_{k<=n} C(n,k) a_k.
pub fn binomial_transform(a: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|n| (0..=n).map(|k| binomial(n, k) * &a[k]).sum())
        .collect()
}

/// Inverse binomial transform: a_n = sum_{k<=n} C(n,k) c_k (-1)^(n-k).
pub fn inverse_binomial_transform(c: &[Rational]) -> Vec<Rational> {
    (0..c.len())
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let term = binomial(n, k) * &c[k];
                    if (n - k) % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum()
        })
        .collect()
}

/// Eigenvalue a_n from leading values: a_n = sum_{k<=n} C(n,k) Q_k^(k).
/// `leading` must cover indices 0..=n.
pub fn eigen_from_leading(leading: &[Rational], n: usize) -> Rational {
    assert!(leading.len() > n, "leading values must cover 0..=n");
    (0..=n).map(|k| binomial(n, k) * &leading[k]).sum()
}

/// Leading value Q_n^(n) from the eigenvalue sequence:
/// sum_{k<=n} C(n,k) a_k (-1)^(n-k), the n-th forward difference at 0.
pub fn leading_from_eigen(eigen: &SequenceSpec, n: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let term = binomial(n, k) * eigen.eval(k)?;
        acc = if (n - k) % 2 == 1 {
            acc - term
        } else {
            acc + term
        };
    }
    Ok(acc)
}
