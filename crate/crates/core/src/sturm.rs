//! Exact real-root counting via Sturm chains.
//!
//! Everything here runs on rational polynomial remainder sequences; there is
//! no floating point anywhere. Chain elements are normalized to content 1,
//! a positive rescaling that leaves sign variations untouched.

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

/// Monic gcd of two polynomials; zero when both are zero.
pub fn polynomial_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    if a.is_zero() {
        a
    } else {
        a.monic()
    }
}

/// `p / gcd(p, p')`, normalized monic: same roots as `p`, all simple.
pub fn square_free_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = polynomial_gcd(p, &p.derivative());
    Ok(p.exact_div(&g).monic())
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.primitive_part()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_part());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push((-r).primitive_part());
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Number of distinct real roots of a square-free polynomial, counted from
/// the sign-variation difference of its Sturm chain at -infinity and
/// +infinity. Rejects zero and non-square-free inputs.
pub fn count_real_roots(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = polynomial_gcd(p, &p.derivative());
    if let Some(gd) = g.degree() {
        if gd > 0 {
            return Err(Error::NotSquareFree { gcd_degree: gd });
        }
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(p);
    let at_pos_inf = chain.iter().map(|s| s.leading_coeff().unwrap().signum());
    let at_neg_inf = chain.iter().map(|s| {
        let lc = s.leading_coeff().unwrap().signum();
        if s.degree().unwrap() % 2 == 0 {
            lc
        } else {
            -lc
        }
    });
    let vars_neg = sign_variations(at_neg_inf);
    let vars_pos = sign_variations(at_pos_inf);
    Ok(vars_neg - vars_pos)
}

/// Whether `p` has only real zeros. Constants (including zero) qualify
/// vacuously; multiple roots are allowed.
pub fn is_hyperbolic(p: &Polynomial) -> bool {
    if p.is_zero() {
        return true;
    }
    let sf = square_free_part(p).expect("nonzero polynomial");
    match sf.degree() {
        None | Some(0) => true,
        Some(d) => count_real_roots(&sf).expect("square-free by construction") == d,
    }
}
