//! Acceptance suite: end-to-end checks of the derivation, duality,
//! classification and hyperbolicity diagnostics at exact rational equality
//! (tolerance zero everywhere). Each test prints one pass/fail line.
//!
//! Run with `cargo test -p diaop-core --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use diaop_core::basis::BasisSpec;
use diaop_core::classify::{
    alternating_binomial_poly_sum, classify_operator, classify_sequence, OperatorVerdict,
    ReasonCode, SequenceVerdict,
};
use diaop_core::hyperbolicity::{
    corpus_generate, expneg_series_coefficient, final_degree_check, hyperbolicity_sample,
    turan_check, FinalDegreeOutcome, InterpolationClaim,
};
use diaop_core::operator::{
    derive_diagonal, operator_polynomial, verify_diagonal, DiagonalSpec, OperatorRep,
};
use diaop_core::rational::{binomial, factorial};
use diaop_core::sturm::{count_real_roots, is_hyperbolic, square_free_part};
use diaop_core::transform::{
    binomial_transform, eigen_from_leading, inverse_binomial_transform, leading_from_eigen,
};
use diaop_core::{Polynomial, Rational, SequenceSpec};

const SEED: u64 = 0x0d1a_0b00;
const CASES: usize = 200;

fn check(criterion: &str, description: &str, ok: bool) {
    println!(
        "acceptance {criterion} {}: {description}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance {criterion} failed: {description}");
}

fn seq(s: &str) -> SequenceSpec {
    s.parse().unwrap()
}

fn derive(basis: BasisSpec, eigen: &str, max_order: usize) -> OperatorRep {
    derive_diagonal(&DiagonalSpec::new(basis, seq(eigen), max_order)).unwrap()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn acceptance_01_hermite_number_operator() {
    let rep = derive(BasisSpec::Hermite, "poly:0,1", 12);
    let mut ok = rep.coeff(1) == Polynomial::x() && rep.coeff(2) == Polynomial::constant(r(-1, 2));
    for k in (0..=12).filter(|k| *k != 1 && *k != 2) {
        ok &= rep.coeff(k).is_zero();
    }
    check(
        "01",
        "Hermite eigenvalues n give x*D - 1/2*D^2 through order 12",
        ok,
    );
}

#[test]
fn acceptance_02_reciprocal_factorial_closed_form() {
    let rep = derive(BasisSpec::Monomial, "recip-factorial", 8);
    let mut ok = true;
    // closed form: Q_n = (sum_{k<=n} C(n,k) (1/k!) (-1)^(n-k) / n!) x^n,
    // with the inner sum computed here independently of the derivation
    for n in 0..=8usize {
        let mut inner = Rational::zero();
        for k in 0..=n {
            let term = binomial(n, k) / factorial(k);
            inner = if (n - k) % 2 == 1 {
                inner - term
            } else {
                inner + term
            };
        }
        ok &= rep.coeff(n) == Polynomial::monomial(&inner / factorial(n), n);
        // the inner sums are exactly the leading values Q_n^(n)
        ok &= rep.leading_values().unwrap()[n] == inner;
    }
    // displayed constants of the expansion: 1, 0, -1/2, 2/3, -5/8
    let lv = rep.leading_values().unwrap();
    ok &= lv[..5]
        == [
            Rational::one(),
            Rational::zero(),
            r(-1, 2),
            r(2, 3),
            r(-5, 8),
        ];
    ok &= rep.coeff(0) == Polynomial::one() && rep.coeff(1).is_zero();
    check(
        "02",
        "reciprocal-factorial eigenvalues on monomials match the closed form and its leading values",
        ok,
    );
}

#[test]
fn acceptance_03_legendre_number_operator() {
    let rep = derive(BasisSpec::Legendre, "poly:0,1", 8);
    let mut ok = rep.coeff(1) == Polynomial::x()
        && rep.coeff(2) == Polynomial::constant(r(-1, 3))
        && rep.coeff(3) == Polynomial::monomial(r(2, 15), 1)
        && rep.coeff(4) == Polynomial::from_coeffs(vec![r(-1, 105), Rational::zero(), r(-4, 105)]);
    for k in 3..=8usize {
        ok &= rep.coeff(k).degree().is_none_or(|d| d < k);
    }
    check(
        "03",
        "Legendre eigenvalues n give the expected low-order coefficients with degrees dropping past 2",
        ok,
    );
}

#[test]
fn acceptance_04_alternating_hermite_operator() {
    let rep = derive(BasisSpec::Hermite, "alt:poly:0,1", 6);
    let ok = rep.coeff(1) == Polynomial::from_ints(&[0, -1])
        && rep.coeff(2)
            == Polynomial::from_coeffs(vec![r(-1, 2), Rational::zero(), Rational::from(2)])
        && rep.coeff(3) == Polynomial::from_ints(&[0, 1, 0, -2]);
    check(
        "04",
        "Hermite eigenvalues (-1)^n n give -xD + (2x^2 - 1/2)D^2 + (-2x^3 + x)D^3",
        ok,
    );
}

#[test]
fn acceptance_05_sign_flip_dual_derivation() {
    let from_monomials = derive(BasisSpec::Monomial, "alt:poly:1", 10);
    let from_hermite = derive(BasisSpec::Hermite, "alt:poly:1", 10);
    let mut ok = from_monomials == from_hermite;
    for k in 0..=10usize {
        let c = Rational::from(-2).pow(k as u32) / factorial(k);
        ok &= from_monomials.coeff(k) == Polynomial::monomial(c, k);
    }
    for basis in [BasisSpec::Monomial, BasisSpec::Hermite] {
        let spec = DiagonalSpec::new(basis, seq("alt:poly:1"), 10);
        ok &= verify_diagonal(&from_monomials, &spec).unwrap().passed();
    }
    check(
        "05",
        "eigenvalues (-1)^n derive to the same (-2)^k x^k/k! representation from monomials and Hermite",
        ok,
    );
}

#[test]
fn acceptance_06_legendre_square_identity() {
    let rep = derive(BasisSpec::Legendre, "poly:0,1,1", 10); // n^2 + n
    let mut ok = rep.coeff(1) == Polynomial::from_ints(&[0, 2])
        && rep.coeff(2) == Polynomial::from_ints(&[-1, 0, 1]);
    for k in (0..=10).filter(|k| *k != 1 && *k != 2) {
        ok &= rep.coeff(k).is_zero();
    }
    check(
        "06",
        "Legendre eigenvalues n^2 + n give exactly (x^2 - 1)D^2 + 2xD",
        ok,
    );
}

#[test]
fn acceptance_07_operator_polynomial_uniqueness() {
    let w = derive(BasisSpec::Hermite, "poly:0,1", 12);
    let p = Polynomial::from_ints(&[1, 3, 1]); // t^2 + 3t + 1
    let built = operator_polynomial(&p, &w, 4).unwrap();
    let derived = derive(BasisSpec::Hermite, "poly:1,3,1", 10);
    let ok = built.truncated(10).unwrap() == derived;
    check(
        "07",
        "p(W) for p = t^2 + 3t + 1 equals the directly derived operator for eigenvalues n^2 + 3n + 1",
        ok,
    );
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-30..=30), rng.gen_range(1..=9))
}

fn rand_seq(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rand_rational(rng)).collect()
}

fn rand_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial {
    let len = rng.gen_range(0..=max_deg + 1);
    Polynomial::from_coeffs(rand_seq(rng, len))
}

/// Representation with deg Q_k <= k <= 4.
fn rand_rep(rng: &mut ChaCha8Rng) -> OperatorRep {
    let q = (0..=4)
        .map(|k| {
            let len = rng.gen_range(0..=k + 1);
            Polynomial::from_coeffs(rand_seq(rng, len))
        })
        .collect();
    OperatorRep::new(q)
}

#[test]
fn acceptance_08_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    for _ in 0..CASES {
        let a = rand_seq(&mut rng, 20);
        assert_eq!(inverse_binomial_transform(&binomial_transform(&a)), a);
    }

    for _ in 0..CASES {
        let a = rand_seq(&mut rng, 14);
        let spec = SequenceSpec::Explicit(a.clone());
        // naive difference table, built independently of the binomial route
        let mut rows = vec![a.clone()];
        while rows.last().unwrap().len() > 1 {
            let prev = rows.last().unwrap();
            rows.push(
                (0..prev.len() - 1)
                    .map(|i| &prev[i + 1] - &prev[i])
                    .collect(),
            );
        }
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(leading_from_eigen(&spec, n).unwrap(), row[0]);
        }
    }

    for _ in 0..CASES {
        let a = rand_seq(&mut rng, 16);
        let spec = SequenceSpec::Explicit(a.clone());
        let lead: Vec<Rational> = (0..a.len())
            .map(|n| leading_from_eigen(&spec, n).unwrap())
            .collect();
        for (n, expected) in a.iter().enumerate() {
            assert_eq!(&eigen_from_leading(&lead, n), expected);
        }
    }

    for _ in 0..CASES {
        let a = rand_rep(&mut rng);
        let b = rand_rep(&mut rng);
        let p = rand_poly(&mut rng, 4);
        let lhs = a.compose(&b).apply(&p).unwrap();
        let rhs = a.apply(&b.apply(&p).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    for _ in 0..CASES {
        let p = rand_poly(&mut rng, 6);
        if p.is_zero() {
            continue;
        }
        let d = p.degree().unwrap();
        let extra = rng.gen_range(1..=4);
        assert_eq!(
            alternating_binomial_poly_sum(&p, d + extra),
            Rational::zero()
        );
        assert_eq!(
            alternating_binomial_poly_sum(&p, d),
            factorial(d) * p.leading_coeff().unwrap()
        );
    }

    for _ in 0..CASES {
        let roots: Vec<Rational> = (0..rng.gen_range(1..=8))
            .map(|_| Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
            .collect();
        let p = roots.iter().fold(Polynomial::one(), |acc, root| {
            &acc * &Polynomial::linear_factor(root)
        });
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        let sf = square_free_part(&p).unwrap();
        assert_eq!(count_real_roots(&sf).unwrap(), distinct.len());
    }

    check(
        "08",
        "randomized property suites (transforms, differences, composition, vanishing sums, root counts)",
        true,
    );
}

#[test]
fn acceptance_09_classification_verdicts() {
    let mut ok = true;

    let recip = seq("recip-factorial");
    let verdict = classify_sequence(&recip, 8);
    ok &= verdict
        == SequenceVerdict::NotInterpolatable {
            reason: ReasonCode::BoundedNonConstant,
        };
    let rep = derive(BasisSpec::Monomial, "recip-factorial", 8);
    ok &= classify_operator(&rep, &verdict) == OperatorVerdict::InfiniteOrder;

    let alternating = seq("alt:poly:0,1");
    let verdict = classify_sequence(&alternating, 8);
    ok &= verdict
        == SequenceVerdict::NotInterpolatable {
            reason: ReasonCode::AlternatingNonConstant,
        };
    let rep = derive(BasisSpec::Hermite, "alt:poly:0,1", 8);
    ok &= classify_operator(&rep, &verdict) == OperatorVerdict::InfiniteOrder;

    let doubling = derive(BasisSpec::Monomial, "geom:2", 8);
    for (k, q) in doubling.coeffs().iter().enumerate() {
        ok &= q.degree() == Some(k);
        ok &= q == &Polynomial::monomial(factorial(k).recip(), k);
    }
    ok &= doubling.leading_values().unwrap() == vec![Rational::one(); 9];

    check(
        "09",
        "classification verdicts for reciprocal-factorial, alternating and doubling eigenvalues",
        ok,
    );
}

#[test]
fn acceptance_10_hyperbolicity_negatives() {
    let eigen = seq("list:1,1,3");
    let prefix: Vec<Rational> = (0..3).map(|n| eigen.eval(n).unwrap()).collect();
    let violations = turan_check(&prefix);
    let mut ok = violations.len() == 1 && violations[0].index == 0;

    let rep = derive(BasisSpec::Monomial, "list:1,1,3", 2);
    let ce = hyperbolicity_sample(&rep, &corpus_generate(2, 0));
    ok &= match ce {
        Some(ce) => {
            let sf = square_free_part(&ce.image).unwrap();
            let roots = count_real_roots(&sf).unwrap();
            !is_hyperbolic(&ce.image) && roots < sf.degree().unwrap()
        }
        None => false,
    };

    let recip_rep = derive(BasisSpec::Monomial, "recip-factorial", 8);
    ok &= matches!(
        final_degree_check(&recip_rep, InterpolationClaim::NotInterpolatable).unwrap(),
        FinalDegreeOutcome::HypothesesNotMet { .. }
    );

    check(
        "10",
        "Turan violation plus Sturm-certified counterexample for (1,1,3); degree gate refuses 1/n!",
        ok,
    );
}

#[test]
fn acceptance_11_damped_series_coefficients() {
    let eigen = seq("poly:1,1"); // a_n = n + 1
    let mut ok = true;
    for n in 0..=12usize {
        // Cauchy-product sum computed here, term by term
        let mut cauchy = Rational::zero();
        for j in 0..=n {
            let term = eigen.eval(j).unwrap() / (factorial(j) * factorial(n - j));
            cauchy = if (n - j) % 2 == 1 {
                cauchy - term
            } else {
                cauchy + term
            };
        }
        ok &= cauchy == expneg_series_coefficient(&eigen, n).unwrap();
        ok &= cauchy == leading_from_eigen(&eigen, n).unwrap() / factorial(n);
    }
    check(
        "11",
        "coefficients of e^{-x} sum a_k x^k/k! equal the scaled forward differences for a_n = n + 1",
        ok,
    );
}
