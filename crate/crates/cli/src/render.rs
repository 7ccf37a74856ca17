//! Text, JSON and LaTeX renderers for the command-line surface.

use diaop_core::classify::{ClassificationReport, OperatorVerdict, ReasonCode, SequenceVerdict};
use diaop_core::hyperbolicity::{IncreasingVerdict, MsReport, SignPattern};
use diaop_core::operator::VerifyReport;
use diaop_core::rational::factorial;
use diaop_core::{OperatorRep, Polynomial, Rational};

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub fn poly_latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let a = c.abs();
        if k == 0 || !a.is_one() {
            out.push_str(&rational_latex(&a));
        }
        if k >= 1 {
            out.push('x');
            if k > 1 {
                out.push_str(&format!("^{{{k}}}"));
            }
        }
    }
    out
}

pub fn operator_latex(rep: &OperatorRep) -> String {
    let terms: Vec<String> = rep
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(k, q)| {
            let coeff = format!("\\left({}\\right)", poly_latex(q));
            match k {
                0 => coeff,
                1 => format!("{coeff}D"),
                _ => format!("{coeff}D^{{{k}}}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "T = 0".into()
    } else {
        format!("T = {}", terms.join(" + "))
    }
}

fn degree_cell(d: Option<usize>) -> String {
    match d {
        None => "zero".into(),
        Some(d) => d.to_string(),
    }
}

/// Leading value `k! [x^k] Q_k`, or `None` when deg Q_k > k.
fn leading_cell(k: usize, q: &Polynomial) -> Option<Rational> {
    match q.degree() {
        Some(d) if d > k => None,
        _ => Some(factorial(k) * q.coeff(k)),
    }
}

pub fn operator_table(rep: &OperatorRep) -> String {
    let mut rows: Vec<[String; 4]> =
        vec![["k".into(), "Q_k".into(), "deg".into(), "Q_k^(k)".into()]];
    for (k, q) in rep.coeffs().iter().enumerate() {
        rows.push([
            k.to_string(),
            q.to_string(),
            degree_cell(q.degree()),
            leading_cell(k, q).map_or_else(|| "n/a".into(), |v| v.to_string()),
        ]);
    }
    let widths: Vec<usize> = (0..4)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if i == 0 {
            out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 6));
            out.push('\n');
        }
    }
    out
}

fn sequence_verdict_text(v: &SequenceVerdict) -> String {
    match v {
        SequenceVerdict::InterpolatedDegree { degree } => {
            format!("interpolated by a polynomial of degree {degree}")
        }
        SequenceVerdict::NotInterpolatable { reason } => {
            format!("not interpolatable ({})", reason_text(reason))
        }
        SequenceVerdict::PrefixConsistentWithDegree { degree } => {
            format!("prefix consistent with degree {degree} (evidence only, not a proof)")
        }
    }
}

fn reason_text(r: &ReasonCode) -> &'static str {
    match r {
        ReasonCode::BoundedNonConstant => "bounded non-constant",
        ReasonCode::MonotoneWrongDirection => "monotone in the wrong direction",
        ReasonCode::AlternatingNonConstant => "alternating non-constant",
        ReasonCode::NonvanishingDifferences => "nonvanishing differences",
    }
}

fn operator_verdict_text(v: &OperatorVerdict) -> String {
    match v {
        OperatorVerdict::FiniteOrderAtMost { order } => format!("finite order at most {order}"),
        OperatorVerdict::InfiniteOrder => "infinite order".into(),
        OperatorVerdict::UndeterminedWithinWindow => "undetermined within the window".into(),
    }
}

fn join_rationals(values: &[Rational]) -> String {
    values
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn profile_text(profile: &[Option<usize>]) -> String {
    profile
        .iter()
        .map(|d| degree_cell(*d))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn classification_table(report: &ClassificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "sequence: {}\n",
        sequence_verdict_text(&report.sequence)
    ));
    out.push_str(&format!(
        "operator: {}\n",
        operator_verdict_text(&report.operator)
    ));
    if let (
        OperatorVerdict::UndeterminedWithinWindow,
        SequenceVerdict::InterpolatedDegree { degree },
    ) = (&report.operator, &report.sequence)
    {
        let n = report.degree_profile.len() - 1;
        let drops = report
            .degree_profile
            .iter()
            .enumerate()
            .skip(degree + 1)
            .all(|(k, d)| d.is_none_or(|d| d < k));
        if drops && *degree < n {
            out.push_str(&format!(
                "note: deg Q_k < k for {} <= k <= {n}\n",
                degree + 1
            ));
        }
    }
    out.push_str(&format!(
        "difference diagonal: {}\n",
        join_rationals(&report.difference_diagonal)
    ));
    out.push_str(&format!(
        "degree profile: {}\n",
        profile_text(&report.degree_profile)
    ));
    out
}

pub fn classification_latex(report: &ClassificationReport) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    out.push_str(&format!(
        "sequence & {} \\\\\n",
        sequence_verdict_text(&report.sequence)
    ));
    out.push_str(&format!(
        "operator & {} \\\\\n",
        operator_verdict_text(&report.operator)
    ));
    out.push_str(&format!(
        "$(\\Delta^n a)_0$ & ${}$ \\\\\n",
        report
            .difference_diagonal
            .iter()
            .map(rational_latex)
            .collect::<Vec<_>>()
            .join(",\\ ")
    ));
    out.push_str(&format!(
        "$\\deg Q_k$ & {} \\\\\n",
        profile_text(&report.degree_profile)
    ));
    out.push_str("\\end{tabular}\n");
    out
}

fn sign_pattern_text(p: &SignPattern) -> &'static str {
    match p {
        SignPattern::NonNegative => "non-negative",
        SignPattern::NonPositive => "non-positive",
        SignPattern::AlternatingFromEven => "alternating, positive at even indices",
        SignPattern::AlternatingFromOdd => "alternating, positive at odd indices",
        SignPattern::Irregular => "irregular (inadmissible for a multiplier sequence)",
    }
}

fn increasing_text(v: &IncreasingVerdict) -> String {
    match v {
        IncreasingVerdict::Pass => "pass".into(),
        IncreasingVerdict::FailAt { k } => {
            format!("FAIL at k = {k} (certifies: not hyperbolicity preserving)")
        }
        IncreasingVerdict::NotApplicable => "not applicable (hypotheses not met)".into(),
    }
}

pub fn ms_table(report: &MsReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("seed: {}\n", report.seed));
    out.push_str(&format!("prefix: {}\n", join_rationals(&report.prefix)));
    if report.turan_violations.is_empty() {
        out.push_str("turan inequalities: all satisfied on the prefix\n");
    } else {
        for v in &report.turan_violations {
            out.push_str(&format!(
                "turan violation at k = {}: value {}\n",
                v.index, v.value
            ));
        }
    }
    out.push_str(&format!(
        "sign pattern: {}\n",
        sign_pattern_text(&report.sign_pattern)
    ));
    out.push_str(&format!(
        "increasing eigenvalues: {}\n",
        increasing_text(&report.increasing)
    ));
    match &report.counterexample {
        None => out.push_str("counterexample: none found (not a proof of preservation)\n"),
        Some(ce) => {
            out.push_str(&format!("counterexample input: {}\n", ce.input));
            out.push_str(&format!("counterexample image: {}\n", ce.image));
            out.push_str(&format!(
                "image distinct real roots: {} of square-free degree {}\n",
                ce.image_distinct_real_roots, ce.image_square_free_degree
            ));
        }
    }
    if report.refuted() {
        out.push_str("verdict: NOT a multiplier sequence for this basis\n");
    } else {
        out.push_str("verdict: no necessary condition failed (certifies nothing)\n");
    }
    out
}

pub fn ms_latex(report: &MsReport) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    out.push_str(&format!("seed & {} \\\\\n", report.seed));
    out.push_str(&format!(
        "prefix & ${}$ \\\\\n",
        report
            .prefix
            .iter()
            .map(rational_latex)
            .collect::<Vec<_>>()
            .join(",\\ ")
    ));
    out.push_str(&format!(
        "Tur\\'an violations & {} \\\\\n",
        report.turan_violations.len()
    ));
    out.push_str(&format!(
        "sign pattern & {} \\\\\n",
        sign_pattern_text(&report.sign_pattern)
    ));
    out.push_str(&format!(
        "increasing & {} \\\\\n",
        increasing_text(&report.increasing)
    ));
    match &report.counterexample {
        None => out.push_str("counterexample & none found \\\\\n"),
        Some(ce) => {
            out.push_str(&format!(
                "counterexample & ${} \\mapsto {}$ \\\\\n",
                poly_latex(&ce.input),
                poly_latex(&ce.image)
            ));
        }
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn verify_table(report: &VerifyReport) -> String {
    match report.first_failure {
        None => format!(
            "verify: pass (exact through n = {})\n",
            report.checked_through
        ),
        Some(n) => format!("verify: FAIL at n = {n}\n"),
    }
}

/// Comma-joined ascending coefficients; the zero polynomial prints as "0".
pub fn poly_coeff_list(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_matches_display_style() {
        let q2 = Polynomial::from_coeffs(vec![Rational::new(-1, 2)]);
        assert_eq!(poly_latex(&q2), "-\\frac{1}{2}");
        let p = Polynomial::from_coeffs(vec![
            Rational::new(-1, 105),
            Rational::zero(),
            Rational::new(-4, 105),
        ]);
        assert_eq!(poly_latex(&p), "-\\frac{4}{105}x^{2} - \\frac{1}{105}");

        let mut q = vec![Polynomial::zero(); 3];
        q[1] = Polynomial::x();
        q[2] = q2;
        let rep = OperatorRep::new(q);
        assert_eq!(
            operator_latex(&rep),
            "T = \\left(x\\right)D + \\left(-\\frac{1}{2}\\right)D^{2}"
        );
        assert_eq!(operator_latex(&OperatorRep::zero(2)), "T = 0");
    }

    #[test]
    fn coefficient_lists() {
        assert_eq!(
            poly_coeff_list(&Polynomial::from_ints(&[0, -36, 0, 24])),
            "0,-36,0,24"
        );
        assert_eq!(poly_coeff_list(&Polynomial::zero()), "0");
    }

    #[test]
    fn operator_table_flags_undefined_leading_values() {
        let rep = OperatorRep::new(vec![Polynomial::x()]);
        let table = operator_table(&rep);
        assert!(table.contains("n/a"));
    }
}
