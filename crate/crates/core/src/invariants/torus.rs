//! Closed form for the `(2n+1, 2)` torus knots, checked by cross-multiplication.

use crate::arith::{parse_poly, LaurentPoly};
use crate::braid::{invariant, BraidWord, Engine};
use crate::error::Result;
use crate::report::Report;

fn poly(s: &str) -> LaurentPoly {
    parse_poly(s).expect("closed-form terms are well formed")
}

/// The three `(numerator, denominator)` pairs of the closed form.
pub fn torus_terms(n: u32) -> [(LaurentPoly, LaurentPoly); 3] {
    let k = 4 * n + 2;
    let n1 = poly(&format!("(t1 - t1^-1)*(t1^{k} + t1^-{k})"));
    let d1 = poly("(t2 + t2^-1)*(t1^2 + t1^-2)*(t1*t2 - t1^-1*t2^-1)");
    let n2 = poly(&format!("(t2 - t2^-1)*(t2^{k} + t2^-{k})"));
    let d2 = poly("(t1 + t1^-1)*(t2^2 + t2^-2)*(t1*t2 - t1^-1*t2^-1)");
    let n3 = poly(&format!("(t1*t2 + t1^-1*t2^-1)*(t1^{k}*t2^{k} + t1^-{k}*t2^-{k})"));
    let d3 = poly("(t1^2*t2^2 + t1^-2*t2^-2)*(t1 + t1^-1)*(t2 + t2^-1)");
    [(n1, d1), (n2, d2), (n3, d3)]
}

/// `σ1^{2n+1}` on two strands (the unknot for `n = 0`).
pub fn torus_braid(n: u32) -> BraidWord {
    BraidWord { strands: 2, letters: vec![1; 2 * n as usize + 1] }
}

/// `Δ·D1·D2·D3 = N1·D2·D3 + N2·D1·D3 + N3·D1·D2` for the braid-computed `Δ`.
pub fn torus_closed_form_check(engine: &Engine, n: u32) -> Result<(LaurentPoly, Report)> {
    let value = invariant(engine, &torus_braid(n))?;
    let [(n1, d1), (n2, d2), (n3, d3)] = torus_terms(n);
    let lhs = &(&(&value * &d1) * &d2) * &d3;
    let rhs = &(&(&n1 * &d2) * &d3) + &(&(&(&n2 * &d1) * &d3) + &(&(&n3 * &d1) * &d2));
    let mut report = Report::new(format!("torus knot T({}, 2)", 2 * n + 1));
    let diff = &lhs - &rhs;
    report.check_with("cross-multiplied closed form", diff.is_zero(), if diff.is_zero() { String::new() } else { format!("difference {diff}") });
    Ok((value, report))
}
