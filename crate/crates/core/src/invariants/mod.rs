//! Knot-level API: the invariant for a chosen representation, the classical
//! Alexander oracle, specialization checks and the derived reports.

mod alexander;
mod cone;
mod decomp;
mod torus;

pub use alexander::{alexander_burau, bareiss_det, burau_generator, conway_normalize, div_exact, stretch};
pub use cone::{check_symmetries, cone_coefficients, ConeTable};
pub use decomp::{
    check_tensor_product, decompose, default_sample, delta_z, sample_rep, verify_tensor_decompositions, verify_z_skein, EvaluatedRep, Summand,
    TensorProduct,
};
pub use torus::{torus_braid, torus_closed_form_check, torus_terms};

use serde::Serialize;

use crate::arith::{emit_canonical, LaurentPoly, MonomialSubstitution};
use crate::braid::{invariant, BraidWord, Engine};
use crate::error::{Error, Result};
use crate::rep::RepKind;
use crate::report::{Check, Report};

/// The invariant of the closure of `b` colored by `kind`.
pub fn delta(kind: RepKind, b: &BraidWord) -> Result<LaurentPoly> {
    invariant(&Engine::new(kind.build()), b)
}

/// The six specializations of the sl3 invariant, with the names used in reports.
pub fn plugin_substitutions() -> [(&'static str, MonomialSubstitution); 6] {
    [
        ("t2 -> 1", MonomialSubstitution::set_t2(0, 0)),
        ("t2 -> -1", MonomialSubstitution::set_t2(2, 0)),
        ("t1 -> 1", MonomialSubstitution::set_t1(0)),
        ("t1 -> -1", MonomialSubstitution::set_t1(2)),
        ("t2 -> i t1^-1", MonomialSubstitution::set_t2(1, -1)),
        ("t2 -> -i t1^-1", MonomialSubstitution::set_t2(3, -1)),
    ]
}

/// Checks a precomputed sl3 value against the Alexander polynomial at `t^4`.
pub fn check_plugin_value(value: &LaurentPoly, alexander: &LaurentPoly) -> Report {
    let want = stretch(alexander, 4);
    let mut report = Report::new("specializations");
    for (name, sub) in plugin_substitutions() {
        let got = sub.apply(value);
        let detail = if got == want { String::new() } else { format!("got {got}, expected {want}") };
        report.check_with(name, got == want, detail);
    }
    report
}

pub fn check_plugin(b: &BraidWord) -> Result<Report> {
    let alex = alexander_burau(b)?;
    Ok(check_plugin_value(&delta(RepKind::VermaSl3, b)?, &alex))
}

/// The sl2 invariant and every head invariant against the Alexander polynomial.
pub fn check_small_alexander(b: &BraidWord) -> Result<Report> {
    let alex = alexander_burau(b)?;
    let mut report = Report::new("Alexander specializations");
    let sl2 = delta(RepKind::VermaSl2, b)?;
    report.check_with("sl2 = Alexander(t^2)", sl2 == stretch(&alex, 2), sl2.to_string());
    for kind in RepKind::all_heads() {
        let v = delta(kind, b)?;
        report.check_with(format!("{} = Alexander(t^4)", kind.tag()), v == stretch(&alex, 4), v.to_string());
    }
    Ok(report)
}

/// Output record for one knot.
#[derive(Clone, Debug, Serialize)]
pub struct KnotResult {
    pub name: String,
    pub braid: String,
    pub strands: usize,
    pub rep: String,
    pub polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone: Option<Vec<(i32, i32, i64)>>,
    /// Theorem-backed checks; any failure is an error.
    pub checks: Vec<Check>,
    /// Conjectural patterns, reported only.
    pub observations: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Set when the entry was deliberately not evaluated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// Wall time of the evaluation, not serialized.
    #[serde(skip)]
    pub seconds: f64,
}

impl KnotResult {
    pub fn new(name: &str, b: &BraidWord, kind: RepKind, value: &LaurentPoly, seconds: f64) -> Self {
        let (checks, observations) = knot_checks(kind, b, value);
        let cone = if kind == RepKind::VermaSl3 && b.is_knot() { cone_coefficients(value).ok().map(|t| t.triples()) } else { None };
        KnotResult {
            name: name.to_string(),
            braid: b.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "),
            strands: b.strands,
            rep: kind.tag(),
            polynomial: emit_canonical(value),
            cone,
            checks: checks.checks,
            observations: observations.checks,
            error: None,
            skipped: None,
            seconds,
        }
    }

    pub fn failed(name: &str, b: &BraidWord, kind: RepKind, err: &Error) -> Self {
        KnotResult { error: Some(err.to_string()), ..Self::empty(name, b, kind) }
    }

    pub fn skipped(name: &str, b: &BraidWord, kind: RepKind, reason: impl Into<String>) -> Self {
        KnotResult { skipped: Some(reason.into()), ..Self::empty(name, b, kind) }
    }

    fn empty(name: &str, b: &BraidWord, kind: RepKind) -> Self {
        KnotResult {
            name: name.to_string(),
            braid: b.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "),
            strands: b.strands,
            rep: kind.tag(),
            polynomial: String::new(),
            cone: None,
            checks: vec![],
            observations: vec![],
            error: None,
            skipped: None,
            seconds: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }
}

/// Asserted and observed checks for a computed value. Knots are compared with
/// the Burau Alexander polynomial: sl3 through the six specializations, sl2 at
/// `t^2` and the heads at `t^4`.
pub fn knot_checks(kind: RepKind, b: &BraidWord, value: &LaurentPoly) -> (Report, Report) {
    let mut asserted = Report::new("checks");
    let mut observed = Report::new("observations");
    let alex = if b.is_knot() { alexander_burau(b).ok() } else { None };
    match kind {
        RepKind::VermaSl3 => {
            let (sym, obs) = check_symmetries(value, alex.as_ref());
            asserted.checks.extend(sym.checks);
            observed.checks.extend(obs.checks);
            if let Some(a) = &alex {
                asserted.checks.extend(check_plugin_value(value, a).checks);
            }
        }
        RepKind::VermaSl2 => {
            if let Some(a) = &alex {
                asserted.check("Alexander(t^2)", *value == stretch(a, 2));
            }
        }
        RepKind::Head(..) => {
            if let Some(a) = &alex {
                asserted.check("Alexander(t^4)", *value == stretch(a, 4));
            }
        }
    }
    (asserted, observed)
}

/// Evaluates `b` and attaches the checks for `engine`'s representation.
pub fn analyze_knot(name: &str, b: &BraidWord, engine: &Engine) -> Result<KnotResult> {
    let start = std::time::Instant::now();
    let value = invariant(engine, b)?;
    Ok(KnotResult::new(name, b, engine.rep.kind, &value, start.elapsed().as_secs_f64()))
}
