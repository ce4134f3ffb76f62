//! Braid group representations `ψ_n` on `V^{⊗n}` and the closure invariant.
//!
//! `σ_i` acts by `R_t` on strands `i, i+1` and `σ_i^{-1}` by `R_t^{-1}`. Letters are
//! applied left to right. The invariant is the partial trace of `ψ_n(b)` with the
//! pivotal element on every strand but one, read off on the highest weight vector.

mod engine;
mod modular;
mod word;

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub use engine::{closure_trace, reduced_cost, Crossings, GradedOperator, StateSpace, TraceMode};
pub use modular::interpolate;
pub use word::{parse_braid, BraidWord};

use crate::arith::{Fp, LaurentPoly, MontFp, Q};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::rep::RepData;
use crate::report::Report;
use crate::rmatrix::build_rt;

/// Largest `dim(V)^n` evaluated symbolically under [`Strategy::Auto`].
pub const SYMBOLIC_LIMIT: usize = 512;

/// Largest `dim(V)^n` reconstructed by interpolation under [`Strategy::Auto`].
pub const INTERPOLATION_LIMIT: usize = 1 << 15;

const SEED: u64 = 0x5_1a3;

/// How [`invariant_with`] evaluates the closure.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Symbolic for small state spaces, modular up to [`INTERPOLATION_LIMIT`], an error beyond.
    #[default]
    Auto,
    /// Exact products over `Z[ζ][t1^±, t2^±]`.
    Symbolic,
    /// Evaluation in `F_p` at roots of unity and reconstruction.
    Modular,
}

/// A representation together with its crossing matrices.
#[derive(Clone, Debug)]
pub struct Engine {
    pub rep: RepData,
    pub r: SparseMat<LaurentPoly>,
    pub r_inv: SparseMat<LaurentPoly>,
}

impl Engine {
    pub fn new(rep: RepData) -> Self {
        let (r, r_inv) = build_rt(&rep);
        Engine { rep, r: r.op, r_inv: r_inv.op }
    }

    pub fn space(&self, n: usize) -> Arc<StateSpace> {
        Arc::new(StateSpace::new(&self.rep.drops, n))
    }

    pub fn crossings(&self) -> Crossings<LaurentPoly> {
        let h_inv = self.rep.pivot.iter().map(|p| p.monomial_inverse().expect("pivot entries are unit monomials")).collect();
        Crossings { r: self.r.clone(), r_inv: self.r_inv.clone(), h: self.rep.pivot.clone(), h_inv }
    }

    /// Crossing matrices with `t1 ↦ x1`, `t2 ↦ x2`, `ζ ↦` [`Fp::zeta`].
    pub fn crossings_at(&self, x1: Fp, x2: Fp) -> Crossings<MontFp> {
        let ev = |p: &LaurentPoly| MontFp::from_fp(p.eval_fp(x1, x2, Fp::zeta()));
        let h: Vec<Fp> = self.rep.pivot.iter().map(|p| p.eval_fp(x1, x2, Fp::zeta())).collect();
        Crossings {
            r: self.r.map(ev),
            r_inv: self.r_inv.map(ev),
            h: h.iter().map(|&x| MontFp::from_fp(x)).collect(),
            h_inv: h.iter().map(|x| MontFp::from_fp(x.inv_())).collect(),
        }
    }

    /// Whether the invariant can depend on `t2`.
    pub fn bivariate(&self) -> bool {
        self.rep.uses_t2()
    }
}

fn check_cut(b: &BraidWord, cut: usize) -> Result<usize> {
    if cut == 0 || cut > b.strands {
        return Err(Error::Invalid(format!("cut strand {cut} outside 1..={}", b.strands)));
    }
    Ok(cut - 1)
}

/// `σ_i^{±1}` on `n` strands (`1 ≤ i < n`).
pub fn crossing_operator(engine: &Engine, n: usize, i: usize, positive: bool) -> GradedOperator<LaurentPoly> {
    assert!(i >= 1 && i < n, "crossing position {i} out of range for {n} strands");
    let letter = if positive { i as i32 } else { -(i as i32) };
    GradedOperator::identity(engine.space(n)).then_letter(letter, &engine.crossings())
}

/// `ψ_n(b)`, built one crossing at a time.
pub fn braid_operator(engine: &Engine, b: &BraidWord) -> GradedOperator<LaurentPoly> {
    let cr = engine.crossings();
    let mut op = GradedOperator::identity(engine.space(b.strands));
    for &l in &b.letters {
        op = op.then_letter(l, &cr);
    }
    op
}

/// `(1/dim V)·tr(w·ψ_n(b))` where `w` is `h^{-1}` on strands left of `cut`, the
/// identity on `cut` and `h` to its right. `cut` is 1-based; `cut = 1` is the
/// usual right closure.
pub fn modified_trace(engine: &Engine, b: &BraidWord, cut: usize) -> Result<LaurentPoly> {
    let c = check_cut(b, cut)?;
    let space = engine.space(b.strands);
    let tr = closure_trace(&space, &b.letters, &engine.crossings(), TraceMode::Full { cut: c });
    Ok(tr.scale_q(&Q::new(1.into(), (engine.rep.dim as i128).into())))
}

/// [`modified_trace`] at a point of `F_p`.
pub fn modified_trace_at(engine: &Engine, b: &BraidWord, cut: usize, x1: Fp, x2: Fp) -> Result<Fp> {
    let c = check_cut(b, cut)?;
    let space = StateSpace::new(&engine.rep.drops, b.strands);
    let tr = closure_trace(&space, &b.letters, &engine.crossings_at(x1, x2), TraceMode::Full { cut: c });
    Ok(tr.to_fp().mul_(Fp::new(engine.rep.dim as u64).inv_()))
}

/// The invariant at a point of `F_p`, from the columns whose cut strand carries `v0`.
pub fn invariant_at(engine: &Engine, b: &BraidWord, x1: Fp, x2: Fp) -> Fp {
    let space = StateSpace::new(&engine.rep.drops, b.strands);
    invariant_at_in(engine, &space, b, x1, x2)
}

fn invariant_at_in(engine: &Engine, space: &StateSpace, b: &BraidWord, x1: Fp, x2: Fp) -> Fp {
    closure_trace(space, &b.letters, &engine.crossings_at(x1, x2), TraceMode::Reduced { cut: 0 }).to_fp()
}

/// The invariant with cut strand 1, using the default strategy.
pub fn invariant(engine: &Engine, b: &BraidWord) -> Result<LaurentPoly> {
    invariant_with(engine, b, Strategy::Auto)
}

pub fn invariant_with(engine: &Engine, b: &BraidWord, strategy: Strategy) -> Result<LaurentPoly> {
    evaluate(engine, b, strategy, None)
}

/// [`modified_trace`] with a choice of strategy.
pub fn modified_trace_with(engine: &Engine, b: &BraidWord, cut: usize, strategy: Strategy) -> Result<LaurentPoly> {
    check_cut(b, cut)?;
    evaluate(engine, b, strategy, Some(cut))
}

/// `dim(V)^n`, saturating.
pub fn state_count(engine: &Engine, b: &BraidWord) -> usize {
    engine.rep.dim.checked_pow(b.strands as u32).unwrap_or(usize::MAX)
}

fn evaluate(engine: &Engine, b: &BraidWord, strategy: Strategy, cut: Option<usize>) -> Result<LaurentPoly> {
    let size = state_count(engine, b);
    let symbolic = match strategy {
        Strategy::Symbolic => true,
        Strategy::Modular => false,
        Strategy::Auto if size > INTERPOLATION_LIMIT => {
            return Err(Error::Engine(format!("{size} states exceed the interpolation limit of {INTERPOLATION_LIMIT}; evaluate at points instead")));
        }
        Strategy::Auto => size <= SYMBOLIC_LIMIT,
    };
    let value = match (symbolic, cut) {
        (true, None) => {
            let space = engine.space(b.strands);
            closure_trace(&space, &b.letters, &engine.crossings(), TraceMode::Reduced { cut: 0 })
        }
        (true, Some(c)) => modified_trace(engine, b, c)?,
        (false, None) => {
            let space = StateSpace::new(&engine.rep.drops, b.strands);
            let f = |x1: Fp, x2: Fp| invariant_at_in(engine, &space, b, x1, x2);
            interpolate(&f, engine.bivariate(), SEED)?
        }
        (false, Some(c)) => {
            let f = |x1: Fp, x2: Fp| modified_trace_at(engine, b, c, x1, x2).expect("cut checked by caller");
            interpolate(&f, engine.bivariate(), SEED)?
        }
    };
    if b.is_knot() && !value.is_integral() {
        return Err(Error::Engine(format!("non-integral invariant for {b}: {value}")));
    }
    Ok(value)
}

fn random_word(rng: &mut StdRng, strands: usize, len: usize) -> BraidWord {
    let letters = if strands < 2 {
        vec![]
    } else {
        (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect()
    };
    BraidWord { strands, letters }
}

/// Invariance under conjugation and both stabilizations.
pub fn markov_suite(engine: &Engine, b: &BraidWord) -> Result<Report> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let base = invariant(engine, b)?;
    let mut report = Report::new(format!("markov moves for {b}"));
    let g = random_word(&mut rng, b.strands, 4);
    let conj = b.conjugate(&g);
    report.check_with(format!("conjugation by {g}"), invariant(engine, &conj)? == base, conj.to_string());
    for positive in [true, false] {
        let s = b.stabilize(positive);
        let name = if positive { "positive stabilization" } else { "negative stabilization" };
        report.check_with(name, invariant(engine, &s)? == base, s.to_string());
    }
    Ok(report)
}

fn random_point(rng: &mut StdRng) -> (Fp, Fp) {
    let mut x = || Fp::new(rng.gen_range(2..crate::arith::modp::P - 1));
    (x(), x())
}

/// Markov equivalence at random points of `F_p`: each trial conjugates `b` by a
/// random 4-letter word and then stabilizes with a random sign, unless `b` is
/// already at `max_strands`.
pub fn markov_at(engine: &Engine, b: &BraidWord, trials: usize, max_strands: usize, seed: u64) -> Report {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = Report::new(format!("markov moves at random points for {b}"));
    for _ in 0..trials {
        let (x1, x2) = random_point(&mut rng);
        let base = invariant_at(engine, b, x1, x2);
        let g = random_word(&mut rng, b.strands, 4);
        let mut moved = b.conjugate(&g);
        if b.strands < max_strands {
            moved = moved.stabilize(rng.gen_bool(0.5));
        }
        report.check_with(format!("{moved}"), invariant_at(engine, &moved, x1, x2) == base, format!("at ({}, {})", x1.0, x2.0));
    }
    report
}

/// Every cut strand of the full modified trace gives the reduced invariant, at one random point.
pub fn cut_independence_at(engine: &Engine, b: &BraidWord, seed: u64) -> Result<Report> {
    let mut rng = StdRng::seed_from_u64(seed);
    let (x1, x2) = random_point(&mut rng);
    let base = invariant_at(engine, b, x1, x2);
    let mut report = Report::new(format!("cut independence for {b}"));
    for cut in 1..=b.strands.max(1) {
        report.check(format!("cut {cut}"), modified_trace_at(engine, b, cut, x1, x2)? == base);
    }
    Ok(report)
}

/// Value of a polynomial at a point of `F_p`.
pub fn eval_point(p: &LaurentPoly, x1: Fp, x2: Fp) -> Fp {
    p.eval_fp(x1, x2, Fp::zeta())
}

#[cfg(test)]
mod tests;
