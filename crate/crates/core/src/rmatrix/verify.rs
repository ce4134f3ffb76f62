//! Operator-level identities satisfied by `R_t`.

use super::{build_rt, eval_sparse, partial_trace_left, partial_trace_right, TensorOperator};
use crate::arith::{GaussianRational, LaurentPoly, Ring};
use crate::linalg::{Mat, SparseMat};
use crate::report::Report;
use crate::rep::{coproduct_matrix, Algebra, Generator, RepData};

/// Exact parameter points `(t1, t2)` used by the sampled checks.
pub const SAMPLE_POINTS: [((i64, i64, i64), (i64, i64, i64)); 3] = [
    // (re_num, im_num, den) for each coordinate
    ((3, 0, 1), (5, 0, 1)),
    ((-2, 0, 1), (1, 0, 7)),
    ((1, 2, 1), (3, -1, 1)),
];

pub(crate) fn sample_point(i: usize) -> (GaussianRational, GaussianRational) {
    let g = |(re, im, den): (i64, i64, i64)| {
        let d = GaussianRational::frac(1, den);
        &GaussianRational::from_ints(re, im) * &d
    };
    let (a, b) = SAMPLE_POINTS[i];
    (g(a), g(b))
}

fn generator_symbols(alg: Algebra) -> Vec<Generator> {
    let mut v = Vec::new();
    for i in 0..alg.rank() {
        v.push(Generator::E(i));
        v.push(Generator::F(i));
        v.push(Generator::K(i));
    }
    v
}

fn generator_name(g: Generator, alg: Algebra) -> String {
    let idx = |i: usize| if alg == Algebra::Sl2 { String::new() } else { (i + 1).to_string() };
    match g {
        Generator::E(i) => format!("E{}", idx(i)),
        Generator::F(i) => format!("F{}", idx(i)),
        Generator::K(i) => format!("K{}", idx(i)),
        Generator::KInv(i) => format!("K{}^-1", idx(i)),
    }
}

/// `R·Δ(x) = Δ(x)·R` for every generator `x`.
pub fn verify_intertwiner(r: &TensorOperator, rep: &RepData) -> Report {
    let mut report = Report::new(format!("intertwiner {}", rep.kind.tag()));
    for g in generator_symbols(rep.algebra()) {
        let d = SparseMat::from_dense(&coproduct_matrix(rep, g));
        let ok = r.op.mul(&d) == d.mul(&r.op);
        report.check(generator_name(g, rep.algebra()), ok);
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YbMode {
    /// Exact identity over the Laurent ring.
    Symbolic,
    /// Identity at each of [`SAMPLE_POINTS`].
    Sampled,
}

fn yang_baxter_holds<T: Ring>(r: &SparseMat<T>, n: usize) -> Option<(usize, usize)> {
    let id = SparseMat::identity(n);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let lhs = r12.mul(&r23).mul(&r12);
    let rhs = r23.mul(&r12).mul(&r23);
    lhs.first_difference(&rhs)
}

/// `(R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R)` on `V^{⊗3}`.
pub fn verify_yang_baxter(rep: &RepData, mode: YbMode) -> Report {
    let mut report = Report::new(format!("Yang-Baxter {}", rep.kind.tag()));
    let (r, _) = build_rt(rep);
    match mode {
        YbMode::Symbolic => match yang_baxter_holds(&r.op, rep.dim) {
            None => report.check("symbolic", true),
            Some((i, j)) => report.check_with("symbolic", false, format!("entry ({i},{j}) differs")),
        },
        YbMode::Sampled => {
            for k in 0..SAMPLE_POINTS.len() {
                let (x1, x2) = sample_point(k);
                let name = format!("t = ({x1}, {x2})");
                match yang_baxter_holds(&eval_sparse(&r.op, &x1, &x2), rep.dim) {
                    None => report.check(name, true),
                    Some((i, j)) => report.check_with(name, false, format!("entry ({i},{j}) differs")),
                }
            }
        }
    }
    report
}

fn charpoly_product(r: &SparseMat<LaurentPoly>) -> SparseMat<LaurentPoly> {
    let n = r.dim();
    let id = SparseMat::identity(n);
    let m = |a: i32, b: i32| LaurentPoly::mono(a, b);
    let factors = [
        r.mul(r).add(&id),
        id.scale(&m(2, 0)).add(r),
        r.scale(&m(2, 0)).add(&id),
        id.scale(&m(0, 2)).add(r),
        r.scale(&m(0, 2)).add(&id),
        id.scale(&m(2, 2)).sub(r),
        r.scale(&m(2, 2)).sub(&id),
    ];
    let mut acc = id.clone();
    for f in &factors {
        acc = acc.mul(f);
    }
    acc
}

/// The degree-7 characteristic identity of the sl3 `R_t`, plus a negative control.
pub fn verify_skein_charpoly(rep: &RepData) -> Report {
    let mut report = Report::new("skein characteristic polynomial");
    let (r, _) = build_rt(rep);
    let p = charpoly_product(&r.op);
    match p.some_nonzero() {
        None => report.check("P(R_t) = 0", true),
        Some((i, j, v)) => report.check_with("P(R_t) = 0", false, format!("entry ({i},{j}) = {v}")),
    }
    let control = charpoly_product(&SparseMat::identity(r.op.dim()));
    report.check("P(id) != 0", !control.is_zero());
    report
}

/// Degree of the minimal polynomial of the sl2 `R_t` at each sample point is at most 3.
pub fn verify_sl2_minimal_polynomial(rep: &RepData) -> Report {
    let mut report = Report::new("sl2 minimal polynomial");
    let (r, _) = build_rt(rep);
    for k in 0..SAMPLE_POINTS.len() {
        let (x1, x2) = sample_point(k);
        let rv = eval_sparse(&r.op, &x1, &x2).to_dense();
        let n = rv.rows();
        let mut powers = vec![Mat::identity(n)];
        let mut degree = None;
        for d in 1..=n * n {
            powers.push(powers[d - 1].mul(&rv));
            let stacked = Mat::from_fn(n * n, d + 1, |i, j| powers[j].get(i / n, i % n).clone());
            if stacked.rank().expect("exact rank") <= d {
                degree = Some(d);
                break;
            }
        }
        let deg = degree.expect("a minimal polynomial exists");
        report.check_with(format!("t = {x1}"), deg <= 3, format!("degree {deg}"));
    }
    report
}

/// Left and right partial traces of `R_t²` agree.
pub fn verify_ambidexterity(rep: &RepData) -> Report {
    let mut report = Report::new(format!("ambidexterity {}", rep.kind.tag()));
    let (r, _) = build_rt(rep);
    let a = r.compose(&r);
    report.check("tr_L(R^2) = tr_R(R^2)", partial_trace_left(&a, rep) == partial_trace_right(&a, rep));
    report
}

/// Right partial traces of `R_t^{±1}` are the identity and `tr(h) = 0`.
pub fn verify_partial_traces(rep: &RepData) -> Report {
    let mut report = Report::new(format!("partial traces {}", rep.kind.tag()));
    let (r, r_inv) = build_rt(rep);
    let id = Mat::identity(rep.dim);
    report.check("tr_R(R) = id", partial_trace_right(&r, rep) == id);
    report.check("tr_R(R^-1) = id", partial_trace_right(&r_inv, rep) == id);
    let tr = rep.pivot.iter().fold(LaurentPoly::zero(), |a, b| a.add(b));
    report.check_with("tr(h) = 0", tr.is_zero(), tr.to_string());
    report
}

fn apply_all(mats: &[&Mat<LaurentPoly>], v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut out = v.to_vec();
    for m in mats.iter().rev() {
        out = m.apply(&out);
    }
    out
}

/// The eight highest weight vectors `Δ(E^{(111)}F^{(111)})(v0⊗F v0)` and the action of `R_t` on them.
pub fn verify_rdecomp(rep: &RepData) -> Report {
    assert_eq!(rep.kind, crate::rep::RepKind::VermaSl3, "the decomposition check is for the sl3 Verma module");
    let mut report = Report::new("R-matrix on highest weight vectors");
    let n = rep.dim;
    let (r, _) = build_rt(rep);
    let de: Vec<Mat<LaurentPoly>> = (0..2).map(|i| coproduct_matrix(rep, Generator::E(i))).collect();
    let df: Vec<Mat<LaurentPoly>> = (0..2).map(|i| coproduct_matrix(rep, Generator::F(i))).collect();
    let z = LaurentPoly::zeta();
    let de12 = de[0].mul(&de[1]).add(&de[1].mul(&de[0]).scale(&z)).neg();
    let df12 = df[0].mul(&df[1]).scale(&z).sub(&df[1].mul(&df[0]));
    let top = [&de[0], &de12, &de[1], &df[0], &df12, &df[1]];

    let f = &rep.f;
    let v0: Vec<LaurentPoly> = (0..n).map(|i| if i == 0 { LaurentPoly::one() } else { LaurentPoly::zero() }).collect();
    let words: [(&str, Vec<usize>); 8] = [
        ("1", vec![]),
        ("F1", vec![0]),
        ("F2", vec![1]),
        ("F1F2", vec![0, 1]),
        ("F2F1", vec![1, 0]),
        ("F1F2F1", vec![0, 1, 0]),
        ("F2F1F2", vec![1, 0, 1]),
        ("F1F2F1F2", vec![0, 1, 0, 1]),
    ];
    let vecs: Vec<Vec<LaurentPoly>> = words
        .iter()
        .map(|(_, w)| {
            let mats: Vec<&Mat<LaurentPoly>> = w.iter().map(|&i| &f[i]).collect();
            let fv = apply_all(&mats, &v0);
            let mut t = vec![LaurentPoly::zero(); n * n];
            for (b, x) in fv.iter().enumerate() {
                t[b] = x.clone();
            }
            apply_all(&top, &t)
        })
        .collect();

    let m = LaurentPoly::mono;
    let minus_zeta = LaurentPoly::zeta().neg();
    let expected: [(usize, LaurentPoly); 8] = [
        (0, m(2, 2)),
        (1, -m(0, 2)),
        (2, -m(2, 0)),
        (4, minus_zeta.clone()),
        (3, minus_zeta),
        (5, -m(-2, 0)),
        (6, -m(0, -2)),
        (7, m(-2, -2)),
    ];
    for (i, (name, _)) in words.iter().enumerate() {
        let u = &vecs[i];
        if u.iter().all(|x| x.is_zero()) {
            report.check_with(format!("{name}"), false, "highest weight vector vanishes");
            continue;
        }
        let ru = r.op.apply(u);
        let (target, scalar) = &expected[i];
        let want: Vec<LaurentPoly> = vecs[*target].iter().map(|x| x.mul(scalar)).collect();
        let ok = ru == want;
        let detail = if *target == i { format!("eigenvalue {scalar}") } else { format!("sent to {scalar} * u[{}]", words[*target].0) };
        report.check_with(format!("{name}"), ok, detail);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::RepKind;

    #[test]
    fn intertwiners() {
        for k in [RepKind::VermaSl3, RepKind::VermaSl2].into_iter().chain(RepKind::all_heads()) {
            let rep = k.build();
            let (r, _) = build_rt(&rep);
            let rep_ = verify_intertwiner(&r, &rep);
            assert!(rep_.passed(), "{rep_}");
        }
    }

    #[test]
    fn corrupted_r_named() {
        let rep = RepKind::VermaSl2.build();
        let (r, _) = build_rt(&rep);
        let mut d = r.op.to_dense();
        d.set(0, 0, LaurentPoly::int(5));
        let bad = TensorOperator::new(2, SparseMat::from_dense(&d));
        let report = verify_intertwiner(&bad, &rep);
        assert!(!report.passed());
        assert!(report.failures().iter().any(|c| c.name == "E" || c.name == "F"));
    }

    #[test]
    fn yang_baxter_small_reps_symbolic() {
        for k in [RepKind::VermaSl2].into_iter().chain(RepKind::all_heads()) {
            let report = verify_yang_baxter(&k.build(), YbMode::Symbolic);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn yang_baxter_sl3_sampled() {
        let report = verify_yang_baxter(&RepKind::VermaSl3.build(), YbMode::Sampled);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn charpoly() {
        let report = verify_skein_charpoly(&RepKind::VermaSl3.build());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn sl2_min_poly() {
        let report = verify_sl2_minimal_polynomial(&RepKind::VermaSl2.build());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn ambidextrous() {
        for k in [RepKind::VermaSl3, RepKind::VermaSl2].into_iter().chain(RepKind::all_heads()) {
            let report = verify_ambidexterity(&k.build());
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn rdecomp() {
        let report = verify_rdecomp(&RepKind::VermaSl3.build());
        assert!(report.passed(), "{report}");
    }
}
