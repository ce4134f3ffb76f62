//! Defining relations of the restricted quantum group, checked as matrix identities.

use super::{Algebra, Matrix, RepData};
use crate::arith::{GaussianRational, LaurentPoly};
use crate::linalg::Mat;

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<(String, bool)>,
}

impl RelationReport {
    fn record(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }
}

fn zeta_pow(k: i64) -> LaurentPoly {
    LaurentPoly::constant(GaussianRational::zeta_pow(k))
}

fn names(alg: Algebra) -> Vec<String> {
    match alg {
        Algebra::Sl2 => vec![String::new()],
        Algebra::Sl3 => vec!["1".into(), "2".into()],
    }
}

pub fn check_relations(rep: &RepData) -> RelationReport {
    let alg = rep.algebra();
    let n = rep.dim;
    let id = Mat::<LaurentPoly>::identity(n);
    let nm = names(alg);
    let mut r = RelationReport::default();
    let minus_half_zeta = LaurentPoly::constant(GaussianRational::new(0.into(), num_rational::Ratio::new(-1, 2)));

    for i in 0..alg.rank() {
        r.record(format!("K{0}K{0}^-1 = 1", nm[i]), rep.k[i].mul(&rep.k_inv[i]) == id);
        for j in 0..alg.rank() {
            let a = alg.cartan(i, j);
            let ke = rep.k[i].mul(&rep.e[j]);
            let ek = rep.e[j].mul(&rep.k[i]).scale(&zeta_pow(a));
            r.record(format!("K{}E{} = z^a E{}K{}", nm[i], nm[j], nm[j], nm[i]), ke == ek);
            let kf = rep.k[i].mul(&rep.f[j]);
            let fk = rep.f[j].mul(&rep.k[i]).scale(&zeta_pow(-a));
            r.record(format!("K{}F{} = z^-a F{}K{}", nm[i], nm[j], nm[j], nm[i]), kf == fk);
            r.record(format!("K{}K{} = K{}K{}", nm[i], nm[j], nm[j], nm[i]), rep.k[i].mul(&rep.k[j]) == rep.k[j].mul(&rep.k[i]));

            let comm = rep.e[i].mul(&rep.f[j]).sub(&rep.f[j].mul(&rep.e[i]));
            let expect = if i == j { rep.k[i].sub(&rep.k_inv[i]).scale(&minus_half_zeta) } else { Mat::zeros(n, n) };
            r.record(format!("[E{},F{}]", nm[i], nm[j]), comm == expect);
        }
    }

    let mut nil: Vec<(String, &Matrix)> = Vec::new();
    for i in 0..alg.rank() {
        nil.push((format!("E{}", nm[i]), &rep.e[i]));
        nil.push((format!("F{}", nm[i]), &rep.f[i]));
    }
    if let (Some(e12), Some(f12)) = (&rep.e12, &rep.f12) {
        nil.push(("E12".into(), e12));
        nil.push(("F12".into(), f12));
        let z = LaurentPoly::zeta();
        let (e, f) = (&rep.e, &rep.f);
        let e12_def = e[0].mul(&e[1]).add(&e[1].mul(&e[0]).scale(&z)).neg();
        let f12_def = f[1].mul(&f[0]).sub(&f[0].mul(&f[1]).scale(&z)).neg();
        r.record("E12 = -(E1E2 + zE2E1)", *e12 == e12_def);
        r.record("F12 = -(F2F1 - zF1F2)", *f12 == f12_def);
    }
    for (name, m) in nil {
        r.record(format!("{name}^2 = 0"), m.mul(m).is_zero());
    }

    for i in 0..alg.rank() {
        r.record(format!("E{} lowers drop", nm[i]), respects_grading(rep, &rep.e[i], i, -1));
        r.record(format!("F{} raises drop", nm[i]), respects_grading(rep, &rep.f[i], i, 1));
    }
    r
}

fn respects_grading(rep: &RepData, m: &Matrix, i: usize, step: i32) -> bool {
    (0..rep.dim).all(|row| {
        (0..rep.dim).all(|col| {
            if m.get(row, col).is_zero() {
                return true;
            }
            let (a, b) = rep.drops[col];
            let want = if i == 0 { (a + step, b) } else { (a, b + step) };
            rep.drops[row] == want
        })
    })
}
