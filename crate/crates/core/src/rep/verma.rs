//! The 8-dimensional sl3 Verma module and the 2-dimensional sl2 one.

use super::{cartan_data, Algebra, Matrix, RepData, RepKind};
use crate::arith::{bracket, GaussianRational, LaurentPoly, Ring};
use crate::linalg::Mat;

/// Standard PBW basis order: 1, F1, F2, F1F2, F12, F1F12, F12F2, F1F12F2.
pub const VERMA_SL3_LABELS: [&str; 8] = ["000", "100", "001", "101", "010", "110", "011", "111"];

pub(crate) const VERMA_SL3_DROPS: [(i32, i32); 8] = [(0, 0), (1, 0), (0, 1), (1, 1), (1, 1), (2, 1), (1, 2), (2, 2)];

fn br(p: &LaurentPoly) -> LaurentPoly {
    bracket(p).expect("bracket of a unit monomial")
}

fn zeta_t(e1: i32, e2: i32) -> LaurentPoly {
    LaurentPoly::monomial(GaussianRational::zeta(), e1, e2)
}

/// `E12 = −(E1E2 + ζE2E1)` and `F12 = ζF1F2 − F2F1`.
pub(crate) fn root_vectors(e: &[Matrix], f: &[Matrix]) -> (Matrix, Matrix) {
    let z = LaurentPoly::zeta();
    let e12 = e[0].mul(&e[1]).add(&e[1].mul(&e[0]).scale(&z)).neg();
    let f12 = f[0].mul(&f[1]).scale(&z).sub(&f[1].mul(&f[0]));
    (e12, f12)
}

pub fn build_verma_sl3() -> RepData {
    let t1 = LaurentPoly::t1();
    let t2 = LaurentPoly::t2();
    let one = LaurentPoly::one();
    let z = LaurentPoly::zeta();
    let mut e1 = Mat::zeros(8, 8);
    let mut e2 = Mat::zeros(8, 8);

    e1.set(0, 1, br(&t1));
    e1.set(2, 3, br(&zeta_t(1, 0)));
    e1.set(2, 4, zeta_t(1, 0));
    e1.set(3, 5, zeta_t(1, 0));
    e1.set(4, 5, br(&zeta_t(1, 0)).neg());
    e1.set(6, 7, br(&t1));

    let t2_inv = LaurentPoly::mono(0, -1);
    e2.set(0, 2, br(&t2));
    e2.set(1, 3, br(&t2));
    e2.set(1, 4, t2_inv.neg());
    e2.set(3, 6, t2_inv.clone());
    e2.set(4, 6, br(&t2));
    e2.set(5, 7, br(&t2));

    let mut f1 = Mat::zeros(8, 8);
    for (from, to) in [(0, 1), (2, 3), (4, 5), (6, 7)] {
        f1.set(to, from, one.clone());
    }

    let mut f2 = Mat::zeros(8, 8);
    f2.set(2, 0, one.clone());
    f2.set(6, 4, z.neg());
    f2.set(3, 1, z.clone());
    f2.set(4, 1, one.neg());
    f2.set(6, 3, one.neg());
    f2.set(7, 5, one.clone());

    let hw = vec![t1, t2];
    let drops = VERMA_SL3_DROPS.to_vec();
    let (k, k_inv, pivot) = cartan_data(Algebra::Sl3, &hw, &drops);
    let e = vec![e1, e2];
    let f = vec![f1, f2];
    let (e12, f12) = root_vectors(&e, &f);
    RepData {
        kind: RepKind::VermaSl3,
        dim: 8,
        labels: VERMA_SL3_LABELS.iter().map(|s| s.to_string()).collect(),
        drops,
        hw,
        e,
        f,
        e12: Some(e12),
        f12: Some(f12),
        k,
        k_inv,
        pivot,
    }
}

pub fn build_verma_sl2() -> RepData {
    let t = LaurentPoly::t1();
    let mut e = Mat::zeros(2, 2);
    e.set(0, 1, br(&t));
    let mut f = Mat::zeros(2, 2);
    f.set(1, 0, LaurentPoly::one());
    let hw = vec![t];
    let drops = vec![(0, 0), (1, 0)];
    let (k, k_inv, pivot) = cartan_data(Algebra::Sl2, &hw, &drops);
    RepData {
        kind: RepKind::VermaSl2,
        dim: 2,
        labels: vec!["0".into(), "1".into()],
        drops,
        hw,
        e: vec![e],
        f: vec![f],
        e12: None,
        f12: None,
        k,
        k_inv,
        pivot,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(i: usize, n: usize) -> Vec<LaurentPoly> {
        let mut v = vec![LaurentPoly::zero(); n];
        v[i] = LaurentPoly::one();
        v
    }

    #[test]
    fn table_entries() {
        let rep = build_verma_sl3();
        let v = rep.e[0].apply(&unit(1, 8));
        assert_eq!(v[0], br(&LaurentPoly::t1()));
        let v = rep.e[1].apply(&unit(4, 8));
        assert_eq!(v[1], -LaurentPoly::mono(0, -1));
    }

    #[test]
    fn f2_on_f1v0() {
        let rep = build_verma_sl3();
        let v = rep.f[1].apply(&unit(1, 8));
        assert_eq!(v[3], LaurentPoly::zeta());
        assert_eq!(v[4], LaurentPoly::int(-1));
        assert_eq!(v.iter().filter(|x| !x.is_zero()).count(), 2);
    }

    #[test]
    fn sl2_lowest_weight() {
        let rep = build_verma_sl2();
        assert_eq!(*rep.k[0].get(1, 1), -LaurentPoly::t1());
        assert_eq!(*rep.e[0].get(0, 1), br(&LaurentPoly::t1()));
        assert!(rep.e[0].apply(&unit(0, 2)).iter().all(|x| x.is_zero()));
    }
}
