//! Weight representations of the restricted quantum groups of sl2 and sl3.
//!
//! Every representation is stored as generator action matrices over
//! [`LaurentPoly`] together with the drop vector of each basis element.
//! The `K_i` eigenvalue on a basis element with drop `m` is
//! `hw(K_i)·ζ^{−(A·m)_i}`.

mod character;
mod coproduct;
mod induced;
mod relations;
mod verma;

pub use character::{reducibility_predicates, sigma_psi, Character, Reducibility};
pub use coproduct::{coproduct_apply, coproduct_matrix, Generator};
pub use induced::{build_head_rep, build_verma_sl3_from_words};
pub use relations::{check_relations, RelationReport};
pub use verma::{build_verma_sl2, build_verma_sl3, VERMA_SL3_LABELS};

use crate::arith::{GaussianRational, LaurentPoly};
use crate::linalg::Mat;

pub type Matrix = Mat<LaurentPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeadKind {
    X,
    Y,
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepKind {
    VermaSl3,
    VermaSl2,
    Head(HeadKind, Sign),
}

impl RepKind {
    /// Short tag used by the CLI and the cache: `sl3`, `sl2`, `X+`, `W-`, ...
    pub fn tag(&self) -> String {
        match self {
            RepKind::VermaSl3 => "sl3".into(),
            RepKind::VermaSl2 => "sl2".into(),
            RepKind::Head(k, s) => {
                let k = match k {
                    HeadKind::X => "X",
                    HeadKind::Y => "Y",
                    HeadKind::W => "W",
                };
                format!("{k}{}", if *s == Sign::Plus { "+" } else { "-" })
            }
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        let all = [
            RepKind::VermaSl3,
            RepKind::VermaSl2,
            RepKind::Head(HeadKind::X, Sign::Plus),
            RepKind::Head(HeadKind::X, Sign::Minus),
            RepKind::Head(HeadKind::Y, Sign::Plus),
            RepKind::Head(HeadKind::Y, Sign::Minus),
            RepKind::Head(HeadKind::W, Sign::Plus),
            RepKind::Head(HeadKind::W, Sign::Minus),
        ];
        all.into_iter().find(|k| k.tag() == tag)
    }

    pub fn all_heads() -> Vec<RepKind> {
        let mut v = Vec::new();
        for k in [HeadKind::X, HeadKind::Y, HeadKind::W] {
            for s in [Sign::Plus, Sign::Minus] {
                v.push(RepKind::Head(k, s));
            }
        }
        v
    }

    pub fn algebra(&self) -> Algebra {
        match self {
            RepKind::VermaSl2 => Algebra::Sl2,
            _ => Algebra::Sl3,
        }
    }

    pub fn build(&self) -> RepData {
        match *self {
            RepKind::VermaSl3 => build_verma_sl3(),
            RepKind::VermaSl2 => build_verma_sl2(),
            RepKind::Head(k, s) => build_head_rep(k, s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Sl2,
    Sl3,
}

impl Algebra {
    pub fn rank(&self) -> usize {
        match self {
            Algebra::Sl2 => 1,
            Algebra::Sl3 => 2,
        }
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        match self {
            Algebra::Sl2 => 2,
            Algebra::Sl3 => {
                if i == j {
                    2
                } else {
                    -1
                }
            }
        }
    }

    /// `(A·m)_i`.
    pub fn a_times(&self, m: (i32, i32), i: usize) -> i64 {
        let m = [m.0 as i64, m.1 as i64];
        (0..self.rank()).map(|j| self.cartan(i, j) * m[j]).sum()
    }

    /// `mᵀ A m'`.
    pub fn pairing(&self, m: (i32, i32), m2: (i32, i32)) -> i64 {
        let m = [m.0 as i64, m.1 as i64];
        (0..self.rank()).map(|i| m[i] * self.a_times(m2, i)).sum()
    }
}

#[derive(Clone, Debug)]
pub struct RepData {
    pub kind: RepKind,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Per basis element, simple-root lowering counts (sl2 uses `(m, 0)`).
    pub drops: Vec<(i32, i32)>,
    /// Eigenvalue of `K_i` on the generating vector.
    pub hw: Vec<LaurentPoly>,
    pub e: Vec<Matrix>,
    pub f: Vec<Matrix>,
    /// `(E_{12}, F_{12})` for sl3.
    pub e12: Option<Matrix>,
    pub f12: Option<Matrix>,
    pub k: Vec<Matrix>,
    pub k_inv: Vec<Matrix>,
    /// Diagonal of `h = K_{2ρ}^{-1}`.
    pub pivot: Vec<LaurentPoly>,
}

impl RepData {
    pub fn algebra(&self) -> Algebra {
        self.kind.algebra()
    }

    /// `(E_β, F_β)` for the positive roots in the order used by the quasi-R-matrix
    /// (sl3: α1, α12, α2).
    pub fn root_pairs(&self) -> Vec<(&Matrix, &Matrix)> {
        match self.algebra() {
            Algebra::Sl2 => vec![(&self.e[0], &self.f[0])],
            Algebra::Sl3 => vec![
                (&self.e[0], &self.f[0]),
                (self.e12.as_ref().expect("sl3 rep carries E12"), self.f12.as_ref().expect("sl3 rep carries F12")),
                (&self.e[1], &self.f[1]),
            ],
        }
    }

    /// Whether `t2` ever appears (false for sl2 and the head reps).
    pub fn uses_t2(&self) -> bool {
        matches!(self.kind, RepKind::VermaSl3)
    }

    pub fn pivotal_diagonal(&self) -> &[LaurentPoly] {
        &self.pivot
    }
}

/// Eigenvalue of `K_i` on a vector with drop `m`: `hw_i·ζ^{−(A·m)_i}`.
pub(crate) fn k_eigenvalue(alg: Algebra, hw: &[LaurentPoly], m: (i32, i32), i: usize) -> LaurentPoly {
    hw[i].scale(&GaussianRational::zeta_pow(-alg.a_times(m, i)))
}

/// Fills `k`, `k_inv` and `pivot` from `hw` and `drops`.
pub(crate) fn cartan_data(alg: Algebra, hw: &[LaurentPoly], drops: &[(i32, i32)]) -> (Vec<Matrix>, Vec<Matrix>, Vec<LaurentPoly>) {
    let mut k = Vec::new();
    let mut k_inv = Vec::new();
    for i in 0..alg.rank() {
        let vals: Vec<LaurentPoly> = drops.iter().map(|&m| k_eigenvalue(alg, hw, m, i)).collect();
        let inv: Vec<LaurentPoly> = vals.iter().map(|v| v.monomial_inverse().expect("K eigenvalues are unit monomials")).collect();
        k.push(Mat::diag(&vals));
        k_inv.push(Mat::diag(&inv));
    }
    let pivot = drops.iter().map(|&m| pivot_entry(alg, hw, m)).collect();
    (k, k_inv, pivot)
}

/// `K_{2ρ}^{-1}` on drop `m`: sl3 `hw1^{-2}hw2^{-2}(−1)^{m1+m2}`, sl2 `hw^{-1}(−1)^m`.
fn pivot_entry(alg: Algebra, hw: &[LaurentPoly], m: (i32, i32)) -> LaurentPoly {
    let inv = |p: &LaurentPoly| p.monomial_inverse().expect("unit monomial");
    let sign = GaussianRational::from_int(if (m.0 + m.1) % 2 == 0 { 1 } else { -1 });
    match alg {
        Algebra::Sl2 => inv(&hw[0]).scale(&sign),
        Algebra::Sl3 => (&inv(&hw[0]).pow(2) * &inv(&hw[1]).pow(2)).scale(&sign),
    }
}

/// `t_{2ρ}`: `hw1²hw2²` for sl3, `hw` for sl2.
pub fn t_two_rho(rep: &RepData) -> LaurentPoly {
    match rep.algebra() {
        Algebra::Sl2 => rep.hw[0].clone(),
        Algebra::Sl3 => &rep.hw[0].pow(2) * &rep.hw[1].pow(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Ring;

    #[test]
    fn tags_round_trip() {
        for k in [RepKind::VermaSl3, RepKind::VermaSl2].into_iter().chain(RepKind::all_heads()) {
            assert_eq!(RepKind::from_tag(&k.tag()), Some(k));
        }
        assert_eq!(RepKind::from_tag("Z+"), None);
    }

    #[test]
    fn pivot_traces_vanish() {
        for k in [RepKind::VermaSl3, RepKind::VermaSl2].into_iter().chain(RepKind::all_heads()) {
            let rep = k.build();
            let tr = rep.pivot.iter().fold(LaurentPoly::zero(), |a, b| a.add(b));
            assert!(tr.is_zero(), "{}: tr(h) = {}", k.tag(), tr);
        }
    }

    #[test]
    fn sl3_pivot_examples() {
        let rep = build_verma_sl3();
        assert_eq!(rep.pivot[0], LaurentPoly::mono(-2, -2));
        assert_eq!(rep.pivot[7], LaurentPoly::mono(-2, -2));
        assert_eq!(rep.pivot[1], -LaurentPoly::mono(-2, -2));
    }

    #[test]
    fn weight_consistency() {
        for k in [RepKind::VermaSl3, RepKind::VermaSl2].into_iter().chain(RepKind::all_heads()) {
            let rep = k.build();
            let alg = rep.algebra();
            for b in 0..rep.dim {
                for i in 0..alg.rank() {
                    assert_eq!(*rep.k[i].get(b, b), k_eigenvalue(alg, &rep.hw, rep.drops[b], i));
                }
            }
        }
    }
}
