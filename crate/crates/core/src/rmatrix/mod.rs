//! The normalized R-matrix `R_t` on `V ⊗ V` and its partial traces.
//!
//! `R = P ∘ C ∘ Ř` with `Ř = ∏_β (1 + 2ζ E_β⊗F_β)` (rightmost root acts first)
//! and `C` the diagonal Cartan/ribbon factor.

mod verify;

pub use verify::{
    verify_ambidexterity, verify_intertwiner, verify_partial_traces, verify_rdecomp, verify_skein_charpoly, verify_sl2_minimal_polynomial, verify_yang_baxter, YbMode,
    SAMPLE_POINTS,
};

use crate::arith::{GaussianRational, LaurentPoly, Ring};
use crate::linalg::{Mat, SparseMat};
use crate::rep::{t_two_rho, RepData};

/// A square operator on `V ⊗ V` (index `a·dim + b` for `a ⊗ b`).
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOperator {
    pub rep_dim: usize,
    pub op: SparseMat<LaurentPoly>,
}

impl TensorOperator {
    pub fn new(rep_dim: usize, op: SparseMat<LaurentPoly>) -> Self {
        assert_eq!(op.dim(), rep_dim * rep_dim);
        TensorOperator { rep_dim, op }
    }

    pub fn identity(rep_dim: usize) -> Self {
        Self::new(rep_dim, SparseMat::identity(rep_dim * rep_dim))
    }

    pub fn swap(rep_dim: usize) -> Self {
        let n = rep_dim;
        let cols = (0..n * n).map(|c| vec![((c % n) * n + c / n, LaurentPoly::one())]).collect();
        Self::new(n, SparseMat::from_columns(n * n, cols))
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        Self::new(self.rep_dim, self.op.mul(&o.op))
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> LaurentPoly {
        self.op.get(a * self.rep_dim + b, c * self.rep_dim + d)
    }

    /// Every nonzero entry `((a,b),(c,d))` has `drop(a)+drop(b) = drop(c)+drop(d)`.
    pub fn conserves_drop(&self, rep: &RepData) -> bool {
        let n = self.rep_dim;
        let total = |i: usize| {
            let (x, y) = (rep.drops[i / n], rep.drops[i % n]);
            (x.0 + y.0, x.1 + y.1)
        };
        (0..n * n).all(|c| self.op.col(c).iter().all(|(r, _)| total(*r) == total(c)))
    }
}

fn one_plus(rep: &RepData, e: &Mat<LaurentPoly>, f: &Mat<LaurentPoly>, coeff: &LaurentPoly) -> SparseMat<LaurentPoly> {
    let ef = SparseMat::from_dense(e).kron(&SparseMat::from_dense(f)).scale(coeff);
    SparseMat::identity(rep.dim * rep.dim).add(&ef)
}

fn two_zeta() -> LaurentPoly {
    LaurentPoly::constant(GaussianRational::from_ints(0, 2))
}

/// `Ř = ∏_β (1⊗1 + 2ζ E_β⊗F_β)` over the ordered positive roots.
pub fn build_check_r(rep: &RepData) -> TensorOperator {
    let c = two_zeta();
    let mut acc = SparseMat::identity(rep.dim * rep.dim);
    for (e, f) in rep.root_pairs() {
        acc = acc.mul(&one_plus(rep, e, f, &c));
    }
    TensorOperator::new(rep.dim, acc)
}

/// `Ř^{-1} = ∏^{rev} (1⊗1 − 2ζ E_β⊗F_β)`.
pub fn build_check_r_inv(rep: &RepData) -> TensorOperator {
    let c = two_zeta().neg();
    let mut acc = SparseMat::identity(rep.dim * rep.dim);
    for (e, f) in rep.root_pairs().into_iter().rev() {
        acc = acc.mul(&one_plus(rep, e, f, &c));
    }
    TensorOperator::new(rep.dim, acc)
}

/// Diagonal entry on `b⊗b'`: `t_{2ρ}·∏_i hw_i^{−(m_i+m'_i)}·ζ^{mᵀAm'}`.
pub fn cartan_entry(rep: &RepData, b: usize, b2: usize) -> LaurentPoly {
    let alg = rep.algebra();
    let (m, m2) = (rep.drops[b], rep.drops[b2]);
    let tot = [m.0 + m2.0, m.1 + m2.1];
    let mut acc = t_two_rho(rep);
    for i in 0..alg.rank() {
        let p = rep.hw[i].monomial_powi(-(tot[i] as i64)).expect("hw is a unit monomial");
        acc = &acc * &p;
    }
    acc.scale(&GaussianRational::zeta_pow(alg.pairing(m, m2)))
}

pub fn build_cartan_factor(rep: &RepData) -> TensorOperator {
    let n = rep.dim;
    let d = (0..n * n).map(|i| cartan_entry(rep, i / n, i % n)).collect();
    TensorOperator::new(n, SparseMat::diag(d))
}

fn invert_diagonal(d: &TensorOperator) -> TensorOperator {
    let n = d.rep_dim * d.rep_dim;
    let entries = (0..n).map(|i| d.op.get(i, i).monomial_inverse().expect("Cartan entries are unit monomials")).collect();
    TensorOperator::new(d.rep_dim, SparseMat::diag(entries))
}

/// `(R_t, R_t^{-1})`.
pub fn build_rt(rep: &RepData) -> (TensorOperator, TensorOperator) {
    let p = TensorOperator::swap(rep.dim);
    let c = build_cartan_factor(rep);
    let r = p.compose(&c).compose(&build_check_r(rep));
    let r_inv = build_check_r_inv(rep).compose(&invert_diagonal(&c)).compose(&p);
    (r, r_inv)
}

/// `Σ_b h(b)·op((a,b),(c,b))`.
pub fn partial_trace_right(op: &TensorOperator, rep: &RepData) -> Mat<LaurentPoly> {
    let n = rep.dim;
    let mut out = Mat::zeros(n, n);
    for c in 0..n {
        for b in 0..n {
            for (r, v) in op.op.col(c * n + b) {
                if r % n == b {
                    out.add_to(r / n, c, &v.mul(&rep.pivot[b]));
                }
            }
        }
    }
    out
}

/// `Σ_a h(a)^{-1}·op((a,b),(a,d))`.
pub fn partial_trace_left(op: &TensorOperator, rep: &RepData) -> Mat<LaurentPoly> {
    let n = rep.dim;
    let h_inv: Vec<LaurentPoly> = rep.pivot.iter().map(|h| h.monomial_inverse().expect("pivot entries are unit monomials")).collect();
    let mut out = Mat::zeros(n, n);
    for a in 0..n {
        for d in 0..n {
            for (r, v) in op.op.col(a * n + d) {
                if r / n == a {
                    out.add_to(r % n, d, &v.mul(&h_inv[a]));
                }
            }
        }
    }
    out
}

pub(crate) fn eval_sparse(m: &SparseMat<LaurentPoly>, x1: &GaussianRational, x2: &GaussianRational) -> SparseMat<GaussianRational> {
    m.map(|p| p.eval(x1, x2).expect("sample points are nonzero"))
}
