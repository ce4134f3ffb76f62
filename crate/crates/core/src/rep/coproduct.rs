//! Action of `U ⊗ U` on `V ⊗ V` through the coproduct.
//!
//! `Δ(E_i) = E_i⊗K_i + 1⊗E_i`, `Δ(F_i) = F_i⊗1 + K_i^{-1}⊗F_i`, `Δ(K_i) = K_i⊗K_i`.

use super::{Algebra, Matrix, RepData};
use crate::arith::LaurentPoly;
use crate::error::{Error, Result};
use crate::linalg::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl Generator {
    /// Accepts `E1`, `F2`, `K1`, `K2^-1`, ... for sl3 and `E`, `F`, `K`, `K^-1` for sl2.
    pub fn parse(sym: &str, alg: Algebra) -> Result<Self> {
        let bad = || Error::UnknownGenerator(sym.to_string());
        let (body, inv) = match sym.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (sym, false),
        };
        let mut chars = body.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rest: String = chars.collect();
        let idx = match (alg, rest.as_str()) {
            (Algebra::Sl2, "") => 0,
            (Algebra::Sl3, "1") => 0,
            (Algebra::Sl3, "2") => 1,
            _ => return Err(bad()),
        };
        match (letter, inv) {
            ('E', false) => Ok(Generator::E(idx)),
            ('F', false) => Ok(Generator::F(idx)),
            ('K', false) => Ok(Generator::K(idx)),
            ('K', true) => Ok(Generator::KInv(idx)),
            _ => Err(bad()),
        }
    }

    pub fn matrix<'a>(&self, rep: &'a RepData) -> &'a Matrix {
        match *self {
            Generator::E(i) => &rep.e[i],
            Generator::F(i) => &rep.f[i],
            Generator::K(i) => &rep.k[i],
            Generator::KInv(i) => &rep.k_inv[i],
        }
    }
}

/// `Δ(g)` as an `n² × n²` matrix, row index `a·n + b` for `a ⊗ b`.
pub fn coproduct_matrix(rep: &RepData, g: Generator) -> Matrix {
    let id = Mat::identity(rep.dim);
    match g {
        Generator::E(i) => rep.e[i].kron(&rep.k[i]).add(&id.kron(&rep.e[i])),
        Generator::F(i) => rep.f[i].kron(&id).add(&rep.k_inv[i].kron(&rep.f[i])),
        Generator::K(i) => rep.k[i].kron(&rep.k[i]),
        Generator::KInv(i) => rep.k_inv[i].kron(&rep.k_inv[i]),
    }
}

/// `Δ(x1)Δ(x2)⋯Δ(xk)·v`; the last symbol acts first.
pub fn coproduct_apply(rep: &RepData, word: &[&str], v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
    if v.len() != rep.dim * rep.dim {
        return Err(Error::Invalid(format!("vector has length {}, expected {}", v.len(), rep.dim * rep.dim)));
    }
    let gens = word.iter().map(|s| Generator::parse(s, rep.algebra())).collect::<Result<Vec<_>>>()?;
    let mut out = v.to_vec();
    for g in gens.iter().rev() {
        out = coproduct_matrix(rep, *g).apply(&out);
    }
    Ok(out)
}
