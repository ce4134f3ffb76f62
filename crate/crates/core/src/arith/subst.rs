//! Monomial substitutions `t_i ↦ γ·t1^a·t2^b` with `γ ∈ {±1, ±ζ}`.

use super::gauss::GaussianRational;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Image of one variable: `γ·t1^a·t2^b`, `γ = ζ^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarImage {
    pub zeta_power: i64,
    pub a: i32,
    pub b: i32,
}

impl VarImage {
    pub fn new(gamma: &GaussianRational, a: i32, b: i32) -> Result<Self> {
        let k = gamma.unit_exponent().ok_or(Error::NotMonomial)?;
        Ok(VarImage { zeta_power: k, a, b })
    }

    pub fn gamma(&self) -> GaussianRational {
        GaussianRational::zeta_pow(self.zeta_power)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialSubstitution {
    pub t1: VarImage,
    pub t2: VarImage,
}

const fn img(zeta_power: i64, a: i32, b: i32) -> VarImage {
    VarImage { zeta_power, a, b }
}

impl MonomialSubstitution {
    pub const IDENTITY: Self = MonomialSubstitution { t1: img(0, 1, 0), t2: img(0, 0, 1) };
    /// `t1 ↔ t2`.
    pub const SWAP: Self = MonomialSubstitution { t1: img(0, 0, 1), t2: img(0, 1, 0) };
    /// `t_i ↦ −t_i^{-1}`.
    pub const INVERSION: Self = MonomialSubstitution { t1: img(2, -1, 0), t2: img(2, 0, -1) };

    pub fn new(t1: VarImage, t2: VarImage) -> Self {
        MonomialSubstitution { t1, t2 }
    }

    /// `t2 ↦ ζ^k·t1^a`, `t1` fixed.
    pub fn set_t2(zeta_power: i64, a: i32) -> Self {
        MonomialSubstitution { t1: img(0, 1, 0), t2: img(zeta_power, a, 0) }
    }

    /// `t1 ↦ ζ^k`, `t2 ↦ t1` (the result is written in `t1`).
    pub fn set_t1(zeta_power: i64) -> Self {
        MonomialSubstitution { t1: img(zeta_power, 0, 0), t2: img(0, 1, 0) }
    }

    pub fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(p.terms().iter().map(|((e1, e2), c)| {
            let k = self.t1.zeta_power * *e1 as i64 + self.t2.zeta_power * *e2 as i64;
            let a = self.t1.a as i64 * *e1 as i64 + self.t2.a as i64 * *e2 as i64;
            let b = self.t1.b as i64 * *e1 as i64 + self.t2.b as i64 * *e2 as i64;
            let a = i32::try_from(a).expect("exponent overflow");
            let b = i32::try_from(b).expect("exponent overflow");
            ((a, b), c * &GaussianRational::zeta_pow(k))
        }))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        let compose = |v: VarImage| {
            // γ t1^a t2^b ↦ γ (γ1 t^..)^a (γ2 t^..)^b
            VarImage {
                zeta_power: (v.zeta_power + other.t1.zeta_power * v.a as i64 + other.t2.zeta_power * v.b as i64)
                    .rem_euclid(4),
                a: other.t1.a * v.a + other.t2.a * v.b,
                b: other.t1.b * v.a + other.t2.b * v.b,
            }
        };
        MonomialSubstitution { t1: compose(self.t1), t2: compose(self.t2) }
    }
}

/// Substitutes `s` into `p`.
pub fn substitute(p: &LaurentPoly, s: &MonomialSubstitution) -> LaurentPoly {
    s.apply(p)
}
