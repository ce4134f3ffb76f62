//! Characters of the Cartan part and the reducibility loci of the Verma module.

use std::fmt;

use super::verma::VERMA_SL3_DROPS;
use super::{Algebra, VERMA_SL3_LABELS};
use crate::arith::{GaussianRational, LaurentPoly, Ring};
use crate::error::{Error, Result};

/// Values of `(K1, K2)` (a single entry for sl2). Each entry is a unit monomial.
#[derive(Clone, PartialEq, Debug)]
pub struct Character(pub Vec<LaurentPoly>);

impl Character {
    pub fn identity(alg: Algebra) -> Self {
        Character(vec![LaurentPoly::one(); alg.rank()])
    }

    pub fn from_values(vals: &[GaussianRational]) -> Self {
        Character(vals.iter().map(|v| LaurentPoly::constant(v.clone())).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.0.len(), o.0.len());
        Character(self.0.iter().zip(&o.0).map(|(a, b)| a.mul(b)).collect())
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Character(self.0.iter().map(|a| a.monomial_inverse()).collect::<Result<_>>()?))
    }

    /// Concrete values, if no entry involves `t1`, `t2`.
    pub fn values(&self) -> Option<Vec<GaussianRational>> {
        self.0.iter().map(|p| p.as_constant()).collect()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `σ^ψ`: the weight of `F^ψ v0` in `V(1,1)`.
pub fn sigma_psi(label: &str) -> Result<Character> {
    let idx = VERMA_SL3_LABELS.iter().position(|l| *l == label).ok_or_else(|| Error::Invalid(format!("unknown basis label {label:?}")))?;
    let m = VERMA_SL3_DROPS[idx];
    let alg = Algebra::Sl3;
    Ok(Character((0..2).map(|i| LaurentPoly::constant(GaussianRational::zeta_pow(-alg.a_times(m, i)))).collect()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reducibility {
    pub in_x1: bool,
    pub in_x2: bool,
    pub in_h: bool,
    pub in_r: bool,
}

pub fn reducibility_predicates(t: &Character) -> Result<Reducibility> {
    let v = t.values().ok_or_else(|| Error::Invalid("reducibility needs a concrete character".into()))?;
    if v.len() != 2 {
        return Err(Error::Invalid("reducibility is defined for sl3 characters".into()));
    }
    let one = GaussianRational::one();
    let sq = |x: &GaussianRational| x * x;
    let in_x1 = sq(&v[0]) == one;
    let in_x2 = sq(&v[1]) == one;
    let in_h = sq(&(&v[0] * &v[1])) == -one;
    Ok(Reducibility { in_x1, in_x2, in_h, in_r: in_x1 || in_x2 || in_h })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma_psi("000").unwrap(), Character::identity(Algebra::Sl3));
        assert_eq!(sigma_psi("100").unwrap(), Character::from_values(&[g(-1, 0), g(0, 1)]));
        assert_eq!(sigma_psi("111").unwrap(), Character::from_values(&[g(-1, 0), g(-1, 0)]));
        assert!(sigma_psi("112").is_err());
    }

    #[test]
    fn predicates() {
        let r = reducibility_predicates(&Character::from_values(&[g(3, 0), g(5, 0)])).unwrap();
        assert!(!r.in_r);
        let r = reducibility_predicates(&Character::from_values(&[g(7, 0), g(1, 0)])).unwrap();
        assert!(r.in_x2 && !r.in_x1 && !r.in_h);
        let third = GaussianRational::frac(1, 3);
        let r = reducibility_predicates(&Character::from_values(&[g(0, 3), third])).unwrap();
        assert!(r.in_h && !r.in_x1 && !r.in_x2 && r.in_r);
    }

    #[test]
    fn symbolic_character_rejected() {
        let c = Character(vec![LaurentPoly::t1(), LaurentPoly::one()]);
        assert!(reducibility_predicates(&c).is_err());
    }
}
