//! Classical Alexander polynomial from the reduced Burau representation.
//!
//! Polynomials here are univariate in `s`, stored as [`LaurentPoly`] in `t1`.

use crate::arith::{GaussianRational, LaurentPoly, Ring};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::linalg::Mat;

fn leading(p: &LaurentPoly) -> Option<(i32, GaussianRational)> {
    p.terms().last().map(|((e, _), c)| (*e, c.clone()))
}

fn span(p: &LaurentPoly) -> Option<i32> {
    let lo = p.terms().first()?.0 .0;
    let hi = p.terms().last()?.0 .0;
    Some(hi - lo)
}

/// Exact quotient `a / b` of univariate Laurent polynomials.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    if !a.is_univariate() || !b.is_univariate() {
        return Err(Error::Invalid("univariate division only".into()));
    }
    let (db, cb) = leading(b).ok_or(Error::DivisionByZero)?;
    let cb_inv = cb.checked_inv()?;
    let sb = span(b).unwrap_or(0);
    let mut r = a.clone();
    let mut q = LaurentPoly::zero();
    while let Some((dr, cr)) = leading(&r) {
        if span(&r).unwrap_or(0) < sb {
            return Err(Error::Invalid(format!("{b} does not divide {a}")));
        }
        let term = LaurentPoly::monomial(&cr * &cb_inv, dr - db, 0);
        r = r.sub(&term.mul(b));
        q = q.add(&term);
    }
    Ok(q)
}

/// Reduced Burau matrix of `σ_i^{±1}` on `n` strands, entries in `s = t1`.
pub fn burau_generator(n: usize, letter: i32) -> Mat<LaurentPoly> {
    let m = n - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let s = if letter > 0 { LaurentPoly::t1() } else { LaurentPoly::mono(-1, 0) };
    let mut g = Mat::identity(m);
    // σ_i acts on coordinates i-1, i, i+1 (those that exist)
    g.set(i, i, s.neg());
    if i > 0 {
        g.set(i, i - 1, s.clone());
    }
    if i + 1 < m {
        g.set(i, i + 1, LaurentPoly::one());
    }
    if letter < 0 {
        // inverse of the row-operation matrix above
        let mut inv = Mat::identity(m);
        let s_inv = LaurentPoly::mono(-1, 0);
        inv.set(i, i, s_inv.neg());
        if i > 0 {
            inv.set(i, i - 1, LaurentPoly::one());
        }
        if i + 1 < m {
            inv.set(i, i + 1, s_inv);
        }
        return inv;
    }
    g
}

/// Fraction-free determinant (Bareiss) with exact polynomial division.
pub fn bareiss_det(m: &Mat<LaurentPoly>) -> Result<LaurentPoly> {
    let n = m.rows();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|r| (0..n).map(|c| m.get(r, c).clone()).collect()).collect();
    let mut prev = LaurentPoly::one();
    let mut sign = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = div_exact(&num, &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}

/// Symmetric representative with value `1` at `s = 1`.
pub fn conway_normalize(p: &LaurentPoly) -> Result<LaurentPoly> {
    let (lo, hi) = match (p.terms().first(), p.terms().last()) {
        (Some(a), Some(b)) => (a.0 .0, b.0 .0),
        _ => return Err(Error::Invalid("zero Alexander polynomial".into())),
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::Invalid(format!("{p} has odd span")));
    }
    let q = p.shift(-(lo + hi) / 2, 0);
    let at_one = q.terms().iter().fold(GaussianRational::zero(), |acc, (_, c)| &acc + c);
    if at_one == GaussianRational::from_int(1) {
        Ok(q)
    } else if at_one == GaussianRational::from_int(-1) {
        Ok(q.neg())
    } else {
        Err(Error::Invalid(format!("{p} does not evaluate to ±1 at 1")))
    }
}

/// Conway-normalized Alexander polynomial of the closure of a knot braid.
pub fn alexander_burau(b: &BraidWord) -> Result<LaurentPoly> {
    let comps = b.components();
    if comps != 1 {
        return Err(Error::NotAKnot(comps));
    }
    let n = b.strands;
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let mut acc = Mat::identity(n - 1);
    for &l in &b.letters {
        acc = acc.mul(&burau_generator(n, l));
    }
    let det = bareiss_det(&Mat::identity(n - 1).sub(&acc))?;
    let norm = (0..n as i32).fold(LaurentPoly::zero(), |p, k| p.add(&LaurentPoly::mono(k, 0)));
    conway_normalize(&div_exact(&det, &norm)?)
}

/// `p(s) ↦ p(t1^k)`.
pub fn stretch(p: &LaurentPoly, k: i32) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().iter().map(|((a, _), c)| ((a * k, 0), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;
    use crate::braid::parse_braid;

    #[test]
    fn generators_invert() {
        for n in 2..6 {
            for i in 1..n as i32 {
                let g = burau_generator(n, i).mul(&burau_generator(n, -i));
                assert_eq!(g, Mat::identity(n - 1), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn burau_braid_relation() {
        let n = 4;
        let w = |ls: &[i32]| ls.iter().fold(Mat::identity(n - 1), |m, &l| m.mul(&burau_generator(n, l)));
        assert_eq!(w(&[1, 2, 1]), w(&[2, 1, 2]));
        assert_eq!(w(&[2, 3, 2]), w(&[3, 2, 3]));
        assert_eq!(w(&[1, 3]), w(&[3, 1]));
    }

    #[test]
    fn division() {
        let a = parse_poly("t1^3 + 1").unwrap();
        let b = parse_poly("t1 + 1").unwrap();
        assert_eq!(div_exact(&a, &b).unwrap(), parse_poly("t1^2 - t1 + 1").unwrap());
        assert!(div_exact(&a, &parse_poly("t1 - 1").unwrap()).is_err());
        let c = parse_poly("t1^-2 - t1^2").unwrap();
        assert_eq!(div_exact(&c, &parse_poly("t1^-1 - t1").unwrap()).unwrap(), parse_poly("t1^-1 + t1").unwrap());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let p = |s: &str| parse_poly(s).unwrap();
        let m = Mat::from_fn(3, 3, |r, c| [[p("t1"), p("1"), p("2")], [p("t1^-1"), p("t1 - 1"), p("0")], [p("3"), p("1"), p("t1^2")]][r][c].clone());
        let cof = p("t1")
            .mul(&p("t1 - 1").mul(&p("t1^2")))
            .sub(&p("1").mul(&p("t1^-1").mul(&p("t1^2"))))
            .add(&p("2").mul(&p("t1^-1").sub(&p("t1 - 1").mul(&p("3")))));
        assert_eq!(bareiss_det(&m).unwrap(), cof);
    }

    #[test]
    fn small_knots() {
        assert_eq!(alexander_burau(&BraidWord::unknot()).unwrap(), LaurentPoly::one());
        assert_eq!(alexander_burau(&parse_braid("1 1 1", 2).unwrap()).unwrap(), parse_poly("t1 - 1 + t1^-1").unwrap());
        assert_eq!(alexander_burau(&parse_braid("1 -2 1 -2", 3).unwrap()).unwrap(), parse_poly("-t1 + 3 - t1^-1").unwrap());
        assert_eq!(alexander_burau(&parse_braid("1 -2", 3).unwrap()).unwrap(), LaurentPoly::one());
        assert!(matches!(alexander_burau(&parse_braid("1 1", 2).unwrap()), Err(Error::NotAKnot(2))));
    }

    #[test]
    fn stretching() {
        let p = parse_poly("t1 - 1 + t1^-1").unwrap();
        assert_eq!(stretch(&p, 4), parse_poly("t1^4 - 1 + t1^-4").unwrap());
    }
}
