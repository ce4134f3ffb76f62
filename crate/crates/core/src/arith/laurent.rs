//! Sparse bivariate Laurent polynomials in `t1, t2` over the Gaussian rationals.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::gauss::{GaussianRational, Q};
use super::modp::Fp;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Exponent pair `(e1, e2)` of the monomial `t1^e1 · t2^e2`.
pub type Exp = (i32, i32);

fn exp_add(a: Exp, b: Exp) -> Exp {
    (
        a.0.checked_add(b.0).expect("exponent overflow"),
        a.1.checked_add(b.1).expect("exponent overflow"),
    )
}

/// Terms are kept sorted ascending by exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exp, GaussianRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn zeta() -> Self {
        Self::constant(GaussianRational::zeta())
    }

    pub fn monomial(c: GaussianRational, e1: i32, e2: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![((e1, e2), c)] }
        }
    }

    /// `t1^e1 t2^e2` with coefficient 1.
    pub fn mono(e1: i32, e2: i32) -> Self {
        Self::monomial(GaussianRational::one(), e1, e2)
    }

    pub fn t1() -> Self {
        Self::mono(1, 0)
    }

    pub fn t2() -> Self {
        Self::mono(0, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, GaussianRational)>>(it: I) -> Self {
        let mut map: BTreeMap<Exp, GaussianRational> = BTreeMap::new();
        for (e, c) in it {
            *map.entry(e).or_insert_with(GaussianRational::zero) += &c;
        }
        LaurentPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Integer-coefficient shorthand: `[(e1, e2, c), ...]`.
    pub fn from_int_terms(terms: &[(i32, i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), GaussianRational::from_int(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(Exp, GaussianRational)] {
        &self.terms
    }

    pub fn coeff(&self, e1: i32, e2: i32) -> GaussianRational {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&(e1, e2))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => GaussianRational::zero(),
        }
    }

    /// The single term if this is a monomial.
    pub fn as_monomial(&self) -> Option<(Exp, &GaussianRational)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        match self.as_monomial() {
            Some(((0, 0), c)) => Some(c.clone()),
            _ => None,
        }
    }

    /// Whether only `t1` appears.
    pub fn is_univariate(&self) -> bool {
        self.terms.iter().all(|((_, e2), _)| *e2 == 0)
    }

    /// Every coefficient is a real integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_real() && c.re.is_integer())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn scale_q(&self, q: &Q) -> Self {
        self.scale(&GaussianRational::new(q.clone(), Q::zero()))
    }

    /// Multiplies by the monomial `t1^e1 t2^e2`.
    pub fn shift(&self, e1: i32, e2: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (exp_add(*e, (e1, e2)), c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Inverse of a unit monomial `c·t1^a t2^b`.
    pub fn monomial_inverse(&self) -> Result<Self> {
        let ((a, b), c) = self.as_monomial().ok_or(Error::NotMonomial)?;
        Ok(Self::monomial(c.checked_inv()?, -a, -b))
    }

    /// Raises a unit monomial to an integer power (negative allowed).
    pub fn monomial_powi(&self, k: i64) -> Result<Self> {
        let m = if k < 0 { self.monomial_inverse()? } else { self.clone() };
        Ok(m.pow(k.unsigned_abs() as u32))
    }

    pub fn min_max_exponents(&self) -> Option<((i32, i32), (i32, i32))> {
        if self.is_zero() {
            return None;
        }
        let mut lo = (i32::MAX, i32::MAX);
        let mut hi = (i32::MIN, i32::MIN);
        for ((a, b), _) in &self.terms {
            lo = (lo.0.min(*a), lo.1.min(*b));
            hi = (hi.0.max(*a), hi.1.max(*b));
        }
        Some((lo, hi))
    }

    /// Evaluates at `(x1, x2)` in `F_p` with `ζ ↦ zeta`.
    pub fn eval_fp(&self, x1: Fp, x2: Fp, zeta: Fp) -> Fp {
        let mut acc = Fp(0);
        for ((a, b), c) in &self.terms {
            let term = Fp::from_gauss(c, zeta).mul_(x1.powi(*a as i64)).mul_(x2.powi(*b as i64));
            acc = acc.add_(term);
        }
        acc
    }

    /// Evaluates at Gaussian-rational values of `t1`, `t2`.
    pub fn eval(&self, x1: &GaussianRational, x2: &GaussianRational) -> Result<GaussianRational> {
        if (x1.is_zero() || x2.is_zero()) && !self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = GaussianRational::zero();
        for ((a, b), c) in &self.terms {
            acc += &(c * &(&x1.pow(*a as i64) * &x2.pow(*b as i64)));
        }
        Ok(acc)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        LaurentPoly { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = other.as_monomial() {
            return LaurentPoly { terms: self.terms.iter().map(|(x, y)| (exp_add(*x, e), y * c)).collect() };
        }
        if let Some((e, c)) = self.as_monomial() {
            return LaurentPoly { terms: other.terms.iter().map(|(x, y)| (exp_add(*x, e), c * y)).collect() };
        }
        let mut map: BTreeMap<Exp, GaussianRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca * cb;
                map.entry(exp_add(*ea, *eb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        LaurentPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        self.merge(&o, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        self.merge(&o, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.product(o)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        self.product(&o)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::emit_canonical(self))
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::emit_canonical(self))
    }
}

/// The quantum bracket `⌊x⌋ = (x − x^{-1})/(ζ − ζ^{-1}) = (x − x^{-1})·(−ζ/2)`.
///
/// `x` must be a single term whose coefficient is a power of ζ.
pub fn bracket(x: &LaurentPoly) -> Result<LaurentPoly> {
    let (_, c) = x.as_monomial().ok_or(Error::NotMonomial)?;
    if c.unit_exponent().is_none() {
        return Err(Error::NotMonomial);
    }
    let diff = x - &x.monomial_inverse()?;
    Ok(diff.scale(&GaussianRational::new(Q::zero(), Q::new(-1, 2))))
}
