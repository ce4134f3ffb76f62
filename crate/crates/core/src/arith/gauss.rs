//! Gaussian rationals `a + b·ζ` with `ζ² = −1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Rational numbers backed by `i128`. Every operation is overflow-checked and
/// panics with a clear message instead of wrapping.
pub type Q = Ratio<i128>;

pub(crate) fn q_add(a: &Q, b: &Q) -> Q {
    a.checked_add(b).expect("rational overflow in addition")
}

pub(crate) fn q_sub(a: &Q, b: &Q) -> Q {
    a.checked_sub(b).expect("rational overflow in subtraction")
}

pub(crate) fn q_mul(a: &Q, b: &Q) -> Q {
    a.checked_mul(b).expect("rational overflow in multiplication")
}

pub fn q_int(n: i128) -> Q {
    Q::from_integer(n)
}

/// `re + im·ζ`. Both parts are kept in lowest terms with positive denominator
/// (guaranteed by `Ratio`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Q,
    pub im: Q,
}

impl GaussianRational {
    pub fn new(re: Q, im: Q) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Q::zero(), Q::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(q_int(n as i128), Q::zero())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(q_int(re as i128), q_int(im as i128))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(Q::new(num as i128, den as i128), Q::zero())
    }

    /// The fixed primitive fourth root of unity.
    pub fn zeta() -> Self {
        Self::from_ints(0, 1)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_ints(1, 0),
            1 => Self::from_ints(0, 1),
            2 => Self::from_ints(-1, 0),
            _ => Self::from_ints(0, -1),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Returns `Some(k)` if the value is `ζ^k` for `k ∈ 0..4`.
    pub fn unit_exponent(&self) -> Option<i64> {
        (0..4).find(|&k| *self == Self::zeta_pow(k))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, q: &Q) -> Self {
        Self::new(q_mul(&self.re, q), q_mul(&self.im, q))
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = q_add(&q_mul(&self.re, &self.re), &q_mul(&self.im, &self.im));
        let inv = norm.recip();
        Ok(Self::new(q_mul(&self.re, &inv), -q_mul(&self.im, &inv)))
    }

    pub fn pow(&self, mut e: i64) -> Self {
        let mut base = if e < 0 {
            e = -e;
            self.checked_inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = GaussianRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(q_add(&self.re, &o.re), q_add(&self.im, &o.im))
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: GaussianRational) -> GaussianRational {
        &self + &o
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re = q_add(&self.re, &o.re);
        self.im = q_add(&self.im, &o.im);
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(q_sub(&self.re, &o.re), q_sub(&self.im, &o.im))
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: GaussianRational) -> GaussianRational {
        &self - &o
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        // (a + bζ)(c + dζ) = (ac − bd) + (ad + bc)ζ
        let re = q_sub(&q_mul(&self.re, &o.re), &q_mul(&self.im, &o.im));
        let im = q_add(&q_mul(&self.re, &o.im), &q_mul(&self.im, &o.re));
        GaussianRational::new(re, im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: GaussianRational) -> GaussianRational {
        &self * &o
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
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

impl Field for GaussianRational {
    fn inv(&self) -> Result<Self> {
        self.checked_inv()
    }
}

pub(crate) fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub(crate) fn fmt_q_full(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_q(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_q(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}*i", fmt_q(&self.re), sign, fmt_q(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}
