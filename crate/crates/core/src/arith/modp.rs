//! Arithmetic in the prime field `F_p`, `p = 29·2^57 + 1`.
//!
//! `p ≡ 1 (mod 4)`, so `F_p` contains a square root of −1 standing in for ζ,
//! and `2^57 | p − 1` gives roots of unity of every power-of-two order used by
//! the interpolation grid.

use std::fmt;

use num_traits::Zero;

use super::gauss::{GaussianRational, Q};
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

pub const P: u64 = 4_179_340_454_199_820_289;
const GENERATOR: u64 = 3;
const TWO_ADICITY: u32 = 57;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(pub u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn from_i128(v: i128) -> Self {
        Fp(v.rem_euclid(P as i128) as u64)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_(base);
            }
            base = base.mul_(base);
            e >>= 1;
        }
        acc
    }

    pub fn powi(self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv_().pow(e.unsigned_abs())
        }
    }

    #[inline]
    pub fn mul_(self, o: Fp) -> Fp {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }

    #[inline]
    pub fn add_(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }

    #[inline]
    pub fn sub_(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }

    pub fn inv_(self) -> Fp {
        assert!(self.0 != 0, "inverse of zero in F_p");
        self.pow(P - 2)
    }

    /// The fixed square root of −1 that plays the role of ζ.
    pub fn zeta() -> Fp {
        Fp(GENERATOR).pow((P - 1) / 4)
    }

    /// A primitive root of unity of order `2^k`.
    pub fn root_of_unity(k: u32) -> Fp {
        assert!(k <= TWO_ADICITY);
        Fp(GENERATOR).pow((P - 1) >> k)
    }

    /// A primitive root of unity of order `n`; `n` must divide `p − 1`.
    pub fn root_of_order(n: u64) -> Fp {
        assert!(n > 0 && (P - 1) % n == 0, "no root of unity of order {n} in F_p");
        Fp(GENERATOR).pow((P - 1) / n)
    }

    /// Symmetric lift to `(−p/2, p/2]`.
    pub fn lift(self) -> i128 {
        if self.0 > P / 2 {
            self.0 as i128 - P as i128
        } else {
            self.0 as i128
        }
    }

    pub fn from_q(q: &Q) -> Fp {
        let n = Fp::from_i128(*q.numer());
        let d = Fp::from_i128(*q.denom());
        n.mul_(d.inv_())
    }

    /// Image of a Gaussian rational under `ζ ↦ zeta`.
    pub fn from_gauss(g: &GaussianRational, zeta: Fp) -> Fp {
        let re = Fp::from_q(&g.re);
        if g.im.is_zero() {
            re
        } else {
            re.add_(Fp::from_q(&g.im).mul_(zeta))
        }
    }
}

/// `F_p` elements in Montgomery form (`x·2^64 mod p`), used in the inner loops
/// of the evaluation engine.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MontFp(u64);

const fn neg_p_inv() -> u64 {
    // Newton iteration for p^{-1} mod 2^64.
    let mut inv: u64 = 1;
    let mut i = 0;
    while i < 6 {
        inv = inv.wrapping_mul(2u64.wrapping_sub(P.wrapping_mul(inv)));
        i += 1;
    }
    inv.wrapping_neg()
}

const NEG_P_INV: u64 = neg_p_inv();
/// `2^128 mod p`.
const R2: u64 = ((((1u128 << 64) % P as u128) * ((1u128 << 64) % P as u128)) % P as u128) as u64;

impl MontFp {
    #[inline(always)]
    fn redc(t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(NEG_P_INV);
        let u = ((t + m as u128 * P as u128) >> 64) as u64;
        if u >= P {
            u - P
        } else {
            u
        }
    }

    pub fn from_fp(x: Fp) -> Self {
        MontFp(Self::redc(x.0 as u128 * R2 as u128))
    }

    pub fn to_fp(self) -> Fp {
        Fp(Self::redc(self.0 as u128))
    }

    #[inline(always)]
    pub fn mul_(self, o: Self) -> Self {
        MontFp(Self::redc(self.0 as u128 * o.0 as u128))
    }

    #[inline(always)]
    pub fn add_(self, o: Self) -> Self {
        let s = self.0 + o.0;
        MontFp(if s >= P { s - P } else { s })
    }
}

impl fmt::Debug for MontFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_fp())
    }
}

impl Ring for MontFp {
    fn zero() -> Self {
        MontFp(0)
    }
    fn one() -> Self {
        MontFp::from_fp(Fp(1))
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        self.add_(*o)
    }
    fn sub(&self, o: &Self) -> Self {
        MontFp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_(*o)
    }
    fn neg(&self) -> Self {
        MontFp(0).sub(self)
    }
    #[inline(always)]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self = self.add_(a.mul_(*b));
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        self.add_(*o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_(*o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_(*o)
    }
    fn neg(&self) -> Self {
        Fp(0).sub_(*self)
    }
    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self = self.add_(a.mul_(*b));
    }
}

impl Field for Fp {
    fn inv(&self) -> Result<Self> {
        if self.0 == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv_())
        }
    }
}
