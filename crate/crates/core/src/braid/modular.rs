//! Reconstruction of an integral Laurent polynomial from its values in `F_p`.
//!
//! Values are taken on grids of roots of unity and inverted with a discrete
//! Fourier transform. Grid sizes grow until the reconstruction agrees with the
//! black box at fresh random points.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::{Fp, GaussianRational, LaurentPoly};
use crate::error::{Error, Result};

/// Grid sizes tried in order; each divides `p − 1` (which is `29·2^57`).
const SIZES: [u64; 9] = [2, 4, 8, 16, 29, 58, 116, 232, 464];

/// Coefficients must lift to integers below this bound.
const LIFT_BOUND: i128 = 1 << 40;

/// How the exponents of one variable are distributed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    /// Evaluation point for grid index `k`; for even or odd exponents its square
    /// runs over the `n`-th roots of unity.
    fn node(self, n: u64, k: u64) -> Fp {
        match self {
            Parity::Mixed => Fp::root_of_order(n).pow(k),
            _ => Fp::root_of_order(2 * n).pow(k),
        }
    }

    fn exponent(self, e: i64) -> i64 {
        match self {
            Parity::Even => 2 * e,
            Parity::Odd => 2 * e + 1,
            Parity::Mixed => e,
        }
    }

    fn adjust(self, v: Fp, x: Fp) -> Fp {
        if self == Parity::Odd {
            v.mul_(x.inv_())
        } else {
            v
        }
    }
}

fn random_unit(rng: &mut StdRng) -> Fp {
    loop {
        let v = Fp::new(rng.gen::<u64>());
        if v.0 > 1 {
            return v;
        }
    }
}

fn detect_parity(f: &dyn Fn(Fp, Fp) -> Fp, rng: &mut StdRng, var: usize) -> Parity {
    let (x, y) = (random_unit(rng), random_unit(rng));
    let v = f(x, y);
    let flipped = if var == 0 { f(Fp(0).sub_(x), y) } else { f(x, Fp(0).sub_(y)) };
    if flipped == v {
        Parity::Even
    } else if flipped.add_(v) == Fp(0) {
        Parity::Odd
    } else {
        Parity::Mixed
    }
}

/// Inverse DFT of `vals` (length `n`) with nodes `w^k`; coefficient index is
/// taken in the symmetric window `[−n/2, n/2)`.
fn inverse_dft(vals: &[Fp], w: Fp) -> Vec<(i64, Fp)> {
    let n = vals.len() as u64;
    let w_inv = w.inv_();
    let n_inv = Fp::new(n).inv_();
    let lo = -((n / 2) as i64);
    (0..n as i64)
        .map(|i| {
            let e = lo + i;
            let step = w_inv.powi(e);
            let mut acc = Fp(0);
            let mut pw = Fp(1);
            for v in vals {
                acc = acc.add_(v.mul_(pw));
                pw = pw.mul_(step);
            }
            (e, acc.mul_(n_inv))
        })
        .collect()
}

struct Axis {
    parity: Parity,
    n: u64,
}

impl Axis {
    fn nodes(&self) -> Vec<Fp> {
        (0..self.n).map(|k| self.parity.node(self.n, k)).collect()
    }
}

/// Univariate probe along one variable with the other fixed at a random value.
fn probe_size(f: &dyn Fn(Fp, Fp) -> Fp, rng: &mut StdRng, var: usize, parity: Parity) -> Result<u64> {
    let other = random_unit(rng);
    for &n in &SIZES {
        let axis = Axis { parity, n };
        let nodes = axis.nodes();
        let vals: Vec<Fp> = nodes.iter().map(|&x| parity.adjust(if var == 0 { f(x, other) } else { f(other, x) }, x)).collect();
        let coeffs = inverse_dft(&vals, Fp::root_of_order(n));
        let ok = (0..2).all(|_| {
            let x = random_unit(rng);
            let want = if var == 0 { f(x, other) } else { f(other, x) };
            eval_univariate(&coeffs, parity, x) == want
        });
        if ok {
            return Ok(n);
        }
    }
    Err(Error::Engine("degree exceeds the largest interpolation grid".into()))
}

fn eval_univariate(coeffs: &[(i64, Fp)], parity: Parity, x: Fp) -> Fp {
    coeffs.iter().fold(Fp(0), |acc, (e, c)| acc.add_(c.mul_(x.powi(parity.exponent(*e)))))
}

/// Reconstructs `f` as an integral Laurent polynomial in `t1` (and `t2` when
/// `bivariate`). `f` must be a Laurent polynomial with small integer coefficients.
pub fn interpolate(f: &(dyn Fn(Fp, Fp) -> Fp + Sync), bivariate: bool, seed: u64) -> Result<LaurentPoly> {
    let mut rng = StdRng::seed_from_u64(seed);
    let p1 = detect_parity(f, &mut rng, 0);
    let p2 = if bivariate { detect_parity(f, &mut rng, 1) } else { Parity::Even };
    let mut n1 = probe_size(f, &mut rng, 0, p1)?;
    let mut n2 = if bivariate { probe_size(f, &mut rng, 1, p2)? } else { 1 };
    loop {
        let a1 = Axis { parity: p1, n: n1 };
        let a2 = Axis { parity: p2, n: n2 };
        let (x_nodes, y_nodes) = (a1.nodes(), if bivariate { a2.nodes() } else { vec![Fp(1)] });
        let mut grid = vec![vec![Fp(0); y_nodes.len()]; x_nodes.len()];
        for (i, &x) in x_nodes.iter().enumerate() {
            for (j, &y) in y_nodes.iter().enumerate() {
                let mut v = p1.adjust(f(x, y), x);
                if bivariate {
                    v = p2.adjust(v, y);
                }
                grid[i][j] = v;
            }
        }
        // transform along t2 for each row, then along t1
        let rows: Vec<Vec<(i64, Fp)>> =
            grid.iter().map(|row| if bivariate { inverse_dft(row, Fp::root_of_order(n2)) } else { vec![(0, row[0])] }).collect();
        let mut terms: Vec<(i64, i64, Fp)> = Vec::new();
        for j in 0..rows[0].len() {
            let col: Vec<Fp> = rows.iter().map(|r| r[j].1).collect();
            let e2 = rows[0][j].0;
            for (e1, c) in inverse_dft(&col, Fp::root_of_order(n1)) {
                if c != Fp(0) {
                    terms.push((p1.exponent(e1), if bivariate { p2.exponent(e2) } else { 0 }, c));
                }
            }
        }
        let ok = (0..3).all(|_| {
            let (x, y) = (random_unit(&mut rng), if bivariate { random_unit(&mut rng) } else { Fp(1) });
            let got = terms.iter().fold(Fp(0), |acc, (a, b, c)| acc.add_(c.mul_(x.powi(*a)).mul_(y.powi(*b))));
            got == f(x, y)
        });
        if ok {
            return lift(&terms);
        }
        let next = |n: u64| SIZES.iter().copied().find(|&s| s > n);
        match (next(n1), if bivariate { next(n2) } else { Some(1) }) {
            (Some(a), Some(b)) => {
                n1 = a;
                n2 = b;
            }
            _ => return Err(Error::Engine("degree exceeds the largest interpolation grid".into())),
        }
    }
}

fn lift(terms: &[(i64, i64, Fp)]) -> Result<LaurentPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for (a, b, c) in terms {
        let v = c.lift();
        if v.abs() >= LIFT_BOUND {
            return Err(Error::Engine("reconstructed coefficient is not a small integer".into()));
        }
        let e = (i32::try_from(*a).map_err(|_| Error::Engine("exponent overflow".into()))?, i32::try_from(*b).map_err(|_| Error::Engine("exponent overflow".into()))?);
        out.push((e, GaussianRational::from_int(v as i64)));
    }
    Ok(LaurentPoly::from_terms(out))
}
