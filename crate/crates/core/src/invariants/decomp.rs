//! Tensor product decompositions at sampled parameters, and the action of
//! `δ_Z = R − R^{-1} − (t² − t^{-2})` on the summands of `Z ⊗ Z`.

use std::collections::BTreeMap;

use crate::arith::{Field, GaussianRational, LaurentPoly, Ring};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rep::{reducibility_predicates, sigma_psi, Character, HeadKind, RepData, RepKind, Sign};
use crate::report::Report;
use crate::rmatrix::build_rt;

type G = GaussianRational;

/// A representation with its matrices evaluated at `t1 = x1`, `t2 = x2`.
pub struct EvaluatedRep {
    pub kind: RepKind,
    pub dim: usize,
    pub e: Vec<Mat<G>>,
    pub f: Vec<Mat<G>>,
    pub k: Vec<Mat<G>>,
    pub k_inv: Vec<Mat<G>>,
    /// Highest weight `(K1, K2)` eigenvalues.
    pub hw: Vec<G>,
}

impl EvaluatedRep {
    pub fn new(rep: &RepData, x1: &G, x2: &G) -> Result<Self> {
        let ev = |ms: &[Mat<LaurentPoly>]| ms.iter().map(|m| m.eval(x1, x2)).collect::<Result<Vec<_>>>();
        Ok(EvaluatedRep {
            kind: rep.kind,
            dim: rep.dim,
            e: ev(&rep.e)?,
            f: ev(&rep.f)?,
            k: ev(&rep.k)?,
            k_inv: ev(&rep.k_inv)?,
            hw: rep.hw.iter().map(|h| h.eval(x1, x2)).collect::<Result<_>>()?,
        })
    }

    fn character(&self) -> Character {
        Character::from_values(&self.hw)
    }
}

/// `A ⊗ B` with the coproduct action.
pub struct TensorProduct {
    pub dim: usize,
    pub e: Vec<Mat<G>>,
    pub f: Vec<Mat<G>>,
    /// Diagonal of `Δ(K_i)`.
    pub k_diag: Vec<Vec<G>>,
}

impl TensorProduct {
    pub fn new(a: &EvaluatedRep, b: &EvaluatedRep) -> Self {
        let (ia, ib) = (Mat::identity(a.dim), Mat::identity(b.dim));
        let e = (0..2).map(|i| a.e[i].kron(&b.k[i]).add(&ia.kron(&b.e[i]))).collect();
        let f = (0..2).map(|i| a.f[i].kron(&ib).add(&a.k_inv[i].kron(&b.f[i]))).collect();
        let k_diag = (0..2)
            .map(|i| {
                let m = a.k[i].kron(&b.k[i]);
                (0..m.rows()).map(|r| m.get(r, r).clone()).collect()
            })
            .collect();
        TensorProduct { dim: a.dim * b.dim, e, f, k_diag }
    }

    fn weight(&self, idx: usize) -> (G, G) {
        (self.k_diag[0][idx].clone(), self.k_diag[1][idx].clone())
    }

    /// Joint kernel of `Δ(E1)`, `Δ(E2)`, one basis per weight space.
    pub fn singular_vectors(&self) -> Result<Vec<((G, G), Vec<G>)>> {
        let mut by_weight: Vec<((G, G), Vec<usize>)> = Vec::new();
        for i in 0..self.dim {
            let w = self.weight(i);
            match by_weight.iter_mut().find(|(x, _)| *x == w) {
                Some((_, v)) => v.push(i),
                None => by_weight.push((w, vec![i])),
            }
        }
        let mut out = Vec::new();
        for (w, cols) in by_weight {
            let m = Mat::from_fn(2 * self.dim, cols.len(), |r, c| self.e[r / self.dim].get(r % self.dim, cols[c]).clone());
            for kv in m.kernel()? {
                let mut v = vec![G::zero(); self.dim];
                for (c, x) in cols.iter().zip(kv) {
                    v[*c] = x;
                }
                out.push((w.clone(), v));
            }
        }
        Ok(out)
    }

    /// Basis of the submodule generated by `v` under `Δ(F1)`, `Δ(F2)`.
    pub fn generate(&self, v: &[G]) -> Result<Vec<Vec<G>>> {
        let mut span = Echelon::default();
        let mut basis = Vec::new();
        let mut queue = vec![v.to_vec()];
        while let Some(x) = queue.pop() {
            if span.insert(&x)? {
                for f in &self.f {
                    queue.push(f.apply(&x));
                }
                basis.push(x);
            }
        }
        Ok(basis)
    }
}

/// Incremental row echelon basis.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<G>)>,
}

impl Echelon {
    fn reduce(&self, v: &[G]) -> Vec<G> {
        let mut x = v.to_vec();
        for (p, row) in &self.rows {
            if !x[*p].is_zero() {
                let c = x[*p].clone();
                for (xi, ri) in x.iter_mut().zip(row) {
                    *xi = xi.sub(&c.mul(ri));
                }
            }
        }
        x
    }

    fn insert(&mut self, v: &[G]) -> Result<bool> {
        let x = self.reduce(v);
        let Some(p) = x.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = x[p].inv()?;
        self.rows.push((p, x.iter().map(|c| c.mul(&inv)).collect()));
        Ok(true)
    }
}

/// A summand found in a tensor product: highest weight and dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand {
    pub weight: (G, G),
    pub dim: usize,
    pub basis: Vec<Vec<G>>,
}

/// Splits `A ⊗ B` into the submodules generated by its singular vectors.
pub fn decompose(tp: &TensorProduct) -> Result<Vec<Summand>> {
    tp.singular_vectors()?
        .into_iter()
        .map(|(w, v)| {
            let basis = tp.generate(&v)?;
            Ok(Summand { weight: w, dim: basis.len(), basis })
        })
        .collect()
}

fn rank_of(vectors: &[Vec<G>]) -> Result<usize> {
    let mut e = Echelon::default();
    let mut n = 0;
    for v in vectors {
        if e.insert(v)? {
            n += 1;
        }
    }
    Ok(n)
}

fn fmt_weight(w: &(G, G)) -> String {
    format!("({}, {})", w.0, w.1)
}

/// An expected summand: `σ^ψ·t·s` and its dimension.
struct Expected {
    label: &'static str,
    dim: usize,
}

fn expected_summands(a: RepKind, b: RepKind) -> Option<Vec<Expected>> {
    use HeadKind::*;
    let ex = |label, dim| Expected { label, dim };
    let v8 = |ls: &[&'static str]| ls.iter().map(|l| ex(*l, 8)).collect::<Vec<_>>();
    let head = |k: RepKind| match k {
        RepKind::Head(h, _) => Some(h),
        _ => None,
    };
    Some(match (a, b) {
        (RepKind::VermaSl3, RepKind::VermaSl3) => v8(&["000", "100", "001", "101", "010", "110", "011", "111"]),
        (RepKind::VermaSl3, k) => match head(k)? {
            X => v8(&["000", "100", "010", "110"]),
            Y => v8(&["000", "001", "010", "011"]),
            W => v8(&["000", "100", "001", "010"]),
        },
        (ka, kb) => match (head(ka)?, head(kb)?) {
            (X, X) => vec![ex("000", 4), ex("110", 4), ex("100", 8)],
            (Y, Y) => vec![ex("000", 4), ex("011", 4), ex("001", 8)],
            (W, W) => vec![ex("100", 4), ex("001", 4), ex("000", 8)],
            (X, Y) => v8(&["000", "010"]),
            (X, W) => v8(&["000", "100"]),
            (Y, W) => v8(&["000", "001"]),
            _ => return None,
        },
    })
}

fn character_pair(c: &Character) -> Result<(G, G)> {
    let v = c.values().ok_or_else(|| Error::Invalid("character is not concrete".into()))?;
    Ok((v[0].clone(), v[1].clone()))
}

/// Checks one tensor product against the expected list of summands.
pub fn check_tensor_product(a: &EvaluatedRep, b: &EvaluatedRep) -> Result<Report> {
    let name = format!("{} ⊗ {}", a.kind.tag(), b.kind.tag());
    let mut report = Report::new(name.clone());
    let expected = expected_summands(a.kind, b.kind).ok_or_else(|| Error::Invalid(format!("no decomposition known for {name}")))?;
    let ts = a.character().mul(&b.character());
    let mut want: BTreeMap<String, ((G, G), usize, bool)> = BTreeMap::new();
    for e in &expected {
        let c = sigma_psi(e.label)?.mul(&ts);
        let generic = e.dim == 4 || !reducibility_predicates(&c)?.in_r;
        want.insert(e.label.to_string(), (character_pair(&c)?, e.dim, generic));
    }
    report.check("sample is generic for the Verma summands", want.values().all(|w| w.2));
    let tp = TensorProduct::new(a, b);
    let found = decompose(&tp)?;
    report.check_with(
        "number of singular vectors",
        found.len() == expected.len(),
        format!("{} found, {} expected", found.len(), expected.len()),
    );
    for (label, (w, dim, _)) in &want {
        let hit = found.iter().find(|s| s.weight == *w);
        let detail = match hit {
            Some(s) => format!("weight {} dim {}", fmt_weight(w), s.dim),
            None => format!("no singular vector of weight {}", fmt_weight(w)),
        };
        report.check_with(format!("summand σ^({label})·ts of dim {dim}"), hit.is_some_and(|s| s.dim == *dim), detail);
    }
    let all: Vec<Vec<G>> = found.iter().flat_map(|s| s.basis.iter().cloned()).collect();
    report.check_with("summands span the tensor product", all.len() == tp.dim && rank_of(&all)? == tp.dim, format!("{} vectors", all.len()));
    Ok(report)
}

fn g(n: i64) -> G {
    G::from_int(n)
}

/// Evaluates `kind` at a sample `(x1, x2)`. Heads take `t = x1` for the
/// first factor and `s = x2` for the second.
pub fn sample_rep(kind: RepKind, second: bool, sample: &Character) -> Result<EvaluatedRep> {
    let v = sample.values().filter(|v| v.len() == 2).ok_or_else(|| Error::Invalid("sample must be a concrete sl3 character".into()))?;
    let (x1, x2) = match (kind, second) {
        (RepKind::VermaSl3, _) => (v[0].clone(), v[1].clone()),
        (_, false) => (v[0].clone(), g(1)),
        (_, true) => (v[1].clone(), g(1)),
    };
    EvaluatedRep::new(&kind.build(), &x1, &x2)
}

/// The default sample `(3, 5)`.
pub fn default_sample() -> Character {
    Character::from_values(&[g(3), g(5)])
}

/// All squares and mixed products listed for the Verma module and the heads.
pub fn verify_tensor_decompositions(sample: &Character) -> Result<Report> {
    use HeadKind::*;
    let mut report = Report::new("tensor decompositions");
    let h = |k, s| RepKind::Head(k, s);
    let mut pairs = vec![(RepKind::VermaSl3, RepKind::VermaSl3)];
    for s in [Sign::Plus, Sign::Minus] {
        pairs.extend([(h(X, s), h(X, s)), (h(Y, s), h(Y, s)), (h(W, s), h(W, s))]);
    }
    pairs.extend([(h(X, Sign::Plus), h(Y, Sign::Plus)), (h(X, Sign::Plus), h(W, Sign::Plus)), (h(Y, Sign::Plus), h(W, Sign::Plus))]);
    pairs.extend([(RepKind::VermaSl3, h(X, Sign::Plus)), (RepKind::VermaSl3, h(Y, Sign::Plus)), (RepKind::VermaSl3, h(W, Sign::Plus))]);
    for (a, b) in pairs {
        // V(x1, x2) ⊗ W(x2) is not generic, so mixed Verma products take the head at x1
        let second = a != RepKind::VermaSl3 || b == RepKind::VermaSl3;
        report.extend(check_tensor_product(&sample_rep(a, false, sample)?, &sample_rep(b, second, sample)?)?);
    }
    Ok(report)
}

/// `δ_Z` as a symbolic operator on `Z ⊗ Z`.
pub fn delta_z(rep: &RepData) -> Mat<LaurentPoly> {
    let (r, r_inv) = build_rt(rep);
    let n = rep.dim * rep.dim;
    let t2 = LaurentPoly::mono(2, 0).sub(&LaurentPoly::mono(-2, 0));
    let d = r.op.sub(&r_inv.op);
    Mat::from_fn(n, n, |i, j| {
        let v = d.get(i, j);
        if i == j {
            v.sub(&t2)
        } else {
            v
        }
    })
}

/// `δ_Z` vanishes on the two 4-dimensional summands of `Z ⊗ Z` and acts by
/// `−(t² − t^{-2})` on the 8-dimensional one.
pub fn verify_z_skein(kind: RepKind) -> Result<Report> {
    if !matches!(kind, RepKind::Head(..)) {
        return Err(Error::Invalid(format!("{} is not a 4-dimensional head", kind.tag())));
    }
    let rep = kind.build();
    let t = g(3);
    let ev = EvaluatedRep::new(&rep, &t, &g(1))?;
    let delta = delta_z(&rep).eval(&t, &g(1))?;
    let scalar = (&t * &t).sub(&(&t * &t).inv()?).neg();
    let tp = TensorProduct::new(&ev, &ev);
    let mut report = Report::new(format!("δ on {} ⊗ {}", kind.tag(), kind.tag()));
    let summands = decompose(&tp)?;
    report.check("three summands", summands.len() == 3);
    for s in &summands {
        let (want, label) = match s.dim {
            4 => (G::zero(), "annihilates"),
            8 => (scalar.clone(), "acts by -(t^2 - t^-2) on"),
            _ => {
                report.check_with("summand dimension", false, format!("dimension {}", s.dim));
                continue;
            }
        };
        let bad = s.basis.iter().position(|v| {
            let img = delta.apply(v);
            img.iter().zip(v).any(|(x, y)| *x != want.mul(y))
        });
        report.check_with(
            format!("δ {label} the {}-dimensional summand of weight {}", s.dim, fmt_weight(&s.weight)),
            bad.is_none(),
            bad.map(|i| format!("witness basis vector {i}")).unwrap_or_default(),
        );
    }
    let z0 = &rep.labels[0];
    let top: Vec<G> = (0..tp.dim).map(|i| if i == 0 { G::one() } else { G::zero() }).collect();
    let mut examples = vec![(format!("{z0}⊗{z0}"), top)];
    for i in 0..2 {
        let fz: Vec<G> = ev.f[i].column(0);
        let v = tp.e[i].apply(&kron_vec(&fz, &fz));
        if v.iter().any(|c| !c.is_zero()) {
            examples.push((format!("Δ(E{})(F{}{z0}⊗F{}{z0})", i + 1, i + 1, i + 1), v));
        }
    }
    for (name, v) in examples {
        let w = tp.weight(v.iter().position(|c| !c.is_zero()).unwrap_or(0));
        let Some(s) = summands.iter().find(|s| s.weight == w) else {
            report.check_with(format!("δ on {name}"), false, format!("no summand of weight {}", fmt_weight(&w)));
            continue;
        };
        let want = if s.dim == 4 { G::zero() } else { scalar.clone() };
        let img = delta.apply(&v);
        let ok = img.iter().zip(&v).all(|(x, y)| *x == want.mul(y));
        report.check_with(format!("δ on {name}"), ok, format!("expected {want} times the vector ({}-dimensional summand)", s.dim));
    }
    Ok(report)
}

fn kron_vec(a: &[G], b: &[G]) -> Vec<G> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verma_square() {
        let v = sample_rep(RepKind::VermaSl3, false, &default_sample()).unwrap();
        let tp = TensorProduct::new(&v, &v);
        let sv = tp.singular_vectors().unwrap();
        assert_eq!(sv.len(), 8);
        // the top vector v0 ⊗ v0 has weight (9, 25)
        assert!(sv.iter().any(|(w, _)| *w == (g(9), g(25))));
        let r = check_tensor_product(&v, &v).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn head_squares_and_mixed() {
        let r = verify_tensor_decompositions(&default_sample()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn wrong_expectation_fails() {
        // X ⊗ Y does not contain a 4-dimensional summand of weight ts
        let a = sample_rep(RepKind::Head(HeadKind::X, Sign::Plus), false, &default_sample()).unwrap();
        let b = sample_rep(RepKind::Head(HeadKind::Y, Sign::Plus), true, &default_sample()).unwrap();
        let found = decompose(&TensorProduct::new(&a, &b)).unwrap();
        assert!(found.iter().all(|s| s.dim == 8));
    }

    #[test]
    fn z_skein() {
        for k in RepKind::all_heads() {
            let r = verify_z_skein(k).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(verify_z_skein(RepKind::VermaSl3).is_err());
        let x = verify_z_skein(RepKind::Head(HeadKind::X, Sign::Plus)).unwrap();
        assert!(x.checks.iter().any(|c| c.name == "δ on x0⊗x0" && c.passed && c.detail.as_deref().unwrap().starts_with("expected 0")));
        assert!(x.checks.iter().any(|c| c.name == "δ on Δ(E1)(F1x0⊗F1x0)" && c.passed && c.detail.as_deref().unwrap().contains("8-dimensional")));
        let w = verify_z_skein(RepKind::Head(HeadKind::W, Sign::Plus)).unwrap();
        assert!(w.checks.iter().any(|c| c.name.starts_with("δ on Δ(E1)(F1") && c.passed && c.detail.as_deref().unwrap().starts_with("expected 0")));
    }
}
