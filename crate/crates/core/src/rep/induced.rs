//! Modules induced from a highest weight vector, computed on words in `F1`, `F2`.
//!
//! A word `w` stands for `F_{w[0]} F_{w[1]} ⋯ v0`, so `w[0]` acts last.
//! Elements of `U⁻` are kept in the normal form spanned by the alternating
//! words of length at most four, with `F2F1F2F1 = F1F2F1F2`.

use std::collections::BTreeMap;

use super::verma::{root_vectors, VERMA_SL3_DROPS, VERMA_SL3_LABELS};
use super::{cartan_data, Algebra, HeadKind, Matrix, RepData, RepKind, Sign};
use crate::arith::{bracket, GaussianRational, LaurentPoly, Ring};
use crate::linalg::Mat;

type Word = Vec<u8>;
type Combo = BTreeMap<Word, LaurentPoly>;

fn push(c: &mut Combo, w: Word, coeff: LaurentPoly) {
    if coeff.is_zero() {
        return;
    }
    let e = c.entry(w).or_insert_with(LaurentPoly::zero);
    *e = e.add(&coeff);
    if e.is_zero() {
        c.retain(|_, v| !v.is_zero());
    }
}

/// Normal form of a single word, or `None` if it vanishes in `U⁻`.
fn normalize(w: Word) -> Option<Word> {
    if w.windows(2).any(|p| p[0] == p[1]) || w.len() > 4 {
        return None;
    }
    if w == [2, 1, 2, 1] {
        return Some(vec![1, 2, 1, 2]);
    }
    Some(w)
}

fn drop_of(w: &[u8]) -> (i32, i32) {
    let a = w.iter().filter(|&&x| x == 1).count() as i32;
    let b = w.iter().filter(|&&x| x == 2).count() as i32;
    (a, b)
}

/// `F_i · w`.
fn apply_f(i: u8, c: &Combo) -> Combo {
    let mut out = Combo::new();
    for (w, coeff) in c {
        let mut nw = vec![i];
        nw.extend_from_slice(w);
        if let Some(nw) = normalize(nw) {
            push(&mut out, nw, coeff.clone());
        }
    }
    out
}

/// `E_i · w` in the Verma module with highest weight `hw`:
/// each occurrence of `F_i` is replaced by `⌊K_i⌋` acting on the suffix.
fn apply_e(i: u8, hw: &[LaurentPoly], c: &Combo) -> Combo {
    let mut out = Combo::new();
    for (w, coeff) in c {
        for p in 0..w.len() {
            if w[p] != i {
                continue;
            }
            let m = drop_of(&w[p + 1..]);
            let k = super::k_eigenvalue(Algebra::Sl3, hw, m, (i - 1) as usize);
            let b = bracket(&k).expect("bracket of a unit monomial");
            let mut nw = w[..p].to_vec();
            nw.extend_from_slice(&w[p + 1..]);
            if let Some(nw) = normalize(nw) {
                push(&mut out, nw, coeff.mul(&b));
            }
        }
    }
    out
}

fn words(items: &[(&[u8], LaurentPoly)]) -> Combo {
    let mut c = Combo::new();
    for (w, k) in items {
        push(&mut c, w.to_vec(), k.clone());
    }
    c
}

fn z() -> LaurentPoly {
    LaurentPoly::zeta()
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::int(n)
}

/// A quotient of the Verma module, described by word representatives of a
/// basis and a reduction from normal words to basis coordinates.
struct Induced {
    hw: Vec<LaurentPoly>,
    basis: Vec<Combo>,
    reduce: Box<dyn Fn(&[u8]) -> Vec<(usize, LaurentPoly)>>,
}

impl Induced {
    fn coords(&self, c: &Combo) -> Vec<LaurentPoly> {
        let mut v = vec![LaurentPoly::zero(); self.basis.len()];
        for (w, coeff) in c {
            for (i, k) in (self.reduce)(w) {
                v[i] = v[i].add(&coeff.mul(&k));
            }
        }
        v
    }

    fn matrix(&self, op: impl Fn(&Combo) -> Combo) -> Matrix {
        let n = self.basis.len();
        let mut m = Mat::zeros(n, n);
        for (c, b) in self.basis.iter().enumerate() {
            for (r, x) in self.coords(&op(b)).into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    fn actions(&self) -> (Vec<Matrix>, Vec<Matrix>) {
        let e = (1..=2u8).map(|i| self.matrix(|c| apply_e(i, &self.hw, c))).collect();
        let f = (1..=2u8).map(|i| self.matrix(|c| apply_f(i, c))).collect();
        (e, f)
    }
}

fn verma_words(hw: Vec<LaurentPoly>) -> Induced {
    let basis = vec![
        words(&[(&[], int(1))]),
        words(&[(&[1], int(1))]),
        words(&[(&[2], int(1))]),
        words(&[(&[1, 2], int(1))]),
        words(&[(&[1, 2], z()), (&[2, 1], int(-1))]),
        words(&[(&[1, 2, 1], int(-1))]),
        words(&[(&[2, 1, 2], int(-1))]),
        words(&[(&[1, 2, 1, 2], int(-1))]),
    ];
    let reduce = |w: &[u8]| -> Vec<(usize, LaurentPoly)> {
        match w {
            [] => vec![(0, int(1))],
            [1] => vec![(1, int(1))],
            [2] => vec![(2, int(1))],
            [1, 2] => vec![(3, int(1))],
            [2, 1] => vec![(3, z()), (4, int(-1))],
            [1, 2, 1] => vec![(5, int(-1))],
            [2, 1, 2] => vec![(6, int(-1))],
            [1, 2, 1, 2] => vec![(7, int(-1))],
            _ => unreachable!("word not in normal form"),
        }
    };
    Induced { hw, basis, reduce: Box::new(reduce) }
}

/// The sl3 Verma module computed entirely by the word engine. Its E-actions are
/// an independent oracle for the transcribed table in [`super::build_verma_sl3`].
pub fn build_verma_sl3_from_words() -> RepData {
    let hw = vec![LaurentPoly::t1(), LaurentPoly::t2()];
    let ind = verma_words(hw.clone());
    let (e, f) = ind.actions();
    assemble(RepKind::VermaSl3, VERMA_SL3_LABELS.iter().map(|s| s.to_string()).collect(), VERMA_SL3_DROPS.to_vec(), hw, e, f)
}

fn assemble(kind: RepKind, labels: Vec<String>, drops: Vec<(i32, i32)>, hw: Vec<LaurentPoly>, e: Vec<Matrix>, f: Vec<Matrix>) -> RepData {
    let (k, k_inv, pivot) = cartan_data(Algebra::Sl3, &hw, &drops);
    let (e12, f12) = root_vectors(&e, &f);
    RepData { kind, dim: labels.len(), labels, drops, hw, e, f, e12: Some(e12), f12: Some(f12), k, k_inv, pivot }
}

/// `c = −ζ·h⁻¹·⌊ζh⌋` for `h = ζt`, so that `F1F2w0 = c·F12w0` in W.
fn w_coefficient() -> LaurentPoly {
    // −ζ(1 − t^{-2})/2
    let minus_half_zeta = LaurentPoly::constant(&GaussianRational::zeta() * &GaussianRational::frac(-1, 2));
    &minus_half_zeta * &(&LaurentPoly::one() - &LaurentPoly::mono(-2, 0))
}

pub fn build_head_rep(kind: HeadKind, sign: Sign) -> RepData {
    let s = int(sign.value());
    let t = LaurentPoly::t1();
    let (hw, basis, drops, labels, reduce): (Vec<LaurentPoly>, Vec<Combo>, Vec<(i32, i32)>, Vec<&str>, Box<dyn Fn(&[u8]) -> Vec<(usize, LaurentPoly)>>) = match kind {
        HeadKind::X => (
            vec![t, s],
            vec![
                words(&[(&[], int(1))]),
                words(&[(&[1], int(1))]),
                words(&[(&[1, 2], z()), (&[2, 1], int(-1))]),
                words(&[(&[1, 2, 1], int(-1))]),
            ],
            vec![(0, 0), (1, 0), (1, 1), (2, 1)],
            vec!["x0", "F1x0", "F12x0", "F1F12x0"],
            Box::new(|w: &[u8]| match w {
                [] => vec![(0, int(1))],
                [1] => vec![(1, int(1))],
                [2, 1] => vec![(2, int(-1))],
                [1, 2, 1] => vec![(3, int(-1))],
                _ => vec![],
            }),
        ),
        HeadKind::Y => (
            vec![s, t],
            vec![
                words(&[(&[], int(1))]),
                words(&[(&[2], int(1))]),
                words(&[(&[1, 2], z()), (&[2, 1], int(-1))]),
                words(&[(&[2, 1, 2], int(-1))]),
            ],
            vec![(0, 0), (0, 1), (1, 1), (1, 2)],
            vec!["y0", "F2y0", "F12y0", "F12F2y0"],
            Box::new(|w: &[u8]| match w {
                [] => vec![(0, int(1))],
                [2] => vec![(1, int(1))],
                [1, 2] => vec![(2, -z())],
                [2, 1, 2] => vec![(3, int(-1))],
                _ => vec![],
            }),
        ),
        HeadKind::W => {
            let c = w_coefficient();
            let c2 = &(&z() * &c) - &int(1);
            (
                vec![LaurentPoly::monomial(GaussianRational::zeta(), 1, 0), LaurentPoly::monomial(GaussianRational::from_int(sign.value()), -1, 0)],
                vec![
                    words(&[(&[], int(1))]),
                    words(&[(&[1], int(1))]),
                    words(&[(&[2], int(1))]),
                    words(&[(&[1, 2], z()), (&[2, 1], int(-1))]),
                ],
                vec![(0, 0), (1, 0), (0, 1), (1, 1)],
                vec!["w0", "F1w0", "F2w0", "F12w0"],
                Box::new(move |w: &[u8]| match w {
                    [] => vec![(0, int(1))],
                    [1] => vec![(1, int(1))],
                    [2] => vec![(2, int(1))],
                    [1, 2] => vec![(3, c.clone())],
                    [2, 1] => vec![(3, c2.clone())],
                    _ => vec![],
                }),
            )
        }
    };
    let ind = Induced { hw: hw.clone(), basis, reduce };
    let (e, f) = ind.actions();
    assemble(RepKind::Head(kind, sign), labels.into_iter().map(String::from).collect(), drops, hw, e, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::build_verma_sl3;

    #[test]
    fn word_engine_reproduces_table() {
        let a = build_verma_sl3();
        let b = build_verma_sl3_from_words();
        for i in 0..2 {
            assert_eq!(a.e[i].first_difference(&b.e[i]), None, "E{}", i + 1);
            assert_eq!(a.f[i].first_difference(&b.f[i]), None, "F{}", i + 1);
        }
        assert_eq!(a.e12, b.e12);
        assert_eq!(a.f12, b.f12);
    }

    #[test]
    fn normal_form_identity() {
        assert_eq!(normalize(vec![2, 1, 2, 1]), Some(vec![1, 2, 1, 2]));
        assert_eq!(normalize(vec![1, 1]), None);
        assert_eq!(normalize(vec![1, 2, 1, 2, 1]), None);
    }

    #[test]
    fn x_generator_killed_by_f2() {
        for s in [Sign::Plus, Sign::Minus] {
            let x = build_head_rep(HeadKind::X, s);
            assert!(x.f[1].column(0).iter().all(|v| v.is_zero()));
            assert_eq!(*x.k[1].get(0, 0), int(s.value()));
        }
    }

    #[test]
    fn w_relation() {
        let w = build_head_rep(HeadKind::W, Sign::Plus);
        let h = &w.hw[0];
        let f1f2 = w.f[0].mul(&w.f[1]).column(0);
        let f2f1 = w.f[1].mul(&w.f[0]).column(0);
        let lhs: Vec<LaurentPoly> = f1f2.iter().map(|x| x.mul(&bracket(h).unwrap())).collect();
        let zh = h.scale(&GaussianRational::zeta());
        let rhs: Vec<LaurentPoly> = f2f1.iter().map(|x| x.mul(&bracket(&zh).unwrap())).collect();
        assert_eq!(lhs, rhs);
        assert!(!lhs.iter().all(|x| x.is_zero()));
    }
}
