//! Weight-graded evaluation of braid operators on `V^{⊗n}`.
//!
//! States of `V^{⊗n}` are encoded in base `d = dim V` with strand 0 as the most
//! significant digit, matching the Kronecker convention of [`SparseMat::kron`].
//! Every crossing preserves the total drop, so all work happens inside blocks of
//! states sharing a total drop.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::Ring;
use crate::linalg::SparseMat;

#[derive(Debug)]
pub struct StateSpace {
    pub d: usize,
    pub n: usize,
    pub keys: Vec<(i32, i32)>,
    pub blocks: Vec<Vec<u32>>,
    /// `code → (block, index within block)`.
    locate: Vec<(u32, u32)>,
    weights: Vec<usize>,
}

impl StateSpace {
    pub fn new(drops: &[(i32, i32)], n: usize) -> Self {
        let d = drops.len();
        let total = d.checked_pow(n as u32).filter(|&t| t <= u32::MAX as usize).expect("state space too large");
        let weights: Vec<usize> = (0..n).map(|k| d.pow((n - 1 - k) as u32)).collect();
        let mut by_key: HashMap<(i32, i32), Vec<u32>> = HashMap::new();
        for code in 0..total {
            let mut key = (0, 0);
            for w in &weights {
                let m = drops[(code / w) % d];
                key.0 += m.0;
                key.1 += m.1;
            }
            by_key.entry(key).or_default().push(code as u32);
        }
        let mut keys: Vec<(i32, i32)> = by_key.keys().copied().collect();
        keys.sort();
        let blocks: Vec<Vec<u32>> = keys.iter().map(|k| by_key.remove(k).unwrap()).collect();
        let mut locate = vec![(0, 0); total];
        for (b, states) in blocks.iter().enumerate() {
            for (i, &c) in states.iter().enumerate() {
                locate[c as usize] = (b as u32, i as u32);
            }
        }
        StateSpace { d, n, keys, blocks, locate, weights }
    }

    #[inline]
    pub fn digit(&self, code: u32, strand: usize) -> usize {
        (code as usize / self.weights[strand]) % self.d
    }

    pub fn block_of(&self, key: (i32, i32)) -> Option<usize> {
        self.keys.iter().position(|k| *k == key)
    }

    pub fn len(&self) -> usize {
        self.locate.len()
    }

    pub fn is_empty(&self) -> bool {
        self.locate.is_empty()
    }

    /// Nonzero entries of the crossing matrix `m` on strands `p, p+1`, restricted
    /// to block `b`, as `(source, target, value)`.
    pub fn transitions<T: Ring>(&self, b: usize, p: usize, m: &SparseMat<T>) -> Vec<(u32, u32, T)> {
        let d = self.d;
        let (w0, w1) = (self.weights[p] as i64, self.weights[p + 1] as i64);
        let mut out = Vec::new();
        for (src, &code) in self.blocks[b].iter().enumerate() {
            let (a, c) = (self.digit(code, p), self.digit(code, p + 1));
            for (row, v) in m.col(a * d + c) {
                let (a2, c2) = ((row / d) as i64, (row % d) as i64);
                let new = code as i64 + (a2 - a as i64) * w0 + (c2 - c as i64) * w1;
                let (nb, idx) = self.locate[new as usize];
                debug_assert_eq!(nb as usize, b, "crossing left its weight block");
                out.push((src as u32, idx, v.clone()));
            }
        }
        out.sort_by_key(|t| (t.1, t.0));
        out
    }
}

/// The crossing matrices a braid letter can use, and the diagonal of the pivotal
/// element `h` with its inverse.
pub struct Crossings<T> {
    pub r: SparseMat<T>,
    pub r_inv: SparseMat<T>,
    pub h: Vec<T>,
    pub h_inv: Vec<T>,
}

impl<T: Ring> Crossings<T> {
    fn for_letter(&self, l: i32) -> &SparseMat<T> {
        if l > 0 {
            &self.r
        } else {
            &self.r_inv
        }
    }
}

/// Applies `transitions` to a `rows × cols` row-major block.
fn apply<T: Ring>(data: &[T], cols: usize, tr: &[(u32, u32, T)]) -> Vec<T> {
    let rows = data.len() / cols.max(1);
    let mut out = vec![T::zero(); rows * cols];
    for (src, dst, v) in tr {
        let s = *src as usize * cols;
        let t = *dst as usize * cols;
        let (src_row, dst_row) = (&data[s..s + cols], &mut out[t..t + cols]);
        for (o, x) in dst_row.iter_mut().zip(src_row) {
            if !x.is_zero() {
                o.add_mul(v, x);
            }
        }
    }
    out
}

/// A braid operator stored block by block; each block is dense `B × B`.
#[derive(Clone, Debug)]
pub struct GradedOperator<T> {
    pub space: Arc<StateSpace>,
    pub blocks: Vec<Vec<T>>,
}

impl<T: Ring> GradedOperator<T> {
    pub fn identity(space: Arc<StateSpace>) -> Self {
        let blocks = space
            .blocks
            .iter()
            .map(|s| {
                let b = s.len();
                let mut m = vec![T::zero(); b * b];
                for i in 0..b {
                    m[i * b + i] = T::one();
                }
                m
            })
            .collect();
        GradedOperator { space, blocks }
    }

    /// Left-multiplies by the crossing for `letter`.
    pub fn then_letter(&self, letter: i32, crossings: &Crossings<T>) -> Self {
        let p = letter.unsigned_abs() as usize - 1;
        let m = crossings.for_letter(letter);
        let blocks = self
            .blocks
            .par_iter()
            .enumerate()
            .map(|(b, data)| {
                let tr = self.space.transitions(b, p, m);
                apply(data, self.space.blocks[b].len(), &tr)
            })
            .collect();
        GradedOperator { space: self.space.clone(), blocks }
    }

    /// `self ∘ o`; only matching blocks interact.
    pub fn compose(&self, o: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .zip(&o.blocks)
            .zip(&self.space.blocks)
            .map(|((a, b), states)| {
                let n = states.len();
                let mut out = vec![T::zero(); n * n];
                for i in 0..n {
                    for k in 0..n {
                        let x = &a[i * n + k];
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            let y = &b[k * n + j];
                            if !y.is_zero() {
                                out[i * n + j].add_mul(x, y);
                            }
                        }
                    }
                }
                out
            })
            .collect();
        GradedOperator { space: self.space.clone(), blocks }
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().zip(&self.space.blocks).all(|(m, s)| {
            let n = s.len();
            (0..n).all(|i| (0..n).all(|j| if i == j { m[i * n + j].is_one() } else { m[i * n + j].is_zero() }))
        })
    }

    /// Entry `⟨row|op|col⟩` for state codes.
    pub fn entry(&self, row: u32, col: u32) -> T {
        let (b, i) = self.space.locate[row as usize];
        let (b2, j) = self.space.locate[col as usize];
        if b != b2 {
            return T::zero();
        }
        let n = self.space.blocks[b as usize].len();
        self.blocks[b as usize][i as usize * n + j as usize].clone()
    }

    /// `Σ_s w(s)·⟨s|op|s⟩` over all states, with `w` as in [`state_weight`].
    pub fn weighted_trace(&self, crossings: &Crossings<T>, cut: usize) -> T {
        let mut acc = T::zero();
        for (m, states) in self.blocks.iter().zip(&self.space.blocks) {
            let n = states.len();
            for (i, &code) in states.iter().enumerate() {
                let x = &m[i * n + i];
                if !x.is_zero() {
                    acc.add_mul(&state_weight(&self.space, code, crossings, cut), x);
                }
            }
        }
        acc
    }
}

/// Strands left of `cut` are closed on the left (weight `h^{-1}`), strands to its
/// right on the right (weight `h`).
fn state_weight<T: Ring>(space: &StateSpace, code: u32, crossings: &Crossings<T>, cut: usize) -> T {
    let mut w = T::one();
    for k in 0..space.n {
        let d = space.digit(code, k);
        if k < cut {
            w = w.mul(&crossings.h_inv[d]);
        } else if k > cut {
            w = w.mul(&crossings.h[d]);
        }
    }
    w
}

/// Which columns of `ψ(b)` are propagated when computing the closure trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceMode {
    /// All columns; the caller divides by `dim V`.
    Full { cut: usize },
    /// Only columns whose `cut` strand is the highest weight vector. The partial
    /// trace over the other strands is a scalar on `V`, so its `(v0, v0)` entry
    /// is the invariant itself.
    Reduced { cut: usize },
}

const CHUNK: usize = 256;

/// Streams each block through the braid without materializing `ψ(b)`.
pub fn closure_trace<T: Ring>(space: &StateSpace, letters: &[i32], crossings: &Crossings<T>, mode: TraceMode) -> T {
    let (cut, reduced) = match mode {
        TraceMode::Full { cut } => (cut, false),
        TraceMode::Reduced { cut } => (cut, true),
    };
    let parts: Vec<T> = (0..space.blocks.len())
        .into_par_iter()
        .map(|b| {
            let states = &space.blocks[b];
            let cols: Vec<usize> = (0..states.len()).filter(|&i| !reduced || space.digit(states[i], cut) == 0).collect();
            if cols.is_empty() {
                return T::zero();
            }
            let mut cache: HashMap<i32, Vec<(u32, u32, T)>> = HashMap::new();
            for l in letters {
                cache.entry(*l).or_insert_with(|| space.transitions(b, l.unsigned_abs() as usize - 1, crossings.for_letter(*l)));
            }
            let mut acc = T::zero();
            for chunk in cols.chunks(CHUNK) {
                let c = chunk.len();
                let mut data = vec![T::zero(); states.len() * c];
                for (j, &s) in chunk.iter().enumerate() {
                    data[s * c + j] = T::one();
                }
                for l in letters {
                    data = apply(&data, c, &cache[l]);
                }
                for (j, &s) in chunk.iter().enumerate() {
                    let x = &data[s * c + j];
                    if !x.is_zero() {
                        acc.add_mul(&state_weight(space, states[s], crossings, cut), x);
                    }
                }
            }
            acc
        })
        .collect();
    parts.iter().fold(T::zero(), |a, x| a.add(x))
}

/// Total dense work `Σ_blocks B·C` for a reduced trace, a cost estimate.
pub fn reduced_cost(space: &StateSpace, cut: usize) -> usize {
    space.blocks.iter().map(|s| s.len() * s.iter().filter(|&&c| space.digit(c, cut) == 0).count()).sum()
}
