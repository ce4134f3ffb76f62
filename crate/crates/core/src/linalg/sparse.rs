//! Column-sparse square matrices.

use crate::arith::Ring;

use super::mat::Mat;

#[derive(Clone, PartialEq, Debug)]
pub struct SparseMat<T> {
    n: usize,
    /// `cols[c]` holds `(row, value)` pairs sorted by row, no zeros.
    cols: Vec<Vec<(usize, T)>>,
}

impl<T: Ring> SparseMat<T> {
    pub fn zeros(n: usize) -> Self {
        SparseMat { n, cols: vec![Vec::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { n, cols: (0..n).map(|i| vec![(i, T::one())]).collect() }
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let n = entries.len();
        SparseMat {
            n,
            cols: entries.into_iter().enumerate().map(|(i, e)| if e.is_zero() { vec![] } else { vec![(i, e)] }).collect(),
        }
    }

    /// Builds from columns given as unsorted, possibly repeated entries.
    pub fn from_columns(n: usize, cols: Vec<Vec<(usize, T)>>) -> Self {
        assert_eq!(cols.len(), n);
        SparseMat { n, cols: cols.into_iter().map(|c| normalize(n, c)).collect() }
    }

    pub fn from_dense(m: &Mat<T>) -> Self {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        SparseMat {
            n,
            cols: (0..n)
                .map(|c| (0..n).filter(|&r| !m.get(r, c).is_zero()).map(|r| (r, m.get(r, c).clone())).collect())
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Mat<T> {
        let mut m = Mat::zeros(self.n, self.n);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn col(&self, c: usize) -> &[(usize, T)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.cols[c].binary_search_by(|(x, _)| x.cmp(&r)) {
            Ok(i) => self.cols[c][i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.n];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.cols[c] {
                out[*r].add_mul(a, x);
            }
        }
        out
    }

    /// `self · o`.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let cols = o
            .cols
            .iter()
            .map(|bcol| {
                let mut acc: Vec<Option<T>> = vec![None; self.n];
                for (k, b) in bcol {
                    for (r, a) in &self.cols[*k] {
                        match &mut acc[*r] {
                            Some(x) => x.add_mul(a, b),
                            slot => *slot = Some(a.mul(b)),
                        }
                    }
                }
                acc.into_iter().enumerate().filter_map(|(r, x)| x.filter(|v| !v.is_zero()).map(|v| (r, v))).collect()
            })
            .collect();
        SparseMat { n: self.n, cols }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        let cols = self
            .cols
            .iter()
            .zip(&o.cols)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.extend(b.iter().map(|(r, v)| (*r, if negate { v.neg() } else { v.clone() })));
                normalize(self.n, c)
            })
            .collect();
        SparseMat { n: self.n, cols }
    }

    pub fn scale(&self, s: &T) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(r, v)| (*r, v.mul(s))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMat { n: self.n, cols }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SparseMat<U> {
        SparseMat {
            n: self.n,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(r, v)| (*r, f(v))).filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    /// Kronecker product `self ⊗ o`, index `i·o.n + k`.
    pub fn kron(&self, o: &Self) -> Self {
        let n = self.n * o.n;
        let mut cols = Vec::with_capacity(n);
        for acol in &self.cols {
            for bcol in &o.cols {
                let mut c = Vec::with_capacity(acol.len() * bcol.len());
                for (ra, a) in acol {
                    for (rb, b) in bcol {
                        c.push((ra * o.n + rb, a.mul(b)));
                    }
                }
                c.retain(|(_, v)| !v.is_zero());
                cols.push(c);
            }
        }
        SparseMat { n, cols }
    }

    /// Some nonzero entry `(row, col, value)`, if any.
    pub fn some_nonzero(&self) -> Option<(usize, usize, T)> {
        self.cols.iter().enumerate().find_map(|(c, col)| col.first().map(|(r, v)| (*r, c, v.clone())))
    }

    /// First entry where the matrices differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize)> {
        let d = self.sub(o);
        d.some_nonzero().map(|(r, c, _)| (r, c))
    }
}

fn normalize<T: Ring>(n: usize, mut c: Vec<(usize, T)>) -> Vec<(usize, T)> {
    c.sort_by_key(|(r, _)| *r);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(c.len());
    for (r, v) in c {
        assert!(r < n, "row index out of range");
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = lv.add(&v),
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}
