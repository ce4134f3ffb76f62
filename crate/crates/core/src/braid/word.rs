//! Braid words and their closures.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `letters[k] = ±i` stands for `σ_i^{±1}`, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Braid("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::Braid("zero is not a braid generator".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::Braid(format!("generator {l} out of range for {strands} strands")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn unknot() -> Self {
        BraidWord { strands: 1, letters: vec![] }
    }

    /// The permutation `strand ↦ strand` after traversing the braid once.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = perm[c];
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self · o` (letters of `self` first).
    pub fn concat(&self, o: &Self) -> Self {
        assert_eq!(self.strands, o.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate(&self, g: &Self) -> Self {
        g.concat(self).concat(&g.inverse())
    }

    /// `self · σ_n^{±1}` on `n + 1` strands.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Mirror image: every crossing flipped.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}] on {} strands", parts.join(" "), self.strands)
    }
}

/// Parses whitespace- or comma-separated signed integers.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let letters = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_braid("1 1 1", 2).unwrap().letters, vec![1, 1, 1]);
        assert_eq!(parse_braid("1 -2 1 -2", 3).unwrap().letters, vec![1, -2, 1, -2]);
        assert!(matches!(parse_braid("3 1", 2), Err(Error::Braid(_))));
        assert!(matches!(parse_braid("1 0", 2), Err(Error::Braid(_))));
        assert!(matches!(parse_braid("1 x", 2), Err(Error::Parse(_))));
        assert_eq!(parse_braid("", 3).unwrap().letters, Vec::<i32>::new());
    }

    #[test]
    fn component_counts() {
        assert_eq!(parse_braid("1 1 1", 2).unwrap().components(), 1);
        assert_eq!(parse_braid("1 1", 2).unwrap().components(), 2);
        assert_eq!(parse_braid("", 3).unwrap().components(), 3);
        assert_eq!(parse_braid("1 -2 1 -2", 3).unwrap().components(), 1);
    }

    #[test]
    fn moves_preserve_components() {
        let b = parse_braid("1 1 1", 2).unwrap();
        assert_eq!(b.stabilize(true).components(), 1);
        assert_eq!(b.stabilize(false).stabilize(true).components(), 1);
        let g = parse_braid("2 -1", 3).unwrap();
        let b3 = b.stabilize(true);
        assert_eq!(b3.conjugate(&g).components(), 1);
        assert_eq!(b3.conjugate(&g).letters, vec![2, -1, 1, 1, 1, 2, 1, -2]);
    }
}
