//! Permutations of `{0, .., n-1}` in one-line notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation `w` stored as its images `w(0), .., w(n-1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidSequence(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_iter().map(|i| i as u8).collect()))
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Perm> {
        if images.contains(&0) {
            return Err(Error::InvalidSequence(format!("{images:?} is not 1-based")));
        }
        Perm::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// The adjacent transposition swapping `i` and `i + 1` (0-based).
    pub fn adjacent(n: usize, i: usize) -> Perm {
        let mut w = Perm::identity(n);
        w.0.swap(i, i + 1);
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.0.len()];
        let mut parity = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            parity += len - 1;
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// A permutation with the given cycle type, built from consecutive blocks.
    pub fn with_cycle_type(parts: &[u32]) -> Perm {
        let n: u32 = parts.iter().sum();
        let mut images = vec![0u8; n as usize];
        let mut start = 0usize;
        for &p in parts {
            let p = p as usize;
            for j in 0..p {
                images[start + j] = (start + (j + 1) % p) as u8;
            }
            start += p;
        }
        Perm(images)
    }

    /// All permutations of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<usize> = self.0.iter().map(|&i| i as usize + 1).collect();
        write!(f, "{one:?}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|w| w.sign() == 1).count(), 12);
        assert_eq!(Perm::adjacent(3, 0).sign(), -1);
    }

    #[test]
    fn cycle_types() {
        let w = Perm::with_cycle_type(&[3, 2, 1]);
        assert_eq!(w.cycle_type(), vec![3, 2, 1]);
        assert_eq!(w.compose(&w.inverse()), Perm::identity(6));
        assert_eq!(w.sign(), -1);
    }
}
