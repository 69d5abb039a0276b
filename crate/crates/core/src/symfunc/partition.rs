use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// An integer partition with parts in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl Partition {
    /// Validates that parts are weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidSequence(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        if let Some(&first) = self.0.first() {
            for j in 1..=first {
                out.push(self.0.iter().filter(|&&p| p >= j).count() as u32);
            }
        }
        Partition(out)
    }

    /// `Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Multiplicity of each part size `1..=max`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.part(0) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> Q {
        let mut out = Q::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                out = out * Q::from(i as u32) * Q::from(k);
            }
        }
        out
    }

    /// Dominance order `self ⊵ other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.length().max(other.length()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && (0..other.length()).all(|i| other.part(i) <= self.part(i))
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn num_syt(&self) -> u64 {
        let conj = self.conjugate();
        let n = self.size() as u64;
        let mut num: u128 = 1;
        for k in 1..=n {
            num *= k as u128;
        }
        let mut den: u128 = 1;
        for (r, c) in self.cells() {
            let hook = (self.part(r) as usize - c) + (conj.part(c) as usize - r) - 1;
            den *= hook as u128;
        }
        (num / den) as u64
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` with exactly `k` parts.
    pub fn with_length(n: u32, k: usize) -> Vec<Partition> {
        Partition::all(n).into_iter().filter(|p| p.length() == k).collect()
    }

    /// Hook shape `(a, 1^b)`.
    pub fn hook(a: u32, b: u32) -> Partition {
        let mut v = vec![a];
        v.extend(std::iter::repeat_n(1, b as usize));
        Partition::from_unsorted(v)
    }

    /// Compact label: `21` for small parts, `10,2` once a part exceeds 9.
    pub fn label(&self) -> String {
        if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// Parses `21`, `(2,1)` or `2,1`.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Option<Vec<u32>> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let parts = parts.ok_or_else(|| Error::Parse(format!("bad partition `{s}`")))?;
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(
            Partition::all(3),
            vec![
                Partition::new(vec![3]).unwrap(),
                Partition::new(vec![2, 1]).unwrap(),
                Partition::new(vec![1, 1, 1]).unwrap(),
            ]
        );
    }

    #[test]
    fn conjugate_and_stats() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![2, 1, 1]).unwrap());
        assert_eq!(p.n_stat(), 1);
        assert_eq!(Partition::new(vec![2, 2, 1]).unwrap().num_syt(), 5);
        assert_eq!(Partition::new(vec![2, 1, 1]).unwrap().z(), Q::from(4));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::parse("211").unwrap(), Partition::new(vec![2, 1, 1]).unwrap());
        assert_eq!(Partition::parse("(10,2)").unwrap().label(), "10,2");
    }
}
