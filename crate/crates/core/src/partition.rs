//! Integer partitions: conjugation and the modified Frobenius notation.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Drops zero parts; the remaining parts must already be weakly decreasing.
    pub fn from_padded(parts: &[u32]) -> Result<Self> {
        Self::new(parts.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle with `rows` parts equal to `width`.
    pub fn rectangle(rows: usize, width: u32) -> Self {
        if width == 0 {
            Partition::empty()
        } else {
            Partition(vec![width; rows])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|k| self.0.iter().take_while(|&&p| p >= k).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// Frobenius notation with the diagonal counted on both sides:
    /// `(λ1, λ2-1, λ3-2, ... | λ'1, λ'2-1, ...)`, positive entries only.
    pub fn frobenius_pair(&self) -> (Vec<u32>, Vec<u32>) {
        let d = self.durfee();
        let conj = self.conjugate();
        let arm = (0..d).map(|i| self.part(i) - i as u32).collect();
        let leg = (0..d).map(|i| conj.part(i) - i as u32).collect();
        (arm, leg)
    }

    /// Inverse of [`Partition::frobenius_pair`].
    pub fn from_frobenius(arm: &[u32], leg: &[u32]) -> Result<Partition> {
        let strict = |v: &[u32]| v.iter().all(|&x| x > 0) && v.windows(2).all(|w| w[0] > w[1]);
        if arm.len() != leg.len() || !strict(arm) || !strict(leg) {
            let mut bad = arm.to_vec();
            bad.extend_from_slice(leg);
            return Err(Error::InvalidPartition(bad));
        }
        let d = arm.len();
        let cols: Vec<u32> = leg.iter().enumerate().map(|(j, &b)| b + j as u32).collect();
        let mut parts: Vec<u32> = arm.iter().enumerate().map(|(i, &a)| a + i as u32).collect();
        let depth = cols.first().copied().unwrap_or(0) as usize;
        for i in d..depth {
            parts.push(cols.iter().filter(|&&c| c as usize > i).count() as u32);
        }
        Partition::new(parts)
    }

    /// Whether the Ferrers diagram of `self` contains the cell `(i, j)` (0-based).
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.part(i) as usize > j
    }

    /// Cells of the diagram in row-major order (0-based).
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions whose diagram fits in a `rows` x `width` rectangle.
pub fn partitions_in_box(rows: usize, width: u32) -> Vec<Partition> {
    fn go(i: usize, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if i == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(i + 1, rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, rows, width, &mut Vec::new(), &mut out);
    out
}
