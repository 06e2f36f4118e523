//! Stanley's trace-preserving bijection between plane partitions and
//! finitely supported matrices, and the trace generating functions.
//!
//! The chain is: conjugate every row; split every column of the result into
//! its Frobenius pair (diagonal counted on both sides), collecting first and
//! second components into two column-strict plane partitions; then run RSK
//! with the order on the alphabet reversed, so that the insertion and
//! recording tableaux come out with decreasing rows and strictly decreasing
//! columns. The insertion tableau carries column indices, the recording
//! tableau row indices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plane::{enumerate_by_size, reverse_plane_partitions, PlanePartition};
use crate::schur::MultivariatePolynomial;

/// Replaces every row by its conjugate partition.
pub fn row_conjugate(pp: &PlanePartition) -> PlanePartition {
    let rows: Vec<Vec<u32>> = pp
        .rows()
        .into_iter()
        .map(|r| {
            Partition::from_padded(&r)
                .expect("rows of a plane partition are partitions")
                .conjugate()
                .parts()
                .to_vec()
        })
        .collect();
    PlanePartition::new(rows).expect("row conjugation yields a plane partition")
}

fn columns(pp: &PlanePartition) -> Vec<Vec<u32>> {
    let (r, c) = pp.extent();
    (0..c)
        .map(|j| (0..r).map(|i| pp.get(i, j)).take_while(|&v| v > 0).collect())
        .collect()
}

fn from_columns(cols: &[Vec<u32>]) -> Result<PlanePartition> {
    let depth = cols.iter().map(Vec::len).max().unwrap_or(0);
    let rows: Vec<Vec<u32>> = (0..depth)
        .map(|i| {
            cols.iter()
                .map_while(|c| c.get(i).copied())
                .collect()
        })
        .collect();
    let pp = PlanePartition::new(rows)?;
    if columns(&pp) != cols {
        return Err(Error::InvalidParams("columns do not form a plane partition".into()));
    }
    Ok(pp)
}

fn is_column_strict(pp: &PlanePartition) -> bool {
    columns(pp).iter().all(|c| c.windows(2).all(|w| w[0] > w[1]))
}

/// Two column-strict plane partitions of the same shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnStrictPair {
    c1: PlanePartition,
    c2: PlanePartition,
}

impl ColumnStrictPair {
    pub fn new(c1: PlanePartition, c2: PlanePartition) -> Result<Self> {
        if c1.shape() != c2.shape() {
            return Err(Error::InvalidParams(format!(
                "shapes {} and {} differ",
                c1.shape(),
                c2.shape()
            )));
        }
        if !is_column_strict(&c1) || !is_column_strict(&c2) {
            return Err(Error::InvalidParams("columns must strictly decrease".into()));
        }
        Ok(ColumnStrictPair { c1, c2 })
    }

    pub fn c1(&self) -> &PlanePartition {
        &self.c1
    }

    pub fn c2(&self) -> &PlanePartition {
        &self.c2
    }

    pub fn num_parts(&self) -> u64 {
        self.c1.shape().size()
    }
}

/// Column `k` of the pair is the Frobenius pair of column `k` of `arr`.
pub fn frobenius_split(arr: &PlanePartition) -> ColumnStrictPair {
    let (firsts, seconds): (Vec<_>, Vec<_>) = columns(arr)
        .into_iter()
        .map(|c| {
            Partition::new(c)
                .expect("columns are partitions")
                .frobenius_pair()
        })
        .unzip();
    let c1 = from_columns(&firsts).expect("first components are column-strict");
    let c2 = from_columns(&seconds).expect("second components are column-strict");
    ColumnStrictPair { c1, c2 }
}

pub fn frobenius_unsplit(pair: &ColumnStrictPair) -> Result<PlanePartition> {
    let cols = columns(&pair.c1)
        .iter()
        .zip(columns(&pair.c2).iter())
        .map(|(a, b)| Partition::from_frobenius(a, b).map(|p| p.parts().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    from_columns(&cols)
}

/// A finitely supported matrix of non-negative integers indexed from 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightMatrix {
    entries: BTreeMap<(u32, u32), u64>,
}

impl WeightMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((u32, u32), u64)>) -> Result<Self> {
        let mut m = WeightMatrix::new();
        for ((i, j), v) in entries {
            if i == 0 || j == 0 {
                return Err(Error::InvalidMatrix(format!("index ({i},{j}) is not positive")));
            }
            m.add(i, j, v);
        }
        Ok(m)
    }

    fn add(&mut self, i: u32, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_default() += v;
        }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in row-major order.
    pub fn support(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ m_{i,j}`.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `Σ (i + j + offset) m_{i,j}`.
    pub fn weighted_sum(&self, offset: i64) -> i64 {
        self.entries
            .iter()
            .map(|(&(i, j), &v)| (i as i64 + j as i64 + offset) * v as i64)
            .sum()
    }
}

/// One `i j m` line per nonzero entry.
impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), v) in self.support() {
            writeln!(f, "{i} {j} {v}")?;
        }
        Ok(())
    }
}

/// Row insertion in reversed order: `x` bumps the leftmost entry smaller
/// than it. Returns the row the new cell landed in.
fn insert(p: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&y| y < x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    p.push(vec![x]);
    p.len() - 1
}

/// Matrix to pair: insert the column indices, record the row indices.
pub fn knuth_unmap(m: &WeightMatrix) -> ColumnStrictPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (&(i, j), &v) in m.entries.iter().rev() {
        for _ in 0..v {
            let r = insert(&mut p, j);
            if r == q.len() {
                q.push(Vec::new());
            }
            q[r].push(i);
        }
    }
    ColumnStrictPair {
        c1: PlanePartition::new(p).expect("insertion tableau is a plane partition"),
        c2: PlanePartition::new(q).expect("recording tableau is a plane partition"),
    }
}

/// Pair to matrix, by reverse insertion.
pub fn knuth_map(pair: &ColumnStrictPair) -> Result<WeightMatrix> {
    let pair = ColumnStrictPair::new(pair.c1.clone(), pair.c2.clone())?;
    let mut p = pair.c1.rows();
    let mut q = pair.c2.rows();
    let mut m = WeightMatrix::new();
    while !q.is_empty() {
        // the smallest recorded value, rightmost occurrence, sits in a corner
        let i = q.iter().map(|row| *row.last().unwrap()).min().unwrap();
        let r = (0..q.len())
            .filter(|&s| *q[s].last().unwrap() == i)
            .max_by_key(|&s| q[s].len())
            .unwrap();
        q[r].pop();
        let mut x = p[r].pop().unwrap();
        if q[r].is_empty() {
            q.remove(r);
            p.remove(r);
        }
        for row in p[..r].iter_mut().rev() {
            let k = row.iter().rposition(|&y| y > x).ok_or_else(|| {
                Error::InvalidParams("pair is not an insertion/recording pair".into())
            })?;
            x = std::mem::replace(&mut row[k], x);
        }
        m.add(i, x, 1);
    }
    Ok(m)
}

/// The full chain from a plane partition to its matrix.
pub fn stanley_map(pp: &PlanePartition) -> WeightMatrix {
    knuth_map(&frobenius_split(&row_conjugate(pp))).expect("split pair is valid")
}

pub fn stanley_unmap(m: &WeightMatrix) -> Result<PlanePartition> {
    let arr = frobenius_unsplit(&knuth_unmap(m))?;
    Ok(row_conjugate(&arr))
}

/// Coefficients of `t^k q^n` for `n <= max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    max_degree: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn one(max_degree: usize) -> Self {
        let mut coeffs = vec![vec![BigInt::zero(); max_degree + 1]; max_degree + 1];
        coeffs[0][0] = BigInt::one();
        BivariateSeries { max_degree, coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Coefficient of `t^k q^n`.
    pub fn coeff(&self, k: usize, n: usize) -> BigInt {
        self.coeffs
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// The coefficient of `q^n` as a polynomial in `t`, lowest power first.
    pub fn q_coeff(&self, n: usize) -> Vec<BigInt> {
        let mut v = self.coeffs[n].clone();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    /// Sets `t = 1`.
    pub fn at_t_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|row| row.iter().sum()).collect()
    }

    /// Multiplies by `1 / (1 - t q^d)`.
    fn divide_by(&mut self, d: usize) {
        for n in d..=self.max_degree {
            for k in 1..=n {
                let add = self.coeffs[n - d][k - 1].clone();
                self.coeffs[n][k] += add;
            }
        }
    }
}

/// `Σ t^{trace} q^{|π|}` over plane partitions with `|π| <= n`.
pub fn trace_gf_bruteforce(n: usize) -> BivariateSeries {
    let mut s = BivariateSeries::one(n);
    for pp in enumerate_by_size(n as u32) {
        s.coeffs[pp.size() as usize][pp.trace() as usize] += 1;
    }
    s
}

/// `∏_{i,j>=1} 1/(1 - t q^{i+j-1})` truncated at `q^n`.
pub fn trace_gf_product(n: usize) -> BivariateSeries {
    let mut s = BivariateSeries::one(n);
    for d in 1..=n {
        // d pairs (i, j) have i + j - 1 = d
        for _ in 0..d {
            s.divide_by(d);
        }
    }
    s
}

fn total_degree(e: &[u32]) -> usize {
    e.iter().map(|&k| k as usize).sum()
}

/// Both sides of Gansner's `i`-trace formula for reverse plane partitions of
/// `shape`, truncated at total degree `max_degree`. Variable `x_i` for
/// `i = 1 - ℓ(λ) ..= λ1 - 1` is stored at position `i + ℓ(λ) - 1`.
pub fn gansner_sides(shape: &Partition, max_degree: usize) -> (MultivariatePolynomial, MultivariatePolynomial) {
    let l = shape.len() as i64;
    let nvars = (shape.part(0) as i64 + l - 1).max(0) as usize;
    let slot = |i: i64| (i + l - 1) as usize;

    let mut lhs = MultivariatePolynomial::zero(nvars);
    for rpp in reverse_plane_partitions(shape, max_degree as u64) {
        let mut e = vec![0u32; nvars];
        for i in 1 - l..shape.part(0) as i64 {
            e[slot(i)] = rpp.i_trace(i) as u32;
        }
        lhs.add_term(e, BigInt::one());
    }

    let conj = shape.conjugate();
    let mut rhs = MultivariatePolynomial::one(nvars);
    for (r, c) in shape.cells() {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let mut x = vec![0u32; nvars];
        for k in j - conj.part(c) as i64..=shape.part(r) as i64 - i {
            x[slot(k)] += 1;
        }
        let h = total_degree(&x);
        let mut geometric = MultivariatePolynomial::zero(nvars);
        for p in 0..=max_degree / h {
            geometric.add_term(x.iter().map(|&k| k * p as u32).collect(), BigInt::one());
        }
        let product = &rhs * &geometric;
        rhs = MultivariatePolynomial::zero(nvars);
        for (e, coef) in product.terms() {
            if total_degree(e) <= max_degree {
                rhs.add_term(e.clone(), coef.clone());
            }
        }
    }
    (lhs, rhs)
}

pub fn gansner_check(shape: &Partition, max_degree: usize) -> bool {
    let (lhs, rhs) = gansner_sides(shape, max_degree);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::all_pp_series;
    use std::collections::HashSet;

    fn pp(rows: &[&[u32]]) -> PlanePartition {
        PlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn trace_example() -> PlanePartition {
        pp(&[&[4, 3, 2, 2], &[4, 3, 1, 1], &[2, 2, 1, 1], &[1, 1], &[1, 1]])
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn corpus(n: u32) -> Vec<PlanePartition> {
        let mut v: Vec<PlanePartition> = enumerate_by_size(n).collect();
        v.push(PlanePartition::new(vec![]).unwrap());
        v
    }

    #[test]
    fn worked_example_chain() {
        let pp1 = row_conjugate(&trace_example());
        assert_eq!(pp1, pp(&[&[4, 4, 2, 1], &[4, 2, 2, 1], &[4, 2], &[2], &[2]]));
        let pair = frobenius_split(&pp1);
        assert_eq!(*pair.c1(), pp(&[&[4, 4, 2, 1], &[3, 1, 1], &[2]]));
        assert_eq!(*pair.c2(), pp(&[&[5, 3, 2, 2], &[4, 2, 1], &[1]]));
        assert_eq!(pair.num_parts(), trace_example().trace());
        let m = stanley_map(&trace_example());
        assert_eq!(m.total(), 8);
        assert_eq!(trace_example().size(), 30);
        assert_eq!(m.weighted_sum(-1), 30);
        assert_eq!(stanley_unmap(&m).unwrap(), trace_example());
    }

    #[test]
    fn trivial_cases() {
        let empty = PlanePartition::new(vec![]).unwrap();
        assert_eq!(row_conjugate(&empty), empty);
        assert_eq!(row_conjugate(&pp(&[&[3]])), pp(&[&[1, 1, 1]]));
        assert_eq!(row_conjugate(&pp(&[&[1], &[1], &[1]])), pp(&[&[1], &[1], &[1]]));
        let split = frobenius_split(&empty);
        assert_eq!(split.num_parts(), 0);
        assert!(stanley_map(&empty).is_zero());
        let one = pp(&[&[1]]);
        let pair = frobenius_split(&one);
        assert_eq!((pair.c1().clone(), pair.c2().clone()), (one.clone(), one.clone()));
        let m = stanley_map(&one);
        assert_eq!(m, WeightMatrix::from_entries([((1, 1), 1)]).unwrap());
        assert_eq!(knuth_unmap(&WeightMatrix::new()), split);
    }

    #[test]
    fn statistics_and_injectivity_up_to_eight() {
        let mut images = HashSet::new();
        for p in corpus(8) {
            assert_eq!(row_conjugate(&p).size(), p.size());
            let pair = frobenius_split(&row_conjugate(&p));
            assert_eq!(pair.num_parts(), p.trace());
            assert_eq!(pair.c1().size() + pair.c2().size() - pair.num_parts(), p.size());
            let m = knuth_map(&pair).unwrap();
            assert_eq!(knuth_unmap(&m), pair);
            assert_eq!(m.weighted_sum(0) as u64, pair.c1().size() + pair.c2().size());
            assert_eq!(m.total(), pair.num_parts());
            assert_eq!(m.weighted_sum(-1) as u64, p.size());
            assert_eq!(stanley_unmap(&m).unwrap(), p);
            assert!(images.insert(m));
        }
    }

    #[test]
    fn every_small_matrix_is_hit() {
        // matrices with Σ(i+j-1)m <= 5 are exactly the images of sizes <= 5
        let images: HashSet<WeightMatrix> = corpus(5).iter().map(stanley_map).collect();
        let mut count = 0;
        fn rec(cells: &[(u32, u32)], k: usize, budget: u32, cur: &mut Vec<((u32, u32), u64)>, out: &mut Vec<WeightMatrix>) {
            if k == cells.len() {
                out.push(WeightMatrix::from_entries(cur.clone()).unwrap());
                return;
            }
            let w = cells[k].0 + cells[k].1 - 1;
            let mut v = 0;
            while v * w <= budget {
                cur.push((cells[k], v as u64));
                rec(cells, k + 1, budget - v * w, cur, out);
                cur.pop();
                v += 1;
            }
        }
        let cells: Vec<(u32, u32)> = (1..=5).flat_map(|i| (1..=5).map(move |j| (i, j))).filter(|&(i, j)| i + j - 1 <= 5).collect();
        let mut all = Vec::new();
        rec(&cells, 0, 5, &mut Vec::new(), &mut all);
        for m in &all {
            assert!(images.contains(m));
            count += 1;
        }
        assert_eq!(count, images.len());
    }

    #[test]
    fn knuth_map_rejects_bad_pairs() {
        let a = pp(&[&[2, 1]]);
        let b = pp(&[&[2], &[1]]);
        assert!(ColumnStrictPair::new(a.clone(), b).is_err());
        let not_strict = pp(&[&[1], &[1]]);
        assert!(ColumnStrictPair::new(not_strict.clone(), not_strict).is_err());
    }

    #[test]
    fn trace_series() {
        let s = trace_gf_product(1);
        assert_eq!(s, trace_gf_bruteforce(1));
        assert_eq!(s.q_coeff(1), vec![BigInt::zero(), BigInt::one()]);
        let s2 = trace_gf_bruteforce(2);
        assert_eq!(s2.q_coeff(2), vec![BigInt::zero(), 2.into(), 1.into()]);
        for n in 0..=8 {
            assert_eq!(trace_gf_bruteforce(n), trace_gf_product(n));
        }
        let at_one = trace_gf_product(8).at_t_one();
        assert_eq!(at_one, all_pp_series(8).coeffs().to_vec());
    }

    #[test]
    fn gansner_examples() {
        let (l, r) = gansner_sides(&part(&[1]), 3);
        assert_eq!(l, r);
        assert_eq!(l.terms().len(), 4);
        assert_eq!(l.to_string(), "x1^3 + x1^2 + x1 + 1");
        assert!(gansner_check(&part(&[2]), 2));
        assert!(gansner_check(&part(&[2, 1]), 4));
        for shape in [&[1][..], &[2], &[1, 1], &[2, 1], &[2, 2], &[3, 1]] {
            assert!(gansner_check(&part(shape), 6), "{shape:?}");
        }
    }
}
