//! Alternating sign matrices, monotone triangles, Magog and Gog trapezoids,
//! and the refined Maxima/Minima tables of the Magog-Gog conjecture.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith::binomial_signed;
use crate::error::{Error, Result};
use crate::plane::BoxDims;
use crate::symmetry::{enumerate_class, SymmetryClass};

/// In every row and column the nonzero entries alternate `1, -1, ..., 1`.
pub fn validate_asm(m: &[Vec<i64>]) -> bool {
    asm_violation(m).is_none()
}

/// First defect found, naming the offending row, column or cell (1-based).
fn asm_violation(m: &[Vec<i64>]) -> Option<String> {
    let n = m.len();
    if let Some(i) = m.iter().position(|r| r.len() != n) {
        return Some(format!("row {} has {} entries, expected {n}", i + 1, m[i].len()));
    }
    let check = |line: &mut dyn Iterator<Item = (usize, usize, i64)>, what: String| {
        let mut expect = 1;
        for (i, j, x) in line {
            match x {
                0 => {}
                1 | -1 if x == expect => expect = -expect,
                _ => {
                    return Some(format!(
                        "cell ({},{}) = {x} breaks the sign alternation of {what}",
                        i + 1,
                        j + 1
                    ))
                }
            }
        }
        (expect != -1).then(|| format!("{what} does not sum to 1"))
    };
    for (i, r) in m.iter().enumerate() {
        let row = &mut r.iter().enumerate().map(|(j, &x)| (i, j, x));
        if let Some(e) = check(row, format!("row {}", i + 1)) {
            return Some(e);
        }
    }
    for j in 0..n {
        let col = &mut m.iter().enumerate().map(|(i, r)| (i, j, r[j]));
        if let Some(e) = check(col, format!("column {}", j + 1)) {
            return Some(e);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

impl Asm {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidMatrix("matrix is empty".into()));
        }
        if let Some(e) = asm_violation(&entries) {
            return Err(Error::InvalidMatrix(format!("not an alternating sign matrix: {e}")));
        }
        Ok(Asm {
            entries: entries
                .into_iter()
                .map(|r| r.into_iter().map(|x| x as i8).collect())
                .collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Asm {
            entries: (0..n)
                .map(|i| (0..n).map(|j| i8::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| i64::from(x)).collect())
            .collect()
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(i8::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row `i` (0-based) holds `n - i` entries; the first row is `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        let bad = |msg: String| Err(Error::InvalidTriangle(msg));
        if n == 0 {
            return bad("empty triangle".into());
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i {
                return bad(format!("row {} has {} entries, expected {}", i + 1, row.len(), n - i));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {} is not strictly increasing", i + 1));
            }
        }
        if rows[0] != (1..=n as u32).collect::<Vec<_>>() {
            return bad("first row is not 1..n".into());
        }
        for i in 1..n {
            for j in 0..n - i {
                if rows[i][j] < rows[i - 1][j] {
                    return bad(format!("column {} decreases at row {}", j + 1, i + 1));
                }
                if rows[i][j] > rows[i - 1][j + 1] {
                    return bad(format!("diagonal decreases at row {}, column {}", i + 1, j + 1));
                }
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }
}

impl fmt::Display for MonotoneTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row `i` of the triangle lists the columns holding a 1 in the sum of
/// matrix rows `i..n`.
pub fn asm_to_mt(m: &Asm) -> MonotoneTriangle {
    let n = m.n();
    let mut sums = vec![0i64; n];
    let mut rows = vec![Vec::new(); n];
    for i in (0..n).rev() {
        for (j, s) in sums.iter_mut().enumerate() {
            *s += i64::from(m.get(i, j));
        }
        rows[i] = (0..n).filter(|&j| sums[j] == 1).map(|j| j as u32 + 1).collect();
    }
    MonotoneTriangle::new(rows).expect("partial sums of an ASM give a monotone triangle")
}

pub fn mt_to_asm(t: &MonotoneTriangle) -> Result<Asm> {
    let t = MonotoneTriangle::new(t.rows.clone())?;
    let n = t.n();
    let indicator = |i: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        if i < n {
            for &x in &t.rows[i] {
                v[x as usize - 1] = 1;
            }
        }
        v
    };
    let entries = (0..n)
        .map(|i| {
            indicator(i)
                .iter()
                .zip(indicator(i + 1))
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    Asm::new(entries)
}

/// All monotone triangles of order `n`.
pub fn enumerate_monotone_triangles(n: usize) -> Vec<MonotoneTriangle> {
    if n == 0 {
        return Vec::new();
    }
    enumerate_gog(0, n, n)
        .expect("(0, n, n) is a valid parameter set")
        .into_iter()
        .map(|g| MonotoneTriangle { rows: g.rows })
        .collect()
}

/// All `n x n` alternating sign matrices, via monotone triangles.
pub fn enumerate_asm(n: usize) -> std::vec::IntoIter<Asm> {
    let mut v: Vec<Asm> = enumerate_monotone_triangles(n)
        .iter()
        .map(|t| mt_to_asm(t).expect("triangle maps to an ASM"))
        .collect();
    v.sort();
    v.into_iter()
}

/// How an entry that is simultaneously a Maximum and a Minimum is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OverlapConvention {
    #[default]
    Both,
    MaxOnly,
    MinOnly,
}

impl OverlapConvention {
    pub const ALL: [OverlapConvention; 3] = [
        OverlapConvention::Both,
        OverlapConvention::MaxOnly,
        OverlapConvention::MinOnly,
    ];

    /// Contributions `(max, min)` of one entry.
    fn classify(self, is_max: bool, is_min: bool) -> (u32, u32) {
        match (is_max, is_min, self) {
            (true, true, OverlapConvention::MaxOnly) => (1, 0),
            (true, true, OverlapConvention::MinOnly) => (0, 1),
            (a, b, _) => (u32::from(a), u32::from(b)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OverlapConvention::Both => "count-as-both",
            OverlapConvention::MaxOnly => "max-only",
            OverlapConvention::MinOnly => "min-only",
        }
    }
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// The first `k` rows of a triangular array (row `i` has `n + 1 - i`
/// entries) with weakly increasing rows, weakly decreasing columns and
/// first-row bounds `b_{1j} <= m + j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MagogTrapezoid {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    rows: Vec<Vec<u32>>,
}

/// The first `k` columns of a triangular array with strictly increasing
/// rows, weakly increasing columns and north-east diagonals, and bounds
/// `a_{ik} <= m + k + i - 1` on column `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GogTrapezoid {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    rows: Vec<Vec<u32>>,
}

impl MagogTrapezoid {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

impl GogTrapezoid {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Column `j` (1-indexed), top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows
            .iter()
            .filter_map(|r| r.get(j - 1).copied())
            .collect()
    }
}

fn trapezoid_cells(shape: &[usize]) -> Vec<(usize, usize)> {
    shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect()
}

/// Backtracks over the cells in row-major order; `range` gives the allowed
/// values of a cell from the already filled ones.
fn fill<F>(shape: &[usize], range: F) -> Vec<Vec<Vec<u32>>>
where
    F: Fn(&[Vec<u32>], usize, usize) -> (u32, u32),
{
    let cells = trapezoid_cells(shape);
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fn rec<F: Fn(&[Vec<u32>], usize, usize) -> (u32, u32)>(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        range: &F,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if idx == cells.len() {
            out.push(rows.clone());
            return;
        }
        let (i, j) = cells[idx];
        let (lo, hi) = range(rows, i, j);
        for v in lo..=hi {
            rows[i][j] = v;
            rec(idx + 1, cells, rows, range, out);
        }
        rows[i][j] = 0;
    }
    rec(0, &cells, &mut rows, &range, &mut out);
    out
}

pub fn enumerate_magog(m: usize, n: usize, k: usize) -> Result<Vec<MagogTrapezoid>> {
    check_params(n, k)?;
    let shape: Vec<usize> = (0..k).map(|i| n - i).collect();
    let arrays = fill(&shape, |rows, i, j| {
        let lo = if j > 0 { rows[i][j - 1] } else { 1 };
        let hi = if i > 0 {
            rows[i - 1][j]
        } else {
            (m + j + 1) as u32
        };
        (lo, hi)
    });
    Ok(arrays
        .into_iter()
        .map(|rows| MagogTrapezoid { m, n, k, rows })
        .collect())
}

pub fn enumerate_gog(m: usize, n: usize, k: usize) -> Result<Vec<GogTrapezoid>> {
    check_params(n, k)?;
    let shape: Vec<usize> = (0..n).map(|i| (n - i).min(k)).collect();
    let arrays = fill(&shape, |rows, i, j| {
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1] + 1);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j]);
        }
        // 0-based (i, j) is the 1-based cell (i+1, j+1)
        let mut hi = (m + i + j + 1) as u32;
        if i > 0 && j + 1 < rows[i - 1].len() {
            hi = hi.min(rows[i - 1][j + 1]);
        }
        (lo, hi)
    });
    Ok(arrays
        .into_iter()
        .map(|rows| GogTrapezoid { m, n, k, rows })
        .collect())
}

/// `(s, t)`: Maxima in the first row, Minima in the last row.
pub fn magog_stats(t: &MagogTrapezoid, conv: OverlapConvention) -> (u32, u32) {
    let last = t.rows.len() - 1;
    let mut s = 0;
    let mut u = 0;
    for (i, row) in t.rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let is_max = i == 0 && v as usize == t.m + j + 1;
            let is_min = i == last && v == 1;
            let (a, b) = conv.classify(is_max, is_min);
            s += a;
            u += b;
        }
    }
    (s, u)
}

/// `(maxima, minima)`: Maxima in the right-most column, Minima in the
/// left-most column.
pub fn gog_stats(g: &GogTrapezoid, conv: OverlapConvention) -> (u32, u32) {
    let mut maxima = 0;
    let mut minima = 0;
    for (i, row) in g.rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let is_max = j + 1 == g.k && v as usize == g.m + g.k + i;
            let is_min = j == 0 && v == 1;
            let (a, b) = conv.classify(is_max, is_min);
            maxima += a;
            minima += b;
        }
    }
    (maxima, minima)
}

/// Counts keyed by a pair of statistics; zero counts are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatTable {
    counts: BTreeMap<(u32, u32), BigInt>,
}

impl StatTable {
    pub fn add(&mut self, key: (u32, u32)) {
        *self.counts.entry(key).or_insert_with(BigInt::zero) += 1;
    }

    pub fn get(&self, s: u32, t: u32) -> BigInt {
        self.counts.get(&(s, t)).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.counts.iter().map(|(&k, v)| (k, v))
    }

    /// The table with its two keys exchanged.
    pub fn swapped(&self) -> StatTable {
        StatTable {
            counts: self.counts.iter().map(|(&(s, t), v)| ((t, s), v.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swapped()
    }

    /// `[[s, t, "count"], ...]` in key order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.counts
                .iter()
                .map(|(&(s, t), c)| json!([s, t, c.to_string()]))
                .collect(),
        )
    }
}

/// Both refined tables keyed so that the conjecture predicts equality: the
/// Magog table by (first-row Maxima, last-row Minima), the Gog table by
/// (left-column Minima, right-column Maxima).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureTables {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub convention: OverlapConvention,
    pub magog: StatTable,
    pub gog: StatTable,
}

impl ConjectureTables {
    pub fn equal(&self) -> bool {
        self.magog == self.gog
    }

    /// Comparison without exchanging the Gog statistics.
    pub fn unswapped_equal(&self) -> bool {
        self.magog == self.gog.swapped()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "params": {"m": self.m, "n": self.n, "k": self.k},
            "magog": self.magog.to_json(),
            "gog": self.gog.to_json(),
            "equal": self.equal(),
        })
    }
}

pub fn conjecture_tables(
    m: usize,
    n: usize,
    k: usize,
    convention: OverlapConvention,
) -> Result<ConjectureTables> {
    let mut magog = StatTable::default();
    for t in enumerate_magog(m, n, k)? {
        magog.add(magog_stats(&t, convention));
    }
    let mut gog = StatTable::default();
    for g in enumerate_gog(m, n, k)? {
        let (maxima, minima) = gog_stats(&g, convention);
        gog.add((minima, maxima));
    }
    Ok(ConjectureTables {
        m,
        n,
        k,
        convention,
        magog,
        gog,
    })
}

/// `binom(m+2n-s-t-2, m+n-2) - binom(m+2n-s-t-2, m+n-1)`, with binomials
/// vanishing outside `0 <= j <= x`.
pub fn k1_count(m: usize, n: usize, s: usize, t: usize) -> BigInt {
    let x = (m + 2 * n) as i64 - s as i64 - t as i64 - 2;
    let j = (m + n) as i64;
    binomial_signed(x, j - 2) - binomial_signed(x, j - 1)
}

/// Class 10 in the `2n` cube against `(0, n, n)`-Magog trapezoids.
pub fn tsscpp_magog_check(n: usize) -> bool {
    let dims = match BoxDims::cube(2 * n) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let cls = SymmetryClass::new(10).expect("class 10 exists");
    let magog = match enumerate_magog(0, n, n) {
        Ok(v) => v.len(),
        Err(_) => return false,
    };
    enumerate_class(cls, dims).count() == magog
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::tsscpp_count;
    use std::collections::HashSet;

    fn asm6() -> Vec<Vec<i64>> {
        vec![
            vec![0, 0, 1, 0, 0, 0],
            vec![1, 0, -1, 1, 0, 0],
            vec![0, 0, 1, -1, 0, 1],
            vec![0, 1, -1, 1, 0, 0],
            vec![0, 0, 1, -1, 1, 0],
            vec![0, 0, 0, 1, 0, 0],
        ]
    }

    fn triangle6() -> Vec<Vec<u32>> {
        vec![
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 2, 4, 5, 6],
            vec![2, 3, 5, 6],
            vec![2, 4, 5],
            vec![3, 5],
            vec![4],
        ]
    }

    /// Independent oracle: every `{-1,0,1}` matrix, filtered.
    fn brute_asm_count(n: usize) -> usize {
        let cells = n * n;
        (0..3usize.pow(cells as u32))
            .filter(|&code| {
                let mut c = code;
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let d = (c % 3) as i64 - 1;
                                c /= 3;
                                d
                            })
                            .collect()
                    })
                    .collect();
                validate_asm(&m)
            })
            .count()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_asm(&asm6()));
        for n in 1..5 {
            assert!(validate_asm(&Asm::identity(n).rows()));
        }
        assert!(!validate_asm(&[vec![-1]]));
        assert!(!validate_asm(&[vec![1, 1], vec![0, 0]]));
        assert!(!validate_asm(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 1, 0]]));
    }

    #[test]
    fn asm6_to_triangle() {
        let a = Asm::new(asm6()).unwrap();
        let t = asm_to_mt(&a);
        assert_eq!(t.rows(), triangle6().as_slice());
        assert_eq!(mt_to_asm(&t).unwrap(), a);
    }

    #[test]
    fn identity_triangle() {
        let t = asm_to_mt(&Asm::identity(3));
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![2, 3], vec![3]]);
    }

    #[test]
    fn asm_counts_and_round_trips() {
        let expected = [1, 2, 7, 42];
        for n in 1..=4 {
            let all: Vec<Asm> = enumerate_asm(n).collect();
            assert_eq!(all.len(), expected[n - 1]);
            assert_eq!(BigInt::from(all.len()), tsscpp_count(n));
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            for a in &all {
                assert!(validate_asm(&a.rows()));
                let t = asm_to_mt(a);
                assert_eq!(&mt_to_asm(&t).unwrap(), a);
                assert_eq!(asm_to_mt(&mt_to_asm(&t).unwrap()), t);
            }
        }
        for n in 1..=3 {
            assert_eq!(brute_asm_count(n), expected[n - 1]);
        }
    }

    #[test]
    fn triangle_validation() {
        assert!(MonotoneTriangle::new(vec![vec![1, 2], vec![3]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1, 2], vec![0]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![2, 1], vec![1]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1, 2, 3], vec![1, 3], vec![3]]).is_ok());
        assert!(MonotoneTriangle::new(vec![vec![1, 2, 3], vec![1, 3], vec![4]]).is_err());
    }

    #[test]
    fn trapezoid_examples() {
        assert_eq!(enumerate_magog(0, 1, 1).unwrap().len(), 1);
        assert_eq!(enumerate_gog(0, 1, 1).unwrap().len(), 1);
        assert_eq!(enumerate_magog(0, 2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_gog(0, 2, 2).unwrap().len(), 2);
        assert!(enumerate_gog(0, 2, 3).is_err());
        assert!(enumerate_magog(0, 0, 0).is_err());
        for n in 1..=4 {
            assert_eq!(enumerate_gog(0, n, n).unwrap().len(), enumerate_asm(n).count());
        }
    }

    #[test]
    fn gog_k1_example() {
        let gogs = enumerate_gog(1, 2, 1).unwrap();
        let mut stats: Vec<(u32, u32)> = gogs
            .iter()
            .map(|g| gog_stats(g, OverlapConvention::Both))
            .collect();
        stats.sort();
        assert_eq!(stats, vec![(0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]);
        let magogs = enumerate_magog(1, 2, 1).unwrap();
        let rows: Vec<Vec<u32>> = magogs.iter().map(|t| t.rows()[0].clone()).collect();
        assert_eq!(rows, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 2], vec![2, 3]]);
    }

    #[test]
    fn overlap_conventions_on_single_cell() {
        let t = &enumerate_magog(0, 1, 1).unwrap()[0];
        assert_eq!(magog_stats(t, OverlapConvention::Both), (1, 1));
        assert_eq!(magog_stats(t, OverlapConvention::MaxOnly), (1, 0));
        assert_eq!(magog_stats(t, OverlapConvention::MinOnly), (0, 1));
    }

    #[test]
    fn conjecture_examples() {
        let c = conjecture_tables(0, 3, 3, OverlapConvention::Both).unwrap();
        assert_eq!(c.magog.total(), 7.into());
        assert_eq!(c.gog.total(), 7.into());
        assert!(c.equal());
        let c = conjecture_tables(1, 2, 1, OverlapConvention::Both).unwrap();
        assert_eq!(c.magog.total(), 5.into());
        assert!(c.equal());
        assert!(conjecture_tables(0, 2, 3, OverlapConvention::Both).is_err());
        let v = c.to_json();
        assert_eq!(v["params"]["n"], 2);
        assert_eq!(v["equal"], true);
    }

    #[test]
    fn k1_examples() {
        assert_eq!(k1_count(1, 2, 0, 2), 1.into());
        assert_eq!(k1_count(1, 2, 0, 0), 0.into());
        assert_eq!(k1_count(1, 2, 1, 1), 1.into());
        // (1,1): a single entry a1 <= 2 is never both a Maximum and a Minimum
        assert_eq!(k1_count(1, 1, 1, 1), 0.into());
    }

    #[test]
    fn k1_formula_matches_enumeration() {
        for m in 1..=3 {
            for n in 1..=5 {
                let c = conjecture_tables(m, n, 1, OverlapConvention::Both).unwrap();
                let observed = c.gog.swapped();
                assert!(observed.is_symmetric());
                for s in 0..=n {
                    for t in 0..=n {
                        assert_eq!(observed.get(s as u32, t as u32), k1_count(m, n, s, t), "m={m} n={n} s={s} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn tsscpp_small() {
        assert!(tsscpp_magog_check(1));
        assert!(tsscpp_magog_check(2));
    }
}
