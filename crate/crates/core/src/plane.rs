//! Plane partitions, box containment, statistics and brute-force enumerators.
//!
//! A [`PlanePartition`] is stored as a rectangular grid padded with zeros.
//! Two plane partitions compare equal when they agree after trailing zero
//! rows and columns are trimmed, so the padding never leaks into equality,
//! hashing or ordering.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// An `a x b x c` box: at most `a` rows, `b` columns, entries at most `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxDims {
    pub a: usize,
    pub b: usize,
    pub c: u32,
}

impl BoxDims {
    pub fn new(a: usize, b: usize, c: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidBox { a, b, c });
        }
        Ok(BoxDims { a, b, c })
    }

    pub fn cube(side: usize) -> Result<Self> {
        Self::new(side, side, side as u32)
    }

    pub fn volume(&self) -> u64 {
        self.a as u64 * self.b as u64 * u64::from(self.c)
    }

    pub fn cells(&self) -> usize {
        self.a * self.b
    }
}

impl fmt::Display for BoxDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone)]
pub struct PlanePartition {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl PlanePartition {
    /// Builds a plane partition from (possibly ragged) rows; short rows are
    /// padded with zeros.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut cells = vec![0; nrows * ncols];
        for (i, row) in rows.iter().enumerate() {
            cells[i * ncols..i * ncols + row.len()].copy_from_slice(row);
        }
        let pp = PlanePartition {
            rows: nrows,
            cols: ncols,
            cells,
        };
        pp.validate()?;
        Ok(pp)
    }

    pub fn zero(dims: BoxDims) -> Self {
        PlanePartition {
            rows: dims.a,
            cols: dims.b,
            cells: vec![0; dims.cells()],
        }
    }

    /// The box filled to height `c` everywhere.
    pub fn full(dims: BoxDims) -> Self {
        PlanePartition {
            rows: dims.a,
            cols: dims.b,
            cells: vec![dims.c; dims.cells()],
        }
    }

    /// Grid constructor that validates monotonicity.
    pub fn from_grid(rows: usize, cols: usize, cells: Vec<u32>) -> Result<Self> {
        assert_eq!(cells.len(), rows * cols);
        let pp = PlanePartition { rows, cols, cells };
        pp.validate()?;
        Ok(pp)
    }

    pub(crate) fn from_grid_unchecked(rows: usize, cols: usize, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), rows * cols);
        PlanePartition { rows, cols, cells }
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if j > 0 && v > self.get(i, j - 1) {
                    return Err(Error::NotMonotone {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                        neighbor: "left neighbour",
                        bound: self.get(i, j - 1),
                    });
                }
                if i > 0 && v > self.get(i - 1, j) {
                    return Err(Error::NotMonotone {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                        neighbor: "upper neighbour",
                        bound: self.get(i - 1, j),
                    });
                }
            }
        }
        Ok(())
    }

    /// Stored grid height (including zero padding).
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Stored grid width (including zero padding).
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(i, j)`; zero outside the stored grid.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i < self.rows && j < self.cols {
            self.cells[i * self.cols + j]
        } else {
            0
        }
    }

    pub fn size(&self) -> u64 {
        self.cells.iter().map(|&v| u64::from(v)).sum()
    }

    /// Row lengths (number of positive entries per row), zero rows dropped.
    pub fn shape(&self) -> Partition {
        let lens: Vec<u32> = (0..self.rows)
            .map(|i| (0..self.cols).take_while(|&j| self.get(i, j) > 0).count() as u32)
            .collect();
        Partition::from_padded(&lens).expect("row lengths of a plane partition decrease")
    }

    /// Sum of the entries `π[l][l+i]`; `i = 0` is the trace.
    pub fn i_trace(&self, i: i64) -> u64 {
        (0..self.rows as i64)
            .filter_map(|l| {
                let j = l + i;
                (j >= 0).then(|| u64::from(self.get(l as usize, j as usize)))
            })
            .sum()
    }

    pub fn trace(&self) -> u64 {
        self.i_trace(0)
    }

    /// Sum of the entries on or below the main diagonal.
    pub fn half_size(&self) -> u64 {
        (0..self.rows)
            .flat_map(|i| (0..=i.min(self.cols.saturating_sub(1))).map(move |j| (i, j)))
            .map(|(i, j)| u64::from(self.get(i, j)))
            .sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.get(0, 0)
    }

    /// Number of nonzero rows and columns.
    pub fn extent(&self) -> (usize, usize) {
        let shape = self.shape();
        (shape.len(), shape.part(0) as usize)
    }

    pub fn fits(&self, dims: BoxDims) -> bool {
        let (r, c) = self.extent();
        r <= dims.a && c <= dims.b && self.max_entry() <= dims.c
    }

    /// The smallest box containing `self` (sides at least 1).
    pub fn tight_box(&self) -> BoxDims {
        let (r, c) = self.extent();
        BoxDims {
            a: r.max(1),
            b: c.max(1),
            c: self.max_entry(),
        }
    }

    /// Copy re-padded to exactly `dims.a x dims.b`.
    pub fn padded(&self, dims: BoxDims) -> Result<Self> {
        if !self.fits(dims) {
            return Err(Error::DoesNotFit {
                a: dims.a,
                b: dims.b,
                c: dims.c,
            });
        }
        let mut cells = Vec::with_capacity(dims.cells());
        for i in 0..dims.a {
            for j in 0..dims.b {
                cells.push(self.get(i, j));
            }
        }
        Ok(PlanePartition::from_grid_unchecked(dims.a, dims.b, cells))
    }

    /// Rows with trailing zeros and trailing empty rows removed.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let shape = self.shape();
        shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len as usize).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Full stored grid, padding included.
    pub fn grid(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| self.cells[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    /// Reflection in the main diagonal.
    pub fn transpose(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                cells.push(self.get(i, j));
            }
        }
        PlanePartition::from_grid_unchecked(self.cols, self.rows, cells)
    }

    fn key(&self) -> Vec<Vec<u32>> {
        self.rows()
    }
}

impl PartialEq for PlanePartition {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for PlanePartition {}

impl Hash for PlanePartition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for PlanePartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlanePartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// One row per line, space separated; an empty partition prints as nothing.
impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Parses whitespace separated integer rows. Reading stops at the first blank
/// line after some content; leading blank lines and `#` comments are skipped.
pub fn parse_int_rows(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            if rows.is_empty() {
                continue;
            }
            break;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| Error::Parse {
                    line: n + 1,
                    msg: format!("`{tok}` is not an integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

impl FromStr for PlanePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_int_rows(s)?;
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .map(|v| {
                        u32::try_from(v).map_err(|_| Error::Parse {
                            line: i + 1,
                            msg: format!("entry {v} is not a non-negative integer"),
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PlanePartition::new(rows)
    }
}

/// Entries weakly increasing along rows and columns, on a partition shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReversePlanePartition {
    shape: Partition,
    entries: Vec<Vec<u32>>,
}

impl ReversePlanePartition {
    pub fn new(shape: Partition, entries: Vec<Vec<u32>>) -> Result<Self> {
        let fits = entries.len() == shape.len()
            && entries
                .iter()
                .zip(shape.parts())
                .all(|(row, &len)| row.len() == len as usize);
        if !fits {
            return Err(Error::Parse {
                line: 0,
                msg: "entries do not match the shape".into(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if j > 0 && v < row[j - 1] {
                    return Err(Error::NotMonotone {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                        neighbor: "left neighbour (reverse)",
                        bound: row[j - 1],
                    });
                }
                if i > 0 && v < entries[i - 1][j] {
                    return Err(Error::NotMonotone {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                        neighbor: "upper neighbour (reverse)",
                        bound: entries[i - 1][j],
                    });
                }
            }
        }
        Ok(ReversePlanePartition { shape, entries })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn size(&self) -> u64 {
        self.entries.iter().flatten().map(|&v| u64::from(v)).sum()
    }

    /// Sum over the cells `(l, l+i)`.
    pub fn i_trace(&self, i: i64) -> u64 {
        self.shape
            .cells()
            .filter(|&(r, c)| c as i64 - r as i64 == i)
            .map(|(r, c)| u64::from(self.entries[r][c]))
            .sum()
    }
}

/// All reverse plane partitions of `shape` with total size at most `max_size`.
pub fn reverse_plane_partitions(shape: &Partition, max_size: u64) -> Vec<ReversePlanePartition> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut entries: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();

    fn go(
        k: usize,
        used: u64,
        max_size: u64,
        cells: &[(usize, usize)],
        entries: &mut Vec<Vec<u32>>,
        shape: &Partition,
        out: &mut Vec<ReversePlanePartition>,
    ) {
        if k == cells.len() {
            out.push(ReversePlanePartition {
                shape: shape.clone(),
                entries: entries.clone(),
            });
            return;
        }
        let (i, j) = cells[k];
        let lo = {
            let left = if j > 0 { entries[i][j - 1] } else { 0 };
            let up = if i > 0 { entries[i - 1][j] } else { 0 };
            left.max(up)
        };
        let mut v = lo;
        while used + u64::from(v) <= max_size {
            entries[i][j] = v;
            go(k + 1, used + u64::from(v), max_size, cells, entries, shape, out);
            v += 1;
        }
        entries[i][j] = 0;
    }

    go(0, 0, max_size, &cells, &mut entries, shape, &mut out);
    out
}

/// Lexicographically descending backtracking over a rectangular grid whose
/// entries are bounded by the up and left neighbours, by `cap`, and
/// optionally by a total budget.
#[derive(Debug, Clone)]
pub struct BoxEnumerator {
    rows: usize,
    cols: usize,
    cap: u32,
    budget: Option<u64>,
    cells: Vec<u32>,
    started: bool,
    done: bool,
    skip_zero: bool,
}

impl BoxEnumerator {
    fn new(rows: usize, cols: usize, cap: u32, budget: Option<u64>, skip_zero: bool) -> Self {
        BoxEnumerator {
            rows,
            cols,
            cap,
            budget,
            cells: vec![0; rows * cols],
            started: false,
            done: false,
            skip_zero,
        }
    }

    fn max_at(&self, p: usize, spent: u64) -> u32 {
        let (i, j) = (p / self.cols, p % self.cols);
        let mut m = self.cap;
        if i > 0 {
            m = m.min(self.cells[p - self.cols]);
        }
        if j > 0 {
            m = m.min(self.cells[p - 1]);
        }
        if let Some(b) = self.budget {
            m = m.min((b - spent).min(u64::from(u32::MAX)) as u32);
        }
        m
    }

    /// Greedily fills positions `from..` with their largest admissible values.
    fn fill_from(&mut self, from: usize) {
        let mut spent: u64 = self.cells[..from].iter().map(|&v| u64::from(v)).sum();
        for p in from..self.cells.len() {
            let v = self.max_at(p, spent);
            self.cells[p] = v;
            spent += u64::from(v);
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.fill_from(0);
            return true;
        }
        match self.cells.iter().rposition(|&v| v > 0) {
            Some(p) => {
                self.cells[p] -= 1;
                self.fill_from(p + 1);
                true
            }
            None => false,
        }
    }
}

impl Iterator for BoxEnumerator {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        loop {
            if self.done {
                return None;
            }
            if !self.advance() {
                self.done = true;
                return None;
            }
            if self.skip_zero && self.cells.iter().all(|&v| v == 0) {
                continue;
            }
            return Some(PlanePartition::from_grid_unchecked(
                self.rows,
                self.cols,
                self.cells.clone(),
            ));
        }
    }
}

/// Every plane partition in the box, lexicographically descending in
/// row-major order (the full box first, the empty one last).
pub fn enumerate_box(dims: BoxDims) -> BoxEnumerator {
    BoxEnumerator::new(dims.a, dims.b, dims.c, None, false)
}

/// Every plane partition with `1 <= |π| <= max_size`.
pub fn enumerate_by_size(max_size: u32) -> BoxEnumerator {
    let n = max_size as usize;
    BoxEnumerator::new(n, n, max_size, Some(u64::from(max_size)), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn pile() -> PlanePartition {
        PlanePartition::new(vec![vec![5, 3, 3, 2], vec![5, 1, 1], vec![3, 1]]).unwrap()
    }

    fn trace_example() -> PlanePartition {
        "4 3 2 2\n4 3 1 1\n2 2 1 1\n1 1\n1 1\n".parse().unwrap()
    }

    #[test]
    fn size_examples() {
        assert_eq!(pile().size(), 24);
        assert_eq!(PlanePartition::new(vec![]).unwrap().size(), 0);
        assert_eq!(PlanePartition::new(vec![vec![2, 1], vec![1]]).unwrap().size(), 4);
    }

    #[test]
    fn shape_examples() {
        assert_eq!(pile().shape().parts(), &[4, 3, 2]);
        assert!(PlanePartition::new(vec![]).unwrap().shape().is_empty());
        let pp = PlanePartition::new(vec![vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(pp.shape().parts(), &[1]);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_example().i_trace(0), 8);
        assert_eq!(pile().i_trace(4), 0);
        let pp = PlanePartition::new(vec![vec![2, 1], vec![1]]).unwrap();
        assert_eq!(pp.i_trace(1), 1);
        assert_eq!(pp.i_trace(-1), 1);
    }

    #[test]
    fn half_size_examples() {
        let pp = PlanePartition::new(vec![vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(pp.half_size(), 4);
        assert_eq!(PlanePartition::new(vec![]).unwrap().half_size(), 0);
        assert_eq!(PlanePartition::new(vec![vec![3]]).unwrap().half_size(), 3);
    }

    #[test]
    fn padding_does_not_affect_equality() {
        let a = PlanePartition::new(vec![vec![2, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]).unwrap();
        let b = PlanePartition::new(vec![vec![2, 1], vec![1]]).unwrap();
        assert_eq!(a, b);
        let mut set = HashSet::new();
        set.insert(a);
        assert!(set.contains(&b));
    }

    #[test]
    fn parser_names_offending_cell() {
        let err = "3 2\n1 4\n".parse::<PlanePartition>().unwrap_err();
        assert!(matches!(err, Error::NotMonotone { row: 2, col: 2, .. }), "{err}");
        assert!(err.to_string().contains("(2,2)"));
        let err = "3 x\n".parse::<PlanePartition>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = "1 -1\n".parse::<PlanePartition>().unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn parser_stops_at_blank_line() {
        let pp: PlanePartition = "\n2 1\n1\n\n9 9 9\n".parse().unwrap();
        assert_eq!(pp.rows(), vec![vec![2, 1], vec![1]]);
        assert_eq!(pp.to_string().parse::<PlanePartition>().unwrap(), pp);
    }

    #[test]
    fn enumerate_box_counts() {
        let count = |a, b, c| enumerate_box(BoxDims::new(a, b, c).unwrap()).count();
        assert_eq!(count(1, 1, 1), 2);
        assert_eq!(count(2, 2, 2), 20);
        assert_eq!(count(3, 3, 3), 980);
        assert_eq!(count(1, 3, 0), 1);
    }

    #[test]
    fn enumerate_box_order_and_validity() {
        let dims = BoxDims::new(2, 3, 2).unwrap();
        let all: Vec<PlanePartition> = enumerate_box(dims).collect();
        assert_eq!(all.first().unwrap(), &PlanePartition::full(dims));
        assert_eq!(all.last().unwrap(), &PlanePartition::zero(dims));
        let grids: Vec<Vec<Vec<u32>>> = all.iter().map(|p| p.grid()).collect();
        assert!(grids.windows(2).all(|w| w[0] > w[1]));
        for pp in &all {
            assert!(pp.fits(dims));
            assert!(PlanePartition::from_grid(pp.nrows(), pp.ncols(), pp.cells.clone()).is_ok());
        }
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
    }

    #[test]
    fn enumerate_box_count_is_symmetric() {
        for a in 1..=3usize {
            for b in 1..=3usize {
                for c in 1..=3u32 {
                    let n = enumerate_box(BoxDims::new(a, b, c).unwrap()).count();
                    let perms = [(a, c as usize, b as u32), (b, a, c), (c as usize, b, a as u32)];
                    for (x, y, z) in perms {
                        assert_eq!(enumerate_box(BoxDims::new(x, y, z).unwrap()).count(), n);
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_by_size_counts() {
        assert_eq!(enumerate_by_size(1).count(), 1);
        let two: Vec<_> = enumerate_by_size(2).collect();
        assert_eq!(two.len(), 4);
        assert_eq!(two.iter().filter(|p| p.size() == 2).count(), 3);
        assert_eq!(enumerate_by_size(3).count(), 10);
        assert_eq!(enumerate_by_size(0).count(), 0);
    }

    #[test]
    fn traces_sum_to_size() {
        for pp in enumerate_by_size(6) {
            let n = pp.nrows() as i64;
            let total: u64 = (-n..=n).map(|i| pp.i_trace(i)).sum();
            assert_eq!(total, pp.size());
        }
    }

    #[test]
    fn rpp_enumeration() {
        let shape = Partition::new(vec![1]).unwrap();
        assert_eq!(reverse_plane_partitions(&shape, 3).len(), 4);
        let shape = Partition::new(vec![2, 1]).unwrap();
        for rpp in reverse_plane_partitions(&shape, 4) {
            assert!(rpp.size() <= 4);
            assert!(rpp.get(0, 0) <= rpp.get(0, 1) && rpp.get(0, 0) <= rpp.get(1, 0));
        }
    }
}
