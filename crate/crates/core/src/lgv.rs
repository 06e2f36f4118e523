//! Nonintersecting lattice paths and the Lindström-Gessel-Viennot determinant.
//!
//! A plane partition in an `a x b x c` box becomes `b` paths, `P_j` running
//! from `(-j, j)` to `(a - j, c + j)` with `a` Right and `c` Up steps. The
//! height of the `t`-th Right step of `P_j` is the entry in row `a + 1 - t` of
//! column `b + 1 - j`, so the empty pile is the family with every Right step
//! first and the full pile the family with every Up step first.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{binomial, binomial_signed};
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::plane::{BoxDims, PlanePartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: LatticePoint,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: LatticePoint, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Every lattice point visited, starting point included.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::Right => p.x += 1,
                Step::Up => p.y += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> LatticePoint {
        *self.points().last().unwrap()
    }

    /// Heights (number of Up steps already taken) of the Right steps, in order.
    pub fn right_step_heights(&self) -> Vec<u32> {
        let mut up = 0;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::Right => out.push(up),
                Step::Up => up += 1,
            }
        }
        out
    }

    fn from_right_heights(start: LatticePoint, heights: &[u32], ups: u32) -> LatticePath {
        let mut steps = Vec::with_capacity(heights.len() + ups as usize);
        let mut up = 0;
        for &h in heights {
            while up < h {
                steps.push(Step::Up);
                up += 1;
            }
            steps.push(Step::Right);
        }
        while up < ups {
            steps.push(Step::Up);
            up += 1;
        }
        LatticePath::new(start, steps)
    }
}

/// Start point followed by the step word, e.g. `(0,2) RRURU`.
impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.start)?;
        for s in &self.steps {
            f.write_str(match s {
                Step::Right => "R",
                Step::Up => "U",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn new(paths: Vec<LatticePath>) -> Self {
        PathFamily { paths }
    }

    /// No lattice point is shared by two paths.
    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = HashSet::new();
        for p in &self.paths {
            for pt in p.points() {
                if !seen.insert(pt) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.paths.iter().enumerate() {
            writeln!(f, "P{} {}", k + 1, p)?;
        }
        Ok(())
    }
}

/// Number of Right/Up paths from `a` to `e`.
pub fn path_count(a: LatticePoint, e: LatticePoint) -> BigInt {
    let dx = e.x - a.x;
    let dy = e.y - a.y;
    if dx < 0 || dy < 0 {
        return BigInt::from(0);
    }
    binomial((dx + dy) as u64, dx as u64)
}

/// `det(path_count(A_j -> E_i))` over the given endpoints.
pub fn lgv_determinant(starts: &[LatticePoint], ends: &[LatticePoint]) -> Result<BigInt> {
    if starts.len() != ends.len() {
        return Err(Error::DimensionMismatch(starts.len(), ends.len()));
    }
    let m: Vec<Vec<BigInt>> = ends
        .iter()
        .map(|&e| starts.iter().map(|&a| path_count(a, e)).collect())
        .collect();
    Ok(determinant(&m))
}

/// Start points `A_i = (-i, i)` for `i = 1..=b`.
pub fn box_starts(dims: BoxDims) -> Vec<LatticePoint> {
    (1..=dims.b as i64).map(|i| LatticePoint::new(-i, i)).collect()
}

/// End points `E_i = (a - i, c + i)` for `i = 1..=b`.
pub fn box_ends(dims: BoxDims) -> Vec<LatticePoint> {
    let (a, c) = (dims.a as i64, dims.c as i64);
    (1..=dims.b as i64)
        .map(|i| LatticePoint::new(a - i, c + i))
        .collect()
}

/// Determinant of the `b x b` matrix `binom(a + c, a - i + j)`.
pub fn box_det_count(dims: BoxDims) -> BigInt {
    let (a, b, c) = (dims.a as i64, dims.b as i64, dims.c as i64);
    let m: Vec<Vec<BigInt>> = (1..=b)
        .map(|i| (1..=b).map(|j| binomial_signed(a + c, a - i + j)).collect())
        .collect();
    determinant(&m)
}

pub fn pp_to_paths(pp: &PlanePartition, dims: BoxDims) -> Result<PathFamily> {
    let padded = pp.padded(dims)?;
    let (a, b) = (dims.a, dims.b);
    let paths = (1..=b)
        .map(|j| {
            let col = b - j;
            let heights: Vec<u32> = (1..=a).map(|t| padded.get(a - t, col)).collect();
            LatticePath::from_right_heights(LatticePoint::new(-(j as i64), j as i64), &heights, dims.c)
        })
        .collect();
    Ok(PathFamily::new(paths))
}

pub fn paths_to_pp(f: &PathFamily, dims: BoxDims) -> Result<PlanePartition> {
    let (a, b) = (dims.a, dims.b);
    if f.paths.len() != b {
        return Err(Error::InvalidPathFamily(format!(
            "expected {b} paths, found {}",
            f.paths.len()
        )));
    }
    let starts = box_starts(dims);
    let ends = box_ends(dims);
    for (j, p) in f.paths.iter().enumerate() {
        if p.start != starts[j] || p.end() != ends[j] {
            return Err(Error::InvalidPathFamily(format!(
                "path {} runs {} -> {}, expected {} -> {}",
                j + 1,
                p.start,
                p.end(),
                starts[j],
                ends[j]
            )));
        }
    }
    if !f.is_nonintersecting() {
        return Err(Error::InvalidPathFamily("paths intersect".into()));
    }
    let mut cells = vec![0u32; a * b];
    for (j, p) in f.paths.iter().enumerate() {
        let col = b - 1 - j;
        for (t, h) in p.right_step_heights().into_iter().enumerate() {
            cells[(a - 1 - t) * b + col] = h;
        }
    }
    PlanePartition::from_grid(a, b, cells)
}

fn all_paths(start: LatticePoint, rights: usize, ups: usize) -> Vec<LatticePath> {
    fn rec(steps: &mut Vec<Step>, r: usize, u: usize, start: LatticePoint, out: &mut Vec<LatticePath>) {
        if r == 0 && u == 0 {
            out.push(LatticePath::new(start, steps.clone()));
            return;
        }
        if r > 0 {
            steps.push(Step::Right);
            rec(steps, r - 1, u, start, out);
            steps.pop();
        }
        if u > 0 {
            steps.push(Step::Up);
            rec(steps, r, u - 1, start, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), rights, ups, start, &mut out);
    out
}

/// All nonintersecting families for the box, by backtracking over raw
/// lattice paths (no reference to plane partitions).
pub fn enumerate_path_families(dims: BoxDims) -> Vec<PathFamily> {
    let candidates: Vec<Vec<LatticePath>> = box_starts(dims)
        .into_iter()
        .map(|s| all_paths(s, dims.a, dims.c as usize))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<LatticePath> = Vec::new();
    let mut used: HashSet<LatticePoint> = HashSet::new();
    fn rec(
        level: usize,
        candidates: &[Vec<LatticePath>],
        chosen: &mut Vec<LatticePath>,
        used: &mut HashSet<LatticePoint>,
        out: &mut Vec<PathFamily>,
    ) {
        if level == candidates.len() {
            out.push(PathFamily::new(chosen.clone()));
            return;
        }
        for p in &candidates[level] {
            let pts = p.points();
            if pts.iter().any(|q| used.contains(q)) {
                continue;
            }
            used.extend(pts.iter().copied());
            chosen.push(p.clone());
            rec(level + 1, candidates, chosen, used, out);
            chosen.pop();
            for q in &pts {
                used.remove(q);
            }
        }
    }
    rec(0, &candidates, &mut chosen, &mut used, &mut out);
    out
}
