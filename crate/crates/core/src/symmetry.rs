//! Reflection, rotation and complementation of plane partitions, and the ten
//! symmetry classes they generate.
//!
//! Membership tests compose the three operations literally. Enumeration runs
//! over unit cubes: the symmetry group of a class splits the cubes of the box
//! into orbits (complementation pairs a cube with the *absence* of its image),
//! and a backtracking search assigns orbits while propagating downward
//! closure. Forced cubes are never branched on.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::plane::{BoxDims, PlanePartition};
use crate::poly::QPolynomial;

/// A set of unit cubes `(i, j, k)`, 1-indexed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CubeSet {
    cells: BTreeSet<(usize, usize, usize)>,
}

impl CubeSet {
    pub fn new<I: IntoIterator<Item = (usize, usize, usize)>>(cells: I) -> Self {
        CubeSet {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cube: (usize, usize, usize)) -> bool {
        self.cells.contains(&cube)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize, usize)> {
        self.cells.iter()
    }

    /// Every coordinate decrement that stays positive lands back in the set.
    pub fn is_downward_closed(&self) -> bool {
        self.first_gap().is_none()
    }

    fn first_gap(&self) -> Option<(usize, usize, usize)> {
        self.cells.iter().copied().find(|&(i, j, k)| {
            (i > 1 && !self.contains((i - 1, j, k)))
                || (j > 1 && !self.contains((i, j - 1, k)))
                || (k > 1 && !self.contains((i, j, k - 1)))
                || i == 0
                || j == 0
                || k == 0
        })
    }

    pub fn fits(&self, dims: BoxDims) -> bool {
        self.cells
            .iter()
            .all(|&(i, j, k)| i <= dims.a && j <= dims.b && k <= dims.c as usize)
    }
}

/// `(i, j, k)` belongs to the pile iff `π[i][j] >= k`.
pub fn to_cubes(pp: &PlanePartition) -> CubeSet {
    let mut cells = BTreeSet::new();
    for i in 0..pp.nrows() {
        for j in 0..pp.ncols() {
            for k in 1..=pp.get(i, j) as usize {
                cells.insert((i + 1, j + 1, k));
            }
        }
    }
    CubeSet { cells }
}

pub fn from_cubes(set: &CubeSet) -> Result<PlanePartition> {
    if let Some((i, j, k)) = set.first_gap() {
        return Err(Error::NotDownwardClosed(i, j, k as u32));
    }
    let rows = set.cells.iter().map(|c| c.0).max().unwrap_or(0);
    let cols = set.cells.iter().map(|c| c.1).max().unwrap_or(0);
    let mut cells = vec![0u32; rows * cols];
    for &(i, j, k) in &set.cells {
        let v = &mut cells[(i - 1) * cols + (j - 1)];
        *v = (*v).max(k as u32);
    }
    PlanePartition::from_grid(rows, cols, cells)
}

/// `(π[i][j]) -> (π[j][i])`.
pub fn reflect(pp: &PlanePartition) -> PlanePartition {
    pp.transpose()
}

/// The 120 degree rotation about the `(t, t, t)` axis: `(i, j, k) -> (j, k, i)`.
pub fn rotate(set: &CubeSet) -> CubeSet {
    CubeSet::new(set.cells.iter().map(|&(i, j, k)| (j, k, i)))
}

/// The cubes left over in the box, turned upside down:
/// `{(a+1-i, b+1-j, c+1-k) : (i, j, k) not in S}`.
pub fn complement(set: &CubeSet, dims: BoxDims) -> Result<CubeSet> {
    if !set.fits(dims) {
        return Err(Error::DoesNotFit {
            a: dims.a,
            b: dims.b,
            c: dims.c,
        });
    }
    let c = dims.c as usize;
    let mut cells = BTreeSet::new();
    for i in 1..=dims.a {
        for j in 1..=dims.b {
            for k in 1..=c {
                if !set.contains((i, j, k)) {
                    cells.insert((dims.a + 1 - i, dims.b + 1 - j, c + 1 - k));
                }
            }
        }
    }
    Ok(CubeSet { cells })
}

/// Complement at the plane-partition level.
pub fn complement_pp(pp: &PlanePartition, dims: BoxDims) -> Result<PlanePartition> {
    let comp = complement(&to_cubes(pp), dims)?;
    Ok(from_cubes(&comp)
        .expect("complement of a pile is a pile")
        .padded(dims)
        .expect("complement fits the box"))
}

/// One of the ten symmetry classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryClass(u8);

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 10] = [
        SymmetryClass(1),
        SymmetryClass(2),
        SymmetryClass(3),
        SymmetryClass(4),
        SymmetryClass(5),
        SymmetryClass(6),
        SymmetryClass(7),
        SymmetryClass(8),
        SymmetryClass(9),
        SymmetryClass(10),
    ];

    pub fn new(id: u8) -> Result<Self> {
        if (1..=10).contains(&id) {
            Ok(SymmetryClass(id))
        } else {
            Err(Error::InvalidClass(id))
        }
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn name(self) -> &'static str {
        match self.0 {
            1 => "unrestricted",
            2 => "symmetric",
            3 => "cyclically symmetric",
            4 => "totally symmetric",
            5 => "self-complementary",
            6 => "transpose-complementary",
            7 => "symmetric self-complementary",
            8 => "cyclically symmetric transpose-complementary",
            9 => "cyclically symmetric self-complementary",
            _ => "totally symmetric self-complementary",
        }
    }

    fn symmetric(self) -> bool {
        matches!(self.0, 2 | 4 | 7 | 10)
    }

    fn cyclic(self) -> bool {
        matches!(self.0, 3 | 4 | 8 | 9 | 10)
    }

    fn self_complementary(self) -> bool {
        matches!(self.0, 5 | 7 | 9 | 10)
    }

    fn transpose_complementary(self) -> bool {
        matches!(self.0, 6 | 8)
    }

    /// Whether the class can have members in `dims` at all.
    pub fn admits(self, dims: BoxDims) -> bool {
        let square = dims.a == dims.b;
        let cube = square && dims.a == dims.c as usize;
        if (self.symmetric() || self.transpose_complementary()) && !square {
            return false;
        }
        if self.cyclic() && !cube {
            return false;
        }
        true
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class {} ({})", self.0, self.name())
    }
}

/// Statistic used as the exponent of `q` in class generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    /// `|π|`
    Size,
    /// `|π|_0`, the sum over cells on or below the diagonal.
    HalfSize,
    /// Number of orbits of cubes under permutations of the coordinates,
    /// i.e. cubes `(i, j, k)` with `i <= j <= k`.
    Orbit,
}

impl Weight {
    pub fn of(self, pp: &PlanePartition) -> u64 {
        match self {
            Weight::Size => pp.size(),
            Weight::HalfSize => pp.half_size(),
            Weight::Orbit => {
                let mut n = 0;
                for i in 0..pp.nrows() {
                    for j in i..pp.ncols() {
                        let h = pp.get(i, j) as usize;
                        // 1-indexed heights k with k > j
                        n += h.saturating_sub(j) as u64;
                    }
                }
                n
            }
        }
    }
}

/// Exact membership test, composed from [`reflect`], [`rotate`] and [`complement`].
pub fn is_in_class(pp: &PlanePartition, dims: BoxDims, cls: SymmetryClass) -> bool {
    if !pp.fits(dims) || !cls.admits(dims) {
        return false;
    }
    let cubes = to_cubes(pp);
    let comp = || complement(&cubes, dims).expect("pp fits the box");
    if cls.symmetric() && reflect(pp) != *pp {
        return false;
    }
    if cls.cyclic() && rotate(&cubes) != cubes {
        return false;
    }
    if cls.self_complementary() && comp() != cubes {
        return false;
    }
    if cls.transpose_complementary() {
        let tc = reflect(&from_cubes(&comp()).expect("complement is a pile"));
        if tc != *pp {
            return false;
        }
    }
    true
}

/// A symmetry generator on cube coordinates, flagging complementation.
type CubeMap = dyn Fn(usize, usize, usize) -> ((usize, usize, usize), bool);

/// Cube-level backtracking with orbit identification and closure propagation.
struct OrbitSearch {
    dims: BoxDims,
    /// orbit representative and parity per cube
    orbit: Vec<(usize, bool)>,
    members: Vec<Vec<(usize, bool)>>,
    value: Vec<Option<bool>>,
    order: Vec<usize>,
}

impl OrbitSearch {
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims.b + j) * self.dims.c as usize + k
    }

    fn coords(&self, x: usize) -> (usize, usize, usize) {
        let c = self.dims.c as usize;
        (x / c / self.dims.b, x / c % self.dims.b, x % c)
    }

    /// `None` when the symmetry constraints are contradictory by themselves.
    fn new(cls: SymmetryClass, dims: BoxDims) -> Option<Self> {
        let (a, b, c) = (dims.a, dims.b, dims.c as usize);
        let n = a * b * c;
        let mut gens: Vec<Box<CubeMap>> = Vec::new();
        if cls.symmetric() {
            gens.push(Box::new(|i, j, k| ((j, i, k), false)));
        }
        if cls.cyclic() {
            gens.push(Box::new(|i, j, k| ((j, k, i), false)));
        }
        if cls.self_complementary() {
            gens.push(Box::new(move |i, j, k| ((a - 1 - i, b - 1 - j, c - 1 - k), true)));
        }
        if cls.transpose_complementary() {
            gens.push(Box::new(move |i, j, k| ((b - 1 - j, a - 1 - i, c - 1 - k), true)));
        }

        // union-find with parity
        let mut parent: Vec<usize> = (0..n).collect();
        let mut parity = vec![false; n];
        fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
            let p = parent[x];
            if p == x {
                return (x, false);
            }
            let (r, pp) = find(parent, parity, p);
            parent[x] = r;
            parity[x] ^= pp;
            (r, parity[x])
        }
        let mut search = OrbitSearch {
            dims,
            orbit: Vec::new(),
            members: Vec::new(),
            value: vec![None; n],
            order: Vec::new(),
        };
        for x in 0..n {
            let (i, j, k) = search.coords(x);
            for g in &gens {
                let ((gi, gj, gk), flip) = g(i, j, k);
                let y = search.idx(gi, gj, gk);
                let (rx, px) = find(&mut parent, &mut parity, x);
                let (ry, py) = find(&mut parent, &mut parity, y);
                if rx == ry {
                    if px ^ py != flip {
                        return None;
                    }
                } else {
                    parent[rx] = ry;
                    parity[rx] = px ^ py ^ flip;
                }
            }
        }
        let mut members = vec![Vec::new(); n];
        let mut orbit = Vec::with_capacity(n);
        for x in 0..n {
            let (r, p) = find(&mut parent, &mut parity, x);
            orbit.push((r, p));
            members[r].push((x, p));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| {
            let (i, j, k) = search.coords(x);
            (i + j + k, x)
        });
        search.orbit = orbit;
        search.members = members;
        search.order = order;
        Some(search)
    }

    /// Assigns `x := v` and everything it forces; returns false on conflict.
    fn assign(&mut self, x: usize, v: bool, trail: &mut Vec<usize>) -> bool {
        let mut stack = vec![(x, v)];
        while let Some((x, v)) = stack.pop() {
            match self.value[x] {
                Some(cur) if cur == v => continue,
                Some(_) => return false,
                None => {}
            }
            self.value[x] = Some(v);
            trail.push(x);
            let (root, px) = self.orbit[x];
            for &(y, py) in &self.members[root] {
                if y != x {
                    stack.push((y, v ^ px ^ py));
                }
            }
            let (i, j, k) = self.coords(x);
            let (a, b, c) = (self.dims.a, self.dims.b, self.dims.c as usize);
            if v {
                if i > 0 {
                    stack.push((self.idx(i - 1, j, k), true));
                }
                if j > 0 {
                    stack.push((self.idx(i, j - 1, k), true));
                }
                if k > 0 {
                    stack.push((self.idx(i, j, k - 1), true));
                }
            } else {
                if i + 1 < a {
                    stack.push((self.idx(i + 1, j, k), false));
                }
                if j + 1 < b {
                    stack.push((self.idx(i, j + 1, k), false));
                }
                if k + 1 < c {
                    stack.push((self.idx(i, j, k + 1), false));
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &mut Vec<usize>, mark: usize) {
        for x in trail.drain(mark..) {
            self.value[x] = None;
        }
    }

    fn current(&self) -> PlanePartition {
        let (a, b, c) = (self.dims.a, self.dims.b, self.dims.c as usize);
        let mut cells = vec![0u32; a * b];
        for i in 0..a {
            for j in 0..b {
                cells[i * b + j] = (0..c)
                    .take_while(|&k| self.value[self.idx(i, j, k)] == Some(true))
                    .count() as u32;
            }
        }
        PlanePartition::from_grid_unchecked(a, b, cells)
    }

    fn run(&mut self, pos: usize, trail: &mut Vec<usize>, out: &mut Vec<PlanePartition>) {
        let next = self.order[pos..]
            .iter()
            .position(|&x| self.value[x].is_none())
            .map(|p| p + pos);
        let Some(p) = next else {
            out.push(self.current());
            return;
        };
        let x = self.order[p];
        for v in [true, false] {
            let mark = trail.len();
            if self.assign(x, v, trail) {
                self.run(p + 1, trail, out);
            }
            self.undo(trail, mark);
        }
    }
}

/// Members of `cls` inside `dims`, sorted.
pub fn enumerate_class(cls: SymmetryClass, dims: BoxDims) -> std::vec::IntoIter<PlanePartition> {
    let mut out = Vec::new();
    if cls.admits(dims) {
        if dims.c == 0 {
            // the empty pile is fixed by every operation
            out.push(PlanePartition::zero(dims));
        } else if let Some(mut search) = OrbitSearch::new(cls, dims) {
            search.run(0, &mut Vec::new(), &mut out);
        }
    }
    out.sort();
    out.into_iter()
}

/// Number of cube orbits the constrained search for `cls` branches over in
/// `dims`; zero when the class has no members there.
pub fn branch_cells(cls: SymmetryClass, dims: BoxDims) -> usize {
    if !cls.admits(dims) || dims.c == 0 {
        return 0;
    }
    OrbitSearch::new(cls, dims).map_or(0, |s| {
        s.orbit.iter().enumerate().filter(|&(x, &(r, _))| x == r).count()
    })
}

/// `Σ q^{weight(π)}` over the members of `cls` in `dims`.
pub fn class_gf(cls: SymmetryClass, dims: BoxDims, weight: Weight) -> QPolynomial {
    let mut counts: Vec<u64> = Vec::new();
    for pp in enumerate_class(cls, dims) {
        let w = weight.of(&pp) as usize;
        if counts.len() <= w {
            counts.resize(w + 1, 0);
        }
        counts[w] += 1;
    }
    QPolynomial::new(counts.into_iter().map(Into::into).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::enumerate_box;

    fn pp(rows: &[&[u32]]) -> PlanePartition {
        PlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn bx(a: usize, b: usize, c: u32) -> BoxDims {
        BoxDims::new(a, b, c).unwrap()
    }

    fn cls(id: u8) -> SymmetryClass {
        SymmetryClass::new(id).unwrap()
    }

    #[test]
    fn cube_examples() {
        assert_eq!(to_cubes(&pp(&[&[1]])), CubeSet::new([(1, 1, 1)]));
        let two = CubeSet::new([(1, 1, 1), (1, 1, 2), (1, 2, 1)]);
        assert_eq!(to_cubes(&pp(&[&[2, 1]])), two);
        assert_eq!(from_cubes(&two).unwrap(), pp(&[&[2, 1]]));
        let pile = pp(&[&[5, 3, 3, 2], &[5, 1, 1], &[3, 1]]);
        let cubes = to_cubes(&pile);
        assert_eq!(cubes.len(), 24);
        assert_eq!(from_cubes(&cubes).unwrap(), pile);
        assert!(from_cubes(&CubeSet::new([(1, 1, 2)])).is_err());
        assert!(from_cubes(&CubeSet::new([(1, 1, 1), (2, 2, 1)])).is_err());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(&pp(&[&[2, 1], &[1]])), pp(&[&[2, 1], &[1]]));
        assert_eq!(reflect(&pp(&[&[2, 2]])), pp(&[&[2], &[2]]));
        let t = reflect(&pp(&[&[5, 3, 3, 2], &[5, 1, 1], &[3, 1]]));
        assert_eq!(t.shape().parts(), &[3, 3, 2, 1]);
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(rotate(&CubeSet::default()), CubeSet::default());
        assert_eq!(rotate(&CubeSet::new([(1, 1, 1)])), CubeSet::new([(1, 1, 1)]));
        assert_eq!(
            rotate(&CubeSet::new([(1, 1, 1), (1, 1, 2)])),
            CubeSet::new([(1, 1, 1), (1, 2, 1)])
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            complement(&CubeSet::default(), bx(1, 1, 1)).unwrap(),
            CubeSet::new([(1, 1, 1)])
        );
        let full = to_cubes(&PlanePartition::full(bx(2, 2, 2)));
        assert!(complement(&full, bx(2, 2, 2)).unwrap().is_empty());
        assert_eq!(
            complement(&CubeSet::new([(1, 1, 1)]), bx(2, 1, 1)).unwrap(),
            CubeSet::new([(1, 1, 1)])
        );
        assert!(complement(&CubeSet::new([(3, 1, 1)]), bx(2, 2, 2)).is_err());
    }

    #[test]
    fn membership_examples() {
        let b = bx(2, 2, 2);
        assert!(is_in_class(&pp(&[&[2, 1], &[1, 0]]), b, cls(1)));
        assert!(is_in_class(&pp(&[&[2, 1], &[1, 0]]), b, cls(5)));
        assert!(!is_in_class(&pp(&[&[2, 2], &[1, 0]]), b, cls(2)));
        // cyclic classes need a cube
        assert!(!is_in_class(&PlanePartition::zero(bx(2, 2, 3)), bx(2, 2, 3), cls(3)));
        assert!(SymmetryClass::new(0).is_err());
        assert!(SymmetryClass::new(11).is_err());
    }

    #[test]
    fn involutions_and_rotation_order_in_small_boxes() {
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3u32 {
                    let d = bx(a, b, c);
                    for p in enumerate_box(d) {
                        assert_eq!(reflect(&reflect(&p)), p);
                        let s = to_cubes(&p);
                        let comp = complement(&s, d).unwrap();
                        assert!(comp.is_downward_closed());
                        assert_eq!(comp.len() + s.len(), d.volume() as usize);
                        assert_eq!(complement(&comp, d).unwrap(), s);
                        assert_eq!(rotate(&rotate(&rotate(&s))), s);
                        assert!(rotate(&s).is_downward_closed());
                    }
                }
            }
        }
    }

    #[test]
    fn class_relations() {
        for side in 1..=4 {
            let d = BoxDims::cube(side).unwrap();
            for p in enumerate_box(d) {
                let m = |id| is_in_class(&p, d, cls(id));
                assert_eq!(m(4), m(2) && m(3));
                if m(9) {
                    assert!(m(5) && m(3));
                }
                if m(10) {
                    assert!(m(2) && m(3) && m(5));
                }
            }
        }
    }

    #[test]
    fn branch_cell_counts() {
        assert_eq!(branch_cells(cls(1), bx(2, 3, 4)), 24);
        assert_eq!(branch_cells(cls(2), bx(2, 2, 1)), 3);
        assert_eq!(branch_cells(cls(3), bx(2, 2, 1)), 0);
        assert_eq!(branch_cells(cls(5), bx(1, 1, 2)), 1);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_class(cls(3), bx(2, 2, 2)).count(), 5);
        assert_eq!(enumerate_class(cls(10), bx(4, 4, 4)).count(), 2);
        assert_eq!(enumerate_class(cls(6), bx(2, 2, 2)).count(), 2);
        assert_eq!(enumerate_class(cls(5), bx(3, 3, 3)).count(), 0);
        assert_eq!(enumerate_class(cls(2), bx(2, 3, 2)).count(), 0);
    }

    #[test]
    fn class_gf_examples() {
        assert_eq!(
            class_gf(cls(1), bx(1, 1, 2), Weight::Size),
            QPolynomial::from_i64s(&[1, 1, 1])
        );
        assert_eq!(class_gf(cls(2), bx(2, 2, 2), Weight::Size).at_one(), 10.into());
        assert_eq!(class_gf(cls(4), bx(2, 2, 2), Weight::HalfSize).at_one(), 5.into());
    }

    #[test]
    fn orbit_weight_counts_sorted_cubes() {
        for p in enumerate_box(bx(3, 3, 3)) {
            let sorted = to_cubes(&p)
                .iter()
                .filter(|&&(i, j, k)| i <= j && j <= k)
                .count() as u64;
            assert_eq!(Weight::Orbit.of(&p), sorted);
        }
    }

    #[test]
    fn constrained_enumeration_matches_filter() {
        let mut boxes: Vec<BoxDims> = Vec::new();
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 0..=3u32 {
                    boxes.push(bx(a, b, c));
                }
            }
        }
        boxes.push(bx(4, 4, 4));
        boxes.push(bx(4, 4, 2));
        for d in boxes {
            let all: Vec<PlanePartition> = enumerate_box(d).collect();
            for cl in SymmetryClass::ALL {
                let mut expected: Vec<PlanePartition> = all
                    .iter()
                    .filter(|p| is_in_class(p, d, cl))
                    .cloned()
                    .collect();
                expected.sort();
                let got: Vec<PlanePartition> = enumerate_class(cl, d).collect();
                assert_eq!(got, expected, "{cl} in {d}");
            }
        }
    }
}
