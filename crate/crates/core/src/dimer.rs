//! Lozenge tilings of the `a,b,c,a,b,c` hexagon and perfect matchings of its
//! dual honeycomb graph, counted by the Kasteleyn determinant.
//!
//! Grid convention. Lattice points `(u, v)` sit at `u*e1 + v*e2` where `e1`
//! points at 0 degrees and `e2` at 120 degrees. Each unit rhombus
//! `[u, u+1] x [v, v+1]` splits along its short diagonal into the upward
//! triangle `Up(u, v)` with corners `(u,v), (u+1,v), (u+1,v+1)` and the
//! downward triangle `Down(u, v)` with corners `(u,v), (u,v+1), (u+1,v+1)`.
//! Every lozenge contains exactly one upward triangle and is named by it:
//!
//! * `A`: `Up(u, v)` with `Down(u, v-1)`, a wall facing the row axis;
//! * `B`: `Up(u, v)` with `Down(u+1, v)`, a wall facing the column axis;
//! * `C`: `Up(u, v)` with `Down(u, v)`, the top of a stack.
//!
//! A cube corner `(x, y, z)` of the pile projects to the lattice point
//! `(x - z, y - z)`. The text format lists one lozenge per line as `u v o`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::plane::{BoxDims, PlanePartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    A,
    B,
    C,
}

impl Orientation {
    pub const ALL: [Orientation; 3] = [Orientation::A, Orientation::B, Orientation::C];

    /// Offset from the upward triangle to its downward partner.
    fn partner_offset(self) -> (i64, i64) {
        match self {
            Orientation::A => (0, -1),
            Orientation::B => (1, 0),
            Orientation::C => (0, 0),
        }
    }

    fn from_offset(d: (i64, i64)) -> Option<Self> {
        Orientation::ALL.into_iter().find(|o| o.partner_offset() == d)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Orientation::A => "A",
            Orientation::B => "B",
            Orientation::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Orientation::A),
            "B" => Ok(Orientation::B),
            "C" => Ok(Orientation::C),
            _ => Err(Error::InvalidTiling(format!("unknown orientation {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lozenge {
    pub u: i64,
    pub v: i64,
    pub orientation: Orientation,
}

impl Lozenge {
    pub fn new(u: i64, v: i64, orientation: Orientation) -> Self {
        Lozenge { u, v, orientation }
    }

    pub fn up(&self) -> (i64, i64) {
        (self.u, self.v)
    }

    pub fn down(&self) -> (i64, i64) {
        let (du, dv) = self.orientation.partner_offset();
        (self.u + du, self.v + dv)
    }

    /// The four sides as `(start, step)` with step `(1,0)`, `(0,1)` or `(1,1)`.
    fn sides(&self) -> [((i64, i64), (i64, i64)); 4] {
        let (u, v) = (self.u, self.v);
        match self.orientation {
            Orientation::C => [
                ((u, v), (1, 0)),
                ((u, v), (0, 1)),
                ((u + 1, v), (0, 1)),
                ((u, v + 1), (1, 0)),
            ],
            Orientation::B => [
                ((u, v), (1, 0)),
                ((u + 1, v + 1), (1, 0)),
                ((u, v), (1, 1)),
                ((u + 1, v), (1, 1)),
            ],
            Orientation::A => [
                ((u, v - 1), (0, 1)),
                ((u + 1, v), (0, 1)),
                ((u, v - 1), (1, 1)),
                ((u, v), (1, 1)),
            ],
        }
    }
}

/// A lozenge tiling of the hexagon of a box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HexTiling {
    dims: BoxDims,
    lozenges: BTreeSet<Lozenge>,
}

/// The upward and downward triangles of the hexagon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexRegion {
    pub up: BTreeSet<(i64, i64)>,
    pub down: BTreeSet<(i64, i64)>,
}

fn empty_pile_lozenges(dims: BoxDims) -> Vec<Lozenge> {
    pp_lozenges(&PlanePartition::zero(dims), dims)
}

pub fn hex_region(dims: BoxDims) -> HexRegion {
    let mut up = BTreeSet::new();
    let mut down = BTreeSet::new();
    for l in empty_pile_lozenges(dims) {
        up.insert(l.up());
        down.insert(l.down());
    }
    HexRegion { up, down }
}

impl HexTiling {
    /// Checks that the lozenges cover every triangle of the hexagon once.
    pub fn new(dims: BoxDims, lozenges: impl IntoIterator<Item = Lozenge>) -> Result<Self> {
        let region = hex_region(dims);
        let mut up = BTreeSet::new();
        let mut down = BTreeSet::new();
        let mut set = BTreeSet::new();
        for l in lozenges {
            if !region.up.contains(&l.up()) || !region.down.contains(&l.down()) {
                return Err(Error::InvalidTiling(format!(
                    "lozenge {} {} {} leaves the hexagon",
                    l.u, l.v, l.orientation
                )));
            }
            if !up.insert(l.up()) || !down.insert(l.down()) {
                return Err(Error::InvalidTiling(format!(
                    "lozenge {} {} {} overlaps another",
                    l.u, l.v, l.orientation
                )));
            }
            set.insert(l);
        }
        if up.len() != region.up.len() {
            return Err(Error::InvalidTiling(format!(
                "{} of {} triangle pairs covered",
                up.len(),
                region.up.len()
            )));
        }
        Ok(HexTiling {
            dims,
            lozenges: set,
        })
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    pub fn lozenges(&self) -> impl Iterator<Item = &Lozenge> {
        self.lozenges.iter()
    }

    pub fn len(&self) -> usize {
        self.lozenges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lozenges.is_empty()
    }

    pub fn count(&self, o: Orientation) -> usize {
        self.lozenges.iter().filter(|l| l.orientation == o).count()
    }

    /// Parses `u v o` lines; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, dims: BoxDims) -> Result<Self> {
        let mut out = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: n + 1, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(parse_err(format!("expected `u v o`, found {line:?}")));
            }
            let u = fields[0]
                .parse()
                .map_err(|_| parse_err(format!("bad coordinate {:?}", fields[0])))?;
            let v = fields[1]
                .parse()
                .map_err(|_| parse_err(format!("bad coordinate {:?}", fields[1])))?;
            let o = fields[2]
                .parse()
                .map_err(|_| parse_err(format!("bad orientation {:?}", fields[2])))?;
            out.push(Lozenge::new(u, v, o));
        }
        HexTiling::new(dims, out)
    }
}

impl fmt::Display for HexTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lozenges {
            writeln!(f, "{} {} {}", l.u, l.v, l.orientation)?;
        }
        Ok(())
    }
}

fn pp_lozenges(pp: &PlanePartition, dims: BoxDims) -> Vec<Lozenge> {
    let (a, b, c) = (dims.a as i64, dims.b as i64, dims.c as i64);
    let h = |i: i64, j: i64| -> i64 {
        if i < 0 || j < 0 {
            c
        } else if i >= a || j >= b {
            0
        } else {
            pp.get(i as usize, j as usize) as i64
        }
    };
    let mut out = Vec::new();
    for i in 0..a {
        for j in 0..b {
            let z = h(i, j);
            out.push(Lozenge::new(i - z, j - z, Orientation::C));
        }
    }
    for j in 0..b {
        for i in 0..=a {
            for k in h(i, j)..h(i - 1, j) {
                out.push(Lozenge::new(i - k - 1, j - k, Orientation::A));
            }
        }
    }
    for i in 0..a {
        for j in 0..=b {
            for k in h(i, j)..h(i, j - 1) {
                out.push(Lozenge::new(i - k - 1, j - k - 1, Orientation::B));
            }
        }
    }
    out
}

/// The visible faces of the pile: stack tops are `C`, walls `A` and `B`.
pub fn pp_to_tiling(pp: &PlanePartition, dims: BoxDims) -> Result<HexTiling> {
    if !pp.fits(dims) {
        return Err(Error::DoesNotFit {
            a: dims.a,
            b: dims.b,
            c: dims.c,
        });
    }
    HexTiling::new(dims, pp_lozenges(pp, dims))
}

type Point = (i64, i64);

/// Lifts the tiling to a surface: moving along a `(1,1)` side lowers the
/// height by one, other sides keep it. Stack tops then read off the pile.
pub fn tiling_to_pp(t: &HexTiling) -> Result<PlanePartition> {
    let dims = t.dims;
    let mut adj: HashMap<Point, Vec<(Point, i64)>> = HashMap::new();
    for l in &t.lozenges {
        for (p, d) in l.sides() {
            let q = (p.0 + d.0, p.1 + d.1);
            let dz = if d == (1, 1) { -1 } else { 0 };
            adj.entry(p).or_default().push((q, dz));
            adj.entry(q).or_default().push((p, -dz));
        }
    }
    let root = (dims.a as i64, 0);
    let mut height = HashMap::new();
    height.insert(root, 0i64);
    let mut queue = VecDeque::from([root]);
    while let Some(p) = queue.pop_front() {
        let z = height[&p];
        for &(q, dz) in adj.get(&p).map(Vec::as_slice).unwrap_or(&[]) {
            match height.get(&q) {
                Some(&zq) if zq != z + dz => {
                    return Err(Error::InvalidTiling(format!(
                        "inconsistent heights at lattice point ({}, {})",
                        q.0, q.1
                    )))
                }
                Some(_) => {}
                None => {
                    height.insert(q, z + dz);
                    queue.push_back(q);
                }
            }
        }
    }
    let (a, b) = (dims.a, dims.b);
    let mut cells: Vec<Option<u32>> = vec![None; a * b];
    for l in t.lozenges.iter().filter(|l| l.orientation == Orientation::C) {
        let z = *height
            .get(&(l.u, l.v))
            .ok_or_else(|| Error::InvalidTiling("disconnected tiling".into()))?;
        let (i, j) = (l.u + z, l.v + z);
        if i < 0 || j < 0 || i >= a as i64 || j >= b as i64 || z < 0 || z > dims.c as i64 {
            return Err(Error::InvalidTiling(format!(
                "stack top {} {} C lies outside the box",
                l.u, l.v
            )));
        }
        let slot = &mut cells[i as usize * b + j as usize];
        if slot.is_some() {
            return Err(Error::InvalidTiling(format!("two stack tops over cell ({i},{j})")));
        }
        *slot = Some(z as u32);
    }
    let cells = cells
        .into_iter()
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| Error::InvalidTiling("a cell has no stack top".into()))?;
    PlanePartition::from_grid(a, b, cells)
}

/// A bipartite graph with a straight-line planar embedding. Vertices
/// `0..n_up` form one colour class and `n_up..n_up + n_down` the other; the
/// rotation at each vertex is the counterclockwise order of its edges.
#[derive(Debug, Clone)]
pub struct PlanarBipartiteGraph {
    n_up: usize,
    n_down: usize,
    edges: Vec<(usize, usize)>,
    positions: Vec<(f64, f64)>,
    rotation: Vec<Vec<usize>>,
}

/// A set of edges, each stored as `(up index, down index)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pub edges: BTreeSet<(usize, usize)>,
}

impl PlanarBipartiteGraph {
    /// `edges` hold `(up, down)` with `down` indexed from 0 within its class;
    /// `positions` lists the up vertices first, then the down vertices.
    pub fn from_embedding(
        n_up: usize,
        n_down: usize,
        edges: Vec<(usize, usize)>,
        positions: Vec<(f64, f64)>,
    ) -> Result<Self> {
        if positions.len() != n_up + n_down {
            return Err(Error::DimensionMismatch(n_up + n_down, positions.len()));
        }
        let mut seen = BTreeSet::new();
        for &(u, d) in &edges {
            if u >= n_up || d >= n_down {
                return Err(Error::InvalidMatching(format!("edge ({u},{d}) out of range")));
            }
            if !seen.insert((u, d)) {
                return Err(Error::InvalidMatching(format!("edge ({u},{d}) repeated")));
            }
        }
        let mut rotation = vec![Vec::new(); n_up + n_down];
        for (e, &(u, d)) in edges.iter().enumerate() {
            rotation[u].push(e);
            rotation[n_up + d].push(e);
        }
        let mut g = PlanarBipartiteGraph {
            n_up,
            n_down,
            edges,
            positions,
            rotation,
        };
        for v in 0..g.n_up + g.n_down {
            let (x0, y0) = g.positions[v];
            let mut rot = std::mem::take(&mut g.rotation[v]);
            rot.sort_by(|&e, &f| {
                let angle = |e: usize| {
                    let (x, y) = g.positions[g.other_end(e, v)];
                    (y - y0).atan2(x - x0)
                };
                angle(e).total_cmp(&angle(f))
            });
            g.rotation[v] = rot;
        }
        Ok(g)
    }

    pub fn n_up(&self) -> usize {
        self.n_up
    }

    pub fn n_down(&self) -> usize {
        self.n_down
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn other_end(&self, e: usize, v: usize) -> usize {
        let (u, d) = self.edges[e];
        if v == u {
            self.n_up + d
        } else {
            u
        }
    }

    /// Faces of the embedding as cyclic vertex sequences, each paired with
    /// its signed area; bounded faces are counterclockwise (positive area).
    pub fn faces(&self) -> Vec<(Vec<usize>, f64)> {
        let n = self.n_up + self.n_down;
        // dart (v, slot) leaves v along rotation[v][slot]
        let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; self.rotation[v].len()]).collect();
        let mut faces = Vec::new();
        for v0 in 0..n {
            for s0 in 0..self.rotation[v0].len() {
                if used[v0][s0] {
                    continue;
                }
                let mut cycle = Vec::new();
                let (mut v, mut s) = (v0, s0);
                while !used[v][s] {
                    used[v][s] = true;
                    cycle.push(v);
                    let e = self.rotation[v][s];
                    let w = self.other_end(e, v);
                    let back = self.rotation[w].iter().position(|&f| f == e).unwrap();
                    let len = self.rotation[w].len();
                    s = (back + len - 1) % len;
                    v = w;
                }
                let area: f64 = (0..cycle.len())
                    .map(|i| {
                        let (x1, y1) = self.positions[cycle[i]];
                        let (x2, y2) = self.positions[cycle[(i + 1) % cycle.len()]];
                        x1 * y2 - x2 * y1
                    })
                    .sum::<f64>()
                    / 2.0;
                faces.push((cycle, area));
            }
        }
        faces
    }

    /// Euler characteristic the face tracing must reproduce: 2 for every
    /// component with an edge, 1 for every isolated vertex.
    fn expected_euler(&self) -> i64 {
        let n = self.n_up + self.n_down;
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += if self.rotation[s].is_empty() { 1 } else { 2 };
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &e in &self.rotation[v] {
                    let w = self.other_end(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Edge signs making every bounded face of length `l` carry sign
    /// `(-1)^(l/2 + 1)`, found by elimination over GF(2).
    pub fn kasteleyn_signs(&self) -> Result<Vec<i8>> {
        let faces = self.faces();
        let n = self.n_up + self.n_down;
        let euler = n as i64 - self.edges.len() as i64 + faces.len() as i64;
        if euler != self.expected_euler() {
            return Err(Error::NotSignable("embedding is not planar".into()));
        }
        let edge_index: HashMap<(usize, usize), usize> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(u, d))| ((u, self.n_up + d), e))
            .collect();
        let key = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
        let m = self.edges.len();
        let words = m / 64 + 1;
        let mut rows: Vec<(Vec<u64>, bool)> = Vec::new();
        for (cycle, area) in &faces {
            if *area <= 0.0 {
                continue;
            }
            let mut bits = vec![0u64; words];
            for i in 0..cycle.len() {
                let e = edge_index[&key(cycle[i], cycle[(i + 1) % cycle.len()])];
                bits[e / 64] ^= 1 << (e % 64);
            }
            rows.push((bits, (cycle.len() / 2 + 1) % 2 == 1));
        }
        let mut pivots: Vec<(usize, Vec<u64>, bool)> = Vec::new();
        for (mut bits, mut rhs) in rows {
            for (col, pb, pr) in &pivots {
                if bits[col / 64] >> (col % 64) & 1 == 1 {
                    for w in 0..words {
                        bits[w] ^= pb[w];
                    }
                    rhs ^= pr;
                }
            }
            match (0..m).find(|&c| bits[c / 64] >> (c % 64) & 1 == 1) {
                Some(col) => {
                    for (_, pb, pr) in pivots.iter_mut() {
                        if pb[col / 64] >> (col % 64) & 1 == 1 {
                            for w in 0..words {
                                pb[w] ^= bits[w];
                            }
                            *pr ^= rhs;
                        }
                    }
                    pivots.push((col, bits, rhs));
                }
                None if rhs => {
                    return Err(Error::NotSignable("face conditions are inconsistent".into()))
                }
                None => {}
            }
        }
        let mut signs = vec![1i8; m];
        for (col, _, rhs) in pivots {
            if rhs {
                signs[col] = -1;
            }
        }
        Ok(signs)
    }
}

/// Number of perfect matchings: `|det K|` for the Kasteleyn-signed
/// up-by-down adjacency matrix `K`.
pub fn kasteleyn_count(g: &PlanarBipartiteGraph) -> Result<BigInt> {
    if g.n_up != g.n_down {
        return Ok(BigInt::from(0));
    }
    let signs = g.kasteleyn_signs()?;
    let mut k = vec![vec![BigInt::from(0); g.n_down]; g.n_up];
    for (e, &(u, d)) in g.edges.iter().enumerate() {
        k[u][d] = BigInt::from(signs[e]);
    }
    Ok(determinant(&k).abs())
}

/// All perfect matchings, matching up vertices in index order.
pub fn enumerate_matchings(g: &PlanarBipartiteGraph) -> std::vec::IntoIter<Matching> {
    let mut out = Vec::new();
    if g.n_up == g.n_down {
        let mut nbrs = vec![Vec::new(); g.n_up];
        for &(u, d) in &g.edges {
            nbrs[u].push(d);
        }
        for list in nbrs.iter_mut() {
            list.sort_unstable();
        }
        let mut used = vec![false; g.n_down];
        let mut current = Vec::new();
        fn rec(
            u: usize,
            nbrs: &[Vec<usize>],
            used: &mut [bool],
            current: &mut Vec<(usize, usize)>,
            out: &mut Vec<Matching>,
        ) {
            if u == nbrs.len() {
                out.push(Matching {
                    edges: current.iter().copied().collect(),
                });
                return;
            }
            for &d in &nbrs[u] {
                if !used[d] {
                    used[d] = true;
                    current.push((u, d));
                    rec(u + 1, nbrs, used, current, out);
                    current.pop();
                    used[d] = false;
                }
            }
        }
        rec(0, &nbrs, &mut used, &mut current, &mut out);
    }
    out.into_iter()
}

/// The honeycomb dual of a box's hexagon, with the triangle behind each vertex.
#[derive(Debug, Clone)]
pub struct HexGraph {
    pub dims: BoxDims,
    pub graph: PlanarBipartiteGraph,
    pub up: Vec<(i64, i64)>,
    pub down: Vec<(i64, i64)>,
    up_index: BTreeMap<(i64, i64), usize>,
    down_index: BTreeMap<(i64, i64), usize>,
}

fn cartesian(u: f64, v: f64) -> (f64, f64) {
    (u - v / 2.0, v * 3f64.sqrt() / 2.0)
}

/// Vertices are triangle centres, indexed row-major (by `v`, then `u`);
/// edges join triangles that share a side.
pub fn build_hex_graph(dims: BoxDims) -> HexGraph {
    let region = hex_region(dims);
    let row_major = |s: &BTreeSet<(i64, i64)>| {
        let mut v: Vec<(i64, i64)> = s.iter().copied().collect();
        v.sort_by_key(|&(u, v)| (v, u));
        v
    };
    let up = row_major(&region.up);
    let down = row_major(&region.down);
    let up_index: BTreeMap<_, _> = up.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let down_index: BTreeMap<_, _> = down.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut edges = Vec::new();
    for (i, &(u, v)) in up.iter().enumerate() {
        for o in Orientation::ALL {
            let (du, dv) = o.partner_offset();
            if let Some(&d) = down_index.get(&(u + du, v + dv)) {
                edges.push((i, d));
            }
        }
    }
    let mut positions = Vec::with_capacity(up.len() + down.len());
    for &(u, v) in &up {
        positions.push(cartesian(u as f64 + 2.0 / 3.0, v as f64 + 1.0 / 3.0));
    }
    for &(u, v) in &down {
        positions.push(cartesian(u as f64 + 1.0 / 3.0, v as f64 + 2.0 / 3.0));
    }
    let graph = PlanarBipartiteGraph::from_embedding(up.len(), down.len(), edges, positions)
        .expect("honeycomb edges are well formed");
    HexGraph {
        dims,
        graph,
        up,
        down,
        up_index,
        down_index,
    }
}

pub fn tiling_to_matching(t: &HexTiling, g: &HexGraph) -> Result<Matching> {
    if t.dims != g.dims {
        return Err(Error::InvalidTiling(format!(
            "tiling of {} used with graph of {}",
            t.dims, g.dims
        )));
    }
    let edges = t
        .lozenges
        .iter()
        .map(|l| (g.up_index[&l.up()], g.down_index[&l.down()]))
        .collect();
    Ok(Matching { edges })
}

pub fn matching_to_tiling(m: &Matching, g: &HexGraph) -> Result<HexTiling> {
    let mut up_seen = BTreeSet::new();
    let mut down_seen = BTreeSet::new();
    let mut lozenges = Vec::new();
    for &(u, d) in &m.edges {
        if u >= g.up.len() || d >= g.down.len() {
            return Err(Error::InvalidMatching(format!("edge ({u},{d}) out of range")));
        }
        if !up_seen.insert(u) || !down_seen.insert(d) {
            return Err(Error::InvalidMatching(format!("edge ({u},{d}) shares a vertex")));
        }
        let (pu, pv) = g.up[u];
        let (qu, qv) = g.down[d];
        let o = Orientation::from_offset((qu - pu, qv - pv))
            .ok_or_else(|| Error::InvalidMatching(format!("({u},{d}) is not an edge")))?;
        lozenges.push(Lozenge::new(pu, pv, o));
    }
    if up_seen.len() != g.up.len() || down_seen.len() != g.down.len() {
        return Err(Error::InvalidMatching(format!(
            "{} of {} vertices covered",
            up_seen.len() + down_seen.len(),
            g.up.len() + g.down.len()
        )));
    }
    HexTiling::new(g.dims, lozenges)
}
