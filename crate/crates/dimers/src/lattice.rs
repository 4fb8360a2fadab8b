//! Lattice graphs underlying the dimer model: hypercubic boxes, triangular
//! boxes, and explicit edge-list graphs for fixtures.
//!
//! Vertices carry 1-based integer coordinates (custom graphs may use any
//! integers) and are indexed in lexicographic coordinate order with the last
//! coordinate slowest, so the first coordinate varies fastest. Every
//! "smallest vertex" tie-break in this crate refers to that index. Lattices
//! are immutable once built and safe to share across threads.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex within a lattice.
pub type VertexId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("shape must have at least one side")]
    EmptyShape,
    #[error("box side {0} is smaller than 2")]
    SideTooSmall(u32),
    #[error("box volume {0} is odd")]
    OddVolume(usize),
    #[error("triangular box sides must be at least 1")]
    ZeroSide,
    #[error("triangular box {m}x{n} has odd area")]
    OddArea { m: u32, n: u32 },
    #[error("vertex index {0} out of range ({1} vertices)")]
    VertexOutOfRange(VertexId, usize),
    #[error("edge [{0}, {1}] references an undeclared vertex")]
    DanglingEdge(u32, u32),
    #[error("duplicate edge [{0}, {1}]")]
    DuplicateEdge(u32, u32),
    #[error("loop edge at vertex {0}")]
    LoopEdge(u32),
    #[error("duplicate vertex coordinates {0:?}")]
    DuplicateVertex(Vec<i32>),
    #[error("custom vertices must all have the same dimension")]
    MixedDimension,
    #[error("custom lattice must declare at least one vertex")]
    NoVertices,
    #[error("operation requires a hypercubic lattice")]
    NotHypercubic,
    #[error("operation requires a triangular lattice")]
    NotTriangular,
}

/// Side lengths `n_1..n_d` of a hypercubic box. Valid shapes have `d >= 1`,
/// every side at least 2, and even volume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape(pub Vec<u32>);

impl Shape {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn volume(&self) -> usize {
        self.0.iter().map(|&n| n as usize).product()
    }

    pub fn validate(&self) -> Result<(), LatticeError> {
        if self.0.is_empty() {
            return Err(LatticeError::EmptyShape);
        }
        if let Some(&n) = self.0.iter().find(|&&n| n < 2) {
            return Err(LatticeError::SideTooSmall(n));
        }
        if self.volume() % 2 != 0 {
            return Err(LatticeError::OddVolume(self.volume()));
        }
        Ok(())
    }
}

/// What family a lattice belongs to. Box-specific operations inspect this and
/// reject custom graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeKind {
    Hypercubic { shape: Shape },
    Triangular { m: u32, n: u32 },
    Custom,
}

/// JSON descriptor for a lattice, the external interchange format:
/// `{"kind":"hypercubic","shape":[3,3,2]}`, `{"kind":"triangular","m":4,"n":3}`
/// or `{"kind":"custom","vertices":[[x,y],...],"edges":[[i,j],...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LatticeDescriptor {
    Hypercubic { shape: Vec<u32> },
    Triangular { m: u32, n: u32 },
    Custom { vertices: Vec<Vec<i32>>, edges: Vec<(u32, u32)> },
}

impl LatticeDescriptor {
    pub fn build(&self) -> Result<Lattice, LatticeError> {
        match self {
            LatticeDescriptor::Hypercubic { shape } => {
                Lattice::hypercubic(&Shape(shape.clone()))
            }
            LatticeDescriptor::Triangular { m, n } => Lattice::triangular(*m, *n),
            LatticeDescriptor::Custom { vertices, edges } => {
                Lattice::custom(vertices.clone(), edges.clone())
            }
        }
    }
}

/// A finite graph with typed vertices. Adjacency lists are sorted ascending
/// by vertex index, which fixes the iteration order everywhere downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice {
    kind: LatticeKind,
    dim: usize,
    /// Flattened coordinates, `dim` entries per vertex.
    coords: Vec<i32>,
    adj: Vec<Vec<VertexId>>,
    /// Coordinate-to-index map; only populated for custom lattices (boxes
    /// compute indices arithmetically).
    index: BTreeMap<Vec<i32>, VertexId>,
}

impl Lattice {
    /// The box with vertex set `[n_1] x ... x [n_d]` and edges between
    /// vertices differing by 1 in exactly one coordinate.
    pub fn hypercubic(shape: &Shape) -> Result<Self, LatticeError> {
        shape.validate()?;
        let d = shape.dim();
        let volume = shape.volume();
        let mut coords = Vec::with_capacity(volume * d);
        let mut cur: Vec<i32> = vec![1; d];
        for _ in 0..volume {
            coords.extend_from_slice(&cur);
            for i in 0..d {
                if cur[i] < shape.0[i] as i32 {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 1;
            }
        }
        let strides = Self::strides(&shape.0);
        let mut adj = vec![Vec::new(); volume];
        for v in 0..volume {
            let c = &coords[v * d..(v + 1) * d];
            for i in 0..d {
                for delta in [-1i32, 1] {
                    let ci = c[i] + delta;
                    if ci >= 1 && ci <= shape.0[i] as i32 {
                        let w = (v as i64 + delta as i64 * strides[i] as i64) as usize;
                        adj[v].push(w as VertexId);
                    }
                }
            }
            adj[v].sort_unstable();
        }
        Ok(Lattice {
            kind: LatticeKind::Hypercubic { shape: shape.clone() },
            dim: d,
            coords,
            adj,
            index: BTreeMap::new(),
        })
    }

    /// The box `[m] x [n]` of the triangular lattice: grid adjacency plus the
    /// `(+1,-1)` and `(-1,+1)` diagonals.
    pub fn triangular(m: u32, n: u32) -> Result<Self, LatticeError> {
        if m == 0 || n == 0 {
            return Err(LatticeError::ZeroSide);
        }
        if (m as usize * n as usize) % 2 != 0 {
            return Err(LatticeError::OddArea { m, n });
        }
        let count = (m * n) as usize;
        let mut coords = Vec::with_capacity(count * 2);
        for y in 1..=n as i32 {
            for x in 1..=m as i32 {
                coords.push(x);
                coords.push(y);
            }
        }
        const OFFSETS: [(i32, i32); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];
        let mut adj = vec![Vec::new(); count];
        for v in 0..count {
            let (x, y) = (coords[v * 2], coords[v * 2 + 1]);
            for (dx, dy) in OFFSETS {
                let (wx, wy) = (x + dx, y + dy);
                if wx >= 1 && wx <= m as i32 && wy >= 1 && wy <= n as i32 {
                    adj[v].push(((wy - 1) as u32 * m + (wx - 1) as u32) as VertexId);
                }
            }
            adj[v].sort_unstable();
        }
        Ok(Lattice {
            kind: LatticeKind::Triangular { m, n },
            dim: 2,
            coords,
            adj,
            index: BTreeMap::new(),
        })
    }

    /// An explicit graph given by coordinate-labelled vertices and an edge
    /// list over vertex positions. Used for fixtures that are not boxes.
    pub fn custom(vertices: Vec<Vec<i32>>, edges: Vec<(u32, u32)>) -> Result<Self, LatticeError> {
        if vertices.is_empty() {
            return Err(LatticeError::NoVertices);
        }
        let dim = vertices[0].len();
        if vertices.iter().any(|v| v.len() != dim) {
            return Err(LatticeError::MixedDimension);
        }
        let count = vertices.len();
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i as VertexId).is_some() {
                return Err(LatticeError::DuplicateVertex(v.clone()));
            }
        }
        let mut adj = vec![Vec::new(); count];
        for &(a, b) in &edges {
            if a == b {
                return Err(LatticeError::LoopEdge(a));
            }
            if a as usize >= count || b as usize >= count {
                return Err(LatticeError::DanglingEdge(a, b));
            }
            if adj[a as usize].contains(&b) {
                return Err(LatticeError::DuplicateEdge(a, b));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        let coords = vertices.into_iter().flatten().collect();
        Ok(Lattice { kind: LatticeKind::Custom, dim, coords, adj, index })
    }

    fn strides(sides: &[u32]) -> Vec<usize> {
        let mut strides = Vec::with_capacity(sides.len());
        let mut s = 1usize;
        for &n in sides {
            strides.push(s);
            s *= n as usize;
        }
        strides
    }

    pub fn kind(&self) -> &LatticeKind {
        &self.kind
    }

    pub fn descriptor(&self) -> LatticeDescriptor {
        match &self.kind {
            LatticeKind::Hypercubic { shape } => {
                LatticeDescriptor::Hypercubic { shape: shape.0.clone() }
            }
            LatticeKind::Triangular { m, n } => LatticeDescriptor::Triangular { m: *m, n: *n },
            LatticeKind::Custom => {
                let vertices = (0..self.vertex_count())
                    .map(|v| self.coords(v as VertexId).to_vec())
                    .collect();
                let mut edges = Vec::new();
                for (u, w) in self.edges() {
                    edges.push((u, w));
                }
                LatticeDescriptor::Custom { vertices, edges }
            }
        }
    }

    pub fn shape(&self) -> Option<&Shape> {
        match &self.kind {
            LatticeKind::Hypercubic { shape } => Some(shape),
            _ => None,
        }
    }

    pub fn is_hypercubic(&self) -> bool {
        matches!(self.kind, LatticeKind::Hypercubic { .. })
    }

    pub fn is_triangular(&self) -> bool {
        matches!(self.kind, LatticeKind::Triangular { .. })
    }

    /// True for the unit hypercube, every side equal to 2.
    pub fn is_unit_hypercube(&self) -> bool {
        self.shape().map_or(false, |s| s.0.iter().all(|&n| n == 2))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.adj.len() as VertexId {
            for &w in &self.adj[u as usize] {
                if w > u {
                    out.push((u, w));
                }
            }
        }
        out
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range; use
    /// [`Lattice::checked_neighbors`] for untrusted input.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize]
    }

    pub fn checked_neighbors(&self, v: VertexId) -> Result<&[VertexId], LatticeError> {
        self.adj
            .get(v as usize)
            .map(|l| l.as_slice())
            .ok_or(LatticeError::VertexOutOfRange(v, self.vertex_count()))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn is_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn coords(&self, v: VertexId) -> &[i32] {
        let v = v as usize;
        &self.coords[v * self.dim..(v + 1) * self.dim]
    }

    /// Index of the vertex with the given coordinates, if it exists.
    pub fn vertex_at(&self, coords: &[i32]) -> Option<VertexId> {
        if coords.len() != self.dim {
            return None;
        }
        match &self.kind {
            LatticeKind::Hypercubic { shape } => {
                let mut idx = 0usize;
                let mut stride = 1usize;
                for (c, &n) in coords.iter().zip(&shape.0) {
                    if *c < 1 || *c > n as i32 {
                        return None;
                    }
                    idx += (*c - 1) as usize * stride;
                    stride *= n as usize;
                }
                Some(idx as VertexId)
            }
            LatticeKind::Triangular { m, n } => {
                let (x, y) = (coords[0], coords[1]);
                if x < 1 || x > *m as i32 || y < 1 || y > *n as i32 {
                    return None;
                }
                Some((y as u32 - 1) * m + (x as u32 - 1))
            }
            LatticeKind::Custom => self.index.get(coords).copied(),
        }
    }

    /// Coordinate-sum parity: 0 for even vertices, 1 for odd.
    pub fn parity(&self, v: VertexId) -> u8 {
        (self.coords(v).iter().map(|&c| c as i64).sum::<i64>().rem_euclid(2)) as u8
    }

    /// L1 distance between coordinate vectors. Equals the graph distance on
    /// hypercubic boxes (monotone paths stay inside the box).
    pub fn coord_l1_distance(&self, u: VertexId, v: VertexId) -> u32 {
        self.coords(u)
            .iter()
            .zip(self.coords(v))
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    /// For a hypercubic edge `uv`, the axis along which it runs.
    pub fn edge_axis(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let (cu, cv) = (self.coords(u), self.coords(v));
        let mut axis = None;
        for i in 0..self.dim {
            if cu[i] != cv[i] {
                if axis.is_some() || cu[i].abs_diff(cv[i]) != 1 {
                    return None;
                }
                axis = Some(i);
            }
        }
        axis
    }
}

/// The coordinate-transposition isomorphism from `T_{m,n}` onto `T_{n,m}`.
/// Returns the target lattice and the vertex map (`map[v]` is the image of
/// `v`). Transposition preserves adjacency because the diagonal offsets
/// `(1,-1)` and `(-1,1)` swap with each other.
pub fn transpose_triangular(lat: &Lattice) -> Result<(Arc<Lattice>, Vec<VertexId>), LatticeError> {
    let (m, n) = match lat.kind() {
        LatticeKind::Triangular { m, n } => (*m, *n),
        _ => return Err(LatticeError::NotTriangular),
    };
    let target = Arc::new(Lattice::triangular(n, m)?);
    let mut map = vec![0; lat.vertex_count()];
    for v in 0..lat.vertex_count() as VertexId {
        let c = lat.coords(v);
        map[v as usize] = target
            .vertex_at(&[c[1], c[0]])
            .expect("transposed coordinate in range");
    }
    Ok((target, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_box() {
        let lat = Lattice::hypercubic(&Shape(vec![2, 2])).unwrap();
        assert_eq!(lat.vertex_count(), 4);
        assert_eq!(lat.edge_count(), 4);
        let corner = lat.vertex_at(&[1, 1]).unwrap();
        assert_eq!(
            lat.neighbors(corner),
            &[lat.vertex_at(&[2, 1]).unwrap(), lat.vertex_at(&[1, 2]).unwrap()]
        );
    }

    #[test]
    fn box_332_degrees() {
        let lat = Lattice::hypercubic(&Shape(vec![3, 3, 2])).unwrap();
        assert_eq!(lat.vertex_count(), 18);
        // all eight corners have degree 3
        for corner in [
            [1, 1, 1], [3, 1, 1], [1, 3, 1], [3, 3, 1], [1, 1, 2], [3, 1, 2], [1, 3, 2], [3, 3, 2],
        ] {
            assert_eq!(lat.degree(lat.vertex_at(&corner).unwrap()), 3);
        }
        let center = lat.vertex_at(&[2, 2, 1]).unwrap();
        assert_eq!(lat.degree(center), 5);
    }

    #[test]
    fn cube_is_three_regular() {
        let lat = Lattice::hypercubic(&Shape(vec![2, 2, 2])).unwrap();
        assert_eq!(lat.vertex_count(), 8);
        assert_eq!(lat.edge_count(), 12);
        assert!((0..8).all(|v| lat.degree(v) == 3));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(
            Lattice::hypercubic(&Shape(vec![3, 3])).unwrap_err(),
            LatticeError::OddVolume(9)
        );
        assert_eq!(
            Lattice::hypercubic(&Shape(vec![1, 4])).unwrap_err(),
            LatticeError::SideTooSmall(1)
        );
        assert_eq!(Lattice::hypercubic(&Shape(vec![])).unwrap_err(), LatticeError::EmptyShape);
    }

    #[test]
    fn triangular_2x2_has_one_diagonal() {
        let lat = Lattice::triangular(2, 2).unwrap();
        assert_eq!(lat.vertex_count(), 4);
        assert_eq!(lat.edge_count(), 5);
        // the diagonal runs (2,1)-(1,2), not (1,1)-(2,2)
        let a = lat.vertex_at(&[2, 1]).unwrap();
        let b = lat.vertex_at(&[1, 2]).unwrap();
        assert!(lat.is_edge(a, b));
        assert!(!lat.is_edge(lat.vertex_at(&[1, 1]).unwrap(), lat.vertex_at(&[2, 2]).unwrap()));
    }

    #[test]
    fn triangular_4x3_interior_degree() {
        let lat = Lattice::triangular(4, 3).unwrap();
        assert_eq!(lat.vertex_count(), 12);
        let v = lat.vertex_at(&[2, 2]).unwrap();
        let nbrs: Vec<_> = lat.neighbors(v).iter().map(|&w| lat.coords(w).to_vec()).collect();
        assert_eq!(nbrs.len(), 6);
        assert!(nbrs.contains(&vec![3, 1]));
        assert!(nbrs.contains(&vec![1, 3]));
    }

    #[test]
    fn triangular_single_row_is_path() {
        let lat = Lattice::triangular(4, 1).unwrap();
        assert_eq!(lat.vertex_count(), 4);
        assert_eq!(lat.edge_count(), 3);
        assert_eq!(Lattice::triangular(3, 1).unwrap_err(), LatticeError::OddArea { m: 3, n: 1 });
    }

    #[test]
    fn custom_rejects_malformed() {
        let verts = vec![vec![0, 0], vec![1, 0]];
        assert_eq!(
            Lattice::custom(verts.clone(), vec![(0, 2)]).unwrap_err(),
            LatticeError::DanglingEdge(0, 2)
        );
        assert_eq!(
            Lattice::custom(verts.clone(), vec![(0, 1), (1, 0)]).unwrap_err(),
            LatticeError::DuplicateEdge(1, 0)
        );
        assert_eq!(
            Lattice::custom(verts.clone(), vec![(1, 1)]).unwrap_err(),
            LatticeError::LoopEdge(1)
        );
        // empty edge set on 2 vertices is a valid lattice
        assert_eq!(Lattice::custom(verts, vec![]).unwrap().edge_count(), 0);
    }

    #[test]
    fn hypercubic_edge_count_formula() {
        // sum over axes of (n_i - 1) * prod_{j != i} n_j, exhaustive for
        // volumes up to 64
        let mut shapes = Vec::new();
        for d in 1..=3 {
            let mut stack = vec![Vec::new()];
            while let Some(s) = stack.pop() {
                if s.len() == d {
                    shapes.push(s);
                    continue;
                }
                for n in 2..=64u32 {
                    let mut t = s.clone();
                    t.push(n);
                    if t.iter().map(|&x| x as usize).product::<usize>() <= 64 {
                        stack.push(t);
                    }
                }
            }
        }
        for dims in shapes {
            let shape = Shape(dims.clone());
            if shape.validate().is_err() {
                continue;
            }
            let lat = Lattice::hypercubic(&shape).unwrap();
            let expected: usize = (0..dims.len())
                .map(|i| {
                    (dims[i] as usize - 1)
                        * dims
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| j != i)
                            .map(|(_, &n)| n as usize)
                            .product::<usize>()
                })
                .sum();
            assert_eq!(lat.edge_count(), expected, "shape {dims:?}");
        }
    }

    #[test]
    fn parity_classes_balanced_on_even_boxes() {
        for dims in [vec![2, 2], vec![3, 2], vec![3, 3, 2], vec![4, 4]] {
            let lat = Lattice::hypercubic(&Shape(dims)).unwrap();
            let even = (0..lat.vertex_count() as VertexId).filter(|&v| lat.parity(v) == 0).count();
            assert_eq!(even * 2, lat.vertex_count());
        }
    }

    #[test]
    fn transpose_is_isomorphism() {
        for m in 1..=5u32 {
            for n in 1..=5u32 {
                if (m * n) % 2 != 0 {
                    continue;
                }
                let lat = Lattice::triangular(m, n).unwrap();
                let (t, map) = transpose_triangular(&lat).unwrap();
                let mut mapped: Vec<(u32, u32)> = lat
                    .edges()
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (map[u as usize], map[v as usize]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                mapped.sort_unstable();
                assert_eq!(mapped, t.edges());
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let desc = LatticeDescriptor::Triangular { m: 4, n: 3 };
        let lat = desc.build().unwrap();
        assert_eq!(lat.descriptor(), desc);
        let json = serde_json::to_string(&desc).unwrap();
        assert_eq!(json, r#"{"kind":"triangular","m":4,"n":3}"#);
    }
}
