//! The hexagonal-lattice variant of the mapping.
//!
//! Hexagons are embedded as 1-wide, 2-tall bricks so every coordinate is an
//! integer: face (c, r) spans x in [c, c+1] and y in [y0, y0+2] with
//! y0 = 2r + (c mod 2). Adjacent face columns are offset by one row, which
//! makes every vertex degree 3 or less and gives each face a unique bottom
//! edge. The geometry is topological, so the brick embedding is free.
//!
//! Orientation collapses to two uniform rules: vertical edges point north iff
//! their column is even, horizontal edges point east iff their face column is
//! even. Every face carries a qubit; the bottom edge of a face acts on it with
//! Y, the two side edges adjacent to the bottom act with X, and no other edge
//! touches it. There are no trivial cycles: every face loop is a stabilizer
//! generator, and the code space is the full fermionic space.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::lattice::{DirectedEdge, QubitLayout, Vertex};
use crate::pauli::{Letter, PauliString};
use crate::stabilizer::StabilizerGroup;

/// A face of the brick-wall hex lattice, addressed by (column, row-in-column).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HexFace {
    pub col: usize,
    pub row: usize,
}

impl HexFace {
    /// Top row of the brick in lattice coordinates.
    fn y0(&self) -> usize {
        2 * self.row + self.col % 2
    }

    /// The six boundary vertices, clockwise from the top-left.
    pub fn boundary(&self) -> [Vertex; 6] {
        let x = self.col;
        let y0 = self.y0();
        [
            Vertex::new(x, y0),
            Vertex::new(x + 1, y0),
            Vertex::new(x + 1, y0 + 1),
            Vertex::new(x + 1, y0 + 2),
            Vertex::new(x, y0 + 2),
            Vertex::new(x, y0 + 1),
        ]
    }

    /// The bottom edge (west vertex, east vertex).
    pub fn bottom_edge(&self) -> (Vertex, Vertex) {
        let y = self.y0() + 2;
        (Vertex::new(self.col, y), Vertex::new(self.col + 1, y))
    }

    /// The two side edges adjacent to the bottom edge, as vertex pairs.
    pub fn bottom_adjacent_edges(&self) -> [(Vertex, Vertex); 2] {
        let y0 = self.y0();
        [
            (Vertex::new(self.col, y0 + 1), Vertex::new(self.col, y0 + 2)),
            (
                Vertex::new(self.col + 1, y0 + 1),
                Vertex::new(self.col + 1, y0 + 2),
            ),
        ]
    }
}

impl std::fmt::Display for HexFace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "hex({},{})", self.col, self.row)
    }
}

impl Ord for HexFace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.row, self.col).cmp(&(other.row, other.col))
    }
}

impl PartialOrd for HexFace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A rectangular brick-wall patch of hexagonal faces.
#[derive(Debug, Clone)]
pub struct HexLattice {
    face_columns: usize,
    face_rows: usize,
    vertices: Vec<Vertex>,
    vertex_set: BTreeSet<Vertex>,
    edges: Vec<DirectedEdge>,
}

impl HexLattice {
    pub fn new(face_columns: usize, face_rows: usize) -> Result<Self> {
        if face_columns == 0 || face_rows == 0 {
            return Err(Error::InvalidInput(format!(
                "hex lattice needs at least one face, got {face_columns}x{face_rows}"
            )));
        }
        let mut vertex_set = BTreeSet::new();
        let mut edge_set = BTreeSet::new();
        for col in 0..face_columns {
            for row in 0..face_rows {
                let face = HexFace { col, row };
                let ring = face.boundary();
                for v in ring {
                    vertex_set.insert(v);
                }
                for i in 0..6 {
                    let a = ring[i];
                    let b = ring[(i + 1) % 6];
                    let key = if a < b { (a, b) } else { (b, a) };
                    edge_set.insert(key);
                }
            }
        }
        let vertices: Vec<Vertex> = vertex_set.iter().copied().collect();
        let edges = edge_set
            .into_iter()
            .map(|(a, b)| Self::orient(a, b))
            .collect();
        Ok(HexLattice {
            face_columns,
            face_rows,
            vertices,
            vertex_set,
            edges,
        })
    }

    /// Vertical edges point north iff their column is even; horizontal edges
    /// point east iff their face column is even. The bottom-edge exception of
    /// the circulation rule collapses into the same horizontal rule because a
    /// bottom edge sits in the same face column as the face above it.
    fn orient(a: Vertex, b: Vertex) -> DirectedEdge {
        if a.x == b.x {
            let (top, bottom) = if a.y < b.y { (a, b) } else { (b, a) };
            if a.x % 2 == 0 {
                DirectedEdge {
                    tail: bottom,
                    head: top,
                }
            } else {
                DirectedEdge {
                    tail: top,
                    head: bottom,
                }
            }
        } else {
            let (left, right) = if a.x < b.x { (a, b) } else { (b, a) };
            // horizontal edge spans face column left.x
            if left.x % 2 == 0 {
                DirectedEdge {
                    tail: left,
                    head: right,
                }
            } else {
                DirectedEdge {
                    tail: right,
                    head: left,
                }
            }
        }
    }

    pub fn face_columns(&self) -> usize {
        self.face_columns
    }

    pub fn face_rows(&self) -> usize {
        self.face_rows
    }

    pub fn face_count(&self) -> usize {
        self.face_columns * self.face_rows
    }

    pub fn mode_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[DirectedEdge] {
        &self.edges
    }

    pub fn faces(&self) -> impl Iterator<Item = HexFace> + '_ {
        (0..self.face_rows).flat_map(move |row| {
            (0..self.face_columns).map(move |col| HexFace { col, row })
        })
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertex_set.contains(&v)
    }

    pub fn are_neighbors(&self, a: Vertex, b: Vertex) -> bool {
        self.edges
            .iter()
            .any(|e| (e.tail == a && e.head == b) || (e.tail == b && e.head == a))
    }

    pub fn orient_edge(&self, a: Vertex, b: Vertex) -> Result<DirectedEdge> {
        if !self.are_neighbors(a, b) {
            return Err(Error::EdgeNotInLattice {
                x0: a.x,
                y0: a.y,
                x1: b.x,
                y1: b.y,
            });
        }
        Ok(Self::orient(a, b))
    }

    pub fn incident_edges(&self, v: Vertex) -> Vec<DirectedEdge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| e.tail == v || e.head == v)
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident_edges(v).len()
    }

    /// Vertex qubits in reading order, then one face qubit per face in
    /// reading order.
    pub fn qubit_layout(&self) -> QubitLayout {
        let mut vertex_qubit = BTreeMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            vertex_qubit.insert(v, i);
        }
        let m = vertex_qubit.len();
        // face qubits keyed through the square Face type so QubitLayout is shared
        let mut face_qubit = BTreeMap::new();
        let mut idx = m;
        for f in self.faces() {
            face_qubit.insert(crate::lattice::Face::new(f.col, f.row), idx);
            idx += 1;
        }
        QubitLayout {
            vertex_qubit,
            face_qubit,
            total: idx,
        }
    }
}

/// Encoded operators for a hex lattice.
#[derive(Debug, Clone)]
pub struct HexEncoding {
    lattice: HexLattice,
    layout: QubitLayout,
    edge_ops: BTreeMap<(Vertex, Vertex), PauliString>,
    vertex_ops: BTreeMap<Vertex, PauliString>,
    stabilizers: StabilizerGroup,
}

impl HexEncoding {
    pub fn new(lattice: HexLattice) -> Result<Self> {
        let layout = lattice.qubit_layout();
        let n = layout.total;

        // face factors: bottom edge acts with Y_f, its two side neighbours with X_f
        let mut face_factor: BTreeMap<(Vertex, Vertex), (usize, Letter)> = BTreeMap::new();
        for f in lattice.faces() {
            let fq = layout.face(crate::lattice::Face::new(f.col, f.row));
            let (bw, be) = f.bottom_edge();
            face_factor.insert(ordered(bw, be), (fq, Letter::Y));
            for (a, b) in f.bottom_adjacent_edges() {
                let prev = face_factor.insert(ordered(a, b), (fq, Letter::X));
                debug_assert!(prev.is_none(), "edge got two face factors");
            }
        }

        let mut edge_ops = BTreeMap::new();
        for &e in lattice.edges() {
            let mut letters = vec![
                (layout.vertex(e.tail), Letter::X),
                (layout.vertex(e.head), Letter::Y),
            ];
            if let Some(&(fq, l)) = face_factor.get(&ordered(e.tail, e.head)) {
                letters.push((fq, l));
            }
            edge_ops.insert((e.tail, e.head), PauliString::from_letters(n, &letters));
        }

        let mut vertex_ops = BTreeMap::new();
        for &v in lattice.vertices() {
            vertex_ops.insert(v, PauliString::z(n, layout.vertex(v)));
        }

        let mut enc = HexEncoding {
            lattice,
            layout,
            edge_ops,
            vertex_ops,
            stabilizers: StabilizerGroup::new(n, Vec::new())?,
        };
        let mut generators = Vec::new();
        for f in enc.lattice.faces() {
            generators.push(enc.face_loop(f)?);
        }
        enc.stabilizers = StabilizerGroup::new(n, generators)?;
        Ok(enc)
    }

    pub fn lattice(&self) -> &HexLattice {
        &self.lattice
    }

    pub fn layout(&self) -> &QubitLayout {
        &self.layout
    }

    pub fn n_qubits(&self) -> usize {
        self.layout.total
    }

    pub fn edge_operator(&self, i: Vertex, j: Vertex) -> Result<PauliString> {
        if let Some(op) = self.edge_ops.get(&(i, j)) {
            return Ok(op.clone());
        }
        if let Some(op) = self.edge_ops.get(&(j, i)) {
            return Ok(op.negated());
        }
        Err(Error::EdgeNotInLattice {
            x0: i.x,
            y0: i.y,
            x1: j.x,
            y1: j.y,
        })
    }

    pub fn vertex_operator(&self, v: Vertex) -> Result<PauliString> {
        self.vertex_ops
            .get(&v)
            .cloned()
            .ok_or(Error::VertexOutOfRange { x: v.x, y: v.y })
    }

    pub fn edge_ops(&self) -> impl Iterator<Item = (DirectedEdge, &PauliString)> + '_ {
        self.edge_ops
            .iter()
            .map(|(&(tail, head), op)| (DirectedEdge { tail, head }, op))
    }

    pub fn vertex_ops(&self) -> impl Iterator<Item = (Vertex, &PauliString)> + '_ {
        self.vertex_ops.iter().map(|(&v, op)| (v, op))
    }

    pub fn loop_operator(&self, path: &[Vertex]) -> Result<PauliString> {
        if path.len() < 4 || path.first() != path.last() {
            return Err(Error::NotALoop);
        }
        let mut op = PauliString::identity(self.n_qubits());
        for w in path.windows(2) {
            op = op.mul(&self.edge_operator(w[0], w[1])?)?;
        }
        let edges = (path.len() - 1) as u8;
        for _ in 0..(edges % 4) {
            op = op.times_i();
        }
        Ok(op)
    }

    pub fn face_loop(&self, f: HexFace) -> Result<PauliString> {
        let ring = f.boundary();
        let mut path: Vec<Vertex> = ring.to_vec();
        path.push(ring[0]);
        self.loop_operator(&path)
    }

    /// One generator per face: there are no trivial cycles on the hex lattice,
    /// so the code space is the full fermionic space.
    pub fn stabilizers(&self) -> &StabilizerGroup {
        &self.stabilizers
    }

    pub fn total_vertex_parity(&self) -> PauliString {
        let mut op = PauliString::identity(self.n_qubits());
        for v in self.vertex_ops.values() {
            op = op.mul(v).expect("same size");
        }
        op
    }

    /// Degree-2 boundary vertices whose incident edges uniformly point in
    /// (Majorana X) or out (Majorana Y), in reading order.
    pub fn majorana_corners(&self) -> Vec<(Vertex, PauliString)> {
        let mut out = Vec::new();
        for &v in self.lattice.vertices() {
            let incident = self.lattice.incident_edges(v);
            if incident.len() != 2 {
                continue;
            }
            let all_in = incident.iter().all(|e| e.head == v);
            let all_out = incident.iter().all(|e| e.tail == v);
            if !(all_in || all_out) {
                continue;
            }
            let letter = if all_in { Letter::X } else { Letter::Y };
            out.push((
                v,
                PauliString::single(self.n_qubits(), self.layout.vertex(v), letter),
            ));
        }
        out
    }

    pub fn inject_majorana(&self) -> Result<(Vertex, PauliString)> {
        self.majorana_corners()
            .into_iter()
            .next()
            .ok_or(Error::NoMajoranaCorner)
    }
}

fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}
