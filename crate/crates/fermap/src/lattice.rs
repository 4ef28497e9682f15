//! Square-lattice geometry: vertices, directed edges, face parity, qubit layout
//! and case classification.
//!
//! Coordinates put row 0 at the top and column 0 at the left; "north" means
//! decreasing row. Faces are labelled odd/even in a checkerboard, and the odd
//! faces carry the extra qubits.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lattice vertex (fermionic site). Ordering is reading order: row, then column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
}

impl Vertex {
    pub fn new(x: usize, y: usize) -> Self {
        Vertex { x, y }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let (x, y) = <(usize, usize)>::deserialize(de)?;
        Ok(Vertex { x, y })
    }
}

/// Lattice face, addressed by its top-left corner vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub fx: usize,
    pub fy: usize,
}

impl Face {
    pub fn new(fx: usize, fy: usize) -> Self {
        Face { fx, fy }
    }

    /// The four corner vertices in reading order.
    pub fn corners(&self) -> [Vertex; 4] {
        [
            Vertex::new(self.fx, self.fy),
            Vertex::new(self.fx + 1, self.fy),
            Vertex::new(self.fx, self.fy + 1),
            Vertex::new(self.fx + 1, self.fy + 1),
        ]
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f({},{})", self.fx, self.fy)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.fy, self.fx).cmp(&(other.fy, other.fx))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Vertical,
    Horizontal,
}

/// An oriented lattice edge. Tail and head differ by one step along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub tail: Vertex,
    pub head: Vertex,
}

impl DirectedEdge {
    pub fn axis(&self) -> Axis {
        if self.tail.x == self.head.x {
            Axis::Vertical
        } else {
            Axis::Horizontal
        }
    }

    pub fn reversed(&self) -> DirectedEdge {
        DirectedEdge {
            tail: self.head,
            head: self.tail,
        }
    }

    /// True when the edge points toward decreasing row.
    pub fn points_north(&self) -> bool {
        self.axis() == Axis::Vertical && self.head.y < self.tail.y
    }

    pub fn points_south(&self) -> bool {
        self.axis() == Axis::Vertical && self.head.y > self.tail.y
    }

    pub fn points_east(&self) -> bool {
        self.axis() == Axis::Horizontal && self.head.x > self.tail.x
    }
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// Case tag from the odd/even face balance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeCase {
    /// Even face count: equally many odd and even faces. Full Fock space.
    I,
    /// One more even face: even-parity sector only.
    II,
    /// One more odd face: full Fock space plus a logical qubit.
    III,
}

impl fmt::Display for LatticeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeCase::I => write!(f, "I"),
            LatticeCase::II => write!(f, "II"),
            LatticeCase::III => write!(f, "III"),
        }
    }
}

/// Classification plus the counts it was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case: LatticeCase,
    pub modes: usize,
    pub odd_faces: usize,
    pub even_faces: usize,
}

/// Assignment of qubit indices: vertex qubits first in reading order, then one
/// qubit per odd face in reading order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitLayout {
    pub vertex_qubit: BTreeMap<Vertex, usize>,
    pub face_qubit: BTreeMap<Face, usize>,
    pub total: usize,
}

impl QubitLayout {
    pub fn vertex(&self, v: Vertex) -> usize {
        self.vertex_qubit[&v]
    }

    pub fn face(&self, f: Face) -> usize {
        self.face_qubit[&f]
    }

    pub fn mode_count(&self) -> usize {
        self.vertex_qubit.len()
    }
}

/// A W x H grid of fermionic sites with a checkerboard face labelling.
///
/// `checkerboard_phase` selects which parity class is odd: face (fx, fy) is odd
/// iff (fx + fy) mod 2 equals the phase. The default phase 0 makes the top-left
/// face odd. Edge orientations follow the phase so that the even faces are the
/// directed cycles; see [`SquareLattice::orient_edge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareLattice {
    width: usize,
    height: usize,
    phase: u8,
}

impl SquareLattice {
    pub fn new(width: usize, height: usize, checkerboard_phase: u8) -> Result<Self> {
        if width < 2 || height < 2 {
            return Err(Error::LatticeTooSmall { width, height });
        }
        if checkerboard_phase > 1 {
            return Err(Error::InvalidInput(format!(
                "checkerboard_phase must be 0 or 1, got {checkerboard_phase}"
            )));
        }
        Ok(SquareLattice {
            width,
            height,
            phase: checkerboard_phase,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn checkerboard_phase(&self) -> u8 {
        self.phase
    }

    pub fn mode_count(&self) -> usize {
        self.width * self.height
    }

    pub fn face_count(&self) -> usize {
        (self.width - 1) * (self.height - 1)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.x < self.width && v.y < self.height
    }

    pub fn contains_face(&self, f: Face) -> bool {
        f.fx + 1 < self.width && f.fy + 1 < self.height
    }

    /// Vertices in reading order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.height).flat_map(move |y| (0..self.width).map(move |x| Vertex::new(x, y)))
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.height - 1)
            .flat_map(move |fy| (0..self.width - 1).map(move |fx| Face::new(fx, fy)))
    }

    /// A face is odd (qubit-bearing) iff its coordinate parity matches the
    /// checkerboard phase.
    pub fn face_is_odd(&self, f: Face) -> bool {
        ((f.fx + f.fy) % 2) as u8 == self.phase
    }

    pub fn odd_faces(&self) -> Vec<Face> {
        self.faces().filter(|&f| self.face_is_odd(f)).collect()
    }

    pub fn even_faces(&self) -> Vec<Face> {
        self.faces().filter(|&f| !self.face_is_odd(f)).collect()
    }

    /// All edges as canonically oriented [`DirectedEdge`]s, in reading order of
    /// the lexically smaller endpoint (vertical before horizontal at a tie).
    pub fn edges(&self) -> Vec<DirectedEdge> {
        let mut out = Vec::new();
        for y in 0..self.height {
            for x in 0..self.width {
                let v = Vertex::new(x, y);
                if y + 1 < self.height {
                    out.push(self.orient_vertical(v, Vertex::new(x, y + 1)));
                }
                if x + 1 < self.width {
                    out.push(self.orient_horizontal(v, Vertex::new(x + 1, y)));
                }
            }
        }
        out
    }

    pub fn are_neighbors(&self, a: Vertex, b: Vertex) -> bool {
        if !self.contains_vertex(a) || !self.contains_vertex(b) {
            return false;
        }
        let dx = a.x.abs_diff(b.x);
        let dy = a.y.abs_diff(b.y);
        dx + dy == 1
    }

    fn orient_vertical(&self, top: Vertex, bottom: Vertex) -> DirectedEdge {
        // north iff the column is even
        if top.x % 2 == 0 {
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
    }

    fn orient_horizontal(&self, left: Vertex, right: Vertex) -> DirectedEdge {
        // east iff (row + phase) is odd; this ties the circulation to the
        // checkerboard so the even faces are the directed cycles
        if (left.y + self.phase as usize) % 2 == 1 {
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

    /// Canonical orientation of the undirected edge {a, b}.
    ///
    /// Vertical edges point north iff their column is even. Horizontal edges
    /// point east iff (row + checkerboard_phase) is odd. The consequence,
    /// tested rather than assumed: every even face's boundary is a directed
    /// 4-cycle whose handedness is constant along each row of even faces and
    /// alternates between rows, while odd-face boundaries meet head-to-head and
    /// tail-to-tail at every corner.
    pub fn orient_edge(&self, a: Vertex, b: Vertex) -> Result<DirectedEdge> {
        if !self.are_neighbors(a, b) {
            return Err(Error::EdgeNotInLattice {
                x0: a.x,
                y0: a.y,
                x1: b.x,
                y1: b.y,
            });
        }
        if a.x == b.x {
            let (top, bottom) = if a.y < b.y { (a, b) } else { (b, a) };
            Ok(self.orient_vertical(top, bottom))
        } else {
            let (left, right) = if a.x < b.x { (a, b) } else { (b, a) };
            Ok(self.orient_horizontal(left, right))
        }
    }

    /// The two faces adjacent to an edge, in-range ones only.
    pub fn adjacent_faces(&self, a: Vertex, b: Vertex) -> Result<Vec<Face>> {
        if !self.are_neighbors(a, b) {
            return Err(Error::EdgeNotInLattice {
                x0: a.x,
                y0: a.y,
                x1: b.x,
                y1: b.y,
            });
        }
        let mut faces = Vec::new();
        if a.x == b.x {
            // vertical edge at column x spanning rows min(y)..min(y)+1
            let x = a.x;
            let y = a.y.min(b.y);
            if x > 0 {
                faces.push(Face::new(x - 1, y));
            }
            if x < self.width - 1 {
                faces.push(Face::new(x, y));
            }
        } else {
            let x = a.x.min(b.x);
            let y = a.y;
            if y > 0 {
                faces.push(Face::new(x, y - 1));
            }
            if y < self.height - 1 {
                faces.push(Face::new(x, y));
            }
        }
        Ok(faces)
    }

    /// The unique adjacent odd face, if any. Interior edges always have exactly
    /// one (adjacent faces have opposite parity); boundary edges may have none.
    pub fn odd_face_of(&self, a: Vertex, b: Vertex) -> Result<Option<Face>> {
        let odd: Vec<Face> = self
            .adjacent_faces(a, b)?
            .into_iter()
            .filter(|&f| self.face_is_odd(f))
            .collect();
        debug_assert!(odd.len() <= 1, "checkerboard parity violated");
        Ok(odd.first().copied())
    }

    pub fn classify(&self) -> CaseReport {
        let modes = self.mode_count();
        let odd_faces = self.odd_faces().len();
        let even_faces = self.face_count() - odd_faces;
        let case = if self.face_count() % 2 == 0 {
            debug_assert_eq!(odd_faces, even_faces);
            LatticeCase::I
        } else if even_faces == odd_faces + 1 {
            LatticeCase::II
        } else {
            debug_assert_eq!(odd_faces, even_faces + 1);
            LatticeCase::III
        };
        CaseReport {
            case,
            modes,
            odd_faces,
            even_faces,
        }
    }

    /// Vertex qubits 0..M-1 in reading order, then odd-face qubits in reading
    /// order. Total is M + OF, always below 1.5 M.
    pub fn qubit_layout(&self) -> QubitLayout {
        let mut vertex_qubit = BTreeMap::new();
        for (i, v) in self.vertices().enumerate() {
            vertex_qubit.insert(v, i);
        }
        let m = vertex_qubit.len();
        let mut face_qubit = BTreeMap::new();
        for (i, f) in self.odd_faces().into_iter().enumerate() {
            face_qubit.insert(f, m + i);
        }
        let total = m + face_qubit.len();
        QubitLayout {
            vertex_qubit,
            face_qubit,
            total,
        }
    }

    /// Corner vertices in reading order.
    pub fn corners(&self) -> [Vertex; 4] {
        [
            Vertex::new(0, 0),
            Vertex::new(self.width - 1, 0),
            Vertex::new(0, self.height - 1),
            Vertex::new(self.width - 1, self.height - 1),
        ]
    }

    /// The single face touching a corner vertex.
    pub fn corner_face(&self, corner: Vertex) -> Face {
        let fx = if corner.x == 0 { 0 } else { self.width - 2 };
        let fy = if corner.y == 0 { 0 } else { self.height - 2 };
        Face::new(fx, fy)
    }

    /// Edges incident on a vertex.
    pub fn incident_edges(&self, v: Vertex) -> Vec<DirectedEdge> {
        let mut out = Vec::new();
        let mut push = |a: Vertex, b: Vertex, lat: &Self| {
            if lat.are_neighbors(a, b) {
                out.push(lat.orient_edge(a, b).expect("checked neighbors"));
            }
        };
        if v.y > 0 {
            push(v, Vertex::new(v.x, v.y - 1), self);
        }
        if v.x > 0 {
            push(v, Vertex::new(v.x - 1, v.y), self);
        }
        push(v, Vertex::new(v.x + 1, v.y), self);
        push(v, Vertex::new(v.x, v.y + 1), self);
        out
    }
}

/// On-disk lattice description (the `--lattice` JSON schema).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum LatticeSpec {
    Square {
        width: usize,
        height: usize,
        #[serde(default)]
        checkerboard_phase: u8,
    },
    Hex {
        face_columns: usize,
        face_rows: usize,
    },
}

/// Either supported lattice geometry.
#[derive(Debug, Clone)]
pub enum Lattice {
    Square(SquareLattice),
    Hex(crate::hex::HexLattice),
}

impl Lattice {
    pub fn from_spec(spec: &LatticeSpec) -> Result<Self> {
        match *spec {
            LatticeSpec::Square {
                width,
                height,
                checkerboard_phase,
            } => Ok(Lattice::Square(SquareLattice::new(
                width,
                height,
                checkerboard_phase,
            )?)),
            LatticeSpec::Hex {
                face_columns,
                face_rows,
            } => Ok(Lattice::Hex(crate::hex::HexLattice::new(
                face_columns,
                face_rows,
            )?)),
        }
    }

    pub fn to_spec(&self) -> LatticeSpec {
        match self {
            Lattice::Square(sq) => LatticeSpec::Square {
                width: sq.width(),
                height: sq.height(),
                checkerboard_phase: sq.checkerboard_phase(),
            },
            Lattice::Hex(hx) => LatticeSpec::Hex {
                face_columns: hx.face_columns(),
                face_rows: hx.face_rows(),
            },
        }
    }

    pub fn mode_count(&self) -> usize {
        match self {
            Lattice::Square(sq) => sq.mode_count(),
            Lattice::Hex(hx) => hx.mode_count(),
        }
    }

    pub fn are_neighbors(&self, a: Vertex, b: Vertex) -> bool {
        match self {
            Lattice::Square(sq) => sq.are_neighbors(a, b),
            Lattice::Hex(hx) => hx.are_neighbors(a, b),
        }
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        match self {
            Lattice::Square(sq) => sq.contains_vertex(v),
            Lattice::Hex(hx) => hx.contains_vertex(v),
        }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Lattice::Square(sq) => sq.vertices().collect(),
            Lattice::Hex(hx) => hx.vertices().to_vec(),
        }
    }

    pub fn edges(&self) -> Vec<DirectedEdge> {
        match self {
            Lattice::Square(sq) => sq.edges(),
            Lattice::Hex(hx) => hx.edges().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_strips() {
        assert!(SquareLattice::new(1, 5, 0).is_err());
        assert!(SquareLattice::new(5, 1, 0).is_err());
        assert!(SquareLattice::new(2, 2, 0).is_ok());
        assert!(SquareLattice::new(2, 2, 2).is_err());
    }

    #[test]
    fn column_zero_points_north_for_both_phases() {
        for phase in [0, 1] {
            let lat = SquareLattice::new(4, 4, phase).unwrap();
            let e = lat
                .orient_edge(Vertex::new(0, 0), Vertex::new(0, 1))
                .unwrap();
            assert!(e.points_north(), "phase {phase}");
        }
    }

    #[test]
    fn row_zero_points_east_when_top_left_face_is_even() {
        // with phase 1 the top-left face is even and row 0 runs east,
        // with phase 0 the orientation flips to keep even faces circulating
        let lat1 = SquareLattice::new(4, 4, 1).unwrap();
        let e1 = lat1
            .orient_edge(Vertex::new(0, 0), Vertex::new(1, 0))
            .unwrap();
        assert!(e1.points_east());
        let lat0 = SquareLattice::new(4, 4, 0).unwrap();
        let e0 = lat0
            .orient_edge(Vertex::new(0, 0), Vertex::new(1, 0))
            .unwrap();
        assert!(!e0.points_east());
    }

    /// Checks the circulation pattern of a face boundary: even faces are
    /// directed 4-cycles, odd faces alternate head-to-head/tail-to-tail.
    fn face_cycle_kind(lat: &SquareLattice, f: Face) -> &'static str {
        let [tl, tr, bl, br] = f.corners();
        let ring = [tl, tr, br, bl, tl];
        let mut forward = 0;
        for w in ring.windows(2) {
            let e = lat.orient_edge(w[0], w[1]).unwrap();
            if e.tail == w[0] {
                forward += 1;
            }
        }
        match forward {
            4 | 0 => "cycle",
            2 => "alternating",
            _ => "broken",
        }
    }

    #[test]
    fn even_faces_circulate_odd_faces_alternate() {
        for (w, h) in [(2, 2), (5, 4), (6, 6), (3, 7)] {
            for phase in [0, 1] {
                let lat = SquareLattice::new(w, h, phase).unwrap();
                for f in lat.faces() {
                    let kind = face_cycle_kind(&lat, f);
                    if lat.face_is_odd(f) {
                        assert_eq!(kind, "alternating", "{w}x{h} phase {phase} {f}");
                    } else {
                        assert_eq!(kind, "cycle", "{w}x{h} phase {phase} {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn even_cycle_handedness_alternates_between_rows() {
        let lat = SquareLattice::new(6, 6, 0).unwrap();
        // handedness of an even-face cycle: true if the top edge runs east
        let handedness = |f: Face| {
            let e = lat
                .orient_edge(Vertex::new(f.fx, f.fy), Vertex::new(f.fx + 1, f.fy))
                .unwrap();
            e.points_east()
        };
        let evens = lat.even_faces();
        for f in &evens {
            for g in &evens {
                if f.fy == g.fy {
                    assert_eq!(handedness(*f), handedness(*g));
                } else if f.fy.abs_diff(g.fy) == 1 {
                    assert_ne!(handedness(*f), handedness(*g));
                }
            }
        }
    }

    #[test]
    fn odd_face_of_interior_edges_is_unique() {
        let lat = SquareLattice::new(5, 4, 0).unwrap();
        for e in lat.edges() {
            let faces = lat.adjacent_faces(e.tail, e.head).unwrap();
            if faces.len() == 2 {
                assert_ne!(
                    lat.face_is_odd(faces[0]),
                    lat.face_is_odd(faces[1]),
                    "adjacent faces must differ in parity"
                );
                assert!(lat.odd_face_of(e.tail, e.head).unwrap().is_some());
            }
        }
    }

    #[test]
    fn boundary_edge_next_to_even_face_has_no_odd_face() {
        // 2x2 with phase 1: the single face is even, every edge is a boundary
        // edge with no odd face
        let lat = SquareLattice::new(2, 2, 1).unwrap();
        for e in lat.edges() {
            assert_eq!(lat.odd_face_of(e.tail, e.head).unwrap(), None);
        }
        // 2x2 with phase 0: the single face is odd and every edge sees it
        let lat = SquareLattice::new(2, 2, 0).unwrap();
        for e in lat.edges() {
            assert_eq!(
                lat.odd_face_of(e.tail, e.head).unwrap(),
                Some(Face::new(0, 0))
            );
        }
    }

    #[test]
    fn classification_examples() {
        // Fig. 1 shape: 5 columns, 4 rows, 12 faces -> case I
        let fig1 = SquareLattice::new(5, 4, 0).unwrap();
        let r = fig1.classify();
        assert_eq!(r.case, LatticeCase::I);
        assert_eq!((r.modes, r.odd_faces, r.even_faces), (20, 6, 6));

        let lat = SquareLattice::new(2, 2, 1).unwrap();
        let r = lat.classify();
        assert_eq!(r.case, LatticeCase::II);
        assert_eq!((r.odd_faces, r.even_faces), (0, 1));

        let lat = SquareLattice::new(2, 2, 0).unwrap();
        let r = lat.classify();
        assert_eq!(r.case, LatticeCase::III);
        assert_eq!((r.odd_faces, r.even_faces), (1, 0));
    }

    #[test]
    fn case_partition_is_exhaustive() {
        for w in 2..=8 {
            for h in 2..=8 {
                for phase in [0, 1] {
                    let lat = SquareLattice::new(w, h, phase).unwrap();
                    let r = lat.classify();
                    let diff = r.odd_faces as i64 - r.even_faces as i64;
                    match r.case {
                        LatticeCase::I => assert_eq!(diff, 0),
                        LatticeCase::II => assert_eq!(diff, -1),
                        LatticeCase::III => assert_eq!(diff, 1),
                    }
                    assert_eq!(r.odd_faces + r.even_faces, (w - 1) * (h - 1));
                }
            }
        }
    }

    #[test]
    fn layout_examples() {
        let lat = SquareLattice::new(3, 3, 0).unwrap();
        assert_eq!(lat.qubit_layout().total, 11);

        let lat = SquareLattice::new(2, 2, 0).unwrap();
        assert_eq!(lat.qubit_layout().total, 5);

        let lat = SquareLattice::new(5, 4, 0).unwrap();
        assert_eq!(lat.qubit_layout().total, 26);
    }

    #[test]
    fn layout_is_reading_ordered_and_below_ratio() {
        for w in 2..=8 {
            for h in 2..=8 {
                for phase in [0, 1] {
                    let lat = SquareLattice::new(w, h, phase).unwrap();
                    let layout = lat.qubit_layout();
                    let m = lat.mode_count();
                    assert!(layout.total < m + (m + 1) / 2 + 1);
                    assert!((layout.total as f64) < 1.5 * m as f64);
                    // row-major vertex indices
                    for (v, &q) in &layout.vertex_qubit {
                        assert_eq!(q, v.y * w + v.x);
                    }
                    for (_, &q) in &layout.face_qubit {
                        assert!(q >= m && q < layout.total);
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_spec_json_roundtrip() {
        let json = r#"{"type":"square","width":3,"height":4,"checkerboard_phase":1}"#;
        let spec: LatticeSpec = serde_json::from_str(json).unwrap();
        let lat = Lattice::from_spec(&spec).unwrap();
        match &lat {
            Lattice::Square(sq) => {
                assert_eq!((sq.width(), sq.height(), sq.checkerboard_phase()), (3, 4, 1));
            }
            _ => panic!("expected square"),
        }
        assert_eq!(serde_json::to_string(&lat.to_spec()).unwrap(), json);
    }
}
