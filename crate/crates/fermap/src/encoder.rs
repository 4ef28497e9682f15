//! The compact mapping on a square lattice: encoded edge and vertex operators,
//! stabilizer generators from even-face loops, Majorana and hole injection,
//! the case-III logical qubit, and the toric-code factorization of the
//! stabilizers.
//!
//! Edge operators put an X on the tail, a Y on the head, and one letter on the
//! unique adjacent odd face (X for vertical edges, Y for horizontal ones).
//! Vertical edges carry a sign split between south and north so that every
//! loop around an odd face multiplies to +identity exactly; that invariant,
//! not the coordinate convention, anchors the signs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{Axis, DirectedEdge, Face, LatticeCase, QubitLayout, SquareLattice, Vertex};
use crate::pauli::{Letter, PauliString};
use crate::stabilizer::StabilizerGroup;

/// Sign rule for vertical edge operators. `VerticalFlipped` negates the
/// south/north split; it exists so tests can show the odd-face loop check
/// catches a wrong convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    #[default]
    Standard,
    VerticalFlipped,
}

/// Logical Pauli triple on the case-III topological qubit.
#[derive(Debug, Clone)]
pub struct LogicalQubit {
    pub x: PauliString,
    pub y: PauliString,
    pub z: PauliString,
}

/// The full set of encoded operators for one square lattice.
#[derive(Debug, Clone)]
pub struct CompactEncoding {
    lattice: SquareLattice,
    layout: QubitLayout,
    edge_ops: BTreeMap<(Vertex, Vertex), PauliString>,
    vertex_ops: BTreeMap<Vertex, PauliString>,
    stabilizers: StabilizerGroup,
}

impl CompactEncoding {
    pub fn new(lattice: SquareLattice) -> Result<Self> {
        Self::with_sign_convention(lattice, SignConvention::Standard)
    }

    pub fn with_sign_convention(lattice: SquareLattice, signs: SignConvention) -> Result<Self> {
        let layout = lattice.qubit_layout();
        let n = layout.total;

        let mut edge_ops = BTreeMap::new();
        for e in lattice.edges() {
            let mut letters = vec![
                (layout.vertex(e.tail), Letter::X),
                (layout.vertex(e.head), Letter::Y),
            ];
            if let Some(f) = lattice.odd_face_of(e.tail, e.head)? {
                let face_letter = match e.axis() {
                    Axis::Vertical => Letter::X,
                    Axis::Horizontal => Letter::Y,
                };
                letters.push((layout.face(f), face_letter));
            }
            let mut op = PauliString::from_letters(n, &letters);
            let negate = match (e.axis(), signs) {
                (Axis::Vertical, SignConvention::Standard) => e.points_north(),
                (Axis::Vertical, SignConvention::VerticalFlipped) => e.points_south(),
                (Axis::Horizontal, _) => false,
            };
            if negate {
                op = op.negated();
            }
            edge_ops.insert((e.tail, e.head), op);
        }

        let mut vertex_ops = BTreeMap::new();
        for v in lattice.vertices() {
            vertex_ops.insert(v, PauliString::z(n, layout.vertex(v)));
        }

        let mut enc = CompactEncoding {
            lattice,
            layout,
            edge_ops,
            vertex_ops,
            stabilizers: StabilizerGroup::new(n, Vec::new())?,
        };

        let mut generators = Vec::new();
        for f in enc.lattice.even_faces() {
            generators.push(enc.face_loop(f)?);
        }
        enc.stabilizers = StabilizerGroup::new(n, generators)?;
        Ok(enc)
    }

    pub fn lattice(&self) -> &SquareLattice {
        &self.lattice
    }

    pub fn layout(&self) -> &QubitLayout {
        &self.layout
    }

    pub fn n_qubits(&self) -> usize {
        self.layout.total
    }

    /// Encoded edge operator for the directed edge i -> j. Requests against
    /// the canonical orientation return the negation.
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

    /// Encoded vertex operator: Z on the vertex qubit.
    pub fn vertex_operator(&self, v: Vertex) -> Result<PauliString> {
        self.vertex_ops
            .get(&v)
            .cloned()
            .ok_or(Error::VertexOutOfRange { x: v.x, y: v.y })
    }

    /// Canonically oriented edge operators in deterministic order.
    pub fn edge_ops(&self) -> impl Iterator<Item = (DirectedEdge, &PauliString)> + '_ {
        self.edge_ops.iter().map(|(&(tail, head), op)| {
            (DirectedEdge { tail, head }, op)
        })
    }

    pub fn vertex_ops(&self) -> impl Iterator<Item = (Vertex, &PauliString)> + '_ {
        self.vertex_ops.iter().map(|(&v, op)| (v, op))
    }

    /// `i^(|p|-1) * prod E_{p_t p_{t+1}}` for a closed vertex sequence
    /// (last entry equal to the first).
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

    /// Boundary loop of a face, traversed TL -> TR -> BR -> BL -> TL.
    pub fn face_loop(&self, f: Face) -> Result<PauliString> {
        let [tl, tr, bl, br] = f.corners();
        self.loop_operator(&[tl, tr, br, bl, tl])
    }

    /// One generator per even face; odd-face loops are trivial.
    pub fn stabilizers(&self) -> &StabilizerGroup {
        &self.stabilizers
    }

    /// The encoded total parity operator `prod_j V_j`: all-Z on vertex qubits.
    pub fn total_vertex_parity(&self) -> PauliString {
        let mut op = PauliString::identity(self.n_qubits());
        for v in self.vertex_ops.values() {
            op = op.mul(v).expect("same size");
        }
        op
    }

    /// Corner vertices that bound an odd corner face, with the injected
    /// Majorana operator: X if both incident edges point into the corner,
    /// Y if both point away. Empty exactly in case II.
    pub fn majorana_corners(&self) -> Vec<(Vertex, PauliString)> {
        let mut out = Vec::new();
        for c in self.lattice.corners() {
            if !self.lattice.face_is_odd(self.lattice.corner_face(c)) {
                continue;
            }
            let incident = self.lattice.incident_edges(c);
            debug_assert_eq!(incident.len(), 2);
            let all_in = incident.iter().all(|e| e.head == c);
            let all_out = incident.iter().all(|e| e.tail == c);
            debug_assert!(all_in || all_out, "odd corner arrows must be uniform");
            let letter = if all_in { Letter::X } else { Letter::Y };
            out.push((c, PauliString::single(self.n_qubits(), self.layout.vertex(c), letter)));
        }
        out
    }

    /// Default Majorana injection: the first valid corner in reading order.
    pub fn inject_majorana(&self) -> Result<(Vertex, PauliString)> {
        self.majorana_corners()
            .into_iter()
            .next()
            .ok_or(Error::NoMajoranaCorner)
    }

    /// Path from `from` to `to` walking the column first, then the row.
    pub fn staircase_path(&self, from: Vertex, to: Vertex) -> Vec<Vertex> {
        let mut path = vec![from];
        let mut cur = from;
        while cur.y != to.y {
            cur.y = if cur.y < to.y { cur.y + 1 } else { cur.y - 1 };
            path.push(cur);
        }
        while cur.x != to.x {
            cur.x = if cur.x < to.x { cur.x + 1 } else { cur.x - 1 };
            path.push(cur);
        }
        path
    }

    /// Move a Majorana-type operator along a path of edges: each step maps
    /// `g -> i g E_{a b}`, which preserves hermiticity and self-inverseness.
    pub fn transport(&self, op: &PauliString, path: &[Vertex]) -> Result<PauliString> {
        let start = *path.first().ok_or(Error::NotALoop)?;
        if !self.lattice.contains_vertex(start) {
            return Err(Error::VertexOutOfRange {
                x: start.x,
                y: start.y,
            });
        }
        let start_qubit = self.layout.vertex(start);
        if !op.support().any(|q| q == start_qubit) {
            return Err(Error::InvalidInput(format!(
                "transported operator does not act on the path start {start}"
            )));
        }
        let mut cur = op.clone();
        for (step, w) in path.windows(2).enumerate() {
            let edge = self
                .edge_operator(w[0], w[1])
                .map_err(|_| Error::BrokenPath { step })?;
            cur = cur.mul(&edge)?.times_i();
        }
        Ok(cur)
    }

    /// Majorana at `site`, transported from the default corner (or from the
    /// head of the given path).
    fn majorana_at(&self, site: Vertex, path: Option<&[Vertex]>) -> Result<PauliString> {
        match path {
            Some(p) => {
                if p.last() != Some(&site) {
                    return Err(Error::InvalidInput(format!(
                        "path does not end at the requested site {site}"
                    )));
                }
                let start = *p.first().ok_or(Error::NotALoop)?;
                let corner = self
                    .majorana_corners()
                    .into_iter()
                    .find(|(c, _)| *c == start)
                    .ok_or(Error::NoMajoranaCorner)?;
                self.transport(&corner.1, p)
            }
            None => {
                let (corner, gamma) = self.inject_majorana()?;
                let p = self.staircase_path(corner, site);
                self.transport(&gamma, &p)
            }
        }
    }

    /// Encoded Majorana hole operator `h_i = gamma_i * prod_j V_j`.
    pub fn hole_operator(&self, site: Vertex, path: Option<&[Vertex]>) -> Result<PauliString> {
        if !self.lattice.contains_vertex(site) {
            return Err(Error::VertexOutOfRange {
                x: site.x,
                y: site.y,
            });
        }
        let gamma = self.majorana_at(site, path)?;
        gamma.mul(&self.total_vertex_parity())
    }

    /// The four Majorana species of case III, one per odd corner in reading
    /// order, all transported to `site` along staircase paths.
    pub fn species_at(&self, site: Vertex) -> Result<[PauliString; 4]> {
        let report = self.lattice.classify();
        if report.case != LatticeCase::III {
            return Err(Error::WrongCase {
                required: "III",
                actual: match report.case {
                    LatticeCase::I => "I",
                    LatticeCase::II => "II",
                    LatticeCase::III => "III",
                },
            });
        }
        let corners = self.majorana_corners();
        debug_assert_eq!(corners.len(), 4);
        let mut out = Vec::with_capacity(4);
        for (corner, gamma) in corners {
            let path = self.staircase_path(corner, site);
            out.push(self.transport(&gamma, &path)?);
        }
        Ok(out.try_into().expect("four corners"))
    }

    /// Logical Pauli operators of the case-III qubit, built from species pair
    /// products at the default site (the first corner).
    pub fn logical_paulis(&self) -> Result<LogicalQubit> {
        self.logical_paulis_at(Vertex::new(0, 0))
    }

    pub fn logical_paulis_at(&self, site: Vertex) -> Result<LogicalQubit> {
        let [_, b, c, d] = self.species_at(site)?;
        let minus_i = |p: PauliString| p.times_i().negated();
        // -i times the pair products; the species anticommute pairwise so the
        // triple closes as X*Y = iZ
        let x = minus_i(c.mul(&d)?);
        let y = minus_i(d.mul(&b)?);
        let z = minus_i(b.mul(&c)?);
        Ok(LogicalQubit { x, y, z })
    }

    /// Split a stabilizer generator into its toric-code face factor and its
    /// 4-qubit vertex Z-parity factor. The face factor carries the sign.
    pub fn toric_factorization(&self, gen: &PauliString) -> Result<(PauliString, PauliString)> {
        let n = self.n_qubits();
        if gen.n_qubits() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: gen.n_qubits(),
            });
        }
        let m = self.layout.mode_count();
        let mut vertex_letters = Vec::new();
        let mut face_letters = Vec::new();
        for q in gen.support() {
            if q < m {
                vertex_letters.push((q, gen.letter_at(q)));
            } else {
                face_letters.push((q, gen.letter_at(q)));
            }
        }
        if vertex_letters.len() != 4 || vertex_letters.iter().any(|&(_, l)| l != Letter::Z) {
            return Err(Error::UnexpectedGeneratorForm {
                reason: format!("vertex part is not a 4-qubit Z parity check in {gen}"),
            });
        }
        // the four Z's must be the corners of a single even face
        let face = {
            let verts: Vec<Vertex> = self
                .layout
                .vertex_qubit
                .iter()
                .filter(|(_, &q)| vertex_letters.iter().any(|&(vq, _)| vq == q))
                .map(|(&v, _)| v)
                .collect();
            let fx = verts.iter().map(|v| v.x).min().unwrap();
            let fy = verts.iter().map(|v| v.y).min().unwrap();
            let f = Face::new(fx, fy);
            let mut corners = f.corners().to_vec();
            corners.sort();
            let mut sorted = verts.clone();
            sorted.sort();
            if corners != sorted || self.lattice.face_is_odd(f) {
                return Err(Error::UnexpectedGeneratorForm {
                    reason: format!("Z support of {gen} is not an even face"),
                });
            }
            f
        };
        // expected face letters: Y on the north/south odd neighbours (reached
        // through horizontal edges), X on the east/west ones (vertical edges)
        let mut expected = BTreeMap::new();
        let (fx, fy) = (face.fx as isize, face.fy as isize);
        for (dfx, dfy, letter) in [
            (0isize, -1isize, Letter::Y),
            (0, 1, Letter::Y),
            (-1, 0, Letter::X),
            (1, 0, Letter::X),
        ] {
            let (nx, ny) = (fx + dfx, fy + dfy);
            if nx < 0 || ny < 0 {
                continue;
            }
            let nf = Face::new(nx as usize, ny as usize);
            if self.lattice.contains_face(nf) {
                debug_assert!(self.lattice.face_is_odd(nf));
                expected.insert(self.layout.face(nf), letter);
            }
        }
        let actual: BTreeMap<usize, Letter> = face_letters.iter().copied().collect();
        if actual != expected {
            return Err(Error::UnexpectedGeneratorForm {
                reason: format!("face part of {gen} does not match the star/plaquette pattern"),
            });
        }
        let vertex_part = PauliString::from_letters(n, &vertex_letters);
        let mut face_part = PauliString::from_letters(n, &face_letters);
        for _ in 0..gen.phase_exp() {
            face_part = face_part.times_i();
        }
        Ok((face_part, vertex_part))
    }
}
