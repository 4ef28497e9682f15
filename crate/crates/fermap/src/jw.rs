//! Jordan-Wigner reference encoding on the lattice modes.
//!
//! Ladder operators map to Z-string-prefixed X/Y words, Majoranas to
//! Z-string-prefixed single letters, and edge/vertex operators are exact
//! products of the Majorana images. Used as the oracle ground truth and as
//! the weight-comparison baseline.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, Vertex};
use crate::pauli::{Letter, PauliString, PauliSum};

/// How lattice vertices are numbered as fermionic modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeOrdering {
    /// Boustrophedon reading order: row 0 left to right, row 1 right to left.
    #[default]
    Snake,
    /// Plain reading order, for sensitivity checks.
    RowMajor,
}

/// A bijection between lattice vertices and mode indices 0..M-1.
#[derive(Debug, Clone)]
pub struct ModeOrder {
    order: Vec<Vertex>,
    index: BTreeMap<Vertex, usize>,
}

impl ModeOrder {
    pub fn new(lattice: &Lattice, ordering: ModeOrdering) -> Self {
        // group vertices by row, already sorted in reading order
        let vertices = lattice.vertices();
        let mut rows: Vec<Vec<Vertex>> = Vec::new();
        for v in vertices {
            match rows.last_mut() {
                Some(row) if row[0].y == v.y => row.push(v),
                _ => rows.push(vec![v]),
            }
        }
        let mut order = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if ordering == ModeOrdering::Snake && i % 2 == 1 {
                order.extend(row.iter().rev().copied());
            } else {
                order.extend(row.iter().copied());
            }
        }
        let index = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        ModeOrder { order, index }
    }

    pub fn mode_count(&self) -> usize {
        self.order.len()
    }

    pub fn mode_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn vertex_of(&self, mode: usize) -> Option<Vertex> {
        self.order.get(mode).copied()
    }
}

/// Jordan-Wigner images of ladder, Majorana, edge and vertex operators on
/// M = mode-count qubits.
#[derive(Debug, Clone)]
pub struct JwEncoding {
    modes: usize,
    order: ModeOrder,
}

impl JwEncoding {
    pub fn new(lattice: &Lattice, ordering: ModeOrdering) -> Self {
        let order = ModeOrder::new(lattice, ordering);
        JwEncoding {
            modes: order.mode_count(),
            order,
        }
    }

    pub fn snake(lattice: &Lattice) -> Self {
        Self::new(lattice, ModeOrdering::Snake)
    }

    pub fn n_qubits(&self) -> usize {
        self.modes
    }

    pub fn mode_order(&self) -> &ModeOrder {
        &self.order
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.modes {
            return Err(Error::ModeOutOfRange {
                index: mode,
                modes: self.modes,
            });
        }
        Ok(())
    }

    fn z_string_with(&self, mode: usize, letter: Letter) -> PauliString {
        let mut letters: Vec<(usize, Letter)> =
            (0..mode).map(|q| (q, Letter::Z)).collect();
        letters.push((mode, letter));
        PauliString::from_letters(self.modes, &letters)
    }

    /// `a_mode^dagger = 1/2 Z...Z (X - iY)` and `a_mode` its conjugate.
    pub fn ladder(&self, mode: usize, dagger: bool) -> Result<PauliSum> {
        self.check_mode(mode)?;
        let half = Complex64::new(0.5, 0.0);
        let sign = if dagger { -0.5 } else { 0.5 };
        let mut sum = PauliSum::zero(self.modes);
        sum.add_term(half, &self.z_string_with(mode, Letter::X));
        sum.add_term(
            Complex64::new(0.0, sign),
            &self.z_string_with(mode, Letter::Y),
        );
        Ok(sum)
    }

    /// `gamma_mode = Z...Z X` (bar = false) or `gammabar_mode = Z...Z Y`.
    pub fn majorana(&self, mode: usize, bar: bool) -> Result<PauliString> {
        self.check_mode(mode)?;
        let letter = if bar { Letter::Y } else { Letter::X };
        Ok(self.z_string_with(mode, letter))
    }

    /// `E_ij = -i gamma_i gamma_j`, `V_j = -i gamma_j gammabar_j`; exact
    /// products of the Majorana images.
    pub fn edge_vertex(&self, i: usize, j: usize) -> Result<(PauliString, PauliString)> {
        if i == j {
            return Err(Error::InvalidInput(
                "edge operator needs two distinct modes".into(),
            ));
        }
        let e = self
            .majorana(i, false)?
            .mul(&self.majorana(j, false)?)?
            .times_i()
            .negated();
        let v = self
            .majorana(j, false)?
            .mul(&self.majorana(j, true)?)?
            .times_i()
            .negated();
        Ok((e, v))
    }

    /// Edge operator between two lattice vertices.
    pub fn edge_operator(&self, a: Vertex, b: Vertex) -> Result<PauliString> {
        let i = self.order.mode_of(a).ok_or(Error::VertexOutOfRange {
            x: a.x,
            y: a.y,
        })?;
        let j = self.order.mode_of(b).ok_or(Error::VertexOutOfRange {
            x: b.x,
            y: b.y,
        })?;
        Ok(self.edge_vertex(i, j)?.0)
    }

    /// Vertex operator: always `Z` on the vertex's mode qubit.
    pub fn vertex_operator(&self, v: Vertex) -> Result<PauliString> {
        let mode = self.order.mode_of(v).ok_or(Error::VertexOutOfRange {
            x: v.x,
            y: v.y,
        })?;
        Ok(PauliString::z(self.modes, mode))
    }

    /// Total parity `prod_j V_j`: all-Z.
    pub fn total_parity(&self) -> PauliString {
        PauliString::from_letters(
            self.modes,
            &(0..self.modes).map(|q| (q, Letter::Z)).collect::<Vec<_>>(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SquareLattice;

    fn jw(w: usize, h: usize) -> JwEncoding {
        let lat = Lattice::Square(SquareLattice::new(w, h, 0).unwrap());
        JwEncoding::snake(&lat)
    }

    #[test]
    fn snake_order_on_3x3() {
        let jw = jw(3, 3);
        let expect = [
            (0, 0),
            (1, 0),
            (2, 0),
            (2, 1),
            (1, 1),
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 2),
        ];
        for (mode, &(x, y)) in expect.iter().enumerate() {
            assert_eq!(jw.mode_order().vertex_of(mode), Some(Vertex::new(x, y)));
        }
    }

    #[test]
    fn ladder_examples() {
        let jw = jw(2, 2);
        // mode 0: no Z string
        let a0d = jw.ladder(0, true).unwrap();
        assert_eq!(a0d.coefficient(&"+XIII".parse().unwrap()).re, 0.5);
        assert_eq!(a0d.coefficient(&"+YIII".parse().unwrap()).im, -0.5);
        // mode 2: Z string over modes 0 and 1
        let a2d = jw.ladder(2, true).unwrap();
        assert_eq!(a2d.coefficient(&"+ZZXI".parse().unwrap()).re, 0.5);
        assert_eq!(a2d.coefficient(&"+ZZYI".parse().unwrap()).im, -0.5);
        assert!(jw.ladder(4, true).is_err());
    }

    #[test]
    fn car_relation_on_one_mode() {
        // a a^dag + a^dag a = identity, as an exact Pauli sum
        let jw = jw(2, 2);
        for mode in 0..4 {
            let a = jw.ladder(mode, false).unwrap();
            let ad = jw.ladder(mode, true).unwrap();
            let anti = a.mul(&ad).unwrap().add(&ad.mul(&a).unwrap()).unwrap().simplified();
            assert_eq!(anti.len(), 1);
            let id = PauliString::identity(4);
            assert!((anti.coefficient(&id).re - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn majorana_examples() {
        let jw = jw(2, 2);
        assert_eq!(jw.majorana(0, false).unwrap().to_string(), "+XIII");
        assert_eq!(jw.majorana(1, true).unwrap().to_string(), "+ZYII");
        for mode in 0..4 {
            for bar in [false, true] {
                let g = jw.majorana(mode, bar).unwrap();
                assert!(g.is_hermitian());
                assert!(g.mul(&g).unwrap().is_identity());
            }
        }
        // gamma = a + a^dag as sums
        let g0 = PauliSum::from_string(&jw.majorana(0, false).unwrap());
        let sum = jw
            .ladder(0, false)
            .unwrap()
            .add(&jw.ladder(0, true).unwrap())
            .unwrap()
            .simplified();
        assert_eq!(sum, g0);
    }

    #[test]
    fn vertex_operator_is_z_everywhere() {
        let jw = jw(3, 2);
        for mode in 0..6 {
            let (_, v) = jw.edge_vertex((mode + 1) % 6, mode).unwrap();
            assert_eq!(v, PauliString::z(6, mode));
        }
    }

    #[test]
    fn edge_operator_properties() {
        let jw = jw(3, 2);
        let (e01, _) = jw.edge_vertex(0, 1).unwrap();
        assert_eq!(e01.weight(), 2);
        let (e10, _) = jw.edge_vertex(1, 0).unwrap();
        assert_eq!(e10, e01.negated());
        // adjacent-mode edge is weight 2, distant modes grow a Z string
        let (e03, _) = jw.edge_vertex(0, 3).unwrap();
        assert_eq!(e03.weight(), 4);
        assert!(jw.edge_vertex(2, 2).is_err());
    }

    #[test]
    fn vertical_neighbor_hopping_weight_is_2l() {
        // snake order: vertical neighbours in column 0 of an LxL lattice sit
        // 2L-1 modes apart, so the hopping string has weight 2L
        let l = 4;
        let jw = jw(l, l);
        let a = Vertex::new(0, 0);
        let b = Vertex::new(0, 1);
        let i = jw.mode_order().mode_of(a).unwrap();
        let j = jw.mode_order().mode_of(b).unwrap();
        assert_eq!(i.abs_diff(j), 2 * l - 1);
        let e = jw.edge_operator(a, b).unwrap();
        assert_eq!(e.weight(), 2 * l);
    }
}
