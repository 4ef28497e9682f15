//! Symbolic fermionic Hamiltonians and their compilation to Pauli sums under
//! either encoding.
//!
//! Supported terms are nearest-neighbour hopping `t (a_i^dag a_j + a_j^dag a_i)`,
//! Coulomb `U n_i n_j`, and on-site number `mu n_i`. They compile through the
//! edge/vertex images:
//!
//! ```text
//! n_i           -> (1 - V_i) / 2
//! n_i n_j       -> (1 - V_i)(1 - V_j) / 4
//! hopping(i,j)  -> -(i/2) (E_ij V_j + V_i E_ij)
//! ```
//!
//! The hopping identity is not written out in the source material; it is fixed
//! here and validated against the exact-matrix oracle (see the oracle tests).

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::encoder::CompactEncoding;
use crate::error::{Error, Result};
use crate::hex::HexEncoding;
use crate::jw::JwEncoding;
use crate::lattice::{Lattice, LatticeCase, Vertex};
use crate::pauli::{PauliString, PauliSum};

/// Which operator images a Hamiltonian compiles through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Encoding {
    Compact,
    Jw,
}

impl std::fmt::Display for Encoding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Encoding::Compact => write!(f, "compact"),
            Encoding::Jw => write!(f, "jw"),
        }
    }
}

/// One symbolic term. Sites are vertex coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FermionicTerm {
    Hopping { i: Vertex, j: Vertex, coeff: f64 },
    Coulomb { i: Vertex, j: Vertex, coeff: f64 },
    Number { i: Vertex, coeff: f64 },
}

impl FermionicTerm {
    pub fn coeff(&self) -> f64 {
        match *self {
            FermionicTerm::Hopping { coeff, .. }
            | FermionicTerm::Coulomb { coeff, .. }
            | FermionicTerm::Number { coeff, .. } => coeff,
        }
    }
}

/// On-disk Hamiltonian description (the `--hamiltonian` JSON schema).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HamiltonianSpec {
    pub terms: Vec<FermionicTerm>,
}

/// A term list validated against a lattice: hopping and Coulomb sites must be
/// nearest neighbours, all sites on the lattice, all coefficients finite.
#[derive(Debug, Clone)]
pub struct FermionicHamiltonian {
    lattice: Lattice,
    terms: Vec<FermionicTerm>,
}

impl FermionicHamiltonian {
    pub fn new(lattice: Lattice, terms: Vec<FermionicTerm>) -> Result<Self> {
        for term in &terms {
            if !term.coeff().is_finite() {
                return Err(Error::InvalidInput(format!(
                    "non-finite coefficient in {term:?}"
                )));
            }
            match *term {
                FermionicTerm::Hopping { i, j, .. } | FermionicTerm::Coulomb { i, j, .. } => {
                    if !lattice.are_neighbors(i, j) {
                        return Err(Error::InvalidInput(format!(
                            "sites {i} and {j} are not nearest neighbours on the lattice"
                        )));
                    }
                }
                FermionicTerm::Number { i, .. } => {
                    if !lattice.contains_vertex(i) {
                        return Err(Error::VertexOutOfRange { x: i.x, y: i.y });
                    }
                }
            }
        }
        Ok(FermionicHamiltonian { lattice, terms })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn terms(&self) -> &[FermionicTerm] {
        &self.terms
    }
}

/// Edge/vertex operator images for one encoding on one lattice.
pub enum SystemOps {
    Compact(CompactEncoding),
    CompactHex(HexEncoding),
    Jw(JwEncoding),
}

impl SystemOps {
    pub fn build(lattice: &Lattice, encoding: Encoding) -> Result<SystemOps> {
        Ok(match (encoding, lattice) {
            (Encoding::Compact, Lattice::Square(sq)) => {
                SystemOps::Compact(CompactEncoding::new(sq.clone())?)
            }
            (Encoding::Compact, Lattice::Hex(hx)) => {
                SystemOps::CompactHex(HexEncoding::new(hx.clone())?)
            }
            (Encoding::Jw, _) => SystemOps::Jw(JwEncoding::snake(lattice)),
        })
    }

    pub fn n_qubits(&self) -> usize {
        match self {
            SystemOps::Compact(e) => e.n_qubits(),
            SystemOps::CompactHex(e) => e.n_qubits(),
            SystemOps::Jw(e) => e.n_qubits(),
        }
    }

    pub fn edge_operator(&self, i: Vertex, j: Vertex) -> Result<PauliString> {
        match self {
            SystemOps::Compact(e) => e.edge_operator(i, j),
            SystemOps::CompactHex(e) => e.edge_operator(i, j),
            SystemOps::Jw(e) => e.edge_operator(i, j),
        }
    }

    pub fn vertex_operator(&self, v: Vertex) -> Result<PauliString> {
        match self {
            SystemOps::Compact(e) => e.vertex_operator(v),
            SystemOps::CompactHex(e) => e.vertex_operator(v),
            SystemOps::Jw(e) => e.vertex_operator(v),
        }
    }
}

/// A Hamiltonian compiled to a Pauli sum.
#[derive(Debug, Clone)]
pub struct CompiledHamiltonian {
    pub encoding: Encoding,
    pub n_qubits: usize,
    pub pauli_sum: PauliSum,
}

/// Compile one term through the given operator images.
pub fn compile_term(ops: &SystemOps, term: &FermionicTerm) -> Result<PauliSum> {
    let n = ops.n_qubits();
    let mut sum = PauliSum::zero(n);
    let id = PauliString::identity(n);
    match *term {
        FermionicTerm::Number { i, coeff } => {
            // mu (1 - V_i) / 2
            let v = ops.vertex_operator(i)?;
            sum.add_term(Complex64::new(coeff / 2.0, 0.0), &id);
            sum.add_term(Complex64::new(-coeff / 2.0, 0.0), &v);
        }
        FermionicTerm::Coulomb { i, j, coeff } => {
            // U (1 - V_i)(1 - V_j) / 4
            let vi = ops.vertex_operator(i)?;
            let vj = ops.vertex_operator(j)?;
            let q = coeff / 4.0;
            sum.add_term(Complex64::new(q, 0.0), &id);
            sum.add_term(Complex64::new(-q, 0.0), &vi);
            sum.add_term(Complex64::new(-q, 0.0), &vj);
            sum.add_term(Complex64::new(q, 0.0), &vi.mul(&vj)?);
        }
        FermionicTerm::Hopping { i, j, coeff } => {
            // -t (i/2) (E_ij V_j + V_i E_ij)
            let e = ops.edge_operator(i, j)?;
            let vi = ops.vertex_operator(i)?;
            let vj = ops.vertex_operator(j)?;
            let c = Complex64::new(0.0, -coeff / 2.0);
            sum.add_term(c, &e.mul(&vj)?);
            sum.add_term(c, &vi.mul(&e)?);
        }
    }
    Ok(sum.simplified())
}

/// Compile a full Hamiltonian; the result is simplified and hermitian.
pub fn compile(ham: &FermionicHamiltonian, encoding: Encoding) -> Result<CompiledHamiltonian> {
    let ops = SystemOps::build(ham.lattice(), encoding)?;
    let mut sum = PauliSum::zero(ops.n_qubits());
    for term in ham.terms() {
        sum = sum.add(&compile_term(&ops, term)?)?;
    }
    let sum = sum.simplified();
    debug_assert!(sum.is_hermitian(1e-12));
    Ok(CompiledHamiltonian {
        encoding,
        n_qubits: ops.n_qubits(),
        pauli_sum: sum,
    })
}

/// Table-style summary of an encoding on a lattice.
#[derive(Debug, Clone, Serialize)]
pub struct WeightStats {
    pub encoding: Encoding,
    pub mode_count: usize,
    pub qubit_total: usize,
    pub qubit_to_mode_ratio: f64,
    pub max_hopping_weight: usize,
    pub max_coulomb_weight: usize,
    pub encoded_space: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<LatticeCase>,
}

/// Compile every nearest-neighbour hopping and Coulomb term with unit
/// coefficient and report the maximum Pauli weights by direct count.
pub fn weight_stats(lattice: &Lattice, encoding: Encoding) -> Result<WeightStats> {
    let ops = SystemOps::build(lattice, encoding)?;
    let mut max_hop = 0;
    let mut max_coul = 0;
    for e in lattice.edges() {
        let hop = compile_term(
            &ops,
            &FermionicTerm::Hopping {
                i: e.tail,
                j: e.head,
                coeff: 1.0,
            },
        )?;
        max_hop = max_hop.max(hop.max_weight());
        let coul = compile_term(
            &ops,
            &FermionicTerm::Coulomb {
                i: e.tail,
                j: e.head,
                coeff: 1.0,
            },
        )?;
        max_coul = max_coul.max(coul.max_weight());
    }
    let modes = lattice.mode_count();
    let total = ops.n_qubits();
    let (encoded_space, case) = match (encoding, lattice) {
        (Encoding::Jw, _) => ("Full".to_string(), None),
        (Encoding::Compact, Lattice::Hex(_)) => ("Full".to_string(), None),
        (Encoding::Compact, Lattice::Square(sq)) => {
            let case = sq.classify().case;
            let tag = match case {
                LatticeCase::I => "Full",
                LatticeCase::II => "Even",
                LatticeCase::III => "Full Plus Qubit",
            };
            (tag.to_string(), Some(case))
        }
    };
    Ok(WeightStats {
        encoding,
        mode_count: modes,
        qubit_total: total,
        qubit_to_mode_ratio: total as f64 / modes as f64,
        max_hopping_weight: max_hop,
        max_coulomb_weight: max_coul,
        encoded_space,
        case,
    })
}

/// Uniform Hubbard-type Hamiltonian: hopping `t` and Coulomb `u` on every edge.
pub fn standard_hubbard(lattice: &Lattice, t: f64, u: f64) -> Result<FermionicHamiltonian> {
    let mut terms = Vec::new();
    for e in lattice.edges() {
        terms.push(FermionicTerm::Hopping {
            i: e.tail,
            j: e.head,
            coeff: t,
        });
        terms.push(FermionicTerm::Coulomb {
            i: e.tail,
            j: e.head,
            coeff: u,
        });
    }
    FermionicHamiltonian::new(lattice.clone(), terms)
}

/// Hubbard-type Hamiltonian with seeded random coefficients: per-edge hopping
/// in [-2, 2], per-edge Coulomb in [0, 4], per-site chemical potential in
/// [-1, 1]. Deterministic for a given seed.
pub fn random_hubbard(lattice: &Lattice, seed: u64) -> Result<FermionicHamiltonian> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = Vec::new();
    for e in lattice.edges() {
        terms.push(FermionicTerm::Hopping {
            i: e.tail,
            j: e.head,
            coeff: rng.gen_range(-2.0..2.0),
        });
        terms.push(FermionicTerm::Coulomb {
            i: e.tail,
            j: e.head,
            coeff: rng.gen_range(0.0..4.0),
        });
    }
    for v in lattice.vertices() {
        terms.push(FermionicTerm::Number {
            i: v,
            coeff: rng.gen_range(-1.0..1.0),
        });
    }
    FermionicHamiltonian::new(lattice.clone(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SquareLattice;
    use crate::pauli::Letter;

    fn square(w: usize, h: usize, phase: u8) -> Lattice {
        Lattice::Square(SquareLattice::new(w, h, phase).unwrap())
    }

    #[test]
    fn number_term_compiles_to_half_one_minus_z() {
        let lat = square(2, 2, 0);
        let ops = SystemOps::build(&lat, Encoding::Compact).unwrap();
        let term = FermionicTerm::Number {
            i: Vertex::new(1, 0),
            coeff: 3.0,
        };
        let sum = compile_term(&ops, &term).unwrap();
        assert_eq!(sum.len(), 2);
        let n = ops.n_qubits();
        assert_eq!(sum.coefficient(&PauliString::identity(n)).re, 1.5);
        assert_eq!(sum.coefficient(&PauliString::z(n, 1)).re, -1.5);
    }

    #[test]
    fn coulomb_term_is_quarter_of_four_z_words() {
        let lat = square(3, 3, 0);
        let ops = SystemOps::build(&lat, Encoding::Compact).unwrap();
        let i = Vertex::new(0, 0);
        let j = Vertex::new(1, 0);
        let sum = compile_term(
            &ops,
            &FermionicTerm::Coulomb {
                i,
                j,
                coeff: 1.0,
            },
        )
        .unwrap();
        assert_eq!(sum.len(), 4);
        assert_eq!(sum.max_weight(), 2);
        let n = ops.n_qubits();
        assert_eq!(sum.coefficient(&PauliString::identity(n)).re, 0.25);
        assert_eq!(sum.coefficient(&PauliString::z(n, 0)).re, -0.25);
        assert_eq!(sum.coefficient(&PauliString::z(n, 1)).re, -0.25);
        let zz = PauliString::from_letters(n, &[(0, Letter::Z), (1, Letter::Z)]);
        assert_eq!(sum.coefficient(&zz).re, 0.25);
    }

    #[test]
    fn hopping_on_horizontal_interior_edge() {
        // 3x3 phase 0: the edge (0,1)-(1,1) is horizontal with odd face (0,0)...
        // pick (0,1)-(1,1): faces (0,0) parity 0 odd and (0,1) parity 1 even
        let lat = square(3, 3, 0);
        let ops = SystemOps::build(&lat, Encoding::Compact).unwrap();
        let i = Vertex::new(0, 1);
        let j = Vertex::new(1, 1);
        let sum = compile_term(
            &ops,
            &FermionicTerm::Hopping {
                i,
                j,
                coeff: 1.0,
            },
        )
        .unwrap();
        // exactly two terms, weight 3, coefficients +-1/2
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.max_weight(), 3);
        for (c, w) in sum.terms() {
            assert!((c.re.abs() - 0.5).abs() < 1e-14 && c.im.abs() < 1e-14);
            assert_eq!(w.weight(), 3);
        }
        assert!(sum.is_hermitian(1e-14));
        // the face letter is Y on the shared odd face qubit (horizontal edge)
        let layout = match &ops {
            SystemOps::Compact(e) => e.layout().clone(),
            _ => unreachable!(),
        };
        let fq = layout.face(crate::lattice::Face::new(0, 0));
        for (_, w) in sum.terms() {
            assert_eq!(w.letter_at(fq), Letter::Y);
        }
    }

    #[test]
    fn hopping_is_symmetric_in_its_sites() {
        let lat = square(3, 3, 0);
        let ops = SystemOps::build(&lat, Encoding::Compact).unwrap();
        let i = Vertex::new(1, 1);
        let j = Vertex::new(1, 2);
        let a = compile_term(&ops, &FermionicTerm::Hopping { i, j, coeff: 0.7 }).unwrap();
        let b = compile_term(&ops, &FermionicTerm::Hopping { i: j, j: i, coeff: 0.7 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn compile_empty_hamiltonian_is_zero() {
        let lat = square(2, 2, 0);
        let ham = FermionicHamiltonian::new(lat, vec![]).unwrap();
        let compiled = compile(&ham, Encoding::Compact).unwrap();
        assert!(compiled.pauli_sum.is_empty());
    }

    #[test]
    fn hubbard_2x2_weights_under_both_encodings() {
        let lat = square(2, 2, 0);
        let ham = standard_hubbard(&lat, 1.0, 2.0).unwrap();
        let compact = compile(&ham, Encoding::Compact).unwrap();
        assert!(compact.pauli_sum.max_weight() <= 3);
        assert!(compact.n_qubits <= 5);
        let jw = compile(&ham, Encoding::Jw).unwrap();
        assert_eq!(jw.n_qubits, 4);
        assert_eq!(jw.pauli_sum.max_weight(), 4); // 2L at L=2
    }

    #[test]
    fn rejects_invalid_terms() {
        let lat = square(3, 3, 0);
        assert!(FermionicHamiltonian::new(
            lat.clone(),
            vec![FermionicTerm::Hopping {
                i: Vertex::new(0, 0),
                j: Vertex::new(2, 0),
                coeff: 1.0,
            }]
        )
        .is_err());
        assert!(FermionicHamiltonian::new(
            lat.clone(),
            vec![FermionicTerm::Number {
                i: Vertex::new(5, 5),
                coeff: 1.0,
            }]
        )
        .is_err());
        assert!(FermionicHamiltonian::new(
            lat,
            vec![FermionicTerm::Number {
                i: Vertex::new(0, 0),
                coeff: f64::NAN,
            }]
        )
        .is_err());
    }

    #[test]
    fn stats_match_table_columns() {
        for (w, h) in [(4, 4), (5, 5), (8, 8)] {
            for phase in [0, 1] {
                let lat = square(w, h, phase);
                let stats = weight_stats(&lat, Encoding::Compact).unwrap();
                assert_eq!(stats.max_hopping_weight, 3);
                assert_eq!(stats.max_coulomb_weight, 2);
                assert!(stats.qubit_to_mode_ratio < 1.5);
            }
        }
        let lat = square(4, 4, 0);
        let jw = weight_stats(&lat, Encoding::Jw).unwrap();
        assert_eq!(jw.max_hopping_weight, 8); // 2L at L=4
        assert_eq!(jw.max_coulomb_weight, 2);
        assert_eq!(jw.qubit_to_mode_ratio, 1.0);
    }

    #[test]
    fn stats_encoded_space_tags() {
        let t = |w, h, p| {
            weight_stats(&square(w, h, p), Encoding::Compact)
                .unwrap()
                .encoded_space
        };
        assert_eq!(t(3, 3, 0), "Full");
        assert_eq!(t(2, 2, 1), "Even");
        assert_eq!(t(2, 2, 0), "Full Plus Qubit");
    }

    #[test]
    fn compiled_hamiltonian_commutes_with_stabilizers() {
        let sq = SquareLattice::new(3, 3, 0).unwrap();
        let enc = CompactEncoding::new(sq.clone()).unwrap();
        let lat = Lattice::Square(sq);
        let ham = random_hubbard(&lat, 7).unwrap();
        let compiled = compile(&ham, Encoding::Compact).unwrap();
        for g in enc.stabilizers().generators() {
            for (_, w) in compiled.pauli_sum.terms() {
                assert!(w.commutes(g).unwrap());
            }
        }
    }

    #[test]
    fn random_hubbard_is_seed_deterministic() {
        let lat = square(3, 3, 0);
        let a = random_hubbard(&lat, 42).unwrap();
        let b = random_hubbard(&lat, 42).unwrap();
        assert_eq!(a.terms(), b.terms());
        let c = random_hubbard(&lat, 43).unwrap();
        assert_ne!(a.terms(), c.terms());
    }

    #[test]
    fn hamiltonian_spec_roundtrip() {
        let json = r#"{"terms":[{"kind":"hopping","i":[0,0],"j":[1,0],"coeff":1.0},{"kind":"number","i":[1,1],"coeff":-0.5}]}"#;
        let spec: HamiltonianSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec.terms.len(), 2);
        match spec.terms[0] {
            FermionicTerm::Hopping { i, j, coeff } => {
                assert_eq!(i, Vertex::new(0, 0));
                assert_eq!(j, Vertex::new(1, 0));
                assert_eq!(coeff, 1.0);
            }
            _ => panic!("expected hopping"),
        }
    }
}
