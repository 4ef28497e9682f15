//! Compact fermion-to-qubit mapping compiler.
//!
//! `fermap` compiles fermionic lattice Hamiltonians (nearest-neighbour hopping,
//! Coulomb and number terms) into multi-qubit Pauli Hamiltonians through a
//! compact local encoding on square and hexagonal lattices, keeping hopping
//! terms at Pauli weight 3, Coulomb terms at weight 2, and the qubit count
//! below 1.5 per mode. A Jordan-Wigner baseline and an exact dense-matrix
//! oracle certify the construction at desk scale: the relation suite checks
//! every (anti)commutation and loop identity symplectically, and the spectrum
//! of the encoded Hamiltonian on the stabilizer codespace is compared against
//! exact diagonalization of the fermionic reference.
//!
//! Modules:
//!
//! - [`pauli`]: phase-exact Pauli strings and complex-weighted sums.
//! - [`lattice`]: square-lattice geometry, face parity, case classification.
//! - [`encoder`]: the compact mapping (edge/vertex operators, stabilizers,
//!   Majorana and hole injection, the case-III logical qubit).
//! - [`hex`]: the hexagonal-lattice variant.
//! - [`jw`]: the Jordan-Wigner reference encoding.
//! - [`hamiltonian`]: symbolic terms and compilation under either encoding.
//! - [`stabilizer`]: stabilizer groups with sign-exact membership.
//! - [`oracle`]: dense matrices, codespace projectors, spectra, and the
//!   relation verification suite.
//! - [`cli`]: the command-line front end (`compile`, `verify`, `stats`,
//!   `spectrum`, `dump-operators`).
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod encoder;
pub mod error;
pub mod hamiltonian;
pub mod hex;
pub mod jw;
pub mod lattice;
pub mod oracle;
pub mod pauli;
pub mod stabilizer;

pub use error::{Error, Result};
pub use pauli::{PauliString, PauliSum};
