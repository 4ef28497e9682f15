//! Brute-force exact-matrix verification: dense operators, stabilizer
//! codespace projectors and bases, spectrum comparison against the
//! Jordan-Wigner fermionic reference, and the symplectic relation suite.

mod dense;
mod relations;
mod spectrum;

pub use dense::{
    apply_sum, codespace_basis, codespace_projector, restricted_matrix, DenseOperator,
    SparseVec, QUBIT_CAP,
};
pub use relations::{
    verify_hex, verify_relations, verify_square, RelationCheck, RelationReport,
};
pub use spectrum::{
    encoded_spectrum, expected_sector, fermionic_spectrum, groundspace_check, spectra_match,
    GroundspaceReport, SectorTag, SpectrumReport,
};
