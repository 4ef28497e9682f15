//! Dense operators and stabilizer codespaces for the brute-force oracle.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum};
use crate::stabilizer::StabilizerGroup;

/// Hard cap on dense-matrix qubit counts.
pub const QUBIT_CAP: usize = 14;

fn check_cap(qubits: usize) -> Result<()> {
    if qubits > QUBIT_CAP {
        return Err(Error::SizeCapExceeded {
            qubits,
            cap: QUBIT_CAP,
        });
    }
    Ok(())
}

/// A dense complex matrix on 2^n dimensions.
#[derive(Debug, Clone)]
pub struct DenseOperator {
    mat: Array2<Complex64>,
}

impl DenseOperator {
    pub fn identity(dim: usize) -> Self {
        DenseOperator {
            mat: Array2::eye(dim),
        }
    }

    pub fn from_matrix(mat: Array2<Complex64>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols(), "operator matrices are square");
        DenseOperator { mat }
    }

    /// Exact matrix of a Pauli string (a signed permutation).
    pub fn from_pauli(op: &PauliString) -> Result<Self> {
        check_cap(op.n_qubits())?;
        let dim = 1usize << op.n_qubits();
        let mut mat = Array2::zeros((dim, dim));
        for b in 0..dim {
            let (out, amp) = op.apply_to_basis(b);
            mat[(out, b)] = amp;
        }
        Ok(DenseOperator { mat })
    }

    /// Exact matrix of a Pauli sum.
    pub fn from_sum(sum: &PauliSum) -> Result<Self> {
        check_cap(sum.n_qubits())?;
        let dim = 1usize << sum.n_qubits();
        let mut mat = Array2::zeros((dim, dim));
        for (c, word) in sum.terms() {
            for b in 0..dim {
                let (out, amp) = word.apply_to_basis(b);
                mat[(out, b)] += c * amp;
            }
        }
        Ok(DenseOperator { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.mat
    }

    pub fn matmul(&self, other: &DenseOperator) -> DenseOperator {
        DenseOperator {
            mat: self.mat.dot(&other.mat),
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.diag().sum()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.mat.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn sub(&self, other: &DenseOperator) -> DenseOperator {
        DenseOperator {
            mat: &self.mat - &other.mat,
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                if (self.mat[(i, j)] - self.mat[(j, i)].conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let adj = DenseOperator {
            mat: self.mat.t().mapv(|c| c.conj()),
        };
        let prod = self.matmul(&adj);
        prod.sub(&DenseOperator::identity(self.dim())).max_abs_entry() <= tol
    }

    /// Eigenvalues (ascending) and eigenvectors of a hermitian matrix.
    pub fn eigh(&self) -> Result<(Vec<f64>, Array2<Complex64>)> {
        let (vals, vecs) = self.mat.eigh(UPLO::Lower)?;
        Ok((vals.to_vec(), vecs))
    }

    /// Eigenvalues only, ascending.
    pub fn eigvalsh(&self) -> Result<Vec<f64>> {
        Ok(self.eigh()?.0)
    }

    /// Left-multiply by a Pauli string: `g * self`, using the signed
    /// permutation structure of `g` (row gather, no gemm).
    pub fn pauli_mul_left(&self, g: &PauliString) -> DenseOperator {
        let dim = self.dim();
        let mut out = Array2::zeros((dim, dim));
        for b in 0..dim {
            let (row, amp) = g.apply_to_basis(b);
            // g maps |b> to amp |row>, so row `row` of g*M is amp * row b of M
            let src = self.mat.row(b);
            let mut dst = out.row_mut(row);
            dst.assign(&src.mapv(|v| v * amp));
        }
        DenseOperator { mat: out }
    }

    /// Integer rank of a projector, with its idempotence defect.
    ///
    /// Small matrices use eigenvalue rounding at the 0.5 threshold; the
    /// idempotence defect is then the spectral norm max|l^2 - l|. Larger
    /// matrices round the trace (exact for an idempotent hermitian matrix)
    /// and measure the defect from one gemm.
    pub fn projector_rank(&self) -> Result<(usize, f64)> {
        if !self.is_hermitian(1e-12) {
            return Err(Error::UnexpectedGeneratorForm {
                reason: "projector is not hermitian".into(),
            });
        }
        if self.dim() <= 512 {
            let vals = self.eigvalsh()?;
            let defect = vals
                .iter()
                .map(|l| (l * l - l).abs())
                .fold(0.0, f64::max);
            let rank = vals.iter().filter(|&&l| l > 0.5).count();
            Ok((rank, defect))
        } else {
            let defect = self.matmul(self).sub(self).max_abs_entry();
            let tr = self.trace();
            let rank = tr.re.round();
            if (tr.re - rank).abs() > 1e-9 || tr.im.abs() > 1e-9 {
                return Err(Error::UnexpectedGeneratorForm {
                    reason: format!("projector trace {tr} is not an integer"),
                });
            }
            Ok((rank as usize, defect))
        }
    }
}

/// `prod_g (1 + g) / 2` over the generators: the projector onto the joint
/// +1 eigenspace.
pub fn codespace_projector(stabs: &StabilizerGroup) -> Result<DenseOperator> {
    check_cap(stabs.n_qubits())?;
    let dim = 1usize << stabs.n_qubits();
    let mut p = DenseOperator::identity(dim);
    let half = Complex64::new(0.5, 0.0);
    for g in stabs.generators() {
        let gp = p.pauli_mul_left(g);
        p = DenseOperator {
            mat: (&p.mat + &gp.mat).mapv(|v| v * half),
        };
    }
    Ok(p)
}

/// A sparse state vector: sorted (basis index, amplitude) pairs.
pub type SparseVec = Vec<(usize, Complex64)>;

/// An exact orthonormal basis of the codespace, built from stabilizer orbits
/// of computational basis states. Always returns exactly
/// `2^(n - n_generators)` columns.
pub fn codespace_basis(stabs: &StabilizerGroup) -> Result<Vec<SparseVec>> {
    let n = stabs.n_qubits();
    check_cap(n)?;
    let dim = 1usize << n;
    let elements = stabs.elements()?;
    let mut visited = vec![false; dim];
    let mut basis = Vec::new();
    for b in 0..dim {
        if visited[b] {
            continue;
        }
        // accumulate sum_g g|b> over the whole group; every state in the
        // orbit of b is covered by this one pass
        let mut amps: std::collections::BTreeMap<usize, Complex64> = Default::default();
        for g in &elements {
            let (out, amp) = g.apply_to_basis(b);
            visited[out] = true;
            *amps.entry(out).or_insert(Complex64::new(0.0, 0.0)) += amp;
        }
        let norm2: f64 = amps.values().map(|a| a.norm_sqr()).sum();
        if norm2 > 0.5 {
            let norm = norm2.sqrt();
            let col: SparseVec = amps
                .into_iter()
                .filter(|(_, a)| a.norm() > 1e-12)
                .map(|(i, a)| (i, a / norm))
                .collect();
            basis.push(col);
        }
    }
    let expected = 1usize << (n - stabs.n_nontrivial());
    debug_assert_eq!(basis.len(), expected, "orbit basis has the wrong rank");
    Ok(basis)
}

/// Apply a Pauli sum to a sparse vector, producing a dense column.
pub fn apply_sum(sum: &PauliSum, v: &SparseVec, out: &mut Array1<Complex64>) {
    out.fill(Complex64::new(0.0, 0.0));
    for (c, word) in sum.terms() {
        for &(idx, amp) in v {
            let (to, a) = word.apply_to_basis(idx);
            out[to] += c * a * amp;
        }
    }
}

/// The matrix of a Pauli sum restricted to an orthonormal sparse basis.
pub fn restricted_matrix(sum: &PauliSum, basis: &[SparseVec]) -> Result<DenseOperator> {
    check_cap(sum.n_qubits())?;
    let dim = 1usize << sum.n_qubits();
    let d = basis.len();
    let mut mat = Array2::zeros((d, d));
    let mut col = Array1::zeros(dim);
    for j in 0..d {
        apply_sum(sum, &basis[j], &mut col);
        for (i, bi) in basis.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(idx, amp) in bi {
                acc += amp.conj() * col[idx];
            }
            mat[(i, j)] = acc;
        }
    }
    Ok(DenseOperator { mat })
}
