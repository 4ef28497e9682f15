//! Stabilizer groups with sign-exact membership testing.

use crate::error::{Error, Result};
use crate::pauli::PauliString;

/// An independent, mutually commuting set of Pauli generators together with
/// the group they generate. Membership tests track phases exactly, so
/// `-g` is distinguished from `g`.
#[derive(Debug, Clone)]
pub struct StabilizerGroup {
    n_qubits: usize,
    generators: Vec<PauliString>,
    /// Symplectic echelon form: (pivot bit index, group element with that pivot).
    /// Bit indices run x_0..x_{n-1}, z_0..z_{n-1}.
    echelon: Vec<(usize, PauliString)>,
}

fn bit_at(p: &PauliString, idx: usize) -> bool {
    let n = p.n_qubits();
    if idx < n {
        p.x_bits()[idx]
    } else {
        p.z_bits()[idx - n]
    }
}

impl StabilizerGroup {
    /// Validates commutativity, non-identity, and independence of the
    /// generators. An empty generator list is the trivial group.
    pub fn new(n_qubits: usize, generators: Vec<PauliString>) -> Result<Self> {
        for g in &generators {
            if g.n_qubits() != n_qubits {
                return Err(Error::DimensionMismatch {
                    left: n_qubits,
                    right: g.n_qubits(),
                });
            }
            if g.is_scalar() {
                return Err(Error::DependentGenerators);
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for b in generators.iter().skip(i + 1) {
                if !a.commutes(b)? {
                    return Err(Error::NonCommutingGenerators);
                }
            }
        }
        let echelon = Self::echelonize(n_qubits, &generators)?;
        if echelon.len() != generators.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(StabilizerGroup {
            n_qubits,
            generators,
            echelon,
        })
    }

    fn echelonize(n_qubits: usize, gens: &[PauliString]) -> Result<Vec<(usize, PauliString)>> {
        let mut rows: Vec<(usize, PauliString)> = Vec::new();
        for g in gens {
            let mut cur = g.clone();
            loop {
                let pivot = (0..2 * n_qubits).find(|&i| bit_at(&cur, i));
                match pivot {
                    None => break, // reduced to a scalar: dependent generator
                    Some(p) => {
                        if let Some((_, row)) = rows.iter().find(|(rp, _)| *rp == p) {
                            cur = cur.mul(row)?;
                        } else {
                            rows.push((p, cur));
                            break;
                        }
                    }
                }
            }
        }
        rows.sort_by_key(|(p, _)| *p);
        Ok(rows)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    /// Number of independent non-trivial generators; the group has
    /// `2^n_nontrivial` elements.
    pub fn n_nontrivial(&self) -> usize {
        self.generators.len()
    }

    /// Sign-exact membership: reduces `op` by the echelon rows and accepts only
    /// if the residue is the identity with phase +1.
    pub fn contains(&self, op: &PauliString) -> Result<bool> {
        if op.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: op.n_qubits(),
            });
        }
        let mut cur = op.clone();
        for (pivot, row) in &self.echelon {
            if bit_at(&cur, *pivot) {
                // row is self-inverse up to phase; multiply by its inverse
                cur = cur.mul(&row.inverse())?;
            }
        }
        Ok(cur.is_identity())
    }

    /// True iff `a` and `b` differ by multiplication with a group element
    /// (sign included).
    pub fn equal_up_to_group(&self, a: &PauliString, b: &PauliString) -> Result<bool> {
        self.contains(&a.mul(&b.inverse())?)
    }

    /// All `2^k` group elements. Caller is responsible for keeping k small.
    pub fn elements(&self) -> Result<Vec<PauliString>> {
        let k = self.generators.len();
        assert!(k <= 24, "refusing to enumerate 2^{k} group elements");
        let mut out = Vec::with_capacity(1 << k);
        out.push(PauliString::identity(self.n_qubits));
        for g in &self.generators {
            let mut extended = Vec::with_capacity(out.len() * 2);
            for e in &out {
                extended.push(e.clone());
                extended.push(e.mul(g)?);
            }
            out = extended;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::Letter;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn membership_is_sign_exact() {
        let g = StabilizerGroup::new(2, vec![p("+ZZ")]).unwrap();
        assert!(g.contains(&p("+ZZ")).unwrap());
        assert!(g.contains(&PauliString::identity(2)).unwrap());
        assert!(!g.contains(&p("-ZZ")).unwrap());
        assert!(!g.contains(&p("+XX")).unwrap());
    }

    #[test]
    fn products_of_generators_are_members() {
        let g = StabilizerGroup::new(3, vec![p("+ZZI"), p("+IZZ")]).unwrap();
        assert!(g.contains(&p("+ZIZ")).unwrap());
        assert!(!g.contains(&p("-ZIZ")).unwrap());
        assert_eq!(g.elements().unwrap().len(), 4);
    }

    #[test]
    fn rejects_dependent_or_noncommuting_sets() {
        assert!(matches!(
            StabilizerGroup::new(2, vec![p("+ZZ"), p("-ZZ")]),
            Err(Error::DependentGenerators)
        ));
        assert!(matches!(
            StabilizerGroup::new(2, vec![p("+XI"), p("+ZI")]),
            Err(Error::NonCommutingGenerators)
        ));
        assert!(matches!(
            StabilizerGroup::new(2, vec![PauliString::identity(2)]),
            Err(Error::DependentGenerators)
        ));
    }

    #[test]
    fn equal_up_to_group() {
        let g = StabilizerGroup::new(2, vec![p("+ZZ")]).unwrap();
        let a = p("+XI");
        let b = a.mul(&p("+ZZ")).unwrap();
        assert!(g.equal_up_to_group(&a, &b).unwrap());
        assert!(!g.equal_up_to_group(&a, &b.negated()).unwrap());
        let c = PauliString::from_letters(2, &[(0, Letter::X), (1, Letter::X)]);
        assert!(!g.equal_up_to_group(&a, &c).unwrap());
    }
}
