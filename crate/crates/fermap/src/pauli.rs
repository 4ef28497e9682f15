//! Phase-tracked Pauli strings and complex-weighted Pauli sums.
//!
//! A [`PauliString`] is `i^phase_exp * L_0 ⊗ L_1 ⊗ ... ⊗ L_{n-1}` with hermitian
//! letters `L_q ∈ {I, X, Y, Z}` stored as an (x, z) bit pair per qubit:
//! `X = (1,0)`, `Z = (0,1)`, `Y = (1,1)`. The phase exponent lives in `Z_4`, so
//! every group-law sign is exact; no floating point enters the algebra.
//!
//! A [`PauliSum`] is a map from phase-free letter words to complex coefficients,
//! kept in a canonical order (lexicographic on z-bits, then x-bits) so that
//! serialized output is reproducible byte for byte.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Coefficients below this magnitude are dropped by [`PauliSum::simplify`].
/// All coefficients in this crate arise from exact halving, so anything
/// smaller is a bug, not roundoff.
pub const COEFF_EPS: f64 = 1e-12;

/// One-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// (x, z) bit pair of the letter.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// `i^k` as an exact complex number.
pub fn i_pow(k: u8) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Phase-tracked n-qubit Pauli word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n_qubits: usize,
    x_bits: Vec<bool>,
    z_bits: Vec<bool>,
    phase_exp: u8,
}

impl PauliString {
    /// The identity word on `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliString {
            n_qubits: n,
            x_bits: vec![false; n],
            z_bits: vec![false; n],
            phase_exp: 0,
        }
    }

    /// A single letter at `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: Letter) -> Self {
        assert!(qubit < n, "qubit index {qubit} out of range for {n} qubits");
        let mut s = Self::identity(n);
        let (x, z) = letter.bits();
        s.x_bits[qubit] = x;
        s.z_bits[qubit] = z;
        s
    }

    pub fn x(n: usize, qubit: usize) -> Self {
        Self::single(n, qubit, Letter::X)
    }

    pub fn y(n: usize, qubit: usize) -> Self {
        Self::single(n, qubit, Letter::Y)
    }

    pub fn z(n: usize, qubit: usize) -> Self {
        Self::single(n, qubit, Letter::Z)
    }

    /// Build from a letter assignment; qubits not listed stay identity.
    /// Letters listed twice multiply (phases tracked).
    pub fn from_letters(n: usize, letters: &[(usize, Letter)]) -> Self {
        let mut s = Self::identity(n);
        for &(q, l) in letters {
            s = s.mul(&Self::single(n, q, l)).expect("same size");
        }
        s
    }

    pub fn from_bits(x_bits: Vec<bool>, z_bits: Vec<bool>, phase_exp: u8) -> Self {
        assert_eq!(x_bits.len(), z_bits.len());
        PauliString {
            n_qubits: x_bits.len(),
            x_bits,
            z_bits,
            phase_exp: phase_exp % 4,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn x_bits(&self) -> &[bool] {
        &self.x_bits
    }

    pub fn z_bits(&self) -> &[bool] {
        &self.z_bits
    }

    pub fn letter_at(&self, qubit: usize) -> Letter {
        Letter::from_bits(self.x_bits[qubit], self.z_bits[qubit])
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        (0..self.n_qubits)
            .filter(|&q| self.x_bits[q] || self.z_bits[q])
            .count()
    }

    /// Qubits carrying a non-identity letter, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_qubits).filter(|&q| self.x_bits[q] || self.z_bits[q])
    }

    /// All letters identity (phase may be anything).
    pub fn is_scalar(&self) -> bool {
        self.x_bits.iter().all(|&b| !b) && self.z_bits.iter().all(|&b| !b)
    }

    /// Exactly the identity operator, `+1 * I`.
    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.phase_exp == 0
    }

    /// Hermitian iff the phase is real: the letter word itself is hermitian.
    pub fn is_hermitian(&self) -> bool {
        self.phase_exp % 2 == 0
    }

    /// Exact group product, phase included.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let n = self.n_qubits;
        let mut x = vec![false; n];
        let mut z = vec![false; n];
        let mut phase: u32 = u32::from(self.phase_exp) + u32::from(other.phase_exp);
        for q in 0..n {
            let (xa, za) = (self.x_bits[q], self.z_bits[q]);
            let (xb, zb) = (other.x_bits[q], other.z_bits[q]);
            let xc = xa ^ xb;
            let zc = za ^ zb;
            // letter-product phase: i^(xa za + xb zb + 2 za xb - xc zc)
            phase += u32::from(xa && za) + u32::from(xb && zb) + 2 * u32::from(za && xb);
            phase += 4 - u32::from(xc && zc);
            x[q] = xc;
            z[q] = zc;
        }
        Ok(PauliString {
            n_qubits: n,
            x_bits: x,
            z_bits: z,
            phase_exp: (phase % 4) as u8,
        })
    }

    /// True iff `self * other == other * self`, decided from the symplectic
    /// overlap parity. Never builds a matrix.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let mut overlap = false;
        for q in 0..self.n_qubits {
            overlap ^= (self.x_bits[q] && other.z_bits[q]) ^ (self.z_bits[q] && other.x_bits[q]);
        }
        Ok(!overlap)
    }

    pub fn anticommutes(&self, other: &PauliString) -> Result<bool> {
        Ok(!self.commutes(other)?)
    }

    /// Conjugate transpose: the letters stay, the phase conjugates.
    pub fn adjoint(&self) -> PauliString {
        let mut s = self.clone();
        s.phase_exp = (4 - self.phase_exp) % 4;
        s
    }

    /// Group inverse (equal to the adjoint: letter words are self-inverse).
    pub fn inverse(&self) -> PauliString {
        self.adjoint()
    }

    pub fn negated(&self) -> PauliString {
        let mut s = self.clone();
        s.phase_exp = (self.phase_exp + 2) % 4;
        s
    }

    pub fn times_i(&self) -> PauliString {
        let mut s = self.clone();
        s.phase_exp = (self.phase_exp + 1) % 4;
        s
    }

    /// Same letters with the phase reset to `+1`.
    pub fn unsigned(&self) -> PauliString {
        let mut s = self.clone();
        s.phase_exp = 0;
        s
    }

    /// Matrix action on a computational basis state: `op |b> = amp |b'>`.
    /// Qubit 0 is the most significant bit of the index.
    pub fn apply_to_basis(&self, b: usize) -> (usize, Complex64) {
        let n = self.n_qubits;
        assert!(n <= 63, "basis-state indexing caps at 63 qubits");
        let mut out = b;
        let mut y_count: u8 = 0;
        let mut sign_flips: u32 = 0;
        for q in 0..n {
            let bit = 1usize << (n - 1 - q);
            if self.z_bits[q] && (b & bit) != 0 {
                sign_flips += 1;
            }
            if self.x_bits[q] {
                out ^= bit;
                if self.z_bits[q] {
                    y_count += 1;
                }
            }
        }
        let mut amp = i_pow((self.phase_exp + y_count) % 4);
        if sign_flips % 2 == 1 {
            amp = -amp;
        }
        (out, amp)
    }

    /// Display phase prefix: `+`, `+i`, `-`, `-i`.
    pub fn phase_prefix(&self) -> &'static str {
        match self.phase_exp {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase_prefix())?;
        for q in 0..self.n_qubits {
            write!(f, "{}", self.letter_at(q).to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (phase, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1u8, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3u8, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0u8, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2u8, r)
        } else {
            (0u8, s)
        };
        let mut x = Vec::with_capacity(rest.len());
        let mut z = Vec::with_capacity(rest.len());
        for c in rest.chars() {
            let l = Letter::from_char(c)
                .ok_or_else(|| Error::InvalidInput(format!("bad Pauli letter {c:?} in {s:?}")))?;
            let (xb, zb) = l.bits();
            x.push(xb);
            z.push(zb);
        }
        if x.is_empty() {
            return Err(Error::InvalidInput(format!("empty Pauli word {s:?}")));
        }
        Ok(PauliString::from_bits(x, z, phase))
    }
}

impl serde::Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for PauliString {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Canonical ordering: by (z_bits, x_bits), then phase. Gives reproducible
/// term order in every serialized artifact.
impl Ord for PauliString {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n_qubits
            .cmp(&other.n_qubits)
            .then_with(|| self.z_bits.cmp(&other.z_bits))
            .then_with(|| self.x_bits.cmp(&other.x_bits))
            .then_with(|| self.phase_exp.cmp(&other.phase_exp))
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Phase-free letter word used as the term key inside a sum.
/// Ordering is lexicographic on (z, x).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Word {
    z: Vec<bool>,
    x: Vec<bool>,
}

/// Complex-weighted collection of Pauli words. Term values are coefficients
/// of the hermitian letter words, so a hermitian sum has real coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n_qubits: usize,
    terms: BTreeMap<Word, Complex64>,
}

impl PauliSum {
    pub fn zero(n: usize) -> Self {
        PauliSum {
            n_qubits: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.add_term(Complex64::new(1.0, 0.0), &PauliString::identity(n));
        s
    }

    pub fn from_string(op: &PauliString) -> Self {
        let mut s = Self::zero(op.n_qubits());
        s.add_term(Complex64::new(1.0, 0.0), op);
        s
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `coeff * op`. The word's phase folds into the coefficient, so the
    /// stored word always has phase exponent 0.
    pub fn add_term(&mut self, coeff: Complex64, op: &PauliString) {
        assert_eq!(self.n_qubits, op.n_qubits(), "term size mismatch");
        let key = Word {
            z: op.z_bits().to_vec(),
            x: op.x_bits().to_vec(),
        };
        let c = coeff * i_pow(op.phase_exp());
        let entry = self.terms.entry(key).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
    }

    /// Terms in canonical order as (coefficient, phase-free word).
    pub fn terms(&self) -> impl Iterator<Item = (Complex64, PauliString)> + '_ {
        self.terms.iter().map(move |(w, &c)| {
            (c, PauliString::from_bits(w.x.clone(), w.z.clone(), 0))
        })
    }

    /// Merge duplicates is automatic; this drops negligible coefficients.
    pub fn simplify(&mut self) {
        self.terms.retain(|_, c| c.norm() > COEFF_EPS);
    }

    pub fn simplified(mut self) -> Self {
        self.simplify();
        self
    }

    pub fn add(&self, other: &PauliSum) -> Result<PauliSum> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let mut out = self.clone();
        for (c, w) in other.terms() {
            out.add_term(c, &w);
        }
        Ok(out)
    }

    pub fn scale(&self, c: Complex64) -> PauliSum {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Exact product of two sums (pairwise word products).
    pub fn mul(&self, other: &PauliSum) -> Result<PauliSum> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let mut out = PauliSum::zero(self.n_qubits);
        for (ca, wa) in self.terms() {
            for (cb, wb) in other.terms() {
                let prod = wa.mul(&wb)?;
                out.add_term(ca * cb, &prod);
            }
        }
        Ok(out)
    }

    /// Hermitian iff every coefficient is real (words are hermitian).
    pub fn is_hermitian(&self, eps: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= eps)
    }

    pub fn max_weight(&self) -> usize {
        self.terms()
            .filter(|(c, _)| c.norm() > COEFF_EPS)
            .map(|(_, w)| w.weight())
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of a given letter word (phase folded in), zero if absent.
    pub fn coefficient(&self, op: &PauliString) -> Complex64 {
        let key = Word {
            z: op.z_bits().to_vec(),
            x: op.x_bits().to_vec(),
        };
        self.terms
            .get(&key)
            .map(|&c| c * i_pow(op.phase_exp()).conj())
            .unwrap_or(Complex64::new(0.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_qubit_products() {
        let x = PauliString::x(1, 0);
        let y = PauliString::y(1, 0);
        let z = PauliString::z(1, 0);
        // X*Y = iZ
        assert_eq!(x.mul(&y).unwrap(), z.times_i());
        // Y*X = -iZ
        assert_eq!(y.mul(&x).unwrap(), z.times_i().negated());
        // Z*X = iY, X*Z = -iY, Y*Z = iX, Z*Y = -iX
        assert_eq!(z.mul(&x).unwrap(), y.times_i());
        assert_eq!(x.mul(&z).unwrap(), y.times_i().negated());
        assert_eq!(y.mul(&z).unwrap(), x.times_i());
        assert_eq!(z.mul(&y).unwrap(), x.times_i().negated());
        // squares are the identity
        for p in [&x, &y, &z] {
            assert!(p.mul(p).unwrap().is_identity());
        }
    }

    #[test]
    fn disjoint_supports_multiply_without_phase() {
        let a = PauliString::x(2, 0);
        let b = PauliString::z(2, 1);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.to_string(), "+XZ");
        assert_eq!(ab.phase_exp(), 0);
    }

    #[test]
    fn edge_operator_times_vertex_operator() {
        // (X_0 Y_1 Y_2) * Z_1 = i (X_0 X_1 Y_2), the single-qubit law YZ = iX at qubit 1
        let e = PauliString::from_letters(3, &[(0, Letter::X), (1, Letter::Y), (2, Letter::Y)]);
        let v = PauliString::z(3, 1);
        let prod = e.mul(&v).unwrap();
        let expect =
            PauliString::from_letters(3, &[(0, Letter::X), (1, Letter::X), (2, Letter::Y)])
                .times_i();
        assert_eq!(prod, expect);
        assert_eq!(prod.to_string(), "+iXXY");
    }

    #[test]
    fn commutation_cases() {
        let x0 = PauliString::x(2, 0);
        let z0 = PauliString::z(2, 0);
        let id = PauliString::identity(2);
        assert!(!x0.commutes(&z0).unwrap());
        assert!(x0.commutes(&id).unwrap());
        assert!(z0.commutes(&id).unwrap());
        // X_0 Y_1 X_2 vs Z_1: one overlapping anticommuting site
        let e = PauliString::from_letters(3, &[(0, Letter::X), (1, Letter::Y), (2, Letter::X)]);
        let v = PauliString::z(3, 1);
        assert!(!e.commutes(&v).unwrap());
    }

    #[test]
    fn weights() {
        assert_eq!(PauliString::identity(4).weight(), 0);
        let e = PauliString::from_letters(4, &[(0, Letter::X), (1, Letter::Y), (3, Letter::Y)]);
        assert_eq!(e.weight(), 3);
        assert_eq!(PauliString::z(4, 2).weight(), 1);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = PauliString::x(2, 0);
        let b = PauliString::x(3, 0);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.commutes(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn hermiticity_from_phase() {
        let y = PauliString::y(2, 0);
        assert!(y.is_hermitian());
        assert!(!y.times_i().is_hermitian());
        assert!(y.negated().is_hermitian());
        let xy = PauliString::from_letters(2, &[(0, Letter::X), (1, Letter::Y)]);
        assert!(xy.is_hermitian());
    }

    #[test]
    fn display_and_parse_roundtrip() {
        for s in ["+XYZI", "-ZZ", "+iXY", "-iYIZ"] {
            let p: PauliString = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        // bare word defaults to +
        let p: PauliString = "XZ".parse().unwrap();
        assert_eq!(p.to_string(), "+XZ");
        assert!("+XQ".parse::<PauliString>().is_err());
    }

    #[test]
    fn sum_merges_and_cancels() {
        let x = PauliString::x(1, 0);
        let mut s = PauliSum::zero(1);
        s.add_term(c(1.0, 0.0), &x);
        s.add_term(c(1.0, 0.0), &x);
        s.simplify();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coefficient(&x), c(2.0, 0.0));

        let mut t = PauliSum::zero(1);
        t.add_term(c(1.0, 0.0), &x);
        t.add_term(c(-1.0, 0.0), &x);
        t.simplify();
        assert!(t.is_empty());
    }

    #[test]
    fn sum_folds_word_phase_into_coefficient() {
        // 2 * (iX) should store as coefficient 2i on word X
        let ix = PauliString::x(1, 0).times_i();
        let mut s = PauliSum::zero(1);
        s.add_term(c(2.0, 0.0), &ix);
        let (coeff, word) = s.terms().next().unwrap();
        assert_eq!(coeff, c(0.0, 2.0));
        assert_eq!(word.phase_exp(), 0);
        assert_eq!(word.to_string(), "+X");
    }

    #[test]
    fn sum_product_matches_group_law() {
        // (X + Z)(X - Z) = X^2 - XZ + ZX - Z^2 = -XZ + ZX = -(-iY) + iY = 2iY
        let x = PauliString::x(1, 0);
        let z = PauliString::z(1, 0);
        let mut a = PauliSum::zero(1);
        a.add_term(c(1.0, 0.0), &x);
        a.add_term(c(1.0, 0.0), &z);
        let mut b = PauliSum::zero(1);
        b.add_term(c(1.0, 0.0), &x);
        b.add_term(c(-1.0, 0.0), &z);
        let prod = a.mul(&b).unwrap().simplified();
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.coefficient(&PauliString::y(1, 0)), c(0.0, 2.0));
    }

    #[test]
    fn apply_to_basis_matches_letter_action() {
        // Y|0> = i|1>, Y|1> = -i|0>
        let y = PauliString::y(1, 0);
        assert_eq!(y.apply_to_basis(0), (1, c(0.0, 1.0)));
        assert_eq!(y.apply_to_basis(1), (0, c(0.0, -1.0)));
        // Z flips sign on |1>
        let z = PauliString::z(1, 0);
        assert_eq!(z.apply_to_basis(1), (1, c(-1.0, 0.0)));
        // qubit 0 is the most significant bit: X_0 on 2 qubits maps |00> -> |10>
        let x0 = PauliString::x(2, 0);
        assert_eq!(x0.apply_to_basis(0b00), (0b10, c(1.0, 0.0)));
    }

    #[test]
    fn adjoint_and_inverse() {
        let p = PauliString::from_letters(2, &[(0, Letter::X), (1, Letter::Y)]).times_i();
        assert!(p.mul(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.adjoint().phase_exp(), 3);
    }
}
