//! Displacement operators on n qubits in symplectic form.
//!
//! An operator is stored as exponent bit-vectors (a, b) plus a power of i:
//! its matrix is `i^phase * prod_j sz_j^{a_j} sx_j^{b_j}`, with qubit j tied
//! to the j-th element of the field's self-dual basis and qubit 1 leftmost in
//! tensor products. The displacement labeled by a phase-space point
//! (alpha, beta) is the literal product Z_alpha X_beta, which carries phase
//! exponent zero in this convention.

use crate::exact::{cq, i_pow, CMat};
use crate::gf::{Field, FieldElement};
use crate::Error;
use serde::Serialize;

/// Qubit count beyond which the exact matrix oracle refuses to build.
pub const MATRIX_ORACLE_MAX: u32 = 4;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliOperator {
    n: u8,
    a: u16,
    b: u16,
    phase: u8,
}

/// Serialized form: per-qubit exponent bits plus the phase exponent.
#[derive(Serialize)]
pub struct PauliJson {
    pub a: Vec<u8>,
    pub b: Vec<u8>,
    pub phase: u8,
}

impl PauliOperator {
    pub fn new(n: u32, a_bits: u16, b_bits: u16, phase: u8) -> PauliOperator {
        let mask = if n >= 16 { u16::MAX } else { (1 << n) - 1 };
        PauliOperator {
            n: n as u8,
            a: a_bits & mask,
            b: b_bits & mask,
            phase: phase % 4,
        }
    }

    pub fn identity(n: u32) -> PauliOperator {
        PauliOperator::new(n, 0, 0, 0)
    }

    pub fn qubits(&self) -> usize {
        self.n as usize
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn a_bit(&self, j: usize) -> u8 {
        (self.a >> j & 1) as u8
    }

    pub fn b_bit(&self, j: usize) -> u8 {
        (self.b >> j & 1) as u8
    }

    pub fn a_bits(&self) -> u16 {
        self.a
    }

    pub fn b_bits(&self) -> u16 {
        self.b
    }

    /// Same (a, b) content ignoring the phase exponent.
    pub fn same_label(&self, other: &PauliOperator) -> bool {
        self.n == other.n && self.a == other.a && self.b == other.b
    }

    pub fn is_identity_label(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn with_phase(&self, phase: u8) -> PauliOperator {
        PauliOperator {
            phase: phase % 4,
            ..*self
        }
    }

    /// Number of qubits acted on by both Z and X parts (the sy positions).
    pub fn y_count(&self) -> u32 {
        (self.a & self.b).count_ones()
    }

    pub fn to_json(&self) -> PauliJson {
        PauliJson {
            a: (0..self.qubits()).map(|j| self.a_bit(j)).collect(),
            b: (0..self.qubits()).map(|j| self.b_bit(j)).collect(),
            phase: self.phase,
        }
    }

    /// Tensor rendering, e.g. "sz@sx"; identity factors print as "1".
    pub fn tensor_string(&self) -> String {
        (0..self.qubits())
            .map(|j| match (self.a_bit(j), self.b_bit(j)) {
                (0, 0) => "1",
                (1, 0) => "sz",
                (0, 1) => "sx",
                _ => "sy",
            })
            .collect::<Vec<_>>()
            .join("@")
    }
}

/// Displacement operator for the point (alpha, beta): Z_alpha X_beta with
/// phase exponent zero. Requires the field's expansion basis to be self-dual,
/// otherwise the per-qubit factorization does not represent the operator.
pub fn displacement(
    field: &Field,
    alpha: FieldElement,
    beta: FieldElement,
) -> Result<PauliOperator, Error> {
    if !field.basis_is_self_dual() {
        return Err(Error::BasisNotSelfDual);
    }
    let pack = |x: FieldElement| {
        field
            .expand(x)
            .iter()
            .enumerate()
            .fold(0u16, |m, (j, &bit)| m | (u16::from(bit) << j))
    };
    Ok(PauliOperator::new(
        field.degree(),
        pack(alpha),
        pack(beta),
        0,
    ))
}

/// Same label under the reversed operator ordering X_beta Z_alpha. Reordering
/// costs (-1)^{tr(alpha beta)}, i.e. a phase exponent of 2*sum_j a_j b_j.
pub fn displacement_reversed(
    field: &Field,
    alpha: FieldElement,
    beta: FieldElement,
) -> Result<PauliOperator, Error> {
    let zx = displacement(field, alpha, beta)?;
    let flips = (zx.a & zx.b).count_ones() as u8;
    Ok(zx.with_phase(2 * (flips % 2)))
}

/// Operator-label rendering in the Z/X form, e.g. "Z(s)X(s2)" or "X(1)".
pub fn zx_label(field: &Field, alpha: FieldElement, beta: FieldElement) -> String {
    if alpha.is_zero() && beta.is_zero() {
        return "I".to_string();
    }
    let mut out = String::new();
    if !alpha.is_zero() {
        out.push_str(&format!("Z({})", field.display(alpha)));
    }
    if !beta.is_zero() {
        out.push_str(&format!("X({})", field.display(beta)));
    }
    out
}

pub fn multiply(p: &PauliOperator, q: &PauliOperator) -> Result<PauliOperator, Error> {
    if p.n != q.n {
        return Err(Error::SizeMismatch {
            left: p.qubits(),
            right: q.qubits(),
        });
    }
    // Moving X^{b_p} past Z^{a_q} costs (-1) per overlapping qubit.
    let swaps = (p.b & q.a).count_ones() as u8;
    Ok(PauliOperator::new(
        u32::from(p.n),
        p.a ^ q.a,
        p.b ^ q.b,
        (p.phase + q.phase + 2 * (swaps % 2)) % 4,
    ))
}

/// Symplectic commutation test: sum_j (a_j b'_j + a'_j b_j) mod 2 == 0.
pub fn commutes(p: &PauliOperator, q: &PauliOperator) -> Result<bool, Error> {
    if p.n != q.n {
        return Err(Error::SizeMismatch {
            left: p.qubits(),
            right: q.qubits(),
        });
    }
    let form = (p.a & q.b).count_ones() + (q.a & p.b).count_ones();
    Ok(form.is_multiple_of(2))
}

/// Exact 2^n x 2^n matrix of the operator (Gaussian-integer entries).
pub fn matrix(p: &PauliOperator) -> Result<CMat, Error> {
    if u32::from(p.n) > MATRIX_ORACLE_MAX {
        return Err(Error::MatrixOracleTooLarge {
            n: u32::from(p.n),
            max: MATRIX_ORACLE_MAX,
        });
    }
    let mut m = CMat::identity(1);
    for j in 0..p.qubits() {
        let factor = match (p.a_bit(j), p.b_bit(j)) {
            (0, 0) => CMat::identity(2),
            (1, 0) => CMat::from_rows(&[&[cq(1, 0), cq(0, 0)], &[cq(0, 0), cq(-1, 0)]]),
            (0, 1) => CMat::from_rows(&[&[cq(0, 0), cq(1, 0)], &[cq(1, 0), cq(0, 0)]]),
            // sz * sx, the phase-zero representative of the y position
            _ => CMat::from_rows(&[&[cq(0, 0), cq(1, 0)], &[cq(-1, 0), cq(0, 0)]]),
        };
        m = m.kron(&factor);
    }
    Ok(m.scale(&i_pow(p.phase)))
}

/// Phase exponent k such that i^k * p is Hermitian with square +1; the
/// corrected operator is the plain tensor of Pauli letters, independent of
/// how p's own phase was bookkept.
pub fn hermitian_correction(p: &PauliOperator) -> u8 {
    let y = (p.y_count() % 4) as u8;
    (8 - p.phase - y) % 4
}
