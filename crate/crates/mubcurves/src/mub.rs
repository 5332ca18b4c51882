//! From curves to bases: the commuting displacement class of a curve, its
//! joint eigenbasis with exact rational-complex amplitudes, unbiasedness
//! certificates, and the tensor-factorization structure of the basis.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{common_denominator_form, cq, i_pow, CMat, Cq, Rat};
use crate::gf::Field;
use crate::pauli::{
    self, commutes, displacement, hermitian_correction, multiply, zx_label, PauliOperator,
};
use crate::phasespace::{equation_string, Bundle, Curve, CurveJson};
use crate::Error;

/// The d - 1 pairwise commuting displacement operators sitting on the nonzero
/// points of a curve. Operators are kept in curve point order, both in the
/// raw Z..X form and with the phase corrected to make each one Hermitian.
#[derive(Clone, Debug)]
pub struct OperatorClass {
    qubits: usize,
    raw: Vec<PauliOperator>,
    hermitian: Vec<PauliOperator>,
    labels: Vec<String>,
}

impl OperatorClass {
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    /// Displacement operators as constructed (phase exponent 0 on the Z..X
    /// ordered form).
    pub fn operators(&self) -> &[PauliOperator] {
        &self.raw
    }

    /// The same operators with phases fixed so each is Hermitian with square
    /// one.
    pub fn hermitian_operators(&self) -> &[PauliOperator] {
        &self.hermitian
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tensor_strings(&self) -> Vec<String> {
        self.hermitian.iter().map(|p| p.tensor_string()).collect()
    }

    fn packed_label(op: &PauliOperator) -> u32 {
        (u32::from(op.a_bits()) << 16) | u32::from(op.b_bits())
    }
}

/// Builds the operator class of a curve and checks that it really is one:
/// pairwise commuting and closed under multiplication up to phase.
pub fn class_from_curve(field: &Field, curve: &Curve) -> Result<OperatorClass, Error> {
    let mut raw = Vec::new();
    let mut labels = Vec::new();
    for p in curve.nonzero_points() {
        raw.push(displacement(field, p.alpha, p.beta)?);
        labels.push(zx_label(field, p.alpha, p.beta));
    }
    let mut codes: BTreeSet<u32> = raw.iter().map(OperatorClass::packed_label).collect();
    if codes.len() != raw.len() {
        return Err(Error::Internal("duplicate operator labels".into()));
    }
    codes.insert(0);
    for (i, p) in raw.iter().enumerate() {
        for q in raw.iter().skip(i + 1) {
            if !commutes(p, q)? {
                return Err(Error::NoncommutingClass);
            }
            let prod = multiply(p, q)?;
            if !codes.contains(&OperatorClass::packed_label(&prod)) {
                return Err(Error::Internal("class not closed under products".into()));
            }
        }
    }
    let hermitian = raw
        .iter()
        .map(|p| p.with_phase(p.phase() + hermitian_correction(p)))
        .collect();
    Ok(OperatorClass {
        qubits: field.degree() as usize,
        raw,
        hermitian,
        labels,
    })
}

/// An orthonormal eigenbasis, amplitudes exact Gaussian rationals.
#[derive(Clone, Debug)]
pub struct Basis {
    labels: Vec<String>,
    vectors: Vec<Vec<Cq>>,
}

#[derive(Serialize)]
pub struct VectorJson {
    pub denominator: i64,
    /// Amplitude k is (amplitudes[k][0] + i*amplitudes[k][1]) / denominator.
    pub amplitudes: Vec<[i64; 2]>,
}

#[derive(Serialize)]
pub struct BasisJson {
    pub labels: Vec<String>,
    pub vectors: Vec<VectorJson>,
}

impl Basis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Cq>] {
        &self.vectors
    }

    /// Labels of the class operators this basis diagonalizes.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn to_json(&self) -> BasisJson {
        BasisJson {
            labels: self.labels.clone(),
            vectors: self
                .vectors
                .iter()
                .map(|v| {
                    let (denominator, amplitudes) = common_denominator_form(v);
                    VectorJson {
                        denominator,
                        amplitudes,
                    }
                })
                .collect(),
        }
    }
}

fn apply(m: &CMat, v: &[Cq]) -> Vec<Cq> {
    let d = m.dim();
    (0..d)
        .map(|i| {
            let mut acc = Cq::zero();
            for (j, x) in v.iter().enumerate() {
                acc += m.get(i, j) * x;
            }
            acc
        })
        .collect()
}

/// Joint eigenbasis of the class, one exact unit vector per sign character.
///
/// The class plus the identity is a group up to phases; a binary basis of its
/// labels fixes d consistent sign assignments, each giving a rank-one
/// projector (1/d) * sum of signed Hermitian operators, from which the vector
/// is read off with a fixed global-phase convention (first nonzero amplitude
/// in the closed right half-plane).
pub fn eigenbasis(class: &OperatorClass) -> Result<Basis, Error> {
    let n = class.qubits();
    if n as u32 > pauli::MATRIX_ORACLE_MAX {
        return Err(Error::MatrixOracleTooLarge {
            n: n as u32,
            max: pauli::MATRIX_ORACLE_MAX,
        });
    }
    let d = 1usize << n;
    if class.len() + 1 != d {
        return Err(Error::Internal("class does not span a full group".into()));
    }

    // Binary basis of the packed labels. Reducing a label XORs in earlier
    // pivot codes, so the operator paired with a reduced code must be the
    // matching product of class representatives, not a single one.
    let mut pivots: Vec<(u32, PauliOperator)> = Vec::new();
    for op in class.hermitian_operators() {
        let mut code = OperatorClass::packed_label(op);
        let mut acc = *op;
        for (b, bop) in &pivots {
            if (code ^ b) < code {
                code ^= b;
                acc = multiply(&acc, bop)?;
            }
        }
        if code != 0 {
            pivots.push((code, acc));
        }
    }
    if pivots.len() != n {
        return Err(Error::Internal("label group has wrong rank".into()));
    }

    // Decompose every class operator over the basis and compare the ordered
    // product of basis operators with the stored representative; commuting
    // Hermitian operators can only differ by a sign.
    let mut decomposition: Vec<(usize, i64)> = Vec::new(); // (subset mask, relative sign)
    for op in class.hermitian_operators() {
        let mut code = OperatorClass::packed_label(op);
        let mut subset = 0usize;
        for (k, (b, _)) in pivots.iter().enumerate() {
            if (code ^ b) < code {
                code ^= b;
                subset |= 1 << k;
            }
        }
        if code != 0 {
            return Err(Error::Internal("label outside the group span".into()));
        }
        let mut prod = PauliOperator::identity(n as u32);
        for (k, (_, bop)) in pivots.iter().enumerate() {
            if subset >> k & 1 != 0 {
                prod = multiply(&prod, bop)?;
            }
        }
        if !prod.same_label(op) {
            return Err(Error::Internal("basis product label mismatch".into()));
        }
        let sign = match (4 + i16::from(prod.phase()) - i16::from(op.phase())) % 4 {
            0 => 1,
            2 => -1,
            _ => return Err(Error::Internal("non-real phase between Hermitians".into())),
        };
        decomposition.push((subset, sign));
    }

    let matrices: Vec<CMat> = class
        .hermitian_operators()
        .iter()
        .map(pauli::matrix)
        .collect::<Result<_, _>>()?;
    let inv_d = cq(1, 0) * Cq::new(Rat::new(1, d as i64), Rat::zero());

    let mut vectors = Vec::with_capacity(d);
    for signs in 0..d {
        let mut p = CMat::identity(d);
        for (op_idx, (subset, rel)) in decomposition.iter().enumerate() {
            let chi = if (signs & subset).count_ones() % 2 == 0 {
                *rel
            } else {
                -*rel
            };
            p = p.add(&matrices[op_idx].scale(&cq(chi, 0)));
        }
        p = p.scale(&inv_d);
        if p.mul(&p) != p {
            return Err(Error::Internal("projector is not idempotent".into()));
        }
        vectors.push(extract_unit_vector(&p)?);
    }
    Ok(Basis {
        labels: class.labels().to_vec(),
        vectors,
    })
}

// Reads the unit vector out of a rank-one projector. The nonzero diagonal
// entry of such a projector is exactly 2^-k; scaling the corresponding column
// by 2^(k/2) (with a (1+i) factor standing in for sqrt 2 when k is odd)
// recovers the vector up to global phase, which is then pinned by rotating
// the first nonzero amplitude into Re > 0, Im >= 0.
fn extract_unit_vector(p: &CMat) -> Result<Vec<Cq>, Error> {
    let d = p.dim();
    let j = (0..d)
        .find(|&j| !p.get(j, j).is_zero())
        .ok_or_else(|| Error::Internal("zero projector".into()))?;
    let pjj = p.get(j, j);
    if !pjj.im.is_zero() || !pjj.re.numer().is_one() || pjj.re.denom().count_ones() != 1 {
        return Err(Error::Internal(format!(
            "projector diagonal {pjj} is not an inverse power of two"
        )));
    }
    let k = pjj.re.denom().trailing_zeros();
    let scale = if k.is_multiple_of(2) {
        cq(1i64 << (k / 2), 0)
    } else {
        cq(1i64 << (k / 2), 1i64 << (k / 2))
    };
    let mut v: Vec<Cq> = p.column(j).into_iter().map(|x| x * scale).collect();

    let first = v
        .iter()
        .find(|x| !x.is_zero())
        .copied()
        .ok_or_else(|| Error::Internal("zero eigenvector".into()))?;
    let t = (0..4)
        .find(|&t| {
            let z = first * i_pow(t);
            z.re > Rat::zero() && z.im >= Rat::zero()
        })
        .ok_or_else(|| Error::Internal("no admissible global phase".into()))?;
    let rot = i_pow(t);
    for x in v.iter_mut() {
        *x *= rot;
    }

    if crate::exact::inner(&v, &v) != cq(1, 0) {
        return Err(Error::NotNormalized);
    }
    if apply(p, &v) != v {
        return Err(Error::Internal(
            "extracted vector not fixed by projector".into(),
        ));
    }
    Ok(v)
}

/// Certifies unbiasedness at the operator level: two classes whose label sets
/// share no non-identity element have mutually unbiased eigenbases.
pub fn verify_unbiased_exact(a: &OperatorClass, b: &OperatorClass) -> Result<bool, Error> {
    if a.qubits() != b.qubits() {
        return Err(Error::SizeMismatch {
            left: a.qubits(),
            right: b.qubits(),
        });
    }
    let codes: BTreeSet<u32> = a
        .operators()
        .iter()
        .map(OperatorClass::packed_label)
        .collect();
    Ok(b.operators()
        .iter()
        .all(|op| !codes.contains(&OperatorClass::packed_label(op))))
}

/// Checks unbiasedness directly on the vectors: every cross inner product
/// must have squared modulus exactly 1/d. Both bases must consist of unit
/// vectors of the same dimension.
pub fn verify_unbiased_vectors(a: &Basis, b: &Basis) -> Result<bool, Error> {
    if a.dim() != b.dim() {
        return Err(Error::SizeMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let one = cq(1, 0);
    for v in a.vectors().iter().chain(b.vectors()) {
        if crate::exact::inner(v, v) != one {
            return Err(Error::NotNormalized);
        }
    }
    let target = Rat::new(1, a.dim() as i64);
    for u in a.vectors() {
        for v in b.vectors() {
            let ip = crate::exact::inner(u, v);
            if ip.norm_sqr() != target {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Tensor factorization of a class eigenbasis: the finest grouping of qubits
/// such that every basis vector is a product across the groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityStructure {
    qubits: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct SeparabilityJson {
    pub verdict: String,
    pub blocks: Vec<Vec<usize>>,
}

impl SeparabilityStructure {
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    /// Qubit index groups, each sorted, ordered by first member.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// True when the basis splits across at least one cut. A single qubit
    /// has no cut to fail and counts as factorable.
    pub fn is_factorable(&self) -> bool {
        self.blocks.len() > 1 || self.qubits == 1
    }

    /// Summary label. A two-qubit basis that does not factor consists of
    /// maximally entangled vectors; beyond two qubits an unfactorable basis
    /// is just reported as entangled.
    pub fn verdict(&self) -> &'static str {
        if self.is_factorable() {
            "factorable"
        } else if self.qubits == 2 {
            "maximally_entangled"
        } else {
            "entangled"
        }
    }

    pub fn to_json(&self) -> SeparabilityJson {
        SeparabilityJson {
            verdict: self.verdict().to_string(),
            blocks: self.blocks.clone(),
        }
    }
}

/// Computes the factorization structure from the class labels alone.
///
/// For each operator pair the per-qubit anticommutation pattern is a binary
/// vector over the qubits; the basis factors across a subset exactly when the
/// subset indicator is orthogonal to all those vectors, and two qubits sit in
/// the same block exactly when the difference of their indicators lies in the
/// span V of the pattern vectors.
pub fn separability_structure(class: &OperatorClass) -> Result<SeparabilityStructure, Error> {
    let n = class.qubits();
    let ops = class.operators();
    let mut span: Vec<u16> = Vec::new(); // reduced basis of V
    let insert = |mut w: u16, span: &mut Vec<u16>| {
        for b in span.iter() {
            w = w.min(w ^ b);
        }
        if w != 0 {
            span.push(w);
        }
    };
    for (i, p) in ops.iter().enumerate() {
        for q in ops.iter().skip(i + 1) {
            let w = (p.a_bits() & q.b_bits()) ^ (q.a_bits() & p.b_bits());
            insert(w, &mut span);
        }
    }
    let reduce = |mut w: u16| {
        for b in &span {
            w = w.min(w ^ b);
        }
        w
    };
    // Group qubits by the residue of their singleton indicator modulo V.
    let mut blocks: Vec<(u16, Vec<usize>)> = Vec::new();
    for q in 0..n {
        let r = reduce(1 << q);
        match blocks.iter_mut().find(|(key, _)| *key == r) {
            Some((_, members)) => members.push(q),
            None => blocks.push((r, vec![q])),
        }
    }
    blocks.sort_by_key(|(_, members)| members[0]);
    // Every block indicator must itself be a valid cut.
    for (_, members) in &blocks {
        let ind: u16 = members.iter().fold(0, |m, q| m | 1 << q);
        for w in &span {
            if !(ind & w).count_ones().is_multiple_of(2) {
                return Err(Error::Internal("block indicator is not a valid cut".into()));
            }
        }
    }
    Ok(SeparabilityStructure {
        qubits: n,
        blocks: blocks.into_iter().map(|(_, m)| m).collect(),
    })
}

/// Purity of the reduced state of one qubit, exactly. A qubit outside every
/// entangling block reports 1; a maximally mixed reduction reports 1/2.
pub fn qubit_purity(vector: &[Cq], n: usize, qubit: usize) -> Result<Rat, Error> {
    if vector.len() != 1 << n {
        return Err(Error::SizeMismatch {
            left: vector.len(),
            right: 1 << n,
        });
    }
    if qubit >= n {
        return Err(Error::QubitOutOfRange { qubit, n });
    }
    let bit = n - 1 - qubit; // qubit 0 is the leftmost tensor factor
    let mut rho = [[Cq::zero(); 2]; 2];
    for (idx, amp) in vector.iter().enumerate() {
        let x = idx >> bit & 1;
        for (y, entry) in rho[x].iter_mut().enumerate() {
            let other = (idx & !(1 << bit)) | (y << bit);
            *entry += amp * vector[other].conj();
        }
    }
    let purity = rho[0][0] * rho[0][0] + rho[1][1] * rho[1][1] + (rho[0][1] * rho[1][0]) * cq(2, 0);
    if !purity.im.is_zero() {
        return Err(Error::Internal("purity came out complex".into()));
    }
    Ok(purity.re)
}

/// One row of a bundle report: a curve together with everything derived from
/// it.
pub struct ReportRow {
    pub index: usize,
    pub equation: String,
    pub curve: Curve,
    pub operator_labels: Vec<String>,
    pub tensor_strings: Vec<String>,
    pub separability: SeparabilityStructure,
    pub basis: Basis,
}

pub struct BundleReport {
    pub label: String,
    pub table_label: Option<String>,
    pub rows: Vec<ReportRow>,
}

#[derive(Serialize)]
pub struct ReportRowJson {
    pub index: usize,
    pub equation: String,
    pub curve: CurveJson,
    pub operators: Vec<String>,
    pub tensors: Vec<String>,
    pub separability: SeparabilityJson,
    pub basis: BasisJson,
}

#[derive(Serialize)]
pub struct BundleReportJson {
    pub label: String,
    pub table_label: Option<String>,
    pub rows: Vec<ReportRowJson>,
}

impl BundleReport {
    pub fn to_json(&self) -> BundleReportJson {
        BundleReportJson {
            label: self.label.clone(),
            table_label: self.table_label.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| ReportRowJson {
                    index: r.index,
                    equation: r.equation.clone(),
                    curve: r.curve.to_json(),
                    operators: r.operator_labels.clone(),
                    tensors: r.tensor_strings.clone(),
                    separability: r.separability.to_json(),
                    basis: r.basis.to_json(),
                })
                .collect(),
        }
    }
}

/// Full report for a bundle: per curve, the operator class, its eigenbasis,
/// and the factorization verdict, with rows numbered from 1.
pub fn bundle_report(field: &Field, bundle: &Bundle) -> Result<BundleReport, Error> {
    let mut rows = Vec::new();
    for (i, curve) in bundle.curves().iter().enumerate() {
        let class = class_from_curve(field, curve)?;
        let basis = eigenbasis(&class)?;
        let separability = separability_structure(&class)?;
        rows.push(ReportRow {
            index: i + 1,
            equation: equation_string(field, curve),
            curve: curve.clone(),
            operator_labels: class.labels().to_vec(),
            tensor_strings: class.tensor_strings(),
            separability,
            basis,
        });
    }
    Ok(BundleReport {
        label: bundle.label().to_string(),
        table_label: bundle.table_label().map(str::to_string),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldElement;
    use crate::phasespace::{enumerate_bundles, enumerate_structures, ray};

    fn gf4() -> Field {
        Field::new(2).unwrap()
    }

    fn fe(f: &Field, v: u16) -> FieldElement {
        f.element(v).unwrap()
    }

    fn ray_class(f: &Field, eta: u16, zeta: u16) -> OperatorClass {
        let r = ray(f, fe(f, eta), fe(f, zeta)).unwrap();
        class_from_curve(f, &r).unwrap()
    }

    #[test]
    fn horizontal_ray_class_is_diagonal() {
        let f = gf4();
        let class = ray_class(&f, 1, 0);
        let mut labels = class.labels().to_vec();
        labels.sort();
        assert_eq!(labels, ["Z(1)", "Z(s)", "Z(s2)"]);
        let basis = eigenbasis(&class).unwrap();
        // Diagonal class: eigenvectors are computational basis states.
        for v in basis.vectors() {
            let nonzero: Vec<&Cq> = v.iter().filter(|x| !x.is_zero()).collect();
            assert_eq!(nonzero.len(), 1);
            assert_eq!(*nonzero[0], cq(1, 0));
        }
    }

    #[test]
    fn vertical_ray_basis_is_flat() {
        let f = gf4();
        let class = ray_class(&f, 0, 1);
        let basis = eigenbasis(&class).unwrap();
        let quarter = Rat::new(1, 4);
        for v in basis.vectors() {
            assert!(v.iter().all(|x| x.norm_sqr() == quarter));
        }
    }

    #[test]
    fn eigenvectors_carry_the_right_signs() {
        let f = gf4();
        for curve in enumerate_structures(&f).unwrap() {
            let class = class_from_curve(&f, &curve).unwrap();
            let basis = eigenbasis(&class).unwrap();
            for v in basis.vectors() {
                for op in class.hermitian_operators() {
                    let m = pauli::matrix(op).unwrap();
                    let mv = apply(&m, v);
                    let plus = mv == *v;
                    let minus = mv.iter().zip(v).all(|(x, y)| *x == -y);
                    assert!(plus || minus, "vector is not an eigenvector");
                }
            }
        }
    }

    #[test]
    fn bases_within_a_basis_are_orthogonal() {
        let f = gf4();
        let class = ray_class(&f, 1, 1);
        let basis = eigenbasis(&class).unwrap();
        for (i, u) in basis.vectors().iter().enumerate() {
            for v in basis.vectors().iter().skip(i + 1) {
                assert!(crate::exact::inner(u, v).is_zero());
            }
        }
    }

    #[test]
    fn ray_bundle_is_mutually_unbiased_both_ways() {
        let f = gf4();
        let bundles = enumerate_bundles(&f).unwrap();
        let rays = &bundles[0];
        let classes: Vec<OperatorClass> = rays
            .curves()
            .iter()
            .map(|c| class_from_curve(&f, c).unwrap())
            .collect();
        let bases: Vec<Basis> = classes.iter().map(|c| eigenbasis(c).unwrap()).collect();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                assert!(verify_unbiased_exact(&classes[i], &classes[j]).unwrap());
                assert!(verify_unbiased_vectors(&bases[i], &bases[j]).unwrap());
            }
        }
    }

    #[test]
    fn a_basis_is_not_unbiased_with_itself() {
        let f = gf4();
        let class = ray_class(&f, 1, 0);
        let basis = eigenbasis(&class).unwrap();
        assert!(!verify_unbiased_vectors(&basis, &basis).unwrap());
        assert!(!verify_unbiased_exact(&class, &class).unwrap());
    }

    #[test]
    fn ray_separability_by_slope() {
        let f = gf4();
        // Slopes 0 and 1 give product bases, slopes s and s2 entangled ones.
        assert!(separability_structure(&ray_class(&f, 1, 0))
            .unwrap()
            .is_factorable());
        assert!(separability_structure(&ray_class(&f, 1, 1))
            .unwrap()
            .is_factorable());
        assert!(!separability_structure(&ray_class(&f, 1, 2))
            .unwrap()
            .is_factorable());
        assert!(!separability_structure(&ray_class(&f, 1, 3))
            .unwrap()
            .is_factorable());
        // The vertical axis acts by X alone on each qubit, another product
        // basis.
        assert!(separability_structure(&ray_class(&f, 0, 1))
            .unwrap()
            .is_factorable());
    }

    #[test]
    fn separability_matches_vector_purities() {
        let f = gf4();
        for curve in enumerate_structures(&f).unwrap() {
            let class = class_from_curve(&f, &curve).unwrap();
            let sep = separability_structure(&class).unwrap();
            let basis = eigenbasis(&class).unwrap();
            let expected = if sep.is_factorable() {
                Rat::new(1, 1)
            } else {
                Rat::new(1, 2)
            };
            for v in basis.vectors() {
                for q in 0..2 {
                    assert_eq!(qubit_purity(v, 2, q).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn purity_argument_checks() {
        let v = vec![cq(1, 0), cq(0, 0), cq(0, 0), cq(0, 0)];
        assert!(matches!(
            qubit_purity(&v, 2, 2),
            Err(Error::QubitOutOfRange { qubit: 2, n: 2 })
        ));
        assert!(matches!(
            qubit_purity(&v[..3], 2, 0),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn report_rows_count_and_numbering() {
        let f = gf4();
        let bundles = enumerate_bundles(&f).unwrap();
        let report = bundle_report(&f, &bundles[0]).unwrap();
        assert_eq!(report.label, "table1");
        assert_eq!(report.rows.len(), 5);
        assert_eq!(
            report.rows.iter().map(|r| r.index).collect::<Vec<_>>(),
            [1, 2, 3, 4, 5]
        );
        for row in &report.rows {
            assert_eq!(row.operator_labels.len(), 3);
            assert_eq!(row.basis.dim(), 4);
        }
    }

    #[test]
    fn single_qubit_bases_are_the_pauli_eigenbases() {
        let f = Field::new(1).unwrap();
        let bundles = enumerate_bundles(&f).unwrap();
        let report = bundle_report(&f, &bundles[0]).unwrap();
        assert_eq!(report.rows.len(), 3);
        let half = Rat::new(1, 2);
        for row in &report.rows {
            for v in row.basis.vectors() {
                let norms: Vec<Rat> = v.iter().map(|x| x.norm_sqr()).collect();
                assert!(
                    norms == [Rat::new(1, 1), Rat::zero()]
                        || norms == [Rat::zero(), Rat::new(1, 1)]
                        || norms == [half, half]
                );
            }
        }
    }
}
