//! Additive curves over GF(2^n) x GF(2^n), displacement-operator classes, and
//! mutually unbiased bases for registers of n qubits.
//!
//! The crate walks the full chain for small binary fields: exact field
//! arithmetic with self-dual bases ([`gf`]), the census of additive
//! nonsingular curves and their bundles ([`phasespace`]), displacement
//! operators with an exact matrix oracle ([`pauli`]), eigenbases,
//! unbiasedness and separability ([`mub`]), and transport of curves and
//! bundles under local Clifford rotations ([`transforms`]). Everything is
//! integer or rational arithmetic; no floating point anywhere.

pub mod exact;
pub mod gf;
pub mod goldens;
pub mod mub;
pub mod pauli;
pub mod phasespace;
pub mod render;
pub mod transforms;
pub mod verify;

use thiserror::Error as ThisError;

/// Unified error type for the whole pipeline.
#[derive(Debug, ThisError, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {n} outside supported range 1..=8")]
    DegreeOutOfRange { n: u32 },
    #[error("modulus {modulus:#b} does not have degree {n}")]
    WrongModulusDegree { n: u32, modulus: u32 },
    #[error("modulus {modulus:#b} is reducible (factor {factor:#b})")]
    ReducibleModulus { modulus: u32, factor: u32 },
    #[error("division by zero in the field")]
    DivisionByZero,
    #[error("value {val} outside field of order {order}")]
    ValueOutOfRange { val: u16, order: u32 },
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("expansion basis is linearly dependent")]
    DependentBasis,
    #[error("expansion basis is not self-dual")]
    BasisNotSelfDual,
    #[error("ray direction (0, 0) is not a direction")]
    ZeroDirection,
    #[error("parametrization is singular (repeated points)")]
    SingularCurve,
    #[error("curve coefficients violate the commutativity condition")]
    NoncommutingCurve,
    #[error("point set is not an additive subgroup of the expected size")]
    NotASubgroup,
    #[error("exhaustive enumeration supports n <= {max}, got n = {n}")]
    ExhaustiveRangeExceeded { n: u32, max: u32 },
    #[error("matrix oracle supports n <= {max}, got n = {n}")]
    MatrixOracleTooLarge { n: u32, max: u32 },
    #[error("operator size mismatch ({left} vs {right} qubits)")]
    SizeMismatch { left: usize, right: usize },
    #[error("qubit index {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("operators do not pairwise commute")]
    NoncommutingClass,
    #[error("basis vectors are not normalized")]
    NotNormalized,
    #[error("unknown label {label:?}")]
    UnknownLabel { label: String },
    #[error("cannot parse transformation word {word:?}")]
    BadTransformationWord { word: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub use gf::{Field, FieldElement};
pub use mub::{Basis, BundleReport, OperatorClass, SeparabilityStructure};
pub use pauli::PauliOperator;
pub use phasespace::{Bundle, Curve, CurveClass, CurveKind, Point};
pub use transforms::{Axis, IndexMap, LocalClifford, LocalRotation};
