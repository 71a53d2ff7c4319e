use num_complex::Complex64;
use thiserror::Error;

use crate::states::Picture;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M†| = {asymmetry:e})")]
    NonHermitian { asymmetry: f64 },

    #[error("matrix is not positive definite (eigenvalues {eigenvalues:?})")]
    NotPositive { eigenvalues: [f64; 2] },

    #[error("matrix is not in SL(2,C): det = {det}")]
    NotUnimodular { det: Complex64 },

    #[error("matrix is not in SU(2): max |A†A - I| = {defect:e}, det = {det}")]
    NotUnitary { defect: f64, det: Complex64 },

    #[error("mass must be positive and finite, got {0}")]
    InvalidMass(f64),

    #[error("four-momentum is off the mass shell: |<p,p> - m²| = {deviation:e}, p⁰ = {p0}")]
    OffShell { deviation: f64, p0: f64 },

    #[error("direction vector must be a unit 3-vector (|n| = {norm})")]
    NotUnitVector { norm: f64 },

    #[error("spinor normalization violated: norm² = {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("Pauli-Lubansky vector is not orthogonal to the momentum: <p,w> = {product:e}")]
    NotOrthogonal { product: f64 },

    #[error("angular-momentum tensor is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),

    #[error("four-vector index must be in 0..4, got {0}")]
    IndexOutOfRange(usize),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("sample count {found} does not match grid size {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("bundle points live over different momenta")]
    BasePointMismatch,

    #[error("picture mismatch: expected {expected:?}, found {found:?}")]
    PictureMismatch { expected: Picture, found: Picture },

    #[error("mass mismatch between states: {0} vs {1}")]
    MassMismatch(f64, f64),

    #[error("finite-difference step {0} outside [1e-6, 1e-3]")]
    StepOutOfRange(f64),

    #[error("grid does not cover the state: boundary density ratio {tail:e} exceeds {threshold:e} (increase the momentum cutoff)")]
    InsufficientCoverage { tail: f64, threshold: f64 },

    #[error("reduced matrix invariant violated: {0}")]
    InvalidReducedMatrix(String),

    #[error("invalid wavepacket: {0}")]
    InvalidWavepacket(String),

    #[error("{0}")]
    Serialization(#[from] serde_json::Error),
}
