//! Reduced 2×2 spin matrices of wavepackets and their behaviour under
//! changes of frame.
//!
//! The partial trace `ρ = ∫ψψ† dμ` of a standard-picture state mixes spinors
//! that are referred to different rest frames, and its spectrum changes under
//! boosts of a state with momentum spread. The matrix `σ = ∫φφ† dμ` of an
//! alternative-picture state transforms as `σ ↦ ΛσΛ†`.
//!
//! Tolerances are calibrated per run: every integral is repeated on a grid
//! with twice the points per axis and the budget is ten times the observed
//! change, with a small absolute floor for results already at roundoff.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat2C, Spinor};
use crate::mass_shell::{GridSpec, MomentumGrid};
use crate::observables::qubit_pl_vector;
use crate::spacetime::{tilde, FourVector};
use crate::spin_group::{sqrt_tilde_over_m, SL2C};
use crate::states::{h_form, Picture, Wavepacket};

/// Hermiticity and positivity slack for reduced matrices.
pub const MATRIX_TOL: f64 = 1e-11;

/// Multiplier applied to the n-versus-2n difference.
pub const BUDGET_FACTOR: f64 = 10.0;

/// Absolute floor for budgets, at the level of accumulated roundoff.
pub const BUDGET_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReducedKind {
    /// ∫ψψ† dμ of a standard-picture state.
    PeresSpin,
    /// ∫φφ† dμ of an alternative-picture state.
    PauliLubansky,
}

/// A Hermitian positive semidefinite 2×2 matrix with positive trace, tagged
/// with how and from what it was computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedMatrix {
    matrix: Mat2C,
    kind: ReducedKind,
    grid: GridSpec,
    source: String,
}

impl ReducedMatrix {
    pub fn new(matrix: Mat2C, kind: ReducedKind, grid: GridSpec, source: String) -> Result<Self> {
        let scale = matrix.max_abs().max(1.0);
        let asym = matrix.hermitian_asymmetry();
        if !(asym <= MATRIX_TOL * scale) {
            return Err(Error::InvalidReducedMatrix(format!(
                "not Hermitian (asymmetry {asym:e})"
            )));
        }
        let eig = matrix.hermitian_eigenvalues();
        if !(eig[0] >= -MATRIX_TOL * scale) {
            return Err(Error::InvalidReducedMatrix(format!(
                "not positive semidefinite (eigenvalues {eig:?})"
            )));
        }
        let tr = matrix.trace().re;
        if !(tr > 0.0 && tr.is_finite()) {
            return Err(Error::InvalidReducedMatrix(format!("trace {tr} is not positive")));
        }
        Ok(ReducedMatrix {
            matrix,
            kind,
            grid,
            source,
        })
    }

    pub fn matrix(&self) -> &Mat2C {
        &self.matrix
    }

    pub fn kind(&self) -> ReducedKind {
        self.kind
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    /// Digest of the state it was computed from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// Ascending.
    pub fn eigenvalues(&self) -> [f64; 2] {
        self.matrix.hermitian_eigenvalues()
    }

    /// Divided by its trace.
    pub fn normalized(&self) -> ReducedMatrix {
        ReducedMatrix {
            matrix: self.matrix.scale_re(1.0 / self.trace()),
            ..self.clone()
        }
    }
}

fn require(w: &Wavepacket, picture: Picture) -> Result<()> {
    if w.picture() != picture {
        return Err(Error::PictureMismatch {
            expected: picture,
            found: w.picture(),
        });
    }
    Ok(())
}

fn outer_integral(w: &Wavepacket, grid: &MomentumGrid) -> Mat2C {
    grid.integrate_fn(|p| {
        let v = w.eval_unchecked(p);
        v.outer(&v)
    })
}

/// ρ = ∫ψψ† dμ for a standard-picture state.
pub fn peres_rdm(psi: &Wavepacket, grid: &MomentumGrid) -> Result<ReducedMatrix> {
    require(psi, Picture::Standard)?;
    ReducedMatrix::new(outer_integral(psi, grid), ReducedKind::PeresSpin, *grid.spec(), psi.digest())
}

/// σ = ∫φφ† dμ for an alternative-picture state.
pub fn pl_reduced(phi: &Wavepacket, grid: &MomentumGrid) -> Result<ReducedMatrix> {
    require(phi, Picture::Alternative)?;
    ReducedMatrix::new(
        outer_integral(phi, grid),
        ReducedKind::PauliLubansky,
        *grid.spec(),
        phi.digest(),
    )
}

/// σ of α⁻¹ψ assembled from the per-momentum Pauli–Lubansky vectors of a
/// standard-picture state: `∫|ψ|² (tilde(w(p)) + tilde(p)/2)/m dμ`, where
/// `w(p)` is the qubit vector of the lifted unit spinor at `p`.
pub fn pl_reduced_from_qubits(psi: &Wavepacket, grid: &MomentumGrid) -> Result<Mat2C> {
    require(psi, Picture::Standard)?;
    let m = psi.mass();
    let samples: Vec<Result<Mat2C>> = grid.sample(|p| {
        let v = psi.eval_unchecked(p);
        let weight = v.norm_sqr();
        if weight == 0.0 {
            return Ok(Mat2C::zero());
        }
        let chi: Spinor = sqrt_tilde_over_m(p, m).apply(&v.scale_re(weight.sqrt().recip()));
        let w = qubit_pl_vector(p, &chi, m)?;
        Ok((tilde(&w) + tilde(p).scale_re(0.5)).scale_re(weight / m))
    });
    let samples = samples.into_iter().collect::<Result<Vec<_>>>()?;
    grid.integrate(&samples)
}

/// ⟨p⟩ = ∫p h(φ,φ) dμ for an alternative-picture state.
fn mean_momentum(phi: &Wavepacket, grid: &MomentumGrid) -> FourVector {
    let m = phi.mass();
    grid.integrate_fn(|p| {
        let v = phi.eval_unchecked(p);
        p.scale(h_form(p, m, &v, &v).re)
    })
}

/// θ = mσ − ½tilde(⟨p⟩).
pub fn theta_matrix(phi: &Wavepacket, grid: &MomentumGrid) -> Result<Mat2C> {
    let sigma = pl_reduced(phi, grid)?;
    let mean = mean_momentum(phi, grid);
    Ok(sigma.matrix.scale_re(phi.mass()) - tilde(&mean).scale_re(0.5))
}

fn check_coverage(w: &Wavepacket, grid: &MomentumGrid) -> Result<()> {
    w.check_coverage(grid)
}

/// ‖σ(U′(Λ,a)φ) − Λσ(φ)Λ†‖_max with σ(φ) on `grid_a` and the transformed
/// state on `grid_b`.
pub fn covariance_residual(
    phi: &Wavepacket,
    lambda: &SL2C,
    a: &FourVector,
    grid_a: &MomentumGrid,
    grid_b: &MomentumGrid,
) -> Result<f64> {
    let moved = phi.transformed(lambda, a);
    check_coverage(phi, grid_a)?;
    check_coverage(&moved, grid_b)?;
    Ok(residual(phi, &moved, lambda, grid_a, grid_b)?.0)
}

fn residual(
    phi: &Wavepacket,
    moved: &Wavepacket,
    lambda: &SL2C,
    grid_a: &MomentumGrid,
    grid_b: &MomentumGrid,
) -> Result<(f64, ReducedMatrix, Mat2C)> {
    let sa = pl_reduced(phi, grid_a)?;
    let sb = pl_reduced(moved, grid_b)?;
    let l = lambda.matrix();
    let expected = *l * sa.matrix * l.adjoint();
    Ok(((sb.matrix - expected).max_abs(), sb, expected))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The discrepancy is within the quadrature budget.
    Covariant,
    /// The discrepancy exceeds the quadrature budget.
    NonCovariant,
}

impl Verdict {
    fn from_excess(value: f64, budget: f64) -> Verdict {
        if value <= budget {
            Verdict::Covariant
        } else {
            Verdict::NonCovariant
        }
    }
}

/// ten times the observed refinement change, floored at roundoff
pub fn budget_from(change: f64) -> f64 {
    (BUDGET_FACTOR * change).max(BUDGET_FLOOR)
}

/// Covariance of σ under one transformation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CovarianceReport {
    pub kind: ReducedKind,
    /// σ of the transformed state.
    pub matrix: Mat2C,
    /// Λσ_AΛ†.
    pub expected: Mat2C,
    pub eigenvalues: [f64; 2],
    pub residual: f64,
    /// Residual with both grids refined.
    pub residual_refined: f64,
    pub budget: f64,
    pub verdict: Verdict,
}

/// [`covariance_residual`] plus a self-calibrated budget from refined grids.
pub fn covariance_report(
    phi: &Wavepacket,
    lambda: &SL2C,
    a: &FourVector,
    grid_a: &MomentumGrid,
    grid_b: &MomentumGrid,
) -> Result<CovarianceReport> {
    let moved = phi.transformed(lambda, a);
    check_coverage(phi, grid_a)?;
    check_coverage(&moved, grid_b)?;
    let (fine_a, fine_b) = (grid_a.refined()?, grid_b.refined()?);
    let (r, sb, expected) = residual(phi, &moved, lambda, grid_a, grid_b)?;
    let (r2, sb2, expected2) = residual(phi, &moved, lambda, &fine_a, &fine_b)?;
    let change = (sb.matrix - sb2.matrix).max_abs().max((expected - expected2).max_abs());
    let budget = budget_from(change);
    Ok(CovarianceReport {
        kind: ReducedKind::PauliLubansky,
        eigenvalues: sb.eigenvalues(),
        matrix: sb.matrix,
        expected,
        residual: r,
        residual_refined: r2,
        budget,
        verdict: Verdict::from_excess(r, budget),
    })
}

/// Spectral comparison of the partial-trace matrix before and after a
/// transformation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub kind: ReducedKind,
    /// ρ of the transformed state.
    pub matrix: Mat2C,
    pub eig_a: [f64; 2],
    pub eig_b: [f64; 2],
    pub shift: f64,
    pub budget: f64,
    pub verdict: Verdict,
}

fn spectra(
    psi: &Wavepacket,
    moved: &Wavepacket,
    grid_a: &MomentumGrid,
    grid_b: &MomentumGrid,
) -> Result<([f64; 2], ReducedMatrix)> {
    let ea = peres_rdm(psi, grid_a)?.eigenvalues();
    let rb = peres_rdm(moved, grid_b)?;
    Ok((ea, rb))
}

/// Certifies that no unitary relates ρ before and after `U(Λ)`: unitary
/// conjugation preserves the spectrum, so an eigenvalue shift beyond the
/// quadrature budget rules it out.
pub fn noncovariance_witness(
    psi: &Wavepacket,
    lambda: &SL2C,
    grid_a: &MomentumGrid,
    grid_b: &MomentumGrid,
) -> Result<WitnessReport> {
    require(psi, Picture::Standard)?;
    let moved = psi.transformed(lambda, &FourVector::zero());
    check_coverage(psi, grid_a)?;
    check_coverage(&moved, grid_b)?;
    let (ea, rb) = spectra(psi, &moved, grid_a, grid_b)?;
    let (ea2, rb2) = spectra(psi, &moved, &grid_a.refined()?, &grid_b.refined()?)?;
    let eb = rb.eigenvalues();
    let eb2 = rb2.eigenvalues();
    let change = (0..2)
        .map(|i| (ea[i] - ea2[i]).abs().max((eb[i] - eb2[i]).abs()))
        .fold(0.0, f64::max);
    let shift = (0..2).map(|i| (ea[i] - eb[i]).abs()).fold(0.0, f64::max);
    let budget = budget_from(change);
    Ok(WitnessReport {
        kind: ReducedKind::PeresSpin,
        matrix: *rb.matrix(),
        eig_a: ea,
        eig_b: eb,
        shift,
        budget,
        verdict: Verdict::from_excess(shift, budget),
    })
}
