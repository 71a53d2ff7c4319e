//! Spin observables on single qubits and on wavepackets.
//!
//! Operators here are multiplicative: closed-form 2×2 matrices depending on
//! `p`. The orbital parts of the rotation and boost generators cancel in the
//! Pauli–Lubansky operator, so derivatives only appear in [`generator_fd`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat2C, Spinor, PAULI};
use crate::mass_shell::{check_on_shell, MomentumGrid, Pair};
use crate::spacetime::{four_vector_from_hermitian, minkowski_product, tilde, under_tilde, FourVector};
use crate::spin_group::{boost_along, rotation_about, sqrt_tilde_over_m, sqrt_under_tilde_over_m};
use crate::states::{h_form, Picture, Wavepacket};

const UNIT_TOL: f64 = 1e-10;
const ORTHOGONAL_TOL: f64 = 1e-10;

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Unit vector n with (τ·n)χ = χ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinDirection {
    pub n: [f64; 3],
}

impl SpinDirection {
    /// ½(τ·n + I)
    pub fn projector(&self) -> Mat2C {
        (crate::spin_group::n_dot_tau(self.n) + Mat2C::identity()).scale_re(0.5)
    }
}

/// n = χ†τχ for a unit spinor χ.
pub fn spin_direction(chi: &Spinor) -> Result<SpinDirection> {
    let norm_sqr = chi.norm_sqr();
    if !((norm_sqr - 1.0).abs() <= UNIT_TOL) {
        return Err(Error::NotNormalized { norm_sqr });
    }
    let n = [1, 2, 3].map(|j| chi.sandwich(&PAULI[j], chi).re);
    // renormalize away the O(UNIT_TOL) slack in the input
    let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    Ok(SpinDirection { n: n.map(|x| x / len) })
}

/// w with tilde(w) = mχχ† − tilde(p)/2, for χ of unit h-norm at p.
pub fn qubit_pl_vector(p: &FourVector, chi: &Spinor, m: f64) -> Result<FourVector> {
    check_on_shell(p, m)?;
    let norm_sqr = h_form(p, m, chi, chi).re;
    if !((norm_sqr - 1.0).abs() <= UNIT_TOL) {
        return Err(Error::NotNormalized { norm_sqr });
    }
    let t = chi.outer(chi).scale_re(m) - tilde(p).scale_re(0.5);
    Ok(four_vector_from_hermitian(&t))
}

/// s = (w − w⁰p/(m + p⁰))/m, the rest-frame spin of a classical particle.
pub fn newton_wigner_classical(p: &FourVector, w: &FourVector, m: f64) -> Result<[f64; 3]> {
    check_on_shell(p, m)?;
    let product = minkowski_product(p, w);
    if !(product.abs() <= ORTHOGONAL_TOL * (p.time() * w.max_abs()).max(1.0)) {
        return Err(Error::NotOrthogonal { product });
    }
    let f = w.time() / (m + p.time());
    let (ws, ps) = (w.spatial(), p.spatial());
    Ok([0, 1, 2].map(|i| (ws[i] - f * ps[i]) / m))
}

/// A 2×2 matrix-valued function of the momentum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicativeOperator {
    /// ½(p̃τ^μ − p^μ I)
    PauliLubansky(usize),
    /// (1/2m)(τ^j p̰ + p^j(p̰ + mI)/(m + p⁰))
    NewtonWigner(usize),
    /// τ^j/2
    Spin(usize),
    /// p^μ I
    Momentum(usize),
}

impl MultiplicativeOperator {
    pub fn at(&self, p: &FourVector, m: f64) -> Mat2C {
        match *self {
            MultiplicativeOperator::PauliLubansky(mu) => pl_matrix(p, mu),
            MultiplicativeOperator::NewtonWigner(j) => nw_closed_form(p, m, j),
            MultiplicativeOperator::Spin(j) => PAULI[j].scale_re(0.5),
            MultiplicativeOperator::Momentum(mu) => Mat2C::identity().scale_re(p[mu]),
        }
    }

    /// ∫ φ† M O φ dμ with M the picture's fibre metric.
    pub fn expectation(&self, phi: &Wavepacket, grid: &MomentumGrid) -> Complex64 {
        let m = phi.mass();
        grid.integrate_fn(|p| {
            let v = phi.eval_unchecked(p);
            let ov = self.at(p, m).apply(&v);
            match phi.picture() {
                Picture::Alternative => h_form(p, m, &v, &ov),
                Picture::Standard => v.inner(&ov),
            }
        })
    }

    /// (φ, Oχ) in the states' common picture.
    pub fn matrix_element(&self, phi: &Wavepacket, chi: &Wavepacket, grid: &MomentumGrid) -> Result<Complex64> {
        if phi.picture() != chi.picture() {
            return Err(Error::PictureMismatch {
                expected: phi.picture(),
                found: chi.picture(),
            });
        }
        let m = phi.mass();
        Ok(grid.integrate_fn(|p| {
            let v = phi.eval_unchecked(p);
            let ow = self.at(p, m).apply(&chi.eval_unchecked(p));
            match phi.picture() {
                Picture::Alternative => h_form(p, m, &v, &ow),
                Picture::Standard => v.inner(&ow),
            }
        }))
    }
}

fn check_index(mu: usize, lo: usize) -> Result<usize> {
    if (lo..4).contains(&mu) {
        Ok(mu)
    } else {
        Err(Error::IndexOutOfRange(mu))
    }
}

/// The Pauli–Lubansky operator component W^μ.
pub fn pl_operator(mu: usize) -> Result<MultiplicativeOperator> {
    Ok(MultiplicativeOperator::PauliLubansky(check_index(mu, 0)?))
}

/// The Newton–Wigner spin operator components (S¹, S², S³).
pub fn nw_spin_operator() -> [MultiplicativeOperator; 3] {
    [1, 2, 3].map(MultiplicativeOperator::NewtonWigner)
}

/// W^μ(p) = ½(p̃τ^μ − p^μ I)
pub fn pl_matrix(p: &FourVector, mu: usize) -> Mat2C {
    (tilde(p) * PAULI[mu] - Mat2C::identity().scale_re(p[mu])).scale_re(0.5)
}

/// W^μ(p) in the commuted form: W⁰ = −½(p̰ − p⁰I), W^j = ½(τ^j p̰ + p^j I).
pub fn pl_matrix_commuted(p: &FourVector, mu: usize) -> Mat2C {
    let ut = under_tilde(p);
    if mu == 0 {
        (ut - Mat2C::identity().scale_re(p[0])).scale_re(-0.5)
    } else {
        (PAULI[mu] * ut + Mat2C::identity().scale_re(p[mu])).scale_re(0.5)
    }
}

/// W⁰ = ½p·τ and W^j = ½(p⁰τ^j − i(p×τ)^j), as obtained from P·J and P⁰J − P×K.
pub fn pl_matrix_from_generators(p: &FourVector, mu: usize) -> Mat2C {
    let s = p.spatial();
    if mu == 0 {
        return crate::spin_group::n_dot_tau(s).scale_re(0.5);
    }
    let j = mu - 1;
    let (a, b) = ((j + 1) % 3, (j + 2) % 3);
    let cross = PAULI[b + 1].scale_re(s[a]) - PAULI[a + 1].scale_re(s[b]);
    (PAULI[mu].scale_re(p[0]) - cross.scale(crate::linalg::I)).scale_re(0.5)
}

/// S_NW^j(p) = (1/2m)(τ^j p̰ + p^j(p̰ + mI)/(m + p⁰))
pub fn nw_closed_form(p: &FourVector, m: f64, j: usize) -> Mat2C {
    let ut = under_tilde(p);
    let shifted = (ut + Mat2C::identity().scale_re(m)).scale_re(p[j] / (m + p[0]));
    (PAULI[j] * ut + shifted).scale_re(0.5 / m)
}

/// S_NW^j(p) = √(p̃/m)(τ^j/2)√(p̰/m)
pub fn nw_conjugated(p: &FourVector, m: f64, j: usize) -> Mat2C {
    sqrt_tilde_over_m(p, m) * PAULI[j].scale_re(0.5) * sqrt_under_tilde_over_m(p, m)
}

/// S_NW^j(p) = (1/m)(W^j − W⁰p^j/(m + p⁰)), assembled from [`pl_matrix`].
pub fn nw_from_pl(p: &FourVector, m: f64, j: usize) -> Mat2C {
    (pl_matrix(p, j) - pl_matrix(p, 0).scale_re(p[j] / (m + p[0]))).scale_re(1.0 / m)
}

/// ∫ p h(φ, φ) dμ (alternative picture) or ∫ p |ψ|² dμ (standard picture).
pub fn expectation_momentum(phi: &Wavepacket, grid: &MomentumGrid) -> FourVector {
    let m = phi.mass();
    grid.integrate_fn(|p| {
        let v = phi.eval_unchecked(p);
        let density = match phi.picture() {
            Picture::Alternative => h_form(p, m, &v, &v).re,
            Picture::Standard => v.norm_sqr(),
        };
        p.scale(density)
    })
}

fn require_alternative(phi: &Wavepacket) -> Result<()> {
    if phi.picture() != Picture::Alternative {
        return Err(Error::PictureMismatch {
            expected: Picture::Alternative,
            found: phi.picture(),
        });
    }
    Ok(())
}

/// ⟨W^μ⟩ = m∫φ†(τ^μ/2)φ dμ − ½⟨P^μ⟩.
pub fn expectation_pl(phi: &Wavepacket, grid: &MomentumGrid) -> Result<FourVector> {
    require_alternative(phi)?;
    let m = phi.mass();
    let Pair(spin, mom) = grid.integrate_fn(|p| {
        let v = phi.eval_unchecked(p);
        let spin = FourVector([0, 1, 2, 3].map(|mu| 0.5 * v.sandwich(&PAULI[mu], &v).re));
        Pair(spin, p.scale(h_form(p, m, &v, &v).re))
    });
    Ok(spin.scale(m) - mom.scale(0.5))
}

/// ⟨W^μ⟩ = ∫φ†(p̰/m)W^μ(p)φ dμ, without the reduction.
pub fn expectation_pl_direct(phi: &Wavepacket, grid: &MomentumGrid) -> Result<FourVector> {
    require_alternative(phi)?;
    let m = phi.mass();
    Ok(grid.integrate_fn(|p| {
        let v = phi.eval_unchecked(p);
        FourVector([0, 1, 2, 3].map(|mu| h_form(p, m, &v, &pl_matrix(p, mu).apply(&v)).re))
    }))
}

/// ⟨S_NW⟩ = ∫[αφ]†(τ/2)[αφ] dμ.
pub fn expectation_nw(phi: &Wavepacket, grid: &MomentumGrid) -> Result<[f64; 3]> {
    require_alternative(phi)?;
    let m = phi.mass();
    let v: FourVector = grid.integrate_fn(|p| {
        let psi = sqrt_under_tilde_over_m(p, m).apply(&phi.eval_unchecked(p));
        FourVector([0, 1, 2, 3].map(|j| if j == 0 { 0.0 } else { 0.5 * psi.sandwich(&PAULI[j], &psi).re }))
    });
    Ok(v.spatial())
}

/// ⟨S_NW⟩ = ∫φ†(p̰/m)S_NW(p)φ dμ, using the closed-form operator on H′.
pub fn expectation_nw_operator(phi: &Wavepacket, grid: &MomentumGrid) -> Result<[f64; 3]> {
    require_alternative(phi)?;
    let m = phi.mass();
    let v: FourVector = grid.integrate_fn(|p| {
        let f = phi.eval_unchecked(p);
        FourVector([0, 1, 2, 3].map(|j| {
            if j == 0 {
                0.0
            } else {
                h_form(p, m, &f, &nw_closed_form(p, m, j).apply(&f)).re
            }
        }))
    });
    Ok(v.spatial())
}

/// Generators of the ten one-parameter subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    /// Rotation about axis 1..=3.
    J(usize),
    /// Boost along axis 1..=3.
    K(usize),
    /// Translation in direction 0..=3.
    P(usize),
}

/// Applies a generator to φ at `p` by central differences of `U′` along its
/// one-parameter group, step `eps`. Momentum generators are exact.
pub fn generator_fd(phi: &Wavepacket, kind: GeneratorKind, p: &FourVector, eps: f64) -> Result<Spinor> {
    require_alternative(phi)?;
    if !(1e-6..=1e-3).contains(&eps) {
        return Err(Error::StepOutOfRange(eps));
    }
    check_on_shell(p, phi.mass())?;
    let axis = |j: usize| {
        let mut n = [0.0; 3];
        n[j - 1] = 1.0;
        n
    };
    let group = |t: f64| -> Result<Spinor> {
        let lambda = match kind {
            GeneratorKind::J(j) => rotation_about(axis(j), t)?,
            GeneratorKind::K(j) => boost_along(axis(j), t)?,
            GeneratorKind::P(_) => unreachable!(),
        };
        Ok(phi.transformed(&lambda, &FourVector::zero()).eval_unchecked(p))
    };
    match kind {
        GeneratorKind::P(mu) => {
            check_index(mu, 0)?;
            Ok(phi.eval_unchecked(p).scale_re(p[mu]))
        }
        GeneratorKind::J(j) | GeneratorKind::K(j) => {
            check_index(j, 1)?;
            let diff = group(eps)? - group(-eps)?;
            Ok(diff.scale(Complex64::new(0.0, 0.5 / eps)))
        }
    }
}
