//! SL(2,C) kinematics: the double covering map onto SO↑(1,3), positive
//! matrix square roots, standard and general boosts, and Wigner rotations.
//!
//! A group element `A` acts on four-vectors through
//! `tilde(A x) = A tilde(x) A†`. The standard boost is the unique positive
//! element taking k = (m, 0, 0, 0) to p, which is `√(tilde(p)/m)`.

use std::ops::{Mul, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, Mat2C, ONE, PAULI};
use crate::mass_shell::{check_on_shell, lift};
use crate::spacetime::{four_vector_from_hermitian, tilde, AngularMomentumTensor, FourVector, METRIC};

/// Determinant tolerance for SL(2,C) membership, scaled by ‖A‖²_F / 2.
pub const UNIMODULAR_TOL: f64 = 1e-12;
/// Unitarity tolerance for SU(2) membership.
pub const UNITARY_TOL: f64 = 1e-12;

/// An element of SL(2,C).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Mat2C", into = "Mat2C")]
pub struct SL2C(Mat2C);

impl SL2C {
    pub fn new(m: Mat2C) -> Result<Self> {
        let det = m.det();
        let scale = (0.5 * m.norm() * m.norm()).max(1.0);
        if !m.is_finite() || !((det - ONE).norm() <= UNIMODULAR_TOL * scale) {
            return Err(Error::NotUnimodular { det });
        }
        Ok(SL2C(m))
    }

    /// Rescales an invertible matrix by a square root of its determinant.
    pub fn normalize(m: Mat2C) -> Result<Self> {
        let det = m.det();
        if det.norm() == 0.0 || !det.is_finite() {
            return Err(Error::NotUnimodular { det });
        }
        SL2C::new(m.scale(det.sqrt().inv()))
    }

    pub fn identity() -> Self {
        SL2C(Mat2C::identity())
    }

    pub fn matrix(&self) -> &Mat2C {
        &self.0
    }

    /// Exact inverse from the adjugate (det = 1).
    pub fn inverse(&self) -> SL2C {
        let m = &self.0 .0;
        SL2C(Mat2C::new(m[1][1], -m[0][1], -m[1][0], m[0][0]))
    }

    pub fn adjoint(&self) -> SL2C {
        SL2C(self.0.adjoint())
    }

    /// True when the element lies in SU(2) within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.0.unitarity_defect() <= tol
    }

    pub fn to_lorentz(&self) -> LorentzMatrix {
        covering_map(self)
    }
}

impl From<SL2C> for Mat2C {
    fn from(a: SL2C) -> Mat2C {
        a.0
    }
}

impl TryFrom<Mat2C> for SL2C {
    type Error = Error;
    fn try_from(m: Mat2C) -> Result<Self> {
        SL2C::new(m)
    }
}

impl Mul for SL2C {
    type Output = SL2C;
    fn mul(self, o: SL2C) -> SL2C {
        SL2C(self.0 * o.0)
    }
}

impl Neg for SL2C {
    type Output = SL2C;
    fn neg(self) -> SL2C {
        SL2C(-self.0)
    }
}

/// A real 4×4 matrix acting on contravariant components, `(Λx)^μ = Λ^μ_ν x^ν`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

impl LorentzMatrix {
    pub fn identity() -> Self {
        LorentzMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 })
        }))
    }

    pub fn apply(&self, x: &FourVector) -> FourVector {
        FourVector(std::array::from_fn(|mu| {
            (0..4).map(|nu| self.0[mu][nu] * x.0[nu]).sum()
        }))
    }

    /// max |Λᵀ η Λ − η| entrywise.
    pub fn metric_defect(&self) -> f64 {
        let l = &self.0;
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                let g: f64 = (0..4).map(|mu| l[mu][a] * METRIC[mu] * l[mu][b]).sum();
                let target = if a == b { METRIC[a] } else { 0.0 };
                worst = worst.max((g - target).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        let mut a = self.0;
        let mut det = 1.0;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap_or(col);
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in (col + 1)..4 {
                let f = a[row][col] / a[col][col];
                for k in col..4 {
                    a[row][k] -= f * a[col][k];
                }
            }
        }
        det
    }

    pub fn is_orthochronous(&self) -> bool {
        self.0[0][0] >= 1.0
    }

    pub fn max_abs_diff(&self, o: &LorentzMatrix) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.0[i][j] - o.0[i][j]).abs());
            }
        }
        worst
    }
}

impl Mul for LorentzMatrix {
    type Output = LorentzMatrix;
    fn mul(self, o: LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).map(|k| self.0[i][k] * o.0[k][j]).sum())
        }))
    }
}

impl AngularMomentumTensor {
    /// j'^{αβ} = Λ^α_μ Λ^β_ν j^{μν}
    pub fn transformed(&self, l: &LorentzMatrix) -> AngularMomentumTensor {
        let u = self.upper();
        let mut out = [[0.0; 4]; 4];
        for (a, row) in out.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                let mut acc = 0.0;
                for mu in 0..4 {
                    for nu in 0..4 {
                        acc += l.0[a][mu] * l.0[b][nu] * u[mu][nu];
                    }
                }
                *slot = acc;
            }
        }
        // exact antisymmetry after rounding
        for a in 0..4 {
            out[a][a] = 0.0;
            for b in (a + 1)..4 {
                let v = 0.5 * (out[a][b] - out[b][a]);
                out[a][b] = v;
                out[b][a] = -v;
            }
        }
        AngularMomentumTensor::from_upper(out)
    }
}

/// κ(A), column by column: `tilde(κ(A) e_ν) = A τ^ν A†`.
pub fn covering_map(a: &SL2C) -> LorentzMatrix {
    let m = a.0;
    let md = m.adjoint();
    let mut out = [[0.0; 4]; 4];
    for nu in 0..4 {
        let image = m * PAULI[nu] * md;
        let col = four_vector_from_hermitian(&image);
        for mu in 0..4 {
            out[mu][nu] = col.0[mu];
        }
    }
    LorentzMatrix(out)
}

/// A x computed in the 2×2 picture: `tilde(A x) = A tilde(x) A†`.
pub fn apply_lorentz(a: &SL2C, x: &FourVector) -> FourVector {
    let image = a.0 * tilde(x) * a.0.adjoint();
    four_vector_from_hermitian(&image)
}

/// Square root of a Hermitian positive-definite 2×2 matrix,
/// `(M + √det M · I) / √(tr M + 2√det M)`.
pub fn matrix_sqrt_pos(m: &Mat2C) -> Result<Mat2C> {
    let asymmetry = m.hermitian_asymmetry();
    if !(asymmetry <= UNIMODULAR_TOL * m.max_abs().max(1.0)) {
        return Err(Error::NonHermitian { asymmetry });
    }
    let eigenvalues = m.hermitian_eigenvalues();
    let det = m.det().re;
    let tr = m.trace().re;
    if !(eigenvalues[0] > 0.0 && det > 0.0 && tr > 0.0) {
        return Err(Error::NotPositive { eigenvalues });
    }
    let root_det = det.sqrt();
    let denom = (tr + 2.0 * root_det).sqrt();
    Ok((*m + Mat2C::identity().scale_re(root_det)).scale_re(1.0 / denom))
}

/// Spherical angles (θ, φ) of a unit vector, with φ = 0 on the z-axis.
fn spherical_angles(n: [f64; 3]) -> (f64, f64) {
    let theta = n[2].clamp(-1.0, 1.0).acos();
    let rho = n[0].hypot(n[1]);
    let phi = if rho == 0.0 { 0.0 } else { n[1].atan2(n[0]) };
    (theta, phi)
}

/// R(n̂) = diag(e^{−iφ/2}, e^{iφ/2}) · [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]],
/// the rotation taking ẑ to n̂.
pub fn rotation_to(nhat: [f64; 3]) -> Result<SL2C> {
    let norm = (nhat[0] * nhat[0] + nhat[1] * nhat[1] + nhat[2] * nhat[2]).sqrt();
    if !((norm - 1.0).abs() <= 1e-12) {
        return Err(Error::NotUnitVector { norm });
    }
    let (theta, phi) = spherical_angles(nhat);
    Ok(rotation_from_angles(theta, phi))
}

fn rotation_from_angles(theta: f64, phi: f64) -> SL2C {
    let (s, co) = (0.5 * theta).sin_cos();
    let e = Complex64::from_polar(1.0, -0.5 * phi);
    let z = Mat2C::diag(e, e.conj());
    let y = Mat2C::from_real(co, -s, s, co);
    SL2C(z * y)
}

/// Rotation taking ẑ to the direction of `v`, or the identity for v = 0.
pub(crate) fn rotation_toward(v: [f64; 3]) -> SL2C {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if norm == 0.0 {
        return SL2C::identity();
    }
    let (theta, phi) = spherical_angles(v.map(|x| x / norm));
    rotation_from_angles(theta, phi)
}

/// B(|p|) = diag(√((p⁰+|p|)/m), √((p⁰−|p|)/m)), the z-boost taking k to
/// (p⁰, 0, 0, |p|).
pub fn boost_z(pmag: f64, m: f64) -> Result<SL2C> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidMass(m));
    }
    let p0 = m.hypot(pmag);
    // (p⁰ − |p|) computed as m² / (p⁰ + |p|) to avoid cancellation
    let plus = (p0 + pmag) / m;
    let minus = m / (p0 + pmag);
    Ok(SL2C(Mat2C::diag(c(plus.sqrt(), 0.0), c(minus.sqrt(), 0.0))))
}

/// Standard boost L₀(p) = √(tilde(p)/m).
pub fn standard_boost(p: &FourVector, m: f64) -> Result<SL2C> {
    check_on_shell(p, m)?;
    // re-lift so det(tilde(p)/m) = 1 to rounding
    let p = lift(p.spatial(), m)?;
    let root = matrix_sqrt_pos(&tilde(&p).scale_re(1.0 / m))?;
    Ok(SL2C(root))
}

/// √(tilde(p)/m) for an on-shell p without validation; used in hot loops.
pub(crate) fn sqrt_tilde_over_m(p: &FourVector, m: f64) -> Mat2C {
    let t = tilde(p);
    (t + Mat2C::identity().scale_re(m)).scale_re(1.0 / (2.0 * m * (m + p.0[0])).sqrt())
}

/// √(under_tilde(p)/m) = √(tilde(p)/m)⁻¹ for an on-shell p.
pub(crate) fn sqrt_under_tilde_over_m(p: &FourVector, m: f64) -> Mat2C {
    let t = crate::spacetime::under_tilde(p);
    (t + Mat2C::identity().scale_re(m)).scale_re(1.0 / (2.0 * m * (m + p.0[0])).sqrt())
}

/// Standard boost in polar form R(p̂) B(|p|) R(p̂)⁻¹.
pub fn standard_boost_polar(p: &FourVector, m: f64) -> Result<SL2C> {
    check_on_shell(p, m)?;
    let s = p.spatial();
    let pmag = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
    let r = rotation_toward(s);
    Ok(r * boost_z(pmag, m)? * r.inverse())
}

/// L(p) = L₀(p) B for a rotation B ∈ SU(2).
pub fn general_boost(p: &FourVector, m: f64, b: &SL2C) -> Result<SL2C> {
    let defect = b.0.unitarity_defect();
    if !(defect <= UNITARY_TOL) {
        return Err(Error::NotUnitary {
            defect,
            det: b.0.det(),
        });
    }
    Ok(standard_boost(p, m)? * *b)
}

/// Which family of boosts L(p) labels the spin states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoostChoice {
    /// L(p) = L₀(p)
    #[default]
    Standard,
    /// L(p) = L₀(p) R(p̂), with R = I at rest
    Helicity,
}

impl BoostChoice {
    pub fn boost(&self, p: &FourVector, m: f64) -> Result<SL2C> {
        match self {
            BoostChoice::Standard => standard_boost(p, m),
            BoostChoice::Helicity => general_boost(p, m, &rotation_toward(p.spatial())),
        }
    }
}

/// W(Λ, p) = L(Λp)⁻¹ Λ L(p).
pub fn wigner_rotation(
    lambda: &SL2C,
    p: &FourVector,
    m: f64,
    choice: BoostChoice,
) -> Result<SL2C> {
    check_on_shell(p, m)?;
    let lp = apply_lorentz(lambda, p);
    let image = lift(lp.spatial(), m)?;
    Ok(choice.boost(&image, m)?.inverse() * *lambda * choice.boost(p, m)?)
}

/// exp(−iθ n̂·τ/2): rotation by `angle` about `axis`.
pub fn rotation_about(axis: [f64; 3], angle: f64) -> Result<SL2C> {
    let n = unit(axis)?;
    let (s, co) = (0.5 * angle).sin_cos();
    let gen = n_dot_tau(n);
    Ok(SL2C(
        Mat2C::identity().scale_re(co) + gen.scale(c(0.0, -s)),
    ))
}

/// exp(u n̂·τ/2): boost of rapidity `rapidity` along `axis`.
pub fn boost_along(axis: [f64; 3], rapidity: f64) -> Result<SL2C> {
    let n = unit(axis)?;
    let (ch, sh) = ((0.5 * rapidity).cosh(), (0.5 * rapidity).sinh());
    Ok(SL2C(
        Mat2C::identity().scale_re(ch) + n_dot_tau(n).scale_re(sh),
    ))
}

fn unit(v: [f64; 3]) -> Result<[f64; 3]> {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(Error::NotUnitVector { norm });
    }
    Ok(v.map(|x| x / norm))
}

pub(crate) fn n_dot_tau(n: [f64; 3]) -> Mat2C {
    PAULI[1].scale_re(n[0]) + PAULI[2].scale_re(n[1]) + PAULI[3].scale_re(n[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

    const P_STAR: FourVector = FourVector::new(1.25, 0.0, 0.0, 0.75);

    fn close(a: &Mat2C, b: &Mat2C, tol: f64) -> bool {
        (*a - *b).max_abs() <= tol
    }

    fn rz(theta: f64) -> SL2C {
        SL2C::new(Mat2C::diag(
            Complex64::from_polar(1.0, -theta / 2.0),
            Complex64::from_polar(1.0, theta / 2.0),
        ))
        .unwrap()
    }

    #[test]
    fn sl2c_rejects_bad_determinant() {
        assert!(matches!(
            SL2C::new(Mat2C::identity().scale_re(2.0)),
            Err(Error::NotUnimodular { .. })
        ));
        let a = SL2C::normalize(Mat2C::from_real(2.0, 1.0, 0.0, 3.0)).unwrap();
        assert!((a.matrix().det() - ONE).norm() < 1e-15);
    }

    #[test]
    fn covering_map_examples() {
        assert!(covering_map(&SL2C::identity()).max_abs_diff(&LorentzMatrix::identity()) == 0.0);

        let a = SL2C::new(Mat2C::diag(c(SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0))).unwrap();
        let kappa = covering_map(&a);
        let image = kappa.apply(&FourVector::rest(1.0));
        assert!((image - P_STAR).max_abs() < 1e-15, "{image:?}");

        let theta = 0.7;
        let rot = covering_map(&rz(theta));
        let (s, co) = theta.sin_cos();
        let expect = LorentzMatrix([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, co, -s, 0.0],
            [0.0, s, co, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]);
        assert!(rot.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn apply_lorentz_examples() {
        let x = FourVector::new(0.3, -0.2, 1.1, 4.0);
        assert!((apply_lorentz(&SL2C::identity(), &x) - x).max_abs() < 1e-15);
        let a = SL2C::new(Mat2C::diag(c(SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0))).unwrap();
        let image = apply_lorentz(&a, &FourVector::rest(1.0));
        assert!((image - P_STAR).max_abs() < 1e-15);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(matrix_sqrt_pos(&Mat2C::identity()).unwrap(), Mat2C::identity());
        let r = matrix_sqrt_pos(&tilde(&P_STAR)).unwrap();
        // (diag(3, 3/2)) / √4.5
        let expect = Mat2C::diag(c(SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0));
        assert!(close(&r, &expect, 1e-15), "{r:?}");
        let m = 1.0;
        let lower = matrix_sqrt_pos(&crate::spacetime::under_tilde(&P_STAR).scale_re(1.0 / m)).unwrap();
        assert!(close(&(r * lower), &Mat2C::identity(), 1e-15));
    }

    #[test]
    fn sqrt_rejects_indefinite() {
        let x = FourVector::new(1.0, 2.0, 3.0, 4.0);
        assert!(matches!(matrix_sqrt_pos(&tilde(&x)), Err(Error::NotPositive { .. })));
        assert!(matches!(
            matrix_sqrt_pos(&Mat2C::from_real(-1.0, 0.0, 0.0, -1.0)),
            Err(Error::NotPositive { .. })
        ));
        assert!(matches!(
            matrix_sqrt_pos(&Mat2C::from_real(1.0, 0.5, 0.0, 1.0)),
            Err(Error::NonHermitian { .. })
        ));
    }

    #[test]
    fn rotation_to_examples() {
        assert_eq!(rotation_to([0.0, 0.0, 1.0]).unwrap(), SL2C::identity());
        let zhat = FourVector::new(0.0, 0.0, 0.0, 1.0);
        for n in [[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]] {
            let r = rotation_to(n).unwrap();
            let image = covering_map(&r).apply(&zhat);
            assert!((image - FourVector::from_parts(0.0, n)).max_abs() < 1e-15, "{n:?}");
            assert!(r.is_unitary(1e-15));
        }
        assert!(matches!(
            rotation_to([0.0, 0.0, 0.0]),
            Err(Error::NotUnitVector { .. })
        ));
    }

    #[test]
    fn boost_z_examples() {
        assert_eq!(boost_z(0.0, 1.0).unwrap(), SL2C::identity());
        let b = boost_z(0.75, 1.0).unwrap();
        let expect = Mat2C::diag(c(SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0));
        assert!(close(b.matrix(), &expect, 1e-15));
        let image = covering_map(&b).apply(&FourVector::rest(1.0));
        assert!((image - P_STAR).max_abs() < 1e-15);
        assert!(matches!(boost_z(1.0, 0.0), Err(Error::InvalidMass(_))));
        assert!(matches!(boost_z(1.0, -2.0), Err(Error::InvalidMass(_))));
    }

    #[test]
    fn standard_boost_examples() {
        let m = 1.3;
        assert!(close(
            standard_boost(&FourVector::rest(m), m).unwrap().matrix(),
            &Mat2C::identity(),
            1e-15
        ));
        let l = standard_boost(&P_STAR, 1.0).unwrap();
        let expect = Mat2C::diag(c(SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0));
        assert!(close(l.matrix(), &expect, 1e-15));
        assert!(matches!(
            standard_boost(&FourVector::new(1.0, 1.0, 0.0, 0.0), 1.0),
            Err(Error::OffShell { .. })
        ));
    }

    #[test]
    fn general_boost_examples() {
        let p = lift([0.3, -0.8, 0.5], 1.0).unwrap();
        let l0 = standard_boost(&p, 1.0).unwrap();
        assert_eq!(general_boost(&p, 1.0, &SL2C::identity()).unwrap(), l0);

        let helicity = BoostChoice::Helicity.boost(&p, 1.0).unwrap();
        let image = apply_lorentz(&helicity, &FourVector::rest(1.0));
        assert!((image - p).max_abs() < 1e-14);

        let not_rotation = boost_along([1.0, 0.0, 0.0], 0.3).unwrap();
        assert!(matches!(
            general_boost(&p, 1.0, &not_rotation),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn wigner_examples() {
        let m = 1.0;
        let q = lift([0.4, 0.1, -0.3], m).unwrap();
        let k = FourVector::rest(m);
        let w = wigner_rotation(&standard_boost(&q, m).unwrap(), &k, m, BoostChoice::Standard)
            .unwrap();
        assert!(close(w.matrix(), &Mat2C::identity(), 1e-14));

        let r = rotation_about([1.0, 2.0, -0.5], 1.1).unwrap();
        let p = lift([0.7, -0.2, 1.5], m).unwrap();
        let w = wigner_rotation(&r, &p, m, BoostChoice::Standard).unwrap();
        assert!(close(w.matrix(), r.matrix(), 1e-14));

        let lambda = boost_along([1.0, 0.0, 0.0], 0.8).unwrap() * boost_z(1.2, m).unwrap();
        let w = wigner_rotation(&lambda, &k, m, BoostChoice::Standard).unwrap();
        assert!(w.is_unitary(1e-13));
        assert!((w.matrix().det() - ONE).norm() < 1e-13);
        assert!((*w.matrix() - Mat2C::identity()).max_abs() > 1e-3);
    }

    #[test]
    fn rotation_about_matches_covering_map() {
        let r = rotation_about([0.0, 0.0, 1.0], PI / 3.0).unwrap();
        assert!(close(r.matrix(), rz(PI / 3.0).matrix(), 1e-15));
        let b = boost_along([0.0, 0.0, 1.0], 0.5).unwrap();
        let image = apply_lorentz(&b, &FourVector::rest(1.0));
        let expect = FourVector::new(0.5f64.cosh(), 0.0, 0.0, 0.5f64.sinh());
        assert!((image - expect).max_abs() < 1e-15);
    }

    #[test]
    fn lorentz_det() {
        let l = covering_map(&(boost_along([1.0, 1.0, 0.0], 0.9).unwrap()
            * rotation_about([0.2, 0.1, 1.0], 2.0).unwrap()));
        assert!((l.det() - 1.0).abs() < 1e-13);
        assert!(l.metric_defect() < 1e-14);
        assert!(l.is_orthochronous());
    }
}
