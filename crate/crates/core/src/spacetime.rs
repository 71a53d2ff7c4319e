//! Minkowski four-vectors, their 2×2 Hermitian images, and the classical
//! Pauli–Lubansky vector.
//!
//! Signature is (+,−,−,−) and ħ = c = 1. Components are stored with upper
//! indices. The two matrix images are
//!
//! ```text
//! tilde(x)       = x⁰ I + x·τ      = [[x⁰+x³, x¹−ix²], [x¹+ix², x⁰−x³]]
//! under_tilde(x) = x_μ τ^μ = x⁰ I − x·τ
//! ```
//!
//! so that `det tilde(x) = ⟨x, x⟩` and
//! `tilde(x)·under_tilde(y) + tilde(y)·under_tilde(x) = 2⟨x, y⟩ I`.

use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, Mat2C, PAULI};

/// Diagonal of the Minkowski metric.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Contravariant four-vector x^μ.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        FourVector([x0, x1, x2, x3])
    }

    pub const fn zero() -> Self {
        FourVector([0.0; 4])
    }

    pub fn from_parts(x0: f64, spatial: [f64; 3]) -> Self {
        FourVector([x0, spatial[0], spatial[1], spatial[2]])
    }

    /// The rest-frame momentum k = (m, 0, 0, 0).
    pub const fn rest(m: f64) -> Self {
        FourVector([m, 0.0, 0.0, 0.0])
    }

    pub fn time(&self) -> f64 {
        self.0[0]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Covariant components x_μ.
    pub fn lower(&self) -> [f64; 4] {
        let x = self.0;
        [x[0], -x[1], -x[2], -x[3]]
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: f64) -> Self {
        FourVector(self.0.map(|v| v * s))
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, mu: usize) -> &f64 {
        &self.0[mu]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        self.scale(s)
    }
}

/// ⟨x, y⟩ = x⁰y⁰ − x·y
pub fn minkowski_product(x: &FourVector, y: &FourVector) -> f64 {
    let (x, y) = (x.0, y.0);
    x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3]
}

/// x⁰ I + x·τ
pub fn tilde(x: &FourVector) -> Mat2C {
    let x = x.0;
    Mat2C::new(
        c(x[0] + x[3], 0.0),
        c(x[1], -x[2]),
        c(x[1], x[2]),
        c(x[0] - x[3], 0.0),
    )
}

/// x_μ τ^μ = x⁰ I − x·τ
pub fn under_tilde(x: &FourVector) -> Mat2C {
    let x = x.0;
    Mat2C::new(
        c(x[0] - x[3], 0.0),
        c(-x[1], x[2]),
        c(-x[1], -x[2]),
        c(x[0] + x[3], 0.0),
    )
}

/// Hermiticity tolerance used by [`four_vector_from_tilde`], scaled by the
/// matrix magnitude.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Inverse of [`tilde`]: x⁰ = tr(M)/2, x^j = tr(M τ^j)/2.
pub fn four_vector_from_tilde(m: &Mat2C) -> Result<FourVector> {
    let asymmetry = m.hermitian_asymmetry();
    if !(asymmetry <= HERMITIAN_TOL * m.max_abs().max(1.0)) {
        return Err(Error::NonHermitian { asymmetry });
    }
    Ok(four_vector_from_hermitian(m))
}

/// Reads the four-vector off the Hermitian part of `m` without checking.
pub(crate) fn four_vector_from_hermitian(m: &Mat2C) -> FourVector {
    let coeffs = m.pauli_coefficients();
    FourVector(coeffs.map(|z| z.re))
}

/// Totally antisymmetric symbol with ε^{0123} = +1 (upper indices).
pub fn levi_civita(idx: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    let mut v = idx;
    for i in 0..4 {
        if v[i] > 3 {
            return 0.0;
        }
        for j in (i + 1)..4 {
            if v[i] == v[j] {
                return 0.0;
            }
        }
    }
    // selection sort, counting transpositions
    for i in 0..4 {
        let min = (i..4).min_by_key(|&k| v[k]).unwrap_or(i);
        if min != i {
            v.swap(i, min);
            sign = -sign;
        }
    }
    sign
}

/// Relativistic angular momentum j_{αβ} with lower indices.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AngularMomentumTensor {
    lower: [[f64; 4]; 4],
}

impl AngularMomentumTensor {
    /// Validates antisymmetry exactly.
    pub fn from_lower(lower: [[f64; 4]; 4]) -> Result<Self> {
        for a in 0..4 {
            for b in a..4 {
                if lower[a][b] != -lower[b][a] {
                    return Err(Error::NotAntisymmetric(a, b));
                }
            }
        }
        Ok(AngularMomentumTensor { lower })
    }

    /// Builds the tensor from the spatial angular momentum `j` and the boost
    /// part `k`, with j^{0i} = k^i and j^{ab} = ε_{abc} j^c.
    pub fn from_parts(j: [f64; 3], k: [f64; 3]) -> Self {
        let mut upper = [[0.0; 4]; 4];
        for i in 0..3 {
            upper[0][i + 1] = k[i];
            upper[i + 1][0] = -k[i];
        }
        upper[1][2] = j[2];
        upper[2][1] = -j[2];
        upper[2][3] = j[0];
        upper[3][2] = -j[0];
        upper[3][1] = j[1];
        upper[1][3] = -j[1];
        AngularMomentumTensor::from_upper(upper)
    }

    pub(crate) fn from_upper(upper: [[f64; 4]; 4]) -> Self {
        let lower = std::array::from_fn(|a| {
            std::array::from_fn(|b| METRIC[a] * METRIC[b] * upper[a][b])
        });
        AngularMomentumTensor { lower }
    }

    pub fn lower(&self) -> &[[f64; 4]; 4] {
        &self.lower
    }

    pub fn upper(&self) -> [[f64; 4]; 4] {
        std::array::from_fn(|a| {
            std::array::from_fn(|b| METRIC[a] * METRIC[b] * self.lower[a][b])
        })
    }

    /// Spatial angular momentum j^c = ½ ε_{abc} j^{ab}.
    pub fn spatial(&self) -> [f64; 3] {
        let u = self.upper();
        [u[2][3], u[3][1], u[1][2]]
    }
}

/// w^μ = ½ ε^{ναβμ} p_ν j_{αβ}.
///
/// With ε^{0123} = +1 a particle at rest, p = (m, 0, 0, 0), gets
/// w = (0, m j) where j is the spatial angular momentum.
pub fn pauli_lubansky_classical(p: &FourVector, j: &AngularMomentumTensor) -> FourVector {
    let p_low = p.lower();
    let jl = j.lower();
    let mut w = [0.0; 4];
    for (mu, w_mu) in w.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (nu, &p_nu) in p_low.iter().enumerate() {
            if nu == mu || p_nu == 0.0 {
                continue;
            }
            for alpha in 0..4 {
                for beta in 0..4 {
                    let eps = levi_civita([nu, alpha, beta, mu]);
                    if eps != 0.0 {
                        acc += eps * p_nu * jl[alpha][beta];
                    }
                }
            }
        }
        *w_mu = 0.5 * acc;
    }
    FourVector(w)
}

/// τ^μ as a slice-friendly helper.
pub fn tau(mu: usize) -> Result<Mat2C> {
    PAULI.get(mu).copied().ok_or(Error::IndexOutOfRange(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ONE;

    const P_STAR: FourVector = FourVector::new(1.25, 0.0, 0.0, 0.75);

    #[test]
    fn minkowski_examples() {
        assert_eq!(minkowski_product(&FourVector::rest(1.0), &FourVector::rest(1.0)), 1.0);
        let x = FourVector::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(minkowski_product(&x, &x), -28.0);
        let w = FourVector::new(0.75, 0.0, 0.0, 1.25);
        assert_eq!(minkowski_product(&P_STAR, &w), 0.0);
    }

    #[test]
    fn tilde_examples() {
        let m = 2.5;
        assert_eq!(tilde(&FourVector::rest(m)), Mat2C::identity().scale_re(m));
        let x = FourVector::new(1.0, 2.0, 3.0, 4.0);
        let t = tilde(&x);
        assert_eq!(
            t,
            Mat2C::new(c(5.0, 0.0), c(2.0, -3.0), c(2.0, 3.0), c(-3.0, 0.0))
        );
        assert_eq!(t.det(), c(-28.0, 0.0));
        assert_eq!(tilde(&P_STAR), Mat2C::diag(c(2.0, 0.0), c(0.5, 0.0)));
    }

    #[test]
    fn under_tilde_examples() {
        assert_eq!(under_tilde(&FourVector::rest(1.0)), Mat2C::identity());
        assert_eq!(under_tilde(&P_STAR), Mat2C::diag(c(0.5, 0.0), c(2.0, 0.0)));
        let x = FourVector::new(0.3, -1.2, 2.2, 0.7);
        let sum = under_tilde(&x) + tilde(&x);
        assert!((sum - Mat2C::identity().scale_re(0.6)).max_abs() < 1e-15);
    }

    #[test]
    fn from_tilde_examples() {
        let m = 3.0;
        let half_tau3 = PAULI[3].scale_re(m / 2.0);
        assert_eq!(
            four_vector_from_tilde(&half_tau3).unwrap(),
            FourVector::new(0.0, 0.0, 0.0, 1.5)
        );
        assert_eq!(
            four_vector_from_tilde(&Mat2C::identity().scale_re(m)).unwrap(),
            FourVector::rest(m)
        );
        let t = Mat2C::new(c(5.0, 0.0), c(2.0, -3.0), c(2.0, 3.0), c(-3.0, 0.0));
        assert_eq!(
            four_vector_from_tilde(&t).unwrap(),
            FourVector::new(1.0, 2.0, 3.0, 4.0)
        );
    }

    #[test]
    fn from_tilde_rejects_non_hermitian() {
        let m = Mat2C::new(ONE, c(0.0, 1.0), c(0.0, 1.0), ONE);
        match four_vector_from_tilde(&m) {
            Err(Error::NonHermitian { asymmetry }) => assert!((asymmetry - 2.0).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1.0);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1.0);
        assert_eq!(levi_civita([1, 2, 3, 0]), -1.0);
        assert_eq!(levi_civita([3, 2, 1, 0]), 1.0);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0.0);
    }

    #[test]
    fn angular_momentum_parts_roundtrip() {
        let j = AngularMomentumTensor::from_parts([0.1, -0.4, 0.7], [1.0, 2.0, 3.0]);
        assert_eq!(j.spatial(), [0.1, -0.4, 0.7]);
        assert!(AngularMomentumTensor::from_lower(*j.lower()).is_ok());
        let mut bad = *j.lower();
        bad[0][1] += 1.0;
        assert!(matches!(
            AngularMomentumTensor::from_lower(bad),
            Err(Error::NotAntisymmetric(0, 1))
        ));
    }

    #[test]
    fn pauli_lubansky_at_rest() {
        let m = 1.7;
        let spin = [0.2, -0.5, 0.3];
        let j = AngularMomentumTensor::from_parts(spin, [0.9, -0.1, 0.4]);
        let w = pauli_lubansky_classical(&FourVector::rest(m), &j);
        let expect = FourVector::new(0.0, m * spin[0], m * spin[1], m * spin[2]);
        assert!((w - expect).max_abs() < 1e-15, "{w:?}");
    }

    #[test]
    fn pauli_lubansky_vanishes_for_zero_tensor() {
        let w = pauli_lubansky_classical(&P_STAR, &AngularMomentumTensor::default());
        assert_eq!(w, FourVector::zero());
    }

    #[test]
    fn tau_index_checked() {
        assert!(tau(3).is_ok());
        assert!(matches!(tau(4), Err(Error::IndexOutOfRange(4))));
    }
}
