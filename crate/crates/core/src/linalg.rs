//! 2×2 complex matrices and two-component spinors.
//!
//! Everything in the crate lives in C² or in the 2×2 complex matrices acting
//! on it, so these are small `Copy` value types with hand-written arithmetic
//! instead of a general dense-matrix backend.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Mat2C(pub [[Complex64; 2]; 2]);

impl Mat2C {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2C([[a, b], [c, d]])
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2C::new(a.into(), b.into(), c.into(), d.into())
    }

    pub const fn zero() -> Self {
        Mat2C([[ZERO, ZERO], [ZERO, ZERO]])
    }

    pub const fn identity() -> Self {
        Mat2C([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Mat2C::new(a, ZERO, ZERO, d)
    }

    /// Pauli matrices with τ⁰ = I; `mu` must be in `0..4`.
    pub fn pauli(mu: usize) -> Self {
        PAULI[mu]
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2C::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat2C::new(m[0][0], m[1][0], m[0][1], m[1][1])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let m = &self.0;
        Mat2C::new(m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(s.into())
    }

    /// Inverse via the adjugate; `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 || !det.is_finite() {
            return None;
        }
        let m = &self.0;
        Some(Mat2C::new(m[1][1], -m[0][1], -m[1][0], m[0][0]).scale(det.inv()))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// max |M − M†| entrywise.
    pub fn hermitian_asymmetry(&self) -> f64 {
        (*self - self.adjoint()).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_asymmetry() <= tol
    }

    /// max |M†M − I| entrywise.
    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self - Mat2C::identity()).max_abs()
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> [f64; 2] {
        let h = (*self + self.adjoint()).scale_re(0.5);
        let a = h.0[0][0].re;
        let d = h.0[1][1].re;
        let b = h.0[0][1];
        let mean = 0.5 * (a + d);
        let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
        [mean - half_gap, mean + half_gap]
    }

    /// Coefficients (x⁰, x¹, x², x³) with M = Σ x^μ τ^μ; complex in general.
    pub fn pauli_coefficients(&self) -> [Complex64; 4] {
        let mut out = [ZERO; 4];
        for (mu, slot) in out.iter_mut().enumerate() {
            *slot = (*self * PAULI[mu]).trace() * 0.5;
        }
        out
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let m = &self.0;
        Spinor([
            m[0][0] * v.0[0] + m[0][1] * v.0[1],
            m[1][0] * v.0[0] + m[1][1] * v.0[1],
        ])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }
}

pub const PAULI: [Mat2C; 4] = [
    Mat2C([[ONE, ZERO], [ZERO, ONE]]),
    Mat2C([[ZERO, ONE], [ONE, ZERO]]),
    Mat2C([[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]]),
    Mat2C([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]]),
];

impl fmt::Debug for Mat2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

impl Index<(usize, usize)> for Mat2C {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat2C {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.0[r][c]
    }
}

impl Add for Mat2C {
    type Output = Mat2C;
    fn add(self, o: Mat2C) -> Mat2C {
        let (a, b) = (&self.0, &o.0);
        Mat2C::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl AddAssign for Mat2C {
    fn add_assign(&mut self, o: Mat2C) {
        *self = *self + o;
    }
}

impl Sub for Mat2C {
    type Output = Mat2C;
    fn sub(self, o: Mat2C) -> Mat2C {
        self + (-o)
    }
}

impl Neg for Mat2C {
    type Output = Mat2C;
    fn neg(self) -> Mat2C {
        self.scale(-ONE)
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, o: Mat2C) -> Mat2C {
        let (a, b) = (&self.0, &o.0);
        Mat2C::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Mul<Complex64> for Mat2C {
    type Output = Mat2C;
    fn mul(self, s: Complex64) -> Mat2C {
        self.scale(s)
    }
}

impl Mul<f64> for Mat2C {
    type Output = Mat2C;
    fn mul(self, s: f64) -> Mat2C {
        self.scale_re(s)
    }
}

impl Mul<Spinor> for Mat2C {
    type Output = Spinor;
    fn mul(self, v: Spinor) -> Spinor {
        self.apply(&v)
    }
}

/// An element of the fiber C².
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Spinor(pub [Complex64; 2]);

impl Spinor {
    pub const fn new(a: Complex64, b: Complex64) -> Self {
        Spinor([a, b])
    }

    /// |+⟩ = (1, 0)ᵀ
    pub const fn up() -> Self {
        Spinor([ONE, ZERO])
    }

    /// |−⟩ = (0, 1)ᵀ
    pub const fn down() -> Self {
        Spinor([ZERO, ONE])
    }

    pub const fn zero() -> Self {
        Spinor([ZERO, ZERO])
    }

    /// v†w
    pub fn inner(&self, w: &Spinor) -> Complex64 {
        self.0[0].conj() * w.0[0] + self.0[1].conj() * w.0[1]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(&self) -> Option<Spinor> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self.scale_re(1.0 / n))
    }

    pub fn scale(&self, s: Complex64) -> Spinor {
        Spinor([self.0[0] * s, self.0[1] * s])
    }

    pub fn scale_re(&self, s: f64) -> Spinor {
        self.scale(s.into())
    }

    /// v w†
    pub fn outer(&self, w: &Spinor) -> Mat2C {
        let (v, w) = (&self.0, &w.0);
        Mat2C::new(
            v[0] * w[0].conj(),
            v[0] * w[1].conj(),
            v[1] * w[0].conj(),
            v[1] * w[1].conj(),
        )
    }

    /// v†Mw
    pub fn sandwich(&self, m: &Mat2C, w: &Spinor) -> Complex64 {
        self.inner(&m.apply(w))
    }

    pub fn max_abs(&self) -> f64 {
        self.0[0].norm().max(self.0[1].norm())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.is_finite())
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0[0], self.0[1])
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, o: Spinor) -> Spinor {
        Spinor([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, o: Spinor) -> Spinor {
        Spinor([self.0[0] - o.0[0], self.0[1] - o.0[1]])
    }
}

impl Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor([-self.0[0], -self.0[1]])
    }
}

impl Mul<Complex64> for Spinor {
    type Output = Spinor;
    fn mul(self, s: Complex64) -> Spinor {
        self.scale(s)
    }
}

impl Mul<f64> for Spinor {
    type Output = Spinor;
    fn mul(self, s: f64) -> Spinor {
        self.scale_re(s)
    }
}

// Complex numbers go over the wire as [re, im]; matrices as four of those,
// row-major.

/// serde `with` helper for a single complex number as `[re, im]`.
pub mod complex_pair {
    use super::*;

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

impl Serialize for Mat2C {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let flat: Vec<[f64; 2]> = self.0.iter().flatten().map(|z| [z.re, z.im]).collect();
        flat.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat2C {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let flat = Vec::<[f64; 2]>::deserialize(d)?;
        if flat.len() != 4 {
            return Err(D::Error::invalid_length(flat.len(), &"4 [re, im] pairs"));
        }
        let z = |i: usize| Complex64::new(flat[i][0], flat[i][1]);
        Ok(Mat2C::new(z(0), z(1), z(2), z(3)))
    }
}

impl Serialize for Spinor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [[self.0[0].re, self.0[0].im], [self.0[1].re, self.0[1].im]].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spinor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[[f64; 2]; 2]>::deserialize(d)?;
        Ok(Spinor::new(c(a[0], a[1]), c(b[0], b[1])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        // τ^j τ^k = δ_jk I + i ε_jkl τ^l
        let t = PAULI;
        assert_eq!(t[1] * t[1], Mat2C::identity());
        assert_eq!(t[1] * t[2], t[3].scale(I));
        assert_eq!(t[2] * t[3], t[1].scale(I));
        assert_eq!(t[3] * t[1], t[2].scale(I));
        for m in &t {
            assert!(m.is_hermitian(0.0));
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = Mat2C::new(c(1.0, 2.0), c(0.5, -1.0), c(3.0, 0.0), c(-1.0, 1.0));
        let inv = m.inverse().unwrap();
        assert!((m * inv - Mat2C::identity()).max_abs() < 1e-14);
        assert!(Mat2C::from_real(1.0, 2.0, 2.0, 4.0).inverse().is_none());
    }

    #[test]
    fn hermitian_eigenvalues_match_trace_and_det() {
        let m = Mat2C::new(c(2.0, 0.0), c(1.0, -1.0), c(1.0, 1.0), c(-0.5, 0.0));
        let [lo, hi] = m.hermitian_eigenvalues();
        assert!((lo + hi - 1.5).abs() < 1e-14);
        assert!((lo * hi - m.det().re).abs() < 1e-14);
        assert!(lo <= hi);
    }

    #[test]
    fn pauli_coefficients_reconstruct() {
        let m = Mat2C::new(c(5.0, 0.0), c(2.0, -3.0), c(2.0, 3.0), c(-3.0, 0.0));
        let x = m.pauli_coefficients();
        let back = (0..4).fold(Mat2C::zero(), |acc, mu| acc + PAULI[mu].scale(x[mu]));
        assert!((back - m).max_abs() < 1e-15);
        assert_eq!(x.map(|z| z.re), [1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn serde_shapes() {
        let m = Mat2C::new(c(1.0, 0.5), ZERO, c(0.0, -1.0), ONE);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[1.0,0.5],[0.0,0.0],[0.0,-1.0],[1.0,0.0]]");
        let back: Mat2C = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Mat2C>("[[1.0,0.0]]").is_err());
    }
}
