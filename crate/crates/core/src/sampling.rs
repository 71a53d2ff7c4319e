//! Seeded random draws of group elements, momenta, spinors and states.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::error::Result;
use crate::linalg::Spinor;
use crate::mass_shell::lift_unchecked;
use crate::spacetime::FourVector;
use crate::spin_group::{boost_along, rotation_about, SL2C};
use crate::states::{GaussianProfile, Picture, SpinorRule, Wavepacket};

/// Uniform direction on the unit sphere.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// Haar-random element of SU(2).
pub fn rotation<R: Rng + ?Sized>(rng: &mut R) -> SL2C {
    let axis = unit_vector(rng);
    // density ∝ sin²(θ/2) on [0, 2π]
    let angle = loop {
        let t: f64 = rng.random_range(0.0..2.0 * PI);
        if rng.random::<f64>() <= (0.5 * t).sin().powi(2) {
            break t;
        }
    };
    rotation_about(axis, angle).expect("unit axis")
}

/// Pure boost with rapidity uniform in [0, max_rapidity] along a random axis.
pub fn boost<R: Rng + ?Sized>(rng: &mut R, max_rapidity: f64) -> SL2C {
    let axis = unit_vector(rng);
    let u = rng.random_range(0.0..=max_rapidity);
    boost_along(axis, u).expect("unit axis")
}

/// R₁ B R₂ with Haar rotations and a boost of rapidity at most `max_rapidity`.
pub fn sl2c<R: Rng + ?Sized>(rng: &mut R, max_rapidity: f64) -> SL2C {
    rotation(rng) * boost(rng, max_rapidity) * rotation(rng)
}

/// On-shell momentum with each spatial component uniform in [−p_max, p_max].
pub fn on_shell<R: Rng + ?Sized>(rng: &mut R, m: f64, p_max: f64) -> FourVector {
    let v = [0; 3].map(|_| rng.random_range(-p_max..=p_max));
    lift_unchecked(v, m)
}

/// Four-vector with components uniform in [−scale, scale].
pub fn four_vector<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> FourVector {
    FourVector([0; 4].map(|_| rng.random_range(-scale..=scale)))
}

/// Spinor with components uniform in the unit square of C.
pub fn spinor<R: Rng + ?Sized>(rng: &mut R) -> Spinor {
    let mut z = || Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
    Spinor([z(), z()])
}

/// Unit spinor, uniform on the Bloch sphere up to phase.
pub fn unit_spinor<R: Rng + ?Sized>(rng: &mut R) -> Spinor {
    let n = unit_vector(rng);
    let theta = n[2].clamp(-1.0, 1.0).acos();
    let phi = n[1].atan2(n[0]);
    let phase: f64 = rng.random_range(0.0..2.0 * PI);
    Spinor([
        Complex64::from_polar((0.5 * theta).cos(), phase),
        Complex64::from_polar((0.5 * theta).sin(), phase + phi),
    ])
}

/// Normalized Gaussian with center in [−c, c]³, width in [w₀, w₁], and a
/// random constant spinor or the helicity rule.
pub fn wavepacket<R: Rng + ?Sized>(
    rng: &mut R,
    m: f64,
    center_max: f64,
    width: (f64, f64),
    picture: Picture,
) -> Result<Wavepacket> {
    let center = [0; 3].map(|_| rng.random_range(-center_max..=center_max));
    let sigma = rng.random_range(width.0..=width.1);
    let rule = if rng.random_bool(0.25) {
        SpinorRule::Helicity
    } else {
        SpinorRule::Constant(unit_spinor(rng))
    };
    Wavepacket::normalized(m, GaussianProfile::new(center, sigma)?, rule, picture)
}
