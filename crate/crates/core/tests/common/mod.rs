#![allow(dead_code)]

use spinbundle::linalg::Spinor;
use spinbundle::mass_shell::{MomentumGrid, QuadratureRule};
use spinbundle::spacetime::FourVector;
use spinbundle::spin_group::SL2C;
use spinbundle::states::{GaussianProfile, Picture, SpinorRule, Wavepacket};

pub const N: usize = 32;

pub fn state(center: [f64; 3], sigma: f64, rule: SpinorRule, picture: Picture) -> Wavepacket {
    let profile = GaussianProfile::new(center, sigma).unwrap();
    Wavepacket::normalized(1.0, profile, rule, picture).unwrap()
}

pub fn constant(chi: Spinor) -> SpinorRule {
    SpinorRule::constant(chi.normalized().unwrap()).unwrap()
}

pub fn grid_for(w: &Wavepacket, n: usize) -> MomentumGrid {
    w.covering_grid(n, QuadratureRule::GaussLegendre).unwrap()
}

/// Covering grids for a state and its image under (Λ, a).
pub fn grids(w: &Wavepacket, lambda: &SL2C, a: &FourVector, n: usize) -> (MomentumGrid, MomentumGrid) {
    (grid_for(w, n), grid_for(&w.transformed(lambda, a), n))
}
