mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{constant, grid_for, grids, state, N};
use spinbundle::linalg::Spinor;
use spinbundle::mass_shell::{build_grid, lift, MomentumGrid, QuadratureRule};
use spinbundle::sampling;
use spinbundle::spacetime::{minkowski_product, FourVector};
use spinbundle::spin_group::{
    apply_lorentz, boost_along, rotation_about, standard_boost, wigner_rotation, BoostChoice, SL2C,
};
use spinbundle::states::{
    alpha, alpha_inv, equivalence_check, inner_product, metric_h, BundlePoint, GaussianProfile,
    Picture, SpinorRule, Wavepacket,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn relift(p: &FourVector, m: f64) -> FourVector {
    lift(p.spatial(), m).unwrap()
}

/// Radial integral ∫₀^∞ p² e^{−p²/(2σ²)} g(p) dp by composite Simpson on [0, 14σ].
fn radial_simpson(sigma: f64, g: impl Fn(f64) -> f64) -> f64 {
    let n = 20_000;
    let b = 14.0 * sigma;
    let h = b / n as f64;
    let f = |p: f64| p * p * (-p * p / (2.0 * sigma * sigma)).exp() * g(p);
    let mut s = f(0.0) + f(b);
    for i in 1..n {
        s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

// ∫|f|² dμ for a centred Gaussian: (4π/(2π)³) ∫ p² e^{−p²/2σ²} w(p) dp,
// with w = 1/p⁰ in the standard picture and w = 1/m in the alternative one
// (the angular average of p̰ is p⁰ I).
const AMPLITUDE_STANDARD: f64 = 25.515333905679133;
const AMPLITUDE_ALTERNATIVE: f64 = 24.151995505104918;

#[test]
fn normalization_oracle_matches_frozen_constants() {
    let (m, sigma) = (1.0f64, 0.3);
    let k = 4.0 * std::f64::consts::PI / (2.0 * std::f64::consts::PI).powi(3);
    let standard = k * radial_simpson(sigma, |p| 1.0 / (m * m + p * p).sqrt());
    let alternative = k * radial_simpson(sigma, |_| 1.0 / m);
    assert!((standard.sqrt().recip() / AMPLITUDE_STANDARD - 1.0).abs() < 1e-12);
    assert!((alternative.sqrt().recip() / AMPLITUDE_ALTERNATIVE - 1.0).abs() < 1e-12);
}

#[test]
fn normalized_gaussians_reproduce_the_oracle() {
    let g = build_grid(1.0, 2.1, N, QuadratureRule::GaussLegendre).unwrap();
    let profile = GaussianProfile::new([0.0; 3], 0.3).unwrap();
    let chi = Spinor::new(c(0.6, 0.0), c(0.0, 0.8));
    for (picture, expected) in [
        (Picture::Standard, AMPLITUDE_STANDARD),
        (Picture::Alternative, AMPLITUDE_ALTERNATIVE),
    ] {
        let w = Wavepacket::new(1.0, profile, SpinorRule::Constant(chi), picture, &g).unwrap();
        assert!((w.amplitude() / expected - 1.0).abs() < 1e-9, "{picture:?} {}", w.amplitude());
        assert!((inner_product(&w, &w, &g).unwrap() - c(1.0, 0.0)).norm() < 1e-13);
    }
}

#[test]
fn transforms_preserve_the_norm() {
    let phi = state([0.2, -0.1, 0.1], 0.3, constant(Spinor::new(c(1.0, 0.0), c(0.3, 0.4))), Picture::Alternative);
    let lambda = boost_along([0.0, 0.0, 1.0], 0.5).unwrap();
    let a = FourVector::new(0.3, 0.1, 0.0, -0.2);
    let (ga, gb) = grids(&phi, &lambda, &a, N);
    let before = phi.norm_sqr(&ga);
    let after = phi.transformed(&lambda, &a).norm_sqr(&gb);
    assert!((before - after).abs() < 1e-6, "{before} {after}");
    assert!((before - 1.0).abs() < 1e-6);

    let psi = alpha(&phi).unwrap();
    let after = psi.transformed(&lambda, &a).norm_sqr(&gb);
    assert!((before - after).abs() < 1e-6, "{before} {after}");
}

#[test]
fn identity_transform_leaves_evaluations_unchanged() {
    let phi = state([0.2, 0.0, 0.1], 0.3, SpinorRule::Helicity, Picture::Alternative);
    let same = phi.transformed(&SL2C::identity(), &FourVector::zero());
    let g = grid_for(&phi, 12);
    for p in g.nodes() {
        assert_eq!(phi.evaluate(p).unwrap(), same.evaluate(p).unwrap());
    }
}

#[test]
fn translations_change_only_phases() {
    for picture in [Picture::Standard, Picture::Alternative] {
        let w = state([0.1, 0.2, -0.3], 0.4, SpinorRule::Helicity, picture);
        let moved = w.transformed(&SL2C::identity(), &FourVector::new(0.7, -1.3, 0.4, 2.0));
        let g = grid_for(&w, 12);
        for p in g.nodes() {
            let (u, v) = (w.evaluate(p).unwrap(), moved.evaluate(p).unwrap());
            assert!((u.norm() - v.norm()).abs() <= 1e-14 * u.norm().max(1e-300));
            for i in 0..2 {
                assert!((u.0[i].norm() - v.0[i].norm()).abs() <= 1e-13 * u.norm().max(1e-300));
            }
        }
    }
}

#[test]
fn alpha_preserves_norms_and_inverts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let phi = sampling::wavepacket(&mut rng, 1.0, 0.5, (0.2, 0.5), Picture::Alternative).unwrap();
        let g = grid_for(&phi, 24);
        let psi = alpha(&phi).unwrap();
        assert!((psi.norm_sqr(&g) - phi.norm_sqr(&g)).abs() <= 1e-10);
        let back = alpha_inv(&psi).unwrap();
        for p in g.nodes().iter().step_by(97) {
            let (u, v) = (back.evaluate(p).unwrap(), phi.evaluate(p).unwrap());
            assert!((u - v).max_abs() <= 1e-13 * v.max_abs().max(1.0));
        }
    }
}

#[test]
fn equivalence_holds_for_random_rotations_and_boosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let phi = sampling::wavepacket(&mut rng, 1.0, 0.4, (0.2, 0.4), Picture::Alternative).unwrap();
    let g = build_grid(1.0, 2.0, 16, QuadratureRule::GaussLegendre).unwrap();
    assert_eq!(equivalence_check(&phi, &SL2C::identity(), &FourVector::zero(), &g).unwrap(), 0.0);
    for _ in 0..5 {
        let a = sampling::four_vector(&mut rng, 2.0);
        let r = equivalence_check(&phi, &sampling::rotation(&mut rng), &a, &g).unwrap();
        assert!(r <= 1e-10, "rotation residual {r}");
        let r = equivalence_check(&phi, &sampling::boost(&mut rng, 1.0), &a, &g).unwrap();
        assert!(r <= 1e-10, "boost residual {r}");
    }
    let psi = alpha(&phi).unwrap();
    assert!(equivalence_check(&psi, &SL2C::identity(), &FourVector::zero(), &g).is_err());
}

/// `[U(Λ₂,a₂) χ](p)` computed directly from the transformation laws, with the
/// Wigner factor taken from `wigner_rotation`.
fn apply_law(chi: &Wavepacket, lambda: &SL2C, a: &FourVector, p: &FourVector) -> Spinor {
    let m = chi.mass();
    let q = relift(&apply_lorentz(&lambda.inverse(), p), m);
    let inner = chi.evaluate(&q).unwrap();
    let phase = Complex64::from_polar(1.0, -minkowski_product(p, a));
    let factor = match chi.picture() {
        Picture::Alternative => *lambda.matrix(),
        Picture::Standard => *wigner_rotation(lambda, &q, m, BoostChoice::Standard).unwrap().matrix(),
    };
    factor.apply(&inner).scale(phase)
}

#[test]
fn representation_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for picture in [Picture::Standard, Picture::Alternative] {
        let w = sampling::wavepacket(&mut rng, 1.0, 0.4, (0.2, 0.5), picture).unwrap();
        for _ in 0..4 {
            let (l1, l2) = (sampling::sl2c(&mut rng, 1.0), sampling::sl2c(&mut rng, 1.0));
            let (a1, a2) = (sampling::four_vector(&mut rng, 1.0), sampling::four_vector(&mut rng, 1.0));
            let first = w.transformed(&l1, &a1);
            let product = w.transformed(&(l2 * l1), &(a2 + apply_lorentz(&l2, &a1)));
            let g = grid_for(&product, 8);
            for p in g.nodes() {
                let stepwise = apply_law(&first, &l2, &a2, p);
                let direct = product.evaluate(p).unwrap();
                assert!(
                    (stepwise - direct).max_abs() <= 1e-11 * w.amplitude(),
                    "{picture:?} {:e}",
                    (stepwise - direct).max_abs()
                );
            }
        }
    }
}

#[test]
fn alpha_equals_the_view_from_the_deboosted_observer() {
    let phi = state([0.3, -0.2, 0.4], 0.4, constant(Spinor::new(c(0.2, 0.5), c(-0.7, 0.1))), Picture::Alternative)
        .transformed(&boost_along([1.0, 0.0, 1.0], 0.6).unwrap(), &FourVector::new(0.2, 0.0, 0.3, 0.0));
    let psi = alpha(&phi).unwrap();
    let k = FourVector::rest(1.0);
    let g = grid_for(&phi, 8);
    for p in g.nodes() {
        let observer = standard_boost(p, 1.0).unwrap().inverse();
        let seen = phi.transformed(&observer, &FourVector::zero()).evaluate(&k).unwrap();
        let direct = psi.evaluate(p).unwrap();
        assert!((seen - direct).max_abs() <= 1e-12 * phi.amplitude(), "{:e}", (seen - direct).max_abs());
    }
}

#[test]
fn rejects_mismatched_states() {
    let a = state([0.0; 3], 0.3, SpinorRule::Helicity, Picture::Alternative);
    let b = Wavepacket::normalized(2.0, GaussianProfile::new([0.0; 3], 0.3).unwrap(), SpinorRule::Helicity, Picture::Alternative)
        .unwrap();
    let g = grid_for(&a, 8);
    assert!(inner_product(&a, &b, &g).is_err());
    let too_small: MomentumGrid = build_grid(1.0, 0.3, 8, QuadratureRule::GaussLegendre).unwrap();
    assert!(a.check_coverage(&too_small).is_err());
    assert!(a.check_coverage(&g).is_ok());
}

fn on_shell() -> impl Strategy<Value = FourVector> {
    proptest::array::uniform3(-1.5..1.5f64).prop_map(|v| lift(v, 1.0).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn inner_product_is_conjugate_symmetric(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for picture in [Picture::Standard, Picture::Alternative] {
            let phi = sampling::wavepacket(&mut rng, 1.0, 0.3, (0.25, 0.4), picture).unwrap();
            let chi = sampling::wavepacket(&mut rng, 1.0, 0.3, (0.25, 0.4), picture).unwrap();
            let g = build_grid(1.0, 3.3, 20, QuadratureRule::GaussLegendre).unwrap();
            let ab = inner_product(&phi, &chi, &g).unwrap();
            let ba = inner_product(&chi, &phi, &g).unwrap();
            prop_assert!((ab - ba.conj()).norm() <= 1e-13);
            prop_assert!(inner_product(&phi, &phi, &g).unwrap().re > 0.0);
        }
    }

    #[test]
    fn alternative_law_is_pointwise_unitary(seed in any::<u64>(), p in on_shell()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = sampling::wavepacket(&mut rng, 1.0, 0.3, (0.3, 0.6), Picture::Alternative).unwrap();
        let chi = sampling::wavepacket(&mut rng, 1.0, 0.3, (0.3, 0.6), Picture::Alternative).unwrap();
        let lambda = sampling::sl2c(&mut rng, 1.0);
        let a = sampling::four_vector(&mut rng, 1.0);
        let lp = relift(&apply_lorentz(&lambda, &p), 1.0);
        let at = |w: &Wavepacket, q: &FourVector| BundlePoint::new(*q, w.evaluate(q).unwrap(), 1.0, Picture::Alternative).unwrap();
        let before = metric_h(&at(&phi, &p), &at(&chi, &p)).unwrap();
        let (u, v) = (phi.transformed(&lambda, &a), chi.transformed(&lambda, &a));
        let after = metric_h(&at(&u, &lp), &at(&v, &lp)).unwrap();
        let scale = phi.amplitude() * chi.amplitude();
        prop_assert!((before - after).norm() <= 1e-12 * scale, "{:e}", (before - after).norm() / scale);
    }

    #[test]
    fn rotations_commute_with_alpha(seed in any::<u64>(), axis in proptest::array::uniform3(-1.0..1.0f64), angle in 0.0..6.0f64) {
        prop_assume!(axis.iter().map(|x| x * x).sum::<f64>() > 1e-3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = sampling::wavepacket(&mut rng, 1.0, 0.3, (0.3, 0.5), Picture::Alternative).unwrap();
        let g = build_grid(1.0, 1.5, 6, QuadratureRule::Trapezoid).unwrap();
        let r = equivalence_check(&phi, &rotation_about(axis, angle).unwrap(), &FourVector::zero(), &g).unwrap();
        prop_assert!(r <= 1e-10 * phi.amplitude());
    }
}
