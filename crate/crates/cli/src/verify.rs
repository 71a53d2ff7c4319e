//! The identity catalogue run by `verify`.
//!
//! Each check draws seeded random inputs, records the largest residual and
//! compares it with a fixed tolerance. Residuals of quantities that grow with
//! momentum are taken relative to the natural scale of the inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use spinbundle::linalg::{Mat2C, Spinor};
use spinbundle::mass_shell::{build_grid, QuadratureRule};
use spinbundle::observables::{
    expectation_pl, generator_fd, newton_wigner_classical, nw_closed_form, nw_conjugated, nw_from_pl,
    pl_matrix, pl_matrix_commuted, pl_matrix_from_generators, qubit_pl_vector, GeneratorKind,
    DEFAULT_STEP,
};
use spinbundle::reduced::theta_matrix;
use spinbundle::sampling;
use spinbundle::spacetime::{four_vector_from_tilde, minkowski_product, tilde, under_tilde, FourVector};
use spinbundle::spin_group::{
    apply_lorentz, boost_along, covering_map, matrix_sqrt_pos, standard_boost, standard_boost_polar,
    wigner_rotation, BoostChoice,
};
use spinbundle::states::{alpha, equivalence_check, GaussianProfile, Picture, SpinorRule, Wavepacket};

use crate::config::ExperimentConfig;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub tag: &'static str,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub seed: u64,
    pub mass: f64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Check {
    name: &'static str,
    tag: &'static str,
    tolerance: f64,
    run: fn(&mut Ctx) -> Result<(usize, f64), CliError>,
}

struct Ctx {
    rng: ChaCha8Rng,
    m: f64,
    draws: usize,
    states: usize,
    grid_n: usize,
    rule: QuadratureRule,
}

impl Ctx {
    fn momentum(&mut self) -> FourVector {
        sampling::on_shell(&mut self.rng, self.m, 4.0 * self.m)
    }

    fn wavepacket(&mut self) -> Result<Wavepacket, CliError> {
        let m = self.m;
        Ok(sampling::wavepacket(&mut self.rng, m, 0.5 * m, (0.2 * m, 0.5 * m), Picture::Alternative)?)
    }

    /// A packet with a constant spinor, for checks that need fast quadrature
    /// convergence.
    fn smooth_wavepacket(&mut self, sigma: f64) -> Result<Wavepacket, CliError> {
        let m = self.m;
        let center = sampling::unit_vector(&mut self.rng).map(|x| 0.3 * m * x);
        let chi = sampling::unit_spinor(&mut self.rng);
        let profile = GaussianProfile::new(center, sigma * m)?;
        Ok(Wavepacket::normalized(m, profile, SpinorRule::Constant(chi), Picture::Alternative)?)
    }
}

fn max_of(n: usize, mut f: impl FnMut() -> Result<f64, CliError>) -> Result<(usize, f64), CliError> {
    let mut worst = 0.0f64;
    for _ in 0..n {
        let r = f()?;
        // NaN must not be swallowed by max
        worst = if r.is_nan() || worst.is_nan() { f64::NAN } else { worst.max(r) };
    }
    Ok((n, worst))
}

fn dist(a: &Mat2C, b: &Mat2C) -> f64 {
    (*a - *b).max_abs()
}

const CHECKS: &[Check] = &[
    Check {
        name: "covering_map_homomorphism",
        tag: "Eq. 18",
        tolerance: 1e-11,
        run: |c| {
            max_of(c.draws, || {
                let (a, b) = (sampling::sl2c(&mut c.rng, 1.5), sampling::sl2c(&mut c.rng, 1.5));
                let (ka, kb) = (covering_map(&a), covering_map(&b));
                let mut r = (ka * kb).max_abs_diff(&covering_map(&(a * b)));
                r = r.max(ka.metric_defect()).max((ka.det() - 1.0).abs());
                Ok(if ka.is_orthochronous() { r } else { f64::INFINITY })
            })
        },
    },
    Check {
        name: "tilde_clifford_relation",
        tag: "Eq. 13",
        tolerance: 1e-12,
        run: |c| {
            max_of(c.draws, || {
                let (x, y) = (sampling::four_vector(&mut c.rng, 1.0), sampling::four_vector(&mut c.rng, 1.0));
                let two_xy = Mat2C::identity().scale_re(2.0 * minkowski_product(&x, &y));
                let lhs = under_tilde(&x) * tilde(&y) + under_tilde(&y) * tilde(&x);
                let rhs = tilde(&x) * under_tilde(&y) + tilde(&y) * under_tilde(&x);
                let det = (tilde(&x).det().re - minkowski_product(&x, &x)).abs();
                Ok(dist(&lhs, &two_xy).max(dist(&rhs, &two_xy)).max(det))
            })
        },
    },
    Check {
        name: "square_root_squares",
        tag: "Eq. 14",
        tolerance: 1e-12,
        run: |c| {
            max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let (t, u) = (tilde(&p).scale_re(1.0 / m), under_tilde(&p).scale_re(1.0 / m));
                let (rt, ru) = (*standard_boost(&p, m)?.matrix(), matrix_sqrt_pos(&u)?);
                Ok(dist(&(rt * rt), &t).max(dist(&(ru * ru), &u)) / t.max_abs())
            })
        },
    },
    Check {
        name: "square_root_inverse",
        tag: "Eqs. 15-16",
        tolerance: 1e-12,
        run: |c| {
            max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let rt = *standard_boost(&p, m)?.matrix();
                let ru = matrix_sqrt_pos(&under_tilde(&p).scale_re(1.0 / m))?;
                let scale = p.time() / m;
                Ok(dist(&(ru * rt), &Mat2C::identity()).max(dist(&(rt * ru), &Mat2C::identity())) / scale)
            })
        },
    },
    Check {
        name: "standard_boost_polar_form",
        tag: "Eq. 19 = Eq. 23",
        tolerance: 1e-12,
        run: |c| {
            max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let root = *standard_boost(&p, m)?.matrix();
                Ok(dist(standard_boost_polar(&p, m)?.matrix(), &root) / root.max_abs())
            })
        },
    },
    Check {
        name: "bundle_isometry",
        tag: "Eq. 31",
        tolerance: 1e-11,
        run: |c| {
            max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let u = under_tilde(&p).scale_re(1.0 / m);
                let mut r = 0.0f64;
                for choice in [BoostChoice::Standard, BoostChoice::Helicity] {
                    let l = *choice.boost(&p, m)?.matrix();
                    r = r.max(dist(&(l.adjoint() * u * l), &Mat2C::identity()));
                }
                Ok(r / (p.time() / m))
            })
        },
    },
    Check {
        name: "wigner_rotation_in_su2",
        tag: "Eq. 26",
        tolerance: 1e-11,
        run: |c| {
            max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let lambda = sampling::sl2c(&mut c.rng, 1.5);
                let rot = sampling::rotation(&mut c.rng);
                let mut r = 0.0f64;
                for choice in [BoostChoice::Standard, BoostChoice::Helicity] {
                    r = r.max(wigner_rotation(&lambda, &p, m, choice)?.matrix().unitarity_defect());
                }
                r = r.max(dist(wigner_rotation(&rot, &p, m, BoostChoice::Standard)?.matrix(), rot.matrix()));
                let l0 = standard_boost(&p, m)?;
                let at_rest = wigner_rotation(&l0, &FourVector::rest(m), m, BoostChoice::Standard)?;
                Ok(r.max(dist(at_rest.matrix(), &Mat2C::identity())))
            })
        },
    },
    Check {
        name: "qubit_pl_vector",
        tag: "Eq. 46",
        tolerance: 1e-13,
        run: |_| {
            let k = FourVector::rest(1.0);
            let at_rest = qubit_pl_vector(&k, &Spinor::up(), 1.0)?;
            let mut r = (at_rest - FourVector::new(0.0, 0.0, 0.0, 0.5)).max_abs();
            let p_star = FourVector::new(1.25, 0.0, 0.0, 0.75);
            let chi = standard_boost(&p_star, 1.0)?.matrix().apply(&Spinor::up());
            let w = qubit_pl_vector(&p_star, &chi, 1.0)?;
            r = r.max((w - FourVector::new(0.375, 0.0, 0.0, 0.625)).max_abs());
            Ok((2, r))
        },
    },
    Check {
        name: "qubit_pl_vector_orthogonality",
        tag: "Eq. 46",
        tolerance: 1e-10,
        run: |c| {
            max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let chi = standard_boost(&p, m)?.matrix().apply(&sampling::unit_spinor(&mut c.rng));
                let w = qubit_pl_vector(&p, &chi, m)?;
                let scale = p.time() * w.max_abs();
                Ok(minkowski_product(&p, &w).abs() / scale.max(1.0))
            })
        },
    },
    Check {
        name: "newton_wigner_classical",
        tag: "Eq. 38",
        tolerance: 1e-13,
        run: |c| {
            let p_star = FourVector::new(1.25, 0.0, 0.0, 0.75);
            let w = FourVector::new(0.75, 0.0, 0.0, 1.25);
            let s = newton_wigner_classical(&p_star, &w, 1.0)?;
            let back = apply_lorentz(&standard_boost(&p_star, 1.0)?.inverse(), &w);
            let mut r = (0..3).map(|j| (s[j] - [0.0, 0.0, 1.0][j]).abs()).fold(0.0, f64::max);
            r = r.max((back - FourVector::new(0.0, 0.0, 0.0, 1.0)).max_abs());
            let (n, worst) = max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let l = standard_boost(&p, m)?;
                let spin = sampling::unit_vector(&mut c.rng);
                let w = apply_lorentz(&l, &FourVector::from_parts(0.0, spin.map(|x| m * x)));
                let s = newton_wigner_classical(&p, &w, m)?;
                Ok((0..3).map(|j| (s[j] - spin[j]).abs()).fold(0.0, f64::max) / (p.time() / m))
            })?;
            Ok((n + 1, r.max(worst)))
        },
    },
    Check {
        name: "newton_wigner_operator_forms",
        tag: "Eq. A.8 = Eq. A.9 = Eq. 58",
        tolerance: 1e-11,
        run: |c| {
            max_of(c.draws, || {
                let (p, m) = (c.momentum(), c.m);
                let mut r = 0.0f64;
                for j in 1..4 {
                    let a = nw_closed_form(&p, m, j);
                    r = r.max(dist(&a, &nw_conjugated(&p, m, j))).max(dist(&a, &nw_from_pl(&p, m, j)));
                }
                Ok(r / (p.time() / m))
            })
        },
    },
    Check {
        name: "pauli_lubansky_operator_forms",
        tag: "Eq. A.11 = Eqs. A.6-A.7",
        tolerance: 1e-11,
        run: |c| {
            max_of(c.draws, || {
                let p = c.momentum();
                let mut r = 0.0f64;
                for mu in 0..4 {
                    let w = pl_matrix(&p, mu);
                    r = r.max(dist(&w, &pl_matrix_commuted(&p, mu))).max(dist(&w, &pl_matrix_from_generators(&p, mu)));
                }
                Ok(r / p.time())
            })
        },
    },
    Check {
        name: "generator_pl_time_component",
        tag: "Eq. A.6",
        tolerance: 1e-7,
        run: |c| {
            let n = c.states.min(5);
            let mut draws = 0;
            let (_, worst) = max_of(n, || {
                let phi = c.wavepacket()?;
                let mut r = 0.0f64;
                for axis in 0..3 {
                    let mut v = [0.0; 3];
                    v[axis] = c.rng.random_range(-c.m..c.m);
                    let p = spinbundle::mass_shell::lift(v, c.m)?;
                    let mut pj = Spinor::zero();
                    for j in 1..4 {
                        pj = pj + generator_fd(&phi, GeneratorKind::J(j), &p, DEFAULT_STEP)?.scale_re(p[j]);
                    }
                    let direct = pl_matrix(&p, 0).apply(&phi.evaluate(&p)?);
                    r = r.max((pj - direct).max_abs() / phi.amplitude());
                    draws += 1;
                }
                Ok(r)
            })?;
            Ok((draws, worst))
        },
    },
    Check {
        name: "representation_equivalence",
        tag: "Eq. 54",
        tolerance: 1e-10,
        run: |c| {
            let grid = build_grid(c.m, 2.0 * c.m, 8, c.rule)?;
            max_of(c.states, || {
                let phi = c.wavepacket()?;
                let lambda = sampling::sl2c(&mut c.rng, 1.0);
                let a = sampling::four_vector(&mut c.rng, 2.0 / c.m);
                let covering = phi.covering_grid(16, c.rule)?;
                let norms = (alpha(&phi)?.norm_sqr(&covering) - phi.norm_sqr(&covering)).abs();
                Ok(equivalence_check(&phi, &lambda, &a, &grid)?.max(norms))
            })
        },
    },
    Check {
        name: "measure_invariance",
        tag: "Eq. 10",
        tolerance: 1e-6,
        run: |c| {
            let n = c.grid_n;
            let rule = c.rule;
            max_of(c.states.min(5), || {
                let phi = c.smooth_wavepacket(0.3)?;
                let axis = sampling::unit_vector(&mut c.rng);
                let u = c.rng.random_range(0.0..=1.0);
                let moved = phi.transformed(&boost_along(axis, u)?, &FourVector::zero());
                let before = phi.norm_sqr(&phi.covering_grid(n, rule)?);
                let after = moved.norm_sqr(&moved.covering_grid(n, rule)?);
                Ok((after - before).abs() / before)
            })
        },
    },
    Check {
        name: "theta_matches_pl_expectation",
        tag: "Eq. 71 = Eq. 61",
        tolerance: 1e-9,
        run: |c| {
            let rule = c.rule;
            max_of(c.states.min(10), || {
                let phi = c.wavepacket()?;
                let g = phi.covering_grid(16, rule)?;
                let theta = four_vector_from_tilde(&theta_matrix(&phi, &g)?)?;
                Ok((theta - expectation_pl(&phi, &g)?).max_abs())
            })
        },
    },
];

/// Runs the catalogue with the configured seed and sample counts.
pub fn run_verify(config: &ExperimentConfig) -> Result<VerifyReport, CliError> {
    let mut ctx = Ctx {
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        m: config.mass,
        draws: config.verify.random_samples,
        states: config.verify.state_samples,
        grid_n: config.grid.n_per_axis,
        rule: config.grid.rule,
    };
    let mut checks = Vec::with_capacity(CHECKS.len());
    for check in CHECKS {
        let (samples, max_residual) = (check.run)(&mut ctx)?;
        let tolerance = config.verify.tolerance_override.unwrap_or(check.tolerance);
        checks.push(CheckResult {
            name: check.name,
            tag: check.tag,
            samples,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
        });
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        command: "verify",
        seed: config.seed,
        mass: config.mass,
        checks,
        passed,
    })
}
