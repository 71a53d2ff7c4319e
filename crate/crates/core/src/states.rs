//! Single-particle wavepackets as sections of X × C².
//!
//! A [`Wavepacket`] is an analytic descriptor (Gaussian profile, spinor rule,
//! amplitude) plus an accumulated Poincaré element. Evaluation at `p` always
//! goes back to the closed-form profile at `Λ⁻¹p`, so transformed states never
//! need interpolation.
//!
//! In the alternative picture, `[U′(Λ,a)φ](p) = e^{−i⟨p,a⟩} Λ φ(Λ⁻¹p)` and the
//! inner product carries the weight `p̰/m`. In the standard picture the law
//! has the Wigner factor `W(Λ, Λ⁻¹p)` for standard boosts and the metric is
//! flat.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::Spinor;
use crate::mass_shell::{
    check_on_shell, lift_unchecked, GridSpec, MassShell, MomentumGrid, QuadratureRule, DEFAULT_POINTS,
};
use crate::spacetime::{minkowski_product, under_tilde, FourVector};
use crate::spin_group::{
    apply_lorentz, rotation_toward, sqrt_tilde_over_m, sqrt_under_tilde_over_m, BoostChoice,
    SL2C,
};

/// Norm tolerance for unit spinors in descriptors.
const UNIT_TOL: f64 = 1e-10;

/// Default half-width of covering boxes, in units of the profile width.
pub const COVERING_SIGMAS: f64 = 7.0;

/// Density on the grid faces, relative to the peak, above which a grid is
/// considered too small for a state.
pub const COVERAGE_THRESHOLD: f64 = 1e-6;

/// Which bundle the state's values live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Picture {
    /// Flat metric, Wigner factor in the transformation law.
    Standard,
    /// Metric `p̰/m`, no Wigner factor.
    Alternative,
}

/// A spinor over an on-shell momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BundlePoint {
    p: FourVector,
    v: Spinor,
    m: f64,
    picture: Picture,
}

impl BundlePoint {
    pub fn new(p: FourVector, v: Spinor, m: f64, picture: Picture) -> Result<Self> {
        check_on_shell(&p, m)?;
        Ok(BundlePoint { p, v, m, picture })
    }

    pub fn momentum(&self) -> &FourVector {
        &self.p
    }

    pub fn spinor(&self) -> &Spinor {
        &self.v
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn picture(&self) -> Picture {
        self.picture
    }

    fn check_pair(a: &Self, b: &Self, picture: Picture) -> Result<()> {
        for x in [a, b] {
            if x.picture != picture {
                return Err(Error::PictureMismatch {
                    expected: picture,
                    found: x.picture,
                });
            }
        }
        if a.m != b.m {
            return Err(Error::MassMismatch(a.m, b.m));
        }
        if a.p != b.p {
            return Err(Error::BasePointMismatch);
        }
        Ok(())
    }
}

/// g(a, b) = v†w on the standard bundle.
pub fn metric_g(a: &BundlePoint, b: &BundlePoint) -> Result<Complex64> {
    BundlePoint::check_pair(a, b, Picture::Standard)?;
    Ok(a.v.inner(&b.v))
}

/// h(a, b) = v† (p̰/m) w on the alternative bundle.
pub fn metric_h(a: &BundlePoint, b: &BundlePoint) -> Result<Complex64> {
    BundlePoint::check_pair(a, b, Picture::Alternative)?;
    Ok(h_form(&a.p, a.m, &a.v, &b.v))
}

#[inline]
pub(crate) fn h_form(p: &FourVector, m: f64, v: &Spinor, w: &Spinor) -> Complex64 {
    v.sandwich(&under_tilde(p), w) / m
}

/// (p, v) ↦ (p, L(p)v)′, an isometry from the standard to the alternative bundle.
pub fn bundle_iso_l(x: &BundlePoint, choice: BoostChoice) -> Result<BundlePoint> {
    if x.picture != Picture::Standard {
        return Err(Error::PictureMismatch {
            expected: Picture::Standard,
            found: x.picture,
        });
    }
    let l = choice.boost(&x.p, x.m)?;
    Ok(BundlePoint {
        v: l.matrix().apply(&x.v),
        picture: Picture::Alternative,
        ..*x
    })
}

/// Unnormalized Gaussian momentum profile `exp(−|p − c|² / (4σ²))`, so that
/// `|f|²` has standard deviation σ along each axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianProfile {
    pub center: [f64; 3],
    pub sigma: f64,
}

impl GaussianProfile {
    pub fn new(center: [f64; 3], sigma: f64) -> Result<Self> {
        let g = GaussianProfile { center, sigma };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidWavepacket(format!(
                "width must be positive and finite, got {}",
                self.sigma
            )));
        }
        if !self.center.iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidWavepacket("center must be finite".into()));
        }
        Ok(())
    }

    pub fn value(&self, pvec: [f64; 3]) -> f64 {
        let d2: f64 = (0..3).map(|i| (pvec[i] - self.center[i]).powi(2)).sum();
        (-d2 / (4.0 * self.sigma * self.sigma)).exp()
    }
}

type RuleFn = dyn Fn(&FourVector) -> Spinor + Send + Sync;

/// How the spinor part of the base section depends on momentum.
#[derive(Clone)]
pub enum SpinorRule {
    /// The same unit spinor at every momentum.
    Constant(Spinor),
    /// `R(p̂)|+⟩`: spin along the direction of motion, `|+⟩` at rest.
    Helicity,
    /// A closed-form rule supplied by the caller. Not reconstructible from text.
    Custom { name: String, rule: Arc<RuleFn> },
}

impl SpinorRule {
    pub fn constant(chi: Spinor) -> Result<Self> {
        let n = chi.norm_sqr();
        if !((n - 1.0).abs() <= UNIT_TOL) {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
        Ok(SpinorRule::Constant(chi))
    }

    pub fn custom<F>(name: impl Into<String>, rule: F) -> Self
    where
        F: Fn(&FourVector) -> Spinor + Send + Sync + 'static,
    {
        SpinorRule::Custom {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn at(&self, p: &FourVector) -> Spinor {
        match self {
            SpinorRule::Constant(chi) => *chi,
            SpinorRule::Helicity => rotation_toward(p.spatial()).matrix().apply(&Spinor::up()),
            SpinorRule::Custom { rule, .. } => rule(p),
        }
    }
}

impl fmt::Debug for SpinorRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinorRule::Constant(chi) => f.debug_tuple("Constant").field(chi).finish(),
            SpinorRule::Helicity => f.write_str("Helicity"),
            SpinorRule::Custom { name, .. } => f.debug_struct("Custom").field("name", name).finish(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RuleRepr {
    Constant(Spinor),
    Helicity,
    Custom { name: String },
}

impl Serialize for SpinorRule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SpinorRule::Constant(chi) => RuleRepr::Constant(*chi),
            SpinorRule::Helicity => RuleRepr::Helicity,
            SpinorRule::Custom { name, .. } => RuleRepr::Custom { name: name.clone() },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpinorRule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match RuleRepr::deserialize(d)? {
            RuleRepr::Constant(chi) => SpinorRule::constant(chi).map_err(D::Error::custom),
            RuleRepr::Helicity => Ok(SpinorRule::Helicity),
            RuleRepr::Custom { name } => Err(D::Error::custom(format!(
                "custom spinor rule `{name}` cannot be reconstructed from a descriptor"
            ))),
        }
    }
}

/// An element (Λ, a) of the inhomogeneous group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Poincare {
    pub lambda: SL2C,
    pub a: FourVector,
}

impl Poincare {
    pub fn new(lambda: SL2C, a: FourVector) -> Self {
        Poincare { lambda, a }
    }

    pub fn identity() -> Self {
        Poincare::new(SL2C::identity(), FourVector::zero())
    }

    /// (Λ₂,a₂)(Λ₁,a₁) = (Λ₂Λ₁, a₂ + Λ₂a₁)
    pub fn compose(&self, first: &Poincare) -> Poincare {
        Poincare {
            lambda: self.lambda * first.lambda,
            a: self.a + apply_lorentz(&self.lambda, &first.a),
        }
    }
}

/// A normalized Gaussian wavepacket in either picture.
#[derive(Debug, Clone)]
pub struct Wavepacket {
    m: f64,
    profile: GaussianProfile,
    rule: SpinorRule,
    amplitude: f64,
    base_picture: Picture,
    transform: Poincare,
    picture: Picture,
}

/// Text form of a wavepacket.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WavepacketDescriptor {
    pub m: f64,
    pub center: [f64; 3],
    pub sigma: f64,
    pub spinor_rule: SpinorRule,
    #[serde(default = "SL2C::identity")]
    pub lambda: SL2C,
    #[serde(default = "FourVector::zero")]
    pub a: FourVector,
    pub picture: Picture,
    /// Picture in which the profile and spinor rule are specified; defaults to `picture`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_picture: Option<Picture>,
    /// Normalization constant; computed on a grid when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitude: Option<f64>,
}

impl WavepacketDescriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl Wavepacket {
    /// Builds the state and normalizes it on `grid`.
    pub fn new(
        m: f64,
        profile: GaussianProfile,
        rule: SpinorRule,
        picture: Picture,
        grid: &MomentumGrid,
    ) -> Result<Self> {
        let mut w = Wavepacket::unnormalized(m, profile, rule, picture)?;
        w.normalize_on(grid)?;
        Ok(w)
    }

    /// Builds the state and normalizes it on a box of ±7σ around its center.
    pub fn normalized(
        m: f64,
        profile: GaussianProfile,
        rule: SpinorRule,
        picture: Picture,
    ) -> Result<Self> {
        let mut w = Wavepacket::unnormalized(m, profile, rule, picture)?;
        let grid = MomentumGrid::new(m, w.base_box(COVERING_SIGMAS, DEFAULT_POINTS))?;
        w.normalize_on(&grid)?;
        Ok(w)
    }

    /// Amplitude 1, identity transform.
    pub fn unnormalized(
        m: f64,
        profile: GaussianProfile,
        rule: SpinorRule,
        picture: Picture,
    ) -> Result<Self> {
        MassShell::new(m)?;
        profile.validate()?;
        Ok(Wavepacket {
            m,
            profile,
            rule,
            amplitude: 1.0,
            base_picture: picture,
            transform: Poincare::identity(),
            picture,
        })
    }

    pub fn from_descriptor(d: &WavepacketDescriptor, grid: Option<&MomentumGrid>) -> Result<Self> {
        let base = d.base_picture.unwrap_or(d.picture);
        let mut w = Wavepacket::unnormalized(
            d.m,
            GaussianProfile {
                center: d.center,
                sigma: d.sigma,
            },
            d.spinor_rule.clone(),
            base,
        )?;
        match (d.amplitude, grid) {
            (Some(n), _) => {
                if !(n > 0.0 && n.is_finite()) {
                    return Err(Error::InvalidWavepacket(format!(
                        "amplitude must be positive and finite, got {n}"
                    )));
                }
                w.amplitude = n;
            }
            (None, Some(g)) => w.normalize_on(g)?,
            (None, None) => {
                let g = MomentumGrid::new(d.m, w.base_box(COVERING_SIGMAS, DEFAULT_POINTS))?;
                w.normalize_on(&g)?;
            }
        }
        w.picture = d.picture;
        w.transform = Poincare::new(d.lambda, d.a);
        Ok(w)
    }

    pub fn descriptor(&self) -> WavepacketDescriptor {
        WavepacketDescriptor {
            m: self.m,
            center: self.profile.center,
            sigma: self.profile.sigma,
            spinor_rule: self.rule.clone(),
            lambda: self.transform.lambda,
            a: self.transform.a,
            picture: self.picture,
            base_picture: (self.base_picture != self.picture).then_some(self.base_picture),
            amplitude: Some(self.amplitude),
        }
    }

    /// Hex SHA-256 of the descriptor's JSON text.
    pub fn digest(&self) -> String {
        let text = serde_json::to_string(&self.descriptor()).expect("descriptor serializes");
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    /// Box of ±kσ around the untransformed center with n points per axis.
    pub fn base_box(&self, k: f64, n: usize) -> GridSpec {
        let c = self.profile.center;
        let r = k * self.profile.sigma;
        GridSpec {
            lo: c.map(|x| x - r),
            hi: c.map(|x| x + r),
            n_per_axis: n,
            rule: Default::default(),
        }
    }

    /// Axis-aligned box containing the image under the accumulated Lorentz
    /// transform of the ball of radius kσ around the profile center.
    pub fn covering_box(&self, k: f64, n: usize, rule: QuadratureRule) -> GridSpec {
        const POLAR: usize = 48;
        const AZIMUTHAL: usize = 96;
        let lambda = self.transform.lambda;
        let c = self.profile.center;
        let r = k * self.profile.sigma;
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        let mut include = |v: [f64; 3]| {
            let q = apply_lorentz(&lambda, &lift_unchecked(v, self.m)).spatial();
            for i in 0..3 {
                lo[i] = lo[i].min(q[i]);
                hi[i] = hi[i].max(q[i]);
            }
        };
        include(c);
        for a in 0..=POLAR {
            let theta = std::f64::consts::PI * a as f64 / POLAR as f64;
            for b in 0..AZIMUTHAL {
                let phi = 2.0 * std::f64::consts::PI * b as f64 / AZIMUTHAL as f64;
                let d = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
                include([0, 1, 2].map(|i| c[i] + r * d[i]));
            }
        }
        // the sampled sphere can miss extremal points by a sliver
        let pad = 0.01 * r;
        GridSpec {
            lo: lo.map(|x| x - pad),
            hi: hi.map(|x| x + pad),
            n_per_axis: n,
            rule,
        }
    }

    /// Grid over [`covering_box`](Self::covering_box) with the default extent.
    pub fn covering_grid(&self, n: usize, rule: QuadratureRule) -> Result<MomentumGrid> {
        MomentumGrid::new(self.m, self.covering_box(COVERING_SIGMAS, n, rule))
    }

    /// Rescales so the norm in the state's own picture is 1 on `grid`.
    ///
    /// The untransformed state must pass [`check_coverage`](Self::check_coverage) on `grid`.
    pub fn normalize_on(&mut self, grid: &MomentumGrid) -> Result<()> {
        if grid.mass() != self.m {
            return Err(Error::MassMismatch(grid.mass(), self.m));
        }
        let saved = (self.transform, self.picture);
        self.transform = Poincare::identity();
        self.picture = self.base_picture;
        self.amplitude = 1.0;
        let checked = self.check_coverage(grid);
        let n2 = self.norm_sqr(grid);
        (self.transform, self.picture) = saved;
        checked?;
        if !(n2 > 0.0 && n2.is_finite()) {
            return Err(Error::InvalidWavepacket(format!("squared norm {n2} on grid")));
        }
        self.amplitude = n2.sqrt().recip();
        Ok(())
    }

    /// Probability density (per unit measure) at `p` in the state's own metric.
    pub fn density(&self, p: &FourVector) -> f64 {
        let v = self.eval_unchecked(p);
        match self.picture {
            Picture::Standard => v.norm_sqr(),
            Picture::Alternative => h_form(p, self.m, &v, &v).re,
        }
    }

    /// Largest density on the faces of the grid box relative to the largest
    /// density anywhere on the grid; 1 if the grid sees nothing.
    pub fn face_density(&self, grid: &MomentumGrid) -> f64 {
        let densities = grid.sample(|p| self.density(p));
        let peak = densities.iter().cloned().fold(0.0, f64::max);
        let face = grid
            .face_indices()
            .map(|i| densities[i])
            .fold(0.0, f64::max);
        if peak > 0.0 && peak.is_finite() {
            face / peak
        } else {
            1.0
        }
    }

    /// Fails when the state is not negligible on the faces of the grid box.
    pub fn check_coverage(&self, grid: &MomentumGrid) -> Result<()> {
        let tail = self.face_density(grid);
        if !(tail <= COVERAGE_THRESHOLD) {
            return Err(Error::InsufficientCoverage {
                tail,
                threshold: COVERAGE_THRESHOLD,
            });
        }
        Ok(())
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn picture(&self) -> Picture {
        self.picture
    }

    pub fn base_picture(&self) -> Picture {
        self.base_picture
    }

    pub fn profile(&self) -> &GaussianProfile {
        &self.profile
    }

    pub fn spinor_rule(&self) -> &SpinorRule {
        &self.rule
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn transform(&self) -> &Poincare {
        &self.transform
    }

    /// Untransformed section at `q`, in the base picture.
    fn base_value(&self, q: &FourVector) -> Spinor {
        let s = q.spatial();
        self.rule.at(q).scale_re(self.amplitude * self.profile.value(s))
    }

    /// Untransformed section at `q`, converted to the current picture.
    fn base_in_picture(&self, q: &FourVector) -> Spinor {
        let v = self.base_value(q);
        match (self.base_picture, self.picture) {
            (Picture::Alternative, Picture::Standard) => sqrt_under_tilde_over_m(q, self.m).apply(&v),
            (Picture::Standard, Picture::Alternative) => sqrt_tilde_over_m(q, self.m).apply(&v),
            _ => v,
        }
    }

    /// Value of the section at on-shell `p`.
    pub fn evaluate(&self, p: &FourVector) -> Result<Spinor> {
        check_on_shell(p, self.m)?;
        Ok(self.eval_unchecked(p))
    }

    pub(crate) fn eval_unchecked(&self, p: &FourVector) -> Spinor {
        let Poincare { lambda, a } = &self.transform;
        let phase = Complex64::from_polar(1.0, -minkowski_product(p, a));
        if *lambda == SL2C::identity() {
            // W(I, p) = I in both laws
            return self.base_in_picture(p).scale(phase);
        }
        let q = lift_unchecked(apply_lorentz(&lambda.inverse(), p).spatial(), self.m);
        let v = self.base_in_picture(&q);
        let factor = match self.picture {
            Picture::Alternative => *lambda.matrix(),
            // W(Λ, q) = L₀(p)⁻¹ Λ L₀(q), using Λq = p
            Picture::Standard => {
                sqrt_under_tilde_over_m(p, self.m) * *lambda.matrix() * sqrt_tilde_over_m(&q, self.m)
            }
        };
        factor.apply(&v).scale(phase)
    }

    /// Samples at every grid node.
    pub fn sample(&self, grid: &MomentumGrid) -> Vec<Spinor> {
        grid.sample(|p| self.eval_unchecked(p))
    }

    /// Squared norm in the state's own picture.
    pub fn norm_sqr(&self, grid: &MomentumGrid) -> f64 {
        let m = self.m;
        match self.picture {
            Picture::Standard => grid.integrate_fn(|p| self.eval_unchecked(p).norm_sqr()),
            Picture::Alternative => grid.integrate_fn(|p| {
                let v = self.eval_unchecked(p);
                h_form(p, m, &v, &v).re
            }),
        }
    }

    /// `U(Λ, a)` or `U′(Λ, a)` applied after the accumulated transform.
    pub fn transformed(&self, lambda: &SL2C, a: &FourVector) -> Wavepacket {
        Wavepacket {
            transform: Poincare::new(*lambda, *a).compose(&self.transform),
            ..self.clone()
        }
    }
}

/// ∫ metric(φ(p), χ(p)) dμ.
pub fn inner_product(phi: &Wavepacket, chi: &Wavepacket, grid: &MomentumGrid) -> Result<Complex64> {
    if phi.picture != chi.picture {
        return Err(Error::PictureMismatch {
            expected: phi.picture,
            found: chi.picture,
        });
    }
    if phi.m != chi.m {
        return Err(Error::MassMismatch(phi.m, chi.m));
    }
    if grid.mass() != phi.m {
        return Err(Error::MassMismatch(grid.mass(), phi.m));
    }
    let m = phi.m;
    Ok(match phi.picture {
        Picture::Standard => {
            grid.integrate_fn(|p| phi.eval_unchecked(p).inner(&chi.eval_unchecked(p)))
        }
        Picture::Alternative => grid.integrate_fn(|p| {
            h_form(p, m, &phi.eval_unchecked(p), &chi.eval_unchecked(p))
        }),
    })
}

pub fn poincare_transform(psi: &Wavepacket, lambda: &SL2C, a: &FourVector) -> Wavepacket {
    psi.transformed(lambda, a)
}

/// α: H′ → H, `[αφ](p) = √(p̰/m) φ(p)`.
pub fn alpha(phi: &Wavepacket) -> Result<Wavepacket> {
    retag(phi, Picture::Alternative, Picture::Standard)
}

/// α⁻¹: H → H′, `[α⁻¹ψ](p) = √(p̃/m) ψ(p)`.
pub fn alpha_inv(psi: &Wavepacket) -> Result<Wavepacket> {
    retag(psi, Picture::Standard, Picture::Alternative)
}

// The standard law with standard boosts equals α U′ α⁻¹, so moving a state
// between pictures only changes how evaluation interprets it.
fn retag(w: &Wavepacket, from: Picture, to: Picture) -> Result<Wavepacket> {
    if w.picture != from {
        return Err(Error::PictureMismatch {
            expected: from,
            found: w.picture,
        });
    }
    Ok(Wavepacket {
        picture: to,
        ..w.clone()
    })
}

/// √(p̰/m) v
pub fn alpha_at(p: &FourVector, m: f64, v: &Spinor) -> Result<Spinor> {
    check_on_shell(p, m)?;
    Ok(sqrt_under_tilde_over_m(p, m).apply(v))
}

/// √(p̃/m) v
pub fn alpha_inv_at(p: &FourVector, m: f64, v: &Spinor) -> Result<Spinor> {
    check_on_shell(p, m)?;
    Ok(sqrt_tilde_over_m(p, m).apply(v))
}

/// max over nodes of ‖√(p̰/m)[U′(Λ,a)φ](p) − [U(Λ,a)αφ](p)‖.
///
/// The left side uses the Wigner-free law followed by the pointwise map; the
/// right side goes through the Wigner factor of the standard law.
pub fn equivalence_check(
    phi: &Wavepacket,
    lambda: &SL2C,
    a: &FourVector,
    grid: &MomentumGrid,
) -> Result<f64> {
    if phi.picture != Picture::Alternative {
        return Err(Error::PictureMismatch {
            expected: Picture::Alternative,
            found: phi.picture,
        });
    }
    let m = phi.m;
    let left = phi.transformed(lambda, a);
    let right = alpha(phi)?.transformed(lambda, a);
    Ok(grid.max_over_nodes(|p| {
        let l = sqrt_under_tilde_over_m(p, m).apply(&left.eval_unchecked(p));
        (l - right.eval_unchecked(p)).norm()
    }))
}
