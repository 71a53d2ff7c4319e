//! The mass shell, its Lorentz-invariant measure and tensor-product
//! quadrature grids over it.
//!
//! A grid is a Cartesian rule on a box in 3-momentum space, lifted to the
//! shell. Each node carries the Cartesian weight divided by (2π)³ p⁰, so
//! `Σ wᵢ f(pᵢ)` approximates `∫ f dμ` with `dμ = d³p / ((2π)³ p⁰)`.

use std::f64::consts::PI;
use std::ops::Add;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat2C, Spinor};
use crate::spacetime::{minkowski_product, FourVector};

/// Relative on-shell tolerance: |⟨p,p⟩ − m²| ≤ ON_SHELL_TOL · max(m², (p⁰)²).
pub const ON_SHELL_TOL: f64 = 1e-10;

/// Default points per axis.
pub const DEFAULT_POINTS: usize = 32;

/// Nodes summed sequentially per parallel task. Fixed so reductions are
/// bit-reproducible regardless of thread count.
const CHUNK: usize = 512;

/// The hyperboloid p² = m², p⁰ > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassShell {
    m: f64,
}

impl MassShell {
    pub fn new(m: f64) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::InvalidMass(m));
        }
        Ok(MassShell { m })
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn lift(&self, pvec: [f64; 3]) -> FourVector {
        lift_unchecked(pvec, self.m)
    }

    pub fn contains(&self, p: &FourVector) -> bool {
        check_on_shell(p, self.m).is_ok()
    }

    /// k = (m, 0, 0, 0)
    pub fn rest(&self) -> FourVector {
        FourVector::rest(self.m)
    }
}

/// (√(m² + |p|²), p)
pub fn lift(pvec: [f64; 3], m: f64) -> Result<FourVector> {
    Ok(MassShell::new(m)?.lift(pvec))
}

pub(crate) fn lift_unchecked(pvec: [f64; 3], m: f64) -> FourVector {
    let p2 = pvec[0] * pvec[0] + pvec[1] * pvec[1] + pvec[2] * pvec[2];
    FourVector::from_parts((m * m + p2).sqrt(), pvec)
}

pub fn check_on_shell(p: &FourVector, m: f64) -> Result<()> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidMass(m));
    }
    let p0 = p.time();
    let deviation = (minkowski_product(p, p) - m * m).abs();
    if !(p0 > 0.0 && deviation <= ON_SHELL_TOL * (m * m).max(p0 * p0)) {
        return Err(Error::OffShell { deviation, p0 });
    }
    Ok(())
}

/// One-dimensional rule applied along each axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureRule {
    #[default]
    GaussLegendre,
    Trapezoid,
}

impl QuadratureRule {
    /// Nodes and weights on [lo, hi].
    pub fn nodes(&self, n: usize, lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
        match self {
            QuadratureRule::GaussLegendre => {
                let (x, w) = gauss_legendre(n);
                let half = 0.5 * (hi - lo);
                let mid = 0.5 * (hi + lo);
                (
                    x.iter().map(|t| mid + half * t).collect(),
                    w.iter().map(|v| half * v).collect(),
                )
            }
            QuadratureRule::Trapezoid => {
                let h = (hi - lo) / (n - 1) as f64;
                let x = (0..n).map(|i| lo + h * i as f64).collect();
                let w = (0..n)
                    .map(|i| if i == 0 || i == n - 1 { 0.5 * h } else { h })
                    .collect();
                (x, w)
            }
        }
    }
}

/// Gauss–Legendre nodes and weights on [−1, 1], ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut t = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, t);
            dp = d;
            let step = p / d;
            t -= step;
            if step.abs() <= 1e-16 * t.abs().max(1.0) {
                let (_, d) = legendre(n, t);
                dp = d;
                break;
            }
        }
        let weight = 2.0 / ((1.0 - t * t) * dp * dp);
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = weight;
        w[n - 1 - i] = weight;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

/// P_n(t) and P_n'(t) by the three-term recurrence.
fn legendre(n: usize, t: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, t);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * t * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (t * p1 - p0) / (t * t - 1.0);
    (p1, d)
}

/// Box [lo, hi] in 3-momentum space with `n_per_axis` nodes along each axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: [f64; 3],
    pub hi: [f64; 3],
    pub n_per_axis: usize,
    pub rule: QuadratureRule,
}

impl GridSpec {
    pub fn cube(p_max: f64, n_per_axis: usize, rule: QuadratureRule) -> Self {
        GridSpec {
            lo: [-p_max; 3],
            hi: [p_max; 3],
            n_per_axis,
            rule,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_per_axis < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points per axis, got {}",
                self.n_per_axis
            )));
        }
        for axis in 0..3 {
            let (lo, hi) = (self.lo[axis], self.hi[axis]);
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidGrid(format!(
                    "axis {axis} has empty or non-finite extent [{lo}, {hi}]"
                )));
            }
        }
        Ok(())
    }
}

/// Quadrature nodes on the mass shell with invariant-measure weights.
#[derive(Debug, Clone)]
pub struct MomentumGrid {
    m: f64,
    spec: GridSpec,
    nodes: Vec<FourVector>,
    weights: Vec<f64>,
}

/// Tensor-product grid over the cube [−p_max, p_max]³.
pub fn build_grid(
    m: f64,
    p_max: f64,
    n_per_axis: usize,
    rule: QuadratureRule,
) -> Result<MomentumGrid> {
    if !(p_max > 0.0 && p_max.is_finite()) {
        return Err(Error::InvalidGrid(format!("cutoff must be positive, got {p_max}")));
    }
    MomentumGrid::new(m, GridSpec::cube(p_max, n_per_axis, rule))
}

impl MomentumGrid {
    pub fn new(m: f64, spec: GridSpec) -> Result<Self> {
        let shell = MassShell::new(m)?;
        spec.validate()?;
        let n = spec.n_per_axis;
        let axes: Vec<(Vec<f64>, Vec<f64>)> = (0..3)
            .map(|a| spec.rule.nodes(n, spec.lo[a], spec.hi[a]))
            .collect();
        let density = (2.0 * PI).powi(3);
        let mut nodes = Vec::with_capacity(n * n * n);
        let mut weights = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let p = shell.lift([axes[0].0[i], axes[1].0[j], axes[2].0[k]]);
                    let w = axes[0].1[i] * axes[1].1[j] * axes[2].1[k] / (density * p.time());
                    nodes.push(p);
                    weights.push(w);
                }
            }
        }
        let grid = MomentumGrid {
            m,
            spec,
            nodes,
            weights,
        };
        grid.check_invariants()?;
        Ok(grid)
    }

    fn check_invariants(&self) -> Result<()> {
        for (p, &w) in self.nodes.iter().zip(&self.weights) {
            check_on_shell(p, self.m)?;
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::InvalidGrid(format!("non-positive weight {w}")));
            }
        }
        Ok(())
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn nodes(&self) -> &[FourVector] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Indices of nodes on the outer layer of the box.
    pub fn face_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.spec.n_per_axis;
        let edge = move |i: usize| i == 0 || i == n - 1;
        (0..self.nodes.len()).filter(move |&idx| edge(idx / (n * n)) || edge(idx / n % n) || edge(idx % n))
    }

    /// Same box with twice the points per axis.
    pub fn refined(&self) -> Result<MomentumGrid> {
        let mut spec = self.spec;
        spec.n_per_axis *= 2;
        MomentumGrid::new(self.m, spec)
    }

    /// Same box and rule with a different resolution.
    pub fn with_points(&self, n_per_axis: usize) -> Result<MomentumGrid> {
        let mut spec = self.spec;
        spec.n_per_axis = n_per_axis;
        MomentumGrid::new(self.m, spec)
    }

    /// ∫ dμ over the box.
    pub fn total_weight(&self) -> f64 {
        self.integrate_fn(|_| 1.0)
    }

    /// Σᵢ wᵢ fᵢ for samples aligned with [`nodes`](Self::nodes).
    pub fn integrate<T: Integrand>(&self, samples: &[T]) -> Result<T> {
        if samples.len() != self.nodes.len() {
            return Err(Error::LengthMismatch {
                expected: self.nodes.len(),
                found: samples.len(),
            });
        }
        let partial: Vec<T> = samples
            .par_chunks(CHUNK)
            .zip(self.weights.par_chunks(CHUNK))
            .map(|(f, w)| {
                f.iter()
                    .zip(w)
                    .fold(T::zero(), |acc, (v, &wi)| acc + v.scale(wi))
            })
            .collect();
        Ok(partial.into_iter().fold(T::zero(), |acc, v| acc + v))
    }

    /// Σᵢ wᵢ f(pᵢ), evaluating `f` node-parallel.
    pub fn integrate_fn<T, F>(&self, f: F) -> T
    where
        T: Integrand,
        F: Fn(&FourVector) -> T + Sync,
    {
        let partial: Vec<T> = self
            .nodes
            .par_chunks(CHUNK)
            .zip(self.weights.par_chunks(CHUNK))
            .map(|(p, w)| {
                p.iter()
                    .zip(w)
                    .fold(T::zero(), |acc, (pi, &wi)| acc + f(pi).scale(wi))
            })
            .collect();
        partial.into_iter().fold(T::zero(), |acc, v| acc + v)
    }

    /// Evaluates `f` at every node, in node order.
    pub fn sample<T, F>(&self, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&FourVector) -> T + Sync,
    {
        self.nodes.par_iter().map(&f).collect()
    }

    /// max over nodes of `f`, evaluated in parallel.
    pub fn max_over_nodes<F>(&self, f: F) -> f64
    where
        F: Fn(&FourVector) -> f64 + Sync,
    {
        self.nodes
            .par_iter()
            .map(&f)
            .reduce(|| 0.0, |a, b| if b > a || b.is_nan() { b } else { a })
    }
}

/// Values that can be summed with real weights.
pub trait Integrand: Copy + Send + Sync + Add<Output = Self> {
    fn zero() -> Self;
    fn scale(self, w: f64) -> Self;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn scale(self, w: f64) -> Self {
        self * w
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn scale(self, w: f64) -> Self {
        self * w
    }
}

impl Integrand for Mat2C {
    fn zero() -> Self {
        Mat2C::zero()
    }
    fn scale(self, w: f64) -> Self {
        self.scale_re(w)
    }
}

impl Integrand for Spinor {
    fn zero() -> Self {
        Spinor::zero()
    }
    fn scale(self, w: f64) -> Self {
        self.scale_re(w)
    }
}

impl Integrand for FourVector {
    fn zero() -> Self {
        FourVector::zero()
    }
    fn scale(self, w: f64) -> Self {
        FourVector::scale(&self, w)
    }
}

impl<A: Integrand, B: Integrand> Integrand for Pair<A, B> {
    fn zero() -> Self {
        Pair(A::zero(), B::zero())
    }
    fn scale(self, w: f64) -> Self {
        Pair(self.0.scale(w), self.1.scale(w))
    }
}

/// Two integrands accumulated in one pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: Add<Output = A>, B: Add<Output = B>> Add for Pair<A, B> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Pair(self.0 + o.0, self.1 + o.1)
    }
}
