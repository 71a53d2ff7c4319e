//! Experiment configuration: one JSON document per run.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use spinbundle::linalg::Spinor;
use spinbundle::mass_shell::{build_grid, MomentumGrid, QuadratureRule};
use spinbundle::spacetime::FourVector;
use spinbundle::spin_group::{boost_along, rotation_about, SL2C};
use spinbundle::states::{Picture, SpinorRule, Wavepacket, WavepacketDescriptor};

use crate::CliError;

/// Largest accepted points per axis; 256³ nodes is already ~17M evaluations.
pub const MAX_POINTS: usize = 256;

const AXIS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_mass")]
    pub mass: f64,
    #[serde(default)]
    pub grid: GridConfig,
    /// Absent means a single default packet.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<Vec<WavepacketDescriptor>>,
    /// Absent means a rotation and two rapidity-1 boosts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transformations: Option<Vec<TransformSpec>>,
    #[serde(default)]
    pub verify: VerifyOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default = "default_points")]
    pub n_per_axis: usize,
    /// Fixed cube [−p_max, p_max]³. When absent each state gets a box that
    /// covers its support.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_max: Option<f64>,
    #[serde(default)]
    pub rule: QuadratureRule,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyOptions {
    /// Draws per algebraic identity.
    #[serde(default = "default_random_samples")]
    pub random_samples: usize,
    /// Random wavepackets per state-level check.
    #[serde(default = "default_state_samples")]
    pub state_samples: usize,
    /// Replaces every check's tolerance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance_override: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    Rotation,
    Boost,
}

/// A Lorentz transformation given by axis and angle (or rapidity), plus a
/// translation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformSpec {
    #[serde(rename = "type")]
    pub kind: TransformKind,
    pub axis: [f64; 3],
    pub angle_or_rapidity: f64,
    #[serde(default = "FourVector::zero")]
    pub a: FourVector,
}

fn default_mass() -> f64 {
    1.0
}

fn default_points() -> usize {
    32
}

fn default_random_samples() -> usize {
    10_000
}

fn default_state_samples() -> usize {
    20
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            n_per_axis: default_points(),
            p_max: None,
            rule: QuadratureRule::default(),
        }
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            random_samples: default_random_samples(),
            state_samples: default_state_samples(),
            tolerance_override: None,
        }
    }
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            mass: default_mass(),
            grid: GridConfig::default(),
            states: None,
            transformations: None,
            verify: VerifyOptions::default(),
            output: None,
            seed: 0,
        }
    }
}

impl TransformSpec {
    pub fn rotation(axis: [f64; 3], angle: f64) -> Self {
        TransformSpec {
            kind: TransformKind::Rotation,
            axis,
            angle_or_rapidity: angle,
            a: FourVector::zero(),
        }
    }

    pub fn boost(axis: [f64; 3], rapidity: f64) -> Self {
        TransformSpec {
            kind: TransformKind::Boost,
            axis,
            angle_or_rapidity: rapidity,
            a: FourVector::zero(),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let norm = self.axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !((norm - 1.0).abs() <= AXIS_TOL) {
            return Err(CliError::Config(format!("transformation axis {:?} is not a unit vector", self.axis)));
        }
        if !self.angle_or_rapidity.is_finite() {
            return Err(CliError::Config("transformation angle_or_rapidity must be finite".into()));
        }
        if !self.a.0.iter().all(|x| x.is_finite()) {
            return Err(CliError::Config("translation a must be finite".into()));
        }
        Ok(())
    }

    pub fn lambda(&self) -> Result<SL2C, CliError> {
        self.validate()?;
        let l = match self.kind {
            TransformKind::Rotation => rotation_about(self.axis, self.angle_or_rapidity),
            TransformKind::Boost => boost_along(self.axis, self.angle_or_rapidity),
        };
        Ok(l?)
    }
}

impl ExperimentConfig {
    /// Parses and validates a config document.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let parse = |e: serde_json::Error| CliError::Config(format!("parse error: {e}"));
        let value: serde_json::Value = serde_json::from_str(text).map_err(parse)?;
        if !value.is_object() {
            return Err(CliError::Config("config must be a JSON object".into()));
        }
        let config: ExperimentConfig = serde_json::from_value(value).map_err(parse)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            return Err(CliError::Config(format!("mass must be positive and finite, got {}", self.mass)));
        }
        let n = self.grid.n_per_axis;
        if !(2..=MAX_POINTS).contains(&n) {
            return Err(CliError::Config(format!("grid.n_per_axis must be in 2..={MAX_POINTS}, got {n}")));
        }
        if let Some(p) = self.grid.p_max {
            if !(p > 0.0 && p.is_finite()) {
                return Err(CliError::Config(format!("grid.p_max must be positive and finite, got {p}")));
            }
        }
        if self.verify.random_samples == 0 || self.verify.state_samples == 0 {
            return Err(CliError::Config("verify sample counts must be positive".into()));
        }
        if let Some(t) = self.verify.tolerance_override {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(CliError::Config(format!("tolerance_override must be non-negative, got {t}")));
            }
        }
        for (i, d) in self.states.iter().flatten().enumerate() {
            if d.m != self.mass {
                return Err(CliError::Config(format!(
                    "state {i} has mass {} but the experiment mass is {}",
                    d.m, self.mass
                )));
            }
            if !(d.sigma > 0.0 && d.sigma.is_finite()) || !d.center.iter().all(|x| x.is_finite()) {
                return Err(CliError::Config(format!("state {i}: width must be positive and center finite")));
            }
        }
        for t in self.transformations.iter().flatten() {
            t.validate()?;
        }
        Ok(())
    }

    /// Command-line flags take precedence over the file.
    pub fn apply_overrides(
        &mut self,
        seed: Option<u64>,
        grid_n: Option<usize>,
        p_max: Option<f64>,
    ) -> Result<(), CliError> {
        if let Some(s) = seed {
            self.seed = s;
        }
        if let Some(n) = grid_n {
            self.grid.n_per_axis = n;
        }
        if p_max.is_some() {
            self.grid.p_max = p_max;
        }
        self.validate()
    }

    pub fn state_descriptors(&self) -> Vec<WavepacketDescriptor> {
        match &self.states {
            Some(s) => s.clone(),
            None => vec![WavepacketDescriptor {
                m: self.mass,
                center: [0.5 * self.mass, 0.0, 0.0],
                sigma: 0.5 * self.mass,
                spinor_rule: SpinorRule::Constant(Spinor::up()),
                lambda: SL2C::identity(),
                a: FourVector::zero(),
                picture: Picture::Alternative,
                base_picture: None,
                amplitude: None,
            }],
        }
    }

    pub fn transformation_specs(&self) -> Vec<TransformSpec> {
        match &self.transformations {
            Some(t) => t.clone(),
            None => vec![
                TransformSpec::rotation([0.0, 0.0, 1.0], 1.0),
                TransformSpec::boost([0.0, 0.0, 1.0], 1.0),
                TransformSpec::boost([1.0, 0.0, 0.0], 1.0),
            ],
        }
    }

    /// Builds every configured state, normalized on its own support.
    pub fn build_states(&self) -> Result<Vec<Wavepacket>, CliError> {
        let states = self.state_descriptors();
        if states.is_empty() {
            return Err(CliError::Config("at least one state is required".into()));
        }
        states
            .iter()
            .enumerate()
            .map(|(i, d)| {
                Wavepacket::from_descriptor(d, None).map_err(|e| CliError::Config(format!("state {i}: {e}")))
            })
            .collect()
    }

    pub fn build_transformations(&self) -> Result<Vec<(TransformSpec, SL2C)>, CliError> {
        let specs = self.transformation_specs();
        if specs.is_empty() {
            return Err(CliError::Config("at least one transformation is required".into()));
        }
        specs.into_iter().map(|t| Ok((t, t.lambda()?))).collect()
    }

    /// The fixed cube if `p_max` is set, otherwise a box covering `w`.
    pub fn grid_for(&self, w: &Wavepacket) -> Result<MomentumGrid, CliError> {
        let g = match self.grid.p_max {
            Some(p) => build_grid(self.mass, p, self.grid.n_per_axis, self.grid.rule),
            None => w.covering_grid(self.grid.n_per_axis, self.grid.rule),
        };
        Ok(g?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json(c: &ExperimentConfig) -> String {
        serde_json::to_string(c).unwrap()
    }

    #[test]
    fn empty_document_gives_defaults() {
        let c = ExperimentConfig::from_json("{}").unwrap();
        assert_eq!(json(&c), json(&ExperimentConfig::default()));
        assert_eq!(c.grid.n_per_axis, 32);
        assert_eq!(c.verify.random_samples, 10_000);
        assert_eq!(c.transformation_specs().len(), 3);
        assert_eq!(c.build_states().unwrap().len(), 1);
    }

    #[test]
    fn parses_a_full_document() {
        let text = r#"{
            "mass": 2.0,
            "grid": {"n_per_axis": 24, "p_max": 6.0, "rule": "trapezoid"},
            "states": [{"m": 2.0, "center": [0.1, 0.0, 0.0], "sigma": 0.4,
                        "spinor_rule": "helicity", "picture": "standard"}],
            "transformations": [{"type": "boost", "axis": [0, 0, 1], "angle_or_rapidity": 0.5,
                                 "a": [1, 0, 0, 0]}],
            "verify": {"random_samples": 100, "state_samples": 3, "tolerance_override": 1e-20},
            "output": "out.json",
            "seed": 9
        }"#;
        let c = ExperimentConfig::from_json(text).unwrap();
        assert_eq!(c.grid.rule, QuadratureRule::Trapezoid);
        assert_eq!(c.transformation_specs()[0].a, FourVector::new(1.0, 0.0, 0.0, 0.0));
        let back = ExperimentConfig::from_json(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(json(&back), json(&c));
    }

    #[test]
    fn rejects_invalid_documents() {
        for text in [
            "[]",
            r#"{"mass": -1}"#,
            r#"{"grid": {"n_per_axis": 1}}"#,
            r#"{"grid": {"p_max": 0}}"#,
            r#"{"unknown": 1}"#,
            r#"{"transformations": [{"type": "boost", "axis": [0, 0, 2], "angle_or_rapidity": 1}]}"#,
            r#"{"transformations": [{"type": "shear", "axis": [0, 0, 1], "angle_or_rapidity": 1}]}"#,
            r#"{"states": [{"m": 2.0, "center": [0, 0, 0], "sigma": 0.3, "spinor_rule": "helicity", "picture": "standard"}]}"#,
            r#"{"states": [{"m": 1.0, "center": [0, 0, 0], "sigma": -0.3, "spinor_rule": "helicity", "picture": "standard"}]}"#,
            r#"{"verify": {"tolerance_override": -1}}"#,
        ] {
            assert!(matches!(ExperimentConfig::from_json(text), Err(CliError::Config(_))), "{text}");
        }
    }

    #[test]
    fn empty_lists_are_rejected_when_used() {
        let c = ExperimentConfig::from_json(r#"{"states": [], "transformations": []}"#).unwrap();
        assert!(c.build_states().is_err());
        assert!(c.build_transformations().is_err());
    }

    #[test]
    fn overrides_are_validated() {
        let mut c = ExperimentConfig::default();
        c.apply_overrides(Some(4), Some(16), Some(3.0)).unwrap();
        assert_eq!((c.seed, c.grid.n_per_axis, c.grid.p_max), (4, 16, Some(3.0)));
        assert!(c.apply_overrides(None, Some(0), None).is_err());
    }
}
