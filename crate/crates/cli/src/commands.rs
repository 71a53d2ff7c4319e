//! `covariance` and `expectation`.

use serde::Serialize;
use spinbundle::linalg::Mat2C;
use spinbundle::observables::{expectation_momentum, expectation_nw, expectation_pl};
use spinbundle::reduced::{covariance_report, noncovariance_witness, pl_reduced, theta_matrix, Verdict};
use spinbundle::spacetime::{four_vector_from_tilde, FourVector};
use spinbundle::spin_group::apply_lorentz;
use spinbundle::states::{alpha, alpha_inv, Picture, Wavepacket};

use crate::config::{ExperimentConfig, TransformSpec};
use crate::CliError;

/// The same physical state in both pictures, related by α.
fn both_pictures(w: &Wavepacket) -> Result<(Wavepacket, Wavepacket), CliError> {
    Ok(match w.picture() {
        Picture::Alternative => (w.clone(), alpha(w)?),
        Picture::Standard => (alpha_inv(w)?, w.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaRow {
    pub tag: &'static str,
    pub residual: f64,
    pub residual_refined: f64,
    pub budget: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeresRow {
    pub tag: &'static str,
    pub eig_a: [f64; 2],
    pub eig_b: [f64; 2],
    pub shift: f64,
    pub budget: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CovarianceRow {
    pub state: usize,
    pub digest: String,
    pub sigma_over_m: f64,
    pub transformation: TransformSpec,
    pub pauli_lubansky: SigmaRow,
    pub peres: PeresRow,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CovarianceTable {
    pub command: &'static str,
    pub mass: f64,
    pub n_per_axis: usize,
    pub rows: Vec<CovarianceRow>,
    /// Every σ verdict is covariant.
    pub passed: bool,
}

pub fn run_covariance(config: &ExperimentConfig) -> Result<CovarianceTable, CliError> {
    let states = config.build_states()?;
    let transforms = config.build_transformations()?;
    let zero = FourVector::zero();
    let mut rows = Vec::new();
    for (i, w) in states.iter().enumerate() {
        let (phi, psi) = both_pictures(w)?;
        for (spec, lambda) in &transforms {
            let moved_phi = phi.transformed(lambda, &spec.a);
            let c = covariance_report(&phi, lambda, &spec.a, &config.grid_for(&phi)?, &config.grid_for(&moved_phi)?)?;
            let moved_psi = psi.transformed(lambda, &zero);
            let p = noncovariance_witness(&psi, lambda, &config.grid_for(&psi)?, &config.grid_for(&moved_psi)?)?;
            rows.push(CovarianceRow {
                state: i,
                digest: w.digest(),
                sigma_over_m: w.profile().sigma / w.mass(),
                transformation: *spec,
                pauli_lubansky: SigmaRow {
                    tag: "Eq. 70",
                    residual: c.residual,
                    residual_refined: c.residual_refined,
                    budget: c.budget,
                    verdict: c.verdict,
                },
                peres: PeresRow {
                    tag: "Eq. 64",
                    eig_a: p.eig_a,
                    eig_b: p.eig_b,
                    shift: p.shift,
                    budget: p.budget,
                    verdict: p.verdict,
                },
            });
        }
    }
    let passed = rows.iter().all(|r| r.pauli_lubansky.verdict == Verdict::Covariant);
    Ok(CovarianceTable {
        command: "covariance",
        mass: config.mass,
        n_per_axis: config.grid.n_per_axis,
        rows,
        passed,
    })
}

impl CovarianceTable {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "state",
            "sigma_over_m",
            "type",
            "axis",
            "angle_or_rapidity",
            "pl_tag",
            "pl_residual",
            "pl_budget",
            "pl_verdict",
            "peres_tag",
            "peres_shift",
            "peres_budget",
            "peres_verdict",
        ])?;
        for r in &self.rows {
            let t = &r.transformation;
            w.write_record([
                r.state.to_string(),
                r.sigma_over_m.to_string(),
                serde_json::to_value(t.kind)?.as_str().unwrap_or_default().to_string(),
                format!("{} {} {}", t.axis[0], t.axis[1], t.axis[2]),
                t.angle_or_rapidity.to_string(),
                r.pauli_lubansky.tag.to_string(),
                format!("{:e}", r.pauli_lubansky.residual),
                format!("{:e}", r.pauli_lubansky.budget),
                verdict_str(r.pauli_lubansky.verdict).to_string(),
                r.peres.tag.to_string(),
                format!("{:e}", r.peres.shift),
                format!("{:e}", r.peres.budget),
                verdict_str(r.peres.verdict).to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Covariant => "covariant",
        Verdict::NonCovariant => "non_covariant",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tagged<T> {
    pub tag: &'static str,
    pub value: T,
}

fn tagged<T>(tag: &'static str, value: T) -> Tagged<T> {
    Tagged { tag, value }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaRecord {
    pub tag: &'static str,
    pub matrix: Mat2C,
    pub four_vector: FourVector,
    /// max |four_vector − ⟨W⟩|
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformedRecord {
    pub tag: &'static str,
    pub transformation: TransformSpec,
    pub pauli_lubansky: FourVector,
    /// Λ applied to the untransformed ⟨W⟩.
    pub expected: FourVector,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectationRecord {
    pub state: usize,
    pub digest: String,
    pub pauli_lubansky: Tagged<FourVector>,
    pub newton_wigner: Tagged<[f64; 3]>,
    pub momentum: Tagged<FourVector>,
    pub sigma: Tagged<Mat2C>,
    pub theta: ThetaRecord,
    pub transformed: Vec<TransformedRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectationReport {
    pub command: &'static str,
    pub mass: f64,
    pub n_per_axis: usize,
    pub states: Vec<ExpectationRecord>,
}

pub fn run_expectation(config: &ExperimentConfig) -> Result<ExpectationReport, CliError> {
    let states = config.build_states()?;
    let transforms = match &config.transformations {
        Some(t) if t.is_empty() => Vec::new(),
        _ => config.build_transformations()?,
    };
    let mut records = Vec::new();
    for (i, w) in states.iter().enumerate() {
        let (phi, _) = both_pictures(w)?;
        let g = config.grid_for(&phi)?;
        let pl = expectation_pl(&phi, &g)?;
        let theta = theta_matrix(&phi, &g)?;
        let theta_vec = four_vector_from_tilde(&theta)?;
        let mut transformed = Vec::new();
        for (spec, lambda) in &transforms {
            let moved = phi.transformed(lambda, &spec.a);
            let value = expectation_pl(&moved, &config.grid_for(&moved)?)?;
            let expected = apply_lorentz(lambda, &pl);
            transformed.push(TransformedRecord {
                tag: "Eq. 52",
                transformation: *spec,
                pauli_lubansky: value,
                expected,
                residual: (value - expected).max_abs(),
            });
        }
        records.push(ExpectationRecord {
            state: i,
            digest: w.digest(),
            pauli_lubansky: tagged("Eq. 61", pl),
            newton_wigner: tagged("Eq. 62", expectation_nw(&phi, &g)?),
            momentum: tagged("Eq. 71", expectation_momentum(&phi, &g)),
            sigma: tagged("Eq. 67", *pl_reduced(&phi, &g)?.matrix()),
            theta: ThetaRecord {
                tag: "Eq. 71",
                matrix: theta,
                four_vector: theta_vec,
                residual: (theta_vec - pl).max_abs(),
            },
            transformed,
        });
    }
    Ok(ExpectationReport {
        command: "expectation",
        mass: config.mass,
        n_per_axis: config.grid.n_per_axis,
        states: records,
    })
}
