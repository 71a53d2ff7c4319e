//! Massive spin-½ particles as fields of qubits over the mass shell.
//!
//! Momenta live on the hyperboloid `p² = m²`; spin lives in `C²` at each
//! momentum. Two equivalent descriptions are provided: the standard one with a
//! flat fibre metric and a Wigner rotation in its transformation law, and an
//! alternative one where the group acts by plain matrix multiplication and the
//! fibre metric is `p̰/m`. On top of these sit the Pauli–Lubansky and
//! Newton–Wigner spin observables and two reduced spin matrices, one of which
//! transforms covariantly and one of which does not.

pub mod error;
pub mod linalg;
pub mod mass_shell;
pub mod observables;
pub mod reduced;
pub mod sampling;
pub mod spacetime;
pub mod spin_group;
pub mod states;

pub use error::{Error, Result};
pub use linalg::{Mat2C, Spinor, PAULI};
pub use mass_shell::{build_grid, lift, GridSpec, MassShell, MomentumGrid, QuadratureRule};
pub use spacetime::{four_vector_from_tilde, minkowski_product, tilde, under_tilde, FourVector};
pub use spin_group::{covering_map, standard_boost, wigner_rotation, BoostChoice, LorentzMatrix, SL2C};
pub use states::{Picture, Poincare, SpinorRule, Wavepacket, WavepacketDescriptor};
