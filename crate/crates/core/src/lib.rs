//! Skeletal hydrogen/oxygen combustion kinetics with the two classic
//! verification test cases: constant-volume adiabatic ignition (0D) and a
//! freely propagating premixed laminar flame (1D), plus mixture-averaged
//! molecular transport and the diagnostic relations tying the two together.
//!
//! The crate is organized around a [`mechanism::Mechanism`] (species, NASA-7
//! thermodynamics, Lennard-Jones transport parameters, elementary reactions
//! with third-body efficiencies). Everything downstream — rate evaluation,
//! stiff 0D integration, the 1D flame solver — borrows the mechanism
//! immutably, so one mechanism can serve many concurrent runs.

pub mod analysis;
pub mod constants;
pub mod error;
pub mod flame1d;
pub mod kinetics;
pub mod mechanism;
pub mod mixtures;
pub mod reactor0d;
pub mod stiff;
pub mod thermo;
pub mod transport;

pub use error::{CombustionError, Result};
pub use mechanism::Mechanism;
pub use thermo::ThermoState;
