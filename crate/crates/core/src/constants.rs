//! Physical constants. Internal unit system is SI (m, kg, s, K, J, mol);
//! mechanism files carry rate data in mol-cm³-s-K-kcal units and are
//! normalized once at load.

/// Universal gas constant, J/(mol·K) (CODATA 2018, exact).
pub const GAS_CONSTANT: f64 = 8.314_462_618_153_24;

/// Gas constant in kcal/(mol·K), used against activation energies in kcal/mol.
pub const GAS_CONSTANT_KCAL: f64 = 1.987_2e-3;

/// Standard atmosphere, Pa.
pub const ATM: f64 = 101_325.0;

/// Reference pressure for equilibrium constants, Pa.
pub const P_REF: f64 = ATM;

/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Avogadro constant, 1/mol (exact).
pub const AVOGADRO: f64 = 6.022_140_76e23;

/// Thermochemical calorie, J.
pub const CAL_TO_J: f64 = 4.184;

/// One debye in C·m.
pub const DEBYE: f64 = 3.335_640_951_981_52e-30;

/// Ångström in m.
pub const ANGSTROM: f64 = 1e-10;
