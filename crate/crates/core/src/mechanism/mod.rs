//! Chemical reaction mechanisms: domain types, the built-in skeletal H2/O2
//! scheme, a line-oriented file format with parser and serializer, and
//! structural validation.
//!
//! A mechanism stores rate parameters exactly as they appear in the file
//! (A in mol-cm³-s units, Ea in kcal/mol, per the usual kinetics-table
//! convention); SI-normalized values are derived once by the evaluators in
//! [`crate::kinetics`]. This keeps serialize→parse round trips bit-exact.

mod builtin;
mod parse;
mod serialize;
mod validate;

pub use builtin::builtin_skeletal;
pub use parse::parse_mechanism;
pub use serialize::serialize_mechanism;
pub use validate::{validate_mechanism, ValidationIssue, ValidationReport};

use crate::error::{CombustionError, Result};
use crate::thermo::ThermoPoly;
use crate::transport::LennardJonesParams;

/// A chemical element with its standard atomic mass.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub symbol: String,
    /// g/mol.
    pub atomic_mass: f64,
}

/// Species definition: elemental composition, thermodynamic polynomial and
/// Lennard-Jones transport parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SpeciesDef {
    pub name: String,
    /// (element index, atom count), in declaration order.
    pub composition: Vec<(usize, u32)>,
    /// g/mol, derived from composition at construction.
    pub molar_mass: f64,
    pub thermo: ThermoPoly,
    pub transport: LennardJonesParams,
}

/// Modified-Arrhenius rate parameters, k = A·T^n·exp(−Ea/(R·T)).
///
/// Units follow the mechanism-file convention: A in mol-cm³-s units (the
/// exact power depends on molecularity), Ea in kcal/mol, T in K.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrheniusParams {
    pub a: f64,
    pub n: f64,
    pub ea: f64,
}

impl ArrheniusParams {
    pub const fn new(a: f64, n: f64, ea: f64) -> Self {
        ArrheniusParams { a, n, ea }
    }
}

/// Whether a reaction runs one way or its reverse rate is synthesized from
/// the equilibrium constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reversibility {
    Irreversible,
    ReverseFromEquilibrium,
}

/// An elementary reaction. Stoichiometry maps species index → coefficient;
/// `third_body` holds one efficiency per mechanism species when the reaction
/// carries a +M collision partner.
#[derive(Debug, Clone, PartialEq)]
pub struct Reaction {
    pub label: String,
    pub reactants: Vec<(usize, u32)>,
    pub products: Vec<(usize, u32)>,
    pub rate: ArrheniusParams,
    pub reversibility: Reversibility,
    pub third_body: Option<Vec<f64>>,
}

impl Reaction {
    /// Sum of reactant stoichiometric coefficients plus one for a third body:
    /// the molecularity that fixes the unit of A.
    pub fn molecularity(&self) -> u32 {
        let nu: u32 = self.reactants.iter().map(|&(_, c)| c).sum();
        nu + u32::from(self.third_body.is_some())
    }

    /// Σν_products − Σν_reactants over the stoichiometric species (the third
    /// body cancels).
    pub fn delta_nu(&self) -> i32 {
        let p: i32 = self.products.iter().map(|&(_, c)| c as i32).sum();
        let r: i32 = self.reactants.iter().map(|&(_, c)| c as i32).sum();
        p - r
    }

    /// Net stoichiometric coefficient of species `k` (products positive).
    pub fn net_coefficient(&self, k: usize) -> i32 {
        let p: i32 = self
            .products
            .iter()
            .filter(|&&(i, _)| i == k)
            .map(|&(_, c)| c as i32)
            .sum();
        let r: i32 = self
            .reactants
            .iter()
            .filter(|&&(i, _)| i == k)
            .map(|&(_, c)| c as i32)
            .sum();
        p - r
    }
}

/// A validated, immutable reaction mechanism.
///
/// Construction enforces the structural invariants (known species, element
/// balance, at least one reaction, bath gas present); a constructed value is
/// safe for shared concurrent reads.
#[derive(Debug, Clone, PartialEq)]
pub struct Mechanism {
    pub name: String,
    pub elements: Vec<Element>,
    pub species: Vec<SpeciesDef>,
    pub reactions: Vec<Reaction>,
    /// Index of the constraint (bath) species.
    pub bath_gas: usize,
    /// kg/mol per species, cached for the evaluators.
    molar_mass_kg: Vec<f64>,
}

impl Mechanism {
    /// Build and validate a mechanism. `species` entries may carry any
    /// `molar_mass`; it is recomputed from the composition here.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<Element>,
        mut species: Vec<SpeciesDef>,
        reactions: Vec<Reaction>,
        bath_gas: &str,
    ) -> Result<Self> {
        for e in &elements {
            if !(e.atomic_mass > 0.0) {
                return Err(CombustionError::InvalidMechanism(format!(
                    "element {} has non-positive atomic mass",
                    e.symbol
                )));
            }
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].iter().any(|p| p.symbol == e.symbol) {
                return Err(CombustionError::InvalidMechanism(format!(
                    "duplicate element {}",
                    e.symbol
                )));
            }
        }

        for (i, s) in species.iter().enumerate() {
            if species[..i].iter().any(|p| p.name == s.name) {
                return Err(CombustionError::InvalidMechanism(format!(
                    "duplicate species name {}",
                    s.name
                )));
            }
        }
        for s in &mut species {
            if s.composition.is_empty() || s.composition.iter().all(|&(_, c)| c == 0) {
                return Err(CombustionError::InvalidMechanism(format!(
                    "species {} has empty elemental composition",
                    s.name
                )));
            }
            let mut mass = 0.0;
            for &(ei, count) in &s.composition {
                let el = elements.get(ei).ok_or_else(|| {
                    CombustionError::InvalidMechanism(format!(
                        "species {} references unknown element index {}",
                        s.name, ei
                    ))
                })?;
                mass += count as f64 * el.atomic_mass;
            }
            s.molar_mass = mass;
        }

        if reactions.is_empty() {
            return Err(CombustionError::InvalidMechanism(
                "at least one reaction required".into(),
            ));
        }
        for r in &reactions {
            for &(si, c) in r.reactants.iter().chain(r.products.iter()) {
                if si >= species.len() {
                    return Err(CombustionError::InvalidMechanism(format!(
                        "reaction {} references unknown species index {}",
                        r.label, si
                    )));
                }
                if c == 0 {
                    return Err(CombustionError::InvalidMechanism(format!(
                        "reaction {} has a zero stoichiometric coefficient",
                        r.label
                    )));
                }
            }
            if !(r.rate.a > 0.0) || !r.rate.n.is_finite() || !r.rate.ea.is_finite() {
                return Err(CombustionError::InvalidMechanism(format!(
                    "reaction {} has invalid rate parameters",
                    r.label
                )));
            }
            if let Some(eff) = &r.third_body {
                if eff.len() != species.len() {
                    return Err(CombustionError::InvalidMechanism(format!(
                        "reaction {}: efficiency vector length {} != species count {}",
                        r.label,
                        eff.len(),
                        species.len()
                    )));
                }
                if eff.iter().any(|&e| !(e >= 0.0)) {
                    return Err(CombustionError::InvalidMechanism(format!(
                        "reaction {} has a negative third-body efficiency",
                        r.label
                    )));
                }
            }
            // Element balance, exact in integer arithmetic.
            for (ei, el) in elements.iter().enumerate() {
                let count = |side: &[(usize, u32)]| -> i64 {
                    side.iter()
                        .map(|&(si, c)| {
                            c as i64
                                * species[si]
                                    .composition
                                    .iter()
                                    .find(|&&(e, _)| e == ei)
                                    .map_or(0, |&(_, n)| n as i64)
                        })
                        .sum()
                };
                let lhs = count(&r.reactants);
                let rhs = count(&r.products);
                if lhs != rhs {
                    return Err(CombustionError::InvalidMechanism(format!(
                        "reaction {} does not balance element {} ({} vs {})",
                        r.label, el.symbol, lhs, rhs
                    )));
                }
            }
        }

        let bath_idx = species.iter().position(|s| s.name == bath_gas).ok_or_else(|| {
            CombustionError::InvalidMechanism(format!(
                "bath gas {} is not in the species list",
                bath_gas
            ))
        })?;

        let molar_mass_kg = species.iter().map(|s| s.molar_mass * 1e-3).collect();
        Ok(Mechanism {
            name: name.into(),
            elements,
            species,
            reactions,
            bath_gas: bath_idx,
            molar_mass_kg,
        })
    }

    pub fn n_species(&self) -> usize {
        self.species.len()
    }

    pub fn n_reactions(&self) -> usize {
        self.reactions.len()
    }

    pub fn species_index(&self, name: &str) -> Option<usize> {
        self.species.iter().position(|s| s.name == name)
    }

    pub fn species_name(&self, i: usize) -> &str {
        &self.species[i].name
    }

    pub fn bath_gas_name(&self) -> &str {
        &self.species[self.bath_gas].name
    }

    /// Molar masses in kg/mol, in species order.
    pub fn molar_masses_kg(&self) -> &[f64] {
        &self.molar_mass_kg
    }

    /// Molar mass of species `i` in kg/mol.
    pub fn molar_mass_kg(&self, i: usize) -> f64 {
        self.molar_mass_kg[i]
    }

    /// Atom count of element `ei` in species `si`.
    pub fn atom_count(&self, si: usize, ei: usize) -> u32 {
        self.species[si]
            .composition
            .iter()
            .find(|&&(e, _)| e == ei)
            .map_or(0, |&(_, n)| n)
    }
}
