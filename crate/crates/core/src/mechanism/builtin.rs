//! Built-in skeletal H2/O2 mechanism: 14 irreversible/equilibrium-reversed
//! reactions over H2, O2, H2O, H, O, OH, HO2, H2O2 and bath gas N2.
//!
//! Rate data follow Kreutz & Law's skeletal scheme extended with
//! recombination steps from Ó Conaire et al.; the H+O2+M low-pressure limit
//! is the Mueller et al. value 6.17e19·T^−1.42 (M = N2). Thermodynamic
//! polynomials and Lennard-Jones parameters are taken from the public
//! GRI-Mech 3.0 thermo/transport tables.

use super::{ArrheniusParams, Element, Mechanism, Reaction, Reversibility, SpeciesDef};
use crate::thermo::ThermoPoly;
use crate::transport::LennardJonesParams;

// Species order used throughout the built-in tables.
const H2: usize = 0;
const O2: usize = 1;
const H2O: usize = 2;
const H: usize = 3;
const O: usize = 4;
const OH: usize = 5;
const HO2: usize = 6;
const H2O2: usize = 7;
const N2: usize = 8;

struct SpeciesRow {
    name: &'static str,
    composition: &'static [(usize, u32)],
    t_range: [f64; 3],
    low: [f64; 7],
    high: [f64; 7],
    lj: [f64; 3],
}

// Element indices: H=0, O=1, N=2.
const SPECIES: [SpeciesRow; 9] = [
    SpeciesRow {
        name: "H2",
        composition: &[(0, 2)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            2.34433112e+00,
            7.98052075e-03,
            -1.94781510e-05,
            2.01572094e-08,
            -7.37611761e-12,
            -9.17935173e+02,
            6.83010238e-01,
        ],
        high: [
            3.33727920e+00,
            -4.94024731e-05,
            4.99456778e-07,
            -1.79566394e-10,
            2.00255376e-14,
            -9.50158922e+02,
            -3.20502331e+00,
        ],
        lj: [2.920, 38.000, 0.0],
    },
    SpeciesRow {
        name: "O2",
        composition: &[(1, 2)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            3.78245636e+00,
            -2.99673416e-03,
            9.84730201e-06,
            -9.68129509e-09,
            3.24372837e-12,
            -1.06394356e+03,
            3.65767573e+00,
        ],
        high: [
            3.28253784e+00,
            1.48308754e-03,
            -7.57966669e-07,
            2.09470555e-10,
            -2.16717794e-14,
            -1.08845772e+03,
            5.45323129e+00,
        ],
        lj: [3.458, 107.400, 0.0],
    },
    SpeciesRow {
        name: "H2O",
        composition: &[(0, 2), (1, 1)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            4.19864056e+00,
            -2.03643410e-03,
            6.52040211e-06,
            -5.48797062e-09,
            1.77197817e-12,
            -3.02937267e+04,
            -8.49032208e-01,
        ],
        high: [
            3.03399249e+00,
            2.17691804e-03,
            -1.64072518e-07,
            -9.70419870e-11,
            1.68200992e-14,
            -3.00042971e+04,
            4.96677010e+00,
        ],
        lj: [2.605, 572.400, 1.844],
    },
    SpeciesRow {
        name: "H",
        composition: &[(0, 1)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            2.50000000e+00,
            7.05332819e-13,
            -1.99591964e-15,
            2.30081632e-18,
            -9.27732332e-22,
            2.54736599e+04,
            -4.46682853e-01,
        ],
        high: [
            2.50000001e+00,
            -2.30842973e-11,
            1.61561948e-14,
            -4.73515235e-18,
            4.98197357e-22,
            2.54736599e+04,
            -4.46682914e-01,
        ],
        lj: [2.050, 145.000, 0.0],
    },
    SpeciesRow {
        name: "O",
        composition: &[(1, 1)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            3.16826710e+00,
            -3.27931884e-03,
            6.64306396e-06,
            -6.12806624e-09,
            2.11265971e-12,
            2.91222592e+04,
            2.05193346e+00,
        ],
        high: [
            2.56942078e+00,
            -8.59741137e-05,
            4.19484589e-08,
            -1.00177799e-11,
            1.22833691e-15,
            2.92175791e+04,
            4.78433864e+00,
        ],
        lj: [2.750, 80.000, 0.0],
    },
    SpeciesRow {
        name: "OH",
        composition: &[(1, 1), (0, 1)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            3.99201543e+00,
            -2.40131752e-03,
            4.61793841e-06,
            -3.88113333e-09,
            1.36411470e-12,
            3.61508056e+03,
            -1.03925458e-01,
        ],
        high: [
            3.09288767e+00,
            5.48429716e-04,
            1.26505228e-07,
            -8.79461556e-11,
            1.17412376e-14,
            3.85865700e+03,
            4.47669610e+00,
        ],
        lj: [2.750, 80.000, 0.0],
    },
    SpeciesRow {
        name: "HO2",
        composition: &[(0, 1), (1, 2)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            4.30179801e+00,
            -4.74912051e-03,
            2.11582891e-05,
            -2.42763894e-08,
            9.29225124e-12,
            2.94808040e+02,
            3.71666245e+00,
        ],
        high: [
            4.01721090e+00,
            2.23982013e-03,
            -6.33658150e-07,
            1.14246370e-10,
            -1.07908535e-14,
            1.11856713e+02,
            3.78510215e+00,
        ],
        lj: [3.458, 107.400, 0.0],
    },
    SpeciesRow {
        name: "H2O2",
        composition: &[(0, 2), (1, 2)],
        t_range: [200.0, 1000.0, 3500.0],
        low: [
            4.27611269e+00,
            -5.42822417e-04,
            1.67335701e-05,
            -2.15770813e-08,
            8.62454363e-12,
            -1.77025821e+04,
            3.43505074e+00,
        ],
        high: [
            4.16500285e+00,
            4.90831694e-03,
            -1.90139225e-06,
            3.71185986e-10,
            -2.87908305e-14,
            -1.78617877e+04,
            2.91615662e+00,
        ],
        lj: [3.458, 107.400, 0.0],
    },
    SpeciesRow {
        name: "N2",
        composition: &[(2, 2)],
        t_range: [300.0, 1000.0, 5000.0],
        low: [
            3.29867700e+00,
            1.40824040e-03,
            -3.96322200e-06,
            5.64151500e-09,
            -2.44485400e-12,
            -1.02089990e+03,
            3.95037200e+00,
        ],
        high: [
            2.92664000e+00,
            1.48797680e-03,
            -5.68476000e-07,
            1.00970380e-10,
            -6.75335100e-15,
            -9.22797700e+02,
            5.98052800e+00,
        ],
        lj: [3.621, 97.530, 0.0],
    },
];

/// Third-body efficiencies in species order (H2, O2, H2O, H, O, OH, HO2,
/// H2O2, N2); unlisted species, including the bath gas, carry 1.0.
const EFF_R5: [f64; 9] = [2.5, 1.0, 12.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0];
const EFF_R6: [f64; 9] = [2.5, 1.0, 12.0, 0.83, 0.83, 1.0, 1.0, 1.0, 1.0];
const EFF_R7: [f64; 9] = [2.5, 1.0, 12.0, 0.75, 0.75, 1.0, 1.0, 1.0, 1.0];
const EFF_R8: [f64; 9] = [0.73, 1.0, 12.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0];
const EFF_R9: [f64; 9] = [2.5, 1.0, 12.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0];
const EFF_R15: [f64; 9] = [2.5, 1.0, 12.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0];

/// The built-in skeletal hydrogen oxidation scheme (14 reactions, 8 reactive
/// species plus N2).
pub fn builtin_skeletal() -> Mechanism {
    let elements = vec![
        Element {
            symbol: "H".into(),
            atomic_mass: 1.00794,
        },
        Element {
            symbol: "O".into(),
            atomic_mass: 15.9994,
        },
        Element {
            symbol: "N".into(),
            atomic_mass: 14.0067,
        },
    ];

    let species = SPECIES
        .iter()
        .map(|row| SpeciesDef {
            name: row.name.into(),
            composition: row.composition.to_vec(),
            molar_mass: 0.0, // derived by Mechanism::new
            thermo: ThermoPoly::new(row.t_range[0], row.t_range[1], row.t_range[2], row.low, row.high)
                .expect("built-in thermo range"),
            transport: LennardJonesParams {
                sigma: row.lj[0],
                eps_over_k: row.lj[1],
                dipole: row.lj[2],
            },
        })
        .collect();

    use Reversibility::{Irreversible, ReverseFromEquilibrium};
    let rxn = |label: &str,
               reactants: Vec<(usize, u32)>,
               products: Vec<(usize, u32)>,
               a: f64,
               n: f64,
               ea: f64,
               rev: Reversibility,
               eff: Option<[f64; 9]>| Reaction {
        label: label.into(),
        reactants,
        products,
        rate: ArrheniusParams::new(a, n, ea),
        reversibility: rev,
        third_body: eff.map(|e| e.to_vec()),
    };

    let reactions = vec![
        rxn("R1", vec![(H, 1), (O2, 1)], vec![(OH, 1), (O, 1)], 1.91e14, 0.0, 16.44, Irreversible, None),
        rxn("R2", vec![(H2, 1), (O, 1)], vec![(H, 1), (OH, 1)], 5.08e4, 2.67, 6.292, Irreversible, None),
        rxn("R3", vec![(H2, 1), (OH, 1)], vec![(H, 1), (H2O, 1)], 2.16e8, 1.51, 3.43, Irreversible, None),
        rxn("R5", vec![(H2, 1)], vec![(H, 2)], 4.57e19, -1.4, 105.1, ReverseFromEquilibrium, Some(EFF_R5)),
        rxn("R6", vec![(O, 2)], vec![(O2, 1)], 6.17e15, -0.5, 0.0, ReverseFromEquilibrium, Some(EFF_R6)),
        rxn("R7", vec![(H, 1), (O, 1)], vec![(OH, 1)], 4.72e18, -1.0, 0.0, Irreversible, Some(EFF_R7)),
        rxn("R8", vec![(H, 1), (OH, 1)], vec![(H2O, 1)], 4.5e22, -2.0, 0.0, Irreversible, Some(EFF_R8)),
        rxn("R9", vec![(H, 1), (O2, 1)], vec![(HO2, 1)], 6.17e19, -1.42, 0.0, Irreversible, Some(EFF_R9)),
        rxn("R10", vec![(H, 1), (HO2, 1)], vec![(H2, 1), (O2, 1)], 1.66e13, 0.0, 0.82, Irreversible, None),
        rxn("R-10", vec![(H2, 1), (O2, 1)], vec![(H, 1), (HO2, 1)], 3.68e13, 0.203, 54.46, Irreversible, None),
        rxn("R11", vec![(H, 1), (HO2, 1)], vec![(OH, 2)], 1.69e14, 0.0, 0.87, Irreversible, None),
        rxn("R13", vec![(OH, 1), (HO2, 1)], vec![(H2O, 1), (O2, 1)], 2.89e13, 0.0, -0.5, Irreversible, None),
        rxn("R15", vec![(H2O2, 1)], vec![(OH, 2)], 1.2e17, 0.0, 45.5, Irreversible, Some(EFF_R15)),
        rxn("R-17", vec![(H2, 1), (HO2, 1)], vec![(H, 1), (H2O2, 1)], 3.42e12, 0.202, 27.12, Irreversible, None),
    ];

    Mechanism::new("skeletal-h2-o2", elements, species, reactions, "N2")
        .expect("built-in mechanism is valid")
}

#[allow(dead_code)]
const _: () = {
    // Keep the index constants honest if the table is ever reordered.
    assert!(H2 == 0 && O2 == 1 && H2O == 2 && H == 3 && O == 4);
    assert!(OH == 5 && HO2 == 6 && H2O2 == 7 && N2 == 8);
};
