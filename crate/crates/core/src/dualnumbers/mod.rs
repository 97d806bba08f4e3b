//! The homotopy category of perfect complexes over the dual numbers `Λ = k[x]/x²`,
//! viewed as an orbit category under the shift.

mod bicomplex;
mod complex;
mod lambda;
mod morphism;
mod skeleton;
mod tables;
mod trace;

pub use bicomplex::{build_bicomplex_totalization, chi, hh_closed_form, iota_pi_maps, HhClosedForm, HhGen, IotaPi, Totalization};
pub use complex::{ChainMap, HomSpace, LamComplex};
pub use lambda::{Bimod, BimodMatrix, Lam, LamMatrix};
pub use morphism::{compose, hom_basis, oracle_compose_agrees, oracle_hom, DualNumMorphism, HomGen, IndecObj, OracleHom};

pub use skeleton::{
    ab_component_model, act, graded_center, t_r_model, window_objects, xi_model, AbCoord, AbModel, CenterCoord, CenterModel, DualWindow,
};
pub use tables::{
    chi_matrix, cy_pairing, hk_cell, hk_tables, intersect_cells, k_rs_cell, k_rs_tables, t_r_certified, tilde_z0, CellKind, HkCell, HkKind,
    IdealCell, KrsCell,
};
pub use trace::{ab0_decomposition, calabi_yau_trace, hattori_stallings, hs_trace, phi_map, trace_matrix, Ab0Decomposition};

#[cfg(test)]
mod tests;
