//! Dehn colorings of link diagrams and the invariant factors of adjusted
//! Goeritz matrices.
//!
//! The pipeline runs diagram code → complementary regions → checkerboard
//! shading → adjusted Goeritz matrix → Smith normal form → coloring group
//! structure. Enumeration oracles in [`coloring`] count colorings directly
//! from the crossing relations so the structure can be checked.

pub mod coloring;
pub mod corpus;
pub mod diagram;
pub mod goeritz;
pub mod intlattice;
pub mod planar;
pub mod realize;
pub mod shading;
mod unionfind;

use thiserror::Error;

pub use coloring::{
    coloring_equivalent, dehn_count_bruteforce, dehn_count_linear, dehn_structure, fox_count_bruteforce,
    structure_count, ColoringError, ColoringKind, ColoringReport,
};
pub use diagram::{parse_diagram, trace_regions, underlying_components, Diagram, DiagramError, RegionMap};
pub use goeritz::{adjusted_goeritz, goeritz_index, goeritz_matrix, GoeritzData};
pub use intlattice::{
    cokernel_descriptor, elementary_gcds, invariant_factors, kernel_count_mod, smith_normal_form, GroupDescriptor,
    IntMatrix, LatticeError, SnfResult,
};
pub use realize::{realize, verify_realization, Realization, RealizationSpec};
pub use shading::{checkerboard, checkerboard_graphs, select_shading, CheckerboardGraph, Shading, ShadingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Shading(#[from] ShadingError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A diagram with its regions and one chosen shading.
#[derive(Debug, Clone)]
pub struct ShadedDiagram {
    pub diagram: Diagram,
    pub regions: RegionMap,
    pub shading: Shading,
}

impl ShadedDiagram {
    pub fn new(diagram: Diagram, shading_index: usize) -> Result<Self, Error> {
        let regions = trace_regions(&diagram)?;
        let shading = select_shading(&regions, shading_index)?;
        Ok(ShadedDiagram { diagram, regions, shading })
    }

    pub fn parse(text: &str, shading_index: usize) -> Result<Self, Error> {
        Self::new(parse_diagram(text)?, shading_index)
    }

    pub fn goeritz(&self) -> GoeritzData {
        goeritz_matrix(&self.regions, &self.shading)
    }

    pub fn report(&self) -> ColoringReport {
        dehn_structure(&self.regions, &self.shading)
    }
}
