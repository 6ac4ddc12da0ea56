//! Diagrams of connected sums of `(2, k)` torus links with prescribed
//! adjusted Goeritz invariant factors.
//!
//! The diagram is built from its unshaded checkerboard graph: a hub vertex
//! (the outer region) joined to one vertex per summand. A summand with
//! factor `k >= 1` is `k` parallel edges of sign `+1`, a twist region with
//! `k` crossings. A summand with factor 0 is a canceling pair of edges of
//! opposite sign, so it stays attached to the rest of the projection.

use num_bigint::BigUint;

use crate::diagram::{trace_regions, Diagram};
use crate::goeritz::{goeritz_matrix, GoeritzData};
use crate::intlattice::{invariant_factors, IntMatrix};
use crate::planar::{Edge, PlaneGraph};
use crate::shading::{checkerboard, Shade};

/// The factors `phi_1, ..., phi_(n-1)`; the leading `phi_0 = 0` is implied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RealizationSpec {
    pub phis: Vec<u32>,
}

impl RealizationSpec {
    pub fn new(phis: Vec<u32>) -> Self {
        RealizationSpec { phis }
    }

    /// Parses a comma-separated list such as `0,3,3,1`. The empty string is
    /// the empty spec.
    pub fn parse(text: &str) -> Result<Self, std::num::ParseIntError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::default());
        }
        let phis = text.split(',').map(|t| t.trim().parse::<u32>()).collect::<Result<_, _>>()?;
        Ok(RealizationSpec { phis })
    }

    /// `diag(0, phi_1, ..., phi_(n-1))`.
    pub fn target_matrix(&self) -> IntMatrix {
        let mut entries = vec![0u32];
        entries.extend(&self.phis);
        IntMatrix::diagonal(&entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub diagram: Diagram,
    /// Index of the shading whose unshaded regions are the summand regions
    /// and the outer region.
    pub shading: usize,
    /// Rows `0 .. n-1` are the summand regions in order, the last row is
    /// the outer region.
    pub goeritz: GoeritzData,
}

/// Unshaded checkerboard graph of the realization: vertex 0 is the hub,
/// vertex `j` the region of summand `j`.
pub fn realization_graph(spec: &RealizationSpec) -> PlaneGraph {
    if spec.phis.is_empty() {
        return PlaneGraph::single_vertex();
    }
    let mut edges = Vec::new();
    let mut rotation = vec![Vec::new(); spec.phis.len() + 1];
    for (j, &phi) in spec.phis.iter().enumerate() {
        let signs: Vec<i32> = if phi == 0 { vec![1, -1] } else { vec![1; phi as usize] };
        let first = edges.len();
        for s in signs {
            edges.push(Edge { tail: 0, head: j + 1, sign: s });
        }
        let block: Vec<usize> = (first..edges.len()).collect();
        rotation[0].extend(block.iter().map(|&e| 2 * e));
        rotation[j + 1].extend(block.iter().rev().map(|&e| 2 * e + 1));
    }
    PlaneGraph::from_parts(edges, rotation).expect("star rotation system is valid")
}

pub fn realize(spec: &RealizationSpec) -> Realization {
    let graph = realization_graph(spec);
    let medial = graph.medial();
    let rm = trace_regions(&medial.diagram).expect("medial diagrams are planar");
    let (s0, s1) = checkerboard(&rm).expect("planar diagrams are checkerboard colourable");
    let hub = medial.vertex_region(&rm, 0);
    let shading = if s0.shade(hub) == Shade::Unshaded { s0 } else { s1 };

    let mut order: Vec<usize> = (1..graph.vertex_count()).map(|v| medial.vertex_region(&rm, v)).collect();
    order.push(hub);
    let goeritz = goeritz_matrix(&rm, &shading)
        .with_region_order(&order)
        .expect("graph vertices are exactly the unshaded regions");
    Realization { diagram: medial.diagram, shading: shading.index(), goeritz }
}

/// Invariant factors of `diag(0, phi_1, ..., phi_(n-1))`.
pub fn normalized_factors(spec: &RealizationSpec) -> Vec<BigUint> {
    invariant_factors(&spec.target_matrix())
}

/// Checks that the realized adjusted Goeritz matrix has the same invariant
/// factors as `diag(0, phi_1, ..., phi_(n-1))`.
pub fn verify_realization(spec: &RealizationSpec) -> bool {
    let r = realize(spec);
    invariant_factors(&r.goeritz.adjusted) == normalized_factors(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn u(vals: &[u64]) -> Vec<BigUint> {
        vals.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn golden_connected_sum() {
        let r = realize(&RealizationSpec::new(vec![0, 3, 3, 1]));
        let expected =
            m(&[&[0, 0, 0, 0, 0], &[0, 3, 0, 0, -3], &[0, 0, 3, 0, -3], &[0, 0, 0, 1, -1], &[0, -3, -3, -1, 7]]);
        assert_eq!(r.goeritz.adjusted, expected);
        assert_eq!(r.goeritz.beta_s, 1);
        assert_eq!(r.diagram.crossing_count(), 9);
        assert_eq!(invariant_factors(&r.goeritz.adjusted), u(&[0, 0, 3, 3, 1]));
    }

    #[test]
    fn empty_spec_is_a_circle() {
        let r = realize(&RealizationSpec::default());
        assert_eq!(r.diagram.to_string(), "O 1");
        assert_eq!(r.goeritz.adjusted, IntMatrix::zeros(1, 1));
        assert_eq!(r.shading, 0);
    }

    #[test]
    fn hopf_summand() {
        let r = realize(&RealizationSpec::new(vec![2]));
        assert_eq!(r.diagram.crossing_count(), 2);
        assert_eq!(r.goeritz.adjusted, m(&[&[2, -2], &[-2, 2]]));
    }

    #[test]
    fn verification_examples() {
        for (spec, phi) in
            [(vec![0, 3, 3, 1], vec![0, 0, 3, 3, 1]), (vec![1], vec![0, 1]), (vec![6, 4], vec![0, 12, 2])]
        {
            let spec = RealizationSpec::new(spec);
            assert!(verify_realization(&spec));
            assert_eq!(normalized_factors(&spec), u(&phi));
        }
    }

    #[test]
    fn outer_region_is_unbounded() {
        let r = realize(&RealizationSpec::new(vec![0, 2, 5]));
        let rm = trace_regions(&r.diagram).unwrap();
        assert_eq!(*r.goeritz.unshaded_regions.last().unwrap(), rm.unbounded_region());
        assert_eq!(r.shading, 0);
    }

    #[test]
    fn parse_spec() {
        assert_eq!(RealizationSpec::parse("0, 3,3,1").unwrap().phis, vec![0, 3, 3, 1]);
        assert!(RealizationSpec::parse("").unwrap().phis.is_empty());
        assert!(RealizationSpec::parse("1,-2").is_err());
    }
}
