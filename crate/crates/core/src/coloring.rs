//! Dehn and Fox colorings: structure from invariant factors, and direct
//! counts over `Z/m` by enumeration.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Diagram, RegionMap};
use crate::goeritz::{goeritz_matrix, GoeritzData};
use crate::intlattice::{invariant_factors, kernel_count_mod, GroupDescriptor, IntMatrix};
use crate::shading::Shading;
use crate::unionfind::UnionFind;

/// Default largest region (or arc) count the enumeration path accepts.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("{what} count {count} exceeds the enumeration cap of {cap}")]
    CapExceeded { what: &'static str, count: usize, cap: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
}

/// The relation `d(q0) + d(q1) = d(q2) + d(q3)` at one crossing.
///
/// `{q0, q1}` are the quadrants on the slot-1 side of the under-strand and
/// so are neighbours across the over-strand; likewise `{q2, q3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingRelation {
    pub regions: [usize; 4],
}

impl CrossingRelation {
    /// `(region, coefficient)` with repeated regions merged and zero
    /// coefficients dropped.
    pub fn coefficients(&self) -> Vec<(usize, i64)> {
        let [a, b, c, d] = self.regions;
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (r, k) in [(a, 1), (b, 1), (c, -1), (d, -1)] {
            *acc.entry(r).or_default() += k;
        }
        acc.into_iter().filter(|&(_, k)| k != 0).collect()
    }

    pub fn holds(&self, colors: &[u64], m: u64) -> bool {
        let [a, b, c, d] = self.regions.map(|r| colors[r] % m);
        (a + b) % m == (c + d) % m
    }
}

pub fn crossing_relations(rm: &RegionMap) -> Vec<CrossingRelation> {
    (0..rm.crossing_count()).map(|c| CrossingRelation { regions: rm.quadrants(c) }).collect()
}

/// Coefficients of the crossing relations: one row per region, one column
/// per crossing. Dehn colorings over `A` are the `x` with `x M = 0`.
pub fn relation_matrix(rm: &RegionMap) -> IntMatrix {
    let mut m = IntMatrix::zeros(rm.region_count(), rm.crossing_count());
    for (c, rel) in crossing_relations(rm).iter().enumerate() {
        for (r, k) in rel.coefficients() {
            m[(r, c)] += k;
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringKind {
    Dehn,
    Fox,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    pub phi: Vec<BigUint>,
    /// `A x prod A(phi_j)`.
    pub dehn: GroupDescriptor,
    /// `prod A(phi_j)`.
    pub fox: GroupDescriptor,
}

impl ColoringReport {
    pub fn from_factors(phi: Vec<BigUint>) -> Self {
        ColoringReport {
            dehn: GroupDescriptor::from_factors(&phi, true),
            fox: GroupDescriptor::from_factors(&phi, false),
            phi,
        }
    }
}

/// Dehn and Fox group structure from the invariant factors of the adjusted
/// Goeritz matrix of `(rm, s)`.
pub fn dehn_structure(rm: &RegionMap, s: &Shading) -> ColoringReport {
    ColoringReport::from_factors(invariant_factors(&goeritz_matrix(rm, s).adjusted))
}

/// Group order at `A = Z/m`: `m * prod gcd(phi_j, m)` for Dehn colorings,
/// `prod gcd(phi_j, m)` for Fox colorings, with `gcd(0, m) = m`.
pub fn structure_count(report: &ColoringReport, m: &BigUint, which: ColoringKind) -> BigUint {
    let product: BigUint = report.phi.iter().map(|f| f.gcd(m)).product();
    match which {
        ColoringKind::Dehn => product * m,
        ColoringKind::Fox => product,
    }
}

fn check_modulus(m: u64) -> Result<(), ColoringError> {
    if m < 2 {
        Err(ColoringError::BadModulus(m))
    } else {
        Ok(())
    }
}

/// Counts assignments `vars -> Z/m` satisfying every linear relation
/// `sum k_i x_i = 0 (mod m)`. Each relation is tested as soon as its last
/// variable is set.
fn count_solutions(var_count: usize, relations: &[Vec<(usize, i64)>], m: u64) -> u64 {
    // Visit variables in order of first appearance so relations close early.
    let mut order: Vec<usize> = Vec::with_capacity(var_count);
    let mut rank = vec![usize::MAX; var_count];
    for rel in relations {
        for &(v, _) in rel {
            if rank[v] == usize::MAX {
                rank[v] = order.len();
                order.push(v);
            }
        }
    }
    let free = var_count - order.len();

    let mi = m as i64;
    let mut closing: Vec<Vec<Vec<(usize, u64)>>> = vec![Vec::new(); order.len()];
    for rel in relations {
        let terms: Vec<(usize, u64)> =
            rel.iter().map(|&(v, k)| (rank[v], k.rem_euclid(mi) as u64)).filter(|&(_, k)| k != 0).collect();
        if let Some(last) = terms.iter().map(|&(p, _)| p).max() {
            closing[last].push(terms);
        }
    }

    fn walk(pos: usize, values: &mut Vec<u64>, closing: &[Vec<Vec<(usize, u64)>>], m: u64) -> u64 {
        if pos == closing.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..m {
            values[pos] = v;
            let ok = closing[pos].iter().all(|terms| terms.iter().map(|&(p, k)| k * values[p]).sum::<u64>() % m == 0);
            if ok {
                total += walk(pos + 1, values, closing, m);
            }
        }
        total
    }

    let mut values = vec![0u64; order.len()];
    walk(0, &mut values, &closing, m) * m.pow(free as u32)
}

/// Number of Dehn colorings with values in `Z/m`, by enumerating region
/// assignments. Never looks at the Goeritz matrix.
pub fn dehn_count_bruteforce(rm: &RegionMap, m: u64, cap: usize) -> Result<BigUint, ColoringError> {
    check_modulus(m)?;
    if rm.region_count() > cap {
        return Err(ColoringError::CapExceeded { what: "region", count: rm.region_count(), cap });
    }
    let relations: Vec<Vec<(usize, i64)>> = crossing_relations(rm).iter().map(CrossingRelation::coefficients).collect();
    Ok(BigUint::from(count_solutions(rm.region_count(), &relations, m)))
}

/// Number of Dehn colorings with values in `Z/m`, as the kernel size of the
/// crossing relation matrix. No size limit.
pub fn dehn_count_linear(rm: &RegionMap, m: u64) -> Result<BigUint, ColoringError> {
    check_modulus(m)?;
    Ok(kernel_count_mod(&relation_matrix(rm), &BigUint::from(m)))
}

/// Arcs of a diagram: maximal over-strand pieces, broken at under-crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcMap {
    pub arc_count: usize,
    /// Per crossing: the over arc.
    pub over: Vec<usize>,
    /// Per crossing: the arcs at slots 0 and 2.
    pub under: Vec<[usize; 2]>,
}

pub fn arcs(d: &Diagram) -> ArcMap {
    let n = d.crossing_count();
    let mut uf = UnionFind::new(4 * n);
    for (c, ports) in d.partners().iter().enumerate() {
        for (t, p) in ports.iter().enumerate() {
            uf.union(4 * c + t, 4 * p.crossing + p.slot);
        }
        uf.union(4 * c + 1, 4 * c + 3);
    }
    let mut id = vec![usize::MAX; 4 * n];
    let mut next = 0;
    for port in 0..4 * n {
        let root = uf.find(port);
        if id[root] == usize::MAX {
            id[root] = next;
            next += 1;
        }
        id[port] = id[root];
    }
    ArcMap {
        arc_count: next + d.free_circles(),
        over: (0..n).map(|c| id[4 * c + 1]).collect(),
        under: (0..n).map(|c| [id[4 * c], id[4 * c + 2]]).collect(),
    }
}

/// Number of Fox colorings with values in `Z/m`: arc colourings with
/// `2 * over = under_0 + under_2` at every crossing.
pub fn fox_count_bruteforce(d: &Diagram, m: u64, cap: usize) -> Result<BigUint, ColoringError> {
    check_modulus(m)?;
    let a = arcs(d);
    if a.arc_count > cap {
        return Err(ColoringError::CapExceeded { what: "arc", count: a.arc_count, cap });
    }
    let relations: Vec<Vec<(usize, i64)>> = (0..d.crossing_count())
        .map(|c| {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            *acc.entry(a.over[c]).or_default() += 2;
            *acc.entry(a.under[c][0]).or_default() -= 1;
            *acc.entry(a.under[c][1]).or_default() -= 1;
            acc.into_iter().filter(|&(_, k)| k != 0).collect()
        })
        .collect();
    Ok(BigUint::from(count_solutions(a.arc_count, &relations, m)))
}

/// Invariant factors with every 1 removed, sorted.
fn essential_factors(phi: &[BigUint]) -> Vec<BigUint> {
    let mut v: Vec<BigUint> = phi.iter().filter(|f| !f.is_one()).cloned().collect();
    v.sort();
    v
}

/// True when the two factor lists agree after deleting all entries equal
/// to 1.
pub fn factors_equivalent(a: &[BigUint], b: &[BigUint]) -> bool {
    essential_factors(a) == essential_factors(b)
}

/// Whether two shaded diagrams have isomorphic Dehn coloring groups for
/// every coefficient group.
pub fn coloring_equivalent(g1: &GoeritzData, g2: &GoeritzData) -> bool {
    factors_equivalent(&invariant_factors(&g1.adjusted), &invariant_factors(&g2.adjusted))
}
