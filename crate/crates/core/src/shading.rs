//! Checkerboard shadings and checkerboard graphs.

use std::collections::VecDeque;

use thiserror::Error;

use crate::diagram::RegionMap;
use crate::unionfind::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShadingError {
    #[error("regions {0} and {1} must be shaded differently but coincide")]
    Inconsistent(usize, usize),
    #[error("region {0} is not reachable from the unbounded region")]
    Unreachable(usize),
    #[error("shading index must be 0 or 1, got {0}")]
    BadIndex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shade {
    Shaded,
    Unshaded,
}

impl Shade {
    pub fn opposite(self) -> Shade {
        match self {
            Shade::Shaded => Shade::Unshaded,
            Shade::Unshaded => Shade::Shaded,
        }
    }
}

/// Which pair of opposite quadrants at a crossing carries a given shade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadrantPair {
    /// Quadrants 0 and 2.
    Even,
    /// Quadrants 1 and 3.
    Odd,
}

impl QuadrantPair {
    pub fn quadrants(self) -> [usize; 2] {
        match self {
            QuadrantPair::Even => [0, 2],
            QuadrantPair::Odd => [1, 3],
        }
    }

    pub fn other(self) -> QuadrantPair {
        match self {
            QuadrantPair::Even => QuadrantPair::Odd,
            QuadrantPair::Odd => QuadrantPair::Even,
        }
    }
}

/// A two-colouring of the regions with neighbours across any arc coloured
/// differently. Index 0 leaves the unbounded region unshaded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shading {
    index: usize,
    shade: Vec<Shade>,
}

impl Shading {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn shade(&self, region: usize) -> Shade {
        self.shade[region]
    }

    pub fn is_shaded(&self, region: usize) -> bool {
        self.shade[region] == Shade::Shaded
    }

    pub fn region_count(&self) -> usize {
        self.shade.len()
    }

    pub fn regions_with(&self, shade: Shade) -> Vec<usize> {
        (0..self.shade.len()).filter(|&r| self.shade[r] == shade).collect()
    }

    pub fn opposite(&self) -> Shading {
        Shading { index: 1 - self.index, shade: self.shade.iter().map(|s| s.opposite()).collect() }
    }

    /// The shaded pair of quadrants at crossing `c`.
    pub fn shaded_pair(&self, rm: &RegionMap, c: usize) -> QuadrantPair {
        if self.is_shaded(rm.quadrant(c, 0)) {
            QuadrantPair::Even
        } else {
            QuadrantPair::Odd
        }
    }
}

/// Both checkerboard shadings, index 0 first.
pub fn checkerboard(rm: &RegionMap) -> Result<(Shading, Shading), ShadingError> {
    let n = rm.region_count();
    let mut differ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut link = |a: usize, b: usize| -> Result<(), ShadingError> {
        if a == b {
            return Err(ShadingError::Inconsistent(a, b));
        }
        differ[a].push(b);
        differ[b].push(a);
        Ok(())
    };
    for c in 0..rm.crossing_count() {
        for q in 0..4 {
            link(rm.quadrant(c, q), rm.quadrant(c, q + 1))?;
        }
    }
    for &(inside, outside) in rm.circle_regions() {
        link(inside, outside)?;
    }

    let mut shade: Vec<Option<Shade>> = vec![None; n];
    let root = rm.unbounded_region();
    shade[root] = Some(Shade::Unshaded);
    let mut queue = VecDeque::from([root]);
    while let Some(r) = queue.pop_front() {
        let want = shade[r].expect("queued regions are coloured").opposite();
        for &s in &differ[r] {
            match shade[s] {
                None => {
                    shade[s] = Some(want);
                    queue.push_back(s);
                }
                Some(have) if have != want => return Err(ShadingError::Inconsistent(r, s)),
                Some(_) => {}
            }
        }
    }
    let shade = shade
        .into_iter()
        .enumerate()
        .map(|(r, s)| s.ok_or(ShadingError::Unreachable(r)))
        .collect::<Result<Vec<_>, _>>()?;
    let first = Shading { index: 0, shade };
    let second = first.opposite();
    Ok((first, second))
}

/// Picks shading 0 or 1.
pub fn select_shading(rm: &RegionMap, index: usize) -> Result<Shading, ShadingError> {
    let (a, b) = checkerboard(rm)?;
    match index {
        0 => Ok(a),
        1 => Ok(b),
        k => Err(ShadingError::BadIndex(k)),
    }
}

/// Graph on the regions of one shade, with one edge per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckerboardGraph {
    pub vertices: Vec<usize>,
    /// Indexed by crossing; loops appear as `(r, r)`.
    pub edges: Vec<(usize, usize)>,
    pub component_count: usize,
}

fn graph_for(rm: &RegionMap, s: &Shading, shade: Shade) -> CheckerboardGraph {
    let vertices = s.regions_with(shade);
    let mut position = vec![usize::MAX; rm.region_count()];
    for (i, &r) in vertices.iter().enumerate() {
        position[r] = i;
    }
    let mut uf = UnionFind::new(vertices.len());
    let edges: Vec<(usize, usize)> = (0..rm.crossing_count())
        .map(|c| {
            let pair = match shade {
                Shade::Shaded => s.shaded_pair(rm, c),
                Shade::Unshaded => s.shaded_pair(rm, c).other(),
            };
            let [a, b] = pair.quadrants().map(|q| rm.quadrant(c, q));
            uf.union(position[a], position[b]);
            (a, b)
        })
        .collect();
    CheckerboardGraph { vertices, edges, component_count: uf.count() }
}

/// `(shaded graph, unshaded graph)`.
pub fn checkerboard_graphs(rm: &RegionMap, s: &Shading) -> (CheckerboardGraph, CheckerboardGraph) {
    (graph_for(rm, s, Shade::Shaded), graph_for(rm, s, Shade::Unshaded))
}
