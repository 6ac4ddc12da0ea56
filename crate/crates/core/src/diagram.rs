//! Link diagrams as planar-diagram codes, and their complementary regions.
//!
//! A crossing lists its four incident edge labels in counterclockwise
//! order. Slots 0 and 2 carry the under-strand, slots 1 and 3 the
//! over-strand. Quadrant `q` of a crossing is the sector between slots `q`
//! and `q + 1 (mod 4)`.
//!
//! Text format: items separated by `;` or newlines, `X(a,b,c,d)` for a
//! crossing and `O k` for `k` crossing-free circles. `#` comments run to
//! the end of the line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::unionfind::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed item {item:?}: {reason}")]
    Malformed { item: String, reason: String },
    #[error("edge label {label} occurs {count} time(s); every label must occur exactly twice")]
    LabelCount { label: u64, count: usize },
    #[error("diagram has no crossings and no circles")]
    Empty,
    #[error("more than one circle item")]
    DuplicateCircles,
    #[error(
        "rotation data is not planar: component with {crossings} crossings traces {faces} faces, expected {expected}"
    )]
    NonPlanar { crossings: usize, faces: usize, expected: usize },
}

/// One crossing: edge labels in counterclockwise order, under-strand on
/// slots 0 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub slots: [u64; 4],
}

impl Crossing {
    pub const fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        Crossing { slots: [a, b, c, d] }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.slots;
        write!(f, "X({a},{b},{c},{d})")
    }
}

/// A position on a crossing: `(crossing index, slot)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Port {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_circles: usize,
}

impl Diagram {
    pub fn new(crossings: Vec<Crossing>, free_circles: usize) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_circles == 0 {
            return Err(DiagramError::Empty);
        }
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for x in &crossings {
            for &l in &x.slots {
                if l == 0 {
                    return Err(DiagramError::Malformed {
                        item: x.to_string(),
                        reason: "edge labels must be positive".into(),
                    });
                }
                *counts.entry(l).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(DiagramError::LabelCount { label, count });
        }
        Ok(Diagram { crossings, free_circles })
    }

    /// A diagram of `k` disjoint crossing-free circles.
    pub fn circles(k: usize) -> Result<Self, DiagramError> {
        Self::new(Vec::new(), k)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    pub fn max_label(&self) -> u64 {
        self.crossings.iter().flat_map(|x| x.slots).max().unwrap_or(0)
    }

    /// For every port, the port at the other end of its edge.
    pub fn partners(&self) -> Vec<[Port; 4]> {
        let mut seen: BTreeMap<u64, Port> = BTreeMap::new();
        let placeholder = Port { crossing: usize::MAX, slot: 0 };
        let mut out = vec![[placeholder; 4]; self.crossings.len()];
        for (c, x) in self.crossings.iter().enumerate() {
            for (t, &l) in x.slots.iter().enumerate() {
                let here = Port { crossing: c, slot: t };
                if let Some(there) = seen.remove(&l) {
                    out[c][t] = there;
                    out[there.crossing][there.slot] = here;
                } else {
                    seen.insert(l, here);
                }
            }
        }
        debug_assert!(seen.is_empty());
        out
    }

    /// Number of link components, counting free circles.
    pub fn link_components(&self) -> usize {
        let partners = self.partners();
        let mut uf = UnionFind::new(4 * self.crossings.len());
        for (c, ports) in partners.iter().enumerate() {
            for (t, p) in ports.iter().enumerate() {
                uf.union(4 * c + t, 4 * p.crossing + p.slot);
            }
            uf.union(4 * c, 4 * c + 2);
            uf.union(4 * c + 1, 4 * c + 3);
        }
        uf.count() + self.free_circles
    }

    /// Applies `f` to every edge label. `f` must be injective on the labels
    /// in use and never return 0.
    pub fn relabel(&self, mut f: impl FnMut(u64) -> u64) -> Result<Diagram, DiagramError> {
        let crossings = self.crossings.iter().map(|x| Crossing { slots: x.slots.map(&mut f) }).collect();
        Diagram::new(crossings, self.free_circles)
    }

    /// Reorders crossings: crossing `i` of the result is crossing
    /// `order[i]` of `self`.
    pub fn permute_crossings(&self, order: &[usize]) -> Diagram {
        assert_eq!(order.len(), self.crossings.len());
        Diagram { crossings: order.iter().map(|&i| self.crossings[i]).collect(), free_circles: self.free_circles }
    }

    /// Cyclically shifts the slot list of one crossing by two positions.
    /// This describes the same crossing.
    pub fn rotate_crossing(&self, c: usize) -> Diagram {
        let mut d = self.clone();
        d.crossings[c].slots.rotate_left(2);
        d
    }

    /// Disjoint union, with `other`'s labels shifted past ours.
    pub fn split_union(&self, other: &Diagram) -> Diagram {
        let shift = self.max_label();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing { slots: x.slots.map(|l| l + shift) }));
        Diagram { crossings, free_circles: self.free_circles + other.free_circles }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = self.crossings.iter().map(Crossing::to_string).collect();
        if self.free_circles > 0 {
            items.push(format!("O {}", self.free_circles));
        }
        write!(f, "{}", items.join(";"))
    }
}

fn malformed(item: &str, reason: impl Into<String>) -> DiagramError {
    DiagramError::Malformed { item: item.to_string(), reason: reason.into() }
}

fn parse_crossing(item: &str) -> Result<Crossing, DiagramError> {
    let compact: String = item.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("X(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| malformed(item, "expected X(a,b,c,d)"))?;
    let labels: Vec<u64> = inner
        .split(',')
        .map(|tok| tok.parse::<u64>().map_err(|_| malformed(item, format!("bad label {tok:?}"))))
        .collect::<Result<_, _>>()?;
    let slots: [u64; 4] = labels.try_into().map_err(|_| malformed(item, "a crossing has exactly four labels"))?;
    if slots.contains(&0) {
        return Err(malformed(item, "edge labels must be positive"));
    }
    Ok(Crossing { slots })
}

pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let mut crossings = Vec::new();
    let mut circles: Option<usize> = None;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for item in line.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            if item.starts_with('X') {
                crossings.push(parse_crossing(item)?);
            } else if let Some(rest) = item.strip_prefix('O') {
                if circles.is_some() {
                    return Err(DiagramError::DuplicateCircles);
                }
                let k = rest.trim().parse::<usize>().map_err(|_| malformed(item, "expected O k"))?;
                circles = Some(k);
            } else {
                return Err(malformed(item, "unknown item"));
            }
        }
    }
    Diagram::new(crossings, circles.unwrap_or(0))
}

impl FromStr for Diagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_diagram(s)
    }
}

/// Connected components of the underlying projection, as sorted crossing
/// index lists ordered by their first crossing. Free circles are not
/// included.
pub fn underlying_components(d: &Diagram) -> Vec<Vec<usize>> {
    let n = d.crossing_count();
    let mut uf = UnionFind::new(n);
    for (c, ports) in d.partners().iter().enumerate() {
        for p in ports {
            uf.union(c, p.crossing);
        }
    }
    uf.groups()
}

/// Complementary regions of a diagram.
///
/// Region 0 is the unbounded region. Every projection component and every
/// free circle sits in it side by side; the face of a component that
/// becomes unbounded is the one containing quadrant 0 of its lowest-index
/// crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionMap {
    region_count: usize,
    quadrant_region: Vec<[usize; 4]>,
    circle_regions: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

impl RegionMap {
    pub fn region_count(&self) -> usize {
        self.region_count
    }

    pub fn unbounded_region(&self) -> usize {
        0
    }

    pub fn crossing_count(&self) -> usize {
        self.quadrant_region.len()
    }

    /// Region of quadrant `q` (between slots `q` and `q + 1`) at crossing `c`.
    pub fn quadrant(&self, c: usize, q: usize) -> usize {
        self.quadrant_region[c][q % 4]
    }

    pub fn quadrants(&self, c: usize) -> [usize; 4] {
        self.quadrant_region[c]
    }

    /// `(inside, enclosing)` region pairs, one per free circle.
    pub fn circle_regions(&self) -> &[(usize, usize)] {
        &self.circle_regions
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }
}

pub fn trace_regions(d: &Diagram) -> Result<RegionMap, DiagramError> {
    let n = d.crossing_count();
    let partners = d.partners();
    let components = underlying_components(d);

    // Orbits of quadrants: leave quadrant q through slot q + 1, arrive at
    // the partner port t, continue in quadrant t.
    const UNSEEN: usize = usize::MAX;
    let mut face = vec![[UNSEEN; 4]; n];
    let mut face_count = 0;
    for c in 0..n {
        for q in 0..4 {
            if face[c][q] != UNSEEN {
                continue;
            }
            let (mut cc, mut qq) = (c, q);
            while face[cc][qq] == UNSEEN {
                face[cc][qq] = face_count;
                let next = partners[cc][(qq + 1) % 4];
                cc = next.crossing;
                qq = next.slot;
            }
            face_count += 1;
        }
    }

    let mut face_component = vec![usize::MAX; face_count];
    for (i, comp) in components.iter().enumerate() {
        for &c in comp {
            for f in face[c] {
                face_component[f] = i;
            }
        }
    }
    let mut faces_per_component = vec![0; components.len()];
    for &k in &face_component {
        faces_per_component[k] += 1;
    }
    for (comp, &faces) in components.iter().zip(&faces_per_component) {
        let expected = comp.len() + 2;
        if faces != expected {
            return Err(DiagramError::NonPlanar { crossings: comp.len(), faces, expected });
        }
    }

    let outer: Vec<usize> = components.iter().map(|comp| face[comp[0]][0]).collect();
    let mut region_of_face = vec![UNSEEN; face_count];
    for &f in &outer {
        region_of_face[f] = 0;
    }
    let mut next_id = 1;
    let mut quadrant_region = vec![[0; 4]; n];
    for c in 0..n {
        for q in 0..4 {
            let f = face[c][q];
            if region_of_face[f] == UNSEEN {
                region_of_face[f] = next_id;
                next_id += 1;
            }
            quadrant_region[c][q] = region_of_face[f];
        }
    }
    let circle_regions = (0..d.free_circles()).map(|i| (next_id + i, 0)).collect();
    Ok(RegionMap { region_count: next_id + d.free_circles(), quadrant_region, circle_regions, components })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
    const HOPF: &str = "X(1,3,2,4);X(3,1,4,2)";

    #[test]
    fn parses_trefoil() {
        let d = parse_diagram(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.free_circles(), 0);
        let mut labels: Vec<u64> = d.crossings().iter().flat_map(|x| x.slots).collect();
        labels.sort();
        assert_eq!(labels, vec![1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6]);
    }

    #[test]
    fn parses_circles_and_kink() {
        let d = parse_diagram("O 1").unwrap();
        assert_eq!((d.crossing_count(), d.free_circles()), (0, 1));
        let k = parse_diagram("X(1,2,2,1)").unwrap();
        assert_eq!(k.crossing_count(), 1);
    }

    #[test]
    fn whitespace_comments_and_newlines() {
        let text = "# trefoil\n X ( 1, 4,2 ,5 )\nX(3,6,4,1) ; X(5,2,6,3) # last\n\nO 2\n";
        let d = parse_diagram(text).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.free_circles(), 2);
        assert_eq!(d.to_string(), format!("{TREFOIL};O 2"));
    }

    #[test]
    fn nonconsecutive_labels() {
        let d = parse_diagram("X(10,40,20,50);X(30,60,40,10);X(50,20,60,30)").unwrap();
        assert_eq!(trace_regions(&d).unwrap().region_count(), 5);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_diagram(""), Err(DiagramError::Empty)));
        assert!(matches!(parse_diagram("# nothing"), Err(DiagramError::Empty)));
        assert!(matches!(parse_diagram("O 0"), Err(DiagramError::Empty)));
        assert!(matches!(parse_diagram("X(1,2,3,1)"), Err(DiagramError::LabelCount { label: 2, count: 1 })));
        assert!(matches!(parse_diagram("X(1,2,2)"), Err(DiagramError::Malformed { .. })));
        assert!(matches!(parse_diagram("X(1,2,2,a)"), Err(DiagramError::Malformed { .. })));
        assert!(matches!(parse_diagram("X(0,2,2,0)"), Err(DiagramError::Malformed { .. })));
        assert!(matches!(parse_diagram("Y(1,2,2,1)"), Err(DiagramError::Malformed { .. })));
        assert!(matches!(parse_diagram("O 1;O 2"), Err(DiagramError::DuplicateCircles)));
        assert!(matches!(parse_diagram("O x"), Err(DiagramError::Malformed { .. })));
        assert!(matches!(parse_diagram("X(1,1,1,2);X(2,3,3,4)"), Err(DiagramError::LabelCount { .. })));
    }

    #[test]
    fn region_counts() {
        let count = |s: &str| trace_regions(&parse_diagram(s).unwrap()).unwrap().region_count();
        assert_eq!(count(TREFOIL), 5);
        assert_eq!(count(HOPF), 4);
        assert_eq!(count("O 1"), 2);
        assert_eq!(count("O 2"), 3);
        assert_eq!(count("X(1,2,2,1)"), 3);
        assert_eq!(count(&format!("{TREFOIL};O 1")), 6);
    }

    #[test]
    fn kink_regions() {
        let rm = trace_regions(&parse_diagram("X(1,2,2,1)").unwrap()).unwrap();
        let q = rm.quadrants(0);
        assert_eq!(q[0], q[2]);
        assert_eq!(q[0], rm.unbounded_region());
        assert_ne!(q[1], q[3]);
        assert_ne!(q[1], q[0]);
    }

    #[test]
    fn circles_nest_in_unbounded_region() {
        let rm = trace_regions(&parse_diagram("O 2").unwrap()).unwrap();
        assert_eq!(rm.circle_regions(), &[(1, 0), (2, 0)]);
    }

    #[test]
    fn components() {
        let t = parse_diagram(TREFOIL).unwrap();
        assert_eq!(underlying_components(&t), vec![vec![0, 1, 2]]);
        let tt = t.split_union(&t);
        assert_eq!(underlying_components(&tt), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(trace_regions(&tt).unwrap().region_count(), 9);
        assert!(underlying_components(&parse_diagram("O 3").unwrap()).is_empty());
        assert_eq!(t.link_components(), 1);
        assert_eq!(tt.link_components(), 2);
        assert_eq!(parse_diagram(HOPF).unwrap().link_components(), 2);
        assert_eq!(parse_diagram("X(1,2,2,1);O 2").unwrap().link_components(), 3);
    }

    #[test]
    fn nonplanar_rotation_is_rejected() {
        // Hopf code with one crossing's rotation reversed.
        let d = parse_diagram("X(1,3,2,4);X(3,2,4,1)").unwrap();
        assert!(matches!(trace_regions(&d), Err(DiagramError::NonPlanar { .. })));
    }

    #[test]
    fn every_quadrant_has_a_region() {
        let rm = trace_regions(&parse_diagram(TREFOIL).unwrap()).unwrap();
        let mut hit = vec![false; rm.region_count()];
        for c in 0..3 {
            for r in rm.quadrants(c) {
                hit[r] = true;
            }
        }
        assert!(hit.iter().all(|&h| h));
    }
}
