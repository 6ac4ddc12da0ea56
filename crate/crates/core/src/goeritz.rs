//! Goeritz index, Goeritz matrix and adjusted Goeritz matrix of a shaded
//! diagram, plus the JSON exchange format for integer matrices.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;
use thiserror::Error;

use crate::diagram::RegionMap;
use crate::intlattice::IntMatrix;
use crate::shading::{checkerboard_graphs, QuadrantPair, Shade, Shading};

/// Goeritz index of crossing `c`: -1 when quadrants 0 and 2 are shaded,
/// +1 when quadrants 1 and 3 are.
pub fn goeritz_index(rm: &RegionMap, s: &Shading, c: usize) -> i32 {
    match s.shaded_pair(rm, c) {
        QuadrantPair::Even => -1,
        QuadrantPair::Odd => 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeritzData {
    /// Row `i` of `matrix` belongs to region `unshaded_regions[i]`.
    pub unshaded_regions: Vec<usize>,
    pub matrix: IntMatrix,
    /// Component count of the shaded checkerboard graph.
    pub beta_s: usize,
    pub adjusted: IntMatrix,
}

impl GoeritzData {
    /// Same data with the unshaded regions listed in `order`, which must be
    /// a permutation of `unshaded_regions`.
    pub fn with_region_order(&self, order: &[usize]) -> Option<GoeritzData> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        let mut mine = self.unshaded_regions.clone();
        mine.sort_unstable();
        if sorted != mine {
            return None;
        }
        let perm: Vec<usize> =
            order.iter().map(|r| self.unshaded_regions.iter().position(|x| x == r).expect("checked above")).collect();
        let matrix = self.matrix.conjugate_by_permutation(&perm);
        Some(GoeritzData {
            unshaded_regions: order.to_vec(),
            adjusted: adjusted_goeritz(&matrix, self.beta_s),
            matrix,
            beta_s: self.beta_s,
        })
    }
}

/// Goeritz matrix over the unshaded regions in ascending region order.
///
/// A crossing whose two unshaded quadrants lie in the same region adds
/// nothing.
pub fn goeritz_matrix(rm: &RegionMap, s: &Shading) -> GoeritzData {
    let unshaded = s.regions_with(Shade::Unshaded);
    let mut row = vec![usize::MAX; rm.region_count()];
    for (i, &r) in unshaded.iter().enumerate() {
        row[r] = i;
    }
    let n = unshaded.len();
    let mut g = IntMatrix::zeros(n, n);
    for c in 0..rm.crossing_count() {
        let [a, b] = s.shaded_pair(rm, c).other().quadrants().map(|q| row[rm.quadrant(c, q)]);
        if a == b {
            continue;
        }
        let eta = BigInt::from(goeritz_index(rm, s, c));
        g[(a, b)] -= &eta;
        g[(b, a)] -= &eta;
    }
    for i in 0..n {
        let off: BigInt = (0..n).filter(|&k| k != i).map(|k| g[(i, k)].clone()).sum();
        g[(i, i)] = -off;
    }
    let (shaded_graph, _) = checkerboard_graphs(rm, s);
    let beta_s = shaded_graph.component_count.max(1);
    GoeritzData { unshaded_regions: unshaded, adjusted: adjusted_goeritz(&g, beta_s), matrix: g, beta_s }
}

/// `G` with a `(beta_s - 1)`-square zero block appended on the diagonal.
pub fn adjusted_goeritz(g: &IntMatrix, beta_s: usize) -> IntMatrix {
    g.pad_zero(beta_s.saturating_sub(1))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixJsonError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("expected an array of rows")]
    NotRows,
    #[error("entry {0:?} is not an integer")]
    BadEntry(String),
    #[error("rows have different lengths")]
    Ragged,
}

/// Row-major array of arrays of decimal strings.
pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|r| Value::Array(r.into_iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

/// Accepts decimal strings or plain JSON integers.
pub fn matrix_from_json(v: &Value) -> Result<IntMatrix, MatrixJsonError> {
    let rows = v.as_array().ok_or(MatrixJsonError::NotRows)?;
    let parsed: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.as_array().ok_or(MatrixJsonError::NotRows)?.iter().map(parse_entry).collect())
        .collect::<Result<_, _>>()?;
    IntMatrix::from_rows(&parsed).map_err(|_| MatrixJsonError::Ragged)
}

fn parse_entry(v: &Value) -> Result<BigInt, MatrixJsonError> {
    let text = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        other => return Err(MatrixJsonError::BadEntry(other.to_string())),
    };
    text.parse::<BigInt>().map_err(|_| MatrixJsonError::BadEntry(text))
}

pub fn matrix_from_json_str(text: &str) -> Result<IntMatrix, MatrixJsonError> {
    let v: Value = serde_json::from_str(text).map_err(|e| MatrixJsonError::Syntax(e.to_string()))?;
    matrix_from_json(&v)
}

/// True when every row sums to zero.
pub fn has_zero_row_sums(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| m.row(i).iter().sum::<BigInt>().is_zero())
}
