//! Exact integer matrix algebra.
//!
//! Invariant factors are reported in *descending* divisibility order:
//! `phi[j]` divides `phi[j - 1]`, so zero factors come first and units
//! come last. The Smith form matrix [`smith_form_matrix`] follows the same
//! layout.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("minor enumeration needs {needed} determinants, over the budget of {budget}")]
    WorkBound { needed: u128, budget: u128 },
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Default cap on the number of minors [`elementary_gcds`] will evaluate.
pub const DEFAULT_MINOR_BUDGET: u128 = 1_000_000;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LatticeError> {
        if data.len() != rows * cols {
            return Err(LatticeError::Dimension(format!("{} entries for a {}x{} matrix", data.len(), rows, cols)));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows of anything convertible to `BigInt`.
    ///
    /// An empty outer vector gives a 0x0 matrix; use [`IntMatrix::zeros`]
    /// for 0xk shapes.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, LatticeError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LatticeError::Ragged);
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, LatticeError> {
        if self.cols != rhs.rows {
            return Err(LatticeError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Square submatrix on the given (sorted, distinct) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination. The 0x0
    /// determinant is 1.
    pub fn determinant(&self) -> Result<BigInt, LatticeError> {
        if !self.is_square() {
            return Err(LatticeError::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -v;
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    fn permute_rows(&self, order: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(self.rows, self.cols);
        for (new, &old) in order.iter().enumerate() {
            for j in 0..self.cols {
                out[(new, j)] = self[(old, j)].clone();
            }
        }
        out
    }

    fn permute_cols(&self, order: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(self.rows, self.cols);
        for (new, &old) in order.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, new)] = self[(i, old)].clone();
            }
        }
        out
    }

    /// Conjugates a square matrix by a permutation: entry `(i, j)` of the
    /// result is entry `(order[i], order[j])` of `self`.
    pub fn conjugate_by_permutation(&self, order: &[usize]) -> IntMatrix {
        self.permute_rows(order).permute_cols(order)
    }

    /// Block-diagonal padding with `extra` zero rows and columns.
    pub fn pad_zero(&self, extra: usize) -> IntMatrix {
        let mut out = Self::zeros(self.rows + extra, self.cols + extra);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}{:?}", self.rows, self.cols, self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| format!("{:>width$}", v.to_string())).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Smith normal form with unimodular witnesses: `u1 * M * u2` equals
/// [`smith_form_matrix`]`(M.rows(), M.cols(), &phi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// One invariant factor per column, `phi[j] | phi[j - 1]`.
    pub phi: Vec<BigUint>,
    pub u1: IntMatrix,
    pub u2: IntMatrix,
    pub rank: usize,
}

/// The `rows x cols` Smith form for a descending factor list of length
/// `cols`: the `cols x cols` diagonal matrix with zero rows appended at the
/// bottom when `rows > cols`, or with its leading `cols - rows` rows (which
/// are zero) removed when `cols > rows`.
pub fn smith_form_matrix(rows: usize, cols: usize, phi: &[BigUint]) -> IntMatrix {
    assert_eq!(phi.len(), cols, "need one invariant factor per column");
    let shift = cols.saturating_sub(rows);
    let mut out = IntMatrix::zeros(rows, cols);
    for i in 0..rows.min(cols) {
        out[(i, i + shift)] = BigInt::from(phi[i + shift].clone());
    }
    out
}

/// Computes the Smith normal form of `m` together with witnesses.
///
/// Pivots are chosen deterministically: smallest nonzero absolute value,
/// positive before negative, then lowest row, then lowest column.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rho, kappa) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut p = IntMatrix::identity(rho);
    let mut q = IntMatrix::identity(kappa);
    let r = rho.min(kappa);

    let mut t = 0;
    'outer: while t < r {
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            p.swap_rows(t, pi);
            a.swap_cols(t, pj);
            q.swap_cols(t, pj);
            if a[(t, t)].is_negative() {
                a.negate_row(t);
                p.negate_row(t);
            }
            let pivot = a[(t, t)].clone();

            let mut clean = true;
            for i in t + 1..rho {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let factor = -a[(i, t)].div_floor(&pivot);
                a.add_row_multiple(i, t, &factor);
                p.add_row_multiple(i, t, &factor);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..kappa {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let factor = -a[(t, j)].div_floor(&pivot);
                a.add_col_multiple(j, t, &factor);
                q.add_col_multiple(j, t, &factor);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // The pivot must divide the whole remaining block.
            let offender = (t + 1..rho).find(|&i| (t + 1..kappa).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    p.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        t += 1;
    }

    // Ascending chain d_0 | d_1 | ... with zeros last sits on the main
    // diagonal. Reverse it into the descending layout.
    let shift = kappa.saturating_sub(rho);
    let mut row_order: Vec<usize> = (0..r).rev().collect();
    row_order.extend(r..rho);
    let mut col_order: Vec<usize> = (r..kappa).collect();
    col_order.extend((0..r).rev());
    debug_assert_eq!(col_order.len(), kappa);

    let mut phi = vec![BigUint::zero(); kappa];
    for i in 0..r {
        phi[shift + i] = a[(r - 1 - i, r - 1 - i)].magnitude().clone();
    }
    let rank = phi.iter().filter(|v| !v.is_zero()).count();

    SnfResult { phi, u1: p.permute_rows(&row_order), u2: q.permute_cols(&col_order), rank }
}

fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(&BigInt, bool, usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let key = (v.magnitude(), v.is_negative(), i, j);
            let better = match &best {
                None => true,
                Some((bv, bneg, bi, bj)) => key < (bv.magnitude(), *bneg, *bi, *bj),
            };
            if better {
                best = Some((v, v.is_negative(), i, j));
            }
        }
    }
    best.map(|(_, _, i, j)| (i, j))
}

pub fn invariant_factors(m: &IntMatrix) -> Vec<BigUint> {
    smith_normal_form(m).phi
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The gcds `delta_0 ..= delta_kappa` of the elementary ideals of `m`,
/// computed directly from minors. `delta_j` is the gcd of the
/// `(kappa - j)`-square minors; it is 0 while `j < kappa - rho` and 1 once
/// `j >= kappa`.
pub fn elementary_gcds(m: &IntMatrix, budget: u128) -> Result<Vec<BigUint>, LatticeError> {
    let (rho, kappa) = (m.rows, m.cols);
    let floor = kappa.saturating_sub(rho);
    let needed: u128 = (floor..kappa)
        .map(|j| binomial(rho, kappa - j).saturating_mul(binomial(kappa, kappa - j)))
        .fold(0u128, u128::saturating_add);
    if needed > budget {
        return Err(LatticeError::WorkBound { needed, budget });
    }

    let mut deltas = Vec::with_capacity(kappa + 1);
    for j in 0..=kappa {
        if j < floor {
            deltas.push(BigUint::zero());
        } else if j >= kappa {
            deltas.push(BigUint::one());
        } else {
            let size = kappa - j;
            let mut g = BigInt::zero();
            for_each_combination(rho, size, |rows| {
                for_each_combination(kappa, size, |cols| {
                    if g.is_one() {
                        return;
                    }
                    let det = m.submatrix(rows, cols).determinant().expect("square submatrix");
                    g = g.gcd(&det);
                });
            });
            deltas.push(g.magnitude().clone());
        }
    }
    Ok(deltas)
}

/// `phi_j = delta_j / delta_(j+1)` with `0 / 0 = 0`.
pub fn invariant_factors_from_gcds(deltas: &[BigUint]) -> Vec<BigUint> {
    deltas.windows(2).map(|w| if w[1].is_zero() { BigUint::zero() } else { &w[0] / &w[1] }).collect()
}

/// Symbolic abelian group `A^free_rank x prod A(t)` over a coefficient
/// group `A`, or equally the finitely generated group
/// `Z^free_rank + sum Z/t` when read as a cokernel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    pub free_rank: usize,
    /// Torsion coefficients, all at least 2, in descending divisibility order.
    pub torsion: Vec<BigUint>,
    /// Set when one of the free summands is the standalone leading `A`.
    pub leading_free_factor: bool,
}

impl GroupDescriptor {
    /// Descriptor of `prod A(phi_j)`, optionally with a leading extra `A`.
    pub fn from_factors(phi: &[BigUint], leading_free_factor: bool) -> Self {
        let zeros = phi.iter().filter(|v| v.is_zero()).count();
        let mut torsion: Vec<BigUint> = phi.iter().filter(|v| !v.is_zero() && !v.is_one()).cloned().collect();
        // descending divisibility means descending magnitude
        torsion.sort_by(|a, b| b.cmp(a));
        GroupDescriptor { free_rank: zeros + usize::from(leading_free_factor), torsion, leading_free_factor }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group at `A = Z/m`: `m^free_rank * prod gcd(t, m)`.
    pub fn order_mod(&self, m: &BigUint) -> BigUint {
        let mut acc = num_traits::pow(m.clone(), self.free_rank);
        for t in &self.torsion {
            acc *= t.gcd(m);
        }
        acc
    }

    /// Integer-group notation, e.g. `Z^2 + Z/3 + Z/3`.
    pub fn integer_group(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for GroupDescriptor {
    /// Functor notation, e.g. `A x A x A(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec!["A".to_string(); self.free_rank];
        parts.extend(self.torsion.iter().map(|t| format!("A({t})")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// The cokernel of `x -> x M` on `Z^rows`, i.e. `Z^cols / (row space)`.
pub fn cokernel_descriptor(m: &IntMatrix) -> GroupDescriptor {
    GroupDescriptor::from_factors(&invariant_factors(m), false)
}

/// Number of row vectors `x` in `(Z/m)^rows` with `x M = 0 (mod m)`.
pub fn kernel_count_mod(matrix: &IntMatrix, m: &BigUint) -> BigUint {
    assert!(*m >= BigUint::from(2u8), "modulus must be at least 2");
    let snf = smith_normal_form(matrix);
    kernel_count_from_factors(matrix.rows, matrix.cols, &snf.phi, m)
}

pub(crate) fn kernel_count_from_factors(rows: usize, cols: usize, phi: &[BigUint], m: &BigUint) -> BigUint {
    let shift = cols.saturating_sub(rows);
    let mut acc = num_traits::pow(m.clone(), rows.saturating_sub(cols));
    for f in &phi[shift..] {
        // gcd(0, m) = m
        acc *= f.gcd(m);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let v: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_rows(&v).unwrap()
    }

    fn u(vals: &[u64]) -> Vec<BigUint> {
        vals.iter().map(|&v| BigUint::from(v)).collect()
    }

    fn golden() -> IntMatrix {
        mat(&[&[0, 0, 0, 0, 0], &[0, 3, 0, 0, -3], &[0, 0, 3, 0, -3], &[0, 0, 0, 1, -1], &[0, -3, -3, -1, 7]])
    }

    /// Counts kernel vectors by enumerating all of `(Z/m)^rows`.
    fn kernel_count_enumerated(a: &IntMatrix, m: u64) -> u64 {
        let rows = a.rows();
        let total = m.pow(rows as u32);
        let entries: Vec<Vec<i64>> =
            a.to_rows().iter().map(|r| r.iter().map(|v| i64::try_from(v.clone()).unwrap()).collect()).collect();
        (0..total)
            .filter(|&code| {
                let mut x = vec![0i64; rows];
                let mut c = code;
                for xi in x.iter_mut() {
                    *xi = (c % m) as i64;
                    c /= m;
                }
                (0..a.cols()).all(|j| {
                    let s: i64 = (0..rows).map(|i| x[i] * entries[i][j]).sum();
                    s.rem_euclid(m as i64) == 0
                })
            })
            .count() as u64
    }

    fn check_witnesses(m: &IntMatrix, snf: &SnfResult) {
        let lhs = snf.u1.mul(m).unwrap().mul(&snf.u2).unwrap();
        assert_eq!(lhs, smith_form_matrix(m.rows(), m.cols(), &snf.phi));
        assert_eq!(snf.u1.determinant().unwrap().magnitude(), &BigUint::one());
        assert_eq!(snf.u2.determinant().unwrap().magnitude(), &BigUint::one());
    }

    #[test]
    fn golden_matrix_factors() {
        let m = golden();
        let snf = smith_normal_form(&m);
        assert_eq!(snf.phi, u(&[0, 0, 3, 3, 1]));
        assert_eq!(snf.rank, 3);
        check_witnesses(&m, &snf);
    }

    #[test]
    fn golden_matrix_elementary_gcds() {
        let d = elementary_gcds(&golden(), DEFAULT_MINOR_BUDGET).unwrap();
        assert_eq!(d, u(&[0, 0, 9, 3, 1, 1]));
        assert_eq!(invariant_factors_from_gcds(&d), u(&[0, 0, 3, 3, 1]));
    }

    #[test]
    fn zero_and_identity() {
        for n in 0..5 {
            assert_eq!(invariant_factors(&IntMatrix::zeros(n, n)), vec![BigUint::zero(); n]);
            assert_eq!(invariant_factors(&IntMatrix::identity(n)), vec![BigUint::one(); n]);
        }
        assert_eq!(elementary_gcds(&IntMatrix::identity(2), 10).unwrap(), u(&[1, 1, 1]));
        assert_eq!(elementary_gcds(&IntMatrix::zeros(2, 2), 10).unwrap(), u(&[0, 0, 1]));
    }

    #[test]
    fn diagonal_two_three() {
        let m = IntMatrix::diagonal(&[2, 3]);
        assert_eq!(invariant_factors(&m), u(&[6, 1]));
        let d = elementary_gcds(&m, 10).unwrap();
        assert_eq!(d, u(&[6, 1, 1]));
    }

    #[test]
    fn wide_matrix_has_leading_zero() {
        let m = mat(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(invariant_factors(&m), u(&[0, 1, 1]));
        assert_eq!(elementary_gcds(&m, 10).unwrap(), u(&[0, 1, 1, 1]));
        let snf = smith_normal_form(&m);
        check_witnesses(&m, &snf);
    }

    #[test]
    fn tall_and_empty_shapes() {
        let m = mat(&[&[2], &[4], &[6]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.phi, u(&[2]));
        check_witnesses(&m, &snf);

        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let m = IntMatrix::zeros(r, c);
            let snf = smith_normal_form(&m);
            assert_eq!(snf.phi, vec![BigUint::zero(); c]);
            check_witnesses(&m, &snf);
            let d = elementary_gcds(&m, 10).unwrap();
            assert_eq!(invariant_factors_from_gcds(&d), snf.phi);
        }
    }

    #[test]
    fn work_bound_is_enforced() {
        let m = IntMatrix::identity(12);
        assert!(matches!(elementary_gcds(&m, 1000), Err(LatticeError::WorkBound { .. })));
    }

    #[test]
    fn cokernel_examples() {
        let g = cokernel_descriptor(&golden());
        assert_eq!((g.free_rank, g.torsion.clone()), (2, u(&[3, 3])));
        assert!(!g.leading_free_factor);
        assert!(cokernel_descriptor(&IntMatrix::identity(3)).is_trivial());
        let g = cokernel_descriptor(&IntMatrix::diagonal(&[0, 2]));
        assert_eq!((g.free_rank, g.torsion.clone()), (1, u(&[2])));
        assert_eq!(g.integer_group(), "Z + Z/2");
    }

    #[test]
    fn kernel_counts_match_enumeration() {
        let five = BigUint::from(5u8);
        assert_eq!(kernel_count_mod(&IntMatrix::identity(2), &five), BigUint::one());
        assert_eq!(kernel_count_mod(&IntMatrix::zeros(2, 2), &five), BigUint::from(25u8));
        let g = golden();
        let expected = kernel_count_enumerated(&g, 3);
        assert_eq!(expected, 81);
        assert_eq!(kernel_count_mod(&g, &BigUint::from(3u8)), BigUint::from(expected));

        let wide = mat(&[&[2, 4, 0], &[0, 0, 6]]);
        let tall = wide.transpose();
        for m in 2..=6u64 {
            let mb = BigUint::from(m);
            assert_eq!(kernel_count_mod(&wide, &mb), BigUint::from(kernel_count_enumerated(&wide, m)));
            assert_eq!(kernel_count_mod(&tall, &mb), BigUint::from(kernel_count_enumerated(&tall, m)));
        }
    }

    #[test]
    fn determinant_small() {
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(mat(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).determinant().unwrap(), BigInt::from(4));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant().unwrap(), BigInt::zero());
    }

    #[test]
    fn descriptor_display() {
        let d = GroupDescriptor::from_factors(&u(&[0, 3]), true);
        assert_eq!(d.to_string(), "A x A x A(3)");
        assert_eq!(d.order_mod(&BigUint::from(3u8)), BigUint::from(27u8));
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
        let m = IntMatrix::from_rows(&[vec![big.clone(), BigInt::from(3)], vec![BigInt::from(7), big.clone() + 1]])
            .unwrap();
        let snf = smith_normal_form(&m);
        check_witnesses(&m, &snf);
        let det = m.determinant().unwrap();
        assert_eq!(BigInt::from(snf.phi[0].clone() * &snf.phi[1]), det.abs());
    }
}
