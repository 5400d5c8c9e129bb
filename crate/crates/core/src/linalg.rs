//! Generic exact linear algebra over a commutative-ring element type:
//! determinants (cofactor for small sizes, fraction-free Bareiss above),
//! perfect-matching and expansion Pfaffians, minors, and skew congruence.

use crate::ring::{Poly, RatFun, Scalar};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("skew matrix has odd dimension {0}")]
    OddDimension(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index set must be strictly increasing and in range")]
    BadIndexSet,
    #[error("matching-sum Pfaffian limited to dimension {max}, got {got}")]
    MatchingLimit { max: usize, got: usize },
    #[error("inexact division during fraction-free elimination: {0}")]
    InexactDivision(String),
}

/// Element contract for the generic kernels: a commutative ring with equality.
pub trait RingElem:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
}

impl<T> RingElem for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + std::ops::Neg<Output = Self>
        + std::ops::Sub<Output = Self>
{
}

/// Exact division for fraction-free elimination. The Bareiss recurrence only
/// ever divides by earlier pivots, where the quotient is exact over any
/// integral domain.
pub trait ExactDiv: Sized {
    fn exact_div(&self, den: &Self) -> Result<Self, LinalgError>;
}

impl ExactDiv for crate::QRat {
    fn exact_div(&self, den: &Self) -> Result<Self, LinalgError> {
        if den.is_zero() {
            return Err(LinalgError::InexactDivision("division by zero".into()));
        }
        Ok(self / den)
    }
}

impl<C: Scalar> ExactDiv for Poly<C> {
    fn exact_div(&self, den: &Self) -> Result<Self, LinalgError> {
        if den.is_zero() {
            return Err(LinalgError::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        }
        Poly::exact_div(self, den).map_err(|e| LinalgError::InexactDivision(e.to_string()))
    }
}

impl<C: Scalar> ExactDiv for RatFun<C> {
    fn exact_div(&self, den: &Self) -> Result<Self, LinalgError> {
        if den.is_zero() {
            return Err(LinalgError::InexactDivision("division by zero".into()));
        }
        Ok(self.div_ref(den))
    }
}

/// Dense rectangular matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: RingElem> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn map<U: RingElem>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        }))
    }

    /// Submatrix selecting `rows` and `cols`, both strictly increasing.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix<T>, LinalgError> {
        let ok = |idx: &[usize], bound: usize| {
            idx.windows(2).all(|w| w[0] < w[1]) && idx.iter().all(|&i| i < bound)
        };
        if !ok(rows, self.rows) || !ok(cols, self.cols) {
            return Err(LinalgError::BadIndexSet);
        }
        Ok(Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        }))
    }

    /// Column selection with all rows kept.
    pub fn select_cols(&self, cols: &[usize]) -> Result<Matrix<T>, LinalgError> {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    /// Exact determinant: cofactor expansion for dimension <= 4,
    /// fraction-free Bareiss elimination (with exact division) above.
    pub fn determinant(&self) -> Result<T, LinalgError>
    where
        T: ExactDiv,
    {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows <= 4 {
            let idx: Vec<usize> = (0..self.rows).collect();
            Ok(self.det_cofactor(&idx, &idx))
        } else {
            self.det_bareiss()
        }
    }

    fn det_cofactor(&self, rows: &[usize], cols: &[usize]) -> T {
        if rows.is_empty() {
            return T::one();
        }
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = T::zero();
        let sub_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(rows[0], c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &cc)| cc)
                .collect();
            let minor = self.det_cofactor(sub_rows, &rest);
            let term = a.clone() * minor;
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn det_bareiss(&self) -> Result<T, LinalgError>
    where
        T: ExactDiv,
    {
        let n = self.rows;
        let mut m = self.data.clone();
        let at = |m: &Vec<T>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign_flip = false;
        let mut prev_pivot = T::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                // Find a row below with a nonzero pivot and swap.
                let swap = (k + 1..n).find(|&r| !at(&m, r, k).is_zero());
                match swap {
                    None => return Ok(T::zero()),
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        sign_flip = !sign_flip;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j);
                    m[i * n + j] = num.exact_div(&prev_pivot)?;
                }
                m[i * n + k] = T::zero();
            }
            prev_pivot = at(&m, k, k);
        }
        let det = at(&m, n - 1, n - 1);
        Ok(if sign_flip { -det } else { det })
    }

    /// Division-free determinant: Laplace expansion down the rows, memoized
    /// over column subsets (`O(2^n n)` multiply-adds). For entries where
    /// exact division is expensive -- multivariate polynomials above
    /// dimension 4 -- this beats fraction-free elimination, because every
    /// intermediate is an actual minor and nothing is ever divided.
    pub fn det_expansion(&self) -> Result<T, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        assert!(n <= 20, "subset-expansion determinant uses a compact mask");
        // layer[s] = det of rows 0..k on the column set encoded by mask s.
        let mut layer: HashMap<u32, T> = HashMap::new();
        layer.insert(0, T::one());
        for row in 0..n {
            let mut next: HashMap<u32, T> = HashMap::new();
            for (mask, minor) in &layer {
                if minor.is_zero() {
                    continue;
                }
                let mut parity_flips = 0usize;
                for col in 0..n {
                    let bit = 1u32 << col;
                    if mask & bit != 0 {
                        parity_flips += 1;
                        continue;
                    }
                    let e = self.get(row, col);
                    if e.is_zero() {
                        continue;
                    }
                    // Sign: the new column lands after `parity_flips` used
                    // columns of smaller index.
                    let term = e.clone() * minor.clone();
                    let entry = next.entry(mask | bit).or_insert_with(T::zero);
                    *entry = if (row + parity_flips) % 2 == 0 {
                        entry.clone() + term
                    } else {
                        entry.clone() - term
                    };
                }
            }
            layer = next;
        }
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        Ok(layer.remove(&full).unwrap_or_else(T::zero))
    }

    /// Determinant by direct signed permutation expansion. Exponential in the
    /// dimension; used as an independent oracle and for matrices of single
    /// monomials where the expansion is cheap.
    pub fn det_leibniz(&self) -> Result<T, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut acc = T::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        self.leibniz_rec(0, &mut perm, &mut used, true, &mut acc);
        Ok(acc)
    }

    fn leibniz_rec(&self, row: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, sign_pos: bool, acc: &mut T) {
        let n = self.rows;
        if row == n {
            let mut prod = T::one();
            for (i, &j) in perm.iter().enumerate() {
                prod = prod * self.get(i, j).clone();
            }
            *acc = if sign_pos {
                acc.clone() + prod
            } else {
                acc.clone() - prod
            };
            return;
        }
        for j in 0..n {
            if used[j] || self.get(row, j).is_zero() {
                continue;
            }
            used[j] = true;
            perm[row] = j;
            // Each column already used with a smaller row index and a larger
            // column index contributes one inversion.
            let inversions = (j + 1..n).filter(|&k| used[k]).count();
            let next_sign = sign_pos == (inversions % 2 == 0);
            self.leibniz_rec(row + 1, perm, used, next_sign, acc);
            used[j] = false;
        }
    }
}

/// Square skew-symmetric matrix, stored as its strict upper triangle so the
/// defining relations `A[j][i] = -A[i][j]`, `A[i][i] = 0` hold by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<T> {
    dim: usize,
    upper: Vec<T>, // (i, j) with i < j, row-major
}

impl<T: RingElem> SkewMatrix<T> {
    /// Build from a generator for the strict upper triangle (`i < j`).
    pub fn from_upper_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut upper = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
        for i in 0..dim {
            for j in i + 1..dim {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { dim, upper }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn upper_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        // Row i starts after rows 0..i, which hold (dim-1) + ... + (dim-i) entries.
        i * self.dim - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Entry with the sign convention applied.
    pub fn get(&self, i: usize, j: usize) -> T {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.upper[self.upper_index(i, j)].clone(),
            Ordering::Equal => T::zero(),
            Ordering::Greater => -self.upper[self.upper_index(j, i)].clone(),
        }
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }

    /// Principal submatrix on a strictly increasing index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<SkewMatrix<T>, LinalgError> {
        if idx.windows(2).any(|w| w[0] >= w[1]) || idx.iter().any(|&i| i >= self.dim) {
            return Err(LinalgError::BadIndexSet);
        }
        Ok(SkewMatrix::from_upper_fn(idx.len(), |i, j| {
            self.get(idx[i], idx[j])
        }))
    }

    /// Pfaffian as the signed sum over all perfect matchings of the index
    /// set: the definitional algorithm, kept as the trusted oracle. The
    /// matching count is (dim-1)!!, so the dimension is capped at 16.
    pub fn pfaffian_matchings(&self) -> Result<T, LinalgError> {
        if self.dim % 2 != 0 {
            return Err(LinalgError::OddDimension(self.dim));
        }
        if self.dim > 16 {
            return Err(LinalgError::MatchingLimit {
                max: 16,
                got: self.dim,
            });
        }
        let mut acc = T::zero();
        for m in Matching::enumerate(self.dim) {
            let mut prod = T::one();
            for &(i, j) in m.pairs() {
                prod = prod * self.get(i, j);
            }
            acc = if m.sign() > 0 { acc + prod } else { acc - prod };
        }
        Ok(acc)
    }

    /// Pfaffian by recursive expansion along the last row/column,
    /// `Pf(A) = sum_k (-1)^{k-1} a_{k,2n} Pf(A with k, 2n removed)`,
    /// memoized on index subsets.
    pub fn pfaffian_expansion(&self) -> Result<T, LinalgError> {
        if self.dim % 2 != 0 {
            return Err(LinalgError::OddDimension(self.dim));
        }
        assert!(self.dim <= 32, "expansion Pfaffian uses a 32-bit subset mask");
        let full: u32 = if self.dim == 32 {
            u32::MAX
        } else {
            (1u32 << self.dim) - 1
        };
        let mut memo: HashMap<u32, T> = HashMap::new();
        Ok(self.pf_rec(full, &mut memo))
    }

    fn pf_rec(&self, mask: u32, memo: &mut HashMap<u32, T>) -> T {
        if mask == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let idx: Vec<usize> = (0..self.dim).filter(|&i| mask & (1 << i) != 0).collect();
        let last = *idx.last().unwrap();
        let mut acc = T::zero();
        for (pos, &k) in idx[..idx.len() - 1].iter().enumerate() {
            let a = self.get(k, last);
            if a.is_zero() {
                continue;
            }
            let sub = mask & !(1 << k) & !(1 << last);
            let term = a * self.pf_rec(sub, memo);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

/// A perfect matching of `{0, ..., 2n-1}`: disjoint increasing pairs covering
/// the set, listed in increasing order of the first elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Sign of the permutation `(p1, q1, p2, q2, ...)` of `(0, 1, ..., 2n-1)`,
    /// computed by inversion count.
    pub fn sign(&self) -> i32 {
        let flat: Vec<usize> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let mut inversions = 0usize;
        for i in 0..flat.len() {
            for j in i + 1..flat.len() {
                if flat[i] > flat[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All perfect matchings of `{0, ..., dim-1}`; `dim` must be even.
    pub fn enumerate(dim: usize) -> Vec<Matching> {
        assert!(dim % 2 == 0, "matchings need an even ground set");
        let mut out = Vec::new();
        let mut pairs = Vec::new();
        let mut free: Vec<usize> = (0..dim).collect();
        enumerate_rec(&mut free, &mut pairs, &mut out);
        out
    }
}

fn enumerate_rec(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
    if free.is_empty() {
        out.push(Matching {
            pairs: pairs.clone(),
        });
        return;
    }
    let a = free[0];
    for k in 1..free.len() {
        let b = free[k];
        let mut rest: Vec<usize> = free[1..].to_vec();
        rest.remove(k - 1);
        pairs.push((a, b));
        enumerate_rec(&mut rest, pairs, out);
        pairs.pop();
    }
}

/// The skew congruence `T A T^t` of a skew matrix by a rectangular matrix.
pub fn congruence<T: RingElem>(
    t: &Matrix<T>,
    a: &SkewMatrix<T>,
) -> Result<SkewMatrix<T>, LinalgError> {
    if t.cols() != a.dim() {
        return Err(LinalgError::DimensionMismatch(format!(
            "congruence of {}x{} with skew {}",
            t.rows(),
            t.cols(),
            a.dim()
        )));
    }
    let prod = t.matmul(&a.to_matrix())?.matmul(&t.transpose())?;
    let skew = SkewMatrix::from_upper_fn(t.rows(), |i, j| prod.get(i, j).clone());
    debug_assert!((0..t.rows()).all(|i| {
        (0..t.rows()).all(|j| skew.get(i, j) == prod.get(i, j).clone())
    }));
    Ok(skew)
}
