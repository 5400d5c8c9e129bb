//! The two-block determinant family behind the Cauchy-type Pfaffian
//! identities, generic over the ring of entries so the same constructions
//! serve symbolic checks (polynomial entries) and randomized checks (rational
//! entries).

use super::SymfunError;
use crate::combinat::enumerate_pn;
use crate::linalg::{Matrix, RingElem};

/// `t^e` by repeated squaring.
pub(crate) fn rpow<T: RingElem>(t: &T, e: u32) -> T {
    let mut acc = T::one();
    let mut base = t.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base.clone();
        }
        k >>= 1;
        if k > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

fn check_len<T>(name: &str, v: &[T], expected: usize) -> Result<(), SymfunError> {
    if v.len() != expected {
        return Err(SymfunError::TupleLength {
            expected,
            got: v.len(),
        });
    }
    let _ = name;
    Ok(())
}

/// The `2n x 2n` matrix with left-block columns `a_i x_i^{n-j} y_i^{j-1}`
/// (`1 <= j <= n`) and right-block columns `b_i x_i^{2n-j} y_i^{j-n-1}`
/// (`n+1 <= j <= 2n`).
pub fn vn_matrix<T: RingElem>(
    x: &[T],
    y: &[T],
    a: &[T],
    b: &[T],
    n: usize,
) -> Result<Matrix<T>, SymfunError> {
    let dim = 2 * n;
    check_len("x", x, dim)?;
    check_len("y", y, dim)?;
    check_len("a", a, dim)?;
    check_len("b", b, dim)?;
    Ok(Matrix::from_fn(dim, dim, |i, j| {
        let j1 = j + 1; // 1-based column
        if j1 <= n {
            a[i].clone() * rpow(&x[i], (n - j1) as u32) * rpow(&y[i], (j1 - 1) as u32)
        } else {
            b[i].clone() * rpow(&x[i], (dim - j1) as u32) * rpow(&y[i], (j1 - n - 1) as u32)
        }
    }))
}

/// Determinant of [`vn_matrix`].
pub fn vn_poly<T: RingElem>(
    x: &[T],
    y: &[T],
    a: &[T],
    b: &[T],
    n: usize,
) -> Result<T, SymfunError> {
    Ok(vn_matrix(x, y, a, b, n)?.det_expansion()?)
}

/// The `2n x 2n` block alternant with columns `a_i x_i^{alpha_k}`
/// (`k = 1..n`) followed by `x_i^{beta_k}`, for raw exponent vectors.
pub fn a_alpha_beta<T: RingElem>(
    x: &[T],
    a: &[T],
    alpha: &[u32],
    beta: &[u32],
) -> Result<Matrix<T>, SymfunError> {
    let n = alpha.len();
    if beta.len() != n {
        return Err(SymfunError::TupleLength {
            expected: n,
            got: beta.len(),
        });
    }
    let dim = 2 * n;
    check_len("x", x, dim)?;
    check_len("a", a, dim)?;
    Ok(Matrix::from_fn(dim, dim, |i, j| {
        if j < n {
            a[i].clone() * rpow(&x[i], alpha[j])
        } else {
            rpow(&x[i], beta[j - n])
        }
    }))
}

/// The double sum `sum_{lambda, mu} det a_{lambda + delta_n, mu + delta_n}`
/// over the `(alpha | alpha+1)` family fitting in `n` rows. The staircase
/// `delta_n` is added to the partition exponents so that the Laplace
/// expansion of each summand produces Schur-function alternants.
pub fn un_poly<T: RingElem>(x: &[T], a: &[T], n: usize) -> Result<T, SymfunError> {
    let fam = enumerate_pn(n);
    let shifted: Vec<Vec<u32>> = fam
        .iter()
        .map(|lam| lam.staircase_shift(n))
        .collect::<Result<_, _>>()?;
    let mut acc = T::zero();
    for alpha in &shifted {
        for beta in &shifted {
            let det = a_alpha_beta(x, a, alpha, beta)?.det_expansion()?;
            acc = acc + det;
        }
    }
    Ok(acc)
}

/// Numerator and denominator of the Pfaffian entry for the four-parameter
/// weighted Schur sum:
/// `num = A(x_i) B(x_j) - A(x_j) B(x_i)` with `A(x) = x + a x^2` and
/// `B(x) = 1 - a(b+c) x^2 - abc x^3`;
/// `den = (1 - ab x_i^2)(1 - ab x_j^2)(1 - abcd x_i^2 x_j^2)`.
pub fn zn_entry_parts<T: RingElem>(xi: &T, xj: &T, a: &T, b: &T, c: &T, d: &T) -> (T, T) {
    let col_a = |x: &T| x.clone() + a.clone() * x.clone() * x.clone();
    let col_b = |x: &T| {
        let x2 = x.clone() * x.clone();
        let x3 = x2.clone() * x.clone();
        T::one() - a.clone() * (b.clone() + c.clone()) * x2 - a.clone() * b.clone() * c.clone() * x3
    };
    let num = col_a(xi) * col_b(xj) - col_a(xj) * col_b(xi);
    let xi2 = xi.clone() * xi.clone();
    let xj2 = xj.clone() * xj.clone();
    let ab = a.clone() * b.clone();
    let abcd = ab.clone() * c.clone() * d.clone();
    let den = (T::one() - ab.clone() * xi2.clone())
        * (T::one() - ab * xj2.clone())
        * (T::one() - abcd * xi2 * xj2);
    (num, den)
}

/// The `2n x 2n` matrix whose determinant is the weighted-sum numerator:
/// the same two-block determinant evaluated at
/// `(X^2, 1 + abcd X^4; X + a X^2, 1 - a(b+c) X^2 - abc X^3)`.
pub fn fn_matrix<T: RingElem>(
    x: &[T],
    a: &T,
    b: &T,
    c: &T,
    d: &T,
) -> Result<Matrix<T>, SymfunError> {
    let dim = x.len();
    if dim % 2 != 0 {
        return Err(SymfunError::TupleLength {
            expected: dim + 1,
            got: dim,
        });
    }
    let n = dim / 2;
    let abcd = a.clone() * b.clone() * c.clone() * d.clone();
    let xs: Vec<T> = x.iter().map(|xi| xi.clone() * xi.clone()).collect();
    let ys: Vec<T> = x
        .iter()
        .map(|xi| T::one() + abcd.clone() * rpow(xi, 4))
        .collect();
    let aa: Vec<T> = x
        .iter()
        .map(|xi| xi.clone() + a.clone() * xi.clone() * xi.clone())
        .collect();
    let bb: Vec<T> = x
        .iter()
        .map(|xi| {
            let x2 = xi.clone() * xi.clone();
            let x3 = x2.clone() * xi.clone();
            T::one()
                - a.clone() * (b.clone() + c.clone()) * x2
                - a.clone() * b.clone() * c.clone() * x3
        })
        .collect();
    vn_matrix(&xs, &ys, &aa, &bb, n)
}

/// Determinant of [`fn_matrix`].
pub fn fn_poly<T: RingElem>(
    x: &[T],
    a: &T,
    b: &T,
    c: &T,
    d: &T,
) -> Result<T, SymfunError> {
    Ok(fn_matrix(x, a, b, c, d)?.det_expansion()?)
}
