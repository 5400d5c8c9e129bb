//! Schur polynomials via the bialternant quotient, power sums, and the
//! Vandermonde product.

use super::SymfunError;
use crate::combinat::Partition;
use crate::linalg::Matrix;
use crate::ring::Var;
use crate::QPoly;

/// `prod_{1 <= i < j <= m} (x_i - x_j)`.
pub fn vandermonde(m: usize) -> QPoly {
    let mut out = QPoly::one();
    for i in 1..=m as u32 {
        for j in i + 1..=m as u32 {
            out = out.mul_ref(&(QPoly::var(Var::X(i)) - QPoly::var(Var::X(j))));
        }
    }
    out
}

/// The power sum `p_r = x_1^r + ... + x_m^r`.
pub fn power_sum(r: u32, m: usize) -> QPoly {
    let mut out = QPoly::zero();
    for i in 1..=m as u32 {
        out.add_term(crate::ring::Monomial::var_pow(Var::X(i), r), num_traits::One::one());
    }
    out
}

/// Schur polynomial in `m` variables by the bialternant quotient
/// `det(x_i^{l_j}) / det(x_i^{m-j})` with `l = lambda + delta_m`.
///
/// Rejects `len(lambda) > m` (the polynomial would be zero, but silently
/// returning zero hides caller bugs).
pub fn schur(lam: &Partition, m: usize) -> Result<QPoly, SymfunError> {
    if lam.len() > m {
        return Err(SymfunError::TooManyParts {
            len: lam.len(),
            vars: m,
        });
    }
    if m == 0 {
        return Ok(QPoly::one());
    }
    let l = lam.staircase_shift(m)?;
    let alternant = Matrix::from_fn(m, m, |i, j| {
        QPoly::var_pow(Var::X(i as u32 + 1), l[j])
    })
    .det_expansion()?;
    Ok(alternant.exact_div(&vandermonde(m))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_partitions;
    use crate::ring::Monomial;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn x(i: u32) -> QPoly {
        QPoly::var(Var::X(i))
    }

    /// Independent oracle: sum of monomials over semistandard tableaux of
    /// shape `lambda` with entries in `1..=m` (rows weakly increase, columns
    /// strictly increase).
    fn schur_by_tableaux(lam: &Partition, m: usize) -> QPoly {
        let shape: Vec<usize> = lam.parts().iter().map(|&p| p as usize).collect();
        let mut filling: Vec<Vec<u32>> = shape.iter().map(|&r| vec![0; r]).collect();
        let mut out = QPoly::zero();
        fill(&shape, &mut filling, 0, 0, m as u32, &mut out);
        out
    }

    fn fill(
        shape: &[usize],
        filling: &mut Vec<Vec<u32>>,
        row: usize,
        col: usize,
        m: u32,
        out: &mut QPoly,
    ) {
        if row == shape.len() {
            let mut pairs = Vec::new();
            for r in filling.iter() {
                for &v in r {
                    pairs.push((Var::X(v), 1));
                }
            }
            out.add_term(Monomial::from_pairs(pairs), num_traits::One::one());
            return;
        }
        if col == shape[row] {
            fill(shape, filling, row + 1, 0, m, out);
            return;
        }
        let lo = {
            let left = if col > 0 { filling[row][col - 1] } else { 1 };
            let above = if row > 0 { filling[row - 1][col] + 1 } else { 1 };
            left.max(above)
        };
        for v in lo..=m {
            filling[row][col] = v;
            fill(shape, filling, row, col + 1, m, out);
        }
    }

    #[test]
    fn schur_basics() {
        assert_eq!(schur(&part(&[1]), 2).unwrap(), x(1) + x(2));
        assert_eq!(
            schur(&part(&[2, 1]), 2).unwrap(),
            x(1).pow(2) * x(2) + x(1) * x(2).pow(2)
        );
        assert_eq!(schur(&part(&[2, 2]), 2).unwrap(), x(1).pow(2) * x(2).pow(2));
        assert_eq!(schur(&Partition::empty(), 3).unwrap(), QPoly::one());
    }

    #[test]
    fn schur_rejects_too_many_parts() {
        assert!(matches!(
            schur(&part(&[1, 1, 1]), 2),
            Err(SymfunError::TooManyParts { .. })
        ));
    }

    #[test]
    fn schur_matches_tableau_oracle() {
        for m in 2..=4usize {
            for lam in enumerate_partitions(5, m) {
                assert_eq!(
                    schur(&lam, m).unwrap(),
                    schur_by_tableaux(&lam, m),
                    "shape {lam} in {m} vars"
                );
            }
        }
    }

    #[test]
    fn power_sum_basics() {
        assert_eq!(power_sum(1, 3), x(1) + x(2) + x(3));
        assert_eq!(power_sum(2, 2), x(1).pow(2) + x(2).pow(2));
    }

    #[test]
    fn power_sum_two_extra_variables_shift() {
        // p_2 after substituting (x1, x2) -> (t, -t) picks up 2 t^2.
        use std::collections::BTreeMap;
        let p2 = power_sum(2, 4);
        let mut b = BTreeMap::new();
        b.insert(Var::X(1), QPoly::var(Var::T));
        b.insert(Var::X(2), QPoly::var(Var::T).neg_ref());
        b.insert(Var::X(3), x(1));
        b.insert(Var::X(4), x(2));
        let got = p2.substitute(&b);
        let expected = QPoly::var_pow(Var::T, 2).scale(&crate::qint(2)) + power_sum(2, 2);
        assert_eq!(got, expected);
    }
}
