//! One-row generator families and the generator-determinant construction
//! that produces Schur-like polynomials from them.

use super::schur::power_sum;
use super::SymfunError;
use crate::combinat::Partition;
use crate::linalg::Matrix;
use crate::ring::{SeriesCap, Var};
use crate::{qint, QPoly, QRat};

/// Complete homogeneous symmetric polynomial `h_r` in `m` variables
/// (all monomials of degree `r`).
pub fn complete_homogeneous(r: u32, m: usize) -> QPoly {
    let mut out = QPoly::zero();
    let mut exps = vec![0u32; m];
    fn rec(exps: &mut Vec<u32>, i: usize, remaining: u32, out: &mut QPoly) {
        if i + 1 == exps.len() {
            exps[i] = remaining;
            let pairs: Vec<(Var, u32)> = exps
                .iter()
                .enumerate()
                .map(|(k, &e)| (Var::X(k as u32 + 1), e))
                .collect();
            out.add_term(crate::ring::Monomial::from_pairs(pairs), num_traits::One::one());
            return;
        }
        for e in 0..=remaining {
            exps[i] = e;
            rec(exps, i + 1, remaining - e, out);
        }
        exps[i] = 0;
    }
    if m == 0 {
        return if r == 0 { QPoly::one() } else { QPoly::zero() };
    }
    rec(&mut exps, 0, r, &mut out);
    out
}

/// Hall-Littlewood one-row generator `q_r(x; t)` in `m` variables: the
/// coefficient of `y^r` in `prod_i (1 - t x_i y) / (1 - x_i y)`. It is
/// homogeneous of degree `r` in the `x_i`; at `t = 0` it reduces to `h_r`.
pub fn hl_q_generator(r: u32, m: usize) -> Result<QPoly, SymfunError> {
    let y = Var::Y(1);
    let cap = SeriesCap::y(r);
    let t = QPoly::var(Var::T);
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for i in 1..=m as u32 {
        let xy = QPoly::var(Var::X(i)).mul_ref(&QPoly::var(y));
        num = num.mul_capped(&(QPoly::one() - t.mul_ref(&xy)), &cap);
        den = den.mul_capped(&(QPoly::one().sub_ref(&xy)), &cap);
    }
    let series = num.mul_capped(&den.series_inverse(&cap)?, &cap);
    Ok(extract_y_coefficient(&series, y, r))
}

/// Coefficient of `y^r`, with the `y` factor removed.
fn extract_y_coefficient(p: &QPoly, y: Var, r: u32) -> QPoly {
    let mut out = QPoly::zero();
    for (m, c) in p.iter() {
        if m.exponent(y) == r {
            let rest: Vec<(Var, u32)> = m.iter().filter(|&(v, _)| v != y).collect();
            out.add_term(crate::ring::Monomial::from_pairs(rest), c.clone());
        }
    }
    out
}

/// Macdonald one-row generator `g_r(x; q, t)` in `m` variables, with powers of
/// the parameter `q` truncated beyond `q_order`.
///
/// The generating function is `exp(sum_k c_k p_k y^k / k)` with
/// `c_k = (1 - t^k) / (1 - q^k)`; extracting the coefficient of `y^r` from
/// `G' = H' G` gives the recurrence `r g_r = sum_{k=1}^{r} c_k p_k g_{r-k}`.
/// The factor `(1 - q^k)^{-1}` is expanded as `1 + q^k + q^{2k} + ...` up to
/// `q_order`. At `q = 0` this reduces to the Hall-Littlewood generator.
pub fn macdonald_g_generator(r: u32, m: usize, q_order: u32) -> Result<QPoly, SymfunError> {
    let qcap = SeriesCap::q(q_order);
    let t = QPoly::var(Var::T);
    let coeff = |k: u32| -> QPoly {
        // (1 - t^k)(1 + q^k + q^{2k} + ...) truncated in q.
        let mut geo = QPoly::zero();
        let mut e = 0u32;
        while e <= q_order {
            geo.add_term(crate::ring::Monomial::var_pow(Var::Q, e), num_traits::One::one());
            e += k;
        }
        (QPoly::one() - t.pow(k)).mul_ref(&geo)
    };
    let mut g: Vec<QPoly> = vec![QPoly::one()];
    for s in 1..=r {
        let mut acc = QPoly::zero();
        for k in 1..=s {
            let term = coeff(k)
                .mul_ref(&power_sum(k, m))
                .mul_ref(&g[(s - k) as usize]);
            acc = acc.add_ref(&term).truncate(&qcap);
        }
        g.push(acc.scale(&(QRat::from_integer(1.into()) / qint(s as i64))));
    }
    Ok(g[r as usize].clone())
}

/// The generator determinant `det(g_{lambda_i - i + j})` over an arbitrary
/// one-row family (`g_k = 0` for `k < 0`). With `h_r` this is the
/// Jacobi-Trudi construction of the Schur polynomial; with the
/// Hall-Littlewood and Macdonald generators it produces the big Schur
/// polynomials and their two-parameter analogues.
pub fn row_determinant_schur(
    lam: &Partition,
    generator: &dyn Fn(u32) -> Result<QPoly, SymfunError>,
) -> Result<QPoly, SymfunError> {
    let l = lam.len();
    if l == 0 {
        return Ok(QPoly::one());
    }
    let mut entries: Vec<Vec<QPoly>> = Vec::with_capacity(l);
    for i in 1..=l {
        let mut row = Vec::with_capacity(l);
        for j in 1..=l {
            let idx = lam.part(i) as i64 - i as i64 + j as i64;
            if idx < 0 {
                row.push(QPoly::zero());
            } else {
                row.push(generator(idx as u32)?);
            }
        }
        entries.push(row);
    }
    Ok(Matrix::from_rows(entries)
        .expect("rows are rectangular by construction")
        .det_expansion()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_partitions;
    use crate::ring::Grading;
    use crate::symfun::schur;
    use std::collections::BTreeMap;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn h_generator_basics() {
        assert_eq!(complete_homogeneous(0, 3), QPoly::one());
        let h2 = complete_homogeneous(2, 2);
        let x = |i: u32| QPoly::var(Var::X(i));
        assert_eq!(h2, x(1).pow(2) + x(1) * x(2) + x(2).pow(2));
    }

    #[test]
    fn jacobi_trudi_matches_bialternant() {
        for lam in enumerate_partitions(6, 6) {
            for m in lam.len().max(1)..=6 {
                let gen = |r: u32| Ok(complete_homogeneous(r, m));
                assert_eq!(
                    row_determinant_schur(&lam, &gen).unwrap(),
                    schur(&lam, m).unwrap(),
                    "shape {lam} in {m} variables"
                );
            }
        }
    }

    #[test]
    fn hl_q_basics() {
        assert_eq!(hl_q_generator(0, 3).unwrap(), QPoly::one());
        // q_1 = (1 - t)(x1 + x2)
        let q1 = hl_q_generator(1, 2).unwrap();
        let expected = (QPoly::one() - QPoly::var(Var::T))
            .mul_ref(&(QPoly::var(Var::X(1)) + QPoly::var(Var::X(2))));
        assert_eq!(q1, expected);
    }

    #[test]
    fn hl_q_at_t_zero_is_h() {
        for r in 0..=4u32 {
            let q = hl_q_generator(r, 3).unwrap();
            let at0 = q.substitute_one(Var::T, &QPoly::zero());
            assert_eq!(at0, complete_homogeneous(r, 3));
        }
    }

    #[test]
    fn hl_q_is_homogeneous() {
        for r in 1..=5u32 {
            let q = hl_q_generator(r, 3).unwrap();
            for (m, _) in q.iter() {
                assert_eq!(m.degree_under(Grading::X), r);
                assert_eq!(m.exponent(Var::Y(1)), 0);
            }
        }
    }

    #[test]
    fn macdonald_g_basics() {
        assert_eq!(macdonald_g_generator(0, 2, 3).unwrap(), QPoly::one());
        // g_1 truncated at q^2: (1 - t)(1 + q + q^2)(x1 + x2)
        let g1 = macdonald_g_generator(1, 2, 2).unwrap();
        let expected = (QPoly::one() - QPoly::var(Var::T))
            .mul_ref(
                &(QPoly::one() + QPoly::var(Var::Q) + QPoly::var_pow(Var::Q, 2)),
            )
            .mul_ref(&(QPoly::var(Var::X(1)) + QPoly::var(Var::X(2))));
        assert_eq!(g1, expected);
    }

    #[test]
    fn macdonald_g_at_q_zero_is_hl_q() {
        for r in 0..=4u32 {
            let g = macdonald_g_generator(r, 3, 3).unwrap();
            let at0 = g.substitute_one(Var::Q, &QPoly::zero());
            assert_eq!(at0, hl_q_generator(r, 3).unwrap());
        }
    }

    #[test]
    fn macdonald_g_matches_direct_exponential() {
        // Independent route: expand exp(sum_k c_k p_k y^k / k) in the
        // generating variable and extract coefficients.
        let m = 2;
        let q_order = 2;
        let r_max = 3u32;
        let cap = SeriesCap::y(r_max);
        let mut h = QPoly::zero();
        for k in 1..=r_max {
            let mut geo = QPoly::zero();
            let mut e = 0u32;
            while e <= q_order {
                geo.add_term(crate::ring::Monomial::var_pow(Var::Q, e), num_traits::One::one());
                e += k;
            }
            let ck = (QPoly::one() - QPoly::var(Var::T).pow(k)).mul_ref(&geo);
            let term = ck
                .mul_ref(&power_sum(k, m))
                .mul_ref(&QPoly::var_pow(Var::Y(1), k))
                .scale(&(QRat::from_integer(1.into()) / qint(k as i64)));
            h = h.add_ref(&term);
        }
        let gexp = h.series_exp(&cap).unwrap();
        let qcap = SeriesCap::q(q_order);
        for r in 0..=r_max {
            let direct = extract_y_coefficient(&gexp, Var::Y(1), r).truncate(&qcap);
            assert_eq!(direct, macdonald_g_generator(r, m, q_order).unwrap(), "r = {r}");
        }
    }

    #[test]
    fn generator_determinant_small_shapes() {
        // 1x1 determinant is the generator itself.
        let gen = |r: u32| hl_q_generator(r, 3);
        assert_eq!(
            row_determinant_schur(&part(&[1]), &gen).unwrap(),
            hl_q_generator(1, 3).unwrap()
        );
        // For (1,1): q1^2 - q2 q0.
        let got = row_determinant_schur(&part(&[1, 1]), &gen).unwrap();
        let q = |r: u32| hl_q_generator(r, 3).unwrap();
        let expected = q(1).pow(2) - q(2).mul_ref(&q(0));
        assert_eq!(got, expected);
    }

    #[test]
    fn big_schur_at_t_zero_is_schur() {
        let m = 3;
        let gen = |r: u32| hl_q_generator(r, m);
        for lam in enumerate_partitions(4, m) {
            let s_big = row_determinant_schur(&lam, &gen).unwrap();
            let at0 = s_big.substitute_one(Var::T, &QPoly::zero());
            assert_eq!(at0, schur(&lam, m).unwrap());
        }
    }

    #[test]
    fn big_schur_nonzero_beyond_variable_count() {
        // Unlike Schur polynomials, the generator determinant does not vanish
        // when the shape is longer than the variable count: S_(1,1) in one
        // variable is -t(1-t) x1^2.
        let gen = |r: u32| hl_q_generator(r, 1);
        let got = row_determinant_schur(&part(&[1, 1]), &gen).unwrap();
        let x1 = QPoly::var(Var::X(1));
        let t = QPoly::var(Var::T);
        let expected = t.neg_ref().mul_ref(&(QPoly::one() - t.clone())).mul_ref(&x1.pow(2));
        assert_eq!(got, expected);
    }

    #[test]
    fn substitute_t_check() {
        let mut b = BTreeMap::new();
        b.insert(Var::T, QPoly::zero());
        let q2 = hl_q_generator(2, 2).unwrap().substitute(&b);
        assert_eq!(q2, complete_homogeneous(2, 2));
    }
}
