//! Bodies of the registered identity checks.
//!
//! Each body takes resolved parameters plus a `negative` flag that applies a
//! deliberate mutation (sign flip, dropped factor, omitted correction) so the
//! verifier itself can be mutation-tested: every check must fail, with a
//! witness, under its mutation.

use super::engines::{outcome_from, poly_witness, qpow, randomized_trials, ratfun_witness, Sampler};
use super::pipeline;
use super::registry::CheckParams;
use super::report::{CheckOutcome, Witness};
use super::VerifyError;
use crate::combinat::{enumerate_partitions, enumerate_pn};
use crate::linalg::{congruence, Matrix, SkewMatrix};
use crate::ring::{Monomial, SeriesCap, Var};
use crate::symfun::{
    a_alpha_beta, fn_poly, schur, un_poly, vandermonde, vn_poly, weighted_sum, zn_entry_parts,
    WeightKind,
};
use crate::{qint, QPoly, QRat, QRatFun};
use itertools::Itertools;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

fn internal<E: std::fmt::Display>(e: E) -> VerifyError {
    VerifyError::Internal(e.to_string())
}

fn pvar(v: Var) -> QPoly {
    QPoly::var(v)
}

fn xs(m: usize) -> Vec<QPoly> {
    Var::xs(m).into_iter().map(QPoly::var).collect()
}

fn family(mk: fn(u32) -> Var, m: usize) -> Vec<QPoly> {
    (1..=m as u32).map(|i| QPoly::var(mk(i))).collect()
}

fn ones(m: usize) -> Vec<QPoly> {
    vec![QPoly::one(); m]
}

fn binom2(n: usize) -> u32 {
    (n * (n.saturating_sub(1)) / 2) as u32
}

fn neg_if(cond: bool, p: QPoly) -> QPoly {
    if cond {
        p.neg_ref()
    } else {
        p
    }
}

/// `a_i b_j - a_j b_i`.
fn cross<T: crate::linalg::RingElem>(ai: &T, bi: &T, aj: &T, bj: &T) -> T {
    ai.clone() * bj.clone() - aj.clone() * bi.clone()
}

fn point_values(pt: &BTreeMap<Var, QRat>, mk: fn(u32) -> Var, m: usize) -> Vec<QRat> {
    (1..=m as u32).map(|i| pt[&mk(i)].clone()).collect()
}

// ---- Minor summation ----

pub fn msf(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let two_n = 2 * p.n.unwrap() as usize;
    let big_n = p.big_n.unwrap() as usize;
    let trials = p.trials.unwrap();
    let mut sampler = Sampler::new(p.seed.unwrap(), "msf");
    for trial in 0..trials {
        let t = Matrix::from_fn(two_n, big_n, |_, _| qint(sampler.int(-9, 9)));
        let a = SkewMatrix::from_upper_fn(big_n, |_, _| qint(sampler.int(-9, 9)));
        let mut lhs = qint(0);
        for idx in (0..big_n).combinations(two_n) {
            let pf = a
                .principal_submatrix(&idx)
                .map_err(internal)?
                .pfaffian_matchings()
                .map_err(internal)?;
            let det = t
                .select_cols(&idx)
                .map_err(internal)?
                .determinant()
                .map_err(internal)?;
            lhs += pf * det;
        }
        let mut rhs = congruence(&t, &a)
            .map_err(internal)?
            .pfaffian_expansion()
            .map_err(internal)?;
        if negative {
            rhs = -rhs + qint(1);
        }
        if lhs != rhs {
            let mut assignment = BTreeMap::new();
            assignment.insert("trial".to_string(), trial.to_string());
            return Ok(CheckOutcome::fail(Witness::Point {
                assignment,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }));
        }
    }
    Ok(CheckOutcome::pass())
}

// ---- Product Pfaffian ----

pub fn product_pfaffian(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let sk = SkewMatrix::from_upper_fn(2 * n, |i, j| {
        pvar(Var::X(i as u32 + 1)).mul_ref(&pvar(Var::Y(j as u32 + 1)))
    });
    let lhs = sk.pfaffian_matchings().map_err(internal)?;
    let mut rhs = QPoly::one();
    for i in 1..=n {
        rhs = rhs.mul_ref(&pvar(Var::X(2 * i as u32 - 1)));
        rhs = rhs.mul_ref(&pvar(Var::Y(2 * i as u32)));
    }
    rhs = neg_if(negative, rhs);
    Ok(outcome_from(poly_witness(&lhs, &rhs)))
}

// ---- Staircase weight Pfaffian ----

pub fn omega_pfaffian(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let max_size = p.max_size.unwrap();
    let abcd = pvar(Var::A)
        .mul_ref(&pvar(Var::B))
        .mul_ref(&pvar(Var::C))
        .mul_ref(&pvar(Var::D));
    for lam in enumerate_partitions(max_size, 2 * n) {
        let l = lam.staircase_shift(2 * n).map_err(internal)?;
        let sk = SkewMatrix::from_upper_fn(2 * n, |i, j| {
            let li = l[i];
            let lj = l[j];
            QPoly::from_term(
                Monomial::from_pairs([
                    (Var::A, li / 2),
                    (Var::B, (li - 1) / 2),
                    (Var::C, lj.div_ceil(2)),
                    (Var::D, lj / 2),
                ]),
                QRat::one(),
            )
        });
        let lhs = sk.pfaffian_matchings().map_err(internal)?;
        let mut rhs = abcd.pow(binom2(n)).mul_ref(&lam.omega_weight());
        if negative {
            rhs = rhs.mul_ref(&abcd);
        }
        if let Some(w) = poly_witness(&lhs, &rhs) {
            return Ok(CheckOutcome::fail(w));
        }
    }
    Ok(CheckOutcome::pass())
}

// ---- The four geometric case sums ----

pub fn case_sums(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let cap_deg = p.degree.unwrap();
    let cap = SeriesCap::x(cap_deg);
    let (x1, x2) = (pvar(Var::X(1)), pvar(Var::X(2)));
    let ab = pvar(Var::A).mul_ref(&pvar(Var::B));
    let abcd = ab.mul_ref(&pvar(Var::C)).mul_ref(&pvar(Var::D));
    let den = (QPoly::one().sub_ref(&ab.mul_ref(&x1.pow(2))))
        .mul_ref(&(QPoly::one().sub_ref(&ab.mul_ref(&x2.pow(2)))))
        .mul_ref(&(QPoly::one().sub_ref(&abcd.mul_ref(&x1.pow(2)).mul_ref(&x2.pow(2)))));

    let closed_numerators: [(&str, QPoly); 4] = {
        let one_plus = QPoly::one() + ab.mul_ref(&x1).mul_ref(&x2);
        [
            ("odd-even", (x1.sub_ref(&x2)).mul_ref(&one_plus)),
            ("even-even", pvar(Var::A).mul_ref(&(x1.pow(2) - x2.pow(2)))),
            (
                "odd-odd",
                pvar(Var::A)
                    .mul_ref(&pvar(Var::B))
                    .mul_ref(&pvar(Var::C))
                    .mul_ref(&x1)
                    .mul_ref(&x2)
                    .mul_ref(&(x1.pow(2) - x2.pow(2))),
            ),
            (
                "even-odd",
                pvar(Var::A)
                    .mul_ref(&pvar(Var::C))
                    .mul_ref(&x1)
                    .mul_ref(&x2)
                    .mul_ref(&(x1.sub_ref(&x2)))
                    .mul_ref(&one_plus),
            ),
        ]
    };

    // Truncated double sums, case by case.
    let weight = |a: u32, b: u32, c: u32, d: u32| {
        QPoly::from_term(
            Monomial::from_pairs([(Var::A, a), (Var::B, b), (Var::C, c), (Var::D, d)]),
            QRat::one(),
        )
    };
    let alt = |k: u32, l: u32| -> QPoly {
        // x1^k x2^l - x2^k x1^l
        QPoly::from_term(
            Monomial::from_pairs([(Var::X(1), k), (Var::X(2), l)]),
            QRat::one(),
        ) - QPoly::from_term(
            Monomial::from_pairs([(Var::X(2), k), (Var::X(1), l)]),
            QRat::one(),
        )
    };
    let mut sums = vec![QPoly::zero(); 4];
    for s in 0..=cap_deg {
        for r in s..=cap_deg {
            // (i) k = 2r+1, l = 2s
            if 2 * r + 1 + 2 * s <= cap_deg {
                sums[0] = sums[0].add_ref(&weight(r, r, s, s).mul_ref(&alt(2 * r + 1, 2 * s)));
            }
            // (ii) k = 2r, l = 2s, r > s
            if r > s && 2 * r + 2 * s <= cap_deg {
                sums[1] = sums[1].add_ref(&weight(r, r - 1, s, s).mul_ref(&alt(2 * r, 2 * s)));
            }
            // (iii) k = 2r+1, l = 2s+1, r > s
            if r > s && 2 * r + 2 * s + 2 <= cap_deg {
                sums[2] =
                    sums[2].add_ref(&weight(r, r, s + 1, s).mul_ref(&alt(2 * r + 1, 2 * s + 1)));
            }
            // (iv) k = 2r+2, l = 2s+1
            if 2 * r + 2 * s + 3 <= cap_deg {
                sums[3] =
                    sums[3].add_ref(&weight(r + 1, r, s + 1, s).mul_ref(&alt(2 * r + 2, 2 * s + 1)));
            }
        }
    }

    let inv_den = den.series_inverse(&cap).map_err(internal)?;
    for (idx, (name, num)) in closed_numerators.iter().enumerate() {
        let mut num = num.clone();
        if negative && idx == 0 {
            num = num.neg_ref();
        }
        let series = num.truncate(&cap).mul_capped(&inv_den, &cap);
        if let Some(w) = poly_witness(&sums[idx], &series) {
            let detail = match w {
                Witness::Term {
                    monomial,
                    lhs_coefficient,
                    rhs_coefficient,
                } => Witness::Term {
                    monomial: format!("{name}: {monomial}"),
                    lhs_coefficient,
                    rhs_coefficient,
                },
                other => other,
            };
            return Ok(CheckOutcome::fail(detail));
        }
    }

    // Summing the four closed forms reproduces the Pfaffian entry exactly.
    let total_num = closed_numerators
        .iter()
        .fold(QPoly::zero(), |acc, (_, n)| acc.add_ref(n));
    let (entry_num, entry_den) = zn_entry_parts(
        &x1,
        &x2,
        &pvar(Var::A),
        &pvar(Var::B),
        &pvar(Var::C),
        &pvar(Var::D),
    );
    let lhs = QRatFun::new(total_num, den).map_err(internal)?;
    let rhs = QRatFun::new(entry_num, entry_den).map_err(internal)?;
    Ok(outcome_from(ratfun_witness(&lhs, &rhs)))
}

// ---- Cauchy-type Pfaffian identities ----

fn fundamental_symbolic(n: usize, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let m = 2 * n;
    let entry = |i: usize, j: usize| -> QRatFun {
        let (i, j) = (i as u32 + 1, j as u32 + 1);
        let num = cross(
            &pvar(Var::CoefA(i)),
            &pvar(Var::CoefB(i)),
            &pvar(Var::CoefA(j)),
            &pvar(Var::CoefB(j)),
        )
        .mul_ref(&cross(
            &pvar(Var::CoefC(i)),
            &pvar(Var::CoefD(i)),
            &pvar(Var::CoefC(j)),
            &pvar(Var::CoefD(j)),
        ));
        let den = cross(&pvar(Var::X(i)), &pvar(Var::Y(i)), &pvar(Var::X(j)), &pvar(Var::Y(j)));
        QRatFun::new(num, den).expect("xy cross determinant is nonzero")
    };
    let mut lhs = SkewMatrix::from_upper_fn(m, entry)
        .pfaffian_expansion()
        .map_err(internal)?;
    if negative {
        lhs = lhs.neg_ref();
    }
    let v_ab = vn_poly(&xs(m), &family(Var::Y, m), &family(Var::CoefA, m), &family(Var::CoefB, m), n)
        .map_err(internal)?;
    let v_cd = vn_poly(&xs(m), &family(Var::Y, m), &family(Var::CoefC, m), &family(Var::CoefD, m), n)
        .map_err(internal)?;
    let mut den = QPoly::one();
    for i in 1..=m as u32 {
        for j in i + 1..=m as u32 {
            den = den.mul_ref(&cross(&pvar(Var::X(i)), &pvar(Var::Y(i)), &pvar(Var::X(j)), &pvar(Var::Y(j))));
        }
    }
    let rhs = QRatFun::new(v_ab.mul_ref(&v_cd), den).map_err(internal)?;
    Ok(outcome_from(ratfun_witness(&lhs, &rhs)))
}

fn fundamental_randomized(
    n: usize,
    trials: u32,
    seed: u64,
    negative: bool,
) -> Result<CheckOutcome, VerifyError> {
    let m = 2 * n;
    let mut vars = Vec::new();
    for mk in [Var::X, Var::Y, Var::CoefA, Var::CoefB, Var::CoefC, Var::CoefD] {
        vars.extend((1..=m as u32).map(mk));
    }
    randomized_trials(trials, seed, "fundamental", &vars, |pt| {
        let xv = point_values(pt, Var::X, m);
        let yv = point_values(pt, Var::Y, m);
        let av = point_values(pt, Var::CoefA, m);
        let bv = point_values(pt, Var::CoefB, m);
        let cv = point_values(pt, Var::CoefC, m);
        let dv = point_values(pt, Var::CoefD, m);
        let mut den_prod = qint(1);
        for i in 0..m {
            for j in i + 1..m {
                let d = cross(&xv[i], &yv[i], &xv[j], &yv[j]);
                if d.is_zero() {
                    return None;
                }
                den_prod *= d;
            }
        }
        let sk = SkewMatrix::from_upper_fn(m, |i, j| {
            cross(&av[i], &bv[i], &av[j], &bv[j]) * cross(&cv[i], &dv[i], &cv[j], &dv[j])
                / cross(&xv[i], &yv[i], &xv[j], &yv[j])
        });
        let mut lhs = sk.pfaffian_expansion().ok()?;
        if negative {
            lhs = -lhs;
        }
        let v1 = vn_poly(&xv, &yv, &av, &bv, n).ok()?;
        let v2 = vn_poly(&xv, &yv, &cv, &dv, n).ok()?;
        Some((lhs, v1 * v2 / den_prod))
    })
}

pub fn fundamental(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    if n <= 2 {
        fundamental_symbolic(n, negative)
    } else {
        fundamental_randomized(n, p.trials.unwrap(), p.seed.unwrap(), negative)
    }
}

pub fn subs(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    let t = pvar(Var::T);
    let y: Vec<QPoly> = (1..=m as u32)
        .map(|i| QPoly::one() + t.mul_ref(&pvar(Var::X(i)).pow(2)))
        .collect();
    let lhs = vn_poly(&xs(m), &y, &xs(m), &ones(m), n).map_err(internal)?;
    let c = binom2(n);
    let mut rhs = t.pow(c).mul_ref(&vandermonde(m));
    rhs = neg_if(c % 2 == 1, rhs);
    rhs = neg_if(negative, rhs);
    Ok(outcome_from(poly_witness(&lhs, &rhs)))
}

fn cauchy_symbolic(n: usize, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let m = 2 * n;
    let t = pvar(Var::T);
    let entry = |i: usize, j: usize| -> QRatFun {
        let (i, j) = (i as u32 + 1, j as u32 + 1);
        let num = cross(
            &pvar(Var::CoefA(i)),
            &pvar(Var::CoefB(i)),
            &pvar(Var::CoefA(j)),
            &pvar(Var::CoefB(j)),
        );
        let den = QPoly::one().sub_ref(&t.mul_ref(&pvar(Var::X(i))).mul_ref(&pvar(Var::X(j))));
        QRatFun::new(num, den).expect("denominator has unit constant term")
    };
    let mut lhs = SkewMatrix::from_upper_fn(m, entry)
        .pfaffian_expansion()
        .map_err(internal)?;
    if negative {
        lhs = lhs.neg_ref();
    }
    let y: Vec<QPoly> = (1..=m as u32)
        .map(|i| QPoly::one() + t.mul_ref(&pvar(Var::X(i)).pow(2)))
        .collect();
    let v = vn_poly(&xs(m), &y, &family(Var::CoefA, m), &family(Var::CoefB, m), n)
        .map_err(internal)?;
    let c = binom2(n);
    let mut den = QPoly::one();
    for i in 1..=m as u32 {
        for j in i + 1..=m as u32 {
            den = den.mul_ref(
                &QPoly::one().sub_ref(&t.mul_ref(&pvar(Var::X(i))).mul_ref(&pvar(Var::X(j)))),
            );
        }
    }
    let num = neg_if(c % 2 == 1, t.pow(c).mul_ref(&v));
    let rhs = QRatFun::new(num, den).map_err(internal)?;
    Ok(outcome_from(ratfun_witness(&lhs, &rhs)))
}

fn cauchy_randomized(
    n: usize,
    trials: u32,
    seed: u64,
    negative: bool,
) -> Result<CheckOutcome, VerifyError> {
    let m = 2 * n;
    let mut vars = vec![Var::T];
    for mk in [Var::X, Var::CoefA, Var::CoefB] {
        vars.extend((1..=m as u32).map(mk));
    }
    randomized_trials(trials, seed, "cauchy", &vars, |pt| {
        let xv = point_values(pt, Var::X, m);
        let av = point_values(pt, Var::CoefA, m);
        let bv = point_values(pt, Var::CoefB, m);
        let t = pt[&Var::T].clone();
        let mut den_prod = qint(1);
        for i in 0..m {
            for j in i + 1..m {
                let d = qint(1) - t.clone() * xv[i].clone() * xv[j].clone();
                if d.is_zero() {
                    return None;
                }
                den_prod *= d;
            }
        }
        let sk = SkewMatrix::from_upper_fn(m, |i, j| {
            cross(&av[i], &bv[i], &av[j], &bv[j])
                / (qint(1) - t.clone() * xv[i].clone() * xv[j].clone())
        });
        let mut lhs = sk.pfaffian_expansion().ok()?;
        if negative {
            lhs = -lhs;
        }
        let yv: Vec<QRat> = xv
            .iter()
            .map(|x| qint(1) + t.clone() * x.clone() * x.clone())
            .collect();
        let v = vn_poly(&xv, &yv, &av, &bv, n).ok()?;
        let c = binom2(n);
        let sign = if c % 2 == 0 { qint(1) } else { qint(-1) };
        Some((lhs, sign * qpow(&t, c) * v / den_prod))
    })
}

pub fn cauchy(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    if n <= 2 {
        cauchy_symbolic(n, negative)
    } else {
        cauchy_randomized(n, p.trials.unwrap(), p.seed.unwrap(), negative)
    }
}

// ---- Determinant expansion and Laplace route ----

pub fn det_exp(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    let lhs = un_poly(&xs(m), &family(Var::CoefA, m), n).map_err(internal)?;
    let y: Vec<QPoly> = (1..=m as u32)
        .map(|i| QPoly::one().sub_ref(&pvar(Var::X(i)).pow(2)))
        .collect();
    let mut rhs = vn_poly(&xs(m), &y, &family(Var::CoefA, m), &ones(m), n).map_err(internal)?;
    rhs = neg_if(negative, rhs);
    Ok(outcome_from(poly_witness(&lhs, &rhs)))
}

pub fn laplace(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;

    // Laplace expansion of the double alternant sum over n-element row sets.
    let lhs = un_poly(&xs(m), &family(Var::CoefA, m), n).map_err(internal)?;
    let pair_product = |set: &[usize]| -> QPoly {
        let mut out = QPoly::one();
        for (pos, &i) in set.iter().enumerate() {
            for &j in &set[pos + 1..] {
                let xi = pvar(Var::X(i as u32 + 1));
                let xj = pvar(Var::X(j as u32 + 1));
                out = out.mul_ref(&xi.sub_ref(&xj));
                out = out.mul_ref(&(QPoly::one() + xi.mul_ref(&xj)));
            }
        }
        out
    };
    let mut rhs = QPoly::zero();
    for subset in (0..m).combinations(n) {
        let complement: Vec<usize> = (0..m).filter(|i| !subset.contains(i)).collect();
        let index_sum: usize = subset.iter().map(|&i| i + 1).sum();
        let sign = (index_sum + (n + 1) * n / 2) % 2 == 1;
        let mut a_i = QPoly::one();
        for &i in &subset {
            a_i = a_i.mul_ref(&pvar(Var::CoefA(i as u32 + 1)));
        }
        let term = a_i
            .mul_ref(&pair_product(&subset))
            .mul_ref(&pair_product(&complement));
        rhs = rhs.add_ref(&neg_if(sign, term));
    }
    if let Some(w) = poly_witness(&lhs, &rhs) {
        return Ok(CheckOutcome::fail(w));
    }

    // Littlewood sum over the (alpha | alpha+1) family in n variables.
    let mut sum = QPoly::zero();
    for lam in enumerate_pn(n) {
        sum = sum.add_ref(&schur(&lam, n).map_err(internal)?);
    }
    let mut product = QPoly::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            product = product.mul_ref(&(QPoly::one() + pvar(Var::X(i)).mul_ref(&pvar(Var::X(j)))));
        }
    }
    product = neg_if(negative, product);
    Ok(outcome_from(poly_witness(&sum, &product)))
}

// ---- Sundquist specializations ----

pub fn sundquist_1(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    let mut vars = Vec::new();
    for mk in [Var::X, Var::CoefA] {
        vars.extend((1..=m as u32).map(mk));
    }
    let alpha: Vec<u32> = (0..n).map(|k| 2 * (n - 1 - k) as u32).collect();
    randomized_trials(p.trials.unwrap(), p.seed.unwrap(), "sundquist-1", &vars, |pt| {
        let xv = point_values(pt, Var::X, m);
        let av = point_values(pt, Var::CoefA, m);
        let mut den = qint(1);
        for i in 0..m {
            for j in i + 1..m {
                let s = xv[i].clone() + xv[j].clone();
                if s.is_zero() {
                    return None;
                }
                den *= s;
            }
        }
        let sk = SkewMatrix::from_upper_fn(m, |i, j| {
            (av[i].clone() - av[j].clone()) / (xv[i].clone() + xv[j].clone())
        });
        let mut lhs = sk.pfaffian_expansion().ok()?;
        if negative {
            lhs = -lhs;
        }
        let det = a_alpha_beta(&xv, &av, &alpha, &alpha).ok()?.determinant().ok()?;
        let sign = if binom2(n) % 2 == 0 { qint(1) } else { qint(-1) };
        Some((lhs, sign * det / den))
    })
}

pub fn sundquist_2(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    let mut vars = Vec::new();
    for mk in [Var::X, Var::CoefA] {
        vars.extend((1..=m as u32).map(mk));
    }
    randomized_trials(p.trials.unwrap(), p.seed.unwrap(), "sundquist-2", &vars, |pt| {
        let xv = point_values(pt, Var::X, m);
        let av = point_values(pt, Var::CoefA, m);
        let mut den = qint(1);
        for i in 0..m {
            for j in i + 1..m {
                let s = qint(1) + xv[i].clone() * xv[j].clone();
                if s.is_zero() {
                    return None;
                }
                den *= s;
            }
        }
        let sk = SkewMatrix::from_upper_fn(m, |i, j| {
            (av[i].clone() - av[j].clone()) / (qint(1) + xv[i].clone() * xv[j].clone())
        });
        let mut lhs = sk.pfaffian_expansion().ok()?;
        if negative {
            lhs = -lhs;
        }
        let u = un_poly(&xv, &av, n).ok()?;
        Some((lhs, u / den))
    })
}

// ---- Structural lemmas for the two-block determinant ----

pub fn substitution_lemma(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    for k in 1..=m as u32 {
        for l in k + 1..=m as u32 {
            // Substitute x_l := x_k directly in the variable list.
            let x_sub: Vec<QPoly> = (1..=m as u32)
                .map(|i| if i == l { pvar(Var::X(k)) } else { pvar(Var::X(i)) })
                .collect();
            let lhs = vn_poly(&x_sub, &ones(m), &family(Var::CoefA, m), &ones(m), n)
                .map_err(internal)?;

            let keep: Vec<u32> = (1..=m as u32).filter(|&i| i != k && i != l).collect();
            let x_red: Vec<QPoly> = keep.iter().map(|&i| pvar(Var::X(i))).collect();
            let a_red: Vec<QPoly> = keep.iter().map(|&i| pvar(Var::CoefA(i))).collect();
            let v_red = vn_poly(&x_red, &ones(m - 2), &a_red, &ones(m - 2), n - 1)
                .map_err(internal)?;
            let mut prefactor =
                pvar(Var::CoefA(k)).sub_ref(&pvar(Var::CoefA(l)));
            for &i in &keep {
                prefactor = prefactor.mul_ref(&(pvar(Var::X(i)).sub_ref(&pvar(Var::X(k)))));
            }
            let sign = (k + l + n as u32) % 2 == 1;
            let mut rhs = neg_if(sign, prefactor.mul_ref(&v_red));
            rhs = neg_if(negative, rhs);
            if let Some(w) = poly_witness(&lhs, &rhs) {
                return Ok(CheckOutcome::fail(w));
            }
        }
    }
    Ok(CheckOutcome::pass())
}

pub fn recurrence_lemma(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    let mut vars = Vec::new();
    for mk in [Var::X, Var::CoefA, Var::CoefC] {
        vars.extend((1..=m as u32).map(mk));
    }
    randomized_trials(p.trials.unwrap(), p.seed.unwrap(), "recurrence-lemma", &vars, |pt| {
        let xv = point_values(pt, Var::X, m);
        let av = point_values(pt, Var::CoefA, m);
        let cv = point_values(pt, Var::CoefC, m);
        // Poles at x_k = x_{2n}.
        for k in 0..m - 1 {
            if xv[k] == xv[m - 1] {
                return None;
            }
        }
        let ones_v = vec![qint(1); m - 2];
        let mut lhs = qint(0);
        for k in 0..m - 1 {
            let mut factor = qint(1);
            for i in 0..m - 1 {
                if i != k {
                    factor *= xv[k].clone() - xv[i].clone();
                }
            }
            factor = factor / (xv[k].clone() - xv[m - 1].clone());
            factor *= av[k].clone() - av[m - 1].clone();
            factor *= cv[k].clone() - cv[m - 1].clone();
            let keep: Vec<usize> = (0..m).filter(|&i| i != k && i != m - 1).collect();
            let xr: Vec<QRat> = keep.iter().map(|&i| xv[i].clone()).collect();
            let ar: Vec<QRat> = keep.iter().map(|&i| av[i].clone()).collect();
            let cr: Vec<QRat> = keep.iter().map(|&i| cv[i].clone()).collect();
            let va = vn_poly(&xr, &ones_v, &ar, &ones_v, n - 1).ok()?;
            let vc = vn_poly(&xr, &ones_v, &cr, &ones_v, n - 1).ok()?;
            lhs += factor * va * vc;
        }
        if negative {
            lhs = -lhs + qint(1);
        }
        let ones_m = vec![qint(1); m];
        let va = vn_poly(&xv, &ones_m, &av, &ones_m, n).ok()?;
        let vc = vn_poly(&xv, &ones_m, &cv, &ones_m, n).ok()?;
        let mut den = qint(1);
        for i in 0..m - 1 {
            den *= xv[i].clone() - xv[m - 1].clone();
        }
        Some((lhs, va * vc / den))
    })
}

// ---- The weighted-sum determinant expression ----

pub fn det_zn(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    let mut vars = vec![Var::A, Var::B, Var::C, Var::D];
    vars.extend((1..=m as u32).map(Var::X));
    randomized_trials(p.trials.unwrap(), p.seed.unwrap(), "det-zn", &vars, |pt| {
        let xv = point_values(pt, Var::X, m);
        let (a, b, c, d) = (
            pt[&Var::A].clone(),
            pt[&Var::B].clone(),
            pt[&Var::C].clone(),
            pt[&Var::D].clone(),
        );
        let abcd = a.clone() * b.clone() * c.clone() * d.clone();
        if abcd.is_zero() {
            return None;
        }
        // Vandermonde and entry denominators must not vanish.
        let mut vdm = qint(1);
        for i in 0..m {
            for j in i + 1..m {
                let diff = xv[i].clone() - xv[j].clone();
                if diff.is_zero() {
                    return None;
                }
                vdm *= diff;
            }
        }
        let mut entry_dens_ok = true;
        let sk = SkewMatrix::from_upper_fn(m, |i, j| {
            let (num, den) = zn_entry_parts(&xv[i], &xv[j], &a, &b, &c, &d);
            if den.is_zero() {
                entry_dens_ok = false;
                qint(0)
            } else {
                num / den
            }
        });
        if !entry_dens_ok {
            return None;
        }
        let pf = sk.pfaffian_expansion().ok()?;
        let c2 = binom2(n);
        let mut lhs = pf / qpow(&abcd, c2) / vdm.clone();
        if negative {
            lhs = -lhs;
        }

        let f = fn_poly(&xv, &a, &b, &c, &d).ok()?;
        let mut den = qint(1);
        for i in 0..m {
            let u = qint(1) - a.clone() * b.clone() * xv[i].clone() * xv[i].clone();
            if u.is_zero() {
                return None;
            }
            den *= u;
        }
        den *= vdm;
        for i in 0..m {
            for j in i + 1..m {
                let u = qint(1)
                    - abcd.clone()
                        * xv[i].clone()
                        * xv[i].clone()
                        * xv[j].clone()
                        * xv[j].clone();
                if u.is_zero() {
                    return None;
                }
                den *= u;
            }
        }
        let sign = if c2 % 2 == 0 { qint(1) } else { qint(-1) };
        Some((lhs, sign * f / den))
    })
}

pub fn fn_recursion(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let m = 2 * n;
    let (a, b, c, d) = (pvar(Var::A), pvar(Var::B), pvar(Var::C), pvar(Var::D));
    let t = pvar(Var::T);
    let mut big_x = vec![t.clone(), t.neg_ref()];
    big_x.extend(xs(m));
    let lhs = fn_poly(&big_x, &a, &b, &c, &d).map_err(internal)?;

    let f_small = fn_poly(&xs(m), &a, &b, &c, &d).map_err(internal)?;
    let ab = a.mul_ref(&b);
    let ac = a.mul_ref(&c);
    let abcd = ab.mul_ref(&c).mul_ref(&d);
    let t2 = t.pow(2);
    let mut rhs = QPoly::int(2)
        .mul_ref(&t)
        .mul_ref(&(QPoly::one().sub_ref(&ab.mul_ref(&t2))))
        .mul_ref(&(QPoly::one().sub_ref(&ac.mul_ref(&t2))));
    for i in 1..=m as u32 {
        let xi2 = pvar(Var::X(i)).pow(2);
        rhs = rhs.mul_ref(&(t2.sub_ref(&xi2)));
        rhs = rhs.mul_ref(&(QPoly::one().sub_ref(&abcd.mul_ref(&t2).mul_ref(&xi2))));
    }
    rhs = rhs.mul_ref(&f_small);
    rhs = neg_if(n % 2 == 1, rhs);
    rhs = neg_if(negative, rhs);
    Ok(outcome_from(poly_witness(&lhs, &rhs)))
}

// ---- Two-variable specialization, series form ----

fn substituted_sum(n: usize, cap_deg: u32) -> Result<(QPoly, QPoly), VerifyError> {
    let m_small = 2 * n;
    let z_big = weighted_sum(WeightKind::StanleyOmega, m_small + 2, cap_deg, 0).map_err(internal)?;
    let z_small = weighted_sum(WeightKind::StanleyOmega, m_small, cap_deg, 0).map_err(internal)?;
    let mut bindings = BTreeMap::new();
    bindings.insert(Var::X(1), pvar(Var::T));
    bindings.insert(Var::X(2), pvar(Var::T).neg_ref());
    for i in 1..=m_small as u32 {
        bindings.insert(Var::X(i + 2), pvar(Var::X(i)));
    }
    let substituted = z_big.value.substitute(&bindings);
    Ok((substituted, z_small.value))
}

pub fn zn_specialization(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let cap_deg = p.degree.unwrap();
    let cap = SeriesCap::xt(cap_deg);
    let (substituted, z_small) = substituted_sum(n, cap_deg)?;
    let lhs = substituted.truncate(&cap);

    let (a, b, c, d) = (pvar(Var::A), pvar(Var::B), pvar(Var::C), pvar(Var::D));
    let t2 = pvar(Var::T).pow(2);
    let ab = a.mul_ref(&b);
    let ac = a.mul_ref(&c);
    let abcd = ab.mul_ref(&c).mul_ref(&d);
    let mut den = (QPoly::one().sub_ref(&ab.mul_ref(&t2)))
        .mul_ref(&(QPoly::one().sub_ref(&abcd.mul_ref(&t2.pow(2)))));
    for i in 1..=2 * n as u32 {
        den = den.mul_ref(
            &QPoly::one().sub_ref(&abcd.mul_ref(&t2).mul_ref(&pvar(Var::X(i)).pow(2))),
        );
    }
    let factor = (QPoly::one().sub_ref(&ac.mul_ref(&t2)))
        .mul_capped(&den.series_inverse(&cap).map_err(internal)?, &cap);
    let mut rhs = factor.mul_capped(&z_small.truncate(&cap), &cap);
    rhs = neg_if(negative, rhs);
    Ok(outcome_from(poly_witness(&lhs, &rhs)))
}

pub fn logz_step(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    let n = p.n.unwrap() as usize;
    let cap_deg = p.degree.unwrap();
    let cap = SeriesCap::xt(cap_deg);
    let (substituted, z_small) = substituted_sum(n, cap_deg)?;
    let lhs = substituted
        .series_log(&cap)
        .map_err(internal)?
        .sub_ref(&z_small.series_log(&cap).map_err(internal)?)
        .truncate(&cap);

    let (a, b, c, d) = (pvar(Var::A), pvar(Var::B), pvar(Var::C), pvar(Var::D));
    let t2 = pvar(Var::T).pow(2);
    let ab = a.mul_ref(&b);
    let ac = a.mul_ref(&c);
    let abcd = ab.mul_ref(&c).mul_ref(&d);
    let log_inv = |u: QPoly| -> Result<QPoly, VerifyError> {
        Ok(QPoly::one()
            .sub_ref(&u)
            .series_log(&cap)
            .map_err(internal)?
            .neg_ref())
    };
    let mut rhs = log_inv(ab.mul_ref(&t2))?
        .sub_ref(&log_inv(ac.mul_ref(&t2))?)
        .add_ref(&log_inv(abcd.mul_ref(&t2.pow(2)))?);
    for i in 1..=2 * n as u32 {
        rhs = rhs.add_ref(&log_inv(abcd.mul_ref(&t2).mul_ref(&pvar(Var::X(i)).pow(2)))?);
    }
    rhs = neg_if(negative, rhs.truncate(&cap));
    Ok(outcome_from(poly_witness(&lhs, &rhs)))
}

// ---- Pipeline wrappers ----

pub fn zn_pfaffian(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    pipeline::verify_zn_series(p.n.unwrap() as usize, p.degree.unwrap(), negative)
}

pub fn main_theorem(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    pipeline::verify_main_theorem(p.n.unwrap() as usize, p.degree.unwrap(), !negative)
}

pub fn simple_corollary(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    pipeline::verify_simple_corollary(p.degree.unwrap(), !negative)
}

pub fn oddness_route(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    pipeline::verify_oddness_route(p.n.unwrap() as usize, p.degree.unwrap(), !negative)
}

pub fn corollary_bigschur(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    pipeline::verify_corollary_5(WeightKind::BigSchur, p.degree.unwrap(), 0, negative)
}

pub fn corollary_macdonald(p: &CheckParams, negative: bool) -> Result<CheckOutcome, VerifyError> {
    pipeline::verify_corollary_5(
        WeightKind::Macdonald,
        p.degree.unwrap(),
        p.q_order.unwrap(),
        negative,
    )
}
