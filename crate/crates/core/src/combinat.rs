//! Integer partitions: conjugation, Frobenius coordinates, the four-parameter
//! row weight, staircase sequences, and the `(alpha | alpha+1)` family.

use crate::ring::{Monomial, Var};
use crate::QPoly;
use std::fmt;

#[derive(Debug, Clone, thiserror::Error)]
pub enum CombinatError {
    #[error("parts must be weakly decreasing positive integers")]
    NotAPartition,
    #[error("partition has {len} parts, more than the {max} allowed here")]
    TooLong { len: usize, max: usize },
    #[error("invalid Frobenius coordinates: {0}")]
    BadFrobenius(String),
}

/// A partition: weakly decreasing positive parts. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(CombinatError::NotAPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parse the comma-separated text form, e.g. `"5,4,4,1"`; empty input is
    /// the empty partition.
    pub fn parse(s: &str) -> Result<Self, CombinatError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| CombinatError::NotAPartition)?;
            parts.push(p);
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The i-th part (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols as u32 {
            out.push(self.parts.iter().filter(|&&p| p >= c).count() as u32);
        }
        Partition { parts: out }
    }

    /// True if every part is even.
    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// True if some part is even.
    pub fn has_even_part(&self) -> bool {
        self.parts.iter().any(|&p| p % 2 == 0)
    }

    /// Frobenius coordinates: arms `alpha_i = lambda_i - i` and legs
    /// `beta_i = lambda'_i - i` over the Durfee diagonal.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for i in 1..=self.parts.len() {
            let p = self.part(i);
            if p >= i as u32 {
                arms.push(p - i as u32);
                legs.push(conj.part(i) - i as u32);
            } else {
                break;
            }
        }
        FrobeniusCoords { arms, legs }
    }

    /// Reconstruct a partition from Frobenius coordinates.
    pub fn from_frobenius(fc: &FrobeniusCoords) -> Result<Partition, CombinatError> {
        if fc.arms.len() != fc.legs.len() {
            return Err(CombinatError::BadFrobenius(
                "arm and leg counts differ".into(),
            ));
        }
        if fc.arms.windows(2).any(|w| w[0] <= w[1]) || fc.legs.windows(2).any(|w| w[0] <= w[1]) {
            return Err(CombinatError::BadFrobenius(
                "coordinates must be strictly decreasing".into(),
            ));
        }
        let d = fc.arms.len();
        let rows = if d == 0 { 0 } else { fc.legs[0] as usize + 1 };
        let mut parts = vec![0u32; rows];
        // Row i of the diagram: alpha_i + i cells for i <= d.
        for i in 1..=d {
            parts[i - 1] = fc.arms[i - 1] + i as u32;
        }
        // Below the Durfee square, row lengths come from the legs: column j
        // (j <= d) has legs[j-1] + j cells, so rows d+1..legs[j-1]+j have at
        // least j cells.
        for i in (d + 1)..=rows {
            let mut len = 0u32;
            for j in 1..=d {
                if (fc.legs[j - 1] + j as u32) as usize >= i {
                    len = j as u32;
                }
            }
            parts[i - 1] = len;
        }
        let p = Partition::new(parts)?;
        if &p.frobenius() != fc {
            return Err(CombinatError::BadFrobenius(
                "coordinates are not realizable".into(),
            ));
        }
        Ok(p)
    }

    /// The strictly decreasing sequence `lambda + delta_m` with
    /// `delta_m = (m-1, ..., 1, 0)`; the partition is padded with zeros.
    pub fn staircase_shift(&self, m: usize) -> Result<Vec<u32>, CombinatError> {
        if self.parts.len() > m {
            return Err(CombinatError::TooLong {
                len: self.parts.len(),
                max: m,
            });
        }
        Ok((1..=m)
            .map(|i| self.part(i) + (m - i) as u32)
            .collect())
    }

    /// The four-parameter weight: fill odd rows alternately `a,b,a,b,...` and
    /// even rows `c,d,c,d,...`; the weight is the product of the filled
    /// entries, here as a monomial in the parameters.
    pub fn omega_weight(&self) -> QPoly {
        let (mut ea, mut eb, mut ec, mut ed) = (0u32, 0u32, 0u32, 0u32);
        for (idx, &p) in self.parts.iter().enumerate() {
            if idx % 2 == 0 {
                ea += p.div_ceil(2);
                eb += p / 2;
            } else {
                ec += p.div_ceil(2);
                ed += p / 2;
            }
        }
        QPoly::from_term(
            Monomial::from_pairs([(Var::A, ea), (Var::B, eb), (Var::C, ec), (Var::D, ed)]),
            num_traits::One::one(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Frobenius coordinates `(arms | legs)`, both strictly decreasing, of equal
/// length (the Durfee size).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

/// All partitions with `size <= max_size` and `length <= max_length`, each
/// exactly once, ordered by size and then lexicographically descending.
pub fn enumerate_partitions(max_size: u32, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        let mut batch = Vec::new();
        let mut current = Vec::new();
        descend(size, u32::MAX, max_length, &mut current, &mut batch);
        out.extend(batch);
    }
    out
}

fn descend(
    remaining: u32,
    max_part: u32,
    max_len: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if current.len() == max_len {
        return;
    }
    let hi = remaining.min(max_part);
    for p in (1..=hi).rev() {
        current.push(p);
        descend(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

/// The family of partitions with Frobenius form `(alpha | alpha + 1)` whose
/// diagram fits in `n` rows, i.e. `alpha` ranges over the subsets of
/// `{0, ..., n-2}`. These index the Littlewood sum
/// `sum s_lambda = prod (1 + x_i x_j)`.
pub fn enumerate_pn(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let pool: Vec<u32> = if n >= 2 {
        (0..=(n as u32 - 2)).collect()
    } else {
        Vec::new()
    };
    for mask in 0..(1u32 << pool.len()) {
        let mut arms: Vec<u32> = pool
            .iter()
            .copied()
            .filter(|&v| mask & (1 << v) != 0)
            .collect();
        arms.sort_unstable_by(|a, b| b.cmp(a));
        let legs: Vec<u32> = arms.iter().map(|&a| a + 1).collect();
        let lam = Partition::from_frobenius(&FrobeniusCoords { arms, legs })
            .expect("alpha | alpha+1 coordinates are always realizable");
        out.push(lam);
    }
    out.sort_by_key(|p| (p.size(), std::cmp::Reverse(p.parts.clone())));
    out
}
