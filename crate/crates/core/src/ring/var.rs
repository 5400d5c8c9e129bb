//! Variable alphabet.
//!
//! The alphabet is fixed: two indexed families of series variables `x_i`,
//! `y_i`, four indexed families of coefficient-tuple variables `a_i..d_i`
//! (used by the determinant/Pfaffian identities in several tuples at once),
//! and six scalar parameters `a, b, c, d, t, q`. The derived `Ord` gives the
//! canonical alphabet order used by the lexicographic term order: series
//! variables first, then tuple variables, then parameters.

use std::fmt;

/// A variable identifier. Indices are 1-based to match the usual notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Series variable `x_i`.
    X(u32),
    /// Second series alphabet `y_i` (two-alphabet identities, generating variables).
    Y(u32),
    /// Coefficient tuple entry `a_i`.
    CoefA(u32),
    /// Coefficient tuple entry `b_i`.
    CoefB(u32),
    /// Coefficient tuple entry `c_i`.
    CoefC(u32),
    /// Coefficient tuple entry `d_i`.
    CoefD(u32),
    /// Weight parameter `a`.
    A,
    /// Weight parameter `b`.
    B,
    /// Weight parameter `c`.
    C,
    /// Weight parameter `d`.
    D,
    /// Deformation parameter `t`.
    T,
    /// Deformation parameter `q`.
    Q,
}

impl Var {
    /// The first `m` series variables `x_1..x_m`.
    pub fn xs(m: usize) -> Vec<Var> {
        (1..=m as u32).map(Var::X).collect()
    }

    /// The first `m` variables `y_1..y_m`.
    pub fn ys(m: usize) -> Vec<Var> {
        (1..=m as u32).map(Var::Y).collect()
    }

    /// True for the graded series families `x_i` / `y_i`.
    pub fn is_series_var(self) -> bool {
        matches!(self, Var::X(_) | Var::Y(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::CoefA(i) => write!(f, "a{i}"),
            Var::CoefB(i) => write!(f, "b{i}"),
            Var::CoefC(i) => write!(f, "c{i}"),
            Var::CoefD(i) => write!(f, "d{i}"),
            Var::A => write!(f, "a"),
            Var::B => write!(f, "b"),
            Var::C => write!(f, "c"),
            Var::D => write!(f, "d"),
            Var::T => write!(f, "t"),
            Var::Q => write!(f, "q"),
        }
    }
}
