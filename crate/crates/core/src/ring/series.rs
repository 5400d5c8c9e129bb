//! Truncation caps for formal-series computations.

use super::var::Var;

/// Which variable families count toward the truncation degree.
///
/// Series are graded in the `x` variables; the parameters `a..d, t, q` are
/// ungraded and their degrees are unbounded. Specific checks grade additional
/// families: the second alphabet `y` (two-alphabet sums, generating
/// variables), the parameter `t` (two-variable specializations `(t, -t)`),
/// or the parameter `q` alone (Macdonald truncation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grading {
    x: bool,
    y: bool,
    t: bool,
    q: bool,
}

impl Grading {
    /// Grade the `x_i` only.
    pub const X: Grading = Grading { x: true, y: false, t: false, q: false };
    /// Grade `x_i` and `y_i` together.
    pub const XY: Grading = Grading { x: true, y: true, t: false, q: false };
    /// Grade `x_i` and the parameter `t`.
    pub const XT: Grading = Grading { x: true, y: false, t: true, q: false };
    /// Grade the `y_i` only (generating-function extraction).
    pub const Y: Grading = Grading { x: false, y: true, t: false, q: false };
    /// Grade the parameter `q` only.
    pub const Q: Grading = Grading { x: false, y: false, t: false, q: true };

    pub fn counts(self, v: Var) -> bool {
        match v {
            Var::X(_) => self.x,
            Var::Y(_) => self.y,
            Var::T => self.t,
            Var::Q => self.q,
            _ => false,
        }
    }
}

/// A truncation order: drop every term whose total degree in the graded
/// variables exceeds `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesCap {
    pub degree: u32,
    pub grading: Grading,
}

impl SeriesCap {
    pub fn new(degree: u32, grading: Grading) -> Self {
        SeriesCap { degree, grading }
    }

    /// Cap on the `x`-degree.
    pub fn x(degree: u32) -> Self {
        SeriesCap::new(degree, Grading::X)
    }

    /// Cap on the combined `x`/`y` degree.
    pub fn xy(degree: u32) -> Self {
        SeriesCap::new(degree, Grading::XY)
    }

    /// Cap on the combined `x`/`t` degree.
    pub fn xt(degree: u32) -> Self {
        SeriesCap::new(degree, Grading::XT)
    }

    /// Cap on the `y`-degree.
    pub fn y(degree: u32) -> Self {
        SeriesCap::new(degree, Grading::Y)
    }

    /// Cap on the `q`-degree.
    pub fn q(degree: u32) -> Self {
        SeriesCap::new(degree, Grading::Q)
    }
}
