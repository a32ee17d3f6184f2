//! Query and result types shared by the gap-bound solvers.

/// Which side of the mean spacing a bound addresses.
///
/// `Sup` bounds long gaps (frequency `r + theta*sqrt(r)`), `Inf` bounds
/// short gaps (frequency `r - theta*sqrt(r)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Sup,
    Inf,
}

impl Direction {
    /// Sign applied to the `theta*sqrt(r)` deviation.
    pub fn sign(self) -> f64 {
        match self {
            Direction::Sup => 1.0,
            Direction::Inf => -1.0,
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Direction::Sup => write!(f, "sup"),
            Direction::Inf => write!(f, "inf"),
        }
    }
}

/// Inequality family a bound is solved from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundMethod {
    /// Conrey–Turnage-Butterbaugh integral sufficient condition.
    CtbIntegral,
    /// Closed-form relaxation of the integral condition.
    CtbClosedForm,
    /// Tsang-method moment inequality.
    Tsang,
    /// Zero-counting criterion driven by an oscillation hypothesis.
    Unconditional,
}

impl std::fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundMethod::CtbIntegral => write!(f, "ctb"),
            BoundMethod::CtbClosedForm => write!(f, "ctb-closed-form"),
            BoundMethod::Tsang => write!(f, "tsang"),
            BoundMethod::Unconditional => write!(f, "unconditional"),
        }
    }
}

/// Selects which bound to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundQuery {
    pub r: u32,
    pub direction: Direction,
    pub method: BoundMethod,
}

/// A solved bound: the admissible deviation `theta`, the auxiliary
/// parameter `ell` when the method has one, and the certificate margin
/// `RHS(theta) - theta > 0` witnessing the strict inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub theta: f64,
    pub ell: Option<f64>,
    pub margin: f64,
    pub method: BoundMethod,
}
