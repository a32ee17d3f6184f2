//! The two universal constants of the closed-form gap bounds: the limiting
//! deviation constant `A0 = max_{B>0} (2B/pi) arctan(pi/B^2)` and its
//! maximizer `B0`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::search::golden_section_max;

/// Search bracket for the maximizer; the objective stays below 0.7 outside.
pub const SADDLE_BRACKET: (f64, f64) = (0.1, 10.0);

/// Outcome of maximizing a scalar objective over a bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizedConstant {
    /// The constant itself (equals `objective_at_argmax`).
    pub value: f64,
    /// Location of the maximum.
    pub argmax: f64,
    pub objective_at_argmax: f64,
    /// Bracket the search ran over.
    pub bracket: (f64, f64),
}

/// Evaluates `(2B/pi) * arctan(pi/B^2)` for `B > 0`.
pub fn objective(b: f64) -> Result<f64> {
    if !b.is_finite() || b <= 0.0 {
        return Err(Error::domain(format!(
            "saddle objective needs a positive finite argument, got {b}"
        )));
    }
    Ok(2.0 * b / PI * (PI / (b * b)).atan())
}

/// Maximizes the saddle objective by golden-section search on
/// [`SADDLE_BRACKET`]. Deterministic; the argmax is resolved to better
/// than `1e-6` and the value to better than `1e-7`.
pub fn compute_a0_b0() -> OptimizedConstant {
    let (lo, hi) = SADDLE_BRACKET;
    let (argmax, value) = golden_section_max(|b| objective(b).expect("bracket is positive"), lo, hi, 1e-8);
    OptimizedConstant {
        value,
        argmax,
        objective_at_argmax: value,
        bracket: SADDLE_BRACKET,
    }
}

/// Cached `(A0, B0)` pair for the modules that consume them in hot loops.
pub(crate) fn a0_b0() -> (f64, f64) {
    static CELL: OnceLock<(f64, f64)> = OnceLock::new();
    *CELL.get_or_init(|| {
        let opt = compute_a0_b0();
        (opt.value, opt.argmax)
    })
}
