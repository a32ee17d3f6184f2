//! Gap deviations from the zero-counting criterion: combining the
//! Riemann–von Mangoldt formula with an oscillation hypothesis on `S(t)`
//! in short intervals reduces, in the large-height limit, to the scalar
//! inequality `theta < c (2 pi)^beta (1 ± theta r^{beta-1})^beta`.

use std::f64::consts::PI;

use crate::bound::Direction;
use crate::error::{Error, Result};
use crate::search::largest_positive;

/// Exponent of the unconditional oscillation estimate.
pub const UNCONDITIONAL_EXPONENT: f64 = 1.0 / 3.0;
/// Exponent available under the Riemann Hypothesis.
pub const RH_EXPONENT: f64 = 0.5;

/// An assumed lower bound `c (h log T)^beta` on the oscillation of `S`
/// over short intervals. The constant `c` is a free input; no explicit
/// value is derived here. `c = 0` is the degenerate no-information case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillationHypothesis {
    pub c: f64,
    pub beta: f64,
}

impl OscillationHypothesis {
    pub fn new(c: f64, beta: f64) -> Result<Self> {
        if !c.is_finite() || c < 0.0 {
            return Err(Error::domain(format!(
                "oscillation constant must be finite and nonnegative, got {c}"
            )));
        }
        if !beta.is_finite() || beta <= 0.0 || beta >= 1.0 {
            return Err(Error::domain(format!(
                "oscillation exponent must lie in (0, 1), got {beta}"
            )));
        }
        Ok(OscillationHypothesis { c, beta })
    }
}

/// Main term of the zero-counting function,
/// `(T/2pi) log(T/2pi e) + 7/8`, for `T > 2 pi`.
pub fn rvm_main_term(t: f64) -> Result<f64> {
    if !t.is_finite() || t <= 2.0 * PI {
        return Err(Error::domain(format!(
            "counting main term needs T > 2 pi, got {t}"
        )));
    }
    Ok(t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln() + 7.0 / 8.0)
}

/// Main term `(h/2pi) log t` of the short-interval zero count
/// `N(t+h) - N(t)`.
pub fn count_increment_main(t: f64, h: f64) -> Result<f64> {
    if !t.is_finite() || t <= std::f64::consts::E {
        return Err(Error::domain(format!("increment main term needs t > e, got {t}")));
    }
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::domain(format!("interval length must be positive, got {h}")));
    }
    Ok(h / (2.0 * PI) * t.ln())
}

/// Right-hand side `c (2 pi)^beta (1 ± theta r^{beta-1})^beta` of the
/// zero-counting criterion (`+` for [`Direction::Sup`], `-` for
/// [`Direction::Inf`]).
pub fn gap_rhs(
    hyp: &OscillationHypothesis,
    r: u32,
    direction: Direction,
    theta: f64,
) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("gap criterion needs r >= 1".to_string()));
    }
    if !theta.is_finite() {
        return Err(Error::domain(format!("theta must be finite, got {theta}")));
    }
    let base = 1.0 + direction.sign() * theta * (r as f64).powf(hyp.beta - 1.0);
    if base <= 0.0 {
        return Err(Error::domain(format!(
            "theta = {theta} empties the short interval at r = {r}"
        )));
    }
    Ok(hyp.c * (2.0 * PI).powf(hyp.beta) * base.powf(hyp.beta))
}

/// Largest `theta` with `theta < c (2 pi)^beta (1 ± theta r^{beta-1})^beta`
/// (`+` for [`Direction::Sup`], `-` for [`Direction::Inf`]).
///
/// The deviation enters the gap scale as `1 + theta / r^{1-beta}`, so
/// `beta = 1/3` yields the `r^{2/3}` shape and the solution tends to
/// `c (2 pi)^beta` as `r` grows.
pub fn solve_gap_theta(hyp: &OscillationHypothesis, r: u32, direction: Direction) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("solve_gap_theta needs r >= 1".to_string()));
    }
    let rf = r as f64;
    let scale = hyp.c * (2.0 * PI).powf(hyp.beta);
    let decay = rf.powf(hyp.beta - 1.0);
    let g = |theta: f64| {
        let base = 1.0 + direction.sign() * theta * decay;
        scale * base.powf(hyp.beta) - theta
    };
    let cap = match direction {
        Direction::Inf => 0.999 / decay,
        Direction::Sup => {
            // RHS grows sublinearly, so doubling finds a sign change
            let mut hi = scale.max(1.0);
            while g(hi) > 0.0 {
                hi *= 2.0;
            }
            hi
        }
    };
    Ok(largest_positive(g, cap, 1e-10 * cap.max(1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn hypothesis_validation() {
        assert!(OscillationHypothesis::new(1.0, UNCONDITIONAL_EXPONENT).is_ok());
        assert!(OscillationHypothesis::new(0.0, RH_EXPONENT).is_ok());
        assert!(OscillationHypothesis::new(-1.0, 0.5).is_err());
        assert!(OscillationHypothesis::new(1.0, 0.0).is_err());
        assert!(OscillationHypothesis::new(1.0, 1.0).is_err());
        assert!(OscillationHypothesis::new(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn main_term_reference_points() {
        // at T = 2 pi e the logarithm vanishes and only 7/8 remains
        let t = 2.0 * PI * std::f64::consts::E;
        assert_abs_diff_eq!(rvm_main_term(t).unwrap(), 7.0 / 8.0, epsilon = 1e-12);
        // N(100) = 29 and |S| < 1 there
        assert_abs_diff_eq!(rvm_main_term(100.0).unwrap(), 28.127_343_587_325 + 0.875, epsilon = 1e-9);
        assert!((rvm_main_term(100.0).unwrap() - 29.0).abs() < 1.0);
        assert!(rvm_main_term(6.0).is_err());
    }

    #[test]
    fn main_term_is_increasing() {
        let mut prev = rvm_main_term(2.0 * PI * std::f64::consts::E).unwrap();
        for i in 1..200 {
            let t = 2.0 * PI * std::f64::consts::E + i as f64;
            let v = rvm_main_term(t).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn increment_cancellation() {
        let t = 1e6_f64;
        let h = 2.0 * PI / t.ln();
        assert_abs_diff_eq!(count_increment_main(t, h).unwrap(), 1.0, epsilon = 1e-12);
        let h5 = 2.0 * PI * 5.0 / t.ln();
        assert_abs_diff_eq!(count_increment_main(t, h5).unwrap(), 5.0, epsilon = 1e-12);
        assert!(count_increment_main(1.0, 0.1).is_err());
        assert!(count_increment_main(100.0, 0.0).is_err());
    }

    #[test]
    fn increment_additivity_against_antiderivative_oracle() {
        // psi(x) = x log x - x is an antiderivative of log, so
        // (psi(t+2h) - psi(t))/(2 pi) tracks the two-step increment
        let psi = |x: f64| x * x.ln() - x;
        for (t, h) in [(1e4, 0.5), (1e6, 2.0), (1e3, 0.1)] {
            let two_step = count_increment_main(t, 2.0 * h).unwrap();
            let split = count_increment_main(t, h).unwrap() + count_increment_main(t + h, h).unwrap();
            let oracle = (psi(t + 2.0 * h) - psi(t)) / (2.0 * PI);
            let slack = 4.0 * h * h / t;
            assert!((two_step - split).abs() <= slack);
            assert!((split - oracle).abs() <= slack);
            assert!((two_step - oracle).abs() <= slack);
        }
    }

    #[test]
    fn zero_constant_gives_zero_theta() {
        let hyp = OscillationHypothesis::new(0.0, UNCONDITIONAL_EXPONENT).unwrap();
        assert_eq!(solve_gap_theta(&hyp, 3, Direction::Sup).unwrap(), 0.0);
    }

    #[test]
    fn large_r_approaches_limit_constant() {
        let hyp = OscillationHypothesis::new(1.0, UNCONDITIONAL_EXPONENT).unwrap();
        // fixed-point iteration oracle at the same r
        let r = 1_000_000u32;
        let decay = (r as f64).powf(UNCONDITIONAL_EXPONENT - 1.0);
        let scale = (2.0 * PI).powf(UNCONDITIONAL_EXPONENT);
        let mut oracle = scale;
        for _ in 0..60 {
            oracle = scale * (1.0 + oracle * decay).powf(UNCONDITIONAL_EXPONENT);
        }
        let theta = solve_gap_theta(&hyp, r, Direction::Sup).unwrap();
        assert_abs_diff_eq!(theta, oracle, epsilon = 1e-8);
        // distance to the limit constant shrinks like r^{beta-1}
        assert_abs_diff_eq!(theta, (2.0 * PI).powf(1.0 / 3.0), epsilon = 2e-4);
    }

    #[test]
    fn rh_exponent_matches_quadratic_oracle() {
        // beta = 1/2, c = 1, r = 1, sup: theta^2 - 2 pi theta - 2 pi = 0
        let hyp = OscillationHypothesis::new(1.0, RH_EXPONENT).unwrap();
        let theta = solve_gap_theta(&hyp, 1, Direction::Sup).unwrap();
        let root = PI + (PI * PI + 2.0 * PI).sqrt();
        assert_abs_diff_eq!(theta, root, epsilon = 1e-8);
    }

    #[test]
    fn solution_is_strict_and_tight() {
        let hyp = OscillationHypothesis::new(1.3, UNCONDITIONAL_EXPONENT).unwrap();
        for dir in [Direction::Sup, Direction::Inf] {
            let theta = solve_gap_theta(&hyp, 4, dir).unwrap();
            let rhs = |th: f64| {
                hyp.c
                    * (2.0 * PI).powf(hyp.beta)
                    * (1.0 + dir.sign() * th * 4.0_f64.powf(hyp.beta - 1.0)).powf(hyp.beta)
            };
            assert!(theta < rhs(theta), "strict inequality at the solution");
            assert!(theta + 1e-6 >= rhs(theta + 1e-6), "violated just above");
            // gap-scale reconstruction: h / (2 pi r / log T) = 1 + theta / r^{1-beta}
            let shape = 1.0 + dir.sign() * theta / 4.0_f64.powf(1.0 - hyp.beta);
            assert_abs_diff_eq!(
                shape,
                1.0 + dir.sign() * theta * 4.0_f64.powf(hyp.beta - 1.0),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn theta_monotone_in_c_and_r() {
        let mut prev = -1.0;
        for i in 1..=10 {
            let c = 0.25 * i as f64;
            let hyp = OscillationHypothesis::new(c, UNCONDITIONAL_EXPONENT).unwrap();
            let theta = solve_gap_theta(&hyp, 5, Direction::Sup).unwrap();
            assert!(theta > prev, "theta must grow with c");
            prev = theta;
        }
        // sup side decreases in r toward the limit constant
        let hyp = OscillationHypothesis::new(1.0, UNCONDITIONAL_EXPONENT).unwrap();
        let limit = (2.0 * PI).powf(1.0 / 3.0);
        let mut prev = f64::INFINITY;
        for r in [1u32, 2, 5, 10, 100, 10_000, 1_000_000] {
            let theta = solve_gap_theta(&hyp, r, Direction::Sup).unwrap();
            assert!(theta <= prev, "sup theta must not increase with r");
            assert!(theta > limit, "sup theta stays above the limit");
            prev = theta;
        }
    }
}
