//! Gap bounds from Tsang's moment method: the limit-form inequalities
//! `theta < r^{-1/2} 2^{-1/(2r+1)} pi^{-1} ((2r)!/r!)^{1/(2r)} (∫₀^X sin²(u/2)/u du)^{1/2}`
//! with `X = (4 pi r / (2r+1)) (1 ± theta/sqrt(r))`.

use std::f64::consts::PI;

use crate::bound::{BoundMethod, BoundResult, Direction};
use crate::error::{Error, Result};
use crate::search::largest_positive;
use crate::special::{factorial_ratio_root, sin_half_sq_integral};

/// Deviation constant whose sup-side inequality holds for every `r >= 5`.
pub const UNIFORM_SUP_THETA: f64 = 0.414_269;
/// Deviation constant whose inf-side inequality holds for every `r >= 5`.
pub const UNIFORM_INF_THETA: f64 = 0.403_816;

const BISECTION_TOL: f64 = 1e-7;

/// One row of the Tsang bound table with its certificate margins.
#[derive(Debug, Clone, Copy)]
pub struct TsangRow {
    pub r: u32,
    pub theta_sup: f64,
    pub theta_inf: f64,
    pub margin_sup: f64,
    pub margin_inf: f64,
}

/// Upper integration limit `X = (4 pi r/(2r+1))(1 ± theta/sqrt(r))`.
fn upper_limit(r: u32, theta: f64, direction: Direction) -> f64 {
    let rf = r as f64;
    4.0 * PI * rf / (2.0 * rf + 1.0) * (1.0 + direction.sign() * theta / rf.sqrt())
}

/// Right-hand side of the Tsang inequality.
pub fn tsang_rhs(r: u32, theta: f64, direction: Direction) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("tsang rhs needs r >= 1".to_string()));
    }
    if !theta.is_finite() {
        return Err(Error::domain(format!("theta must be finite, got {theta}")));
    }
    let rf = r as f64;
    if direction == Direction::Inf && theta >= rf.sqrt() {
        return Err(Error::domain(format!(
            "inf-side theta must stay below sqrt(r); got {theta} at r = {r}"
        )));
    }
    let x = upper_limit(r, theta, direction);
    let prefactor =
        2.0_f64.powf(-1.0 / (2.0 * rf + 1.0)) / (PI * rf.sqrt()) * factorial_ratio_root(r)?;
    Ok(prefactor * sin_half_sq_integral(x)?.sqrt())
}

/// Largest `theta` with `theta < tsang_rhs(r, theta, direction)`, bisected
/// to `1e-7`.
pub fn solve_theta_tsang(r: u32, direction: Direction) -> Result<BoundResult> {
    if r == 0 {
        return Err(Error::domain("solve_theta_tsang needs r >= 1".to_string()));
    }
    let cap = match direction {
        Direction::Sup => 2.0,
        Direction::Inf => 2.0_f64.min(0.999 * (r as f64).sqrt()),
    };
    let g = |theta: f64| {
        tsang_rhs(r, theta, direction).expect("solver cap keeps theta inside the domain") - theta
    };
    let theta = largest_positive(g, cap, BISECTION_TOL);
    let margin = tsang_rhs(r, theta, direction)? - theta;
    Ok(BoundResult {
        theta,
        ell: None,
        margin,
        method: BoundMethod::Tsang,
    })
}

/// Verifies the two uniform `r >= 5` claims up to `r_max`:
/// the inf side at [`UNIFORM_INF_THETA`] must have a nondecreasing
/// right-hand side that stays above the constant, and the sup side at
/// [`UNIFORM_SUP_THETA`] must both clear its constant and keep the
/// integration limit at or above `2 pi`.
pub fn uniform_tsang_check(r_max: u32) -> Result<(bool, bool)> {
    if r_max < 5 {
        return Err(Error::domain(format!(
            "uniform tsang check expects r_max >= 5, got {r_max}"
        )));
    }
    let mut sup_ok = true;
    let mut inf_ok = true;
    let mut prev_inf_rhs = f64::NEG_INFINITY;
    for r in 5..=r_max {
        let sup_rhs = tsang_rhs(r, UNIFORM_SUP_THETA, Direction::Sup)?;
        if sup_rhs <= UNIFORM_SUP_THETA || upper_limit(r, UNIFORM_SUP_THETA, Direction::Sup) < 2.0 * PI
        {
            sup_ok = false;
        }
        let inf_rhs = tsang_rhs(r, UNIFORM_INF_THETA, Direction::Inf)?;
        if inf_rhs <= UNIFORM_INF_THETA || inf_rhs < prev_inf_rhs {
            inf_ok = false;
        }
        prev_inf_rhs = inf_rhs;
    }
    Ok((sup_ok, inf_ok))
}

/// Solves both directions for `r = 1..=20`.
pub fn table2() -> Result<Vec<TsangRow>> {
    (1..=20)
        .map(|r| {
            let sup = solve_theta_tsang(r, Direction::Sup)?;
            let inf = solve_theta_tsang(r, Direction::Inf)?;
            Ok(TsangRow {
                r,
                theta_sup: sup.theta,
                theta_inf: inf.theta,
                margin_sup: sup.margin,
                margin_inf: inf.margin,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rhs_reference_points() {
        let v = tsang_rhs(1, 0.394_255, Direction::Sup).unwrap();
        assert!(v > 0.394_255, "sup rhs {v}");
        let v = tsang_rhs(5, 0.403_816, Direction::Inf).unwrap();
        assert!(v > 0.403_816, "inf rhs {v}");
    }

    #[test]
    fn rhs_directions_coincide_at_zero() {
        for r in [1, 4, 9, 17] {
            let sup = tsang_rhs(r, 0.0, Direction::Sup).unwrap();
            let inf = tsang_rhs(r, 0.0, Direction::Inf).unwrap();
            assert_eq!(sup, inf);
        }
    }

    #[test]
    fn rhs_domain_errors() {
        assert!(tsang_rhs(0, 0.1, Direction::Sup).is_err());
        assert!(tsang_rhs(1, 1.0, Direction::Inf).is_err());
        assert!(tsang_rhs(4, 2.5, Direction::Inf).is_err());
        assert!(tsang_rhs(4, f64::NAN, Direction::Sup).is_err());
    }

    #[test]
    fn solved_values_match_reference_rows() {
        let sup12 = solve_theta_tsang(12, Direction::Sup).unwrap();
        assert_abs_diff_eq!(sup12.theta, 0.420_840_7, epsilon = 1e-5);
        let inf20 = solve_theta_tsang(20, Direction::Inf).unwrap();
        assert_abs_diff_eq!(inf20.theta, 0.421_806, epsilon = 1e-5);
        assert!(sup12.margin > 0.0 && inf20.margin > 0.0);
    }

    #[test]
    fn solution_is_a_crossing() {
        let res = solve_theta_tsang(7, Direction::Sup).unwrap();
        let rhs = tsang_rhs(7, res.theta, Direction::Sup).unwrap();
        assert!(res.theta < rhs);
        let above = res.theta + 1e-4;
        assert!(above >= tsang_rhs(7, above, Direction::Sup).unwrap());
    }

    #[test]
    fn integration_limit_stays_in_range() {
        // X must stay inside (0, 8 pi) for every solver result
        for r in 1..=20 {
            for dir in [Direction::Sup, Direction::Inf] {
                let theta = solve_theta_tsang(r, dir).unwrap().theta;
                let x = upper_limit(r, theta, dir);
                assert!(x > 0.0 && x < 8.0 * PI, "X = {x} out of range at r = {r} {dir}");
            }
        }
    }

    #[test]
    fn table_is_increasing_in_r() {
        let rows = table2().unwrap();
        assert_eq!(rows.len(), 20);
        for pair in rows.windows(2) {
            assert!(pair[1].theta_sup > pair[0].theta_sup);
            assert!(pair[1].theta_inf > pair[0].theta_inf);
        }
        for row in &rows {
            assert!(row.theta_inf < row.theta_sup, "r = {}", row.r);
            assert!(row.margin_sup > 0.0 && row.margin_inf > 0.0);
        }
    }

    #[test]
    fn uniform_claims_hold_to_one_hundred() {
        assert_eq!(uniform_tsang_check(100).unwrap(), (true, true));
        assert!(uniform_tsang_check(4).is_err());
        // boundary case r = 5 clears the inf constant
        let margin = tsang_rhs(5, UNIFORM_INF_THETA, Direction::Inf).unwrap() - UNIFORM_INF_THETA;
        assert!(margin > 0.0, "boundary margin {margin}");
        // the threshold argument's arithmetic at r = 5
        let x = upper_limit(5, UNIFORM_SUP_THETA, Direction::Sup);
        assert!(x >= 2.0 * PI, "X(5) = {x}");
        assert_abs_diff_eq!(x, 6.77, epsilon = 0.01);
    }
}
