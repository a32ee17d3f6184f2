//! Explicit bounds and empirical statistics for the normalized gaps
//! `(γ_{n+r} − γ_n) / (2πr / log γ_n)` between ordinates of Riemann zeta
//! zeros.
//!
//! Three inequality families bound how far these gaps can deviate from
//! their mean value 1:
//!
//! - [`ctb`]: the Conrey–Turnage-Butterbaugh integral sufficient
//!   condition, solved per `r` with an optimized free parameter, plus its
//!   closed-form saddle-point relaxation with uniform-in-`r` sweeps;
//! - [`tsang`]: the limit form of Tsang's moment inequalities;
//! - [`unconditional`]: the zero-counting criterion driven by an
//!   oscillation hypothesis on `S(t)`, with the hypothesis constant left
//!   as a free input.
//!
//! Alongside the solvers, [`zeros`] computes actual zero ordinates from
//! sign changes of Hardy's Z function (or ingests published tables) and
//! measures finite-range gap statistics, and [`cli`] exposes everything
//! as subcommands with JSON/CSV output.
//!
//! Each major capability has a runnable demonstration under `examples/`.

pub mod bound;
pub mod cli;
pub mod constants;
pub mod ctb;
pub mod error;
pub mod output;
pub mod search;
pub mod special;
pub mod tsang;
pub mod unconditional;
pub mod zeros;

pub use bound::{BoundMethod, BoundQuery, BoundResult, Direction};
pub use constants::{compute_a0_b0, objective, OptimizedConstant};
pub use ctb::{closed_form_rhs, ctb_rhs, optimize_ell, solve_theta, table1, uniform_check, Table1Row};
pub use error::{Error, Result};
pub use output::{format_number, OutputRecord};
pub use special::{
    factorial_ratio_root, integrate_oscillatory, sin_half_sq_integral, QuadratureEstimate,
};
pub use tsang::{solve_theta_tsang, table2, tsang_rhs, uniform_tsang_check, TsangRow};
pub use unconditional::{
    count_increment_main, gap_rhs, rvm_main_term, solve_gap_theta, OscillationHypothesis,
};
pub use zeros::{
    density_normalized_gaps, empirical_s, find_zeros, gap_extrema, hardy_z, load_zeros,
    normalized_gaps, GapStatistics, ZeroSource, ZeroTable,
};

/// Solves the bound a [`BoundQuery`] selects. The unconditional method
/// needs an [`OscillationHypothesis`]; the others ignore it.
pub fn solve_bound(
    query: BoundQuery,
    hypothesis: Option<&OscillationHypothesis>,
) -> Result<BoundResult> {
    match query.method {
        BoundMethod::CtbIntegral => ctb::optimize_ell(query.r, query.direction),
        BoundMethod::CtbClosedForm => ctb::solve_theta_closed_form(query.r, query.direction),
        BoundMethod::Tsang => tsang::solve_theta_tsang(query.r, query.direction),
        BoundMethod::Unconditional => {
            let hyp = hypothesis.ok_or_else(|| {
                Error::domain("the unconditional method needs an oscillation hypothesis".to_string())
            })?;
            let theta = unconditional::solve_gap_theta(hyp, query.r, query.direction)?;
            let margin = unconditional::gap_rhs(hyp, query.r, query.direction, theta)? - theta;
            Ok(BoundResult {
                theta,
                ell: None,
                margin,
                method: BoundMethod::Unconditional,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_bound_dispatches_every_method() {
        for method in [
            BoundMethod::CtbIntegral,
            BoundMethod::CtbClosedForm,
            BoundMethod::Tsang,
        ] {
            let query = BoundQuery {
                r: 9,
                direction: Direction::Inf,
                method,
            };
            let res = solve_bound(query, None).unwrap();
            assert_eq!(res.method, method);
            assert!(res.theta > 0.0 && res.margin > 0.0, "{method:?}");
            assert!(res.theta < 3.0_f64.sqrt(), "inf deviation stays below sqrt(r)");
        }

        let query = BoundQuery {
            r: 9,
            direction: Direction::Sup,
            method: BoundMethod::Unconditional,
        };
        assert!(solve_bound(query, None).is_err());
        let hyp = OscillationHypothesis::new(1.0, 0.5).unwrap();
        let res = solve_bound(query, Some(&hyp)).unwrap();
        assert!(res.theta > 0.0 && res.margin > 0.0 && res.ell.is_none());
    }
}
