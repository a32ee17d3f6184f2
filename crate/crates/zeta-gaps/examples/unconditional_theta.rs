//! Solves the zero-counting gap criterion under an oscillation
//! hypothesis on S(t), showing how the admissible deviation depends on
//! the hypothesis constant, the exponent, and r.
//!
//! ```text
//! cargo run --example unconditional_theta
//! ```

use std::f64::consts::PI;

use zeta_gaps::unconditional::{RH_EXPONENT, UNCONDITIONAL_EXPONENT};
use zeta_gaps::{solve_gap_theta, Direction, OscillationHypothesis};

fn main() -> zeta_gaps::Result<()> {
    println!("deviation theta solving theta < c (2 pi)^beta (1 ± theta r^(beta-1))^beta\n");

    for beta in [UNCONDITIONAL_EXPONENT, RH_EXPONENT] {
        let hyp = OscillationHypothesis::new(1.0, beta)?;
        println!("beta = {beta:.4}, c = 1 (gap shape 1 ± theta / r^{:.4}):", 1.0 - beta);
        println!("{:>9}  {:>11} {:>11}", "r", "theta_sup", "theta_inf");
        for r in [1u32, 2, 5, 10, 100, 10_000, 1_000_000] {
            println!(
                "{:>9}  {:>11.7} {:>11.7}",
                r,
                solve_gap_theta(&hyp, r, Direction::Sup)?,
                solve_gap_theta(&hyp, r, Direction::Inf)?,
            );
        }
        println!("  limit as r -> inf: c (2 pi)^beta = {:.7}\n", (2.0 * PI).powf(beta));
    }

    let hyp = OscillationHypothesis::new(0.5, UNCONDITIONAL_EXPONENT)?;
    println!(
        "halving the hypothesis constant halves the limit: c = 0.5 gives theta_sup(10^6) = {:.7}",
        solve_gap_theta(&hyp, 1_000_000, Direction::Sup)?
    );
    Ok(())
}
