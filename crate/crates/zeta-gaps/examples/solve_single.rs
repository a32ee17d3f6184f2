//! Solves every bound family at one r and compares the deviations they
//! certify, including the certificate margins.
//!
//! ```text
//! cargo run --example solve_single [r]
//! ```

use zeta_gaps::unconditional::UNCONDITIONAL_EXPONENT;
use zeta_gaps::{
    ctb, gap_rhs, solve_gap_theta, solve_theta_tsang, Direction, OscillationHypothesis,
};

fn main() -> zeta_gaps::Result<()> {
    let r: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);

    println!("admissible gap deviations at r = {r} (gaps of 1 ± theta/sqrt(r) scale)\n");
    println!("{:<28} {:>11} {:>9} {:>11}", "method", "theta", "ell", "margin");
    for direction in [Direction::Sup, Direction::Inf] {
        let integral = ctb::optimize_ell(r, direction)?;
        println!(
            "{:<28} {:>11.6} {:>9.3} {:>11.2e}",
            format!("integral condition ({direction})"),
            integral.theta,
            integral.ell.unwrap_or(f64::NAN),
            integral.margin,
        );
        let tsang = solve_theta_tsang(r, direction)?;
        println!(
            "{:<28} {:>11.6} {:>9} {:>11.2e}",
            format!("moment inequality ({direction})"),
            tsang.theta,
            "-",
            tsang.margin,
        );
    }

    let hyp = OscillationHypothesis::new(1.0, UNCONDITIONAL_EXPONENT)?;
    println!("\nunconditional criterion at c = 1, beta = 1/3 (deviation scale r^(2/3)):");
    for direction in [Direction::Sup, Direction::Inf] {
        let theta = solve_gap_theta(&hyp, r, direction)?;
        let margin = gap_rhs(&hyp, r, direction, theta)? - theta;
        println!("  {direction}: theta = {theta:.6} (margin {margin:.2e})");
    }
    println!("\nthe hypothesis constant c is a free input; deviations scale linearly with it.");
    Ok(())
}
