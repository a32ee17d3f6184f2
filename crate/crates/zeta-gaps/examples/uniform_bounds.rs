//! Evaluates the closed-form bounds and runs every uniform-in-r sweep:
//! the closed form for r in [8, 10^4] and the Tsang claims for
//! r in [5, 10^3].
//!
//! ```text
//! cargo run --example uniform_bounds
//! ```

use zeta_gaps::{
    closed_form_rhs, compute_a0_b0, uniform_check, uniform_tsang_check, Direction,
};

fn main() -> zeta_gaps::Result<()> {
    let a0 = compute_a0_b0().value;

    println!("closed-form bound at the boundary r = 8:");
    let sup_rhs = closed_form_rhs(8, a0, Direction::Sup)?;
    println!(
        "  sup side at theta = A0: RHS = {:.7}, brace content = {:.6} (> 0 keeps the bound)",
        sup_rhs,
        (sup_rhs - a0) * 8.0_f64.sqrt()
    );
    let inf_rhs = closed_form_rhs(8, 0.61861, Direction::Inf)?;
    println!("  inf side at theta = 0.61861: RHS = {inf_rhs:.7} (> 0.61861 keeps the bound)");

    println!("\nclosed-form sweeps over 8 <= r <= 10000:");
    for (direction, theta) in [(Direction::Sup, a0), (Direction::Inf, 0.61861)] {
        let (ok, worst) = uniform_check(direction, theta, 10_000)?;
        println!("  {direction} at theta = {theta:.7}: holds = {ok}, worst margin = {worst:.6}");
    }

    println!("\nTsang sweeps over 5 <= r <= 1000:");
    let (sup_ok, inf_ok) = uniform_tsang_check(1000)?;
    println!("  sup at theta = 0.414269: holds = {sup_ok}");
    println!("  inf at theta = 0.403816: holds = {inf_ok}");

    println!("\nclosed form approaches A0 = {a0:.7} as r grows:");
    for r in [8u32, 100, 10_000, 1_000_000] {
        println!("  r = {r:>8}: RHS(theta = A0) = {:.7}", closed_form_rhs(r, a0, Direction::Sup)?);
    }
    Ok(())
}
