//! Solves the integral sufficient condition for r = 1..=20 with the free
//! parameter optimized per row, printing the bound pairs for both gap
//! directions.
//!
//! ```text
//! cargo run --example table1
//! ```

use zeta_gaps::table1;

fn main() -> zeta_gaps::Result<()> {
    println!("optimized (theta, ell) pairs of the integral sufficient condition\n");
    println!(
        "{:>3}  {:>10} {:>7} {:>11}   {:>10} {:>7} {:>11}",
        "r", "theta_sup", "ell", "margin", "theta_inf", "ell", "margin"
    );
    for row in table1()? {
        println!(
            "{:>3}  {:>10.6} {:>7.3} {:>11.2e}   {:>10.6} {:>7.3} {:>11.2e}",
            row.r,
            row.sup.theta,
            row.sup.ell.unwrap_or(f64::NAN),
            row.sup.margin,
            row.inf.theta,
            row.inf.ell.unwrap_or(f64::NAN),
            row.inf.margin,
        );
    }
    println!("\nevery margin is RHS - theta at the solved point; positive margins");
    println!("certify the strict inequality, so each row proves gaps longer than");
    println!("1 + theta_sup/sqrt(r) and shorter than 1 - theta_inf/sqrt(r) occur.");
    Ok(())
}
