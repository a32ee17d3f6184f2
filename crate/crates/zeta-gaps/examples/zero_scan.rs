//! Locates zero ordinates from sign changes of Hardy's Z function and
//! compares the count against the counting main term.
//!
//! ```text
//! cargo run --example zero_scan
//! ```

use zeta_gaps::{empirical_s, find_zeros, hardy_z, rvm_main_term};

fn main() -> zeta_gaps::Result<()> {
    let table = find_zeros(10.0, 100.0)?;
    println!("found {} ordinates in [10, 100]; the first five:", table.len());
    for (i, &g) in table.ordinates().iter().take(5).enumerate() {
        println!("  gamma_{} = {:.9}   (Z there: {:+.2e})", i + 1, g, hardy_z(g)?);
    }

    println!("\ncounting check: N(100) main term = {:.6}", rvm_main_term(100.0)?);
    println!("fluctuating part S(T) = N_empirical(T) - main term:");
    for t in [20.0, 50.0, 100.0] {
        println!("  S({t:>5}) = {:+.4}", empirical_s(t, &table)?);
    }

    println!("\nZ changes sign exactly once between consecutive ordinates;");
    println!("sampling between the first two shows no extra crossing:");
    let mut t = 15.0;
    let mut sign_changes = 0;
    let mut prev = hardy_z(t)?;
    while t < 20.9 {
        t += 0.1;
        let z = hardy_z(t)?;
        if (prev < 0.0) != (z < 0.0) {
            sign_changes += 1;
        }
        prev = z;
    }
    println!("  sign changes of Z on [15.0, 21.0): {sign_changes}");
    Ok(())
}
