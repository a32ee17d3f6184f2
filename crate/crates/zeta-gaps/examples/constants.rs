//! Computes the limiting deviation constant A0 and its maximizer B0.
//!
//! ```text
//! cargo run --example constants
//! ```

use zeta_gaps::{compute_a0_b0, objective};

fn main() -> zeta_gaps::Result<()> {
    let opt = compute_a0_b0();
    println!("A0 = max_(B>0) (2B/pi) arctan(pi/B^2) = {:.9}", opt.value);
    println!("B0 = argmax                           = {:.8}", opt.argmax);
    println!(
        "searched bracket [{}, {}]; objective at endpoints: {:.6}, {:.6}",
        opt.bracket.0,
        opt.bracket.1,
        objective(opt.bracket.0)?,
        objective(opt.bracket.1)?,
    );

    println!("\nobjective profile:");
    for b in [0.5, 1.0, opt.argmax, 2.0, 4.0] {
        println!("  (2B/pi) arctan(pi/B^2) at B = {b:.7} -> {:.7}", objective(b)?);
    }
    Ok(())
}
