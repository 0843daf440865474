//! Evaluate the special functions at a few points.
//!
//! cargo run --example special_functions

use herglotz::numkernel::{digamma, dilog, rogers, zeta2, EvalOptions, Kernel};

fn main() -> herglotz::Result<()> {
    println!("psi(1)      = {:.16}", digamma(1.0)?);
    println!("psi(1/2)    = {:.16}", digamma(0.5)?);
    println!("Li2(1/2)    = {:.16}", dilog(0.5)?);
    println!(
        "L(1/2)      = {:.16}  (pi^2/12 = {:.16})",
        rogers(0.5)?,
        zeta2() / 2.0
    );
    println!(
        "L(2)+L(1/2) = {:.16}  (2 zeta(2) = {:.16})",
        rogers(2.0)? + rogers(0.5)?,
        2.0 * zeta2()
    );

    let kernel = Kernel::new(EvalOptions::default())?;
    let one = kernel.hz_one();
    println!("\nHZ(1) = {:.16} +- {:.1e}", one.value, one.err_bound);
    for x in [0.25, 0.5, 2.0, 4.0] {
        let h = kernel.hz(x)?;
        let m = kernel.mhz(x)?;
        println!(
            "x = {x:<5} HZ = {:>20.16}  MHZ = {:>20.16}  (err {:.1e})",
            h.value, m.value, m.err_bound
        );
    }
    let r = kernel.rhz(2.0, 3.0)?;
    let s = kernel.rhz(3.0, 2.0)?;
    println!(
        "\nRHZ(2,3) + RHZ(3,2) = {:.16}  (pi^2/3)",
        r.value + s.value
    );
    Ok(())
}
