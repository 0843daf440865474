//! Residuals of the Radchenko-Zagier equation for n = 1..12.
//!
//! cargo run --release --example radchenko_zagier

use herglotz::verify::Verifier;

fn main() -> herglotz::Result<()> {
    let v = Verifier::default();
    for n in 1..=12 {
        let row: Vec<String> = [0.3, 0.7, 1.5, 2.0, 5.0]
            .iter()
            .map(|&x| v.check_rz(n, x).map(|r| format!("{:>9.1e}", r.residual)))
            .collect::<herglotz::Result<_>>()?;
        println!("n = {n:<2} {}", row.join(" "));
    }
    Ok(())
}
