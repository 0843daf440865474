//! The Hecke-type functional equation for RHZ, reduced mod zeta(2).
//!
//! cargo run --release --example main_theorem

use herglotz::verify::Verifier;

fn main() -> herglotz::Result<()> {
    let v = Verifier::default();
    for l in [2, 3, 5, 7, 11, 13] {
        for (x, y) in [(2.0, 3.0), (0.5, 2.5), (5.0, 0.3)] {
            let r = v.check_theorem1(l, x, y)?;
            println!(
                "l = {l:<2} (x, y) = ({x}, {y})  residual = {:>12.8} = {:>3} zeta(2) + {:.1e}",
                r.residual, r.zeta2_multiple, r.excess
            );
        }
    }
    Ok(())
}
