//! Check the C_n condition for theta_n, and watch it fail once a chain is broken.
//!
//! cargo run --example boundary_condition

use herglotz::hecke::{check_cn, enumerate_s, theta, CnMode, FormalMatSum, IntMat2};

fn main() -> herglotz::Result<()> {
    for n in 1..=12 {
        let report = check_cn(&theta(n)?, n, CnMode::PerOrbit)?;
        println!(
            "C_{n:<2} {}  {} orbits, total boundary {}",
            if report.pass { "ok  " } else { "FAIL" },
            report.orbits.len(),
            report.total
        );
    }

    let removed = IntMat2::from_entries(2, 1, 1, 2);
    let mut broken = FormalMatSum::new();
    for m in enumerate_s(3)?.into_iter().filter(|m| *m != removed) {
        broken.add(m, 1)?;
    }
    let report = check_cn(&broken, 3, CnMode::PerOrbit)?;
    println!("\ntheta_3 without {removed}:");
    for o in &report.orbits {
        println!("  orbit {:<16} {}", o.canonical.to_string(), o.divisor);
    }
    Ok(())
}
