//! List S_n with each matrix's boundary points.
//!
//! cargo run --example enumerate_matrices -- 6

use herglotz::hecke::{boundary, enumerate_s, s_plus, sigma};

fn main() -> herglotz::Result<()> {
    let n: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let set = enumerate_s(n)?;
    println!(
        "S_{n}: {} matrices, |S_{n}^+| = {}, sigma({n}) = {}",
        set.len(),
        s_plus(&set).len(),
        sigma(n as u64)
    );
    for m in &set {
        let (inf, zero) = boundary(m);
        println!("  {m:<16} M.oo = {inf:<5} M.0 = {zero}");
    }
    Ok(())
}
