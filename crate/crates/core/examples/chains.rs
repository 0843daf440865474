//! Decompose S_l into chains for a prime l.
//!
//! cargo run --example chains -- 11

use herglotz::hecke::chain_decompose;

fn main() -> herglotz::Result<()> {
    let l: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    let dec = chain_decompose(l)?;
    println!(
        "S_{l} = {{{}}} + {{{}}} + chains:",
        dec.diagonal[0], dec.diagonal[1]
    );
    for c in &dec.chains {
        let path: Vec<String> = c.matrices.iter().map(|m| m.to_string()).collect();
        println!(
            "  C_{:<3} x_n = {:<3} {}",
            c.index,
            c.x_n,
            path.join(" -> ")
        );
    }
    Ok(())
}
