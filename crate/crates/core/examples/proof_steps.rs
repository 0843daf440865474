//! Walk through the intermediate identities for one prime.
//!
//! cargo run --release --example proof_steps -- 5

use herglotz::hecke::{chain_decompose, enumerate_s, s_plus};
use herglotz::verify::Verifier;

fn main() -> herglotz::Result<()> {
    let l: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let (x, y) = (0.8, 2.6);
    let v = Verifier::default();
    println!("telescope step for each M in S_{l}^+:");
    for m in s_plus(&enumerate_s(l)?) {
        println!("  {}", v.check_telescope(&m, l, x, y)?);
    }
    println!("chain sums:");
    for chain in chain_decompose(l as u64)?.chains {
        println!("  {}", v.check_chain_sum(l, chain.index, x, y)?);
    }
    println!("complement:\n  {}", v.check_complement_sum(l, x, y)?);
    println!("reassembled:\n  {}", v.check_decomposition(l, x, y)?);
    println!("theorem:\n  {}", v.check_theorem1(l, x, y)?);
    Ok(())
}
