//! The 5-term relation and the inversion relation of the Rogers dilogarithm.
//!
//! cargo run --example five_term -- 42

use herglotz::verify::Verifier;

fn main() -> herglotz::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(0);
    let v = Verifier::default();
    let run = v.run_five_term_samples(seed, 10_000)?;
    let mut histogram = std::collections::BTreeMap::new();
    for r in &run.reports {
        *histogram.entry(r.zeta2_multiple).or_insert(0) += 1;
    }
    println!(
        "seed {seed}: {} pairs, all pass = {}, max excess {:.1e}",
        run.reports.len(),
        run.all_pass(),
        run.max_excess()
    );
    println!("multiples of zeta(2) seen: {histogram:?}");
    for x in [0.1, 0.5, 3.0] {
        println!("{}", v.check_reflection(x)?);
    }
    Ok(())
}
