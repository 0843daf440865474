//! Sweep a grid and persist the reports as JSON and CSV.
//!
//! cargo run --release --example grid_report -- /tmp/herglotz

use std::path::PathBuf;

use herglotz::numkernel::EvalOptions;
use herglotz::verify::{GridSpec, Identity, ReportFile, Tolerances, Verifier};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let v = Verifier::new(EvalOptions::default(), Tolerances::default())?;
    let grid = GridSpec::square(vec![0.3, 0.7, 1.5, 2.0, 5.0]);

    let mut file = ReportFile::new(0, *v.tolerances(), *v.kernel().options());
    for (id, orders) in [
        (Identity::Theorem1, vec![2, 3, 5]),
        (Identity::ChainSum, vec![3, 5]),
    ] {
        let run = v.run_grid(id, &orders, &grid)?;
        println!(
            "{id}: {} reports, {} skipped, max excess {:.1e}",
            run.reports.len(),
            run.skipped.len(),
            run.max_excess()
        );
        file.reports.extend(run.reports);
        file.skipped.extend(run.skipped);
    }
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("reports.json"), file.to_json())?;
    std::fs::write(dir.join("reports.csv"), file.to_csv())?;
    println!("wrote {}/reports.{{json,csv}}", dir.display());
    Ok(())
}
