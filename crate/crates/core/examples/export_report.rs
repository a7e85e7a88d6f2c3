// Writes a sweep report as JSON and CSV, then reads the JSON back.
//
// Run with `cargo run --example export_report [DIR]`; defaults to the
// system temp directory.

use std::path::PathBuf;

use dual_jacobsthal::{sweep, IdentityId, Report};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let ids = IdentityId::parse_selection("t10,t11,t13")?;
    let report = sweep(&ids, 20, None)?;

    let json_path = dir.join("dual_jacobsthal_report.json");
    let csv_path = dir.join("dual_jacobsthal_report.csv");
    std::fs::write(&json_path, report.to_json()?)?;
    std::fs::write(&csv_path, report.to_csv()?)?;

    let back = Report::from_json(&std::fs::read_to_string(&json_path)?)?;
    assert_eq!(back, report);
    println!(
        "wrote {} results to {} and {}",
        report.results.len(),
        json_path.display(),
        csv_path.display()
    );
    for (id, counts) in &report.summary {
        println!("  {id}: {}/{}", counts.pass, counts.total);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
