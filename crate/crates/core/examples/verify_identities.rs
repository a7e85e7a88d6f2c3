// Sweeps every registered identity over a range and prints the summary.
//
// Run with `cargo run --release --example verify_identities [MAX]`.

use dual_jacobsthal::{IdentityId, Sweep};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(40usize);
    let report = Sweep::new(IdentityId::ALL, max).pair_budget(Some(500)).run()?;
    print!("{}", report.to_text());
    if !report.all_passed() {
        return Err(format!("{} identity checks failed", report.failures()).into());
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
