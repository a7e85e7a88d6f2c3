// The worked Cassini computation for JN(0)..JN(3), every printed value
// recomputed.
//
// Run with `cargo run --example cassini_example`.

use dual_jacobsthal::paper_example;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = paper_example();
    print!("{}", report.to_text());
    if !report.all_passed() {
        return Err("worked example does not reproduce".into());
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
