// Two printed identities do not hold as written. This shows the failing
// printed form next to the form the verifier checks.
//
// Run with `cargo run --example printed_deviations`.

use dual_jacobsthal::{check, deviations_for, IdentityId};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for dev in deviations_for(&IdentityId::ALL) {
        let c = &dev.counterexample;
        println!("{} ({})", dev.identity, dev.identity.label());
        println!("  printed : {}", dev.printed);
        println!(
            "  at m=0  : lhs {}  vs  {}",
            c.lhs,
            c.rhs.as_ref().map(ToString::to_string).unwrap_or_default()
        );
        println!("  checked : {}", dev.verified);
        let fixed = check(dev.identity, 0, None)?;
        println!(
            "  result  : lhs {}  rhs {}  pass={}",
            fixed.lhs,
            fixed.rhs.as_ref().map(ToString::to_string).unwrap_or_default(),
            fixed.pass
        );
        if c.pass || !fixed.pass {
            return Err(format!("unexpected outcome for {}", dev.identity).into());
        }
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
