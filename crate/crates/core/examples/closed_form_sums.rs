// Partial sums of J and of JN: closed form against term-by-term addition.
//
// Run with `cargo run --example closed_form_sums`.

use dual_jacobsthal::{naive_sum_jn, quat_sum_jn, sum_j3, third_jacobsthal};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut running = BigInt::from(0);
    for n in 0..=12 {
        running += third_jacobsthal(n);
        let closed = sum_j3(n)?;
        println!("sum J(0..={n:<2}) = {closed:>6}  naive {running:>6}");
        assert_eq!(closed, running);
    }
    println!();
    for m in [0, 2, 3, 10, 100] {
        let closed = quat_sum_jn(m)?;
        assert_eq!(closed, naive_sum_jn(m));
        println!("sum JN(0..={m}) = {closed}");
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
