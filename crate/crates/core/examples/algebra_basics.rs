// Arithmetic in the nilpotent-unit quaternion algebra.
//
// Run with `cargo run --example algebra_basics`.

use dual_jacobsthal::NilQuat;
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = NilQuat::new(1, 1, 2, 5);
    let q = NilQuat::new(1, 2, 5, 9);

    println!("p          = {p}");
    println!("q          = {q}");
    println!("p + q      = {}", &p + &q);
    println!("p * q      = {}", &p * &q);
    println!("q * p      = {}", &q * &p);
    println!("p^2        = {}", p.square());
    println!("conj(p)    = {}", p.conj());
    println!("p*conj(p)  = {}  (norm^2 = {})", &p * p.conj(), p.norm_sq());

    // Any two pure vectors multiply to zero.
    let u = NilQuat::new(0, 3, -1, 4);
    let v = NilQuat::new(0, 1, 5, -9);
    println!("u * v      = {}", &u * &v);

    let seven = BigInt::from(7);
    let scaled = q.scale(&seven);
    println!("(7q) / 7   = {}", scaled.div_exact(&seven)?);
    match p.div_exact(&seven) {
        Ok(_) => println!("unexpected: 7 divides p"),
        Err(e) => println!("p / 7      -> {e}"),
    }
    println!("json(q)    = {}", serde_json::to_string(&q)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
