// Scalar and quaternion terms, by recurrence and by closed form.
//
// Run with `cargo run --example sequence_terms [N]`.

use dual_jacobsthal::{
    binet_j3, binet_jl3, binet_jln_quat, binet_jn_quat, jln_quat, jn_quat, third_jacobsthal,
    third_jacobsthal_lucas, u3, un_quat, v3, vn_quat,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let upto = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10usize);

    println!("{:>3} {:>8} {:>8} {:>3} {:>3}", "n", "J", "j", "V", "U");
    for n in 0..=upto {
        let (big, small) = (third_jacobsthal(n), third_jacobsthal_lucas(n));
        assert_eq!(binet_j3(n)?, big);
        assert_eq!(binet_jl3(n)?, small);
        println!("{n:>3} {big:>8} {small:>8} {:>3} {:>3}", v3(n), u3(n));
    }

    println!();
    for m in 0..4 {
        println!("JN({m}) = {}", jn_quat(m));
        println!("jN({m}) = {}", jln_quat(m));
        println!("VN({m}) = {}", vn_quat(m));
        println!("UN({m}) = {}", un_quat(m));
        assert_eq!(binet_jn_quat(m)?, jn_quat(m));
        assert_eq!(binet_jln_quat(m)?, jln_quat(m));
    }

    // Exact arithmetic keeps going where machine integers overflow.
    println!("\nJ(500) = {}", third_jacobsthal(500));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
