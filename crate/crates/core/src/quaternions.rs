//! Quaternion sequences whose components are four consecutive terms of a
//! scalar sequence, together with their closed forms.

use num_bigint::BigInt;

use crate::algebra::NilQuat;
use crate::error::Result;
use crate::sequences::{pow2, u3, v3, Sequences};

/// `1 + 2i + 4j + 8k`, the quaternion built from powers of the dominant root 2.
pub fn alpha_q() -> NilQuat {
    NilQuat::new(1, 2, 4, 8)
}

/// `1 - i - j + 2k`.
pub fn c_twist() -> NilQuat {
    NilQuat::new(1, -1, -1, 2)
}

/// `1 + 4i + 8j + 16k`.
pub fn c_pow() -> NilQuat {
    NilQuat::new(1, 4, 8, 16)
}

/// `1 + i + 4j + 7k`.
pub fn c_sum() -> NilQuat {
    NilQuat::new(1, 1, 4, 7)
}

fn consecutive(f: impl Fn(usize) -> i64, m: usize) -> NilQuat {
    NilQuat::new(f(m), f(m + 1), f(m + 2), f(m + 3))
}

/// `JN(m) = J(m) + J(m+1)i + J(m+2)j + J(m+3)k`.
pub fn jn_quat(m: usize) -> NilQuat {
    NilQuat::from_components(Sequences::shared().jacobsthal.window(m))
}

/// `jN(m) = j(m) + j(m+1)i + j(m+2)j + j(m+3)k`.
pub fn jln_quat(m: usize) -> NilQuat {
    NilQuat::from_components(Sequences::shared().lucas.window(m))
}

pub fn vn_quat(m: usize) -> NilQuat {
    consecutive(v3, m)
}

/// `UN(m)` from the `U` table. For `m >= 1` this equals
/// `(2·VN(m-1) - VN(m)) / 7`.
pub fn un_quat(m: usize) -> NilQuat {
    consecutive(u3, m)
}

/// `(2^(m+1)·α - VN(m)) / 7`.
pub fn binet_jn_quat(m: usize) -> Result<NilQuat> {
    (alpha_q().scale(&pow2(m + 1)) - vn_quat(m)).div_exact(&BigInt::from(7))
}

/// `(2^(m+3)·α + 3·VN(m)) / 7`.
pub fn binet_jln_quat(m: usize) -> Result<NilQuat> {
    (alpha_q().scale(&pow2(m + 3)) + vn_quat(m).scale(&BigInt::from(3))).div_exact(&BigInt::from(7))
}

/// Closed form of `JN(0) + ... + JN(m)`:
/// `JN(m+1) - (7·(1 + i + 4j + 7k) - 4·VN(m+1) + VN(m)) / 21`.
pub fn quat_sum_jn(m: usize) -> Result<NilQuat> {
    let numerator = c_sum().scale(&BigInt::from(7)) - vn_quat(m + 1).scale(&BigInt::from(4)) + vn_quat(m);
    Ok(jn_quat(m + 1) - numerator.div_exact(&BigInt::from(21))?)
}

/// `JN(0) + ... + JN(m)` added term by term.
pub fn naive_sum_jn(m: usize) -> NilQuat {
    (0..=m).map(jn_quat).sum()
}
