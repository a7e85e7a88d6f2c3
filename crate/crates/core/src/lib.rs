//! Exact arithmetic for quaternions with nilpotent units (`i² = j² = k² = 0`,
//! all mixed products zero) whose components are third-order Jacobsthal and
//! Jacobsthal-Lucas numbers, plus a verifier that evaluates every identity
//! among them over arbitrary index ranges.
//!
//! ```
//! use dual_jacobsthal::{check, jn_quat, IdentityId};
//!
//! assert_eq!(jn_quat(3).to_string(), "2 + 5i + 9j + 18k");
//! assert!(check(IdentityId::T6Cassini, 1, None).unwrap().pass);
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod identities;
pub mod quaternions;
pub mod report;
pub mod sequences;

pub use algebra::{div_exact_int, NilQuat};
pub use error::{Component, Error, Result};
pub use identities::{
    check, check_printed_conjprod, check_printed_sqsum, deviations_for, worked_example_steps, CheckResult,
    Deviation, ExampleStep, IdentityId, Indices, Value,
};
pub use quaternions::{
    alpha_q, binet_jln_quat, binet_jn_quat, c_pow, c_sum, c_twist, jln_quat, jn_quat, naive_sum_jn,
    quat_sum_jn, un_quat, vn_quat,
};
pub use report::{paper_example, sweep, Counts, Meta, Report, Sweep};
pub use sequences::{
    binet_j3, binet_jl3, check_scalar_property, sum_j3, third_jacobsthal, third_jacobsthal_lucas, u3, v3,
    SeqCache, SequenceKind, Sequences,
};
