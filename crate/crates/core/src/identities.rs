//! Registry of every verifiable identity and the evaluator for a single
//! instance of one.
//!
//! Each check evaluates both sides with exact arithmetic. A false equality, or
//! a closed form whose exact division leaves a remainder, comes back as a
//! [`CheckResult`] with `pass == false`; only malformed indices are errors.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::NilQuat;
use crate::error::{Error, Result};
use crate::quaternions::{
    alpha_q, binet_jln_quat, binet_jn_quat, c_pow, c_twist, jln_quat, jn_quat, naive_sum_jn, quat_sum_jn,
    un_quat,
};
use crate::sequences::{check_scalar_property, pow2, third_jacobsthal, third_jacobsthal_lucas, u3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    #[serde(rename = "T1_REC")]
    T1Rec,
    #[serde(rename = "T1_RECON")]
    T1Recon,
    #[serde(rename = "T1_SQSUM")]
    T1SqSum,
    #[serde(rename = "T2_SHIFT")]
    T2Shift,
    #[serde(rename = "T2_SUM3")]
    T2Sum3,
    #[serde(rename = "T2_POW4")]
    T2Pow4,
    #[serde(rename = "T3_SUM")]
    T3Sum,
    #[serde(rename = "T4_COMM")]
    T4Comm,
    #[serde(rename = "T4_CONJPROD")]
    T4ConjProd,
    #[serde(rename = "T5_BINET_J")]
    T5BinetJ,
    #[serde(rename = "T5_BINET_JL")]
    T5BinetJl,
    #[serde(rename = "T6_DOCAGNE")]
    T6Docagne,
    #[serde(rename = "T6_CASSINI")]
    T6Cassini,
}

impl IdentityId {
    pub const ALL: [IdentityId; 22] = [
        IdentityId::P1,
        IdentityId::P2,
        IdentityId::P3,
        IdentityId::P4,
        IdentityId::P5,
        IdentityId::P6,
        IdentityId::P7,
        IdentityId::P8,
        IdentityId::P9,
        IdentityId::T1Rec,
        IdentityId::T1Recon,
        IdentityId::T1SqSum,
        IdentityId::T2Shift,
        IdentityId::T2Sum3,
        IdentityId::T2Pow4,
        IdentityId::T3Sum,
        IdentityId::T4Comm,
        IdentityId::T4ConjProd,
        IdentityId::T5BinetJ,
        IdentityId::T5BinetJl,
        IdentityId::T6Docagne,
        IdentityId::T6Cassini,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::P1 => "P1",
            IdentityId::P2 => "P2",
            IdentityId::P3 => "P3",
            IdentityId::P4 => "P4",
            IdentityId::P5 => "P5",
            IdentityId::P6 => "P6",
            IdentityId::P7 => "P7",
            IdentityId::P8 => "P8",
            IdentityId::P9 => "P9",
            IdentityId::T1Rec => "T1_REC",
            IdentityId::T1Recon => "T1_RECON",
            IdentityId::T1SqSum => "T1_SQSUM",
            IdentityId::T2Shift => "T2_SHIFT",
            IdentityId::T2Sum3 => "T2_SUM3",
            IdentityId::T2Pow4 => "T2_POW4",
            IdentityId::T3Sum => "T3_SUM",
            IdentityId::T4Comm => "T4_COMM",
            IdentityId::T4ConjProd => "T4_CONJPROD",
            IdentityId::T5BinetJ => "T5_BINET_J",
            IdentityId::T5BinetJl => "T5_BINET_JL",
            IdentityId::T6Docagne => "T6_DOCAGNE",
            IdentityId::T6Cassini => "T6_CASSINI",
        }
    }

    /// Short label: `p1`..`p9` for the scalar properties, `t1`..`t13` for the
    /// quaternion identities.
    pub fn label(self) -> String {
        let pos = IdentityId::ALL.iter().position(|&id| id == self).expect("listed");
        if pos < 9 {
            format!("p{}", pos + 1)
        } else {
            format!("t{}", pos - 8)
        }
    }

    /// Human-readable statement of the equality being checked.
    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::P1 => "3J(n) + j(n) = 2^(n+1)",
            IdentityId::P2 => "j(n) - 3J(n) = 2j(n-3)",
            IdentityId::P3 => "J(n+2) - 4J(n) = -2 if n = 1 (mod 3), else 1",
            IdentityId::P4 => "j(n) - 4J(n) = 2, -3, 1 for n = 0, 1, 2 (mod 3)",
            IdentityId::P5 => "j(n+1) + j(n) = 3J(n+2)",
            IdentityId::P6 => "j(n) - J(n+2) = 1, -1, 0 for n = 0, 1, 2 (mod 3)",
            IdentityId::P7 => "j(n-3)^2 + 3J(n)j(n) = 4^n",
            IdentityId::P8 => "J(0) + ... + J(n) = J(n+1) - [n = 0 (mod 3)]",
            IdentityId::P9 => "j(n)^2 - 9J(n)^2 = 2^(n+2) j(n-3)",
            IdentityId::T1Rec => "2JN(m) + JN(m+1) + JN(m+2) = JN(m+3)",
            IdentityId::T1Recon => "JN(m) - JN(m+1)i - JN(m+2)j - JN(m+3)k = J(m)",
            IdentityId::T1SqSum => {
                "JN(m)^2 + JN(m+1)^2 + JN(m+2)^2 = (3*4^(m+1)(1+4i+8j+16k) - 2^(m+2)UN(m) \
                 - 2^(m+3)U(m)(i+2j+4k) + 2(1-i-j+2k)) / 7"
            }
            IdentityId::T2Shift => "jN(m+3) - 3JN(m+3) = 2jN(m)",
            IdentityId::T2Sum3 => "jN(m+1) + jN(m) = 3JN(m+2)",
            IdentityId::T2Pow4 => "jN(m)^2 + 3JN(m+3)jN(m+3) = 4^(m+3)(1+4i+8j+16k)",
            IdentityId::T3Sum => "JN(0) + ... + JN(m) = JN(m+1) - (7(1+i+4j+7k) - 4VN(m+1) + VN(m)) / 21",
            IdentityId::T4Comm => "jN(m)conj(JN(m)) - conj(jN(m))JN(m) = 2(J(m)jN(m) - j(m)JN(m))",
            IdentityId::T4ConjProd => "jN(m)JN(m) + conj(jN(m))conj(JN(m)) = 2j(m)J(m)",
            IdentityId::T5BinetJ => "JN(m) = (2^(m+1)α - VN(m)) / 7",
            IdentityId::T5BinetJl => "jN(m) = (2^(m+3)α + 3VN(m)) / 7",
            IdentityId::T6Docagne => {
                "JN(n)JN(m+1) - JN(n+1)JN(m) = (α(2^(n+1)UN(m+1) - 2^(m+1)UN(n+1)) \
                 + (1-i-j+2k)U(n-m)) / 7"
            }
            IdentityId::T6Cassini => {
                "JN(m+1)^2 - JN(m+2)JN(m) = (2^(m+1)α(2UN(m+1) - UN(m+2)) + (1-i-j+2k)) / 7"
            }
        }
    }

    pub fn is_scalar(self) -> bool {
        IdentityId::ALL.iter().position(|&id| id == self).expect("listed") < 9
    }

    /// Smallest index at which the identity is defined.
    pub fn min_index(self) -> usize {
        match self {
            IdentityId::P2 | IdentityId::P7 | IdentityId::P9 => 3,
            _ => 0,
        }
    }

    /// Whether the identity takes a second index `n >= m`.
    pub fn is_two_index(self) -> bool {
        self == IdentityId::T6Docagne
    }

    /// Parses one name: a tag (`T6_CASSINI`), a label (`t13`, `p:4`), any case.
    pub fn parse_name(name: &str) -> Result<IdentityId> {
        let lowered = name.trim().to_ascii_lowercase();
        let compact = lowered.replace(':', "");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag().to_ascii_lowercase() == lowered || id.label() == compact)
            .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
    }

    /// Parses a selection: `all`, a single name, a comma-separated list, or
    /// an inclusive range such as `p1..p9` or `t1..t13` in registry order.
    pub fn parse_selection(text: &str) -> Result<Vec<IdentityId>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(IdentityId::ALL);
            } else if let Some((a, b)) = part.split_once("..") {
                let (a, b) = (IdentityId::parse_name(a)?, IdentityId::parse_name(b)?);
                if a > b {
                    return Err(Error::UnknownIdentity(part.to_string()));
                }
                out.extend(IdentityId::ALL.into_iter().filter(|id| (a..=b).contains(id)));
            } else {
                out.push(IdentityId::parse_name(part)?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::EmptySelection);
        }
        Ok(out)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::parse_name(s)
    }
}

/// Index values at which a check was evaluated. `n` is present only for
/// two-index identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Indices {
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl Indices {
    pub fn single(m: usize) -> Self {
        Indices { m, n: None }
    }

    pub fn pair(m: usize, n: usize) -> Self {
        Indices { m, n: Some(n) }
    }
}

/// One side of an identity: an integer or a quaternion. Both serialize with
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    #[serde(with = "decimal")]
    Int(BigInt),
    Quat(NilQuat),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Quat(q) => write!(f, "{q}"),
        }
    }
}

impl From<NilQuat> for Value {
    fn from(q: NilQuat) -> Self {
        Value::Quat(q)
    }
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub identity: IdentityId,
    pub indices: Indices,
    pub pass: bool,
    pub lhs: Value,
    /// `None` when the right-hand side could not be evaluated (an exact
    /// division failed); `note` then says why.
    pub rhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn new(identity: IdentityId, indices: Indices, lhs: Value, rhs: Value) -> Self {
        let pass = lhs == rhs;
        CheckResult {
            identity,
            indices,
            pass,
            lhs,
            rhs: Some(rhs),
            note: None,
        }
    }

    fn from_sides(identity: IdentityId, indices: Indices, lhs: Value, rhs: Result<Value>) -> Result<Self> {
        match rhs {
            Ok(rhs) => Ok(CheckResult::new(identity, indices, lhs, rhs)),
            Err(e @ (Error::NonDivisible { .. } | Error::DivisionByZero)) => Ok(CheckResult {
                identity,
                indices,
                pass: false,
                lhs,
                rhs: None,
                note: Some(e.to_string()),
            }),
            Err(e) => Err(e),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self.pass = false;
        self
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn seven() -> BigInt {
    int(7)
}

/// Right-hand side of the squared-sum identity, read with quaternion squares.
fn sqsum_rhs(m: usize) -> Result<NilQuat> {
    let numerator = c_pow().scale(&(3 * (BigInt::from(1) << (2 * (m + 1)))))
        - un_quat(m).scale(&pow2(m + 2))
        - NilQuat::new(0, 1, 2, 4).scale(&(pow2(m + 3) * u3(m)))
        + c_twist().scale(&int(2));
    numerator.div_exact(&seven())
}

fn docagne_rhs(m: usize, n: usize) -> Result<NilQuat> {
    let bracket = un_quat(m + 1).scale(&pow2(n + 1)) - un_quat(n + 1).scale(&pow2(m + 1));
    let numerator = alpha_q() * bracket + c_twist().scale(&int(u3(n - m)));
    numerator.div_exact(&seven())
}

fn cassini_rhs(m: usize) -> Result<NilQuat> {
    let bracket = un_quat(m + 1).scale(&int(2)) - un_quat(m + 2);
    let numerator = alpha_q().scale(&pow2(m + 1)) * bracket + c_twist();
    numerator.div_exact(&seven())
}

/// Evaluates `identity` at index `m` (and `n` for [`IdentityId::T6Docagne`],
/// where it defaults to `m + 1`). `n` is ignored by single-index identities.
pub fn check(identity: IdentityId, m: usize, n: Option<usize>) -> Result<CheckResult> {
    if identity.is_scalar() {
        return check_scalar_property(identity, m);
    }
    let idx = Indices::single(m);
    let quat = |q: NilQuat| Value::Quat(q);
    let exact = |r: Result<NilQuat>| r.map(Value::Quat);

    match identity {
        IdentityId::T1Rec => {
            let lhs = jn_quat(m).scale(&int(2)) + jn_quat(m + 1) + jn_quat(m + 2);
            Ok(CheckResult::new(identity, idx, quat(lhs), quat(jn_quat(m + 3))))
        }
        IdentityId::T1Recon => {
            let lhs = jn_quat(m)
                - jn_quat(m + 1) * NilQuat::unit_i()
                - jn_quat(m + 2) * NilQuat::unit_j()
                - jn_quat(m + 3) * NilQuat::unit_k();
            Ok(CheckResult::new(
                identity,
                idx,
                quat(lhs),
                quat(NilQuat::scalar(third_jacobsthal(m))),
            ))
        }
        IdentityId::T1SqSum => {
            let lhs: NilQuat = (m..m + 3).map(|s| jn_quat(s).square()).sum();
            CheckResult::from_sides(identity, idx, quat(lhs), exact(sqsum_rhs(m)))
        }
        IdentityId::T2Shift => {
            let lhs = jln_quat(m + 3) - jn_quat(m + 3).scale(&int(3));
            Ok(CheckResult::new(
                identity,
                idx,
                quat(lhs),
                quat(jln_quat(m).scale(&int(2))),
            ))
        }
        IdentityId::T2Sum3 => {
            let lhs = jln_quat(m + 1) + jln_quat(m);
            Ok(CheckResult::new(
                identity,
                idx,
                quat(lhs),
                quat(jn_quat(m + 2).scale(&int(3))),
            ))
        }
        IdentityId::T2Pow4 => {
            let lhs = jln_quat(m).square() + (jn_quat(m + 3) * jln_quat(m + 3)).scale(&int(3));
            let rhs = c_pow().scale(&(BigInt::from(1) << (2 * (m + 3))));
            Ok(CheckResult::new(identity, idx, quat(lhs), quat(rhs)))
        }
        IdentityId::T3Sum => {
            CheckResult::from_sides(identity, idx, quat(naive_sum_jn(m)), exact(quat_sum_jn(m)))
        }
        IdentityId::T4Comm => {
            let (big, small) = (jn_quat(m), jln_quat(m));
            let lhs = &small * big.conj() - small.conj() * &big;
            let rhs =
                (small.scale(&third_jacobsthal(m)) - big.scale(&third_jacobsthal_lucas(m))).scale(&int(2));
            Ok(CheckResult::new(identity, idx, quat(lhs), quat(rhs)))
        }
        IdentityId::T4ConjProd => {
            let lhs = conjprod_lhs(m);
            let rhs = NilQuat::scalar(2 * third_jacobsthal_lucas(m) * third_jacobsthal(m));
            Ok(CheckResult::new(identity, idx, quat(lhs), quat(rhs)))
        }
        IdentityId::T5BinetJ => {
            CheckResult::from_sides(identity, idx, quat(jn_quat(m)), exact(binet_jn_quat(m)))
        }
        IdentityId::T5BinetJl => {
            CheckResult::from_sides(identity, idx, quat(jln_quat(m)), exact(binet_jln_quat(m)))
        }
        IdentityId::T6Docagne => {
            let n = n.unwrap_or(m + 1);
            if n < m {
                return Err(Error::IndexOutOfRange {
                    what: format!("{identity} second index n (m = {m})"),
                    index: n as i64,
                    min: m as i64,
                });
            }
            let lhs = jn_quat(n) * jn_quat(m + 1) - jn_quat(n + 1) * jn_quat(m);
            CheckResult::from_sides(identity, Indices::pair(m, n), quat(lhs), exact(docagne_rhs(m, n)))
        }
        IdentityId::T6Cassini => {
            let lhs = jn_quat(m + 1).square() - jn_quat(m + 2) * jn_quat(m);
            CheckResult::from_sides(identity, idx, quat(lhs), exact(cassini_rhs(m)))
        }
        _ => unreachable!("scalar identities handled above"),
    }
}

fn conjprod_lhs(m: usize) -> NilQuat {
    let (big, small) = (jn_quat(m), jln_quat(m));
    &small * &big + small.conj() * big.conj()
}

/// A printed statement that does not hold as written, next to the form the
/// engine checks instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deviation {
    pub identity: IdentityId,
    pub printed: String,
    pub verified: String,
    pub counterexample: CheckResult,
}

/// Evaluates the printed form of `T1_SQSUM`, which sums the scalar norms
/// `‖JN‖² = J²` rather than quaternion squares.
pub fn check_printed_sqsum(m: usize) -> Result<CheckResult> {
    let lhs: BigInt = (m..m + 3).map(|s| jn_quat(s).norm_sq()).sum();
    CheckResult::from_sides(
        IdentityId::T1SqSum,
        Indices::single(m),
        Value::Quat(NilQuat::scalar(lhs)),
        sqsum_rhs(m).map(Value::Quat),
    )
}

/// Evaluates the printed form of `T4_CONJPROD`, whose right-hand side is
/// `2j(m)·JN(m)`.
pub fn check_printed_conjprod(m: usize) -> CheckResult {
    let rhs = jn_quat(m).scale(&(2 * third_jacobsthal_lucas(m)));
    CheckResult::new(
        IdentityId::T4ConjProd,
        Indices::single(m),
        Value::Quat(conjprod_lhs(m)),
        Value::Quat(rhs),
    )
}

/// Documented deviations relevant to `ids`, each with its `m = 0`
/// counterexample.
pub fn deviations_for(ids: &[IdentityId]) -> Vec<Deviation> {
    let mut out = Vec::new();
    if ids.contains(&IdentityId::T1SqSum) {
        out.push(Deviation {
            identity: IdentityId::T1SqSum,
            printed: "‖JN(m)‖² + ‖JN(m+1)‖² + ‖JN(m+2)‖² = (same right-hand side)".into(),
            verified: "quaternion squares JN(m)^2 + JN(m+1)^2 + JN(m+2)^2; the printed norms are \
                       scalars and cannot equal the quaternion right-hand side"
                .into(),
            counterexample: check_printed_sqsum(0).expect("m = 0 is in range"),
        });
    }
    if ids.contains(&IdentityId::T4ConjProd) {
        out.push(Deviation {
            identity: IdentityId::T4ConjProd,
            printed: "jN(m)JN(m) + conj(jN(m))conj(JN(m)) = 2j(m)JN(m)".into(),
            verified: "right-hand side is the scalar 2j(m)J(m); the vector parts cancel".into(),
            counterexample: check_printed_conjprod(0),
        });
    }
    out
}

/// One printed quaternion from the worked Cassini example next to the value
/// recomputed here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleStep {
    pub label: String,
    pub printed: NilQuat,
    pub computed: NilQuat,
    pub pass: bool,
}

impl ExampleStep {
    fn new(label: &str, printed: NilQuat, computed: NilQuat) -> Self {
        let pass = printed == computed;
        ExampleStep {
            label: label.to_string(),
            printed,
            computed,
            pass,
        }
    }
}

/// Recomputes every quaternion printed in the worked Cassini example for
/// `m = 0` and `m = 1`.
pub fn worked_example_steps() -> Vec<ExampleStep> {
    let q = NilQuat::new;
    let jn = jn_quat;
    let cassini = |m: usize| cassini_rhs(m).expect("Cassini closed form divides by 7");
    vec![
        ExampleStep::new("JN(0)", q(0, 1, 1, 2), jn(0)),
        ExampleStep::new("JN(1)", q(1, 1, 2, 5), jn(1)),
        ExampleStep::new("JN(2)", q(1, 2, 5, 9), jn(2)),
        ExampleStep::new("JN(3)", q(2, 5, 9, 18), jn(3)),
        ExampleStep::new("JN(1)^2", q(1, 2, 4, 10), jn(1).square()),
        ExampleStep::new("JN(2)JN(0)", q(0, 1, 1, 2), jn(2) * jn(0)),
        ExampleStep::new(
            "JN(1)^2 - JN(2)JN(0)",
            q(1, 1, 3, 8),
            jn(1).square() - jn(2) * jn(0),
        ),
        ExampleStep::new("(2α(2UN(1) - UN(2)) + (1-i-j+2k)) / 7", q(1, 1, 3, 8), cassini(0)),
        ExampleStep::new("JN(2)^2", q(1, 4, 10, 18), jn(2).square()),
        ExampleStep::new("JN(3)JN(1)", q(2, 7, 13, 28), jn(3) * jn(1)),
        ExampleStep::new(
            "JN(2)^2 - JN(3)JN(1)",
            q(-1, -3, -3, -10),
            jn(2).square() - jn(3) * jn(1),
        ),
        ExampleStep::new(
            "(4α(2UN(2) - UN(3)) + (1-i-j+2k)) / 7",
            q(-1, -3, -3, -10),
            cassini(1),
        ),
    ]
}
