//! Quaternions over the integers with three nilpotent units.
//!
//! The basis is `{1, i, j, k}` with `i² = j² = k² = 0` and every mixed product
//! of units equal to zero, so the product of `a + u` and `b + v` (scalar plus
//! vector part) collapses to `ab + av + bu`. The algebra is commutative and
//! associative. Components are [`BigInt`], so nothing ever rounds.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Component, Error, Result};

/// `s + x·i + y·j + z·k` with exact integer components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NilQuat {
    pub s: BigInt,
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl NilQuat {
    pub fn new(
        s: impl Into<BigInt>,
        x: impl Into<BigInt>,
        y: impl Into<BigInt>,
        z: impl Into<BigInt>,
    ) -> Self {
        NilQuat {
            s: s.into(),
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(s: impl Into<BigInt>) -> Self {
        NilQuat {
            s: s.into(),
            ..Self::default()
        }
    }

    pub fn unit_i() -> Self {
        Self::new(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Self::new(0, 0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Self::new(0, 0, 0, 1)
    }

    /// Builds a quaternion from four consecutive values `(a₀, a₁, a₂, a₃)`.
    pub fn from_components([s, x, y, z]: [BigInt; 4]) -> Self {
        NilQuat { s, x, y, z }
    }

    pub fn components(&self) -> [&BigInt; 4] {
        [&self.s, &self.x, &self.y, &self.z]
    }

    pub fn into_components(self) -> [BigInt; 4] {
        [self.s, self.x, self.y, self.z]
    }

    pub fn component(&self, c: Component) -> &BigInt {
        match c {
            Component::Scalar => &self.s,
            Component::I => &self.x,
            Component::J => &self.y,
            Component::K => &self.z,
        }
    }

    /// The vector part `x·i + y·j + z·k` as a quaternion with zero scalar.
    pub fn vector_part(&self) -> NilQuat {
        NilQuat {
            s: BigInt::zero(),
            x: self.x.clone(),
            y: self.y.clone(),
            z: self.z.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_pure_vector(&self) -> bool {
        self.s.is_zero()
    }

    fn map(&self, f: impl Fn(&BigInt) -> BigInt) -> NilQuat {
        NilQuat {
            s: f(&self.s),
            x: f(&self.x),
            y: f(&self.y),
            z: f(&self.z),
        }
    }

    fn zip(&self, other: &NilQuat, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> NilQuat {
        NilQuat {
            s: f(&self.s, &other.s),
            x: f(&self.x, &other.x),
            y: f(&self.y, &other.y),
            z: f(&self.z, &other.z),
        }
    }

    pub fn add(&self, other: &NilQuat) -> NilQuat {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &NilQuat) -> NilQuat {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &BigInt) -> NilQuat {
        self.map(|a| c * a)
    }

    /// `(a + u)(b + v) = ab + a·v + b·u`; the `u·v` term vanishes.
    pub fn mul(&self, other: &NilQuat) -> NilQuat {
        let a = &self.s;
        let b = &other.s;
        NilQuat {
            s: a * b,
            x: a * &other.x + b * &self.x,
            y: a * &other.y + b * &self.y,
            z: a * &other.z + b * &self.z,
        }
    }

    pub fn square(&self) -> NilQuat {
        self.mul(self)
    }

    pub fn conj(&self) -> NilQuat {
        NilQuat {
            s: self.s.clone(),
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    /// `q·conj(q)`, which is always the scalar `s²`.
    pub fn norm_sq(&self) -> BigInt {
        &self.s * &self.s
    }

    /// Divides every component by `d`, failing unless all four divide evenly.
    pub fn div_exact(&self, d: &BigInt) -> Result<NilQuat> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (slot, c) in out.iter_mut().zip(Component::ALL) {
            let value = self.component(c);
            let (q, r) = value.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NonDivisible {
                    component: c,
                    value: value.clone(),
                    divisor: d.clone(),
                });
            }
            *slot = q;
        }
        Ok(NilQuat::from_components(out))
    }

    /// Components rendered as decimal strings, in `[s, x, y, z]` order.
    pub fn to_decimal_strings(&self) -> [String; 4] {
        [
            self.s.to_string(),
            self.x.to_string(),
            self.y.to_string(),
            self.z.to_string(),
        ]
    }
}

/// Exact integer division for scalars, with the same failure modes as
/// [`NilQuat::div_exact`].
pub fn div_exact_int(value: &BigInt, d: &BigInt) -> Result<BigInt> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = value.div_rem(d);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonDivisible {
            component: Component::Scalar,
            value: value.clone(),
            divisor: d.clone(),
        })
    }
}

impl fmt::Display for NilQuat {
    /// Renders as `s + x·i + y·j + z·k` with explicit signs, e.g.
    /// `-1 - 3i - 3j - 10k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.s)?;
        for (coef, unit) in [(&self.x, 'i'), (&self.y, 'j'), (&self.z, 'k')] {
            let sign = if coef.is_negative() { '-' } else { '+' };
            write!(f, " {} {}{}", sign, coef.abs(), unit)?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inherent:ident) => {
        impl $trait<&NilQuat> for &NilQuat {
            type Output = NilQuat;
            fn $method(self, rhs: &NilQuat) -> NilQuat {
                NilQuat::$inherent(self, rhs)
            }
        }
        impl $trait<NilQuat> for NilQuat {
            type Output = NilQuat;
            fn $method(self, rhs: NilQuat) -> NilQuat {
                NilQuat::$inherent(&self, &rhs)
            }
        }
        impl $trait<&NilQuat> for NilQuat {
            type Output = NilQuat;
            fn $method(self, rhs: &NilQuat) -> NilQuat {
                NilQuat::$inherent(&self, rhs)
            }
        }
        impl $trait<NilQuat> for &NilQuat {
            type Output = NilQuat;
            fn $method(self, rhs: NilQuat) -> NilQuat {
                NilQuat::$inherent(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl AddAssign<&NilQuat> for NilQuat {
    fn add_assign(&mut self, rhs: &NilQuat) {
        self.s += &rhs.s;
        self.x += &rhs.x;
        self.y += &rhs.y;
        self.z += &rhs.z;
    }
}

impl SubAssign<&NilQuat> for NilQuat {
    fn sub_assign(&mut self, rhs: &NilQuat) {
        self.s -= &rhs.s;
        self.x -= &rhs.x;
        self.y -= &rhs.y;
        self.z -= &rhs.z;
    }
}

impl Neg for NilQuat {
    type Output = NilQuat;
    fn neg(self) -> NilQuat {
        self.map(|a| -a)
    }
}

impl Neg for &NilQuat {
    type Output = NilQuat;
    fn neg(self) -> NilQuat {
        self.map(|a| -a)
    }
}

impl std::iter::Sum for NilQuat {
    fn sum<I: Iterator<Item = NilQuat>>(iter: I) -> NilQuat {
        iter.fold(NilQuat::zero(), |mut acc, q| {
            acc += &q;
            acc
        })
    }
}

// JSON form: `["s", "x", "y", "z"]`, decimal strings so consumers with 64-bit
// numbers don't truncate.
impl Serialize for NilQuat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(4)?;
        for c in self.components() {
            tup.serialize_element(&c.to_string())?;
        }
        tup.end()
    }
}

impl<'de> Deserialize<'de> for NilQuat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct QuatVisitor;

        impl<'de> Visitor<'de> for QuatVisitor {
            type Value = NilQuat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of four decimal strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<NilQuat, A::Error> {
                let mut parts = Vec::with_capacity(4);
                for idx in 0..4 {
                    let text: String = seq
                        .next_element()?
                        .ok_or_else(|| de::Error::invalid_length(idx, &self))?;
                    let value = text
                        .parse::<BigInt>()
                        .map_err(|e| de::Error::custom(format!("component {idx}: {e}")))?;
                    parts.push(value);
                }
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(5, &self));
                }
                let [s, x, y, z]: [BigInt; 4] = parts.try_into().expect("four components");
                Ok(NilQuat { s, x, y, z })
            }
        }

        deserializer.deserialize_tuple(4, QuatVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: i64, x: i64, y: i64, z: i64) -> NilQuat {
        NilQuat::new(s, x, y, z)
    }

    #[test]
    fn add_sub_scale() {
        assert_eq!(q(0, 1, 1, 2) + q(2, 1, 5, 10), q(2, 2, 6, 12));
        let p = q(-4, 9, 0, 13);
        assert!((&p - &p).is_zero());
        assert_eq!(q(1, 2, 5, 9).scale(&BigInt::from(3)), q(3, 6, 15, 27));
    }

    #[test]
    fn products_from_worked_example() {
        assert_eq!(q(1, 1, 2, 5).square(), q(1, 2, 4, 10));
        assert_eq!(q(1, 2, 5, 9) * q(0, 1, 1, 2), q(0, 1, 1, 2));
        assert_eq!(q(1, 2, 5, 9).square(), q(1, 4, 10, 18));
        assert_eq!(q(2, 5, 9, 18) * q(1, 1, 2, 5), q(2, 7, 13, 28));
    }

    #[test]
    fn pure_vectors_annihilate() {
        assert!((q(0, 3, -7, 11) * q(0, -2, 5, 8)).is_zero());
        for u in [NilQuat::unit_i(), NilQuat::unit_j(), NilQuat::unit_k()] {
            for v in [NilQuat::unit_i(), NilQuat::unit_j(), NilQuat::unit_k()] {
                assert!((&u * &v).is_zero());
            }
        }
    }

    #[test]
    fn conjugate() {
        assert_eq!(q(2, 1, 5, 10).conj(), q(2, -1, -5, -10));
        assert_eq!(q(2, 1, 5, 10).conj().conj(), q(2, 1, 5, 10));
        assert_eq!(q(7, 0, 0, 0).conj(), q(7, 0, 0, 0));
    }

    #[test]
    fn norm() {
        assert_eq!(q(0, 1, 1, 2).norm_sq(), BigInt::from(0));
        assert_eq!(q(2, 5, 9, 18).norm_sq(), BigInt::from(4));
        assert_eq!(q(-3, 7, 7, 7).norm_sq(), BigInt::from(9));
        let p = q(-3, 7, 7, 7);
        assert_eq!(&p * p.conj(), NilQuat::scalar(9));
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            q(7, 7, 21, 56).div_exact(&BigInt::from(7)).unwrap(),
            q(1, 1, 3, 8)
        );
        assert_eq!(
            q(0, 21, 21, 42).div_exact(&BigInt::from(21)).unwrap(),
            q(0, 1, 1, 2)
        );
        assert_eq!(
            q(-14, 0, 7, -7).div_exact(&BigInt::from(-7)).unwrap(),
            q(2, 0, -1, 1)
        );
    }

    #[test]
    fn exact_division_failures() {
        match q(1, 0, 0, 0).div_exact(&BigInt::from(7)) {
            Err(Error::NonDivisible {
                component,
                value,
                divisor,
            }) => {
                assert_eq!(component, Component::Scalar);
                assert_eq!(value, BigInt::from(1));
                assert_eq!(divisor, BigInt::from(7));
            }
            other => panic!("expected NonDivisible, got {other:?}"),
        }
        match q(7, 14, 3, 0).div_exact(&BigInt::from(7)) {
            Err(Error::NonDivisible { component, .. }) => assert_eq!(component, Component::J),
            other => panic!("expected NonDivisible, got {other:?}"),
        }
        assert_eq!(
            q(1, 2, 3, 4).div_exact(&BigInt::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            div_exact_int(&BigInt::from(22), &BigInt::from(7))
                .unwrap_err()
                .to_string(),
            "7 does not divide the scalar component 22"
        );
    }

    #[test]
    fn display() {
        assert_eq!(q(2, 5, 9, 18).to_string(), "2 + 5i + 9j + 18k");
        assert_eq!(q(-1, -3, -3, -10).to_string(), "-1 - 3i - 3j - 10k");
        assert_eq!(q(0, 1, -1, 0).to_string(), "0 + 1i - 1j + 0k");
    }

    #[test]
    fn json_form() {
        let v = q(-1, 2, 0, 123456789012345678i64) * NilQuat::scalar(1000);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, r#"["-1000","2000","0","123456789012345678000"]"#);
        let back: NilQuat = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<NilQuat>(r#"["1","2","3"]"#).is_err());
        assert!(serde_json::from_str::<NilQuat>(r#"["1","2","3","x"]"#).is_err());
    }
}
