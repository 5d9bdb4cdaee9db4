//! The quadratic field Q(√2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, ToPrimitive};

use super::{fmt_rational, int, Field, Rational};

/// `a + b·√2` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadElement {
    pub a: Rational,
    pub b: Rational,
}

impl QuadElement {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
        }
    }

    pub fn int(v: i64) -> Self {
        Self::rational(int(v))
    }

    pub fn sqrt2() -> Self {
        Self {
            a: Rational::zero(),
            b: int(1),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value when `b = 0`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Field norm `a² − 2b²`; zero only for the zero element since √2 is irrational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(2) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            a: &self.a * r,
            b: &self.b * r,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// `2^(e/2)` for any integer `e`, exact in Q(√2).
    pub fn pow_sqrt2(e: i64) -> Self {
        let half = e.div_euclid(2);
        let base = if half >= 0 {
            Rational::from_integer(num_bigint::BigInt::from(2).pow(half as u32))
        } else {
            Rational::new(1.into(), num_bigint::BigInt::from(2).pow((-half) as u32))
        };
        if e.rem_euclid(2) == 0 {
            Self::rational(base)
        } else {
            Self {
                a: Rational::zero(),
                b: base,
            }
        }
    }
}

impl Field for QuadElement {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        Self {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
    fn minus(&self, o: &Self) -> Self {
        Self {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
    fn times(&self, o: &Self) -> Self {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        Self {
            a: &self.a * &o.a + int(2) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
    fn negate(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
        }
    }
    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Self {
            a: c.a / &n,
            b: c.b / &n,
        })
    }
    fn from_int(v: i64) -> Self {
        Self::int(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for QuadElement {
            type Output = QuadElement;
            fn $m(self, rhs: QuadElement) -> QuadElement {
                Field::$f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a QuadElement> for &'a QuadElement {
            type Output = QuadElement;
            fn $m(self, rhs: &'a QuadElement) -> QuadElement {
                Field::$f(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Neg for QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        self.negate()
    }
}

impl From<Rational> for QuadElement {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sqrt_part = |b: &Rational| -> String {
            if *b == int(1) {
                "sqrt2".to_string()
            } else {
                format!("{}*sqrt2", fmt_rational(b))
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => {
                if self.b.is_negative() {
                    write!(f, "-{}", sqrt_part(&-&self.b))
                } else {
                    write!(f, "{}", sqrt_part(&self.b))
                }
            }
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{}{}",
                    fmt_rational(&self.a),
                    sign,
                    sqrt_part(&self.b.abs())
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        assert_eq!(QuadElement::int(3).to_string(), "3");
        assert_eq!(QuadElement::rational(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!(QuadElement::sqrt2().to_string(), "sqrt2");
        assert_eq!(
            QuadElement::new(rat(1, 2), rat(-3, 1)).to_string(),
            "1/2-3*sqrt2"
        );
        assert_eq!(QuadElement::new(int(0), rat(1, 2)).to_string(), "1/2*sqrt2");
    }

    #[test]
    fn powers_of_root_two() {
        assert_eq!(QuadElement::pow_sqrt2(2), QuadElement::int(2));
        assert_eq!(QuadElement::pow_sqrt2(3), QuadElement::new(int(0), int(2)));
        assert_eq!(
            QuadElement::pow_sqrt2(-1),
            QuadElement::new(int(0), rat(1, 2))
        );
        assert_eq!(
            QuadElement::sqrt2().times(&QuadElement::sqrt2()),
            QuadElement::int(2)
        );
    }

    fn q() -> impl Strategy<Value = QuadElement> {
        (-20i64..20, 1i64..8, -20i64..20, 1i64..8)
            .prop_map(|(a, da, b, db)| QuadElement::new(rat(a, da), rat(b, db)))
    }

    proptest! {
        #[test]
        fn product_matches_float(x in q(), y in q()) {
            let exact = x.times(&y).to_f64();
            prop_assert!((exact - x.to_f64() * y.to_f64()).abs() < 1e-9);
        }

        #[test]
        fn field_axioms(x in q(), y in q(), z in q()) {
            prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
            prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
            prop_assert_eq!(x.plus(&y), y.plus(&x));
            if !x.is_zero() {
                prop_assert!(!x.norm().is_zero());
                prop_assert_eq!(x.times(&x.inverse().unwrap()), QuadElement::one());
            }
        }

        #[test]
        fn rationals_stay_reduced(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
            use num_integer::Integer;
            let (r, s) = (rat(a, b), rat(c, d));
            for v in [&r + &s, &r * &s] {
                prop_assert!(v.denom() > &0.into());
                prop_assert_eq!(v.numer().gcd(v.denom()), 1.into());
            }
        }
    }
}
