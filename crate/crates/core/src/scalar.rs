//! Exact scalar fields used by the combinatorial and polyhedral code.
//!
//! Everything outside [`crate::spectra`] is generic over [`ExactField`]. The
//! crate root fixes [`crate::Rational`] (arbitrary precision) as the default;
//! the fixed-width ratios are there for small problems where overflow cannot
//! happen and speed matters.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An ordered field with exact arithmetic.
///
/// Fixed-width implementations panic on overflow when converting from
/// [`BigInt`]; arithmetic overflow follows the usual integer rules.
pub trait ExactField:
    Clone + Debug + Display + Ord + Hash + Send + Sync + 'static + Signed
{
    fn from_ratio(numer: i64, denom: i64) -> Self;
    fn from_bigints(numer: BigInt, denom: BigInt) -> Self;
    fn numer_bigint(&self) -> BigInt;
    fn denom_bigint(&self) -> BigInt;
    fn to_f64(&self) -> f64;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn is_integer(&self) -> bool {
        self.denom_bigint().is_one()
    }
}

macro_rules! impl_exact_fixed {
    ($int:ty) => {
        impl ExactField for Ratio<$int> {
            fn from_ratio(numer: i64, denom: i64) -> Self {
                Ratio::new(<$int>::from(numer), <$int>::from(denom))
            }

            fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
                let g = numer.gcd(&denom);
                let (n, d) = (&numer / &g, &denom / &g);
                let conv = |x: &BigInt| {
                    <$int>::try_from(x.clone())
                        .unwrap_or_else(|_| panic!("{} overflows {}", x, stringify!($int)))
                };
                Ratio::new(conv(&n), conv(&d))
            }

            fn numer_bigint(&self) -> BigInt {
                BigInt::from(*self.numer())
            }

            fn denom_bigint(&self) -> BigInt {
                BigInt::from(*self.denom())
            }

            fn to_f64(&self) -> f64 {
                *self.numer() as f64 / *self.denom() as f64
            }
        }
    };
}

impl_exact_fixed!(i64);
impl_exact_fixed!(i128);

impl ExactField for Ratio<BigInt> {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        Ratio::new(numer, denom)
    }

    fn numer_bigint(&self) -> BigInt {
        self.numer().clone()
    }

    fn denom_bigint(&self) -> BigInt {
        self.denom().clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Parses `"p/q"`, `"-p/q"` or an integer. Decimal notation is rejected so
/// that every accepted string has an exact value.
pub fn parse_fraction<F: ExactField>(s: &str) -> Option<F> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).ok()?;
    let d = BigInt::from_str(d).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(F::from_bigints(n, d))
}

/// Formats as `p/q`, or `p` when the value is an integer.
pub fn format_fraction<F: ExactField>(x: &F) -> String {
    let (n, d) = (x.numer_bigint(), x.denom_bigint());
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

pub(crate) fn two<F: ExactField>() -> F {
    F::from_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn parse_and_format() {
        let x: BigRational = parse_fraction("3/2").unwrap();
        assert_eq!(format_fraction(&x), "3/2");
        let y: BigRational = parse_fraction("-6/4").unwrap();
        assert_eq!(format_fraction(&y), "-3/2");
        let z: Rational64 = parse_fraction(" 7 ").unwrap();
        assert_eq!(format_fraction(&z), "7");
        assert!(parse_fraction::<BigRational>("1.5").is_none());
        assert!(parse_fraction::<BigRational>("1/0").is_none());
        assert!(parse_fraction::<BigRational>("a").is_none());
    }

    #[test]
    fn fixed_width_reduces_before_narrowing() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let x = Rational64::from_bigints(big.clone(), big * 2);
        assert_eq!(x, Rational64::new(1, 2));
    }

    #[test]
    fn to_f64_matches() {
        let x: BigRational = parse_fraction("19/2").unwrap();
        assert_eq!(ExactField::to_f64(&x), 9.5);
    }
}
