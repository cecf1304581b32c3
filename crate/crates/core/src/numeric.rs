//! Exact integers, rationals and the handful of combinatorial counts the
//! rest of the crate is written in terms of.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Lifts an integer into the rationals.
pub fn int<N: Into<BigInt>>(n: N) -> Rational {
    Rational::from_integer(n.into())
}

/// `n!`
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Domain(format!("factorial of negative integer {n}")));
    }
    Ok((2..=n).fold(BigInt::one(), |acc, j| acc * j))
}

/// Binomial coefficient `C(n, k)`.
///
/// Total: any `k < 0` or `k > n` gives zero, so `C(r-2, -2)` and friends
/// vanish instead of erroring. Class formulas written uniformly in a
/// syzygy index rely on this.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        // exact at every step: acc = C(n, j) before the update
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `1! * 2! * ... * r!`
pub fn superfactorial(r: i64) -> Result<BigInt> {
    if r < 0 {
        return Err(Error::Domain(format!("superfactorial of negative integer {r}")));
    }
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for j in 1..=r {
        fact *= j;
        acc *= &fact;
    }
    Ok(acc)
}

/// Parses `"p/q"` or `"p"` into a normalized rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Renders with the numerator and denominator always present, e.g. `7/1`.
pub fn format_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Decimal approximation with six significant digits. Display only.
pub fn approx(q: &Rational) -> String {
    use num_traits::ToPrimitive;
    let v = q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN);
    if v == 0.0 {
        return "0".into();
    }
    let mag = v.abs().log10().floor();
    if (-4.0..6.0).contains(&mag) {
        let decimals = (5.0 - mag) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.5e}")
    }
}

/// `true` when `a` and `b` are both nonzero and of opposite sign.
pub fn opposite_signs(a: &Rational, b: &Rational) -> bool {
    (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive())
}

pub mod serde_rational {
    //! Serde adapter writing rationals as `"p/q"` strings.

    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{format_pq, parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_pq(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{format_pq, parse_rational, Rational};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&format_pq(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| parse_rational(s).map_err(de::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(factorial(6).unwrap(), BigInt::from(720));
        assert_eq!(factorial(10).unwrap(), BigInt::from(3_628_800));
        assert!(factorial(-1).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(4, -2), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(-3, 1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn superfactorial_values() {
        assert_eq!(superfactorial(0).unwrap(), BigInt::one());
        assert_eq!(superfactorial(4).unwrap(), BigInt::from(288));
        // 1 * 2 * 6 * 24 * 120 * 720
        let direct: i64 = [1i64, 2, 6, 24, 120, 720].iter().product();
        assert_eq!(direct, 24_883_200);
        assert_eq!(superfactorial(6).unwrap(), BigInt::from(direct));
        assert!(superfactorial(-2).is_err());
    }

    #[test]
    fn approx_six_digits() {
        assert_eq!(approx(&rat(2459, 377)), "6.52255");
        assert_eq!(approx(&rat(-17, 2)), "-8.50000");
        assert_eq!(approx(&int(0)), "0");
        assert_eq!(approx(&int(123_456_789)), "1.23457e8");
    }

    #[test]
    fn rationals_normalize() {
        assert_eq!(rat(4, -6), rat(-2, 3));
        assert_eq!(*rat(4, -6).denom(), BigInt::from(3));
        assert_eq!(parse_rational("10/-4").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
        assert_eq!(format_pq(&int(7)), "7/1");
    }

    proptest! {
        #[test]
        fn pascal_rule(n in 1i64..60, k in -5i64..70) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }

        #[test]
        fn binomial_matches_factorials(n in 0i64..50, k in 0i64..50) {
            prop_assume!(k <= n);
            let expect = factorial(n).unwrap() / (factorial(k).unwrap() * factorial(n - k).unwrap());
            prop_assert_eq!(binomial(n, k), expect);
        }

        #[test]
        fn rational_text_roundtrip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let q = rat(n, d);
            prop_assert_eq!(parse_rational(&q.to_string()).unwrap(), q.clone());
            prop_assert_eq!(parse_rational(&format_pq(&q)).unwrap(), q);
        }
    }
}
