//! Exact rational scalars.
//!
//! Everything numeric in this crate is a `Rat` (arbitrary-precision,
//! always reduced, positive denominator — `num_rational` maintains those
//! invariants). No floating point exists anywhere in the library.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{input_err, Result};

pub type Rat = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses "p/q" or a plain integer string.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| crate::error::Error::Input(format!("bad rational `{text}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| crate::error::Error::Input(format!("bad rational `{text}`")))?;
    if den.is_zero() {
        return input_err(format!("zero denominator in `{text}`"));
    }
    Ok(Rat::new(num, den))
}

/// Renders as "p/q", or "p" when the value is an integer. Never a decimal.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reads a rational out of a JSON value: either a string "p/q" or an integer.
pub fn rat_from_json(value: &serde_json::Value) -> Result<Rat> {
    match value {
        serde_json::Value::String(s) => parse_rat(s),
        serde_json::Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(rat_int(i)),
            None => input_err(format!("non-integer JSON number `{n}` for rational")),
        },
        other => input_err(format!("expected rational, got `{other}`")),
    }
}

pub fn is_nonnegative(r: &Rat) -> bool {
    !r.is_negative()
}

/// Least common multiple of the denominators of a rational vector.
pub fn denominator_lcm(values: &[Rat]) -> BigInt {
    values.iter().fold(BigInt::one(), |acc, v| {
        num_integer::lcm(acc, v.denom().clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rat("7/3").unwrap(), rat(7, 3));
        assert_eq!(parse_rat("14/6").unwrap(), rat(7, 3));
        assert_eq!(parse_rat("-2").unwrap(), rat_int(-2));
        assert_eq!(rat_string(&rat(9, 7)), "9/7");
        assert_eq!(rat_string(&rat(6, 3)), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn denominator_lcm_of_point() {
        let point = vec![rat(1, 3), rat(1, 3), rat(2, 3)];
        assert_eq!(denominator_lcm(&point), BigInt::from(3));
        let point = vec![rat(1, 2), rat(1, 3)];
        assert_eq!(denominator_lcm(&point), BigInt::from(6));
    }
}
