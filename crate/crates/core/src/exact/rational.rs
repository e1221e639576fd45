use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field: arbitrary-precision rationals.
///
/// `num_rational::Ratio` keeps values in lowest terms with a positive
/// denominator, which is exactly the invariant we need. No rounding ever.
pub type Q = num_rational::BigRational;

/// Rational from a numerator/denominator pair of machine integers.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qi(num: i64) -> Q {
    Q::from_integer(BigInt::from(num))
}

/// Parse `"p/q"` or `"p"` (used by all text formats).
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Q::new(num, den))
}

/// Format as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `(-1)^k` as a rational sign.
pub fn sign_pow(k: i64) -> Q {
    if k.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

#[allow(unused_imports)]
pub(crate) use sign_pow as _sign_pow;
