//! Exact rational scalars.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// The default loop parameter, 10/3.
pub fn default_q() -> Scalar {
    ratio(10, 3)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Lossless text form: `"p/q"`, or `"p"` for integers.
pub fn render(x: &Scalar) -> String {
    x.to_string()
}

pub fn pow(x: &Scalar, e: usize) -> Scalar {
    let mut r = Scalar::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}
