//! Exact rational scalars. All set elements, polynomial coefficients, and
//! level values in this crate are `Rat`; nothing downstream ever rounds.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by the `num_rational` constructors).
pub type Rat = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Parses "p/q" or "p" with optional sign and surrounding whitespace.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let mut parts = s.splitn(2, '/');
    let num_s = parts.next().unwrap().trim();
    let num: BigInt = num_s
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num_s:?}")))?;
    match parts.next() {
        None => Ok(Rat::from_integer(num)),
        Some(den_s) => {
            let den_s = den_s.trim();
            let den: BigInt = den_s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {den_s:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Renders as "p" for integers, "p/q" otherwise; inverse of `parse_rat`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// ⌊r⌋ as a BigInt.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// ⌊r⌋ clamped into usize (negative values clamp to 0).
pub fn rat_floor_usize(r: &Rat) -> usize {
    let f = rat_floor(r);
    if f.sign() == Sign::Minus {
        0
    } else {
        f.to_usize().unwrap_or(usize::MAX)
    }
}

/// Exact square root if `r` is the square of a rational, else None.
pub fn rat_sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

pub fn big_to_f64(b: &BigInt) -> f64 {
    b.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert_eq!(parse_rat(" 4/6 ").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn sqrt_exact() {
        assert_eq!(rat_sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt_exact(&rat_int(2)), None);
        assert_eq!(rat_sqrt_exact(&rat_int(-4)), None);
        assert_eq!(rat_sqrt_exact(&rat_zero()), Some(rat_zero()));
    }

    #[test]
    fn floors() {
        assert_eq!(rat_floor(&rat(7, 2)), BigInt::from(3));
        assert_eq!(rat_floor(&rat(-7, 2)), BigInt::from(-4));
        assert_eq!(rat_floor_usize(&rat(-1, 2)), 0);
    }
}
