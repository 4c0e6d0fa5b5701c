//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always normalized with a positive denominator.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Input(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Residue of `x` modulo the prime `p`, or `None` if `p` divides the denominator.
pub fn rational_mod(x: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let reduce = |v: &BigInt| -> u64 {
        let r = v % &pb;
        let r = if r.is_negative() { r + &pb } else { r };
        r.to_u64().expect("residue fits in u64")
    };
    let den = reduce(x.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(reduce(x.numer()), inv_mod(den, p), p))
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn residues() {
        let p = 101;
        let half = parse_rational("1/2").unwrap();
        assert_eq!(mul_mod(rational_mod(&half, p).unwrap(), 2, p), 1);
        assert_eq!(rational_mod(&rat(-1), p), Some(100));
        assert_eq!(rational_mod(&parse_rational("1/101").unwrap(), p), None);
    }
}
