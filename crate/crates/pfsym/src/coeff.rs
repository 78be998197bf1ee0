//! Scalar type: exact arbitrary-precision rationals.
//!
//! All structure constants appearing in this crate are in fact integers
//! (matching counts, subset counts, Moebius values), but coefficients are
//! kept rational so that linear algebra over the bases never leaves the
//! scalar field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// The rational `n/1`.
pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Renders a coefficient exactly: integers as plain decimals (`"7"`,
/// `"-2"`), everything else as `numerator/denominator` (`"3/4"`).
pub fn render(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses the output of [`render`]. Accepts optional sign and a single `/`.
pub fn parse(s: &str) -> Option<Coeff> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// True when `c` is a (possibly negative) integer.
pub fn is_integer(c: &Coeff) -> bool {
    c.is_integer()
}

/// True when `c` is a nonnegative integer.
pub fn is_nonneg_integer(c: &Coeff) -> bool {
    c.is_integer() && !c.is_negative()
}

/// The constant one, spelled out for call sites that want intent over
/// mechanics.
pub fn one() -> Coeff {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_roundtrip() {
        for s in ["0", "7", "-2", "3/4", "-5/9"] {
            let c = parse(s).unwrap();
            assert_eq!(render(&c), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(render(&parse("6/4").unwrap()), "3/2");
        assert_eq!(render(&parse("4/2").unwrap()), "2");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }
}
