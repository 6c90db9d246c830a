//! Exact rational helpers shared by configurations and the LP oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` in lowest terms, or just `p` when the denominator is one.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format(&ratio(10, 4)), "5/2");
        assert_eq!(format(&ratio(6, 2)), "3");
        assert_eq!(parse("14/6"), Some(ratio(7, 3)));
        assert_eq!(parse("3"), Some(int(3)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
