//! Exact rational arithmetic: scalars, dense matrices with kernel/rank,
//! and truncated formal power series.
//!
//! Every quantity in this crate is an exact rational; floating point is
//! never used. Scalars are [`Rat`] values kept in lowest terms with a
//! positive denominator, so equality of values is structural equality and
//! the text form `p/q` (just `p` when the denominator is 1) is canonical.

mod matrix;
mod series;

pub use matrix::RationalMatrix;
pub use series::{SeriesError, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational scalar, always stored in lowest terms with
/// a positive denominator. `Display` and `FromStr` use the `p/q` form.
pub type Rat = BigRational;

/// Rational from a numerator/denominator pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

/// Parse `p/q` or `p`. Decimal notation is rejected.
pub fn parse_rat(s: &str) -> Result<Rat, num_rational::ParseRatioError> {
    s.trim().parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom().is_positive());
        assert!(num_integer::gcd(r.numer().clone(), r.denom().clone()).is_one());
    }

    #[test]
    fn display_round_trip() {
        for (n, d) in [(57, 25), (49, 25), (-11, 5), (24, 5), (7, 1), (0, 3), (-2, 1)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
        }
        assert_eq!(rat(57, 25).to_string(), "57/25");
        assert_eq!(rat(7, 1).to_string(), "7");
        assert_eq!(rat(-22, 10).to_string(), "-11/5");
    }

    #[test]
    fn decimal_input_is_rejected() {
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1e-3").is_err());
        assert!(parse_rat("3/").is_err());
    }
}
