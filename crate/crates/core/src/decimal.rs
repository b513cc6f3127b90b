//! Decimal rendering of exact rationals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

/// Digits carried by the `h_float` column.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Positional notation with exactly `digits` significant digits, rounded half
/// to even from the exact value.
pub fn render_significant(x: &BigRational, digits: usize) -> String {
    assert!(digits > 0);
    if x.is_zero() {
        return format!("0.{}", "0".repeat(digits - 1));
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let x = x.abs();
    let ten = BigInt::from(10);
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(Pow::pow(&ten, e as u64))
        } else {
            BigRational::from_integer(Pow::pow(&ten, (-e) as u64)).recip()
        }
    };

    // 10^exp <= x < 10^(exp+1)
    let mut exp = x.numer().to_str_radix(10).len() as i64 - x.denom().to_str_radix(10).len() as i64;
    while x < pow10(exp) {
        exp -= 1;
    }
    while x >= pow10(exp + 1) {
        exp += 1;
    }

    let mut scale = digits as i64 - 1 - exp;
    let mut mantissa = round_half_even(&(&x * pow10(scale)));
    if mantissa == Pow::pow(&ten, digits as u64) {
        mantissa /= &ten;
        scale -= 1;
    }

    let body = mantissa.to_str_radix(10);
    if scale <= 0 {
        return format!("{sign}{body}{}", "0".repeat((-scale) as usize));
    }
    let scale = scale as usize;
    let padded = if body.len() <= scale {
        format!("{}{body}", "0".repeat(scale + 1 - body.len()))
    } else {
        body
    };
    let (int, frac) = padded.split_at(padded.len() - scale);
    format!("{sign}{int}.{frac}")
}

fn round_half_even(x: &BigRational) -> BigInt {
    debug_assert_eq!(x.numer().sign(), Sign::Plus);
    let (q, r) = x.numer().div_rem(x.denom());
    let twice = r * 2u32;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1u32,
        std::cmp::Ordering::Equal if q.is_even() => q,
        std::cmp::Ordering::Equal => q + 1u32,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn big(n: &str, d: &str) -> BigRational {
        BigRational::new(n.parse().unwrap(), d.parse().unwrap())
    }

    #[test]
    fn twelve_digits() {
        let cases = [
            (r(4, 7), "0.571428571429"),
            (r(1, 1), "1.00000000000"),
            (r(2, 5), "0.400000000000"),
            (r(2, 3), "0.666666666667"),
            (r(1, 200), "0.00500000000000"),
            (r(51, 101), "0.504950495050"),
            (r(5001, 10001), "0.500049995000"),
            (r(2, 199), "0.0100502512563"),
        ];
        for (x, s) in cases {
            assert_eq!(render_significant(&x, 12), s, "{x}");
        }
    }

    #[test]
    fn ties_go_to_even() {
        assert_eq!(render_significant(&r(1, 8), 2), "0.12");
        assert_eq!(render_significant(&r(3, 8), 2), "0.38");
        assert_eq!(
            render_significant(&big("1234567890125", "10000000000000"), 12),
            "0.123456789012"
        );
        assert_eq!(
            render_significant(&big("1234567890135", "10000000000000"), 12),
            "0.123456789014"
        );
    }

    #[test]
    fn carry_into_next_decade() {
        assert_eq!(
            render_significant(&big("99999999999951", "100000000000000"), 12),
            "1.00000000000"
        );
        assert_eq!(render_significant(&r(999, 1000), 2), "1.0");
    }

    #[test]
    fn large_and_signed() {
        assert_eq!(render_significant(&r(123456, 1), 3), "123000");
        assert_eq!(render_significant(&r(-4, 7), 3), "-0.571");
        assert_eq!(render_significant(&r(0, 1), 3), "0.00");
    }
}
