use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// A proper fraction `r/m` in lowest terms, `0 < r < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedFraction {
    num: u64,
    den: u64,
}

impl ReducedFraction {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || num >= den {
            return Err(Error::OutOfRange { num, den });
        }
        let gcd = num.gcd(&den);
        if gcd != 1 {
            return Err(Error::NotCoprime { num, den, gcd });
        }
        Ok(ReducedFraction { num, den })
    }

    #[inline]
    pub fn num(&self) -> u64 {
        self.num
    }

    #[inline]
    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new_raw(BigInt::from(self.num), BigInt::from(self.den))
    }

    /// Every proper reduced fraction with denominator `den`, in increasing order.
    pub fn with_denominator(den: u64) -> impl Iterator<Item = ReducedFraction> {
        (1..den)
            .filter(move |r| r.gcd(&den) == 1)
            .map(move |num| ReducedFraction { num, den })
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ReducedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (r, m) = s
            .split_once('/')
            .ok_or_else(|| Error::Malformed(s.to_string()))?;
        let r = r
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(s.to_string()))?;
        let m = m
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(s.to_string()))?;
        ReducedFraction::new(r, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invariant_violations() {
        assert!(matches!(
            ReducedFraction::new(2, 4),
            Err(Error::NotCoprime { gcd: 2, .. })
        ));
        assert!(matches!(
            ReducedFraction::new(0, 5),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            ReducedFraction::new(5, 5),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            ReducedFraction::new(1, 1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn parses() {
        let f: ReducedFraction = "3/7".parse().unwrap();
        assert_eq!((f.num(), f.den()), (3, 7));
        assert!(matches!(
            "3".parse::<ReducedFraction>(),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            "a/7".parse::<ReducedFraction>(),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            "2/4".parse::<ReducedFraction>(),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn denominator_enumeration_is_totient() {
        let phi: Vec<usize> = (2..=12)
            .map(|m| ReducedFraction::with_denominator(m).count())
            .collect();
        assert_eq!(phi, vec![1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
