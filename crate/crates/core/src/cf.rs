//! Finite simple continued fractions `[0; a_1, ..., a_n]` of proper fractions,
//! their convergent tables and continuant polynomials.
//!
//! Indices follow the usual convention: `a_0 = 0` is the integer part, the
//! continuants satisfy `q_{-2} = 1`, `q_{-1} = 0`, `q_k = a_k q_{k-1} + q_{k-2}`,
//! and the numerators `p_k` obey the same recurrence from `p_{-2} = 0`,
//! `p_{-1} = 1`. Everything is exact; table entries are `BigInt` so tables for
//! arbitrary quotient lists never overflow.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fraction::ReducedFraction;

/// An inclusive range `a_lo, ..., a_hi` of partial quotients.
///
/// `hi = lo - 1` is the empty range (continuant 1) and `hi = lo - 2` the
/// length `-1` range (continuant 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexRange {
    lo: i64,
    hi: i64,
}

impl IndexRange {
    /// Returns `None` when `hi < lo - 2`.
    pub fn new(lo: i64, hi: i64) -> Option<Self> {
        (hi >= lo - 2).then_some(IndexRange { lo, hi })
    }

    pub fn empty(lo: i64) -> Self {
        IndexRange { lo, hi: lo - 1 }
    }

    #[inline]
    pub fn lo(&self) -> i64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// Number of terms; `0` for the empty range and `-1` for the degenerate one.
    #[inline]
    pub fn len(&self) -> i64 {
        self.hi - self.lo + 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() <= 0
    }
}

/// The continuant `E[seq[lo], ..., seq[hi]]`, indexing `seq` from zero.
///
/// Nonempty ranges must lie inside `seq`. Degenerate ranges only need
/// `lo >= 0` and `hi < seq.len()`, which admits forms like `E[a_{n+1}, ..., a_n]`.
pub fn continuant(seq: &[u64], range: IndexRange) -> Result<BigInt> {
    let out_of_bounds = || Error::RangeOutOfBounds {
        lo: range.lo,
        hi: range.hi,
        len: seq.len(),
    };
    if range.lo < 0 || range.hi >= seq.len() as i64 {
        return Err(out_of_bounds());
    }
    Ok(continuant_unchecked(seq, range.lo, range.hi))
}

pub(crate) fn continuant_unchecked(seq: &[u64], lo: i64, hi: i64) -> BigInt {
    debug_assert!(hi >= lo - 2);
    // (E[lo..i-2], E[lo..i-1]) starts at (E of length -1, E of length 0).
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for i in lo..=hi {
        let next = &cur * seq[i as usize] + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    if hi == lo - 2 {
        BigInt::zero()
    } else {
        cur
    }
}

/// Fibonacci numbers indexed so that `F_1 = 1`, `F_2 = 2` (hence `F_0 = 1`).
pub fn fibonacci(k: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Partial quotients `a_1, ..., a_n` of a number in `(0, 1)`.
///
/// The canonical form ends in `a_n >= 2`; every such expansion has a
/// companion ending in `..., a_n - 1, 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion {
    quotients: Vec<u64>,
    canonical: bool,
}

impl CfExpansion {
    pub fn from_quotients(quotients: Vec<u64>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::EmptyExpansion);
        }
        if let Some(i) = quotients.iter().position(|&a| a == 0) {
            return Err(Error::ZeroQuotient { index: i + 1 });
        }
        if quotients == [1] {
            return Err(Error::UnitExpansion);
        }
        let canonical = *quotients.last().unwrap() >= 2;
        Ok(CfExpansion {
            quotients,
            canonical,
        })
    }

    /// Canonical expansion by the Euclidean algorithm.
    pub fn expand(f: ReducedFraction) -> Self {
        let (mut num, mut den) = (f.num(), f.den());
        let mut quotients = Vec::new();
        while num != 0 {
            quotients.push(den / num);
            (den, num) = (num, den % num);
        }
        CfExpansion {
            quotients,
            canonical: true,
        }
    }

    /// `a_1, ..., a_n`.
    #[inline]
    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// `n`, the number of partial quotients after the integer part.
    #[inline]
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// `a_0, a_1, ..., a_n` with `a_0 = 0`.
    pub fn with_integer_part(&self) -> Vec<u64> {
        std::iter::once(0)
            .chain(self.quotients.iter().copied())
            .collect()
    }

    /// Switches between the `a_n >= 2` form and the trailing-1 form.
    pub fn toggle_form(&self) -> Self {
        let mut quotients = self.quotients.clone();
        if self.canonical {
            let last = quotients.last_mut().unwrap();
            *last -= 1;
            quotients.push(1);
        } else {
            quotients.pop();
            *quotients.last_mut().unwrap() += 1;
        }
        CfExpansion {
            quotients,
            canonical: !self.canonical,
        }
    }

    /// Exact value, folded from the right.
    pub fn value_exact(&self) -> BigRational {
        let mut x = BigRational::zero();
        for &a in self.quotients.iter().rev() {
            x = (BigRational::from_integer(a.into()) + x).recip();
        }
        x
    }

    pub fn value(&self) -> Result<ReducedFraction> {
        let table = self.convergents();
        let (num, den) = table.value();
        match (num.to_u64(), den.to_u64()) {
            (Some(r), Some(m)) => ReducedFraction::new(r, m),
            _ => Err(Error::Overflow),
        }
    }

    pub fn convergents(&self) -> ConvergentTable {
        ConvergentTable::new(self)
    }

    /// `E[a_lo, ..., a_hi]` with the paper-style subscripts, `a_0 = 0`.
    pub fn continuant(&self, lo: i64, hi: i64) -> Result<BigInt> {
        let range = IndexRange::new(lo, hi).ok_or(Error::RangeOutOfBounds {
            lo,
            hi,
            len: self.len() + 1,
        })?;
        continuant(&self.with_integer_part(), range)
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0;")?;
        for (i, a) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// `p_k` and `q_k` for `k = -2..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    quotients: Vec<u64>,
    p: Vec<BigInt>,
    q: Vec<BigInt>,
}

impl ConvergentTable {
    fn new(e: &CfExpansion) -> Self {
        let quotients = e.with_integer_part();
        let mut p = Vec::with_capacity(quotients.len() + 2);
        let mut q = Vec::with_capacity(quotients.len() + 2);
        p.extend([BigInt::zero(), BigInt::one()]);
        q.extend([BigInt::one(), BigInt::zero()]);
        for (k, &a) in quotients.iter().enumerate() {
            let pk = &p[k + 1] * a + &p[k];
            let qk = &q[k + 1] * a + &q[k];
            p.push(pk);
            q.push(qk);
        }
        ConvergentTable { quotients, p, q }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.quotients.len() - 1
    }

    /// `a_k` for `0 <= k <= n`.
    #[inline]
    pub fn quotient(&self, k: usize) -> u64 {
        self.quotients[k]
    }

    /// Panics unless `-2 <= k <= n`.
    #[inline]
    pub fn p(&self, k: i64) -> &BigInt {
        &self.p[(k + 2) as usize]
    }

    /// Panics unless `-2 <= k <= n`.
    #[inline]
    pub fn q(&self, k: i64) -> &BigInt {
        &self.q[(k + 2) as usize]
    }

    /// `(p_n, q_n)`.
    pub fn value(&self) -> (&BigInt, &BigInt) {
        let n = self.n() as i64;
        (self.p(n), self.q(n))
    }

    /// `alpha q_{i-1} + q_{i-2}` for `alpha = 1..=a_i`; the last one is `q_i`.
    pub fn intermediants(&self, i: usize) -> Result<Vec<BigInt>> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        let i = i as i64;
        let (step, base) = (self.q(i - 1), self.q(i - 2));
        Ok((1..=self.quotient(i as usize))
            .map(|alpha| step * alpha + base)
            .collect())
    }
}
