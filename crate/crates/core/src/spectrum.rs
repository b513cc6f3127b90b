//! Explicit families of fractions whose heights converge to each point of the
//! accumulation set `{0} ∪ {1/k}`, the predicted limit of a family with one
//! growing even-position quotient, and classification of scanned heights
//! against that set.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cf::{continuant_unchecked, CfExpansion};
use crate::decimal::{render_significant, SIGNIFICANT_DIGITS};
use crate::error::{Error, Result};
use crate::fraction::ReducedFraction;
use crate::heights::{cf_height, mod_inverse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `a2 / (1 + a1 a2)` for `a2 = 1, 2, ...`; heights tend to `1/a1`.
    OneOverK { a1: u64 },
    /// `1 / a1` for `a1 = 2, 3, ...`; heights tend to 0.
    Zero,
    /// `r = (a m - c) / b` over the progression `a m ≡ c (mod b)`; heights tend
    /// to `1 / max(b, c)`.
    Quantitative { a: u64, b: u64, c: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    kind: FamilyKind,
    term_count: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, term_count: usize) -> Result<Self> {
        if term_count == 0 {
            return Err(Error::ZeroTermCount);
        }
        match kind {
            FamilyKind::OneOverK { a1: 0 } => {
                return Err(Error::InvalidFamily("a1 must be positive".into()))
            }
            FamilyKind::Quantitative { a, b, c } => {
                if a == 0 || b == 0 || c == 0 {
                    return Err(Error::InvalidFamily("a, b, c must be positive".into()));
                }
                if a > b {
                    return Err(Error::InvalidFamily(format!(
                        "need a <= b, got a={a}, b={b}"
                    )));
                }
                if a.gcd(&b) != 1 {
                    return Err(Error::InvalidFamily(format!(
                        "gcd(a, b) = {} != 1",
                        a.gcd(&b)
                    )));
                }
            }
            _ => {}
        }
        Ok(FamilySpec { kind, term_count })
    }

    #[inline]
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    #[inline]
    pub fn term_count(&self) -> usize {
        self.term_count
    }
}

/// One `(m, r, H(r/m))` triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoint {
    pub m: u64,
    pub r: u64,
    pub h: BigRational,
    /// `h` with twelve significant digits.
    pub h_float: String,
}

impl SpectrumPoint {
    pub fn new(f: ReducedFraction, h: BigRational) -> Self {
        let h_float = render_significant(&h, SIGNIFICANT_DIGITS);
        SpectrumPoint {
            m: f.den(),
            r: f.num(),
            h,
            h_float,
        }
    }

    pub fn fraction(&self) -> ReducedFraction {
        ReducedFraction::new(self.r, self.m).expect("points hold reduced fractions")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPoints {
    pub points: Vec<SpectrumPoint>,
    /// Progression terms dropped because `r` fell outside `(0, m)` or shared a
    /// factor with `m`.
    pub skipped: usize,
}

pub fn family_points(spec: &FamilySpec) -> Result<FamilyPoints> {
    let n = spec.term_count as u64;
    match spec.kind {
        FamilyKind::OneOverK { a1 } => {
            let points = (1..=n)
                .map(|a2| {
                    let f = ReducedFraction::new(a2, 1 + a1 * a2)?;
                    let h = cf_height(f).value;
                    let closed = BigRational::new((1 + a2).into(), (1 + a1 * a2).into());
                    if h != closed {
                        return Err(Error::Mismatch {
                            m: f.den(),
                            r: f.num(),
                            brute: Box::new(closed),
                            cf: Box::new(h),
                        });
                    }
                    Ok(SpectrumPoint::new(f, h))
                })
                .collect::<Result<_>>()?;
            Ok(FamilyPoints { points, skipped: 0 })
        }
        FamilyKind::Zero => {
            let points = (2..=n + 1)
                .map(|a1| {
                    let f = ReducedFraction::new(1, a1)?;
                    Ok(SpectrumPoint::new(f, cf_height(f).value))
                })
                .collect::<Result<_>>()?;
            Ok(FamilyPoints { points, skipped: 0 })
        }
        FamilyKind::Quantitative { a, b, c } => quantitative_points(a, b, c, spec.term_count),
    }
}

fn quantitative_points(a: u64, b: u64, c: u64, term_count: usize) -> Result<FamilyPoints> {
    // m ≡ c a^{-1} (mod b); every m works when b = 1.
    let residue = if b == 1 {
        0
    } else {
        ((c % b) as u128 * mod_inverse(a % b, b)? as u128 % b as u128) as u64
    };
    let mut m = if residue >= 2 { residue } else { residue + b };
    while m < 2 {
        m += b;
    }

    let budget = 100 * term_count + 1000;
    let mut points = Vec::with_capacity(term_count);
    let mut skipped = 0;
    for _ in 0..budget {
        if points.len() == term_count {
            break;
        }
        let am = a as u128 * m as u128;
        let admissible = am > c as u128 && {
            let r = ((am - c as u128) / b as u128) as u64;
            match ReducedFraction::new(r, m) {
                Ok(f) => {
                    points.push(SpectrumPoint::new(f, cf_height(f).value));
                    true
                }
                Err(_) => false,
            }
        };
        if !admissible {
            skipped += 1;
        }
        m = m.checked_add(b).ok_or(Error::Overflow)?;
    }
    if points.is_empty() {
        return Err(Error::NoAdmissiblePoints { a, b, c });
    }
    Ok(FamilyPoints { points, skipped })
}

/// The value the family's heights converge to.
pub fn family_limit(spec: &FamilySpec) -> BigRational {
    match spec.kind {
        FamilyKind::OneOverK { a1 } => BigRational::new(BigInt::one(), a1.into()),
        FamilyKind::Zero => BigRational::zero(),
        FamilyKind::Quantitative { b, c, .. } => BigRational::new(BigInt::one(), b.max(c).into()),
    }
}

/// Limit of `H([0; prefix, A, suffix])` as the quotient `A` at even position grows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitPrediction {
    pub prefix: Vec<u64>,
    pub suffix: Vec<u64>,
    pub predicted: BigRational,
}

impl LimitPrediction {
    /// `[0; prefix, big, suffix]`.
    pub fn realize(&self, big: u64) -> Result<CfExpansion> {
        let quotients = self
            .prefix
            .iter()
            .copied()
            .chain(std::iter::once(big))
            .chain(self.suffix.iter().copied())
            .collect();
        CfExpansion::from_quotients(quotients)
    }
}

/// `min { 1/E[prefix], 1/E[suffix] }`.
pub fn predicted_limit(prefix: &[u64], suffix: &[u64]) -> Result<LimitPrediction> {
    if prefix.len().is_multiple_of(2) {
        return Err(Error::BadPrefix(prefix.len()));
    }
    if suffix.last().is_none_or(|&a| a < 2) {
        return Err(Error::BadSuffix);
    }
    if let Some(i) = prefix.iter().chain(suffix).position(|&a| a == 0) {
        return Err(Error::ZeroQuotient { index: i + 1 });
    }
    let e_prefix = continuant_unchecked(prefix, 0, prefix.len() as i64 - 1);
    let e_suffix = continuant_unchecked(suffix, 0, suffix.len() as i64 - 1);
    let predicted = BigRational::new(BigInt::one(), e_prefix.max(e_suffix));
    Ok(LimitPrediction {
        prefix: prefix.to_vec(),
        suffix: suffix.to_vec(),
        predicted,
    })
}

/// Where each point falls relative to `{1/k : k <= k_max}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub epsilon: BigRational,
    pub k_max: u64,
    /// `k` → number of points with `|H - 1/k| <= epsilon`.
    pub near: BTreeMap<u64, usize>,
    /// Points below `1/k_max + epsilon` and outside every ball.
    pub tail: usize,
    /// Everything else, ordered by `(m, r)`.
    pub strays: Vec<SpectrumPoint>,
}

impl Classification {
    pub fn near_count(&self, k: u64) -> usize {
        self.near.get(&k).copied().unwrap_or(0)
    }

    /// Up to `count` strays, largest `m` first.
    pub fn largest_strays(&self, count: usize) -> impl Iterator<Item = &SpectrumPoint> {
        let mut v: Vec<_> = self.strays.iter().collect();
        v.sort_by(|x, y| y.m.cmp(&x.m).then(x.r.cmp(&y.r)));
        v.into_iter().take(count)
    }

    /// Number of strays with `m >= min_m`.
    pub fn strays_from(&self, min_m: u64) -> usize {
        self.strays.iter().filter(|p| p.m >= min_m).count()
    }
}

/// Requires `0 < epsilon < 1/(2 k_max (k_max + 1))` so the balls are disjoint.
pub fn classify_points(
    points: &[SpectrumPoint],
    epsilon: &BigRational,
    k_max: u64,
) -> Result<Classification> {
    let limit = if k_max == 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), (2 * k_max * (k_max + 1)).into())
    };
    if !epsilon.is_positive() || *epsilon >= limit {
        return Err(Error::EpsilonTooLarge {
            epsilon: Box::new(epsilon.clone()),
            limit: Box::new(limit),
            k_max,
        });
    }
    let centers: Vec<BigRational> = (1..=k_max)
        .map(|k| BigRational::new(BigInt::one(), k.into()))
        .collect();
    let tail_edge = &centers[centers.len() - 1] + epsilon;

    let mut near = BTreeMap::new();
    let mut tail = 0;
    let mut strays = Vec::new();
    for p in points {
        match centers.iter().position(|c| (&p.h - c).abs() <= *epsilon) {
            Some(i) => *near.entry(i as u64 + 1).or_insert(0) += 1,
            None if p.h < tail_edge => tail += 1,
            None => strays.push(p.clone()),
        }
    }
    strays.sort_by_key(|p| (p.m, p.r));
    Ok(Classification {
        epsilon: epsilon.clone(),
        k_max,
        near,
        tail,
        strays,
    })
}
