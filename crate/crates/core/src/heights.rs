//! Heights of points in `(Z_m^*)^d` and the normalized height `H(r/m)`.
//!
//! `H(r/m) = min { k/m + frac(k r / m) : 1 <= k < m }` is computed two ways:
//! by scanning every multiplier, and from the even convergents of `r/m`,
//! `H(r/m) = min_{0 <= k < n/2} q_{2k} (r + 1)/m - p_{2k}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::cf::{CfExpansion, ConvergentTable};
use crate::error::{Error, Result};
use crate::fraction::ReducedFraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    CfFormula,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightResult {
    pub value: BigRational,
    /// A multiplier `k` with `k/m + frac(k r/m) = value`.
    pub witness_k: u64,
    pub method: Method,
}

/// A point of `(Z_m^*)^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueVector {
    modulus: u64,
    coords: Vec<u64>,
}

impl ResidueVector {
    pub fn new(modulus: u64, coords: Vec<u64>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        for &c in &coords {
            if c == 0 || c >= modulus || c.gcd(&modulus) != 1 {
                return Err(Error::NotAUnit {
                    coord: c,
                    m: modulus,
                });
            }
        }
        Ok(ResidueVector { modulus, coords })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointHeight {
    pub h: u128,
    pub witness_k: u64,
}

/// `h_m(v) = min_{1 <= k < m} sum_i (k v_i mod m)`, with the least minimizing `k`.
pub fn height_point(v: &ResidueVector) -> PointHeight {
    let m = v.modulus as u128;
    let mut best = PointHeight {
        h: u128::MAX,
        witness_k: 0,
    };
    for k in 1..v.modulus {
        let h: u128 = v.coords.iter().map(|&c| (k as u128 * c as u128) % m).sum();
        if h < best.h {
            best = PointHeight { h, witness_k: k };
        }
    }
    best
}

/// Inverse of `x` modulo `m`, in `[1, m - 1]`.
pub fn mod_inverse(x: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let egcd = (x as i128).extended_gcd(&(m as i128));
    if egcd.gcd != 1 {
        return Err(Error::NotInvertible { x, m });
    }
    Ok(egcd.x.rem_euclid(m as i128) as u64)
}

/// `H(f)` by scanning every `k = 1..m-1`; reports the least minimizing `k`.
pub fn brute_force_h(f: ReducedFraction) -> HeightResult {
    let (r, m) = (f.num() as u128, f.den() as u128);
    let mut best = (u128::MAX, 0u64);
    for k in 1..f.den() {
        let rem = (k as u128 * r) % m;
        assert_ne!(rem, 0, "k r = 0 mod m with k < m and gcd(r, m) = 1");
        let v = k as u128 + rem;
        if v < best.0 {
            best = (v, k);
        }
    }
    HeightResult {
        value: BigRational::new(BigInt::from(best.0), BigInt::from(f.den())),
        witness_k: best.1,
        method: Method::BruteForce,
    }
}

/// `H(f)` from the canonical expansion's even convergents.
pub fn cf_height(f: ReducedFraction) -> HeightResult {
    let table = CfExpansion::expand(f).convergents();
    height_from_table(f, &table)
}

/// The convergent formula applied to any expansion, canonical or not.
pub fn cf_height_of_expansion(e: &CfExpansion) -> Result<HeightResult> {
    let f = e.value()?;
    Ok(height_from_table(f, &e.convergents()))
}

fn height_from_table(f: ReducedFraction, t: &ConvergentTable) -> HeightResult {
    let (r1, m) = (BigInt::from(f.num()) + 1, BigInt::from(f.den()));
    let n = t.n() as i64;
    // m * (q_{2k} (r+1)/m - p_{2k}) for each even index 2k < n; the least k wins ties.
    let (scaled, k) = (0i64..)
        .take_while(|k| 2 * k < n)
        .map(|k| -> (BigInt, i64) { (t.q(2 * k) * &r1 - t.p(2 * k) * &m, k) })
        .min()
        .expect("n >= 1 admits k = 0");
    HeightResult {
        value: BigRational::new(scaled, m),
        witness_k: t.q(2 * k).to_u64().expect("q_{2k} <= m"),
        method: Method::CfFormula,
    }
}

/// Multipliers `l` whose value `l/m + frac(l r/m)` strictly beats every smaller `k`.
pub fn best_multipliers(f: ReducedFraction) -> Vec<u64> {
    let (r, m) = (f.num() as u128, f.den() as u128);
    let mut best = u128::MAX;
    let mut out = Vec::new();
    for k in 1..f.den() {
        let v = k as u128 + (k as u128 * r) % m;
        if v < best {
            best = v;
            out.push(k);
        }
    }
    out
}

/// `{ alpha q_{2i-1} + q_{2i-2} : 0 <= alpha <= a_{2i}, 0 <= 2i <= n }`.
pub fn intermediant_set(f: ReducedFraction) -> BTreeSet<u64> {
    let t = CfExpansion::expand(f).convergents();
    let n = t.n() as i64;
    let mut set = BTreeSet::new();
    for i in (0..).take_while(|i| 2 * i <= n) {
        let (step, base) = (t.q(2 * i - 1), t.q(2 * i - 2));
        for alpha in 0..=t.quotient(2 * i as usize) {
            let v = step * alpha + base;
            set.insert(v.to_u64().expect("intermediants are at most m"));
        }
    }
    set
}

fn check_bound_index(e: &CfExpansion, k: usize) -> Result<()> {
    if !e.is_canonical() {
        return Err(Error::NonCanonical);
    }
    if k == 0 || 2 * k >= e.len() {
        return Err(Error::BoundIndex { k, n: e.len() });
    }
    Ok(())
}

/// `q_{2k}/m + 1/(2 q_{2k})` for `0 < k < n/2`, in the form the convergent-gap
/// argument states it.
///
/// This is not an upper bound on `H` in general: `7/11 = [0;1,1,1,3]` at
/// `k = 1` has `H = 5/11 > 19/44`. See [`consecutive_bound`] for the bound that
/// does hold.
pub fn weak_bound(f: ReducedFraction, k: usize) -> Result<BigRational> {
    weak_bound_of_expansion(&CfExpansion::expand(f), k)
}

pub fn weak_bound_of_expansion(e: &CfExpansion, k: usize) -> Result<BigRational> {
    check_bound_index(e, k)?;
    let t = e.convergents();
    let q = t.q(2 * k as i64);
    let (_, m) = t.value();
    Ok(BigRational::new(q.clone(), m.clone()) + BigRational::new(BigInt::one(), q * 2u32))
}

/// `q_{2k}/m + 1/(q_{2k} + q_{2k-1})` for `0 < k < n/2`; always at least `H(f)`.
pub fn consecutive_bound(f: ReducedFraction, k: usize) -> Result<BigRational> {
    let e = CfExpansion::expand(f);
    check_bound_index(&e, k)?;
    let t = e.convergents();
    let (q, q_prev) = (t.q(2 * k as i64), t.q(2 * k as i64 - 1));
    Ok(BigRational::new(q.clone(), BigInt::from(f.den()))
        + BigRational::new(BigInt::one(), q + q_prev))
}
