//! Exact evaluation of the continuant identities over every admissible index
//! choice of one expansion.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cf::{continuant_unchecked, fibonacci, CfExpansion, ConvergentTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1)`, `1 <= k <= n`.
    Determinant,
    /// `q_k = E[a_1..a_k]` and `p_k = E[a_0..a_k]`, `-1 <= k <= n`.
    ContinuantForm,
    /// `q_l = q_k E[a_{k+1}..a_l] + q_{k-1} E[a_{k+2}..a_l]`, `0 <= k <= l <= n`.
    ContinuantSplit,
    /// `p_n E[a_s..a_t] - p_t E[a_s..a_n] = (-1)^(t-s+1) E[a_0..a_{s-2}] E[a_{t+2}..a_n]`,
    /// `0 < s < t < n`.
    CrossProduct,
    /// `x = [0; a_1, .., a_{2k} + 1]` gives `q_{2k} x - p_{2k} = 1 / (q_{2k} + q_{2k-1})`.
    ConsecutiveConvergent,
    /// `x = [0; a_1, .., a_{2k}, 2]` gives `q_{2k} x - p_{2k} = 1 / (2 q_{2k} + q_{2k-1})`.
    ConsecutiveConvergentTwoTail,
    /// `q_{2k} p_n - p_{2k} q_n = E[a_{2k+2}..a_n]`, `0 <= 2k <= n`.
    EvenConvergentGap,
    /// `E[a_s..a_t] = a_l E[a_s..a_{l-1}] E[a_{l+1}..a_t] + E[a_s..a_{l-2}] E[a_{l+1}..a_t]
    /// + E[a_s..a_{l-1}] E[a_{l+2}..a_t]`, `0 <= s <= l <= t <= n`.
    ThreeTermSplit,
    /// `q_k >= F_k`, `k >= 1`.
    FibonacciLower,
    /// `q_l > q_k F_{l-k}`, `1 <= k < l <= n`.
    FibonacciRatio,
    /// `q_l > a_l q_k`, `1 <= k < l <= n`.
    QuotientRatio,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::Determinant,
        Identity::ContinuantForm,
        Identity::ContinuantSplit,
        Identity::CrossProduct,
        Identity::ConsecutiveConvergent,
        Identity::ConsecutiveConvergentTwoTail,
        Identity::EvenConvergentGap,
        Identity::ThreeTermSplit,
        Identity::FibonacciLower,
        Identity::FibonacciRatio,
        Identity::QuotientRatio,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Determinant => "determinant",
            Identity::ContinuantForm => "continuant-form",
            Identity::ContinuantSplit => "continuant-split",
            Identity::CrossProduct => "cross-product",
            Identity::ConsecutiveConvergent => "consecutive-convergent",
            Identity::ConsecutiveConvergentTwoTail => "consecutive-convergent-two-tail",
            Identity::EvenConvergentGap => "even-convergent-gap",
            Identity::ThreeTermSplit => "three-term-split",
            Identity::FibonacciLower => "fibonacci-lower",
            Identity::FibonacciRatio => "fibonacci-ratio",
            Identity::QuotientRatio => "quotient-ratio",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub identity: Identity,
    /// Index tuples evaluated.
    pub cases: usize,
    /// Index tuples where the identity failed.
    pub failures: Vec<Vec<i64>>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }

    pub fn outcome(&self, identity: Identity) -> &IdentityOutcome {
        self.outcomes
            .iter()
            .find(|o| o.identity == identity)
            .expect("every identity is evaluated")
    }
}

/// All continuants `E[a_lo..a_hi]` of `a_0..a_n`, for `0 <= lo <= n + 2` and
/// `lo - 2 <= hi <= n`.
struct Continuants {
    n: i64,
    rows: Vec<Vec<BigInt>>,
}

impl Continuants {
    fn new(seq: &[u64]) -> Self {
        let n = seq.len() as i64 - 1;
        let rows = (0..=n + 2)
            .map(|lo| {
                let mut row = vec![BigInt::zero(), BigInt::one()];
                for hi in lo..=n {
                    let len = row.len();
                    let next = &row[len - 1] * seq[hi as usize] + &row[len - 2];
                    row.push(next);
                }
                // row[0] sits at hi = lo - 2; for lo = n + 2 only that entry is in range.
                row.truncate((n - lo + 3) as usize);
                row
            })
            .collect();
        Continuants { n, rows }
    }

    fn get(&self, lo: i64, hi: i64) -> &BigInt {
        debug_assert!(lo >= 0 && lo <= self.n + 2 && hi >= lo - 2 && hi <= self.n);
        &self.rows[lo as usize][(hi - lo + 2) as usize]
    }
}

fn sign(exp: i64) -> BigInt {
    if exp.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn fold(quotients: impl DoubleEndedIterator<Item = u64>) -> BigRational {
    let mut x = BigRational::zero();
    for a in quotients.rev() {
        x = (BigRational::from_integer(a.into()) + x).recip();
    }
    x
}

struct Recorder {
    identity: Identity,
    cases: usize,
    failures: Vec<Vec<i64>>,
}

impl Recorder {
    fn new(identity: Identity) -> Self {
        Recorder {
            identity,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, indices: &[i64]) {
        self.cases += 1;
        if !ok {
            self.failures.push(indices.to_vec());
        }
    }

    fn finish(self) -> IdentityOutcome {
        IdentityOutcome {
            identity: self.identity,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

/// Evaluates every [`Identity`] on `e` over all admissible indices.
pub fn check_identities(e: &CfExpansion) -> IdentityReport {
    let t = e.convergents();
    let seq = e.with_integer_part();
    let cont = Continuants::new(&seq);
    let n = e.len() as i64;
    let a = |k: i64| seq[k as usize];

    let mut outcomes = Vec::with_capacity(Identity::ALL.len());

    let mut rec = Recorder::new(Identity::Determinant);
    for k in 1..=n {
        let lhs = t.p(k) * t.q(k - 1) - t.p(k - 1) * t.q(k);
        rec.record(lhs == sign(k - 1), &[k]);
    }
    outcomes.push(rec.finish());

    // Independent of the cached matrix: recompute each continuant from scratch.
    let mut rec = Recorder::new(Identity::ContinuantForm);
    for k in -1..=n {
        let ok = *t.q(k) == continuant_unchecked(&seq, 1, k)
            && *t.p(k) == continuant_unchecked(&seq, 0, k);
        rec.record(ok, &[k]);
    }
    outcomes.push(rec.finish());

    let mut rec = Recorder::new(Identity::ContinuantSplit);
    for l in 0..=n {
        for k in 0..=l {
            let rhs = t.q(k) * cont.get(k + 1, l) + t.q(k - 1) * cont.get(k + 2, l);
            rec.record(*t.q(l) == rhs, &[k, l]);
        }
    }
    outcomes.push(rec.finish());

    let mut rec = Recorder::new(Identity::CrossProduct);
    for s in 1..n {
        for tt in s + 1..n {
            let lhs = t.p(n) * cont.get(s, tt) - t.p(tt) * cont.get(s, n);
            let rhs = sign(tt - s + 1) * cont.get(0, s - 2) * cont.get(tt + 2, n);
            rec.record(lhs == rhs, &[s, tt]);
        }
    }
    outcomes.push(rec.finish());

    let mut rec = Recorder::new(Identity::ConsecutiveConvergent);
    let mut rec_two = Recorder::new(Identity::ConsecutiveConvergentTwoTail);
    for k in (1..).take_while(|k| 2 * k <= n) {
        let (q, q_prev, p) = (t.q(2 * k), t.q(2 * k - 1), t.p(2 * k));
        let bumped = (1..=2 * k).map(|i| if i == 2 * k { a(i) + 1 } else { a(i) });
        let x = fold(bumped);
        let gap = BigRational::from_integer(q.clone()) * x - BigRational::from_integer(p.clone());
        rec.record(gap == BigRational::new(BigInt::one(), q + q_prev), &[k]);

        let two_tail = (1..=2 * k).map(a).chain(std::iter::once(2));
        let x = fold(two_tail);
        let gap = BigRational::from_integer(q.clone()) * x - BigRational::from_integer(p.clone());
        rec_two.record(
            gap == BigRational::new(BigInt::one(), q * 2u32 + q_prev),
            &[k],
        );
    }
    outcomes.push(rec.finish());
    outcomes.push(rec_two.finish());

    let mut rec = Recorder::new(Identity::EvenConvergentGap);
    for k in (0..).take_while(|k| 2 * k <= n) {
        let lhs = t.q(2 * k) * t.p(n) - t.p(2 * k) * t.q(n);
        rec.record(lhs == *cont.get(2 * k + 2, n), &[k]);
    }
    outcomes.push(rec.finish());

    let mut rec = Recorder::new(Identity::ThreeTermSplit);
    for s in 0..=n {
        for tt in s..=n {
            for l in s..=tt {
                let rhs = cont.get(s, l - 1) * a(l) * cont.get(l + 1, tt)
                    + cont.get(s, l - 2) * cont.get(l + 1, tt)
                    + cont.get(s, l - 1) * cont.get(l + 2, tt);
                rec.record(*cont.get(s, tt) == rhs, &[s, l, tt]);
            }
        }
    }
    outcomes.push(rec.finish());

    outcomes.extend(growth_checks(&t, n));

    IdentityReport { outcomes }
}

fn growth_checks(t: &ConvergentTable, n: i64) -> [IdentityOutcome; 3] {
    let fib: Vec<BigInt> = (0..=n as usize).map(fibonacci).collect();
    let mut lower = Recorder::new(Identity::FibonacciLower);
    let mut ratio = Recorder::new(Identity::FibonacciRatio);
    let mut quot = Recorder::new(Identity::QuotientRatio);
    for k in 1..=n {
        lower.record(*t.q(k) >= fib[k as usize], &[k]);
        for l in k + 1..=n {
            ratio.record(*t.q(l) > t.q(k) * &fib[(l - k) as usize], &[k, l]);
            quot.record(*t.q(l) > t.q(k) * t.quotient(l as usize), &[k, l]);
        }
    }
    [lower.finish(), ratio.finish(), quot.finish()]
}
