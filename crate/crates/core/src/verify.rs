//! Verification suites behind `cfheight verify`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cf::CfExpansion;
use crate::fraction::ReducedFraction;
use crate::heights::{
    best_multipliers, brute_force_h, cf_height, cf_height_of_expansion, consecutive_bound,
    height_point, intermediant_set, mod_inverse, weak_bound, ResidueVector,
};
use crate::identities::{check_identities, Identity};
use crate::spectrum::{family_limit, family_points, predicted_limit, FamilyKind, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Oracle,
    Identities,
    Bounds,
    Reduction,
    Spectrum,
}

impl Suite {
    pub fn default_max_den(self) -> u64 {
        match self {
            Suite::Oracle => 500,
            Suite::Identities => 200,
            Suite::Bounds => 300,
            Suite::Reduction => 100,
            Suite::Spectrum => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "oracle" => Ok(Suite::Oracle),
            "identities" => Ok(Suite::Identities),
            "bounds" => Ok(Suite::Bounds),
            "reduction" => Ok(Suite::Reduction),
            "spectrum" => Ok(Suite::Spectrum),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Oracle => "oracle",
            Suite::Identities => "identities",
            Suite::Bounds => "bounds",
            Suite::Reduction => "reduction",
            Suite::Spectrum => "spectrum",
        })
    }
}

/// One named property with its case and violation counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub violations: u64,
    /// The first violation seen.
    pub example: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            violations: 0,
            example: None,
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.example.is_none() {
                self.example = Some(describe());
            }
        }
    }

    pub fn merge(&mut self, other: Check) {
        self.cases += other.cases;
        self.violations += other.violations;
        if self.example.is_none() {
            self.example = other.example;
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<34} cases={:<9} violations={}",
            self.name, self.cases, self.violations
        )?;
        if let Some(ex) = &self.example {
            write!(f, "  first: {ex}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_den: Option<u64>,
    pub seed: u64,
    pub random_count: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_den: None,
            seed: 42,
            random_count: 10_000,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let max_den = opts.max_den.unwrap_or(suite.default_max_den());
    let checks = match suite {
        Suite::Oracle => oracle_checks(max_den),
        Suite::Identities => identity_checks(opts.seed, opts.random_count, max_den),
        Suite::Bounds => bound_checks(max_den),
        Suite::Reduction => reduction_checks(max_den),
        Suite::Spectrum => spectrum_checks(),
    };
    SuiteReport { suite, checks }
}

/// Runs `per_fraction` on every reduced fraction with `2 <= m <= max_den`,
/// in parallel by denominator, and merges the per-name checks in order.
fn over_fractions<F>(max_den: u64, names: &[&str], per_fraction: F) -> Vec<Check>
where
    F: Fn(ReducedFraction, &mut [Check]) + Sync,
{
    let fresh = || names.iter().map(|n| Check::new(*n)).collect::<Vec<_>>();
    let partials: Vec<Vec<Check>> = (2..=max_den)
        .into_par_iter()
        .map(|m| {
            let mut checks = fresh();
            for f in ReducedFraction::with_denominator(m) {
                per_fraction(f, &mut checks);
            }
            checks
        })
        .collect();
    let mut total = fresh();
    for part in partials {
        for (t, p) in total.iter_mut().zip(part) {
            t.merge(p);
        }
    }
    total
}

/// Convergent formula against the brute-force minimum, on both expansion forms.
pub fn oracle_checks(max_den: u64) -> Vec<Check> {
    over_fractions(
        max_den,
        &["cf-equals-brute-force", "trailing-one-form"],
        |f, c| {
            let brute = brute_force_h(f).value;
            let cf = cf_height(f).value;
            c[0].record(cf == brute, || format!("{f}: cf {cf} brute {brute}"));
            let alt = CfExpansion::expand(f).toggle_form();
            match cf_height_of_expansion(&alt) {
                Ok(h) => c[1].record(h.value == brute, || {
                    format!("{alt}: {} vs {brute}", h.value)
                }),
                Err(e) => c[1].record(false, || format!("{alt}: {e}")),
            }
        },
    )
}

/// Seeded expansions with `1 <= n <= 12` and `1 <= a_i <= 50`, never `[0;1]`.
pub fn random_expansions(seed: u64, count: usize) -> Vec<CfExpansion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(1..=12);
        let quotients: Vec<u64> = (0..n).map(|_| rng.random_range(1..=50)).collect();
        if let Ok(e) = CfExpansion::from_quotients(quotients) {
            out.push(e);
        }
    }
    out
}

fn tally_identities<'a>(expansions: impl ParallelIterator<Item = &'a CfExpansion>) -> Vec<Check> {
    let fresh = || {
        Identity::ALL
            .iter()
            .map(|i| Check::new(i.name()))
            .collect::<Vec<_>>()
    };
    let reduce = |mut a: Vec<Check>, b: Vec<Check>| {
        for (x, y) in a.iter_mut().zip(b) {
            x.merge(y);
        }
        a
    };
    expansions
        .map(|e| {
            let report = check_identities(e);
            let mut checks = fresh();
            for (check, outcome) in checks.iter_mut().zip(&report.outcomes) {
                check.cases = outcome.cases as u64;
                check.violations = outcome.failures.len() as u64;
                check.example = outcome
                    .failures
                    .first()
                    .map(|idx| format!("{e} at indices {idx:?}"));
            }
            checks
        })
        .reduce(fresh, reduce)
}

/// Every identity on `random_count` seeded expansions and on both forms of
/// every fraction with `m <= max_den`.
pub fn identity_checks(seed: u64, random_count: usize, max_den: u64) -> Vec<Check> {
    let random = random_expansions(seed, random_count);
    let exhaustive: Vec<CfExpansion> = (2..=max_den)
        .flat_map(ReducedFraction::with_denominator)
        .flat_map(|f| {
            let e = CfExpansion::expand(f);
            let alt = e.toggle_form();
            [e, alt]
        })
        .collect();

    let mut checks = Vec::new();
    for (label, set) in [("random", &random), ("exhaustive", &exhaustive)] {
        for mut c in tally_identities(set.par_iter()) {
            c.name = format!("{label}/{}", c.name);
            checks.push(c);
        }
    }
    let mut roundtrip = Check::new("exhaustive/value-roundtrip");
    for f in (2..=max_den).flat_map(ReducedFraction::with_denominator) {
        let e = CfExpansion::expand(f);
        let ok = e.value().ok() == Some(f) && e.toggle_form().value().ok() == Some(f);
        roundtrip.record(ok, || format!("{f} -> {e}"));
    }
    checks.push(roundtrip);
    checks
}

/// Best-multiplier containment, the stated and the consecutive-convergent
/// bounds, and the range of `H`.
pub fn bound_checks(max_den: u64) -> Vec<Check> {
    let names = [
        "best-multipliers-in-intermediant-set",
        "weak-bound",
        "consecutive-bound",
        "height-range",
        "first-term-at-most-one",
    ];
    let mut checks = over_fractions(max_den, &names, |f, c| {
        let best = best_multipliers(f);
        let set = intermediant_set(f);
        c[0].record(best[0] == 1 && best.iter().all(|l| set.contains(l)), || {
            format!("{f}: {best:?} not in {set:?}")
        });

        let h = cf_height(f).value;
        let n = CfExpansion::expand(f).len();
        for k in (1..).take_while(|k| 2 * k < n) {
            let weak = weak_bound(f, k).expect("admissible k");
            c[1].record(h <= weak, || format!("{f}, k={k}: H={h} > {weak}"));
            let strong = consecutive_bound(f, k).expect("admissible k");
            c[2].record(h <= strong, || format!("{f}, k={k}: H={h} > {strong}"));
        }

        let r_over_m = f.to_rational();
        let one = BigRational::one();
        c[3].record(h.is_positive() && h <= one && h < &one + &r_over_m, || {
            format!("{f}: H={h}")
        });
        let first = BigRational::new((f.num() + 1).into(), f.den().into());
        c[4].record(first <= one && h <= first, || {
            format!("{f}: (r+1)/m={first}, H={h}")
        });
    });

    let mut tight = Check::new("weak-bound-equality-at-5/8");
    let f = ReducedFraction::new(5, 8).expect("5/8");
    let ok = weak_bound(f, 1).ok() == Some(cf_height(f).value);
    tight.record(ok, || "weak_bound(5/8, 1) != H(5/8)".into());
    checks.push(tight);
    checks
}

/// `h_m(<r1, r2>) = h_m(<1, r1^{-1} r2>)` and `m H(r/m) = h_m(<1, r>)`.
pub fn reduction_checks(max_den: u64) -> Vec<Check> {
    over_fractions(
        max_den,
        &["reduction-law", "scaled-height-consistency"],
        |f, c| {
            let m = f.den();
            let r1 = f.num();
            // f ranges over the units r1 of Z_m; pair each with every unit r2.
            let inv = mod_inverse(r1, m).expect("r1 is a unit");
            for r2 in (1..m).filter(|r2| num_integer::gcd(*r2, m) == 1) {
                let lhs = height_point(&ResidueVector::new(m, vec![r1, r2]).expect("units")).h;
                let reduced = (inv as u128 * r2 as u128 % m as u128) as u64;
                let rhs = height_point(&ResidueVector::new(m, vec![1, reduced]).expect("units")).h;
                c[0].record(lhs == rhs, || format!("m={m}, <{r1},{r2}>: {lhs} vs {rhs}"));
            }
            let h = height_point(&ResidueVector::new(m, vec![1, r1]).expect("units")).h;
            let scaled = brute_force_h(f).value * BigInt::from(m);
            c[1].record(scaled == BigRational::from_integer(h.into()), || {
                format!("{f}: m H = {scaled}, h = {h}")
            });
        },
    )
}

/// `1/10^3`.
fn milli() -> BigRational {
    BigRational::new(BigInt::one(), 1000.into())
}

/// Exhaustive prefix/suffix grid: entries in `1..=5`, prefix length 1 or 3,
/// suffix length 1 or 2 ending in at least 2, middle quotient `10^4`.
pub fn predicted_limit_checks() -> Vec<Check> {
    let mut close = Check::new("predicted-limit-within-1e-3");
    let mut unit = Check::new("predicted-limit-unit-numerator");
    let words = |len: usize| -> Vec<Vec<u64>> {
        (0..5u64.pow(len as u32))
            .map(|mut code| {
                (0..len)
                    .map(|_| {
                        let d = code % 5 + 1;
                        code /= 5;
                        d
                    })
                    .collect()
            })
            .collect()
    };
    for prefix in [words(1), words(3)].concat() {
        for suffix in [words(1), words(2)].concat() {
            if *suffix.last().unwrap() < 2 {
                continue;
            }
            let pred = predicted_limit(&prefix, &suffix).expect("valid prefix/suffix");
            unit.record(pred.predicted.numer().is_one(), || {
                format!("{prefix:?}|{suffix:?}: {}", pred.predicted)
            });
            let e = pred.realize(10_000).expect("positive quotients");
            let h = cf_height_of_expansion(&e).expect("fits in u64").value;
            let err = (&h - &pred.predicted).abs();
            close.record(err <= milli(), || {
                format!("{e}: H={h}, predicted {}", pred.predicted)
            });
        }
    }
    vec![close, unit]
}

pub fn spectrum_checks() -> Vec<Check> {
    let mut checks = Vec::new();

    let mut exact = Check::new("one-over-k-closed-form");
    let mut gap = Check::new("one-over-k-gap");
    for a1 in 1..=10u64 {
        let spec = FamilySpec::new(FamilyKind::OneOverK { a1 }, 200).expect("valid");
        match family_points(&spec) {
            Ok(fam) => {
                for (p, a2) in fam.points.iter().zip(1u64..) {
                    let closed = BigRational::new((1 + a2).into(), (1 + a1 * a2).into());
                    exact.record(p.h == closed && p.r == a2 && p.m == 1 + a1 * a2, || {
                        format!("a1={a1}, a2={a2}: {}", p.h)
                    });
                    let expected = BigRational::new((a1 - 1).into(), (a1 * (1 + a1 * a2)).into());
                    let limit = BigRational::new(BigInt::one(), a1.into());
                    gap.record((&p.h - limit).abs() == expected, || {
                        format!("a1={a1}, a2={a2}: |H - 1/a1| != {expected}")
                    });
                }
            }
            Err(e) => exact.record(false, || format!("a1={a1}: {e}")),
        }
    }
    checks.extend([exact, gap]);

    let mut zero = Check::new("zero-family");
    let spec = FamilySpec::new(FamilyKind::Zero, 200).expect("valid");
    for p in family_points(&spec).map(|f| f.points).unwrap_or_default() {
        zero.record(
            p.r == 1 && p.h == BigRational::new(2.into(), p.m.into()),
            || format!("1/{}: {}", p.m, p.h),
        );
    }
    if zero.cases == 0 {
        zero.record(false, || "no points".into());
    }
    checks.push(zero);

    let mut quant = Check::new("quantitative-1-2-1-at-10001");
    let spec = FamilySpec::new(FamilyKind::Quantitative { a: 1, b: 2, c: 1 }, 5000).expect("valid");
    let want = BigRational::new(5001.into(), 10001.into());
    match family_points(&spec) {
        Ok(fam) => {
            let hit = fam.points.iter().find(|p| p.m == 10001);
            let ok = hit.is_some_and(|p| {
                p.r == 5000 && p.h == want && (&p.h - family_limit(&spec)).abs() <= milli()
            });
            quant.record(ok, || format!("m=10001 point: {hit:?}"));
        }
        Err(e) => quant.record(false, || e.to_string()),
    }
    checks.push(quant);

    let mut member = Check::new("quantitative-membership");
    let mut achieve = Check::new("limit-achievement");
    let specs = (1..=10).map(|a1| FamilyKind::OneOverK { a1 }).chain(
        [
            (1, 2, 1),
            (1, 3, 1),
            (1, 2, 3),
            (2, 3, 1),
            (1, 1, 1),
            (1, 1, 3),
            (2, 5, 3),
            (3, 4, 5),
            (1, 4, 2),
        ]
        .map(|(a, b, c)| FamilyKind::Quantitative { a, b, c }),
    );
    for kind in specs {
        let term_count = 100;
        let spec = FamilySpec::new(kind, term_count).expect("valid");
        let fam = match family_points(&spec) {
            Ok(fam) => fam,
            Err(e) => {
                achieve.record(false, || format!("{kind:?}: {e}"));
                continue;
            }
        };
        if let FamilyKind::Quantitative { a, b, c } = kind {
            for p in &fam.points {
                let ok = a as u128 * p.m as u128 == b as u128 * p.r as u128 + c as u128
                    && num_integer::gcd(p.r, p.m) == 1;
                member.record(ok, || format!("{kind:?}: ({}, {})", p.m, p.r));
            }
        }
        let last = fam.points.last().expect("nonempty");
        let limit = family_limit(&spec);
        let tol = BigRational::new(10.into(), (term_count as u64).into());
        achieve.record((&last.h - &limit).abs() <= tol, || {
            format!("{kind:?}: last H={} limit {limit}", last.h)
        });
    }
    checks.extend([member, achieve]);

    checks.extend(predicted_limit_checks());
    checks
}
