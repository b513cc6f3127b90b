//! Inputs shared by the benchmarks.

use cfheight::ReducedFraction;

/// The unit `r` nearest `m / phi`, whose expansion is close to the longest
/// possible for denominator `m`.
pub fn golden_fraction(m: u64) -> ReducedFraction {
    let target = (m as f64 / 1.618_033_988_749_895).round() as u64;
    (0..m)
        .flat_map(|d| [target.saturating_sub(d), target + d])
        .find_map(|r| ReducedFraction::new(r, m).ok())
        .expect("1/m is always reduced")
}
