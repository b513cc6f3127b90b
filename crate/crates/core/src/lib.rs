//! Heights on the finite projective line.
//!
//! For coprime `0 < r < m` the normalized height is
//! `H(r/m) = min { k/m + frac(k r/m) : 1 <= k < m }`. This crate computes it
//! exactly, both by brute force and from the even convergents of the continued
//! fraction of `r/m`, checks the continuant identities behind that formula, and
//! builds the explicit families whose heights accumulate at `0` and at `1/k`.

pub mod cf;
pub mod decimal;
pub mod error;
pub mod fraction;
pub mod heights;
pub mod identities;
pub mod scan;
pub mod spectrum;
pub mod verify;

pub use cf::{continuant, fibonacci, CfExpansion, ConvergentTable, IndexRange};
pub use decimal::{render_significant, SIGNIFICANT_DIGITS};
pub use error::{Error, Result};
pub use fraction::ReducedFraction;
pub use heights::{
    best_multipliers, brute_force_h, cf_height, cf_height_of_expansion, consecutive_bound,
    height_point, intermediant_set, mod_inverse, weak_bound, HeightResult, Method, PointHeight,
    ResidueVector,
};
pub use identities::{check_identities, Identity, IdentityReport};
pub use scan::{scan_points, write_points, write_scan, OutputFormat, ScanConfig, ScanMethod};
pub use spectrum::{
    classify_points, family_limit, family_points, predicted_limit, Classification, FamilyKind,
    FamilyPoints, FamilySpec, LimitPrediction, SpectrumPoint,
};
