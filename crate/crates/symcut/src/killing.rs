//! Metric normalization: squared root lengths under the Killing form and
//! the scale factor linking polytope units to radians.
//!
//! For a compact simple algebra the squared Killing length of a long root
//! follows from pure root combinatorics:
//!
//! ```text
//! (delta, delta) = 4 / (|roots| - |roots orthogonal to delta| + 6)
//! ```
//!
//! The highest restricted root either restricts from a root of the ambient
//! algebra (same length) or from one that folds in half (half the squared
//! length); group manifolds also pick up the factor one half. With the
//! metric scaled so the Ricci curvature is `1 / (2 epsilon)`, lengths
//! computed in `(psi, psi)^-1` units turn into radians via `pi^2 epsilon`.

use crate::roots::{build_datum, RootSystemType};
use crate::{rat, Error, Rat, Result};
use num_traits::Signed;

/// How the highest restricted root sits inside the ambient root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiRelation {
    /// The restricted highest root is itself an ambient root.
    SameLength,
    /// Its square halves: the halved quotient classes and all group
    /// manifolds.
    Halved,
}

/// Squared Killing length of a long root of the given system, computed
/// from the root counts.
pub fn delta_norm(ty: RootSystemType) -> Result<Rat> {
    let datum = build_datum(ty)?;
    let total = 2 * datum.positive_roots.len() as i64;
    let orth = crate::roots::count_orthogonal_to_highest(&datum) as i64;
    Ok(rat(4) / rat(total - orth + 6))
}

/// Squared Killing length of the highest restricted root.
pub fn psi_norm(delta: RootSystemType, relation: PsiRelation) -> Result<Rat> {
    let d = delta_norm(delta)?;
    Ok(match relation {
        PsiRelation::SameLength => d,
        PsiRelation::Halved => d / rat(2),
    })
}

/// Metric scale from a prescribed Ricci curvature: `epsilon = 1 / (2 Ric)`.
pub fn epsilon_from_ricci(ricci: &Rat) -> Result<Rat> {
    if !ricci.is_positive() {
        return Err(Error::NonPositiveRicci(ricci.to_string()));
    }
    Ok(rat(1) / (rat(2) * ricci))
}

/// Squared metric invariants of one quotient, independent of the metric
/// scale: `i(M)^2 = pi^2 * epsilon * i_sq_coeff` and likewise for the
/// diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricResult {
    pub i_sq_coeff: Rat,
    /// `None` when the rank exceeds the enumeration cap and no closed form
    /// applies.
    pub d_sq_coeff: Option<Rat>,
    pub d_known: bool,
    /// Set when the diameter comes from enumeration alone, without a
    /// closed form backing it.
    pub beyond_tables: bool,
}
