//! Neutrosophic entropy as a similarity between the distances to the two
//! crisp prototypes.
//!
//! A triple is mapped to `V = (mu - nu, mu + nu - 1, omega)` and compared in
//! L1 against `V_T = (1, 0, 0)` (crisp true) and `V_F = (-1, 0, 0)` (crisp
//! false). Two similarity measures over the pair of distances give the two
//! entropy variants:
//!
//! | Variant | Similarity | Closed form |
//! |---------|------------|-------------|
//! | [`Czekanowski`](EntropyVariant::Czekanowski) | `1 - |dT - dF| / (dT + dF)` | `1 - |mu-nu| / (1 + |mu+nu-1| + omega)` |
//! | [`Ruzicka`](EntropyVariant::Ruzicka) | `1 - |dT - dF| / max(dT, dF)` | `(1 - |mu-nu| + |mu+nu-1| + omega) / (1 + |mu-nu| + |mu+nu-1| + omega)` |
//!
//! The closed form is the public value; the similarity path is kept
//! alongside it as a cross-check. For the constrained information kinds the
//! entropy collapses to classical formulas (Kaufmann, Kosko, Szmidt-Kacprzyk
//! and their bifuzzy/paraconsistent relatives), exposed through
//! [`entropy_reduced`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::triple::{InformationKind, NeutrosophicTriple, Tolerance};

/// Agreement required between the similarity path and the closed form.
pub const PATH_AGREEMENT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntropyVariant {
    Czekanowski,
    Ruzicka,
}

impl EntropyVariant {
    pub const ALL: [EntropyVariant; 2] = [EntropyVariant::Czekanowski, EntropyVariant::Ruzicka];

    /// Single-letter tag used in column names and CLI flags.
    pub fn tag(self) -> &'static str {
        match self {
            EntropyVariant::Czekanowski => "c",
            EntropyVariant::Ruzicka => "r",
        }
    }
}

impl fmt::Display for EntropyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntropyVariant::Czekanowski => f.write_str("czekanowski"),
            EntropyVariant::Ruzicka => f.write_str("ruzicka"),
        }
    }
}

impl FromStr for EntropyVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "c" | "czekanowski" => Ok(EntropyVariant::Czekanowski),
            "r" | "ruzicka" => Ok(EntropyVariant::Ruzicka),
            _ => Err(format!("unknown entropy variant '{s}' (expected c or r)")),
        }
    }
}

/// Distances to the crisp prototypes, their similarity, and the entropy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyBreakdown {
    pub d_true: f64,
    pub d_false: f64,
    pub similarity: f64,
    pub entropy: f64,
}

/// L1 distances from `(mu - nu, mu + nu - 1, omega)` to crisp true and
/// crisp false.
pub fn distances(t: &NeutrosophicTriple) -> (f64, f64) {
    let net = t.mu() - t.nu();
    let excess = (t.mu() + t.nu() - 1.0).abs();
    let d_true = (net - 1.0).abs() + excess + t.omega();
    let d_false = (net + 1.0).abs() + excess + t.omega();
    (d_true, d_false)
}

/// Similarity of the two distances under the given measure.
///
/// On the cube `dT + dF >= 2` and `max(dT, dF) >= 1`, so neither denominator
/// vanishes.
pub fn similarity(d_true: f64, d_false: f64, variant: EntropyVariant) -> f64 {
    let gap = (d_true - d_false).abs();
    match variant {
        EntropyVariant::Czekanowski => 1.0 - gap / (d_true + d_false),
        EntropyVariant::Ruzicka => 1.0 - gap / d_true.max(d_false),
    }
}

/// Closed-form entropy.
pub fn entropy_value(t: &NeutrosophicTriple, variant: EntropyVariant) -> f64 {
    let net = (t.mu() - t.nu()).abs();
    let excess = (t.mu() + t.nu() - 1.0).abs();
    let omega = t.omega();
    match variant {
        EntropyVariant::Czekanowski => 1.0 - net / (1.0 + excess + omega),
        EntropyVariant::Ruzicka => (1.0 - net + excess + omega) / (1.0 + net + excess + omega),
    }
}

/// Full breakdown. `entropy` is the closed form; `similarity` comes from the
/// distance path and agrees with it to [`PATH_AGREEMENT`].
pub fn entropy(t: &NeutrosophicTriple, variant: EntropyVariant) -> EntropyBreakdown {
    let (d_true, d_false) = distances(t);
    let similarity = similarity(d_true, d_false, variant);
    let entropy = entropy_value(t, variant);
    debug_assert!(
        (similarity - entropy).abs() <= PATH_AGREEMENT,
        "similarity {similarity} and closed form {entropy} disagree at {t}"
    );
    EntropyBreakdown {
        d_true,
        d_false,
        similarity,
        entropy,
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReductionError {
    #[error("triple {triple} does not satisfy the constraints of {kind} information")]
    KindMismatch {
        kind: InformationKind,
        triple: NeutrosophicTriple,
    },
    #[error("no reduced entropy formula for neutrosophic information; use the general entropy")]
    UnsupportedKind,
}

/// Reduced entropy formula for a constrained kind, using the default
/// tolerance for the constraint check.
pub fn entropy_reduced(
    kind: InformationKind,
    variant: EntropyVariant,
    t: &NeutrosophicTriple,
) -> Result<f64, ReductionError> {
    entropy_reduced_with(kind, variant, t, Tolerance::default())
}

/// Evaluates the classical formula that the general entropy reduces to for
/// `kind`. The formulas deliberately ignore `omega` (and for fuzzy
/// information, `nu`), so they are only meaningful when the triple satisfies
/// the kind's constraints.
pub fn entropy_reduced_with(
    kind: InformationKind,
    variant: EntropyVariant,
    t: &NeutrosophicTriple,
    tol: Tolerance,
) -> Result<f64, ReductionError> {
    if kind == InformationKind::Neutrosophic {
        return Err(ReductionError::UnsupportedKind);
    }
    if !kind.admits(t, tol) {
        return Err(ReductionError::KindMismatch { kind, triple: *t });
    }
    let (mu, nu) = (t.mu(), t.nu());
    let net = (mu - nu).abs();
    let value = match (kind, variant) {
        // Kaufmann: linear index of fuzziness
        (InformationKind::Fuzzy, EntropyVariant::Czekanowski) => 1.0 - (2.0 * mu - 1.0).abs(),
        // Kosko
        (InformationKind::Fuzzy, EntropyVariant::Ruzicka) => {
            let d = (2.0 * mu - 1.0).abs();
            (1.0 - d) / (1.0 + d)
        }
        (InformationKind::IntuitionisticFuzzy, EntropyVariant::Czekanowski) => {
            let pi = 1.0 - mu - nu;
            1.0 - net / (1.0 + pi)
        }
        // Szmidt-Kacprzyk
        (InformationKind::IntuitionisticFuzzy, EntropyVariant::Ruzicka) => {
            let pi = 1.0 - mu - nu;
            (1.0 - net + pi) / (1.0 + net + pi)
        }
        (InformationKind::ParaconsistentFuzzy, EntropyVariant::Czekanowski) => {
            let kappa = mu + nu - 1.0;
            1.0 - net / (1.0 + kappa)
        }
        (InformationKind::ParaconsistentFuzzy, EntropyVariant::Ruzicka) => {
            let kappa = mu + nu - 1.0;
            (1.0 - net + kappa) / (1.0 + net + kappa)
        }
        (InformationKind::Bifuzzy, EntropyVariant::Czekanowski) => {
            1.0 - net / (1.0 + (mu + nu - 1.0).abs())
        }
        (InformationKind::Bifuzzy, EntropyVariant::Ruzicka) => {
            let excess = (mu + nu - 1.0).abs();
            (1.0 - net + excess) / (1.0 + net + excess)
        }
        (InformationKind::Neutrosophic, _) => unreachable!(),
    };
    Ok(value)
}
