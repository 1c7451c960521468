//! Neutrosophic triples, their derived indices and the information-kind
//! classification.
//!
//! A triple `(mu, omega, nu)` carries a degree of truth, a degree of
//! neutrality and a degree of falsity. Each lies in `[0, 1]` independently,
//! so every point of the unit cube is admissible.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Default comparison threshold used by [`Tolerance::default`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// One of the three coordinates of a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Mu,
    Omega,
    Nu,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Mu => "mu",
            Field::Omega => "omega",
            Field::Nu => "nu",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("{field} is not finite ({value})")]
    NotFinite { field: Field, value: f64 },
    #[error("{field} = {value} is outside [0, 1]")]
    OutOfRange { field: Field, value: f64 },
    #[error("mu + nu = {sum} exceeds 1; not an intuitionistic pair")]
    NotIntuitionistic { sum: f64 },
    #[error("tolerance must be finite and non-negative, got {0}")]
    InvalidTolerance(f64),
}

impl DomainError {
    /// The offending coordinate, when the error concerns a single one.
    pub fn field(&self) -> Option<Field> {
        match self {
            DomainError::NotFinite { field, .. } | DomainError::OutOfRange { field, .. } => {
                Some(*field)
            }
            _ => None,
        }
    }
}

/// Non-negative threshold for approximate comparisons (classification,
/// constraint checks). Pure formulas never use it.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub fn new(eps: f64) -> Result<Self, DomainError> {
        if eps.is_finite() && eps >= 0.0 {
            Ok(Tolerance(eps))
        } else {
            Err(DomainError::InvalidTolerance(eps))
        }
    }

    #[inline]
    pub fn eps(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_TOLERANCE)
    }
}

/// A validated point `(mu, omega, nu)` of the neutrosophic cube.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutrosophicTriple {
    mu: f64,
    omega: f64,
    nu: f64,
}

fn check_unit(field: Field, value: f64) -> Result<f64, DomainError> {
    if !value.is_finite() {
        Err(DomainError::NotFinite { field, value })
    } else if !(0.0..=1.0).contains(&value) {
        Err(DomainError::OutOfRange { field, value })
    } else {
        Ok(value)
    }
}

impl NeutrosophicTriple {
    /// Validates each coordinate; NaN, infinities and values outside `[0, 1]`
    /// are rejected with the offending field.
    pub fn new(mu: f64, omega: f64, nu: f64) -> Result<Self, DomainError> {
        Ok(NeutrosophicTriple {
            mu: check_unit(Field::Mu, mu)?,
            omega: check_unit(Field::Omega, omega)?,
            nu: check_unit(Field::Nu, nu)?,
        })
    }

    /// Like [`new`](Self::new) but clamps finite out-of-range values into
    /// `[0, 1]`. Returns the triple and how many coordinates were clamped.
    /// Non-finite values are still rejected.
    pub fn new_clamped(mu: f64, omega: f64, nu: f64) -> Result<(Self, usize), DomainError> {
        let mut clamped = 0;
        let mut clamp = |field: Field, v: f64| -> Result<f64, DomainError> {
            if !v.is_finite() {
                return Err(DomainError::NotFinite { field, value: v });
            }
            let c = v.clamp(0.0, 1.0);
            if c != v {
                clamped += 1;
            }
            Ok(c)
        };
        let mu = clamp(Field::Mu, mu)?;
        let omega = clamp(Field::Omega, omega)?;
        let nu = clamp(Field::Nu, nu)?;
        Ok((NeutrosophicTriple { mu, omega, nu }, clamped))
    }

    /// Fuzzy information: falsity is the negation `1 - mu`, neutrality is 0.
    pub fn from_fuzzy(mu: f64) -> Result<Self, DomainError> {
        let mu = check_unit(Field::Mu, mu)?;
        Self::new(mu, 0.0, 1.0 - mu)
    }

    /// Intuitionistic fuzzy pair with the default tolerance.
    pub fn from_intuitionistic(mu: f64, nu: f64) -> Result<Self, DomainError> {
        Self::from_intuitionistic_with(mu, nu, Tolerance::default())
    }

    /// Intuitionistic fuzzy pair `(mu, nu)` with `mu + nu <= 1 + eps`;
    /// neutrality is 0 and the ignorance `1 - mu - nu` is implied.
    pub fn from_intuitionistic_with(mu: f64, nu: f64, tol: Tolerance) -> Result<Self, DomainError> {
        let t = Self::new(mu, 0.0, nu)?;
        let sum = mu + nu;
        if sum > 1.0 + tol.eps() {
            return Err(DomainError::NotIntuitionistic { sum });
        }
        Ok(t)
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn omega(&self) -> f64 {
        self.omega
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// The triple with truth and falsity exchanged.
    pub fn swapped(&self) -> Self {
        NeutrosophicTriple {
            mu: self.nu,
            omega: self.omega,
            nu: self.mu,
        }
    }

    pub fn indices(&self) -> DerivedIndices {
        DerivedIndices::of(self)
    }

    pub fn classify(&self, tol: Tolerance) -> InformationKind {
        InformationKind::of(self, tol)
    }
}

impl fmt::Display for NeutrosophicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.mu, self.omega, self.nu)
    }
}

/// Net truth, ignorance, contradiction and ambiguity of a triple.
///
/// `pi` and `kappa` are never both positive: the first is the deficit of
/// `mu + nu` below 1, the second its excess above 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedIndices {
    pub tau: f64,
    pub pi: f64,
    pub kappa: f64,
    pub alpha: f64,
}

impl DerivedIndices {
    pub fn of(t: &NeutrosophicTriple) -> Self {
        let (mu, nu) = (t.mu, t.nu);
        let sum = mu + nu;
        DerivedIndices {
            tau: mu - nu,
            pi: 1.0 - sum.min(1.0),
            kappa: sum.max(1.0) - 1.0,
            alpha: 1.0 - (mu - nu).abs() - (sum - 1.0).abs(),
        }
    }
}

/// Convenience alias for [`DerivedIndices::of`].
pub fn derive_indices(t: &NeutrosophicTriple) -> DerivedIndices {
    DerivedIndices::of(t)
}

/// Which reduced representation a triple belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InformationKind {
    /// `omega = 0`, `mu + nu = 1`.
    Fuzzy,
    /// `omega = 0`, `mu + nu <= 1`.
    IntuitionisticFuzzy,
    /// `omega = 0`, `mu + nu >= 1`.
    ParaconsistentFuzzy,
    /// `omega = 0`.
    Bifuzzy,
    Neutrosophic,
}

impl InformationKind {
    pub const ALL: [InformationKind; 5] = [
        InformationKind::Fuzzy,
        InformationKind::IntuitionisticFuzzy,
        InformationKind::ParaconsistentFuzzy,
        InformationKind::Bifuzzy,
        InformationKind::Neutrosophic,
    ];

    /// Most specific kind, tested in the order fuzzy, intuitionistic,
    /// paraconsistent, bifuzzy, neutrosophic.
    ///
    /// Since any `omega ~ 0` point is intuitionistic or paraconsistent,
    /// `Bifuzzy` is never the result here; it remains a valid kind for
    /// [`admits`](Self::admits).
    pub fn of(t: &NeutrosophicTriple, tol: Tolerance) -> Self {
        Self::ALL
            .into_iter()
            .find(|kind| kind.admits(t, tol))
            .unwrap_or(InformationKind::Neutrosophic)
    }

    /// Whether the triple satisfies this kind's constraints within `tol`.
    pub fn admits(self, t: &NeutrosophicTriple, tol: Tolerance) -> bool {
        let eps = tol.eps();
        let flat = t.omega <= eps;
        let sum = t.mu + t.nu;
        match self {
            InformationKind::Fuzzy => flat && (sum - 1.0).abs() <= eps,
            InformationKind::IntuitionisticFuzzy => flat && sum <= 1.0 + eps,
            InformationKind::ParaconsistentFuzzy => flat && sum >= 1.0 - eps,
            InformationKind::Bifuzzy => flat,
            InformationKind::Neutrosophic => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InformationKind::Fuzzy => "fuzzy",
            InformationKind::IntuitionisticFuzzy => "intuitionistic",
            InformationKind::ParaconsistentFuzzy => "paraconsistent",
            InformationKind::Bifuzzy => "bifuzzy",
            InformationKind::Neutrosophic => "neutrosophic",
        }
    }
}

impl fmt::Display for InformationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InformationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown information kind '{s}'"))
    }
}

/// Convenience alias for [`InformationKind::of`].
pub fn classify(t: &NeutrosophicTriple, tol: Tolerance) -> InformationKind {
    InformationKind::of(t, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn tri(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriple {
        NeutrosophicTriple::new(mu, omega, nu).unwrap()
    }

    #[test]
    fn new_accepts_cube_points() {
        let t = tri(0.8, 0.2, 0.1);
        assert_eq!((t.mu(), t.omega(), t.nu()), (0.8, 0.2, 0.1));
        assert!(NeutrosophicTriple::new(1.0, 1.0, 1.0).is_ok());
        assert!(NeutrosophicTriple::new(0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn new_rejects_bad_values() {
        let err = NeutrosophicTriple::new(1.2, 0.0, 0.0).unwrap_err();
        assert!(matches!(
            err,
            DomainError::OutOfRange {
                field: Field::Mu,
                ..
            }
        ));

        let err = NeutrosophicTriple::new(0.5, f64::NAN, 0.5).unwrap_err();
        assert!(matches!(
            err,
            DomainError::NotFinite {
                field: Field::Omega,
                ..
            }
        ));

        let err = NeutrosophicTriple::new(0.5, 0.0, f64::NEG_INFINITY).unwrap_err();
        assert_eq!(err.field(), Some(Field::Nu));

        let err = NeutrosophicTriple::new(0.5, -0.0001, 0.5).unwrap_err();
        assert_eq!(err.field(), Some(Field::Omega));
    }

    #[test]
    fn clamped_constructor_counts() {
        let (t, n) = NeutrosophicTriple::new_clamped(2.0, -1.0, 0.5).unwrap();
        assert_eq!(t, tri(1.0, 0.0, 0.5));
        assert_eq!(n, 2);
        assert!(NeutrosophicTriple::new_clamped(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn fuzzy_negation() {
        assert_eq!(
            NeutrosophicTriple::from_fuzzy(0.5).unwrap(),
            tri(0.5, 0.0, 0.5)
        );
        assert_eq!(
            NeutrosophicTriple::from_fuzzy(1.0).unwrap(),
            tri(1.0, 0.0, 0.0)
        );
        assert_eq!(
            NeutrosophicTriple::from_fuzzy(0.3).unwrap(),
            tri(0.3, 0.0, 0.7)
        );
        assert!(NeutrosophicTriple::from_fuzzy(-0.1).is_err());
    }

    #[test]
    fn intuitionistic_pairs() {
        assert_eq!(
            NeutrosophicTriple::from_intuitionistic(0.6, 0.3).unwrap(),
            tri(0.6, 0.0, 0.3)
        );
        assert_eq!(
            NeutrosophicTriple::from_intuitionistic(0.0, 0.0).unwrap(),
            tri(0.0, 0.0, 0.0)
        );
        assert!(matches!(
            NeutrosophicTriple::from_intuitionistic(0.7, 0.7),
            Err(DomainError::NotIntuitionistic { .. })
        ));
        let t = NeutrosophicTriple::from_intuitionistic(0.6, 0.3).unwrap();
        assert_abs_diff_eq!(t.indices().pi, 0.1, epsilon = 1e-15);
    }

    #[test]
    fn indices_examples() {
        let d = tri(0.8, 0.2, 0.1).indices();
        assert_abs_diff_eq!(d.tau, 0.7, epsilon = 1e-15);
        assert_abs_diff_eq!(d.pi, 0.1, epsilon = 1e-15);
        assert_eq!(d.kappa, 0.0);
        assert_abs_diff_eq!(d.alpha, 0.2, epsilon = 1e-15);

        let d = tri(1.0, 0.0, 1.0).indices();
        assert_eq!((d.tau, d.pi, d.kappa, d.alpha), (0.0, 0.0, 1.0, 0.0));

        let d = tri(0.0, 0.0, 0.0).indices();
        assert_eq!((d.tau, d.pi, d.kappa, d.alpha), (0.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn classify_examples() {
        let tol = Tolerance::default();
        assert_eq!(tri(0.4, 0.0, 0.6).classify(tol), InformationKind::Fuzzy);
        assert_eq!(
            tri(0.3, 0.0, 0.2).classify(tol),
            InformationKind::IntuitionisticFuzzy
        );
        assert_eq!(
            tri(0.9, 0.0, 0.4).classify(tol),
            InformationKind::ParaconsistentFuzzy
        );
        assert_eq!(
            tri(0.8, 0.2, 0.1).classify(tol),
            InformationKind::Neutrosophic
        );
        // omega > 0 on the fuzzy line is still neutrosophic
        assert_eq!(
            tri(0.4, 0.1, 0.6).classify(tol),
            InformationKind::Neutrosophic
        );
    }

    #[test]
    fn tolerance_validation() {
        assert_eq!(Tolerance::default().eps(), 1e-9);
        assert!(Tolerance::new(0.0).is_ok());
        assert!(Tolerance::new(-1e-3).is_err());
        assert!(Tolerance::new(f64::NAN).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in InformationKind::ALL {
            assert_eq!(k.name().parse::<InformationKind>().unwrap(), k);
        }
        assert!("bogus".parse::<InformationKind>().is_err());
    }

    proptest! {
        #[test]
        fn index_identities(mu in 0.0..=1.0f64, omega in 0.0..=1.0f64, nu in 0.0..=1.0f64) {
            let d = tri(mu, omega, nu).indices();
            prop_assert_eq!(d.pi * d.kappa, 0.0);
            prop_assert!((d.pi + d.kappa - (mu + nu - 1.0).abs()).abs() <= 1e-12);
            prop_assert!((d.alpha - (1.0 - d.tau.abs() - d.pi - d.kappa)).abs() <= 1e-12);
            prop_assert!(d.alpha >= -1e-12);
        }

        #[test]
        fn fuzzy_constructor_classifies_fuzzy(mu in 0.0..=1.0f64) {
            let t = NeutrosophicTriple::from_fuzzy(mu).unwrap();
            prop_assert_eq!(t.classify(Tolerance::default()), InformationKind::Fuzzy);
        }

        #[test]
        fn classification_stable_inside_regions(
            mu in 0.0..=1.0f64,
            nu in 0.0..=1.0f64,
            omega in prop_oneof![Just(0.0), 0.0..=1.0f64],
            dm in -0.5..0.5f64,
            dw in 0.0..0.5f64,
            dn in -0.5..0.5f64,
        ) {
            let tol = Tolerance::default();
            let eps = tol.eps();
            let base = tri(mu, omega, nu);
            let sum = mu + nu;
            // strictly inside: at least 2*eps from every threshold that matters
            let inside = if omega <= eps {
                (sum - 1.0).abs() > 2.0 * eps + eps
            } else {
                omega > 2.0 * eps
            };
            prop_assume!(inside);
            let moved = NeutrosophicTriple::new(
                mu + dm * eps * 0.999,
                omega + dw * eps * 0.999,
                nu + dn * eps * 0.999,
            );
            prop_assume!(moved.is_ok());
            prop_assert_eq!(moved.unwrap().classify(tol), base.classify(tol));
        }

        #[test]
        fn fuzzy_line_stable(mu in 0.0..=1.0f64, dm in -0.5..0.5f64, dw in 0.0..0.5f64, dn in -0.5..0.5f64) {
            let tol = Tolerance::default();
            let eps = tol.eps();
            let moved = NeutrosophicTriple::new(mu + dm * eps, dw * eps, (1.0 - mu) + dn * eps);
            prop_assume!(moved.is_ok());
            prop_assert_eq!(moved.unwrap().classify(tol), InformationKind::Fuzzy);
        }
    }
}
