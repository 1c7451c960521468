//! Seven-component partition of neutrosophic information.
//!
//! Every triple splits into two certainty components, truth `t` and falsity
//! `f`, and five uncertainty components: ambiguity `a`, ignorance `u`,
//! contradiction `c`, neutrality `n` and saturation `s`. The seven sum to 1
//! and the five uncertainty components sum to the entropy of the matching
//! variant. Each component equals 1 exactly at its prototype point:
//!
//! | Component | Prototype `(mu, omega, nu)` |
//! |-----------|-----------------------------|
//! | truth | `(1, 0, 0)` |
//! | falsity | `(0, 0, 1)` |
//! | ambiguity | `(0.5, 0, 0.5)` |
//! | ignorance | `(0, 0, 0)` |
//! | contradiction | `(1, 0, 1)` |
//! | neutrality | `(0, 1, 0)` |
//! | saturation | `(1, 1, 1)` |
//!
//! [`decompose`] evaluates the branch-free max/min formulas. [`decompose_by_cases`]
//! rebuilds the same values from the three-case construction (ignorance
//! dominant, contradiction dominant, neutrality dominant) and exists to check
//! the first.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::entropy::EntropyVariant;
use crate::triple::{DerivedIndices, InformationKind, NeutrosophicTriple, Tolerance};

/// Rounding residue below zero that is folded to exactly 0.
pub const NEGATIVE_ZERO_CUTOFF: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Truth,
    Falsity,
    Ambiguity,
    Ignorance,
    Contradiction,
    Neutrality,
    Saturation,
}

impl Component {
    pub const ALL: [Component; 7] = [
        Component::Truth,
        Component::Falsity,
        Component::Ambiguity,
        Component::Ignorance,
        Component::Contradiction,
        Component::Neutrality,
        Component::Saturation,
    ];

    /// One-letter symbol: t, f, a, u, c, n, s.
    pub fn symbol(self) -> &'static str {
        match self {
            Component::Truth => "t",
            Component::Falsity => "f",
            Component::Ambiguity => "a",
            Component::Ignorance => "u",
            Component::Contradiction => "c",
            Component::Neutrality => "n",
            Component::Saturation => "s",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Component::Truth => "truth",
            Component::Falsity => "falsity",
            Component::Ambiguity => "ambiguity",
            Component::Ignorance => "ignorance",
            Component::Contradiction => "contradiction",
            Component::Neutrality => "neutrality",
            Component::Saturation => "saturation",
        }
    }

    /// The cube point at which this component equals 1.
    pub fn prototype(self) -> NeutrosophicTriple {
        let (mu, omega, nu) = match self {
            Component::Truth => (1.0, 0.0, 0.0),
            Component::Falsity => (0.0, 0.0, 1.0),
            Component::Ambiguity => (0.5, 0.0, 0.5),
            Component::Ignorance => (0.0, 0.0, 0.0),
            Component::Contradiction => (1.0, 0.0, 1.0),
            Component::Neutrality => (0.0, 1.0, 0.0),
            Component::Saturation => (1.0, 1.0, 1.0),
        };
        NeutrosophicTriple::new(mu, omega, nu).expect("prototypes lie in the cube")
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Component {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Component::ALL
            .into_iter()
            .find(|c| c.symbol() == s || c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown component '{s}'"))
    }
}

/// The seven components of one triple under one entropy variant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeptaDecomposition {
    pub truth: f64,
    pub falsity: f64,
    pub ambiguity: f64,
    pub ignorance: f64,
    pub contradiction: f64,
    pub neutrality: f64,
    pub saturation: f64,
    pub variant: EntropyVariant,
}

impl HeptaDecomposition {
    pub fn get(&self, c: Component) -> f64 {
        match c {
            Component::Truth => self.truth,
            Component::Falsity => self.falsity,
            Component::Ambiguity => self.ambiguity,
            Component::Ignorance => self.ignorance,
            Component::Contradiction => self.contradiction,
            Component::Neutrality => self.neutrality,
            Component::Saturation => self.saturation,
        }
    }

    /// Components in `t, f, a, u, c, n, s` order.
    pub fn values(&self) -> [f64; 7] {
        Component::ALL.map(|c| self.get(c))
    }

    pub fn sum(&self) -> f64 {
        self.values().iter().sum()
    }

    /// `a + u + c + n + s`, the entropy carried by the decomposition.
    pub fn uncertainty(&self) -> f64 {
        self.ambiguity + self.ignorance + self.contradiction + self.neutrality + self.saturation
    }

    /// `t + f`.
    pub fn certainty(&self) -> f64 {
        self.truth + self.falsity
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &HeptaDecomposition) -> f64 {
        self.values()
            .iter()
            .zip(other.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn cleaned(mut self) -> Self {
        for v in [
            &mut self.truth,
            &mut self.falsity,
            &mut self.ambiguity,
            &mut self.ignorance,
            &mut self.contradiction,
            &mut self.neutrality,
            &mut self.saturation,
        ] {
            if *v <= 0.0 && *v > -NEGATIVE_ZERO_CUTOFF {
                *v = 0.0;
            }
        }
        self
    }
}

fn denominator(idx: &DerivedIndices, omega: f64, variant: EntropyVariant) -> f64 {
    let base = 1.0 + omega + idx.pi + idx.kappa;
    let d = match variant {
        EntropyVariant::Czekanowski => base,
        EntropyVariant::Ruzicka => base + idx.tau.abs(),
    };
    debug_assert!(d >= 1.0);
    d
}

/// Truth and falsity numerators; the two variants weight net truth
/// differently.
fn certainty_numerators(
    t: &NeutrosophicTriple,
    idx: &DerivedIndices,
    variant: EntropyVariant,
) -> (f64, f64) {
    match variant {
        EntropyVariant::Czekanowski => {
            let top = t.mu().max(t.nu());
            (top - t.nu(), top - t.mu())
        }
        EntropyVariant::Ruzicka => (2.0 * idx.tau.max(0.0), 2.0 * (-idx.tau).max(0.0)),
    }
}

fn ambiguity_numerator(idx: &DerivedIndices) -> f64 {
    1.0 - idx.tau.abs() - idx.pi - idx.kappa
}

/// Branch-free decomposition.
pub fn decompose(t: &NeutrosophicTriple, variant: EntropyVariant) -> HeptaDecomposition {
    let idx = t.indices();
    let omega = t.omega();
    let d = denominator(&idx, omega, variant);
    let (truth, falsity) = certainty_numerators(t, &idx, variant);
    let spill = (omega - idx.pi - idx.kappa).max(0.0) / 2.0;
    HeptaDecomposition {
        truth: truth / d,
        falsity: falsity / d,
        ambiguity: ambiguity_numerator(&idx) / d,
        ignorance: 2.0 * (idx.pi - omega).max(0.0) / d,
        contradiction: 2.0 * (idx.kappa - omega).max(0.0) / d,
        neutrality: (spill + 3.0 * omega.min(idx.pi)) / d,
        saturation: (spill + 3.0 * omega.min(idx.kappa)) / d,
        variant,
    }
    .cleaned()
}

/// Which ordering of `(pi, omega, kappa)` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionCase {
    /// `pi >= omega >= kappa = 0`: ignorance and neutrality only.
    IgnoranceDominant,
    /// `kappa >= omega >= pi = 0`: contradiction and saturation only.
    ContradictionDominant,
    /// `omega >= max(pi, kappa)`: neutrality and saturation only.
    NeutralityDominant,
}

impl ConstructionCase {
    pub const ALL: [ConstructionCase; 3] = [
        ConstructionCase::IgnoranceDominant,
        ConstructionCase::ContradictionDominant,
        ConstructionCase::NeutralityDominant,
    ];

    pub fn holds(self, idx: &DerivedIndices, omega: f64) -> bool {
        match self {
            ConstructionCase::IgnoranceDominant => {
                idx.pi >= omega && omega >= idx.kappa && idx.kappa == 0.0
            }
            ConstructionCase::ContradictionDominant => {
                idx.kappa >= omega && omega >= idx.pi && idx.pi == 0.0
            }
            ConstructionCase::NeutralityDominant => omega >= idx.pi.max(idx.kappa),
        }
    }

    /// First case that holds, with precedence ignorance, contradiction,
    /// neutrality. Boundaries are shared, and the formulas agree there.
    pub fn select(t: &NeutrosophicTriple) -> Option<ConstructionCase> {
        let idx = t.indices();
        Self::ALL.into_iter().find(|c| c.holds(&idx, t.omega()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecompositionError {
    #[error("no construction case matches {0}")]
    NoCaseMatched(NeutrosophicTriple),
    #[error("{kind} information at {triple} has {component} = {value}, expected 0")]
    VanishingViolated {
        kind: InformationKind,
        triple: NeutrosophicTriple,
        component: Component,
        value: f64,
    },
}

/// Evaluates one case's formulas whether or not its ordering holds.
///
/// Outside its own region a case may produce negative components; this is
/// only meant for comparing adjacent cases near a shared boundary.
pub fn evaluate_case(
    case: ConstructionCase,
    t: &NeutrosophicTriple,
    variant: EntropyVariant,
) -> HeptaDecomposition {
    let idx = t.indices();
    let omega = t.omega();
    let d = denominator(&idx, omega, variant);
    let (truth, falsity) = certainty_numerators(t, &idx, variant);
    let (pi, kappa) = (idx.pi, idx.kappa);
    let (ignorance, contradiction, neutrality, saturation) = match case {
        ConstructionCase::IgnoranceDominant => {
            ((2.0 * pi - 2.0 * omega) / d, 0.0, 3.0 * omega / d, 0.0)
        }
        ConstructionCase::ContradictionDominant => {
            (0.0, (2.0 * kappa - 2.0 * omega) / d, 0.0, 3.0 * omega / d)
        }
        ConstructionCase::NeutralityDominant => {
            let half = (omega - pi - kappa) / 2.0;
            (0.0, 0.0, (half + 3.0 * pi) / d, (half + 3.0 * kappa) / d)
        }
    };
    HeptaDecomposition {
        truth: truth / d,
        falsity: falsity / d,
        ambiguity: ambiguity_numerator(&idx) / d,
        ignorance,
        contradiction,
        neutrality,
        saturation,
        variant,
    }
    .cleaned()
}

/// Decomposition through the case split. Agrees with [`decompose`] to
/// within 1e-12 everywhere on the cube.
pub fn decompose_by_cases(
    t: &NeutrosophicTriple,
    variant: EntropyVariant,
) -> Result<HeptaDecomposition, DecompositionError> {
    let case = ConstructionCase::select(t).ok_or(DecompositionError::NoCaseMatched(*t))?;
    Ok(evaluate_case(case, t, variant))
}

impl InformationKind {
    /// Components that are identically zero for this kind of information.
    pub fn vanishing_components(self) -> &'static [Component] {
        match self {
            InformationKind::Fuzzy => &[
                Component::Ignorance,
                Component::Contradiction,
                Component::Neutrality,
                Component::Saturation,
            ],
            InformationKind::IntuitionisticFuzzy => &[
                Component::Contradiction,
                Component::Neutrality,
                Component::Saturation,
            ],
            InformationKind::ParaconsistentFuzzy => &[
                Component::Ignorance,
                Component::Neutrality,
                Component::Saturation,
            ],
            InformationKind::Bifuzzy => &[Component::Neutrality, Component::Saturation],
            InformationKind::Neutrosophic => &[],
        }
    }
}

/// A decomposition tagged with the information kind it was checked against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedPartition {
    pub kind: InformationKind,
    pub decomposition: HeptaDecomposition,
}

impl ReducedPartition {
    /// Components that may be nonzero for this kind.
    pub fn active_components(&self) -> Vec<Component> {
        let gone = self.kind.vanishing_components();
        Component::ALL
            .into_iter()
            .filter(|c| !gone.contains(c))
            .collect()
    }
}

/// Bound on a component that must vanish for a kind admitted with
/// tolerance `eps`. Neutrality can reach `3.5 * omega` and ignorance or
/// contradiction `2 * |mu + nu - 1|`, both of which the classifier allows up
/// to `eps`.
pub fn vanishing_bound(tol: Tolerance) -> f64 {
    4.0 * tol.eps() + NEGATIVE_ZERO_CUTOFF
}

/// Classifies the triple and decomposes it, verifying that the components
/// the kind rules out are (near) zero.
pub fn reduced_partition(
    t: &NeutrosophicTriple,
    variant: EntropyVariant,
    tol: Tolerance,
) -> Result<ReducedPartition, DecompositionError> {
    let kind = t.classify(tol);
    let decomposition = decompose(t, variant);
    let bound = vanishing_bound(tol);
    for &component in kind.vanishing_components() {
        let value = decomposition.get(component);
        if value.abs() > bound {
            return Err(DecompositionError::VanishingViolated {
                kind,
                triple: *t,
                component,
                value,
            });
        }
    }
    Ok(ReducedPartition {
        kind,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::entropy_value;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    use EntropyVariant::{Czekanowski, Ruzicka};

    fn tri(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriple {
        NeutrosophicTriple::new(mu, omega, nu).unwrap()
    }

    fn assert_components(h: &HeptaDecomposition, expected: [f64; 7], eps: f64) {
        for (c, (got, want)) in Component::ALL.iter().zip(h.values().iter().zip(expected)) {
            assert!((got - want).abs() <= eps, "{c}: got {got}, want {want}");
        }
    }

    #[test]
    fn prototypes_are_pure() {
        for v in EntropyVariant::ALL {
            for c in Component::ALL {
                let h = decompose(&c.prototype(), v);
                for other in Component::ALL {
                    let want = if other == c { 1.0 } else { 0.0 };
                    assert_eq!(h.get(other), want, "{v} prototype {c}, component {other}");
                }
            }
        }
    }

    #[test]
    fn worked_example_czekanowski() {
        let h = decompose(&tri(0.8, 0.2, 0.1), Czekanowski);
        assert_components(
            &h,
            [
                0.538461538462,
                0.0,
                0.153846153846,
                0.0,
                0.0,
                0.269230769231,
                0.038461538462,
            ],
            1e-12,
        );
        assert_abs_diff_eq!(h.sum(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn worked_example_ruzicka() {
        let h = decompose(&tri(0.8, 0.2, 0.1), Ruzicka);
        assert_components(&h, [0.7, 0.0, 0.1, 0.0, 0.0, 0.175, 0.025], 1e-12);
    }

    #[test]
    fn case_examples() {
        let p = tri(0.3, 0.1, 0.2);
        assert_eq!(
            ConstructionCase::select(&p),
            Some(ConstructionCase::IgnoranceDominant)
        );
        let h = decompose_by_cases(&p, Czekanowski).unwrap();
        assert_components(&h, [0.0625, 0.0, 0.25, 0.5, 0.0, 0.1875, 0.0], 1e-12);

        let p = tri(0.9, 0.1, 0.4);
        assert_eq!(
            ConstructionCase::select(&p),
            Some(ConstructionCase::ContradictionDominant)
        );
        let h = decompose_by_cases(&p, Czekanowski).unwrap();
        assert_components(
            &h,
            [
                0.357142857143,
                0.0,
                0.142857142857,
                0.0,
                0.285714285714,
                0.0,
                0.214285714286,
            ],
            1e-12,
        );
        let h = decompose_by_cases(&p, Ruzicka).unwrap();
        assert_components(
            &h,
            [
                0.526315789474,
                0.0,
                0.105263157895,
                0.0,
                0.210526315789,
                0.0,
                0.157894736842,
            ],
            1e-12,
        );

        let p = tri(0.8, 0.2, 0.1);
        assert_eq!(
            ConstructionCase::select(&p),
            Some(ConstructionCase::NeutralityDominant)
        );
        let by_cases = decompose_by_cases(&p, Czekanowski).unwrap();
        assert!(by_cases.max_abs_diff(&decompose(&p, Czekanowski)) <= 1e-12);
    }

    #[test]
    fn origin_takes_first_case() {
        // pi = 1, omega = kappa = 0
        assert_eq!(
            ConstructionCase::select(&tri(0.0, 0.0, 0.0)),
            Some(ConstructionCase::IgnoranceDominant)
        );
        // fuzzy line: pi = kappa = omega = 0 sits on all three
        assert_eq!(
            ConstructionCase::select(&tri(0.5, 0.0, 0.5)),
            Some(ConstructionCase::IgnoranceDominant)
        );
    }

    #[test]
    fn reduced_partition_patterns() {
        let tol = Tolerance::default();
        let cases = [
            ((0.4, 0.0, 0.6), InformationKind::Fuzzy),
            ((0.3, 0.0, 0.2), InformationKind::IntuitionisticFuzzy),
            ((0.9, 0.0, 0.4), InformationKind::ParaconsistentFuzzy),
            ((0.8, 0.2, 0.1), InformationKind::Neutrosophic),
        ];
        for ((m, w, n), kind) in cases {
            for v in EntropyVariant::ALL {
                let r = reduced_partition(&tri(m, w, n), v, tol).unwrap();
                assert_eq!(r.kind, kind);
                for c in Component::ALL {
                    let active = r.active_components().contains(&c);
                    if !active {
                        assert_eq!(r.decomposition.get(c), 0.0, "{kind} {c}");
                    }
                }
            }
        }
        let r = reduced_partition(&tri(0.4, 0.0, 0.6), Czekanowski, tol).unwrap();
        let active: Vec<_> = r.active_components().iter().map(|c| c.symbol()).collect();
        assert_eq!(active, ["t", "f", "a"]);
    }

    #[test]
    fn component_parsing() {
        assert_eq!("u".parse::<Component>().unwrap(), Component::Ignorance);
        assert_eq!(
            "Saturation".parse::<Component>().unwrap(),
            Component::Saturation
        );
        assert!("x".parse::<Component>().is_err());
    }

    fn cube() -> impl Strategy<Value = NeutrosophicTriple> {
        (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(m, w, n)| tri(m, w, n))
    }

    proptest! {
        #[test]
        fn partition_and_entropy(t in cube()) {
            for v in EntropyVariant::ALL {
                let h = decompose(&t, v);
                prop_assert!((h.sum() - 1.0).abs() <= 1e-9);
                prop_assert!((h.uncertainty() - entropy_value(&t, v)).abs() <= 1e-9);
                prop_assert!(h.values().iter().all(|&x| x >= 0.0));
            }
        }

        #[test]
        fn exclusivity(t in cube()) {
            for v in EntropyVariant::ALL {
                let h = decompose(&t, v);
                prop_assert_eq!(h.truth * h.falsity, 0.0);
                prop_assert_eq!(h.ignorance * h.contradiction, 0.0);
                let zeros = [h.ignorance, h.contradiction, h.neutrality, h.saturation]
                    .iter()
                    .filter(|&&x| x == 0.0)
                    .count();
                prop_assert!(zeros >= 2);
            }
        }

        #[test]
        fn cases_agree(t in cube()) {
            for v in EntropyVariant::ALL {
                let a = decompose(&t, v);
                let b = decompose_by_cases(&t, v).unwrap();
                prop_assert!(a.max_abs_diff(&b) <= 1e-12);
            }
        }

        #[test]
        fn swap_exchanges_truth_and_falsity(t in cube()) {
            for v in EntropyVariant::ALL {
                let a = decompose(&t, v);
                let b = decompose(&t.swapped(), v);
                prop_assert_eq!(a.truth, b.falsity);
                prop_assert_eq!(a.falsity, b.truth);
                prop_assert_eq!(a.ambiguity, b.ambiguity);
                prop_assert_eq!(a.ignorance, b.ignorance);
                prop_assert_eq!(a.contradiction, b.contradiction);
                prop_assert_eq!(a.neutrality, b.neutrality);
                prop_assert_eq!(a.saturation, b.saturation);
            }
        }

        #[test]
        fn adjacent_cases_continuous_at_omega_eq_pi(s in 0.0..1.0f64, frac in -1.0..1.0f64, bias in -1e-8..1e-8f64) {
            // ignorance side: sigma = s < 1, pi = 1 - s, omega ~ pi
            let pi = 1.0 - s;
            let tau = frac * s.min(2.0 - s);
            let omega = (pi + bias).clamp(0.0, 1.0);
            let t = NeutrosophicTriple::new((s + tau) / 2.0, omega, (s - tau) / 2.0);
            prop_assume!(t.is_ok());
            let t = t.unwrap();
            for v in EntropyVariant::ALL {
                let i = evaluate_case(ConstructionCase::IgnoranceDominant, &t, v);
                let iii = evaluate_case(ConstructionCase::NeutralityDominant, &t, v);
                prop_assert!(i.max_abs_diff(&iii) <= 1e-6);
            }
        }

        #[test]
        fn adjacent_cases_continuous_at_omega_eq_kappa(s in 1.0..=2.0f64, frac in -1.0..1.0f64, bias in -1e-8..1e-8f64) {
            let kappa = s - 1.0;
            let tau = frac * s.min(2.0 - s);
            let omega = (kappa + bias).clamp(0.0, 1.0);
            let t = NeutrosophicTriple::new((s + tau) / 2.0, omega, (s - tau) / 2.0);
            prop_assume!(t.is_ok());
            let t = t.unwrap();
            for v in EntropyVariant::ALL {
                let ii = evaluate_case(ConstructionCase::ContradictionDominant, &t, v);
                let iii = evaluate_case(ConstructionCase::NeutralityDominant, &t, v);
                prop_assert!(ii.max_abs_diff(&iii) <= 1e-6);
            }
        }
    }
}
