//! Seeded Monte Carlo check of every pointwise invariant.
//!
//! Samples are drawn from a SplitMix64 stream so that a seed means the same
//! triples in any implementation:
//!
//! ```text
//! state_k = seed + k * 0x9E3779B97F4A7C15            (wrapping, k = 1, 2, ...)
//! z = state_k
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9           (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB           (wrapping)
//! draw_k = z ^ (z >> 31)
//! uniform_k = (draw_k >> 11) * 2^-53                 (in [0, 1))
//! ```
//!
//! Sample `i` (zero-based) uses uniforms `4i+1 .. 4i+4` as `mu`, `omega`,
//! `nu` and an auxiliary value for the comparison-pair invariants.

use std::fmt;

use rayon::prelude::*;

use crate::decomposition::{decompose, decompose_by_cases, reduced_partition, Component};
use crate::entropy::{entropy, entropy_value, EntropyVariant, PATH_AGREEMENT};
use crate::triple::{NeutrosophicTriple, Tolerance};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Tight agreement for identities that hold up to a few roundings.
pub const TIGHT: f64 = 1e-12;

/// Strictness gap: when `|tau|` differs by more than this, entropies must
/// differ by more than [`TIGHT`].
pub const STRICT_TAU_GAP: f64 = 1e-6;

/// Counter-based SplitMix64.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        to_unit(self.next_u64())
    }

    /// The `k`-th draw (1-based) of the stream seeded with `seed`.
    pub fn draw_at(seed: u64, k: u64) -> u64 {
        mix(seed.wrapping_add(k.wrapping_mul(GOLDEN_GAMMA)))
    }
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn to_unit(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// The `i`-th sample triple and its auxiliary uniform.
pub fn sample(seed: u64, i: u64) -> (NeutrosophicTriple, f64) {
    let u = |j: u64| to_unit(SplitMix64::draw_at(seed, 4 * i + j));
    let t = NeutrosophicTriple::new(u(1), u(2), u(3)).expect("uniforms lie in [0, 1)");
    (t, u(4))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    pub samples: u64,
    pub seed: u64,
    pub tolerance: Tolerance,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub invariant: String,
    pub triple: NeutrosophicTriple,
    pub observed: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {}",
            self.invariant, self.triple, self.observed
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
    /// Individual assertions evaluated.
    pub evaluated: u64,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Failures listed in the text report before truncation.
const LISTED_FAILURES: usize = 20;

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "samples: {}", self.samples)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "tolerance: {:e}", self.tolerance)?;
        writeln!(f, "assertions: {}", self.evaluated)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for failure in self.failures.iter().take(LISTED_FAILURES) {
            writeln!(f, "  {failure}")?;
        }
        if self.failures.len() > LISTED_FAILURES {
            writeln!(f, "  ... {} more", self.failures.len() - LISTED_FAILURES)?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

struct Probe<'a> {
    triple: &'a NeutrosophicTriple,
    evaluated: u64,
    failures: Vec<Failure>,
}

impl<'a> Probe<'a> {
    fn new(triple: &'a NeutrosophicTriple) -> Self {
        Probe {
            triple,
            evaluated: 0,
            failures: Vec::new(),
        }
    }

    fn expect(
        &mut self,
        ok: bool,
        invariant: fmt::Arguments<'_>,
        observed: impl FnOnce() -> String,
    ) {
        self.evaluated += 1;
        if !ok {
            self.failures.push(Failure {
                invariant: invariant.to_string(),
                triple: *self.triple,
                observed: observed(),
            });
        }
    }
}

fn rebuild(tau: f64, sum: f64, omega: f64) -> Option<NeutrosophicTriple> {
    NeutrosophicTriple::new((sum + tau) / 2.0, omega, (sum - tau) / 2.0).ok()
}

fn check_point(t: &NeutrosophicTriple, aux: f64, tol: Tolerance) -> Probe<'_> {
    let mut p = Probe::new(t);
    let (mu, omega, nu) = (t.mu(), t.omega(), t.nu());
    let idx = t.indices();
    let sum = mu + nu;

    p.expect(
        idx.pi * idx.kappa == 0.0,
        format_args!("indices: pi*kappa = 0"),
        || format!("pi={} kappa={}", idx.pi, idx.kappa),
    );
    p.expect(
        (idx.pi + idx.kappa - (sum - 1.0).abs()).abs() <= TIGHT,
        format_args!("indices: pi+kappa = |mu+nu-1|"),
        || format!("pi={} kappa={}", idx.pi, idx.kappa),
    );
    p.expect(
        (idx.alpha - (1.0 - idx.tau.abs() - idx.pi - idx.kappa)).abs() <= TIGHT,
        format_args!("indices: alpha = 1-|tau|-pi-kappa"),
        || format!("alpha={}", idx.alpha),
    );
    p.expect(
        idx.alpha >= -TIGHT,
        format_args!("indices: alpha >= 0"),
        || format!("alpha={}", idx.alpha),
    );

    for v in EntropyVariant::ALL {
        let b = entropy(t, v);
        let e = b.entropy;
        p.expect(
            (0.0..=1.0).contains(&e),
            format_args!("entropy[{v}]: range"),
            || format!("E={e}"),
        );
        p.expect(
            (b.similarity - e).abs() <= PATH_AGREEMENT,
            format_args!("entropy[{v}]: similarity = closed form"),
            || format!("S={} E={e}", b.similarity),
        );
        let swapped = entropy_value(&t.swapped(), v);
        p.expect(
            swapped == e,
            format_args!("entropy[{v}]: swap symmetry"),
            || format!("E={e} E_swapped={swapped}"),
        );
        if mu == nu {
            p.expect(
                (e - 1.0).abs() <= TIGHT,
                format_args!("entropy[{v}]: mu=nu gives 1"),
                || format!("E={e}"),
            );
        }

        // non-decreasing in omega, mu and nu fixed
        let lower = NeutrosophicTriple::new(mu, omega * aux, nu).expect("scaled omega");
        let e_lower = entropy_value(&lower, v);
        p.expect(
            e_lower <= e + TIGHT,
            format_args!("entropy[{v}]: non-decreasing in omega"),
            || format!("E(omega*{aux})={e_lower} > E={e}"),
        );

        // strictly decreasing in |tau| with omega and mu+nu fixed
        if let Some(inner) = rebuild(idx.tau * aux, sum, omega) {
            let e_inner = entropy_value(&inner, v);
            let gap = idx.tau.abs() - (idx.tau * aux).abs();
            let ok = if gap > STRICT_TAU_GAP {
                e_inner - e > TIGHT
            } else {
                e_inner >= e - TIGHT
            };
            p.expect(
                ok,
                format_args!("entropy[{v}]: decreasing in |tau|"),
                || format!("E(tau*{aux})={e_inner} vs E={e}"),
            );
        }

        // non-decreasing in pi (kappa = 0) and in kappa (pi = 0)
        if idx.kappa == 0.0 {
            if let Some(less) = rebuild(idx.tau, 1.0 - idx.pi * aux, omega) {
                let e_less = entropy_value(&less, v);
                p.expect(
                    e_less <= e + TIGHT,
                    format_args!("entropy[{v}]: non-decreasing in pi"),
                    || format!("E(pi*{aux})={e_less} > E={e}"),
                );
            }
        }
        if idx.pi == 0.0 {
            if let Some(less) = rebuild(idx.tau, 1.0 + idx.kappa * aux, omega) {
                let e_less = entropy_value(&less, v);
                p.expect(
                    e_less <= e + TIGHT,
                    format_args!("entropy[{v}]: non-decreasing in kappa"),
                    || format!("E(kappa*{aux})={e_less} > E={e}"),
                );
            }
        }

        let h = decompose(t, v);
        let partition = h.sum();
        p.expect(
            (partition - 1.0).abs() <= tol.eps(),
            format_args!("decompose[{v}]: partition of unity"),
            || format!("sum={partition}"),
        );
        let unc = h.uncertainty();
        p.expect(
            (unc - e).abs() <= tol.eps(),
            format_args!("decompose[{v}]: a+u+c+n+s = entropy"),
            || format!("a+u+c+n+s={unc} E={e}"),
        );
        p.expect(
            h.values().iter().all(|&x| x >= 0.0),
            format_args!("decompose[{v}]: non-negative"),
            || format!("{:?}", h.values()),
        );
        p.expect(
            h.truth * h.falsity == 0.0 && h.ignorance * h.contradiction == 0.0,
            format_args!("decompose[{v}]: exclusivity"),
            || {
                format!(
                    "t={} f={} u={} c={}",
                    h.truth, h.falsity, h.ignorance, h.contradiction
                )
            },
        );
        let zeros = [h.ignorance, h.contradiction, h.neutrality, h.saturation]
            .iter()
            .filter(|&&x| x == 0.0)
            .count();
        p.expect(
            zeros >= 2,
            format_args!("decompose[{v}]: two of u,c,n,s vanish"),
            || format!("zeros={zeros}"),
        );
        match decompose_by_cases(t, v) {
            Ok(oracle) => {
                let diff = h.max_abs_diff(&oracle);
                p.expect(
                    diff <= TIGHT,
                    format_args!("decompose[{v}]: matches case split"),
                    || format!("max diff {diff:e}"),
                );
            }
            Err(e) => p.expect(false, format_args!("decompose[{v}]: case split"), || {
                e.to_string()
            }),
        }
        let hs = decompose(&t.swapped(), v);
        p.expect(
            hs.truth == h.falsity
                && hs.falsity == h.truth
                && [
                    Component::Ambiguity,
                    Component::Ignorance,
                    Component::Contradiction,
                    Component::Neutrality,
                    Component::Saturation,
                ]
                .iter()
                .all(|&c| hs.get(c) == h.get(c)),
            format_args!("decompose[{v}]: swap symmetry"),
            || format!("{:?} vs {:?}", h.values(), hs.values()),
        );
        if let Err(e) = reduced_partition(t, v, tol) {
            p.expect(
                false,
                format_args!("decompose[{v}]: reduced partition"),
                || e.to_string(),
            );
        } else {
            p.evaluated += 1;
        }
    }
    p
}

fn check_prototypes(report: &mut CheckReport) {
    for v in EntropyVariant::ALL {
        for c in Component::ALL {
            let proto = c.prototype();
            let mut p = Probe::new(&proto);
            let h = decompose(&proto, v);
            let pure = Component::ALL
                .iter()
                .all(|&o| h.get(o) == if o == c { 1.0 } else { 0.0 });
            p.expect(pure, format_args!("prototype[{v}]: {c} is pure"), || {
                format!("{:?}", h.values())
            });
            report.evaluated += p.evaluated;
            report.failures.extend(p.failures);
        }
        for c in [Component::Truth, Component::Falsity] {
            let proto = c.prototype();
            let mut p = Probe::new(&proto);
            let e = entropy_value(&proto, v);
            p.expect(
                e == 0.0,
                format_args!("entropy[{v}]: crisp value gives 0"),
                || format!("E={e}"),
            );
            report.evaluated += p.evaluated;
            report.failures.extend(p.failures);
        }
    }
}

/// Runs the invariant suite. Deterministic for a given config; the sample
/// loop runs in parallel but failures are reported in sample order.
pub fn run_check(config: &CheckConfig) -> CheckReport {
    let mut report = CheckReport {
        samples: config.samples,
        seed: config.seed,
        tolerance: config.tolerance.eps(),
        evaluated: 0,
        failures: Vec::new(),
    };
    check_prototypes(&mut report);
    let per_sample: Vec<(u64, Vec<Failure>)> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let (t, aux) = sample(config.seed, i);
            let p = check_point(&t, aux, config.tolerance);
            (p.evaluated, p.failures)
        })
        .collect();
    for (evaluated, failures) in per_sample {
        report.evaluated += evaluated;
        report.failures.extend(failures);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // reference outputs of SplitMix64 seeded with 0
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
        assert_eq!(SplitMix64::draw_at(0, 2), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn counter_access_matches_stream() {
        let mut rng = SplitMix64::new(42);
        for k in 1..=100 {
            assert_eq!(rng.next_u64(), SplitMix64::draw_at(42, k));
        }
    }

    #[test]
    fn uniforms_in_unit_interval() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..10_000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let config = CheckConfig {
            samples: 2_000,
            seed: 7,
            tolerance: Tolerance::default(),
        };
        let a = run_check(&config);
        let b = run_check(&config);
        assert!(a.passed(), "{a}");
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn failures_are_reported() {
        let mut report = CheckReport {
            samples: 1,
            seed: 0,
            tolerance: 1e-9,
            evaluated: 1,
            failures: vec![],
        };
        let t = NeutrosophicTriple::new(0.1, 0.2, 0.3).unwrap();
        for _ in 0..25 {
            report.failures.push(Failure {
                invariant: "x".into(),
                triple: t,
                observed: "y".into(),
            });
        }
        let text = report.to_string();
        assert!(text.contains("failures: 25"));
        assert!(text.contains("... 5 more"));
        assert!(text.ends_with("result: FAIL"));
    }
}
