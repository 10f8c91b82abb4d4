//! Orbits of the double-Glaisher step `T = φ_s ∘ φ_t` (φ_t first).
//!
//! `T` is a composition of two involutions on the finite set of partitions
//! of `n`, hence a permutation of that set: every orbit is a pure cycle
//! through its start. The question is whether, starting from an s-regular
//! t-distinct partition, some iterate lands in the t-regular s-distinct
//! target set before the cycle closes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::enumerate::{visit_restricted, Restriction, DEFAULT_BOUND};
use crate::error::{check_modulus, Result};
use crate::exec::Execution;
use crate::glaisher::phi;
use crate::partition::Partition;
use crate::qseries::gf_theorem9;

/// One application of `φ_s ∘ φ_t`.
pub fn step_t(p: &Partition, s: u64, t: u64) -> Result<Partition> {
    phi(&phi(p, t)?, s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Outcome {
    /// `trajectory[ell]` is the first state in the target set.
    Success { ell: usize },
    /// The state after the last recorded one is `trajectory[entry_index]`.
    Cycle { length: usize, entry_index: usize },
    /// Gave up after `max_iter` steps.
    Exhausted { max_iter: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub s: u64,
    pub t: u64,
    pub start: Partition,
    /// Whether `start` is s-regular and t-distinct.
    pub in_domain: bool,
    /// `trajectory[0]` is `start`; each later entry is `T` of the previous one.
    pub trajectory: Vec<Partition>,
    pub outcome: Outcome,
    /// Indices `i` for which the half step `φ_t(trajectory[i])` is already
    /// t-regular and s-distinct.
    pub half_step_hits: Vec<usize>,
    /// Indices `k ≥ 1` of states before the terminal one that are again
    /// s-regular and t-distinct. Empty means the orbit never passes back
    /// through the source set.
    pub intervening_source_states: Vec<usize>,
}

impl OrbitReport {
    pub fn is_success(&self) -> bool {
        matches!(self.outcome, Outcome::Success { .. })
    }
}

fn in_target(p: &Partition, s: u64, t: u64) -> bool {
    p.is_regular(t).unwrap_or(false) && p.is_distinct(s).unwrap_or(false)
}

fn in_source(p: &Partition, s: u64, t: u64) -> bool {
    p.is_regular(s).unwrap_or(false) && p.is_distinct(t).unwrap_or(false)
}

/// Iterates `T` from `start` until the target set is hit, a state repeats,
/// or `max_iter` steps have been taken.
///
/// Starting outside the source set is allowed; the report flags it via
/// `in_domain`.
pub fn classify_orbit(start: &Partition, s: u64, t: u64, max_iter: usize) -> Result<OrbitReport> {
    check_modulus(s)?;
    check_modulus(t)?;
    let mut trajectory = vec![start.clone()];
    let mut seen: HashMap<Partition, usize> = HashMap::from([(start.clone(), 0)]);
    let mut half_step_hits = Vec::new();

    let mut outcome = if in_target(start, s, t) {
        Some(Outcome::Success { ell: 0 })
    } else {
        None
    };
    let mut i = 0;
    while outcome.is_none() {
        if i == max_iter {
            outcome = Some(Outcome::Exhausted { max_iter });
            break;
        }
        let half = phi(&trajectory[i], t)?;
        if in_target(&half, s, t) {
            half_step_hits.push(i);
        }
        let next = phi(&half, s)?;
        if let Some(&j) = seen.get(&next) {
            outcome = Some(Outcome::Cycle {
                length: i + 1 - j,
                entry_index: j,
            });
            break;
        }
        seen.insert(next.clone(), i + 1);
        let hit = in_target(&next, s, t);
        trajectory.push(next);
        i += 1;
        if hit {
            outcome = Some(Outcome::Success { ell: i });
        }
    }
    let outcome = outcome.expect("loop sets an outcome");

    let last = match outcome {
        Outcome::Success { ell } => ell,
        _ => trajectory.len(),
    };
    let intervening_source_states = (1..last)
        .filter(|&k| in_source(&trajectory[k], s, t))
        .collect();

    Ok(OrbitReport {
        s,
        t,
        start: start.clone(),
        in_domain: in_source(start, s, t),
        trajectory,
        outcome,
        half_step_hits,
        intervening_source_states,
    })
}

/// Cross-check of the zero-step count against the closed-form generating function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroStepCheck {
    pub expected: u64,
    pub observed: u64,
    pub agrees: bool,
}

/// Orbit statistics over every s-regular t-distinct partition of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: u64,
    pub s: u64,
    pub t: u64,
    pub total: u64,
    /// Steps needed → number of starts.
    pub ell_histogram: BTreeMap<usize, u64>,
    /// Cycle length → number of starts that never reach the target.
    pub cycle_histogram: BTreeMap<usize, u64>,
    /// Starts whose orbit had at least one half-step hit.
    pub half_step_hits: u64,
    /// Successes whose orbit passed back through the source set first.
    pub revisits_source: u64,
    pub exhausted: u64,
    /// Starts that never reach the target.
    pub failures: Vec<Partition>,
    /// Present when `s < t`.
    pub zero_step_check: Option<ZeroStepCheck>,
}

impl Census {
    pub fn successes(&self) -> u64 {
        self.ell_histogram.values().sum()
    }
}

/// Classifies every s-regular t-distinct partition of `n`. `n` is capped at
/// the enumeration bound.
pub fn census(n: u64, s: u64, t: u64, max_iter: usize, exec: Execution) -> Result<Census> {
    let restriction = Restriction::regular_distinct(s, t)?;
    let mut starts = Vec::new();
    visit_restricted(n, DEFAULT_BOUND, &restriction, |p| starts.push(p.clone()))?;

    let reports = exec.map(&starts, |p| classify_orbit(p, s, t, max_iter));

    let mut census = Census {
        n,
        s,
        t,
        total: starts.len() as u64,
        ell_histogram: BTreeMap::new(),
        cycle_histogram: BTreeMap::new(),
        half_step_hits: 0,
        revisits_source: 0,
        exhausted: 0,
        failures: Vec::new(),
        zero_step_check: None,
    };
    for report in reports {
        let report = report?;
        if !report.half_step_hits.is_empty() {
            census.half_step_hits += 1;
        }
        match report.outcome {
            Outcome::Success { ell } => {
                *census.ell_histogram.entry(ell).or_insert(0) += 1;
                if !report.intervening_source_states.is_empty() {
                    census.revisits_source += 1;
                }
            }
            Outcome::Cycle { length, .. } => {
                *census.cycle_histogram.entry(length).or_insert(0) += 1;
                census.failures.push(report.start);
            }
            Outcome::Exhausted { .. } => {
                census.exhausted += 1;
                census.failures.push(report.start);
            }
        }
    }

    if s < t {
        let gf = gf_theorem9(s, t, n as usize)?;
        let expected = gf.coeff(n as usize).to_u64().expect("count fits in u64");
        let observed = census.ell_histogram.get(&0).copied().unwrap_or(0);
        census.zero_step_check = Some(ZeroStepCheck {
            expected,
            observed,
            agrees: expected == observed,
        });
    }
    Ok(census)
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}, s = {}, t = {}: {} starting partitions",
            self.n, self.s, self.t, self.total
        )?;
        writeln!(f, "{:>8}  {:>10}", "steps", "count")?;
        for (ell, count) in &self.ell_histogram {
            writeln!(f, "{ell:>8}  {count:>10}")?;
        }
        writeln!(f, "{:>8}  {:>10}", "cycle", "count")?;
        for (len, count) in &self.cycle_histogram {
            writeln!(f, "{len:>8}  {count:>10}")?;
        }
        writeln!(f, "half-step hits: {}", self.half_step_hits)?;
        writeln!(
            f,
            "successes revisiting source set: {}",
            self.revisits_source
        )?;
        if self.exhausted > 0 {
            writeln!(f, "exhausted: {}", self.exhausted)?;
        }
        if let Some(check) = &self.zero_step_check {
            writeln!(
                f,
                "zero-step count {} vs generating function {}: {}",
                check.observed,
                check.expected,
                if check.agrees { "agree" } else { "DISAGREE" }
            )?;
        }
        for p in &self.failures {
            writeln!(f, "failure: {p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, state) in self.trajectory.iter().enumerate() {
            writeln!(f, "{i}: {state}")?;
        }
        match self.outcome {
            Outcome::Success { ell } => writeln!(f, "success after {ell} steps")?,
            Outcome::Cycle {
                length,
                entry_index,
            } => writeln!(f, "cycle of length {length} entered at step {entry_index}")?,
            Outcome::Exhausted { max_iter } => writeln!(f, "no conclusion after {max_iter} steps")?,
        }
        if !self.half_step_hits.is_empty() {
            let hits: Vec<String> = self.half_step_hits.iter().map(|i| i.to_string()).collect();
            writeln!(f, "half-step hits at: {}", hits.join(","))?;
        }
        if !self.intervening_source_states.is_empty() {
            let idx: Vec<String> = self
                .intervening_source_states
                .iter()
                .map(|i| i.to_string())
                .collect();
            writeln!(f, "back in source set at: {}", idx.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn step_examples() {
        assert_eq!(step_t(&p("50"), 6, 10).unwrap(), p("30,5^4"));
        assert_eq!(step_t(&p("30,5^4"), 6, 10).unwrap(), p("18,5^4,3^4"));
        assert_eq!(step_t(&p("108,18^4"), 10, 6).unwrap(), p("30^6"));
    }

    #[test]
    fn chain_of_fifty() {
        let report = classify_orbit(&p("50"), 6, 10, 100).unwrap();
        assert_eq!(report.outcome, Outcome::Success { ell: 2 });
        assert_eq!(report.trajectory, [p("50"), p("30,5^4"), p("18,5^4,3^4")]);
        assert!(report.in_domain);
    }

    #[test]
    fn three_cycle() {
        let report = classify_orbit(&p("108,18^4"), 10, 6, 100).unwrap();
        assert_eq!(
            report.outcome,
            Outcome::Cycle {
                length: 3,
                entry_index: 0
            }
        );
        assert_eq!(report.trajectory, [p("108,18^4"), p("30^6"), p("3^60")]);
        assert!(report.half_step_hits.is_empty());
    }

    #[test]
    fn already_in_target() {
        let report = classify_orbit(&p("7,5,1"), 2, 3, 10).unwrap();
        assert_eq!(report.outcome, Outcome::Success { ell: 0 });
        assert_eq!(report.trajectory.len(), 1);
    }

    #[test]
    fn exhausted_and_out_of_domain() {
        let report = classify_orbit(&p("108,18^4"), 10, 6, 1).unwrap();
        assert_eq!(report.outcome, Outcome::Exhausted { max_iter: 1 });
        let report = classify_orbit(&p("12"), 6, 10, 100).unwrap();
        assert!(!report.in_domain);
    }

    #[test]
    fn census_of_zero() {
        let c = census(0, 2, 3, 10, Execution::Sequential).unwrap();
        assert_eq!(c.total, 1);
        assert_eq!(c.ell_histogram, BTreeMap::from([(0, 1)]));
        assert!(c.zero_step_check.unwrap().agrees);
    }

    #[test]
    fn census_bound() {
        assert!(census(180, 10, 6, 10, Execution::Sequential).is_err());
    }
}
