//! Running verifiers over every mutually permutable factorisation of a catalog.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{verify_with, ConclusionCache, Theorem, Verdict, VerificationReport, VerifyOptions};
use crate::arith;
use crate::catalog::{builtin_example, sweep_catalog, CatalogEntry, FactorizedFixture, GroupSpec};
use crate::factorization::{find_mp_factorizations, FactorizationOptions};
use crate::group::FiniteGroup;
use crate::Result;

/// Something to sweep: a group, whose mutually permutable factorisations are
/// enumerated, or a fixture, whose own factorisation is checked as well.
#[derive(Clone, Debug)]
pub enum SweepTarget {
    Spec(GroupSpec),
    Group { label: String, group: Arc<FiniteGroup> },
    Fixture(FactorizedFixture),
}

impl SweepTarget {
    /// The builtin catalog up to `max_order`.
    pub fn builtin_catalog(max_order: u64) -> Vec<SweepTarget> {
        sweep_catalog(max_order)
            .into_iter()
            .map(|CatalogEntry { spec, .. }| SweepTarget::Spec(spec))
            .collect()
    }

    pub fn label(&self) -> String {
        match self {
            SweepTarget::Spec(s) => s.to_string(),
            SweepTarget::Group { label, .. } => label.clone(),
            SweepTarget::Fixture(f) => f.label.clone(),
        }
    }

    fn resolve(&self) -> Result<(Arc<FiniteGroup>, Option<FactorizedFixture>)> {
        match self {
            SweepTarget::Spec(GroupSpec::Builtin(id)) => {
                let f = builtin_example(id)?;
                Ok((f.group.clone(), Some(f)))
            }
            SweepTarget::Spec(spec) => Ok((spec.construct()?, None)),
            SweepTarget::Group { group, .. } => Ok((group.clone(), None)),
            SweepTarget::Fixture(f) => Ok((f.group.clone(), Some(f.clone()))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Restrict per-prime theorems to these primes.
    pub primes: Option<Vec<u64>>,
    /// Continue past the first FAIL.
    pub keep_going: bool,
    pub factorizations: FactorizationOptions,
    /// Free-form description copied into the report.
    pub catalog: String,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            primes: None,
            keep_going: false,
            factorizations: FactorizationOptions::default(),
            catalog: "custom".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Skipped {
    pub label: String,
    pub reason: String,
}

/// A FAIL together with the factorisation that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Anomaly {
    pub label: String,
    pub theorem: Theorem,
    pub prime: Option<u64>,
    pub group_generators: Vec<String>,
    pub a_generators: Vec<String>,
    pub b_generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub catalog: String,
    pub theorems: Vec<Theorem>,
    pub groups: usize,
    pub factorizations: usize,
    pub reports: Vec<VerificationReport>,
    pub counts: BTreeMap<String, usize>,
    pub anomalies: Vec<Anomaly>,
    pub skipped: Vec<Skipped>,
    /// Stopped at the first FAIL.
    pub halted: bool,
}

impl SweepReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.counts.get(&v.to_string()).copied().unwrap_or(0)
    }
}

struct Unit {
    target: usize,
    fixture: FactorizedFixture,
    mutually_permutable: Option<bool>,
}

fn gens(g: &[crate::perm::Permutation]) -> Vec<String> {
    g.iter().map(|p| p.to_string()).collect()
}

/// Verifies each theorem on every mutually permutable factorisation of every
/// target, for each relevant prime. Output order does not depend on thread
/// scheduling.
pub fn sweep(targets: &[SweepTarget], theorems: &[Theorem], options: &SweepOptions) -> SweepReport {
    let resolved: Vec<std::result::Result<Vec<Unit>, Skipped>> = targets
        .par_iter()
        .enumerate()
        .map(|(t, target)| {
            let label = target.label();
            let skip = |e: crate::GroupError| Skipped {
                label: label.clone(),
                reason: e.to_string(),
            };
            let (group, own) = target.resolve().map_err(skip)?;
            let whole = group.whole().map_err(skip)?;
            let found = find_mp_factorizations(&whole, options.factorizations).map_err(skip)?;
            let mut units = Vec::new();
            if let Some(f) = &own {
                units.push(Unit {
                    target: t,
                    fixture: FactorizedFixture {
                        label: format!("{label}/fixture"),
                        ..f.clone()
                    },
                    mutually_permutable: None,
                });
            }
            for (k, cert) in found.into_iter().enumerate() {
                if own.as_ref().is_some_and(|f| f.a == cert.a && f.b == cert.b) {
                    continue;
                }
                units.push(Unit {
                    target: t,
                    fixture: FactorizedFixture {
                        label: format!("{label}/f{k}"),
                        group: group.clone(),
                        a: cert.a,
                        b: cert.b,
                        notes: String::new(),
                    },
                    mutually_permutable: Some(true),
                });
            }
            Ok(units)
        })
        .collect();

    let mut skipped = Vec::new();
    let mut units = Vec::new();
    for r in resolved {
        match r {
            Ok(u) => units.extend(u),
            Err(s) => skipped.push(s),
        }
    }
    let caches: Vec<ConclusionCache> = targets.iter().map(|_| ConclusionCache::new()).collect();

    let per_unit: Vec<(Vec<VerificationReport>, Vec<Anomaly>, Vec<Skipped>)> = units
        .par_iter()
        .map(|unit| {
            let mut reports = Vec::new();
            let mut anomalies = Vec::new();
            let mut skips = Vec::new();
            let order = unit.fixture.order();
            for &theorem in theorems {
                let primes: Vec<Option<u64>> = if theorem.needs_prime() {
                    arith::prime_divisors(order)
                        .into_iter()
                        .filter(|p| options.primes.as_ref().is_none_or(|ps| ps.contains(p)))
                        .map(Some)
                        .collect()
                } else {
                    vec![None]
                };
                for p in primes {
                    let opts = VerifyOptions {
                        timing: false,
                        mutually_permutable: unit.mutually_permutable,
                    };
                    match verify_with(theorem, &unit.fixture, p, opts, Some(&caches[unit.target])) {
                        Ok(r) => {
                            if r.verdict == Verdict::Fail {
                                anomalies.push(Anomaly {
                                    label: unit.fixture.label.clone(),
                                    theorem,
                                    prime: p,
                                    group_generators: gens(unit.fixture.group.generators()),
                                    a_generators: gens(&unit.fixture.a.generators()),
                                    b_generators: gens(&unit.fixture.b.generators()),
                                });
                            }
                            reports.push(r);
                        }
                        Err(e) => skips.push(Skipped {
                            label: format!("{} {theorem}", unit.fixture.label),
                            reason: e.to_string(),
                        }),
                    }
                }
            }
            (reports, anomalies, skips)
        })
        .collect();

    let mut reports = Vec::new();
    let mut anomalies = Vec::new();
    let mut halted = false;
    for (r, a, s) in per_unit {
        let fail_at = r.iter().position(|x| x.verdict == Verdict::Fail);
        skipped.extend(s);
        match fail_at {
            Some(i) if !options.keep_going => {
                reports.extend(r.into_iter().take(i + 1));
                anomalies.extend(a.into_iter().take(1));
                halted = true;
                break;
            }
            _ => {
                reports.extend(r);
                anomalies.extend(a);
            }
        }
    }
    let mut counts: BTreeMap<String, usize> = [Verdict::Pass, Verdict::Vacuous, Verdict::Fail]
        .iter()
        .map(|v| (v.to_string(), 0))
        .collect();
    for r in &reports {
        *counts.get_mut(&r.verdict.to_string()).unwrap() += 1;
    }
    SweepReport {
        catalog: options.catalog.clone(),
        theorems: theorems.to_vec(),
        groups: targets.len(),
        factorizations: units.len(),
        reports,
        counts,
        anomalies,
        skipped,
        halted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cyclic;

    #[test]
    fn cyclic_six_all_pass() {
        let targets = [SweepTarget::Group {
            label: "C6".into(),
            group: cyclic(6).unwrap(),
        }];
        let r = sweep(&targets, &[Theorem::C], &SweepOptions::default());
        assert_eq!(r.factorizations, 1);
        assert_eq!(r.reports.len(), 1);
        assert_eq!(r.count(Verdict::Pass), 1);
        assert_eq!(r.counts.values().sum::<usize>(), r.reports.len());
    }

    #[test]
    fn fixture_target_includes_own_factorization() {
        let f = builtin_example("sg300_25").unwrap();
        let targets = [SweepTarget::Fixture(f)];
        let opts = SweepOptions {
            primes: Some(vec![2]),
            ..Default::default()
        };
        let r = sweep(&targets, &[Theorem::A], &opts);
        assert_eq!(r.reports[0].fixture.label, "sg300_25/fixture");
        assert_eq!(r.reports[0].verdict, Verdict::Pass);
        assert_eq!(r.count(Verdict::Fail), 0);
    }

    #[test]
    fn deterministic_output() {
        let targets = SweepTarget::builtin_catalog(12);
        let a = sweep(&targets, &[Theorem::A, Theorem::Cor], &SweepOptions::default());
        let b = sweep(&targets, &[Theorem::A, Theorem::Cor], &SweepOptions::default());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
