//! Theorem verifiers, the gap and proposition checkers, sweeps and report output.

mod conclusions;
mod emit;
mod gap;
mod sweep;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::arith;
use crate::catalog::FactorizedFixture;
use crate::predicates::{check_hypothesis_with, HypothesisOptions, HypothesisOutcome, HypothesisVariant};
use crate::structure::sylow_subgroup;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

pub use conclusions::Conclusion;
pub use emit::{emit_cw_report, emit_proposition_report, emit_report, emit_sweep_report, Format};
pub use gap::{check_cw_gap, check_proposition, CwGapReport, PartOutcome, PropositionReport};
pub use sweep::{sweep, SweepOptions, SweepReport, SweepTarget};

/// The verifiable results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    Knoche,
    A,
    B,
    C,
    D,
    E,
    Cor,
    Elem,
    PNilp,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Knoche,
        Theorem::A,
        Theorem::B,
        Theorem::C,
        Theorem::D,
        Theorem::E,
        Theorem::Cor,
        Theorem::Elem,
        Theorem::PNilp,
    ];

    /// Stable identifier used in reports.
    pub fn id(&self) -> &'static str {
        match self {
            Theorem::Knoche => "KNOCHE",
            Theorem::A => "THM_A",
            Theorem::B => "THM_B",
            Theorem::C => "THM_C",
            Theorem::D => "THM_D",
            Theorem::E => "THM_E",
            Theorem::Cor => "COR",
            Theorem::Elem => "THM_ELEM",
            Theorem::PNilp => "COR_PNILP",
        }
    }

    /// Whether the statement is about one prime `p`.
    pub fn needs_prime(&self) -> bool {
        matches!(self, Theorem::Knoche | Theorem::A | Theorem::B | Theorem::Elem | Theorem::PNilp)
    }

    fn variant(&self, p: Option<u64>) -> HypothesisVariant {
        let p = || p.expect("prime checked by caller");
        match self {
            Theorem::Knoche => HypothesisVariant::Knoche(p()),
            Theorem::A => HypothesisVariant::ThmA(p()),
            Theorem::B => HypothesisVariant::ThmB(p()),
            Theorem::C => HypothesisVariant::ThmCAllP,
            Theorem::D => HypothesisVariant::ThmDSqFree,
            Theorem::E => HypothesisVariant::ThmEAllPReg,
            Theorem::Cor => HypothesisVariant::CorSqFreeAll,
            Theorem::Elem => HypothesisVariant::Elementary(p()),
            Theorem::PNilp => HypothesisVariant::PNilpotent(p()),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        let key = up.strip_prefix("THM_").unwrap_or(&up);
        Ok(match key {
            "KNOCHE" => Theorem::Knoche,
            "A" => Theorem::A,
            "B" => Theorem::B,
            "C" => Theorem::C,
            "D" => Theorem::D,
            "E" => Theorem::E,
            "COR" => Theorem::Cor,
            "ELEM" => Theorem::Elem,
            "PNILP" | "COR_PNILP" => Theorem::PNilp,
            _ => return Err(GroupError::MalformedSpec(format!("unknown theorem id {s:?}"))),
        })
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "VACUOUS")]
    Vacuous,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Vacuous => "VACUOUS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureInfo {
    pub label: String,
    pub group_order: u64,
    pub a_order: u64,
    pub b_order: u64,
}

impl FixtureInfo {
    pub fn of(f: &FactorizedFixture) -> Self {
        Self {
            label: f.label.clone(),
            group_order: f.order(),
            a_order: f.a.order(),
            b_order: f.b.order(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub prime: Option<u64>,
    pub fixture: FixtureInfo,
    pub hypotheses: HypothesisOutcome,
    pub conclusions: Vec<Conclusion>,
    pub verdict: Verdict,
    /// Wall-clock time; only recorded on request so reports stay reproducible.
    pub millis: Option<u64>,
}

impl VerificationReport {
    pub fn conclusion(&self, name: &str) -> Option<&Conclusion> {
        self.conclusions.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Fill in `millis`.
    pub timing: bool,
    /// Mutual permutability of the fixture, when already known.
    pub mutually_permutable: Option<bool>,
}

type CacheKey = (Theorem, Option<u64>);

/// Conclusions depend only on the group, so a sweep evaluates them once per
/// group and theorem.
#[derive(Default)]
pub struct ConclusionCache {
    map: Mutex<HashMap<CacheKey, Vec<Conclusion>>>,
}

impl ConclusionCache {
    pub fn new() -> Self {
        Self::default()
    }
}

fn evaluate_conclusions(g: &SubgroupRef, theorem: Theorem, p: Option<u64>) -> Result<Vec<Conclusion>> {
    Ok(match theorem {
        Theorem::Knoche => conclusions::p_group_derived_conclusions(g, p.unwrap()),
        Theorem::A => {
            let p = p.unwrap();
            let mut sol = conclusions::soluble(g);
            if let serde_json::Value::Object(m) = &mut sol.witness {
                m.insert("relies_on_cfsg".into(), true.into());
            }
            vec![
                sol,
                conclusions::p_nilpotent(g, p)?,
                conclusions::quotient_sylow_elementary(g, p)?,
            ]
        }
        Theorem::B => vec![conclusions::p_supersoluble(g, p.unwrap())],
        Theorem::C => vec![
            conclusions::supersoluble(g),
            conclusions::fitting_quotient_elementary(g)?,
        ],
        Theorem::D => conclusions::derived_conclusions(g)?,
        Theorem::E => vec![conclusions::fitting_quotient_bounded(g)],
        Theorem::Cor => {
            let mut out = vec![
                conclusions::supersoluble(g),
                conclusions::fitting_quotient_elementary(g)?,
            ];
            out.extend(conclusions::derived_conclusions(g)?);
            out.push(conclusions::fitting_quotient_bounded(g));
            out
        }
        Theorem::Elem => vec![conclusions::quotient_sylow_elementary(g, p.unwrap())?],
        Theorem::PNilp => {
            let p = p.unwrap();
            conclusions::p_group_derived_conclusions(&sylow_subgroup(g, p)?, p)
        }
    })
}

fn resolve_prime(theorem: Theorem, fixture: &FactorizedFixture, p: Option<u64>) -> Result<Option<u64>> {
    if !theorem.needs_prime() {
        return Ok(None);
    }
    if let Some(p) = p {
        arith::require_prime(p)?;
        return Ok(Some(p));
    }
    match (theorem, arith::prime_power_base(fixture.order())) {
        (Theorem::Knoche, Some(p)) => Ok(Some(p)),
        _ => Err(GroupError::MalformedSpec(format!("theorem {theorem} needs a prime"))),
    }
}

/// Checks the hypotheses of `theorem` on `fixture` and, if they hold,
/// evaluates every conclusion.
pub fn verify(theorem: Theorem, fixture: &FactorizedFixture, p: Option<u64>) -> Result<VerificationReport> {
    verify_with(theorem, fixture, p, VerifyOptions::default(), None)
}

pub fn verify_with(
    theorem: Theorem,
    fixture: &FactorizedFixture,
    p: Option<u64>,
    options: VerifyOptions,
    cache: Option<&ConclusionCache>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let p = resolve_prime(theorem, fixture, p)?;
    let hypotheses = check_hypothesis_with(
        fixture,
        theorem.variant(p),
        HypothesisOptions {
            mutually_permutable: options.mutually_permutable,
        },
    )?;
    let conclusions = if hypotheses.satisfied {
        let cached = cache.and_then(|c| c.map.lock().unwrap().get(&(theorem, p)).cloned());
        match cached {
            Some(c) => c,
            None => {
                let c = evaluate_conclusions(&fixture.group.whole()?, theorem, p)?;
                if let Some(cache) = cache {
                    cache.map.lock().unwrap().insert((theorem, p), c.clone());
                }
                c
            }
        }
    } else {
        Vec::new()
    };
    let verdict = if !hypotheses.satisfied {
        Verdict::Vacuous
    } else if conclusions.iter().all(|c| c.holds) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        theorem,
        prime: p,
        fixture: FixtureInfo::of(fixture),
        hypotheses,
        conclusions,
        verdict,
        millis: options.timing.then(|| start.elapsed().as_millis() as u64),
    })
}
