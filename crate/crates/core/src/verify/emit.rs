//! Human-readable and JSON rendering of reports.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::gap::{CwGapReport, PartOutcome, PropositionReport};
use super::sweep::SweepReport;
use super::{Conclusion, VerificationReport};
use crate::predicates::HypothesisOutcome;
use crate::GroupError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Json,
}

impl FromStr for Format {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        match s.to_ascii_lowercase().as_str() {
            "human" => Ok(Format::Human),
            "json" => Ok(Format::Json),
            other => Err(GroupError::MalformedSpec(format!("unknown format {other:?}"))),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn mark(holds: bool) -> &'static str {
    if holds {
        "ok  "
    } else {
        "FAIL"
    }
}

fn push_hypotheses(out: &mut String, h: &HypothesisOutcome) {
    for c in h.side_conditions.iter().filter(|c| !c.holds) {
        writeln!(out, "  hypothesis failed: {}", c.clause).unwrap();
    }
    for f in &h.failures {
        writeln!(
            out,
            "  hypothesis failed: {} for x = {} in {} (|x^G| = {})",
            f.clause, f.element, f.factor, f.class_size
        )
        .unwrap();
    }
}

fn push_conclusion(out: &mut String, c: &Conclusion) {
    writeln!(out, "  [{}] {}  {}", mark(c.holds), c.name, c.witness).unwrap();
}

fn render_human(r: &VerificationReport) -> String {
    let mut out = String::new();
    let prime = r.prime.map(|p| format!(" p={p}")).unwrap_or_default();
    write!(
        out,
        "{}{prime} on {} (|G| = {}, |A| = {}, |B| = {}): {}",
        r.theorem, r.fixture.label, r.fixture.group_order, r.fixture.a_order, r.fixture.b_order, r.verdict
    )
    .unwrap();
    if let Some(ms) = r.millis {
        write!(out, " in {ms} ms").unwrap();
    }
    out.push('\n');
    push_hypotheses(&mut out, &r.hypotheses);
    for c in &r.conclusions {
        push_conclusion(&mut out, c);
    }
    out
}

pub fn emit_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Human => render_human(report),
    }
}

pub fn emit_cw_report(report: &CwGapReport, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut out = format!(
        "gap check on {} (|G| = {}), p = {}: ",
        report.group_label, report.group_order, report.prime
    );
    if !report.hypotheses.satisfied {
        out.push_str("hypotheses do not hold\n");
        push_hypotheses(&mut out, &report.hypotheses);
        return out;
    }
    out.push_str(if report.claim_fails {
        "hypotheses hold, claim FAILS\n"
    } else {
        "hypotheses hold, claim holds\n"
    });
    if let Some(c) = &report.claim {
        push_conclusion(&mut out, c);
    }
    for c in &report.clauses {
        push_conclusion(&mut out, c);
    }
    out
}

fn push_part(out: &mut String, name: &str, part: &Option<PartOutcome>) {
    let Some(part) = part else { return };
    let status = match part.holds {
        Some(true) => "holds",
        Some(false) => "FAILS",
        None => "not applicable",
    };
    writeln!(out, "  part {name}: {status}  {}", part.witness).unwrap();
    for c in part.hypotheses.iter().filter(|c| !c.holds) {
        writeln!(out, "    unmet: {}", c.clause).unwrap();
    }
}

pub fn emit_proposition_report(report: &PropositionReport, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut out = format!(
        "proposition check (|G| = {}, |N| = {}, p = {}): {}\n",
        report.group_order, report.n_order, report.prime, report.verdict
    );
    for c in report.preconditions.iter().filter(|c| !c.holds) {
        writeln!(out, "  precondition failed: {}", c.clause).unwrap();
    }
    push_part(&mut out, "1", &report.part1);
    push_part(&mut out, "2", &report.part2);
    out
}

pub fn emit_sweep_report(report: &SweepReport, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut out = format!(
        "sweep of {}: {} groups, {} factorisations, {} reports\n",
        report.catalog,
        report.groups,
        report.factorizations,
        report.reports.len()
    );
    for (verdict, n) in &report.counts {
        writeln!(out, "  {verdict}: {n}").unwrap();
    }
    for s in &report.skipped {
        writeln!(out, "  skipped {}: {}", s.label, s.reason).unwrap();
    }
    for a in &report.anomalies {
        writeln!(
            out,
            "  anomaly: {} {}{} A = <{}> B = <{}>",
            a.label,
            a.theorem,
            a.prime.map(|p| format!(" p={p}")).unwrap_or_default(),
            a.a_generators.join(", "),
            a.b_generators.join(", ")
        )
        .unwrap();
    }
    for r in report.reports.iter().filter(|r| r.verdict == super::Verdict::Fail) {
        out.push_str(&render_human(r));
    }
    if report.halted {
        out.push_str("  halted at the first FAIL\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_example;
    use crate::verify::{verify, Theorem};

    #[test]
    fn json_has_schema_keys_in_order() {
        let f = builtin_example("s3_x_s3").unwrap();
        let text = emit_report(&verify(Theorem::A, &f, Some(2)).unwrap(), Format::Json);
        let keys = ["\"theorem\"", "\"prime\"", "\"fixture\"", "\"hypotheses\"", "\"conclusions\"", "\"verdict\"", "\"millis\""];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(text.contains("\"verdict\": \"PASS\""));
    }

    #[test]
    fn vacuous_human_names_clause() {
        let f = builtin_example("a5").unwrap();
        let text = emit_report(&verify(Theorem::A, &f, Some(3)).unwrap(), Format::Human);
        assert!(text.contains("VACUOUS"));
        assert!(text.contains("hypothesis failed: gcd"));
    }
}
