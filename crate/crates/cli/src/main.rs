//! `grouplab`: construct, analyse and factorise permutation groups, and check
//! class-size theorems on factorised groups.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use grouplab::arith;
use grouplab::catalog::{builtin_example, fixture_text, group_text, read_fixture_file, read_group_file, FactorizedFixture, GroupSpec, BUILTIN_IDS};
use grouplab::factorization::{find_factorizations, find_mp_factorizations, FactorizationOptions};
use grouplab::predicates::{is_nilpotent, is_p_nilpotent, is_p_soluble, is_p_supersoluble, is_soluble, is_supersoluble};
use grouplab::structure::{center, class_size_multiset, derived_subgroup, fitting, frattini, p_core, socle};
use grouplab::verify::{
    check_cw_gap, emit_cw_report, emit_report, emit_sweep_report, sweep, verify_with, Format, SweepOptions, SweepTarget,
    Theorem, Verdict, VerifyOptions,
};
use grouplab::{FiniteGroup, SubgroupRef};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "grouplab", version, about = "Finite permutation groups and square-free class sizes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and write it as a generator file.
    Construct {
        /// cyclic, dihedral, dicyclic, quaternion, symmetric, alternating,
        /// semidirect-cyclic, direct, spec or builtin.
        #[arg(long)]
        kind: String,
        /// Parameters; repeat or separate with commas. `direct` takes specs.
        #[arg(long = "param", required = true)]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print order, class sizes, characteristic subgroups and predicates.
    Analyze {
        /// Generator file, `builtin:ID` or a group spec.
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// List factorisations G = AB.
    Factorize {
        /// Generator file, `builtin:ID` or a group spec.
        group: String,
        /// Only mutually permutable factorisations.
        #[arg(long)]
        mutually_permutable: bool,
        /// Exclude factorisations with a factor equal to G.
        #[arg(long)]
        proper: bool,
        /// One pair per conjugacy orbit.
        #[arg(long)]
        dedupe: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check one theorem on a factorised group.
    Verify {
        /// KNOCHE, A, B, C, D, E, COR, ELEM or PNILP.
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        p: Option<u64>,
        /// Fixture file or `builtin:ID`.
        #[arg(long)]
        fixture: String,
        #[arg(long)]
        json: bool,
        /// Record the running time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate the p^2 class-size bound for |G/O_p(G)|_p.
    CwGap {
        /// Generator file, `builtin:ID` or a group spec.
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Verify theorems on every mutually permutable factorisation of a catalog.
    Sweep {
        #[arg(long, default_value = "builtin")]
        catalog: String,
        #[arg(long, default_value_t = 100)]
        max_order: u64,
        /// Comma-separated theorem ids.
        #[arg(long, value_delimiter = ',', default_value = "A,B,C,D,E,COR")]
        theorems: Vec<Theorem>,
        /// Restrict per-prime theorems to these primes.
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<u64>>,
        #[arg(long)]
        keep_going: bool,
        /// Write the full JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a bundled example as a fixture file.
    Example {
        /// Example id; omit to list the available ids.
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_group(arg: &str) -> Result<(String, Arc<FiniteGroup>)> {
    if let Some(id) = arg.strip_prefix("builtin:") {
        return Ok((id.to_string(), builtin_example(id)?.group));
    }
    let path = Path::new(arg);
    if path.exists() {
        return Ok((arg.to_string(), read_group_file(path)?));
    }
    let spec: GroupSpec = arg
        .parse()
        .with_context(|| format!("{arg:?} is neither a file, builtin:ID nor a group spec"))?;
    Ok((spec.to_string(), spec.construct()?))
}

fn load_fixture(arg: &str) -> Result<FactorizedFixture> {
    if let Some(id) = arg.strip_prefix("builtin:") {
        return Ok(builtin_example(id)?);
    }
    if Path::new(arg).exists() {
        return Ok(read_fixture_file(arg)?);
    }
    let (label, group) = load_group(arg)?;
    Ok(FactorizedFixture::whole(&label, group, "")?)
}

fn construct(kind: &str, params: &[String], out: Option<&Path>) -> Result<()> {
    let params: Vec<&str> = params.iter().flat_map(|p| split_params(p)).collect();
    if kind == "builtin" {
        let [id] = params.as_slice() else { bail!("builtin takes exactly one id") };
        let f = builtin_example(id)?;
        return output(&fixture_text(&f), out);
    }
    let text = match kind {
        "spec" => params.join(", "),
        other => format!("{}({})", other.replace('-', "_"), params.join(", ")),
    };
    let spec: GroupSpec = text.parse()?;
    let group = spec.construct()?;
    output(&group_text(&group), out)?;
    if let Some(path) = out {
        println!("wrote {spec} (|G| = {}) to {}", group.order(), path.display());
    }
    Ok(())
}

/// Splits on top-level commas so `direct(C2, C3)` stays whole.
fn split_params(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

fn subgroup_json(s: &SubgroupRef) -> Value {
    json!({
        "order": s.order(),
        "generators": s.generators().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

fn analyze(arg: &str, as_json: bool) -> Result<()> {
    let (label, g) = load_group(arg)?;
    let whole = g.whole()?;
    let mut sizes: BTreeMap<u64, usize> = BTreeMap::new();
    for s in class_size_multiset(&whole) {
        *sizes.entry(s).or_default() += 1;
    }
    let primes = arith::prime_divisors(g.order_u64());
    let mut subgroups = BTreeMap::new();
    subgroups.insert("center", center(&whole));
    subgroups.insert("derived", derived_subgroup(&whole));
    subgroups.insert("frattini", frattini(&whole)?);
    subgroups.insert("fitting", fitting(&whole));
    subgroups.insert("socle", socle(&whole));
    let mut cores = BTreeMap::new();
    let mut per_prime = BTreeMap::new();
    for &p in &primes {
        cores.insert(p.to_string(), subgroup_json(&p_core(&whole, p)?));
        per_prime.insert(
            p.to_string(),
            json!({
                "p_nilpotent": is_p_nilpotent(&whole, p)?,
                "p_soluble": is_p_soluble(&whole, p)?,
                "p_supersoluble": is_p_supersoluble(&whole, p)?,
            }),
        );
    }
    let predicates = json!({
        "abelian": whole.is_abelian(),
        "nilpotent": is_nilpotent(&whole),
        "supersoluble": is_supersoluble(&whole),
        "soluble": is_soluble(&whole),
    });
    if as_json {
        let report = json!({
            "label": label,
            "order": g.order_u64(),
            "degree": g.degree(),
            "class_sizes": sizes.iter().map(|(s, n)| (s.to_string(), *n)).collect::<BTreeMap<_, _>>(),
            "subgroups": subgroups.iter().map(|(k, s)| (*k, subgroup_json(s))).collect::<BTreeMap<_, _>>(),
            "o_p": cores,
            "predicates": predicates,
            "per_prime": per_prime,
        });
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(());
    }
    println!("{label}: order {}, degree {}", g.order(), g.degree());
    let multiset: Vec<String> = sizes.iter().map(|(s, n)| format!("{s}^{n}")).collect();
    println!("class sizes: {}", multiset.join(" "));
    for (name, s) in &subgroups {
        println!("{name:<9} order {:>5}  <{}>", s.order(), gens(s));
    }
    for (p, core) in &cores {
        println!("{:<9} order {:>5}", format!("O_{p}"), core["order"].as_u64().unwrap_or(0));
    }
    println!("predicates:");
    for (name, v) in predicates.as_object().unwrap() {
        println!("  {name:<16} {v}");
    }
    for (p, preds) in &per_prime {
        for (name, v) in preds.as_object().unwrap() {
            println!("  {:<16} {v}", name.replacen("p_", &format!("{p}-"), 1));
        }
    }
    Ok(())
}

fn gens(s: &SubgroupRef) -> String {
    s.generators().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn factorize(arg: &str, mp_only: bool, proper: bool, dedupe: bool, as_json: bool) -> Result<()> {
    let (label, g) = load_group(arg)?;
    let whole = g.whole()?;
    let options = FactorizationOptions {
        proper,
        include_whole: !proper,
        dedupe_conjugates: dedupe,
    };
    let found = if mp_only {
        find_mp_factorizations(&whole, options)?
    } else {
        find_factorizations(&whole, options)?
    };
    if as_json {
        let rows: Vec<Value> = found
            .iter()
            .map(|c| {
                json!({
                    "a": subgroup_json(&c.a),
                    "b": subgroup_json(&c.b),
                    "mutually_permutable": c.mutually_permutable,
                })
            })
            .collect();
        let report = json!({ "label": label, "order": g.order_u64(), "factorizations": rows });
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(());
    }
    println!("{label} (|G| = {}): {} factorisations", g.order(), found.len());
    for c in &found {
        println!(
            "|A| = {:>4}  |B| = {:>4}  {}  A = <{}>  B = <{}>",
            c.a_order,
            c.b_order,
            if c.mutually_permutable { "mp " } else { "   " },
            gens(&c.a),
            gens(&c.b)
        );
    }
    Ok(())
}

fn format(as_json: bool) -> Format {
    if as_json {
        Format::Json
    } else {
        Format::Human
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct { kind, params, out } => construct(&kind, &params, out.as_deref())?,
        Command::Analyze { group, json } => analyze(&group, json)?,
        Command::Factorize {
            group,
            mutually_permutable,
            proper,
            dedupe,
            json,
        } => factorize(&group, mutually_permutable, proper, dedupe, json)?,
        Command::Verify {
            theorem,
            p,
            fixture,
            json,
            timing,
        } => {
            let f = load_fixture(&fixture)?;
            let options = VerifyOptions {
                timing,
                mutually_permutable: None,
            };
            let report = verify_with(theorem, &f, p, options, None)?;
            print!("{}", emit_report(&report, format(json)));
            if report.verdict == Verdict::Fail {
                return Ok(ExitCode::from(2));
            }
        }
        Command::CwGap { group, p, json } => {
            let (label, g) = load_group(&group)?;
            print!("{}", emit_cw_report(&check_cw_gap(&g, p, &label)?, format(json)));
        }
        Command::Sweep {
            catalog,
            max_order,
            theorems,
            p,
            keep_going,
            json,
        } => {
            if catalog != "builtin" {
                bail!("unknown catalog {catalog:?}; only `builtin` is available");
            }
            let options = SweepOptions {
                primes: p,
                keep_going,
                catalog: format!("builtin <= {max_order}"),
                ..Default::default()
            };
            let report = sweep(&SweepTarget::builtin_catalog(max_order), &theorems, &options);
            print!("{}", emit_sweep_report(&report, Format::Human));
            if let Some(path) = json {
                output(&emit_sweep_report(&report, Format::Json), Some(&path))?;
            }
            if report.count(Verdict::Fail) > 0 {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Example { id: None, .. } => {
            for id in BUILTIN_IDS {
                println!("{id}");
            }
            println!("dihedral_chain(p1,...,pn)");
        }
        Command::Example { id: Some(id), out } => output(&fixture_text(&builtin_example(&id)?), out.as_deref())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
