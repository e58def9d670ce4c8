//! Reading and writing generator files.
//!
//! ```text
//! # grouplab-gens v1
//! degree 4
//! gen (1 2)
//! gen (1 2 3 4)
//! subgroup A
//! gen (1 2 3)
//! gen (1 2)(3 4)
//! subgroup B
//! gen (1 2 3 4)
//! gen (1 3)
//! ```
//!
//! `#` starts a comment anywhere after the header. The `subgroup` sections are
//! only meaningful for fixture files.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use super::fixtures::FactorizedFixture;
use crate::group::FiniteGroup;
use crate::perm::{parse_cycles, Permutation};
use crate::{GroupError, Result};

pub const HEADER: &str = "# grouplab-gens v1";

/// Parsed contents of a generator file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub subgroup_a: Option<Vec<Permutation>>,
    pub subgroup_b: Option<Vec<Permutation>>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> GroupError {
    GroupError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_group_text(text: &str) -> Result<GroupFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, l)) if l.trim_end() == HEADER => {}
        _ => return Err(syntax(1, 1, format!("expected header {HEADER:?}"))),
    }
    let degree = match lines.next() {
        Some((n, l)) => {
            let body = l.split('#').next().unwrap_or("").trim();
            let value = body
                .strip_prefix("degree")
                .map(str::trim)
                .ok_or_else(|| syntax(n, 1, "expected `degree <n>`"))?;
            let degree: usize = value
                .parse()
                .map_err(|_| syntax(n, l.find(value).unwrap_or(0) + 1, "invalid degree"))?;
            if degree == 0 {
                return Err(syntax(n, 1, "degree must be positive"));
            }
            degree
        }
        None => return Err(syntax(2, 1, "missing `degree <n>` line")),
    };

    #[derive(Clone, Copy)]
    enum Section {
        Group,
        A,
        B,
    }
    let mut section = Section::Group;
    let mut out = GroupFile {
        degree,
        generators: Vec::new(),
        subgroup_a: None,
        subgroup_b: None,
    };
    for (n, line) in lines {
        let body = line.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        if let Some(rest) = trimmed.strip_prefix("gen") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) && !rest.starts_with('(') {
                return Err(syntax(n, indent + 1, format!("unknown directive {trimmed:?}")));
            }
            let offset = indent + 3;
            let cycles = parse_cycles(rest).map_err(|(col, msg)| syntax(n, offset + col, msg))?;
            let perm = Permutation::from_cycles(degree, &cycles).map_err(|e| syntax(n, offset + 1, e.to_string()))?;
            match section {
                Section::Group => out.generators.push(perm),
                Section::A => out.subgroup_a.get_or_insert_with(Vec::new).push(perm),
                Section::B => out.subgroup_b.get_or_insert_with(Vec::new).push(perm),
            }
        } else if let Some(rest) = trimmed.strip_prefix("subgroup") {
            section = match rest.trim() {
                "A" => {
                    out.subgroup_a.get_or_insert_with(Vec::new);
                    Section::A
                }
                "B" => {
                    out.subgroup_b.get_or_insert_with(Vec::new);
                    Section::B
                }
                other => return Err(syntax(n, indent + 1, format!("unknown subgroup {other:?}"))),
            };
        } else {
            return Err(syntax(n, indent + 1, format!("unknown directive {trimmed:?}")));
        }
    }
    Ok(out)
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| GroupError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| GroupError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Group generated by the file's top-level `gen` lines.
pub fn read_group_file(path: impl AsRef<Path>) -> Result<Arc<FiniteGroup>> {
    let parsed = parse_group_text(&read_text(path.as_ref())?)?;
    FiniteGroup::new(parsed.degree, parsed.generators)
}

/// Fixture from a file; missing subgroup sections default to the whole group.
pub fn read_fixture_file(path: impl AsRef<Path>) -> Result<FactorizedFixture> {
    let path = path.as_ref();
    let parsed = parse_group_text(&read_text(path)?)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".into());
    let group = FiniteGroup::new(parsed.degree, parsed.generators)?;
    let a = parsed.subgroup_a.unwrap_or_else(|| group.generators().to_vec());
    let b = parsed.subgroup_b.unwrap_or_else(|| group.generators().to_vec());
    FactorizedFixture::new(&label, group, &a, &b, &format!("read from {}", path.display()))
}

fn push_gens(out: &mut String, gens: &[Permutation]) {
    for g in gens {
        writeln!(out, "gen {g}").unwrap();
    }
}

pub fn group_text(g: &FiniteGroup) -> String {
    let mut out = format!("{HEADER}\ndegree {}\n", g.degree());
    push_gens(&mut out, g.generators());
    out
}

pub fn fixture_text(f: &FactorizedFixture) -> String {
    let mut out = format!("{HEADER}\ndegree {}\n# {}\n", f.group.degree(), f.label);
    push_gens(&mut out, f.group.generators());
    out.push_str("subgroup A\n");
    push_gens(&mut out, &f.a.generators());
    out.push_str("subgroup B\n");
    push_gens(&mut out, &f.b.generators());
    out
}

pub fn write_group_file(g: &FiniteGroup, path: impl AsRef<Path>) -> Result<()> {
    write_text(path.as_ref(), &group_text(g))
}

pub fn write_fixture_file(f: &FactorizedFixture, path: impl AsRef<Path>) -> Result<()> {
    write_text(path.as_ref(), &fixture_text(f))
}
