//! Named group families and a small textual spec language for them.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use super::products::{direct_product_of, semidirect_product};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::{GroupError, Result};

fn cycle(from: usize, to: usize, degree: usize) -> Permutation {
    Permutation::from_cycles(degree, &[(from..=to).collect()]).expect("valid cycle")
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(GroupError::MalformedSpec("cyclic group of order 0".into()));
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial(1));
    }
    FiniteGroup::new(n, vec![cycle(1, n, n)])
}

/// Dihedral group of the given ORDER: `dihedral(8)` is the symmetry group of a square.
pub fn dihedral(order: usize) -> Result<Arc<FiniteGroup>> {
    if order == 0 || order % 2 == 1 {
        return Err(GroupError::MalformedSpec(format!(
            "dihedral groups have even order, got {order}"
        )));
    }
    match order / 2 {
        1 => cyclic(2),
        2 => FiniteGroup::from_cycle_strings(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
        n => {
            let reflection: Vec<Vec<usize>> = (2..=n)
                .filter(|&i| i < n + 2 - i)
                .map(|i| vec![i, n + 2 - i])
                .collect();
            let reflection = Permutation::from_cycles(n, &reflection)?;
            FiniteGroup::new(n, vec![cycle(1, n, n), reflection])
        }
    }
}

/// Dicyclic group of order `4n` in its regular representation; order 8 is `Q8`.
///
/// Points `1..=2n` are `a^i`, points `2n+1..=4n` are `a^i x`, with `a` of order
/// `2n`, `x² = a^n` and `a^x = a⁻¹`.
pub fn dicyclic(order: usize) -> Result<Arc<FiniteGroup>> {
    if order == 0 || order % 4 != 0 {
        return Err(GroupError::MalformedSpec(format!(
            "dicyclic groups have order divisible by 4, got {order}"
        )));
    }
    let n = order / 4;
    let m = 2 * n;
    let mut a = vec![0u32; order];
    let mut x = vec![0u32; order];
    for i in 0..m {
        a[i] = ((i + 1) % m) as u32;
        a[m + i] = (m + (i + m - 1) % m) as u32;
        x[i] = (m + i) as u32;
        x[m + i] = ((i + n) % m) as u32;
    }
    FiniteGroup::new(
        order,
        vec![Permutation::from_zero_based(a), Permutation::from_zero_based(x)],
    )
}

/// `Sym(n)` in its natural action.
pub fn symmetric(n: usize) -> Result<Arc<FiniteGroup>> {
    match n {
        0 => Err(GroupError::MalformedSpec("symmetric group of degree 0".into())),
        1 => Ok(FiniteGroup::trivial(1)),
        2 => FiniteGroup::from_cycle_strings(2, &["(1 2)"]),
        _ => FiniteGroup::new(n, vec![cycle(1, 2, n), cycle(1, n, n)]),
    }
}

/// `Alt(n)` in its natural action.
pub fn alternating(n: usize) -> Result<Arc<FiniteGroup>> {
    match n {
        0 => Err(GroupError::MalformedSpec("alternating group of degree 0".into())),
        1 | 2 => Ok(FiniteGroup::trivial(n)),
        3 => FiniteGroup::new(3, vec![cycle(1, 3, 3)]),
        _ => {
            let long = if n % 2 == 1 { cycle(1, n, n) } else { cycle(2, n, n) };
            FiniteGroup::new(n, vec![cycle(1, 3, n), long])
        }
    }
}

/// `[C_m]C_n` where the generator of `C_n` raises the generator of `C_m` to the power `r`.
pub fn semidirect_cyclic(m: usize, n: usize, r: u64) -> Result<Arc<FiniteGroup>> {
    let normal = cyclic(m)?;
    let acting = cyclic(n)?;
    let image = normal.generators()[0].pow(r as i64);
    Ok(semidirect_product(&normal, &acting, &[vec![image]])?.group)
}

/// A description of a group that can be constructed on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Parameter is the group order.
    Dihedral(usize),
    /// Parameter is the group order; `Dicyclic(8)` is the quaternion group.
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Direct(Vec<GroupSpec>),
    SemidirectCyclic { m: usize, n: usize, r: u64 },
    File(PathBuf),
    Builtin(String),
}

impl GroupSpec {
    pub fn construct(&self) -> Result<Arc<FiniteGroup>> {
        match self {
            Self::Cyclic(n) => cyclic(*n),
            Self::Dihedral(n) => dihedral(*n),
            Self::Dicyclic(n) => dicyclic(*n),
            Self::Symmetric(n) => symmetric(*n),
            Self::Alternating(n) => alternating(*n),
            Self::Direct(parts) => {
                let groups = parts.iter().map(|p| p.construct()).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&FiniteGroup> = groups.iter().map(|g| g.as_ref()).collect();
                Ok(direct_product_of(&refs)?.group)
            }
            Self::SemidirectCyclic { m, n, r } => semidirect_cyclic(*m, *n, *r),
            Self::File(path) => super::file::read_group_file(path),
            Self::Builtin(id) => Ok(super::fixtures::builtin_example(id)?.group),
        }
    }

    /// The order this spec must produce, when it has a closed form.
    pub fn closed_form_order(&self) -> Option<u128> {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            Self::Cyclic(n) | Self::Dihedral(n) | Self::Dicyclic(n) => Some(*n as u128),
            Self::Symmetric(n) => Some(factorial(*n)),
            Self::Alternating(n) => Some(if *n < 2 { 1 } else { factorial(*n) / 2 }),
            Self::Direct(parts) => parts.iter().map(|p| p.closed_form_order()).product(),
            Self::SemidirectCyclic { m, n, .. } => Some((*m * *n) as u128),
            Self::File(_) | Self::Builtin(_) => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "cyclic({n})"),
            Self::Dihedral(n) => write!(f, "dihedral({n})"),
            Self::Dicyclic(n) => write!(f, "dicyclic({n})"),
            Self::Symmetric(n) => write!(f, "symmetric({n})"),
            Self::Alternating(n) => write!(f, "alternating({n})"),
            Self::Direct(parts) => {
                f.write_str("direct(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Self::SemidirectCyclic { m, n, r } => write!(f, "semidirect_cyclic({m}, {n}, {r})"),
            Self::File(p) => write!(f, "file({})", p.display()),
            Self::Builtin(id) => write!(f, "builtin({id})"),
        }
    }
}

/// Accepts `cyclic(4)`, `dihedral(8)`, `dicyclic(12)`, `quaternion(8)`,
/// `symmetric(4)`, `alternating(5)`, `direct(a, b, ...)`,
/// `semidirect_cyclic(m, n, r)`, `file(PATH)`, `builtin(ID)`, and the
/// shorthands `C4`, `D8`, `Q8`, `S4`, `A5` (dihedral and quaternion by order).
impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { text: s, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> GroupError {
        GroupError::MalformedSpec(format!("{what} at offset {} in {:?}", self.pos, self.text))
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        let start = self.pos;
        self.pos += len;
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<u64> {
        let word = self.ident().to_string();
        word.parse().map_err(|_| {
            GroupError::MalformedSpec(format!("expected a number, found {word:?} in {:?}", self.text))
        })
    }

    /// Raw text up to the matching close parenthesis.
    fn raw_argument(&mut self) -> Result<String> {
        self.eat('(')?;
        let mut depth = 0usize;
        let end = self
            .rest()
            .char_indices()
            .find(|&(_, c)| match c {
                '(' => {
                    depth += 1;
                    false
                }
                ')' if depth == 0 => true,
                ')' => {
                    depth -= 1;
                    false
                }
                _ => false,
            })
            .map(|(i, _)| i)
            .ok_or_else(|| self.error("expected ')'"))?;
        let arg = self.rest()[..end].trim().to_string();
        self.pos += end + 1;
        Ok(arg)
    }

    fn numbers(&mut self) -> Result<Vec<u64>> {
        self.eat('(')?;
        let mut out = vec![self.number()?];
        loop {
            self.skip_ws();
            if self.rest().starts_with(',') {
                self.pos += 1;
                out.push(self.number()?);
            } else {
                self.eat(')')?;
                return Ok(out);
            }
        }
    }

    fn one(&mut self) -> Result<usize> {
        match self.numbers()?.as_slice() {
            [n] => Ok(*n as usize),
            _ => Err(self.error("expected one parameter")),
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let word = self.ident().to_string();
        let short = |prefix: char| -> Option<usize> {
            word.strip_prefix(prefix)
                .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|d| d.parse().ok())
        };
        if let Some(n) = short('C') {
            return Ok(GroupSpec::Cyclic(n));
        }
        if let Some(n) = short('D') {
            return Ok(GroupSpec::Dihedral(n));
        }
        if let Some(n) = short('Q') {
            return Ok(GroupSpec::Dicyclic(n));
        }
        if let Some(n) = short('S') {
            return Ok(GroupSpec::Symmetric(n));
        }
        if let Some(n) = short('A') {
            return Ok(GroupSpec::Alternating(n));
        }
        match word.as_str() {
            "cyclic" => Ok(GroupSpec::Cyclic(self.one()?)),
            "dihedral" => Ok(GroupSpec::Dihedral(self.one()?)),
            "dicyclic" | "quaternion" => Ok(GroupSpec::Dicyclic(self.one()?)),
            "symmetric" => Ok(GroupSpec::Symmetric(self.one()?)),
            "alternating" => Ok(GroupSpec::Alternating(self.one()?)),
            "semidirect_cyclic" => match self.numbers()?.as_slice() {
                [m, n, r] => Ok(GroupSpec::SemidirectCyclic {
                    m: *m as usize,
                    n: *n as usize,
                    r: *r,
                }),
                _ => Err(self.error("semidirect_cyclic takes (m, n, r)")),
            },
            "direct" => {
                self.eat('(')?;
                let mut parts = vec![self.spec()?];
                loop {
                    self.skip_ws();
                    if self.rest().starts_with(',') {
                        self.pos += 1;
                        parts.push(self.spec()?);
                    } else {
                        self.eat(')')?;
                        return Ok(GroupSpec::Direct(parts));
                    }
                }
            }
            "file" => Ok(GroupSpec::File(PathBuf::from(self.raw_argument()?))),
            "builtin" => Ok(GroupSpec::Builtin(self.raw_argument()?)),
            "" => Err(self.error("expected a group spec")),
            other => Err(GroupError::MalformedSpec(format!("unknown group kind {other:?}"))),
        }
    }
}
