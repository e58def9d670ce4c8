//! Permutations of `{1..degree}` and cycle notation.
//!
//! Composition uses the right-action convention: `p * q` applies `p` first and
//! then `q`, so `(p * q).apply(x) == q.apply(p.apply(x))`. Points are 1-based
//! in every public function; images are stored 0-based.

use std::fmt;
use std::ops::Mul;

use crate::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(GroupError::PointOutOfRange { point: img, degree });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(GroupError::NotAPermutation(format!(
                    "point {img} appears twice as an image"
                )));
            }
            out.push(img as u32 - 1);
        }
        Ok(Self { images: out })
    }

    /// 0-based constructor for internal callers that already guarantee bijectivity.
    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Self { images }
    }

    /// Builds a permutation of the given degree from a list of cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(GroupError::PointOutOfRange { point: pt, degree });
                }
                if std::mem::replace(&mut used[pt - 1], true) {
                    return Err(GroupError::NotAPermutation(format!(
                        "point {pt} repeated in cycle notation"
                    )));
                }
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = next as u32 - 1;
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2,3)(4,5)`.
    /// `()` (or an empty string) is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text).map_err(|(column, message)| GroupError::Syntax {
            line: 1,
            column,
            message,
        })?;
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image slice.
    pub(crate) fn images0(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply0(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Self { images: inv }
    }

    pub fn pow(&self, mut e: i64) -> Self {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Commutator `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.inverse()
            .compose_unchecked(&other.inverse())
            .compose_unchecked(self)
            .compose_unchecked(other)
    }

    /// `other⁻¹ self other`.
    pub fn conjugate_by(&self, other: &Self) -> Self {
        other.inverse().compose_unchecked(self).compose_unchecked(other)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Least `n ≥ 1` with `selfⁿ = 1`; the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Smallest moved point, 0-based.
    pub(crate) fn first_moved0(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| v as usize != i)
            .map(|(i, _)| i)
    }

    /// Embeds into a larger degree by shifting every point by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &v) in self.images.iter().enumerate() {
            images[i + offset] = v + offset as u32;
        }
        Self { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Right-action product. Panics on degree mismatch; use [`Permutation::compose`]
    /// for a checked version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

/// Parses cycle notation into point lists. Errors carry a 1-based column.
pub(crate) fn parse_cycles(text: &str) -> std::result::Result<Vec<Vec<usize>>, (usize, String)> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut number: Option<(usize, usize)> = None; // (value, start column)
    let bytes: Vec<char> = text.chars().collect();

    let flush = |number: &mut Option<(usize, usize)>,
                 current: &mut Option<Vec<usize>>|
     -> std::result::Result<(), (usize, String)> {
        if let Some((value, col)) = number.take() {
            match current {
                Some(c) => c.push(value),
                None => return Err((col, "point outside of a cycle".into())),
            }
        }
        Ok(())
    };

    let mut after_comma = false;
    for (idx, &ch) in bytes.iter().enumerate() {
        let col = idx + 1;
        let prev_comma = after_comma;
        if !ch.is_whitespace() {
            after_comma = false;
        }
        match ch {
            '(' => {
                flush(&mut number, &mut current)?;
                if current.is_some() {
                    return Err((col, "nested '('".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut number, &mut current)?;
                match current.take() {
                    Some(c) if c.len() > 1 => cycles.push(c),
                    Some(_) => {}
                    None => return Err((col, "unmatched ')'".into())),
                }
            }
            ',' => {
                let pending = number.is_some();
                flush(&mut number, &mut current)?;
                let last = current.as_ref().and_then(|c| c.last().copied());
                if !pending && (last.is_none() || prev_comma) {
                    return Err((col, "unexpected ','".into()));
                }
                after_comma = true;
                continue;
            }
            c if c.is_ascii_digit() => {
                let d = c as usize - '0' as usize;
                number = Some(match number {
                    Some((v, start)) => (
                        v.checked_mul(10)
                            .and_then(|v| v.checked_add(d))
                            .ok_or((start, "point too large".to_string()))?,
                        start,
                    ),
                    None => (d, col),
                });
            }
            c if c.is_whitespace() => flush(&mut number, &mut current)?,
            other => return Err((col, format!("unexpected character {other:?}"))),
        }
    }
    if current.is_some() {
        return Err((bytes.len() + 1, "unterminated cycle".into()));
    }
    if let Some((_, col)) = number {
        return Err((col, "point outside of a cycle".into()));
    }
    if cycles.iter().flatten().any(|&p| p == 0) {
        return Err((1, "point 0 is not allowed; points are 1-based".into()));
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn compose_right_action() {
        assert_eq!(&p("(1 2)", 3) * &p("(2 3)", 3), p("(1 3 2)", 3));
        assert_eq!(&p("(1 2 3)", 3) * &p("(1 2 3)", 3), p("(1 3 2)", 3));
        let x = p("(1 4 2)(3 5)", 5);
        assert!((&x * &x.inverse()).is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        assert!(matches!(
            p("(1 2)", 2).compose(&p("(1 2)", 3)),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(p("(1 2 3)(4 5)", 5).order(), 6);
        assert_eq!(p("(1 2 3 4)", 4).order(), 4);
    }

    #[test]
    fn notation() {
        assert_eq!(p("( 1 ,2, 3)( 4 5 )", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(p("()", 3).to_string(), "()");
        assert_eq!(p("(3 1 2)", 3).to_string(), "(1 2 3)");
        assert!(Permutation::parse("(1 1 2)", 3).is_err());
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("(0 1)", 3).is_err());
        assert!(Permutation::parse("(1,,2)", 3).is_err());
        assert!(Permutation::parse("(,1 2)", 3).is_err());
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn right_action_matches_apply(a in arb_perm(7), b in arb_perm(7), x in 1usize..=7) {
            prop_assert_eq!((&a * &b).apply(x), b.apply(a.apply(x)));
        }

        #[test]
        fn associativity(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn notation_round_trip(a in arb_perm(9)) {
            prop_assert_eq!(Permutation::parse(&a.to_string(), 9).unwrap(), a.clone());
            prop_assert!(a.pow(a.order() as i64).is_identity());
        }
    }
}
