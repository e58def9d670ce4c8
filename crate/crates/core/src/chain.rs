//! Deterministic Schreier–Sims.
//!
//! Each level stores a base point, the strong generators fixing all earlier
//! base points, and an explicit transversal of the basic orbit. New base
//! points are always the smallest point moved by the element that forced the
//! new level, so the chain depends only on the input generator list.

use crate::perm::Permutation;
use crate::{GroupError, Result};

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[pt] = u` with `base^u = pt`, stored with its inverse.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut l = Self {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        l.recompute_orbit(degree);
        l
    }

    fn recompute_orbit(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.base] = Some((id.clone(), id));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let pt = self.orbit[i];
            for s in &self.gens {
                let img = s.apply0(pt);
                if self.transversal[img].is_none() {
                    let u = self.transversal[pt].as_ref().unwrap().0.compose_unchecked(s);
                    let inv = u.inverse();
                    self.transversal[img] = Some((u, inv));
                    self.orbit.push(img);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs Schreier–Sims on `generators` (all of degree `degree`).
    pub fn build(degree: usize, generators: &[Permutation], degree_cap: usize) -> Result<Self> {
        if degree > degree_cap {
            return Err(GroupError::DegreeCap {
                degree,
                cap: degree_cap,
            });
        }
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();

        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply0(b) == b) {
                base.push(g.first_moved0().unwrap());
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(b, degree)).collect();
        for (i, level) in levels.iter_mut().enumerate() {
            level.gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g.apply0(b) == b))
                .cloned()
                .collect();
            level.recompute_orbit(degree);
        }
        let mut chain = Self { degree, levels };

        let mut i = chain.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match chain.find_failing_schreier_generator(lvl) {
                Some((residue, stop)) => {
                    if stop == chain.levels.len() {
                        let b = residue
                            .first_moved0()
                            .expect("non-identity residue moves a point");
                        chain.levels.push(Level::new(b, degree));
                    }
                    for l in (lvl + 1)..=stop {
                        chain.levels[l].gens.push(residue.clone());
                        chain.levels[l].recompute_orbit(degree);
                    }
                    i = stop + 1;
                }
                None => i -= 1,
            }
        }
        chain.order_checked()?;
        Ok(chain)
    }

    /// Tests every Schreier generator at `lvl`; returns the first non-trivial
    /// residue and the level where its sift stopped.
    fn find_failing_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &beta in &level.orbit {
            let (u_beta, _) = level.transversal[beta].as_ref().unwrap();
            for s in &level.gens {
                let img = s.apply0(beta);
                let (_, u_img_inv) = level.transversal[img].as_ref().unwrap();
                let h = u_beta.compose_unchecked(s).compose_unchecked(u_img_inv);
                let (res, stop) = self.sift_from(h, lvl + 1);
                if !res.is_identity() {
                    return Some((res, stop));
                }
            }
        }
        None
    }

    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply0(level.base);
            match &level.transversal[beta] {
                Some((_, inv)) => g = g.compose_unchecked(inv),
                None => return (g, i),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    /// Sifts `g` through the chain; the residue is the identity iff `g` is a member.
    pub fn sift(&self, g: &Permutation) -> Permutation {
        self.sift_from(g.clone(), 0).0
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base + 1).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators of the `i`-th point stabiliser.
    pub fn strong_generators(&self, level: usize) -> &[Permutation] {
        &self.levels[level].gens
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    fn order_checked(&self) -> Result<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .ok_or(GroupError::OrderOverflow)
        })
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.order_checked().expect("checked at construction")
    }

    /// All elements as products of transversal representatives (unsorted).
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        // g = u_{k-1} ... u_1 u_0 with u_i from level i.
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &pt in &level.orbit {
                    let (u, _) = level.transversal[pt].as_ref().unwrap();
                    next.push(h.compose_unchecked(u));
                }
            }
            out = next;
        }
        out
    }
}
