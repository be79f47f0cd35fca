//! Permutation model of `S_n` and relator checks against a transposition
//! assignment of the generators.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::presentation::{coxeter_path, Presentation, Stage};
use crate::words::{Letter, Word};

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based images, e.g. `[2, 1, 3]` is `(1 2)`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    /// The transposition `(a b)` of `{1..n}`.
    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        for x in [a, b] {
            if x == 0 || x > n {
                return Err(Error::Range {
                    what: "transposition point",
                    value: x as i64,
                    expected: format!("1..={n}"),
                });
            }
        }
        if a == b {
            return Err(Error::BadRange(format!("({a} {b}) is not a transposition")));
        }
        let mut p = Permutation::identity(n);
        p.images.swap(a as usize - 1, b as usize - 1);
        Ok(p)
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self` first, then `q`: points move right to left through the word
    /// read left to right.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.images.len() != q.images.len() {
            return Err(Error::SizeMismatch(self.images.len(), q.images.len()));
        }
        Ok(self.then_unchecked(q))
    }

    fn then_unchecked(&self, q: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| q.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32 + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// The two moved points if this is a transposition.
    pub fn as_transposition(&self) -> Option<(u32, u32)> {
        match self.cycles().as_slice() {
            [c] if c.len() == 2 => Some((c[0], c[1])),
            _ => None,
        }
    }

    /// Order as lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Generator index to transposition. Primed letters map like their unprimed
/// partner, which is the relation `γ_j′ = γ_j` modulo squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorAssignment {
    n: u32,
    map: BTreeMap<u32, Permutation>,
}

impl GeneratorAssignment {
    pub fn new(n: u32, map: BTreeMap<u32, Permutation>) -> Result<Self> {
        for (&index, p) in &map {
            if p.degree() != n {
                return Err(Error::SizeMismatch(n as usize, p.degree() as usize));
            }
            if p.as_transposition().is_none() {
                return Err(Error::NotATransposition(index));
            }
        }
        Ok(GeneratorAssignment { n, map })
    }

    /// Path `3,2,1,4,6,7,…,n` onto `(1 2),(2 3),…,(n−1 n)`.
    pub fn path(n: u32) -> Result<Self> {
        let map = coxeter_path(n)?
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                let i = i as u32 + 1;
                Ok((g, Permutation::transposition(n, i, i + 1)?))
            })
            .collect::<Result<_>>()?;
        GeneratorAssignment::new(n, map)
    }

    /// The path assignment extended by `5 ↦ (1 n)`, closing the cycle of
    /// planes.
    pub fn star(n: u32) -> Result<Self> {
        let mut a = GeneratorAssignment::path(n)?;
        a.map.insert(5, Permutation::transposition(n, 1, n)?);
        Ok(a)
    }

    /// The natural assignment for a presentation: `star` when generator 5
    /// is present, `path` otherwise.
    pub fn for_presentation(p: &Presentation) -> Result<Self> {
        if p.generators.iter().any(|g| g.index == 5) {
            GeneratorAssignment::star(p.n)
        } else {
            GeneratorAssignment::path(p.n)
        }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn get(&self, index: u32) -> Option<&Permutation> {
        self.map.get(&index)
    }

    pub fn assigned(&self) -> impl Iterator<Item = (u32, &Permutation)> {
        self.map.iter().map(|(&i, p)| (i, p))
    }

    /// Exchanges the images of two generators.
    pub fn swapped(&self, a: u32, b: u32) -> Result<Self> {
        let mut map = self.map.clone();
        let pa = map.remove(&a).ok_or(Error::Unassigned(Letter::gen(a)))?;
        let pb = map.remove(&b).ok_or(Error::Unassigned(Letter::gen(b)))?;
        map.insert(a, pb);
        map.insert(b, pa);
        Ok(GeneratorAssignment { n: self.n, map })
    }

    /// Whether the assigned transpositions connect all `n` points, which is
    /// equivalent to generating `S_n`.
    pub fn generates_symmetric_group(&self) -> bool {
        let n = self.n as usize;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = n;
        for p in self.map.values() {
            if let Some((a, b)) = p.as_transposition() {
                let (ra, rb) = (find(&mut parent, a as usize - 1), find(&mut parent, b as usize - 1));
                if ra != rb {
                    parent[ra] = rb;
                    components -= 1;
                }
            }
        }
        components <= 1
    }
}

/// Image of `w`, reading letters left to right.
pub fn evaluate(w: &Word, a: &GeneratorAssignment) -> Result<Permutation> {
    let mut acc = Permutation::identity(a.n);
    for &l in w.letters() {
        let p = a.map.get(&l.index).ok_or(Error::Unassigned(l))?;
        acc = if l.exponent < 0 {
            acc.then_unchecked(&p.inverse())
        } else {
            acc.then_unchecked(p)
        };
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub relator: Word,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    pub n: u32,
    pub checks: Vec<RelatorCheck>,
    /// The assigned transpositions generate `S_n`.
    pub onto: bool,
}

impl HomomorphismReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelatorCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Every relator holds and the images generate.
    pub fn surjective_homomorphism(&self) -> bool {
        self.onto && self.all_pass()
    }
}

/// Evaluates every relator under `a`.
pub fn check_homomorphism(p: &Presentation, a: &GeneratorAssignment) -> Result<HomomorphismReport> {
    check_homomorphism_with(p, a, Execution::default())
}

pub fn check_homomorphism_with(
    p: &Presentation,
    a: &GeneratorAssignment,
    exec: Execution,
) -> Result<HomomorphismReport> {
    p.expect_stage(&[Stage::Star, Stage::Coxeter])?;
    let checks = par::map(exec, &p.relators, |r| {
        evaluate(r, a).map(|img| RelatorCheck {
            relator: r.clone(),
            pass: img.is_identity(),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(HomomorphismReport {
        n: a.n,
        checks,
        onto: a.generates_symmetric_group(),
    })
}
