//! Presentations of the branch-curve groups `G^n`, their involution
//! quotients `G^n_*`, and the Coxeter presentation of `S_n` they reduce to.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{
    canonical_cyclic_form, commutator, cyclic_involutive_form, involutive_form, nested_word,
    triple, Generator, Letter, Word,
};

/// Which object a presentation describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    /// Raw relators over `γ_j, γ_j′`.
    Full,
    /// Squares added and primes identified.
    Star,
    /// Coxeter presentation of `S_n` along the generator path.
    Coxeter,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Full => "full",
            Stage::Star => "star",
            Stage::Coxeter => "coxeter",
        })
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(Stage::Full),
            "star" => Ok(Stage::Star),
            "coxeter" => Ok(Stage::Coxeter),
            other => Err(Error::Token(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub n: u32,
    pub generators: Vec<Generator>,
    pub relators: Vec<Word>,
    pub stage: Stage,
}

/// One block of relators of the staged degree-`n` presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationPart {
    pub part_index: u32,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation and checks that every relator letter belongs to
    /// the generator set.
    pub fn new(n: u32, generators: Vec<Generator>, relators: Vec<Word>, stage: Stage) -> Result<Self> {
        let p = Presentation {
            n,
            generators,
            relators,
            stage,
        };
        p.check_letters()?;
        Ok(p)
    }

    fn check_letters(&self) -> Result<()> {
        let gens: HashSet<Generator> = self.generators.iter().copied().collect();
        for r in &self.relators {
            if let Some(&letter) = r.letters().iter().find(|l| !gens.contains(&l.base())) {
                return Err(Error::ForeignLetter { letter });
            }
        }
        Ok(())
    }

    pub fn expect_stage(&self, allowed: &[Stage]) -> Result<()> {
        if allowed.contains(&self.stage) {
            Ok(())
        } else {
            Err(Error::Stage {
                expected: allowed
                    .iter()
                    .map(Stage::to_string)
                    .collect::<Vec<_>>()
                    .join("|"),
                found: self.stage.to_string(),
            })
        }
    }

    /// Returns a copy with `extra` appended to the relators.
    pub fn with_relator(&self, extra: Word) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.push(extra);
        Presentation::new(self.n, self.generators.clone(), relators, self.stage)
    }

    /// Returns a copy without the relators at the given positions.
    pub fn without_relators(&self, positions: &[usize]) -> Self {
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|(i, _)| !positions.contains(i))
            .map(|(_, r)| r.clone())
            .collect();
        Presentation {
            relators,
            ..self.clone()
        }
    }

    /// Header line plus one relator per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("# n={} stage={}\n", self.n, self.stage);
        for r in &self.relators {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses the relator text format. The `# n=<n> stage=<stage>` header is
    /// required; the generator set is implied by it.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(u32, Stage)> = None;
        let mut relators = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if header.is_none() {
                    header = parse_header(comment);
                }
                continue;
            }
            let w: Word = line.parse().map_err(|e: Error| Error::Parse {
                line: lineno + 1,
                msg: e.to_string(),
            })?;
            relators.push(w);
        }
        let (n, stage) = header.ok_or(Error::Parse {
            line: 1,
            msg: "missing '# n=<n> stage=<stage>' header".into(),
        })?;
        let generators = match stage {
            Stage::Full => full_generators(n),
            Stage::Star => star_generators(n),
            Stage::Coxeter => {
                let mut g: Vec<Generator> = coxeter_path(n)?.into_iter().map(Generator::unprimed).collect();
                g.sort();
                g
            }
        };
        Presentation::new(n, generators, relators, stage)
    }
}

fn parse_header(comment: &str) -> Option<(u32, Stage)> {
    let mut n = None;
    let mut stage = None;
    for kv in comment.split_whitespace() {
        if let Some(v) = kv.strip_prefix("n=") {
            n = v.parse().ok();
        } else if let Some(v) = kv.strip_prefix("stage=") {
            stage = v.parse().ok();
        }
    }
    Some((n?, stage?))
}

fn full_generators(n: u32) -> Vec<Generator> {
    (1..=n)
        .flat_map(|j| [Generator::new(j, false), Generator::new(j, true)])
        .collect()
}

fn star_generators(n: u32) -> Vec<Generator> {
    (1..=n).map(Generator::unprimed).collect()
}

fn g(i: u32) -> Word {
    Word::gen(i)
}

/// The generator path `3 – 2 – 1 – 4 – 6 – 7 – … – n`; generator 5 is absent.
pub fn coxeter_path(n: u32) -> Result<Vec<u32>> {
    if n < 6 {
        return Err(Error::UnsupportedDegree {
            n,
            reason: "the Coxeter path 3-2-1-4-6-...-n needs n >= 6".into(),
        });
    }
    Ok([3, 2, 1, 4].into_iter().chain(6..=n).collect())
}

/// Coxeter presentation of `S_n` on the path generators: squares, `(st)³`
/// for path neighbours and `(st)²` otherwise.
pub fn coxeter_presentation(n: u32) -> Result<Presentation> {
    let path = coxeter_path(n)?;
    let mut gens = path.clone();
    gens.sort_unstable();
    let pos = |x: u32| path.iter().position(|&p| p == x).unwrap();
    let mut relators: Vec<Word> = gens.iter().map(|&s| g(s).pow(2)).collect();
    for (i, &s) in gens.iter().enumerate() {
        for &t in &gens[i + 1..] {
            let exp = if pos(s).abs_diff(pos(t)) == 1 { 3 } else { 2 };
            relators.push(Word::gens(&[s, t]).pow(exp));
        }
    }
    Presentation::new(
        n,
        gens.into_iter().map(Generator::unprimed).collect(),
        relators,
        Stage::Coxeter,
    )
}

/// The staged relator blocks of `G^n_*` (without the squares).
///
/// Part `k < n-7` ties generator `n-k+1` to the rest; the last part holds
/// the relations among `1..8` together with the long relators built from
/// the nested words.
pub fn build_star_parts(n: u32) -> Result<Vec<RelationPart>> {
    if n < 8 {
        return Err(Error::UnsupportedDegree {
            n,
            reason: "the staged relation pattern starts at n = 8".into(),
        });
    }
    let five = g(5);
    let mut parts = Vec::with_capacity((n - 7) as usize);
    for k in 1..=n - 8 {
        let top = n - k + 1;
        let mut relators = vec![
            triple(&five, &nested_word(n, k)?),
            triple(&g(n - k), &g(top)),
        ];
        relators.extend(
            [1, 2, 3, 4]
                .into_iter()
                .chain(6..top - 1)
                .map(|j| commutator(&g(j), &g(top))),
        );
        parts.push(RelationPart {
            part_index: k,
            relators,
        });
    }

    let mut last = Vec::new();
    for (a, b) in [(1, 2), (1, 4), (2, 3), (3, 5), (4, 6), (6, 7), (7, 8)] {
        last.push(triple(&g(a), &g(b)));
    }
    let commuting: [(u32, &[u32]); 6] = [
        (1, &[3, 5, 6, 7, 8]),
        (2, &[6, 7, 8]),
        (3, &[4, 6, 7, 8]),
        (4, &[8]),
        (5, &[6]),
        (6, &[8]),
    ];
    for (a, bs) in commuting {
        for &b in bs {
            last.push(commutator(&g(a), &g(b)));
        }
    }
    let inner = nested_word(n, n - 7)?;
    last.push(triple(&five, &inner));
    last.push(triple(&five, &nested_word(n, n - 6)?));
    last.push(long_equality(&inner));
    parts.push(RelationPart {
        part_index: n - 7,
        relators: last,
    });
    Ok(parts)
}

/// `4 3 2 1 2 3 4 = 6 7 W 7 5 7 W 7 6`, stored as `lhs · rhs⁻¹`.
fn long_equality(inner: &Word) -> Word {
    let lhs = Word::gens(&[4, 3, 2, 1, 2, 3, 4]);
    let rhs = Word::gens(&[6, 7])
        .mul(inner)
        .mul(&Word::gens(&[7, 5, 7]))
        .mul(inner)
        .mul(&Word::gens(&[7, 6]));
    lhs.mul(&rhs.inverse())
}

/// The word expressing generator 5 through the others once the long
/// equality holds: `7 W 7 6 4 3 2 1 2 3 4 6 7 W 7` with `W = W_{n-7}`.
pub fn five_elimination_word(n: u32) -> Result<Word> {
    if n < 8 {
        return Err(Error::UnsupportedDegree {
            n,
            reason: "the staged relation pattern starts at n = 8".into(),
        });
    }
    let inner = nested_word(n, n - 7)?;
    Ok(g(7)
        .mul(&inner)
        .mul(&Word::gens(&[7, 6, 4, 3, 2, 1, 2, 3, 4, 6, 7]))
        .mul(&inner)
        .mul(&g(7)))
}

/// `G^n_*`: squares of `1..n` followed by the flattened staged parts.
pub fn star_presentation(n: u32) -> Result<Presentation> {
    let parts = build_star_parts(n)?;
    let mut relators: Vec<Word> = (1..=n).map(|j| g(j).pow(2)).collect();
    relators.extend(parts.into_iter().flat_map(|p| p.relators));
    Presentation::new(n, star_generators(n), relators, Stage::Star)
}

/// Renders `G^n_*` with one comment line per staged part.
pub fn star_document(n: u32) -> Result<String> {
    let parts = build_star_parts(n)?;
    let mut s = format!("# n={n} stage=star\n# squares\n");
    for j in 1..=n {
        s.push_str(&g(j).pow(2).to_string());
        s.push('\n');
    }
    for p in parts {
        s.push_str(&format!("# part {}\n", p.part_index));
        for r in p.relators {
            s.push_str(&r.to_string());
            s.push('\n');
        }
    }
    Ok(s)
}

/// Passes to the involution quotient: identifies `γ_j′` with `γ_j`, adds
/// `γ_j²`, rewrites every relator as a cyclically reduced involution word,
/// and drops trivial and duplicate relators.
pub fn quotient_star(p: &Presentation) -> Result<Presentation> {
    p.expect_stage(&[Stage::Full])?;
    let mut indices: Vec<u32> = p.generators.iter().map(|g| g.index).collect();
    indices.sort_unstable();
    indices.dedup();
    let mut relators: Vec<Word> = indices.iter().map(|&j| g(j).pow(2)).collect();
    let mut seen: HashSet<Word> = relators.iter().map(canonical_cyclic_form).collect();
    for r in &p.relators {
        let w = cyclic_involutive_form(r);
        if w.is_identity() {
            continue;
        }
        if seen.insert(canonical_cyclic_form(&w)) {
            relators.push(w);
        }
    }
    Presentation::new(
        p.n,
        indices.into_iter().map(Generator::unprimed).collect(),
        relators,
        Stage::Star,
    )
}

/// Two distinct generators alternating `len` times, ignoring exponents.
fn alternating_pair(w: &Word, len: usize) -> Option<(u32, u32)> {
    let l = w.letters();
    if l.len() != len || l.iter().any(|x| x.primed) {
        return None;
    }
    let (a, b) = (l[0].index, l[1].index);
    if a == b {
        return None;
    }
    l.iter()
        .enumerate()
        .all(|(i, x)| x.index == if i % 2 == 0 { a } else { b })
        .then_some((a, b))
}

/// Rewrites single-letter braid relators `⟨a,b⟩` as `(ab)³` and single-letter
/// commutators `[a,b]` as `(ab)²`. Valid because the squares are relators.
pub fn coxeter_translate(p: &Presentation) -> Result<Presentation> {
    p.expect_stage(&[Stage::Star])?;
    let relators = p
        .relators
        .iter()
        .map(|r| {
            if let Some((a, b)) = alternating_pair(r, 6) {
                Word::gens(&[a, b]).pow(3)
            } else if let Some((a, b)) = alternating_pair(r, 4) {
                Word::gens(&[a, b]).pow(2)
            } else {
                r.clone()
            }
        })
        .collect();
    Presentation::new(p.n, p.generators.clone(), relators, p.stage)
}

/// A block of the degree-10 FULL fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureBlock {
    pub part: u32,
    pub name: String,
    pub relators: Vec<Word>,
}

const E10_FIXTURE: &str = include_str!("../fixtures/e10_full.rel");
const E10_MANIFEST: &str = include_str!("../fixtures/e10_full.manifest");

/// The checked-in degree-10 FULL relators, grouped by block.
pub fn e10_appendix_blocks() -> Result<Vec<FixtureBlock>> {
    let mut blocks: Vec<FixtureBlock> = Vec::new();
    for (lineno, line) in E10_FIXTURE.lines().enumerate() {
        let line = line.trim();
        if let Some(directive) = line.strip_prefix("#@") {
            let mut part = None;
            let mut name = None;
            for kv in directive.split_whitespace() {
                if let Some(v) = kv.strip_prefix("part=") {
                    part = v.parse().ok();
                } else if let Some(v) = kv.strip_prefix("block=") {
                    name = Some(v.to_string());
                }
            }
            match (part, name) {
                (Some(part), Some(name)) => blocks.push(FixtureBlock {
                    part,
                    name,
                    relators: Vec::new(),
                }),
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "malformed block directive".into(),
                    })
                }
            }
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let w: Word = line.parse().map_err(|e: Error| Error::Parse {
            line: lineno + 1,
            msg: e.to_string(),
        })?;
        match blocks.last_mut() {
            Some(b) => b.relators.push(w),
            None => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: "relator outside a block".into(),
                })
            }
        }
    }
    Ok(blocks)
}

/// `(part, block, relator count)` rows of the checked-in manifest.
pub fn e10_appendix_manifest() -> Result<Vec<(u32, String, usize)>> {
    E10_MANIFEST
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let bad = || Error::Parse {
                line: i + 1,
                msg: format!("bad manifest row {l:?}"),
            };
            if f.len() != 3 {
                return Err(bad());
            }
            Ok((
                f[0].parse().map_err(|_| bad())?,
                f[1].to_string(),
                f[2].parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

/// The full relator list of `G^10` (stage FULL).
pub fn e10_appendix_presentation() -> Result<Presentation> {
    let relators = e10_appendix_blocks()?
        .into_iter()
        .flat_map(|b| b.relators)
        .collect();
    Presentation::new(10, full_generators(10), relators, Stage::Full)
}

/// Generators of `p` lying on the Coxeter path.
pub fn path_generators(p: &Presentation) -> Result<Vec<u32>> {
    let path = coxeter_path(p.n)?;
    Ok(p
        .generators
        .iter()
        .filter(|g| !g.primed && path.contains(&g.index))
        .map(|g| g.index)
        .collect())
}

/// Involution words that are single-letter braid or commutator relators,
/// as unordered pairs tagged with the exponent 3 or 2.
pub fn coxeter_pairs(p: &Presentation) -> HashSet<(u32, u32, u32)> {
    p.relators
        .iter()
        .filter_map(|r| {
            let w = cyclic_involutive_form(r);
            let (e, pair) = if let Some(pr) = alternating_pair(&w, 6) {
                (3, pr)
            } else {
                (2, alternating_pair(&w, 4)?)
            };
            let (a, b) = (pair.0.min(pair.1), pair.0.max(pair.1));
            Some((a, b, e))
        })
        .collect()
}

/// Letters of `w` rewritten into the unprimed alphabet (involution form).
pub fn unprimed(w: &Word) -> Word {
    involutive_form(&w.map_letters(|l| Letter { primed: false, ..l }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parts_for_degree_ten_match_printed_blocks() {
        let parts = build_star_parts(10).unwrap();
        assert_eq!(parts.len(), 3);
        let mut p1 = vec![
            triple(&g(5), &g(10)),
            triple(&g(9), &g(10)),
        ];
        p1.extend([1, 2, 3, 4, 6, 7, 8].map(|j| commutator(&g(j), &g(10))));
        assert_eq!(parts[0].relators, p1);

        let mut p2 = vec![
            triple(&g(5), &w("10 9 10")),
            triple(&g(8), &g(9)),
        ];
        p2.extend([1, 2, 3, 4, 6, 7].map(|j| commutator(&g(j), &g(9))));
        assert_eq!(parts[1].relators, p2);

        let last = &parts[2].relators;
        let eq = w("4 3 2 1 2 3 4").mul(
            &w("6 7 10 9 10 8 10 9 10 7 5 7 10 9 10 8 10 9 10 7 6").inverse(),
        );
        assert!(last.contains(&eq));
        assert!(last.contains(&triple(&g(5), &w("10 9 10 8 10 9 10"))));
        assert!(last.contains(&triple(&g(5), &w("10 9 10 8 10 9 10 7 10 9 10 8 10 9 10"))));
        assert_eq!(last.len(), 7 + 5 + 3 + 4 + 3 + 3);
    }

    #[test]
    fn unsupported_degrees() {
        assert!(matches!(build_star_parts(7), Err(Error::UnsupportedDegree { .. })));
        assert!(matches!(build_star_parts(5), Err(Error::UnsupportedDegree { .. })));
        assert!(matches!(coxeter_presentation(5), Err(Error::UnsupportedDegree { .. })));
        assert!(build_star_parts(8).is_ok());
    }

    #[test]
    fn part_structure() {
        for n in 8..=16 {
            let parts = build_star_parts(n).unwrap();
            assert_eq!(parts.len(), (n - 7) as usize);
            for p in &parts[..parts.len() - 1] {
                let top = n - p.part_index + 1;
                for (i, r) in p.relators.iter().enumerate() {
                    assert!(r.contains_index(top));
                    let above = r.letters().iter().any(|l| l.index > top);
                    // only the braid with generator 5 reaches above `top`
                    assert_eq!(above, i == 0 && top < n, "n={n} part={} rel={r}", p.part_index);
                    assert!(r.letters().iter().all(|l| l.index <= n && !l.primed));
                }
            }
        }
    }

    #[test]
    fn coxeter_shape() {
        for n in 6..=20 {
            let p = coxeter_presentation(n).unwrap();
            let k = (n - 1) as usize;
            assert_eq!(p.generators.len(), k);
            assert_eq!(p.relators.len(), k + k * (k - 1) / 2);
            let braids = p.relators.iter().filter(|r| r.len() == 6).count();
            assert_eq!(braids, (n - 2) as usize);
            assert_eq!(p.relators.iter().filter(|r| r.len() == 4).count(), k * (k - 1) / 2 - (n - 2) as usize);
            assert!(!p.generators.contains(&Generator::unprimed(5)));
        }
    }

    #[test]
    fn coxeter_ten_contains_printed_final_list() {
        let pairs = coxeter_pairs(&coxeter_presentation(10).unwrap());
        for (a, b) in [(1, 2), (1, 4), (2, 3), (4, 6), (6, 7), (7, 8)] {
            assert!(pairs.contains(&(a, b, 3)));
        }
        let commuting: [(u32, &[u32]); 7] = [
            (1, &[3, 6, 7, 8, 9, 10]),
            (2, &[4, 6, 7, 8, 9, 10]),
            (3, &[4, 6, 7, 8, 9, 10]),
            (4, &[7, 8, 9, 10]),
            (6, &[8, 9, 10]),
            (7, &[9, 10]),
            (8, &[10]),
        ];
        let mut count = 0;
        for (a, bs) in commuting {
            for &b in bs {
                assert!(pairs.contains(&(a.min(b), a.max(b), 2)));
                count += 1;
            }
        }
        assert_eq!(count, 28);
        // the printed list omits the braids of the 8-9-10 tail; the path has them
        assert!(pairs.contains(&(8, 9, 3)) && pairs.contains(&(9, 10, 3)));
    }

    #[test]
    fn fixture_matches_manifest() {
        let blocks = e10_appendix_blocks().unwrap();
        let manifest = e10_appendix_manifest().unwrap();
        assert_eq!(blocks.len(), manifest.len());
        for (b, (part, name, count)) in blocks.iter().zip(&manifest) {
            assert_eq!((b.part, &b.name, b.relators.len()), (*part, name, *count));
        }
        let p = e10_appendix_presentation().unwrap();
        assert_eq!(p.relators.len(), manifest.iter().map(|m| m.2).sum::<usize>());
        assert_eq!(p.generators.len(), 20);
        for b in &blocks {
            assert!(b.part <= 3);
        }
    }

    #[test]
    fn appendix_first_family_and_long_relator() {
        let blocks = e10_appendix_blocks().unwrap();
        let first = blocks.iter().find(|b| b.part == 1 && b.name == "a").unwrap();
        assert_eq!(
            first.relators,
            vec![
                triple(&g(9), &g(10)),
                triple(&w("9'"), &g(10)),
                triple(&w("-9 9' 9"), &g(10)),
            ]
        );
        let d = blocks.iter().find(|b| b.part == 1 && b.name == "d").unwrap();
        assert!(d.relators.contains(&commutator(&g(6), &g(10))));
    }

    #[test]
    fn quotient_of_appendix() {
        let star = quotient_star(&e10_appendix_presentation().unwrap()).unwrap();
        assert_eq!(star.stage, Stage::Star);
        assert_eq!(star.generators, star_generators(10));
        // projective relator and branch identifications vanish
        assert!(star.relators.iter().all(|r| !r.is_identity()));
        let pairs = coxeter_pairs(&star);
        let built = coxeter_pairs(&star_presentation(10).unwrap());
        assert!(pairs.contains(&(5, 10, 3)) && pairs.contains(&(9, 10, 3)));
        for pr in &pairs {
            assert!(built.contains(pr), "{pr:?} not among the staged relators");
        }
    }

    #[test]
    fn quotient_without_primes_adds_squares_only() {
        let full = Presentation::new(
            3,
            full_generators(3),
            vec![w("1 2 1 -2 -1 -2"), w("1 3 -1 -3")],
            Stage::Full,
        )
        .unwrap();
        let star = quotient_star(&full).unwrap();
        assert_eq!(star.relators.len(), 5);
        assert_eq!(&star.relators[..3], &[w("1 1"), w("2 2"), w("3 3")]);
        assert!(quotient_star(&star).is_err());
    }

    #[test]
    fn translation() {
        let p = Presentation::new(
            10,
            star_generators(10),
            vec![triple(&g(5), &g(10)), commutator(&g(1), &g(10)), triple(&g(5), &w("10 9 10"))],
            Stage::Star,
        )
        .unwrap();
        let t = coxeter_translate(&p).unwrap();
        assert_eq!(t.relators[0], w("5 10 5 10 5 10"));
        assert_eq!(t.relators[1], w("1 10 1 10"));
        assert_eq!(t.relators[2], p.relators[2]);
    }

    #[test]
    fn text_round_trip() {
        for p in [
            star_presentation(9).unwrap(),
            coxeter_presentation(7).unwrap(),
            e10_appendix_presentation().unwrap(),
        ] {
            assert_eq!(Presentation::from_text(&p.to_text()).unwrap(), p);
        }
        let doc = star_document(10).unwrap();
        assert_eq!(Presentation::from_text(&doc).unwrap(), star_presentation(10).unwrap());
        assert!(Presentation::from_text("1 2\n").is_err());
        assert!(Presentation::from_text("# n=3 stage=star\n1 4\n").is_err());
    }

    #[test]
    fn elimination_word_for_ten() {
        assert_eq!(
            five_elimination_word(10).unwrap(),
            w("7 10 9 10 8 10 9 10 7 6 4 3 2 1 2 3 4 6 7 10 9 10 8 10 9 10 7")
        );
    }
}
