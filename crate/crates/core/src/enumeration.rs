//! Todd–Coxeter coset enumeration.
//!
//! Cosets are 0-based rows of a flat table with one column per generator, or
//! two (`g`, `g⁻¹`) when `g²` is not a relator. Coincidences are resolved with
//! a union-find forward table and an explicit queue; dead rows are reclaimed
//! by compaction.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{coxeter_path, Presentation, Stage};
use crate::words::{Generator, Word};

const UNDEF: u32 = u32::MAX;

/// Compaction is only worth it above this many rows.
const COMPACT_MIN_ROWS: usize = 4096;

const PREFERRED_CAP: usize = 256;

pub const DEFAULT_MAX_COSETS: usize = 12_000_000;
pub const MAX_COSETS_ENV: &str = "ZAPPATIC_MAX_COSETS";

/// The coset limit from `ZAPPATIC_MAX_COSETS`, or [`DEFAULT_MAX_COSETS`].
pub fn default_max_cosets() -> usize {
    std::env::var(MAX_COSETS_ENV)
        .ok()
        .and_then(|v| v.trim().replace('_', "").parse().ok())
        .filter(|&m: &usize| m >= 1)
        .unwrap_or(DEFAULT_MAX_COSETS)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// HLT definitions, with every new table entry traced through all
    /// relator conjugates as in Felsch.
    #[default]
    Mixed,
    /// Define at the first gap, then trace every relator conjugate through
    /// each new entry.
    Felsch,
    /// Scan every relator from each coset in turn, defining as needed.
    Hlt,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Mixed, Strategy::Felsch, Strategy::Hlt];
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Mixed => "mixed",
            Strategy::Felsch => "felsch",
            Strategy::Hlt => "hlt",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mixed" => Ok(Strategy::Mixed),
            "felsch" => Ok(Strategy::Felsch),
            "hlt" => Ok(Strategy::Hlt),
            other => Err(Error::Token(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_cosets: usize,
    pub strategy: Strategy,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_cosets: default_max_cosets(),
            strategy: Strategy::default(),
        }
    }
}

impl EnumerationOptions {
    pub fn new(max_cosets: usize, strategy: Strategy) -> Self {
        EnumerationOptions {
            max_cosets,
            strategy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Completed,
    LimitExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub status: Status,
    /// The index, present exactly when the enumeration completed.
    pub index: Option<u64>,
    pub max_live: u64,
    pub total_defined: u64,
    pub strategy: Strategy,
}

impl EnumerationResult {
    pub fn completed(&self) -> bool {
        self.status == Status::Completed
    }
}

enum Fill {
    Done,
    Full,
}

/// Coset table for one enumeration.
#[derive(Debug, Clone)]
pub struct CosetTable {
    ncols: usize,
    inv: Vec<u32>,
    /// Relators as column words, shortest first.
    relators: Vec<Vec<u32>>,
    subgroup: Vec<Vec<u32>>,
    /// Cyclic conjugates of relators and their inverses, grouped by first
    /// column: `(start, len)` into `conj_words`.
    conj_by_col: Vec<Vec<(u32, u32)>>,
    conj_words: Vec<u32>,
    table: Vec<u32>,
    /// Forward links: `parent[c] == c` for live cosets.
    parent: Vec<u32>,
    nrows: usize,
    live: usize,
    queue: VecDeque<u32>,
    deductions: Vec<(u32, u32)>,
    track_deductions: bool,
    /// Gaps of length two seen while scanning; defining one of them yields
    /// a deduction at once.
    preferred: VecDeque<(u32, u32)>,
    max_cosets: usize,
    strategy: Strategy,
    max_live: usize,
    total_defined: u64,
}

impl CosetTable {
    pub fn new(p: &Presentation, subgroup: &[Word], options: EnumerationOptions) -> Result<Self> {
        p.expect_stage(&[Stage::Star, Stage::Coxeter])?;
        if p.relators.is_empty() {
            return Err(Error::NoRelators);
        }
        if options.max_cosets == 0 {
            return Err(Error::Range {
                what: "max_cosets",
                value: 0,
                expected: ">= 1".into(),
            });
        }
        let gens: HashMap<Generator, usize> = p
            .generators
            .iter()
            .enumerate()
            .map(|(i, &g)| (g, i))
            .collect();
        for w in subgroup {
            if let Some(&letter) = w.letters().iter().find(|l| !gens.contains_key(&l.base())) {
                return Err(Error::ForeignLetter { letter });
            }
        }

        // generators with a square relator get a single self-inverse column
        let mut involution = vec![false; p.generators.len()];
        for r in &p.relators {
            let l = r.letters();
            if l.len() == 2 && l[0] == l[1] {
                involution[gens[&l[0].base()]] = true;
            }
        }
        let mut pos_col = Vec::with_capacity(p.generators.len());
        let mut neg_col = Vec::with_capacity(p.generators.len());
        let mut inv = Vec::new();
        for &invol in &involution {
            let c = inv.len() as u32;
            if invol {
                inv.push(c);
                pos_col.push(c);
                neg_col.push(c);
            } else {
                inv.push(c + 1);
                inv.push(c);
                pos_col.push(c);
                neg_col.push(c + 1);
            }
        }
        let ncols = inv.len();

        let to_cols = |w: &Word| -> Vec<u32> {
            let raw = w.letters().iter().map(|l| {
                let g = gens[&l.base()];
                if l.exponent > 0 {
                    pos_col[g]
                } else {
                    neg_col[g]
                }
            });
            free_reduce(raw, &inv)
        };

        let mut relators = Vec::new();
        let mut seen = HashSet::new();
        for r in &p.relators {
            let w = cyclic_reduce(to_cols(r), &inv);
            if w.is_empty() {
                continue;
            }
            if seen.insert(canonical(&w, &inv)) {
                relators.push(w);
            }
        }
        relators.sort_by_key(Vec::len);
        let subgroup = subgroup
            .iter()
            .map(to_cols)
            .filter(|w| !w.is_empty())
            .collect();

        let mut conj_by_col = vec![Vec::new(); ncols];
        let mut conj_words = Vec::new();
        let mut seen_conj = HashSet::new();
        for r in &relators {
            for w in [r.clone(), invert(r, &inv)] {
                for s in 0..w.len() {
                    let rot: Vec<u32> = w[s..].iter().chain(&w[..s]).copied().collect();
                    if seen_conj.insert(rot.clone()) {
                        let start = conj_words.len() as u32;
                        conj_by_col[rot[0] as usize].push((start, rot.len() as u32));
                        conj_words.extend_from_slice(&rot);
                    }
                }
            }
        }

        let mut t = CosetTable {
            ncols,
            inv,
            relators,
            subgroup,
            conj_by_col,
            conj_words,
            table: Vec::new(),
            parent: Vec::new(),
            nrows: 0,
            live: 0,
            queue: VecDeque::new(),
            deductions: Vec::new(),
            preferred: VecDeque::new(),
            track_deductions: options.strategy != Strategy::Hlt,
            max_cosets: options.max_cosets,
            strategy: options.strategy,
            max_live: 0,
            total_defined: 0,
        };
        t.new_coset();
        Ok(t)
    }

    pub fn columns(&self) -> usize {
        self.ncols
    }

    pub fn live_cosets(&self) -> usize {
        self.live
    }

    /// Preprocessed relators as column words.
    pub fn column_relators(&self) -> &[Vec<u32>] {
        &self.relators
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.ncols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, v: u32) {
        self.table[c as usize * self.ncols + x as usize] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.nrows as u32;
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.parent.push(c);
        self.nrows += 1;
        self.live += 1;
        self.total_defined += 1;
        self.max_live = self.max_live.max(self.live);
        c
    }

    fn has_room(&self) -> bool {
        self.nrows < self.max_cosets
    }

    /// Defines `c·x` as a fresh coset. The caller checks `has_room`.
    fn define(&mut self, c: u32, x: u32) -> u32 {
        let d = self.new_coset();
        self.set(c, x, d);
        self.set(d, self.inv[x as usize], c);
        if self.track_deductions {
            self.deductions.push((c, x));
        }
        d
    }

    fn find(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.queue.push_back(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.ncols as u32 {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                let xi = self.inv[x as usize];
                self.set(f, xi, UNDEF);
                let e1 = self.find(e);
                let f1 = self.find(f);
                let ex = self.get(e1, x);
                if ex != UNDEF {
                    self.merge(f1, ex);
                    continue;
                }
                let fx = self.get(f1, xi);
                if fx != UNDEF {
                    self.merge(e1, fx);
                    continue;
                }
                self.set(e1, x, f1);
                self.set(f1, xi, e1);
                if self.track_deductions {
                    self.deductions.push((e1, x));
                }
            }
        }
    }

    /// Traces `w` around from `c` without defining; closes a single gap by
    /// deduction and resolves a closed mismatch as a coincidence.
    fn scan(&mut self, c: u32, w: &[u32]) {
        let n = w.len();
        let mut f = c;
        let mut i = 0;
        while i < n {
            let next = self.get(f, w[i]);
            if next == UNDEF {
                break;
            }
            f = next;
            i += 1;
        }
        if i == n {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let mut b = c;
        let mut j = n;
        while j > i {
            let prev = self.get(b, self.inv[w[j - 1] as usize]);
            if prev == UNDEF {
                break;
            }
            b = prev;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            let x = w[i];
            self.set(f, x, b);
            self.set(b, self.inv[x as usize], f);
            if self.track_deductions {
                self.deductions.push((f, x));
            }
        } else if j == i + 2 && self.track_deductions {
            if self.preferred.len() == PREFERRED_CAP {
                self.preferred.pop_front();
            }
            self.preferred.push_back((f, w[i]));
        }
    }

    /// Like `scan`, but defines cosets to close the trace.
    fn scan_and_fill(&mut self, c: u32, w: &[u32]) -> Fill {
        let n = w.len();
        let mut f = c;
        let mut i = 0;
        let mut b = c;
        let mut j = n;
        loop {
            while i < j {
                let next = self.get(f, w[i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Fill::Done;
            }
            while j > i {
                let prev = self.get(b, self.inv[w[j - 1] as usize]);
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Fill::Done;
            }
            if j == i + 1 {
                let x = w[i];
                self.set(f, x, b);
                self.set(b, self.inv[x as usize], f);
                if self.track_deductions {
                    self.deductions.push((f, x));
                }
                return Fill::Done;
            }
            if !self.has_room() {
                return Fill::Full;
            }
            self.define(f, w[i]);
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let k = self.conj_by_col[x as usize].len();
            for idx in 0..k {
                let (start, len) = self.conj_by_col[x as usize][idx];
                let (start, len) = (start as usize, len as usize);
                // conj_words is never mutated after construction
                let w = std::mem::take(&mut self.conj_words);
                self.scan(c, &w[start..start + len]);
                self.conj_words = w;
                if !self.is_live(c) {
                    break;
                }
            }
        }
    }

    /// Renumbers live cosets in order and drops dead rows. Only valid with no
    /// pending coincidences or deductions. Returns the new number of `c`, or
    /// of the first live coset after it.
    fn compact(&mut self, c: usize) -> usize {
        debug_assert!(self.queue.is_empty() && self.deductions.is_empty());
        let mut map = vec![UNDEF; self.nrows];
        let mut next = 0u32;
        for (old, m) in map.iter_mut().enumerate() {
            if self.parent[old] == old as u32 {
                *m = next;
                next += 1;
            }
        }
        let mut mapped_c = next as usize;
        for (old, &m) in map.iter().enumerate() {
            if old >= c && m != UNDEF {
                mapped_c = m as usize;
                break;
            }
        }
        let ncols = self.ncols;
        for old in 0..self.nrows {
            let new = map[old];
            if new == UNDEF {
                continue;
            }
            for x in 0..ncols {
                let v = self.table[old * ncols + x];
                self.table[new as usize * ncols + x] = if v == UNDEF { UNDEF } else { map[v as usize] };
            }
        }
        self.nrows = next as usize;
        self.table.truncate(self.nrows * ncols);
        self.parent.clear();
        self.parent.extend(0..next);
        self.preferred.clear();
        mapped_c
    }

    fn dead(&self) -> usize {
        self.nrows - self.live
    }

    fn should_compact(&self) -> bool {
        self.nrows >= COMPACT_MIN_ROWS && self.dead() * 4 >= self.nrows
    }

    fn result(&self, status: Status) -> EnumerationResult {
        EnumerationResult {
            status,
            index: (status == Status::Completed).then_some(self.live as u64),
            max_live: self.max_live as u64,
            total_defined: self.total_defined,
            strategy: self.strategy,
        }
    }

    pub fn run(&mut self) -> EnumerationResult {
        match self.strategy {
            Strategy::Felsch => self.run_felsch(),
            Strategy::Hlt | Strategy::Mixed => self.run_hlt(),
        }
    }

    fn fill_subgroup(&mut self) -> Fill {
        let subgroup = std::mem::take(&mut self.subgroup);
        let mut out = Fill::Done;
        for w in &subgroup {
            let c = self.find(0);
            if let Fill::Full = self.scan_and_fill(c, w) {
                out = Fill::Full;
                break;
            }
            self.process_deductions();
        }
        self.subgroup = subgroup;
        out
    }

    fn run_felsch(&mut self) -> EnumerationResult {
        if let Fill::Full = self.fill_subgroup() {
            return self.result(Status::LimitExceeded);
        }
        let mut pos = 0usize;
        let mut full_pass_done = false;
        loop {
            if self.should_compact() {
                pos = self.compact(pos / self.ncols) * self.ncols;
            }
            let total = self.nrows * self.ncols;
            while pos < total {
                let c = pos / self.ncols;
                if self.parent[c] != c as u32 {
                    pos = (c + 1) * self.ncols;
                    continue;
                }
                if self.table[pos] == UNDEF {
                    break;
                }
                pos += 1;
            }
            if pos >= total {
                // coincidences can clear entries behind the pointer
                if full_pass_done {
                    return self.result(Status::Completed);
                }
                full_pass_done = true;
                pos = 0;
                continue;
            }
            full_pass_done = false;
            if !self.has_room() {
                if self.dead() == 0 {
                    return self.result(Status::LimitExceeded);
                }
                pos = self.compact(pos / self.ncols) * self.ncols;
                continue;
            }
            let (c, x) = self
                .next_preferred(pos / self.ncols)
                .unwrap_or(((pos / self.ncols) as u32, (pos % self.ncols) as u32));
            self.define(c, x);
            self.process_deductions();
        }
    }

    /// A still-open preferred gap, unless the first incomplete row has
    /// fallen too far behind the live count.
    fn next_preferred(&mut self, first_gap_row: usize) -> Option<(u32, u32)> {
        let fill = 5 * (self.ncols + 2) / 4;
        if self.live > fill * (first_gap_row + 1) {
            return None;
        }
        while let Some((c, x)) = self.preferred.pop_back() {
            if self.is_live(c) && self.get(c, x) == UNDEF {
                return Some((c, x));
            }
        }
        None
    }

    /// Scans every relator from every live coset without defining.
    fn lookahead(&mut self) {
        let relators = std::mem::take(&mut self.relators);
        for c in 0..self.nrows as u32 {
            for r in &relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, r);
                self.process_deductions();
            }
        }
        self.relators = relators;
    }

    fn run_hlt(&mut self) -> EnumerationResult {
        self.track_deductions = self.strategy == Strategy::Mixed;
        if let Fill::Full = self.fill_subgroup() {
            return self.result(Status::LimitExceeded);
        }
        let relators = std::mem::take(&mut self.relators);
        let mut c = 0usize;
        let status = 'outer: loop {
            if c >= self.nrows {
                break Status::Completed;
            }
            if self.parent[c] != c as u32 {
                c += 1;
                continue;
            }
            let mut full = false;
            for r in &relators {
                if let Fill::Full = self.scan_and_fill(c as u32, r) {
                    full = true;
                    self.deductions.clear();
                    break;
                }
                self.process_deductions();
                if !self.is_live(c as u32) {
                    break;
                }
            }
            if !full && self.is_live(c as u32) {
                for x in 0..self.ncols as u32 {
                    if self.get(c as u32, x) == UNDEF {
                        if !self.has_room() {
                            full = true;
                            break;
                        }
                        self.define(c as u32, x);
                        self.process_deductions();
                    }
                }
            }
            if full {
                self.relators = relators.clone();
                self.lookahead();
                self.relators = Vec::new();
                if self.dead() == 0 {
                    break 'outer Status::LimitExceeded;
                }
                c = self.compact(c);
                continue;
            }
            c += 1;
            if self.should_compact() {
                c = self.compact(c);
            }
        };
        self.relators = relators;
        self.result(status)
    }

    /// Whether the table is complete, inverse-consistent, and every relator
    /// closes at every live coset and every subgroup generator closes at the
    /// subgroup coset.
    pub fn verify_closed(&self) -> bool {
        let live: Vec<u32> = (0..self.nrows as u32).filter(|&c| self.is_live(c)).collect();
        for &c in &live {
            for x in 0..self.ncols as u32 {
                let d = self.get(c, x);
                if d == UNDEF || !self.is_live(d) || self.get(d, self.inv[x as usize]) != c {
                    return false;
                }
            }
        }
        let trace = |c: u32, w: &[u32]| w.iter().fold(c, |acc, &x| self.get(acc, x));
        live.iter()
            .all(|&c| self.relators.iter().all(|r| trace(c, r) == c))
            && self.subgroup.iter().all(|w| trace(0, w) == 0)
    }
}

fn free_reduce(raw: impl IntoIterator<Item = u32>, inv: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for x in raw {
        if out.last() == Some(&inv[x as usize]) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic_reduce(mut w: Vec<u32>, inv: &[u32]) -> Vec<u32> {
    let mut start = 0;
    while w.len() - start >= 2 && w[start] == inv[*w.last().unwrap() as usize] {
        w.pop();
        start += 1;
    }
    w.drain(..start);
    w
}

fn invert(w: &[u32], inv: &[u32]) -> Vec<u32> {
    w.iter().rev().map(|&x| inv[x as usize]).collect()
}

/// Least rotation of the word or its inverse.
fn canonical(w: &[u32], inv: &[u32]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for v in [w.to_vec(), invert(w, inv)] {
        for s in 0..v.len() {
            let rot: Vec<u32> = v[s..].iter().chain(&v[..s]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Index of the subgroup generated by `subgroup` in the group of `p`.
pub fn enumerate(p: &Presentation, subgroup: &[Word], options: EnumerationOptions) -> Result<EnumerationResult> {
    Ok(CosetTable::new(p, subgroup, options)?.run())
}

/// Group order (index of the trivial subgroup).
pub fn order(p: &Presentation, options: EnumerationOptions) -> Result<EnumerationResult> {
    enumerate(p, &[], options)
}

/// Index of the subgroup generated by the Coxeter-path generators other than
/// the endpoint `omit` (`3` or `n`). Generator 5, if present, is not part of
/// the subgroup.
pub fn parabolic_index(p: &Presentation, omit: u32, options: EnumerationOptions) -> Result<EnumerationResult> {
    p.expect_stage(&[Stage::Star, Stage::Coxeter])?;
    let path = coxeter_path(p.n)?;
    if omit != path[0] && omit != *path.last().unwrap() {
        return Err(Error::NotAnEndpoint(omit));
    }
    let subgroup: Vec<Word> = path
        .into_iter()
        .filter(|&g| g != omit)
        .map(Word::gen)
        .collect();
    enumerate(p, &subgroup, options)
}
