//! Free-group words over the doubled alphabet `γ_j`, `γ_j′`.
//!
//! A [`Word`] is always freely reduced; every constructor goes through
//! [`reduce`]. The text form is one token per letter, `[-]<index>[']`, so
//! `-9' 10 9'` is `γ_9′⁻¹ γ_10 γ_9′`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator of the free group: a line label plus the primed flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub index: u32,
    pub primed: bool,
}

impl Generator {
    pub const fn new(index: u32, primed: bool) -> Self {
        Generator { index, primed }
    }

    pub const fn unprimed(index: u32) -> Self {
        Generator {
            index,
            primed: false,
        }
    }

    pub fn letter(self) -> Letter {
        Letter {
            index: self.index,
            primed: self.primed,
            exponent: 1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, if self.primed { "'" } else { "" })
    }
}

/// A generator raised to `±1`. Ordered by `(index, primed, exponent)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: u32,
    pub primed: bool,
    pub exponent: i8,
}

impl Letter {
    pub fn new(index: u32, primed: bool, exponent: i8) -> Result<Self> {
        if index == 0 {
            return Err(Error::Range {
                what: "letter index",
                value: 0,
                expected: ">= 1".into(),
            });
        }
        if exponent != 1 && exponent != -1 {
            return Err(Error::Range {
                what: "exponent",
                value: exponent.into(),
                expected: "+1 or -1".into(),
            });
        }
        Ok(Letter {
            index,
            primed,
            exponent,
        })
    }

    /// `γ_index`, positive exponent. Panics on index 0.
    pub fn gen(index: u32) -> Self {
        assert!(index >= 1, "letter index must be >= 1");
        Letter {
            index,
            primed: false,
            exponent: 1,
        }
    }

    /// `γ_index′`, positive exponent. Panics on index 0.
    pub fn primed(index: u32) -> Self {
        assert!(index >= 1, "letter index must be >= 1");
        Letter {
            index,
            primed: true,
            exponent: 1,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            exponent: -self.exponent,
            ..self
        }
    }

    pub fn base(self) -> Generator {
        Generator {
            index: self.index,
            primed: self.primed,
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.index == other.index && self.primed == other.primed && self.exponent == -other.exponent
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent < 0 {
            f.write_str("-")?;
        }
        write!(f, "{}", self.base())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        let bad = || Error::Token(tok.to_string());
        let (exponent, rest) = match tok.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, tok),
        };
        let (primed, digits) = match rest.strip_suffix('\'') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        Letter::new(index, primed, exponent).map_err(|_| bad())
    }
}

/// Freely reduces a raw letter sequence.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in raw {
        match out.last() {
            Some(&top) if top.is_inverse_of(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        reduce(letters)
    }

    /// The single unprimed letter `γ_index`.
    pub fn gen(index: u32) -> Self {
        Word(vec![Letter::gen(index)])
    }

    /// Product of unprimed positive letters, e.g. `Word::gens(&[10, 9, 10])`.
    pub fn gens(indices: &[u32]) -> Self {
        reduce(indices.iter().map(|&i| Letter::gen(i)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: u32) -> Word {
        (0..k).fold(Word::identity(), |acc, _| acc.mul(self))
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.mul(self).mul(&c.inverse())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Replaces every occurrence of `generator^{±1}` by `replacement^{±1}`.
    pub fn substitute(&self, generator: Generator, replacement: &Word) -> Word {
        let inv = replacement.inverse();
        let mut raw = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if l.base() == generator {
                let w = if l.exponent > 0 { replacement } else { &inv };
                raw.extend_from_slice(&w.0);
            } else {
                raw.push(l);
            }
        }
        reduce(raw)
    }

    /// Applies `f` to every letter and reduces.
    pub fn map_letters(&self, f: impl FnMut(Letter) -> Letter) -> Word {
        reduce(self.0.iter().copied().map(f))
    }

    /// Sorted, deduplicated set of generators occurring in the word.
    pub fn support(&self) -> Vec<Generator> {
        let mut s: Vec<Generator> = self.0.iter().map(|l| l.base()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn contains_index(&self, index: u32) -> bool {
        self.0.iter().any(|l| l.index == index)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses whitespace-separated tokens; `e` alone is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Word::identity());
        }
        let letters = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        Ok(reduce(letters))
    }
}

/// `a b a⁻¹ b⁻¹`.
pub fn commutator(a: &Word, b: &Word) -> Word {
    a.mul(b).mul(&a.inverse()).mul(&b.inverse())
}

/// `a b a b⁻¹ a⁻¹ b⁻¹`; `triple(a, b) = e` is the braid relation `aba = bab`.
pub fn triple(a: &Word, b: &Word) -> Word {
    let ai = a.inverse();
    let bi = b.inverse();
    reduce(
        [a, b, a, &bi, &ai, &bi]
            .into_iter()
            .flat_map(|w| w.letters().iter().copied()),
    )
}

/// The nested word `W_k` over unprimed letters: `W_0 = e`,
/// `W_k = W_{k-1} · (n-k+1) · W_{k-1}`.
///
/// `W_1 = n`, `W_2 = n (n-1) n`, `W_3 = n (n-1) n (n-2) n (n-1) n`.
pub fn nested_word(n: u32, k: u32) -> Result<Word> {
    if k < 1 || n < 7 || k > n - 6 {
        return Err(Error::Range {
            what: "nested word depth k",
            value: k.into(),
            expected: format!("1..={} for n = {n}", n.saturating_sub(6)),
        });
    }
    let mut letters: Vec<Letter> = Vec::with_capacity((1usize << k) - 1);
    for i in 1..=k {
        let prev = letters.clone();
        letters.push(Letter::gen(n - i + 1));
        letters.extend_from_slice(&prev);
    }
    // no two adjacent letters share an index, so this is already reduced
    Ok(Word(letters))
}

/// Rewrites a word as a word in involutions: primes are dropped, every
/// exponent becomes `+1`, and adjacent equal letters cancel.
///
/// Valid in any quotient where `γ_j = γ_j′` and `γ_j² = e`.
pub fn involutive_form(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for l in w.letters() {
        let g = Letter::gen(l.index);
        if out.last() == Some(&g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    Word(out)
}

/// Cyclic reduction for involution words: strips matching ends.
pub fn cyclic_involutive_form(w: &Word) -> Word {
    let v = involutive_form(w);
    let l = v.letters();
    let (mut i, mut j) = (0usize, l.len());
    while j >= i + 2 && l[i] == l[j - 1] {
        i += 1;
        j -= 1;
    }
    Word(l[i..j].to_vec())
}

/// Canonical representative of the cyclic class of an involution word,
/// up to rotation and reversal. Two relators with the same canonical form
/// have the same normal closure.
pub fn canonical_cyclic_form(w: &Word) -> Word {
    let v = cyclic_involutive_form(w);
    let n = v.len();
    if n == 0 {
        return v;
    }
    let fwd = v.letters();
    let rev: Vec<Letter> = fwd.iter().rev().copied().collect();
    let mut best: Option<Vec<Letter>> = None;
    for seq in [fwd, &rev[..]] {
        for r in 0..n {
            let cand: Vec<Letter> = seq[r..].iter().chain(seq[..r].iter()).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    Word(best.unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_and_identity() {
        assert_eq!(reduce([Letter::gen(3), Letter::gen(3).inverse()]), Word::identity());
        assert_eq!(reduce([]), Word::identity());
        assert_eq!(w("e").to_string(), "e");
        assert_eq!(w("3 -3"), Word::identity());
    }

    #[test]
    fn token_grammar() {
        let x = w("-9' 10 9'");
        assert_eq!(
            x.letters(),
            &[
                Letter::primed(9).inverse(),
                Letter::gen(10),
                Letter::primed(9)
            ]
        );
        assert_eq!(x.to_string(), "-9' 10 9'");
        assert!("0".parse::<Word>().is_err());
        assert!("9''".parse::<Word>().is_err());
        assert!("--9".parse::<Word>().is_err());
        assert!("x".parse::<Word>().is_err());
    }

    #[test]
    fn letter_ordering_is_index_primed_exponent() {
        let mut v = vec![Letter::primed(2), Letter::gen(2).inverse(), Letter::gen(1), Letter::gen(2)];
        v.sort();
        assert_eq!(
            v,
            vec![Letter::gen(1), Letter::gen(2).inverse(), Letter::gen(2), Letter::primed(2)]
        );
    }

    #[test]
    fn commutator_examples() {
        let g1 = Word::gen(1);
        let g2 = Word::gen(2);
        assert!(commutator(&g1, &g1).is_identity());
        assert_eq!(commutator(&g1, &g2), w("1 2 -1 -2"));
    }

    #[test]
    fn triple_examples() {
        let g1 = Word::gen(1);
        // a a a a⁻¹ a⁻¹ a⁻¹ cancels completely
        assert!(triple(&g1, &g1).is_identity());
        assert_eq!(triple(&Word::gen(5), &Word::gen(10)), w("5 10 5 -10 -5 -10"));
        assert_eq!(triple(&Word::gen(5), &Word::gen(10)).len(), 6);
        assert_eq!(triple(&Word::gen(7), &Word::gen(2)).len(), 6);
    }

    #[test]
    fn nested_word_examples() {
        assert_eq!(nested_word(12, 1).unwrap(), Word::gen(12));
        assert_eq!(nested_word(12, 2).unwrap(), Word::gens(&[12, 11, 12]));
        assert_eq!(nested_word(10, 3).unwrap(), w("10 9 10 8 10 9 10"));
        assert!(nested_word(10, 0).is_err());
        assert!(nested_word(10, 5).is_err());
        assert!(nested_word(6, 1).is_err());
        assert!(nested_word(10, 4).is_ok());
    }

    #[test]
    fn nested_word_laws() {
        for n in 7..=16u32 {
            for k in 1..=n - 6 {
                let wk = nested_word(n, k).unwrap();
                assert_eq!(wk.len(), (1usize << k) - 1);
                assert!(wk.is_palindrome());
                let idx: Vec<u32> = wk.support().iter().map(|g| g.index).collect();
                assert_eq!(idx, (n - k + 1..=n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn substitution_conjugates_a_generator() {
        // 9 -> 10 9 10^-1 inside [5, 9]
        let c = commutator(&Word::gen(5), &Word::gen(9));
        let s = c.substitute(Generator::unprimed(9), &w("10 9 -10"));
        assert_eq!(s, w("5 10 9 -10 -5 10 -9 -10"));
        assert_eq!(w("8 -8").substitute(Generator::unprimed(8), &w("1 2")), Word::identity());
    }

    #[test]
    fn involutive_forms() {
        let proj = w("10' 10 9' 9 8' 8 7' 7 6' 6 5' 5 4' 4 3' 3 2' 2 1' 1");
        assert!(involutive_form(&proj).is_identity());
        assert_eq!(involutive_form(&triple(&Word::gen(5), &Word::gen(10))), w("5 10 5 10 5 10"));
        assert_eq!(cyclic_involutive_form(&w("1 2 3 1")), w("2 3"));
        assert_eq!(canonical_cyclic_form(&w("2 1 2 1")), canonical_cyclic_form(&w("1 2 1 2")));
        assert_eq!(canonical_cyclic_form(&w("3 1 2")), canonical_cyclic_form(&w("2 1 3")));
    }

    fn letter() -> impl Strategy<Value = Letter> {
        (1u32..=4, any::<bool>(), any::<bool>()).prop_map(|(i, p, neg)| Letter {
            index: i,
            primed: p,
            exponent: if neg { -1 } else { 1 },
        })
    }

    /// Cancels adjacent inverse pairs in an order driven by `picks`.
    fn reduce_randomly(mut v: Vec<Letter>, picks: &[usize]) -> Vec<Letter> {
        let mut t = 0;
        loop {
            let spots: Vec<usize> = (0..v.len().saturating_sub(1))
                .filter(|&i| v[i].is_inverse_of(v[i + 1]))
                .collect();
            if spots.is_empty() {
                return v;
            }
            let i = spots[picks.get(t).copied().unwrap_or(0) % spots.len()];
            t += 1;
            v.drain(i..i + 2);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn reduce_is_idempotent(raw in prop::collection::vec(letter(), 0..=64)) {
            let once = reduce(raw);
            let twice = reduce(once.letters().iter().copied());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn reduction_is_confluent(
            raw in prop::collection::vec(letter(), 0..=64),
            picks in prop::collection::vec(any::<usize>(), 0..64),
        ) {
            let stack = reduce(raw.clone());
            let random = reduce_randomly(raw, &picks);
            prop_assert_eq!(stack.letters(), &random[..]);
        }

        #[test]
        fn commutator_inverse_swaps_arguments(
            a in prop::collection::vec(letter(), 0..16),
            b in prop::collection::vec(letter(), 0..16),
        ) {
            let (a, b) = (reduce(a), reduce(b));
            prop_assert_eq!(commutator(&a, &b).inverse(), commutator(&b, &a));
            prop_assert!(commutator(&a, &b).mul(&commutator(&b, &a)).is_identity());
        }

        #[test]
        fn distinct_letters_do_not_reduce(i in 1u32..20, j in 1u32..20, pi: bool, pj: bool) {
            prop_assume!((i, pi) != (j, pj));
            let a = Word::from_letters([Letter { index: i, primed: pi, exponent: 1 }]);
            let b = Word::from_letters([Letter { index: j, primed: pj, exponent: 1 }]);
            prop_assert_eq!(commutator(&a, &b).len(), 4);
            prop_assert_eq!(triple(&a, &b).len(), 6);
        }

        #[test]
        fn text_form_round_trips(raw in prop::collection::vec(letter(), 0..32)) {
            let w = reduce(raw);
            prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        }
    }
}
