//! Words, finite languages and degree-truncated language algebra.
//!
//! Words are sequences of alphabet positions. All sets of words iterate in
//! length-lexicographic order (length first, then by alphabet position), which
//! is what makes every printed result reproducible.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Position of a symbol inside an [`Alphabet`].
pub type Letter = u16;

/// Token used for the empty word in text form.
pub const EPSILON: &str = "eps";

/// An ordered list of distinct symbol names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.len() > Letter::MAX as usize {
            return Err(Error::Invalid(format!(
                "alphabet too large ({} symbols)",
                symbols.len()
            )));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::Invalid(format!("bad symbol name {s:?}")));
            }
            if s == EPSILON || s == "|" || s == "->" {
                return Err(Error::Invalid(format!(
                    "reserved token {s:?} used as a symbol"
                )));
            }
            if symbols[..i].contains(s) {
                return Err(Error::Invalid(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .map(|i| i as Letter)
    }

    /// Disjoint union `self ∪ other`; letters of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &Alphabet) -> Result<Alphabet> {
        if let Some(s) = other.symbols.iter().find(|s| self.symbols.contains(s)) {
            return Err(Error::Invalid(format!("alphabets share the symbol {s:?}")));
        }
        Alphabet::new(self.symbols.iter().chain(other.symbols.iter()).cloned())
    }

    /// Parses whitespace-separated symbols; `eps` alone denotes the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == EPSILON {
                continue;
            }
            let l = self
                .index_of(tok)
                .ok_or_else(|| Error::Invalid(format!("unknown symbol {tok:?}")))?;
            letters.push(l);
        }
        Ok(Word(letters))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return EPSILON.to_string();
        }
        let mut out = String::new();
        for (i, &l) in w.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.symbol(l));
        }
        out
    }
}

/// A word over some alphabet, stored as letter positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        Word(letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// True if `factor` occurs as a contiguous subword.
    pub fn contains_factor(&self, factor: &Word) -> bool {
        contains_factor(&self.0, &factor.0)
    }

    pub fn starts_with(&self, prefix: &[Letter]) -> bool {
        self.0.starts_with(prefix)
    }

    pub fn ends_with(&self, suffix: &[Letter]) -> bool {
        self.0.ends_with(suffix)
    }

    /// The smallest word of a given length in canonical order.
    fn first_of_length(len: usize) -> Word {
        Word(vec![0; len])
    }
}

pub(crate) fn contains_factor(word: &[Letter], factor: &[Letter]) -> bool {
    if factor.is_empty() {
        return true;
    }
    factor.len() <= word.len() && word.windows(factor.len()).any(|w| w == factor)
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(EPSILON);
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "#{l}")?;
        }
        Ok(())
    }
}

/// A finite set of words in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FiniteLanguage {
    words: BTreeSet<Word>,
}

impl FiniteLanguage {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        FiniteLanguage {
            words: words.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, w: Word) -> bool {
        self.words.insert(w)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Word> + '_ {
        self.words.iter()
    }

    /// Words of exactly the given length, in canonical order.
    pub fn of_length(&self, len: usize) -> impl Iterator<Item = &Word> + '_ {
        self.words
            .range(Word::first_of_length(len)..Word::first_of_length(len + 1))
    }

    pub fn min_len(&self) -> Option<usize> {
        self.words.first().map(Word::len)
    }

    pub fn max_len(&self) -> Option<usize> {
        self.words.last().map(Word::len)
    }

    /// `#L_k` for `k = 0..=d`.
    pub fn census(&self, d: usize) -> Vec<usize> {
        let mut out = vec![0; d + 1];
        for w in &self.words {
            if w.len() > d {
                break;
            }
            out[w.len()] += 1;
        }
        out
    }

    pub fn union(&self, other: &FiniteLanguage) -> FiniteLanguage {
        FiniteLanguage {
            words: self.words.union(&other.words).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &FiniteLanguage) -> FiniteLanguage {
        FiniteLanguage {
            words: self.words.intersection(&other.words).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &FiniteLanguage) -> FiniteLanguage {
        FiniteLanguage {
            words: self.words.difference(&other.words).cloned().collect(),
        }
    }

    /// Words of length at most `d`.
    pub fn truncated(&self, d: usize) -> FiniteLanguage {
        FiniteLanguage {
            words: self
                .words
                .range(..Word::first_of_length(d.saturating_add(1)))
                .cloned()
                .collect(),
        }
    }

    pub fn is_antichain(&self) -> bool {
        let ws: Vec<&Word> = self.words.iter().collect();
        ws.iter()
            .enumerate()
            .all(|(i, w)| ws[..i].iter().all(|v| !w.contains_factor(v)))
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        let parts: Vec<String> = self.words.iter().map(|w| alphabet.format_word(w)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl FromIterator<Word> for FiniteLanguage {
    fn from_iter<T: IntoIterator<Item = Word>>(iter: T) -> Self {
        FiniteLanguage::from_words(iter)
    }
}

impl<'a> IntoIterator for &'a FiniteLanguage {
    type Item = &'a Word;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// Minimal monomial basis of the ideal generated by `words`: drop every word
/// that contains another one as a factor.
pub fn minimize_antichain(words: &FiniteLanguage) -> FiniteLanguage {
    let mut kept: Vec<&Word> = Vec::new();
    // canonical order visits shorter words first
    for w in words.iter() {
        if kept.iter().all(|k| !w.contains_factor(k)) {
            kept.push(w);
        }
    }
    kept.into_iter().cloned().collect()
}

/// True iff no element of `basis` occurs as a factor of `word`.
pub fn is_normal(word: &Word, basis: &FiniteLanguage) -> bool {
    basis.iter().all(|b| !word.contains_factor(b))
}

/// Calls `f` on every word of length exactly `len` over `n` letters, in canonical order.
pub fn for_each_word<F: FnMut(&[Letter])>(n: usize, len: usize, mut f: F) {
    if n == 0 {
        if len == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0 as Letter; len];
    loop {
        f(&cur);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (cur[i] as usize) + 1 < n {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Bound value meaning "exact at every length".
pub const UNBOUNDED: usize = usize::MAX;

/// A language restricted to words of length at most `bound`.
///
/// The stored words are exactly the words of the underlying (possibly
/// infinite) language whose length is `<= bound`. A bound of [`UNBOUNDED`]
/// marks a finite language known completely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLanguage {
    bound: usize,
    words: FiniteLanguage,
}

/// Set operation selector for [`trunc_boolean`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

impl TruncatedLanguage {
    pub fn new(bound: usize, words: FiniteLanguage) -> Result<Self> {
        if let Some(m) = words.max_len() {
            if m > bound {
                return Err(Error::BoundViolation(format!(
                    "word of length {m} stored under bound {bound}"
                )));
            }
        }
        Ok(TruncatedLanguage { bound, words })
    }

    /// A finite language known at every length.
    pub fn complete(words: FiniteLanguage) -> Self {
        TruncatedLanguage {
            bound: UNBOUNDED,
            words,
        }
    }

    /// `X^{<= d}`.
    pub fn all_words(n: usize, d: usize) -> Self {
        Self::words_between(n, 0, d)
    }

    /// `X^+` truncated to `d`.
    pub fn nonempty_words(n: usize, d: usize) -> Self {
        Self::words_between(n, 1, d)
    }

    fn words_between(n: usize, lo: usize, d: usize) -> Self {
        let mut words = FiniteLanguage::new();
        for len in lo..=d {
            for_each_word(n, len, |w| {
                words.insert(Word::from_letters(w));
            });
        }
        TruncatedLanguage { bound: d, words }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_complete(&self) -> bool {
        self.bound == UNBOUNDED
    }

    pub fn words(&self) -> &FiniteLanguage {
        &self.words
    }

    pub fn into_words(self) -> FiniteLanguage {
        self.words
    }

    /// Restricts to a smaller bound.
    pub fn truncate(&self, d: usize) -> TruncatedLanguage {
        let d = d.min(self.bound);
        TruncatedLanguage {
            bound: d,
            words: self.words.truncated(d),
        }
    }

    /// A lower bound on the length of every word of the underlying language;
    /// exact whenever some word is stored.
    pub fn min_len_lower_bound(&self) -> usize {
        self.words.min_len().unwrap_or(self.bound.saturating_add(1))
    }
}

/// Concatenation `a·b` restricted to length `<= d`.
///
/// Exactness needs every factorization `uv` of a product word with
/// `|uv| <= d` to have `u` and `v` inside the stored windows. Using the
/// minimal lengths of the factors this amounts to
/// `a.bound >= d - minlen(b)` and `b.bound >= d - minlen(a)`; anything weaker
/// is rejected with [`Error::BoundViolation`]. The result has bound `d`.
pub fn trunc_product(
    a: &TruncatedLanguage,
    b: &TruncatedLanguage,
    d: usize,
) -> Result<TruncatedLanguage> {
    let need_a = d.saturating_sub(b.min_len_lower_bound());
    let need_b = d.saturating_sub(a.min_len_lower_bound());
    if a.bound < need_a || b.bound < need_b {
        return Err(Error::BoundViolation(format!(
            "product to degree {d} needs factor bounds >= ({need_a}, {need_b}), have ({}, {})",
            a.bound, b.bound
        )));
    }
    let mut by_len: Vec<Vec<&Word>> = vec![Vec::new(); d + 1];
    for v in b.words.iter() {
        if v.len() > d {
            break;
        }
        by_len[v.len()].push(v);
    }
    let mut out = FiniteLanguage::new();
    for u in a.words.iter() {
        if u.len() > d {
            break;
        }
        for bucket in &by_len[..=d - u.len()] {
            for v in bucket {
                out.insert(u.concat(v));
            }
        }
    }
    Ok(TruncatedLanguage {
        bound: d,
        words: out,
    })
}

/// Words of length `<= d` over `n` letters containing an element of `basis`
/// as a factor, i.e. `X* basis X*` truncated.
pub fn trunc_ideal(basis: &TruncatedLanguage, n: usize, d: usize) -> Result<TruncatedLanguage> {
    if basis.bound < d {
        return Err(Error::BoundViolation(format!(
            "ideal to degree {d} needs a basis exact to degree {d}, have {}",
            basis.bound
        )));
    }
    let gens: Vec<&Word> = basis.words.iter().filter(|w| w.len() <= d).collect();
    let mut out = FiniteLanguage::new();
    if gens.iter().any(|g| g.is_empty()) {
        return Ok(TruncatedLanguage::all_words(n, d));
    }
    if gens.is_empty() {
        return Ok(TruncatedLanguage {
            bound: d,
            words: out,
        });
    }
    // depth-first over prefixes; a prefix is marked once some generator ends at its last letter
    let mut stack: Vec<(Vec<Letter>, bool)> = vec![(Vec::new(), false)];
    while let Some((w, hit)) = stack.pop() {
        if hit {
            out.insert(Word(w.clone()));
        }
        if w.len() == d {
            continue;
        }
        for x in (0..n as Letter).rev() {
            let mut next = w.clone();
            next.push(x);
            let hit_next = hit || gens.iter().any(|g| next.ends_with(&g.0));
            stack.push((next, hit_next));
        }
    }
    Ok(TruncatedLanguage {
        bound: d,
        words: out,
    })
}

/// Set operation on two truncated languages; the result bound is the smaller bound.
pub fn trunc_boolean(a: &TruncatedLanguage, b: &TruncatedLanguage, op: SetOp) -> TruncatedLanguage {
    let bound = a.bound.min(b.bound);
    let (x, y) = (a.words.truncated(bound), b.words.truncated(bound));
    let words = match op {
        SetOp::Union => x.union(&y),
        SetOp::Intersection => x.intersection(&y),
        SetOp::Difference => x.difference(&y),
    };
    TruncatedLanguage { bound, words }
}
