//! Degree-truncated Gröbner–Shirshov completion in the free associative algebra.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::algebra::Q;
use crate::error::{Error, Result};
use crate::grammar::{self, CFGrammar};
use crate::lang::{Alphabet, FiniteLanguage, Letter, Word};

/// Graded lexicographic order: longer words are larger; equal lengths compare
/// letter by letter, the letter earlier in the priority list being larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<usize>,
}

impl MonomialOrder {
    /// `priority[0]` is the largest letter.
    pub fn new(n: usize, priority: &[Letter]) -> Result<Self> {
        let mut rank = vec![usize::MAX; n];
        if priority.len() != n {
            return Err(Error::Invalid(format!(
                "priority lists {} of {n} letters",
                priority.len()
            )));
        }
        for (i, &x) in priority.iter().enumerate() {
            match rank.get_mut(x as usize) {
                Some(r) if *r == usize::MAX => *r = i,
                _ => {
                    return Err(Error::Invalid(format!(
                        "priority is not a permutation (letter {x})"
                    )))
                }
            }
        }
        Ok(MonomialOrder { rank })
    }

    /// Alphabet order: the first symbol is the largest.
    pub fn by_alphabet(alphabet: &Alphabet) -> Self {
        MonomialOrder {
            rank: (0..alphabet.len()).collect(),
        }
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.letters().iter().zip(b.letters()) {
                match self.rank[*y as usize].cmp(&self.rank[*x as usize]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

/// Finite linear combination of words with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, Q>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(w: Word) -> Self {
        Self::term(w, Q::one())
    }

    pub fn term(w: Word, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        let slot = self.terms.entry(w).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Word, &Q)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Common length of all words, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::len);
        let first = it.next()?;
        it.all(|l| l == first).then_some(first)
    }

    pub fn scale(&self, c: &Q) -> NCPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        NCPolynomial {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `u · self · v`.
    pub fn sandwich(&self, u: &[Letter], v: &[Letter]) -> NCPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut x = u.to_vec();
                x.extend_from_slice(w.letters());
                x.extend_from_slice(v);
                (Word(x), c.clone())
            })
            .collect();
        NCPolynomial { terms }
    }

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        self.add(&other.scale(&-Q::one()))
    }

    /// Scaled to leading coefficient 1.
    pub fn monic(&self, order: &MonomialOrder) -> NCPolynomial {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Reads `a' x - x a'`, `2 x y + 1/2 y x`, `x y`: signed terms, each an optional
    /// rational coefficient followed by space-separated symbols (`1` alone for the
    /// empty word).
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<NCPolynomial> {
        let mut out = NCPolynomial::zero();
        let mut sign = Q::one();
        let mut coeff: Option<Q> = None;
        let mut word: Vec<Letter> = Vec::new();
        let mut open = false;
        let flush =
            |out: &mut NCPolynomial, sign: &Q, coeff: &mut Option<Q>, word: &mut Vec<Letter>| {
                let c = coeff.take().unwrap_or_else(Q::one) * sign;
                out.add_term(Word(core::mem::take(word)), c);
            };
        let tokens = text
            .split_whitespace()
            .flat_map(|t| match t.strip_prefix('-') {
                Some(rest) if !rest.is_empty() && alphabet.index_of(t).is_none() => vec!["-", rest],
                _ => vec![t],
            });
        for tok in tokens {
            if tok == "+" || tok == "-" {
                if open {
                    flush(&mut out, &sign, &mut coeff, &mut word);
                } else if !out.is_zero() || tok == "+" && coeff.is_some() {
                    return Err(Error::Invalid(format!("dangling sign in {text:?}")));
                }
                sign = if tok == "-" { -Q::one() } else { Q::one() };
                open = false;
                continue;
            }
            if let Some(x) = alphabet.index_of(tok) {
                word.push(x);
                open = true;
                continue;
            }
            let q = parse_rational(tok)
                .ok_or_else(|| Error::Invalid(format!("unknown token {tok:?} in {text:?}")))?;
            if open || coeff.is_some() {
                return Err(Error::Invalid(format!(
                    "coefficient {tok:?} must start a term in {text:?}"
                )));
            }
            coeff = Some(q);
            open = true;
        }
        if !open {
            return Err(Error::Invalid(format!("empty term in {text:?}")));
        }
        flush(&mut out, &sign, &mut coeff, &mut word);
        Ok(out)
    }

    /// Terms in decreasing order, e.g. `a' x - x a'`.
    pub fn format(&self, alphabet: &Alphabet, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Word, &Q)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut s = String::new();
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            let word = if w.is_empty() {
                String::from("1")
            } else {
                alphabet.format_word(w)
            };
            if a.is_one() {
                s.push_str(&word);
            } else {
                s.push_str(&format!("{a} {word}"));
            }
        }
        s
    }
}

fn parse_rational(tok: &str) -> Option<Q> {
    tok.parse::<Q>().ok()
}

fn find_factor(hay: &[Letter], needle: &[Letter]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    hay.windows(needle.len()).position(|w| w == needle)
}

/// Normal form of `f`: repeatedly replaces the largest reducible term using the
/// basis element whose leading word occurs in it.
pub fn nc_reduce(f: &NCPolynomial, basis: &[NCPolynomial], order: &MonomialOrder) -> NCPolynomial {
    let leads: Vec<(Word, Q)> = basis
        .iter()
        .map(|g| {
            let (w, c) = g.leading(order).expect("basis elements are nonzero");
            (w.clone(), c.clone())
        })
        .collect();
    let mut rem = f.clone();
    let mut out = NCPolynomial::zero();
    while let Some((w, c)) = rem.leading(order) {
        let (w, c) = (w.clone(), c.clone());
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (l, _))| find_factor(w.letters(), l.letters()).map(|p| (i, p)));
        match hit {
            Some((i, p)) => {
                let (l, lc) = &leads[i];
                let u = &w.letters()[..p];
                let v = &w.letters()[p + l.len()..];
                rem = rem.sub(&basis[i].sandwich(u, v).scale(&(&c / lc)));
            }
            None => {
                out.add_term(w.clone(), c.clone());
                rem.add_term(w, -c);
            }
        }
    }
    out
}

/// Resource caps for a completion run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GsCaps {
    pub max_basis: usize,
    pub max_terms: usize,
}

impl Default for GsCaps {
    fn default() -> Self {
        GsCaps {
            max_basis: 10_000,
            max_terms: 100_000,
        }
    }
}

/// Compositions `f·v - u·g` over every overlap `lm(f) = u·w`, `lm(g) = w·v` with
/// ambiguity word `u·w·v` of length `deg`.
fn compositions(basis: &[NCPolynomial], order: &MonomialOrder, deg: usize) -> Vec<NCPolynomial> {
    let leads: Vec<Word> = basis
        .iter()
        .map(|g| g.leading(order).unwrap().0.clone())
        .collect();
    let mut out = Vec::new();
    for (i, lf) in leads.iter().enumerate() {
        for (j, lg) in leads.iter().enumerate() {
            let (a, b) = (lf.letters(), lg.letters());
            for o in 1..a.len().min(b.len()) {
                if a.len() + b.len() - o != deg || a[a.len() - o..] != b[..o] {
                    continue;
                }
                let u = &a[..a.len() - o];
                let v = &b[o..];
                out.push(basis[i].sandwich(&[], v).sub(&basis[j].sandwich(u, &[])));
            }
        }
    }
    out
}

/// Reduced Gröbner–Shirshov basis elements with leading word of length `<= max_deg`,
/// for homogeneous `relations`. Compositions are resolved degree by degree; `reverse`
/// processes each degree's candidates in the opposite order.
pub fn gs_complete_with(
    relations: &[NCPolynomial],
    order: &MonomialOrder,
    max_deg: usize,
    caps: &GsCaps,
    reverse: bool,
) -> Result<Vec<NCPolynomial>> {
    let mut by_degree: BTreeMap<usize, Vec<NCPolynomial>> = BTreeMap::new();
    for r in relations {
        if r.is_zero() {
            continue;
        }
        let deg = r
            .homogeneous_degree()
            .ok_or_else(|| Error::Invalid("relation is not homogeneous".into()))?;
        if deg == 0 {
            return Err(Error::Invalid(
                "a nonzero constant relation makes the algebra trivial".into(),
            ));
        }
        by_degree.entry(deg).or_default().push(r.clone());
    }
    let mut basis: Vec<NCPolynomial> = Vec::new();
    for deg in 1..=max_deg {
        let mut cands = compositions(&basis, order, deg);
        cands.extend(by_degree.get(&deg).into_iter().flatten().cloned());
        if reverse {
            cands.reverse();
        }
        let mut fresh: Vec<NCPolynomial> = Vec::new();
        for c in cands {
            let mut current = basis.clone();
            current.extend(fresh.iter().cloned());
            let h = nc_reduce(&c, &current, order);
            if h.is_zero() {
                continue;
            }
            if h.len() > caps.max_terms {
                return Err(Error::ResourceCap(format!(
                    "polynomial with {} terms",
                    h.len()
                )));
            }
            fresh.push(h.monic(order));
            if basis.len() + fresh.len() > caps.max_basis {
                return Err(Error::ResourceCap(format!(
                    "basis exceeded {} elements",
                    caps.max_basis
                )));
            }
        }
        // interreduce the new elements of this degree among themselves
        let mut reduced: Vec<NCPolynomial> = Vec::with_capacity(fresh.len());
        for (i, g) in fresh.iter().enumerate() {
            let (w, c) = g.leading(order).unwrap();
            let head = NCPolynomial::term(w.clone(), c.clone());
            let others: Vec<NCPolynomial> = basis
                .iter()
                .chain(
                    fresh
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, p)| p),
                )
                .cloned()
                .collect();
            let tail = nc_reduce(&g.sub(&head), &others, order);
            reduced.push(head.add(&tail).monic(order));
        }
        basis.extend(reduced);
    }
    basis.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    Ok(basis)
}

/// [`gs_complete_with`] in the natural order, checked against the reversed order.
pub fn gs_complete(
    relations: &[NCPolynomial],
    order: &MonomialOrder,
    max_deg: usize,
) -> Result<Vec<NCPolynomial>> {
    let caps = GsCaps::default();
    let forward = gs_complete_with(relations, order, max_deg, &caps, false)?;
    let backward = gs_complete_with(relations, order, max_deg, &caps, true)?;
    if forward != backward {
        return Err(Error::Mismatch(
            "completion depends on the processing order".into(),
        ));
    }
    Ok(forward)
}

/// True iff every composition with ambiguity word of length `<= max_deg` reduces to zero.
pub fn compositions_resolve(basis: &[NCPolynomial], order: &MonomialOrder, max_deg: usize) -> bool {
    (1..=max_deg).all(|deg| {
        compositions(basis, order, deg)
            .iter()
            .all(|c| nc_reduce(c, basis, order).is_zero())
    })
}

/// Leading words of a reduced basis.
pub fn leading_language(basis: &[NCPolynomial], order: &MonomialOrder) -> Result<FiniteLanguage> {
    let words: FiniteLanguage = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(w, _)| w.clone()))
        .collect();
    if words.len() != basis.len() || !words.is_antichain() {
        return Err(Error::Mismatch(
            "leading words do not form an antichain".into(),
        ));
    }
    Ok(words)
}

/// Symmetric difference between computed leading words and a prediction, to a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingComparison {
    pub bound: usize,
    pub only_computed: FiniteLanguage,
    pub only_predicted: FiniteLanguage,
}

impl LeadingComparison {
    pub fn agrees(&self) -> bool {
        self.only_computed.is_empty() && self.only_predicted.is_empty()
    }
}

/// Compares `computed` with `finite ∪ L(family)` on words of length `<= d`; the
/// grammar's terminals are matched to `alphabet` by name.
pub fn compare_leading(
    finite: &FiniteLanguage,
    family: Option<&CFGrammar>,
    alphabet: &Alphabet,
    computed: &FiniteLanguage,
    d: usize,
) -> Result<LeadingComparison> {
    let mut predicted = finite.truncated(d);
    if let Some(g) = family {
        let map: Vec<Letter> = g
            .terminals()
            .symbols()
            .iter()
            .map(|s| {
                alphabet
                    .index_of(s)
                    .ok_or_else(|| Error::Invalid(format!("symbol {s:?} is not a generator")))
            })
            .collect::<Result<_>>()?;
        for w in grammar::enumerate(g, d)?.words().iter() {
            predicted.insert(Word(w.letters().iter().map(|&x| map[x as usize]).collect()));
        }
    }
    let computed = computed.truncated(d);
    Ok(LeadingComparison {
        bound: d,
        only_computed: computed.difference(&predicted),
        only_predicted: predicted.difference(&computed),
    })
}
