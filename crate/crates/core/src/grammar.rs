//! Context-free grammars: validation, bounded enumeration, derivation counting
//! and bounded unambiguity certificates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lang::{Alphabet, FiniteLanguage, Letter, TruncatedLanguage, Word, EPSILON};

mod cyk;

pub use cyk::{cyk_member, CykParser};

/// Default cap on the total number of words held by [`enumerate`].
pub const DEFAULT_WORD_CAP: usize = 10_000_000;

/// A right-hand side symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Terminal(Letter),
    Variable(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Production {
    pub lhs: usize,
    pub rhs: Vec<Symbol>,
}

impl Production {
    pub fn terminal_count(&self) -> usize {
        self.rhs
            .iter()
            .filter(|s| matches!(s, Symbol::Terminal(_)))
            .count()
    }
}

/// A context-free grammar `(V, X, P, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFGrammar {
    terminals: Alphabet,
    variables: Alphabet,
    start: usize,
    productions: Vec<Production>,
}

impl CFGrammar {
    pub fn new(
        terminals: Alphabet,
        variables: Alphabet,
        start: usize,
        productions: Vec<Production>,
    ) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::Invalid("grammar without variables".into()));
        }
        if let Some(s) = variables
            .symbols()
            .iter()
            .find(|s| terminals.index_of(s).is_some())
        {
            return Err(Error::Invalid(format!(
                "{s:?} is both a terminal and a variable"
            )));
        }
        if start >= variables.len() {
            return Err(Error::Invalid("start variable out of range".into()));
        }
        let mut seen = BTreeSet::new();
        for p in &productions {
            if p.lhs >= variables.len() {
                return Err(Error::Invalid("production head out of range".into()));
            }
            for s in &p.rhs {
                match *s {
                    Symbol::Terminal(x) if x as usize >= terminals.len() => {
                        return Err(Error::Invalid("terminal out of range".into()))
                    }
                    Symbol::Variable(v) if v >= variables.len() => {
                        return Err(Error::Invalid("variable out of range".into()))
                    }
                    _ => {}
                }
            }
            if !seen.insert((p.lhs, p.rhs.clone())) {
                return Err(Error::Invalid(format!(
                    "duplicate production for {}",
                    variables.symbol(p.lhs as Letter)
                )));
            }
        }
        for v in 0..variables.len() {
            if !productions.iter().any(|p| p.lhs == v) {
                return Err(Error::Invalid(format!(
                    "variable {} has no production",
                    variables.symbol(v as Letter)
                )));
            }
        }
        Ok(CFGrammar {
            terminals,
            variables,
            start,
            productions,
        })
    }

    /// Builds a grammar from textual rules `(head, "alt | alt | ...")`, where
    /// alternatives are whitespace-separated symbols and `eps` is the empty word.
    pub fn from_rules(
        terminals: &[&str],
        variables: &[&str],
        start: &str,
        rules: &[(&str, &str)],
    ) -> Result<Self> {
        let terminals = Alphabet::new(terminals.iter().copied())?;
        let variables = Alphabet::new(variables.iter().copied())?;
        let start = variables
            .index_of(start)
            .ok_or_else(|| Error::Invalid(format!("unknown start variable {start:?}")))?
            as usize;
        let mut productions = Vec::new();
        for (head, alts) in rules {
            let lhs = variables
                .index_of(head)
                .ok_or_else(|| Error::Invalid(format!("unknown variable {head:?}")))?
                as usize;
            for alt in alts.split('|') {
                productions.push(Production {
                    lhs,
                    rhs: parse_rhs(&terminals, &variables, alt)?,
                });
            }
        }
        CFGrammar::new(terminals, variables, start, productions)
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn variables(&self) -> &Alphabet {
        &self.variables
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn variable_name(&self, v: usize) -> &str {
        self.variables.symbol(v as Letter)
    }

    pub fn productions_of(&self, v: usize) -> impl Iterator<Item = &Production> + '_ {
        self.productions.iter().filter(move |p| p.lhs == v)
    }

    /// Same grammar with another start variable.
    pub fn with_start(&self, start: usize) -> Result<CFGrammar> {
        CFGrammar::new(
            self.terminals.clone(),
            self.variables.clone(),
            start,
            self.productions.clone(),
        )
    }

    /// Text of a right-hand side (`eps` when empty).
    pub fn rhs_text(&self, rhs: &[Symbol]) -> String {
        if rhs.is_empty() {
            return EPSILON.into();
        }
        let parts: Vec<&str> = rhs
            .iter()
            .map(|s| match *s {
                Symbol::Terminal(x) => self.terminals.symbol(x),
                Symbol::Variable(v) => self.variables.symbol(v as Letter),
            })
            .collect();
        parts.join(" ")
    }

    /// `A -> alt | alt ...` for one variable, in production order.
    pub fn rule_text(&self, v: usize) -> String {
        let alts: Vec<String> = self
            .productions_of(v)
            .map(|p| self.rhs_text(&p.rhs))
            .collect();
        format!("{} -> {}", self.variable_name(v), alts.join(" | "))
    }
}

pub(crate) fn parse_rhs(
    terminals: &Alphabet,
    variables: &Alphabet,
    alt: &str,
) -> Result<Vec<Symbol>> {
    let mut rhs = Vec::new();
    for tok in alt.split_whitespace() {
        if tok == EPSILON {
            continue;
        }
        if let Some(v) = variables.index_of(tok) {
            rhs.push(Symbol::Variable(v as usize));
        } else if let Some(x) = terminals.index_of(tok) {
            rhs.push(Symbol::Terminal(x));
        } else {
            return Err(Error::Invalid(format!(
                "unknown symbol {tok:?} in right-hand side"
            )));
        }
    }
    Ok(rhs)
}

/// Static facts about a grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrammarReport {
    pub productive: BTreeSet<usize>,
    pub reachable: BTreeSet<usize>,
    pub nullable: BTreeSet<usize>,
    /// Some `A ⇒+ A` exists using only steps that emit no terminal.
    pub has_unit_or_epsilon_cycle: bool,
    /// A variable on such a cycle that is also productive; counting diverges through it.
    pub divergent_variable: Option<usize>,
    pub is_right_linear: bool,
}

pub fn validate(g: &CFGrammar) -> GrammarReport {
    let m = g.variables.len();
    let fix = |pred: &dyn Fn(&Production, &BTreeSet<usize>) -> bool| {
        let mut set = BTreeSet::new();
        loop {
            let before = set.len();
            for p in &g.productions {
                if !set.contains(&p.lhs) && pred(p, &set) {
                    set.insert(p.lhs);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    };
    let productive = fix(&|p, set| {
        p.rhs.iter().all(|s| match s {
            Symbol::Terminal(_) => true,
            Symbol::Variable(v) => set.contains(v),
        })
    });
    let nullable = fix(&|p, set| {
        p.rhs
            .iter()
            .all(|s| matches!(s, Symbol::Variable(v) if set.contains(v)))
    });

    let mut reachable = BTreeSet::from([g.start]);
    let mut queue = vec![g.start];
    while let Some(a) = queue.pop() {
        for p in g.productions_of(a) {
            for s in &p.rhs {
                if let Symbol::Variable(v) = *s {
                    if reachable.insert(v) {
                        queue.push(v);
                    }
                }
            }
        }
    }

    // A -> B whenever A -> αBβ with α, β made of nullable variables
    let mut edges = vec![BTreeSet::new(); m];
    for p in &g.productions {
        for (i, s) in p.rhs.iter().enumerate() {
            if let Symbol::Variable(b) = *s {
                let others_nullable = p.rhs.iter().enumerate().all(|(j, t)| {
                    j == i || matches!(t, Symbol::Variable(v) if nullable.contains(v))
                });
                if others_nullable {
                    edges[p.lhs].insert(b);
                }
            }
        }
    }
    let on_cycle: Vec<bool> = (0..m).map(|a| reaches(&edges, a, a)).collect();
    let has_cycle = on_cycle.iter().any(|&c| c);
    let divergent_variable = (0..m).find(|&a| on_cycle[a] && productive.contains(&a));

    let is_right_linear = g.productions.iter().all(|p| {
        matches!(
            p.rhs.as_slice(),
            [] | [Symbol::Terminal(_), Symbol::Variable(_)]
        )
    });

    GrammarReport {
        productive,
        reachable,
        nullable,
        has_unit_or_epsilon_cycle: has_cycle,
        divergent_variable,
        is_right_linear,
    }
}

fn reaches(edges: &[BTreeSet<usize>], from: usize, target: usize) -> bool {
    let mut seen = BTreeSet::new();
    let mut stack: Vec<usize> = edges[from].iter().copied().collect();
    while let Some(v) = stack.pop() {
        if v == target {
            return true;
        }
        if seen.insert(v) {
            stack.extend(edges[v].iter().copied());
        }
    }
    false
}

fn check_divergence(g: &CFGrammar) -> Result<GrammarReport> {
    let report = validate(g);
    if let Some(v) = report.divergent_variable {
        return Err(Error::Divergent(g.variable_name(v).into()));
    }
    Ok(report)
}

/// Words of length `<= d` generated by every variable, indexed `[variable][length]`.
pub fn enumerate_all(g: &CFGrammar, d: usize, cap: usize) -> Result<Vec<Vec<FiniteLanguage>>> {
    check_divergence(g)?;
    let m = g.variables.len();
    let mut sets: Vec<Vec<FiniteLanguage>> = vec![vec![FiniteLanguage::new(); d + 1]; m];
    let mut total = 0usize;
    for len in 0..=d {
        // no divergent cycle, so length-`len` sets stabilise within m+1 passes
        loop {
            let mut changed = false;
            for p in &g.productions {
                let mut found = Vec::new();
                let mut prefix = Vec::new();
                expand(&p.rhs, 0, &sets, len, &mut prefix, &mut found);
                for w in found {
                    if sets[p.lhs][len].insert(Word(w)) {
                        changed = true;
                        total += 1;
                        if total > cap {
                            return Err(Error::ResourceCap(format!(
                                "enumeration to degree {d} exceeds {cap} stored words"
                            )));
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
    Ok(sets)
}

fn expand(
    rhs: &[Symbol],
    pos: usize,
    sets: &[Vec<FiniteLanguage>],
    remaining: usize,
    prefix: &mut Vec<Letter>,
    out: &mut Vec<Vec<Letter>>,
) {
    if pos == rhs.len() {
        if remaining == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let rest_min = rhs[pos + 1..]
        .iter()
        .filter(|s| matches!(s, Symbol::Terminal(_)))
        .count();
    match rhs[pos] {
        Symbol::Terminal(x) => {
            if remaining > rest_min {
                prefix.push(x);
                expand(rhs, pos + 1, sets, remaining - 1, prefix, out);
                prefix.pop();
            }
        }
        Symbol::Variable(v) => {
            if remaining < rest_min {
                return;
            }
            for k in 0..=remaining - rest_min {
                for w in sets[v][k].iter() {
                    let n = prefix.len();
                    prefix.extend_from_slice(w.letters());
                    expand(rhs, pos + 1, sets, remaining - k, prefix, out);
                    prefix.truncate(n);
                }
            }
        }
    }
}

/// The distinct words of `L(g)` of length `<= d`.
pub fn enumerate(g: &CFGrammar, d: usize) -> Result<TruncatedLanguage> {
    enumerate_with_cap(g, d, DEFAULT_WORD_CAP)
}

pub fn enumerate_with_cap(g: &CFGrammar, d: usize, cap: usize) -> Result<TruncatedLanguage> {
    let sets = enumerate_all(g, d, cap)?;
    let mut words = FiniteLanguage::new();
    for layer in &sets[g.start] {
        for w in layer.iter() {
            words.insert(w.clone());
        }
    }
    TruncatedLanguage::new(d, words)
}

/// `c[A][k]`: number of leftmost derivations (parse trees) from `A` of terminal words of length `k`.
pub fn count_derivations(g: &CFGrammar, d: usize) -> Result<Vec<Vec<BigUint>>> {
    check_divergence(g)?;
    let m = g.variables.len();
    let mut c: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); d + 1]; m];
    for len in 0..=d {
        for _pass in 0..=m {
            let mut next = vec![BigUint::zero(); m];
            for p in &g.productions {
                next[p.lhs] += convolve_at(&p.rhs, &c, len);
            }
            let mut changed = false;
            for (a, val) in next.into_iter().enumerate() {
                if c[a][len] != val {
                    c[a][len] = val;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    Ok(c)
}

/// Coefficient of `t^len` in the product of the symbol series of `rhs`.
fn convolve_at(rhs: &[Symbol], c: &[Vec<BigUint>], len: usize) -> BigUint {
    let mut acc = vec![BigUint::zero(); len + 1];
    acc[0] = BigUint::one();
    for s in rhs {
        let mut next = vec![BigUint::zero(); len + 1];
        match *s {
            Symbol::Terminal(_) => {
                next[1..].clone_from_slice(&acc[..len]);
            }
            Symbol::Variable(v) => {
                for (i, a) in acc.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, cv) in c[v][..=len - i].iter().enumerate() {
                        if !cv.is_zero() {
                            next[i + j] += a * cv;
                        }
                    }
                }
            }
        }
        acc = next;
    }
    acc.pop().unwrap_or_default()
}

/// Number of parse trees of `w` from variable `a`.
pub fn parse_count(g: &CFGrammar, a: usize, w: &Word) -> Result<BigUint> {
    check_divergence(g)?;
    let mut memo = ParseMemo {
        g,
        w: w.letters(),
        min: min_lengths(g),
        vars: BTreeMap::new(),
    };
    Ok(memo.var(a, 0, w.len()))
}

/// Length of a shortest word derivable from each variable; `None` if unproductive.
fn min_lengths(g: &CFGrammar) -> Vec<Option<usize>> {
    let mut min: Vec<Option<usize>> = vec![None; g.variables.len()];
    loop {
        let mut changed = false;
        for p in &g.productions {
            let len = p.rhs.iter().try_fold(0usize, |acc, s| match *s {
                Symbol::Terminal(_) => Some(acc + 1),
                Symbol::Variable(v) => min[v].map(|m| acc + m),
            });
            if let Some(len) = len {
                if min[p.lhs].is_none_or(|m| len < m) {
                    min[p.lhs] = Some(len);
                    changed = true;
                }
            }
        }
        if !changed {
            return min;
        }
    }
}

struct ParseMemo<'a> {
    g: &'a CFGrammar,
    w: &'a [Letter],
    min: Vec<Option<usize>>,
    vars: BTreeMap<(usize, usize, usize), BigUint>,
}

impl ParseMemo<'_> {
    /// Shortest length derivable from `rhs`, `None` if some symbol is unproductive.
    fn min_len(&self, rhs: &[Symbol]) -> Option<usize> {
        rhs.iter().try_fold(0usize, |acc, s| match *s {
            Symbol::Terminal(_) => Some(acc + 1),
            Symbol::Variable(v) => self.min[v].map(|m| acc + m),
        })
    }
}

impl ParseMemo<'_> {
    fn var(&mut self, a: usize, i: usize, j: usize) -> BigUint {
        if let Some(v) = self.vars.get(&(a, i, j)) {
            return v.clone();
        }
        let g = self.g;
        let mut total = BigUint::zero();
        for p in g.productions_of(a) {
            total += self.seq(&p.rhs, i, j);
        }
        self.vars.insert((a, i, j), total.clone());
        total
    }

    fn seq(&mut self, rhs: &[Symbol], i: usize, j: usize) -> BigUint {
        let Some((first, rest)) = rhs.split_first() else {
            return if i == j {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        };
        let Some(rest_min) = self.min_len(rest) else {
            return BigUint::zero();
        };
        if j < i + rest_min {
            return BigUint::zero();
        }
        match *first {
            Symbol::Terminal(x) => {
                if i < j && self.w[i] == x {
                    self.seq(rest, i + 1, j)
                } else {
                    BigUint::zero()
                }
            }
            Symbol::Variable(v) => {
                let mut total = BigUint::zero();
                let Some(first_min) = self.min[v] else {
                    return total;
                };
                for k in i + first_min..=j - rest_min {
                    let left = self.var(v, i, k);
                    if left.is_zero() {
                        continue;
                    }
                    let right = self.seq(rest, k, j);
                    if !right.is_zero() {
                        total += left * right;
                    }
                }
                total
            }
        }
    }
}

/// Result of a bounded unambiguity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityCertificate {
    /// Degree up to which the check ran.
    pub bound: usize,
    pub unambiguous: bool,
    /// A shortest word with at least two parse trees, when ambiguous.
    pub counterexample: Option<Word>,
}

/// Compares derivation counts with distinct-word counts for every length `<= d`.
pub fn certify_unambiguous(g: &CFGrammar, d: usize) -> Result<AmbiguityCertificate> {
    let counts = count_derivations(g, d)?;
    let sets = enumerate_all(g, d, DEFAULT_WORD_CAP)?;
    for k in 0..=d {
        let distinct = BigUint::from(sets[g.start][k].len());
        if counts[g.start][k] != distinct {
            let mut counterexample = None;
            for w in sets[g.start][k].iter() {
                if parse_count(g, g.start, w)? >= BigUint::from(2u32) {
                    counterexample = Some(w.clone());
                    break;
                }
            }
            return Ok(AmbiguityCertificate {
                bound: d,
                unambiguous: false,
                counterexample,
            });
        }
    }
    Ok(AmbiguityCertificate {
        bound: d,
        unambiguous: true,
        counterexample: None,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn dyck() -> CFGrammar {
        CFGrammar::from_rules(&["a", "b"], &["S"], "S", &[("S", "eps | a S b S")]).unwrap()
    }

    pub(crate) fn lukasiewicz() -> CFGrammar {
        CFGrammar::from_rules(&["a", "b"], &["S"], "S", &[("S", "a | b S S")]).unwrap()
    }

    pub(crate) fn if_then_else() -> CFGrammar {
        CFGrammar::from_rules(
            &["x", "y"],
            &["S", "A", "B"],
            "S",
            &[
                ("S", "A | B"),
                ("A", "eps | x A y A"),
                ("B", "x S | x A y B"),
            ],
        )
        .unwrap()
    }

    pub(crate) fn palindromes() -> CFGrammar {
        CFGrammar::from_rules(
            &["x", "y"],
            &["S"],
            "S",
            &[("S", "eps | x | y | x S x | y S y")],
        )
        .unwrap()
    }

    fn xstar_ystar() -> CFGrammar {
        CFGrammar::from_rules(
            &["x", "y"],
            &["A1", "A2", "A3"],
            "A1",
            &[
                ("A1", "eps | x A1 | y A2"),
                ("A2", "eps | x A3 | y A2"),
                ("A3", "x A3 | y A3"),
            ],
        )
        .unwrap()
    }

    fn words(g: &CFGrammar, l: &TruncatedLanguage) -> Vec<String> {
        l.words()
            .iter()
            .map(|w| g.terminals().format_word(w).replace(' ', ""))
            .collect()
    }

    fn nat(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn validate_reports() {
        let r = validate(&dyck());
        assert_eq!(r.productive, BTreeSet::from([0]));
        assert_eq!(r.nullable, BTreeSet::from([0]));
        assert!(!r.has_unit_or_epsilon_cycle && !r.is_right_linear);

        let g = CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "S | a")]).unwrap();
        let r = validate(&g);
        assert!(r.has_unit_or_epsilon_cycle);
        assert_eq!(r.divergent_variable, Some(0));
        assert!(matches!(enumerate(&g, 2), Err(Error::Divergent(_))));

        let g = CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "S")]).unwrap();
        assert!(validate(&g).has_unit_or_epsilon_cycle);

        let r = validate(&xstar_ystar());
        assert!(r.is_right_linear);
        assert_eq!(r.productive, BTreeSet::from([0, 1]));
        assert_eq!(r.reachable, BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn epsilon_cycle_through_nullable_context() {
        // S -> A S | a, A -> eps : S ⇒ A S ⇒ S
        let g = CFGrammar::from_rules(&["a"], &["S", "A"], "S", &[("S", "A S | a"), ("A", "eps")])
            .unwrap();
        assert!(validate(&g).divergent_variable.is_some());
    }

    #[test]
    fn enumerate_examples() {
        let g = dyck();
        assert_eq!(
            words(&g, &enumerate(&g, 4).unwrap()),
            ["eps", "ab", "aabb", "abab"]
        );
        let g = lukasiewicz();
        assert_eq!(
            words(&g, &enumerate(&g, 5).unwrap()),
            ["a", "baa", "babaa", "bbaaa"]
        );
        let g = palindromes();
        assert_eq!(
            words(&g, &enumerate(&g, 2).unwrap()),
            ["eps", "x", "y", "xx", "yy"]
        );
    }

    #[test]
    fn lukasiewicz_words_up_to_seven() {
        let g = lukasiewicz();
        let got = words(&g, &enumerate(&g, 7).unwrap());
        assert_eq!(
            got,
            ["a", "baa", "babaa", "bbaaa", "bababaa", "babbaaa", "bbaabaa", "bbabaaa", "bbbaaaa"]
        );
    }

    #[test]
    fn word_cap_is_enforced() {
        let g = palindromes();
        assert!(matches!(
            enumerate_with_cap(&g, 10, 20),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            nat(&count_derivations(&dyck(), 8).unwrap()[0]),
            [1, 0, 1, 0, 2, 0, 5, 0, 14]
        );
        assert_eq!(
            nat(&count_derivations(&if_then_else(), 7).unwrap()[0]),
            [1, 1, 2, 3, 6, 10, 20, 35]
        );
        let g = CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "a | a a")]).unwrap();
        assert_eq!(nat(&count_derivations(&g, 2).unwrap()[0]), [0, 1, 1]);
    }

    #[test]
    fn certificates() {
        assert!(certify_unambiguous(&dyck(), 10).unwrap().unambiguous);
        assert!(certify_unambiguous(&palindromes(), 8).unwrap().unambiguous);
        let g = CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "a S | S a | a")]).unwrap();
        let c = certify_unambiguous(&g, 3).unwrap();
        assert!(!c.unambiguous);
        assert_eq!(
            g.terminals()
                .format_word(c.counterexample.as_ref().unwrap()),
            "a a"
        );
        assert_eq!(
            parse_count(&g, 0, c.counterexample.as_ref().unwrap()).unwrap(),
            BigUint::from(2u32)
        );
        // left recursion through a non-nullable variable
        let g = CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "a | S S")]).unwrap();
        let c = certify_unambiguous(&g, 4).unwrap();
        assert_eq!(
            g.terminals()
                .format_word(c.counterexample.as_ref().unwrap()),
            "a a a"
        );
        assert_eq!(
            parse_count(&g, 0, &Word(vec![0; 4])).unwrap(),
            BigUint::from(5u32)
        );
    }

    #[test]
    fn rule_text_round_trip() {
        let g = if_then_else();
        assert_eq!(g.rule_text(2), "B -> x S | x A y B");
        assert_eq!(dyck().rule_text(0), "S -> eps | a S b S");
    }

    #[test]
    fn constructor_rejects_malformed() {
        assert!(CFGrammar::from_rules(&["a"], &["S", "T"], "S", &[("S", "a")]).is_err());
        assert!(CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "a | a")]).is_err());
        assert!(CFGrammar::from_rules(&["a"], &["a"], "a", &[("a", "a")]).is_err());
        assert!(CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "q")]).is_err());
    }
}
