//! Regular languages: automata, right quotients and minimal right-linear grammars.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grammar::{self, CFGrammar, Production, Symbol};
use crate::lang::{Alphabet, FiniteLanguage, Letter, Word};

/// Default cap on the number of automaton states built by any construction.
pub const DEFAULT_STATE_CAP: usize = 100_000;

/// Complete deterministic automaton over letters `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    n: usize,
    trans: Vec<Vec<usize>>,
    accepting: Vec<bool>,
    initial: usize,
}

impl Dfa {
    pub fn new(
        n: usize,
        trans: Vec<Vec<usize>>,
        accepting: Vec<bool>,
        initial: usize,
    ) -> Result<Self> {
        let states = trans.len();
        if accepting.len() != states || initial >= states {
            return Err(Error::Invalid("automaton state tables disagree".into()));
        }
        for row in &trans {
            if row.len() != n || row.iter().any(|&s| s >= states) {
                return Err(Error::Invalid(
                    "automaton transition table is not total".into(),
                ));
            }
        }
        Ok(Dfa {
            n,
            trans,
            accepting,
            initial,
        })
    }

    /// Accepts every word over `n` letters.
    pub fn universal(n: usize) -> Self {
        Dfa {
            n,
            trans: vec![vec![0; n]],
            accepting: vec![true],
            initial: 0,
        }
    }

    /// Accepts nothing.
    pub fn empty(n: usize) -> Self {
        Dfa {
            n,
            trans: vec![vec![0; n]],
            accepting: vec![false],
            initial: 0,
        }
    }

    /// Trie automaton of a finite language.
    pub fn from_finite(n: usize, words: &FiniteLanguage) -> Self {
        let mut trans: Vec<Vec<Option<usize>>> = vec![vec![None; n]];
        let mut accepting = vec![false];
        for w in words.iter() {
            let mut s = 0;
            for &x in w.letters() {
                s = match trans[s][x as usize] {
                    Some(t) => t,
                    None => {
                        trans.push(vec![None; n]);
                        accepting.push(false);
                        let t = trans.len() - 1;
                        trans[s][x as usize] = Some(t);
                        t
                    }
                };
            }
            accepting[s] = true;
        }
        let dead = trans.len();
        let mut total: Vec<Vec<usize>> = trans
            .into_iter()
            .map(|r| r.into_iter().map(|t| t.unwrap_or(dead)).collect())
            .collect();
        total.push(vec![dead; n]);
        accepting.push(false);
        Dfa {
            n,
            trans: total,
            accepting,
            initial: 0,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn step(&self, s: usize, x: Letter) -> usize {
        self.trans[s][x as usize]
    }

    pub fn run(&self, from: usize, letters: &[Letter]) -> usize {
        letters.iter().fold(from, |s, &x| self.step(s, x))
    }

    pub fn accepts(&self, letters: &[Letter]) -> bool {
        self.accepting[self.run(self.initial, letters)]
    }

    /// Same automaton started elsewhere: the right quotient by any word leading there.
    pub fn with_initial(&self, s: usize) -> Dfa {
        Dfa {
            initial: s,
            ..self.clone()
        }
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|a| !a).collect(),
            ..self.clone()
        }
    }

    /// Product automaton accepting where `keep(a, b)` holds.
    pub fn product(&self, other: &Dfa, keep: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        if self.n != other.n {
            return Err(Error::Invalid("automata over different alphabets".into()));
        }
        let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (a, b) = pairs[i];
            let mut row = Vec::with_capacity(self.n);
            for x in 0..self.n {
                let p = (self.trans[a][x], other.trans[b][x]);
                let id = *index.entry(p).or_insert_with(|| {
                    pairs.push(p);
                    pairs.len() - 1
                });
                row.push(id);
            }
            trans.push(row);
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(a, b)| keep(self.accepting[a], other.accepting[b]))
            .collect();
        Ok(Dfa {
            n: self.n,
            trans,
            accepting,
            initial: 0,
        })
    }

    fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let s = order[i];
            for &t in &self.trans[s] {
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }

    /// Minimal complete automaton, states numbered in breadth-first discovery order
    /// from the initial state (letters in alphabet order).
    pub fn minimize(&self) -> Dfa {
        let order = self.reachable();
        let mut local = vec![usize::MAX; self.num_states()];
        for (i, &s) in order.iter().enumerate() {
            local[s] = i;
        }
        let m = order.len();
        // Moore refinement
        let mut class: Vec<usize> = order
            .iter()
            .map(|&s| usize::from(self.accepting[s]))
            .collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut sigs: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            let mut next = vec![0; m];
            for i in 0..m {
                let s = order[i];
                let mut sig = Vec::with_capacity(self.n + 1);
                sig.push(class[i]);
                sig.extend(self.trans[s].iter().map(|&t| class[local[t]]));
                let k = sigs.len();
                next[i] = *sigs.entry(sig).or_insert(k);
            }
            let new_count = sigs.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // canonical renumbering by BFS
        let mut id = vec![usize::MAX; count];
        let mut reps = Vec::new();
        let start = class[0];
        id[start] = 0;
        reps.push(order[0]);
        let mut i = 0;
        while i < reps.len() {
            let s = reps[i];
            for &t in &self.trans[s] {
                let c = class[local[t]];
                if id[c] == usize::MAX {
                    id[c] = reps.len();
                    reps.push(t);
                }
            }
            i += 1;
        }
        let trans = reps
            .iter()
            .map(|&s| self.trans[s].iter().map(|&t| id[class[local[t]]]).collect())
            .collect();
        let accepting = reps.iter().map(|&s| self.accepting[s]).collect();
        Dfa {
            n: self.n,
            trans,
            accepting,
            initial: 0,
        }
    }

    /// True iff both automata accept the same words.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        match self.product(other, |a, b| a != b) {
            Ok(p) => !p.accepting.iter().any(|&a| a),
            Err(_) => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.reachable().iter().all(|&s| !self.accepting[s])
    }

    /// Number of accepted words of each length `0..=d`.
    pub fn count_words(&self, d: usize) -> Vec<BigUint> {
        let mut cur = vec![BigUint::zero(); self.num_states()];
        cur[self.initial] = BigUint::from(1u32);
        let mut out = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let total: BigUint = cur
                .iter()
                .zip(&self.accepting)
                .filter(|(_, &a)| a)
                .map(|(c, _)| c.clone())
                .sum();
            out.push(total);
            if k == d {
                break;
            }
            let mut next = vec![BigUint::zero(); self.num_states()];
            for (s, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for &t in &self.trans[s] {
                    next[t] += c;
                }
            }
            cur = next;
        }
        out
    }

    /// Accepted words of length `<= d`.
    pub fn words_up_to(&self, d: usize) -> FiniteLanguage {
        // states from which an accepting state is reachable
        let mut live = self.accepting.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for s in 0..self.num_states() {
                if !live[s] && self.trans[s].iter().any(|&t| live[t]) {
                    live[s] = true;
                    changed = true;
                }
            }
        }
        let mut out = FiniteLanguage::new();
        let mut stack = vec![(self.initial, Vec::<Letter>::new())];
        while let Some((s, w)) = stack.pop() {
            if !live[s] {
                continue;
            }
            if self.accepting[s] {
                out.insert(Word(w.clone()));
            }
            if w.len() == d {
                continue;
            }
            for (x, &t) in self.trans[s].iter().enumerate() {
                let mut next = w.clone();
                next.push(x as Letter);
                stack.push((t, next));
            }
        }
        out
    }

    /// Text dump: one `state symbol -> state` line per transition, then
    /// `accepting:` and `initial:` lines.
    pub fn dump(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        for (q, row) in self.trans.iter().enumerate() {
            for (x, &t) in row.iter().enumerate() {
                let _ = writeln!(s, "s{q} {} -> s{t}", alphabet.symbol(x as Letter));
            }
        }
        s.push_str("accepting:");
        for (q, &a) in self.accepting.iter().enumerate() {
            if a {
                let _ = write!(s, " s{q}");
            }
        }
        let _ = writeln!(s, "\ninitial: s{}", self.initial);
        s
    }
}

/// Nondeterministic automaton with epsilon moves, used for closure constructions.
#[derive(Clone, Debug)]
pub struct Nfa {
    n: usize,
    trans: Vec<Vec<Vec<usize>>>,
    eps: Vec<Vec<usize>>,
    accepting: Vec<bool>,
    initial: Vec<usize>,
}

impl Nfa {
    pub fn from_dfa(d: &Dfa) -> Nfa {
        Nfa {
            n: d.n,
            trans: d
                .trans
                .iter()
                .map(|row| row.iter().map(|&t| vec![t]).collect())
                .collect(),
            eps: vec![Vec::new(); d.num_states()],
            accepting: d.accepting.clone(),
            initial: vec![d.initial],
        }
    }

    /// States are the variables; requires a right-linear grammar.
    pub fn from_right_linear(g: &CFGrammar) -> Result<Nfa> {
        if !grammar::validate(g).is_right_linear {
            return Err(Error::Invalid("grammar is not right-linear".into()));
        }
        let n = g.terminals().len();
        let v = g.variables().len();
        let mut nfa = Nfa {
            n,
            trans: vec![vec![Vec::new(); n]; v],
            eps: vec![Vec::new(); v],
            accepting: vec![false; v],
            initial: vec![g.start()],
        };
        for p in g.productions() {
            match p.rhs.as_slice() {
                [] => nfa.accepting[p.lhs] = true,
                [Symbol::Terminal(x), Symbol::Variable(b)] => {
                    nfa.trans[p.lhs][*x as usize].push(*b)
                }
                _ => unreachable!("checked right-linear"),
            }
        }
        Ok(nfa)
    }

    /// `L(self) · L(other)`.
    pub fn concat(&self, other: &Nfa) -> Nfa {
        let off = self.trans.len();
        let mut out = self.clone();
        for row in &other.trans {
            out.trans.push(
                row.iter()
                    .map(|ts| ts.iter().map(|t| t + off).collect())
                    .collect(),
            );
        }
        for row in &other.eps {
            out.eps.push(row.iter().map(|t| t + off).collect());
        }
        for (s, acc) in self.accepting.iter().enumerate() {
            if *acc {
                out.eps[s].extend(other.initial.iter().map(|t| t + off));
            }
        }
        out.accepting = vec![false; off];
        out.accepting.extend(other.accepting.iter().copied());
        out
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// Subset construction.
    pub fn determinize(&self, cap: usize) -> Result<Dfa> {
        let mut start: BTreeSet<usize> = self.initial.iter().copied().collect();
        self.closure(&mut start);
        let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut sets = vec![start.clone()];
        index.insert(start, 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            let mut row = Vec::with_capacity(self.n);
            for x in 0..self.n {
                let mut next: BTreeSet<usize> = BTreeSet::new();
                for &s in &sets[i] {
                    next.extend(self.trans[s][x].iter().copied());
                }
                self.closure(&mut next);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if sets.len() >= cap {
                            return Err(Error::ResourceCap(alloc::format!(
                                "more than {cap} automaton states"
                            )));
                        }
                        sets.push(next.clone());
                        index.insert(next, sets.len() - 1);
                        sets.len() - 1
                    }
                };
                row.push(id);
            }
            trans.push(row);
            i += 1;
        }
        let accepting = sets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q]))
            .collect();
        Ok(Dfa {
            n: self.n,
            trans,
            accepting,
            initial: 0,
        })
    }
}

/// Right quotient of `X* B X*` by the word read so far, for a finite antichain `B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuotientState {
    /// A basis word has been read completely.
    pub absorbed: bool,
    /// Nonempty proper prefixes of basis words that are suffixes of the word read.
    pub suffixes: Vec<Word>,
}

/// Aho–Corasick style automaton for `X* B X*`, with its states.
#[derive(Clone, Debug)]
pub struct IdealAutomaton {
    pub dfa: Dfa,
    pub states: Vec<QuotientState>,
}

/// Deterministic automaton recognizing the words that contain a basis word.
pub fn ideal_automaton(n: usize, basis: &FiniteLanguage) -> Result<IdealAutomaton> {
    ideal_automaton_with_cap(n, basis, DEFAULT_STATE_CAP)
}

pub fn ideal_automaton_with_cap(
    n: usize,
    basis: &FiniteLanguage,
    cap: usize,
) -> Result<IdealAutomaton> {
    if basis.contains(&Word::empty()) {
        // every word is in the ideal
        let st = QuotientState {
            absorbed: true,
            suffixes: Vec::new(),
        };
        return Ok(IdealAutomaton {
            dfa: Dfa::universal(n),
            states: vec![st],
        });
    }
    let mut prefixes: BTreeSet<Word> = BTreeSet::new();
    for w in basis.iter() {
        for k in 1..w.len() {
            prefixes.insert(w.slice(0, k));
        }
    }
    let start = QuotientState {
        absorbed: false,
        suffixes: Vec::new(),
    };
    let mut index: BTreeMap<QuotientState, usize> = BTreeMap::new();
    index.insert(start.clone(), 0);
    let mut states = vec![start];
    let mut trans = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let mut row = Vec::with_capacity(n);
        for x in 0..n as Letter {
            let next = if states[i].absorbed {
                states[i].clone()
            } else {
                let single = Word::from_letters(&[x]);
                let mut cands: Vec<Word> = states[i]
                    .suffixes
                    .iter()
                    .map(|s| s.concat(&single))
                    .collect();
                cands.push(single);
                if cands.iter().any(|c| basis.contains(c)) {
                    QuotientState {
                        absorbed: true,
                        suffixes: Vec::new(),
                    }
                } else {
                    let mut keep: Vec<Word> =
                        cands.into_iter().filter(|c| prefixes.contains(c)).collect();
                    keep.sort();
                    QuotientState {
                        absorbed: false,
                        suffixes: keep,
                    }
                }
            };
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if states.len() >= cap {
                        return Err(Error::ResourceCap(alloc::format!(
                            "more than {cap} automaton states"
                        )));
                    }
                    states.push(next.clone());
                    index.insert(next, states.len() - 1);
                    states.len() - 1
                }
            };
            row.push(id);
        }
        trans.push(row);
        i += 1;
    }
    let accepting = states.iter().map(|s| s.absorbed).collect();
    Ok(IdealAutomaton {
        dfa: Dfa {
            n,
            trans,
            accepting,
            initial: 0,
        },
        states,
    })
}

/// A regular language in one of its three accepted presentations.
#[derive(Clone, Debug)]
pub enum RegularLanguage {
    /// `X* B X*` for a finite antichain `B`.
    Ideal {
        alphabet: Alphabet,
        basis: FiniteLanguage,
    },
    /// Language of a right-linear grammar.
    RightLinear(CFGrammar),
    /// Language of a complete deterministic automaton.
    Automaton { alphabet: Alphabet, dfa: Dfa },
}

impl RegularLanguage {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            RegularLanguage::Ideal { alphabet, .. }
            | RegularLanguage::Automaton { alphabet, .. } => alphabet,
            RegularLanguage::RightLinear(g) => g.terminals(),
        }
    }

    pub fn to_dfa(&self) -> Result<Dfa> {
        self.to_dfa_with_cap(DEFAULT_STATE_CAP)
    }

    pub fn to_dfa_with_cap(&self, cap: usize) -> Result<Dfa> {
        match self {
            RegularLanguage::Ideal { alphabet, basis } => {
                Ok(ideal_automaton_with_cap(alphabet.len(), basis, cap)?.dfa)
            }
            RegularLanguage::RightLinear(g) => Nfa::from_right_linear(g)?.determinize(cap),
            RegularLanguage::Automaton { dfa, .. } => Ok(dfa.clone()),
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        Ok(self.to_dfa()?.accepts(w.letters()))
    }
}

/// `w⁻¹L = {v : wv ∈ L}` as an automaton handle.
pub fn right_quotient(l: &RegularLanguage, w: &Word) -> Result<RegularLanguage> {
    let dfa = l.to_dfa()?;
    let s = dfa.run(dfa.initial, w.letters());
    Ok(RegularLanguage::Automaton {
        alphabet: l.alphabet().clone(),
        dfa: dfa.with_initial(s),
    })
}

/// Minimal right-linear grammar of `L` built from its right quotients: breadth-first
/// from `L` itself, first-in first-out, variable `A_k` for the `k`-th quotient
/// discovered, `A_k -> eps` when the empty word is in it and `A_k -> x A_l` for
/// every letter `x` with `x⁻¹` of it being the `l`-th quotient.
pub fn myhill_nerode_grammar(l: &RegularLanguage) -> Result<CFGrammar> {
    myhill_nerode_grammar_with_cap(l, DEFAULT_STATE_CAP)
}

pub fn myhill_nerode_grammar_with_cap(l: &RegularLanguage, cap: usize) -> Result<CFGrammar> {
    let dfa = l.to_dfa_with_cap(cap)?.minimize();
    let n = dfa.alphabet_size();
    // BFS over quotients; `minimize` already numbers states in that order but the
    // walk is kept explicit so the variable numbering does not hinge on it
    let mut var_of = vec![usize::MAX; dfa.num_states()];
    let mut queue = VecDeque::from([dfa.initial()]);
    let mut visited = vec![dfa.initial()];
    var_of[dfa.initial()] = 0;
    let mut productions = Vec::new();
    while let Some(s) = queue.pop_front() {
        if dfa.is_accepting(s) {
            productions.push(Production {
                lhs: var_of[s],
                rhs: Vec::new(),
            });
        }
        for x in 0..n as Letter {
            let t = dfa.step(s, x);
            if var_of[t] == usize::MAX {
                if visited.len() >= cap {
                    return Err(Error::ResourceCap(alloc::format!(
                        "more than {cap} right quotients"
                    )));
                }
                var_of[t] = visited.len();
                visited.push(t);
                queue.push_back(t);
            }
            productions.push(Production {
                lhs: var_of[s],
                rhs: vec![Symbol::Terminal(x), Symbol::Variable(var_of[t])],
            });
        }
    }
    productions.sort_by_key(|p| p.lhs);
    let names: Vec<String> = (1..=visited.len())
        .map(|k| alloc::format!("A{k}"))
        .collect();
    let variables = Alphabet::new(names)?;
    CFGrammar::new(l.alphabet().clone(), variables, 0, productions)
}
