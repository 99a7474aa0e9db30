//! CYK membership over an internal Chomsky normal form.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{CFGrammar, Symbol};
use crate::lang::{Letter, Word};

/// Membership tester holding a binary-branching form of a grammar:
/// `A -> B C`, `A -> x`, plus a flag for the empty word.
#[derive(Clone, Debug)]
pub struct CykParser {
    vars: usize,
    start: usize,
    binary: Vec<(usize, usize, usize)>,
    unary: Vec<(usize, Letter)>,
    accepts_empty: bool,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Rhs {
    Pair(usize, usize),
    Unit(usize),
    Term(Letter),
}

fn to_cnf(g: &CFGrammar) -> CykParser {
    let mut vars = g.variables.len();
    let mut fresh = || {
        vars += 1;
        vars - 1
    };
    let start = fresh();

    // terminals inside long right-hand sides become their own variables
    let mut term_var = vec![None; g.terminals.len()];
    let mut prods: Vec<(usize, Vec<Symbol>)> = vec![(start, vec![Symbol::Variable(g.start)])];
    for p in &g.productions {
        let rhs = if p.rhs.len() >= 2 {
            p.rhs
                .iter()
                .map(|s| match *s {
                    Symbol::Terminal(x) => {
                        let v = *term_var[x as usize].get_or_insert_with(&mut fresh);
                        Symbol::Variable(v)
                    }
                    v => v,
                })
                .collect()
        } else {
            p.rhs.clone()
        };
        prods.push((p.lhs, rhs));
    }
    for (x, v) in term_var.iter().enumerate() {
        if let Some(v) = v {
            prods.push((*v, vec![Symbol::Terminal(x as Letter)]));
        }
    }

    // binarize
    let mut shaped: Vec<(usize, Vec<Symbol>)> = Vec::new();
    for (lhs, rhs) in prods {
        if rhs.len() <= 2 {
            shaped.push((lhs, rhs));
            continue;
        }
        let mut head = lhs;
        for &s in &rhs[..rhs.len() - 2] {
            let next = fresh();
            shaped.push((head, vec![s, Symbol::Variable(next)]));
            head = next;
        }
        shaped.push((head, rhs[rhs.len() - 2..].to_vec()));
    }

    let mut nullable = vec![false; vars];
    loop {
        let mut changed = false;
        for (lhs, rhs) in &shaped {
            if !nullable[*lhs]
                && rhs
                    .iter()
                    .all(|s| matches!(s, Symbol::Variable(v) if nullable[*v]))
            {
                nullable[*lhs] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // drop epsilon productions, adding the variants that skip nullable symbols
    let mut rules: Vec<BTreeSet<Rhs>> = vec![BTreeSet::new(); vars];
    for (lhs, rhs) in &shaped {
        match rhs.as_slice() {
            [] => {}
            [Symbol::Terminal(x)] => {
                rules[*lhs].insert(Rhs::Term(*x));
            }
            [Symbol::Variable(b)] => {
                rules[*lhs].insert(Rhs::Unit(*b));
            }
            [Symbol::Variable(b), Symbol::Variable(c)] => {
                rules[*lhs].insert(Rhs::Pair(*b, *c));
                if nullable[*c] {
                    rules[*lhs].insert(Rhs::Unit(*b));
                }
                if nullable[*b] {
                    rules[*lhs].insert(Rhs::Unit(*c));
                }
            }
            // long right-hand sides hold no terminals after the rewrite above
            _ => unreachable!("right-hand side not binarized"),
        }
    }

    // unit closure
    let mut binary = BTreeSet::new();
    let mut unary = BTreeSet::new();
    for a in 0..vars {
        let mut reach = BTreeSet::from([a]);
        let mut stack = vec![a];
        while let Some(b) = stack.pop() {
            for r in &rules[b] {
                if let Rhs::Unit(c) = r {
                    if reach.insert(*c) {
                        stack.push(*c);
                    }
                }
            }
        }
        for b in reach {
            for r in &rules[b] {
                match r {
                    Rhs::Pair(c, d) => {
                        binary.insert((a, *c, *d));
                    }
                    Rhs::Term(x) => {
                        unary.insert((a, *x));
                    }
                    Rhs::Unit(_) => {}
                }
            }
        }
    }

    CykParser {
        vars,
        start,
        binary: binary.into_iter().collect(),
        unary: unary.into_iter().collect(),
        accepts_empty: nullable[start],
    }
}

/// True iff `w ∈ L(g)`.
pub fn cyk_member(g: &CFGrammar, w: &Word) -> bool {
    CykParser::new(g).accepts(w.letters())
}

impl CykParser {
    pub fn new(g: &CFGrammar) -> Self {
        to_cnf(g)
    }

    pub fn accepts(&self, letters: &[Letter]) -> bool {
        let cnf = self;
        let n = letters.len();
        if n == 0 {
            return cnf.accepts_empty;
        }
        // table[i][len-1][A]: A derives w[i..i+len]
        let mut table = vec![vec![vec![false; cnf.vars]; n]; n];
        for (i, &x) in letters.iter().enumerate() {
            for &(a, y) in &cnf.unary {
                if x == y {
                    table[i][0][a] = true;
                }
            }
        }
        for len in 2..=n {
            for i in 0..=n - len {
                for split in 1..len {
                    for &(a, b, c) in &cnf.binary {
                        if !table[i][len - 1][a]
                            && table[i][split - 1][b]
                            && table[i + split][len - split - 1][c]
                        {
                            table[i][len - 1][a] = true;
                        }
                    }
                }
            }
        }
        table[0][n - 1][cnf.start]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::{dyck, if_then_else, lukasiewicz};

    #[test]
    fn dyck_membership() {
        let g = dyck();
        let t = g.terminals().clone();
        assert!(cyk_member(&g, &t.parse_word("a a b b").unwrap()));
        assert!(!cyk_member(&g, &t.parse_word("a b a").unwrap()));
        assert!(cyk_member(&g, &Word::empty()));
    }

    #[test]
    fn de_star_contains_e() {
        let g = CFGrammar::from_rules(
            &["a", "b", "e"],
            &["S", "T"],
            "S",
            &[("S", "eps | T e S"), ("T", "eps | a T b T")],
        )
        .unwrap();
        let t = g.terminals().clone();
        assert!(cyk_member(&g, &t.parse_word("e").unwrap()));
        assert!(cyk_member(&g, &t.parse_word("a b e e").unwrap()));
        assert!(!cyk_member(&g, &t.parse_word("a b").unwrap()));
    }

    #[test]
    fn agrees_with_enumeration() {
        for g in [dyck(), lukasiewicz(), if_then_else()] {
            let words = crate::grammar::enumerate(&g, 8).unwrap();
            for len in 0..=8 {
                crate::lang::for_each_word(g.terminals().len(), len, |w| {
                    let w = Word::from_letters(w);
                    assert_eq!(cyk_member(&g, &w), words.words().contains(&w));
                });
            }
        }
    }
}
