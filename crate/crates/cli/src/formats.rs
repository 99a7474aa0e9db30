//! Text file formats: grammars, languages, automata, chain specifications and
//! presentations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nchilbert_core::algebra::{RatFunc, UPoly, Q};
use nchilbert_core::grammar::CFGrammar;
use nchilbert_core::gsb::{MonomialOrder, NCPolynomial};
use nchilbert_core::homology::{ChainDescriptor, HomologySpec, PatternFamily, RelationDescriptor};
use nchilbert_core::lang::{minimize_antichain, Alphabet, FiniteLanguage, Letter, Word};
use nchilbert_core::regular::{Dfa, RegularLanguage};

use crate::CliError;

type Res<T> = Result<T, CliError>;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// Non-empty lines with `#` comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .map(str::trim)
}

/// Grammar file: `terminals:`, optional `variables:` and `start:` headers, then
/// rules `A -> alt | alt` (`eps` is the empty word). Without `variables:` the
/// variables are the rule heads in order of appearance; the start defaults to the
/// first variable.
pub fn parse_grammar(text: &str) -> Res<CFGrammar> {
    let mut terminals: Option<Vec<String>> = None;
    let mut variables: Option<Vec<String>> = None;
    let mut start: Option<String> = None;
    let mut rules: Vec<(String, String)> = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(r) = header(line, "terminals") {
            terminals = Some(r.split_whitespace().map(String::from).collect());
        } else if let Some(r) = header(line, "variables") {
            variables = Some(r.split_whitespace().map(String::from).collect());
        } else if let Some(r) = header(line, "start") {
            start = Some(r.to_string());
        } else if let Some((head, body)) = line.split_once("->") {
            let head = head.trim();
            if head.is_empty() || head.contains(char::is_whitespace) {
                return Err(bad(format!("line {no}: malformed rule head {head:?}")));
            }
            rules.push((head.to_string(), body.trim().to_string()));
        } else {
            return Err(bad(format!(
                "line {no}: expected a header or a rule, found {line:?}"
            )));
        }
    }
    let terminals = terminals.ok_or_else(|| bad("grammar has no `terminals:` line"))?;
    let variables = variables.unwrap_or_else(|| {
        let mut v: Vec<String> = Vec::new();
        for (h, _) in &rules {
            if !v.contains(h) {
                v.push(h.clone());
            }
        }
        v
    });
    let start = start
        .or_else(|| variables.first().cloned())
        .ok_or_else(|| bad("grammar has no variables"))?;
    let t: Vec<&str> = terminals.iter().map(String::as_str).collect();
    let v: Vec<&str> = variables.iter().map(String::as_str).collect();
    let r: Vec<(&str, &str)> = rules
        .iter()
        .map(|(h, b)| (h.as_str(), b.as_str()))
        .collect();
    Ok(CFGrammar::from_rules(&t, &v, &start, &r)?)
}

/// The grammar file text of `g`, one line per variable.
pub fn format_grammar(g: &CFGrammar) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "terminals: {}", g.terminals().symbols().join(" "));
    let _ = writeln!(s, "variables: {}", g.variables().symbols().join(" "));
    let _ = writeln!(s, "start: {}", g.variable_name(g.start()));
    for v in 0..g.variables().len() {
        let _ = writeln!(s, "{}", g.rule_text(v));
    }
    s
}

/// Language file: optional `alphabet:` header, then one word per line (`eps` for
/// the empty word). Without a header or a given alphabet, letters are numbered in
/// order of first appearance.
pub fn parse_language(text: &str, alphabet: Option<&Alphabet>) -> Res<(Alphabet, FiniteLanguage)> {
    let mut declared: Option<Alphabet> = alphabet.cloned();
    let mut raw: Vec<(usize, Vec<String>)> = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(r) = header(line, "alphabet") {
            let a = Alphabet::new(r.split_whitespace())?;
            if let Some(given) = &declared {
                if given.symbols() != a.symbols() {
                    return Err(bad(format!(
                        "line {no}: alphabet differs from the expected one"
                    )));
                }
            }
            declared = Some(a);
        } else if line == "eps" {
            raw.push((no, Vec::new()));
        } else {
            raw.push((no, line.split_whitespace().map(String::from).collect()));
        }
    }
    let alphabet = match declared {
        Some(a) => a,
        None => {
            let mut seen: Vec<String> = Vec::new();
            for (_, w) in &raw {
                for s in w {
                    if !seen.contains(s) {
                        seen.push(s.clone());
                    }
                }
            }
            Alphabet::new(seen.iter().map(String::as_str))?
        }
    };
    let mut words = FiniteLanguage::new();
    for (no, w) in raw {
        let letters = w
            .iter()
            .map(|s| {
                alphabet
                    .index_of(s)
                    .ok_or_else(|| bad(format!("line {no}: unknown symbol {s:?}")))
            })
            .collect::<Res<Vec<Letter>>>()?;
        words.insert(Word(letters));
    }
    Ok((alphabet, words))
}

/// Automaton file: `alphabet:` header, transitions `state symbol -> state`,
/// `accepting: ...` and `initial: s`. Missing transitions go to a rejecting sink.
pub fn parse_automaton(text: &str) -> Res<(Alphabet, Dfa)> {
    let mut alphabet: Option<Alphabet> = None;
    let mut names: BTreeMap<String, usize> = BTreeMap::new();
    let id = |s: &str, names: &mut BTreeMap<String, usize>| -> usize {
        let next = names.len();
        *names.entry(s.to_string()).or_insert(next)
    };
    let mut edges: Vec<(usize, String, usize, usize)> = Vec::new();
    let mut accepting: Vec<usize> = Vec::new();
    let mut initial: Option<usize> = None;
    for (no, line) in content_lines(text) {
        if let Some(r) = header(line, "alphabet") {
            alphabet = Some(Alphabet::new(r.split_whitespace())?);
        } else if let Some(r) = header(line, "accepting") {
            accepting.extend(r.split_whitespace().map(|s| id(s, &mut names)));
        } else if let Some(r) = header(line, "initial") {
            initial = Some(id(r, &mut names));
        } else if let Some((lhs, to)) = line.split_once("->") {
            let parts: Vec<&str> = lhs.split_whitespace().collect();
            let to = to.trim();
            if parts.len() != 2 || to.is_empty() || to.contains(char::is_whitespace) {
                return Err(bad(format!("line {no}: expected `state symbol -> state`")));
            }
            let (from, sym) = (id(parts[0], &mut names), parts[1].to_string());
            edges.push((no, sym, from, id(to, &mut names)));
        } else {
            return Err(bad(format!(
                "line {no}: unrecognized automaton line {line:?}"
            )));
        }
    }
    let alphabet = alphabet.ok_or_else(|| bad("automaton has no `alphabet:` line"))?;
    let initial = initial.ok_or_else(|| bad("automaton has no `initial:` line"))?;
    let n = alphabet.len();
    let sink = names.len();
    let mut trans = vec![vec![sink; n]; sink + 1];
    let mut set = vec![vec![false; n]; sink];
    for (no, sym, from, to) in edges {
        let x = alphabet
            .index_of(&sym)
            .ok_or_else(|| bad(format!("line {no}: unknown symbol {sym:?}")))?
            as usize;
        if set[from][x] && trans[from][x] != to {
            return Err(bad(format!("line {no}: automaton is not deterministic")));
        }
        set[from][x] = true;
        trans[from][x] = to;
    }
    let mut acc = vec![false; sink + 1];
    for a in accepting {
        acc[a] = true;
    }
    let dfa = Dfa::new(n, trans, acc, initial)?.minimize();
    Ok((alphabet, dfa))
}

/// A regular language from a grammar file (right-linear), an automaton file or a
/// finite language file, told apart by their headers.
pub fn parse_regular(text: &str) -> Res<RegularLanguage> {
    let has = |key: &str| content_lines(text).any(|(_, l)| header(l, key).is_some());
    if has("terminals") {
        Ok(RegularLanguage::RightLinear(parse_grammar(text)?))
    } else if has("initial") {
        let (alphabet, dfa) = parse_automaton(text)?;
        Ok(RegularLanguage::Automaton { alphabet, dfa })
    } else {
        let (alphabet, words) = parse_language(text, None)?;
        let dfa = Dfa::from_finite(alphabet.len(), &words);
        Ok(RegularLanguage::Automaton { alphabet, dfa })
    }
}

/// Polynomial in `t` such as `1 - 4*t^2` or `2*t^5 + 1/2*t`.
pub fn parse_upoly(text: &str) -> Res<UPoly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(bad("empty polynomial"));
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<Q> = Vec::new();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, power) = match body.find('t') {
            None => (body, 0usize),
            Some(p) => {
                let c = body[..p].trim_end_matches('*');
                let rest = &body[p + 1..];
                let k = match rest.strip_prefix('^') {
                    Some(k) => k
                        .parse::<usize>()
                        .map_err(|_| bad(format!("bad exponent in {term:?}")))?,
                    None if rest.is_empty() => 1,
                    None => return Err(bad(format!("bad term {term:?}"))),
                };
                (c, k)
            }
        };
        let mut c = if coef.is_empty() {
            Q::from_integer(1.into())
        } else {
            parse_q(coef)?
        };
        if neg {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Q::from_integer(0.into()));
        }
        coeffs[power] += c;
    }
    Ok(UPoly::from_coeffs(coeffs))
}

fn parse_q(s: &str) -> Res<Q> {
    s.parse::<Q>().map_err(|_| bad(format!("bad number {s:?}")))
}

/// `num / den` with polynomial parts, e.g. `(2*t^5)/(1-t^2)`.
pub fn parse_ratfunc(text: &str) -> Res<RatFunc> {
    // split at a top-level slash, ignoring those inside parentheses or coefficients
    let mut depth = 0i32;
    let mut split = None;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0
                && (text[..i].trim_end().ends_with(')')
                    || text[i + 1..].trim_start().starts_with('(')) =>
            {
                split = Some(i)
            }
            _ => {}
        }
    }
    match split {
        Some(i) => {
            let den = parse_upoly(&text[i + 1..])?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(RatFunc::new(parse_upoly(&text[..i])?, den))
        }
        None => Ok(RatFunc::from_poly(parse_upoly(text)?)),
    }
}

/// Contents of a chain specification file.
#[derive(Clone, Debug)]
pub enum SpecFile {
    Homology(HomologySpec),
    Uchain2 {
        nm: usize,
        r: RegularLanguage,
        rp: RegularLanguage,
        l: CFGrammar,
    },
}

/// Chain specification: `n:`, optional `alphabet:`, lines
/// `chain i: grammar <file> | right-linear <file> | finite <file> | rational <num>/<den>`
/// and `gldim: <k+1> | infinite-uchain2 R=<file> Rp=<file> L=<grammar>`. Referenced
/// files are read through `load`.
pub fn parse_spec(text: &str, load: &dyn Fn(&str) -> Res<String>) -> Res<SpecFile> {
    let mut n: Option<usize> = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut chains: BTreeMap<usize, ChainDescriptor> = BTreeMap::new();
    let mut gldim: Option<&str> = None;
    for (no, line) in content_lines(text) {
        if let Some(r) = header(line, "n") {
            n = Some(
                r.parse()
                    .map_err(|_| bad(format!("line {no}: bad generator count {r:?}")))?,
            );
        } else if let Some(r) = header(line, "alphabet") {
            alphabet = Some(Alphabet::new(r.split_whitespace())?);
        } else if let Some(r) = header(line, "gldim") {
            gldim = Some(r);
        } else if let Some(rest) = line.strip_prefix("chain ") {
            let (idx, body) = rest
                .split_once(':')
                .ok_or_else(|| bad(format!("line {no}: expected `chain i: ...`")))?;
            let i: usize = idx
                .trim()
                .parse()
                .map_err(|_| bad(format!("line {no}: bad chain index")))?;
            let body = body.trim();
            let (kind, arg) = body
                .split_once(char::is_whitespace)
                .ok_or_else(|| bad(format!("line {no}: missing argument")))?;
            let arg = arg.trim();
            let desc = match kind {
                "grammar" => ChainDescriptor::Grammar(parse_grammar(&load(arg)?)?),
                "right-linear" => ChainDescriptor::RightLinear(parse_grammar(&load(arg)?)?),
                "finite" => {
                    ChainDescriptor::Finite(parse_language(&load(arg)?, alphabet.as_ref())?.1)
                }
                "rational" => ChainDescriptor::Rational(parse_ratfunc(arg)?),
                other => return Err(bad(format!("line {no}: unknown chain kind {other:?}"))),
            };
            if chains.insert(i, desc).is_some() {
                return Err(bad(format!("line {no}: chain {i} given twice")));
            }
        } else {
            return Err(bad(format!("line {no}: unrecognized line {line:?}")));
        }
    }
    let n = n.ok_or_else(|| bad("specification has no `n:` line"))?;
    let gldim = gldim.ok_or_else(|| bad("specification has no `gldim:` line"))?;
    if let Some(rest) = gldim.strip_prefix("infinite-uchain2") {
        let mut parts: BTreeMap<&str, &str> = BTreeMap::new();
        for kv in rest.split_whitespace() {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=file, found {kv:?}")))?;
            parts.insert(k, v);
        }
        let get = |k: &str| {
            parts
                .get(k)
                .copied()
                .ok_or_else(|| bad(format!("infinite-uchain2 needs {k}=<file>")))
        };
        return Ok(SpecFile::Uchain2 {
            nm: n,
            r: parse_regular(&load(get("R")?)?)?,
            rp: parse_regular(&load(get("Rp")?)?)?,
            l: parse_grammar(&load(get("L")?)?)?,
        });
    }
    let gl: usize = gldim
        .parse()
        .map_err(|_| bad(format!("bad gldim {gldim:?}")))?;
    let expected: Vec<usize> = (1..=chains.len()).collect();
    if chains.keys().copied().collect::<Vec<_>>() != expected {
        return Err(bad("chains must be numbered 1, 2, ... without gaps"));
    }
    let mut spec = HomologySpec::new(n, chains.into_values().collect(), gl)?;
    if let Some(a) = alphabet {
        spec = spec.with_alphabet(a)?;
    }
    Ok(SpecFile::Homology(spec))
}

/// A graded presentation: generators in decreasing priority and relations.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub order: MonomialOrder,
    pub relations: Vec<NCPolynomial>,
    pub families: Vec<PatternFamily>,
}

impl Presentation {
    /// Relation words for the counting oracle; every relation must be a single word.
    pub fn monomial_relations(&self) -> Res<RelationDescriptor> {
        let mut words = FiniteLanguage::new();
        for r in &self.relations {
            let mut it = r.terms();
            match (it.next(), it.next()) {
                (Some((w, _)), None) => {
                    words.insert(w.clone());
                }
                _ => return Err(bad(
                    "the oracle needs monomial relations; run gsb for a leading-word basis first",
                )),
            }
        }
        if self.families.is_empty() {
            Ok(RelationDescriptor::Antichain(minimize_antichain(&words)))
        } else {
            Ok(RelationDescriptor::Patterns {
                finite: words,
                families: self.families.clone(),
            })
        }
    }
}

/// Presentation file: `alphabet:` line (largest generator first), one relation per
/// line such as `a' x - x a'`, and optional
/// `family: [left=<file>] middle=<grammar> [right=<file>]` lines for infinite sets of
/// monomial relations `left · L(middle) · right`.
pub fn parse_presentation(text: &str, load: &dyn Fn(&str) -> Res<String>) -> Res<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relations = Vec::new();
    let mut families = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(r) = header(line, "alphabet") {
            alphabet = Some(Alphabet::new(r.split_whitespace())?);
            continue;
        }
        let a = alphabet
            .as_ref()
            .ok_or_else(|| bad(format!("line {no}: relations before the `alphabet:` line")))?;
        if let Some(r) = header(line, "family") {
            let mut parts: BTreeMap<&str, &str> = BTreeMap::new();
            for kv in r.split_whitespace() {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| bad(format!("line {no}: expected key=file")))?;
                parts.insert(k, v);
            }
            let side = |k: &str| -> Res<RegularLanguage> {
                match parts.get(k) {
                    Some(f) => parse_regular(&load(f)?),
                    None => Ok(RegularLanguage::Automaton {
                        alphabet: a.clone(),
                        dfa: Dfa::from_finite(
                            a.len(),
                            &FiniteLanguage::from_words([Word::empty()]),
                        ),
                    }),
                }
            };
            let middle = parse_grammar(&load(
                parts
                    .get("middle")
                    .ok_or_else(|| bad(format!("line {no}: family needs middle=")))?,
            )?)?;
            families.push(PatternFamily {
                left: side("left")?,
                middle,
                right: side("right")?,
            });
        } else {
            relations
                .push(NCPolynomial::parse(line, a).map_err(|e| bad(format!("line {no}: {e}")))?);
        }
    }
    let alphabet = alphabet.ok_or_else(|| bad("presentation has no `alphabet:` line"))?;
    let order = MonomialOrder::by_alphabet(&alphabet);
    Ok(Presentation {
        alphabet,
        order,
        relations,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_files(name: &str) -> Res<String> {
        Err(bad(format!("no file {name}")))
    }

    #[test]
    fn grammar_round_trip() {
        let text = "terminals: x y\nvariables: S T\nstart: S\nS -> eps | x S y S\nT -> a\n";
        assert!(parse_grammar(text).is_err());
        let text =
            "# comment\nterminals: x y a\nvariables: S T\nstart: S\nS -> eps | x S y S\nT -> a\n";
        let g = parse_grammar(text).unwrap();
        assert_eq!(parse_grammar(&format_grammar(&g)).unwrap(), g);
        assert_eq!(
            format_grammar(&g),
            "terminals: x y a\nvariables: S T\nstart: S\nS -> eps | x S y S\nT -> a\n"
        );
        let inferred = parse_grammar("terminals: a b\nS -> eps | a S b S\n").unwrap();
        assert_eq!(inferred.variable_name(inferred.start()), "S");
        assert!(parse_grammar("terminals: a\nS => a\n").is_err());
    }

    #[test]
    fn languages() {
        let (a, l) = parse_language("alphabet: x y z\nx y\n# c\ny z\neps\n", None).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(l.len(), 3);
        let (a, _) = parse_language("y x\nx x\n", None).unwrap();
        assert_eq!(a.symbols(), ["y", "x"]);
        assert!(parse_language("alphabet: x\nx q\n", None).is_err());
    }

    #[test]
    fn automata() {
        let text = "alphabet: x y\ninitial: p\np x -> p\np y -> q\nq y -> q\naccepting: p q\n";
        let (_, dfa) = parse_automaton(text).unwrap();
        assert!(dfa.accepts(&[0, 0, 1, 1]));
        assert!(!dfa.accepts(&[1, 0]));
        assert!(parse_automaton("alphabet: x\ninitial: p\np x -> p\np x -> q\n").is_err());
        let RegularLanguage::Automaton { dfa, .. } = parse_regular("x\n").unwrap() else {
            panic!()
        };
        assert!(dfa.accepts(&[0]) && !dfa.accepts(&[]));
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            parse_upoly("1 - 4*t^2").unwrap(),
            UPoly::from_ints(&[1, 0, -4])
        );
        assert_eq!(parse_upoly("-t + 2").unwrap(), UPoly::from_ints(&[2, -1]));
        let f = parse_ratfunc("(2*t^5)/(1-t^2)").unwrap();
        assert_eq!(
            f,
            RatFunc::new(
                UPoly::from_ints(&[0, 0, 0, 0, 0, 2]),
                UPoly::from_ints(&[1, 0, -1])
            )
        );
        assert_eq!(
            parse_ratfunc("1/2*t").unwrap().num().coeff(1),
            Q::new(1.into(), 2.into())
        );
        assert!(parse_ratfunc("(1)/(0)").is_err());
        assert!(parse_upoly("t^x").is_err());
    }

    #[test]
    fn specs() {
        let load = |name: &str| -> Res<String> {
            match name {
                "d.gf" => Ok("terminals: a b\nS -> eps | a S b S\n".into()),
                "x.lang" => Ok("x\n".into()),
                _ => no_files(name),
            }
        };
        let text =
            "n: 3\nchain 1: rational (2*t^5)/(1-t^2)\nchain 2: rational t^6/(1-t^3)\ngldim: 3\n";
        let SpecFile::Homology(s) = parse_spec(text, &load).unwrap() else {
            panic!()
        };
        assert_eq!((s.n, s.chains.len(), s.gl_dim), (3, 2, 3));
        let u = "n: 3\ngldim: infinite-uchain2 R=x.lang Rp=x.lang L=d.gf\n";
        assert!(matches!(
            parse_spec(u, &load).unwrap(),
            SpecFile::Uchain2 { nm: 3, .. }
        ));
        assert!(parse_spec("n: 3\nchain 2: rational t\ngldim: 3\n", &load).is_err());
        assert!(parse_spec("n: 3\nchain 1: grammar missing.gf\ngldim: 2\n", &load).is_err());
    }

    #[test]
    fn presentations() {
        let p = parse_presentation("alphabet: a' x\na' x - x a'\n", &no_files).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert!(p.monomial_relations().is_err());
        let p = parse_presentation("alphabet: x y\nx x\nx x y\n", &no_files).unwrap();
        let RelationDescriptor::Antichain(b) = p.monomial_relations().unwrap() else {
            panic!()
        };
        assert_eq!(b.len(), 1);
        assert!(parse_presentation("x y\n", &no_files).is_err());
    }
}
