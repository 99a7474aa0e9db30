//! Chain languages of monomial algebras, the Hilbert series they determine,
//! and an independent normal-word counting oracle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    eliminate_univariate_with_caps, newton_series, reciprocal_poly, GbCaps, MultiPoly, RatFunc,
    RfPoly, TruncatedSeries, UPoly, Q,
};
use crate::csys::{self, AlgebraicSystem, Gamma};
use crate::error::{Error, Result};
use crate::grammar::{self, AmbiguityCertificate, CFGrammar, CykParser, Symbol};
use crate::lang::{
    for_each_word, minimize_antichain, trunc_boolean, trunc_ideal, trunc_product, Alphabet,
    FiniteLanguage, Letter, SetOp, TruncatedLanguage, Word,
};
use crate::regular::{
    ideal_automaton, myhill_nerode_grammar, Dfa, Nfa, RegularLanguage, DEFAULT_STATE_CAP,
};

fn has_factor(hay: &[Letter], needle: &[Letter]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// An `i`-chain `word = s·t` with `s = word[..split]` an `(i-1)`-chain and `t` its tail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChainElement {
    pub word: Word,
    pub split: usize,
}

impl ChainElement {
    pub fn prefix(&self) -> Word {
        self.word.slice(0, self.split)
    }

    pub fn tail(&self) -> Word {
        self.word.slice(self.split, self.word.len())
    }
}

/// Chain languages `L_1, L_2, ...` of a finite monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chains {
    /// `levels[i - 1]` holds the `i`-chains.
    pub levels: Vec<Vec<ChainElement>>,
    /// Index of the first empty chain language, when one was reached.
    pub gl_dim: Option<usize>,
}

impl Chains {
    /// `L_i` as a set of words, for `i >= 1`; empty past the computed levels.
    pub fn language(&self, i: usize) -> FiniteLanguage {
        match i.checked_sub(1).and_then(|k| self.levels.get(k)) {
            Some(level) => level.iter().map(|c| c.word.clone()).collect(),
            None => FiniteLanguage::new(),
        }
    }
}

fn next_chains(level: &[ChainElement], l1: &FiniteLanguage) -> Vec<ChainElement> {
    let mut out = BTreeSet::new();
    for c in level {
        let t = &c.word.letters()[c.split..];
        let mut tails: BTreeSet<Vec<Letter>> = BTreeSet::new();
        for r in l1.iter() {
            let r = r.letters();
            for o in 1..r.len().min(t.len() + 1) {
                if t.ends_with(&r[..o]) {
                    tails.insert(r[o..].to_vec());
                }
            }
        }
        for u in tails {
            let mut tu = t.to_vec();
            tu.extend_from_slice(&u);
            let body = &tu[..tu.len() - 1];
            if l1.iter().any(|r| has_factor(body, r.letters())) {
                continue;
            }
            out.insert(ChainElement {
                word: c.word.concat(&Word(u)),
                split: c.word.len(),
            });
        }
    }
    out.into_iter().collect()
}

/// Chains `L_1..L_k` of the antichain `l1` for `k <= k_max`. `L_{i+1}` extends each
/// `w = s·t ∈ L_i` by the shortest tails `u` such that a word of `l1` ends at the end
/// of `t·u` and starts inside `t`. `gl_dim` is set when some `L_j`, `j <= k_max + 1`,
/// comes out empty.
pub fn chains_finite(l1: &FiniteLanguage, k_max: usize) -> Result<Chains> {
    if !l1.is_antichain() {
        return Err(Error::Invalid("relation set is not an antichain".into()));
    }
    if let Some(w) = l1.iter().find(|w| w.len() < 2) {
        return Err(Error::Invalid(format!("relation {w} has length < 2")));
    }
    let mut levels: Vec<Vec<ChainElement>> = Vec::new();
    let first: Vec<ChainElement> = l1
        .iter()
        .map(|w| ChainElement {
            word: w.clone(),
            split: 1,
        })
        .collect();
    if first.is_empty() {
        return Ok(Chains {
            levels,
            gl_dim: Some(1),
        });
    }
    if k_max == 0 {
        return Ok(Chains {
            levels,
            gl_dim: None,
        });
    }
    levels.push(first);
    loop {
        let next = next_chains(levels.last().unwrap(), l1);
        if next.is_empty() {
            let j = levels.len() + 1;
            return Ok(Chains {
                levels,
                gl_dim: Some(j),
            });
        }
        if levels.len() == k_max {
            return Ok(Chains {
                levels,
                gl_dim: None,
            });
        }
        levels.push(next);
    }
}

/// `L_k` to degree `d` from the truncated basis `l1` over `n` letters, with
/// `L = X* L_1 X*`, `L^0 = X*`:
/// `L_{2j} = (X⁺L^j ∩ L^jX⁺) \ (X⁺L^jX⁺ ∪ L^{j+1})` and
/// `L_{2j-1} = (X⁺L^{j-1}X⁺ ∩ L^j) \ (X⁺L^j ∪ L^jX⁺)`.
pub fn govorov_chains_trunc(
    l1: &TruncatedLanguage,
    n: usize,
    k: usize,
    d: usize,
) -> Result<TruncatedLanguage> {
    if k == 0 {
        let letters = (0..n as Letter).map(|x| Word::from_letters(&[x])).collect();
        return TruncatedLanguage::new(d, letters);
    }
    let l = trunc_ideal(l1, n, d)?;
    let xp = TruncatedLanguage::nonempty_words(n, d);
    let power = |j: usize| -> Result<TruncatedLanguage> {
        if j == 0 {
            return Ok(TruncatedLanguage::all_words(n, d));
        }
        let mut acc = l.clone();
        for _ in 1..j {
            acc = trunc_product(&acc, &l, d)?;
        }
        Ok(acc)
    };
    let left = |a: &TruncatedLanguage| trunc_product(&xp, a, d);
    let right = |a: &TruncatedLanguage| trunc_product(a, &xp, d);
    let j = k.div_ceil(2);
    if k.is_multiple_of(2) {
        let lj = power(j)?;
        let lj1 = trunc_product(&lj, &l, d)?;
        let keep = trunc_boolean(&left(&lj)?, &right(&lj)?, SetOp::Intersection);
        let drop = trunc_boolean(&left(&right(&lj)?)?, &lj1, SetOp::Union);
        Ok(trunc_boolean(&keep, &drop, SetOp::Difference))
    } else {
        let lj = power(j)?;
        let keep = trunc_boolean(&left(&right(&power(j - 1)?)?)?, &lj, SetOp::Intersection);
        let drop = trunc_boolean(&left(&lj)?, &right(&lj)?, SetOp::Union);
        Ok(trunc_boolean(&keep, &drop, SetOp::Difference))
    }
}

/// How the words of one chain language are given.
#[derive(Clone, Debug)]
pub enum ChainDescriptor {
    Finite(FiniteLanguage),
    RightLinear(CFGrammar),
    Grammar(CFGrammar),
    /// Only the generating function is known.
    Rational(RatFunc),
}

/// Chain descriptors `L_1..L_k` of a monomial algebra on `n` generators with
/// global dimension `k + 1`.
#[derive(Clone, Debug)]
pub struct HomologySpec {
    pub n: usize,
    pub alphabet: Option<Alphabet>,
    pub chains: Vec<ChainDescriptor>,
    pub gl_dim: usize,
}

impl HomologySpec {
    pub fn new(n: usize, chains: Vec<ChainDescriptor>, gl_dim: usize) -> Result<Self> {
        if chains.len() + 1 != gl_dim {
            return Err(Error::Invalid(format!(
                "{} chain descriptors given for global dimension {gl_dim}",
                chains.len()
            )));
        }
        Ok(HomologySpec {
            n,
            alphabet: None,
            chains,
            gl_dim,
        })
    }

    /// Attaches the generator names, needed to read descriptor words.
    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Result<Self> {
        if alphabet.len() != self.n {
            return Err(Error::Invalid(format!(
                "alphabet has {} letters, expected {}",
                alphabet.len(),
                self.n
            )));
        }
        self.alphabet = Some(alphabet);
        Ok(self)
    }
}

fn letter_map(from: &Alphabet, to: &Alphabet) -> Result<Vec<Letter>> {
    from.symbols()
        .iter()
        .map(|s| {
            to.index_of(s)
                .ok_or_else(|| Error::Invalid(format!("symbol {s:?} is not a generator")))
        })
        .collect()
}

fn map_language(words: &FiniteLanguage, map: &[Letter]) -> FiniteLanguage {
    words
        .iter()
        .map(|w| Word(w.letters().iter().map(|&x| map[x as usize]).collect()))
        .collect()
}

/// Words of descriptor `desc` of length `<= d`, over `alphabet`.
pub fn descriptor_words(
    desc: &ChainDescriptor,
    alphabet: &Alphabet,
    d: usize,
) -> Result<TruncatedLanguage> {
    match desc {
        ChainDescriptor::Finite(l) => TruncatedLanguage::new(d, l.truncated(d)),
        ChainDescriptor::RightLinear(g) | ChainDescriptor::Grammar(g) => {
            let words = grammar::enumerate(g, d)?;
            let map = letter_map(g.terminals(), alphabet)?;
            TruncatedLanguage::new(d, map_language(words.words(), &map))
        }
        ChainDescriptor::Rational(_) => {
            Err(Error::Invalid("a rational descriptor has no words".into()))
        }
    }
}

/// Agreement of one descriptor with the chain language computed from `L_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCheck {
    pub level: usize,
    pub declared: usize,
    pub computed: usize,
    pub agrees: bool,
}

/// Compares every descriptor, and the emptiness of `L_{gl_dim}`, with the chain
/// languages obtained from the first descriptor by the truncated formulas, to degree `d`.
pub fn verify_chains(spec: &HomologySpec, d: usize) -> Result<Vec<ChainCheck>> {
    let alphabet = spec
        .alphabet
        .as_ref()
        .ok_or_else(|| Error::Invalid("spec has no generator names".into()))?;
    let first = spec
        .chains
        .first()
        .ok_or_else(|| Error::Invalid("spec has no chain descriptors".into()))?;
    let l1 = descriptor_words(first, alphabet, d)?;
    let mut out = Vec::new();
    for level in 1..=spec.gl_dim {
        let computed = govorov_chains_trunc(&l1, spec.n, level, d)?;
        let declared = match spec.chains.get(level - 1) {
            Some(desc) => descriptor_words(desc, alphabet, d)?,
            None => TruncatedLanguage::new(d, FiniteLanguage::new())?,
        };
        out.push(ChainCheck {
            level,
            declared: declared.words().len(),
            computed: computed.words().len(),
            agrees: declared.words() == computed.words(),
        });
    }
    Ok(out)
}

/// Result of [`hilbert_from_homology`].
#[derive(Clone, Debug)]
pub struct HilbertResult {
    /// Unknowns `E, E1..Ek` followed by the grammar unknowns.
    pub system: AlgebraicSystem,
    /// Minimal polynomial `p(E)` of the Euler characteristic.
    pub euler_poly: RfPoly,
    /// `q(H) = H^deg p · p(1/H)`.
    pub hilbert_poly: RfPoly,
    pub series: TruncatedSeries,
    pub euler_closed_form: Option<ClosedForm>,
    pub closed_form: Option<ClosedForm>,
    /// Per descriptor; present for grammar descriptors.
    pub certificates: Vec<Option<AmbiguityCertificate>>,
}

fn closure_text(g: &CFGrammar, v: usize) -> (String, bool) {
    let mut seen = vec![false; g.variables().len()];
    let mut order = vec![v];
    seen[v] = true;
    let mut i = 0;
    while i < order.len() {
        for p in g.productions_of(order[i]) {
            for s in &p.rhs {
                if let Symbol::Variable(u) = *s {
                    if !seen[u] {
                        seen[u] = true;
                        order.push(u);
                    }
                }
            }
        }
        i += 1;
    }
    let text = order
        .iter()
        .map(|&u| g.rule_text(u))
        .collect::<Vec<_>>()
        .join("; ");
    (text, seen[g.start()])
}

fn fresh_name(names: &[String], base: &str) -> String {
    if !names.iter().any(|n| n == base) {
        return base.into();
    }
    (2..)
        .map(|k| format!("{base}_{k}"))
        .find(|c| !names.contains(c))
        .unwrap()
}

/// Joint system `E = 1 - n t - Σ (-1)^i E_i` together with the defining equations
/// of every descriptor. Non-start grammar variables with equal names and equal
/// reachable rules are shared between descriptors.
pub fn assemble_system(spec: &HomologySpec) -> Result<AlgebraicSystem> {
    let k = spec.chains.len();
    let mut names: Vec<String> = vec!["E".into()];
    names.extend((1..=k).map(|i| format!("E{i}")));
    let mut shared: BTreeMap<(String, String), usize> = BTreeMap::new();
    let mut maps: Vec<Option<Vec<usize>>> = Vec::with_capacity(k);
    for (i, desc) in spec.chains.iter().enumerate() {
        let ChainDescriptor::Grammar(g) = desc else {
            maps.push(None);
            continue;
        };
        if let Some(v) = grammar::validate(g).divergent_variable {
            return Err(Error::Divergent(g.variable_name(v).into()));
        }
        let mut map = vec![0; g.variables().len()];
        for (v, slot) in map.iter_mut().enumerate() {
            if v == g.start() {
                *slot = i + 1;
                continue;
            }
            let name = g.variable_name(v).to_string();
            let (text, reaches_start) = closure_text(g, v);
            if !reaches_start {
                if let Some(&u) = shared.get(&(name.clone(), text.clone())) {
                    *slot = u;
                    continue;
                }
            }
            *slot = names.len();
            names.push(fresh_name(&names, &name));
            if !reaches_start {
                shared.insert((name, text), *slot);
            }
        }
        maps.push(Some(map));
    }

    let m = names.len();
    let var = |i: usize| MultiPoly::var(m, i);
    let constant = |f: RatFunc| MultiPoly::constant(m, f);
    let mut e = &var(0) - &constant(RatFunc::from_poly(UPoly::from_ints(&[1, -(spec.n as i64)])));
    for i in 1..=k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        e = &e + &var(i).scale(&RatFunc::from_i64(sign));
    }
    let mut equations = vec![e];
    let mut emitted: BTreeSet<usize> = BTreeSet::new();
    let mut extra: Vec<(usize, MultiPoly)> = Vec::new();
    for (i, desc) in spec.chains.iter().enumerate() {
        let ei = var(i + 1);
        match desc {
            ChainDescriptor::Finite(l) => {
                let census = l.census(l.max_len().unwrap_or(0));
                let poly = UPoly::from_coeffs(
                    census
                        .iter()
                        .map(|&c| Q::from_integer(BigInt::from(c)))
                        .collect(),
                );
                equations.push(&ei - &constant(RatFunc::from_poly(poly)));
            }
            ChainDescriptor::Rational(f) => equations.push(&ei - &constant(f.clone())),
            ChainDescriptor::RightLinear(g) => {
                equations.push(&ei - &constant(csys::gamma_rational(g)?))
            }
            ChainDescriptor::Grammar(g) => {
                let map = maps[i].as_ref().unwrap();
                let sys = csys::build_system(g);
                equations.push(sys.equations[g.start()].remap(m, map));
                for (v, eq) in sys.equations.iter().enumerate() {
                    if v != g.start() && emitted.insert(map[v]) {
                        extra.push((map[v], eq.remap(m, map)));
                    }
                }
            }
        }
    }
    extra.sort_by_key(|(u, _)| *u);
    equations.extend(extra.into_iter().map(|(_, eq)| eq));
    Ok(AlgebraicSystem {
        unknowns: Alphabet::new(names)?,
        equations,
    })
}

/// `γ(L_i)` to degree `d` straight from the descriptor.
pub fn descriptor_series(desc: &ChainDescriptor, d: usize) -> Result<TruncatedSeries> {
    match desc {
        ChainDescriptor::Finite(l) => Ok(TruncatedSeries::new(
            l.census(d)
                .into_iter()
                .map(|c| Q::from_integer(BigInt::from(c)))
                .collect(),
        )),
        ChainDescriptor::Rational(f) => f.to_series(d),
        ChainDescriptor::RightLinear(g) => csys::gamma_rational(g)?.to_series(d),
        ChainDescriptor::Grammar(g) => {
            let counts = grammar::count_derivations(g, d)?;
            Ok(TruncatedSeries::new(
                counts[g.start()]
                    .iter()
                    .map(|c| Q::from_integer(c.clone().into()))
                    .collect(),
            ))
        }
    }
}

/// `1 - n t - Σ (-1)^i γ(L_i)` to degree `d`, from the descriptors alone.
pub fn euler_series(spec: &HomologySpec, d: usize) -> Result<TruncatedSeries> {
    let mut e = TruncatedSeries::from_poly(&UPoly::from_ints(&[1, -(spec.n as i64)]), d);
    for (i, desc) in spec.chains.iter().enumerate() {
        let g = descriptor_series(desc, d)?;
        e = if (i + 1) % 2 == 0 {
            e.sub(&g)
        } else {
            e.add(&g)
        };
    }
    Ok(e)
}

/// Hilbert series of the algebra described by `spec`: eliminates the joint system
/// down to `p(E)`, passes to `q(H)` and lifts the root whose leading coefficients
/// come from the descriptors, to degree `d`.
pub fn hilbert_from_homology(
    spec: &HomologySpec,
    d: usize,
    cert_deg: usize,
) -> Result<HilbertResult> {
    hilbert_from_homology_with_caps(spec, d, cert_deg, &GbCaps::default())
}

pub fn hilbert_from_homology_with_caps(
    spec: &HomologySpec,
    d: usize,
    cert_deg: usize,
    caps: &GbCaps,
) -> Result<HilbertResult> {
    let system = assemble_system(spec)?;
    let (euler_poly, _) = eliminate_univariate_with_caps(&system.equations, 0, caps)?;
    let hilbert_poly = reciprocal_poly(&euler_poly);
    let seed = euler_series(spec, d)?.inverse()?;
    let series = newton_series(&hilbert_poly, &seed, d)?;
    if series != seed {
        return Err(Error::RootMismatch(
            "Hilbert series root disagrees with the descriptor counts".into(),
        ));
    }
    let mut certificates = Vec::with_capacity(spec.chains.len());
    for desc in &spec.chains {
        certificates.push(match desc {
            ChainDescriptor::Grammar(g) | ChainDescriptor::RightLinear(g) => {
                Some(grammar::certify_unambiguous(g, cert_deg)?)
            }
            _ => None,
        });
    }
    let euler = series.inverse()?;
    Ok(HilbertResult {
        euler_closed_form: ClosedForm::from_root(&euler_poly, &euler),
        closed_form: ClosedForm::from_root(&hilbert_poly, &series),
        system,
        euler_poly,
        hilbert_poly,
        series,
        certificates,
    })
}

/// Explicit root of a polynomial of degree at most two over `Q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Rational(RatFunc),
    /// `(-b + f·sqrt(r)) / (2a)` when `plus`, otherwise `(-b - f·sqrt(r)) / (2a)`.
    Quadratic {
        a: UPoly,
        b: UPoly,
        f: UPoly,
        r: UPoly,
        plus: bool,
    },
}

fn square_part(m: &BigInt) -> (BigInt, BigInt) {
    // m = s^2 · m' with m' squarefree, by trial division
    let mut rest = m.abs();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    let mut steps = 0u32;
    while &p * &p <= rest && steps < 1_000_000 {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            s *= &p;
        }
        p += 1;
        steps += 1;
    }
    if m.is_negative() {
        rest = -rest;
    }
    (s, rest)
}

fn first_nonzero(s: &TruncatedSeries) -> Option<&Q> {
    s.coeffs().iter().find(|c| !c.is_zero())
}

impl ClosedForm {
    /// Closed form of the root of `p` whose expansion is `root`, when `deg p <= 2`.
    pub fn from_root(p: &RfPoly, root: &TruncatedSeries) -> Option<ClosedForm> {
        let c = p.squarefree_part().canonical();
        match c.len() {
            2 => Some(ClosedForm::Rational(RatFunc::new(-&c[0], c[1].clone()))),
            3 => {
                let (a, b, c0) = (c[2].clone(), c[1].clone(), c[0].clone());
                let disc = &(&b * &b) - &(&a * &c0).scale(&Q::from_integer(BigInt::from(4)));
                let (lc, parts) = disc.squarefree_decomposition();
                let mut f = UPoly::one();
                let mut r = UPoly::one();
                for (i, part) in parts.iter().enumerate() {
                    let e = (i + 1) as u32;
                    f = &f * &part.pow(e / 2);
                    if e % 2 == 1 {
                        r = &r * part;
                    }
                }
                let (kf, _) = f.integer_primitive();
                let (kr, _) = r.integer_primitive();
                let f = f.scale(&kf.recip());
                let r = r.scale(&kr.recip());
                let kappa = &lc * &kf * &kf * &kr;
                let (num, den) = (kappa.numer().clone(), kappa.denom().clone());
                let (s, rest) = square_part(&(&num * &den));
                let mut f = f.scale(&Q::new(s, den));
                let r = r.scale(&Q::from_integer(rest));
                if f.coeff(f.valuation()?).is_negative() {
                    f = -&f;
                }
                if r.valuation() != Some(0) || r.coeff(0).is_negative() {
                    return None;
                }
                let two_a = TruncatedSeries::from_poly(
                    &a.scale(&Q::from_integer(BigInt::from(2))),
                    root.bound(),
                );
                let lhs = two_a
                    .mul(root)
                    .add(&TruncatedSeries::from_poly(&b, root.bound()));
                let plus = !first_nonzero(&lhs)?.is_negative();
                Some(ClosedForm::Quadratic { a, b, f, r, plus })
            }
            _ => None,
        }
    }

    /// Text in `t`, e.g. `(-(2*t-1) - (t)*sqrt(1-4*t^2))/(2*t)`.
    pub fn format(&self) -> String {
        let wrap = |p: &UPoly| {
            let text = p.format("t");
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 && !text.starts_with('-') {
                text
            } else {
                format!("({text})")
            }
        };
        match self {
            ClosedForm::Rational(f) => f.format("t"),
            ClosedForm::Quadratic { a, b, f, r, plus } => {
                let sign = if *plus { '+' } else { '-' };
                let root = if f.is_one() {
                    format!("sqrt({})", r.format("t"))
                } else {
                    format!("{}*sqrt({})", wrap(f), r.format("t"))
                };
                let num = if b.is_zero() {
                    if *plus {
                        root
                    } else {
                        format!("-{root}")
                    }
                } else {
                    format!("-{} {sign} {root}", wrap(b))
                };
                let two_a = a.scale(&Q::from_integer(BigInt::from(2)));
                if two_a.is_one() {
                    num
                } else {
                    format!("({num})/{}", wrap(&two_a))
                }
            }
        }
    }

    /// Power-series expansion to degree `d`; needs `r(0)` to be a rational square.
    pub fn expand(&self, d: usize) -> Result<TruncatedSeries> {
        match self {
            ClosedForm::Rational(f) => f.to_series(d),
            ClosedForm::Quadratic { a, b, f, r, plus } => {
                let v = a.valuation().ok_or(Error::ZeroConstantTerm)?;
                let e = d + v;
                let root = TruncatedSeries::from_poly(r, e)
                    .sqrt()?
                    .mul(&TruncatedSeries::from_poly(f, e));
                let b = TruncatedSeries::from_poly(b, e);
                let num = if *plus {
                    root.sub(&b)
                } else {
                    root.add(&b).scale(&Q::from_integer(BigInt::from(-1)))
                };
                if num.coeffs()[..v].iter().any(|c| !c.is_zero()) {
                    return Err(Error::Mismatch(
                        "numerator does not vanish to the order of 2a".into(),
                    ));
                }
                let num = TruncatedSeries::new(num.coeffs()[v..].to_vec());
                let den =
                    TruncatedSeries::from_poly(&a.scale(&Q::from_integer(BigInt::from(2))), e);
                let den = TruncatedSeries::new(den.coeffs()[v..].to_vec());
                num.div(&den)
            }
        }
    }
}

/// Generating function of a regular language, through its minimal right-linear grammar.
pub fn regular_gamma(l: &RegularLanguage) -> Result<RatFunc> {
    csys::gamma_rational(&myhill_nerode_grammar(l)?)
}

fn automaton(alphabet: &Alphabet, dfa: Dfa) -> RegularLanguage {
    RegularLanguage::Automaton {
        alphabet: alphabet.clone(),
        dfa,
    }
}

/// `(R X* ∩ X* R′) \ R X* R′`: the minimal overlaps of words of `r` with words of `rp`.
pub fn overlap_language(r: &Dfa, rp: &Dfa) -> Result<Dfa> {
    let n = r.alphabet_size();
    let all = Nfa::from_dfa(&Dfa::universal(n));
    let (nr, nrp) = (Nfa::from_dfa(r), Nfa::from_dfa(rp));
    let r_any = nr.concat(&all).determinize(DEFAULT_STATE_CAP)?;
    let any_rp = all.concat(&nrp).determinize(DEFAULT_STATE_CAP)?;
    let r_any_rp = nr
        .concat(&all)
        .concat(&nrp)
        .determinize(DEFAULT_STATE_CAP)?;
    let both = r_any.product(&any_rp, |a, b| a && b)?;
    Ok(both.product(&r_any_rp, |a, b| a && !b)?.minimize())
}

/// Result of [`hilbert_uchain2`].
#[derive(Clone, Debug)]
pub struct Uchain2Result {
    pub nm: usize,
    pub gamma_r: RatFunc,
    pub gamma_rp: RatFunc,
    pub overlap: RegularLanguage,
    pub gamma_q: RatFunc,
    pub gamma_l: Gamma,
    /// Minimal polynomial of `E = 1/HS`.
    pub euler_poly: RfPoly,
    pub euler_series: TruncatedSeries,
    pub series: TruncatedSeries,
}

impl Uchain2Result {
    /// `HS^-1` in terms of `g = γ(L)`.
    pub fn expression(&self) -> String {
        format!(
            "1 - {}*t + ({})*({})*g/(1 + ({})*g)",
            self.nm,
            self.gamma_r.format("t"),
            self.gamma_rp.format("t"),
            self.gamma_q.format("t")
        )
    }
}

/// Hilbert series of the algebra with relations `R·L(lg)·R′` on `nm` generators:
/// `HS^-1 = 1 - nm·t + γ(R)γ(R′)γ(L) / (1 + γ(Q)γ(L))` with `Q` the overlap language.
pub fn hilbert_uchain2(
    r: &RegularLanguage,
    rp: &RegularLanguage,
    lg: &CFGrammar,
    nm: usize,
    d: usize,
    cert_deg: usize,
) -> Result<Uchain2Result> {
    let x = r.alphabet();
    if x.symbols() != rp.alphabet().symbols() {
        return Err(Error::Invalid(
            "R and R' are over different alphabets".into(),
        ));
    }
    x.disjoint_union(lg.terminals())?;
    if nm < x.len() + lg.terminals().len() {
        return Err(Error::Invalid(format!(
            "{nm} generators cannot hold both alphabets"
        )));
    }
    let n = x.len();
    let (dr, drp) = (r.to_dfa()?, rp.to_dfa()?);
    if dr.accepts(&[]) || drp.accepts(&[]) {
        return Err(Error::Invalid(
            "R and R' must not contain the empty word".into(),
        ));
    }
    let union = dr.product(&drp, |a, b| a || b)?;
    let plus = Nfa::from_dfa(
        &Dfa::from_finite(n, &FiniteLanguage::from_words([Word::empty()])).complement(),
    );
    let all = Nfa::from_dfa(&Dfa::universal(n));
    let nu = Nfa::from_dfa(&union);
    let inner_left = plus
        .concat(&nu)
        .concat(&all)
        .determinize(DEFAULT_STATE_CAP)?;
    let inner_right = all
        .concat(&nu)
        .concat(&plus)
        .determinize(DEFAULT_STATE_CAP)?;
    let inner = inner_left.product(&inner_right, |a, b| a || b)?;
    if !union.product(&inner, |a, b| a && b)?.is_empty() {
        return Err(Error::Invalid("R ∪ R' is not an antichain".into()));
    }

    let gamma_r = regular_gamma(r)?;
    let gamma_rp = regular_gamma(rp)?;
    let q = overlap_language(&dr, &drp)?;
    let overlap = automaton(x, q);
    let gamma_q = regular_gamma(&overlap)?;
    let gamma_l = csys::gamma_algebraic(lg, d, cert_deg)?;

    let rr = &gamma_r * &gamma_rp;
    let one = TruncatedSeries::one(d);
    let num = rr.to_series(d)?.mul(&gamma_l.series);
    let den = one.add(&gamma_q.to_series(d)?.mul(&gamma_l.series));
    let base = TruncatedSeries::from_poly(&UPoly::from_ints(&[1, -(nm as i64)]), d);
    let euler_series = base.add(&num.div(&den)?);
    let series = euler_series.inverse()?;

    // (E - 1 + nm t)(1 + γ(Q) g) - γ(R)γ(R') g = 0, with g the start unknown of S(lg)
    let sys = csys::build_system(lg);
    let m = sys.len() + 1;
    let map: Vec<usize> = (1..m).collect();
    let g = MultiPoly::var(m, 1 + lg.start());
    let shifted = &MultiPoly::var(m, 0)
        - &MultiPoly::constant(m, RatFunc::from_poly(UPoly::from_ints(&[1, -(nm as i64)])));
    let den_poly = &MultiPoly::one(m) + &g.scale(&gamma_q);
    let mut equations = vec![&(&shifted * &den_poly) - &g.scale(&rr)];
    equations.extend(sys.equations.iter().map(|eq| eq.remap(m, &map)));
    let (euler_poly, _) = eliminate_univariate_with_caps(&equations, 0, &GbCaps::default())?;
    let lifted = newton_series(&reciprocal_poly(&euler_poly), &series, d)?;
    if lifted != series {
        return Err(Error::RootMismatch(
            "eliminant root disagrees with the series formula".into(),
        ));
    }
    Ok(Uchain2Result {
        nm,
        gamma_r,
        gamma_rp,
        overlap,
        gamma_q,
        gamma_l,
        euler_poly,
        euler_series,
        series,
    })
}

/// `R · L(middle) · R′`, each part over a subset of the generators.
#[derive(Clone, Debug)]
pub struct PatternFamily {
    pub left: RegularLanguage,
    pub middle: CFGrammar,
    pub right: RegularLanguage,
}

/// Membership descriptor of a set of relation words.
#[derive(Clone, Debug)]
pub enum RelationDescriptor {
    Antichain(FiniteLanguage),
    Patterns {
        finite: FiniteLanguage,
        families: Vec<PatternFamily>,
    },
}

/// Default cap on the number of words visited by the scanning oracle.
pub const DEFAULT_SCAN_CAP: u64 = 100_000_000;

/// Number of normal words of each length `<= d`: words with no relation word as a factor.
pub fn hilbert_oracle(
    alphabet: &Alphabet,
    rel: &RelationDescriptor,
    d: usize,
) -> Result<TruncatedSeries> {
    hilbert_oracle_with_cap(alphabet, rel, d, DEFAULT_SCAN_CAP)
}

/// Antichains go through the ideal automaton; pattern families through a
/// depth-first scan of normal words, testing each new suffix for membership.
pub fn hilbert_oracle_with_cap(
    alphabet: &Alphabet,
    rel: &RelationDescriptor,
    d: usize,
    cap: u64,
) -> Result<TruncatedSeries> {
    match rel {
        RelationDescriptor::Antichain(basis) => count_normal_words(alphabet.len(), basis, d),
        RelationDescriptor::Patterns { finite, families } => {
            let matchers = families
                .iter()
                .map(|f| FamilyMatcher::new(f, alphabet))
                .collect::<Result<Vec<_>>>()?;
            scan_normal_words(alphabet.len(), finite, &matchers, d, cap)
        }
    }
}

/// Relation words of length `<= d`.
pub fn relation_words(
    alphabet: &Alphabet,
    rel: &RelationDescriptor,
    d: usize,
) -> Result<TruncatedLanguage> {
    match rel {
        RelationDescriptor::Antichain(basis) => TruncatedLanguage::new(d, basis.truncated(d)),
        RelationDescriptor::Patterns { finite, families } => {
            let mut acc = TruncatedLanguage::new(d, finite.truncated(d))?;
            for f in families {
                let part = |l: &RegularLanguage| -> Result<TruncatedLanguage> {
                    let map = letter_map(l.alphabet(), alphabet)?;
                    TruncatedLanguage::new(d, map_language(&l.to_dfa()?.words_up_to(d), &map))
                };
                let middle =
                    descriptor_words(&ChainDescriptor::Grammar(f.middle.clone()), alphabet, d)?;
                let words = trunc_product(
                    &trunc_product(&part(&f.left)?, &middle, d)?,
                    &part(&f.right)?,
                    d,
                )?;
                acc = trunc_boolean(&acc, &words, SetOp::Union);
            }
            Ok(acc)
        }
    }
}

/// Oracle through explicit enumeration of the relation words and the ideal automaton.
pub fn hilbert_oracle_enumerated(
    alphabet: &Alphabet,
    rel: &RelationDescriptor,
    d: usize,
) -> Result<TruncatedSeries> {
    let words = relation_words(alphabet, rel, d)?;
    count_normal_words(alphabet.len(), &minimize_antichain(words.words()), d)
}

fn to_series(counts: Vec<BigUint>) -> TruncatedSeries {
    TruncatedSeries::new(
        counts
            .into_iter()
            .map(|c| Q::from_integer(c.into()))
            .collect(),
    )
}

/// Transfer-matrix count over the complement of the ideal automaton of `basis`.
pub fn count_normal_words(n: usize, basis: &FiniteLanguage, d: usize) -> Result<TruncatedSeries> {
    let aut = ideal_automaton(n, basis)?;
    let counts = aut.dfa.complement().count_words(d);
    Ok(to_series(counts))
}

/// Brute-force count over all `n^k` words of each length `k <= d`.
pub fn count_normal_words_naive(
    n: usize,
    basis: &FiniteLanguage,
    d: usize,
    cap: u64,
) -> Result<TruncatedSeries> {
    let mut out = Vec::with_capacity(d + 1);
    for len in 0..=d {
        let total = (n as u64).checked_pow(len as u32).unwrap_or(u64::MAX);
        if total > cap {
            return Err(Error::ResourceCap(format!(
                "{n}^{len} words exceed the scan cap {cap}"
            )));
        }
        let mut c = 0u64;
        for_each_word(n, len, |w| {
            if !basis.iter().any(|b| has_factor(w, b.letters())) {
                c += 1;
            }
        });
        out.push(BigUint::from(c));
    }
    Ok(to_series(out))
}

struct PartMatcher {
    dfa: Dfa,
    map: Vec<Option<Letter>>,
}

impl PartMatcher {
    fn new(l: &RegularLanguage, alphabet: &Alphabet) -> Result<Self> {
        let map = alphabet
            .symbols()
            .iter()
            .map(|s| l.alphabet().index_of(s))
            .collect();
        Ok(PartMatcher {
            dfa: l.to_dfa()?,
            map,
        })
    }

    fn accepts(&self, w: &[Letter]) -> bool {
        let mut s = self.dfa.initial();
        for &x in w {
            match self.map[x as usize] {
                Some(y) => s = self.dfa.step(s, y),
                None => return false,
            }
        }
        self.dfa.is_accepting(s)
    }
}

struct FamilyMatcher {
    left: PartMatcher,
    right: PartMatcher,
    middle: CykParser,
    middle_map: Vec<Option<Letter>>,
}

impl FamilyMatcher {
    fn new(f: &PatternFamily, alphabet: &Alphabet) -> Result<Self> {
        letter_map(f.middle.terminals(), alphabet)?;
        Ok(FamilyMatcher {
            left: PartMatcher::new(&f.left, alphabet)?,
            right: PartMatcher::new(&f.right, alphabet)?,
            middle: CykParser::new(&f.middle),
            middle_map: alphabet
                .symbols()
                .iter()
                .map(|s| f.middle.terminals().index_of(s))
                .collect(),
        })
    }

    fn contains(&self, w: &[Letter]) -> bool {
        let len = w.len();
        let rights: Vec<bool> = (0..=len).map(|j| self.right.accepts(&w[j..])).collect();
        for i in 0..=len {
            if !self.left.accepts(&w[..i]) {
                continue;
            }
            for j in i..=len {
                if !rights[j] {
                    continue;
                }
                let mapped: Option<Vec<Letter>> = w[i..j]
                    .iter()
                    .map(|&x| self.middle_map[x as usize])
                    .collect();
                if mapped.is_some_and(|m| self.middle.accepts(&m)) {
                    return true;
                }
            }
        }
        false
    }
}

fn scan_normal_words(
    n: usize,
    finite: &FiniteLanguage,
    families: &[FamilyMatcher],
    d: usize,
    cap: u64,
) -> Result<TruncatedSeries> {
    let mut counts = vec![0u64; d + 1];
    let mut visited = 0u64;
    let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        counts[w.len()] += 1;
        if w.len() == d {
            continue;
        }
        for x in 0..n as Letter {
            visited += 1;
            if visited > cap {
                return Err(Error::ResourceCap(format!(
                    "normal-word scan exceeded {cap} words"
                )));
            }
            let mut next = w.clone();
            next.push(x);
            let hit = (0..next.len()).any(|s| {
                let suffix = &next[s..];
                finite.contains(&Word::from_letters(suffix))
                    || families.iter().any(|f| f.contains(suffix))
            });
            if !hit {
                stack.push(next);
            }
        }
    }
    Ok(to_series(counts.into_iter().map(BigUint::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::{dyck, lukasiewicz};
    use crate::lang::trunc_ideal;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    fn lang(a: &Alphabet, ws: &[&str]) -> FiniteLanguage {
        ws.iter().map(|w| a.parse_word(w).unwrap()).collect()
    }

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn xyz() -> Alphabet {
        Alphabet::new(["x", "y", "z"]).unwrap()
    }

    fn finite(a: &Alphabet, ws: &[&str]) -> RegularLanguage {
        let n = a.len();
        RegularLanguage::Automaton {
            alphabet: a.clone(),
            dfa: Dfa::from_finite(n, &lang(a, ws)),
        }
    }

    fn countex() -> CFGrammar {
        CFGrammar::from_rules(
            &["x", "y", "z"],
            &["S", "A", "B"],
            "S",
            &[
                ("S", "A z | x B"),
                ("A", "x x y y | x A y"),
                ("B", "y y z z | y B z"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn combinatorially_free() {
        let a = xy();
        let c = chains_finite(&lang(&a, &["x y"]), 5).unwrap();
        assert_eq!(c.gl_dim, Some(2));
        assert!(c.language(2).is_empty());
    }

    #[test]
    fn square_relation_never_terminates() {
        let a = xy();
        let l1 = lang(&a, &["x x"]);
        let c = chains_finite(&l1, 5).unwrap();
        assert_eq!(c.gl_dim, None);
        for i in 1..=5 {
            let expect: FiniteLanguage = [Word(vec![0; i + 1])].into_iter().collect();
            assert_eq!(c.language(i), expect);
            let gov =
                govorov_chains_trunc(&TruncatedLanguage::complete(l1.clone()), 2, i, 8).unwrap();
            assert_eq!(gov.words(), &expect);
        }
        let el = &c.levels[2][0];
        assert_eq!((el.prefix().len(), el.tail().len()), (3, 1));
    }

    #[test]
    fn minimal_basis_is_first_formula() {
        let a = xy();
        let l1 = TruncatedLanguage::complete(lang(&a, &["x x", "x y"]));
        let gov = govorov_chains_trunc(&l1, 2, 1, 6).unwrap();
        assert_eq!(gov.words(), &lang(&a, &["x x", "x y"]));
        let two = govorov_chains_trunc(&TruncatedLanguage::complete(lang(&a, &["x x"])), 2, 2, 4)
            .unwrap();
        assert_eq!(two.words(), &lang(&a, &["x x x"]));
    }

    #[test]
    fn countex_second_chains() {
        let a = xyz();
        let l1 = grammar::enumerate(&countex(), 9).unwrap();
        let l2 = govorov_chains_trunc(&l1, 3, 2, 9).unwrap();
        assert_eq!(l2.words(), &lang(&a, &["x x y y z z", "x x x y y y z z z"]));
        let exact = chains_finite(l1.words(), 3).unwrap();
        assert_eq!(exact.language(2).truncated(9), *l2.words());
    }

    #[test]
    fn example_one_slice() {
        let z = Alphabet::new(["x", "y", "z", "c", "a", "b"]).unwrap();
        let mut l1 = lang(&z, &["x x y", "x x z", "x y y", "x y z", "x z y", "x z z"]);
        for w in ["y z z a c", "y z z b a a c"] {
            l1.insert(z.parse_word(w).unwrap());
        }
        let c = chains_finite(&l1, 4).unwrap();
        let l2 = c.language(2);
        for w in [
            "x x y y",
            "x x y z",
            "x x z y",
            "x x z z",
            "x y z z a c",
            "x z y z z a c",
        ] {
            assert!(l2.contains(&z.parse_word(w).unwrap()), "{w}");
        }
        assert!(c
            .language(3)
            .contains(&z.parse_word("x x y y z z a c").unwrap()));
        assert_eq!(c.gl_dim, Some(4));
    }

    #[test]
    fn chains_agree_with_formulas_on_overlapping_sets() {
        let a = xyz();
        for ws in [
            &["x y x", "y y"][..],
            &["x x y", "x y x", "y x x"][..],
            &["x y", "y z", "z x"][..],
            &["x x x", "y x y"][..],
        ] {
            let l1 = lang(&a, ws);
            let c = chains_finite(&l1, 4).unwrap();
            for k in 1..=4 {
                let gov = govorov_chains_trunc(&TruncatedLanguage::complete(l1.clone()), 3, k, 7)
                    .unwrap();
                assert_eq!(c.language(k).truncated(7), *gov.words(), "{ws:?} k={k}");
            }
        }
    }

    #[test]
    fn oracle_fibonacci() {
        let a = xy();
        let basis = lang(&a, &["x x"]);
        let fast = count_normal_words(2, &basis, 6).unwrap();
        assert_eq!(ints(&fast), [1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(count_normal_words_naive(2, &basis, 6, 1000).unwrap(), fast);
        assert_eq!(
            hilbert_oracle(&a, &RelationDescriptor::Antichain(basis), 6).unwrap(),
            fast
        );
    }

    #[test]
    fn oracle_free_and_capped() {
        let a = xyz();
        let s =
            hilbert_oracle(&a, &RelationDescriptor::Antichain(FiniteLanguage::new()), 3).unwrap();
        assert_eq!(ints(&s), [1, 3, 9, 27]);
        assert!(matches!(
            count_normal_words_naive(3, &FiniteLanguage::new(), 5, 100),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn alternating_sum_identity() {
        let a = xyz();
        for ws in [
            &["x y", "y z"][..],
            &["x x y", "y z z"][..],
            &["x y", "y y z"][..],
            &["x y", "x z"][..],
        ] {
            let l1 = lang(&a, ws);
            let c = chains_finite(&l1, 10).unwrap();
            let k = c.gl_dim.expect("finite dimension") - 1;
            let chains = (1..=k)
                .map(|i| ChainDescriptor::Finite(c.language(i)))
                .collect();
            let spec = HomologySpec::new(3, chains, k + 1).unwrap();
            let e = euler_series(&spec, 10).unwrap();
            let h = count_normal_words(3, &l1, 10).unwrap();
            assert_eq!(e.mul(&h), TruncatedSeries::one(10), "{ws:?}");
        }
    }

    #[test]
    fn pattern_oracle_matches_enumeration() {
        let z = Alphabet::new(["x", "a", "b"]).unwrap();
        let x = Alphabet::new(["x"]).unwrap();
        let fam = PatternFamily {
            left: finite(&x, &["x"]),
            middle: dyck(),
            right: finite(&x, &["x"]),
        };
        let rel = RelationDescriptor::Patterns {
            finite: FiniteLanguage::new(),
            families: vec![fam],
        };
        let scan = hilbert_oracle(&z, &rel, 8).unwrap();
        assert_eq!(scan, hilbert_oracle_enumerated(&z, &rel, 8).unwrap());
        assert_eq!(ints(&scan)[..4], [1, 3, 8, 22]);
    }

    #[test]
    fn free_algebra_on_one_letter() {
        let spec = HomologySpec::new(1, Vec::new(), 1).unwrap();
        let r = hilbert_from_homology(&spec, 6, 6).unwrap();
        assert_eq!(ints(&r.series), [1; 7]);
        assert_eq!(
            r.closed_form,
            Some(ClosedForm::Rational(RatFunc::new(
                UPoly::one(),
                UPoly::from_ints(&[1, -1])
            )))
        );
    }

    #[test]
    fn countex_rational_hilbert() {
        let a = xyz();
        let t = |c: &[i64], d: &[i64]| RatFunc::new(UPoly::from_ints(c), UPoly::from_ints(d));
        let g1 = t(&[0, 0, 0, 0, 0, 2], &[1, 0, -1]);
        let g2 = t(&[0, 0, 0, 0, 0, 0, 1], &[1, 0, 0, -1]);
        let spec = HomologySpec::new(
            3,
            vec![ChainDescriptor::Rational(g1), ChainDescriptor::Rational(g2)],
            3,
        )
        .unwrap();
        let r = hilbert_from_homology(&spec, 10, 10).unwrap();
        let fam = PatternFamily {
            left: finite(&a, &["eps"]),
            middle: countex(),
            right: finite(&a, &["eps"]),
        };
        let rel = RelationDescriptor::Patterns {
            finite: FiniteLanguage::new(),
            families: vec![fam],
        };
        assert_eq!(r.series, hilbert_oracle(&a, &rel, 10).unwrap());
        assert!(matches!(r.closed_form, Some(ClosedForm::Rational(_))));
    }

    fn example_one() -> HomologySpec {
        let z = ["x", "y", "z", "c", "a", "b"];
        let rules_t = ("T", "a | b T T");
        let g1 = CFGrammar::from_rules(
            &z,
            &["S", "T"],
            "S",
            &[
                (
                    "S",
                    "x x y | x x z | x y y | x y z | x z y | x z z | y z z T c",
                ),
                rules_t,
            ],
        )
        .unwrap();
        let g2 = CFGrammar::from_rules(
            &z,
            &["S", "T"],
            "S",
            &[("S", "x x y y | x x y z | x x z y | x x z z | x y z z T c | x y y z z T c | x z y z z T c"), rules_t],
        )
        .unwrap();
        let g3 = CFGrammar::from_rules(
            &z,
            &["S", "T"],
            "S",
            &[("S", "x x y y z z T c | x x z y z z T c"), rules_t],
        )
        .unwrap();
        HomologySpec::new(
            6,
            vec![
                ChainDescriptor::Grammar(g1),
                ChainDescriptor::Grammar(g2),
                ChainDescriptor::Grammar(g3),
            ],
            4,
        )
        .unwrap()
        .with_alphabet(Alphabet::new(z).unwrap())
        .unwrap()
    }

    #[test]
    fn example_one_pipeline() {
        let spec = example_one();
        let sys = assemble_system(&spec).unwrap();
        assert_eq!(sys.unknowns.symbols(), ["E", "E1", "E2", "E3", "T"]);
        let r = hilbert_from_homology(&spec, 7, 8).unwrap();
        assert_eq!(ints(&r.series), [1, 6, 36, 210, 1228, 7175, 41929, 245017]);
        let expect = RfPoly::from_int_coeffs(&[
            &[1, -12, 36, 13, -87, 52, 56, -70, 9, 18, -11, 8, 0, -8, 4],
            &[-2, 12, 0, -13, 9, 2, -2],
            &[1],
        ]);
        assert!(r.euler_poly.same_up_to_unit(&expect));
        assert!(r
            .certificates
            .iter()
            .all(|c| c.as_ref().unwrap().unambiguous));
        let cf = r.closed_form.unwrap();
        assert_eq!(cf.expand(7).unwrap(), r.series);
        let ecf = r.euler_closed_form.unwrap();
        let ClosedForm::Quadratic { f, r: rad, .. } = &ecf else {
            panic!("quadratic expected")
        };
        assert_eq!(rad, &UPoly::from_ints(&[1, 0, -4]));
        assert_eq!(f, &UPoly::from_ints(&[0, 0, 0, 1, -1, -2, 2]));
        let checks = verify_chains(&spec, 7).unwrap();
        assert!(checks.iter().all(|c| c.agrees), "{checks:?}");
    }

    #[test]
    fn wrong_chain_grammar_is_caught() {
        let mut spec = example_one();
        let z = spec.alphabet.clone().unwrap();
        spec.chains[1] =
            ChainDescriptor::Finite(lang(&z, &["x x y y", "x x y z", "x x z y", "x x z z"]));
        let checks = verify_chains(&spec, 7).unwrap();
        assert!(checks[0].agrees && !checks[1].agrees);
    }

    #[test]
    fn uchain2_examples() {
        let x = Alphabet::new(["x"]).unwrap();
        let z = Alphabet::new(["x", "a", "b"]).unwrap();
        let r = finite(&x, &["x"]);
        let res = hilbert_uchain2(&r, &r, &dyck(), 3, 10, 10).unwrap();
        assert_eq!(res.gamma_q, RatFunc::t());
        let fam = PatternFamily {
            left: r.clone(),
            middle: dyck(),
            right: r.clone(),
        };
        let rel = RelationDescriptor::Patterns {
            finite: FiniteLanguage::new(),
            families: vec![fam],
        };
        assert_eq!(res.series, hilbert_oracle(&z, &rel, 10).unwrap());
        assert_eq!(res.expression(), "1 - 3*t + (t)*(t)*g/(1 + (t)*g)");

        // L = {eps}: relations R·R' = {x y y x}
        let a = xy();
        let eps = CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "eps")]).unwrap();
        let res =
            hilbert_uchain2(&finite(&a, &["x y"]), &finite(&a, &["y x"]), &eps, 3, 8, 4).unwrap();
        assert_eq!(
            res.overlap.to_dfa().unwrap().words_up_to(8),
            lang(&a, &["x y x"])
        );
        let z3 = Alphabet::new(["x", "y", "a"]).unwrap();
        let rel = RelationDescriptor::Antichain(lang(&z3, &["x y y x"]));
        assert_eq!(res.series, hilbert_oracle(&z3, &rel, 8).unwrap());
    }

    #[test]
    fn uchain2_rejects_bad_bases() {
        let a = xy();
        let eps = CFGrammar::from_rules(&["a"], &["S"], "S", &[("S", "eps")]).unwrap();
        let l = lukasiewicz();
        assert!(
            hilbert_uchain2(&finite(&a, &["eps"]), &finite(&a, &["x"]), &eps, 3, 4, 4).is_err()
        );
        assert!(
            hilbert_uchain2(&finite(&a, &["x"]), &finite(&a, &["y x"]), &eps, 3, 4, 4).is_err()
        );
        assert!(hilbert_uchain2(&finite(&a, &["x"]), &finite(&a, &["y"]), &l, 2, 4, 4).is_err());
    }

    #[test]
    fn truncation_bounds_are_enforced() {
        let a = xy();
        let short = TruncatedLanguage::new(3, lang(&a, &["x x"])).unwrap();
        assert!(matches!(
            govorov_chains_trunc(&short, 2, 2, 6),
            Err(Error::BoundViolation(_))
        ));
        assert!(trunc_ideal(&short, 2, 3).is_ok());
    }
}
