//! Commutative images of grammars: the algebraic system `S(G)` and the
//! generating functions it determines.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{
    eliminate_univariate_with_caps, newton_series, solve_linear_polys, GbCaps, MultiPoly, RatFunc,
    RfPoly, TruncatedSeries, Q,
};
use crate::error::{Error, Result};
use crate::grammar::{self, AmbiguityCertificate, CFGrammar, Symbol};
use crate::lang::{Alphabet, Letter};

/// Default degree up to which grammars are certified unambiguous.
pub const DEFAULT_CERT_DEG: usize = 12;

/// `A_i = Σ t^{|α|_X} · vars(α)` over the productions `A_i -> α`, stored as
/// `A_i - Σ ...`; one equation per grammar variable, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicSystem {
    pub unknowns: Alphabet,
    pub equations: Vec<MultiPoly>,
}

impl AlgebraicSystem {
    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// Right-hand side of equation `i`, i.e. `A_i` minus the stored polynomial.
    pub fn rhs(&self, i: usize) -> MultiPoly {
        &MultiPoly::var(self.len(), i) - &self.equations[i]
    }

    /// `A = ...` with terms ordered by decreasing degree.
    pub fn equation_text(&self, i: usize) -> String {
        let names: Vec<&str> = self.unknowns.symbols().iter().map(String::as_str).collect();
        let rhs = self.rhs(i);
        let mut terms: Vec<_> = rhs.terms().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db)
                .then_with(|| a.1.num().degree().cmp(&b.1.num().degree()))
                .then_with(|| b.0.cmp(a.0))
        });
        let mut s = alloc::format!("{} = ", names[i]);
        if terms.is_empty() {
            s.push('0');
        }
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let single = c.is_polynomial()
                && c.num()
                    .coeffs()
                    .iter()
                    .filter(|q| !num_traits::Zero::is_zero(*q))
                    .count()
                    == 1;
            let neg = single && num_traits::Signed::is_negative(&c.num().lc());
            let c = if neg { -c } else { c.clone() };
            match (k > 0, neg) {
                (true, true) => s.push_str(" - "),
                (true, false) => s.push_str(" + "),
                (false, true) => s.push('-'),
                (false, false) => {}
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| {
                    if p == 1 {
                        names[v].into()
                    } else {
                        alloc::format!("{}^{p}", names[v])
                    }
                })
                .collect();
            let ctext = c.format("t");
            match (mono.is_empty(), c.is_one()) {
                (true, _) => s.push_str(&ctext),
                (false, true) => s.push_str(&mono.join("*")),
                (false, false) if single => {
                    s.push_str(&alloc::format!("{ctext}*{}", mono.join("*")))
                }
                (false, false) => s.push_str(&alloc::format!("({ctext})*{}", mono.join("*"))),
            }
        }
        s
    }
}

pub fn build_system(g: &CFGrammar) -> AlgebraicSystem {
    let m = g.variables().len();
    let mut equations: Vec<MultiPoly> = (0..m).map(|i| MultiPoly::var(m, i)).collect();
    for p in g.productions() {
        let mut exp = alloc::vec![0u32; m];
        let mut terminals = 0;
        for s in &p.rhs {
            match *s {
                Symbol::Terminal(_) => terminals += 1,
                Symbol::Variable(v) => exp[v] += 1,
            }
        }
        let coeff = RatFunc::monomial(Q::from_integer((-1).into()), terminals);
        equations[p.lhs].add_term(exp, coeff);
    }
    AlgebraicSystem {
        unknowns: g.variables().clone(),
        equations,
    }
}

/// Generating function of a right-linear grammar's language, by solving the linear system.
pub fn gamma_rational(g: &CFGrammar) -> Result<RatFunc> {
    if !grammar::validate(g).is_right_linear {
        return Err(Error::Invalid("grammar is not right-linear".into()));
    }
    let sys = build_system(g);
    let sol = solve_linear_polys(&sys.equations)?;
    Ok(sol[g.start()].clone())
}

/// Minimal polynomial and certified series of one unknown of `S(G)`.
#[derive(Clone, Debug)]
pub struct Gamma {
    pub variable: String,
    pub poly: RfPoly,
    pub series: TruncatedSeries,
    pub certificate: AmbiguityCertificate,
}

impl Gamma {
    /// Whether the grammar was certified unambiguous up to the certificate bound.
    pub fn certified(&self) -> bool {
        self.certificate.unambiguous
    }
}

/// [`gamma_algebraic_for`] on the start variable.
pub fn gamma_algebraic(g: &CFGrammar, d: usize, cert_deg: usize) -> Result<Gamma> {
    gamma_algebraic_for(g, g.start(), d, cert_deg)
}

/// Eliminates every other unknown of `S(G)` (lex order, `keep` lowest, the rest in
/// declaration order) and lifts the root matching the derivation counts to degree `d`.
pub fn gamma_algebraic_for(g: &CFGrammar, keep: usize, d: usize, cert_deg: usize) -> Result<Gamma> {
    let report = grammar::validate(g);
    if let Some(v) = report.divergent_variable {
        return Err(Error::Divergent(g.variable_name(v).into()));
    }
    let sys = build_system(g);
    let (poly, _) = eliminate_univariate_with_caps(&sys.equations, keep, &GbCaps::default())?;
    let counts = grammar::count_derivations(g, d)?;
    let seed = TruncatedSeries::new(
        counts[keep]
            .iter()
            .map(|c| Q::from_integer(c.clone().into()))
            .collect(),
    );
    let series = newton_series(&poly, &seed, d)?;
    if series != seed {
        return Err(Error::Mismatch(
            "series root disagrees with derivation counts".into(),
        ));
    }
    let certificate = grammar::certify_unambiguous(&g.with_start(keep)?, cert_deg)?;
    Ok(Gamma {
        variable: g.variable_name(keep).into(),
        poly,
        series,
        certificate,
    })
}

/// Derivation-count series of every unknown, to degree `d`.
pub fn count_series(g: &CFGrammar, d: usize) -> Result<Vec<TruncatedSeries>> {
    Ok(grammar::count_derivations(g, d)?
        .into_iter()
        .map(|c| TruncatedSeries::new(c.into_iter().map(|x| Q::from_integer(x.into())).collect()))
        .collect())
}

/// Substitutes the count series of all unknowns into every equation of `S(G)`;
/// true iff each vanishes modulo `t^{d+1}`.
pub fn check_consistency(g: &CFGrammar, d: usize) -> Result<bool> {
    let values = count_series(g, d)?;
    let sys = build_system(g);
    for eq in &sys.equations {
        if !eq.eval_series(&values, d)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Index of a variable by name.
pub fn variable_index(g: &CFGrammar, name: &str) -> Result<usize> {
    g.variables()
        .index_of(name)
        .map(|v: Letter| v as usize)
        .ok_or_else(|| Error::Invalid(alloc::format!("unknown variable {name:?}")))
}
