//! Bundled example datasets and their known values.

use nchilbert_core::algebra::{qi, solve_linear_polys, RatFunc, RfPoly, TruncatedSeries, UPoly};
use nchilbert_core::csys::{build_system, gamma_algebraic};
use nchilbert_core::grammar::{self, CFGrammar};
use nchilbert_core::homology::{
    govorov_chains_trunc, hilbert_from_homology, hilbert_oracle, RelationDescriptor,
};
use nchilbert_core::lang::FiniteLanguage;
use nchilbert_core::regular::myhill_nerode_grammar;

use crate::commands::{self, push_hilbert};
use crate::formats::{self, Presentation, SpecFile};
use crate::{CliError, Report, RunConfig};

type Res<T> = Result<T, CliError>;

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/", $name)))),*]
    };
}

/// Every bundled data file, by name.
pub const FILES: &[(&str, &str)] = bundled!(
    "ambiguous.gf",
    "countex.gf",
    "countex.pres",
    "countex.spec",
    "dyck.gf",
    "example1-chain1.gf",
    "example1-chain2.gf",
    "example1-chain3.gf",
    "example1.pres",
    "example1.spec",
    "example2-chain1.gf",
    "example2-chain2.gf",
    "example2.pres",
    "example2.spec",
    "example3.pres",
    "example3.spec",
    "fpex-chain1.gf",
    "fpex-chain2.gf",
    "fpex-finite.lang",
    "fpex-lead.gf",
    "fpex-prime-chain1.gf",
    "fpex-prime-chain2.gf",
    "fpex-prime-finite.lang",
    "fpex-prime-lead.gf",
    "fpex-prime.pres",
    "fpex-prime.spec",
    "fpex.pres",
    "fpex.spec",
    "ifthenelse.gf",
    "lukasiewicz.gf",
    "palindromes2.gf",
    "palindromes3.gf",
    "x.lang",
    "xstarystar.aut",
);

/// Identifiers accepted by `verify-example`.
pub const EXAMPLE_IDS: &[&str] = &[
    "ifthenelse",
    "palindromes",
    "xstarystar",
    "countex",
    "example1",
    "example2",
    "example3",
    "fpex",
    "fpex-prime",
];

pub fn load(name: &str) -> Res<String> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.to_string())
        .ok_or_else(|| CliError::Input(format!("no bundled file {name:?}")))
}

pub fn grammar(name: &str) -> Res<CFGrammar> {
    formats::parse_grammar(&load(name)?)
}

pub fn spec(name: &str) -> Res<SpecFile> {
    formats::parse_spec(&load(name)?, &load)
}

pub fn presentation(name: &str) -> Res<Presentation> {
    formats::parse_presentation(&load(name)?, &load)
}

pub fn finite(name: &str, p: &Presentation) -> Res<FiniteLanguage> {
    Ok(formats::parse_language(&load(name)?, Some(&p.alphabet))?.1)
}

pub fn series_of(c: &[i64]) -> TruncatedSeries {
    TruncatedSeries::from_ints(c)
}

/// `Σ c_ij t^j E^i` from ascending integer coefficient rows.
pub fn quadratic(rows: &[&[i64]]) -> RfPoly {
    RfPoly::from_int_coeffs(rows)
}

pub const EXAMPLE1_SERIES: [i64; 8] = [1, 6, 36, 210, 1228, 7175, 41929, 245017];
pub const EXAMPLE2_SERIES: [i64; 8] = [1, 7, 49, 343, 2401, 16801, 117565, 822655];
pub const FPEX_SERIES: [i64; 8] = [1, 7, 36, 166, 730, 3139, 13350, 56466];

pub fn example1_euler() -> RfPoly {
    quadratic(&[
        &[1, -12, 36, 13, -87, 52, 56, -70, 9, 18, -11, 8, 0, -8, 4],
        &[-2, 12, 0, -13, 9, 2, -2],
        &[1],
    ])
}

pub fn example2_euler() -> RfPoly {
    quadratic(&[
        &[1, -14, 49, 6, -43, 4, 23, -8, -6, -6, -18, 0, 1, 6, 9],
        &[-2, 14, 0, -6, 1, 3, -2, -6],
        &[1],
    ])
}

/// `E^2 + (2t-1)(5t^2-10t+2) E + (2t-1)(13t^5-56t^4+85t^3-50t^2+12t-1)`.
pub fn fpex_euler() -> RfPoly {
    let f = UPoly::from_ints(&[-1, 2]);
    let b = &f * &UPoly::from_ints(&[2, -10, 5]);
    let c = &f * &UPoly::from_ints(&[-1, 12, -50, 85, -56, 13]);
    RfPoly::from_coeffs(vec![
        RatFunc::from_poly(c),
        RatFunc::from_poly(b),
        RatFunc::one(),
    ])
}

/// Series of `(1 - 9t + 23/2 t^2 - 3t^3 + t^2 sqrt(1 - 4t^2) / 2)^-1`, by exact
/// series arithmetic.
pub fn fpex_prime_closed_form(d: usize) -> Res<TruncatedSeries> {
    let root = TruncatedSeries::from_poly(&UPoly::from_ints(&[1, 0, -4]), d).sqrt()?;
    let half = nchilbert_core::algebra::qr(1, 2);
    let poly = UPoly::from_coeffs(vec![
        qi(1),
        qi(-9),
        nchilbert_core::algebra::qr(23, 2),
        qi(-3),
    ]);
    let e = TruncatedSeries::from_poly(&poly, d).add(&root.shift(2).scale(&half));
    Ok(e.inverse()?)
}

/// Runs the checks of one bundled example; every check is reported, and any failure
/// turns the status into a mismatch.
pub fn verify(id: &str, cfg: &RunConfig, out: &mut Report) -> Res<()> {
    let mut checks: Vec<(&'static str, bool)> = Vec::new();
    let at = |d: usize| RunConfig {
        max_deg: d,
        ..cfg.clone()
    };
    match id {
        "ifthenelse" => {
            let g = grammar("ifthenelse.gf")?;
            commands::gamma(&g, None, &at(20), out)?;
            let gm = gamma_algebraic(&g, 20, cfg.cert_deg)?;
            checks.push((
                "polynomial",
                gm.poly
                    .same_up_to_unit(&quadratic(&[&[1], &[-1, 2], &[0, -1, 2]])),
            ));
            let central: Vec<i64> = (0..=20u64).map(|d| binom(d, d / 2) as i64).collect();
            checks.push(("series", gm.series == series_of(&central)));
        }
        "palindromes" => {
            for (name, n) in [("palindromes2.gf", 2i64), ("palindromes3.gf", 3)] {
                let g = grammar(name)?;
                let sol = solve_linear_polys(&build_system(&g).equations)?;
                let gamma = &sol[g.start()];
                let expect = RatFunc::new(UPoly::from_ints(&[1, n]), UPoly::from_ints(&[1, 0, -n]));
                out.push(format!("gamma.n{n}"), gamma);
                checks.push(("rational", *gamma == expect));
                let census = grammar::enumerate(&g, 14)?.words().census(14);
                let counted: Vec<i64> = census.iter().map(|&c| c as i64).collect();
                checks.push(("series", gamma.to_series(14)? == series_of(&counted)));
            }
        }
        "xstarystar" => {
            let l = formats::parse_regular(&load("xstarystar.aut")?)?;
            let g = myhill_nerode_grammar(&l)?;
            out.push("grammar", formats::format_grammar(&g).trim_end());
            checks.push(("variables", g.variables().len() == 3));
            checks.push((
                "enumeration",
                grammar::enumerate(&g, 10)?.into_words() == l.to_dfa()?.words_up_to(10),
            ));
        }
        "countex" => {
            let g = grammar("countex.gf")?;
            let l2 = govorov_chains_trunc(&grammar::enumerate(&g, 12)?, 3, 2, 12)?;
            let expect: FiniteLanguage = [
                "x x y y z z",
                "x x x y y y z z z",
                "x x x x y y y y z z z z",
            ]
            .iter()
            .map(|w| g.terminals().parse_word(w))
            .collect::<Result<_, _>>()?;
            out.push("L2", commands::words_text(g.terminals(), l2.words()));
            checks.push(("chains", *l2.words() == expect));
            let s = commands::hilbert(&spec("countex.spec")?, None, &at(10), out)?;
            let o = commands::oracle(
                &presentation("countex.pres")?,
                &at(10),
                &mut Report::default(),
            )?;
            checks.push(("oracle", s == o));
        }
        "example1" | "example2" | "fpex" => {
            let (spec_name, pres, series, euler) = match id {
                "example1" => (
                    "example1.spec",
                    "example1.pres",
                    EXAMPLE1_SERIES,
                    example1_euler(),
                ),
                "example2" => (
                    "example2.spec",
                    "example2.pres",
                    EXAMPLE2_SERIES,
                    example2_euler(),
                ),
                _ => ("fpex.spec", "", FPEX_SERIES, fpex_euler()),
            };
            let SpecFile::Homology(s) = spec(spec_name)? else {
                unreachable!("bundled chain spec")
            };
            let r = hilbert_from_homology(&s, 7, cfg.cert_deg)?;
            push_hilbert(&r, out);
            checks.push(("series", r.series == series_of(&series)));
            checks.push(("polynomial", r.euler_poly.same_up_to_unit(&euler)));
            checks.push((
                "certified",
                r.certificates.iter().flatten().all(|c| c.unambiguous),
            ));
            let oracle = if id == "fpex" {
                let p = presentation("fpex.pres")?;
                let mut sub = Report::default();
                let lead = commands::gsb(
                    &p,
                    Some(&grammar("fpex-lead.gf")?),
                    Some(&finite("fpex-finite.lang", &p)?),
                    8,
                    cfg,
                    &mut sub,
                )?;
                out.push(
                    "gsb.leading.census",
                    sub.get("leading.census").unwrap_or_default(),
                );
                checks.push(("leading", sub.get("compare.agrees") == Some("true")));
                hilbert_oracle(&p.alphabet, &RelationDescriptor::Antichain(lead), 7)?
            } else {
                commands::oracle(&presentation(pres)?, &at(7), &mut Report::default())?
            };
            checks.push(("oracle", oracle == r.series));
        }
        "example3" => {
            let s = commands::hilbert(&spec("example3.spec")?, None, &at(10), out)?;
            let o = commands::oracle(
                &presentation("example3.pres")?,
                &at(10),
                &mut Report::default(),
            )?;
            checks.push(("oracle", s == o));
        }
        "fpex-prime" => {
            let p = presentation("fpex-prime.pres")?;
            let mut sub = Report::default();
            let lead = commands::gsb(
                &p,
                Some(&grammar("fpex-prime-lead.gf")?),
                Some(&finite("fpex-prime-finite.lang", &p)?),
                8,
                cfg,
                &mut sub,
            )?;
            out.push(
                "gsb.leading.census",
                sub.get("leading.census").unwrap_or_default(),
            );
            checks.push(("leading", sub.get("compare.agrees") == Some("true")));
            let s = commands::hilbert(&spec("fpex-prime.spec")?, None, &at(6), out)?;
            checks.push(("closed_form", s == fpex_prime_closed_form(6)?));
            checks.push((
                "oracle",
                s == hilbert_oracle(&p.alphabet, &RelationDescriptor::Antichain(lead), 6)?,
            ));
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown example {other:?}; known: {}",
                EXAMPLE_IDS.join(", ")
            )));
        }
    }
    let mut failed = Vec::new();
    for (name, ok) in &checks {
        out.push(format!("check.{name}"), if *ok { "pass" } else { "fail" });
        if !ok {
            failed.push(*name);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "{id}: failed {}",
            failed.join(", ")
        )))
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
