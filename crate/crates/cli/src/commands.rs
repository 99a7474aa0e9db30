//! Subcommand implementations.

use std::path::{Path, PathBuf};

use nchilbert_core::algebra::TruncatedSeries;
use nchilbert_core::csys::{self, build_system};
use nchilbert_core::grammar::{self, AmbiguityCertificate, CFGrammar};
use nchilbert_core::gsb::{
    compare_leading, compositions_resolve, gs_complete_with, leading_language, GsCaps,
};
use nchilbert_core::homology::{
    chains_finite, govorov_chains_trunc, hilbert_from_homology, hilbert_oracle_with_cap,
    hilbert_uchain2, verify_chains, HilbertResult, Uchain2Result,
};
use nchilbert_core::lang::{Alphabet, FiniteLanguage, TruncatedLanguage};
use nchilbert_core::regular::{myhill_nerode_grammar, RegularLanguage};

use crate::formats::{self, Presentation, SpecFile};
use crate::{examples, CliError, Command, Report, RunConfig};

type Res<T> = Result<T, CliError>;

/// Report lines produced so far and the final status.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub status: Res<()>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.status.as_ref().err().map_or(0, CliError::exit_code)
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let mut report = Report::default();
    let status = dispatch(cfg, &mut report);
    Outcome { report, status }
}

fn dispatch(cfg: &RunConfig, out: &mut Report) -> Res<()> {
    let d = cfg.max_deg;
    match &cfg.command {
        Command::Gamma { grammar, keep } => gamma(
            &formats::parse_grammar(&read(grammar)?)?,
            keep.as_deref(),
            cfg,
            out,
        ),
        Command::Ambiguity { grammar } => {
            ambiguity(&formats::parse_grammar(&read(grammar)?)?, cfg.cert_deg, out)
        }
        Command::QuotientGrammar { language } => {
            quotient_grammar(&formats::parse_regular(&read(language)?)?, d, out)
        }
        Command::Chains { antichain, kmax } => {
            let (alphabet, l1) = formats::parse_language(&read(antichain)?, None)?;
            chains(&alphabet, &l1, *kmax, out)
        }
        Command::GovorovChains { relations, k } => govorov(&read(relations)?, *k, d, out),
        Command::Hilbert {
            spec,
            verify_chains: verify,
        } => {
            let spec = formats::parse_spec(&read(spec)?, &dir_loader(spec))?;
            hilbert(&spec, *verify, cfg, out).map(|_| ())
        }
        Command::Oracle { presentation } => {
            let p = formats::parse_presentation(&read(presentation)?, &dir_loader(presentation))?;
            oracle(&p, cfg, out).map(|_| ())
        }
        Command::Uchain2 { r, rp, l, nm } => {
            let (r, rp) = (
                formats::parse_regular(&read(r)?)?,
                formats::parse_regular(&read(rp)?)?,
            );
            let l = formats::parse_grammar(&read(l)?)?;
            uchain2(&r, &rp, &l, *nm, cfg, out).map(|_| ())
        }
        Command::Gsb {
            presentation,
            predict,
            finite,
        } => {
            let p = formats::parse_presentation(&read(presentation)?, &dir_loader(presentation))?;
            let predict = predict
                .as_ref()
                .map(|f| read(f).and_then(|t| formats::parse_grammar(&t)))
                .transpose()?;
            let finite = finite
                .as_ref()
                .map(|f| read(f).and_then(|t| formats::parse_language(&t, Some(&p.alphabet))))
                .transpose()?;
            gsb(
                &p,
                predict.as_ref(),
                finite.map(|(_, l)| l).as_ref(),
                d,
                cfg,
                out,
            )
            .map(|_| ())
        }
        Command::VerifyExample { id } => examples::verify(id, cfg, out),
    }
}

pub(crate) fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Resolves names relative to the directory holding `file`.
fn dir_loader(file: &Path) -> impl Fn(&str) -> Res<String> {
    let dir: PathBuf = file.parent().map(Path::to_path_buf).unwrap_or_default();
    move |name: &str| read(&dir.join(name))
}

pub(crate) fn words_text(alphabet: &Alphabet, l: &FiniteLanguage) -> String {
    l.iter()
        .map(|w| {
            if w.is_empty() {
                "eps".to_string()
            } else {
                alphabet.format_word(w)
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn census_text(l: &FiniteLanguage, d: usize) -> String {
    l.census(d)
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn push_series(out: &mut Report, key: &str, s: &TruncatedSeries) {
    out.push(key, s.csv());
    out.push(format!("{key}.bound"), s.bound());
}

fn push_certificate(out: &mut Report, key: &str, c: &AmbiguityCertificate, terminals: &Alphabet) {
    out.push(format!("{key}.unambiguous"), c.unambiguous);
    out.push(format!("{key}.bound"), c.bound);
    if let Some(w) = &c.counterexample {
        out.push(format!("{key}.counterexample"), terminals.format_word(w));
    }
}

pub(crate) fn gamma(
    g: &CFGrammar,
    keep: Option<&str>,
    cfg: &RunConfig,
    out: &mut Report,
) -> Res<()> {
    let keep = match keep {
        Some(v) => csys::variable_index(g, v)?,
        None => g.start(),
    };
    let sys = build_system(g);
    out.push(
        "system",
        (0..sys.len())
            .map(|i| sys.equation_text(i))
            .collect::<Vec<_>>()
            .join("\n"),
    );
    let gm = csys::gamma_algebraic_for(g, keep, cfg.max_deg, cfg.cert_deg)?;
    out.push("variable", &gm.variable);
    out.push("polynomial", gm.poly.format(&gm.variable));
    if keep == g.start() && grammar::validate(g).is_right_linear {
        out.push("rational", csys::gamma_rational(g)?);
    }
    push_series(out, "series", &gm.series);
    push_certificate(out, "certificate", &gm.certificate, g.terminals());
    Ok(())
}

fn ambiguity(g: &CFGrammar, cert_deg: usize, out: &mut Report) -> Res<()> {
    let c = grammar::certify_unambiguous(g, cert_deg)?;
    push_certificate(out, "certificate", &c, g.terminals());
    Ok(())
}

fn quotient_grammar(l: &RegularLanguage, d: usize, out: &mut Report) -> Res<()> {
    let g = myhill_nerode_grammar(l)?;
    out.push("variables", g.variables().len());
    out.push("grammar", formats::format_grammar(&g).trim_end());
    let from_grammar = grammar::enumerate(&g, d)?.into_words();
    let from_automaton = l.to_dfa()?.words_up_to(d);
    let agrees = from_grammar == from_automaton;
    out.push("enumeration.bound", d);
    out.push("enumeration.agrees", agrees);
    if !agrees {
        return Err(CliError::Mismatch(
            "grammar and automaton enumerate different words".into(),
        ));
    }
    Ok(())
}

fn chains(alphabet: &Alphabet, l1: &FiniteLanguage, kmax: usize, out: &mut Report) -> Res<()> {
    let c = chains_finite(l1, kmax)?;
    for i in 1..=c.levels.len() {
        out.push(format!("L{i}"), words_text(alphabet, &c.language(i)));
    }
    match c.gl_dim {
        Some(g) => out.push("gldim", g),
        None => out.push("gldim", format!("> {}", kmax + 1)),
    }
    Ok(())
}

fn govorov(text: &str, k: usize, d: usize, out: &mut Report) -> Res<()> {
    let (alphabet, l1) = if text
        .lines()
        .any(|l| l.trim_start().starts_with("terminals:"))
    {
        let g = formats::parse_grammar(text)?;
        (g.terminals().clone(), grammar::enumerate(&g, d)?)
    } else {
        let (a, words) = formats::parse_language(text, None)?;
        (a, TruncatedLanguage::complete(words))
    };
    let lk = govorov_chains_trunc(&l1, alphabet.len(), k, d)?;
    out.push("bound", d);
    out.push("census", census_text(lk.words(), d));
    out.push(format!("L{k}"), words_text(&alphabet, lk.words()));
    Ok(())
}

pub(crate) fn push_hilbert(r: &HilbertResult, out: &mut Report) {
    let sys = &r.system;
    out.push(
        "system",
        (0..sys.len())
            .map(|i| sys.equation_text(i))
            .collect::<Vec<_>>()
            .join("\n"),
    );
    out.push("euler.polynomial", r.euler_poly.format("E"));
    out.push("hilbert.polynomial", r.hilbert_poly.format("H"));
    if let Some(cf) = &r.euler_closed_form {
        out.push("euler.closed_form", cf.format());
    }
    if let Some(cf) = &r.closed_form {
        out.push("hilbert.closed_form", cf.format());
    }
    push_series(out, "series", &r.series);
    for (i, c) in r.certificates.iter().enumerate() {
        if let Some(c) = c {
            out.push(format!("chain{}.unambiguous", i + 1), c.unambiguous);
            out.push(format!("chain{}.certified_to", i + 1), c.bound);
        }
    }
}

pub(crate) fn push_uchain2(r: &Uchain2Result, out: &mut Report) {
    out.push("overlap.gamma", &r.gamma_q);
    out.push("euler.expression", r.expression());
    out.push("euler.polynomial", r.euler_poly.format("E"));
    push_series(out, "series", &r.series);
    out.push("middle.unambiguous", r.gamma_l.certificate.unambiguous);
    out.push("middle.certified_to", r.gamma_l.certificate.bound);
}

pub(crate) fn hilbert(
    spec: &SpecFile,
    verify: Option<usize>,
    cfg: &RunConfig,
    out: &mut Report,
) -> Res<TruncatedSeries> {
    match spec {
        SpecFile::Homology(spec) => {
            let r = hilbert_from_homology(spec, cfg.max_deg, cfg.cert_deg)?;
            push_hilbert(&r, out);
            if let Some(c) = verify {
                let checks = verify_chains(spec, c)?;
                let mut ok = true;
                for ch in &checks {
                    out.push(
                        format!("verify.L{}", ch.level),
                        format!(
                            "declared={} computed={} agrees={}",
                            ch.declared, ch.computed, ch.agrees
                        ),
                    );
                    ok &= ch.agrees;
                }
                out.push("verify.bound", c);
                if !ok {
                    return Err(CliError::Mismatch(
                        "declared chain languages differ from computed chains".into(),
                    ));
                }
            }
            Ok(r.series)
        }
        SpecFile::Uchain2 { nm, r, rp, l } => Ok(uchain2(r, rp, l, *nm, cfg, out)?.series),
    }
}

pub(crate) fn oracle(p: &Presentation, cfg: &RunConfig, out: &mut Report) -> Res<TruncatedSeries> {
    let rel = p.monomial_relations()?;
    let s = hilbert_oracle_with_cap(&p.alphabet, &rel, cfg.max_deg, cfg.scan_cap)?;
    push_series(out, "series", &s);
    Ok(s)
}

pub(crate) fn uchain2(
    r: &RegularLanguage,
    rp: &RegularLanguage,
    l: &CFGrammar,
    nm: usize,
    cfg: &RunConfig,
    out: &mut Report,
) -> Res<Uchain2Result> {
    let res = hilbert_uchain2(r, rp, l, nm, cfg.max_deg, cfg.cert_deg)?;
    push_uchain2(&res, out);
    Ok(res)
}

pub(crate) fn gsb(
    p: &Presentation,
    predict: Option<&CFGrammar>,
    finite: Option<&FiniteLanguage>,
    d: usize,
    cfg: &RunConfig,
    out: &mut Report,
) -> Res<FiniteLanguage> {
    let caps = GsCaps {
        max_basis: cfg.max_basis as usize,
        ..GsCaps::default()
    };
    let basis = gs_complete_with(&p.relations, &p.order, d, &caps, false)?;
    let again = gs_complete_with(&p.relations, &p.order, d, &caps, true)?;
    if basis != again {
        return Err(CliError::Mismatch(
            "completion depends on the processing order".into(),
        ));
    }
    if !compositions_resolve(&basis, &p.order, d) {
        return Err(CliError::Mismatch(
            "a composition does not reduce to zero".into(),
        ));
    }
    let lead = leading_language(&basis, &p.order)?;
    out.push("bound", d);
    out.push("basis.size", basis.len());
    out.push(
        "basis",
        basis
            .iter()
            .map(|g| g.format(&p.alphabet, &p.order))
            .collect::<Vec<_>>()
            .join("\n"),
    );
    out.push("leading.census", census_text(&lead, d));
    if predict.is_some() || finite.is_some() {
        let empty = FiniteLanguage::new();
        let cmp = compare_leading(finite.unwrap_or(&empty), predict, &p.alphabet, &lead, d)?;
        out.push(
            "compare.only_computed",
            words_text(&p.alphabet, &cmp.only_computed),
        );
        out.push(
            "compare.only_predicted",
            words_text(&p.alphabet, &cmp.only_predicted),
        );
        out.push("compare.agrees", cmp.agrees());
        if !cmp.agrees() {
            return Err(CliError::Mismatch(
                "leading words differ from the prediction".into(),
            ));
        }
    }
    Ok(lead)
}
