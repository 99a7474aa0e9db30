use nchilbert_core::grammar::CFGrammar;
use nchilbert_core::gsb::{
    compare_leading, compositions_resolve, gs_complete, leading_language, MonomialOrder,
    NCPolynomial,
};
use nchilbert_core::lang::{Alphabet, FiniteLanguage};

const FINITE: [&str; 12] = [
    "a' x", "b' x", "a' a", "a' b", "b' a", "b' b", "a' e", "b' e", "a y", "b y", "a' y", "b' y",
];

fn run(symbols: &[&str], relations: &[&str], family: &CFGrammar, d: usize) {
    let alphabet = Alphabet::new(symbols.iter().copied()).unwrap();
    let order = MonomialOrder::by_alphabet(&alphabet);
    let rels: Vec<NCPolynomial> = relations
        .iter()
        .map(|r| NCPolynomial::parse(r, &alphabet).unwrap())
        .collect();
    let basis = gs_complete(&rels, &order, d).unwrap();
    assert!(compositions_resolve(&basis, &order, d));
    let lead = leading_language(&basis, &order).unwrap();
    let finite: FiniteLanguage = FINITE
        .iter()
        .map(|w| alphabet.parse_word(w).unwrap())
        .collect();
    let cmp = compare_leading(&finite, Some(family), &alphabet, &lead, d).unwrap();
    assert!(cmp.agrees(), "{cmp:?}");
}

#[test]
fn fpex_leading_language_to_degree_eight() {
    let family = CFGrammar::from_rules(
        &["a", "b", "e", "x", "y"],
        &["S", "P", "T"],
        "S",
        &[("S", "x P y"), ("P", "eps | T e P"), ("T", "eps | a T b T")],
    )
    .unwrap();
    run(
        &["a'", "b'", "a", "b", "e", "x", "y"],
        &[
            "a' x - x a'",
            "b' x - x e",
            "a' a - a a'",
            "a' b - a b'",
            "b' a - b a'",
            "b' b - b b'",
            "a' e - a b",
            "b' e - b b",
            "a y - y y",
            "b y - y y",
            "a' y - y y",
            "b' y - y y",
            "x y",
        ],
        &family,
        8,
    );
}

#[test]
fn primed_variant_leading_language_to_degree_eight() {
    let family = CFGrammar::from_rules(
        &["a", "b", "c", "d", "e", "x", "y"],
        &["S", "P", "T", "U"],
        "S",
        &[
            ("S", "x P y U e"),
            ("P", "eps | T e P"),
            ("T", "eps | a T b T"),
            ("U", "eps | c U d U"),
        ],
    )
    .unwrap();
    run(
        &["a'", "b'", "a", "b", "c", "d", "e", "x", "y"],
        &[
            "a' x - x a'",
            "b' x - x e",
            "a' a - a a'",
            "a' b - a b'",
            "b' a - b a'",
            "b' b - b b'",
            "a' e - a b",
            "b' e - b b",
            "a y - y c",
            "b y - y d",
            "a' y",
            "b' y",
            "x y e",
        ],
        &family,
        8,
    );
}
