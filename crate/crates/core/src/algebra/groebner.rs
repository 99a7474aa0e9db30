//! Reduced lexicographic Gröbner bases over `Q(t)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::mpoly::{exp_coprime, exp_divides, exp_lcm, exp_sub, Exponent};
use super::{LexOrder, MultiPoly};
use crate::error::{Error, Result};

/// Resource caps for a Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbCaps {
    pub max_basis: usize,
    pub max_terms: usize,
    pub max_degree: u32,
    pub max_pairs: usize,
}

impl Default for GbCaps {
    fn default() -> Self {
        GbCaps {
            max_basis: 500,
            max_terms: 20_000,
            max_degree: 200,
            max_pairs: 200_000,
        }
    }
}

/// Fully reduced remainder of `f` modulo `basis`.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], order: &LexOrder) -> MultiPoly {
    let leads: Vec<(Exponent, super::RatFunc)> = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(e, c)| (e.clone(), c.inv())))
        .collect();
    let mut rem = f.clone();
    let mut out = MultiPoly::zero(f.nvars());
    while let Some((e, c)) = rem.leading(order) {
        let (e, c) = (e.clone(), c.clone());
        let hit = basis
            .iter()
            .zip(&leads)
            .find(|(_, (le, _))| exp_divides(le, &e));
        match hit {
            Some((g, (le, lcinv))) => {
                rem = &rem - &g.mul_term(&exp_sub(&e, le), &(&c * lcinv));
            }
            None => {
                out.add_term(e.clone(), c.clone());
                rem = &rem - &MultiPoly::term(f.nvars(), e, c);
            }
        }
    }
    out
}

fn s_poly(f: &MultiPoly, g: &MultiPoly, order: &LexOrder) -> MultiPoly {
    let (ef, cf) = f.leading(order).expect("nonzero");
    let (eg, cg) = g.leading(order).expect("nonzero");
    let l = exp_lcm(ef, eg);
    &f.mul_term(&exp_sub(&l, ef), &cf.inv()) - &g.mul_term(&exp_sub(&l, eg), &cg.inv())
}

fn lead_exp(p: &MultiPoly, order: &LexOrder) -> Exponent {
    p.leading(order).expect("nonzero").0.clone()
}

fn poly_size(p: &MultiPoly) -> usize {
    p.terms().map(|(_, c)| c.size()).sum()
}

/// Reduced Gröbner basis of the ideal generated by `gens` for `order`, sorted by
/// increasing leading monomial. Inputs reducing to zero and all S-polynomials of
/// the result are checked before returning.
pub fn buchberger_lex(
    gens: &[MultiPoly],
    order: &LexOrder,
    caps: &GbCaps,
) -> Result<Vec<MultiPoly>> {
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut processed = 0usize;

    let push = |basis: &mut Vec<MultiPoly>,
                pending: &mut BTreeSet<(usize, usize)>,
                h: MultiPoly|
     -> Result<()> {
        if basis.len() >= caps.max_basis {
            return Err(Error::ResourceCap(alloc::format!(
                "Gröbner basis exceeded {} elements",
                caps.max_basis
            )));
        }
        if h.len() > caps.max_terms || h.total_degree() > caps.max_degree {
            return Err(Error::ResourceCap(alloc::format!(
                "intermediate polynomial with {} terms and degree {}",
                h.len(),
                h.total_degree()
            )));
        }
        let k = basis.len();
        basis.push(h.monic(order));
        for i in 0..k {
            pending.insert((i, k));
        }
        Ok(())
    };

    for f in gens {
        let h = normal_form(f, &basis, order);
        if !h.is_zero() {
            push(&mut basis, &mut pending, h)?;
        }
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm first, then smaller coefficients, then index
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = exp_lcm(&lead_exp(&basis[a.0], order), &lead_exp(&basis[a.1], order));
                let lb = exp_lcm(&lead_exp(&basis[b.0], order), &lead_exp(&basis[b.1], order));
                order
                    .cmp(&la, &lb)
                    .then_with(|| {
                        (poly_size(&basis[a.0]) + poly_size(&basis[a.1]))
                            .cmp(&(poly_size(&basis[b.0]) + poly_size(&basis[b.1])))
                    })
                    .then_with(|| a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        processed += 1;
        if processed > caps.max_pairs {
            return Err(Error::ResourceCap(alloc::format!(
                "more than {} critical pairs",
                caps.max_pairs
            )));
        }

        let (ei, ej) = (lead_exp(&basis[i], order), lead_exp(&basis[j], order));
        if exp_coprime(&ei, &ej) {
            continue;
        }
        let l = exp_lcm(&ei, &ej);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && exp_divides(&lead_exp(&basis[k], order), &l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_poly(&basis[i], &basis[j], order), &basis, order);
        if !h.is_zero() {
            push(&mut basis, &mut pending, h)?;
        }
    }

    // minimal basis
    let leads: Vec<Exponent> = basis.iter().map(|g| lead_exp(g, order)).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            j != i && exp_divides(&leads[j], &leads[i]) && (leads[j] != leads[i] || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<MultiPoly> = keep.into_iter().map(|i| basis[i].clone()).collect();

    // interreduce
    let mut reduced: Vec<MultiPoly> = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let (e, c) = g.leading(order).unwrap();
        let head = MultiPoly::term(g.nvars(), e.clone(), c.clone());
        let tail = normal_form(&(g - &head), &others, order);
        reduced.push((&head + &tail).monic(order));
    }
    reduced.sort_by(|a, b| order.cmp(&lead_exp(a, order), &lead_exp(b, order)));

    if !is_groebner_basis(gens, &reduced, order) {
        return Err(Error::Mismatch("Gröbner basis postcondition failed".into()));
    }
    Ok(reduced)
}

/// True iff every generator reduces to zero modulo `basis` and every S-polynomial
/// of `basis` reduces to zero.
pub fn is_groebner_basis(gens: &[MultiPoly], basis: &[MultiPoly], order: &LexOrder) -> bool {
    if gens.iter().any(|f| !normal_form(f, basis, order).is_zero()) {
        return false;
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (ei, ej) = (lead_exp(&basis[i], order), lead_exp(&basis[j], order));
            if exp_coprime(&ei, &ej) {
                continue;
            }
            if !normal_form(&s_poly(&basis[i], &basis[j], order), basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{RatFunc, UPoly};

    fn c(p: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_ints(p))
    }

    /// If-then-else system over variables S=0, A=1, B=2.
    fn ite() -> Vec<MultiPoly> {
        let v = |i| MultiPoly::var(3, i);
        let k = |p: &[i64]| MultiPoly::constant(3, c(p));
        let (s, a, b) = (v(0), v(1), v(2));
        vec![
            &(&s - &a) - &b,
            &(&a - &k(&[1])) - &(&k(&[0, 0, 1]) * &(&a * &a)),
            &(&b - &(&k(&[0, 1]) * &s)) - &(&k(&[0, 0, 1]) * &(&a * &b)),
        ]
    }

    #[test]
    fn single_linear_generator() {
        let order = LexOrder::ascending(&[0]);
        let g = &MultiPoly::var(1, 0) - &MultiPoly::one(1);
        assert_eq!(
            buchberger_lex(core::slice::from_ref(&g), &order, &GbCaps::default()).unwrap(),
            vec![g]
        );
    }

    #[test]
    fn if_then_else_orders() {
        let gens = ite();
        let order = LexOrder::ascending(&[0, 1, 2]);
        let gb = buchberger_lex(&gens, &order, &GbCaps::default()).unwrap();
        assert!(gb[0].only_in(0));
        // t(2t-1) S^2 + (2t-1) S + 1, made monic
        let lc = c(&[0, -1, 2]);
        let expect = &(&MultiPoly::var(3, 0).pow(2)
            + &MultiPoly::var(3, 0).scale(&c(&[-1, 2]).checked_div(&lc).unwrap()))
            + &MultiPoly::constant(3, lc.inv());
        assert_eq!(gb[0], expect);
        assert!(is_groebner_basis(&gens, &gb, &order));

        let order_a = LexOrder::ascending(&[1, 2, 0]);
        let gb = buchberger_lex(&gens, &order_a, &GbCaps::default()).unwrap();
        assert!(gb[0].only_in(1));
        assert_eq!(gb[0].degree_in(1), 2);
    }

    #[test]
    fn caps_are_enforced() {
        let caps = GbCaps {
            max_basis: 1,
            ..GbCaps::default()
        };
        assert!(matches!(
            buchberger_lex(&ite(), &LexOrder::ascending(&[0, 1, 2]), &caps),
            Err(Error::ResourceCap(_))
        ));
    }
}
