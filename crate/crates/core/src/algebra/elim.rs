//! Elimination of all variables but one.

use alloc::vec::Vec;

use super::{buchberger_lex, GbCaps, LexOrder, MultiPoly, RfPoly};
use crate::error::{Error, Result};

/// Generator of `(gens) ∩ Q(t)[A_keep]`, read off the reduced lex Gröbner basis in
/// which `keep` is the smallest variable and the others follow in index order.
pub fn eliminate_univariate(gens: &[MultiPoly], keep: usize) -> Result<RfPoly> {
    eliminate_univariate_with_caps(gens, keep, &GbCaps::default()).map(|(p, _)| p)
}

/// As [`eliminate_univariate`], also returning the Gröbner basis it came from.
pub fn eliminate_univariate_with_caps(
    gens: &[MultiPoly],
    keep: usize,
    caps: &GbCaps,
) -> Result<(RfPoly, Vec<MultiPoly>)> {
    let nvars = gens.first().map_or(0, MultiPoly::nvars);
    if keep >= nvars {
        return Err(Error::Invalid("kept variable out of range".into()));
    }
    let mut asc = alloc::vec![keep];
    asc.extend((0..nvars).filter(|&v| v != keep));
    let order = LexOrder::ascending(&asc);
    let gb = buchberger_lex(gens, &order, caps)?;
    let p = gb
        .iter()
        .filter(|g| g.only_in(keep) && g.degree_in(keep) > 0)
        .min_by_key(|g| g.degree_in(keep))
        .ok_or_else(|| Error::NoUnivariate(alloc::format!("variable #{keep}")))?;
    Ok((RfPoly::from_multi(p, keep), gb))
}

fn resultant(p: &MultiPoly, q: &MultiPoly, v: usize) -> MultiPoly {
    let n = p.nvars();
    let a = p.coeffs_in(v);
    let b = q.coeffs_in(v);
    let (m, k) = (a.len() - 1, b.len() - 1);
    if m == 0 {
        return a[0].pow(k as u32);
    }
    if k == 0 {
        return b[0].pow(m as u32);
    }
    let size = m + k;
    let mut mat = alloc::vec![alloc::vec![MultiPoly::zero(n); size]; size];
    for r in 0..k {
        for (i, c) in a.iter().rev().enumerate() {
            mat[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in b.iter().rev().enumerate() {
            mat[k + r][r + i] = c.clone();
        }
    }
    // fraction-free Bareiss elimination
    let order = LexOrder::new((0..n).collect());
    let mut sign = false;
    let mut prev = MultiPoly::one(n);
    for col in 0..size - 1 {
        if mat[col][col].is_zero() {
            match (col + 1..size).find(|&r| !mat[r][col].is_zero()) {
                Some(r) => {
                    mat.swap(col, r);
                    sign = !sign;
                }
                None => return MultiPoly::zero(n),
            }
        }
        for r in col + 1..size {
            for c in col + 1..size {
                let num = &(&mat[r][c] * &mat[col][col]) - &(&mat[r][col] * &mat[col][c]);
                mat[r][c] = num
                    .div_exact(&prev, &order)
                    .expect("Bareiss division is exact");
            }
            mat[r][col] = MultiPoly::zero(n);
        }
        prev = mat[col][col].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Eliminates by repeated resultants. The result vanishes on the projection of the
/// variety but may carry extraneous factors; used to cross-check
/// [`eliminate_univariate`], whose output must divide it.
pub fn eliminate_by_resultants(gens: &[MultiPoly], keep: usize) -> Result<RfPoly> {
    let nvars = gens.first().map_or(0, MultiPoly::nvars);
    let mut polys: Vec<MultiPoly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    for v in (0..nvars).filter(|&v| v != keep) {
        let (with, without): (Vec<_>, Vec<_>) = polys.into_iter().partition(|p| p.uses_var(v));
        polys = without;
        let Some(pi) = (0..with.len()).min_by_key(|&i| (with[i].degree_in(v), with[i].len()))
        else {
            continue;
        };
        for (i, q) in with.iter().enumerate() {
            if i == pi {
                continue;
            }
            let r = resultant(&with[pi], q, v);
            if !r.is_zero() {
                polys.push(r);
            }
        }
    }
    let mut g = RfPoly::zero();
    for p in polys
        .iter()
        .filter(|p| p.only_in(keep) && p.degree_in(keep) > 0)
    {
        g = RfPoly::gcd(&g, &RfPoly::from_multi(p, keep));
    }
    if g.is_zero() {
        return Err(Error::NoUnivariate(alloc::format!("variable #{keep}")));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{RatFunc, UPoly};

    fn c(p: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_ints(p))
    }

    fn ite() -> Vec<MultiPoly> {
        let v = |i| MultiPoly::var(3, i);
        let k = |p: &[i64]| MultiPoly::constant(3, c(p));
        let (s, a, b) = (v(0), v(1), v(2));
        alloc::vec![
            &(&s - &a) - &b,
            &(&a - &k(&[1])) - &(&k(&[0, 0, 1]) * &(&a * &a)),
            &(&b - &(&k(&[0, 1]) * &s)) - &(&k(&[0, 0, 1]) * &(&a * &b)),
        ]
    }

    #[test]
    fn if_then_else_eliminants() {
        let gens = ite();
        let ps = eliminate_univariate(&gens, 0).unwrap();
        assert!(ps.same_up_to_unit(&RfPoly::from_int_coeffs(&[&[1], &[-1, 2], &[0, -1, 2]])));
        let pa = eliminate_univariate(&gens, 1).unwrap();
        assert!(pa.same_up_to_unit(&RfPoly::from_int_coeffs(&[&[1], &[-1], &[0, 0, 1]])));
        // t^2(2t-1) B^2 + (t+1)(2t-1) B + t
        let pb = eliminate_univariate(&gens, 2).unwrap();
        assert!(pb.same_up_to_unit(&RfPoly::from_int_coeffs(&[
            &[0, 1],
            &[-1, 1, 2],
            &[0, 0, -1, 2]
        ])));
    }

    #[test]
    fn resultants_are_multiples() {
        let gens = ite();
        for keep in 0..3 {
            let gb = eliminate_univariate(&gens, keep).unwrap();
            let res = eliminate_by_resultants(&gens, keep).unwrap();
            assert!(res.div_rem(&gb).1.is_zero(), "keep {keep}");
        }
    }

    #[test]
    fn trivial_linear() {
        let f = RatFunc::new(UPoly::from_ints(&[1]), UPoly::from_ints(&[1, -1]));
        let g = &MultiPoly::var(1, 0) - &MultiPoly::constant(1, f.clone());
        let p = eliminate_univariate(&[g], 0).unwrap();
        assert_eq!(p, RfPoly::from_coeffs(alloc::vec![-f, RatFunc::one()]));
    }
}
