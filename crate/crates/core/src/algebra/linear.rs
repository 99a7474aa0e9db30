//! Gaussian elimination over `Q(t)`.

use alloc::vec::Vec;

use super::{MultiPoly, RatFunc};
use crate::error::{Error, Result};

/// Solves `a · x = b` for square nonsingular `a`.
pub fn gaussian_solve(mut a: Vec<Vec<RatFunc>>, mut b: Vec<RatFunc>) -> Result<Vec<RatFunc>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid("linear system is not square".into()));
    }
    for col in 0..n {
        // pivot on the smallest nonzero entry to limit growth
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].size())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inv();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            #[allow(clippy::needless_range_loop)]
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
            }
            let sub = &f * &b[col];
            b[r] = &b[r] - &sub;
        }
    }
    Ok((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Solves a system given as polynomials of total degree ≤ 1, one per unknown.
pub fn solve_linear_polys(eqs: &[MultiPoly]) -> Result<Vec<RatFunc>> {
    let n = eqs.first().map_or(0, MultiPoly::nvars);
    if eqs.len() != n {
        return Err(Error::Invalid(
            "need one linear equation per unknown".into(),
        ));
    }
    let mut a = alloc::vec![alloc::vec![RatFunc::zero(); n]; n];
    let mut b = alloc::vec![RatFunc::zero(); n];
    for (i, eq) in eqs.iter().enumerate() {
        if eq.total_degree() > 1 {
            return Err(Error::Invalid("equation is not linear".into()));
        }
        for (e, c) in eq.terms() {
            match e.iter().position(|&k| k == 1) {
                Some(v) => a[i][v] = c.clone(),
                None => b[i] = -c,
            }
        }
    }
    gaussian_solve(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UPoly;

    fn c(p: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_ints(p))
    }

    #[test]
    fn palindrome_system() {
        // S - 1 - 2t - 2t^2 S = 0
        let s = MultiPoly::var(1, 0);
        let eq = &(&s - &MultiPoly::constant(1, c(&[1, 2]))) - &s.scale(&c(&[0, 0, 2]));
        let sol = solve_linear_polys(&[eq]).unwrap();
        assert_eq!(
            sol[0],
            RatFunc::new(UPoly::from_ints(&[1, 2]), UPoly::from_ints(&[1, 0, -2]))
        );
    }

    #[test]
    fn identity_system() {
        let eq = &MultiPoly::var(1, 0) - &MultiPoly::one(1);
        assert_eq!(solve_linear_polys(&[eq]).unwrap(), [RatFunc::one()]);
    }

    #[test]
    fn singular() {
        let a = alloc::vec![
            alloc::vec![RatFunc::one(), RatFunc::one()],
            alloc::vec![RatFunc::one(), RatFunc::one()]
        ];
        assert_eq!(
            gaussian_solve(a, alloc::vec![RatFunc::one(), RatFunc::zero()]),
            Err(Error::Singular)
        );
    }
}
