//! Power-series roots of polynomials over `Q(t)` by Newton iteration.

use alloc::vec::Vec;

use num_traits::Zero;

use super::{RfPoly, TruncatedSeries, UPoly, Q};
use crate::error::{Error, Result};

/// Polynomial in `U` with coefficients in `Q[t]`, lowest power first.
type Bivariate = Vec<UPoly>;

fn substitute_shift(p: &[UPoly], prefix: &UPoly, m: usize) -> Bivariate {
    // Horner in H = prefix + t^m U
    let mut acc: Bivariate = Vec::new();
    for c in p.iter().rev() {
        let mut next: Bivariate = alloc::vec![UPoly::zero(); acc.len() + 1];
        for (j, a) in acc.iter().enumerate() {
            next[j] = &next[j] + &(a * prefix);
            next[j + 1] = &next[j + 1] + &a.shift(m);
        }
        next[0] = &next[0] + c;
        while next.last().is_some_and(UPoly::is_zero) {
            next.pop();
        }
        acc = next;
    }
    acc
}

fn eval_at(f: &[TruncatedSeries], u: &TruncatedSeries) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(u.bound());
    for c in f.iter().rev() {
        acc = acc.mul(u).add(c);
    }
    acc
}

/// The power-series root of `q` agreeing with `seed`, to degree `d`.
///
/// `q` is made squarefree first. When the root is not simple at `t = 0` the seed
/// prefix is absorbed (`H = prefix + t^m U`) until the reduced equation for `U` has
/// a simple root, which is then lifted quadratically.
pub fn newton_series(q: &RfPoly, seed: &TruncatedSeries, d: usize) -> Result<TruncatedSeries> {
    if q.is_zero() {
        return Err(Error::Invalid(
            "zero polynomial has no distinguished root".into(),
        ));
    }
    let q = q.squarefree_part();
    let p = q.canonical();
    let seed_len = seed.bound() + 1;

    for m in 0..=seed_len {
        if m > d {
            let out = seed.truncate(d);
            return verify(&p, out);
        }
        let prefix = UPoly::from_coeffs(seed.coeffs()[..m].to_vec());
        let f = substitute_shift(&p, &prefix, m);
        let v =
            f.iter().filter_map(UPoly::valuation).min().ok_or_else(|| {
                Error::Invalid("polynomial vanishes identically on the seed".into())
            })?;
        let f: Bivariate = f
            .iter()
            .map(|c| UPoly::from_coeffs(c.coeffs().iter().skip(v).cloned().collect()))
            .collect();
        let r0 = UPoly::from_coeffs(f.iter().map(|c| c.coeff(0)).collect());
        if r0.degree().unwrap_or(0) == 0 {
            return Err(Error::RootMismatch(alloc::format!(
                "no root continues the seed after {m} coefficients"
            )));
        }
        let u0 = if m < seed_len {
            seed.coeff(m).clone()
        } else if r0.degree() == Some(1) {
            -r0.coeff(0) / r0.coeff(1)
        } else {
            return Err(Error::NonSimpleRoot(alloc::format!(
                "seed of length {seed_len} does not isolate the root"
            )));
        };
        if !r0.eval(&u0).is_zero() {
            return Err(Error::RootMismatch(alloc::format!(
                "seed coefficient {m} = {u0} is not a root"
            )));
        }
        if r0.derivative().eval(&u0).is_zero() {
            continue;
        }
        let n = d - m;
        let fs: Vec<TruncatedSeries> = f.iter().map(|c| TruncatedSeries::from_poly(c, n)).collect();
        let dfs: Vec<TruncatedSeries> = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| TruncatedSeries::from_poly(c, n).scale(&super::qi(j as i64)))
            .collect();
        let mut u = TruncatedSeries::constant(u0, n);
        let mut prec = 1usize;
        loop {
            let num = eval_at(&fs, &u);
            let den = eval_at(&dfs, &u);
            u = u.sub(&num.div(&den)?);
            if prec > n {
                break;
            }
            prec *= 2;
        }
        let mut coeffs: Vec<Q> = seed.coeffs()[..m].to_vec();
        coeffs.extend(u.coeffs().iter().cloned());
        let out = TruncatedSeries::new(coeffs);
        for k in 0..seed_len.min(d + 1) {
            if out.coeff(k) != seed.coeff(k) {
                return Err(Error::RootMismatch(alloc::format!(
                    "root disagrees with the seed at degree {k}"
                )));
            }
        }
        return verify(&p, out);
    }
    Err(Error::NonSimpleRoot(
        "root stays multiple along the whole seed".into(),
    ))
}

fn verify(p: &[UPoly], h: TruncatedSeries) -> Result<TruncatedSeries> {
    let d = h.bound();
    let mut acc = TruncatedSeries::zero(d);
    for c in p.iter().rev() {
        acc = acc.mul(&h).add(&TruncatedSeries::from_poly(c, d));
    }
    if !acc.is_zero() {
        return Err(Error::Mismatch(
            "series root does not annihilate the polynomial".into(),
        ));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::reciprocal_poly;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn linear_root() {
        let q = RfPoly::from_int_coeffs(&[&[-1, -1], &[1]]);
        let h = newton_series(&q, &TruncatedSeries::from_ints(&[1]), 5).unwrap();
        assert_eq!(ints(&h), [1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn dyck_even_catalan() {
        // t^2 T^2 - T + 1
        let q = RfPoly::from_int_coeffs(&[&[1], &[-1], &[0, 0, 1]]);
        let h = newton_series(&q, &TruncatedSeries::from_ints(&[1]), 8).unwrap();
        assert_eq!(ints(&h), [1, 0, 1, 0, 2, 0, 5, 0, 14]);
    }

    #[test]
    fn central_binomials() {
        // p_S = t(2t-1) S^2 + (2t-1) S + 1
        let q = RfPoly::from_int_coeffs(&[&[1], &[-1, 2], &[0, -1, 2]]);
        let h = newton_series(&q, &TruncatedSeries::from_ints(&[1, 1]), 7).unwrap();
        assert_eq!(ints(&h), [1, 1, 2, 3, 6, 10, 20, 35]);
    }

    #[test]
    fn double_root_at_origin() {
        // (H - 1)(H - 1 - t): both roots start with 1
        let a = RfPoly::from_int_coeffs(&[&[-1], &[1]]);
        let b = RfPoly::from_int_coeffs(&[&[-1, -1], &[1]]);
        let q = &a * &b;
        let h = newton_series(&q, &TruncatedSeries::from_ints(&[1, 1]), 4).unwrap();
        assert_eq!(ints(&h), [1, 1, 0, 0, 0]);
        let h = newton_series(&q, &TruncatedSeries::from_ints(&[1, 0]), 4).unwrap();
        assert_eq!(ints(&h), [1, 0, 0, 0, 0]);
        assert!(newton_series(&q, &TruncatedSeries::from_ints(&[1]), 4).is_err());
    }

    #[test]
    fn repeated_factor_is_removed() {
        let a = RfPoly::from_int_coeffs(&[&[-1, -1], &[1]]);
        let q = &a * &a;
        let h = newton_series(&q, &TruncatedSeries::from_ints(&[1]), 3).unwrap();
        assert_eq!(ints(&h), [1, 1, 0, 0]);
    }

    #[test]
    fn mismatched_seed() {
        let q = RfPoly::from_int_coeffs(&[&[-1, -1], &[1]]);
        assert!(matches!(
            newton_series(&q, &TruncatedSeries::from_ints(&[2]), 3),
            Err(Error::RootMismatch(_))
        ));
        assert!(matches!(
            newton_series(&q, &TruncatedSeries::from_ints(&[1, 5]), 3),
            Err(Error::RootMismatch(_))
        ));
    }

    #[test]
    fn reciprocal_of_euler_characteristic() {
        // E = 1 - 2t  ->  H = 1/(1-2t)
        let p = RfPoly::from_int_coeffs(&[&[-1, 2], &[1]]);
        let h = newton_series(&reciprocal_poly(&p), &TruncatedSeries::from_ints(&[1]), 4).unwrap();
        assert_eq!(ints(&h), [1, 2, 4, 8, 16]);
    }
}
