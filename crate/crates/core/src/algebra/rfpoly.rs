//! Univariate polynomials over `Q(t)`, as produced by elimination.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MultiPoly, RatFunc, TruncatedSeries, UPoly, Q};
use crate::error::Result;

/// `c[0] + c[1] H + ...` with coefficients in `Q(t)`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RfPoly {
    c: Vec<RatFunc>,
}

impl RfPoly {
    pub fn from_coeffs(mut c: Vec<RatFunc>) -> Self {
        while c.last().is_some_and(RatFunc::is_zero) {
            c.pop();
        }
        RfPoly { c }
    }

    /// Coefficients as integer polynomials in `t`, lowest power of `H` first.
    pub fn from_int_coeffs(c: &[&[i64]]) -> Self {
        Self::from_coeffs(
            c.iter()
                .map(|p| RatFunc::from_poly(UPoly::from_ints(p)))
                .collect(),
        )
    }

    /// Reads a polynomial that involves only variable `v`.
    pub fn from_multi(p: &MultiPoly, v: usize) -> Self {
        debug_assert!(p.only_in(v));
        let mut c = vec![RatFunc::zero(); p.degree_in(v) as usize + 1];
        for (e, x) in p.terms() {
            c[e[v] as usize] = x.clone();
        }
        Self::from_coeffs(c)
    }

    pub fn to_multi(&self, nvars: usize, v: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (k, x) in self.c.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[v] = k as u32;
            out.add_term(e, x.clone());
        }
        out
    }

    pub fn zero() -> Self {
        RfPoly { c: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.c.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn lc(&self) -> RatFunc {
        self.c.last().cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn scale(&self, k: &RatFunc) -> RfPoly {
        Self::from_coeffs(self.c.iter().map(|x| x * k).collect())
    }

    pub fn monic(&self) -> RfPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    pub fn derivative(&self) -> RfPoly {
        Self::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x.scale(&super::qi(i as i64)))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &RfPoly) -> (RfPoly, RfPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (RfPoly::zero(), self.clone());
        }
        let inv = d.lc().inv();
        let mut r = self.c.clone();
        let mut q = vec![RatFunc::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = &r[i + dd] * &inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&coef * dc);
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// Monic gcd.
    pub fn gcd(a: &RfPoly, b: &RfPoly) -> RfPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots, each simple.
    pub fn squarefree_part(&self) -> RfPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = RfPoly::gcd(self, &self.derivative());
        self.div_rem(&g).0
    }

    /// Evaluates at a power series `h` to degree `d`.
    pub fn eval_series(&self, h: &TruncatedSeries, d: usize) -> Result<TruncatedSeries> {
        let h = h.truncate(d.min(h.bound()));
        let mut acc = TruncatedSeries::zero(h.bound());
        for x in self.c.iter().rev() {
            acc = acc.mul(&h).add(&x.to_series(h.bound())?);
        }
        Ok(acc)
    }

    /// Canonical representative of `self · Q(t)^*`: integer polynomial coefficients
    /// with no common factor in `Z[t]`, and positive leading coefficient of the
    /// leading `H`-coefficient.
    pub fn canonical(&self) -> Vec<UPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut l = UPoly::one();
        for x in &self.c {
            let g = UPoly::gcd(&l, x.den());
            l = &l * &x.den().exact_div(&g);
        }
        let mut polys: Vec<UPoly> = self
            .c
            .iter()
            .map(|x| x.num() * &l.exact_div(x.den()))
            .collect();
        let content = polys.iter().fold(UPoly::zero(), |g, p| UPoly::gcd(&g, p));
        if !content.is_one() {
            polys = polys.iter().map(|p| p.exact_div(&content)).collect();
        }
        let mut den = BigInt::one();
        for p in &polys {
            for q in p.coeffs() {
                den = den.lcm(q.denom());
            }
        }
        let den = Q::from_integer(den);
        let mut ints: Vec<UPoly> = polys.iter().map(|p| p.scale(&den)).collect();
        let mut g = BigInt::zero();
        for p in &ints {
            for q in p.coeffs() {
                g = g.gcd(q.numer());
            }
        }
        if ints.last().unwrap().lc().is_negative() {
            g = -g;
        }
        let g = Q::from_integer(g).recip();
        ints = ints.iter().map(|p| p.scale(&g)).collect();
        ints
    }

    /// True iff `self = k · other` for a nonzero `k ∈ Q(t)`.
    pub fn same_up_to_unit(&self, other: &RfPoly) -> bool {
        self.canonical() == other.canonical()
    }

    /// Display of the canonical form, highest power of `var` first, e.g.
    /// `(2*t^2-t)*S^2 + (2*t-1)*S + 1`.
    pub fn format(&self, var: &str) -> String {
        let polys = self.canonical();
        if polys.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for k in (0..polys.len()).rev() {
            let p = &polys[k];
            if p.is_zero() {
                continue;
            }
            let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            let (neg, body) = if single && p.lc().is_negative() {
                (true, -p)
            } else {
                (false, p.clone())
            };
            if !s.is_empty() {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let ctext = body.format("t");
            let power = match k {
                0 => String::new(),
                1 => var.into(),
                _ => alloc::format!("{var}^{k}"),
            };
            if k == 0 {
                s.push_str(&ctext);
            } else if body.is_one() {
                s.push_str(&power);
            } else if single {
                s.push_str(&alloc::format!("{ctext}*{power}"));
            } else {
                s.push_str(&alloc::format!("({ctext})*{power}"));
            }
        }
        s
    }
}

/// `H^d · p(1/H)` with `d = deg p`: the coefficient list reversed.
pub fn reciprocal_poly(p: &RfPoly) -> RfPoly {
    let mut c = p.c.clone();
    c.reverse();
    RfPoly::from_coeffs(c)
}

impl Add<&RfPoly> for &RfPoly {
    type Output = RfPoly;
    fn add(self, rhs: &RfPoly) -> RfPoly {
        let n = self.c.len().max(rhs.c.len());
        RfPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub<&RfPoly> for &RfPoly {
    type Output = RfPoly;
    fn sub(self, rhs: &RfPoly) -> RfPoly {
        self + &(-rhs)
    }
}

impl Neg for &RfPoly {
    type Output = RfPoly;
    fn neg(self) -> RfPoly {
        RfPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul<&RfPoly> for &RfPoly {
    type Output = RfPoly;
    fn mul(self, rhs: &RfPoly) -> RfPoly {
        if self.is_zero() || rhs.is_zero() {
            return RfPoly::zero();
        }
        let mut c = vec![RatFunc::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        RfPoly::from_coeffs(c)
    }
}

super::forward_owned_ops!(RfPoly);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_reverses() {
        // E - 2  ->  1 - 2H
        let p = RfPoly::from_int_coeffs(&[&[-2], &[1]]);
        assert_eq!(reciprocal_poly(&p), RfPoly::from_int_coeffs(&[&[1], &[-2]]));
        let q = RfPoly::from_int_coeffs(&[&[1, 1], &[0, 3], &[2]]);
        assert_eq!(reciprocal_poly(&reciprocal_poly(&q)), q);
    }

    #[test]
    fn canonical_form_clears_units() {
        // t(2t-1) S^2 + (2t-1) S + 1, scaled by 1/(3t(2t-1))
        let p = RfPoly::from_int_coeffs(&[&[1], &[-1, 2], &[0, -1, 2]]);
        let unit = RatFunc::new(UPoly::one(), UPoly::from_ints(&[0, -3, 6]));
        let scaled = p.scale(&unit);
        assert!(p.same_up_to_unit(&scaled));
        assert_eq!(scaled.format("S"), "(2*t^2-t)*S^2 + (2*t-1)*S + 1");
        let neg = p.scale(&RatFunc::from_i64(-5));
        assert_eq!(neg.canonical(), p.canonical());
    }

    #[test]
    fn squarefree_part_drops_repeated_factor() {
        // (H - t)^2 (H + 1)
        let a = RfPoly::from_int_coeffs(&[&[0, -1], &[1]]);
        let b = RfPoly::from_int_coeffs(&[&[1], &[1]]);
        let p = &(&a * &a) * &b;
        let sf = p.squarefree_part();
        assert!(sf.same_up_to_unit(&(&a * &b)));
    }
}
