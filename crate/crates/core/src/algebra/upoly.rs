//! Dense univariate polynomials over `Q`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Q;

/// `c[0] + c[1] t + ...`, with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Q>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(q: Q) -> Self {
        Self::from_coeffs(vec![q])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn monomial(coeff: Q, k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = coeff;
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly { c }
    }

    /// Coefficients given low degree first.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| Q::from_integer(x.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    /// Lowest power of `t` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn scale(&self, k: &Q) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            c: self.c.iter().map(|x| x * k).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Q::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.c.clone();
        let mut q = vec![Q::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = &r[i + dd] * &inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[i + j] -= &coef * dc;
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (UPoly::from_coeffs(q), UPoly::from_coeffs(r))
    }

    /// Quotient, asserting that the division is exact.
    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            // keep remainders monic to curb coefficient growth
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> UPoly {
        let mut base = self.clone();
        let mut acc = UPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Squarefree decomposition `self = lc · Π f_i^i` (Yun); returns `(lc, [f_1, f_2, ...])`
    /// with monic `f_i`.
    pub fn squarefree_decomposition(&self) -> (Q, Vec<UPoly>) {
        let lc = self.lc();
        if self.degree().unwrap_or(0) == 0 {
            return (lc, Vec::new());
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = UPoly::gcd(&f, &df);
        let mut b = f.exact_div(&a);
        let mut c = df.exact_div(&a);
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        loop {
            a = UPoly::gcd(&b, &d);
            out.push(a.clone());
            b = b.exact_div(&a);
            if b.degree() == Some(0) || b.is_zero() {
                break;
            }
            c = d.exact_div(&a);
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(UPoly::is_one) {
            out.pop();
        }
        (lc, out)
    }

    /// Writes `self = k · p` with `p` having coprime integer coefficients and a
    /// positive leading coefficient; returns `(k, p)`.
    pub fn integer_primitive(&self) -> (Q, Vec<BigInt>) {
        if self.is_zero() {
            return (Q::zero(), Vec::new());
        }
        let den_lcm = self
            .c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|x| (x * Q::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if ints.last().is_some_and(|x| x.is_negative()) {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
        (Q::new(g, den_lcm), prim)
    }

    /// Text in the given variable, highest power first, e.g. `2*t^2-t+1/2`.
    pub fn format(&self, var: &str) -> String {
        let mut s = String::new();
        if self.is_zero() {
            return "0".into();
        }
        for k in (0..self.c.len()).rev() {
            let c = &self.c[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            let coeff_text = if abs.is_integer() {
                alloc::format!("{}", abs.numer())
            } else {
                alloc::format!("{}/{}", abs.numer(), abs.denom())
            };
            match k {
                0 => s.push_str(&coeff_text),
                _ => {
                    if !abs.is_one() {
                        let _ = write!(s, "{coeff_text}*");
                    }
                    s.push_str(var);
                    if k > 1 {
                        let _ = write!(s, "^{k}");
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format("t"))
    }
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        UPoly::from_coeffs(
            (0..n)
                .map(|i| match (self.c.get(i), rhs.c.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => Q::zero(),
                })
                .collect(),
        )
    }
}

impl Sub<&UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(c)
    }
}

super::forward_owned_ops!(UPoly);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn gcd_and_division() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[-3, 1]);
        assert_eq!(UPoly::gcd(&a, &b), p(&[-1, 1]));
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn squarefree() {
        // 3 (t-1)^2 (t+1)
        let f = (&(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 1])).scale(&Q::from_integer(3.into()));
        let (lc, parts) = f.squarefree_decomposition();
        assert_eq!(lc, Q::from_integer(3.into()));
        assert_eq!(parts, vec![p(&[1, 1]), p(&[-1, 1])]);
    }

    #[test]
    fn formatting() {
        assert_eq!(p(&[1, -1, 2]).to_string(), "2*t^2-t+1");
        assert_eq!(p(&[0, 0, -1]).to_string(), "-t^2");
        assert_eq!(UPoly::zero().to_string(), "0");
        let half = UPoly::constant(Q::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn integer_primitive_sign_and_content() {
        let f = UPoly::from_coeffs(vec![
            Q::new(1.into(), 2.into()),
            Q::from_integer((-1).into()),
        ]);
        let (k, prim) = f.integer_primitive();
        assert_eq!(prim, vec![BigInt::from(-1), BigInt::from(2)]);
        assert_eq!(k, Q::new((-1).into(), 2.into()));
    }
}
