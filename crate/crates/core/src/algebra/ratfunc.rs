//! The rational function field `Q(t)`.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::series::TruncatedSeries;
use super::{UPoly, Q};
use crate::error::{Error, Result};

/// `num/den` in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    /// Normalizes `num/den`. Panics if `den` is zero.
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = UPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.lc();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    pub fn t() -> Self {
        Self::from_poly(UPoly::t())
    }

    pub fn from_q(q: Q) -> Self {
        RatFunc {
            num: UPoly::constant(q),
            den: UPoly::one(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_q(super::qi(n))
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    /// `c · t^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        Self::from_poly(UPoly::monomial(c, k))
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::Singular);
        }
        Ok(self * &rhs.inv())
    }

    pub fn scale(&self, k: &Q) -> RatFunc {
        if k.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Crude size measure used to break ties between equally ranked choices.
    pub fn size(&self) -> usize {
        self.num.coeffs().len() + self.den.coeffs().len()
    }

    /// Maclaurin expansion to degree `d`.
    pub fn to_series(&self, d: usize) -> Result<TruncatedSeries> {
        super::series::rational_eval_series(self, d)
    }

    pub fn format(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.format(var);
        }
        alloc::format!("({})/({})", self.num.format(var), self.den.format(var))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format("t"))
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying
        let g1 = UPoly::gcd(&self.num, &rhs.den);
        let g2 = UPoly::gcd(&rhs.num, &self.den);
        let n = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let d = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        RatFunc::new(n, d)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv()
    }
}

super::forward_owned_ops!(RatFunc);

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn normalization() {
        // (2t - 2) / (2t^2 - 2) = 1/(t+1)
        let f = RatFunc::new(p(&[-2, 2]), p(&[-2, 0, 2]));
        assert_eq!(f.num(), &p(&[1]));
        assert_eq!(f.den(), &p(&[1, 1]));
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(p(&[1]), p(&[1, -1]));
        let b = RatFunc::new(p(&[1]), p(&[1, 1]));
        // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
        let s = &a + &b;
        assert_eq!(s, RatFunc::new(p(&[2]), p(&[1, 0, -1])));
        assert_eq!(&(&s / &a) * &a, s);
        assert!((&s - &s).is_zero());
        assert_eq!(s.to_string(), "(-2)/(t^2-1)");
    }
}
