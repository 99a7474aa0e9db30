//! Truncated power series with exact rational coefficients.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{RatFunc, UPoly, Q};
use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_d t^d + O(t^{d+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl TruncatedSeries {
    /// Series with the given coefficients; the bound is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Q>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| super::qi(x)).collect())
    }

    pub fn zero(d: usize) -> Self {
        Self::new(vec![Q::zero(); d + 1])
    }

    pub fn one(d: usize) -> Self {
        Self::constant(Q::one(), d)
    }

    pub fn constant(c: Q, d: usize) -> Self {
        let mut s = Self::zero(d);
        s.coeffs[0] = c;
        s
    }

    pub fn from_poly(p: &UPoly, d: usize) -> Self {
        Self::new((0..=d).map(|k| p.coeff(k)).collect())
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Q {
        &self.coeffs[k]
    }

    pub fn truncate(&self, d: usize) -> TruncatedSeries {
        assert!(d <= self.bound(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=d].to_vec())
    }

    pub fn to_poly(&self) -> UPoly {
        UPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Q) -> TruncatedSeries {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplication by `t^k`, keeping the bound.
    pub fn shift(&self, k: usize) -> TruncatedSeries {
        let d = self.bound();
        let mut c = vec![Q::zero(); d + 1];
        if k <= d {
            c[k..].clone_from_slice(&self.coeffs[..=d - k]);
        }
        Self::new(c)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let d = self.bound().min(other.bound());
        Self::new(
            (0..=d)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let d = self.bound().min(other.bound());
        Self::new(
            (0..=d)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        )
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let d = self.bound().min(other.bound());
        let mut c = vec![Q::zero(); d + 1];
        for (i, a) in self.coeffs.iter().take(d + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d + 1 - i).enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let d = self.bound();
        let inv0 = c0.recip();
        let mut r: Vec<Q> = Vec::with_capacity(d + 1);
        r.push(inv0.clone());
        for k in 1..=d {
            let mut acc = Q::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &r[k - i];
            }
            r.push(-acc * &inv0);
        }
        Ok(Self::new(r))
    }

    pub fn div(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: u32) -> TruncatedSeries {
        let mut acc = Self::one(self.bound());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Square root with positive constant term; the constant term must be the square
    /// of a rational.
    pub fn sqrt(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        let r0 = rational_sqrt(c0).ok_or_else(|| {
            Error::Invalid(alloc::format!(
                "constant term {c0} is not a rational square"
            ))
        })?;
        if r0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let d = self.bound();
        let two_r0 = &r0 * super::qi(2);
        let mut r = vec![r0];
        for k in 1..=d {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &r[i] * &r[k - i];
            }
            r.push(acc / &two_r0);
        }
        Ok(Self::new(r))
    }

    /// Comma-separated exact coefficients.
    pub fn csv(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&c.to_string());
        }
        s
    }
}

fn rational_sqrt(q: &Q) -> Option<Q> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Q::new(n, d))
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.csv())
    }
}

pub fn series_arith(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    op: SeriesOp,
) -> Result<TruncatedSeries> {
    Ok(match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b)?,
    })
}

/// Maclaurin expansion of `f` to degree `d`.
pub fn rational_eval_series(f: &RatFunc, d: usize) -> Result<TruncatedSeries> {
    if f.den().coeff(0).is_zero() {
        return Err(Error::Invalid(alloc::format!("{f} has a pole at t = 0")));
    }
    let num = TruncatedSeries::from_poly(f.num(), d);
    let den = TruncatedSeries::from_poly(f.den(), d);
    num.div(&den)
}
