//! Sparse multivariate polynomials over `Q(t)` with lexicographic orders.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use super::{RatFunc, TruncatedSeries};
use crate::error::Result;

pub type Exponent = Vec<u32>;

/// Lexicographic order given by a ranking of the variables, most significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexOrder {
    desc: Vec<usize>,
}

impl LexOrder {
    /// `desc[0]` is the largest variable.
    pub fn new(desc: Vec<usize>) -> Self {
        LexOrder { desc }
    }

    /// Order from the variables listed smallest first (`S ≺ A ≺ B` is `[S, A, B]`).
    pub fn ascending(asc: &[usize]) -> Self {
        LexOrder {
            desc: asc.iter().rev().copied().collect(),
        }
    }

    /// Variables in ascending rank.
    pub fn ascending_vars(&self) -> Vec<usize> {
        self.desc.iter().rev().copied().collect()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in &self.desc {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

pub(crate) fn exp_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn exp_lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn exp_sub(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn exp_add(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn exp_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Element of `Q(t)[A_1..A_m]`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, RatFunc>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: RatFunc) -> Self {
        Self::term(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, RatFunc::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(nvars, e, RatFunc::one())
    }

    pub fn term(nvars: usize, exp: Exponent, c: RatFunc) -> Self {
        assert_eq!(exp.len(), nvars, "exponent length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &RatFunc)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> RatFunc {
        self.terms.get(exp).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, exp: Exponent, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Leading exponent and coefficient under `order`.
    pub fn leading(&self, order: &LexOrder) -> Option<(&Exponent, &RatFunc)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &RatFunc) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// `self · c · A^exp`.
    pub fn mul_term(&self, exp: &[u32], c: &RatFunc) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (exp_add(e, exp), x * c))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &LexOrder) -> MultiPoly {
        match self.leading(order) {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] > 0)
    }

    /// True iff every term involves only the variable `v`.
    pub fn only_in(&self, v: usize) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().enumerate().all(|(i, &x)| i == v || x == 0))
    }

    /// Coefficients of `self` seen as a polynomial in `v`, lowest power first.
    pub fn coeffs_in(&self, v: usize) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(self.nvars); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            out[e[v] as usize].add_term(e2, c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes series for the variables and expands to degree `d`.
    pub fn eval_series(&self, values: &[TruncatedSeries], d: usize) -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::zero(d);
        for (e, c) in &self.terms {
            let mut term = c.to_series(d)?;
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&values[v].pow(k));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Relabels variables into a ring with `nvars` variables; `map[i]` is the new index of variable `i`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Exact quotient `self / d` if `d` divides `self`.
    pub fn div_exact(&self, d: &MultiPoly, order: &LexOrder) -> Option<MultiPoly> {
        let (dl, dc) = d.leading(order)?;
        let (dl, dcinv) = (dl.clone(), dc.inv());
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(self.nvars);
        while let Some((e, c)) = rem.leading(order) {
            if !exp_divides(&dl, e) {
                return None;
            }
            let qe = exp_sub(e, &dl);
            let qc = c * &dcinv;
            rem = &rem - &d.mul_term(&qe, &qc);
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Text using the given variable names, terms in descending `order`.
    pub fn format(&self, names: &[&str], order: &LexOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut s = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        names[v].into()
                    } else {
                        alloc::format!("{}^{k}", names[v])
                    }
                })
                .collect();
            if i > 0 {
                s.push_str(" + ");
            }
            let coeff = alloc::format!("({c})");
            if mono.is_empty() {
                s.push_str(&coeff);
            } else if c.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&coeff);
                s.push('*');
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(exp_add(e1, e2), c1 * c2);
            }
        }
        out
    }
}

super::forward_owned_ops!(MultiPoly);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_leading_term() {
        // variables S=0, A=1, B=2 with S < A < B
        let order = LexOrder::ascending(&[0, 1, 2]);
        let p = &(&MultiPoly::var(3, 0).pow(3) + &MultiPoly::var(3, 1)) + &MultiPoly::var(3, 2);
        assert_eq!(p.leading(&order).unwrap().0, &vec![0, 0, 1]);
        let order2 = LexOrder::ascending(&[2, 1, 0]);
        assert_eq!(p.leading(&order2).unwrap().0, &vec![3, 0, 0]);
    }

    #[test]
    fn exact_division() {
        let order = LexOrder::ascending(&[0, 1]);
        let a = &MultiPoly::var(2, 0) + &MultiPoly::one(2);
        let b = &MultiPoly::var(2, 1) - &MultiPoly::constant(2, RatFunc::t());
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a, &order), Some(b.clone()));
        assert_eq!((&ab + &MultiPoly::one(2)).div_exact(&a, &order), None);
    }

    #[test]
    fn coefficients_in_a_variable() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = &(&x * &x) + &(&x * &y);
        let c = p.coeffs_in(0);
        assert_eq!(c.len(), 3);
        assert!(c[0].is_zero());
        assert_eq!(c[1], y);
        assert_eq!(c[2], MultiPoly::one(2));
    }
}
