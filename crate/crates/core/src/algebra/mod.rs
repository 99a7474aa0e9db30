//! Exact arithmetic over `Q`, `Q[t]`, `Q(t)` and `Q(t)[A_1..A_m]`, plus the
//! elimination and series-root machinery built on it.

use num_rational::BigRational;

/// Arbitrary-precision rationals.
pub type Q = BigRational;

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl core::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl core::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl core::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl core::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_ops;

mod elim;
mod groebner;
mod linear;
mod mpoly;
mod newton;
mod ratfunc;
mod rfpoly;
mod series;
mod upoly;

pub use elim::{eliminate_by_resultants, eliminate_univariate, eliminate_univariate_with_caps};
pub use groebner::{buchberger_lex, is_groebner_basis, normal_form, GbCaps};
pub use linear::{gaussian_solve, solve_linear_polys};
pub use mpoly::{LexOrder, MultiPoly};
pub use newton::newton_series;
pub use ratfunc::RatFunc;
pub use rfpoly::{reciprocal_poly, RfPoly};
pub use series::{rational_eval_series, series_arith, SeriesOp, TruncatedSeries};
pub use upoly::UPoly;

/// Shorthand for an integer rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand for the rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
