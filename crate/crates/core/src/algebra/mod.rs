//! Exact scalar, polynomial, rational-function and truncated-series
//! arithmetic.

mod display;
mod poly;
mod ratfunc;
mod series;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use display::{canonical_text, factor_denominator, integer_parts, render_series, Factored, Style};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use series::TruncatedSeries;
pub(crate) use series::sum_all as sum_rational_functions;

/// Arbitrary-precision rational; the only scalar type.
pub type Rational = num_rational::BigRational;

/// Builds `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The symbol a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    /// Number of open channels.
    M,
    /// Absorption strength `γ = τ_d/τ_a`, written `g` in plain text.
    #[serde(rename = "g")]
    Gamma,
}

impl Symbol {
    pub fn text(self) -> &'static str {
        match self {
            Symbol::M => "M",
            Symbol::Gamma => "g",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Symbol::M => "M",
            Symbol::Gamma => "\\gamma",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

/// Expansion variable of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variable {
    /// `1/M`; coefficients are rational in `γ`.
    InvM,
    /// `γ`; coefficients are rational in `M`.
    Gamma,
    /// `1/γ`; coefficients are rational in `M`.
    InvGamma,
}

impl Variable {
    /// The symbol the coefficients are written in.
    pub fn coefficient_symbol(self) -> Symbol {
        match self {
            Variable::InvM => Symbol::Gamma,
            Variable::Gamma | Variable::InvGamma => Symbol::M,
        }
    }

    /// Value of the expansion variable at the point `(M, γ)`.
    pub fn value_at(self, m: &Rational, gamma: &Rational) -> crate::Result<Rational> {
        use num_traits::Zero;
        let inv = |x: &Rational| {
            if x.is_zero() {
                Err(crate::Error::DivisionByZero)
            } else {
                Ok(x.recip())
            }
        };
        match self {
            Variable::InvM => inv(m),
            Variable::Gamma => Ok(gamma.clone()),
            Variable::InvGamma => inv(gamma),
        }
    }

    /// Value of the coefficient symbol at the point `(M, γ)`.
    pub fn coefficient_value(self, m: &Rational, gamma: &Rational) -> Rational {
        match self.coefficient_symbol() {
            Symbol::M => m.clone(),
            Symbol::Gamma => gamma.clone(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variable::InvM => "inv_M",
            Variable::Gamma => "gamma",
            Variable::InvGamma => "inv_gamma",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
