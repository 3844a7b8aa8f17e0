//! Text and LaTeX rendering. Arithmetic always works on canonical expanded
//! forms; this module only regroups them for reading, pulling denominators
//! apart into `(1+γ)^k`, `M^k` and `(M²−j²)^k` factors.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational, RationalFunction, Symbol, TruncatedSeries, Variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

fn sym_str(sym: Symbol, style: Style) -> &'static str {
    match style {
        Style::Text => sym.text(),
        Style::Latex => sym.latex(),
    }
}

fn pow_str(base: &str, k: i64, style: Style) -> String {
    match (k, style) {
        (1, _) => base.to_string(),
        (_, Style::Text) => format!("{base}^{k}"),
        (_, Style::Latex) => format!("{base}^{{{k}}}"),
    }
}

/// Integer polynomial, highest degree first, e.g. `8g^2-12g+1`.
fn int_poly_str(coeffs: &[BigInt], sym: Symbol, style: Style, ascending: bool) -> String {
    let mut out = String::new();
    let degrees: Vec<usize> = if ascending {
        (0..coeffs.len()).collect()
    } else {
        (0..coeffs.len()).rev().collect()
    };
    for d in degrees {
        let c = &coeffs[d];
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let a = c.abs();
        if d == 0 {
            write!(out, "{a}").unwrap();
        } else {
            if !a.is_one() {
                write!(out, "{a}").unwrap();
            }
            out.push_str(&pow_str(sym_str(sym, style), d as i64, style));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_count(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

/// Plain-text form of a polynomial with its rational content folded in.
pub(crate) fn poly_text(p: &Polynomial, parens: bool) -> String {
    let (c, ints) = p.integer_primitive();
    let body = int_poly_str(&ints, p.symbol(), Style::Text, false);
    let wrapped = if parens && term_count(&ints) > 1 { format!("({body})") } else { body };
    if c.is_one() {
        wrapped
    } else {
        format!("{c}*{wrapped}")
    }
}

/// `(num, den)` as integer coefficient lists (lowest degree first) with no
/// common integer factor and a positive leading denominator coefficient.
pub fn integer_parts(r: &RationalFunction) -> (Vec<BigInt>, Vec<BigInt>) {
    let (cn, n) = r.numer().integer_primitive();
    let (cd, d) = r.denom().integer_primitive();
    if r.is_zero() {
        return (Vec::new(), vec![BigInt::one()]);
    }
    let content = cn / cd;
    let num = n.iter().map(|x| x * content.numer()).collect();
    let den = d.iter().map(|x| x * content.denom()).collect();
    (num, den)
}

/// Canonical single-fraction text, e.g. `(g^2+2)/(g^6+6g^5+...)`.
pub fn canonical_text(r: &RationalFunction) -> String {
    let (num, den) = integer_parts(r);
    let sym = r.symbol();
    if num.is_empty() {
        return "0".into();
    }
    let n = int_poly_str(&num, sym, Style::Text, false);
    if den.len() == 1 && den[0].is_one() {
        return n;
    }
    let n = if term_count(&num) > 1 { format!("({n})") } else { n };
    let d = int_poly_str(&den, sym, Style::Text, false);
    let d = if term_count(&den) > 1 || den.len() > 1 { format!("({d})") } else { d };
    format!("{n}/{d}")
}

/// Splits a denominator into recognisable factors with multiplicities:
/// powers of the symbol, `(1+γ)`, `(M²−j²)` and `(M±j)`, then whatever is
/// left. Factors are monic integer polynomials; constants are dropped.
pub fn factor_denominator(den: &Polynomial) -> Vec<(Polynomial, u32)> {
    let sym = den.symbol();
    let mut rest = den.monic();
    let mut out = Vec::new();
    if rest.is_zero() {
        return out;
    }
    let mut take = |rest: &mut Polynomial, f: Polynomial| {
        let mut k = 0;
        while rest.degree() >= f.degree() {
            match rest.exact_div(&f) {
                Ok(q) => {
                    *rest = q;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        if k > 0 {
            out.push((f, k));
        }
    };
    take(&mut rest, Polynomial::var(sym));
    match sym {
        Symbol::Gamma => take(&mut rest, Polynomial::linear(sym, 1, 1)),
        Symbol::M => {
            for j in 1..=64i64 {
                if rest.is_constant() {
                    break;
                }
                take(&mut rest, Polynomial::from_ints(sym, &[-j * j, 0, 1]));
            }
            for j in 1..=64i64 {
                if rest.is_constant() {
                    break;
                }
                take(&mut rest, Polynomial::linear(sym, -j, 1));
                take(&mut rest, Polynomial::linear(sym, j, 1));
            }
        }
    }
    if !rest.is_constant() {
        out.push((rest, 1));
    }
    out
}

/// A rational function regrouped as `content · x^a · P / (Π factors)`.
#[derive(Clone, Debug)]
pub struct Factored {
    symbol: Symbol,
    content: Rational,
    num_power: usize,
    num_rest: Vec<BigInt>,
    den_factors: Vec<(Vec<BigInt>, u32)>,
}

impl Factored {
    pub fn new(r: &RationalFunction) -> Self {
        let symbol = r.symbol();
        if r.is_zero() {
            return Factored {
                symbol,
                content: Rational::zero(),
                num_power: 0,
                num_rest: vec![BigInt::one()],
                den_factors: Vec::new(),
            };
        }
        let (cn, n) = r.numer().integer_primitive();
        let num_power = n.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let num_rest = n[num_power..].to_vec();
        let mut content = cn;
        let mut den_factors = Vec::new();
        // The denominator is monic; its factors are integer and monic too.
        for (f, k) in factor_denominator(r.denom()) {
            let (c, ints) = f.integer_primitive();
            content /= c.pow(k as i32);
            den_factors.push((ints, k));
        }
        Factored {
            symbol,
            content,
            num_power,
            num_rest,
            den_factors,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.content.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.content.is_negative()
    }

    /// Renders `|self|`, with optional extra factors folded into the
    /// numerator and denominator (used to absorb the expansion variable).
    fn render_abs(&self, style: Style, extra_num: &str, extra_den: &str) -> String {
        let sym = self.symbol;
        let a = self.content.abs();
        let mut num_parts: Vec<String> = Vec::new();
        if !a.numer().is_one() {
            num_parts.push(a.numer().to_string());
        }
        if !extra_num.is_empty() {
            num_parts.push(extra_num.to_string());
        }
        if self.num_power > 0 {
            num_parts.push(pow_str(sym_str(sym, style), self.num_power as i64, style));
        }
        if term_count(&self.num_rest) > 1 {
            let body = int_poly_str(&self.num_rest, sym, style, false);
            let alone = num_parts.is_empty() && style == Style::Latex;
            num_parts.push(if alone { body } else { format!("({body})") });
        }
        let mut den_parts: Vec<String> = Vec::new();
        if !a.denom().is_one() {
            den_parts.push(a.denom().to_string());
        }
        if !extra_den.is_empty() {
            den_parts.push(extra_den.to_string());
        }
        for (f, k) in &self.den_factors {
            let ascending = sym == Symbol::Gamma && f.len() == 2 && f[0].is_one();
            let body = int_poly_str(f, sym, style, ascending);
            let body = if term_count(f) > 1 { format!("({body})") } else { body };
            den_parts.push(pow_str(&body, *k as i64, style));
        }
        let num = if num_parts.is_empty() { "1".to_string() } else { join(&num_parts, style) };
        if den_parts.is_empty() {
            return num;
        }
        if style == Style::Latex && den_parts.len() == 1 && self.den_factors.len() == 1 && self.den_factors[0].1 == 1 {
            let d = &den_parts[0];
            if let Some(inner) = d.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
                den_parts[0] = inner.to_string();
            }
        }
        let den = join(&den_parts, style);
        match style {
            Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
            Style::Text => {
                let wrap = den_parts.len() > 1;
                if wrap {
                    format!("{num}/({den})")
                } else {
                    format!("{num}/{den}")
                }
            }
        }
    }

    pub fn render(&self, style: Style) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let body = self.render_abs(style, "", "");
        if self.is_negative() {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// Juxtaposes factors; integers next to integers get an explicit product.
fn join(parts: &[String], style: Style) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            let prev_digit = out.chars().last().is_some_and(|c| c.is_ascii_digit());
            let next_digit = p.chars().next().is_some_and(|c| c.is_ascii_digit());
            let prev_alpha = out.chars().last().is_some_and(|c| c.is_ascii_alphabetic());
            if prev_digit && next_digit {
                out.push_str(if style == Style::Latex { "\\cdot " } else { "*" });
            } else if prev_alpha && style == Style::Latex && p.starts_with(|c: char| c.is_ascii_alphabetic()) {
                out.push(' ');
            }
        }
        out.push_str(p);
    }
    out
}

/// `x^p` of the expansion variable, as (numerator, denominator) pieces.
fn variable_power(var: Variable, p: i64, style: Style) -> (String, String) {
    let (sym, inverse) = match var {
        Variable::InvM => (Symbol::M, true),
        Variable::Gamma => (Symbol::Gamma, false),
        Variable::InvGamma => (Symbol::Gamma, true),
    };
    let e = if inverse { -p } else { p };
    let base = sym_str(sym, style);
    match e.signum() {
        0 => (String::new(), String::new()),
        1 => (pow_str(base, e, style), String::new()),
        _ => (String::new(), pow_str(base, -e, style)),
    }
}

fn big_o(var: Variable, order: i64, style: Style) -> String {
    let (sym, inverse) = match var {
        Variable::InvM => (Symbol::M, true),
        Variable::Gamma => (Symbol::Gamma, false),
        Variable::InvGamma => (Symbol::Gamma, true),
    };
    let e = if inverse { -(order + 1) } else { order + 1 };
    let base = sym_str(sym, style);
    match (style, e) {
        (_, 0) => "O(1)".to_string(),
        (_, 1) => format!("O({base})"),
        (Style::Text, _) => format!("O({base}^{e})"),
        (Style::Latex, _) => format!("O({base}^{{{e}}})"),
    }
}

/// Renders a whole series in the factored style, e.g.
/// `1/(1+g) - g/(M^2(1+g)^5) + O(M^-3)`.
pub fn render_series(s: &TruncatedSeries, style: Style) -> String {
    let mut out = String::new();
    for (p, c) in s.terms() {
        let f = Factored::new(c);
        let (xn, xd) = variable_power(s.variable(), p, style);
        let body = f.render_abs(style, &xn, &xd);
        if out.is_empty() {
            if f.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if f.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    if let Some(order) = s.order() {
        out.push_str(" + ");
        out.push_str(&big_o(s.variable(), order, style));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn g(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(Symbol::Gamma, c)
    }

    fn m(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(Symbol::M, c)
    }

    #[test]
    fn factored_gamma() {
        let r = RationalFunction::new(&g(&[0, -1]) * &g(&[1, -12, 8]), g(&[1, 1]).pow(9)).unwrap();
        assert_eq!(Factored::new(&r).render(Style::Text), "-g(8g^2-12g+1)/(1+g)^9");
        assert_eq!(
            Factored::new(&r).render(Style::Latex),
            "-\\frac{\\gamma(8\\gamma^{2}-12\\gamma+1)}{(1+\\gamma)^{9}}"
        );
        let r = RationalFunction::new(g(&[2, 0, 1]), g(&[1, 1]).pow(6)).unwrap();
        assert_eq!(Factored::new(&r).render(Style::Text), "(g^2+2)/(1+g)^6");
    }

    #[test]
    fn factored_m() {
        let den = &(&m(&[-1, 0, 1]).pow(2) * &m(&[-4, 0, 1])) * &m(&[-9, 0, 1]);
        let num = &m(&[0, 0, -6]) * &m(&[-77, 0, 53]);
        let r = RationalFunction::new(num, den).unwrap();
        assert_eq!(
            Factored::new(&r).render(Style::Text),
            "-6M^2(53M^2-77)/((M^2-1)^2(M^2-4)(M^2-9))"
        );
        let r = RationalFunction::new(m(&[24]), &m(&[-1, 0, 1]) * &m(&[-4, 0, 1])).unwrap();
        assert_eq!(Factored::new(&r).render(Style::Text), "24/((M^2-1)(M^2-4))");
        let r = RationalFunction::new(m(&[1, 0, 23]).scale(&rat(1, 2)), m(&[0, 0, 0, 1])).unwrap();
        assert_eq!(Factored::new(&r).render(Style::Text), "(23M^2+1)/(2M^3)");
    }

    #[test]
    fn canonical() {
        let r = RationalFunction::new(g(&[2, 0, 1]), g(&[1, 1]).pow(2)).unwrap();
        assert_eq!(canonical_text(&r), "(g^2+2)/(g^2+2g+1)");
        let half = RationalFunction::constant(Symbol::M, rat(-1, 2));
        assert_eq!(canonical_text(&half), "-1/2");
        assert_eq!(integer_parts(&half), (vec![BigInt::from(-1)], vec![BigInt::from(2)]));
    }

    #[test]
    fn series_text() {
        let c = |n: &[i64], d: Polynomial| RationalFunction::new(g(n), d).unwrap();
        let s = TruncatedSeries::new(
            Variable::InvM,
            [(0, c(&[1], g(&[1, 1]))), (2, c(&[0, -1], g(&[1, 1]).pow(5)))],
            Some(3),
        );
        assert_eq!(render_series(&s, Style::Text), "1/(1+g) - g/(M^2(1+g)^5) + O(M^-4)");
        let s = TruncatedSeries::new(
            Variable::InvGamma,
            [
                (1, RationalFunction::one(Symbol::M)),
                (4, RationalFunction::new(m(&[-1, 0, -1]), m(&[0, 0, 1])).unwrap()),
            ],
            Some(4),
        );
        assert_eq!(render_series(&s, Style::Text), "1/g - (M^2+1)/(g^4M^2) + O(g^-5)");
    }

    #[test]
    fn latex_commands_do_not_run_into_symbols() {
        let c = RationalFunction::new(m(&[0, 0, 0, 0, -6]), &m(&[-1, 0, 1]) * &m(&[-4, 0, 1])).unwrap();
        let s = TruncatedSeries::new(Variable::Gamma, vec![(1, c)], Some(1));
        assert_eq!(render_series(&s, Style::Latex), "-\\frac{6\\gamma M^{4}}{(M^{2}-1)(M^{2}-4)} + O(\\gamma^{2})");
    }
}
