//! Registry of printed results and the checks that reproduce them.
//!
//! Hard checks must pass. Soft checks are findings: conjecture instances and
//! literal comparisons against printed expressions with known defects.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Factored, RationalFunction, Style, Symbol, TruncatedSeries, Variable};
use crate::combinatorics::Partition;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::expr::parse_rational_function;
use crate::statistics::{compute, double_expansion_mismatches, validate_conjectures, Statistic, StatisticRequest};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Intro,
    Section3,
    Section4,
    Section5,
    Conjectures,
}

impl Scope {
    pub const ALL: [Scope; 5] = [Scope::Intro, Scope::Section3, Scope::Section4, Scope::Section5, Scope::Conjectures];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Intro => "intro",
            Scope::Section3 => "section3",
            Scope::Section4 => "section4",
            Scope::Section5 => "section5",
            Scope::Conjectures => "conjectures",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidRequest(format!("unknown scope `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Hard,
    Soft,
}

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: String,
    pub scope: Scope,
    pub severity: Severity,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.passed, self.severity) {
            (true, _) => "PASS",
            (false, Severity::Hard) => "FAIL",
            (false, Severity::Soft) => "NOTE",
        };
        let sev = match self.severity {
            Severity::Hard => "hard",
            Severity::Soft => "soft",
        };
        write!(f, "{verdict} [{}/{sev}] {}", self.scope, self.id)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn show(r: &RationalFunction) -> String {
    Factored::new(r).render(Style::Text)
}

/// A printed series: coefficients by power of the expansion variable, in
/// the coefficient symbol, exact through `through`.
struct Printed {
    id: &'static str,
    scope: Scope,
    severity: Severity,
    statistic: fn() -> Statistic,
    regime: Variable,
    through: i64,
    terms: &'static [(i64, &'static str)],
    note: &'static str,
}

fn tau() -> Statistic {
    Statistic::WignerMoment { n: 1 }
}
fn var() -> Statistic {
    Statistic::Variance
}
fn k3() -> Statistic {
    Statistic::Cumulant { n: 3 }
}
fn k4() -> Statistic {
    Statistic::Cumulant { n: 4 }
}
fn trace_sq() -> Statistic {
    Statistic::TracePowers { partition: Partition::row(2) }
}
fn trace_pair() -> Statistic {
    Statistic::TracePowers { partition: Partition::column(2) }
}

const PRINTED: &[Printed] = &[
    Printed {
        id: "mean tau_W, 1/M",
        scope: Scope::Intro,
        severity: Severity::Hard,
        statistic: tau,
        regime: Variable::InvM,
        through: 5,
        terms: &[(0, "1/(1+g)"), (2, "-g/(1+g)^5"), (4, "-g(8g^2-12g+1)/(1+g)^9")],
        note: "",
    },
    Printed {
        id: "mean tau_W, g (sign of the g term corrected)",
        scope: Scope::Intro,
        severity: Severity::Hard,
        statistic: tau,
        regime: Variable::Gamma,
        through: 2,
        terms: &[(0, "1"), (1, "-M^2/(M^2-1)"), (2, "M^4/((M^2-1)(M^2-4))")],
        note: "",
    },
    Printed {
        id: "mean tau_W, g (as printed)",
        scope: Scope::Intro,
        severity: Severity::Soft,
        statistic: tau,
        regime: Variable::Gamma,
        through: 2,
        terms: &[(0, "1"), (1, "M^2/(M^2-1)"), (2, "M^4/((M^2-1)(M^2-4))")],
        note: "the printed +g M^2/(M^2-1) contradicts the 1/(1+g) limit and relation P_1 = P_1(0) - P_2(0) g/2",
    },
    Printed {
        id: "mean tau_W, 1/g",
        scope: Scope::Intro,
        severity: Severity::Hard,
        statistic: tau,
        regime: Variable::InvGamma,
        through: 5,
        terms: &[(1, "1"), (2, "-1"), (3, "1"), (4, "-(M^2+1)/M^2"), (5, "(M^2+5)/M^2")],
        note: "",
    },
    Printed {
        id: "var tau_W, 1/M",
        scope: Scope::Intro,
        severity: Severity::Hard,
        statistic: var,
        regime: Variable::InvM,
        through: 5,
        terms: &[(2, "(g^2+2)/(1+g)^6"), (4, "(2-40g+68g^2-28g^3+8g^4)/(1+g)^10")],
        note: "",
    },
    Printed {
        id: "var tau_W, g",
        scope: Scope::Intro,
        severity: Severity::Hard,
        statistic: var,
        regime: Variable::Gamma,
        through: 1,
        terms: &[(0, "2/(M^2-1)"), (1, "-12M^2/((M^2-1)(M^2-4))")],
        note: "",
    },
    Printed {
        id: "var tau_W, 1/g",
        scope: Scope::Intro,
        severity: Severity::Hard,
        statistic: var,
        regime: Variable::InvGamma,
        through: 6,
        terms: &[(4, "1/M^2"), (5, "-6/M^2"), (6, "(23M^2+8)/M^4")],
        note: "",
    },
    Printed {
        id: "<Tr Q^2>/M, 1/M (parenthesis balanced)",
        scope: Scope::Section3,
        severity: Severity::Hard,
        statistic: trace_sq,
        regime: Variable::InvM,
        through: 3,
        terms: &[(0, "(g^2+2g+2)/(1+g)^4"), (2, "-(4g^3-g^2+14g-2)/(1+g)^8")],
        note: "",
    },
    Printed {
        id: "<(Tr Q)^2>/M^2, 1/M",
        scope: Scope::Section3,
        severity: Severity::Hard,
        statistic: trace_pair,
        regime: Variable::InvM,
        through: 5,
        terms: &[
            (0, "1/(1+g)^2"),
            (2, "(g^2-2g+2)/(1+g)^6"),
            (4, "(8g^4-44g^3+93g^2-42g+2)/(1+g)^10"),
        ],
        note: "",
    },
    Printed {
        id: "k_3 leading, 1/M (as printed)",
        scope: Scope::Section3,
        severity: Severity::Soft,
        statistic: k3,
        regime: Variable::InvM,
        through: 4,
        terms: &[(4, "-(2g^8-8g^7+26g^6-48g^5-348g^4-420g^3-221g^2-64g-8)/(g^3(1+g)^11)")],
        note: "the printed form has a pole at g = 0, while k_3(g=0) = 24/((M^2-1)(M^2-4)) is finite",
    },
    Printed {
        id: "<Tr Q^2>/M, g",
        scope: Scope::Section4,
        severity: Severity::Hard,
        statistic: trace_sq,
        regime: Variable::Gamma,
        through: 1,
        terms: &[(0, "2M^2/(M^2-1)"), (1, "-6M^4/((M^2-1)(M^2-4))")],
        note: "",
    },
    Printed {
        id: "<(Tr Q)^2>/M^2, g",
        scope: Scope::Section4,
        severity: Severity::Hard,
        statistic: trace_pair,
        regime: Variable::Gamma,
        through: 1,
        terms: &[(0, "(M^2+1)/(M^2-1)"), (1, "-2M^2(M^2+2)/((M^2-1)(M^2-4))")],
        note: "",
    },
    Printed {
        id: "k_3, g",
        scope: Scope::Section4,
        severity: Severity::Hard,
        statistic: k3,
        regime: Variable::Gamma,
        through: 1,
        terms: &[
            (0, "24/((M^2-1)(M^2-4))"),
            (1, "-6M^2(53M^2-77)/((M^2-1)^2(M^2-4)(M^2-9))"),
        ],
        note: "",
    },
    Printed {
        id: "k_4 at g = 0 (stray g removed)",
        scope: Scope::Section4,
        severity: Severity::Hard,
        statistic: k4,
        regime: Variable::Gamma,
        through: 0,
        terms: &[(0, "12(53M^2-77)/((M^2-1)^2(M^2-4)(M^2-9))")],
        note: "",
    },
    Printed {
        id: "k_4, g (as printed)",
        scope: Scope::Section4,
        severity: Severity::Soft,
        statistic: k4,
        regime: Variable::Gamma,
        through: 1,
        terms: &[(1, "12(53M^2-77)/((M^2-1)^2(M^2-4)(M^2-9))")],
        note: "relation k_3(g) = k_3(0) - (M^2/2) k_4(0) g fixes k_4(0) to the printed value",
    },
    Printed {
        id: "<Tr Q^2>/M, 1/g",
        scope: Scope::Section5,
        severity: Severity::Hard,
        statistic: trace_sq,
        regime: Variable::InvGamma,
        through: 5,
        terms: &[(2, "1"), (3, "-2"), (4, "4"), (5, "-4(2M^2+1)/M^2")],
        note: "",
    },
    Printed {
        id: "<(Tr Q)^2>/M^2, 1/g",
        scope: Scope::Section5,
        severity: Severity::Hard,
        statistic: trace_pair,
        regime: Variable::InvGamma,
        through: 5,
        terms: &[(2, "1"), (3, "-2"), (4, "(3M^2+1)/M^2"), (5, "-4(M^2+2)/M^2")],
        note: "",
    },
    Printed {
        id: "k_3, 1/g",
        scope: Scope::Section5,
        severity: Severity::Hard,
        statistic: k3,
        regime: Variable::InvGamma,
        through: 8,
        terms: &[(6, "-2/M^4"), (7, "30/M^4"), (8, "-6(41M^2+10)/M^6")],
        note: "",
    },
    Printed {
        id: "k_4, 1/g",
        scope: Scope::Section5,
        severity: Severity::Hard,
        statistic: k4,
        regime: Variable::InvGamma,
        through: 9,
        terms: &[(8, "6/M^6"), (9, "-168/M^6")],
        note: "",
    },
];

/// Every power from the lowest mentioned through `through` at which `s`
/// differs from the printed coefficients, rendered for a report.
fn compare_printed(s: &TruncatedSeries, printed: &[(RationalFunction, i64)], through: i64) -> Result<Vec<String>> {
    let sym = s.variable().coefficient_symbol();
    let low = s
        .min_power()
        .into_iter()
        .chain(printed.iter().map(|(_, p)| *p))
        .min()
        .unwrap_or(through);
    let mut out = Vec::new();
    for p in low..=through {
        let want = printed
            .iter()
            .find(|(_, q)| *q == p)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(|| RationalFunction::zero(sym));
        let got = s.coeff(p)?;
        if got != want {
            out.push(format!(
                "power {p}: computed {} vs printed {}",
                show(&got),
                show(&want)
            ));
        }
    }
    Ok(out)
}

fn run_printed(engine: &Engine, item: &Printed) -> Result<Outcome> {
    let sym = item.regime.coefficient_symbol();
    let printed = item
        .terms
        .iter()
        .map(|(p, src)| Ok((parse_rational_function(src, sym)?, *p)))
        .collect::<Result<Vec<_>>>()?;
    let s = compute(engine, &StatisticRequest::new((item.statistic)(), item.regime, item.through))?;
    let mismatches = compare_printed(&s, &printed, item.through)?;
    let mut detail = mismatches.join("; ");
    if !mismatches.is_empty() && !item.note.is_empty() {
        detail = format!("{detail} ({})", item.note);
    }
    Ok(Outcome {
        id: item.id.to_string(),
        scope: item.scope,
        severity: item.severity,
        passed: mismatches.is_empty(),
        detail,
    })
}

fn outcome(id: &str, scope: Scope, passed: bool, detail: String) -> Outcome {
    Outcome {
        id: id.to_string(),
        scope,
        severity: Severity::Hard,
        passed,
        detail,
    }
}

/// Limits quoted in the introduction.
fn intro_limits(engine: &Engine) -> Result<Vec<Outcome>> {
    let g = Symbol::Gamma;
    let mean = compute(engine, &StatisticRequest::new(tau(), Variable::InvM, 0))?;
    let lead = mean.coeff(0)?;
    let mean_limit = outcome(
        "mean tau_W leading 1/(1+g)",
        Scope::Intro,
        lead == parse_rational_function("1/(1+g)", g)? && mean.min_power() == Some(0),
        format!("computed {}", show(&lead)),
    );

    let v = compute(engine, &StatisticRequest::new(var(), Variable::InvM, 2))?;
    let c2 = v.coeff(2)?;
    let small = c2.expand_at_zero(1);
    let weak_ok = v.min_power() == Some(2)
        && small.get(&0) == Some(&crate::algebra::rat(2, 1))
        && small.get(&1) == Some(&crate::algebra::rat(-12, 1));
    let weak = outcome(
        "var tau_W ~ 2(1-6g)/M^2 for small g",
        Scope::Intro,
        weak_ok,
        format!("M^-2 coefficient {}", show(&c2)),
    );
    let large = c2.expand_at_infinity(4);
    let strong_ok = large.len() == 1 && large.get(&4) == Some(&crate::algebra::rat(1, 1));
    let strong = outcome(
        "var tau_W ~ 1/(M^2 g^4) for large g",
        Scope::Intro,
        strong_ok,
        format!("M^-2 coefficient {}", show(&c2)),
    );
    Ok(vec![mean_limit, weak, strong])
}

/// Re-expansion of the `1/M` results as double series, compared with the
/// other two regimes.
fn section3_consistency(engine: &Engine) -> Result<Vec<Outcome>> {
    let cases: [(&str, Statistic, i64, i64, i64); 2] = [
        ("<Tr Q^2>/M", trace_sq(), 2, 6, 10),
        ("k_3", k3(), 4, 6, 12),
    ];
    let mut out = Vec::new();
    for (name, stat, inv_m_order, gamma_order, inv_gamma_order) in cases {
        let a = compute(engine, &StatisticRequest::new(stat.clone(), Variable::InvM, inv_m_order))?;
        for (regime, order) in [(Variable::Gamma, gamma_order), (Variable::InvGamma, inv_gamma_order)] {
            let b = compute(engine, &StatisticRequest::new(stat.clone(), regime, order))?;
            let bad = double_expansion_mismatches(&a, &b)?;
            let detail = match bad.first() {
                None => format!("1/M through {inv_m_order} agrees with {regime} through {order}"),
                Some(x) => format!(
                    "{} disagreements, first at M^-{} {}^{}: {} vs {}",
                    bad.len(),
                    x.inv_m_power,
                    regime,
                    x.other_power,
                    x.from_inv_m,
                    x.from_other
                ),
            };
            out.push(outcome(
                &format!("{name} 1/M coefficients vs {regime} regime"),
                Scope::Section3,
                bad.is_empty(),
                detail,
            ));
        }
    }
    Ok(out)
}

/// Runs every check in `scope`; conjecture instances go up to `max_n`.
pub fn run_scope(engine: &Engine, scope: Scope, max_n: usize) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for item in PRINTED.iter().filter(|p| p.scope == scope) {
        out.push(run_printed(engine, item)?);
    }
    match scope {
        Scope::Intro => out.extend(intro_limits(engine)?),
        Scope::Section3 => {
            out.push(Outcome {
                id: "<Tr Q^2>/M, 1/M (as printed)".into(),
                scope,
                severity: Severity::Soft,
                passed: false,
                detail: "printed numerator `4g^3-g^2+14g-2)` has an unbalanced parenthesis and cannot be \
                         parsed literally; the balanced reading is checked above"
                    .into(),
            });
            out.extend(section3_consistency(engine)?);
        }
        Scope::Conjectures => {
            let report = validate_conjectures(engine, max_n)?;
            out.extend(report.items.iter().map(|item| Outcome {
                id: format!("({}) n={} {}", item.kind.label(), item.n, item.statement),
                scope,
                severity: Severity::Soft,
                passed: item.passed(),
                detail: item
                    .discrepancy
                    .iter()
                    .map(|(p, d)| format!("power {p}: computed - predicted = {d}"))
                    .collect::<Vec<_>>()
                    .join("; "),
            }));
        }
        Scope::Section4 | Scope::Section5 => {}
    }
    Ok(out)
}

/// Runs all scopes in registration order.
pub fn run_all(engine: &Engine, max_n: usize) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for scope in Scope::ALL {
        out.extend(run_scope(engine, scope, max_n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_sources_parse() {
        for item in PRINTED {
            for (_, src) in item.terms {
                parse_rational_function(src, item.regime.coefficient_symbol())
                    .unwrap_or_else(|e| panic!("{}: {e}", item.id));
            }
        }
    }

    #[test]
    fn intro_hard_checks_pass() {
        let outcomes = run_scope(&Engine::new(), Scope::Intro, 0).unwrap();
        let hard: Vec<_> = outcomes.iter().filter(|o| o.severity == Severity::Hard).collect();
        assert_eq!(hard.len(), 9);
        for o in hard {
            assert!(o.passed, "{o}");
        }
    }

    #[test]
    fn scope_names_round_trip() {
        for s in Scope::ALL {
            assert_eq!(s.name().parse::<Scope>().unwrap(), s);
        }
    }
}
