//! Acceptance gate: one line per criterion, non-zero exit if any fails.

mod support;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use tdelay_core::algebra::{rat, Polynomial, Rational, RationalFunction, Symbol};
use tdelay_core::combinatorics::{enumerate_partitions, factorial, subpartitions};
use tdelay_core::engine::binomial_det_b;
use tdelay_core::statistics::{
    compute, cumulants_from_moments, evaluate_with_error, moments_from_cumulants, validate_conjectures,
    wigner_moments, Statistic,
};
use tdelay_core::verify::{run_scope, Scope, Severity};
use tdelay_core::{Engine, Partition, StatisticRequest, Tables, Variable};

struct Verdict {
    passed: bool,
    summary: String,
    notes: Vec<String>,
}

impl Verdict {
    fn new(passed: bool, summary: impl Into<String>) -> Self {
        Verdict {
            passed,
            summary: summary.into(),
            notes: Vec::new(),
        }
    }
}

fn within(elapsed: Duration, limit_s: u64) -> bool {
    elapsed <= Duration::from_secs(limit_s)
}

/// `[M]^μ = Π_i (M+μ_i−i)!/(M−i)!`, expanded row by row.
fn rising_oracle(mu: &Partition) -> Polynomial {
    let mut acc = Polynomial::one(Symbol::M);
    for (i, &p) in mu.parts().iter().enumerate() {
        let i = i as i64 + 1;
        for j in 1..=p as i64 {
            acc = &acc * &Polynomial::linear(Symbol::M, j - i, 1);
        }
    }
    acc
}

/// `s_μ(1_M) = d_μ [M]^μ / |μ|!`.
fn identity_value(mu: &Partition) -> Polynomial {
    rising_oracle(mu).scale(&(Rational::from_integer(mu.dimension()) / Rational::from_integer(factorial(mu.weight()))))
}

fn criterion_1(engine: &Engine) -> Verdict {
    let mut hard = 0;
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let mut slowest = Duration::ZERO;
    for scope in [Scope::Intro, Scope::Section3, Scope::Section4, Scope::Section5] {
        let t = Instant::now();
        let outcomes = match run_scope(engine, scope, 0) {
            Ok(o) => o,
            Err(e) => return Verdict::new(false, format!("{scope}: {e}")),
        };
        slowest = slowest.max(t.elapsed());
        for o in outcomes {
            match o.severity {
                Severity::Hard => {
                    hard += 1;
                    if !o.passed {
                        failures.push(o.to_string());
                    }
                }
                Severity::Soft => notes.push(o.to_string()),
            }
        }
    }
    let time_ok = within(slowest, 60);
    let mut v = Verdict::new(
        failures.is_empty() && time_ok,
        format!(
            "printed-series reproduction: {} of {hard} hard checks pass, slowest scope {:.2?}; {} printed defects reported below",
            hard - failures.len(),
            slowest,
            notes.len()
        ),
    );
    v.notes = failures.into_iter().chain(notes).collect();
    v
}

fn criterion_2(engine: &Engine) -> Verdict {
    let mut problems = Vec::new();
    let g = Symbol::Gamma;
    let mean = compute(engine, &StatisticRequest::new(Statistic::WignerMoment { n: 1 }, Variable::InvM, 1)).unwrap();
    let limit = RationalFunction::new(Polynomial::one(g), Polynomial::linear(g, 1, 1)).unwrap();
    if mean.coeff(0).unwrap() != limit || mean.min_power() != Some(0) {
        problems.push("mean leading coefficient is not 1/(1+g)".to_string());
    }

    let var = compute(engine, &StatisticRequest::new(Statistic::Variance, Variable::InvM, 2)).unwrap();
    let c2 = var.coeff(2).unwrap();
    if var.min_power() != Some(2) {
        problems.push("variance does not start at M^-2".into());
    }
    let small = c2.expand_at_zero(1);
    if small.get(&0) != Some(&rat(2, 1)) || small.get(&1) != Some(&rat(-12, 1)) {
        problems.push(format!("small-g variance is not (2-12g)/M^2: {small:?}"));
    }
    let large = c2.expand_at_infinity(4);
    if large.len() != 1 || large.get(&4) != Some(&rat(1, 1)) {
        problems.push(format!("large-g variance is not 1/(M^2 g^4): {large:?}"));
    }

    let mut checked = 0;
    for n in 0..=5 {
        for mu in enumerate_partitions(n, false) {
            let s = engine.schur_moment_r(&mu, Variable::Gamma, 0);
            let want = RationalFunction::from_poly(identity_value(&mu));
            if s.coeff(0).unwrap() != want {
                problems.push(format!("g^0 coefficient of <s_({mu})(R)> is not d[M]^mu/|mu|!"));
            }
            checked += 1;
        }
    }
    let passed = problems.is_empty();
    let mut v = Verdict::new(
        passed,
        format!("limit checks: large-M mean 1/(1+g), var(2-12g)/M^2 and 1/(M^2 g^4), g^0 of {checked} Schur-moments"),
    );
    v.notes = problems;
    v
}

fn criterion_3() -> Verdict {
    let tables = Tables::new();
    let mut problems = Vec::new();

    let t = Instant::now();
    for n in 0..=5usize {
        let perms = support::permutations(n);
        let shapes = enumerate_partitions(n, false);
        for beta in &shapes {
            let count = perms.iter().filter(|p| support::cycle_type(p) == *beta).count();
            if BigInt::from(count) != beta.class_size() {
                problems.push(format!("class size of ({beta})"));
            }
            for lam in &shapes {
                if tables.character(lam, beta).unwrap() != support::frobenius_character(lam, beta) {
                    problems.push(format!("chi_({lam})(({beta}))"));
                }
            }
        }
        for lam in &shapes {
            let norm: i64 = perms
                .iter()
                .map(|p| support::frobenius_character(lam, &support::cycle_type(p)).pow(2))
                .sum();
            if BigInt::from(norm) != factorial(n) {
                problems.push(format!("brute-force class sum for ({lam})"));
            }
        }
    }
    let char_time = t.elapsed();

    let t = Instant::now();
    let mut pairs = 0;
    for total in 0..=8 {
        for a in 0..=total {
            for mu in enumerate_partitions(a, false) {
                for rho in enumerate_partitions(total - a, false) {
                    let oracle = support::lr_by_multiplication(&mu, &rho);
                    for nu in enumerate_partitions(total, false) {
                        let want = oracle.get(&nu).copied().unwrap_or(0);
                        if tables.lr_coefficient(&mu, &rho, &nu) as i64 != want {
                            problems.push(format!("c^({nu})_(({mu}),({rho}))"));
                        }
                    }
                    pairs += 1;
                }
            }
        }
    }
    let lr_time = t.elapsed();
    let passed = problems.is_empty() && within(char_time, 10) && within(lr_time, 60);
    let mut v = Verdict::new(
        passed,
        format!(
            "oracle equivalence: characters n<=5 vs Frobenius formula and S_n class sums ({char_time:.2?}); LR for {pairs} pairs with |mu|+|rho|<=8 vs Schur-polynomial products ({lr_time:.2?})"
        ),
    );
    v.notes = problems;
    v
}

fn criterion_4(engine: &Engine) -> Verdict {
    let tables = engine.tables();
    let mut problems = Vec::new();
    for m in 0..=7 {
        let shapes = enumerate_partitions(m, false);
        for a in &shapes {
            for b in &shapes {
                let s: BigInt = shapes
                    .iter()
                    .map(|beta| beta.class_size() * tables.character(a, beta).unwrap() * tables.character(b, beta).unwrap())
                    .sum();
                let want = if a == b { factorial(m) } else { BigInt::zero() };
                if s != want {
                    problems.push(format!("row orthogonality ({a}), ({b})"));
                }
                let col: BigInt = shapes
                    .iter()
                    .map(|lam| BigInt::from(tables.character(lam, a).unwrap() * tables.character(lam, b).unwrap()))
                    .sum();
                let want = if a == b { a.centralizer_order() } else { BigInt::zero() };
                if col != want {
                    problems.push(format!("column orthogonality ({a}), ({b})"));
                }
            }
        }
    }

    let mut lambdas = 0;
    for n in 1..=5 {
        for lam in enumerate_partitions(n, false) {
            let mut acc = Polynomial::zero(Symbol::M);
            for mu in subpartitions(&lam) {
                let sign = if mu.weight() % 2 == 0 { 1 } else { -1 };
                let term = &binomial_det_b(&lam, &mu).unwrap() * &identity_value(&mu);
                acc = &acc + &term.scale(&rat(sign, 1));
            }
            if !acc.is_zero() {
                problems.push(format!("binomial transform of ({lam}) at R = 1"));
            }
            lambdas += 1;
        }
    }

    for (regime, order) in [(Variable::InvM, 4), (Variable::Gamma, 3), (Variable::InvGamma, 9)] {
        let m = wigner_moments(engine, 4, regime, order).unwrap();
        let k = cumulants_from_moments(&m).unwrap();
        let back = moments_from_cumulants(&k, regime).unwrap();
        for (j, (a, b)) in m.iter().zip(&back).enumerate() {
            if a.truncate(order) != b.truncate(order) {
                problems.push(format!("moment-cumulant round trip n={j} in {regime}"));
            }
        }
    }
    let mut v = Verdict::new(
        problems.is_empty(),
        format!("identities: orthogonality m<=7, binomial-transform vanishing for {lambdas} partitions, moment-cumulant round trip n<=4 in 3 regimes"),
    );
    v.notes = problems;
    v
}

fn criterion_5(engine: &Engine) -> Verdict {
    let ten = rat(10, 1);
    let mut problems = Vec::new();
    let mut notes = Vec::new();
    let cases = [
        ((rat(20, 1), rat(2, 1)), Variable::InvGamma, 10),
        ((rat(20, 1), rat(1, 10)), Variable::Gamma, 6),
    ];
    for stat in [Statistic::WignerMoment { n: 1 }, Statistic::Variance] {
        for ((m, g), other, other_order) in &cases {
            let mut diffs = Vec::new();
            for bump in [0, 2] {
                let a = evaluate_with_error(engine, &StatisticRequest::new(stat.clone(), Variable::InvM, 6 + bump), m, g);
                let b = evaluate_with_error(engine, &StatisticRequest::new(stat.clone(), *other, other_order + bump), m, g);
                let (a, b) = match (a, b) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => {
                        problems.push(format!("{stat} at M={m}, g={g}: {e}"));
                        continue;
                    }
                };
                let diff = (&a.value - &b.value).abs();
                let bound = &ten * (&a.first_omitted + &b.first_omitted);
                notes.push(format!(
                    "{stat} at M={m}, g={g}: inv_M({}) vs {other}({}) diff {:.3e}, bound {:.3e}",
                    a.order,
                    b.order,
                    diff.to_f64().unwrap_or(f64::NAN),
                    bound.to_f64().unwrap_or(f64::NAN)
                ));
                if diff > bound {
                    problems.push(format!("{stat} at M={m}, g={g}, orders {}/{}: difference exceeds bound", a.order, b.order));
                }
                diffs.push(diff);
            }
            if diffs.len() == 2 && diffs[1] >= diffs[0] {
                problems.push(format!("{stat} at M={m}, g={g}: difference does not decrease with order"));
            }
        }
    }
    let mut v = Verdict::new(
        problems.is_empty(),
        "cross-regime numeric consistency: mean and variance at (20, 2) and (20, 1/10)",
    );
    v.notes = problems.into_iter().chain(notes).collect();
    v
}

fn criterion_6(engine: &Engine) -> Verdict {
    let report = validate_conjectures(engine, 4).unwrap();
    let failed: Vec<String> = report.items.iter().filter(|i| !i.passed()).map(|i| i.to_string()).collect();
    let mut v = Verdict::new(
        failed.is_empty(),
        format!(
            "conjecture report: {} of {} instances of (a)-(e) hold for n<=4",
            report.items.len() - failed.len(),
            report.items.len()
        ),
    );
    v.notes = failed;
    v
}

fn main() {
    let engine = Engine::new();
    let criteria: [(u32, Box<dyn Fn() -> Verdict>); 6] = [
        (1, Box::new(|| criterion_1(&engine))),
        (2, Box::new(|| criterion_2(&engine))),
        (3, Box::new(criterion_3)),
        (4, Box::new(|| criterion_4(&engine))),
        (5, Box::new(|| criterion_5(&engine))),
        (6, Box::new(|| criterion_6(&engine))),
    ];
    let mut all = true;
    for (id, run) in criteria.iter() {
        let t = Instant::now();
        let v = run();
        all &= v.passed;
        let verdict = if v.passed { "PASS" } else { "FAIL" };
        println!("criterion {id}: {verdict} {} [{:.2?}]", v.summary, t.elapsed());
        for note in &v.notes {
            println!("    {note}");
        }
    }
    if !all {
        std::process::exit(1);
    }
}
