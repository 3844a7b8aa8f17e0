use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use tdelay_core::algebra::{render_series as render, Style};
use tdelay_core::statistics::compute;
use tdelay_core::verify::{run_scope, Scope, Severity};
use tdelay_core::{Engine, Partition, Statistic, StatisticRequest, Variable};

/// Largest order the page will ask for; keeps a click under a few seconds.
pub const MAX_ORDER: i64 = 12;

pub fn parse_statistic(kind: &str, arg: &str) -> Result<Statistic, String> {
    let partition = || arg.parse::<Partition>().map_err(|e| e.to_string());
    let n = || arg.trim().parse::<usize>().map_err(|_| format!("`{arg}` is not a positive integer"));
    Ok(match kind {
        "schur" => Statistic::SchurQ { partition: partition()? },
        "schur-r" => Statistic::SchurR { partition: partition()? },
        "power-sum" => Statistic::PowerSum { partition: partition()? },
        "trace-powers" => Statistic::TracePowers { partition: partition()? },
        "wigner-moment" => Statistic::WignerMoment { n: n()? },
        "cumulant" => Statistic::Cumulant { n: n()? },
        "variance" => Statistic::Variance,
        _ => return Err(format!("unknown statistic `{kind}`")),
    })
}

fn check_order(order: i64) -> Result<(), String> {
    if order > MAX_ORDER {
        return Err(format!("order {order} is above the demo limit {MAX_ORDER}"));
    }
    Ok(())
}

pub fn render_series(kind: &str, arg: &str, regime: &str, order: i64, style: &str) -> Result<String, String> {
    let stat = parse_statistic(kind, arg)?;
    let regime: Variable = regime.parse().map_err(|e: tdelay_core::Error| e.to_string())?;
    check_order(order)?;
    let style = match style {
        "latex" => Style::Latex,
        _ => Style::Text,
    };
    let s = compute(&Engine::new(), &StatisticRequest::new(stat, regime, order)).map_err(|e| e.to_string())?;
    Ok(render(&s, style))
}

/// Orders used for every curve.
const CURVE_ORDERS: [(Variable, i64); 3] = [(Variable::InvM, 4), (Variable::Gamma, 4), (Variable::InvGamma, 8)];

/// Evaluates the statistic in every regime on the grid `γ = k·γ_max/steps`,
/// `k = 1..=steps`, at fixed integer `M`. `γ_max` is rounded to 1/1000.
pub fn evaluate_curve(kind: &str, arg: &str, m: u32, gamma_max: f64, steps: u32) -> Result<String, String> {
    let stat = parse_statistic(kind, arg)?;
    if !(gamma_max > 0.0 && gamma_max <= 100.0) {
        return Err("gamma_max must lie in (0, 100]".into());
    }
    if steps == 0 || steps > 400 {
        return Err("steps must lie in 1..=400".into());
    }
    let top = BigRational::new(((gamma_max * 1000.0).round() as i64).max(1).into(), 1000.into());
    let grid: Vec<BigRational> = (1..=steps)
        .map(|k| &top * BigRational::new(k.into(), steps.into()))
        .collect();
    let m = BigRational::from_integer(m.into());
    let engine = Engine::new();
    let mut series = Vec::new();
    for (regime, order) in CURVE_ORDERS {
        let s = compute(&engine, &StatisticRequest::new(stat.clone(), regime, order)).map_err(|e| e.to_string())?;
        let values: Vec<Value> = grid
            .iter()
            .map(|g| match s.evaluate(&m, g).ok().and_then(|v| v.to_f64()) {
                Some(v) if v.is_finite() => json!(v),
                _ => Value::Null,
            })
            .collect();
        series.push(json!({ "regime": regime.name(), "order": order, "values": values }));
    }
    let gammas: Vec<f64> = grid.iter().map(|g| g.to_f64().unwrap_or(f64::NAN)).collect();
    Ok(json!({ "statistic": stat.to_string(), "gamma": gammas, "series": series }).to_string())
}

pub fn verify_summary(scope: &str) -> Result<String, String> {
    let scopes: Vec<Scope> = if scope == "all" {
        Scope::ALL.to_vec()
    } else {
        vec![scope.parse().map_err(|e: tdelay_core::Error| e.to_string())?]
    };
    let engine = Engine::new();
    let mut lines = Vec::new();
    let (mut hard, mut hard_ok, mut notes) = (0, 0, 0);
    for s in scopes {
        for o in run_scope(&engine, s, 3).map_err(|e| e.to_string())? {
            match (o.severity, o.passed) {
                (Severity::Hard, ok) => {
                    hard += 1;
                    hard_ok += usize::from(ok);
                }
                (Severity::Soft, false) => notes += 1,
                _ => {}
            }
            lines.push(o.to_string());
        }
    }
    lines.push(format!("hard: {hard_ok} of {hard} passed; {notes} soft notes"));
    Ok(lines.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_mean() {
        let s = render_series("wigner-moment", "1", "inv-m", 2, "text").unwrap();
        assert_eq!(s, "1/(1+g) - g/(M^2(1+g)^5) + O(M^-3)");
        let l = render_series("variance", "", "gamma", 0, "latex").unwrap();
        assert_eq!(l, "\\frac{2}{M^{2}-1} + O(\\gamma)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(render_series("wigner-moment", "x", "inv-m", 2, "text").is_err());
        assert!(render_series("mystery", "1", "inv-m", 2, "text").is_err());
        assert!(render_series("variance", "", "delta", 2, "text").is_err());
        assert!(render_series("variance", "", "gamma", 99, "text").is_err());
        assert!(evaluate_curve("variance", "", 10, -1.0, 10).is_err());
    }

    #[test]
    fn curve_regimes_meet_at_moderate_gamma() {
        let out = evaluate_curve("wigner-moment", "1", 20, 2.0, 10).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["gamma"].as_array().unwrap().len(), 10);
        let at = |i: usize, k: usize| v["series"][i]["values"][k].as_f64().unwrap();
        // γ = 1/5: 1/M against γ; γ = 2: 1/M against 1/γ.
        assert!((at(0, 0) - at(1, 0)).abs() < 1e-2);
        assert!((at(0, 9) - at(2, 9)).abs() < 1e-2);
    }

    #[test]
    fn pole_gives_null() {
        let out = evaluate_curve("variance", "", 2, 1.0, 2).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["series"][1]["values"][0].is_null());
    }

    #[test]
    fn intro_summary() {
        let s = verify_summary("intro").unwrap();
        assert!(s.ends_with("hard: 9 of 9 passed; 1 soft notes"), "{s}");
    }
}
