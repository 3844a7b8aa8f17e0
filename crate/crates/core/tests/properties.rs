use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use tdelay_core::algebra::{canonical_text, rat, Polynomial, Rational, RationalFunction, Symbol, TruncatedSeries, Variable};
use tdelay_core::combinatorics::enumerate_partitions;
use tdelay_core::expr::parse_rational_function;
use tdelay_core::{Partition, Tables};

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|n| {
        let all = enumerate_partitions(n, false);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn poly(sym: Symbol, max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(move |c| Polynomial::from_ints(sym, &c))
}

fn ratfunc(sym: Symbol) -> impl Strategy<Value = RationalFunction> {
    (poly(sym, 3), poly(sym, 3)).prop_filter_map("zero denominator", move |(n, d)| {
        if d.is_zero() {
            None
        } else {
            RationalFunction::new(n, d).ok()
        }
    })
}

fn series(var: Variable) -> impl Strategy<Value = TruncatedSeries> {
    let sym = var.coefficient_symbol();
    (prop::collection::vec((-3i64..=4, poly(sym, 2)), 0..5), 0i64..6).prop_map(move |(terms, order)| {
        let mut s = TruncatedSeries::zero_through(var, order);
        for (p, c) in terms {
            if p <= order {
                s.add_term(p, RationalFunction::from_poly(c));
            }
        }
        s
    })
}

fn sign(beta: &Partition) -> i64 {
    if (beta.weight() - beta.length()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(p in partition(12)) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.durfee(), p.durfee());
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.dimension(), p.dimension());
        prop_assert_eq!(c.content_product().abs(), p.content_product().abs());
    }

    #[test]
    fn identity_character_is_dimension(p in partition(9)) {
        let t = Tables::new();
        let id = Partition::new(vec![1; p.weight()]).unwrap();
        prop_assert_eq!(BigInt::from(t.character(&p, &id).unwrap()), p.dimension());
    }

    #[test]
    fn conjugation_twists_by_sign((lam, beta) in (0usize..=8).prop_flat_map(|n| {
        let all = enumerate_partitions(n, false);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })) {
        let t = Tables::new();
        prop_assert_eq!(
            t.character(&lam.conjugate(), &beta).unwrap(),
            sign(&beta) * t.character(&lam, &beta).unwrap()
        );
    }

    #[test]
    fn lr_symmetries(mu in partition(4), rho in partition(4)) {
        let t = Tables::new();
        let mut dim_sum = BigInt::from(0);
        for nu in enumerate_partitions(mu.weight() + rho.weight(), false) {
            let c = t.lr_coefficient(&mu, &rho, &nu);
            prop_assert_eq!(c, t.lr_coefficient(&rho, &mu, &nu));
            prop_assert_eq!(c, t.lr_coefficient(&mu.conjugate(), &rho.conjugate(), &nu.conjugate()));
            dim_sum += BigInt::from(c) * nu.dimension();
        }
        // dim of the induced representation
        let n = mu.weight() + rho.weight();
        let binom = tdelay_core::combinatorics::binomial(n, mu.weight());
        prop_assert_eq!(dim_sum, binom * mu.dimension() * rho.dimension());
    }

    #[test]
    fn field_laws(a in ratfunc(Symbol::Gamma), b in ratfunc(Symbol::Gamma), x in -20i64..20) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b).checked_div(&b).unwrap(), &a);
        }
        let x = rat(x, 7);
        if let (Ok(va), Ok(vb)) = (a.eval(&x), b.eval(&x)) {
            prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
            prop_assert_eq!((&a + &b).eval(&x).unwrap(), va + vb);
        }
    }

    #[test]
    fn canonical_text_parses_back(a in ratfunc(Symbol::M)) {
        let back = parse_rational_function(&canonical_text(&a), Symbol::M).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn product_truncation_is_conservative(a in series(Variable::InvM), b in series(Variable::InvM)) {
        let p = a.mul(&b).unwrap();
        let order = p.order().unwrap();
        let full = |s: &TruncatedSeries| {
            let mut f = TruncatedSeries::zero(s.variable());
            for (k, c) in s.terms() {
                f.add_term(k, c.clone());
            }
            f
        };
        let exact = full(&a).mul(&full(&b)).unwrap();
        if let (Some(va), Some(vb)) = (a.valuation(), b.valuation()) {
            prop_assert!(order <= (a.order().unwrap() + vb).min(b.order().unwrap() + va));
        }
        for k in p.min_power().unwrap_or(0)..=order {
            prop_assert_eq!(p.coeff(k).unwrap(), exact.coeff(k).unwrap());
        }
    }

    #[test]
    fn evaluation_matches_terms(s in series(Variable::Gamma), m in 5i64..30, g in 1i64..5) {
        let (m, g) = (Rational::from_integer(m.into()), rat(g, 10));
        let mut want = Rational::from_integer(0.into());
        for (k, c) in s.terms() {
            want += c.eval(&m).unwrap() * pow(&g, k);
        }
        prop_assert_eq!(s.evaluate(&m, &g).unwrap(), want);
    }
}

fn pow(x: &Rational, k: i64) -> Rational {
    let mut out = rat(1, 1);
    for _ in 0..k.unsigned_abs() {
        out *= x;
    }
    if k < 0 {
        out.recip()
    } else {
        out
    }
}
