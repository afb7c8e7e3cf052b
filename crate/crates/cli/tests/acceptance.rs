//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are always printed.

use gg_cli::report::{Report, Status};
use gg_cli::suites::{run_suite, SuiteOptions, NILPOTENT_DERIVED};
use gg_constructions::check_direct_product_connectivity;
use gg_constructions::tau::tau_d;
use gg_core::builtins::catalog;
use gg_core::dirichlet::{dirichlet_polynomial, LinearFactor};
use gg_core::generation::{min_generators, phi_enumerate, phi_hall};
use gg_core::structure::is_soluble;
use gg_core::{group_builtin, subgroup_lattice, Caps, DirichletPolynomial, FiniteGroup};
use gg_graphs::build_swap;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn caps() -> Caps {
    Caps::default()
}

fn g(s: &str) -> FiniteGroup {
    group_builtin(s, &caps()).unwrap()
}

fn suite(name: &str, groups: Option<&str>, budget: u128) -> Report {
    let opts = SuiteOptions { budget, ..SuiteOptions::new(caps()) };
    run_suite(name, groups, &opts).unwrap()
}

/// No failures and no unchecked instances.
fn clean(rep: &Report) -> bool {
    rep.count(Status::Fail) == 0 && rep.count(Status::CapExceeded) == 0
}

fn first_failure(rep: &Report) -> String {
    rep.records
        .iter()
        .find(|r| matches!(r.status, Status::Fail | Status::CapExceeded))
        .map(|r| format!("; first failure: {} {} {}", r.group, r.claim_ref, r.witness))
        .unwrap_or_default()
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed.as_secs() < limit_secs
}

fn c1_hall_vs_enumeration() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for s in catalog() {
        let gr = g(s);
        if gr.order() > 100 {
            continue;
        }
        let lat = subgroup_lattice(&gr, &caps()).unwrap();
        for t in 1.. {
            if (gr.order() as u128).pow(t as u32) > 10_000_000 {
                break;
            }
            let e = phi_enumerate(&gr, t, &caps()).unwrap();
            if e != phi_hall(&lat, t) {
                bad.push(format!("{s} t={t}"));
            }
            checked += 1;
            if gr.order() == 1 && t >= 6 {
                break;
            }
        }
    }
    let el = start.elapsed();
    verdict(bad.is_empty() && within(el, 300), format!("{checked} (G,t) pairs, mismatches {bad:?}, {:.1}s (limit 300s)", el.as_secs_f64()))
}

fn coeffs(order: u64, pairs: &[(u64, i64)]) -> DirichletPolynomial {
    DirichletPolynomial::new(order, pairs.iter().map(|&(n, a)| (n, BigInt::from(a))).collect::<BTreeMap<_, _>>())
}

fn factor(c: i64, q: u64) -> LinearFactor {
    LinearFactor { c: BigInt::from(c), q }
}

fn c2_zeta_identities() -> Verdict {
    // (1-1/2^s)(1-1/3^s)(1-3/3^s) = 1 - 1/2^s - 4/3^s + 4/6^s + 3/9^s - 3/18^s
    let order18 = coeffs(18, &[(1, 1), (2, -1), (3, -4), (6, 4), (9, 3), (18, -3)]);
    let prod18 = DirichletPolynomial::from_factors(18, &[factor(1, 2), factor(1, 3), factor(3, 3)]);
    // (1-1/2^s)(1-5/5^s) = 1 - 1/2^s - 5/5^s + 5/10^s
    let order20 = coeffs(20, &[(1, 1), (2, -1), (5, -5), (10, 5)]);
    let prod20 = DirichletPolynomial::from_factors(20, &[factor(1, 2), factor(5, 5)]);
    let c6c3 = dirichlet_polynomial(&g("cyclic:6*cyclic:3"), &caps()).unwrap();
    let s3c3 = dirichlet_polynomial(&g("sym:3*cyclic:3"), &caps()).unwrap();
    let f20 = dirichlet_polynomial(&g("sdp:5:4:2"), &caps()).unwrap();
    let ok = c6c3 == order18 && s3c3 == order18 && prod18 == order18 && f20 == order20 && prod20 == order20;
    verdict(ok, format!("P(C6xC3) = {c6c3}; P(S3xC3) = {s3c3}; P(C5:C4 faithful) = {f20}"))
}

fn c3_dihedral_count() -> Verdict {
    let mut rows = Vec::new();
    let mut ok = true;
    for p in [3u64, 5, 7, 11] {
        let lat = subgroup_lattice(&g(&format!("dihedral:{p}")), &caps()).unwrap();
        // 4p^2 (1 - 1/4)(1 - 1/p) = 3p(p - 1)
        let expected = BigInt::from(3 * p * (p - 1));
        let got = phi_hall(&lat, 2);
        ok &= got == expected;
        rows.push(format!("D_{p}: {got}"));
    }
    verdict(ok, rows.join(", "))
}

fn c4_edge_bookkeeping() -> Verdict {
    let rep = suite("edge-counts", Some("catalog"), 300_000);
    verdict(clean(&rep), format!("{} graphs checked{}", rep.count(Status::Pass), first_failure(&rep)))
}

fn c5_degree_formula() -> Verdict {
    let small: Vec<&str> = catalog().into_iter().filter(|s| g(s).order() <= 36).collect();
    let rep = suite("degree-formula", Some(&small.join(",")), u128::MAX);
    let vertices: u64 = rep.records.iter().filter_map(|r| r.witness["vertices"].as_u64()).sum();
    let graphs = rep.count(Status::Pass);
    // every (a, b) with a <= b and a + b <= 3 for every group
    let expected = small.len() * 5;
    verdict(
        clean(&rep) && rep.records.len() == expected,
        format!("{graphs} graphs, {vertices} vertices over {} groups{}", small.len(), first_failure(&rep)),
    )
}

fn c6_connectivity() -> Verdict {
    let rep = suite("connectivity-c15", Some("catalog"), 100_000);
    verdict(
        clean(&rep),
        format!(
            "{} connected instances, {} insoluble boundary instances reported as open{}",
            rep.count(Status::Pass),
            rep.count(Status::Open),
            first_failure(&rep)
        ),
    )
}

fn c7_soluble_diameters() -> Verdict {
    let start = Instant::now();
    let rep = suite("diam-soluble", Some("catalog:soluble"), 300_000);
    let mut violations = Vec::new();
    for r in &rep.records {
        let w = &r.witness;
        let (a, b) = (w["a"].as_u64().unwrap(), w["b"].as_u64().unwrap());
        let Some(diam) = w["diameter"].as_u64() else {
            violations.push(format!("{} ({a},{b}) disconnected", r.group));
            continue;
        };
        let sub = NILPOTENT_DERIVED.contains(&r.group.as_str());
        let bound = if sub && a == b { 2 } else if sub { 3 } else { 4 };
        if diam > bound {
            violations.push(format!("{} ({a},{b}) diameter {diam} > {bound}", r.group));
        }
    }
    let el = start.elapsed();
    verdict(
        violations.is_empty() && rep.count(Status::CapExceeded) == 0 && within(el, 600),
        format!("{} graphs, violations {violations:?}, {:.1}s (limit 600s)", rep.records.len(), el.as_secs_f64()),
    )
}

fn c8_counterexample() -> Verdict {
    let start = Instant::now();
    let rep = suite("s3counter", None, 0);
    let el = start.elapsed();
    let scan = rep.records.iter().find(|r| r.claim_ref == "no-common-neighbour");
    let order = scan.and_then(|r| r.witness["order"].as_u64());
    verdict(
        clean(&rep) && rep.records.len() == 2 && order == Some(9216) && within(el, 600),
        format!("order {order:?}, {} records pass, {:.1}s (limit 600s){}", rep.count(Status::Pass), el.as_secs_f64(), first_failure(&rep)),
    )
}

fn c9_swap() -> Verdict {
    let mut violations = Vec::new();
    let mut diam_checked = 0;
    let mut conn_checked = 0;
    for s in catalog() {
        let gr = g(s);
        if gr.order() == 1 {
            continue;
        }
        let d0 = min_generators(&gr);
        if NILPOTENT_DERIVED.contains(&s) && d0 <= 2 {
            let sw = build_swap(&gr, 2, &caps()).unwrap();
            match sw.diameter() {
                Some(x) if x <= 3 => {}
                other => violations.push(format!("{s}: diam Σ_2 = {other:?}")),
            }
            diam_checked += 1;
        }
        for d in d0 + 1..=3 {
            if (gr.order() as u128).pow(d as u32) > 1_000_000 {
                continue;
            }
            if !build_swap(&gr, d, &caps()).unwrap().is_connected() {
                violations.push(format!("{s}: Σ_{d} disconnected"));
            }
            conn_checked += 1;
        }
    }
    verdict(
        violations.is_empty() && diam_checked > 0,
        format!("{diam_checked} diameter checks, {conn_checked} connectivity checks, violations {violations:?}"),
    )
}

fn c10_recognition() -> Verdict {
    let eligible =
        catalog().into_iter().filter(|s| g(s).order() <= 72 && min_generators(&g(s)) <= 3).collect::<Vec<_>>();
    let rep = suite("recognition-roundtrip", Some(&eligible.join(",")), 0);
    let nil = suite("nilpotency-discrimination", None, 0);
    let pair = nil.records.iter().find(|r| r.claim_ref == "equal-probabilistic-zeta-different-nilpotency");
    let pair_ok = pair.is_some_and(|r| r.status == Status::Pass);
    verdict(
        clean(&rep) && rep.count(Status::Pass) == eligible.len() && clean(&nil) && pair_ok,
        format!(
            "{}/{} groups recovered exactly; C6xC3 nilpotent and S3xC3 not, with equal P: {pair_ok}{}",
            rep.count(Status::Pass),
            eligible.len(),
            first_failure(&rep)
        ),
    )
}

fn c11_pair605() -> Verdict {
    let start = Instant::now();
    let rep = suite("pair605", None, 0);
    let el = start.elapsed();
    let claims: Vec<&str> = rep.records.iter().map(|r| r.claim_ref.as_str()).collect();
    let needed = [
        "both-groups-have-order-605",
        "groups-not-isomorphic",
        "tau-preserves-generating-pairs-by-closure",
        "tau-preserves-generating-triples",
        "component-multisets-agree",
    ];
    verdict(
        clean(&rep) && needed.iter().all(|c| claims.contains(c)) && within(el, 300),
        format!("{} assertions pass, {:.1}s (limit 300s){}", rep.count(Status::Pass), el.as_secs_f64(), first_failure(&rep)),
    )
}

fn c12_spread_and_psi() -> Verdict {
    let rep = suite("spread-crown", Some("catalog"), 0);
    let crown = rep.records.iter().any(|r| {
        r.claim_ref == "crown-power-spread" && r.witness["t"] == 2 && r.status == Status::Pass && r.witness["spread"] == true
    });
    let soluble = catalog().into_iter().filter(|s| is_soluble(&g(s))).count();
    let psi = rep.records.iter().filter(|r| r.claim_ref == "psi-of-soluble-group").count();
    verdict(
        clean(&rep) && crown && psi == soluble,
        format!("{} assertions pass, psi checked on {psi} soluble groups, L_2 spread: {crown}{}", rep.count(Status::Pass), first_failure(&rep)),
    )
}

fn c13_tau() -> Verdict {
    let a5 = g("alt:5");
    let r = tau_d(&a5, 2, &caps()).unwrap();
    let phi: u64 = phi_enumerate(&a5, 2, &caps()).unwrap().try_into().unwrap();
    let ok = r.phi == phi && r.aut_order == 120 && r.all_regular && phi % r.aut_order == 0 && r.orbits == phi / r.aut_order;
    verdict(ok, format!("phi(2) = {phi}, |Aut| = {}, orbits = {}, all regular: {}", r.aut_order, r.orbits, r.all_regular))
}

fn c14_direct_product() -> Verdict {
    let start = Instant::now();
    let r = check_direct_product_connectivity(&[(g("alt:5"), 2)], 1, 1, &caps()).unwrap();
    let el = start.elapsed();
    verdict(
        r.connected && r.order == 3600 && r.d == 2 && within(el, 300),
        format!("|G| = {}, d = {}, {} non-isolated vertices, connected: {}, {:.1}s (limit 300s)", r.order, r.d, r.vertices, r.connected, el.as_secs_f64()),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 14] = [
        ("phi_hall equals phi_enumerate", c1_hall_vs_enumeration),
        ("zeta identities for orders 18 and 20", c2_zeta_identities),
        ("dihedral generating pair count", c3_dihedral_count),
        ("edge bookkeeping", c4_edge_bookkeeping),
        ("degree formula and divisibility", c5_degree_formula),
        ("connectivity above the generation number", c6_connectivity),
        ("soluble diameters", c7_soluble_diameters),
        ("no common neighbour in the order-9216 group", c8_counterexample),
        ("swap graph diameter and connectivity", c9_swap),
        ("recognition round trip", c10_recognition),
        ("order-605 pair", c11_pair605),
        ("spread and psi", c12_spread_and_psi),
        ("tau_2 of Alt(5)", c13_tau),
        ("Alt(5)^2 connectivity", c14_direct_product),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            verdict(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        if !v.ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {} [{:.1}s]",
            i + 1,
            if v.ok { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
