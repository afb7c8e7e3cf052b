use gg_core::arith::divisors;
use gg_core::builtins::catalog;
use gg_core::generation::{min_generators, phi_hall};
use gg_core::structure::{is_cyclic, is_nilpotent};
use gg_core::{group_builtin, subgroup_lattice, Caps, DirichletPolynomial, FiniteGroup};
use gg_graphs::build_gamma;
use gg_graphs::lattice_gamma::gamma_components;
use gg_recognition::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn g(s: &str) -> FiniteGroup {
    group_builtin(s, &Caps::default()).unwrap()
}

fn caps() -> Caps {
    Caps::default()
}

fn truncation(gr: &FiniteGroup) -> usize {
    min_generators(gr) + divisors(gr.order() as u64).len().max(2)
}

fn family(s: &str, level: usize) -> ComponentFamily {
    lambda_star(&g(s), level, &caps()).unwrap()
}

#[test]
fn round_trip_on_catalog() {
    let mut checked = 0;
    for s in catalog() {
        let gr = g(s);
        let d = min_generators(&gr);
        if gr.order() > 72 || d > 3 {
            continue;
        }
        let lat = subgroup_lattice(&gr, &caps()).unwrap();
        let f = lambda_star(&gr, truncation(&gr), &caps()).unwrap();
        let r = recover_all(&f).unwrap_or_else(|e| panic!("{s}: {e}"));
        assert_eq!(r.d, d, "{s}: d");
        assert_eq!(r.order, gr.order() as u64, "{s}: order");
        assert_eq!(r.p, DirichletPolynomial::from_lattice(&lat), "{s}: P");
        assert_eq!(r.frattini_order as usize, lat.subgroup(lat.frattini()).order(), "{s}: Frattini");
        assert_eq!(r.nilpotent, is_nilpotent(&gr), "{s}: nilpotent");
        assert_eq!(r.cyclic, is_cyclic(&gr), "{s}: cyclic");
        checked += 1;
    }
    assert!(checked >= 30);
}

#[test]
fn nilpotency_despite_equal_p() {
    let a = family("cyclic:6*cyclic:3", truncation(&g("cyclic:6*cyclic:3")));
    let b = family("sym:3*cyclic:3", truncation(&g("sym:3*cyclic:3")));
    assert_eq!(recover_p(&a).unwrap(), recover_p(&b).unwrap());
    assert!(decide_nilpotent(&a).unwrap());
    assert!(!decide_nilpotent(&b).unwrap());
    let s3 = family("sym:3", 6);
    assert!(recover_p(&s3).unwrap().q_factorisation().is_none());
    assert!(!decide_nilpotent(&s3).unwrap());
}

#[test]
fn cyclic_recognition() {
    assert_eq!(recognize_cyclic(&family("cyclic:6", 4)).unwrap(), CyclicVerdict { is_cyclic: true, order: Some(6) });
    assert_eq!(recognize_cyclic(&family("cyclic:2", 4)).unwrap(), CyclicVerdict { is_cyclic: true, order: Some(2) });
    assert!(!recognize_cyclic(&family("klein", 4)).unwrap().is_cyclic);
    assert!(!recognize_cyclic(&family("sym:3", 4)).unwrap().is_cyclic);
    assert!(matches!(
        recognize_cyclic(&family("cyclic:6", 2)),
        Err(RecognitionError::InsufficientTruncation { .. })
    ));
}

#[test]
fn trivial_group_family() {
    let f = family("trivial", 3);
    assert!(f.components().iter().all(|c| c.is_k2() || c.is_looped_point()));
    let r = recover_all(&f).unwrap();
    assert!(r.trivial);
    assert_eq!((r.order, r.d, r.frattini_order), (1, 0, 1));
    let c2 = family("cyclic:2", 3);
    assert!(c2.components().iter().any(|c| c.is_k2()));
}

#[test]
fn klein_and_dihedral() {
    for s in catalog() {
        let gr = g(s);
        if gr.order() == 1 || is_cyclic(&gr) {
            continue;
        }
        let f = lambda_star(&gr, 3, &caps()).unwrap();
        let v = recognize_klein_or_dihedral(&f).unwrap();
        let expected = match s {
            "klein" => Some(4),
            "sym:3" => Some(6),
            "dihedral:5" => Some(10),
            "dihedral:7" => Some(14),
            "dihedral:11" => Some(22),
            _ => None,
        };
        assert_eq!(v.order, expected, "{s}");
        assert_eq!(v.matched, expected.is_some(), "{s}");
        assert_eq!(v.klein, s == "klein", "{s}");
    }
}

#[test]
fn d_examples() {
    assert_eq!(recover_d(&family("klein", 4)).unwrap(), 2);
    assert_eq!(recover_d(&family("elemab:2:3", 5)).unwrap(), 3);
    assert_eq!(recover_d(&family("sym:4", 4)).unwrap(), 2);
}

#[test]
fn sym3_components() {
    let gr = g("sym:3");
    let f = lambda_star(&gr, 4, &caps()).unwrap();
    let lat = subgroup_lattice(&gr, &caps()).unwrap();
    let mut stars: Vec<u128> = f.components().iter().filter_map(|c| c.star_leaves()).collect();
    stars.sort_unstable();
    let phi: Vec<u128> = (2..=4).map(|t| phi_hall(&lat, t).try_into().unwrap()).collect();
    assert_eq!(stars, phi);
    assert_eq!(stars, vec![18, 168, 1170]);

    let find = |pred: &dyn Fn(&AnonComponent) -> bool| (0..f.len()).find(|&i| pred(&f.components()[i])).unwrap();
    let star3 = find(&|c| c.star_leaves() == Some(168));
    assert_eq!(component_level(&f, star3).unwrap(), 3);
    assert_eq!(recover_ab(&f, star3).unwrap(), (0, 3));
    let tri4: Vec<usize> =
        (0..f.len()).filter(|&i| f.components()[i].has_3cycle() && component_level(&f, i).unwrap() == 4).collect();
    assert_eq!(tri4.len(), 1);
    assert_eq!(recover_ab(&f, tri4[0]).unwrap(), (2, 2));
    let b12 = find(&|c| c.is_bipartite() && !c.is_star() && c.edge_count() == 168);
    assert_eq!(c_parts(&f, b12).0, 6);
    assert_eq!(recover_ab(&f, b12).unwrap(), (1, 2));
    let tri2 = find(&|c| c.has_3cycle());
    assert!(matches!(recover_ab(&f, tri2), Err(RecognitionError::LevelAtMinimum(2))));

    assert_eq!(recover_order(&f).unwrap(), 6);
    let p = recover_p(&family("sym:3", 6)).unwrap();
    assert_eq!(p.coeff(2), BigInt::from(-1));
    assert_eq!(p.coeff(3), BigInt::from(-3));
    assert_eq!(p.coeff(6), BigInt::from(3));
}

fn c_parts(f: &ComponentFamily, i: usize) -> (u128, u128) {
    f.components()[i].parts().unwrap()
}

#[test]
fn frattini_examples() {
    assert_eq!(recover_frattini_order(&family("cyclic:4", 4)).unwrap(), 2);
    // Frat of C5 ⋊ C4 is trivial when C4 acts faithfully, C2 otherwise
    assert_eq!(recover_frattini_order(&family("sdp:5:4:2", 6)).unwrap(), 1);
    assert_eq!(recover_frattini_order(&family("sdp:5:4:4", 6)).unwrap(), 2);
    assert_eq!(recover_frattini_order(&family("quaternion", 6)).unwrap(), 2);
}

/// Each (a, b) label above level d names a graph that really has the component.
#[test]
fn labels_are_correct_and_levels_single_valued() {
    for s in ["sym:3", "klein", "cyclic:2*cyclic:4", "dihedral:4", "alt:4", "elemab:2:3", "quaternion"] {
        let gr = g(s);
        let d = min_generators(&gr);
        let top = d + 3;
        let lat = subgroup_lattice(&gr, &caps()).unwrap();
        let f = lambda_star(&gr, top, &caps()).unwrap();
        for i in 0..f.len() {
            let lvl = component_level(&f, i).unwrap_or_else(|e| panic!("{s} #{i}: {e}"));
            assert!((d..=top).contains(&lvl), "{s}");
            if lvl == d {
                assert!(recover_ab(&f, i).is_err());
                continue;
            }
            let (a, b) = recover_ab(&f, i).unwrap();
            assert_eq!(a + b, lvl);
            let certs: BTreeSet<Vec<u64>> = gamma_components(&lat, a, b)
                .unwrap()
                .iter()
                .map(|q| AnonComponent::from_weighted_quotient(q).certificate().to_vec())
                .collect();
            assert!(certs.contains(f.components()[i].certificate()), "{s}: ({a},{b})");
        }
        for r in d + 1..=top {
            let mut parts: Vec<(usize, u128)> = (0..f.len())
                .filter(|&i| component_level(&f, i).unwrap() == r)
                .filter_map(|i| {
                    let c = &f.components()[i];
                    (c.is_bipartite() && !c.is_star()).then(|| (recover_ab(&f, i).unwrap().0, c.parts().unwrap().0))
                })
                .collect();
            parts.sort();
            assert!(parts.windows(2).all(|w| w[0].1 < w[1].1), "{s} level {r}");
        }
    }
}

#[test]
fn lattice_family_matches_enumeration() {
    for s in ["cyclic:2", "cyclic:3", "klein", "sym:3", "cyclic:4"] {
        let gr = g(s);
        let level = if gr.order() <= 4 { 4 } else { 3 };
        let f = lambda_star(&gr, level, &caps()).unwrap();
        let mut comps = Vec::new();
        for r in 1..=level {
            for a in 0..=r / 2 {
                let gg = build_gamma(&gr, a, r - a, &caps()).unwrap().prune_isolated();
                comps.extend(gg.component_quotients().iter().map(AnonComponent::from_weighted_quotient));
            }
        }
        let e = ComponentFamily::new(FamilyKind::Full, level, comps);
        assert_eq!(f.certificates(), e.certificates(), "{s}");
    }
}

#[test]
fn truncation_errors() {
    let f = family("sym:3", 2);
    assert!(matches!(recover_p(&f), Err(RecognitionError::InsufficientTruncation { .. })));
    let f = family("klein", 2);
    assert!(recover_d(&f).is_err());
    let a1 = lambda1_star(&g("sym:3"), 5, &caps()).unwrap();
    assert!(matches!(recover_all(&a1), Err(RecognitionError::WrongKind(_))));
    assert!(matches!(lstt_pipeline(&family("sym:3", 5)), Err(RecognitionError::WrongKind(_))));
}

#[test]
fn json_round_trip() {
    for s in ["sym:3", "cyclic:4", "trivial"] {
        let f = family(s, 4);
        let back = ComponentFamily::from_json(&f.to_json()).unwrap();
        assert_eq!(f, back);
    }
    let bad = serde_json::json!({"kind": "full", "truncation_level": 2, "components": [
        {"weight": ["1", "1"], "loop": [false, false], "rows": [[1], []]}
    ]});
    assert!(ComponentFamily::from_json(&bad).is_err());
}

#[test]
fn lstt_examples() {
    let run = |s: &str| {
        let gr = g(s);
        let lat = subgroup_lattice(&gr, &caps()).unwrap();
        let r = lstt_pipeline(&lambda1_star(&gr, 6, &caps()).unwrap()).unwrap_or_else(|e| panic!("{s}: {e}"));
        assert_eq!(r.order, gr.order() as u64, "{s}");
        assert_eq!(r.d, min_generators(&gr), "{s}");
        assert_eq!(r.p, DirichletPolynomial::from_lattice(&lat), "{s}");
        assert_eq!(r.frattini_order as usize, lat.subgroup(lat.frattini()).order(), "{s}");
        assert_eq!(r.nilpotent, is_nilpotent(&gr), "{s}");
        r
    };
    assert_eq!(run("sym:3").frattini_order, 1);
    assert!(run("cyclic:4").cyclic);
    assert_eq!(run("klein").d, 2);
    for s in ["cyclic:6", "dihedral:4", "quaternion", "alt:4", "cyclic:6*cyclic:3", "sym:3*cyclic:3"] {
        run(s);
    }
    let short = lambda1_star(&g("sym:3"), 3, &caps()).unwrap();
    assert!(matches!(lstt_pipeline(&short), Err(RecognitionError::InsufficientTruncation { .. })));
}

fn primes_below_30() -> Vec<u64> {
    vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
}

#[test]
fn unfat_is_injective() {
    fn multisets(ps: &[u64], k: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        if k == 0 {
            return;
        }
        for i in start..ps.len() {
            cur.push(ps[i]);
            multisets(ps, k - 1, i, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    multisets(&primes_below_30(), 4, 0, &mut Vec::new(), &mut all);
    let mut seen = std::collections::HashMap::new();
    for m in &all {
        let q = m.iter().fold(BigRational::from_integer(1.into()), |acc, &p| {
            acc * BigRational::new(BigInt::from(p - 1), BigInt::from(p))
        });
        if let Some(prev) = seen.insert(q.clone(), m.clone()) {
            panic!("{prev:?} and {m:?} give the same product");
        }
        assert_eq!(unfat_factor(&q).as_ref(), Some(m));
    }
    assert_eq!(seen.len(), all.len());
}

proptest! {
    #[test]
    fn unfat_rejects_non_products(num in 1i64..200, den in 1i64..200) {
        let q = BigRational::new(num.into(), den.into());
        if let Some(ps) = unfat_factor(&q) {
            let back = ps.iter().fold(BigRational::from_integer(1.into()), |acc, &p| {
                acc * BigRational::new(BigInt::from(p - 1), BigInt::from(p))
            });
            prop_assert_eq!(back, q);
        }
    }

    #[test]
    fn solve_recovers_random_groups(idx in 0usize..20) {
        let names: Vec<&str> = catalog().into_iter().filter(|s| g(s).order() <= 24).collect();
        let s = names[idx % names.len()];
        let gr = g(s);
        let lat = subgroup_lattice(&gr, &caps()).unwrap();
        let n = gr.order() as u64;
        let rows: Vec<(u32, BigInt)> = (0..divisors(n).len() as u32 + 2).map(|t| (t, phi_hall(&lat, t as usize))).collect();
        prop_assert_eq!(solve_dirichlet(n, &rows).unwrap(), DirichletPolynomial::from_lattice(&lat));
    }
}
