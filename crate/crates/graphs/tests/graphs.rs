use gg_core::builtins::catalog;
use gg_core::generation::{min_generators, phi_hall};
use gg_core::lattice::subgroup_lattice;
use gg_core::products::quotient;
use gg_core::structure::{is_soluble, normal_subgroups};
use gg_core::{group_builtin, Caps, FiniteGroup};
use gg_graphs::gengraph::{build_gamma, build_gamma_with};
use gg_graphs::lemmas::{check_lemma_degone, check_lemma_tri, degree_by_formula};
use gg_graphs::{build_swap, SimpleGraph, WeightedQuotient};
use gg_core::ClosureCache;
use proptest::prelude::*;

fn g(s: &str) -> FiniteGroup {
    group_builtin(s, &Caps::default()).unwrap()
}

fn size(n: usize, a: usize, b: usize) -> u128 {
    (n as u128).pow(a as u32) + (n as u128).pow(b as u32)
}

fn decode(n: usize, mut code: u64, k: usize) -> Vec<u32> {
    let mut t = vec![0u32; k];
    for i in (0..k).rev() {
        t[i] = (code % n as u64) as u32;
        code /= n as u64;
    }
    t
}

/// Soluble catalog groups whose complemented chief factors all have
/// endomorphism field larger than F_2 (derived subgroup nilpotent).
const LARGE_END: &[&str] = &[
    "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "cyclic:12", "klein", "elemab:2:3", "elemab:3:2",
    "cyclic:2*cyclic:4", "cyclic:6*cyclic:3", "sym:3", "dihedral:4", "dihedral:5", "dihedral:6", "quaternion",
    "dicyclic:3", "alt:4", "sdp:5:4:2", "sdp:5:4:4", "sdp:7:3:2", "sym:3*cyclic:3", "sym:3*cyclic:2",
    "sym:3*sym:3", "alt:4*cyclic:2", "dihedral:4*cyclic:2",
];

#[test]
fn adjacency_matches_brute_force() {
    let caps = Caps::default();
    for spec in catalog().into_iter().filter(|s| g(s).order() <= 12) {
        let grp = g(spec);
        let n = grp.order();
        for (a, b) in [(0, 1), (0, 2), (1, 1), (1, 2), (2, 2)] {
            if size(n, a, b) > 40_000 {
                continue;
            }
            let gr = build_gamma(&grp, a, b, &caps).unwrap();
            let na = n.pow(a as u32) as u64;
            let nb = n.pow(b as u32) as u64;
            let mut deg_a = vec![0u64; na as usize];
            let mut deg_b = vec![0u64; nb as usize];
            let (mut edges, mut loops) = (0u128, 0u64);
            for x in 0..na {
                for y in 0..nb {
                    let mut t = decode(n, x, a);
                    t.extend(decode(n, y, b));
                    let adj = grp.generates(&t);
                    assert_eq!(adj, gr.is_edge(x, y), "{spec} a={a} b={b} x={x} y={y}");
                    if adj {
                        deg_a[x as usize] += 1;
                        deg_b[y as usize] += 1;
                        if a == b && x == y {
                            loops += 1;
                        } else if a != b || x < y {
                            edges += 1;
                        }
                    }
                }
            }
            for x in 0..na {
                assert_eq!(gr.degree(0, x), deg_a[x as usize]);
            }
            for y in 0..nb {
                assert_eq!(gr.degree(1, y), deg_b[y as usize]);
            }
            assert_eq!(gr.edge_count(), edges, "{spec} {a} {b}");
            assert_eq!(gr.loop_count(), loops);
            let ex = gr.to_explicit();
            assert_eq!(ex.edge_count() as u128, edges);
            assert_eq!(ex.loop_count() as u64, loops);
        }
    }
}

#[test]
fn edge_identities_match_phi() {
    let caps = Caps::default();
    for spec in catalog() {
        let grp = g(spec);
        let lat = subgroup_lattice(&grp, &caps).unwrap();
        let mut cache = ClosureCache::new(&grp);
        for a in 0..=3 {
            for b in a..=3 {
                if a + b == 0 || size(grp.order(), a, b) > 300_000 {
                    continue;
                }
                let gr = build_gamma_with(&mut cache, a, b, &caps).unwrap();
                let phi = phi_hall(&lat, a + b);
                let e = gr.edge_count();
                let l = gr.loop_count() as u128;
                let lhs = if a < b { e } else { 2 * e + l };
                assert_eq!(num_bigint::BigInt::from(lhs), phi, "{spec} a={a} b={b}");
            }
        }
    }
}

#[test]
fn degree_formula_sweep() {
    let caps = Caps::default();
    for spec in catalog().into_iter().filter(|s| g(s).order() <= 36) {
        let grp = g(spec);
        let lat = subgroup_lattice(&grp, &caps).unwrap();
        for (a, b) in [(0, 1), (1, 1), (1, 2), (0, 2), (2, 2)] {
            if size(grp.order(), a, b) > 300_000 {
                continue;
            }
            let gr = build_gamma(&grp, a, b, &caps).unwrap();
            for s in 0..gr.side_count() {
                let (k, comp) = if s == 0 { (a, b) } else { (b, a) };
                let side = gr.side(s);
                for cl in &side.classes {
                    let t = decode(grp.order(), cl.representative, k);
                    let f = degree_by_formula(&grp, &lat, &t, comp);
                    assert!(f.divisible, "{spec} {t:?}");
                    assert_eq!(f.degree, gr.degree(s, cl.representative).into(), "{spec} a={a} b={b} {t:?}");
                }
                // every vertex of small groups, against the brute-force count
                if grp.order() <= 8 && side.vertex_count() <= 64 {
                    for code in 0..side.vertex_count() {
                        let t = decode(grp.order(), code, k);
                        let brute = (0..grp.order().pow(comp as u32) as u64)
                            .filter(|&y| {
                                let mut u = t.clone();
                                u.extend(decode(grp.order(), y, comp));
                                grp.generates(&u)
                            })
                            .count();
                        assert_eq!(degree_by_formula(&grp, &lat, &t, comp).degree, brute.into());
                    }
                }
            }
        }
    }
}

#[test]
fn connectivity_above_generation_number() {
    let caps = Caps::default();
    for spec in catalog() {
        let grp = g(spec);
        let d = min_generators(&grp);
        let sol = is_soluble(&grp);
        let mut cache = ClosureCache::new(&grp);
        for a in 0..=3 {
            for b in a..=3 {
                let s = a + b;
                if s == 0 || s < d || (s == d && !sol) || size(grp.order(), a, b) > 300_000 {
                    continue;
                }
                let gr = build_gamma_with(&mut cache, a, b, &caps).unwrap().prune_isolated();
                assert!(gr.pruned_is_connected(), "{spec} a={a} b={b}");
            }
        }
    }
}

#[test]
fn insoluble_boundary_case_is_connected_for_a5() {
    let caps = Caps::default();
    let a5 = g("alt:5");
    for (a, b) in [(0, 2), (1, 1)] {
        let gr = build_gamma(&a5, a, b, &caps).unwrap();
        assert!(gr.pruned_is_connected(), "A5 a={a} b={b}");
    }
}

#[test]
fn quotient_heredity() {
    let caps = Caps::default();
    for spec in catalog().into_iter().filter(|s| g(s).order() <= 36) {
        let grp = g(spec);
        let lat = subgroup_lattice(&grp, &caps).unwrap();
        let d = min_generators(&grp);
        for ni in normal_subgroups(&grp, &lat) {
            let nsub = lat.subgroup(ni);
            if nsub.order() == 1 || nsub.order() == grp.order() {
                continue;
            }
            let (q, _) = quotient(&grp, nsub).unwrap();
            for (a, b) in [(0, 2), (1, 1), (1, 2), (0, 3)] {
                if a + b < d || size(grp.order(), a, b) > 100_000 {
                    continue;
                }
                let big = build_gamma(&grp, a, b, &caps).unwrap();
                if big.pruned_is_connected() {
                    let small = build_gamma(&q, a, b, &caps).unwrap();
                    assert!(small.pruned_is_connected(), "{spec}/N a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn soluble_diameters() {
    let caps = Caps::default();
    for spec in catalog() {
        let grp = g(spec);
        if !is_soluble(&grp) || grp.order() == 1 {
            continue;
        }
        let proviso = LARGE_END.contains(&spec);
        let mut cache = ClosureCache::new(&grp);
        for a in 0..=2 {
            for b in a..=3 {
                if a + b < min_generators(&grp) || size(grp.order(), a, b) > 300_000 {
                    continue;
                }
                let gr = build_gamma_with(&mut cache, a, b, &caps).unwrap().prune_isolated();
                let diam = gr.pruned_diameter().expect("connected");
                assert!(diam <= 4, "{spec} a={a} b={b}: {diam}");
                if proviso || a != 1 {
                    let bound = if a == b { 2 } else { 3 };
                    assert!(diam <= bound, "{spec} a={a} b={b}: {diam} > {bound}");
                } else if a == b {
                    assert!(diam <= 3, "{spec} a={a}: {diam}");
                }
            }
        }
    }
}

#[test]
fn diameter_matches_explicit_bfs() {
    let caps = Caps::default();
    for spec in ["sym:3", "klein", "cyclic:6", "dihedral:4", "alt:4", "quaternion"] {
        let grp = g(spec);
        for (a, b) in [(1, 1), (1, 2), (0, 2), (2, 2)] {
            if size(grp.order(), a, b) > 20_000 {
                continue;
            }
            let gr = build_gamma(&grp, a, b, &caps).unwrap();
            let ex = gr.to_explicit();
            let keep = ex.non_isolated();
            let star = ex.induced(&keep);
            assert_eq!(star.diameter(), gr.prune_isolated().pruned_diameter(), "{spec} a={a} b={b}");
            assert_eq!(star.has_triangle(), gr.component_quotients().iter().any(|q| q.has_3cycle()));
        }
    }
}

#[test]
fn triangles_and_non_bipartite_components() {
    let caps = Caps::default();
    for spec in catalog() {
        let grp = g(spec);
        if grp.order() == 1 {
            continue;
        }
        for a in 1..=2 {
            if size(grp.order(), a, a) > 300_000 {
                continue;
            }
            let r = check_lemma_tri(&grp, a, &caps).unwrap();
            assert!(r.holds, "{spec} a={a}: {:?}", r.witness);
            let gr = build_gamma(&grp, a, a, &caps).unwrap();
            for q in gr.component_quotients() {
                assert!(q.node_colouring().is_none(), "{spec} a={a}");
            }
        }
    }
}

#[test]
fn degree_one_vertices() {
    let caps = Caps::default();
    for spec in catalog() {
        let grp = g(spec);
        if grp.order() < 3 {
            continue;
        }
        for a in 0..=2 {
            for b in a.max(1)..=3 {
                if size(grp.order(), a, b) > 200_000 {
                    continue;
                }
                let r = check_lemma_degone(&grp, a, b, &caps).unwrap();
                assert!(r.holds, "{spec} a={a} b={b}: {:?}", r.witness);
            }
        }
    }
}

#[test]
fn swap_graphs() {
    let caps = Caps::default();
    for spec in catalog() {
        let grp = g(spec);
        if grp.order() == 1 {
            continue;
        }
        let d0 = min_generators(&grp);
        for d in d0..=3 {
            if (grp.order() as u128).pow(d as u32) > 200_000 || (d == d0 && !is_soluble(&grp)) {
                continue;
            }
            let s = build_swap(&grp, d, &caps).unwrap();
            let lat = subgroup_lattice(&grp, &caps).unwrap();
            assert_eq!(num_bigint::BigInt::from(s.vertex_count()), phi_hall(&lat, d));
            assert!(s.is_connected(), "{spec} d={d}");
            if LARGE_END.contains(&spec) && s.vertex_count() <= 20_000 {
                let diam = s.diameter().unwrap();
                assert!(diam as usize <= 2 * d - 1, "{spec} d={d}: {diam}");
            }
        }
    }
}

fn brute_isomorphic(x: &SimpleGraph, y: &SimpleGraph) -> bool {
    let n = x.len();
    if n != y.len() {
        return false;
    }
    let mut perm: Vec<u32> = (0..n as u32).collect();
    fn rec(k: usize, perm: &mut Vec<u32>, x: &SimpleGraph, y: &SimpleGraph) -> bool {
        let n = perm.len();
        if k == n {
            return (0..n as u32).all(|u| {
                x.has_loop(u) == y.has_loop(perm[u as usize])
                    && (0..n as u32).all(|v| x.is_adjacent(u, v) == y.is_adjacent(perm[u as usize], perm[v as usize]))
            });
        }
        for i in k..n {
            perm.swap(k, i);
            if rec(k + 1, perm, x, y) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    rec(0, &mut perm, x, y)
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n + 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n as u32 {
                for v in u..n as u32 {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            SimpleGraph::from_edges(n, edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn certificate_decides_isomorphism(x in graph_strategy(6), y in graph_strategy(6)) {
        let cx = WeightedQuotient::from_explicit(&x).certificate();
        let cy = WeightedQuotient::from_explicit(&y).certificate();
        prop_assert_eq!(cx == cy, brute_isomorphic(&x, &y));
    }

    #[test]
    fn certificate_invariant_under_relabelling(x in graph_strategy(9), seed in any::<u64>()) {
        let n = x.len();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            if x.has_loop(u) {
                edges.push((perm[u as usize], perm[u as usize]));
            }
            for &v in x.neighbors(u) {
                if u < v {
                    edges.push((perm[u as usize], perm[v as usize]));
                }
            }
        }
        let y = SimpleGraph::from_edges(n, edges);
        prop_assert_eq!(
            WeightedQuotient::from_explicit(&x).certificate(),
            WeightedQuotient::from_explicit(&y).certificate()
        );
    }
}

#[test]
fn lattice_quotients_match_enumeration() {
    use gg_graphs::lattice_gamma::gamma_components;
    let caps = Caps::default();
    for spec in catalog() {
        let grp = g(spec);
        let lat = subgroup_lattice(&grp, &caps).unwrap();
        let mut cache = ClosureCache::new(&grp);
        for a in 0..=3 {
            for b in a..=3 {
                if a + b == 0 || size(grp.order(), a, b) > 300_000 {
                    continue;
                }
                let gr = build_gamma_with(&mut cache, a, b, &caps).unwrap();
                let mut enumerated: Vec<Vec<u64>> = gr.component_quotients().iter().map(|q| q.certificate()).collect();
                let mut derived: Vec<Vec<u64>> =
                    gamma_components(&lat, a, b).unwrap().iter().map(|q| q.certificate()).collect();
                enumerated.sort();
                derived.sort();
                assert_eq!(enumerated, derived, "{spec} a={a} b={b}");
            }
        }
    }
}
