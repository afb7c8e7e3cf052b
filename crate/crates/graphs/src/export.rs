//! DOT, JSON and CSV exports of generation graphs.

use crate::gengraph::GenGraph;
use serde_json::{json, Value};
use std::fmt::Write;

fn label(t: &[u32]) -> String {
    let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn node_id(gr: &GenGraph, s: usize, code: u64) -> String {
    if gr.side_count() == 2 {
        format!("{}{}", if s == 0 { "a" } else { "b" }, code)
    } else {
        format!("v{code}")
    }
}

/// Graphviz source. Loops appear as self-edges; side-a vertices are boxes
/// when the two sides differ.
pub fn to_dot(gr: &GenGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph gamma_{}_{} {{", gr.a(), gr.b()).unwrap();
    for (s, code) in gr.vertices() {
        let shape = if gr.side_count() == 2 && s == 0 { " shape=box" } else { "" };
        writeln!(out, "  {} [label=\"{}\"{}];", node_id(gr, s, code), label(&gr.tuple(s, code)), shape).unwrap();
    }
    let na = gr.side(0).vertex_count();
    let nb = gr.side(1).vertex_count();
    for x in 0..na {
        for y in 0..nb {
            if gr.side_count() == 1 && y < x {
                continue;
            }
            if gr.is_edge(x, y) {
                writeln!(out, "  {} -- {};", node_id(gr, 0, x), node_id(gr, gr.side_count() - 1, y)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Component summaries with the graph parameters.
pub fn components_json(gr: &GenGraph) -> Value {
    json!({
        "order": gr.order(),
        "a": gr.a(),
        "b": gr.b(),
        "pruned": gr.is_pruned(),
        "vertices": gr.vertex_count(),
        "edges": gr.edge_count().to_string(),
        "loops": gr.loop_count(),
        "components": gr.components(),
    })
}

/// One row per vertex: side, tuple, degree.
pub fn degree_csv(gr: &GenGraph) -> String {
    let mut out = String::from("side,tuple,degree\n");
    for (s, code) in gr.vertices() {
        let side = if s == 0 { "a" } else { "b" };
        let t: Vec<String> = gr.tuple(s, code).iter().map(|x| x.to_string()).collect();
        writeln!(out, "{side},{},{}", t.join(" "), gr.degree(s, code)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gengraph::build_gamma;
    use gg_core::{group_builtin, Caps};

    #[test]
    fn c2_exports() {
        let caps = Caps::default();
        let g = group_builtin("cyclic:2", &caps).unwrap();
        let gr = build_gamma(&g, 0, 1, &caps).unwrap();
        let dot = to_dot(&gr);
        assert!(dot.contains("shape=box"));
        assert_eq!(dot.matches(" -- ").count(), 1);
        let loops = build_gamma(&g, 1, 1, &caps).unwrap();
        assert!(to_dot(&loops).contains("v1 -- v1;"));
        let csv = degree_csv(&loops);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.contains("a,1,2"));
        let j = components_json(&loops.prune_isolated());
        assert_eq!(j["components"].as_array().unwrap().len(), 1);
        assert_eq!(j["vertices"], 2);
    }
}
