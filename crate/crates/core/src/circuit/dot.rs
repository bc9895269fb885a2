//! Deterministic graph-description output, with scope and branch boxes as
//! clusters.

use super::{BoxKind, CircuitGraph, Endpoint};
use std::collections::BTreeSet;
use std::fmt::Write;

pub fn emit_dot(g: &CircuitGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph circuit {\n");
    out.push_str("  rankdir=TB;\n  node [shape=box, fontsize=10];\n");

    // Boundary ports first, sorted.
    let mut boundaries: BTreeSet<&str> = BTreeSet::new();
    for w in &g.wires {
        if let Endpoint::Boundary(b) = &w.from {
            boundaries.insert(b);
        }
        if let Endpoint::Boundary(b) = &w.to {
            boundaries.insert(b);
        }
    }
    for b in &boundaries {
        writeln!(out, "  \"{}\" [shape=plaintext];", b).unwrap();
    }

    // Innermost-first cluster nesting is not required by dot; emit each box
    // as a cluster listing its member nodes, sorted by first node id.
    let mut boxes: Vec<(usize, &super::BoxRegion)> = g
        .boxes
        .iter()
        .enumerate()
        .map(|(i, b)| (i, b))
        .collect();
    boxes.sort_by_key(|(i, b)| (b.nodes.first().copied().unwrap_or(usize::MAX), *i));

    let mut in_box: BTreeSet<usize> = BTreeSet::new();
    for (i, b) in &boxes {
        let style = match b.kind {
            BoxKind::Scope => "dashed",
            BoxKind::Branch => "dotted",
        };
        writeln!(out, "  subgraph cluster_{} {{", i).unwrap();
        writeln!(out, "    style={};", style).unwrap();
        let mut nodes = b.nodes.clone();
        nodes.sort_unstable();
        for n in nodes {
            writeln!(out, "    n{};", n).unwrap();
            in_box.insert(n);
        }
        out.push_str("  }\n");
    }

    for n in &g.nodes {
        writeln!(out, "  n{} [label=\"{}\"];", n.id, n.kind.label()).unwrap();
    }

    let mut wires: Vec<String> = g
        .wires
        .iter()
        .map(|w| {
            let from = match &w.from {
                Endpoint::Node(n) => format!("n{}", n),
                Endpoint::Boundary(b) => format!("\"{}\"", b),
            };
            let to = match &w.to {
                Endpoint::Node(n) => format!("n{}", n),
                Endpoint::Boundary(b) => format!("\"{}\"", b),
            };
            format!("  {} -> {} [label=\"{}\"];\n", from, to, w.label)
        })
        .collect();
    wires.sort();
    for w in wires {
        out.push_str(&w);
    }
    out.push_str("}\n");
    out
}
