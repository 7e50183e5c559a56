//! Graphviz DOT rendering of morphisms. Inputs are ranked on the left,
//! outputs on the right; symmetry crossings are wires, never nodes.

use crate::corel::Corelation;
use crate::cospan::Cospan;
use crate::syn::{SynMorphism, Tree};
use std::fmt::Write;

fn boundary_ranks(out: &mut String, m: usize, n: usize) {
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = write!(out, "  {{ rank=source;");
    for i in 0..m {
        let _ = write!(out, " i{i};");
    }
    let _ = writeln!(out, " }}");
    let _ = write!(out, "  {{ rank=sink;");
    for o in 0..n {
        let _ = write!(out, " o{o};");
    }
    let _ = writeln!(out, " }}");
}

/// A forest as a directed term graph: each internal vertex is a branching.
pub fn render_syn(f: &SynMorphism) -> String {
    let mut out = String::from("digraph syn {\n");
    boundary_ranks(&mut out, f.m, f.n);
    let _ = writeln!(out, "  node [shape=point]; edge [arrowsize=0.5];");
    for i in 0..f.m {
        let _ = writeln!(out, "  i{i} [shape=circle, label=\"i{i}\"];");
    }
    for o in 0..f.n {
        let _ = writeln!(out, "  o{o} [shape=circle, label=\"o{o}\"];");
    }
    let mut next_vertex = 0usize;
    fn emit(t: &Tree, parent: &str, next: &mut usize, out: &mut String) {
        match t {
            Tree::Leaf(k) => {
                let _ = writeln!(out, "  {parent} -> o{k};");
            }
            Tree::Node(l, r) => {
                let v = format!("v{}", *next);
                *next += 1;
                let _ = writeln!(out, "  {parent} -> {v};");
                emit(l, &v, next, out);
                emit(r, &v, next, out);
            }
        }
    }
    for (i, t) in f.trees.iter().enumerate() {
        emit(t, &format!("i{i}"), &mut next_vertex, &mut out);
    }
    out.push_str("}\n");
    out
}

/// A corelation as an undirected graph: a spanning path through each
/// class connects its boundary elements.
pub fn render_corel(r: &Corelation) -> String {
    let mut out = String::from("graph corel {\n");
    boundary_ranks(&mut out, r.m, r.n);
    for (ins, outs) in r.boundary_classes() {
        let names: Vec<String> = ins
            .iter()
            .map(|i| format!("i{i}"))
            .chain(outs.iter().map(|o| format!("o{o}")))
            .collect();
        match names.as_slice() {
            [] => {}
            [single] => {
                let _ = writeln!(out, "  {single};");
            }
            _ => {
                for pair in names.windows(2) {
                    let _ = writeln!(out, "  {} -- {};", pair[0], pair[1]);
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// A cospan as a bipartite-boundary graph with the apex in the middle.
pub fn render_cospan(c: &Cospan) -> String {
    let mut out = String::from("graph cospan {\n");
    boundary_ranks(&mut out, c.m, c.n);
    let _ = write!(out, "  {{ rank=same;");
    for x in 0..c.apex {
        let _ = write!(out, " n{x};");
    }
    let _ = writeln!(out, " }}");
    for x in 0..c.apex {
        let _ = writeln!(out, "  n{x} [shape=box];");
    }
    for (i, &x) in c.a.table.iter().enumerate() {
        let _ = writeln!(out, "  i{i} -- n{x};");
    }
    for (o, &x) in c.b.table.iter().enumerate() {
        let _ = writeln!(out, "  o{o} -- n{x};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ancestry::pi;
    use crate::syn::generator;

    #[test]
    fn syn_dot_mentions_boundaries() {
        let dot = render_syn(&generator());
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("i0"));
        assert!(dot.contains("o0 [shape=circle"));
        assert!(dot.contains("-> v0"));
    }

    #[test]
    fn corel_dot_groups_single_component() {
        let dot = render_corel(&pi(&generator()));
        assert!(dot.contains("i0 -- o0"));
        assert!(dot.contains("o0 -- o1"));
        assert!(!dot.contains("n0"));
    }

    #[test]
    fn cospan_dot_has_apex_nodes() {
        let dot = render_cospan(&crate::cospan::delta_c());
        assert!(dot.contains("n0 [shape=box]"));
        assert!(dot.contains("i0 -- n0"));
        assert!(dot.contains("o1 -- n0"));
    }
}
