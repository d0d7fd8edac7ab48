//! Graphviz output. Palette: 1 red, 2 blue, 3 green,
//! 4 hazel, 5 black.

use std::fmt::Write as _;

use crate::coloring::TotalColoring;
use crate::graph::Graph;

/// Graphviz color for a palette index.
pub fn color_name(c: u32) -> &'static str {
    match c {
        0 => "gold",
        1 => "red",
        2 => "blue",
        3 => "green",
        4 => "#8e7618",
        5 => "black",
        6 => "violet",
        7 => "orange",
        8 => "cyan",
        9 => "magenta",
        _ => "gray",
    }
}

/// An undirected DOT graph. With a coloring, vertices are filled and edges
/// drawn in their colors and each element is labeled with its color index.
pub fn to_dot(g: &Graph, tc: Option<&TotalColoring>, name: &str) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    out.push_str("  node [shape=circle, style=filled, fillcolor=white, fontsize=10];\n");
    for v in 0..g.n() {
        match tc.and_then(|t| t.vertex_colors[v]) {
            Some(c) => {
                let font = if matches!(c, 2 | 5) { "white" } else { "black" };
                let _ = writeln!(
                    out,
                    "  \"{}\" [fillcolor=\"{}\", fontcolor={font}, xlabel=\"{c}\"];",
                    g.name(v),
                    color_name(c)
                );
            }
            None => {
                let _ = writeln!(out, "  \"{}\";", g.name(v));
            }
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        match tc.and_then(|t| t.edge_colors[id]) {
            Some(c) => {
                let _ = writeln!(
                    out,
                    "  \"{}\" -- \"{}\" [color=\"{}\", label=\"{c}\"];",
                    g.name(e.u),
                    g.name(e.v),
                    color_name(c)
                );
            }
            None => {
                let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.name(e.u), g.name(e.v));
            }
        }
    }
    out.push_str("}\n");
    out
}
