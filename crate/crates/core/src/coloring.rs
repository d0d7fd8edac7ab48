//! Positional edge colorings, the repeat-position total coloring of
//! `ST(k, 2)`, list colorings from first-symbol positions, and a verifier
//! for proper, total and efficient colorings.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::builder::{GeneratorFamily, PermGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph, UNREACHABLE};
use crate::multiset::MString;
use crate::report::{Witnesses, DEFAULT_WITNESS_CAP};

/// Colors of vertices and edges (indexed by edge id) of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalColoring {
    pub vertex_colors: Vec<Option<u32>>,
    pub edge_colors: Vec<Option<u32>>,
    /// Sorted, without duplicates.
    pub palette: Vec<u32>,
}

impl TotalColoring {
    pub fn new(vertex_colors: Vec<Option<u32>>, edge_colors: Vec<Option<u32>>, palette: impl IntoIterator<Item = u32>) -> Self {
        let palette: BTreeSet<u32> = palette.into_iter().collect();
        TotalColoring {
            vertex_colors,
            edge_colors,
            palette: palette.into_iter().collect(),
        }
    }

    pub fn vertex(&self, v: usize) -> u32 {
        self.vertex_colors[v].expect("vertex colored")
    }

    pub fn edge(&self, e: usize) -> u32 {
        self.edge_colors[e].expect("edge colored")
    }

    /// The coloring inherited by a subgraph; the palette is kept.
    pub fn restrict(&self, sub: &Subgraph) -> TotalColoring {
        TotalColoring {
            vertex_colors: sub.vertex_origin.iter().map(|&v| self.vertex_colors[v]).collect(),
            edge_colors: sub.edge_origin.iter().map(|&e| self.edge_colors[e]).collect(),
            palette: self.palette.clone(),
        }
    }

    /// Colors actually used by some vertex or edge.
    pub fn used_colors(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self
            .vertex_colors
            .iter()
            .chain(&self.edge_colors)
            .flatten()
            .copied()
            .collect();
        set.into_iter().collect()
    }

    pub fn with_palette(mut self, palette: impl IntoIterator<Item = u32>) -> Self {
        let palette: BTreeSet<u32> = palette.into_iter().collect();
        self.palette = palette.into_iter().collect();
        self
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: u32) -> Vec<usize> {
        (0..self.vertex_colors.len())
            .filter(|&v| self.vertex_colors[v] == Some(c))
            .collect()
    }

    /// Edges of color `c`.
    pub fn edge_class(&self, c: u32) -> Vec<usize> {
        (0..self.edge_colors.len())
            .filter(|&e| self.edge_colors[e] == Some(c))
            .collect()
    }

    /// Text form: `V u color` per vertex, then `E u v color` per edge.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for v in 0..g.n() {
            if let Some(c) = self.vertex_colors[v] {
                let _ = writeln!(out, "V {} {c}", g.name(v));
            }
        }
        for (id, e) in g.edges().iter().enumerate() {
            if let Some(c) = self.edge_colors[id] {
                let _ = writeln!(out, "E {} {} {c}", g.name(e.u), g.name(e.v));
            }
        }
        out
    }

    /// Parses [`TotalColoring::to_text`] output against `g`. The palette is
    /// the set of colors that appear.
    pub fn from_text(g: &Graph, text: &str) -> Result<TotalColoring> {
        let index: std::collections::HashMap<&str, usize> =
            g.names().iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut vc = vec![None; g.n()];
        let mut ec = vec![None; g.m()];
        for (lineno, line) in text.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: lineno + 1, msg };
            let vertex = |s: &str| index.get(s).copied().ok_or_else(|| err(format!("unknown vertex {s:?}")));
            let color = |s: &str| s.parse::<u32>().map_err(|_| err(format!("bad color {s:?}")));
            match toks.as_slice() {
                ["V", u, c] => vc[vertex(u)?] = Some(color(c)?),
                ["E", u, v, c] => {
                    let e = g
                        .edge_between(vertex(u)?, vertex(v)?)
                        .ok_or_else(|| err(format!("no edge {u} {v}")))?;
                    ec[e] = Some(color(c)?);
                }
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        let palette: Vec<u32> = vc.iter().chain(&ec).flatten().copied().collect();
        Ok(TotalColoring::new(vc, ec, palette))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ProperEdge,
    ProperVertex,
    Total,
    Efficient,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoringReport {
    pub mode: Mode,
    pub proper_edge: bool,
    pub proper_vertex: bool,
    /// No vertex shares its color with an incident edge.
    pub no_clash: bool,
    /// Only evaluated in [`Mode::Efficient`].
    pub efficient: Option<bool>,
    pub pass: bool,
    pub witnesses: Witnesses,
}

pub fn verify_coloring(g: &Graph, tc: &TotalColoring, mode: Mode) -> Result<ColoringReport> {
    verify_coloring_capped(g, tc, mode, DEFAULT_WITNESS_CAP)
}

pub fn verify_coloring_capped(g: &Graph, tc: &TotalColoring, mode: Mode, cap: usize) -> Result<ColoringReport> {
    if tc.vertex_colors.len() != g.n() || tc.edge_colors.len() != g.m() {
        return Err(Error::malformed("coloring does not match the graph size"));
    }
    let need_vertices = mode != Mode::ProperEdge;
    let need_edges = mode != Mode::ProperVertex;
    if need_vertices {
        if let Some(v) = tc.vertex_colors.iter().position(Option::is_none) {
            return Err(Error::malformed(format!("vertex {} is uncolored", g.name(v))));
        }
    }
    if need_edges {
        if let Some(e) = tc.edge_colors.iter().position(Option::is_none) {
            let e = g.edge(e);
            return Err(Error::malformed(format!(
                "edge {}-{} is uncolored",
                g.name(e.u),
                g.name(e.v)
            )));
        }
    }

    let mut w = Witnesses::with_cap(cap);
    let in_palette = |c: u32| tc.palette.binary_search(&c).is_ok();
    let mut palette_ok = true;
    if need_vertices {
        for v in 0..g.n() {
            if !in_palette(tc.vertex(v)) {
                palette_ok = false;
                w.push(format!("vertex {} has color {} outside the palette", g.name(v), tc.vertex(v)));
            }
        }
    }
    if need_edges {
        for (id, e) in g.edges().iter().enumerate() {
            if !in_palette(tc.edge(id)) {
                palette_ok = false;
                w.push(format!(
                    "edge {}-{} has color {} outside the palette",
                    g.name(e.u),
                    g.name(e.v),
                    tc.edge(id)
                ));
            }
        }
    }

    let mut proper_edge = true;
    if need_edges {
        for v in 0..g.n() {
            let inc = g.incident(v);
            for a in 0..inc.len() {
                for b in a + 1..inc.len() {
                    if tc.edge(inc[a].1) == tc.edge(inc[b].1) {
                        proper_edge = false;
                        w.push(format!(
                            "edges {v}-{x} and {v}-{y} share color {c}",
                            v = g.name(v),
                            x = g.name(inc[a].0),
                            y = g.name(inc[b].0),
                            c = tc.edge(inc[a].1)
                        ));
                    }
                }
            }
        }
    }

    let mut proper_vertex = true;
    if need_vertices {
        for e in g.edges() {
            if tc.vertex(e.u) == tc.vertex(e.v) {
                proper_vertex = false;
                w.push(format!(
                    "adjacent vertices {} and {} share color {}",
                    g.name(e.u),
                    g.name(e.v),
                    tc.vertex(e.u)
                ));
            }
        }
    }

    let mut no_clash = true;
    if need_vertices && need_edges {
        for (id, e) in g.edges().iter().enumerate() {
            for x in [e.u, e.v] {
                if tc.vertex(x) == tc.edge(id) {
                    no_clash = false;
                    w.push(format!(
                        "vertex {} and its edge {}-{} share color {}",
                        g.name(x),
                        g.name(e.u),
                        g.name(e.v),
                        tc.edge(id)
                    ));
                }
            }
        }
    }

    let efficient = (mode == Mode::Efficient).then(|| {
        let mut ok = true;
        for v in 0..g.n() {
            let mut colors: Vec<u32> = std::iter::once(tc.vertex(v))
                .chain(g.neighbors(v).map(|u| tc.vertex(u)))
                .collect();
            colors.sort_unstable();
            if colors != tc.palette {
                ok = false;
                w.push(format!(
                    "closed neighborhood of {} has colors {:?}, palette is {:?}",
                    g.name(v),
                    colors,
                    tc.palette
                ));
            }
        }
        ok
    });

    let pass = palette_ok
        && match mode {
            Mode::ProperEdge => proper_edge,
            Mode::ProperVertex => proper_vertex,
            Mode::Total => proper_edge && proper_vertex && no_clash,
            Mode::Efficient => proper_edge && proper_vertex && no_clash && efficient == Some(true),
        };
    Ok(ColoringReport {
        mode,
        proper_edge,
        proper_vertex,
        no_clash,
        efficient,
        pass,
        witnesses: w,
    })
}

fn require_star(g: &PermGraph) -> Result<()> {
    if g.family != GeneratorFamily::Star {
        return Err(Error::precondition(format!(
            "positional coloring is only proper for the star family, got {}",
            g.family.tag()
        )));
    }
    Ok(())
}

/// Each edge gets the position it transposes.
pub fn positional_edge_coloring(g: &PermGraph) -> Result<Vec<Option<u32>>> {
    require_star(g)?;
    Ok((0..g.m()).map(|e| Some(g.position_of(e))).collect())
}

/// For `l = 2`: vertex color is the repeat position, edge color is the
/// transposed position, palette `{1, .., 2k-1}`.
pub fn sigma_total_coloring(g: &PermGraph) -> Result<TotalColoring> {
    require_star(g)?;
    if g.params.ell != 2 {
        return Err(Error::precondition(format!(
            "repeat-position coloring needs l = 2, got l = {}",
            g.params.ell
        )));
    }
    let vertex_colors = g
        .vertices
        .iter()
        .map(|v| v.repeat_position().map(|i| Some(i as u32)))
        .collect::<Result<Vec<_>>>()?;
    let palette = 1..g.params.len() as u32;
    Ok(TotalColoring::new(vertex_colors, positional_edge_coloring(g)?, palette))
}

#[derive(Clone, Debug, Serialize)]
pub struct ChoiceReport {
    pub edges_checked: usize,
    /// Every edge joins vertices with disjoint lists.
    pub disjoint_lists: bool,
    /// The selected vertex coloring is proper.
    pub proper: bool,
    pub coloring: Vec<u32>,
    pub witnesses: Witnesses,
}

/// Checks list disjointness along every edge and colors each vertex with
/// `selector(v, L(v))`, which must pick an element of `L(v)`.
pub fn choosability_suite(
    g: &PermGraph,
    selector: impl Fn(&MString, &[usize]) -> usize,
) -> Result<ChoiceReport> {
    require_star(g)?;
    let lists = g
        .vertices
        .iter()
        .map(MString::list_assignment)
        .collect::<Result<Vec<_>>>()?;
    let mut coloring = Vec::with_capacity(g.n());
    for (v, list) in g.vertices.iter().zip(&lists) {
        let c = selector(v, list);
        if !list.contains(&c) {
            return Err(Error::OutOfRange {
                what: "selected color",
                value: c as i64,
                allowed: format!("L({v}) = {list:?}"),
            });
        }
        coloring.push(c as u32);
    }
    let mut w = Witnesses::default();
    let mut disjoint = true;
    let mut proper = true;
    for e in g.graph.edges() {
        if lists[e.u].iter().any(|j| lists[e.v].contains(j)) {
            disjoint = false;
            w.push(format!(
                "L({}) = {:?} meets L({}) = {:?}",
                g.vertex(e.u),
                lists[e.u],
                g.vertex(e.v),
                lists[e.v]
            ));
        }
        if coloring[e.u] == coloring[e.v] {
            proper = false;
            w.push(format!("{} and {} both colored {}", g.vertex(e.u), g.vertex(e.v), coloring[e.u]));
        }
    }
    Ok(ChoiceReport {
        edges_checked: g.m(),
        disjoint_lists: disjoint,
        proper,
        coloring,
        witnesses: w,
    })
}

/// Cap on the number of vertices in the distance-2 ball examined by
/// [`efficiency_obstruction_witness`].
pub const BALL_CAP: usize = 200;

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub center: String,
    pub ball_size: usize,
    /// Pairs of ball vertices at distance at most 2 in the whole graph.
    pub close_pairs: usize,
    /// Number of list selections restricted to the ball.
    pub selections: u128,
    /// A selection of the ball without a same-colored close pair, if any.
    pub counterexample: Option<Vec<(String, usize)>>,
    /// A same-colored close pair under the min-of-list selection.
    pub sample_witness: Option<(String, String, usize)>,
    /// Vertices `w` at distance 2 with `w_0 = v_0` and exactly one entry of
    /// `w_1 .. w_{l-1}` different from `v_0`.
    pub pigeonhole_vertices: usize,
    /// `(l - 1)(l - 2)`.
    pub pigeonhole_bound: usize,
    pub pass: bool,
}

/// Shows that no list coloring restricted to the distance-2 ball of `center`
/// has only efficient color classes: every selection of colors from the
/// lists of the ball leaves two same-colored vertices at distance at most 2.
/// The search is complete (backtracking over all selections).
pub fn efficiency_obstruction_witness(g: &PermGraph, center: &MString) -> Result<ObstructionReport> {
    require_star(g)?;
    if g.params.ell < 3 {
        return Err(Error::precondition("the obstruction needs l >= 3"));
    }
    let c = g.index_of(center);
    let dist = g.graph.bfs_bounded(c, 2);
    let mut ball: Vec<usize> = (0..g.n()).filter(|&v| dist[v] != UNREACHABLE).collect();
    ball.sort_by_key(|&v| (dist[v], v));
    if ball.len() > BALL_CAP {
        return Err(Error::InstanceTooLarge {
            what: "distance-2 ball".into(),
            count: ball.len() as u128,
            cap: BALL_CAP as u128,
        });
    }
    // conflicts[i] lists earlier ball members within distance 2 of ball[i]
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); ball.len()];
    let mut close_pairs = 0;
    for (i, &v) in ball.iter().enumerate() {
        let d = g.graph.bfs_bounded(v, 2);
        for (j, &u) in ball.iter().enumerate().take(i) {
            if d[u] != UNREACHABLE {
                conflicts[i].push(j);
                close_pairs += 1;
            }
        }
    }
    let lists: Vec<Vec<usize>> = ball
        .iter()
        .map(|&v| g.vertex(v).list_assignment())
        .collect::<Result<_>>()?;
    let selections = lists.iter().map(|l| l.len() as u128).product();

    let mut choice = vec![0usize; ball.len()];
    let found = select_without_conflict(&lists, &conflicts, &mut choice, 0);
    let counterexample = found.then(|| {
        ball.iter()
            .zip(&choice)
            .map(|(&v, &col)| (g.vertex(v).to_string(), col))
            .collect()
    });

    let min_choice: Vec<usize> = lists.iter().map(|l| l[0]).collect();
    let sample_witness = (0..ball.len()).find_map(|i| {
        conflicts[i]
            .iter()
            .find(|&&j| min_choice[i] == min_choice[j])
            .map(|&j| (g.vertex(ball[j]).to_string(), g.vertex(ball[i]).to_string(), min_choice[i]))
    });

    let ell = g.params.ell;
    let v0 = center.first();
    let pigeonhole_vertices = ball
        .iter()
        .filter(|&&w| dist[w] == 2)
        .filter(|&&w| {
            let e = g.vertex(w).entries();
            e[0] == v0 && e[1..ell].iter().filter(|&&s| s != v0).count() == 1
        })
        .count();
    Ok(ObstructionReport {
        center: center.to_string(),
        ball_size: ball.len(),
        close_pairs,
        selections,
        counterexample,
        sample_witness,
        pigeonhole_vertices,
        pigeonhole_bound: (ell - 1) * (ell - 2),
        pass: !found,
    })
}

fn select_without_conflict(
    lists: &[Vec<usize>],
    conflicts: &[Vec<usize>],
    choice: &mut [usize],
    i: usize,
) -> bool {
    if i == lists.len() {
        return true;
    }
    for &c in &lists[i] {
        if conflicts[i].iter().all(|&j| choice[j] != c) {
            choice[i] = c;
            if select_without_conflict(lists, conflicts, choice, i + 1) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{pancake_graph, star_graph};
    use crate::graph::complete_graph;

    #[test]
    fn positional_colors_on_small_edges() {
        let g = star_graph(2, 2).unwrap();
        let colors = positional_edge_coloring(&g).unwrap();
        let a = g.lookup("0011").unwrap();
        let e = g.graph.edge_between(a, g.lookup("1001").unwrap()).unwrap();
        assert_eq!(colors[e], Some(2));
        let e = g.graph.edge_between(a, g.lookup("1010").unwrap()).unwrap();
        assert_eq!(colors[e], Some(3));
        assert!(positional_edge_coloring(&pancake_graph(2, 2).unwrap()).is_err());
    }

    #[test]
    fn incident_colors_are_the_differing_positions() {
        let g = star_graph(3, 2).unwrap();
        let colors = positional_edge_coloring(&g).unwrap();
        for v in 0..g.n() {
            let mut inc: Vec<u32> = g.graph.incident(v).iter().map(|&(_, e)| colors[e].unwrap()).collect();
            inc.sort_unstable();
            let s = g.vertex(v).entries();
            let expected: Vec<u32> = (1..6).filter(|&j| s[j] != s[0]).map(|j| j as u32).collect();
            assert_eq!(inc, expected);
        }
        let v = g.lookup("100122").unwrap();
        let mut inc: Vec<u32> = g.graph.incident(v).iter().map(|&(_, e)| colors[e].unwrap()).collect();
        inc.sort_unstable();
        assert_eq!(inc, vec![1, 2, 4, 5]);
        let tc = TotalColoring::new(vec![Some(0); g.n()], colors, 1..6);
        assert!(verify_coloring(&g.graph, &tc, Mode::ProperEdge).unwrap().pass);
    }

    #[test]
    fn sigma_vertex_colors_on_hexagon() {
        let g = star_graph(2, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        for (name, c) in [("0011", 1), ("1100", 1), ("0101", 2), ("1010", 2), ("0110", 3), ("1001", 3)] {
            assert_eq!(tc.vertex(g.lookup(name).unwrap()), c);
        }
        assert_eq!(tc.palette, vec![1, 2, 3]);
        assert!(verify_coloring(&g.graph, &tc, Mode::Efficient).unwrap().pass);
        assert!(sigma_total_coloring(&star_graph(2, 3).unwrap()).is_err());
    }

    #[test]
    fn sigma_coloring_is_efficient_on_st32() {
        let g = star_graph(3, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let report = verify_coloring(&g.graph, &tc, Mode::Efficient).unwrap();
        assert!(report.pass, "{:?}", report.witnesses);
    }

    #[test]
    fn negative_colorings_are_caught() {
        let g = star_graph(2, 2).unwrap();
        let mut tc = sigma_total_coloring(&g).unwrap();
        let a = g.lookup("0011").unwrap();
        let b = g.lookup("1001").unwrap();
        tc.vertex_colors[b] = tc.vertex_colors[a];
        let r = verify_coloring(&g.graph, &tc, Mode::ProperVertex).unwrap();
        assert!(!r.pass);
        assert!(r.witnesses.items[0].contains("0011") && r.witnesses.items[0].contains("1001"));

        let mut tc = sigma_total_coloring(&g).unwrap();
        tc.edge_colors[0] = None;
        assert!(verify_coloring(&g.graph, &tc, Mode::Total).is_err());
        assert!(verify_coloring(&g.graph, &tc, Mode::ProperVertex).unwrap().pass);
    }

    #[test]
    fn total_but_not_efficient() {
        // K5 with vertex colors 0..4 and a proper edge coloring reusing the
        // efficient one, but with a sixth color forced into the palette
        let k5 = complete_graph(5);
        let vc = (0..5).map(Some).collect();
        let ec = k5.edges().iter().map(|e| Some(((e.u + e.v) * 3 % 5) as u32)).collect();
        let tc = TotalColoring::new(vc, ec, 0..6);
        let r = verify_coloring(&k5, &tc, Mode::Efficient).unwrap();
        assert!(r.proper_edge && r.proper_vertex && r.no_clash);
        assert_eq!(r.efficient, Some(false));
        assert!(!r.pass);
    }

    #[test]
    fn text_roundtrip() {
        let g = star_graph(2, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let text = tc.to_text(&g.graph);
        assert!(text.starts_with("V 0011 1\n"));
        assert!(text.contains("E 0011 1001 2\n"));
        let back = TotalColoring::from_text(&g.graph, &text).unwrap();
        assert_eq!(back, tc);
        assert!(TotalColoring::from_text(&g.graph, "V 0000 1\n").is_err());
    }

    #[test]
    fn choosability_on_desargues() {
        let g = star_graph(2, 3).unwrap();
        let lo = choosability_suite(&g, |_, l| l[0]).unwrap();
        let hi = choosability_suite(&g, |_, l| *l.last().unwrap()).unwrap();
        assert_eq!(lo.edges_checked, 30);
        assert!(lo.disjoint_lists && lo.proper && hi.proper);
        assert_ne!(lo.coloring, hi.coloring);
        assert!(choosability_suite(&g, |_, _| 0).is_err());

        let g2 = star_graph(3, 2).unwrap();
        let single = choosability_suite(&g2, |_, l| l[0]).unwrap();
        let sigma = sigma_total_coloring(&g2).unwrap();
        assert_eq!(single.coloring, sigma.vertex_colors.iter().map(|c| c.unwrap()).collect::<Vec<_>>());
    }

    /// Enumerates every selection of the 2-ball explicitly.
    fn brute_force_obstruction(g: &PermGraph, center: &str) -> bool {
        let c = g.lookup(center).unwrap();
        let dist = g.graph.bfs_bounded(c, 2);
        let ball: Vec<usize> = (0..g.n()).filter(|&v| dist[v] != UNREACHABLE).collect();
        let lists: Vec<Vec<usize>> = ball.iter().map(|&v| g.vertex(v).list_assignment().unwrap()).collect();
        let close: Vec<(usize, usize)> = (0..ball.len())
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .filter(|&(i, j)| g.graph.distance(ball[i], ball[j]).unwrap() <= 2)
            .collect();
        let total: usize = lists.iter().map(Vec::len).product();
        (0..total).all(|mut code| {
            let pick: Vec<usize> = lists
                .iter()
                .map(|l| {
                    let c = l[code % l.len()];
                    code /= l.len();
                    c
                })
                .collect();
            close.iter().any(|&(i, j)| pick[i] == pick[j])
        })
    }

    #[test]
    fn obstruction_matches_brute_force_on_desargues() {
        let g = star_graph(2, 3).unwrap();
        let center = MString::parse(g.params, "000111").unwrap();
        let r = efficiency_obstruction_witness(&g, &center).unwrap();
        assert!(brute_force_obstruction(&g, "000111"));
        assert!(r.pass);
        assert_eq!(r.ball_size, 10);
        assert_eq!(r.selections, 1024);
        assert!(r.sample_witness.is_some());
        assert!(r.pigeonhole_vertices >= r.pigeonhole_bound);
    }

    #[test]
    fn obstruction_for_l4() {
        let g = star_graph(2, 4).unwrap();
        let center = MString::parse(g.params, "00001111").unwrap();
        let r = efficiency_obstruction_witness(&g, &center).unwrap();
        assert!(r.pass);
        assert!(r.counterexample.is_none());
        assert!(efficiency_obstruction_witness(&star_graph(2, 2).unwrap(), &MString::parse(g.params, "00001111").unwrap()).is_err());
    }
}
