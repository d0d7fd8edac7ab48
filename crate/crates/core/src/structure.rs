//! Structural consequences of an efficient coloring: the class-removal
//! decomposition, colored 6-cycle types, toroidal assemblies and the apex
//! supergraph that admits no efficient completion.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::builder::PermGraph;
use crate::coloring::{verify_coloring, Mode, TotalColoring};
use crate::domination::verify_efficient_domination;
use crate::error::{Error, Result};
use crate::graph::{Graph, Regularity, Subgraph, UNREACHABLE};
use crate::report::Witnesses;

#[derive(Clone, Debug, Serialize)]
pub struct ComponentAudit {
    pub vertices: usize,
    pub edges: usize,
    pub regularity: Regularity,
    /// Colors used on the component's vertices and edges.
    pub colors: Vec<u32>,
    pub total_proper: bool,
    /// Efficient with respect to the colors it uses.
    pub efficient: bool,
    pub isomorphic_to_reference: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiColorReport {
    pub color: u32,
    pub class_size: usize,
    /// `G - W_i`
    pub remainder_connected: bool,
    pub remainder_regularity: Regularity,
    /// Edges of color `i` in `G - W_i`.
    pub removed_edges: usize,
    /// Components of `G - W_i - E_i`.
    pub components: Vec<ComponentAudit>,
    /// `G - E_i`
    pub cut_regularity: Regularity,
    pub high_side_is_class: bool,
    pub class_independent: bool,
    /// An odd closed walk in `G - E_i`, as vertex names.
    pub odd_walk: Option<Vec<String>>,
    pub pass: bool,
    pub witnesses: Witnesses,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiReport {
    pub h: usize,
    pub per_color: Vec<ChiColorReport>,
    pub pass: bool,
}

impl ChiReport {
    pub fn component_counts(&self) -> Vec<usize> {
        self.per_color.iter().map(|r| r.components.len()).collect()
    }
}

fn compose(parent: &Subgraph, child: Subgraph) -> Subgraph {
    Subgraph {
        vertex_origin: child.vertex_origin.iter().map(|&v| parent.vertex_origin[v]).collect(),
        edge_origin: child.edge_origin.iter().map(|&e| parent.edge_origin[e]).collect(),
        graph: child.graph,
    }
}

/// Checks, for every color class `W_i` of an efficient coloring of a
/// connected `(h-2)`-regular graph on `h - 1` colors, that `G - W_i` is
/// connected and `(h-3)`-regular, that the components of `G - W_i - E_i`
/// are `(h-4)`-regular and totally colored by `h - 3` colors, and that
/// `G - E_i` is `(h-2, h-3)`-biregular with `W_i` as its high side and an
/// odd closed walk. Components are compared with `reference` when given.
pub fn theorem_chi_suite(g: &Graph, tc: &TotalColoring, reference: Option<&Graph>) -> Result<ChiReport> {
    let Regularity::Regular(degree) = g.regularity() else {
        return Err(Error::precondition("graph is not regular"));
    };
    let h = degree + 2;
    if h % 2 != 0 || h <= 4 {
        return Err(Error::precondition(format!("need an even h > 4, degree {degree} gives h = {h}")));
    }
    if !g.is_connected() {
        return Err(Error::precondition("graph is disconnected"));
    }
    if tc.palette.len() != h - 1 {
        return Err(Error::precondition(format!(
            "palette has {} colors, expected {}",
            tc.palette.len(),
            h - 1
        )));
    }
    if !verify_coloring(g, tc, Mode::Efficient)?.pass {
        return Err(Error::precondition("coloring is not efficient"));
    }

    let per_color = tc
        .palette
        .par_iter()
        .map(|&i| chi_for_color(g, tc, h, i, reference))
        .collect::<Result<Vec<_>>>()?;
    let pass = per_color.iter().all(|r| r.pass);
    Ok(ChiReport { h, per_color, pass })
}

fn chi_for_color(g: &Graph, tc: &TotalColoring, h: usize, i: u32, reference: Option<&Graph>) -> Result<ChiColorReport> {
    let mut w = Witnesses::default();
    let class = tc.class(i);
    let in_class: BTreeSet<usize> = class.iter().copied().collect();

    let rest = g.without(&class, &[])?;
    let remainder_connected = rest.graph.is_connected();
    let remainder_regularity = rest.graph.regularity();

    let color_edges: Vec<usize> = tc
        .edge_class(i)
        .into_iter()
        .filter(|&e| !in_class.contains(&g.edge(e).u) && !in_class.contains(&g.edge(e).v))
        .collect();
    let split = g.without(&class, &color_edges)?;
    let mut components = Vec::new();
    for comp in split.graph.component_subgraphs() {
        let comp = compose(&split, comp);
        let local = tc.restrict(&comp);
        let colors = local.used_colors();
        let local = local.with_palette(colors.iter().copied());
        let total_proper = verify_coloring(&comp.graph, &local, Mode::Total)?.pass;
        let efficient = verify_coloring(&comp.graph, &local, Mode::Efficient)?.pass;
        let isomorphic_to_reference = reference.map(|r| comp.graph.is_isomorphic(r)).transpose()?;
        components.push(ComponentAudit {
            vertices: comp.graph.n(),
            edges: comp.graph.m(),
            regularity: comp.graph.regularity(),
            colors,
            total_proper,
            efficient,
            isomorphic_to_reference,
        });
    }

    let cut = g.without(&[], &color_edges)?;
    let cut_regularity = cut.graph.regularity();
    let high: BTreeSet<usize> = (0..g.n()).filter(|&v| cut.graph.degree(v) == h - 2).collect();
    let high_side_is_class = high == in_class;
    let class_independent = class
        .iter()
        .all(|&a| class.iter().all(|&b| !g.adjacent(a, b)));
    let odd_walk = cut.graph.odd_cycle().filter(|c| c.len() % 2 == 1 && cut.graph.is_closed_walk(c));

    let remainder_ok = remainder_connected && remainder_regularity == Regularity::Regular(h - 3);
    if !remainder_ok {
        w.push(format!("G - W_{i} is {remainder_regularity:?}, connected: {remainder_connected}"));
    }
    let components_ok = !components.is_empty()
        && components.iter().all(|c| {
            c.regularity == Regularity::Regular(h - 4)
                && c.total_proper
                && c.colors.len() == h - 3
                && !c.colors.contains(&i)
                && c.isomorphic_to_reference != Some(false)
        });
    if !components_ok {
        w.push(format!("a component of G - W_{i} - E_{i} fails its audit"));
    }
    let cut_ok = cut_regularity == Regularity::Biregular(h - 2, h - 3)
        && high_side_is_class
        && class_independent
        && odd_walk.is_some();
    if !cut_ok {
        w.push(format!("G - E_{i} is {cut_regularity:?}, odd walk found: {}", odd_walk.is_some()));
    }
    Ok(ChiColorReport {
        color: i,
        class_size: class.len(),
        remainder_connected,
        remainder_regularity,
        removed_edges: color_edges.len(),
        components,
        cut_regularity,
        high_side_is_class,
        class_independent,
        odd_walk: odd_walk.map(|c| c.iter().map(|&v| g.name(v).to_string()).collect()),
        pass: remainder_ok && components_ok && cut_ok,
        witnesses: w,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "type", content = "colors")]
pub enum CycleKind {
    /// Opposite edges share colors; the three colors, sorted.
    Type1([u32; 3]),
    /// Two alternating colors, sorted.
    Type2([u32; 2]),
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct SixCycleClass {
    pub cycle: [usize; 6],
    /// `edge_colors[t]` colors the edge from `cycle[t]` to `cycle[t + 1]`.
    pub edge_colors: [u32; 6],
    pub kind: CycleKind,
}

impl SixCycleClass {
    pub fn has_color(&self, c: u32) -> bool {
        self.edge_colors.contains(&c)
    }
}

pub fn classify_cycle(colors: [u32; 6]) -> CycleKind {
    let [a, b, c, d, e, f] = colors;
    if a == d && b == e && c == f && a != b && b != c && a != c {
        let mut s = [a, b, c];
        s.sort_unstable();
        CycleKind::Type1(s)
    } else if a == c && c == e && b == d && d == f && a != b {
        CycleKind::Type2([a.min(b), a.max(b)])
    } else {
        CycleKind::Other
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleCensus {
    pub cycles: Vec<SixCycleClass>,
    pub type1: usize,
    pub type2: usize,
    pub other: usize,
    pub by_kind: BTreeMap<String, usize>,
}

impl CycleCensus {
    pub fn find(&self, kind: CycleKind) -> impl Iterator<Item = &SixCycleClass> {
        self.cycles.iter().filter(move |c| c.kind == kind)
    }
}

/// Classifies every 6-cycle of `g` by its edge colors.
pub fn classify_six_cycles(g: &Graph, tc: &TotalColoring) -> Result<CycleCensus> {
    let cycles: Vec<SixCycleClass> = g
        .six_cycles()?
        .into_iter()
        .map(|cycle| {
            let mut edge_colors = [0u32; 6];
            for t in 0..6 {
                let e = g.edge_between(cycle[t], cycle[(t + 1) % 6]).expect("cycle edge");
                edge_colors[t] = tc.edge(e);
            }
            SixCycleClass {
                cycle,
                edge_colors,
                kind: classify_cycle(edge_colors),
            }
        })
        .collect();
    let mut by_kind = BTreeMap::new();
    let (mut type1, mut type2, mut other) = (0, 0, 0);
    for c in &cycles {
        let key = match c.kind {
            CycleKind::Type1(s) => {
                type1 += 1;
                format!("C({},{},{})", s[0], s[1], s[2])
            }
            CycleKind::Type2(s) => {
                type2 += 1;
                format!("C({},{})", s[0], s[1])
            }
            CycleKind::Other => {
                other += 1;
                "other".to_string()
            }
        };
        *by_kind.entry(key).or_insert(0) += 1;
    }
    Ok(CycleCensus {
        cycles,
        type1,
        type2,
        other,
        by_kind,
    })
}

/// The edges of color `color` with exactly one endpoint on `cycle`, as
/// `(cycle vertex, edge id, outside endpoint)`.
pub fn departing_edges(g: &Graph, tc: &TotalColoring, cycle: &[usize], color: u32) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &v in cycle {
        for &(u, e) in g.incident(v) {
            if tc.edge(e) == color && !cycle.contains(&u) {
                out.push((v, e, u));
            }
        }
    }
    out
}

/// Distances among the landing vertices of one cycle, listed in cycle order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LandingDistances {
    pub min: usize,
    /// Landing vertices of consecutive cycle vertices are at distance 3.
    pub consecutive_three: bool,
    pub histogram: BTreeMap<usize, usize>,
}

impl LandingDistances {
    pub fn new(g: &Graph, landing: &[usize]) -> Self {
        let mut histogram = BTreeMap::new();
        let mut consecutive_three = true;
        let t = landing.len();
        for (a, &x) in landing.iter().enumerate() {
            let dist = g.bfs(x);
            for &y in &landing[a + 1..] {
                *histogram.entry(dist[y]).or_insert(0) += 1;
            }
            if t > 1 && dist[landing[(a + 1) % t]] != 3 {
                consecutive_three = false;
            }
        }
        LandingDistances {
            min: histogram.keys().next().copied().unwrap_or(UNREACHABLE),
            consecutive_three,
            histogram,
        }
    }

    pub fn ok(&self) -> bool {
        self.min == 3 && self.consecutive_three
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DepartureAudit {
    pub cycles_checked: usize,
    /// Every leftover color gives six departing edges, one per cycle vertex.
    pub six_per_color: bool,
    /// The six landing vertices share one vertex color.
    pub landing_monochromatic: bool,
    /// ... are at least 3 apart, with consecutive ones exactly 3 apart.
    pub landing_distance_three: bool,
    /// Pairwise landing distances over all cycles and colors.
    pub distance_histogram: BTreeMap<usize, usize>,
    /// `(departing color, landing color)` pairs seen, with counts.
    pub color_pairs: BTreeMap<String, usize>,
    pub pass: bool,
    pub witnesses: Witnesses,
}

/// For every type-1 cycle and every color missing from it, checks the six
/// departing edges of that color and where they land.
pub fn audit_type1_departures(g: &Graph, tc: &TotalColoring, census: &CycleCensus) -> DepartureAudit {
    let mut w = Witnesses::default();
    let mut color_pairs = BTreeMap::new();
    let mut distance_histogram = BTreeMap::new();
    let (mut six, mut mono, mut three) = (true, true, true);
    let mut checked = 0;
    for c in &census.cycles {
        let CycleKind::Type1(colors) = c.kind else {
            continue;
        };
        checked += 1;
        for &d in tc.palette.iter().filter(|d| !colors.contains(d)) {
            let dep = departing_edges(g, tc, &c.cycle, d);
            let starts: BTreeSet<usize> = dep.iter().map(|&(v, _, _)| v).collect();
            if dep.len() != 6 || starts.len() != 6 {
                six = false;
                w.push(format!("{} edges of color {d} leave {:?}", dep.len(), names(g, &c.cycle)));
                continue;
            }
            let landing: Vec<usize> = dep.iter().map(|&(_, _, u)| u).collect();
            let landing_colors: BTreeSet<u32> = landing.iter().map(|&u| tc.vertex(u)).collect();
            if landing_colors.len() != 1 {
                mono = false;
                w.push(format!("landing vertices of color-{d} edges have colors {landing_colors:?}"));
            } else {
                let lc = landing_colors.iter().next().unwrap();
                *color_pairs.entry(format!("{d}->{lc}")).or_insert(0) += 1;
            }
            let dist = LandingDistances::new(g, &landing);
            for (&k, &v) in &dist.histogram {
                *distance_histogram.entry(k).or_insert(0) += v;
            }
            if !dist.ok() {
                three = false;
                w.push(format!("landing vertices {:?} have distances {:?}", names(g, &landing), dist.histogram));
            }
        }
    }
    DepartureAudit {
        cycles_checked: checked,
        six_per_color: six,
        landing_monochromatic: mono,
        landing_distance_three: three,
        distance_histogram,
        color_pairs,
        pass: six && mono && three && checked > 0,
        witnesses: w,
    }
}

fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Type1Audit {
    pub cycle: Vec<String>,
    pub colors: [u32; 3],
    pub leftover: u32,
    /// Landing vertices of the leftover-color edges, in cycle order.
    pub landing: Vec<String>,
    pub landing_in_class: bool,
    pub distances: LandingDistances,
}

#[derive(Clone, Debug, Serialize)]
pub struct ToroidalReport {
    pub d1: u32,
    pub quad: [u32; 4],
    pub type2_cycles: usize,
    /// Vertices and regularity of the union of the type-2 cycles.
    pub union_vertices: usize,
    pub union_regularity: Regularity,
    /// The assembly: the type-2 union plus the leftover-color edges leaving
    /// the type-1 cycles it contains.
    #[serde(skip)]
    pub assembly: Subgraph,
    pub vertices: usize,
    pub edges: usize,
    /// (a) type-1 cycles on colors from the quadruple inside the union;
    /// they must be pairwise vertex-disjoint.
    pub type1_cycles: Vec<Type1Audit>,
    pub type1_disjoint: bool,
    /// (b) each of them sends six leftover-color edges into the class of `d1`.
    pub departures_ok: bool,
    /// (c) the vertices outside the union are exactly the class of `d1`,
    /// all of the form `v_0 = v_{d1}`, and each is pendant to every type-1
    /// cycle it touches: one edge per cycle.
    pub class_is_complement: bool,
    pub pendant_per_cycle: bool,
    /// Assembly degrees of the class vertices, with counts.
    pub class_degrees: BTreeMap<usize, usize>,
    /// (d) landing vertices of each type-1 cycle are at least 3 apart and
    /// consecutive ones exactly 3 apart.
    pub landing_distance_three: bool,
    /// Smallest distance between two contained type-1 cycles and whether
    /// an edge of color `d1` realizes it.
    pub min_cycle_distance: Option<usize>,
    pub min_distance_by_d1_edge: bool,
    pub pass: bool,
    pub witnesses: Witnesses,
}

/// Builds `T_{d1}(quad)` from the type-2 cycles `C(d1, d)`, `d` in `quad`,
/// and audits it.
pub fn toroidal_assembly(g: &PermGraph, tc: &TotalColoring, d1: u32, quad: [u32; 4]) -> Result<ToroidalReport> {
    if g.params.k < 3 || g.params.ell != 2 {
        return Err(Error::precondition("toroidal assemblies need k >= 3 and l = 2"));
    }
    let mut all = quad.to_vec();
    all.push(d1);
    let distinct: BTreeSet<u32> = all.iter().copied().collect();
    if distinct.len() != 5 || all.iter().any(|c| tc.palette.binary_search(c).is_err()) {
        return Err(Error::malformed(format!(
            "colors {d1} and {quad:?} must be five distinct palette colors"
        )));
    }
    let graph = &g.graph;
    let census = classify_six_cycles(graph, tc)?;
    let mut w = Witnesses::default();
    let cycle_edges = |c: &SixCycleClass| -> Vec<usize> {
        (0..6)
            .map(|t| graph.edge_between(c.cycle[t], c.cycle[(t + 1) % 6]).unwrap())
            .collect()
    };

    let mut edge_set = BTreeSet::new();
    let mut type2_cycles = 0;
    for c in &census.cycles {
        if let CycleKind::Type2(pair) = c.kind {
            if pair.contains(&d1) && quad.iter().any(|d| pair.contains(d)) {
                type2_cycles += 1;
                edge_set.extend(cycle_edges(c));
            }
        }
    }
    let union = edge_subgraph(graph, &edge_set.iter().copied().collect::<Vec<_>>())?;
    let in_union: BTreeSet<usize> = union.vertex_origin.iter().copied().collect();
    let inner: Vec<&SixCycleClass> = census
        .cycles
        .iter()
        .filter(|c| matches!(c.kind, CycleKind::Type1(s) if s.iter().all(|x| quad.contains(x))))
        .filter(|c| cycle_edges(c).iter().all(|e| edge_set.contains(e)))
        .collect();

    let mut seen = BTreeSet::new();
    let mut type1_disjoint = true;
    let mut departures_ok = !inner.is_empty();
    let mut landing_distance_three = true;
    let mut type1_cycles = Vec::new();
    // class vertex -> number of edges to each cycle it touches
    let mut attachments: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for (ci, c) in inner.iter().enumerate() {
        let CycleKind::Type1(colors) = c.kind else { unreachable!() };
        for v in c.cycle {
            if !seen.insert(v) {
                type1_disjoint = false;
                w.push(format!("type-1 cycles share {}", g.vertex(v)));
            }
        }
        let leftover = *quad.iter().find(|d| !colors.contains(d)).unwrap();
        let dep = departing_edges(graph, tc, &c.cycle, leftover);
        let landing: Vec<usize> = dep.iter().map(|&(_, _, u)| u).collect();
        let landing_in_class = dep.len() == 6 && landing.iter().all(|&u| tc.vertex(u) == d1);
        let distances = LandingDistances::new(graph, &landing);
        if !landing_in_class {
            departures_ok = false;
            w.push(format!("departures of {:?} miss the class of {d1}", names(graph, &c.cycle)));
        }
        if !distances.ok() {
            landing_distance_three = false;
            w.push(format!("landing distances {:?} around {:?}", distances.histogram, names(graph, &c.cycle)));
        }
        for &(_, e, u) in &dep {
            edge_set.insert(e);
            *attachments.entry(u).or_default().entry(ci).or_insert(0) += 1;
        }
        type1_cycles.push(Type1Audit {
            cycle: names(graph, &c.cycle),
            colors,
            leftover,
            landing: names(graph, &landing),
            landing_in_class,
            distances,
        });
    }

    let edges: Vec<usize> = edge_set.into_iter().collect();
    let assembly = edge_subgraph(graph, &edges)?;
    let class: BTreeSet<usize> = tc.class(d1).into_iter().collect();
    let outside: BTreeSet<usize> = assembly
        .vertex_origin
        .iter()
        .copied()
        .filter(|v| !in_union.contains(v))
        .collect();
    let shape_ok = outside.iter().all(|&v| {
        let e = g.vertex(v).entries();
        e[0] == e[d1 as usize]
    });
    let class_is_complement = outside == class && in_union.len() + class.len() == g.n() && shape_ok;
    if !class_is_complement {
        w.push(format!(
            "{} vertices outside the union, class of {d1} has {}",
            outside.len(),
            class.len()
        ));
    }
    let pendant_per_cycle = attachments.values().all(|per| per.values().all(|&m| m == 1));
    let mut class_degrees = BTreeMap::new();
    for (v, &orig) in assembly.vertex_origin.iter().enumerate() {
        if class.contains(&orig) {
            *class_degrees.entry(assembly.graph.degree(v)).or_insert(0) += 1;
        }
    }

    let (min_cycle_distance, min_distance_by_d1_edge) = type1_spacing(graph, tc, &inner, d1);
    let pass = type1_disjoint && departures_ok && class_is_complement && pendant_per_cycle && landing_distance_three;
    Ok(ToroidalReport {
        d1,
        quad,
        type2_cycles,
        union_vertices: union.graph.n(),
        union_regularity: union.graph.regularity(),
        vertices: assembly.graph.n(),
        edges: assembly.graph.m(),
        assembly,
        type1_cycles,
        type1_disjoint,
        departures_ok,
        class_is_complement,
        pendant_per_cycle,
        class_degrees,
        landing_distance_three,
        min_cycle_distance,
        min_distance_by_d1_edge,
        pass,
        witnesses: w,
    })
}

/// Smallest distance between two of the cycles, and whether some edge of
/// color `d1` joins two of them when that distance is 1.
fn type1_spacing(g: &Graph, tc: &TotalColoring, cycles: &[&SixCycleClass], d1: u32) -> (Option<usize>, bool) {
    let mut owner = vec![UNREACHABLE; g.n()];
    for (i, c) in cycles.iter().enumerate() {
        for v in c.cycle {
            owner[v] = i;
        }
    }
    let mut best: Option<usize> = None;
    let mut by_d1 = false;
    for (i, c) in cycles.iter().enumerate() {
        let mut dist = vec![UNREACHABLE; g.n()];
        let mut queue = std::collections::VecDeque::new();
        for v in c.cycle {
            dist[v] = 0;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            if owner[u] != UNREACHABLE && owner[u] != i {
                let d = dist[u];
                if best.is_none_or(|b| d < b) {
                    best = Some(d);
                }
                continue;
            }
            if best.is_some_and(|b| dist[u] >= b) {
                continue;
            }
            for x in g.neighbors(u) {
                if dist[x] == UNREACHABLE {
                    dist[x] = dist[u] + 1;
                    queue.push_back(x);
                }
            }
        }
        for v in c.cycle {
            for &(u, e) in g.incident(v) {
                if owner[u] != UNREACHABLE && owner[u] != i && tc.edge(e) == d1 {
                    by_d1 = true;
                }
            }
        }
    }
    (best, by_d1 && best == Some(1))
}

/// The subgraph formed by the given edges and their endpoints.
pub fn edge_subgraph(g: &Graph, edges: &[usize]) -> Result<Subgraph> {
    let vertices: BTreeSet<usize> = edges.iter().flat_map(|&e| [g.edge(e).u, g.edge(e).v]).collect();
    let vertices: Vec<usize> = vertices.into_iter().collect();
    let keep: BTreeSet<usize> = edges.iter().copied().collect();
    let induced = g.induced(&vertices)?;
    let drop: Vec<usize> = (0..induced.graph.m())
        .filter(|&e| !keep.contains(&induced.edge_origin[e]))
        .collect();
    let trimmed = induced.graph.without(&[], &drop)?;
    Ok(compose(&induced, trimmed))
}

/// Largest number of apex edges searched exhaustively.
pub const AUGMENT_SEARCH_CAP: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub struct AugmentReport {
    #[serde(skip)]
    pub graph: Graph,
    pub apexes: Vec<String>,
    pub apex_color: u32,
    /// Original color classes plus the class of the apexes each pass as
    /// perfect codes of the supergraph and partition its vertices.
    pub partition_ok: bool,
    /// Colorings of the apex edges from the palette plus the apex color
    /// that complete the coloring to a total one.
    pub total_extensions: usize,
    pub efficient_extensions: usize,
    pub pass: bool,
    pub witnesses: Witnesses,
}

/// Adds one apex per given class, adjacent to every vertex of it, colors the
/// apexes with a new color and searches all colorings of the new edges.
pub fn augment_supergraph(g: &Graph, tc: &TotalColoring, classes: &[Vec<usize>]) -> Result<AugmentReport> {
    let apex_edges: usize = classes.iter().map(Vec::len).sum();
    if apex_edges > AUGMENT_SEARCH_CAP {
        return Err(Error::InstanceTooLarge {
            what: "apex-edge search".into(),
            count: apex_edges as u128,
            cap: AUGMENT_SEARCH_CAP as u128,
        });
    }
    let apex_color = tc.palette.last().map_or(1, |c| c + 1);
    let n = g.n();
    let mut names: Vec<String> = g.names().to_vec();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut apexes = Vec::new();
    for (a, class) in classes.iter().enumerate() {
        names.push(format!("apex{}", a + 1));
        apexes.push(format!("apex{}", a + 1));
        edges.extend(class.iter().map(|&v| (v, n + a)));
    }
    let sup = Graph::from_edges(names, edges)?;

    let mut vertex_colors = tc.vertex_colors.clone();
    vertex_colors.extend(std::iter::repeat_n(Some(apex_color), classes.len()));
    let mut edge_colors = vec![None; sup.m()];
    let mut open = Vec::new();
    for (id, e) in sup.edges().iter().enumerate() {
        if e.u < n && e.v < n {
            edge_colors[id] = tc.edge_colors[g.edge_between(e.u, e.v).expect("original edge")];
        } else {
            open.push(id);
        }
    }
    let mut palette = tc.palette.clone();
    palette.push(apex_color);
    let base = TotalColoring::new(vertex_colors, edge_colors, palette.iter().copied());

    let mut w = Witnesses::default();
    let mut partition_ok = true;
    let mut class_sets: Vec<Vec<usize>> = tc.palette.iter().map(|&c| tc.class(c)).collect();
    class_sets.push((n..sup.n()).collect());
    for set in class_sets.iter().filter(|s| !s.is_empty()) {
        let cert = verify_efficient_domination(&sup, set, 1)?;
        if !cert.pass {
            partition_ok = false;
            w.push(format!("class {:?} is not a perfect code of the supergraph", names_of(&sup, set)));
        }
    }

    let mut search = Extension {
        g: &sup,
        tc: base,
        open: &open,
        palette: &palette,
        total: 0,
        efficient: 0,
    };
    search.descend(0)?;
    let (total_extensions, efficient_extensions) = (search.total, search.efficient);
    let no_completion = classes.iter().all(Vec::is_empty) || efficient_extensions == 0;
    Ok(AugmentReport {
        graph: sup,
        apexes,
        apex_color,
        partition_ok,
        total_extensions,
        efficient_extensions,
        pass: partition_ok && no_completion,
        witnesses: w,
    })
}

fn names_of(g: &Graph, vs: &[usize]) -> Vec<String> {
    names(g, vs)
}

struct Extension<'a> {
    g: &'a Graph,
    tc: TotalColoring,
    open: &'a [usize],
    palette: &'a [u32],
    total: usize,
    efficient: usize,
}

impl Extension<'_> {
    fn descend(&mut self, t: usize) -> Result<()> {
        if t == self.open.len() {
            if verify_coloring(self.g, &self.tc, Mode::Total)?.pass {
                self.total += 1;
                if verify_coloring(self.g, &self.tc, Mode::Efficient)?.pass {
                    self.efficient += 1;
                }
            }
            return Ok(());
        }
        let id = self.open[t];
        let e = self.g.edge(id).clone();
        for &c in self.palette {
            let clash = [e.u, e.v].iter().any(|&x| {
                self.tc.vertex_colors[x] == Some(c)
                    || self.g.incident(x).iter().any(|&(_, f)| f != id && self.tc.edge_colors[f] == Some(c))
            });
            if clash {
                continue;
            }
            self.tc.edge_colors[id] = Some(c);
            self.descend(t + 1)?;
        }
        self.tc.edge_colors[id] = None;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::star_graph;
    use crate::coloring::sigma_total_coloring;
    use crate::domination::{se_set, sigma_set};
    use crate::graph::hypercube;

    #[test]
    fn cycle_kinds() {
        assert_eq!(classify_cycle([2, 1, 3, 2, 1, 3]), CycleKind::Type1([1, 2, 3]));
        assert_eq!(classify_cycle([5, 2, 5, 2, 5, 2]), CycleKind::Type2([2, 5]));
        assert_eq!(classify_cycle([1, 2, 1, 2, 1, 3]), CycleKind::Other);
        assert_eq!(classify_cycle([1, 1, 2, 1, 1, 2]), CycleKind::Other);
    }

    #[test]
    fn hexagon_is_one_type1_cycle() {
        let g = star_graph(2, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let census = classify_six_cycles(&g.graph, &tc).unwrap();
        assert_eq!(census.cycles.len(), 1);
        assert_eq!(census.cycles[0].edge_colors, [2, 1, 3, 2, 1, 3]);
        assert_eq!(census.type1, 1);
    }

    #[test]
    fn st32_cycles_classify() {
        let g = star_graph(3, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let census = classify_six_cycles(&g.graph, &tc).unwrap();
        assert_eq!(census.other, 0);
        assert!(census.find(CycleKind::Type1([2, 3, 4])).next().is_some());
        let audit = audit_type1_departures(&g.graph, &tc, &census);
        assert!(audit.pass, "{:?}", audit.witnesses);
    }

    #[test]
    fn chi_on_st32() {
        let g = star_graph(3, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let reference = star_graph(2, 2).unwrap();
        let report = theorem_chi_suite(&g.graph, &tc, Some(&reference.graph)).unwrap();
        assert_eq!(report.h, 6);
        assert!(report.pass, "{:?}", report.per_color.iter().map(|r| &r.witnesses).collect::<Vec<_>>());
        assert_eq!(report.component_counts(), vec![12; 5]);
        for r in &report.per_color {
            assert_eq!(r.class_size, 18);
            assert_eq!(r.cut_regularity, Regularity::Biregular(4, 3));
        }
    }

    #[test]
    fn chi_precondition_on_hexagon() {
        let g = star_graph(2, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        assert!(matches!(theorem_chi_suite(&g.graph, &tc, None), Err(Error::Precondition(_))));
    }

    #[test]
    fn toroidal_on_st32() {
        let g = star_graph(3, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let r = toroidal_assembly(&g, &tc, 5, [1, 2, 3, 4]).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
        assert!(r.type1_cycles.iter().any(|c| c.colors == [2, 3, 4]));
        assert_eq!(r.type1_cycles.len(), 12);
        assert_eq!(r.union_regularity, Regularity::Regular(3));
        assert_eq!(r.class_degrees, BTreeMap::from([(4, 18)]));
        assert_eq!(r.min_cycle_distance, Some(1));
        assert!(r.min_distance_by_d1_edge);
        assert!(toroidal_assembly(&g, &tc, 5, [1, 2, 3, 5]).is_err());
    }

    #[test]
    fn apexes_make_a_cube() {
        let g = star_graph(2, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let classes = vec![se_set(&g, 0).unwrap(), se_set(&g, 1).unwrap()];
        let r = augment_supergraph(&g.graph, &tc, &classes).unwrap();
        assert!(r.graph.is_isomorphic(&hypercube(3)).unwrap());
        assert!(r.partition_ok);
        assert_eq!(r.efficient_extensions, 0);
        assert!(r.pass);

        let none = augment_supergraph(&g.graph, &tc, &[]).unwrap();
        assert_eq!(none.graph.m(), 6);
        assert_eq!(none.total_extensions, 1);
        assert!(none.pass);
        let _ = sigma_set(&g, 1).unwrap();
    }
}
