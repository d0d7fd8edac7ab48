//! Construction of the star-transposition graph `ST(k, l)`, the pancake graph
//! `PC(k, l)` and graphs generated by a custom family of generators
//! `(0 j) pi_j`, plus the plain-text edge-list format.

use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;

use crate::coloring::TotalColoring;
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};
use crate::multiset::{enumerate_vertices_capped, MString, Params, DEFAULT_VERTEX_CAP};

/// A transposition `(a b)` of string positions.
pub type Swap = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorFamily {
    /// Swap positions 0 and `j` whenever they hold different symbols.
    Star,
    /// Reverse the prefix `0..=j` whenever `v_j != v_0`.
    Pancake,
    /// Generator `j` is `(0 j)` composed with the involution `pis[j - 1]`,
    /// given as disjoint transpositions inside `1..j`. An empty `pis` marks a
    /// custom graph loaded from a file whose involutions are unknown.
    Custom(Vec<Vec<Swap>>),
}

impl GeneratorFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            GeneratorFamily::Star => "st",
            GeneratorFamily::Pancake => "pc",
            GeneratorFamily::Custom(_) => "custom",
        }
    }

    /// Custom family whose involutions are the concentric ones, so that
    /// generator `j` reverses the prefix `0..=j`.
    pub fn pancake_involutions(len: usize) -> Vec<Vec<Swap>> {
        (1..len)
            .map(|i| (1..).take_while(|&a| a < i - a).map(|a| (a, i - a)).collect())
            .collect()
    }

    /// Checks that `pis` holds one involution per position `1..len`, each a
    /// product of disjoint transpositions of `{1, .., i-1}`.
    pub fn validate(&self, len: usize) -> Result<()> {
        let GeneratorFamily::Custom(pis) = self else {
            return Ok(());
        };
        if pis.len() != len.saturating_sub(1) {
            return Err(Error::malformed(format!(
                "custom family needs {} involutions, got {}",
                len.saturating_sub(1),
                pis.len()
            )));
        }
        for (idx, pi) in pis.iter().enumerate() {
            let i = idx + 1;
            let mut touched = Vec::new();
            for &(a, b) in pi {
                if a == b || a == 0 || b == 0 || a >= i || b >= i {
                    return Err(Error::malformed(format!(
                        "pi_{i}: transposition ({a} {b}) must act on 1..{}",
                        i.saturating_sub(1)
                    )));
                }
                if touched.contains(&a) || touched.contains(&b) {
                    return Err(Error::malformed(format!("pi_{i}: transpositions are not disjoint")));
                }
                touched.extend([a, b]);
            }
        }
        Ok(())
    }

    /// Parses one involution per line: `i a,b c,d ...`. Missing lines mean
    /// the identity; `#` starts a comment.
    pub fn parse_custom(text: &str, len: usize) -> Result<Self> {
        let mut pis = vec![Vec::new(); len.saturating_sub(1)];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: String| Error::Parse {
                line: lineno + 1,
                msg,
            };
            let mut tokens = line.split_whitespace();
            let i: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err("expected generator index".into()))?;
            if i == 0 || i >= len {
                return Err(parse_err(format!("generator index {i} outside 1..{}", len - 1)));
            }
            for tok in tokens {
                let (a, b) = tok
                    .split_once(',')
                    .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                    .ok_or_else(|| parse_err(format!("bad transposition {tok:?}")))?;
                pis[i - 1].push((a, b));
            }
        }
        let family = GeneratorFamily::Custom(pis);
        family.validate(len)?;
        Ok(family)
    }

    /// Image of `v` under generator `j`, or `None` when the generator does
    /// not produce an edge. The flag is set for custom edges with
    /// `v_j == v_0`.
    pub fn apply(&self, v: &MString, j: usize) -> Option<(MString, bool)> {
        let e = v.entries();
        match self {
            GeneratorFamily::Star => (e[j] != e[0]).then(|| (v.transpose(j).expect("valid position"), false)),
            GeneratorFamily::Pancake => {
                (e[j] != e[0]).then(|| (v.prefix_reversal(j).expect("valid position"), false))
            }
            GeneratorFamily::Custom(pis) => {
                let mut w = e.to_vec();
                w.swap(0, j);
                for &(a, b) in pis.get(j - 1).map(Vec::as_slice).unwrap_or(&[]) {
                    w.swap(a, b);
                }
                (w != e).then(|| (MString::from_raw(v.params(), w), e[j] == e[0]))
            }
        }
    }
}

/// A graph whose vertices are all `l`-set permutations for some `(k, l)`, in
/// lexicographic order, so that vertex index equals rank.
#[derive(Clone, Debug)]
pub struct PermGraph {
    pub params: Params,
    pub family: GeneratorFamily,
    pub vertices: Vec<MString>,
    pub graph: Graph,
    /// Custom-family edges created although `v_j == v_0`.
    pub non_star_like: Vec<usize>,
}

impl PermGraph {
    pub fn index_of(&self, v: &MString) -> usize {
        v.rank()
    }

    /// Index of a vertex given in text form.
    pub fn lookup(&self, text: &str) -> Result<usize> {
        Ok(MString::parse(self.params, text)?.rank())
    }

    pub fn vertex(&self, i: usize) -> &MString {
        &self.vertices[i]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Vertex indices satisfying `pred`, increasing.
    pub fn select(&self, pred: impl Fn(&MString) -> bool) -> Vec<usize> {
        (0..self.n()).filter(|&i| pred(&self.vertices[i])).collect()
    }

    /// The unique label of edge `e` for star-family graphs.
    pub fn position_of(&self, e: usize) -> u32 {
        self.graph.edge(e).labels[0]
    }

    /// Serializes to the edge-list format: a header `family k l n m`, then
    /// `u v label[,label...]` per edge in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!(
            "{} {} {} {} {}\n",
            self.family.tag(),
            self.params.k,
            self.params.ell,
            self.n(),
            self.m()
        );
        for e in self.graph.edges() {
            let labels: Vec<String> = e.labels.iter().map(u32::to_string).collect();
            let _ = writeln!(
                out,
                "{} {} {}",
                self.vertices[e.u],
                self.vertices[e.v],
                labels.join(",")
            );
        }
        out
    }

    /// Parses the edge-list format. Every `l`-set permutation must appear as
    /// a vertex name, so isolated vertices are recovered from the header.
    pub fn from_edge_list(text: &str) -> Result<PermGraph> {
        let file = EdgeListFile::parse(text.as_bytes())?;
        let params = Params::new(file.k, file.ell)?;
        let family = match file.family.as_str() {
            "st" => GeneratorFamily::Star,
            "pc" => GeneratorFamily::Pancake,
            "custom" => GeneratorFamily::Custom(Vec::new()),
            other => return Err(Error::malformed(format!("unknown family {other:?}"))),
        };
        let n = params.checked_vertex_count(DEFAULT_VERTEX_CAP)?;
        if n != file.n {
            return Err(Error::malformed(format!(
                "header declares {} vertices but k={}, l={} has {n}",
                file.n, params.k, params.ell
            )));
        }
        let vertices = enumerate_vertices_capped(params, DEFAULT_VERTEX_CAP)?;
        let mut triples = Vec::new();
        for (a, b, labels) in &file.edges {
            let u = MString::parse(params, a)?.rank();
            let v = MString::parse(params, b)?.rank();
            for &l in labels {
                if l == 0 || l as usize >= params.len() {
                    return Err(Error::malformed(format!("label {l} outside 1..{}", params.len() - 1)));
                }
                triples.push((u, v, l));
            }
        }
        let names = vertices.iter().map(MString::to_string).collect();
        let graph = Graph::from_labeled_edges(names, triples)?;
        if graph.m() != file.m {
            return Err(Error::malformed(format!(
                "header declares {} edges, found {}",
                file.m,
                graph.m()
            )));
        }
        let non_star_like = flag_non_star_like(&vertices, &graph, &family);
        Ok(PermGraph {
            params,
            family,
            vertices,
            graph,
            non_star_like,
        })
    }
}

/// A parsed edge-list file with opaque vertex names.
#[derive(Clone, Debug)]
pub struct EdgeListFile {
    pub family: String,
    pub k: usize,
    pub ell: usize,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(String, String, Vec<u32>)>,
}

impl EdgeListFile {
    pub fn parse(reader: impl BufRead) -> Result<Self> {
        let mut lines = reader.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "empty file".into(),
        })?;
        let header = header?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let bad_header = || Error::Parse {
            line: 1,
            msg: format!("expected `family k l n m`, got {header:?}"),
        };
        if fields.len() != 5 {
            return Err(bad_header());
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad_header());
        let (k, ell, n, m) = (num(fields[1])?, num(fields[2])?, num(fields[3])?, num(fields[4])?);
        let mut edges = Vec::with_capacity(m);
        for (idx, line) in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            if toks.len() != 3 {
                return Err(err(format!("expected `u v labels`, got {line:?}")));
            }
            let labels = toks[2]
                .split(',')
                .map(|t| t.parse::<u32>().map_err(|_| err(format!("bad label {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            edges.push((toks[0].to_string(), toks[1].to_string(), labels));
        }
        Ok(EdgeListFile {
            family: fields[0].to_string(),
            k,
            ell,
            n,
            m,
            edges,
        })
    }

    /// Interprets the file as a plain graph; vertices are the names that
    /// occur in edges, sorted.
    pub fn to_graph(&self) -> Result<Graph> {
        let mut names: Vec<String> = self
            .edges
            .iter()
            .flat_map(|(a, b, _)| [a.clone(), b.clone()])
            .collect();
        names.sort();
        names.dedup();
        let index = |s: &String| names.binary_search(s).expect("collected above");
        let triples: Vec<(usize, usize, u32)> = self
            .edges
            .iter()
            .flat_map(|(a, b, labels)| {
                let (u, v) = (index(a), index(b));
                labels.iter().map(move |&l| (u, v, l))
            })
            .collect();
        Graph::from_labeled_edges(names.clone(), triples)
    }
}

fn flag_non_star_like(vertices: &[MString], graph: &Graph, family: &GeneratorFamily) -> Vec<usize> {
    if !matches!(family, GeneratorFamily::Custom(_)) {
        return Vec::new();
    }
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            let v = vertices[e.u].entries();
            e.labels.iter().any(|&j| v[j as usize] == v[0])
        })
        .map(|(id, _)| id)
        .collect()
}

pub fn build_graph(params: Params, family: GeneratorFamily) -> Result<PermGraph> {
    build_graph_capped(params, family, DEFAULT_VERTEX_CAP)
}

pub fn build_graph_capped(params: Params, family: GeneratorFamily, cap: u128) -> Result<PermGraph> {
    family.validate(params.len())?;
    let vertices = enumerate_vertices_capped(params, cap)?;
    let len = params.len();
    let triples: Vec<(usize, usize, u32)> = vertices
        .par_iter()
        .enumerate()
        .flat_map_iter(|(u, v)| {
            let family = &family;
            (1..len).filter_map(move |j| {
                let (w, _) = family.apply(v, j)?;
                let w = w.rank();
                (u < w).then_some((u, w, j as u32))
            })
        })
        .collect();
    let names = vertices.par_iter().map(MString::to_string).collect();
    let graph = Graph::from_labeled_edges(names, triples)?;
    let non_star_like = flag_non_star_like(&vertices, &graph, &family);
    Ok(PermGraph {
        params,
        family,
        vertices,
        graph,
        non_star_like,
    })
}

/// `ST(k, l)`.
pub fn star_graph(k: usize, ell: usize) -> Result<PermGraph> {
    build_graph(Params::new(k, ell)?, GeneratorFamily::Star)
}

/// `PC(k, l)`.
pub fn pancake_graph(k: usize, ell: usize) -> Result<PermGraph> {
    build_graph(Params::new(k, ell)?, GeneratorFamily::Pancake)
}

/// `K_{2n+1}` on `0..=2n` with its efficient total coloring: vertex `j` gets
/// color `j` and edge `{j - i, j + i}` (mod `2n + 1`, `0 < i <= n`) gets
/// color `j`.
pub fn build_odd_complete_colored(n: usize) -> Result<(Graph, TotalColoring)> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            allowed: ">= 1".into(),
        });
    }
    let h = 2 * n + 1;
    let g = complete_graph(h);
    let mut edge_colors = vec![None; g.m()];
    for j in 0..h {
        for i in 1..=n {
            let e = g
                .edge_between((j + h - i) % h, (j + i) % h)
                .expect("complete graph");
            debug_assert!(edge_colors[e].is_none());
            edge_colors[e] = Some(j as u32);
        }
    }
    let vertex_colors = (0..h as u32).map(Some).collect();
    Ok((g, TotalColoring::new(vertex_colors, edge_colors, 0..h as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{analyze, cycle_graph, Regularity};

    fn walk_names(g: &PermGraph, names: &[&str]) -> bool {
        let idx: Vec<usize> = names.iter().map(|s| g.lookup(s).unwrap()).collect();
        g.graph.is_closed_walk(&idx)
    }

    #[test]
    fn st22_is_the_hexagon_in_order() {
        let g = star_graph(2, 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(walk_names(&g, &["0011", "1001", "0101", "1100", "0110", "1010"]));
        assert!(g.graph.is_isomorphic(&cycle_graph(6)).unwrap());
    }

    #[test]
    fn st23_is_desargues_shaped() {
        let m = analyze(&star_graph(2, 3).unwrap().graph);
        assert_eq!(m.vertices, 20);
        assert_eq!(m.regularity, Regularity::Regular(3));
        assert_eq!(m.girth, Some(6));
        assert!(m.bipartite && m.connected);
    }

    #[test]
    fn st32_metrics() {
        let m = analyze(&star_graph(3, 2).unwrap().graph);
        assert_eq!(m.vertices, 90);
        assert_eq!(m.regularity, Regularity::Regular(4));
        assert_eq!(m.girth, Some(6));
        assert!(m.connected);
    }

    #[test]
    fn star_graphs_are_regular_connected_with_girth_above_three() {
        for k in 2..=4 {
            for ell in 1..=3 {
                if k == 4 && ell == 3 {
                    continue; // 369600 vertices; girth search too slow for a unit test
                }
                let g = star_graph(k, ell).unwrap();
                let m = analyze(&g.graph);
                assert_eq!(m.regularity, Regularity::Regular((k - 1) * ell), "k={k} l={ell}");
                assert!(m.connected);
                if (k, ell) != (2, 1) {
                    assert!(m.girth.unwrap() > 3, "k={k} l={ell}");
                }
            }
        }
    }

    #[test]
    fn pc22_is_a_hexagon() {
        let g = pancake_graph(2, 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(walk_names(&g, &["0011", "1001", "0101", "1010", "0110", "1100"]));
    }

    #[test]
    fn pancake_shares_vertices_with_star() {
        let st = star_graph(3, 2).unwrap();
        let pc = pancake_graph(3, 2).unwrap();
        assert_eq!(st.vertices, pc.vertices);
    }

    #[test]
    fn custom_identity_family_is_star() {
        let p = Params::new(3, 2).unwrap();
        let custom = build_graph(p, GeneratorFamily::Custom(vec![Vec::new(); 5])).unwrap();
        let st = build_graph(p, GeneratorFamily::Star).unwrap();
        assert_eq!(custom.graph.edges(), st.graph.edges());
        assert!(custom.non_star_like.is_empty());
    }

    #[test]
    fn custom_concentric_family_contains_pancake() {
        let p = Params::new(3, 2).unwrap();
        let pis = GeneratorFamily::pancake_involutions(6);
        assert_eq!(pis[2], vec![(1, 2)]);
        assert_eq!(pis[4], vec![(1, 4), (2, 3)]);
        let custom = build_graph(p, GeneratorFamily::Custom(pis)).unwrap();
        let pc = build_graph(p, GeneratorFamily::Pancake).unwrap();
        let star_like: Vec<_> = custom
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(id, _)| !custom.non_star_like.contains(id))
            .map(|(_, e)| e.clone())
            .collect();
        assert_eq!(star_like, pc.graph.edges());
        assert!(!custom.non_star_like.is_empty());
    }

    #[test]
    fn malformed_families_are_rejected() {
        let p = Params::new(2, 2).unwrap();
        assert!(build_graph(p, GeneratorFamily::Custom(vec![Vec::new(); 2])).is_err());
        let bad = GeneratorFamily::Custom(vec![vec![], vec![(1, 2)], vec![]]);
        assert!(build_graph(p, bad).is_err());
        assert!(GeneratorFamily::parse_custom("3 1,3\n", 4).is_err());
        let ok = GeneratorFamily::parse_custom("# comment\n3 1,2\n", 6).unwrap();
        assert_eq!(
            ok,
            GeneratorFamily::Custom(vec![vec![], vec![], vec![(1, 2)], vec![], vec![]])
        );
    }

    #[test]
    fn odd_complete_colorings() {
        let (k5, tc) = build_odd_complete_colored(2).unwrap();
        let listed = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (2, 4), (3, 0), (4, 1)];
        let colors: Vec<u32> = listed
            .iter()
            .map(|&(a, b)| tc.edge(k5.edge_between(a, b).unwrap()))
            .collect();
        assert_eq!(colors, [3, 4, 0, 1, 2, 1, 2, 3, 4, 0]);
        assert_eq!(tc.vertex_colors, (0..5).map(Some).collect::<Vec<_>>());

        let (k3, tc) = build_odd_complete_colored(1).unwrap();
        for j in 0..3 {
            let e = k3.edge_between((j + 2) % 3, (j + 1) % 3).unwrap();
            assert_eq!(tc.edge(e), j as u32);
        }
        assert!(build_odd_complete_colored(0).is_err());
    }

    #[test]
    fn edge_list_roundtrip() {
        for g in [star_graph(2, 2).unwrap(), pancake_graph(3, 2).unwrap()] {
            let text = g.to_edge_list();
            let back = PermGraph::from_edge_list(&text).unwrap();
            assert_eq!(back.graph.edges(), g.graph.edges());
            assert_eq!(back.family, g.family);
            assert_eq!(back.to_edge_list(), text);
        }
        let text = star_graph(2, 2).unwrap().to_edge_list();
        assert!(text.starts_with("st 2 2 6 6\n0011 1001 2\n"));
    }

    #[test]
    fn edge_list_errors() {
        assert!(PermGraph::from_edge_list("").is_err());
        assert!(PermGraph::from_edge_list("st 2 2 6\n").is_err());
        assert!(PermGraph::from_edge_list("st 2 2 7 0\n").is_err());
        assert!(PermGraph::from_edge_list("st 2 2 6 1\n0011 1002 2\n").is_err());
        assert!(PermGraph::from_edge_list("st 2 2 6 2\n0011 1001 2\n").is_err());
    }
}
