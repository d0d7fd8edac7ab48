//! Simple undirected graphs with labelled edges, plus the structural queries
//! the verifiers need: distances, components, girth, bipartiteness, vertex and
//! edge deletion, 6-cycle enumeration and small-graph isomorphism.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest graph on which 6-cycles are enumerated or isomorphism is decided.
pub const SMALL_GRAPH_CAP: usize = 10_000;

pub const UNREACHABLE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Generator positions producing this edge; more than one only when
    /// distinct generators reach the same neighbor.
    pub labels: Vec<u32>,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    names: Vec<String>,
    /// `(neighbor, edge id)` pairs sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a simple graph; parallel `(u, v)` pairs are merged into one
    /// edge whose label set is the union.
    pub fn from_labeled_edges(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self> {
        let n = names.len();
        let mut raw: Vec<(usize, usize, u32)> = Vec::new();
        for (a, b, label) in edges {
            if a >= n || b >= n {
                return Err(Error::malformed(format!("edge ({a}, {b}) on {n} vertices")));
            }
            if a == b {
                return Err(Error::malformed(format!("loop at vertex {}", names[a])));
            }
            raw.push((a.min(b), a.max(b), label));
        }
        raw.sort_unstable();
        raw.dedup();
        let mut merged: Vec<Edge> = Vec::new();
        for (u, v, label) in raw {
            match merged.last_mut() {
                Some(e) if e.u == u && e.v == v => e.labels.push(label),
                _ => merged.push(Edge {
                    u,
                    v,
                    labels: vec![label],
                }),
            }
        }
        Ok(Self::from_sorted_edges(names, merged))
    }

    pub fn from_edges(names: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_labeled_edges(names, edges.into_iter().map(|(a, b)| (a, b, 0)))
    }

    fn from_sorted_edges(names: Vec<String>, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); names.len()];
        for (id, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { names, adj, edges }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Linear lookup; callers with many queries should build their own map.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs of `v`, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// BFS distances from `src`; [`UNREACHABLE`] marks other components.
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        self.bfs_bounded(src, UNREACHABLE)
    }

    /// BFS distances up to `radius`; farther vertices stay [`UNREACHABLE`].
    pub fn bfs_bounded(&self, src: usize, radius: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= radius {
                continue;
            }
            for w in self.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.bfs(u)[v];
        (d != UNREACHABLE).then_some(d)
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Number of vertices of each degree.
    pub fn degree_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for v in 0..self.n() {
            *census.entry(self.degree(v)).or_insert(0) += 1;
        }
        census
    }

    pub fn regularity(&self) -> Regularity {
        let census = self.degree_census();
        let degrees: Vec<usize> = census.keys().copied().collect();
        match degrees.as_slice() {
            [] => Regularity::Empty,
            [d] => Regularity::Regular(*d),
            [a, b] => Regularity::Biregular(*b, *a),
            _ => Regularity::Irregular,
        }
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = UNREACHABLE;
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut parent = vec![UNREACHABLE; self.n()];
        let mut touched = Vec::new();
        for s in 0..self.n() {
            for &t in &touched {
                dist[t] = UNREACHABLE;
                parent[t] = UNREACHABLE;
            }
            touched.clear();
            dist[s] = 0;
            touched.push(s);
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                if best != UNREACHABLE && 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        (best != UNREACHABLE).then_some(best)
    }

    /// A closed walk of odd length, or `None` if the graph is bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<usize>> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut parent = vec![UNREACHABLE; self.n()];
        for s in 0..self.n() {
            if dist[s] != UNREACHABLE {
                continue;
            }
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if dist[w] % 2 == dist[u] % 2 {
                        // climb both tree paths to their meeting point
                        let (mut a, mut b) = (u, w);
                        let mut left = vec![a];
                        let mut right = vec![b];
                        while a != b {
                            if dist[a] >= dist[b] {
                                a = parent[a];
                                left.push(a);
                            } else {
                                b = parent[b];
                                right.push(b);
                            }
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        return Some(left);
                    }
                }
            }
        }
        None
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_cycle().is_none()
    }

    /// True if `walk` is a closed walk: consecutive entries (cyclically) are
    /// adjacent.
    pub fn is_closed_walk(&self, walk: &[usize]) -> bool {
        !walk.is_empty()
            && (0..walk.len()).all(|i| self.adjacent(walk[i], walk[(i + 1) % walk.len()]))
    }

    /// Deletes the given vertices (with their incident edges) and edges.
    pub fn without(&self, vertices: &[usize], edges: &[usize]) -> Result<Subgraph> {
        let mut drop_vertex = vec![false; self.n()];
        for &v in vertices {
            if v >= self.n() {
                return Err(Error::malformed(format!("unknown vertex {v}")));
            }
            drop_vertex[v] = true;
        }
        let mut drop_edge = vec![false; self.m()];
        for &e in edges {
            if e >= self.m() {
                return Err(Error::malformed(format!("unknown edge {e}")));
            }
            drop_edge[e] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !drop_vertex[v]).collect();
        Ok(self.restrict(&keep, |e| !drop_edge[e]))
    }

    /// The subgraph induced by `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Subgraph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(Error::malformed(format!("unknown vertex {v}")));
        }
        Ok(self.restrict(&keep, |_| true))
    }

    /// Induced subgraphs of all connected components, in component order.
    pub fn component_subgraphs(&self) -> Vec<Subgraph> {
        self.components()
            .iter()
            .map(|c| self.restrict(c, |_| true))
            .collect()
    }

    fn restrict(&self, keep: &[usize], edge_ok: impl Fn(usize) -> bool) -> Subgraph {
        let mut new_index = vec![UNREACHABLE; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if new_index[e.u] != UNREACHABLE && new_index[e.v] != UNREACHABLE && edge_ok(id) {
                edges.push(Edge {
                    u: new_index[e.u],
                    v: new_index[e.v],
                    labels: e.labels.clone(),
                });
                edge_origin.push(id);
            }
        }
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        Subgraph {
            graph: Graph::from_sorted_edges(names, edges),
            vertex_origin: keep.to_vec(),
            edge_origin,
        }
    }

    /// All cycles of length exactly 6. Each is listed once, starting at its
    /// smallest vertex and oriented so the second vertex is smaller than the
    /// last.
    pub fn six_cycles(&self) -> Result<Vec<[usize; 6]>> {
        if self.n() > SMALL_GRAPH_CAP {
            return Err(Error::InstanceTooLarge {
                what: "6-cycle enumeration".into(),
                count: self.n() as u128,
                cap: SMALL_GRAPH_CAP as u128,
            });
        }
        let mut out = Vec::new();
        let mut path = [0usize; 6];
        for s in 0..self.n() {
            path[0] = s;
            self.extend_cycle(&mut path, 1, &mut out);
        }
        Ok(out)
    }

    fn extend_cycle(&self, path: &mut [usize; 6], len: usize, out: &mut Vec<[usize; 6]>) {
        let s = path[0];
        let last = path[len - 1];
        for w in self.neighbors(last) {
            if w <= s || path[1..len].contains(&w) {
                continue;
            }
            path[len] = w;
            if len == 5 {
                if path[1] < w && self.adjacent(w, s) {
                    out.push(*path);
                }
            } else {
                self.extend_cycle(path, len + 1, out);
            }
        }
    }

    /// Number of 6-cycles through each vertex.
    pub fn six_cycle_incidence(&self) -> Result<Vec<usize>> {
        let mut counts = vec![0; self.n()];
        for c in self.six_cycles()? {
            for v in c {
                counts[v] += 1;
            }
        }
        Ok(counts)
    }

    /// Decides isomorphism; on success returns `f` with `f[v]` the image in
    /// `other` of vertex `v`.
    pub fn isomorphism(&self, other: &Graph) -> Result<Option<Vec<usize>>> {
        for g in [self, other] {
            if g.n() > SMALL_GRAPH_CAP {
                return Err(Error::InstanceTooLarge {
                    what: "isomorphism test".into(),
                    count: g.n() as u128,
                    cap: SMALL_GRAPH_CAP as u128,
                });
            }
        }
        if self.n() != other.n()
            || self.m() != other.m()
            || self.degree_census() != other.degree_census()
        {
            return Ok(None);
        }
        let inv_a = self.vertex_invariants()?;
        let inv_b = other.vertex_invariants()?;
        let mut sorted_a = inv_a.clone();
        let mut sorted_b = inv_b.clone();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return Ok(None);
        }
        let order = self.search_order(&inv_a);
        let mut search = IsoSearch {
            a: self,
            b: other,
            inv_a: &inv_a,
            inv_b: &inv_b,
            order: &order,
            map: vec![UNREACHABLE; self.n()],
            used: vec![false; other.n()],
        };
        Ok(search.extend(0).then_some(search.map))
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    /// Degree, distance profile and 6-cycle incidence per vertex.
    fn vertex_invariants(&self) -> Result<Vec<VertexInvariant>> {
        let profile = self.n() <= 2_000;
        let cycles = if profile {
            self.six_cycle_incidence()?
        } else {
            vec![0; self.n()]
        };
        Ok((0..self.n())
            .map(|v| {
                let mut distances = Vec::new();
                if profile {
                    for d in self.bfs(v) {
                        let d = if d == UNREACHABLE { 0 } else { d };
                        if distances.len() <= d {
                            distances.resize(d + 1, 0);
                        }
                        distances[d] += 1;
                    }
                }
                VertexInvariant {
                    degree: self.degree(v),
                    distances,
                    six_cycles: cycles[v],
                }
            })
            .collect())
    }

    /// BFS order per component, each component rooted at a vertex with the
    /// rarest invariant.
    fn search_order(&self, inv: &[VertexInvariant]) -> Vec<(usize, Option<usize>)> {
        let mut frequency: BTreeMap<&VertexInvariant, usize> = BTreeMap::new();
        for x in inv {
            *frequency.entry(x).or_insert(0) += 1;
        }
        let mut order = Vec::with_capacity(self.n());
        let mut placed = vec![false; self.n()];
        for comp in self.components() {
            let root = *comp
                .iter()
                .min_by_key(|&&v| (frequency[&inv[v]], v))
                .expect("components are non-empty");
            placed[root] = true;
            order.push((root, None));
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !placed[w] {
                        placed[w] = true;
                        order.push((w, Some(u)));
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct VertexInvariant {
    degree: usize,
    distances: Vec<usize>,
    six_cycles: usize,
}

struct IsoSearch<'a> {
    a: &'a Graph,
    b: &'a Graph,
    inv_a: &'a [VertexInvariant],
    inv_b: &'a [VertexInvariant],
    order: &'a [(usize, Option<usize>)],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&(x, parent)) = self.order.get(depth) else {
            return true;
        };
        let candidates: Vec<usize> = match parent {
            Some(p) => self.b.neighbors(self.map[p]).collect(),
            None => (0..self.b.n()).collect(),
        };
        for y in candidates {
            if self.used[y] || self.inv_a[x] != self.inv_b[y] || !self.consistent(x, y) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[x] = UNREACHABLE;
            self.used[y] = false;
        }
        false
    }

    /// Mapped neighbors of `x` must map to neighbors of `y`, and `y` may not
    /// have additional mapped neighbors.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let mut mapped = 0;
        for u in self.a.neighbors(x) {
            let fu = self.map[u];
            if fu != UNREACHABLE {
                if !self.b.adjacent(fu, y) {
                    return false;
                }
                mapped += 1;
            }
        }
        let mapped_b = self.b.neighbors(y).filter(|&w| self.used[w]).count();
        mapped == mapped_b
    }
}

/// A subgraph together with the indices its vertices and edges had in the
/// parent graph.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertex_origin: Vec<usize>,
    pub edge_origin: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regularity {
    Empty,
    Regular(usize),
    /// `(high, low)` degrees.
    Biregular(usize, usize),
    Irregular,
}

/// Summary metrics of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub vertices: usize,
    pub edges: usize,
    pub degrees: BTreeMap<usize, usize>,
    pub regularity: Regularity,
    pub girth: Option<usize>,
    pub connected: bool,
    pub components: usize,
    pub bipartite: bool,
}

pub fn analyze(g: &Graph) -> Metrics {
    Metrics {
        vertices: g.n(),
        edges: g.m(),
        degrees: g.degree_census(),
        regularity: g.regularity(),
        girth: g.girth(),
        connected: g.is_connected(),
        components: g.components().len(),
        bipartite: g.is_bipartite(),
    }
}

pub fn cycle_graph(n: usize) -> Graph {
    let names = (0..n).map(|i| i.to_string()).collect();
    Graph::from_edges(names, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn complete_graph(n: usize) -> Graph {
    let names = (0..n).map(|i| i.to_string()).collect();
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_edges(names, edges).expect("valid complete graph")
}

/// `K_{a,b}` with parts named `x0..` and `y0..`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let names = (0..a)
        .map(|i| format!("x{i}"))
        .chain((0..b).map(|i| format!("y{i}")))
        .collect();
    let edges = (0..a).flat_map(|x| (0..b).map(move |y| (x, a + y)));
    Graph::from_edges(names, edges).expect("valid bipartite graph")
}

/// The `d`-dimensional hypercube on bit strings.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let names = (0..n).map(|i| format!("{i:0d$b}")).collect();
    let edges = (0..n).flat_map(|x| (0..d).map(move |b| (x, x ^ (1 << b))).filter(|&(x, y)| x < y));
    Graph::from_edges(names, edges).expect("valid hypercube")
}

/// Vertex set given as sorted unique indices.
pub fn vertex_set(iter: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let set: BTreeSet<usize> = iter.into_iter().collect();
    set.into_iter().collect()
}
