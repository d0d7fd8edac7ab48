//! Efficient dominating sets: the first-symbol sets `S_i`, the repeat-position
//! sets `Sigma_i` of `ST(k, 2)`, a certificate-producing verifier and an
//! exhaustive search used as an independent oracle.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::builder::{GeneratorFamily, PermGraph};
use crate::coloring::TotalColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::report::{Witnesses, DEFAULT_WITNESS_CAP};

/// Vertices with first symbol `i`.
pub fn se_set(g: &PermGraph, i: usize) -> Result<Vec<usize>> {
    if i >= g.params.k {
        return Err(Error::OutOfRange {
            what: "symbol",
            value: i as i64,
            allowed: format!("0..{}", g.params.k),
        });
    }
    Ok(g.select(|v| v.first() as usize == i))
}

/// Vertices whose first symbol repeats at position `i` (`l = 2` only).
pub fn sigma_set(g: &PermGraph, i: usize) -> Result<Vec<usize>> {
    if g.params.ell != 2 {
        return Err(Error::precondition(format!(
            "repeat-position sets need l = 2, got l = {}",
            g.params.ell
        )));
    }
    if i == 0 || i >= g.params.len() {
        return Err(Error::OutOfRange {
            what: "position",
            value: i as i64,
            allowed: format!("1..={}", g.params.len() - 1),
        });
    }
    Ok(g.select(|v| v.repeat_position().ok() == Some(i)))
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in set {
        mask[v] = true;
    }
    mask
}

/// The dominators `N(v) ∩ S` of a vertex outside `S`.
pub fn d_set(g: &Graph, v: usize, set: &[usize]) -> Result<Vec<usize>> {
    if set.contains(&v) {
        return Err(Error::precondition(format!("{} belongs to the set", g.name(v))));
    }
    let mask = membership(g.n(), set);
    Ok(g.neighbors(v).filter(|&u| mask[u]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    WrongCount {
        vertex: String,
        dominators: Vec<String>,
        expected: usize,
    },
    NonUniqueIntersection {
        vertex: String,
        intersection: Vec<String>,
    },
    NonIndependent {
        vertex: String,
        pair: (String, String),
    },
    Distance {
        distance: usize,
    },
}

#[derive(Clone, Debug)]
pub struct DominationCertificate {
    pub set: Vec<usize>,
    pub ell: usize,
    /// `S(v)` for every `v` outside the set; empty for members.
    pub dominators: Vec<Vec<usize>>,
    pub violations: Vec<Violation>,
    pub truncated: bool,
    /// Smallest distance between two distinct members, if there are two.
    pub min_internal_distance: Option<usize>,
    pub pass: bool,
}

#[derive(Serialize)]
struct CertificateRecord<'a> {
    set: Vec<&'a str>,
    ell: usize,
    pass: bool,
    violations: &'a [Violation],
    truncated: bool,
    min_internal_distance: Option<usize>,
}

impl DominationCertificate {
    pub fn to_json(&self, g: &Graph) -> String {
        let record = CertificateRecord {
            set: self.set.iter().map(|&v| g.name(v)).collect(),
            ell: self.ell,
            pass: self.pass,
            violations: &self.violations,
            truncated: self.truncated,
            min_internal_distance: self.min_internal_distance,
        };
        serde_json::to_string_pretty(&record).expect("certificate serializes")
    }

    pub fn witnesses(&self) -> Witnesses {
        let mut w = Witnesses::default();
        for v in &self.violations {
            w.push(format!("{v:?}"));
        }
        w.truncated |= self.truncated;
        w
    }
}

/// Smallest distance between two distinct members of `set`.
pub fn min_internal_distance(g: &Graph, set: &[usize]) -> Option<usize> {
    if set.len() < 2 {
        return None;
    }
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut owner = vec![UNREACHABLE; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for &s in set {
        dist[s] = 0;
        owner[s] = s;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                owner[w] = owner[u];
                queue.push_back(w);
            }
        }
    }
    g.edges()
        .iter()
        .filter(|e| owner[e.u] != owner[e.v] && owner[e.u] != UNREACHABLE)
        .map(|e| dist[e.u] + dist[e.v] + 1)
        .min()
}

/// Checks that every vertex outside `set` has exactly `ell` neighbors in it
/// and, for `ell > 1`, is the only common neighbor of those dominators, which
/// must be pairwise non-adjacent. For `ell = 1` members must be at distance
/// at least 3 from each other.
pub fn verify_efficient_domination(g: &Graph, set: &[usize], ell: usize) -> Result<DominationCertificate> {
    if ell == 0 {
        return Err(Error::malformed("ell must be at least 1"));
    }
    if let Some(girth) = g.girth() {
        if girth <= 3 {
            return Err(Error::precondition(format!("girth is {girth}, must exceed 3")));
        }
    }
    let mut set: Vec<usize> = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(Error::malformed(format!("unknown vertex {v}")));
    }
    let mask = membership(g.n(), &set);

    let per_vertex: Vec<(Vec<usize>, Vec<Violation>)> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            if mask[v] {
                return (Vec::new(), Vec::new());
            }
            let dom: Vec<usize> = g.neighbors(v).filter(|&u| mask[u]).collect();
            let mut found = Vec::new();
            if dom.len() != ell {
                found.push(Violation::WrongCount {
                    vertex: g.name(v).to_string(),
                    dominators: dom.iter().map(|&u| g.name(u).to_string()).collect(),
                    expected: ell,
                });
            } else if ell > 1 {
                let mut common: BTreeSet<usize> = g.neighbors(dom[0]).collect();
                for &u in &dom[1..] {
                    let nu: BTreeSet<usize> = g.neighbors(u).collect();
                    common = common.intersection(&nu).copied().collect();
                }
                if common.len() != 1 || !common.contains(&v) {
                    found.push(Violation::NonUniqueIntersection {
                        vertex: g.name(v).to_string(),
                        intersection: common.iter().map(|&u| g.name(u).to_string()).collect(),
                    });
                }
                for (a, &x) in dom.iter().enumerate() {
                    for &y in &dom[a + 1..] {
                        if g.adjacent(x, y) {
                            found.push(Violation::NonIndependent {
                                vertex: g.name(v).to_string(),
                                pair: (g.name(x).to_string(), g.name(y).to_string()),
                            });
                        }
                    }
                }
            }
            (dom, found)
        })
        .collect();

    let mut violations = Vec::new();
    let mut truncated = false;
    let mut dominators = Vec::with_capacity(g.n());
    for (dom, found) in per_vertex {
        dominators.push(dom);
        for v in found {
            if violations.len() < DEFAULT_WITNESS_CAP {
                violations.push(v);
            } else {
                truncated = true;
            }
        }
    }
    let min_dist = min_internal_distance(g, &set);
    if ell == 1 {
        if let Some(d) = min_dist.filter(|&d| d < 3) {
            violations.push(Violation::Distance { distance: d });
        }
    }
    let pass = violations.is_empty() && !truncated;
    Ok(DominationCertificate {
        set,
        ell,
        dominators,
        violations,
        truncated,
        min_internal_distance: min_dist,
        pass,
    })
}

/// Independent check of the efficient-domination conditions from an
/// adjacency matrix, sharing no code with [`verify_efficient_domination`].
pub fn oracle_is_efficient(g: &Graph, set: &[usize], ell: usize) -> bool {
    let n = g.n();
    let mut adj = vec![false; n * n];
    for e in g.edges() {
        adj[e.u * n + e.v] = true;
        adj[e.v * n + e.u] = true;
    }
    let inside: Vec<bool> = (0..n).map(|v| set.contains(&v)).collect();
    for v in 0..n {
        if inside[v] {
            continue;
        }
        let dom: Vec<usize> = (0..n).filter(|&u| inside[u] && adj[v * n + u]).collect();
        if dom.len() != ell {
            return false;
        }
        if ell > 1 {
            let common: Vec<usize> = (0..n)
                .filter(|&x| dom.iter().all(|&u| adj[u * n + x]))
                .collect();
            if common != [v] {
                return false;
            }
            if dom.iter().any(|&a| dom.iter().any(|&b| adj[a * n + b])) {
                return false;
            }
        }
    }
    if ell == 1 {
        // no two members adjacent or sharing a neighbor
        for a in set {
            for b in set {
                if a < b && (adj[a * n + b] || (0..n).any(|x| adj[a * n + x] && adj[b * n + x])) {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest graph accepted by [`code_search`].
pub const CODE_SEARCH_CAP: usize = 1_000;

/// All vertex sets passing the efficient-domination conditions for `ell`,
/// found by backtracking with domination-count pruning and confirmed by
/// [`oracle_is_efficient`]. Sets are listed in lexicographic order.
pub fn code_search(g: &Graph, ell: usize) -> Result<Vec<Vec<usize>>> {
    if g.n() > CODE_SEARCH_CAP {
        return Err(Error::InstanceTooLarge {
            what: "code search".into(),
            count: g.n() as u128,
            cap: CODE_SEARCH_CAP as u128,
        });
    }
    if let Some(girth) = g.girth() {
        if girth <= 3 {
            return Err(Error::precondition(format!("girth is {girth}, must exceed 3")));
        }
    }
    if ell == 0 {
        return Err(Error::malformed("ell must be at least 1"));
    }
    let second: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let d = g.bfs_bounded(v, 2);
            (0..g.n()).filter(|&u| u != v && d[u] != UNREACHABLE).collect()
        })
        .collect();
    let mut search = CodeSearch {
        g,
        ell,
        within_two: second,
        state: vec![None; g.n()],
        found: Vec::new(),
    };
    search.descend(0);
    let mut found = search.found;
    found.sort();
    Ok(found)
}

struct CodeSearch<'a> {
    g: &'a Graph,
    ell: usize,
    within_two: Vec<Vec<usize>>,
    state: Vec<Option<bool>>,
    found: Vec<Vec<usize>>,
}

impl CodeSearch<'_> {
    fn descend(&mut self, v: usize) {
        if v == self.g.n() {
            let set: Vec<usize> = (0..v).filter(|&u| self.state[u] == Some(true)).collect();
            if oracle_is_efficient(self.g, &set, self.ell) {
                self.found.push(set);
            }
            return;
        }
        for choice in [true, false] {
            self.state[v] = Some(choice);
            if self.feasible(v) {
                self.descend(v + 1);
            }
        }
        self.state[v] = None;
    }

    /// Local consistency after deciding `v`.
    fn feasible(&self, v: usize) -> bool {
        if self.ell == 1
            && self.state[v] == Some(true)
            && self.within_two[v].iter().any(|&u| self.state[u] == Some(true))
        {
            return false;
        }
        std::iter::once(v)
            .chain(self.g.neighbors(v))
            .all(|u| self.count_ok(u))
    }

    fn count_ok(&self, u: usize) -> bool {
        if self.state[u] != Some(false) {
            return true;
        }
        let mut inside = 0;
        let mut open = 0;
        for w in self.g.neighbors(u) {
            match self.state[w] {
                Some(true) => inside += 1,
                None => open += 1,
                Some(false) => {}
            }
        }
        inside <= self.ell && inside + open >= self.ell
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SetFamily {
    /// First-symbol sets `S_0 .. S_{k-1}`.
    Se,
    /// Repeat-position sets `Sigma_1 .. Sigma_{2k-1}`.
    Sigma,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub family: SetFamily,
    pub set_sizes: Vec<usize>,
    /// (a) every vertex lies in exactly one set.
    pub partition: bool,
    pub stars_checked: usize,
    /// (b) every dominator set together with its vertex induces `K_{1,l}`.
    pub stars_induced: bool,
    /// (c) every edge lies in exactly two stars over all sets.
    pub doubled_cover: bool,
    /// (d) for `k = 2` and first-symbol sets, each set's stars partition the
    /// edges; `None` where not applicable.
    pub per_set_edge_partition: Option<bool>,
    /// (e) distinct numbers of stars a set member belongs to.
    pub membership_counts: Vec<usize>,
    pub expected_membership: usize,
    pub pass: bool,
    pub witnesses: Witnesses,
}

/// The family of sets and the number of dominators each outside vertex has.
pub fn family_sets(g: &PermGraph, family: SetFamily) -> Result<(Vec<Vec<usize>>, usize)> {
    match family {
        SetFamily::Se => Ok(((0..g.params.k).map(|i| se_set(g, i)).collect::<Result<_>>()?, g.params.ell)),
        SetFamily::Sigma => Ok((
            (1..g.params.len()).map(|i| sigma_set(g, i)).collect::<Result<_>>()?,
            1,
        )),
    }
}

pub fn verify_partition_and_edge_cover(g: &PermGraph, family: SetFamily) -> Result<PartitionReport> {
    if g.family != GeneratorFamily::Star {
        return Err(Error::precondition("partition checks are stated for the star family"));
    }
    let (sets, ell) = family_sets(g, family)?;
    let graph = &g.graph;
    let mut w = Witnesses::default();

    let mut owners = vec![0usize; g.n()];
    for set in &sets {
        for &v in set {
            owners[v] += 1;
        }
    }
    let partition = owners.iter().all(|&c| c == 1);
    if let Some(v) = owners.iter().position(|&c| c != 1) {
        w.push(format!("{} lies in {} sets", g.vertex(v), owners[v]));
    }

    let mut stars_checked = 0;
    let mut stars_induced = true;
    let mut cover = vec![0usize; g.m()];
    let mut per_set_ok = true;
    let mut membership = BTreeSet::new();
    for set in &sets {
        let mask = membership_mask(g.n(), set);
        let mut per_set = vec![0usize; g.m()];
        let mut member_of = vec![0usize; g.n()];
        for v in (0..g.n()).filter(|&v| !mask[v]) {
            let dom: Vec<(usize, usize)> = graph
                .incident(v)
                .iter()
                .copied()
                .filter(|&(u, _)| mask[u])
                .collect();
            stars_checked += 1;
            let independent = dom
                .iter()
                .all(|&(a, _)| dom.iter().all(|&(b, _)| !graph.adjacent(a, b)));
            if dom.len() != ell || !independent {
                stars_induced = false;
                w.push(format!("dominators of {} do not induce K_1,{ell}", g.vertex(v)));
            }
            for &(u, e) in &dom {
                cover[e] += 1;
                per_set[e] += 1;
                member_of[u] += 1;
            }
        }
        for &u in set {
            membership.insert(member_of[u]);
        }
        if per_set.iter().any(|&c| c != 1) {
            per_set_ok = false;
        }
    }
    let doubled_cover = cover.iter().all(|&c| c == 2);
    if let Some(e) = cover.iter().position(|&c| c != 2) {
        let edge = graph.edge(e);
        w.push(format!(
            "edge {}-{} lies in {} stars",
            g.vertex(edge.u),
            g.vertex(edge.v),
            cover[e]
        ));
    }
    let per_set_edge_partition = (family == SetFamily::Se && g.params.k == 2).then_some(per_set_ok);
    let expected_membership = (g.params.k - 1) * g.params.ell;
    let membership_counts: Vec<usize> = membership.into_iter().collect();
    let pass = partition
        && stars_induced
        && doubled_cover
        && per_set_edge_partition != Some(false)
        && membership_counts == [expected_membership];
    Ok(PartitionReport {
        family,
        set_sizes: sets.iter().map(Vec::len).collect(),
        partition,
        stars_checked,
        stars_induced,
        doubled_cover,
        per_set_edge_partition,
        membership_counts,
        expected_membership,
        pass,
        witnesses: w,
    })
}

fn membership_mask(n: usize, set: &[usize]) -> Vec<bool> {
    membership(n, set)
}

#[derive(Clone, Debug, Serialize)]
pub struct AvoidanceReport {
    /// Per color `i`: the edges of color `i`, as name pairs.
    pub color_edges: Vec<(u32, Vec<(String, String)>)>,
    pub avoids: bool,
    /// Every vertex of color `2k-1` has equal first and last entries.
    pub last_position_rule: bool,
    pub pass: bool,
    pub witnesses: Witnesses,
}

/// For every color `i`, no edge of color `i` touches a vertex of color `i`.
pub fn verify_ei_avoidance(g: &PermGraph, tc: &TotalColoring) -> Result<AvoidanceReport> {
    if g.params.ell != 2 {
        return Err(Error::precondition("avoidance check needs l = 2"));
    }
    let graph = &g.graph;
    let mut w = Witnesses::default();
    let mut avoids = true;
    let mut color_edges = Vec::new();
    for i in 1..g.params.len() as u32 {
        let mut edges = Vec::new();
        for e in tc.edge_class(i) {
            let edge = graph.edge(e);
            for x in [edge.u, edge.v] {
                if tc.vertex_colors[x] == Some(i) {
                    avoids = false;
                    w.push(format!("edge {}-{} of color {i} touches {}", g.vertex(edge.u), g.vertex(edge.v), g.vertex(x)));
                }
            }
            edges.push((g.vertex(edge.u).to_string(), g.vertex(edge.v).to_string()));
        }
        color_edges.push((i, edges));
    }
    let last = g.params.len() - 1;
    let last_position_rule = tc.class(last as u32).iter().all(|&v| {
        let e = g.vertex(v).entries();
        e[0] == e[last]
    });
    if !last_position_rule {
        w.push(format!("a vertex of color {last} has different first and last entries"));
    }
    Ok(AvoidanceReport {
        color_edges,
        avoids,
        last_position_rule,
        pass: avoids && last_position_rule,
        witnesses: w,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::star_graph;
    use crate::coloring::sigma_total_coloring;
    use crate::graph::complete_bipartite;
    use crate::multiset::MString;

    fn names(g: &PermGraph, set: &[usize]) -> Vec<String> {
        set.iter().map(|&v| g.vertex(v).to_string()).collect()
    }

    #[test]
    fn first_symbol_sets() {
        let g = star_graph(2, 2).unwrap();
        assert_eq!(names(&g, &se_set(&g, 0).unwrap()), ["0011", "0101", "0110"]);
        let g3 = star_graph(3, 2).unwrap();
        assert_eq!(se_set(&g3, 0).unwrap().len(), 30);
        assert!(se_set(&g3, 3).is_err());
    }

    #[test]
    fn repeat_position_sets() {
        let g = star_graph(2, 2).unwrap();
        assert_eq!(names(&g, &sigma_set(&g, 1).unwrap()), ["0011", "1100"]);
        let mut all: Vec<usize> = (1..4).flat_map(|i| sigma_set(&g, i).unwrap()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..6).collect::<Vec<_>>());
        let g3 = star_graph(3, 2).unwrap();
        for i in 1..6 {
            assert_eq!(sigma_set(&g3, i).unwrap().len(), 18);
        }
        assert!(sigma_set(&g3, 0).is_err());
        assert!(sigma_set(&g3, 6).is_err());
        assert!(sigma_set(&star_graph(2, 3).unwrap(), 1).is_err());
    }

    #[test]
    fn dominator_sets_of_display_examples() {
        let g = star_graph(3, 2).unwrap();
        let s0 = se_set(&g, 0).unwrap();
        let check = |v: &str, expected: &[&str]| {
            let mut got = names(&g, &d_set(&g.graph, g.lookup(v).unwrap(), &s0).unwrap());
            got.sort();
            let mut want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
            want.sort();
            assert_eq!(got, want, "S_0({v})");
        };
        check("100122", &["010122", "001122"]);
        check("210120", &["010122", "012120"]);
        check("120120", &["021120", "020121"]);
        assert!(d_set(&g.graph, g.lookup("010122").unwrap(), &s0).is_err());
    }

    #[test]
    fn first_symbol_sets_are_efficient() {
        let g = star_graph(3, 2).unwrap();
        for i in 0..3 {
            let cert = verify_efficient_domination(&g.graph, &se_set(&g, i).unwrap(), 2).unwrap();
            assert!(cert.pass, "{:?}", cert.violations);
            assert_eq!(cert.min_internal_distance, Some(2));
        }
    }

    #[test]
    fn k23_is_not_two_efficient() {
        let k23 = complete_bipartite(2, 3);
        let cert = verify_efficient_domination(&k23, &[0, 1], 2).unwrap();
        assert!(!cert.pass);
        let Violation::NonUniqueIntersection { intersection, .. } = &cert.violations[0] else {
            panic!("unexpected {:?}", cert.violations);
        };
        assert_eq!(intersection, &["y0", "y1", "y2"]);
        let json: serde_json::Value = serde_json::from_str(&cert.to_json(&k23)).unwrap();
        assert_eq!(json["pass"], false);
        assert_eq!(json["violations"][0]["kind"], "non-unique-intersection");
    }

    #[test]
    fn antipodal_pair_is_a_perfect_code() {
        let g = star_graph(2, 2).unwrap();
        let cert = verify_efficient_domination(&g.graph, &sigma_set(&g, 1).unwrap(), 1).unwrap();
        assert!(cert.pass);
        assert_eq!(cert.min_internal_distance, Some(3));
        let bad = verify_efficient_domination(&g.graph, &[0, 1], 1).unwrap();
        assert!(!bad.pass);
    }

    #[test]
    fn girth_three_is_a_precondition_failure() {
        let k5 = crate::graph::complete_graph(5);
        assert!(matches!(
            verify_efficient_domination(&k5, &[0], 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(code_search(&k5, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn oracle_search_on_hexagon() {
        let g = star_graph(2, 2).unwrap();
        let codes = code_search(&g.graph, 1).unwrap();
        for i in 1..4 {
            assert!(codes.contains(&sigma_set(&g, i).unwrap()));
        }
        assert_eq!(codes.len(), 3);
        let codes2 = code_search(&g.graph, 2).unwrap();
        for i in 0..2 {
            assert!(codes2.contains(&se_set(&g, i).unwrap()));
        }
        for set in codes.iter() {
            assert!(verify_efficient_domination(&g.graph, set, 1).unwrap().pass);
        }
    }

    #[test]
    fn oracle_agrees_with_verifier_on_random_subsets() {
        let g = star_graph(2, 2).unwrap();
        for mask in 0u32..64 {
            let set: Vec<usize> = (0..6).filter(|&v| mask >> v & 1 == 1).collect();
            for ell in 1..=2 {
                assert_eq!(
                    oracle_is_efficient(&g.graph, &set, ell),
                    verify_efficient_domination(&g.graph, &set, ell).unwrap().pass,
                    "set {set:?} ell {ell}"
                );
            }
        }
    }

    #[test]
    fn partitions_and_doubled_cover() {
        let g = star_graph(2, 2).unwrap();
        let r = verify_partition_and_edge_cover(&g, SetFamily::Se).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
        // 3 stars per set, 2 edges each, 2 sets: 12 = 2|E|
        assert_eq!(r.stars_checked * 2, 2 * g.m());
        assert_eq!(r.per_set_edge_partition, Some(true));

        let g3 = star_graph(3, 2).unwrap();
        let r = verify_partition_and_edge_cover(&g3, SetFamily::Se).unwrap();
        assert!(r.pass);
        assert_eq!(r.membership_counts, vec![4]);
        let r = verify_partition_and_edge_cover(&g3, SetFamily::Sigma).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
        assert_eq!(r.set_sizes, vec![18; 5]);

        let r = verify_partition_and_edge_cover(&star_graph(2, 3).unwrap(), SetFamily::Se).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn stars_are_independent_and_centered() {
        let g = star_graph(2, 3).unwrap();
        let s0 = se_set(&g, 0).unwrap();
        let v = g.lookup("100011").unwrap();
        let dom = d_set(&g.graph, v, &s0).unwrap();
        assert_eq!(dom.len(), 3);
        for &a in &dom {
            assert!(g.graph.adjacent(a, v));
            for &b in &dom {
                assert!(!g.graph.adjacent(a, b));
            }
        }
    }

    #[test]
    fn color_classes_avoid_their_edges() {
        let g = star_graph(2, 2).unwrap();
        let tc = sigma_total_coloring(&g).unwrap();
        let r = verify_ei_avoidance(&g, &tc).unwrap();
        assert!(r.pass);
        let mut e1 = r.color_edges[0].1.clone();
        e1.sort();
        assert_eq!(
            e1,
            [("0101".to_string(), "1001".to_string()), ("0110".to_string(), "1010".to_string())]
        );
        let g3 = star_graph(3, 2).unwrap();
        assert!(verify_ei_avoidance(&g3, &sigma_total_coloring(&g3).unwrap()).unwrap().pass);
    }

    #[test]
    fn sigma_members_have_one_neighbor_outside() {
        let g = star_graph(4, 2).unwrap();
        for i in 1..8 {
            let set = sigma_set(&g, i).unwrap();
            let cert = verify_efficient_domination(&g.graph, &set, 1).unwrap();
            assert!(cert.pass);
            assert_eq!(cert.min_internal_distance, Some(3));
            assert_eq!(set.len(), 2520 / 7);
        }
        let _ = MString::parse(g.params, "00112233").unwrap();
    }
}
