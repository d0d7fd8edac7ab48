//! The embeddings `kappa_k^j : ST(k, 2) -> ST(k+1, 2)`, the Schreier coset
//! description of `ST(k, l)` as a quotient of the symmetric group, and the
//! repeat-position sets of pancake-type graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::builder::{star_graph, GeneratorFamily, PermGraph};
use crate::domination::{sigma_set, verify_efficient_domination, Violation};
use crate::error::{Error, Result};
use crate::graph::{Regularity, SMALL_GRAPH_CAP};
use crate::multiset::{MString, Params};
use crate::report::Witnesses;

/// `kappa_k^j(v)`: every entry shifted by `(j - k) mod (k + 1)`, followed by
/// `j j`.
pub fn kappa_embed(v: &MString, j: usize) -> Result<MString> {
    let p = v.params();
    if p.ell != 2 {
        return Err(Error::precondition(format!("embeddings need l = 2, got l = {}", p.ell)));
    }
    let k = p.k;
    if j > k {
        return Err(Error::OutOfRange {
            what: "j",
            value: j as i64,
            allowed: format!("0..={k}"),
        });
    }
    let m = k + 1;
    let shift = (j + m - k % m) % m;
    let mut entries: Vec<u8> = v
        .entries()
        .iter()
        .map(|&x| ((x as usize + shift) % m) as u8)
        .collect();
    entries.extend([j as u8, j as u8]);
    MString::new(Params::new(m, 2)?, entries)
}

#[derive(Clone, Debug, Serialize)]
pub struct ImageAudit {
    pub j: usize,
    pub shift: usize,
    pub size: usize,
    /// `j` occurs only in the two suffix positions.
    pub suffix_only: bool,
    /// The map preserves and reflects adjacency, so the induced image is a
    /// copy of the source.
    pub induced_copy: bool,
    /// Repeat-position-`2k+1` neighbors of this image (its block).
    pub block: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub k: usize,
    pub images: Vec<ImageAudit>,
    /// (a)
    pub pairwise_disjoint: bool,
    /// (b) each vertex of the last repeat-position set has one image
    /// neighbor and each image vertex one neighbor in that set, reached by
    /// the transposition `(0 2k)`.
    pub class_matching: bool,
    pub via_position_2k: bool,
    pub blocks_partition: bool,
    /// (c) `(k+1) (2k)! / 2^k`, computed and counted.
    pub expected_size: u128,
    pub class_size: usize,
    /// Open neighborhood of all images (full reading) and its part inside
    /// the repeat-position set (restricted reading).
    pub full_neighborhood: usize,
    pub restricted_neighborhood: usize,
    /// Fraction of vertices in one repeat-position set of the target.
    pub density: (usize, usize),
    pub density_is_reciprocal: bool,
    pub pass: bool,
    pub witnesses: Witnesses,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Checks the `k + 1` embeddings of `ST(k, 2)` into `ST(k + 1, 2)`.
pub fn verify_chain(k: usize) -> Result<ChainReport> {
    let target_params = Params::new(k + 1, 2)?;
    let target_n = target_params.checked_vertex_count(SMALL_GRAPH_CAP as u128)?;
    let source = star_graph(k, 2)?;
    let target = star_graph(k + 1, 2)?;
    let mut w = Witnesses::default();

    let top = 2 * k + 1;
    let class = sigma_set(&target, top)?;
    let in_class: BTreeSet<usize> = class.iter().copied().collect();

    let mut owner = vec![usize::MAX; target_n];
    let mut pairwise_disjoint = true;
    let mut images = Vec::new();
    let mut maps = Vec::new();
    for j in 0..=k {
        let map: Vec<usize> = source
            .vertices
            .iter()
            .map(|v| kappa_embed(v, j).map(|x| target.index_of(&x)))
            .collect::<Result<_>>()?;
        for &x in &map {
            if owner[x] != usize::MAX {
                pairwise_disjoint = false;
                w.push(format!("{} lies in two images", target.vertex(x)));
            }
            owner[x] = j;
        }
        let suffix_only = map.iter().all(|&x| {
            let e = target.vertex(x).entries();
            e[..2 * k].iter().all(|&s| s as usize != j) && e[2 * k] as usize == j && e[top] as usize == j
        });
        let induced = target.graph.induced(&map)?;
        let preserved = source.graph.edges().iter().all(|e| target.graph.adjacent(map[e.u], map[e.v]));
        let induced_copy = preserved && induced.graph.m() == source.m();
        if !induced_copy {
            w.push(format!("image {j} is not an induced copy"));
        }
        images.push(ImageAudit {
            j,
            shift: (j + k + 1 - k) % (k + 1),
            size: map.len(),
            suffix_only,
            induced_copy,
            block: Vec::new(),
        });
        maps.push(map);
    }

    let mut class_matching = true;
    let mut via_position_2k = true;
    let mut blocks: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k + 1];
    for (j, map) in maps.iter().enumerate() {
        for &x in map {
            let hits: Vec<usize> = target.graph.neighbors(x).filter(|u| in_class.contains(u)).collect();
            if hits.len() != 1 {
                class_matching = false;
                w.push(format!("{} has {} neighbors in the class", target.vertex(x), hits.len()));
                continue;
            }
            let expected = target.index_of(&target.vertex(x).transpose(2 * k)?);
            if hits[0] != expected {
                via_position_2k = false;
            }
            blocks[j].insert(hits[0]);
        }
    }
    for &u in &class {
        let hits = target.graph.neighbors(u).filter(|&x| owner[x] != usize::MAX).count();
        if hits != 1 {
            class_matching = false;
            w.push(format!("{} has {hits} image neighbors", target.vertex(u)));
        }
    }
    let total: usize = blocks.iter().map(BTreeSet::len).sum();
    let union: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
    let blocks_partition = total == union.len() && union == in_class;
    for (img, block) in images.iter_mut().zip(&blocks) {
        img.block = block.iter().map(|&u| target.vertex(u).to_string()).collect();
    }

    let full: BTreeSet<usize> = maps
        .iter()
        .flatten()
        .flat_map(|&x| target.graph.neighbors(x))
        .filter(|&u| owner[u] == usize::MAX)
        .collect();
    let restricted = full.iter().filter(|u| in_class.contains(u)).count();

    let expected_size = (k as u128 + 1) * factorial(2 * k) / (1u128 << k);
    let density = (class.len(), target_n);
    let density_is_reciprocal = class.len() * top == target_n;
    let pass = pairwise_disjoint
        && images.iter().all(|i| i.induced_copy && i.suffix_only)
        && class_matching
        && via_position_2k
        && blocks_partition
        && expected_size == class.len() as u128
        && density_is_reciprocal;
    Ok(ChainReport {
        k,
        images,
        pairwise_disjoint,
        class_matching,
        via_position_2k,
        blocks_partition,
        expected_size,
        class_size: class.len(),
        full_neighborhood: full.len(),
        restricted_neighborhood: restricted,
        density,
        density_is_reciprocal,
        pass,
        witnesses: w,
    })
}

/// Largest `k l` accepted by [`schreier_quotient_check`].
pub const SYM_CAP: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct CosetClass {
    pub vertex: String,
    /// Strings of `Sym_{kl}` collapsing to `vertex`, in lexicographic order.
    pub fiber: Vec<String>,
    /// Local generators `(0 j)` with `v_j != v_0`.
    pub generators: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetTable {
    pub k: usize,
    pub ell: usize,
    /// In display order.
    pub classes: Vec<CosetClass>,
    /// (a) each fiber is one orbit of the block transpositions, of size
    /// `(l!)^k`.
    pub fibers_are_cosets: bool,
    pub fiber_size: usize,
    /// (b) the quotient of the star transpositions with distinct collapsed
    /// symbols is exactly `ST(k, l)`; the others stay inside a fiber.
    pub quotient_matches: bool,
    pub internal_moves_stay: bool,
    /// (c) each class's generators are exactly its `ST` edges.
    pub generators_match: bool,
    pub pass: bool,
}

fn perm_string(p: &[u8]) -> String {
    p.iter().map(|d| char::from(b'0' + d)).collect()
}

/// Builds `Sym_{kl}` as strings, collapses symbol `s` to `s / l` and checks
/// that the fibers are the right cosets of the subgroup generated by the
/// transpositions inside each block of `l` symbols, and that the star
/// transpositions induce `ST(k, l)` on them.
pub fn schreier_quotient_check(k: usize, ell: usize) -> Result<CosetTable> {
    let params = Params::new(k, ell)?;
    let len = params.len();
    if len > SYM_CAP {
        return Err(Error::InstanceTooLarge {
            what: "symmetric group".into(),
            count: factorial(len),
            cap: factorial(SYM_CAP),
        });
    }
    let st = star_graph(k, ell)?;
    let mut perms = Vec::new();
    let mut p: Vec<u8> = (0..len as u8).collect();
    loop {
        perms.push(p.clone());
        if !crate::multiset::next_permutation(&mut p) {
            break;
        }
    }
    let collapse = |p: &[u8]| -> MString {
        MString::from_raw(params, p.iter().map(|&s| s / ell as u8).collect())
    };
    let index: BTreeMap<Vec<u8>, usize> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); st.n()];
    for (i, p) in perms.iter().enumerate() {
        fibers[collapse(p).rank()].push(i);
    }

    // block transpositions act on values: a l + b <-> a l + b + 1
    let block_moves: Vec<(u8, u8)> = (0..k)
        .flat_map(|a| (0..ell - 1).map(move |b| ((a * ell + b) as u8, (a * ell + b + 1) as u8)))
        .collect();
    let fiber_size = factorial(ell).pow(k as u32) as usize;
    let mut fibers_are_cosets = true;
    for fiber in &fibers {
        let mut orbit = BTreeSet::from([fiber[0]]);
        let mut stack = vec![fiber[0]];
        while let Some(i) = stack.pop() {
            for &(x, y) in &block_moves {
                let q: Vec<u8> = perms[i]
                    .iter()
                    .map(|&s| if s == x { y } else if s == y { x } else { s })
                    .collect();
                let qi = index[&q];
                if orbit.insert(qi) {
                    stack.push(qi);
                }
            }
        }
        if fiber.len() != fiber_size || orbit.into_iter().collect::<Vec<_>>() != *fiber {
            fibers_are_cosets = false;
        }
    }

    let mut quotient = BTreeSet::new();
    let mut internal_moves_stay = true;
    for p in &perms {
        let v = collapse(p);
        for j in 1..len {
            let mut q = p.clone();
            q.swap(0, j);
            let w = collapse(&q);
            if v.entries()[j] != v.entries()[0] {
                let (a, b) = (v.rank(), w.rank());
                quotient.insert((a.min(b), a.max(b)));
            } else if w != v {
                internal_moves_stay = false;
            }
        }
    }
    let st_edges: BTreeSet<(usize, usize)> = st.graph.edges().iter().map(|e| (e.u, e.v)).collect();
    let quotient_matches = quotient == st_edges;

    let mut generators_match = true;
    let mut classes: Vec<CosetClass> = (0..st.n())
        .map(|v| {
            let s = st.vertex(v);
            let generators: Vec<(usize, usize)> = (1..len)
                .filter(|&j| s.entries()[j] != s.entries()[0])
                .map(|j| (0, j))
                .collect();
            let via_edges: BTreeSet<usize> = st.graph.incident(v).iter().flat_map(|&(_, e)| st.graph.edge(e).labels.clone()).map(|l| l as usize).collect();
            if via_edges != generators.iter().map(|&(_, j)| j).collect() {
                generators_match = false;
            }
            CosetClass {
                vertex: s.to_string(),
                fiber: fibers[v].iter().map(|&i| perm_string(&perms[i])).collect(),
                generators,
            }
        })
        .collect();
    if ell == 2 {
        classes.sort_by_key(|c| {
            let v = MString::parse(params, &c.vertex).expect("own vertex");
            (v.repeat_position().expect("l = 2"), v.first())
        });
    }
    let pass = fibers_are_cosets && quotient_matches && internal_moves_stay && generators_match;
    Ok(CosetTable {
        k,
        ell,
        classes,
        fibers_are_cosets,
        fiber_size,
        quotient_matches,
        internal_moves_stay,
        generators_match,
        pass,
    })
}

impl CosetTable {
    /// Aligned text: the cosets column by column, then the vertex each
    /// collapses to, then its local generators.
    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                c.generators
                    .iter()
                    .map(|(a, b)| format!("({a} {b})"))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        let widths: Vec<usize> = self
            .classes
            .iter()
            .zip(&gens)
            .map(|(c, g)| c.fiber.iter().map(String::len).chain([c.vertex.len(), g.len()]).max().unwrap_or(0))
            .collect();
        let label_width = 10;
        let row = |label: &str, cells: &mut dyn Iterator<Item = &str>| {
            let mut line = format!("{label:<label_width$} ||");
            for (cell, &w) in cells.zip(&widths) {
                let _ = write!(line, " {cell:^w$} |");
            }
            line.pop();
            line.trim_end().to_string() + "\n"
        };
        let rule: String = "-".repeat(label_width + 3 + widths.iter().map(|w| w + 3).sum::<usize>() - 1) + "\n";
        let mut out = String::new();
        for r in 0..self.fiber_size {
            let label = if r == 0 { "cosets" } else { "" };
            out += &row(label, &mut self.classes.iter().map(|c| c.fiber[r].as_str()));
        }
        out += &rule;
        out += &row("vertex", &mut self.classes.iter().map(|c| c.vertex.as_str()));
        out += &rule;
        out += &row("generators", &mut gens.iter().map(String::as_str));
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SetVerdict {
    pub position: usize,
    pub size: usize,
    pub efficient: bool,
    /// For a failing set, one concrete reason.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PancakeReport {
    pub family: String,
    pub k: usize,
    pub sets: Vec<SetVerdict>,
    /// (a) the last repeat-position set is a perfect code.
    pub last_efficient: bool,
    /// (b) every other repeat-position set fails with a witness.
    pub others_fail: bool,
    pub some_other_fails: bool,
    /// (c) regularity after removing the last set, then after also removing
    /// the edges of the last generator.
    pub remainder_regularity: Regularity,
    pub stripped_regularity: Regularity,
    /// The open neighborhoods of the last set partition the remainder.
    pub neighborhoods_partition: bool,
    /// Components of the stripped graph, compared with those neighborhoods.
    pub stripped_components: usize,
    pub components_are_neighborhoods: bool,
    pub pass: bool,
}

fn describe(g: &PermGraph, v: &Violation) -> String {
    let _ = g;
    match v {
        Violation::WrongCount { vertex, dominators, expected } => {
            format!("{vertex} has dominators {dominators:?}, expected {expected}")
        }
        Violation::NonUniqueIntersection { vertex, intersection } => {
            format!("dominators of {vertex} share neighbors {intersection:?}")
        }
        Violation::NonIndependent { vertex, pair } => {
            format!("dominators {} and {} of {vertex} are adjacent", pair.0, pair.1)
        }
        Violation::Distance { distance } => format!("two members at distance {distance}"),
    }
}

/// Repeat-position sets of an `l = 2` graph built from generators
/// `(0 j) pi_j`: which are perfect codes, with a witness for each that is
/// not, and the structure left after removing the last one.
pub fn pancake_chain_check(g: &PermGraph) -> Result<PancakeReport> {
    if g.params.ell != 2 {
        return Err(Error::precondition("pancake checks need l = 2"));
    }
    if g.params.k > 4 {
        return Err(Error::InstanceTooLarge {
            what: "pancake check".into(),
            count: g.params.k as u128,
            cap: 4,
        });
    }
    let graph = &g.graph;
    let last = g.params.len() - 1;
    let mut sets = Vec::new();
    for i in 1..=last {
        let set = sigma_set(g, i)?;
        let cert = verify_efficient_domination(graph, &set, 1)?;
        let witness = (!cert.pass).then(|| {
            let adjacent = set
                .iter()
                .flat_map(|&a| set.iter().map(move |&b| (a, b)))
                .find(|&(a, b)| a < b && graph.adjacent(a, b));
            match adjacent {
                Some((a, b)) => format!("members {} and {} are adjacent", g.vertex(a), g.vertex(b)),
                None => describe(g, &cert.violations[0]),
            }
        });
        sets.push(SetVerdict {
            position: i,
            size: set.len(),
            efficient: cert.pass,
            witness,
        });
    }
    let last_efficient = sets[last - 1].efficient;
    let others_fail = sets[..last - 1].iter().all(|s| !s.efficient && s.witness.is_some());
    let some_other_fails = sets[..last - 1].iter().any(|s| !s.efficient);
    // the pancake family must break every other set, other families just one
    let pass = last_efficient
        && match g.family {
            GeneratorFamily::Pancake => others_fail,
            _ => some_other_fails,
        };

    let black = sigma_set(g, last)?;
    let remainder = graph.without(&black, &[])?;
    let last_edges: Vec<usize> = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.labels.contains(&(last as u32)))
        .map(|(id, _)| id)
        .collect();
    let stripped = graph.without(&black, &last_edges)?;

    let mut hoods: Vec<BTreeSet<usize>> = black.iter().map(|&v| graph.neighbors(v).collect()).collect();
    hoods.sort();
    let covered: usize = hoods.iter().map(BTreeSet::len).sum();
    let union: BTreeSet<usize> = hoods.iter().flatten().copied().collect();
    let neighborhoods_partition = covered == union.len() && union.len() + black.len() == g.n();
    let mut comps: Vec<BTreeSet<usize>> = stripped
        .graph
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| stripped.vertex_origin[v]).collect())
        .collect();
    comps.sort();
    let components_are_neighborhoods = comps == hoods;

    Ok(PancakeReport {
        family: g.family.tag().to_string(),
        k: g.params.k,
        pass,
        sets,
        last_efficient,
        others_fail,
        some_other_fails,
        remainder_regularity: remainder.graph.regularity(),
        stripped_regularity: stripped.graph.regularity(),
        neighborhoods_partition,
        stripped_components: comps.len(),
        components_are_neighborhoods,
    })
}

/// The custom family at `len` positions whose only non-identity involution
/// is `(1 2)` on generator 3; used to spot-check other involution choices.
pub fn single_twist_family(len: usize) -> GeneratorFamily {
    let mut pis = vec![Vec::new(); len - 1];
    if len > 3 {
        pis[2] = vec![(1, 2)];
    }
    GeneratorFamily::Custom(pis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{build_graph, pancake_graph};
    use crate::graph::cycle_graph;

    fn embed(k: usize, s: &str, j: usize) -> String {
        let v = MString::parse(Params::new(k, 2).unwrap(), s).unwrap();
        kappa_embed(&v, j).unwrap().to_string()
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(embed(2, "0011", 2), "001122");
        assert_eq!(embed(2, "0011", 0), "112200");
        assert_eq!(embed(2, "0011", 1), "220011");
        let v = MString::parse(Params::new(2, 2).unwrap(), "0011").unwrap();
        assert!(kappa_embed(&v, 3).is_err());
        let v3 = MString::parse(Params::new(2, 3).unwrap(), "000111").unwrap();
        assert!(kappa_embed(&v3, 0).is_err());
    }

    #[test]
    fn chain_two_into_three() {
        let r = verify_chain(2).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
        assert_eq!(r.images.len(), 3);
        assert_eq!(r.class_size, 18);
        assert_eq!(r.expected_size, 18);
        assert!(r.images.iter().all(|i| i.block.len() == 6));
        assert_eq!(r.restricted_neighborhood, 18);
        assert_eq!(r.full_neighborhood, 36);
    }

    #[test]
    fn chain_three_into_four() {
        let r = verify_chain(3).unwrap();
        assert!(r.pass);
        assert_eq!(r.class_size, 4 * 90);
    }

    #[test]
    fn coset_table_reproduces_the_display() {
        let t = schreier_quotient_check(2, 2).unwrap();
        assert!(t.pass);
        let order: Vec<&str> = t.classes.iter().map(|c| c.vertex.as_str()).collect();
        assert_eq!(order, ["0011", "1100", "0101", "1010", "0110", "1001"]);
        assert_eq!(t.classes[0].fiber, ["0123", "0132", "1023", "1032"]);
        assert_eq!(t.classes[1].fiber, ["2301", "2310", "3201", "3210"]);
        assert_eq!(t.classes[0].generators, [(0, 2), (0, 3)]);
        assert_eq!(t.classes[2].generators, [(0, 1), (0, 3)]);
        assert_eq!(t.classes[4].generators, [(0, 1), (0, 2)]);
        let text = t.to_text();
        assert!(text.lines().next().unwrap().contains("0123"));
        assert!(text.contains("(0 2),(0 3)"));
    }

    #[test]
    fn coset_tables_other_sizes() {
        for (k, ell) in [(2, 3), (3, 2), (4, 2), (2, 4)] {
            let t = schreier_quotient_check(k, ell).unwrap();
            assert!(t.pass, "k={k} l={ell}");
        }
        assert!(schreier_quotient_check(3, 3).is_err());
    }

    #[test]
    fn pancake_hexagon() {
        let g = pancake_graph(2, 2).unwrap();
        assert!(g.graph.is_isomorphic(&cycle_graph(6)).unwrap());
        let r = pancake_chain_check(&g).unwrap();
        assert!(r.pass);
        assert_eq!(r.sets[0].witness.as_deref(), Some("members 0011 and 1100 are adjacent"));
    }

    #[test]
    fn pancake_k3() {
        let r = pancake_chain_check(&pancake_graph(3, 2).unwrap()).unwrap();
        assert!(r.last_efficient);
        assert!(r.pass);
        assert!(r.neighborhoods_partition);
        assert_eq!(r.remainder_regularity, Regularity::Regular(3));
    }

    #[test]
    fn star_family_keeps_every_set() {
        let r = pancake_chain_check(&star_graph(3, 2).unwrap()).unwrap();
        assert!(r.sets.iter().all(|s| s.efficient));
        assert!(!r.pass);
    }

    #[test]
    fn twisted_family() {
        let g = build_graph(Params::new(3, 2).unwrap(), single_twist_family(6)).unwrap();
        let r = pancake_chain_check(&g).unwrap();
        assert!(r.last_efficient);
        assert!(r.some_other_fails);
        assert!(r.pass);
    }
}
