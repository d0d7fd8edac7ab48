//! Named verification suites. Each runs the checks of one area for a given
//! `(k, l)` and collects them into a [`SuiteReport`].

use std::fmt;
use std::str::FromStr;

use crate::builder::{build_graph, build_odd_complete_colored, pancake_graph, star_graph, GeneratorFamily, PermGraph};
use crate::chains::{pancake_chain_check, schreier_quotient_check, single_twist_family, verify_chain};
use crate::coloring::{
    choosability_suite, efficiency_obstruction_witness, positional_edge_coloring, sigma_total_coloring, verify_coloring,
    Mode, TotalColoring,
};
use crate::domination::{
    code_search, oracle_is_efficient, se_set, sigma_set, verify_ei_avoidance, verify_efficient_domination,
    verify_partition_and_edge_cover, SetFamily, Violation,
};
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, hypercube, Regularity, SMALL_GRAPH_CAP};
use crate::multiset::{Params, DEFAULT_VERTEX_CAP};
use crate::report::{SuiteReport, Witnesses};
use crate::structure::{
    audit_type1_departures, augment_supergraph, classify_six_cycles, theorem_chi_suite, toroidal_assembly, CycleKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Domination,
    Coloring,
    Chi,
    Cycles,
    Toroidal,
    Chains,
    Schreier,
    Pancake,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Domination,
        Suite::Coloring,
        Suite::Chi,
        Suite::Cycles,
        Suite::Toroidal,
        Suite::Chains,
        Suite::Schreier,
        Suite::Pancake,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Domination => "domination",
            Suite::Coloring => "coloring",
            Suite::Chi => "chi",
            Suite::Cycles => "cycles",
            Suite::Toroidal => "toroidal",
            Suite::Chains => "chains",
            Suite::Schreier => "schreier",
            Suite::Pancake => "pancake",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::malformed(format!("unknown suite {s:?}")))
    }
}

/// Inputs shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteInput {
    pub params: Params,
    /// A graph loaded from a file; built from `params` when absent.
    pub graph: Option<PermGraph>,
    pub seed: Option<u64>,
    pub cap: u128,
}

impl SuiteInput {
    pub fn new(k: usize, ell: usize) -> Result<Self> {
        Ok(SuiteInput {
            params: Params::new(k, ell)?,
            graph: None,
            seed: None,
            cap: DEFAULT_VERTEX_CAP,
        })
    }

    pub fn with_graph(graph: PermGraph) -> Self {
        SuiteInput {
            params: graph.params,
            graph: Some(graph),
            seed: None,
            cap: DEFAULT_VERTEX_CAP,
        }
    }

    fn star(&self) -> Result<PermGraph> {
        match &self.graph {
            Some(g) => Ok(g.clone()),
            None => {
                self.params.checked_vertex_count(self.cap)?;
                build_graph(self.params, GeneratorFamily::Star)
            }
        }
    }
}

type Outcome = Result<(bool, String, Witnesses)>;

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Ok((pass, detail.into(), Witnesses::default()))
}

/// Runs one suite. Size-cap violations and malformed inputs are errors;
/// everything else becomes a check status.
pub fn run_suite(suite: Suite, input: &SuiteInput) -> Result<SuiteReport> {
    let mut report = match suite {
        Suite::Domination => domination(input)?,
        Suite::Coloring => coloring(input)?,
        Suite::Chi => chi(input)?,
        Suite::Cycles => cycles(input)?,
        Suite::Toroidal => toroidal(input)?,
        Suite::Chains => chains(input)?,
        Suite::Schreier => schreier(input)?,
        Suite::Pancake => pancake(input)?,
        Suite::All => {
            let mut all = SuiteReport::new("all", input.params.k, input.params.ell);
            for s in Suite::EACH {
                all.merge(run_suite(s, input)?);
            }
            all
        }
    };
    report.seed = input.seed;
    Ok(report)
}

fn star_only(g: &PermGraph, report: &mut SuiteReport) -> bool {
    if g.family != GeneratorFamily::Star {
        report.skip("family", format!("suite needs the star family, input is {}", g.family.tag()));
        return false;
    }
    true
}

fn domination(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("domination", k, ell);
    if (k, ell) == (2, 1) {
        r.run("first-symbol sets", || {
            Err(Error::precondition("ST(2,1) is K2 and is excluded from the efficient-domination results"))
        });
        return Ok(r);
    }
    let g = input.star()?;
    if !star_only(&g, &mut r) {
        return Ok(r);
    }
    let small = g.n() <= 90;
    for i in 0..k {
        r.run(format!("S_{i} is an E^{ell}-set"), || {
            let set = se_set(&g, i)?;
            let cert = verify_efficient_domination(&g.graph, &set, ell)?;
            let mut detail = format!("{} members", set.len());
            if small {
                let oracle = oracle_is_efficient(&g.graph, &set, ell);
                detail += &format!(", oracle agrees: {}", oracle == cert.pass);
                return Ok((cert.pass && oracle, detail, cert.witnesses()));
            }
            Ok((cert.pass, detail, cert.witnesses()))
        });
    }
    r.run("first-symbol partition and doubled edge cover", || {
        let p = verify_partition_and_edge_cover(&g, SetFamily::Se)?;
        let detail = format!(
            "sizes {:?}, {} stars, membership {:?} (expected {})",
            p.set_sizes, p.stars_checked, p.membership_counts, p.expected_membership
        );
        Ok((p.pass, detail, p.witnesses))
    });
    if ell == 2 {
        for i in 1..2 * k {
            r.run(format!("Sigma_{i} is a perfect code at distance 3"), || {
                let set = sigma_set(&g, i)?;
                let cert = verify_efficient_domination(&g.graph, &set, 1)?;
                let exact = cert.min_internal_distance == Some(3);
                let mut pass = cert.pass && exact;
                let mut detail = format!("{} members, min distance {:?}", set.len(), cert.min_internal_distance);
                if small {
                    let oracle = oracle_is_efficient(&g.graph, &set, 1);
                    pass &= oracle;
                    detail += &format!(", oracle agrees: {}", oracle == cert.pass);
                }
                Ok((pass, detail, cert.witnesses()))
            });
        }
        r.run("repeat-position partition", || {
            let p = verify_partition_and_edge_cover(&g, SetFamily::Sigma)?;
            Ok((p.partition && p.stars_induced && p.doubled_cover, format!("sizes {:?}", p.set_sizes), p.witnesses))
        });
    }
    if g.n() <= 20 {
        r.run("exhaustive code search", || {
            let codes = code_search(&g.graph, ell)?;
            let firsts: Vec<Vec<usize>> = (0..k).map(|i| se_set(&g, i)).collect::<Result<_>>()?;
            let found = firsts.iter().all(|s| codes.contains(s));
            ok(found, format!("{} sets found, every S_i among them: {found}", codes.len()))
        });
    }
    r.run("negative control K_{2,3}", || {
        let k23 = complete_bipartite(2, 3);
        let cert = verify_efficient_domination(&k23, &[0, 1], 2)?;
        let witnessed = matches!(cert.violations.first(), Some(Violation::NonUniqueIntersection { .. }));
        Ok((!cert.pass && witnessed, "{x0, x1} rejected with a non-unique intersection".into(), cert.witnesses()))
    });
    Ok(r)
}

fn coloring(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("coloring", k, ell);
    let g = input.star()?;
    if !star_only(&g, &mut r) {
        return Ok(r);
    }
    r.run("positional edge coloring is proper", || {
        let tc = TotalColoring::new(vec![None; g.n()], positional_edge_coloring(&g)?, 1..g.params.len() as u32);
        let rep = verify_coloring(&g.graph, &tc, Mode::ProperEdge)?;
        Ok((rep.pass, format!("{} colors", g.params.len() - 1), rep.witnesses))
    });
    if ell == 2 {
        let tc = sigma_total_coloring(&g)?;
        r.run("repeat-position coloring is total and efficient", || {
            let rep = verify_coloring(&g.graph, &tc, Mode::Efficient)?;
            let count = tc.used_colors().len();
            Ok((rep.pass && count == 2 * k - 1, format!("{count} colors"), rep.witnesses))
        });
        r.run("color classes are the repeat-position sets", || {
            let same = (1..2 * k).all(|i| sigma_set(&g, i).ok() == Some(tc.class(i as u32)));
            ok(same, "")
        });
        if k > 2 {
            r.run("color-i edges avoid color-i vertices", || {
                let a = verify_ei_avoidance(&g, &tc)?;
                let sizes: Vec<usize> = a.color_edges.iter().map(|(_, e)| e.len()).collect();
                Ok((a.pass, format!("class edge counts {sizes:?}"), a.witnesses))
            });
        }
    }
    if ell >= 2 {
        for (name, pick_max) in [("min", false), ("max", true)] {
            r.run(format!("list coloring, {name} selector"), || {
                let rep = choosability_suite(&g, |_, list| {
                    if pick_max {
                        *list.last().unwrap()
                    } else {
                        list[0]
                    }
                })?;
                let detail = format!("{} edges with disjoint lists", rep.edges_checked);
                Ok((rep.disjoint_lists && rep.proper, detail, rep.witnesses))
            });
        }
    }
    if ell >= 3 && g.n() <= SMALL_GRAPH_CAP {
        r.run("no efficient selection near the identity", || {
            let rep = efficiency_obstruction_witness(&g, &g.params.identity())?;
            let detail = format!(
                "ball of {}, {} selections, pigeonhole vertices {} (formula {})",
                rep.ball_size, rep.selections, rep.pigeonhole_vertices, rep.pigeonhole_bound
            );
            ok(rep.pass, detail)
        });
    }
    r.run("K_5 reference coloring", || {
        let (k5, tc) = build_odd_complete_colored(2)?;
        let rep = verify_coloring(&k5, &tc, Mode::Efficient)?;
        Ok((rep.pass, "vertex j and edges {j-i, j+i} colored j".into(), rep.witnesses))
    });
    Ok(r)
}

fn chi(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("chi", k, ell);
    if ell != 2 {
        r.skip("decomposition", "needs l = 2");
        return Ok(r);
    }
    let g = input.star()?;
    if !star_only(&g, &mut r) {
        return Ok(r);
    }
    let tc = sigma_total_coloring(&g)?;
    if g.n() > SMALL_GRAPH_CAP {
        r.skip("decomposition", format!("{} vertices exceed the isomorphism cap", g.n()));
    } else {
        let reference = if k > 2 { Some(star_graph(k - 1, 2)?) } else { None };
        r.run("class removal decomposition", || {
            let rep = theorem_chi_suite(&g.graph, &tc, reference.as_ref().map(|p| &p.graph))?;
            let counts = rep.component_counts();
            // (n - n / (2k - 1)) / |V(ST(k-1, 2))| = 2k(k - 1)
            let expected = 2 * k * (k - 1);
            let mut w = Witnesses::default();
            for c in &rep.per_color {
                w.extend(&c.witnesses);
            }
            let pass = rep.pass && counts.iter().all(|&c| c == expected);
            Ok((pass, format!("h = {}, components per class {counts:?}, expected {expected}", rep.h), w))
        });
    }
    if k == 2 {
        r.run("apex supergraph has no efficient completion", || {
            let classes = vec![se_set(&g, 0)?, se_set(&g, 1)?];
            let rep = augment_supergraph(&g.graph, &tc, &classes)?;
            let cube = rep.graph.is_isomorphic(&hypercube(3))?;
            let detail = format!(
                "isomorphic to Q3: {cube}, total extensions {}, efficient {}",
                rep.total_extensions, rep.efficient_extensions
            );
            Ok((rep.pass && cube, detail, rep.witnesses))
        });
    }
    Ok(r)
}

fn cycles(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("cycles", k, ell);
    if ell != 2 {
        r.skip("classification", "needs l = 2");
        return Ok(r);
    }
    let g = input.star()?;
    if !star_only(&g, &mut r) {
        return Ok(r);
    }
    let tc = sigma_total_coloring(&g)?;
    let census = match classify_six_cycles(&g.graph, &tc) {
        Ok(c) => c,
        Err(Error::InstanceTooLarge { .. }) => {
            r.skip("classification", "graph exceeds the 6-cycle enumeration cap");
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    r.run("every 6-cycle has type 1 or 2", || {
        ok(
            census.other == 0,
            format!("{} type 1, {} type 2, {} other", census.type1, census.type2, census.other),
        )
    });
    if k >= 3 {
        r.run("C(2,3,4) present", || {
            ok(census.find(CycleKind::Type1([2, 3, 4])).next().is_some(), "")
        });
    }
    r.run("type-1 departures land in one class", || {
        let a = audit_type1_departures(&g.graph, &tc, &census);
        let detail = format!(
            "{} cycles, distance histogram {:?}",
            a.cycles_checked, a.distance_histogram
        );
        Ok((a.pass, detail, a.witnesses))
    });
    Ok(r)
}

fn toroidal(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("toroidal", k, ell);
    if ell != 2 || k < 3 {
        r.skip("assembly", "needs k >= 3 and l = 2");
        return Ok(r);
    }
    let g = input.star()?;
    if !star_only(&g, &mut r) {
        return Ok(r);
    }
    if g.n() > SMALL_GRAPH_CAP {
        r.skip("assembly", "graph exceeds the 6-cycle enumeration cap");
        return Ok(r);
    }
    let tc = sigma_total_coloring(&g)?;
    let d1 = (2 * k - 1) as u32;
    r.run(format!("T_{d1}(1,2,3,4)"), || {
        let t = toroidal_assembly(&g, &tc, d1, [1, 2, 3, 4])?;
        let landed = t.type1_cycles.iter().filter(|c| c.landing_in_class).count();
        let detail = format!(
            "{} type-2 cycles, {} type-1 cycles ({landed} land in class {d1}), class degrees {:?}, cycle spacing {:?}",
            t.type2_cycles,
            t.type1_cycles.len(),
            t.class_degrees,
            t.min_cycle_distance
        );
        Ok((t.pass, detail, t.witnesses))
    });
    Ok(r)
}

fn chains(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("chains", k, ell);
    if ell != 2 {
        r.skip("embeddings", "needs l = 2");
        return Ok(r);
    }
    let target = Params::new(k + 1, 2)?;
    if target.vertex_count().is_none_or(|n| n > SMALL_GRAPH_CAP as u128) {
        r.skip("embeddings", format!("ST({}, 2) exceeds the chain cap", k + 1));
        return Ok(r);
    }
    r.run(format!("ST({k},2) into ST({},2)", k + 1), || {
        let c = verify_chain(k)?;
        let detail = format!(
            "{} images, class {} = {} expected, neighborhoods full {} / restricted {}",
            c.images.len(),
            c.class_size,
            c.expected_size,
            c.full_neighborhood,
            c.restricted_neighborhood
        );
        Ok((c.pass, detail, c.witnesses))
    });
    Ok(r)
}

fn schreier(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("schreier", k, ell);
    if k * ell > crate::chains::SYM_CAP {
        r.skip("cosets", format!("Sym_{} exceeds the cap", k * ell));
        return Ok(r);
    }
    r.run("fibers are cosets and the quotient is ST", || {
        let t = schreier_quotient_check(k, ell)?;
        ok(t.pass, format!("{} fibers of size {}", t.classes.len(), t.fiber_size))
    });
    Ok(r)
}

fn pancake(input: &SuiteInput) -> Result<SuiteReport> {
    let Params { k, ell } = input.params;
    let mut r = SuiteReport::new("pancake", k, ell);
    if ell != 2 || k > 4 {
        r.skip("repeat-position sets", "needs l = 2 and k <= 4");
        return Ok(r);
    }
    let g = match &input.graph {
        Some(g) if g.family == GeneratorFamily::Pancake => g.clone(),
        _ => pancake_graph(k, 2)?,
    };
    r.run("only the last repeat-position set is a perfect code", || {
        let p = pancake_chain_check(&g)?;
        let mut w = Witnesses::default();
        for s in &p.sets {
            if let Some(x) = &s.witness {
                w.push(format!("Sigma_{}: {x}", s.position));
            }
        }
        let detail = format!(
            "remainder {}, stripped {}",
            describe_regularity(p.remainder_regularity),
            describe_regularity(p.stripped_regularity)
        );
        Ok((p.pass, detail, w))
    });
    if k == 3 {
        r.run("twisted involution family", || {
            let g = build_graph(g.params, single_twist_family(g.params.len()))?;
            let p = pancake_chain_check(&g)?;
            let bad: Vec<usize> = p.sets.iter().filter(|s| !s.efficient).map(|s| s.position).collect();
            ok(p.pass, format!("failing positions {bad:?}"))
        });
    }
    Ok(r)
}

fn describe_regularity(r: Regularity) -> String {
    match r {
        Regularity::Regular(d) => format!("{d}-regular"),
        Regularity::Biregular(a, b) => format!("({a},{b})-biregular"),
        Regularity::Empty => "empty".into(),
        Regularity::Irregular => "irregular".into(),
    }
}
