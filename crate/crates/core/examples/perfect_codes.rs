//! First-symbol sets and repeat-position sets of ST(3,2) as efficient
//! dominating sets, with the dominator sets of one outside vertex.

use msgraph::domination::{d_set, se_set, sigma_set, verify_efficient_domination};
use msgraph::star_graph;

pub fn main() -> msgraph::Result<()> {
    let g = star_graph(3, 2)?;
    for i in 0..3 {
        let s = se_set(&g, i)?;
        let cert = verify_efficient_domination(&g.graph, &s, 2)?;
        println!("S_{i}: {} members, pass {}", s.len(), cert.pass);
    }

    // every D-set wrt S_0 that contains 010122
    let s0 = se_set(&g, 0)?;
    let w = g.lookup("010122")?;
    for u in g.graph.neighbors(w).filter(|u| !s0.contains(u)) {
        let d = d_set(&g.graph, u, &s0)?;
        let names: Vec<&str> = d.iter().map(|&x| g.graph.name(x)).collect();
        println!("S_0({}) = {{{}}}", g.graph.name(u), names.join(","));
    }

    for i in 1..6 {
        let s = sigma_set(&g, i)?;
        let cert = verify_efficient_domination(&g.graph, &s, 1)?;
        println!(
            "Sigma_{i}: {} members, perfect code {}, min distance {:?}",
            s.len(),
            cert.pass,
            cert.min_internal_distance
        );
    }
    Ok(())
}
