//! Classifies the 6-cycles of ST(3,2) by their color pattern and checks
//! where the leftover-color edges of a type-1 cycle land.

use msgraph::coloring::sigma_total_coloring;
use msgraph::star_graph;
use msgraph::structure::{audit_type1_departures, classify_six_cycles, departing_edges, CycleKind};

pub fn main() -> msgraph::Result<()> {
    let g = star_graph(3, 2)?;
    let tc = sigma_total_coloring(&g)?;
    let census = classify_six_cycles(&g.graph, &tc)?;
    println!("{} cycles: {} type 1, {} type 2, {} other", census.cycles.len(), census.type1, census.type2, census.other);

    let c = census.find(CycleKind::Type1([2, 3, 4])).next().expect("C(2,3,4) exists");
    let names: Vec<&str> = c.cycle.iter().map(|&v| g.graph.name(v)).collect();
    println!("C(2,3,4): {names:?}, edge colors {:?}", c.edge_colors);
    for (v, _, u) in departing_edges(&g.graph, &tc, &c.cycle, 5) {
        println!("  {} -5- {} (color {})", g.graph.name(v), g.graph.name(u), tc.vertex(u));
    }

    let audit = audit_type1_departures(&g.graph, &tc, &census);
    println!("landing distances {:?}, pass {}", audit.distance_histogram, audit.pass);
    Ok(())
}
