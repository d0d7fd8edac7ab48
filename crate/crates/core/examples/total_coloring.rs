//! The repeat-position total coloring of ST(3,2), its DOT rendering and the
//! reference coloring of K_5.

use msgraph::builder::build_odd_complete_colored;
use msgraph::coloring::{sigma_total_coloring, verify_coloring, Mode};
use msgraph::export::to_dot;
use msgraph::star_graph;

pub fn main() -> msgraph::Result<()> {
    let g = star_graph(3, 2)?;
    let tc = sigma_total_coloring(&g)?;
    let rep = verify_coloring(&g.graph, &tc, Mode::Efficient)?;
    println!("ST(3,2): colors {:?}, efficient {}", tc.used_colors(), rep.pass);

    let (k5, tc5) = build_odd_complete_colored(2)?;
    let vertices: Vec<u32> = (0..5).map(|v| tc5.vertex(v)).collect();
    let edges: Vec<u32> = (0..k5.m()).map(|e| tc5.edge(e)).collect();
    println!("K_5: vertices {vertices:?}, edges {edges:?}");
    println!("K_5 efficient: {}", verify_coloring(&k5, &tc5, Mode::Efficient)?.pass);

    let hexagon = star_graph(2, 2)?;
    print!("{}", to_dot(&hexagon.graph, Some(&sigma_total_coloring(&hexagon)?), "ST(2,2)"));
    Ok(())
}
