//! Exhaustive search for perfect codes and E^2-sets of the hexagon ST(2,2).

use msgraph::domination::code_search;
use msgraph::star_graph;

pub fn main() -> msgraph::Result<()> {
    let g = star_graph(2, 2)?;
    for ell in [1, 2] {
        let codes = code_search(&g.graph, ell)?;
        println!("l = {ell}: {} sets", codes.len());
        for c in codes {
            let names: Vec<&str> = c.iter().map(|&v| g.graph.name(v)).collect();
            println!("  {}", names.join(" "));
        }
    }
    Ok(())
}
