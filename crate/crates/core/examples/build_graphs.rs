//! Builds a few star and pancake graphs and prints their basic metrics.

use msgraph::{analyze, pancake_graph, star_graph};

pub fn main() -> msgraph::Result<()> {
    for (k, l) in [(2, 2), (2, 3), (3, 2), (3, 1)] {
        let g = star_graph(k, l)?;
        let m = analyze(&g.graph);
        println!(
            "ST({k},{l}): {} vertices, {} edges, {:?}, girth {:?}, bipartite {}",
            m.vertices, m.edges, m.regularity, m.girth, m.bipartite
        );
    }
    let pc = pancake_graph(3, 2)?;
    println!("PC(3,2): {} vertices, {:?}", pc.n(), pc.graph.regularity());

    // the hexagon, in rank order
    print!("{}", star_graph(2, 2)?.to_edge_list());
    Ok(())
}
