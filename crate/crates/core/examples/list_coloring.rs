//! Edge-list assignments on ST(2,3): disjoint lists across every edge, and
//! the local obstruction to an efficient selection around the identity.

use msgraph::coloring::{choosability_suite, efficiency_obstruction_witness};
use msgraph::star_graph;

pub fn main() -> msgraph::Result<()> {
    let g = star_graph(2, 3)?;
    let v = g.params.identity();
    println!("list of {v}: {:?}", v.list_assignment()?);

    let first = choosability_suite(&g, |_, list| list[0])?;
    let last = choosability_suite(&g, |_, list| *list.last().unwrap())?;
    println!(
        "{} edges, disjoint lists {}, min selector proper {}, max selector proper {}",
        first.edges_checked, first.disjoint_lists, first.proper, last.proper
    );

    let ob = efficiency_obstruction_witness(&g, &v)?;
    println!(
        "2-ball of {}: {} vertices, {} selections, none efficient: {}",
        v, ob.ball_size, ob.selections, ob.pass
    );
    if let Some((a, b, c)) = &ob.sample_witness {
        println!("min-of-list selection gives {a} and {b} the same color {c}");
    }
    Ok(())
}
