//! Removing a color class and its edges from ST(3,2), the toroidal assembly
//! T_5(1,2,3,4), and the apex supergraph of ST(2,2).

use msgraph::coloring::sigma_total_coloring;
use msgraph::domination::se_set;
use msgraph::graph::hypercube;
use msgraph::star_graph;
use msgraph::structure::{augment_supergraph, theorem_chi_suite, toroidal_assembly};

pub fn main() -> msgraph::Result<()> {
    let g = star_graph(3, 2)?;
    let tc = sigma_total_coloring(&g)?;
    let reference = star_graph(2, 2)?;
    let chi = theorem_chi_suite(&g.graph, &tc, Some(&reference.graph))?;
    println!("h = {}, components per class {:?}, pass {}", chi.h, chi.component_counts(), chi.pass);

    let t = toroidal_assembly(&g, &tc, 5, [1, 2, 3, 4])?;
    println!(
        "T_5(1,2,3,4): {} type-2 cycles, {} type-1 cycles, union {:?}, pass {}",
        t.type2_cycles,
        t.type1_cycles.len(),
        t.union_regularity,
        t.pass
    );

    let small = star_graph(2, 2)?;
    let small_tc = sigma_total_coloring(&small)?;
    let aug = augment_supergraph(&small.graph, &small_tc, &[se_set(&small, 0)?, se_set(&small, 1)?])?;
    println!(
        "apex supergraph: cube {}, total extensions {}",
        aug.graph.is_isomorphic(&hypercube(3))?,
        aug.total_extensions
    );
    Ok(())
}
