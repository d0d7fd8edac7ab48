//! Which repeat-position sets of the pancake graphs are perfect codes.

use msgraph::chains::pancake_chain_check;
use msgraph::pancake_graph;

pub fn main() -> msgraph::Result<()> {
    for k in 2..=4 {
        let g = pancake_graph(k, 2)?;
        let rep = pancake_chain_check(&g)?;
        println!("PC({k},2): pass {}", rep.pass);
        for s in &rep.sets {
            println!(
                "  Sigma_{}: {} members, efficient {} {}",
                s.position,
                s.size,
                s.efficient,
                s.witness.as_deref().unwrap_or("")
            );
        }
    }
    Ok(())
}
