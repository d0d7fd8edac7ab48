//! Embeddings of ST(2,2) into ST(3,2) and the coset table of the quotient
//! of the symmetric group.

use msgraph::chains::{kappa_embed, schreier_quotient_check, verify_chain};
use msgraph::star_graph;

pub fn main() -> msgraph::Result<()> {
    let g = star_graph(2, 2)?;
    for j in 0..3 {
        let images: Vec<String> = g.vertices.iter().map(|v| kappa_embed(v, j).map(|w| w.to_string())).collect::<Result<_, _>>()?;
        println!("kappa_{j}: {images:?}");
    }

    let chain = verify_chain(2)?;
    println!(
        "{} images, class {} of {}, restricted neighborhood {}, pass {}",
        chain.images.len(),
        chain.class_size,
        chain.expected_size,
        chain.restricted_neighborhood,
        chain.pass
    );

    let table = schreier_quotient_check(2, 2)?;
    print!("{}", table.to_text());
    Ok(())
}
