//! Optimal 2-frugal colorings of random block graphs.

use frugalis::construct::color_block_graph;
use frugalis::graph::{random_block, structural_flags};

fn main() -> frugalis::Result<()> {
    for seed in 0..6 {
        let g = random_block(24, 5, seed)?;
        let c = color_block_graph(&g)?;
        let omega = structural_flags(&g).clique_number;
        println!("seed {seed}: omega={omega} max degree={} palette={}", g.max_degree(), c.palette());
    }
    Ok(())
}
