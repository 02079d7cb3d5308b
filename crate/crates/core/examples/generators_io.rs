//! Builds a few named graphs and round-trips them through graph6 and edge lists.

use frugalis::graph::{parse_edge_list, parse_graph6, petersen, random_cubic, torus, write_edge_list, write_graph6};

fn main() -> frugalis::Result<()> {
    for (name, g) in [("petersen", petersen()), ("torus 4x5", torus(4, 5)?), ("random cubic 12", random_cubic(12, 1)?)] {
        let g6 = write_graph6(&g);
        assert_eq!(parse_graph6(&g6)?, g);
        assert_eq!(parse_edge_list(&write_edge_list(&g))?, g);
        println!("{name:<16} n={:<3} m={:<3} {g6}", g.n(), g.m());
    }
    Ok(())
}
