//! Checks hand-made colorings of the 5-cycle against the frugality predicates.

use frugalis::check::{is_2_distance_coloring, is_proper, is_t_frugal_coloring};
use frugalis::graph::cycle;
use frugalis::{Coloring, Frugality};

fn main() -> frugalis::Result<()> {
    let c5 = cycle(5)?;
    let three = Coloring::new(vec![0, 1, 0, 1, 2], 3)?;
    let five = Coloring::new(vec![0, 1, 2, 3, 4], 5)?;
    for (name, c) in [("3 colors", &three), ("5 colors", &five)] {
        println!(
            "{name}: proper {} 1-frugal {} 2-frugal {} distance-2 {}",
            is_proper(&c5, c)?,
            is_t_frugal_coloring(&c5, c, Frugality::new(1)?)?,
            is_t_frugal_coloring(&c5, c, Frugality::TWO)?,
            is_2_distance_coloring(&c5, c)?,
        );
    }
    println!("json: {}", three.to_json());
    Ok(())
}
