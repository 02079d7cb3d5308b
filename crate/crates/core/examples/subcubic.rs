//! 2-frugal 5-colorings of cubic graphs, and 3-colorings of claw-free cubic ones.

use frugalis::construct::{color_clawfree_cubic, color_subcubic_traced};
use frugalis::graph::{mobius_kantor, petersen, prism, random_cubic};

fn main() -> frugalis::Result<()> {
    let mut graphs = vec![("petersen".to_string(), petersen()), ("mobius_kantor".to_string(), mobius_kantor())];
    graphs.extend((0..4).map(|s| (format!("random cubic 30 seed {s}"), random_cubic(30, s).unwrap())));
    for (name, g) in &graphs {
        let (c, trace) = color_subcubic_traced(g)?;
        println!("{name}: palette {} repairs {} fallback {}", c.palette(), trace.recolored.len(), trace.used_fallback());
    }
    println!("prism, claw-free: palette {}", color_clawfree_cubic(&prism())?.palette());
    Ok(())
}
