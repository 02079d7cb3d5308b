//! Colorings of graph products assembled from colorings of the factors.

use frugalis::bounds::product_bounds;
use frugalis::construct::{color_cartesian_auto, color_direct_auto, color_lexicographic_auto, color_strong_auto};
use frugalis::graph::{cycle, path};
use frugalis::{ProductKind, SolveBudget};

fn main() -> frugalis::Result<()> {
    let (g, h) = (cycle(6)?, path(4));
    let b = SolveBudget::unlimited();
    let built = [
        (ProductKind::Cartesian, color_cartesian_auto(&g, &h, &b)?),
        (ProductKind::Strong, color_strong_auto(&g, &h, &b)?),
        (ProductKind::Direct, color_direct_auto(&g, &h, &b)?),
        (ProductKind::Lexicographic, color_lexicographic_auto(&g, &h, &b)?),
    ];
    for (kind, c) in built {
        let bounds: Vec<String> = product_bounds(kind, &g, &h, &b)?.iter().map(|e| format!("{} {}", e.name, e.value())).collect();
        println!("C6 x P4 {kind:?}: palette {} ({})", c.palette(), bounds.join(", "));
    }
    Ok(())
}
