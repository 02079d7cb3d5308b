//! Periodic colorings of tori and of Cartesian and strong grids.

use frugalis::construct::{color_cartesian_power_grid, color_strong_power_grid, color_torus, torus_palette};

fn main() -> frugalis::Result<()> {
    for (m, n) in [(3, 3), (3, 5), (6, 9), (7, 11)] {
        println!("C{m} x C{n}: {} colors (formula {})", color_torus(m, n)?.palette(), torus_palette(m, n)?);
    }
    for sides in [vec![5], vec![4, 6], vec![3, 4, 5], vec![3, 3, 3, 3]] {
        println!("grid {sides:?}: {} colors", color_cartesian_power_grid(&sides)?.palette());
    }
    for dims in 1..=3 {
        println!("strong P7^{dims}: {} colors", color_strong_power_grid(7, dims)?.palette());
    }
    Ok(())
}
