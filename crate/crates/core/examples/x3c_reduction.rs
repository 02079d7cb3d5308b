//! Builds the frugal independent set gadget for two exact-cover instances and solves both sides.

use frugalis::exact::alpha_t_frugal_exact;
use frugalis::reduction::{x3c_brute_force, x3c_to_frugal, X3CInstance};
use frugalis::{Frugality, SolveBudget};

fn main() -> frugalis::Result<()> {
    let instances = [X3CInstance::new(2, vec![[0, 1, 2], [2, 3, 4], [3, 4, 5]])?, X3CInstance::new(2, vec![[0, 1, 2], [1, 3, 4], [2, 4, 5]])?];
    for inst in &instances {
        let out = x3c_to_frugal(inst, Frugality::TWO)?;
        let alpha = alpha_t_frugal_exact(&out.graph, Frugality::TWO, &SolveBudget::unlimited()).value().map(|(a, _)| a);
        println!("{}: cover {:?}, gadget n={} k={} alpha={alpha:?}", inst.to_json(), x3c_brute_force(inst), out.graph.n(), out.k);
    }
    Ok(())
}
