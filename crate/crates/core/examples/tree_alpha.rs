//! Linear-time frugal independence number of random trees, checked against exact search.

use frugalis::exact::alpha_t_frugal_exact;
use frugalis::graph::random_tree;
use frugalis::tree::alpha_t_frugal_tree;
use frugalis::{Frugality, SolveBudget};

fn main() -> frugalis::Result<()> {
    for seed in 0..5 {
        let tree = random_tree(16, seed);
        for t in 1..=3 {
            let t = Frugality::new(t)?;
            let (a, set) = alpha_t_frugal_tree(&tree, t)?;
            let exact = alpha_t_frugal_exact(&tree, t, &SolveBudget::unlimited()).value().map(|(v, _)| v);
            println!("seed {seed} t={} alpha={a} exact={exact:?} set={:?}", t.get(), set.members());
        }
    }
    Ok(())
}
