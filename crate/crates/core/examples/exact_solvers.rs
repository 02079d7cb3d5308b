//! Exact frugal chromatic and independence numbers of small graphs, with a node budget.

use frugalis::exact::{alpha_t_frugal_exact, chi2_exact, chi_t_frugal_exact};
use frugalis::graph::{cycle, hypercube, petersen, star};
use frugalis::{Frugality, Graph, Outcome, SolveBudget};

fn main() -> frugalis::Result<()> {
    let budget = SolveBudget::nodes(5_000_000);
    let graphs: Vec<(&str, Graph)> = vec![("C5", cycle(5)?), ("Q3", hypercube(3)?), ("K1,9", star(10)), ("Petersen", petersen())];
    for (name, g) in &graphs {
        for t in 1..=3 {
            let t = Frugality::new(t)?;
            let chi = chi_t_frugal_exact(g, t, &budget).map(|(k, _)| k);
            let alpha = alpha_t_frugal_exact(g, t, &budget).map(|(a, _)| a);
            println!("{name:<9} t={} chi={} alpha={}", t.get(), show(chi), show(alpha));
        }
        println!("{name:<9} chi(G^2)={}", show(chi2_exact(g, &budget).map(|(k, _)| k)));
    }
    Ok(())
}

fn show(o: Outcome<usize>) -> String {
    o.value().map_or("unknown".into(), |v| v.to_string())
}
