//! Frugal chromatic numbers of a graph and its complement against their sum bounds.

use frugalis::bounds::ng_report;
use frugalis::graph::{cycle, ng_exceptional, star};
use frugalis::SolveBudget;

fn main() -> frugalis::Result<()> {
    let b = SolveBudget::unlimited();
    let mut graphs = vec![("C8".to_string(), cycle(8)?), ("K1,7".to_string(), star(8))];
    graphs.extend(ng_exceptional().into_iter().enumerate().map(|(i, g)| (format!("exceptional {i}"), g)));
    for (name, g) in &graphs {
        let r = ng_report(g, &b)?;
        println!("{name}: {} + {} = {} in [{}, {}]", r.chi_g, r.chi_complement, r.sum, r.lower_bound, r.upper_bound);
    }
    Ok(())
}
