//! Prints every bound the library knows for a few graphs, as JSON.

use frugalis::bounds::{bounds_report, is_psi_t, Known};
use frugalis::graph::{complete_multipartite, psi_multipartite, spider};
use frugalis::{Frugality, SolveBudget};

fn main() -> frugalis::Result<()> {
    for (name, g) in [("spider 4", spider(4)), ("K3,3", complete_multipartite(&[3, 3])), ("K2,2,2", psi_multipartite(2, 3)?)] {
        let report = bounds_report(&g, Frugality::TWO, Known::default());
        println!("{name}: {}", serde_json::to_string_pretty(&report)?);
        let psi = is_psi_t(&g, Frugality::TWO, &SolveBudget::unlimited()).value().flatten().is_some();
        println!("{name} in Psi_2: {psi}");
    }
    Ok(())
}
