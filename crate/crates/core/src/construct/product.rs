//! Colorings of the four standard products built from colorings of the factors. Product vertex
//! `(i, j)` is `i * |V(h)| + j`.

use super::certified;
use crate::check::{is_2_distance_coloring, is_injective_coloring, is_t_frugal_coloring, Coloring};
use crate::error::{Error, Result};
use crate::exact::{chi2_exact, chi_injective_exact, chi_t_frugal_exact, Outcome, SolveBudget};
use crate::graph::{product, Graph, ProductKind};
use crate::Frugality;

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not valid for its factor")))
    }
}

fn witness(o: Outcome<(usize, Coloring)>) -> Result<Coloring> {
    o.value().map(|(_, c)| c).ok_or(Error::BudgetExhausted)
}

fn combine(g: &Graph, h: &Graph, palette: usize, f: impl Fn(usize, usize) -> usize) -> Result<Coloring> {
    let colors = (0..g.n()).flat_map(|i| (0..h.n()).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
    Coloring::new(colors, palette)
}

/// `c(i, j) = cg(i) + ch(j) mod k` for 2-distance colorings, `k` the larger palette.
pub fn color_cartesian(g: &Graph, h: &Graph, cg: &Coloring, ch: &Coloring) -> Result<Coloring> {
    require(is_2_distance_coloring(g, cg)?, "first 2-distance coloring")?;
    require(is_2_distance_coloring(h, ch)?, "second 2-distance coloring")?;
    let k = cg.palette().max(ch.palette()).max(1);
    let c = combine(g, h, k, |i, j| (cg.color(i) + ch.color(j)) % k)?;
    certified(&product(ProductKind::Cartesian, g, h), c, Frugality::TWO, "Cartesian product coloring")
}

pub fn color_cartesian_auto(g: &Graph, h: &Graph, budget: &SolveBudget) -> Result<Coloring> {
    color_cartesian(g, h, &witness(chi2_exact(g, budget))?, &witness(chi2_exact(h, budget))?)
}

/// Pairs `(cg(i), ch(j))` with `cg` a 2-distance coloring of `g` and `ch` a 2-frugal coloring of `h`.
pub fn color_strong(g: &Graph, h: &Graph, cg: &Coloring, ch: &Coloring) -> Result<Coloring> {
    require(is_2_distance_coloring(g, cg)?, "2-distance coloring")?;
    require(is_t_frugal_coloring(h, ch, Frugality::TWO)?, "2-frugal coloring")?;
    let c = combine(g, h, cg.palette() * ch.palette(), |i, j| cg.color(i) * ch.palette() + ch.color(j))?;
    certified(&product(ProductKind::Strong, g, h), c, Frugality::TWO, "strong product coloring")
}

/// Pairs `(cg(i), ch(j))` with `cg` an injective coloring of `g` and `ch` a 2-frugal coloring of `h`.
pub fn color_direct(g: &Graph, h: &Graph, cg: &Coloring, ch: &Coloring) -> Result<Coloring> {
    require(is_injective_coloring(g, cg)?, "injective coloring")?;
    require(is_t_frugal_coloring(h, ch, Frugality::TWO)?, "2-frugal coloring")?;
    let c = combine(g, h, cg.palette() * ch.palette(), |i, j| cg.color(i) * ch.palette() + ch.color(j))?;
    certified(&product(ProductKind::Direct, g, h), c, Frugality::TWO, "direct product coloring")
}

/// Moves a coloring of `h x g` (either product here is symmetric) onto `g x h`.
fn swap_factors(g: &Graph, h: &Graph, c: &Coloring) -> Result<Coloring> {
    combine(g, h, c.palette(), |i, j| c.color(j * g.n() + i))
}

fn smaller(a: Coloring, b: Coloring) -> Coloring {
    if b.palette() < a.palette() {
        b
    } else {
        a
    }
}

/// The better of both factor orientations, using exact witnesses.
pub fn color_strong_auto(g: &Graph, h: &Graph, budget: &SolveBudget) -> Result<Coloring> {
    let frugal = |x: &Graph| witness(chi_t_frugal_exact(x, Frugality::TWO, budget));
    let one = color_strong(g, h, &witness(chi2_exact(g, budget))?, &frugal(h)?)?;
    let other = color_strong(h, g, &witness(chi2_exact(h, budget))?, &frugal(g)?)?;
    Ok(smaller(one, swap_factors(g, h, &other)?))
}

pub fn color_direct_auto(g: &Graph, h: &Graph, budget: &SolveBudget) -> Result<Coloring> {
    let frugal = |x: &Graph| witness(chi_t_frugal_exact(x, Frugality::TWO, budget));
    let one = color_direct(g, h, &witness(chi_injective_exact(g, budget))?, &frugal(h)?)?;
    let other = color_direct(h, g, &witness(chi_injective_exact(h, budget))?, &frugal(g)?)?;
    Ok(smaller(one, swap_factors(g, h, &other)?))
}

/// Classes `B_c x {j}` for the classes `B_c` of a 2-frugal coloring of `g`.
pub fn color_lexicographic(g: &Graph, h: &Graph, cg: &Coloring) -> Result<Coloring> {
    require(is_t_frugal_coloring(g, cg, Frugality::TWO)?, "2-frugal coloring")?;
    let c = combine(g, h, cg.palette() * h.n(), |i, j| cg.color(i) * h.n() + j)?;
    certified(&product(ProductKind::Lexicographic, g, h), c, Frugality::TWO, "lexicographic product coloring")
}

pub fn color_lexicographic_auto(g: &Graph, h: &Graph, budget: &SolveBudget) -> Result<Coloring> {
    color_lexicographic(g, h, &witness(chi_t_frugal_exact(g, Frugality::TWO, budget))?)
}
