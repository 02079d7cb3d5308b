//! Explicit frugal colorings. Every public constructor verifies its output before returning it,
//! so a construction bug surfaces as [`Error::Construction`] rather than an invalid coloring.

mod block;
mod lattice;
mod product;
mod subcubic;

pub use block::color_block_graph;
pub use lattice::{color_cartesian_power_grid, color_strong_power_grid, color_torus, eta, torus_palette, TorusPattern};
pub use product::{
    color_cartesian, color_cartesian_auto, color_direct, color_direct_auto, color_lexicographic, color_lexicographic_auto,
    color_strong, color_strong_auto,
};
pub use subcubic::{color_clawfree_cubic, color_subcubic, color_subcubic_traced, SubcubicTrace};

use crate::check::{is_t_frugal_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Frugality;

pub(crate) fn certified(g: &Graph, c: Coloring, t: Frugality, what: &str) -> Result<Coloring> {
    if is_t_frugal_coloring(g, &c, t)? {
        Ok(c)
    } else {
        Err(Error::Construction(format!("{what} produced an invalid {}-frugal coloring", t.get())))
    }
}

/// Incremental state for coloring vertices one at a time under the `t`-frugal rule.
pub(crate) struct Partial<'a> {
    g: &'a Graph,
    t: usize,
    pub(crate) colors: Vec<Option<usize>>,
    /// `cnt[v][c]`: neighbors of `v` with color `c`; rows grow on demand.
    cnt: Vec<Vec<usize>>,
}

impl<'a> Partial<'a> {
    pub(crate) fn new(g: &'a Graph, t: Frugality) -> Self {
        Partial { g, t: t.get(), colors: vec![None; g.n()], cnt: vec![Vec::new(); g.n()] }
    }

    fn count(&self, v: usize, c: usize) -> usize {
        self.cnt[v].get(c).copied().unwrap_or(0)
    }

    /// Whether giving `v` color `c` keeps the partial coloring `t`-frugal.
    pub(crate) fn allows(&self, v: usize, c: usize) -> bool {
        self.count(v, c) == 0 && self.g.neighbors(v).iter().all(|&w| self.count(w, c) < self.t)
    }

    pub(crate) fn set(&mut self, v: usize, c: usize) {
        debug_assert!(self.colors[v].is_none());
        self.colors[v] = Some(c);
        for &w in self.g.neighbors(v) {
            let row = &mut self.cnt[w];
            if row.len() <= c {
                row.resize(c + 1, 0);
            }
            row[c] += 1;
        }
    }

    pub(crate) fn lowest_allowed(&self, v: usize) -> usize {
        (0..).find(|&c| self.allows(v, c)).expect("some color is always free")
    }

    pub(crate) fn finish(self, palette: usize) -> Result<Coloring> {
        let colors = self.colors.into_iter().map(|c| c.ok_or_else(|| Error::Construction("vertex left uncolored".into()))).collect::<Result<Vec<_>>>()?;
        Coloring::new(colors, palette)
    }
}

/// First-fit in vertex order; uses at most `1 + Delta (1 + floor((Delta - 1) / t))` colors since a
/// vertex loses at most one color per neighbor plus that neighbor's saturated colors.
pub fn color_greedy(g: &Graph, t: Frugality) -> Result<Coloring> {
    let mut p = Partial::new(g, t);
    for v in 0..g.n() {
        let c = p.lowest_allowed(v);
        p.set(v, c);
    }
    let palette = p.colors.iter().flatten().max().map_or(0, |&c| c + 1);
    certified(g, p.finish(palette)?, t, "greedy")
}

pub fn greedy_bound(max_degree: usize, t: Frugality) -> usize {
    1 + max_degree * (1 + max_degree.saturating_sub(1) / t.get())
}
