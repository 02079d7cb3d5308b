//! Validity predicates for colorings and frugal sets. Every constructive and exact routine in
//! the crate is tested against these.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Frugality;
use serde::{Deserialize, Serialize};

/// Total assignment of colors in `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringDoc {
    n: usize,
    palette: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette) {
            return Err(Error::ColorOutOfPalette { vertex, color, palette });
        }
        Ok(Coloring { colors, palette })
    }

    /// Palette is one more than the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring { colors, palette }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.palette];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.into_iter().filter(|&s| s).count()
    }

    /// Renames colors to `0..k` by order of first appearance and sets the palette to `k`.
    pub fn compacted(&self) -> Coloring {
        let mut map = vec![usize::MAX; self.palette];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        Coloring { colors, palette: next }
    }

    /// Vertices of each color, indexed by color.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![Vec::new(); self.palette];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes.into_iter().map(|members| VertexSet { members }).collect()
    }

    pub fn to_json(&self) -> String {
        let doc = ColoringDoc { n: self.colors.len(), palette: self.palette, colors: self.colors.clone() };
        serde_json::to_string(&doc).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ColoringDoc = serde_json::from_str(text)?;
        if doc.colors.len() != doc.n {
            return Err(Error::SizeMismatch { expected: doc.n, got: doc.colors.len() });
        }
        Coloring::new(doc.colors, doc.palette)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct VertexSet {
    members: Vec<usize>,
}

#[derive(Deserialize)]
struct VertexSetDoc {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("vertex set serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: VertexSetDoc = serde_json::from_str(text)?;
        Ok(VertexSet::new(doc.members))
    }
}

fn check_len(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), got: c.len() });
    }
    Ok(())
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_len(g, c)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Proper, and no color occurs more than `t` times in any open neighborhood.
pub fn is_t_frugal_coloring(g: &Graph, c: &Coloring, t: Frugality) -> Result<bool> {
    check_len(g, c)?;
    Ok(max_color_multiplicity(g, c.colors(), t.get()).is_some() && is_proper(g, c)?)
}

/// Largest number of same-colored neighbors of any vertex, or `None` once it exceeds `cap`.
/// The counting buffer is cleared per vertex by walking the neighborhood again.
fn max_color_multiplicity(g: &Graph, colors: &[usize], cap: usize) -> Option<usize> {
    let palette = colors.iter().max().map_or(0, |&c| c + 1);
    let mut count = vec![0usize; palette];
    let mut worst = 0;
    for v in 0..g.n() {
        for &u in g.neighbors(v) {
            count[colors[u]] += 1;
            worst = worst.max(count[colors[u]]);
        }
        for &u in g.neighbors(v) {
            count[colors[u]] = 0;
        }
        if worst > cap {
            return None;
        }
    }
    Some(worst)
}

/// Independent, and every vertex has at most `t` neighbors in `s`.
pub fn is_t_frugal_set(g: &Graph, s: &VertexSet, t: Frugality) -> bool {
    if s.members().last().is_some_and(|&v| v >= g.n()) {
        return false;
    }
    let mut inside = vec![false; g.n()];
    s.members().iter().for_each(|&v| inside[v] = true);
    (0..g.n()).all(|v| {
        let hits = g.neighbors(v).iter().filter(|&&u| inside[u]).count();
        hits <= t.get() && !(inside[v] && hits > 0)
    })
}

/// Vertices at distance at most two receive distinct colors.
pub fn is_2_distance_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    check_len(g, c)?;
    Ok(is_proper(g, c)? && max_color_multiplicity(g, c.colors(), 1).is_some())
}

/// Every open neighborhood is rainbow; adjacent vertices may share a color.
pub fn is_injective_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    check_len(g, c)?;
    Ok(max_color_multiplicity(g, c.colors(), 1).is_some())
}

/// Partial assignment where `None` imposes no constraint.
pub fn is_partial_t_frugal(g: &Graph, colors: &[Option<usize>], t: Frugality) -> bool {
    let palette = colors.iter().flatten().max().map_or(0, |&c| c + 1);
    let mut count = vec![0usize; palette];
    for v in 0..g.n() {
        let mut ok = true;
        for &u in g.neighbors(v) {
            if let Some(cu) = colors[u] {
                count[cu] += 1;
                ok &= count[cu] <= t.get() && colors[v] != Some(cu);
            }
        }
        for &u in g.neighbors(v) {
            if let Some(cu) = colors[u] {
                count[cu] = 0;
            }
        }
        if !ok {
            return false;
        }
    }
    true
}
