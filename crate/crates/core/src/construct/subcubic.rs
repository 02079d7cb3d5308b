//! 2-frugal colorings of graphs with maximum degree at most three.
//!
//! A component with a vertex of degree at most two is colored greedily in depth-first post-order
//! from that vertex. When `u` is colored its parent and all ancestors are still blank and, since a
//! depth-first tree has no cross edges, every colored neighbor of `u` is a descendant. There are at
//! most two of them, each ruling out its own color and at most one color it already sees twice, so
//! five colors always suffice. A cubic component loses one edge `uv` first and is repaired locally.

use super::{certified, Partial};
use crate::check::Coloring;
use crate::error::{Error, Result};
use crate::exact::{find_proper_coloring, find_t_frugal_coloring, Outcome, SolveBudget};
use crate::graph::structure::is_claw_free;
use crate::graph::Graph;
use crate::Frugality;

const PALETTE: usize = 5;

/// What the cubic-component repair had to do.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubcubicTrace {
    /// Edge removed from each cubic component before the greedy pass.
    pub deleted_edges: Vec<(usize, usize)>,
    /// Vertices recolored to restore validity, one entry per repaired component.
    pub recolored: Vec<Vec<usize>>,
    /// Components where the local repair failed and exact search with five colors took over.
    pub fallback_components: usize,
}

impl SubcubicTrace {
    pub fn used_fallback(&self) -> bool {
        self.fallback_components > 0
    }
}

pub fn color_subcubic(g: &Graph) -> Result<Coloring> {
    color_subcubic_traced(g).map(|(c, _)| c)
}

pub fn color_subcubic_traced(g: &Graph) -> Result<(Coloring, SubcubicTrace)> {
    if g.max_degree() > 3 {
        return Err(Error::Precondition(format!("maximum degree {} exceeds 3", g.max_degree())));
    }
    let mut trace = SubcubicTrace::default();
    let cubic: Vec<Vec<usize>> = g.components().into_iter().filter(|c| c.iter().all(|&v| g.degree(v) == 3)).collect();
    trace.deleted_edges = cubic.iter().map(|c| (c[0], g.neighbors(c[0])[0])).collect();
    let h = g.without_edges(&trace.deleted_edges);
    let mut p = Partial::new(&h, Frugality::TWO);
    for comp in h.components() {
        let root = *comp.iter().find(|&&v| h.degree(v) <= 2).expect("every piece has a vertex of degree at most 2");
        greedy_post_order(&h, &mut p, root)?;
    }
    let mut colors: Vec<usize> = p.colors.into_iter().map(|c| c.expect("all vertices reached")).collect();

    for (comp, &(u, v)) in cubic.iter().zip(&trace.deleted_edges.clone()) {
        let region = ball(g, &[u, v], 3);
        if locally_valid(g, &colors, &region) {
            continue;
        }
        match repair(g, &mut colors, u, v, &region) {
            Some(changed) => trace.recolored.push(changed),
            None => {
                let sub = g.induced(comp);
                let Outcome::Exact(Some(c)) = find_t_frugal_coloring(&sub, Frugality::TWO, PALETTE, &SolveBudget::default()) else {
                    return Err(Error::Construction("subcubic repair and exact fallback both failed".into()));
                };
                comp.iter().zip(c.colors()).for_each(|(&x, &col)| colors[x] = col);
                trace.fallback_components += 1;
            }
        }
    }
    let c = certified(g, Coloring::new(colors, PALETTE)?, Frugality::TWO, "subcubic coloring")?;
    let used = c.colors().iter().max().map_or(0, |&m| m + 1);
    Ok((Coloring::new(c.colors().to_vec(), used)?, trace))
}

/// Lowest feasible color in depth-first post-order from `root`, checked against every colored
/// neighbor rather than tree edges only.
fn greedy_post_order(h: &Graph, p: &mut Partial, root: usize) -> Result<()> {
    let mut seen = vec![false; h.n()];
    let mut stack = vec![(root, 0usize)];
    seen[root] = true;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if let Some(&w) = h.neighbors(v).get(top.1) {
            top.1 += 1;
            if !seen[w] {
                seen[w] = true;
                stack.push((w, 0));
            }
        } else {
            stack.pop();
            let c = p.lowest_allowed(v);
            if c >= PALETTE {
                return Err(Error::Construction(format!("vertex {v} has no free color among {PALETTE}")));
            }
            p.set(v, c);
        }
    }
    Ok(())
}

/// Vertices within distance `r` of `sources`, sorted.
fn ball(g: &Graph, sources: &[usize], r: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut frontier = sources.to_vec();
    frontier.iter().for_each(|&s| dist[s] = 0);
    for d in 1..=r {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = d;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    (0..g.n()).filter(|&v| dist[v] != usize::MAX).collect()
}

/// Properness at, and 2-frugality of the neighborhoods of, every vertex in `region`.
fn locally_valid(g: &Graph, colors: &[usize], region: &[usize]) -> bool {
    region.iter().all(|&w| {
        let nb = g.neighbors(w);
        nb.iter().all(|&x| colors[x] != colors[w])
            && nb.iter().all(|&x| nb.iter().filter(|&&y| colors[y] == colors[x]).count() <= 2)
    })
}

/// Recolors subsets of size 1, 2, 3 of the radius-2 ball around `{u, v}`, lexicographically, trying
/// all `5^|S|` assignments; the first globally valid result is kept. A recoloring of that ball can
/// only disturb vertices within distance 3, which is `region`.
fn repair(g: &Graph, colors: &mut [usize], u: usize, v: usize, region: &[usize]) -> Option<Vec<usize>> {
    let near = ball(g, &[u, v], 2);
    let original = colors.to_vec();
    for size in 1..=3.min(near.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let subset: Vec<usize> = idx.iter().map(|&i| near[i]).collect();
            let mut assignment = vec![0usize; size];
            loop {
                subset.iter().zip(&assignment).for_each(|(&x, &c)| colors[x] = c);
                if locally_valid(g, colors, region) {
                    return Some(subset);
                }
                if !advance(&mut assignment, PALETTE) {
                    break;
                }
            }
            subset.iter().for_each(|&x| colors[x] = original[x]);
            if !next_combination(&mut idx, near.len()) {
                break;
            }
        }
    }
    None
}

/// Odometer step over `0..base` digits, most significant first.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Connected claw-free cubic graphs other than `K_4` are 3-colorable, and any proper 3-coloring is
/// 2-frugal there because every neighborhood contains an edge.
pub fn color_clawfree_cubic(g: &Graph) -> Result<Coloring> {
    if !g.is_connected() || g.regular_degree() != Some(3) || !is_claw_free(g) {
        return Err(Error::Precondition("expected a connected claw-free cubic graph".into()));
    }
    if g.n() == 4 {
        return Err(Error::Precondition("K4 needs four colors".into()));
    }
    match find_proper_coloring(g, 3, &SolveBudget::unlimited()) {
        Outcome::Exact(Some(c)) => certified(g, c, Frugality::TWO, "claw-free cubic coloring"),
        _ => Err(Error::Construction("no proper 3-coloring found".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::is_t_frugal_coloring;
    use crate::exact::chi_t_frugal_exact;
    use crate::graph::{complete, cycle, generalized_petersen, path, petersen, prism, random_cubic, star};
    use proptest::prelude::*;

    fn check(g: &Graph) -> (Coloring, SubcubicTrace) {
        let (c, trace) = color_subcubic_traced(g).unwrap();
        assert!(is_t_frugal_coloring(g, &c, Frugality::TWO).unwrap());
        assert!(c.palette() <= 5);
        (c, trace)
    }

    #[test]
    fn named_graphs() {
        check(&petersen());
        check(&complete(4));
        assert_eq!(check(&star(4)).0.palette(), 3);
        check(&path(1));
        check(&Graph::edgeless(0));
        check(&cycle(5).unwrap().disjoint_union(&petersen()));
        assert!(color_subcubic(&star(5)).is_err());
    }

    #[test]
    fn degree_two_vertex_means_no_repair() {
        for seed in 0..40 {
            let g = random_cubic(10 + 2 * (seed as usize % 10), seed).unwrap();
            let (u, v) = g.edges().next().unwrap();
            let h = g.without_edges(&[(u, v)]);
            let (_, trace) = check(&h);
            assert!(trace.deleted_edges.is_empty() && trace.recolored.is_empty() && !trace.used_fallback());
            check(&path(3 + seed as usize));
        }
    }

    #[test]
    fn cubic_graphs_never_need_the_fallback() {
        for seed in 0..150 {
            let g = random_cubic(4 + 2 * (seed as usize % 20), seed).unwrap();
            let (_, trace) = check(&g);
            assert_eq!(trace.deleted_edges.len(), 1);
            assert!(!trace.used_fallback(), "seed {seed}");
            assert!(trace.recolored.iter().all(|s| s.len() <= 3));
        }
        for (k, j) in [(5, 2), (8, 3), (10, 3), (12, 5), (7, 2)] {
            assert!(!check(&generalized_petersen(k, j).unwrap()).1.used_fallback());
        }
    }

    #[test]
    fn small_cubic_values_stay_within_exact_sandwich() {
        for seed in 0..12 {
            let g = random_cubic(8 + 2 * (seed as usize % 3), seed).unwrap();
            let exact = chi_t_frugal_exact(&g, Frugality::TWO, &SolveBudget::unlimited()).value().unwrap().0;
            assert!((3..=5).contains(&exact));
            assert!(exact <= check(&g).0.palette());
        }
    }

    #[test]
    fn helpers() {
        let mut d = vec![0, 4];
        assert!(advance(&mut d, 5));
        assert_eq!(d, vec![1, 0]);
        let mut d = vec![4, 4];
        assert!(!advance(&mut d, 5));
        let mut idx = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut idx, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn clawfree_cubic() {
        let c = color_clawfree_cubic(&prism()).unwrap();
        assert_eq!(c.palette(), 3);
        let relabelled = prism().relabel(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert_eq!(color_clawfree_cubic(&relabelled).unwrap().palette(), 3);
        assert!(color_clawfree_cubic(&complete(4)).is_err());
        assert!(color_clawfree_cubic(&petersen()).is_err());
        assert!(color_clawfree_cubic(&cycle(6).unwrap()).is_err());
        // Ring of diamonds: each diamond's two degree-2 vertices link to neighboring diamonds.
        let mut edges = Vec::new();
        let d = 5;
        for i in 0..d {
            let b = 4 * i;
            edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
            edges.push((b + 3, (b + 4) % (4 * d)));
        }
        let ring = Graph::from_edges(4 * d, &edges).unwrap();
        assert_eq!(color_clawfree_cubic(&ring).unwrap().palette(), 3);
    }

    proptest! {
        #[test]
        fn random_subcubic_graphs(seed in 0u64..5000, n in 4usize..40, drop in 0usize..6) {
            let n = n + n % 2;
            let g = random_cubic(n, seed).unwrap();
            let gone: Vec<(usize, usize)> = g.edges().step_by(7).take(drop).collect();
            let h = g.without_edges(&gone);
            let (c, trace) = color_subcubic_traced(&h).unwrap();
            prop_assert!(is_t_frugal_coloring(&h, &c, Frugality::TWO).unwrap());
            prop_assert!(c.palette() <= 5);
            prop_assert!(!trace.used_fallback());
        }
    }
}
