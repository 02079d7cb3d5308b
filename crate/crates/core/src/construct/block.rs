//! 2-frugal coloring of block graphs with `max{omega, ceil(Delta/2) + 1}` colors.
//!
//! Blocks are colored top-down over the block-cut tree. When a block `B` is colored, each of its
//! vertices `x` hands its child blocks `B_1..B_l` (the other blocks through `x`) a coloring in
//! which each child is rainbow and avoids `c(x)`, colors of `B - x` occur at most once more in
//! `N(x)`, and every other color at most twice. Nothing outside `N[x]` can be affected.

use super::certified;
use crate::check::Coloring;
use crate::error::{Error, Result};
use crate::graph::{BlockDecomposition, Graph};
use crate::Frugality;
use std::collections::VecDeque;

pub fn color_block_graph(g: &Graph) -> Result<Coloring> {
    let bd = BlockDecomposition::new(g);
    if !bd.is_block_graph(g) {
        return Err(Error::Precondition("not a block graph".into()));
    }
    if g.n() == 0 {
        return Ok(Coloring::from_colors(Vec::new()));
    }
    let omega = bd.blocks.iter().map(Vec::len).max().unwrap_or(1);
    let floor = g.max_degree().div_ceil(2) + 1;
    let k = omega.max(floor);
    let spill_case = omega >= floor;

    let mut blocks_of = vec![Vec::new(); g.n()];
    for (i, b) in bd.blocks.iter().enumerate() {
        b.iter().for_each(|&v| blocks_of[v].push(i));
    }
    let mut color = vec![usize::MAX; g.n()];
    let mut visited = vec![false; bd.blocks.len()];
    for root in 0..bd.blocks.len() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        for (i, &v) in bd.blocks[root].iter().enumerate() {
            color[v] = i;
        }
        let mut queue = VecDeque::from([(root, usize::MAX)]);
        while let Some((b, attach)) = queue.pop_front() {
            let block = &bd.blocks[b];
            for (xi, &x) in block.iter().enumerate() {
                if x == attach {
                    continue;
                }
                let children: Vec<usize> = blocks_of[x].iter().copied().filter(|&c| c != b).collect();
                if children.is_empty() {
                    continue;
                }
                debug_assert!(children.iter().all(|&c| !visited[c]));
                let members: Vec<Vec<usize>> =
                    children.iter().map(|&c| bd.blocks[c].iter().copied().filter(|&v| v != x).collect()).collect();
                let parent: Vec<usize> = block.iter().map(|&v| color[v]).collect();
                let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
                let assigned = extend_at(k, spill_case, &parent, xi, &sizes)?;
                for ((&c, vs), cs) in children.iter().zip(&members).zip(assigned) {
                    visited[c] = true;
                    vs.iter().zip(cs).for_each(|(&v, col)| color[v] = col);
                    queue.push_back((c, x));
                }
            }
        }
    }
    certified(g, Coloring::new(color, k)?, Frugality::TWO, "block graph coloring")
}

/// Colors for the non-`x` vertices of each child block at `x`. `parent` lists the colors of the
/// parent block with `x` at index `xi`.
fn extend_at(k: usize, spill_case: bool, parent: &[usize], xi: usize, sizes: &[usize]) -> Result<Vec<Vec<usize>>> {
    if spill_case {
        Ok(spill(k, parent, xi, sizes))
    } else if sizes.len() == 1 {
        let cx = parent[xi];
        Ok(vec![(0..k).filter(|&c| c != cx).take(sizes[0]).collect()])
    } else {
        pair_up(k, parent, xi, sizes, true)
    }
}

/// `omega >= ceil(Delta/2) + 1`: colors missing from the parent block are spent once each across
/// the children in order; the rest gets pairwise distinct colors other than `c(x)`, each block
/// avoiding what it already holds.
fn spill(k: usize, parent: &[usize], xi: usize, sizes: &[usize]) -> Vec<Vec<usize>> {
    let cx = parent[xi];
    let mut fresh = (0..k).filter(|c| !parent.contains(c));
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(sizes.len());
    let mut pending = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        let mut cols = Vec::with_capacity(s);
        for _ in 0..s {
            match fresh.next() {
                Some(c) => cols.push(c),
                None => break,
            }
        }
        if cols.len() < s {
            pending.push(i);
        }
        out.push(cols);
    }
    let mut pool: Vec<usize> = (0..k).filter(|&c| c != cx).collect();
    for i in pending {
        while out[i].len() < sizes[i] {
            let pos = pool.iter().position(|c| !out[i].contains(c)).expect("enough colors remain");
            out[i].push(pool.remove(pos));
        }
    }
    out
}

/// `omega < ceil(Delta/2) + 1` with at least two children: each color absent from the parent goes
/// to one vertex in each of the two children with the most uncolored vertices. Leftovers take
/// parent colors other than `c(x)`, once each. If a single child is left with more vertices than
/// that, the whole star at `x` is recolored with that child as the parent and the result is mapped
/// back onto the real parent colors by a palette permutation.
fn pair_up(k: usize, parent: &[usize], xi: usize, sizes: &[usize], may_relabel: bool) -> Result<Vec<Vec<usize>>> {
    let cx = parent[xi];
    let mut out: Vec<Vec<usize>> = sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
    let mut fresh = (0..k).filter(|c| !parent.contains(c)).peekable();
    loop {
        let mut open: Vec<usize> = (0..sizes.len()).filter(|&i| out[i].len() < sizes[i]).collect();
        if open.len() < 2 || fresh.peek().is_none() {
            break;
        }
        open.sort_by_key(|&i| (std::cmp::Reverse(sizes[i] - out[i].len()), i));
        let c = fresh.next().expect("peeked");
        out[open[0]].push(c);
        out[open[1]].push(c);
    }
    let open: Vec<usize> = (0..sizes.len()).filter(|&i| out[i].len() < sizes[i]).collect();
    let left: usize = open.iter().map(|&i| sizes[i] - out[i].len()).sum();
    let reusable: Vec<usize> = parent.iter().copied().filter(|&c| c != cx).collect();
    if left <= reusable.len() {
        let mut pool = reusable.into_iter();
        for i in open {
            while out[i].len() < sizes[i] {
                out[i].push(pool.next().expect("counted"));
            }
        }
        return Ok(out);
    }
    if !may_relabel || open.len() != 1 {
        return Err(Error::Construction(format!("block coloring ran out of colors at a cut vertex ({left} vertices left)")));
    }
    let big = open[0];
    // Recolor with the big child as parent: x gets 0, its other vertices 1..|B_big|.
    let big_parent: Vec<usize> = (0..=sizes[big]).collect();
    let mut others: Vec<usize> = vec![parent.len() - 1];
    others.extend((0..sizes.len()).filter(|&i| i != big).map(|i| sizes[i]));
    let inner = pair_up(k, &big_parent, 0, &others, false)?;
    // sigma sends the trial colors of the parent block onto its real colors.
    let mut trial_parent = inner[0].clone();
    trial_parent.insert(xi, 0);
    let mut sigma = vec![usize::MAX; k];
    for (&from, &to) in trial_parent.iter().zip(parent) {
        sigma[from] = to;
    }
    let mut spare_targets = (0..k).filter(|c| !parent.contains(c));
    for s in sigma.iter_mut().filter(|s| **s == usize::MAX) {
        *s = spare_targets.next().expect("sigma is a bijection");
    }
    let mut rest = inner.into_iter().skip(1);
    Ok((0..sizes.len())
        .map(|i| {
            let trial: Vec<usize> = if i == big { (1..=sizes[big]).collect() } else { rest.next().expect("one per child") };
            trial.into_iter().map(|c| sigma[c]).collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{chi_t_frugal_exact, SolveBudget};
    use crate::graph::{complete, path, random_block, random_tree, star, structural_flags};

    fn expected(g: &Graph) -> usize {
        structural_flags(g).clique_number.max(g.max_degree().div_ceil(2) + 1)
    }

    #[test]
    fn small_examples() {
        let t = random_tree(30, 1);
        assert_eq!(color_block_graph(&star(6)).unwrap().palette(), 4);
        assert_eq!(color_block_graph(&complete(4)).unwrap().palette(), 4);
        assert_eq!(color_block_graph(&path(3)).unwrap().palette(), 2);
        assert_eq!(color_block_graph(&t).unwrap().palette(), t.max_degree().div_ceil(2) + 1);
        assert_eq!(color_block_graph(&Graph::edgeless(3)).unwrap().palette(), 1);
        assert!(color_block_graph(&crate::graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn relabel_branch() {
        // Root edge {0,1}; at x = 0 hang a K5 and one edge. Vertex 1 carries many leaves so that
        // ceil(Delta/2) + 1 exceeds omega = 5 and the K5 outlasts the single reusable color.
        let direct = pair_up(8, &[0, 1], 0, &[4, 1], true).unwrap();
        let mut seen = [0; 8];
        direct.iter().flatten().for_each(|&c| seen[c] += 1);
        assert_eq!(seen[0], 0);
        assert!(seen[1] <= 1 && seen.iter().all(|&s| s <= 2));
        assert!(direct.iter().all(|b| (1..b.len()).all(|i| !b[..i].contains(&b[i]))));

        let mut edges = vec![(0, 1), (0, 6)];
        for a in 2..6 {
            edges.push((0, a));
            for b in a + 1..6 {
                edges.push((a, b));
            }
        }
        edges.extend((7..19).map(|v| (1, v)));
        let g = Graph::from_edges(19, &edges).unwrap();
        assert_eq!(color_block_graph(&g).unwrap().palette(), expected(&g));
    }

    #[test]
    fn random_block_graphs_hit_the_formula() {
        for seed in 0..200 {
            let g = random_block(8 + seed as usize % 23, 2 + seed as usize % 5, seed).unwrap();
            assert_eq!(color_block_graph(&g).unwrap().palette(), expected(&g), "seed {seed}");
        }
    }

    #[test]
    fn formula_is_optimal_on_small_block_graphs() {
        for seed in 0..25 {
            let g = random_block(6 + seed as usize % 8, 4, seed).unwrap();
            let exact = chi_t_frugal_exact(&g, Frugality::TWO, &SolveBudget::unlimited()).value().unwrap().0;
            assert_eq!(exact, expected(&g));
        }
    }
}
