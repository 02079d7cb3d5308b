use super::Graph;
use serde::Serialize;

/// Pendant vertices have degree one; their neighbors are supports, and a support with
/// at least two pendant neighbors is strong.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PendantStats {
    pub p: usize,
    pub s: usize,
    pub s_prime: usize,
    /// Minimum degree among vertices that are neither pendant nor support.
    pub delta_star: Option<usize>,
    pub all_pendant_or_support: bool,
}

pub fn pendant_stats(g: &Graph) -> PendantStats {
    let n = g.n();
    let mut pendant_nbrs = vec![0usize; n];
    let mut p = 0;
    for v in (0..n).filter(|&v| g.degree(v) == 1) {
        p += 1;
        pendant_nbrs[g.neighbors(v)[0]] += 1;
    }
    let s = pendant_nbrs.iter().filter(|&&c| c >= 1).count();
    let s_prime = pendant_nbrs.iter().filter(|&&c| c >= 2).count();
    let delta_star = (0..n)
        .filter(|&v| g.degree(v) != 1 && pendant_nbrs[v] == 0)
        .map(|v| g.degree(v))
        .min();
    PendantStats { p, s, s_prime, delta_star, all_pendant_or_support: delta_star.is_none() }
}

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Each block sorted; blocks sorted lexicographically. Isolated vertices form singleton blocks.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if g.degree(root) == 0 {
                disc[root] = timer;
                timer += 1;
                blocks.push(vec![root]);
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // Frames hold (vertex, parent, next neighbor index).
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if let Some(&w) = g.neighbors(v).get(*idx) {
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                    continue;
                }
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        blocks.sort();
        let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
        BlockDecomposition { blocks, cut_vertices }
    }

    /// Every block induces a clique.
    pub fn is_block_graph(&self, g: &Graph) -> bool {
        self.blocks.iter().all(|b| {
            b.iter().enumerate().all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub triangle_free: bool,
    pub claw_free: bool,
    pub connected: bool,
    pub regular_degree: Option<usize>,
    pub clique_number: usize,
    pub is_block_graph: bool,
    pub block_decomposition: BlockDecomposition,
}

pub fn structural_flags(g: &Graph) -> StructuralFlags {
    let block_decomposition = BlockDecomposition::new(g);
    StructuralFlags {
        triangle_free: is_triangle_free(g),
        claw_free: is_claw_free(g),
        connected: g.is_connected(),
        regular_degree: g.regular_degree(),
        clique_number: clique_number(g),
        is_block_graph: block_decomposition.is_block_graph(g),
        block_decomposition,
    }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| !g.neighbors(u).iter().any(|&w| g.has_edge(v, w)))
}

/// No vertex has three pairwise non-adjacent neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nb = g.neighbors(v);
        !nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                !g.has_edge(a, b) && nb[i + 1 + j + 1..].iter().any(|&c| !g.has_edge(a, c) && !g.has_edge(b, c))
            })
        })
    })
}

/// Exact clique number by Bron–Kerbosch with pivoting, on `u128` bitsets when `n <= 128`.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if n <= 128 {
        let masks: Vec<u128> = (0..n).map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w)).collect();
        let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let mut best = 0;
        bk_bits(&masks, 0, all, 0, &mut best);
        best
    } else {
        let mut best = 0;
        bk_vec(g, 0, (0..n).collect(), Vec::new(), &mut best);
        best
    }
}

fn bk_bits(masks: &[u128], size: usize, p: u128, x: u128, best: &mut usize) {
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + p.count_ones() as usize <= *best {
        return;
    }
    let px = p | x;
    let pivot = (0..masks.len())
        .filter(|&u| px >> u & 1 == 1)
        .max_by_key(|&u| (masks[u] & p).count_ones())
        .unwrap_or(0);
    let mut cand = p & !masks[pivot];
    let (mut p, mut x) = (p, x);
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bk_bits(masks, size + 1, p & masks[v], x & masks[v], best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn bk_vec(g: &Graph, size: usize, mut p: Vec<usize>, mut x: Vec<usize>, best: &mut usize) {
    if p.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + p.len() <= *best {
        return;
    }
    let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&w| g.has_edge(u, w)).count()).unwrap();
    let cand: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    for v in cand {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        bk_vec(g, size + 1, np, nx, best);
        p.retain(|&w| w != v);
        x.push(v);
    }
}
