use super::{product, Graph, ProductKind};
use crate::error::{Error, Result};
use crate::exact::{find_t_frugal_coloring, Outcome, SolveBudget};
use crate::Frugality;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are in range")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    complete_multipartite(&vec![1; n])
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges).expect("star edges are in range")
}

/// Parts occupy consecutive id ranges in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, size));
    }
    let adj = (0..n).map(|u| (0..n).filter(|&v| part[u] != part[v]).collect()).collect();
    Graph::from_raw(adj)
}

/// Complete `r`-partite graph with parts of size `t`; every vertex has exactly `t`
/// neighbors in each other part.
pub fn psi_multipartite(t: usize, r: usize) -> Result<Graph> {
    if t == 0 || r < 2 {
        return Err(Error::InvalidParameter(format!("need t >= 1 and r >= 2, got t={t}, r={r}")));
    }
    Ok(complete_multipartite(&vec![t; r]))
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 20 {
        return Err(Error::InvalidParameter(format!("hypercube dimension {d} is too large")));
    }
    let n = 1usize << d;
    let adj = (0..n).map(|v| (0..d).map(|b| v ^ (1 << b)).collect()).collect();
    Ok(Graph::from_raw(adj))
}

/// Product of paths with the given side lengths. The first coordinate is the most significant:
/// `(x_1, ..., x_k)` sits at `((x_1 * s_2 + x_2) * s_3 + ...)`.
pub fn grid(sides: &[usize], kind: ProductKind) -> Result<Graph> {
    if sides.is_empty() || sides.contains(&0) {
        return Err(Error::InvalidParameter("grid sides must be a nonempty list of positive lengths".into()));
    }
    if !matches!(kind, ProductKind::Cartesian | ProductKind::Strong) {
        return Err(Error::InvalidParameter(format!("grid supports cartesian or strong, not {kind}")));
    }
    Ok(sides[1..].iter().fold(path(sides[0]), |acc, &s| product(kind, &acc, &path(s))))
}

/// `C_m □ C_n`, vertex `(i, j)` at `i * n + j`.
pub fn torus(m: usize, n: usize) -> Result<Graph> {
    Ok(product(ProductKind::Cartesian, &cycle(m)?, &cycle(n)?))
}

/// Uniform random recursive tree under a random relabelling.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let edges: Vec<_> = (1..n).map(|i| (label[r.gen_range(0..i)], label[i])).collect();
    Graph::from_edges(n, &edges).expect("tree edges are in range")
}

/// Connected simple cubic graph from the pairing model; rejected samples are redrawn from the
/// same random stream.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!("random cubic graph needs even n >= 4, got {n}")));
    }
    let mut r = rng(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    'attempt: for _ in 0..100_000 {
        points.shuffle(&mut r);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Construction(format!("no simple connected cubic graph sampled for n={n}")))
}

/// Connected block graph on exactly `n` vertices: starting from a clique, repeatedly glue a new
/// clique of random size in `2..=max_clique` onto a random existing vertex. The last clique is
/// truncated to hit `n`.
pub fn random_block(n: usize, max_clique: usize, seed: u64) -> Result<Graph> {
    if n == 0 || max_clique < 2 {
        return Err(Error::InvalidParameter(format!("random block graph needs n >= 1 and max_clique >= 2, got n={n}, max_clique={max_clique}")));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let first = r.gen_range(2..=max_clique).min(n);
    add_clique(&mut edges, &(0..first).collect::<Vec<_>>());
    let mut size = first;
    while size < n {
        let anchor = r.gen_range(0..size);
        let fresh = (r.gen_range(2..=max_clique) - 1).min(n - size);
        let mut members: Vec<usize> = (size..size + fresh).collect();
        members.push(anchor);
        add_clique(&mut edges, &members);
        size += fresh;
    }
    Graph::from_edges(n, &edges)
}

fn add_clique(edges: &mut Vec<(usize, usize)>, members: &[usize]) {
    for (i, &u) in members.iter().enumerate() {
        edges.extend(members[i + 1..].iter().map(|&v| (u, v)));
    }
}

/// `K_{1,t}` with every edge subdivided: center 0, middles `1..=t`, leaf `t + i` hangs off middle `i`.
pub fn spider(t: usize) -> Graph {
    let mut edges = Vec::with_capacity(2 * t);
    for i in 1..=t {
        edges.push((0, i));
        edges.push((i, t + i));
    }
    Graph::from_edges(2 * t + 1, &edges).expect("spider edges are in range")
}

/// Two adjacent centers 0 and 1 carrying `a` and `b` leaves.
pub fn double_star(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::from_edges(2 + a + b, &edges).expect("double star edges are in range")
}

/// Generalized Petersen graph `GP(k, j)`: outer cycle `0..k`, spokes `i -- k+i`, inner edges
/// `k+i -- k+(i+j) mod k`.
pub fn generalized_petersen(k: usize, j: usize) -> Result<Graph> {
    if k < 3 || j == 0 || 2 * j >= k {
        return Err(Error::InvalidParameter(format!("GP({k},{j}) needs k >= 3 and 1 <= j < k/2")));
    }
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((i, k + i));
        edges.push((k + i, k + (i + j) % k));
    }
    Graph::from_edges(2 * k, &edges)
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("valid parameters")
}

/// `K_3 □ K_2`: triangles `0,1,2` and `3,4,5` joined by spokes `i -- i+3`.
pub fn prism() -> Graph {
    generalized_petersen(3, 1).expect("valid parameters")
}

pub fn mobius_kantor() -> Graph {
    generalized_petersen(8, 3).expect("valid parameters")
}

/// `Q_3` (vertices are 3-bit words) with the parallel face edges `{0,1}` and `{2,3}` swapped for
/// the crossed pair `{0,3}`, `{1,2}`. Cubic on 8 vertices with `alpha_2^f = 2`; isomorphic to the
/// Wagner graph [`c8_antipodal_chords`].
pub fn q3_twisted() -> Graph {
    let q3 = hypercube(3).expect("valid dimension");
    let mut edges: Vec<_> = q3.edges().filter(|&e| e != (0, 1) && e != (2, 3)).collect();
    edges.extend([(0, 3), (1, 2)]);
    Graph::from_edges(8, &edges).expect("twisted cube edges are in range")
}

/// The 8-cycle plus the four chords `i -- i+4` (the Wagner graph).
pub fn c8_antipodal_chords() -> Graph {
    let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend((0..4).map(|i| (i, i + 4)));
    Graph::from_edges(8, &edges).expect("chord edges are in range")
}

/// Subdivided `K_4` with the subdivision vertices of opposite edges joined. Cubic on 10 vertices;
/// the four original vertices form a 2-frugal independent set of size `2n/5`.
pub fn subdivided_k4_matched() -> Graph {
    let k4_edges = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
    let mut edges = Vec::new();
    for (i, &(a, b)) in k4_edges.iter().enumerate() {
        edges.push((a, 4 + i));
        edges.push((b, 4 + i));
    }
    // Consecutive entries of `k4_edges` are opposite edges.
    edges.extend([(4, 5), (6, 7), (8, 9)]);
    Graph::from_edges(10, &edges).expect("edges are in range")
}

/// The 4-regular 9-vertex graphs `G` for which both `G` and its complement have 2-frugal
/// chromatic number 3, up to isomorphism as separated by [`ng_fingerprint`].
///
/// Such a `G` has three color classes of size 3, each vertex seeing exactly two vertices of every
/// other class, so its complement is three disjoint triangles joined pairwise by perfect matchings.
/// All `6^3` matching choices are enumerated and the complement `H` of each candidate is tested
/// for a 2-frugal 3-coloring.
pub fn ng_exceptional() -> Vec<Graph> {
    let perms = permutations3();
    let mut out: Vec<(NgFingerprint, Graph)> = Vec::new();
    for p01 in &perms {
        for p02 in &perms {
            for p12 in &perms {
                let mut edges = Vec::new();
                for c in 0..3 {
                    add_clique(&mut edges, &[3 * c, 3 * c + 1, 3 * c + 2]);
                }
                for i in 0..3 {
                    edges.push((i, 3 + p01[i]));
                    edges.push((i, 6 + p02[i]));
                    edges.push((3 + i, 6 + p12[i]));
                }
                let h = Graph::from_edges(9, &edges).expect("edges are in range");
                let three = find_t_frugal_coloring(&h, Frugality::TWO, 3, &SolveBudget::unlimited());
                if !matches!(three, Outcome::Exact(Some(_))) {
                    continue;
                }
                let g = h.complement();
                let fp = ng_fingerprint(&g);
                if !out.iter().any(|(f, _)| *f == fp) {
                    out.push((fp, g));
                }
            }
        }
    }
    out.into_iter().map(|(_, g)| g).collect()
}

fn permutations3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// Isomorphism-invariant signature: two rounds of colour refinement seeded with per-vertex
/// triangle counts and common-neighbour profiles.
pub type NgFingerprint = (usize, Vec<usize>, Vec<Vec<usize>>);

pub fn ng_fingerprint(g: &Graph) -> NgFingerprint {
    let n = g.n();
    let common = |u: usize, v: usize| g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
    let mut label: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut adj: Vec<usize> = g.neighbors(v).iter().map(|&u| common(u, v)).collect();
            let mut non: Vec<usize> = (0..n).filter(|&u| u != v && !g.has_edge(u, v)).map(|u| common(u, v)).collect();
            adj.sort_unstable();
            non.sort_unstable();
            let mut l = vec![g.degree(v), adj.iter().sum::<usize>() / 2];
            l.extend(adj);
            l.push(usize::MAX);
            l.extend(non);
            l
        })
        .collect();
    for _ in 0..2 {
        let mut palette: Vec<Vec<usize>> = label.clone();
        palette.sort();
        palette.dedup();
        let id = |l: &Vec<usize>| palette.binary_search(l).expect("label present");
        label = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| id(&label[u])).collect();
                nb.sort_unstable();
                let mut l = label[v].clone();
                l.push(usize::MAX);
                l.extend(nb);
                l
            })
            .collect();
    }
    label.sort();
    (n, g.degrees(), label)
}

/// Named family with parameters, as accepted by the `gen` subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    Hypercube(usize),
    Grid(Vec<usize>, ProductKind),
    Torus(usize, usize),
    RandomTree(usize, u64),
    RandomCubic(usize, u64),
    RandomBlock { n: usize, max_clique: usize, seed: u64 },
    PsiMultipartite { t: usize, r: usize },
    NgExceptional,
    Q3Twisted,
    C8AntipodalChords,
    Spider(usize),
    DoubleStar(usize, usize),
    Petersen,
    Prism,
    MobiusKantor,
    SubdividedK4Matched,
}

impl Family {
    /// Parses `name` with positional integer parameters. Random families take `seed`.
    pub fn parse(name: &str, params: &[String], seed: u64) -> Result<Family> {
        let nums = || -> Result<Vec<usize>> {
            params
                .iter()
                .map(|p| p.parse().map_err(|_| Error::InvalidParameter(format!("`{p}` is not a nonnegative integer"))))
                .collect()
        };
        let exactly = |k: usize| -> Result<Vec<usize>> {
            let v = nums()?;
            if v.len() != k {
                return Err(Error::InvalidParameter(format!("`{name}` takes {k} integer parameter(s), got {}", v.len())));
            }
            Ok(v)
        };
        Ok(match name {
            "path" => Family::Path(exactly(1)?[0]),
            "cycle" => Family::Cycle(exactly(1)?[0]),
            "complete" => Family::Complete(exactly(1)?[0]),
            "star" => Family::Star(exactly(1)?[0]),
            "complete_multipartite" | "multipartite" => Family::CompleteMultipartite(nums()?),
            "hypercube" => Family::Hypercube(exactly(1)?[0]),
            "grid" | "strong_grid" => {
                let kind = if name == "grid" { ProductKind::Cartesian } else { ProductKind::Strong };
                Family::Grid(nums()?, kind)
            }
            "torus" => {
                let v = exactly(2)?;
                Family::Torus(v[0], v[1])
            }
            "random_tree" => Family::RandomTree(exactly(1)?[0], seed),
            "random_cubic" => Family::RandomCubic(exactly(1)?[0], seed),
            "random_block" => {
                let v = exactly(2)?;
                Family::RandomBlock { n: v[0], max_clique: v[1], seed }
            }
            "psi_multipartite" => {
                let v = exactly(2)?;
                Family::PsiMultipartite { t: v[0], r: v[1] }
            }
            "ng_exceptional" => Family::NgExceptional,
            "q3_twisted" => Family::Q3Twisted,
            "c8_antipodal_chords" => Family::C8AntipodalChords,
            "spider" => Family::Spider(exactly(1)?[0]),
            "double_star" => {
                let v = exactly(2)?;
                Family::DoubleStar(v[0], v[1])
            }
            "petersen" => Family::Petersen,
            "prism" => Family::Prism,
            "mobius_kantor" => Family::MobiusKantor,
            "subdivided_k4_matched" => Family::SubdividedK4Matched,
            _ => return Err(Error::InvalidParameter(format!("unknown family `{name}`"))),
        })
    }

    /// All families yield one graph except `NgExceptional`, which yields the whole list.
    pub fn generate(&self) -> Result<Vec<Graph>> {
        let one = |g: Graph| Ok(vec![g]);
        match self {
            Family::Path(n) => one(path(*n)),
            Family::Cycle(n) => one(cycle(*n)?),
            Family::Complete(n) => one(complete(*n)),
            Family::Star(n) if *n == 0 => Err(Error::InvalidParameter("star needs n >= 1".into())),
            Family::Star(n) => one(star(*n)),
            Family::CompleteMultipartite(parts) => one(complete_multipartite(parts)),
            Family::Hypercube(d) => one(hypercube(*d)?),
            Family::Grid(sides, kind) => one(grid(sides, *kind)?),
            Family::Torus(m, n) => one(torus(*m, *n)?),
            Family::RandomTree(n, seed) => one(random_tree(*n, *seed)),
            Family::RandomCubic(n, seed) => one(random_cubic(*n, *seed)?),
            Family::RandomBlock { n, max_clique, seed } => one(random_block(*n, *max_clique, *seed)?),
            Family::PsiMultipartite { t, r } => one(psi_multipartite(*t, *r)?),
            Family::NgExceptional => Ok(ng_exceptional()),
            Family::Q3Twisted => one(q3_twisted()),
            Family::C8AntipodalChords => one(c8_antipodal_chords()),
            Family::Spider(t) => one(spider(*t)),
            Family::DoubleStar(a, b) => one(double_star(*a, *b)),
            Family::Petersen => one(petersen()),
            Family::Prism => one(prism()),
            Family::MobiusKantor => one(mobius_kantor()),
            Family::SubdividedK4Matched => one(subdivided_k4_matched()),
        }
    }
}
