//! Exact search for frugal, proper, 2-distance and injective chromatic numbers and for the
//! frugal independence number. Exhausting the budget yields [`Outcome::Unknown`], never a guess.

use crate::check::{Coloring, VertexSet};
use crate::graph::{structure::clique_number, Graph};
use crate::Frugality;
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SolveBudget {
    pub const DEFAULT_NODES: u64 = 50_000_000;

    pub fn unlimited() -> Self {
        SolveBudget { node_limit: None, time_limit: None }
    }

    pub fn nodes(limit: u64) -> Self {
        SolveBudget { node_limit: Some(limit), time_limit: None }
    }

    pub fn with_time(self, limit: Duration) -> Self {
        SolveBudget { time_limit: Some(limit), ..self }
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        Self::nodes(Self::DEFAULT_NODES)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "lowercase")]
pub enum Outcome<T> {
    Exact(T),
    Unknown,
}

impl<T> Outcome<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Outcome::Exact(v) => Some(v),
            Outcome::Unknown => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Outcome::Unknown)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Exact(v) => Outcome::Exact(f(v)),
            Outcome::Unknown => Outcome::Unknown,
        }
    }
}

/// Shared node/time accounting across the searches of one solve.
struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: &SolveBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit.unwrap_or(u64::MAX),
            deadline: budget.time_limit.map(|d| Instant::now() + d),
        }
    }

    /// `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        !(self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d))
    }
}

/// Repeatedly removes a minimum-degree vertex (lowest id on ties); returns removal order.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            deg[w] = deg[w].saturating_sub(1);
        }
    }
    order
}

/// Which colorings the search accepts.
#[derive(Clone, Copy)]
struct Rule {
    /// Adjacent vertices must differ.
    proper: bool,
    /// Most neighbors of one vertex that may share a color.
    cap: usize,
}

/// Backtracking over vertices, most constrained first, with per-(vertex, color) counters.
struct ColorSearch<'a> {
    g: &'a Graph,
    rule: Rule,
    k: usize,
    color: Vec<Option<usize>>,
    /// `cnt[v * k + c]`: neighbors of `v` colored `c`.
    cnt: Vec<usize>,
    /// `block[v * k + c]`: reasons `v` cannot take `c`.
    block: Vec<usize>,
    /// Colors `c < k` with zero blocks.
    free: Vec<usize>,
    /// Static tie-break: position in the degeneracy order, reversed so dense cores go first.
    rank: Vec<usize>,
    used: usize,
    colored: usize,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a Graph, rule: Rule, k: usize) -> Self {
        let n = g.n();
        let mut rank = vec![0; n];
        for (i, v) in degeneracy_order(g).into_iter().rev().enumerate() {
            rank[v] = i;
        }
        ColorSearch {
            g,
            rule,
            k,
            color: vec![None; n],
            cnt: vec![0; n * k],
            block: vec![0; n * k],
            free: vec![k; n],
            rank,
            used: 0,
            colored: 0,
        }
    }

    fn add_block(&mut self, v: usize, c: usize) {
        let b = &mut self.block[v * self.k + c];
        if *b == 0 {
            self.free[v] -= 1;
        }
        *b += 1;
    }

    fn remove_block(&mut self, v: usize, c: usize) {
        let b = &mut self.block[v * self.k + c];
        *b -= 1;
        if *b == 0 {
            self.free[v] += 1;
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        let g = self.g;
        self.color[v] = Some(c);
        self.colored += 1;
        for &w in g.neighbors(v) {
            let i = w * self.k + c;
            self.cnt[i] += 1;
            if self.rule.proper {
                self.add_block(w, c);
            }
            if self.cnt[i] == self.rule.cap {
                for &x in g.neighbors(w) {
                    self.add_block(x, c);
                }
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        let g = self.g;
        for &w in g.neighbors(v) {
            let i = w * self.k + c;
            if self.cnt[i] == self.rule.cap {
                for &x in g.neighbors(w) {
                    self.remove_block(x, c);
                }
            }
            if self.rule.proper {
                self.remove_block(w, c);
            }
            self.cnt[i] -= 1;
        }
        self.color[v] = None;
        self.colored -= 1;
    }

    /// Most constrained uncolored vertex and its number of admissible colors.
    fn pick(&self) -> Option<(usize, usize)> {
        let spare = self.k - self.used;
        let fresh = usize::from(self.used < self.k);
        (0..self.g.n())
            .filter(|&v| self.color[v].is_none())
            .map(|v| (v, self.free[v] - spare + fresh))
            .min_by_key(|&(v, options)| (options, self.rank[v]))
    }

    fn run(&mut self, meter: &mut Meter) -> Option<bool> {
        if !meter.tick() {
            return None;
        }
        let Some((v, options)) = self.pick() else {
            return Some(true);
        };
        if options == 0 {
            return Some(false);
        }
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.block[v * self.k + c] > 0 {
                continue;
            }
            let opened = c == self.used;
            if opened {
                self.used += 1;
            }
            self.assign(v, c);
            let found = self.run(meter);
            if found != Some(false) {
                return found;
            }
            self.unassign(v, c);
            if opened {
                self.used -= 1;
            }
        }
        Some(false)
    }
}

fn find_coloring(g: &Graph, rule: Rule, k: usize, meter: &mut Meter) -> Outcome<Option<Coloring>> {
    if g.n() == 0 {
        return Outcome::Exact(Some(Coloring::from_colors(Vec::new())));
    }
    if k == 0 {
        return Outcome::Exact(None);
    }
    let mut s = ColorSearch::new(g, rule, k);
    match s.run(meter) {
        None => Outcome::Unknown,
        Some(false) => Outcome::Exact(None),
        Some(true) => {
            let colors = s.color.into_iter().map(|c| c.expect("all colored")).collect();
            Outcome::Exact(Some(Coloring::new(colors, k).expect("colors below k")))
        }
    }
}

/// Ascending search for the least `k` admitting a coloring; every `k` below the answer is refuted.
fn minimize(g: &Graph, rule: Rule, lower: usize, budget: &SolveBudget) -> Outcome<(usize, Coloring)> {
    if g.n() == 0 {
        return Outcome::Exact((0, Coloring::from_colors(Vec::new())));
    }
    let mut meter = Meter::new(budget);
    for k in lower.max(1)..=g.n() {
        match find_coloring(g, rule, k, &mut meter) {
            Outcome::Unknown => return Outcome::Unknown,
            Outcome::Exact(Some(c)) => return Outcome::Exact((k, c)),
            Outcome::Exact(None) => {}
        }
    }
    unreachable!("a rainbow coloring always satisfies the rule")
}

fn frugal_rule(t: Frugality) -> Rule {
    Rule { proper: true, cap: t.get() }
}

/// Decides whether a `t`-frugal coloring with `k` colors exists, returning one if so.
pub fn find_t_frugal_coloring(g: &Graph, t: Frugality, k: usize, budget: &SolveBudget) -> Outcome<Option<Coloring>> {
    find_coloring(g, frugal_rule(t), k, &mut Meter::new(budget))
}

/// Decides whether a proper `k`-coloring exists, returning one if so.
pub fn find_proper_coloring(g: &Graph, k: usize, budget: &SolveBudget) -> Outcome<Option<Coloring>> {
    find_coloring(g, Rule { proper: true, cap: usize::MAX }, k, &mut Meter::new(budget))
}

/// `max{omega, ceil(Delta / t) + 1}`, the starting point of the ascending search.
pub fn frugal_lower_bound(g: &Graph, t: Frugality) -> usize {
    if g.n() == 0 {
        return 0;
    }
    clique_number(g).max(g.max_degree().div_ceil(t.get()) + 1)
}

pub fn chi_t_frugal_exact(g: &Graph, t: Frugality, budget: &SolveBudget) -> Outcome<(usize, Coloring)> {
    minimize(g, frugal_rule(t), frugal_lower_bound(g, t), budget)
}

pub fn chi_exact(g: &Graph, budget: &SolveBudget) -> Outcome<(usize, Coloring)> {
    minimize(g, Rule { proper: true, cap: usize::MAX }, clique_number(g), budget)
}

/// Chromatic number of the square; the witness is a 2-distance coloring of `g`.
pub fn chi2_exact(g: &Graph, budget: &SolveBudget) -> Outcome<(usize, Coloring)> {
    let sq = g.square();
    let lower = clique_number(&sq).max(g.max_degree() + 1);
    minimize(&sq, Rule { proper: true, cap: usize::MAX }, lower, budget)
}

pub fn chi_injective_exact(g: &Graph, budget: &SolveBudget) -> Outcome<(usize, Coloring)> {
    minimize(g, Rule { proper: false, cap: 1 }, g.max_degree().max(1), budget)
}

/// Branch and bound for the largest `t`-frugal independent set.
struct SetSearch<'a> {
    g: &'a Graph,
    t: usize,
    /// 0 undecided, 1 in the set, 2 excluded.
    state: Vec<u8>,
    /// Members in each vertex's neighborhood.
    cnt: Vec<usize>,
    size: usize,
    best: Vec<usize>,
    weights: Vec<usize>,
}

impl<'a> SetSearch<'a> {
    fn addable(&self, v: usize) -> bool {
        self.state[v] == 0
            && self.cnt[v] == 0
            && self.g.neighbors(v).iter().all(|&w| self.state[w] != 1 && self.cnt[w] < self.t)
    }

    /// Members of a completion `S'` each use one unit of frugality capacity at every neighbor,
    /// while members themselves offer none, so `sum_{u in S'} (deg u + c_u) <= sum_w c_w` with
    /// `c_w = min(t - cnt[w], candidate neighbors of w)` over non-members `w`.
    fn upper_bound(&mut self, cand: &[usize]) -> usize {
        let g = self.g;
        let mut is_cand = vec![false; g.n()];
        cand.iter().for_each(|&v| is_cand[v] = true);
        let cap = |w: usize| (self.t - self.cnt[w]).min(g.neighbors(w).iter().filter(|&&u| is_cand[u]).count());
        let total: usize = (0..g.n()).filter(|&w| self.state[w] != 1).map(cap).sum();
        self.weights.clear();
        self.weights.extend(cand.iter().map(|&u| g.degree(u) + cap(u)));
        self.weights.sort_unstable();
        let mut acc = 0;
        let fit = self.weights.iter().take_while(|&&w| {
            acc += w;
            acc <= total
        });
        self.size + fit.count()
    }

    fn run(&mut self, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        let cand: Vec<usize> = (0..self.g.n()).filter(|&v| self.addable(v)).collect();
        if self.size > self.best.len() {
            self.best = (0..self.g.n()).filter(|&v| self.state[v] == 1).collect();
        }
        if cand.is_empty() || self.size + cand.len() <= self.best.len() || self.upper_bound(&cand) <= self.best.len() {
            return true;
        }
        let is_cand = |u: usize| cand.binary_search(&u).is_ok();
        let v = *cand
            .iter()
            .max_by_key(|&&v| (self.g.neighbors(v).iter().filter(|&&u| is_cand(u)).count(), std::cmp::Reverse(v)))
            .expect("nonempty");
        self.state[v] = 1;
        self.size += 1;
        for &w in self.g.neighbors(v) {
            self.cnt[w] += 1;
        }
        let ok = self.run(meter);
        for &w in self.g.neighbors(v) {
            self.cnt[w] -= 1;
        }
        self.size -= 1;
        if !ok {
            self.state[v] = 0;
            return false;
        }
        self.state[v] = 2;
        let ok = self.run(meter);
        self.state[v] = 0;
        ok
    }
}

pub fn alpha_t_frugal_exact(g: &Graph, t: Frugality, budget: &SolveBudget) -> Outcome<(usize, VertexSet)> {
    let mut s = SetSearch {
        g,
        t: t.get(),
        state: vec![0; g.n()],
        cnt: vec![0; g.n()],
        size: 0,
        best: Vec::new(),
        weights: Vec::new(),
    };
    if s.run(&mut Meter::new(budget)) {
        let best = std::mem::take(&mut s.best);
        Outcome::Exact((best.len(), VertexSet::new(best)))
    } else {
        Outcome::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::{is_2_distance_coloring, is_injective_coloring, is_proper, is_t_frugal_coloring, is_t_frugal_set};
    use crate::graph::{complete, cycle, hypercube, path, petersen, random_tree, star};
    use proptest::prelude::*;
    use rand::Rng;

    fn t(k: usize) -> Frugality {
        Frugality::new(k).unwrap()
    }

    fn u() -> SolveBudget {
        SolveBudget::unlimited()
    }

    fn chi_f(g: &Graph, k: usize) -> usize {
        chi_t_frugal_exact(g, t(k), &u()).value().unwrap().0
    }

    fn alpha_f(g: &Graph, k: usize) -> usize {
        alpha_t_frugal_exact(g, t(k), &u()).value().unwrap().0
    }

    /// Every coloring with `k` colors, tried in full.
    fn brute_min(g: &Graph, ok: impl Fn(&Coloring) -> bool) -> usize {
        let n = g.n();
        (1..=n.max(1))
            .find(|&k| {
                (0..k.pow(n as u32)).any(|mut code| {
                    let colors = (0..n)
                        .map(|_| {
                            let c = code % k;
                            code /= k;
                            c
                        })
                        .collect();
                    ok(&Coloring::new(colors, k).unwrap())
                })
            })
            .unwrap()
    }

    fn brute_alpha(g: &Graph, k: usize) -> usize {
        (0u32..1 << g.n())
            .filter(|mask| is_t_frugal_set(g, &VertexSet::new((0..g.n()).filter(|&v| mask >> v & 1 == 1).collect()), t(k)))
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        let mut r = crate::graph::generators::rng(seed);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if r.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn known_frugal_values() {
        assert_eq!(chi_f(&cycle(5).unwrap(), 2), 3);
        assert_eq!(chi_f(&complete(5), 2), 5);
        assert_eq!(chi_f(&hypercube(3).unwrap(), 2), 4);
        assert_eq!(chi_f(&Graph::edgeless(5), 1), 1);
        assert_eq!(chi_f(&star(8), 2), 5);
        assert_eq!(chi_f(&Graph::edgeless(0), 2), 0);
    }

    #[test]
    fn known_distance_values() {
        assert_eq!(chi2_exact(&cycle(5).unwrap(), &u()).value().unwrap().0, 5);
        assert_eq!(chi2_exact(&cycle(6).unwrap(), &u()).value().unwrap().0, 3);
        assert_eq!(chi_exact(&complete(4), &u()).value().unwrap().0, 4);
        assert_eq!(chi_exact(&petersen(), &u()).value().unwrap().0, 3);
        assert_eq!(chi_injective_exact(&cycle(8).unwrap(), &u()).value().unwrap().0, 2);
        assert_eq!(chi_injective_exact(&cycle(5).unwrap(), &u()).value().unwrap().0, 3);
    }

    #[test]
    fn known_alpha_values() {
        assert_eq!(alpha_f(&complete(4), 2), 1);
        assert_eq!(alpha_f(&hypercube(3).unwrap(), 2), 2);
        assert_eq!(alpha_f(&path(7), 2), 4);
        assert_eq!(alpha_f(&star(6), 2), 2);
        assert_eq!(alpha_f(&Graph::edgeless(0), 2), 0);
    }

    #[test]
    fn witnesses_are_valid() {
        let g = petersen();
        let (k, c) = chi_t_frugal_exact(&g, t(2), &u()).value().unwrap();
        assert_eq!(c.palette(), k);
        assert!(is_t_frugal_coloring(&g, &c, t(2)).unwrap());
        assert!(find_t_frugal_coloring(&g, t(2), k - 1, &u()).value().unwrap().is_none());
        let (_, c2) = chi2_exact(&g, &u()).value().unwrap();
        assert!(is_2_distance_coloring(&g, &c2).unwrap());
        let (_, ci) = chi_injective_exact(&g, &u()).value().unwrap();
        assert!(is_injective_coloring(&g, &ci).unwrap());
        let (_, cp) = chi_exact(&g, &u()).value().unwrap();
        assert!(is_proper(&g, &cp).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = petersen();
        assert!(chi_t_frugal_exact(&g, t(2), &SolveBudget::nodes(3)).is_unknown());
        assert!(alpha_t_frugal_exact(&g, t(2), &SolveBudget::nodes(2)).is_unknown());
        assert!(chi_exact(&g, &SolveBudget::nodes(1).with_time(Duration::ZERO)).is_unknown());
    }

    #[test]
    fn matches_brute_force_on_small_random_graphs() {
        for seed in 0..40 {
            let g = random_graph(6, 0.5, seed);
            for k in 1..=3 {
                let want = brute_min(&g, |c| is_t_frugal_coloring(&g, c, t(k)).unwrap());
                assert_eq!(chi_f(&g, k), want, "seed {seed} t {k}");
            }
            let inj = brute_min(&g, |c| is_injective_coloring(&g, c).unwrap());
            assert_eq!(chi_injective_exact(&g, &u()).value().unwrap().0, inj);
        }
    }

    #[test]
    fn alpha_matches_subset_enumeration() {
        for seed in 0..60 {
            let n = 8 + (seed as usize % 9);
            let g = if seed % 3 == 0 { random_tree(n, seed) } else { random_graph(n, 0.3, seed) };
            for k in 1..=3 {
                let (val, set) = alpha_t_frugal_exact(&g, t(k), &u()).value().unwrap();
                assert!(is_t_frugal_set(&g, &set, t(k)));
                assert_eq!(val, set.len());
                assert_eq!(val, brute_alpha(&g, k), "seed {seed} t {k}");
            }
        }
    }

    #[test]
    fn degeneracy_order_peels_leaves_first() {
        assert_eq!(degeneracy_order(&star(4)), vec![1, 2, 0, 3]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn chain_and_sandwich(n in 1usize..8, p in 0.1f64..0.9, seed in any::<u64>()) {
            let g = random_graph(n, p, seed);
            let chi = chi_exact(&g, &u()).value().unwrap().0;
            let chi2 = chi2_exact(&g, &u()).value().unwrap().0;
            let f: Vec<usize> = (1..=4).map(|k| chi_f(&g, k)).collect();
            prop_assert_eq!(f[0], chi2);
            for w in f.windows(2) {
                prop_assert!(w[1] <= w[0]);
            }
            prop_assert!(chi <= f[3]);
            let d = g.max_degree();
            for (i, &v) in f.iter().enumerate() {
                let k = i + 1;
                prop_assert!(v >= chi.max(d.div_ceil(k) + 1).min(n));
                prop_assert!(v <= 1 + d * (1 + d.saturating_sub(1) / k));
            }
        }

        #[test]
        fn deterministic(n in 1usize..9, seed in any::<u64>()) {
            let g = random_graph(n, 0.4, seed);
            prop_assert_eq!(chi_t_frugal_exact(&g, t(2), &u()), chi_t_frugal_exact(&g, t(2), &u()));
            prop_assert_eq!(alpha_t_frugal_exact(&g, t(2), &u()), alpha_t_frugal_exact(&g, t(2), &u()));
        }
    }
}
