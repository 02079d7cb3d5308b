//! Gadget turning an Exact Cover by 3-Sets instance into a `t`-frugal independent set question.
//!
//! Triple `C_r` becomes a path `a_r b_r c_r`; element `x_j` becomes a star with center `x'_j` and
//! `t - 1` leaves, and `x'_j c_r` is an edge whenever `x_j` lies in `C_r`. With `p` triples the
//! instance has an exact cover iff the graph has a `t`-frugal independent set of size
//! `p + (3t - 2) q`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Frugality;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3CInstance {
    pub q: usize,
    pub triples: Vec<[usize; 3]>,
}

impl X3CInstance {
    pub fn new(q: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        let inst = X3CInstance { q, triples };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q == 0 {
            return Err(Error::InvalidParameter("q must be positive".into()));
        }
        for (r, tr) in self.triples.iter().enumerate() {
            if tr.iter().any(|&x| x >= 3 * self.q) || tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2] {
                return Err(Error::InvalidParameter(format!("triple {r} must hold three distinct elements below {}", 3 * self.q)));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let inst: X3CInstance = serde_json::from_str(text)?;
        inst.validate()?;
        Ok(inst)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    A(usize),
    B(usize),
    C(usize),
    XCenter(usize),
    /// Element and leaf index, leaves numbered from 1.
    XLeaf(usize, usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A(r) => write!(f, "a_{r}"),
            Role::B(r) => write!(f, "b_{r}"),
            Role::C(r) => write!(f, "c_{r}"),
            Role::XCenter(j) => write!(f, "x_center_{j}"),
            Role::XLeaf(j, i) => write!(f, "x_leaf_{j}_{i}"),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub k: usize,
    /// Role of each vertex, indexed by vertex id.
    pub vertex_roles: Vec<Role>,
}

impl ReductionOutput {
    pub fn roles_json(&self) -> String {
        serde_json::to_string(&self.vertex_roles).expect("roles serialize")
    }
}

/// Path vertices of triple `r` are `3r, 3r+1, 3r+2`; then element `j` owns `t` consecutive ids,
/// its center first.
pub fn x3c_to_frugal(inst: &X3CInstance, t: Frugality) -> Result<ReductionOutput> {
    inst.validate()?;
    let t = t.get();
    if t < 2 {
        return Err(Error::InvalidParameter("the gadget needs t >= 2".into()));
    }
    let p = inst.triples.len();
    let base = 3 * p;
    let n = base + 3 * inst.q * t;
    let center = |j: usize| base + t * j;
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(n);
    for (r, tr) in inst.triples.iter().enumerate() {
        edges.extend([(3 * r, 3 * r + 1), (3 * r + 1, 3 * r + 2)]);
        roles.extend([Role::A(r), Role::B(r), Role::C(r)]);
        edges.extend(tr.iter().map(|&j| (center(j), 3 * r + 2)));
    }
    for j in 0..3 * inst.q {
        roles.push(Role::XCenter(j));
        for i in 1..t {
            edges.push((center(j), center(j) + i));
            roles.push(Role::XLeaf(j, i));
        }
    }
    Ok(ReductionOutput { graph: Graph::from_edges(n, &edges)?, k: p + (3 * t - 2) * inst.q, vertex_roles: roles })
}

/// Indices of `q` disjoint triples covering the universe, if any; the first uncovered element is
/// branched on.
pub fn x3c_brute_force(inst: &X3CInstance) -> Option<Vec<usize>> {
    fn go(inst: &X3CInstance, covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
        let Some(x) = covered.iter().position(|&c| !c) else {
            return true;
        };
        for (r, tr) in inst.triples.iter().enumerate() {
            if tr.contains(&x) && tr.iter().all(|&y| !covered[y]) {
                tr.iter().for_each(|&y| covered[y] = true);
                chosen.push(r);
                if go(inst, covered, chosen) {
                    return true;
                }
                chosen.pop();
                tr.iter().for_each(|&y| covered[y] = false);
            }
        }
        false
    }
    let mut covered = vec![false; 3 * inst.q];
    let mut chosen = Vec::new();
    go(inst, &mut covered, &mut chosen).then_some(chosen)
}
