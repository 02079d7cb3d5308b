use super::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Direct,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [Self::Cartesian, Self::Strong, Self::Direct, Self::Lexicographic];

    fn adjacent(self, g: &Graph, h: &Graph, (g1, h1): (usize, usize), (g2, h2): (usize, usize)) -> bool {
        let ge = g.has_edge(g1, g2);
        let he = h.has_edge(h1, h2);
        match self {
            Self::Cartesian => (ge && h1 == h2) || (g1 == g2 && he),
            Self::Direct => ge && he,
            Self::Strong => (ge && (h1 == h2 || he)) || (g1 == g2 && he),
            Self::Lexicographic => ge || (g1 == g2 && he),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cartesian => "cartesian",
            Self::Strong => "strong",
            Self::Direct => "direct",
            Self::Lexicographic => "lexicographic",
        })
    }
}

impl FromStr for ProductKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "cartesian" | "box" => Ok(Self::Cartesian),
            "strong" => Ok(Self::Strong),
            "direct" | "tensor" => Ok(Self::Direct),
            "lexicographic" | "lex" => Ok(Self::Lexicographic),
            _ => Err(crate::Error::InvalidParameter(format!("unknown product kind `{s}`"))),
        }
    }
}

/// Product graph with vertex `(i, j)` stored at `i * h.n() + j`.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let total = g.n() * nh;
    let mut adj = vec![Vec::new(); total];
    // Candidates for (g2, h2) come from N[g1] x N[h1], except lexicographic which needs N(g1) x V(h).
    for g1 in 0..g.n() {
        for h1 in 0..nh {
            let v = g1 * nh + h1;
            let gs = std::iter::once(g1).chain(g.neighbors(g1).iter().copied());
            for g2 in gs {
                let hs: Box<dyn Iterator<Item = usize>> = if kind == ProductKind::Lexicographic && g2 != g1 {
                    Box::new(0..nh)
                } else {
                    Box::new(std::iter::once(h1).chain(h.neighbors(h1).iter().copied()))
                };
                for h2 in hs {
                    if (g2, h2) != (g1, h1) && kind.adjacent(g, h, (g1, h1), (g2, h2)) {
                        adj[v].push(g2 * nh + h2);
                    }
                }
            }
        }
    }
    Graph::from_raw(adj)
}
