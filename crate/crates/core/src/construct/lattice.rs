//! Tori `C_m □ C_n` and finite windows of Cartesian and strong powers of paths.

use super::{certified, color_cartesian};
use crate::check::Coloring;
use crate::error::{Error, Result};
use crate::exact::{chi2_exact, SolveBudget};
use crate::graph::{cycle, grid, torus, Graph, ProductKind};
use crate::Frugality;
use serde::{Deserialize, Serialize};

/// Blocks of rows for `C_m □ C_5`; a row is one turn around the 5-cycle and consecutive rows
/// advance along the `m`-cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusPattern {
    Pat2,
    A,
    B,
    C,
    D,
    E,
    F,
}

// Colors 1..=4 as drawn; `rows` shifts them to 0..4.
const PAT2: [[usize; 5]; 3] = [[2, 4, 1, 4, 3], [3, 2, 3, 1, 4], [4, 1, 2, 3, 1]];
const PAT_A: [[usize; 5]; 4] = [[1, 2, 1, 2, 3], [3, 4, 3, 4, 1], [2, 1, 2, 1, 4], [4, 3, 4, 3, 2]];
const PAT_B: [[usize; 5]; 5] = [[1, 2, 1, 2, 3], [3, 4, 3, 4, 1], [2, 1, 2, 1, 4], [1, 4, 3, 2, 3], [2, 3, 4, 1, 4]];
const PAT_C: [[usize; 5]; 4] = [[1, 2, 3, 4, 3], [3, 4, 1, 2, 1], [2, 1, 4, 3, 4], [4, 3, 2, 1, 2]];
const PAT_D: [[usize; 5]; 6] =
    [[1, 2, 3, 4, 3], [3, 4, 1, 2, 1], [2, 1, 4, 3, 4], [4, 3, 2, 1, 2], [3, 1, 4, 3, 1], [2, 4, 1, 2, 4]];
const PAT_E: [[usize; 5]; 4] = [[1, 2, 3, 4, 3], [3, 4, 1, 2, 4], [2, 1, 4, 3, 1], [4, 3, 2, 1, 2]];
const PAT_F: [[usize; 5]; 7] = [
    [1, 2, 3, 4, 3],
    [3, 4, 1, 2, 4],
    [2, 1, 4, 3, 1],
    [4, 3, 2, 1, 2],
    [3, 2, 1, 3, 4],
    [2, 4, 3, 4, 1],
    [4, 1, 2, 1, 2],
];

impl TorusPattern {
    pub const ALL: [TorusPattern; 7] =
        [TorusPattern::Pat2, TorusPattern::A, TorusPattern::B, TorusPattern::C, TorusPattern::D, TorusPattern::E, TorusPattern::F];

    pub fn rows(self) -> Vec<[usize; 5]> {
        let raw: &[[usize; 5]] = match self {
            TorusPattern::Pat2 => &PAT2,
            TorusPattern::A => &PAT_A,
            TorusPattern::B => &PAT_B,
            TorusPattern::C => &PAT_C,
            TorusPattern::D => &PAT_D,
            TorusPattern::E => &PAT_E,
            TorusPattern::F => &PAT_F,
        };
        raw.iter().map(|r| r.map(|c| c - 1)).collect()
    }

    /// Stack of patterns tiling `C_m □ C_5`, by `m mod 4` with `m = 4q + j`.
    pub fn stack_for(m: usize) -> Result<Vec<TorusPattern>> {
        use TorusPattern::*;
        if m < 3 {
            return Err(Error::InvalidParameter(format!("cycle length {m} is below 3")));
        }
        if m == 3 {
            return Ok(vec![Pat2]);
        }
        let (q, j) = (m / 4, m % 4);
        let (body, last) = match j {
            0 => (A, A),
            1 => (A, B),
            2 => (C, D),
            _ => (E, F),
        };
        let mut stack = vec![body; q - 1];
        stack.push(last);
        Ok(stack)
    }
}

/// Optimal palette for `C_m □ C_n`: 3 when both lengths are multiples of 3, else 4.
pub fn torus_palette(m: usize, n: usize) -> Result<usize> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidParameter(format!("torus needs cycle lengths >= 3, got {m} x {n}")));
    }
    Ok(if m.is_multiple_of(3) && n.is_multiple_of(3) { 3 } else { 4 })
}

/// Optimal 2-frugal coloring of `C_m □ C_n`, vertex `(i, j)` at `i * n + j`.
pub fn color_torus(m: usize, n: usize) -> Result<Coloring> {
    let palette = torus_palette(m, n)?;
    let g = torus(m, n)?;
    let c = if palette == 3 {
        Coloring::new((0..m * n).map(|v| (v / n + v % n) % 3).collect(), 3)?
    } else if m != 5 && n != 5 {
        let cm = cycle(m)?;
        let cn = cycle(n)?;
        let witness = |c: &Graph| chi2_exact(c, &SolveBudget::unlimited()).value().expect("cycles are tiny").1;
        color_cartesian(&cm, &cn, &witness(&cm), &witness(&cn))?
    } else {
        let long = if n == 5 { m } else { n };
        let rows: Vec<[usize; 5]> = TorusPattern::stack_for(long)?.into_iter().flat_map(TorusPattern::rows).collect();
        debug_assert_eq!(rows.len(), long);
        let colors = (0..m * n).map(|v| if n == 5 { rows[v / n][v % n] } else { rows[v % n][v / n] }).collect();
        Coloring::new(colors, 4)?
    };
    certified(&g, c, Frugality::TWO, "torus coloring")
}

/// `f(x) = sum_i i * x_i mod (d + 1)` on `P_{s_1} □ ... □ P_{s_d}`, with coordinates numbered
/// from 1 and the first one most significant in the vertex id.
pub fn color_cartesian_power_grid(sides: &[usize]) -> Result<Coloring> {
    if sides.is_empty() || sides.iter().any(|&s| s < 3) {
        return Err(Error::InvalidParameter("every side must be at least 3".into()));
    }
    let g = grid(sides, ProductKind::Cartesian)?;
    let k = sides.len() + 1;
    let colors = coordinates(sides).map(|x| x.iter().enumerate().map(|(i, &xi)| (i + 1) * xi).sum::<usize>() % k).collect();
    certified(&g, Coloring::new(colors, k)?, Frugality::TWO, "Cartesian grid coloring")
}

/// `c(x) = sum_i 3^(i-1) x_i mod (3^d + 1) / 2` on the `d`-fold strong power of `P_side`.
pub fn color_strong_power_grid(side: usize, dims: usize) -> Result<Coloring> {
    if side < 3 || dims == 0 {
        return Err(Error::InvalidParameter(format!("need side >= 3 and dims >= 1, got {side} and {dims}")));
    }
    let sides = vec![side; dims];
    let g = grid(&sides, ProductKind::Strong)?;
    let k = 3usize.pow(dims as u32).div_ceil(2);
    let colors = coordinates(&sides)
        .map(|x| x.iter().enumerate().map(|(i, &xi)| 3usize.pow(i as u32) * xi).sum::<usize>() % k)
        .collect();
    certified(&g, Coloring::new(colors, k)?, Frugality::TWO, "strong grid coloring")
}

/// Coordinate tuples in vertex-id order, first coordinate most significant.
fn coordinates(sides: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = sides.iter().product();
    (0..total).map(move |mut v| {
        let mut x = vec![0; sides.len()];
        for (xi, &s) in x.iter_mut().zip(sides).rev() {
            *xi = v % s;
            v /= s;
        }
        x
    })
}

/// Signed base-3 value `sum_i 3^(i-1) v_i` of a tuple over `{-1, 0, 1}`.
pub fn eta(v: &[i64]) -> Result<i64> {
    if let Some(bad) = v.iter().find(|x| !(-1..=1).contains(*x)) {
        return Err(Error::InvalidParameter(format!("entry {bad} is outside {{-1, 0, 1}}")));
    }
    Ok(v.iter().rev().fold(0, |acc, &x| 3 * acc + x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::is_t_frugal_coloring;
    use crate::exact::chi_t_frugal_exact;

    fn exact(g: &Graph) -> usize {
        chi_t_frugal_exact(g, Frugality::TWO, &SolveBudget::unlimited()).value().unwrap().0
    }

    #[test]
    fn torus_examples() {
        assert_eq!(color_torus(6, 6).unwrap().palette(), 3);
        assert_eq!(color_torus(3, 5).unwrap().palette(), 4);
        assert_eq!(color_torus(4, 4).unwrap().palette(), 4);
        assert!(color_torus(2, 5).is_err());
    }

    #[test]
    fn every_stack_with_five_tiles() {
        for m in 3..=40 {
            assert_eq!(color_torus(m, 5).unwrap().palette(), 4, "m = {m}");
            assert_eq!(color_torus(5, m).unwrap().palette(), torus_palette(5, m).unwrap());
        }
        assert_eq!(TorusPattern::stack_for(13).unwrap(), vec![TorusPattern::A, TorusPattern::A, TorusPattern::B]);
        assert!(TorusPattern::ALL.iter().all(|p| p.rows().iter().flatten().all(|&c| c < 4)));
    }

    #[test]
    fn torus_matches_exact_values() {
        for m in 3..=6 {
            for n in m..=6 {
                let val = exact(&torus(m, n).unwrap());
                assert_eq!(color_torus(m, n).unwrap().palette(), val, "{m} x {n}");
                assert_eq!(color_torus(n, m).unwrap().palette(), val);
            }
        }
    }

    #[test]
    fn cartesian_power_grids() {
        assert_eq!(color_cartesian_power_grid(&[4, 4]).unwrap().palette(), 3);
        assert_eq!(color_cartesian_power_grid(&[3, 3, 3]).unwrap().palette(), 4);
        assert_eq!(color_cartesian_power_grid(&[5]).unwrap().palette(), 2);
        assert_eq!(color_cartesian_power_grid(&[3, 5, 4, 3]).unwrap().palette(), 5);
        assert!(color_cartesian_power_grid(&[2, 4]).is_err());
        for sides in [vec![3, 3], vec![3, 4], vec![3, 3, 3]] {
            assert_eq!(exact(&grid(&sides, ProductKind::Cartesian).unwrap()), sides.len() + 1);
        }
    }

    #[test]
    fn strong_power_grids() {
        assert_eq!(color_strong_power_grid(5, 2).unwrap().palette(), 5);
        assert_eq!(color_strong_power_grid(3, 1).unwrap().palette(), 2);
        assert_eq!(color_strong_power_grid(4, 3).unwrap().palette(), 14);
        assert!(color_strong_power_grid(2, 2).is_err());
        assert_eq!(exact(&grid(&[4, 4], ProductKind::Strong).unwrap()), 5);
    }

    #[test]
    fn eta_is_a_bijection_onto_the_symmetric_interval() {
        assert_eq!(eta(&[1, 1]).unwrap(), 4);
        assert_eq!(eta(&[0, 0, 0]).unwrap(), 0);
        assert!(eta(&[2]).is_err());
        for d in 1..=4u32 {
            let half = (3i64.pow(d) - 1) / 2;
            let mut values: Vec<i64> = (0..3usize.pow(d))
                .map(|code| {
                    let v: Vec<i64> = (0..d).map(|i| (code / 3usize.pow(i) % 3) as i64 - 1).collect();
                    eta(&v).unwrap()
                })
                .collect();
            values.sort_unstable();
            assert_eq!(values, (-half..=half).collect::<Vec<_>>());
        }
    }

    /// Square window of a planar lattice given by its neighbor offsets.
    fn window(side: i64, nbrs: impl Fn(i64, i64) -> Vec<(i64, i64)>) -> Graph {
        let id = |x: i64, y: i64| (x * side + y) as usize;
        let mut edges = Vec::new();
        for x in 0..side {
            for y in 0..side {
                for (a, b) in nbrs(x, y) {
                    if (0..side).contains(&a) && (0..side).contains(&b) {
                        edges.push((id(x, y), id(a, b)));
                    }
                }
            }
        }
        Graph::from_edges((side * side) as usize, &edges).unwrap()
    }

    #[test]
    fn hexagonal_and_triangular_windows() {
        // Hexagonal lattice as a brick wall: vertical rungs where x + y is even.
        let hex = window(10, |x, y| vec![(x + 1, y), (x, y + if (x + y) % 2 == 0 { 1 } else { -1 })]);
        let c = Coloring::new((0..100).map(|v| (v / 10 + v % 10) % 3).collect(), 3).unwrap();
        assert_eq!(hex.max_degree(), 3);
        assert!(is_t_frugal_coloring(&hex, &c, Frugality::TWO).unwrap());

        let tri = window(10, |x, y| vec![(x + 1, y), (x, y + 1), (x + 1, y - 1)]);
        let c = Coloring::new((0..100).map(|v| (v / 10 + 2 * (v % 10)) % 4).collect(), 4).unwrap();
        assert_eq!(tri.max_degree(), 6);
        assert!(is_t_frugal_coloring(&tri, &c, Frugality::TWO).unwrap());
        assert_eq!(exact(&window(5, |x, y| vec![(x + 1, y), (x, y + 1), (x + 1, y - 1)])), 4);
    }
}
