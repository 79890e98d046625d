//! The six-vertex model on the triangular grid: configurations, weights and
//! partition functions.
//!
//! Vertex `(i, j)` with `1 ≤ i ≤ j ≤ 2n` sits on horizontal line `i` and vertical
//! line `j`; `(i, i)` are the corners. Each vertex owns the vertical edge below
//! it and the horizontal edge to its right, so a configuration is two spins per
//! vertex. Spins follow the R-matrix language: ↑ means an arrow pointing up or
//! right, ↓ an arrow pointing down or left.

pub mod checks;
pub mod ops;

use std::fmt;

use rayon::prelude::*;

use crate::arith::{brace, bracket, Field, Ring};
use crate::error::{usage, Result};
use crate::spin::{word_to_string, Spin};
use crate::IntPoly;

pub use ops::{
    det_k, f_big, half_specialise, k_matrix, m_on_all_down, m_operator, nu, overlap_zz,
    overlap_zz_expanded, partition_algebraic, r_check, r_matrix, rescaled_yy, yy_factor, SvParams,
};

/// `↑↓…↑↓`.
pub fn alpha_plus(n: usize) -> Vec<Spin> {
    (0..2 * n)
        .map(|k| if k % 2 == 0 { Spin::Up } else { Spin::Down })
        .collect()
}

/// `↓↑…↓↑`.
pub fn alpha_minus(n: usize) -> Vec<Spin> {
    (0..2 * n)
        .map(|k| if k % 2 == 0 { Spin::Down } else { Spin::Up })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangularGrid {
    pub n: usize,
}

impl TriangularGrid {
    pub fn new(n: usize) -> Self {
        TriangularGrid { n }
    }

    /// Number of lines, `2n`.
    pub fn size(&self) -> usize {
        2 * self.n
    }

    /// Vertices in canonical order: by column, then by row.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        let m = self.size();
        (1..=m).flat_map(|j| (1..=j).map(move |i| (i, j))).collect()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= j && j <= self.size());
        (j - 1) * j / 2 + (i - 1)
    }

    pub fn vertex_count(&self) -> usize {
        let m = self.size();
        m * (m + 1) / 2
    }

    pub fn bulk_count(&self) -> usize {
        self.n * (2 * self.n - 1)
    }
}

/// Local configuration at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalConfig {
    /// all four spins equal
    BulkA,
    /// horizontal spins equal, vertical spins equal, the two pairs differ
    BulkB,
    /// horizontal arrows in, vertical arrows out
    BulkCPlus,
    /// horizontal arrows out, vertical arrows in
    BulkCMinus,
    /// in from below, out to the right
    CornerUpRight,
    /// in from the right, out downwards
    CornerLeftDown,
    /// both arrows in
    CornerSink,
    /// both arrows out
    CornerSource,
    /// violates the ice rule
    Invalid,
}

impl LocalConfig {
    pub fn bulk(left: Spin, bottom: Spin, right: Spin, top: Spin) -> Self {
        use Spin::*;
        match (left, bottom, right, top) {
            (l, b, r, t) if l == r && b == t => {
                if l == b {
                    LocalConfig::BulkA
                } else {
                    LocalConfig::BulkB
                }
            }
            (Up, Down, Down, Up) => LocalConfig::BulkCPlus,
            (Down, Up, Up, Down) => LocalConfig::BulkCMinus,
            _ => LocalConfig::Invalid,
        }
    }

    pub fn corner(bottom: Spin, right: Spin) -> Self {
        use Spin::*;
        match (bottom, right) {
            (Up, Up) => LocalConfig::CornerUpRight,
            (Down, Down) => LocalConfig::CornerLeftDown,
            (Up, Down) => LocalConfig::CornerSink,
            (Down, Up) => LocalConfig::CornerSource,
        }
    }

    /// The TSASM entry this local configuration encodes.
    pub fn entry(self) -> i8 {
        match self {
            LocalConfig::BulkCPlus | LocalConfig::CornerLeftDown => 1,
            LocalConfig::BulkCMinus | LocalConfig::CornerUpRight => -1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SixVertexConfig {
    pub grid: TriangularGrid,
    pub alpha: Vec<Spin>,
    /// `(bottom, right)` spins per vertex, canonical order
    pub edges: Vec<(Spin, Spin)>,
}

impl SixVertexConfig {
    pub fn n(&self) -> usize {
        self.grid.n
    }

    pub fn bottom(&self, i: usize, j: usize) -> Spin {
        self.edges[self.grid.index(i, j)].0
    }

    pub fn right(&self, i: usize, j: usize) -> Spin {
        self.edges[self.grid.index(i, j)].1
    }

    pub fn local(&self, i: usize, j: usize) -> LocalConfig {
        let (bottom, right) = self.edges[self.grid.index(i, j)];
        if i == j {
            return LocalConfig::corner(bottom, right);
        }
        LocalConfig::bulk(self.right(i, j - 1), bottom, right, self.bottom(i + 1, j))
    }

    /// Compact vertex code `1..=4` for `(bottom, right)` =
    /// `(↑,→), (↓,←), (↑,←), (↓,→)`.
    pub fn code(&self, i: usize, j: usize) -> u8 {
        match self.edges[self.grid.index(i, j)] {
            (Spin::Up, Spin::Up) => 1,
            (Spin::Down, Spin::Down) => 2,
            (Spin::Up, Spin::Down) => 3,
            (Spin::Down, Spin::Up) => 4,
        }
    }

    /// Codes as an upper-triangular table, row `i` listing columns `i..=2n`.
    pub fn code_table(&self) -> Vec<Vec<u8>> {
        let m = self.grid.size();
        (1..=m)
            .map(|i| (i..=m).map(|j| self.code(i, j)).collect())
            .collect()
    }

    /// Checks the ice rule and both boundary conditions.
    pub fn is_valid(&self) -> bool {
        let m = self.grid.size();
        if self.alpha.len() != m || self.edges.len() != self.grid.vertex_count() {
            return false;
        }
        (1..=m).all(|j| self.bottom(1, j) == self.alpha[j - 1] && self.right(j, m) == Spin::Down)
            && self
                .grid
                .vertices()
                .into_iter()
                .all(|(i, j)| self.local(i, j) != LocalConfig::Invalid)
    }

    /// One line of 0/1 digits, two per vertex in canonical order (bottom edge,
    /// right edge), 1 for an arrow pointing up or right.
    pub fn to_line(&self) -> String {
        self.edges
            .iter()
            .flat_map(|(b, r)| [b, r])
            .map(|s| if *s == Spin::Up { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for SixVertexConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", word_to_string(&self.alpha), self.to_line())
    }
}

/// All configurations with bottom boundary word `alpha`.
///
/// Columns are filled left to right. Within a column the ice rule leaves at
/// most two choices per vertex; partial configurations whose column of right
/// spins holds more ↑ than columns remain are dropped, since each later column
/// can remove at most one ↑ and the right boundary is all ↓.
pub fn enumerate_configs(alpha: &[Spin]) -> Result<Vec<SixVertexConfig>> {
    if alpha.is_empty() || alpha.len() % 2 != 0 {
        return Err(usage("boundary word must have even, nonzero length 2n"));
    }
    let grid = TriangularGrid::new(alpha.len() / 2);
    let m = grid.size();
    let mut frontier: Vec<Vec<(Spin, Spin)>> = vec![Vec::new()];
    for j in 1..=m {
        frontier = frontier
            .par_iter()
            .flat_map_iter(|partial| extend_column(&grid, alpha, partial, j))
            .collect();
    }
    Ok(frontier
        .into_iter()
        .map(|edges| SixVertexConfig {
            grid,
            alpha: alpha.to_vec(),
            edges,
        })
        .collect())
}

fn extend_column(
    grid: &TriangularGrid,
    alpha: &[Spin],
    partial: &[(Spin, Spin)],
    j: usize,
) -> Vec<Vec<(Spin, Spin)>> {
    let m = grid.size();
    let last = j == m;
    // (edges so far, spin entering the next vertex from below)
    let mut states: Vec<(Vec<(Spin, Spin)>, Spin)> = vec![(partial.to_vec(), alpha[j - 1])];
    for i in 1..j {
        let mut next = Vec::with_capacity(states.len() * 2);
        for (edges, bottom) in states {
            let left = edges[grid.index(i, j - 1)].1;
            let options = if left == bottom {
                vec![left]
            } else {
                vec![Spin::Up, Spin::Down]
            };
            for right in options {
                if last && right == Spin::Up {
                    continue;
                }
                // ↑ count is conserved through bulk vertices
                let top = if left == bottom {
                    left
                } else if right == Spin::Up {
                    Spin::Down
                } else {
                    Spin::Up
                };
                let mut e = edges.clone();
                e.push((bottom, right));
                next.push((e, top));
            }
        }
        states = next;
    }
    let budget = m - j;
    let mut out = Vec::new();
    for (edges, bottom) in states {
        for right in [Spin::Up, Spin::Down] {
            if last && right == Spin::Up {
                continue;
            }
            let mut e = edges.clone();
            e.push((bottom, right));
            let ups = (1..=j).filter(|&i| e[grid.index(i, j)].1 == Spin::Up).count();
            if ups <= budget {
                out.push(e);
            }
        }
    }
    out
}

/// Local weights at a point: bulk `a_{ij}, b_{ij}, c`, corner `t` and `k_i`.
#[derive(Clone, Debug)]
pub struct VertexWeights<R> {
    pub n: usize,
    a: Vec<Vec<R>>,
    b: Vec<Vec<R>>,
    c: R,
    t: R,
    k: Vec<R>,
}

impl<R: Ring> VertexWeights<R> {
    pub fn weight(&self, local: LocalConfig, i: usize, j: usize) -> R {
        match local {
            LocalConfig::BulkA => self.a[i - 1][j - 1].clone(),
            LocalConfig::BulkB => self.b[i - 1][j - 1].clone(),
            LocalConfig::BulkCPlus | LocalConfig::BulkCMinus => self.c.clone(),
            LocalConfig::CornerUpRight | LocalConfig::CornerLeftDown => self.t.clone(),
            LocalConfig::CornerSink | LocalConfig::CornerSource => self.k[i - 1].clone(),
            LocalConfig::Invalid => R::zero(),
        }
    }
}

impl<F: Field> VertexWeights<F> {
    /// Weights at the inhomogeneities `z_1, …, z_{2n}`.
    pub fn at(p: &SvParams<F>, z: &[F]) -> Result<Self> {
        if z.is_empty() || z.len() % 2 != 0 {
            return Err(usage("need 2n inhomogeneities"));
        }
        let m = z.len();
        let zb: Vec<F> = z
            .iter()
            .map(|v| F::one().checked_div(v))
            .collect::<Result<_>>()?;
        let mut a = vec![vec![F::zero(); m]; m];
        let mut b = vec![vec![F::zero(); m]; m];
        for i in 0..m {
            for j in i + 1..m {
                a[i][j] = bracket(&p.q.mul_ref(&zb[i]).mul_ref(&zb[j]))?;
                b[i][j] = bracket(&p.q.mul_ref(&z[i]).mul_ref(&z[j]))?;
            }
        }
        let bs = brace(&p.s)?;
        let k = z
            .iter()
            .map(|v| brace(&p.s.mul_ref(v))?.checked_div(&bs))
            .collect::<Result<_>>()?;
        Ok(VertexWeights {
            n: m / 2,
            a,
            b,
            c: -bracket(&p.q.mul_ref(&p.q))?,
            t: p.t.clone(),
            k,
        })
    }
}

impl VertexWeights<IntPoly> {
    /// Homogeneous weights `z_i = 1` as Laurent polynomials in `t` and `q`.
    pub fn homogeneous_symbolic(n: usize) -> Self {
        let vars = ["t", "q"];
        let m = 2 * n;
        let bq = IntPoly::from_terms(&vars, [(vec![0, 1], 1.into()), (vec![0, -1], (-1).into())]);
        let c = IntPoly::from_terms(&vars, [(vec![0, 2], (-1).into()), (vec![0, -2], 1.into())]);
        VertexWeights {
            n,
            a: vec![vec![bq.clone(); m]; m],
            b: vec![vec![bq; m]; m],
            c,
            t: IntPoly::monomial(&vars, &[1, 0], 1.into()),
            k: vec![IntPoly::constant(&vars, 1.into()); m],
        }
    }
}

/// Product of the local weights over bulk and corner vertices.
pub fn config_weight<R: Ring>(c: &SixVertexConfig, w: &VertexWeights<R>) -> R {
    let mut acc = R::one();
    for (i, j) in c.grid.vertices() {
        let x = w.weight(c.local(i, j), i, j);
        if x.is_zero() {
            return R::zero();
        }
        acc = acc.mul_ref(&x);
    }
    acc
}

/// Sum of configuration weights over an explicit configuration list.
pub fn sum_weights<R: Ring>(configs: &[SixVertexConfig], w: &VertexWeights<R>) -> R {
    configs
        .par_iter()
        .map(|c| config_weight(c, w))
        .collect::<Vec<R>>()
        .into_iter()
        .fold(R::zero(), |a, b| a + b)
}

/// Partition function by enumeration at a point.
pub fn partition_enum<F: Field>(p: &SvParams<F>, alpha: &[Spin], z: &[F]) -> Result<F> {
    if z.len() != alpha.len() {
        return Err(usage("boundary word and inhomogeneities differ in length"));
    }
    let w = VertexWeights::at(p, z)?;
    Ok(sum_weights(&enumerate_configs(alpha)?, &w))
}

/// Homogeneous partition function as a Laurent polynomial in `t` and `q`.
pub fn partition_enum_homogeneous(alpha: &[Spin]) -> Result<IntPoly> {
    let configs = enumerate_configs(alpha)?;
    let w = VertexWeights::homogeneous_symbolic(alpha.len() / 2);
    Ok(sum_weights(&configs, &w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_configs(&alpha_plus(1)).unwrap().len(), 2);
        assert_eq!(enumerate_configs(&alpha_minus(1)).unwrap().len(), 1);
        assert_eq!(enumerate_configs(&alpha_minus(2)).unwrap().len(), 4);
        assert_eq!(enumerate_configs(&alpha_plus(2)).unwrap().len(), 13);
    }

    #[test]
    fn enumerated_configs_are_valid_and_distinct() {
        for alpha in [alpha_plus(2), alpha_minus(3)] {
            let cs = enumerate_configs(&alpha).unwrap();
            assert!(cs.iter().all(SixVertexConfig::is_valid));
            let set: std::collections::HashSet<_> = cs.iter().map(|c| c.to_line()).collect();
            assert_eq!(set.len(), cs.len());
        }
    }

    #[test]
    fn grid_indexing() {
        let g = TriangularGrid::new(2);
        for (k, (i, j)) in g.vertices().into_iter().enumerate() {
            assert_eq!(g.index(i, j), k);
        }
        assert_eq!(g.bulk_count(), 6);
        assert_eq!(g.vertex_count(), 10);
    }

    #[test]
    fn rejects_odd_words() {
        assert!(enumerate_configs(&[Spin::Up]).is_err());
        assert!(enumerate_configs(&[]).is_err());
    }
}
