//! Totally symmetric alternating sign matrices: validation, the triangular
//! fundamental domain, the bijection with six-vertex configurations, enumeration
//! and the generating function `A_TS(2N+1; t, τ)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{internal, usage, Result};
use crate::report::Report;
use crate::shape::ChainShape;
use crate::sixvertex::{alpha_minus, alpha_plus, enumerate_configs, SixVertexConfig, TriangularGrid};
use crate::spin::Spin;
use crate::{Integer, IntPoly};

pub const GENFUN_VARS: [&str; 2] = ["t", "tau"];

/// Alternating sign condition along one line: nonzero entries alternate, starting and ending with +1.
fn is_alternating(line: impl Iterator<Item = i8>) -> bool {
    let mut partial = 0i32;
    for x in line {
        partial += x as i32;
        if !(0..=1).contains(&partial) {
            return false;
        }
    }
    partial == 1
}

/// Whether a square matrix is an ASM.
pub fn is_asm(m: &[Vec<i8>]) -> Result<bool> {
    let k = m.len();
    if m.iter().any(|r| r.len() != k) {
        return Err(usage("matrix is not square"));
    }
    if m.iter().flatten().any(|x| !(-1..=1).contains(x)) {
        return Ok(false);
    }
    Ok((0..k).all(|i| is_alternating(m[i].iter().copied()))
        && (0..k).all(|j| is_alternating(m.iter().map(|r| r[j]))))
}

/// Whether a square matrix is a TSASM. Even orders never are.
pub fn is_tsasm(m: &[Vec<i8>]) -> Result<bool> {
    if !is_asm(m)? {
        return Ok(false);
    }
    let k = m.len();
    if k % 2 == 0 {
        return Ok(false);
    }
    Ok((0..k).all(|i| (0..k).all(|j| m[i][j] == m[i][k - 1 - j] && m[i][j] == m[j][i])))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TsasmMatrix {
    rows: Vec<Vec<i8>>,
}

impl TsasmMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        if !is_tsasm(&rows)? {
            return Err(usage("not a totally symmetric ASM"));
        }
        Ok(TsasmMatrix { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> ChainShape {
        ChainShape::new(self.order() / 2)
    }

    /// `A_{i,j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn triangle(&self) -> TriangularArray {
        TriangularArray::from_matrix(self)
    }

    /// Rows of space-separated entries.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for TsasmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses blank-line separated matrices in the text format.
pub fn parse_text(s: &str) -> Result<Vec<Vec<Vec<i8>>>> {
    let mut out = Vec::new();
    let mut cur: Vec<Vec<i8>> = Vec::new();
    for line in s.lines().map(str::trim) {
        if line.is_empty() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|x| x.parse::<i8>().map_err(|_| usage(format!("bad matrix entry {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        cur.push(row);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Blank-line separated text blocks.
pub fn to_text_blocks(ms: &[TsasmMatrix]) -> String {
    ms.iter().map(|m| m.to_text()).collect::<Vec<_>>().join("\n")
}

/// `A⋄`: `(−1)^{i+j+N}` inside the diamond `|i−j| ≤ N`, `|2(N+1)−i−j| ≤ N`.
pub fn diamond_tsasm(big_n: usize) -> TsasmMatrix {
    let k = 2 * big_n + 1;
    let n = big_n as i64;
    let rows = (1..=k as i64)
        .map(|i| {
            (1..=k as i64)
                .map(|j| {
                    if (i - j).abs() <= n && (2 * (n + 1) - i - j).abs() <= n {
                        if (i + j + n) % 2 == 0 { 1 } else { -1 }
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    TsasmMatrix { rows }
}

/// The entries `A_{i,j}`, `i = 1+ε..N`, `j = 2(N+1)−i..2N+1−ε`, of the upper right
/// quadrant on and below its antidiagonal. Row `k` (from the top) holds `k+1`
/// entries; its first entry lies on the diagonal of the array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TriangularArray {
    #[serde(skip)]
    pub shape: ChainShape,
    pub rows: Vec<Vec<i8>>,
}

impl TriangularArray {
    pub fn from_matrix(a: &TsasmMatrix) -> Self {
        let shape = a.shape();
        let big_n = shape.big_n;
        let rows = (1 + shape.eps..=big_n)
            .map(|i| (2 * (big_n + 1) - i..=2 * big_n + 1 - shape.eps).map(|j| a.get(i, j)).collect())
            .collect();
        TriangularArray { shape, rows }
    }

    pub fn new(shape: ChainShape, rows: Vec<Vec<i8>>) -> Result<Self> {
        let ok = rows.len() == 2 * shape.n && rows.iter().enumerate().all(|(k, r)| r.len() == k + 1);
        if !ok {
            return Err(usage("triangular array has the wrong shape"));
        }
        Ok(TriangularArray { shape, rows })
    }

    /// `A_{i,j}` for `(i, j)` in the array's index range.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        let big_n = self.shape.big_n;
        self.rows[i - 1 - self.shape.eps][j + i - 2 * (big_n + 1)]
    }

    /// Number of nonzero diagonal entries.
    pub fn mu(&self) -> usize {
        self.rows.iter().filter(|r| r[0] != 0).count()
    }

    /// Number of nonzero entries below the diagonal.
    pub fn nu(&self) -> usize {
        self.rows.iter().map(|r| r[1..].iter().filter(|&&x| x != 0).count()).sum()
    }

    /// Reconstructs the matrix from the symmetries and the frozen medians, then validates it.
    pub fn to_matrix(&self) -> Result<TsasmMatrix> {
        let big_n = self.shape.big_n;
        let k = 2 * big_n + 1;
        let c = big_n + 1;
        let eps = self.shape.eps;
        // upper right quadrant, rows 1..N and columns N+2..2N+1
        let quad = |i: usize, j: usize| -> i8 {
            let (i, j) = if i + j >= 2 * c { (i, j) } else { (2 * c - j, 2 * c - i) };
            if i < 1 + eps || j > k - eps {
                0
            } else {
                self.get(i, j)
            }
        };
        let rows: Vec<Vec<i8>> = (1..=k)
            .map(|i| {
                (1..=k)
                    .map(|j| {
                        if j == c {
                            if i % 2 == 1 { 1 } else { -1 }
                        } else if i == c {
                            if j % 2 == 1 { 1 } else { -1 }
                        } else {
                            quad(i.min(2 * c - i), j.max(2 * c - j))
                        }
                    })
                    .collect()
            })
            .collect();
        if !is_tsasm(&rows)? {
            return Err(internal(format!("triangular array {:?} does not give a TSASM", self.rows)));
        }
        Ok(TsasmMatrix { rows })
    }

    /// The boundary word for this array's six-vertex configurations: `α_−` for even `N`, `α_+` for odd `N`.
    pub fn alpha(&self) -> Vec<Spin> {
        boundary_word(&self.shape)
    }

    /// Entry attached to vertex `(r, c)`, i.e. `A_{N+1−r, c+N+1}`.
    pub fn at_vertex(&self, r: usize, c: usize) -> i8 {
        let big_n = self.shape.big_n;
        self.get(big_n + 1 - r, c + big_n + 1)
    }

    /// The inverse of [`triangle_from_sixvertex`].
    pub fn to_sixvertex(&self) -> Result<SixVertexConfig> {
        let n = self.shape.n;
        if n == 0 {
            return Err(usage("no six-vertex configuration for n = 0"));
        }
        let grid = TriangularGrid::new(n);
        let m = grid.size();
        let alpha = self.alpha();
        let mut bottoms = vec![vec![Spin::Down; m + 1]; m + 1];
        for c in 1..=m {
            let mut s = alpha[c - 1];
            for r in 1..=c {
                bottoms[r][c] = s;
                s = match (self.at_vertex(r, c), s) {
                    (1, Spin::Down) => Spin::Up,
                    (-1, Spin::Up) => Spin::Down,
                    (0, s) => s,
                    _ => return Err(usage("array entries do not alternate along a column")),
                };
            }
        }
        let mut edges = vec![(Spin::Down, Spin::Down); grid.vertex_count()];
        for r in 1..=m {
            let mut s = match self.at_vertex(r, r) {
                -1 => Spin::Up,
                1 => Spin::Down,
                _ => bottoms[r][r].flip(),
            };
            edges[grid.index(r, r)] = (bottoms[r][r], s);
            for c in r + 1..=m {
                s = match (self.at_vertex(r, c), s) {
                    (1, Spin::Up) => Spin::Down,
                    (-1, Spin::Down) => Spin::Up,
                    (0, s) => s,
                    _ => return Err(usage("array entries do not alternate along a row")),
                };
                edges[grid.index(r, c)] = (bottoms[r][c], s);
            }
        }
        let cfg = SixVertexConfig { grid, alpha, edges };
        if !cfg.is_valid() {
            return Err(usage("array does not encode a six-vertex configuration"));
        }
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.rows).expect("serializable")
    }
}

fn boundary_word(shape: &ChainShape) -> Vec<Spin> {
    if shape.is_odd() {
        alpha_plus(shape.n)
    } else {
        alpha_minus(shape.n)
    }
}

/// Reads the triangular array off a configuration in `6V^−_n` (order `4n+1`) or `6V^+_n` (order `4n+3`).
pub fn triangle_from_sixvertex(cfg: &SixVertexConfig) -> Result<TriangularArray> {
    let n = cfg.n();
    let big_n = if cfg.alpha == alpha_minus(n) {
        2 * n
    } else if cfg.alpha == alpha_plus(n) {
        2 * n + 1
    } else {
        return Err(usage("boundary word must be alternating"));
    };
    if !cfg.is_valid() {
        return Err(usage("invalid six-vertex configuration"));
    }
    let shape = ChainShape::new(big_n);
    let m = 2 * n;
    // array row k (from the top) is vertex row 2n − k
    let rows = (0..m)
        .map(|k| {
            let r = m - k;
            (r..=m).map(|c| cfg.local(r, c).entry()).collect()
        })
        .collect();
    Ok(TriangularArray { shape, rows })
}

pub fn from_sixvertex(cfg: &SixVertexConfig) -> Result<TsasmMatrix> {
    triangle_from_sixvertex(cfg)?.to_matrix()
}

/// All triangular arrays of order `2N+1`, in the order of the six-vertex enumeration.
pub fn enumerate_triangles(big_n: usize) -> Result<Vec<TriangularArray>> {
    let shape = ChainShape::new(big_n);
    if shape.n == 0 {
        return Ok(vec![TriangularArray { shape, rows: Vec::new() }]);
    }
    enumerate_configs(&boundary_word(&shape))?
        .par_iter()
        .map(triangle_from_sixvertex)
        .collect()
}

/// All TSASMs of order `2N+1`.
pub fn enumerate_tsasm(big_n: usize) -> Result<Vec<TsasmMatrix>> {
    enumerate_triangles(big_n)?.par_iter().map(|t| t.to_matrix()).collect()
}

/// `|TSASM(2N+1)|`.
pub fn count_tsasm(big_n: usize) -> Result<usize> {
    let shape = ChainShape::new(big_n);
    if shape.n == 0 {
        return Ok(1);
    }
    Ok(enumerate_configs(&boundary_word(&shape))?.len())
}

/// `(μ, ν)` for every TSASM of order `2N+1`, tallied.
pub fn statistics(big_n: usize) -> Result<BTreeMap<(usize, usize), usize>> {
    let stats: Vec<(usize, usize)> = enumerate_triangles(big_n)?.par_iter().map(|t| (t.mu(), t.nu())).collect();
    let mut out = BTreeMap::new();
    for s in stats {
        *out.entry(s).or_insert(0) += 1;
    }
    Ok(out)
}

/// `A_TS(2N+1; t, τ) = Σ t^μ τ^ν` in the variables `t`, `tau`.
pub fn genfun(big_n: usize) -> Result<IntPoly> {
    let terms = statistics(big_n)?
        .into_iter()
        .map(|((mu, nu), k)| (vec![mu as i32, nu as i32], Integer::from(k)));
    Ok(IntPoly::from_terms(&GENFUN_VARS, terms))
}

/// Structural properties of the enumeration for one `N`: validity, bounds on
/// `μ` and `ν`, the column bound, parity in `t`, maximal degrees attained by
/// `A⋄`, and vanishing at `t = 0` for orders `8k+5` and `8k+7`.
pub fn check_invariants(big_n: usize) -> Result<Vec<Report>> {
    let shape = ChainShape::new(big_n);
    let (n, np) = (shape.n, shape.n_prime);
    let k = shape.order();
    let tris = enumerate_triangles(big_n)?;
    let mats: Vec<TsasmMatrix> = tris.par_iter().map(|t| t.to_matrix()).collect::<Result<_>>()?;

    let mut valid = Report::new("tsasm_valid", Some(big_n));
    let mut bounds = Report::new("tsasm_degree_bounds", Some(big_n));
    let mut columns = Report::new("tsasm_column_bound", Some(big_n));
    for (t, a) in tris.iter().zip(&mats) {
        let pt = || format!("{:?}", t.rows);
        valid.check(pt, &is_tsasm(a.rows())?, &true);
        let (mu, nu) = (t.mu(), t.nu());
        let ok = mu <= n && (n - mu) % 2 == 0 && (n - mu) / 2 <= nu && nu <= n * np.saturating_sub(1);
        bounds.check(pt, &format!("mu={mu} nu={nu} ok={ok}"), &format!("mu={mu} nu={nu} ok=true"));
        for j in 1..=k {
            let nz = (1..=k).filter(|&i| a.get(i, j) != 0).count();
            let cap = 2 * j.min(k + 1 - j) - 1;
            columns.check(|| format!("{} column {j}", pt()), &(nz <= cap), &true);
        }
    }

    let g = genfun(big_n)?;
    let mut parity = Report::new("tsasm_parity", Some(big_n));
    let neg = g.compose("t", &-IntPoly::var("t").with_vars(&g.vars().to_vec())?)?;
    let sign = if n % 2 == 0 { Integer::from(1) } else { Integer::from(-1) };
    parity.check(|| format!("N={big_n}"), &neg, &g.scale(&sign));

    let mut maxdeg = Report::new("tsasm_max_degree", Some(big_n));
    let d = diamond_tsasm(big_n).triangle();
    let (dt, dtau) = (g.max_degree("t")?.unwrap_or(0), g.max_degree("tau")?.unwrap_or(0));
    let top = n * np.saturating_sub(1);
    maxdeg.check(|| format!("N={big_n}"), &format!("({dt}, {dtau})"), &format!("({n}, {top})"));
    maxdeg.check(|| format!("N={big_n} diamond"), &format!("({}, {})", d.mu(), d.nu()), &format!("({n}, {top})"));

    let mut out = vec![valid, bounds, columns, parity, maxdeg];
    if k % 8 == 5 || k % 8 == 7 {
        let mut zero = Report::new("tsasm_t_zero_vanishes", Some(big_n));
        let at0 = g.substitute("t", &Integer::from(0))?;
        zero.check(|| format!("N={big_n}"), &at0.is_empty(), &true);
        out.push(zero);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_tsasm(0).unwrap()[0].rows(), &[vec![1]]);
        assert_eq!(
            enumerate_tsasm(1).unwrap()[0].rows(),
            &[vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]
        );
    }

    #[test]
    fn even_orders_and_non_square() {
        assert!(!is_tsasm(&[vec![1, 0], vec![0, 1]]).unwrap());
        assert!(is_tsasm(&[vec![1, 0], vec![0]]).is_err());
        assert!(is_tsasm(&[vec![1]]).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let a = diamond_tsasm(3);
        let back = parse_text(&to_text_blocks(&[a.clone(), a.clone()])).unwrap();
        assert_eq!(back, vec![a.rows().to_vec(), a.rows().to_vec()]);
    }
}
