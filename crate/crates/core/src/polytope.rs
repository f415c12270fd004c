//! Half-space representations of the fractional stable set polytope and its
//! dilates, vertex enumeration through the odd-cycle component criterion,
//! dual vertex sets, and interior lattice points.
//!
//! Points with half-integer coordinates are stored doubled, so every value in
//! this module is an exact integer.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// System of integer inequalities `a . x <= b` in dimension `dim`. All stored
/// systems are bounded by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    rows: Vec<(Vec<i64>, i64)>,
}

impl HPolytope {
    /// `x_i >= 0` for all `i`, `x_i + x_j <= 1` on every edge. These rows are
    /// exactly the facets.
    pub fn frac(g: &Graph) -> Self {
        Self::stable_family(g, 0, 1)
    }

    /// The doubled polytope: `x_i >= 0`, `x_i + x_j <= 2`.
    pub fn p(g: &Graph) -> Self {
        Self::stable_family(g, 0, 2)
    }

    /// The translated triple: `x_i >= -1`, `x_i + x_j <= 1`.
    pub fn q(g: &Graph) -> Self {
        Self::stable_family(g, 1, 1)
    }

    /// Rows `-x_i <= lower` and `x_i + x_j <= pair` for every edge.
    fn stable_family(g: &Graph, lower: i64, pair: i64) -> Self {
        let d = g.vertex_count();
        let mut rows = Vec::with_capacity(d + g.edge_count());
        for i in 0..d {
            let mut a = vec![0; d];
            a[i] = -1;
            rows.push((a, lower));
        }
        for &(i, j) in g.edges() {
            let mut a = vec![0; d];
            a[i - 1] = 1;
            a[j - 1] = 1;
            rows.push((a, pair));
        }
        HPolytope { dim: d, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[(Vec<i64>, i64)] {
        &self.rows
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.rows
            .iter()
            .all(|(a, b)| dot(a, x) <= *b)
    }

    pub fn contains_strict(&self, x: &[i64]) -> bool {
        self.rows
            .iter()
            .all(|(a, b)| dot(a, x) < *b)
    }

    /// Integer bounding box derived from the rows alone, by interval
    /// propagation to a fixpoint: a row `a . x <= b` caps `a_k x_k` by `b`
    /// minus the least the other terms can contribute. Errors if some
    /// coordinate never acquires both bounds.
    pub fn bounding_box(&self) -> Result<Vec<(i64, i64)>> {
        let mut lo: Vec<Option<i64>> = vec![None; self.dim];
        let mut hi: Vec<Option<i64>> = vec![None; self.dim];
        for _ in 0..=self.dim + 1 {
            let mut changed = false;
            for (a, b) in &self.rows {
                for k in 0..self.dim {
                    if a[k] == 0 {
                        continue;
                    }
                    let mut rest = 0i64;
                    let mut known = true;
                    for l in 0..self.dim {
                        if l == k || a[l] == 0 {
                            continue;
                        }
                        let bound = if a[l] > 0 { lo[l] } else { hi[l] };
                        match bound {
                            Some(v) => rest += a[l] * v,
                            None => {
                                known = false;
                                break;
                            }
                        }
                    }
                    if !known {
                        continue;
                    }
                    let rhs = b - rest;
                    if a[k] > 0 {
                        let cap = rhs.div_euclid(a[k]);
                        if hi[k].is_none_or(|h| cap < h) {
                            hi[k] = Some(cap);
                            changed = true;
                        }
                    } else {
                        let cap = -(rhs.div_euclid(-a[k]));
                        if lo[k].is_none_or(|l| cap > l) {
                            lo[k] = Some(cap);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..self.dim)
            .map(|k| match (lo[k], hi[k]) {
                (Some(l), Some(h)) => Ok((l, h)),
                _ => Err(Error::domain(format!(
                    "coordinate {} is not boxed by the rows",
                    k + 1
                ))),
            })
            .collect()
    }
}

fn dot(a: &[i64], x: &[i64]) -> i64 {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

/// A point of `(1/2)Z^d`, stored as the doubled integer vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfIntPoint {
    doubled: Vec<i64>,
}

impl HalfIntPoint {
    pub fn new(doubled: Vec<i64>) -> Self {
        HalfIntPoint { doubled }
    }

    pub fn dim(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|c| c % 2 == 0)
    }

    /// The affine image `v -> 3v - (1, ..., 1)`, exact in doubled
    /// coordinates.
    pub fn q_image(&self) -> HalfIntPoint {
        HalfIntPoint::new(self.doubled.iter().map(|c| 3 * c - 2).collect())
    }

    /// Coordinates as exact strings: `"0"`, `"1/2"`, `"-1"`, ...
    pub fn coordinate_strings(&self) -> Vec<String> {
        self.doubled
            .iter()
            .map(|&c| {
                if c % 2 == 0 {
                    (c / 2).to_string()
                } else {
                    format!("{c}/2")
                }
            })
            .collect()
    }
}

/// All vertices of the fractional stable set polytope, sorted by doubled
/// coordinates.
///
/// Enumerates `{0, 1/2, 1}^d` labelings depth-first, pruning any branch with
/// an edge summing past 1 (two 1s, or a 1 with a 1/2). A surviving feasible
/// point is a vertex iff its half-coordinate support induces a subgraph whose
/// components all contain odd cycles; the all-integer points are exactly the
/// stable-set indicators and always vertices.
pub fn frac_vertices(g: &Graph, limits: &Limits) -> Result<Vec<HalfIntPoint>> {
    let d = g.vertex_count();
    if d > limits.max_vertex_enum_dim {
        return Err(Error::resource(format!(
            "vertex enumeration needs 3^{d} labelings; limit is d <= {}",
            limits.max_vertex_enum_dim
        )));
    }
    let mut out = Vec::new();
    let mut doubled = vec![0i64; d];
    enumerate_labelings(g, 0, &mut doubled, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn enumerate_labelings(g: &Graph, v: usize, doubled: &mut Vec<i64>, out: &mut Vec<HalfIntPoint>) {
    let d = g.vertex_count();
    if v == d {
        let support: BTreeSet<usize> = (1..=d).filter(|&i| doubled[i - 1] == 1).collect();
        let is_vertex = support.is_empty()
            || g.induced_subgraph(&support).all_components_nonbipartite();
        if is_vertex {
            out.push(HalfIntPoint::new(doubled.clone()));
        }
        return;
    }
    'values: for val in [0i64, 1, 2] {
        for &w in g.neighbors(v + 1) {
            if w <= v && doubled[w - 1] + val > 2 {
                continue 'values;
            }
        }
        doubled[v] = val;
        enumerate_labelings(g, v + 1, doubled, out);
    }
    doubled[v] = 0;
}

/// Vertices of the translated triple polytope: the image of
/// [`frac_vertices`] under `v -> 3v - 1`.
pub fn q_vertices(g: &Graph, limits: &Limits) -> Result<Vec<HalfIntPoint>> {
    let mut vs: Vec<HalfIntPoint> = frac_vertices(g, limits)?
        .iter()
        .map(HalfIntPoint::q_image)
        .collect();
    vs.sort_unstable();
    Ok(vs)
}

/// True iff every point is a lattice point.
pub fn is_lattice_polytope(vs: &[HalfIntPoint]) -> bool {
    vs.iter().all(HalfIntPoint::is_integral)
}

/// Vertex set of the dual of the triple polytope: one vector `e_i + e_j` per
/// edge (lexicographic), then `-e_i` by index. Cardinality `|E| + d`.
pub fn q_dual_vertices(g: &Graph) -> Vec<Vec<i64>> {
    let d = g.vertex_count();
    let mut out = Vec::with_capacity(g.edge_count() + d);
    for &(i, j) in g.edges() {
        let mut v = vec![0; d];
        v[i - 1] = 1;
        v[j - 1] = 1;
        out.push(v);
    }
    for i in 0..d {
        let mut v = vec![0; d];
        v[i] = -1;
        out.push(v);
    }
    out
}

/// Integer points strictly inside the polytope, enumerated over the derived
/// bounding box, in lexicographic order.
pub fn interior_lattice_points(p: &HPolytope) -> Result<Vec<Vec<i64>>> {
    let boxes = p.bounding_box()?;
    let mut out = Vec::new();
    let mut x: Vec<i64> = boxes.iter().map(|&(l, _)| l).collect();
    if x.is_empty() {
        return Ok(out);
    }
    loop {
        if p.contains_strict(&x) {
            out.push(x.clone());
        }
        // odometer step
        let mut k = p.dim();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if x[k] < boxes[k].1 {
                x[k] += 1;
                break;
            }
            x[k] = boxes[k].0;
        }
    }
}
