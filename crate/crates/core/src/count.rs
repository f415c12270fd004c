//! Exact lattice-point counting for dilates of the stable-family polytopes,
//! by two independent engines: a memoized pruned depth-first search over
//! coordinate assignments (any graph) and transfer-matrix products (path and
//! cycle graphs only). Agreement of the two is a standing cross-check.

use std::collections::HashMap;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Which member of the polytope family to dilate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Frac,
    P,
    Q,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "frac" => Ok(Kind::Frac),
            "p" => Ok(Kind::P),
            "q" => Ok(Kind::Q),
            _ => Err(Error::parse(format!("unknown polytope kind {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Frac => "frac",
            Kind::P => "p",
            Kind::Q => "q",
        }
    }

    /// The `n`-th dilate of each kind, after translating the `Q` system by
    /// `+n` per coordinate, is `{0 <= x_i, x_i + x_j <= s}` with this `s`.
    fn pair_bound(self, n: u64) -> u64 {
        match self {
            Kind::Frac => n,
            Kind::P => 2 * n,
            Kind::Q => 3 * n,
        }
    }
}

/// A counting problem: `|n * polytope(kind, graph) ∩ Z^d|`.
#[derive(Debug, Clone, Copy)]
pub struct CountRequest<'a> {
    pub kind: Kind,
    pub graph: &'a Graph,
    pub n: u64,
}

impl CountRequest<'_> {
    fn pair_bound(&self) -> i64 {
        self.kind.pair_bound(self.n) as i64
    }
}

/// Counts by depth-first assignment of coordinates in a fixed order
/// (descending degree, ties by vertex index), tightening the upper bound of
/// every unassigned neighbor and pruning when a domain empties.
///
/// Two refinements keep the search polynomial on sparse graphs: once the
/// unassigned remainder has no internal edges the branch closes as a product
/// of interval sizes (a single adjacent pair closes by a triangular-sum
/// formula), and subtree counts are memoized on the bound profile of the
/// remainder, which depends only on the depth and the bounds themselves.
pub fn count_dfs(req: &CountRequest, limits: &Limits) -> Result<BigInt> {
    let d = req.graph.vertex_count();
    let s = req.pair_bound();
    let width = ((s + 1) as f64).powi(d as i32);
    if width > limits.max_search_width {
        return Err(Error::resource(format!(
            "search width ({} + 1)^{d} exceeds {:.1e}",
            s, limits.max_search_width
        )));
    }

    // order positions 0..d hold vertex indices sorted by (degree desc, index asc)
    let mut order: Vec<usize> = (1..=d).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(req.graph.degree(v)), v));
    let mut pos_of = vec![0usize; d + 1];
    for (k, &v) in order.iter().enumerate() {
        pos_of[v] = k;
    }
    // neighbor positions per order position
    let nbr_pos: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| req.graph.neighbors(v).iter().map(|&w| pos_of[w]).collect())
        .collect();
    // suffix_edges[k] = #edges with both endpoints at positions >= k
    let mut suffix_edges = vec![0usize; d + 1];
    for &(i, j) in req.graph.edges() {
        suffix_edges[pos_of[i].min(pos_of[j])] += 1;
    }
    for k in (0..d).rev() {
        suffix_edges[k] += suffix_edges[k + 1];
    }

    let mut search = Dfs {
        d,
        s,
        nbr_pos,
        suffix_edges,
        ub: vec![s; d],
        memo: HashMap::new(),
    };
    Ok(search.count(0))
}

struct Dfs {
    d: usize,
    s: i64,
    nbr_pos: Vec<Vec<usize>>,
    suffix_edges: Vec<usize>,
    ub: Vec<i64>,
    memo: HashMap<(usize, Vec<i64>), BigInt>,
}

impl Dfs {
    fn count(&mut self, k: usize) -> BigInt {
        if k == self.d {
            return BigInt::one();
        }
        if self.suffix_edges[k] == 0 {
            let mut prod = BigInt::one();
            for p in k..self.d {
                prod *= BigInt::from(self.ub[p] + 1);
            }
            return prod;
        }
        if self.d - k == 2 {
            // the remainder is a single adjacent pair
            return BigInt::from(pair_count(self.ub[self.d - 2], self.ub[self.d - 1], self.s));
        }
        let key = (k, self.ub[k..].to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let my_ub = self.ub[k];
        let mut saved: Vec<(usize, i64)> = Vec::new();
        for val in 0..=my_ub {
            saved.clear();
            let mut empty = false;
            for idx in 0..self.nbr_pos[k].len() {
                let p = self.nbr_pos[k][idx];
                if p <= k {
                    continue;
                }
                let cap = self.s - val;
                if cap < self.ub[p] {
                    saved.push((p, self.ub[p]));
                    self.ub[p] = cap;
                    if cap < 0 {
                        empty = true;
                    }
                }
            }
            if !empty {
                total += self.count(k + 1);
            }
            for &(p, old) in &saved {
                self.ub[p] = old;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Assignments of an adjacent pair: `#{(v, w) : 0 <= v <= u1, 0 <= w <= u2,
/// v + w <= s}` in closed form.
fn pair_count(u1: i64, u2: i64, s: i64) -> i128 {
    debug_assert!(u1 >= 0 && u2 >= 0 && u1 <= s && u2 <= s);
    let (u1, u2, s) = (u1 as i128, u2 as i128, s as i128);
    let t = s - u2; // for v <= t the second interval is full
    if u1 <= t {
        (u1 + 1) * (u2 + 1)
    } else {
        let lo = s - u1 + 1;
        let hi = u2;
        (t + 1) * (u2 + 1) + (lo + hi) * (hi - lo + 1) / 2
    }
}

/// Consecutive-edge structure required by the transfer engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainShape {
    Path,
    Cycle,
}

/// Recognizes graphs whose edge set is exactly `{i, i+1}` (path) or that
/// plus `{1, d}` (cycle).
pub fn chain_shape(g: &Graph) -> Option<ChainShape> {
    let d = g.vertex_count();
    let mut path: Vec<(usize, usize)> = (1..d).map(|i| (i, i + 1)).collect();
    path.sort_unstable();
    if g.edges() == path.as_slice() {
        return Some(ChainShape::Path);
    }
    let mut cycle = path;
    cycle.push((1, d));
    cycle.sort_unstable();
    if g.edges() == cycle.as_slice() {
        return Some(ChainShape::Cycle);
    }
    None
}

/// Counts by transfer-matrix products over the per-coordinate state space
/// `0..=s`: `T[p][q] = 1` iff `p + q <= s`; a path is the all-ones quadratic
/// form with `T^(d-1)`, a cycle is `trace(T^d)`.
pub fn count_transfer(req: &CountRequest, limits: &Limits) -> Result<BigInt> {
    let shape = chain_shape(req.graph).ok_or_else(|| {
        Error::domain("transfer engine requires a path:d or cycle:d edge structure".to_string())
    })?;
    let d = req.graph.vertex_count();
    let s = req.pair_bound() as usize;
    let states = s + 1;
    if (states as f64) * (states as f64) * d as f64 > limits.max_search_width {
        return Err(Error::resource(format!(
            "transfer matrix with {states} states is beyond the configured width"
        )));
    }
    let t: Vec<Vec<BigInt>> = (0..states)
        .map(|p| {
            (0..states)
                .map(|q| {
                    if p + q <= s {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    match shape {
        ChainShape::Path => {
            let mut v = vec![BigInt::one(); states];
            for _ in 0..d - 1 {
                v = mat_vec(&t, &v);
            }
            Ok(v.iter().sum())
        }
        ChainShape::Cycle => {
            let mut m = t.clone();
            for _ in 1..d {
                m = mat_mul(&m, &t);
            }
            Ok((0..states).map(|i| m[i][i].clone()).sum())
        }
    }
}

fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Transfer engine when the structure allows it, depth-first search
/// otherwise.
pub fn count_auto(req: &CountRequest, limits: &Limits) -> Result<BigInt> {
    if chain_shape(req.graph).is_some() {
        count_transfer(req, limits)
    } else {
        count_dfs(req, limits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn req<'a>(kind: Kind, g: &'a Graph, n: u64) -> CountRequest<'a> {
        CountRequest { kind, graph: g, n }
    }

    /// Plain nested enumeration with no pruning or shortcuts, usable for
    /// small `d` and `s` only.
    fn brute_force(g: &Graph, kind: Kind, n: u64) -> BigInt {
        let d = g.vertex_count();
        let s = kind.pair_bound(n) as i64;
        let mut count = 0i64;
        let mut x = vec![0i64; d];
        loop {
            if g.edges().iter().all(|&(i, j)| x[i - 1] + x[j - 1] <= s) {
                count += 1;
            }
            let mut k = d;
            loop {
                if k == 0 {
                    return BigInt::from(count);
                }
                k -= 1;
                if x[k] < s {
                    x[k] += 1;
                    break;
                }
                x[k] = 0;
            }
        }
    }

    #[test]
    fn simplex_counts_k2() {
        let k2 = Graph::family("complete:2").unwrap();
        for n in 0..6u64 {
            let expect = big(((n + 1) * (n + 2) / 2) as i64);
            assert_eq!(count_dfs(&req(Kind::Frac, &k2, n), &limits()).unwrap(), expect);
            assert_eq!(
                count_transfer(&req(Kind::Frac, &k2, n), &limits()).unwrap(),
                expect
            );
        }
    }

    #[test]
    fn stable_sets_of_c3() {
        let c3 = Graph::family("cycle:3").unwrap();
        assert_eq!(count_dfs(&req(Kind::Frac, &c3, 1), &limits()).unwrap(), big(4));
        assert_eq!(
            count_transfer(&req(Kind::Frac, &c3, 1), &limits()).unwrap(),
            big(4)
        );
    }

    #[test]
    fn doubled_c3_examples() {
        let c3 = Graph::family("cycle:3").unwrap();
        assert_eq!(count_dfs(&req(Kind::P, &c3, 1), &limits()).unwrap(), big(11));
        assert_eq!(
            count_transfer(&req(Kind::P, &c3, 1), &limits()).unwrap(),
            big(11)
        );
        assert_eq!(count_dfs(&req(Kind::P, &c3, 2), &limits()).unwrap(), big(42));
    }

    #[test]
    fn path2_dilation_5() {
        let p2 = Graph::family("path:2").unwrap();
        assert_eq!(
            count_transfer(&req(Kind::Frac, &p2, 5), &limits()).unwrap(),
            big(21)
        );
    }

    #[test]
    fn engines_match_brute_force() {
        for spec in ["path:3", "cycle:4", "cycle:5", "path:4"] {
            let g = Graph::family(spec).unwrap();
            for kind in [Kind::Frac, Kind::P, Kind::Q] {
                for n in 0..=2u64 {
                    let expect = brute_force(&g, kind, n);
                    let r = req(kind, &g, n);
                    assert_eq!(count_dfs(&r, &limits()).unwrap(), expect, "{spec} dfs");
                    assert_eq!(
                        count_transfer(&r, &limits()).unwrap(),
                        expect,
                        "{spec} transfer"
                    );
                }
            }
        }
    }

    #[test]
    fn dfs_matches_brute_force_on_dense_graphs() {
        for spec in ["complete:4", "complete_bipartite:2,3", "complete:3"] {
            let g = Graph::family(spec).unwrap();
            for kind in [Kind::Frac, Kind::P, Kind::Q] {
                for n in 0..=2u64 {
                    let r = req(kind, &g, n);
                    assert_eq!(
                        count_dfs(&r, &limits()).unwrap(),
                        brute_force(&g, kind, n),
                        "{spec} {kind:?} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn transfer_rejects_non_chain() {
        let k4 = Graph::family("complete:4").unwrap();
        assert!(count_transfer(&req(Kind::Frac, &k4, 1), &limits()).is_err());
    }

    #[test]
    fn chain_shapes() {
        assert_eq!(
            chain_shape(&Graph::family("path:5").unwrap()),
            Some(ChainShape::Path)
        );
        assert_eq!(
            chain_shape(&Graph::family("cycle:3").unwrap()),
            Some(ChainShape::Cycle)
        );
        assert_eq!(chain_shape(&Graph::family("complete:4").unwrap()), None);
        assert_eq!(
            chain_shape(&Graph::family("complete_bipartite:2,2").unwrap()),
            None
        );
    }

    #[test]
    fn counts_monotone_in_dilation() {
        let g = Graph::family("cycle:5").unwrap();
        for kind in [Kind::Frac, Kind::P, Kind::Q] {
            let mut prev = BigInt::zero();
            for n in 0..6u64 {
                let c = count_dfs(&req(kind, &g, n), &limits()).unwrap();
                assert!(c >= prev);
                prev = c;
            }
        }
    }

    #[test]
    fn width_guard_triggers() {
        let g = Graph::family("cycle:5").unwrap();
        let tight = Limits {
            max_search_width: 10.0,
            ..Limits::default()
        };
        assert!(matches!(
            count_dfs(&req(Kind::Q, &g, 5), &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn pair_count_closed_form() {
        for s in 0..8i64 {
            for u1 in 0..=s {
                for u2 in 0..=s {
                    let mut expect = 0i128;
                    for v in 0..=u1 {
                        for w in 0..=u2 {
                            if v + w <= s {
                                expect += 1;
                            }
                        }
                    }
                    assert_eq!(pair_count(u1, u2, s), expect, "u1={u1} u2={u2} s={s}");
                }
            }
        }
    }
}
