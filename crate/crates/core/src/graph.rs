//! Simple graphs on the vertex set `{1, ..., d}` with no isolated vertices,
//! plus the structural predicates the polytope and counting modules consume:
//! bipartiteness with witnesses, connected components, induced subgraphs, and
//! shortest odd cycles.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple graph on vertices `1..=d` in which every vertex is
/// covered by at least one edge.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    d: usize,
    /// Edges `(i, j)` with `i < j`, sorted lexicographically, deduplicated.
    edges: Vec<(usize, usize)>,
    /// `adj[v - 1]` = sorted neighbors of `v`.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from 1-indexed endpoint pairs, normalizing edge
    /// orientation and dropping duplicates.
    pub fn new(d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if d < 2 {
            return Err(Error::domain(format!(
                "a graph without isolated vertices needs at least 2 vertices, got d = {d}"
            )));
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == j {
                return Err(Error::domain(format!("loop at vertex {i} is not allowed")));
            }
            if i < 1 || i > d || j < 1 || j > d {
                return Err(Error::domain(format!(
                    "edge ({i}, {j}) has an endpoint outside 1..={d}"
                )));
            }
            set.insert((i.min(j), i.max(j)));
        }
        let mut adj = vec![Vec::new(); d];
        for &(i, j) in &set {
            adj[i - 1].push(j);
            adj[j - 1].push(i);
        }
        for v in 1..=d {
            if adj[v - 1].is_empty() {
                return Err(Error::domain(format!("vertex {v} is isolated")));
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            d,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    /// Parses the text graph format: a header line `d m` followed by `m`
    /// lines `i j`. Blank lines and leading/trailing whitespace are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::parse("empty graph file"))?;
        let mut toks = header.split_whitespace();
        let d: usize = toks
            .next()
            .ok_or_else(|| Error::parse("missing vertex count in header"))?
            .parse()
            .map_err(|_| Error::parse(format!("bad vertex count in header {header:?}")))?;
        let m: usize = toks
            .next()
            .ok_or_else(|| Error::parse(format!("missing edge count in header {header:?}")))?
            .parse()
            .map_err(|_| Error::parse(format!("bad edge count in header {header:?}")))?;
        if toks.next().is_some() {
            return Err(Error::parse(format!("trailing tokens in header {header:?}")));
        }
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(format!("expected {m} edge lines, found {k}")))?;
            let mut toks = line.split_whitespace();
            let parse_endpoint = |tok: Option<&str>| -> Result<usize> {
                tok.ok_or_else(|| Error::parse(format!("edge line {line:?} needs two endpoints")))?
                    .parse()
                    .map_err(|_| Error::parse(format!("bad vertex index on line {line:?}")))
            };
            let i = parse_endpoint(toks.next())?;
            let j = parse_endpoint(toks.next())?;
            if toks.next().is_some() {
                return Err(Error::parse(format!("trailing tokens on edge line {line:?}")));
            }
            edges.push((i, j));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::parse(format!(
                "unexpected content after {m} edges: {extra:?}"
            )));
        }
        Graph::new(d, edges)
    }

    /// Builds a named family; see [`Family`] for the accepted specs.
    pub fn family(spec: &str) -> Result<Self> {
        Family::parse(spec)?.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.d && self.adj[i - 1].binary_search(&j).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartite_witness(), BipartiteWitness::Coloring(_))
    }

    /// Either a proper 2-coloring or an odd cycle, per BFS layering.
    ///
    /// The negative witness is always a shortest odd cycle, so its length is
    /// odd and every consecutive pair (cyclically) is an edge.
    pub fn bipartite_witness(&self) -> BipartiteWitness {
        match self.shortest_odd_cycle() {
            Some(cycle) => BipartiteWitness::OddCycle(cycle),
            None => BipartiteWitness::Coloring(self.two_coloring()),
        }
    }

    fn two_coloring(&self) -> Vec<bool> {
        let mut color = vec![false; self.d];
        let mut seen = vec![false; self.d];
        for start in 1..=self.d {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        color[w - 1] = !color[v - 1];
                        queue.push_back(w);
                    }
                }
            }
        }
        color
    }

    /// A shortest odd cycle as a vertex sequence `c_1, ..., c_{2k+1}` (the
    /// closing edge `{c_1, c_{2k+1}}` is implicit), or `None` when bipartite.
    ///
    /// BFS from every start vertex; an edge joining two vertices at equal
    /// depth closes an odd walk of length `2*depth + 1`, and the globally
    /// shortest such walk is a simple cycle.
    pub fn shortest_odd_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; self.d];
        let mut parent = vec![0usize; self.d];
        for start in 1..=self.d {
            dist.fill(usize::MAX);
            dist[start - 1] = 0;
            parent[start - 1] = start;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if dist[w - 1] == usize::MAX {
                        dist[w - 1] = dist[v - 1] + 1;
                        parent[w - 1] = v;
                        queue.push_back(w);
                    }
                }
            }
            for &(u, v) in &self.edges {
                if dist[u - 1] == usize::MAX || dist[u - 1] != dist[v - 1] {
                    continue;
                }
                let len = 2 * dist[u - 1] + 1;
                if best.as_ref().is_some_and(|b| b.len() <= len) {
                    continue;
                }
                // walk s..u, then v..s (excluding s)
                let path_to = |mut x: usize| {
                    let mut path = vec![x];
                    while x != start {
                        x = parent[x - 1];
                        path.push(x);
                    }
                    path.reverse();
                    path
                };
                let mut cycle = path_to(u);
                let mut back = path_to(v);
                back.reverse();
                back.pop(); // drop start
                cycle.extend(back);
                let distinct: BTreeSet<_> = cycle.iter().collect();
                if distinct.len() == cycle.len() {
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// Partition of `1..=d` into connected components, each sorted, ordered
    /// by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.d];
        let mut components = Vec::new();
        for start in 1..=self.d {
            if seen[start - 1] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start - 1] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Subgraph induced by `s`; isolated vertices are permitted in the
    /// result, which is why it is not a [`Graph`].
    pub fn induced_subgraph(&self, s: &BTreeSet<usize>) -> InducedSubgraph {
        let vertices: Vec<usize> = s.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|(i, j)| s.contains(i) && s.contains(j))
            .collect();
        InducedSubgraph { vertices, edges }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.d, self.edges.len())?;
        for (i, j) in &self.edges {
            write!(f, "\n{i} {j}")?;
        }
        Ok(())
    }
}

/// Result of the bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteWitness {
    /// `color[v - 1]` is a proper 2-coloring.
    Coloring(Vec<bool>),
    /// Vertex sequence of an odd cycle (closing edge implicit).
    OddCycle(Vec<usize>),
}

/// A vertex subset together with the edges it induces. Unlike [`Graph`],
/// isolated vertices are allowed; vertices keep their ambient labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl InducedSubgraph {
    /// Connected components (each sorted, ordered by smallest vertex);
    /// isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let index: std::collections::BTreeMap<usize, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, k))
            .collect();
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &self.edges {
            let (a, b) = (index[&i], index[&j]);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(self.vertices[v]);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// True when every connected component contains an odd cycle, i.e. no
    /// component admits a proper 2-coloring. Vacuously true when empty.
    pub fn all_components_nonbipartite(&self) -> bool {
        let index: std::collections::BTreeMap<usize, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, k))
            .collect();
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &self.edges {
            let (a, b) = (index[&i], index[&j]);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            let mut odd_edge = false;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        odd_edge = true;
                    }
                }
            }
            if !odd_edge {
                return false;
            }
        }
        true
    }
}

/// Named graph families accepted on the command line: `complete:d`,
/// `cycle:d`, `path:d`, `complete_bipartite:m,n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, params) = spec
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("family spec {spec:?} must look like name:params")))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad family parameter {p:?} in {spec:?}")))
            })
            .collect::<Result<_>>()?;
        let arity = |want: usize| -> Result<()> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(Error::parse(format!(
                    "family {name:?} takes {want} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        match name {
            "complete" => {
                arity(1)?;
                Ok(Family::Complete(nums[0]))
            }
            "cycle" => {
                arity(1)?;
                Ok(Family::Cycle(nums[0]))
            }
            "path" => {
                arity(1)?;
                Ok(Family::Path(nums[0]))
            }
            "complete_bipartite" => {
                arity(2)?;
                Ok(Family::CompleteBipartite(nums[0], nums[1]))
            }
            _ => Err(Error::parse(format!("unknown family {name:?}"))),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(d) => {
                if d < 2 {
                    return Err(Error::domain(format!("complete:{d} has fewer than 2 vertices")));
                }
                Graph::new(d, (1..=d).flat_map(|i| (i + 1..=d).map(move |j| (i, j))))
            }
            Family::Cycle(d) => {
                if d < 3 {
                    return Err(Error::domain(format!("cycle:{d} is not a simple cycle")));
                }
                Graph::new(d, (1..d).map(|i| (i, i + 1)).chain([(d, 1)]))
            }
            Family::Path(d) => {
                if d < 2 {
                    return Err(Error::domain(format!("path:{d} leaves vertex 1 isolated")));
                }
                Graph::new(d, (1..d).map(|i| (i, i + 1)))
            }
            Family::CompleteBipartite(m, n) => {
                if m < 1 || n < 1 {
                    return Err(Error::domain(format!(
                        "complete_bipartite:{m},{n} has an empty side"
                    )));
                }
                Graph::new(m + n, (1..=m).flat_map(|i| (m + 1..=m + n).map(move |j| (i, j))))
            }
        }
    }
}
