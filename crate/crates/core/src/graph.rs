//! Simple connected undirected graphs, the four named families, and BFS
//! all-pairs distances.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple, connected, undirected graph on vertices `0..n`.
///
/// Edges are stored as sorted `(u, v)` pairs with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, silently dropping duplicate edges. Rejects self-loops,
    /// out-of-range endpoints and disconnected inputs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::OutOfRangeVertex { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let g = Graph { n, edges, adjacency };
        let components = g.component_count();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Vertices in BFS order from vertex 0. Every vertex after the first has
    /// an earlier neighbour, which the colouring search relies on for pruning.
    pub(crate) fn bfs_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }
}

/// One of the graph families with published closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// Parts `A = 0..a` and `B = a..a+b`, with `a >= b`.
    CompleteBipartite { a: usize, b: usize },
}

impl FamilySpec {
    pub fn path(n: usize) -> Result<Self> {
        FamilySpec::Path { n }.validated()
    }

    pub fn cycle(n: usize) -> Result<Self> {
        FamilySpec::Cycle { n }.validated()
    }

    pub fn complete(n: usize) -> Result<Self> {
        FamilySpec::Complete { n }.validated()
    }

    /// Parts are reordered so that the first is the larger.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        FamilySpec::CompleteBipartite { a: a.max(b), b: a.min(b) }.validated()
    }

    /// Checks parameter bounds and puts bipartite parts in `a >= b` order.
    pub fn validated(self) -> Result<Self> {
        let spec = match self {
            FamilySpec::CompleteBipartite { a, b } => FamilySpec::CompleteBipartite {
                a: a.max(b),
                b: a.min(b),
            },
            other => other,
        };
        let ok = match spec {
            FamilySpec::Path { n } | FamilySpec::Complete { n } => n >= 1,
            FamilySpec::Cycle { n } => n >= 3,
            FamilySpec::CompleteBipartite { b, .. } => b >= 1,
        };
        if ok {
            Ok(spec)
        } else {
            Err(Error::BadParams(format!("{spec} is outside the family's parameter range")))
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => n,
            FamilySpec::CompleteBipartite { a, b } => a + b,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path n={n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle n={n}"),
            FamilySpec::Complete { n } => write!(f, "complete n={n}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete-bipartite a={a} b={b}"),
        }
    }
}

/// Builds the family graph with the fixed vertex labelling: paths and
/// cycles are labelled consecutively, bipartite parts are `0..a`, `a..a+b`.
pub fn generate(spec: FamilySpec) -> Result<Graph> {
    let spec = spec.validated()?;
    match spec {
        FamilySpec::Path { n } => Graph::new(n, (1..n).map(|i| (i - 1, i))),
        FamilySpec::Cycle { n } => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete { n } => {
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        FamilySpec::CompleteBipartite { a, b } => {
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
    }
}

/// Symmetric matrix of shortest-path lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex. `O(n (n + m))`.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut data = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        let row = &mut data[source * n..(source + 1) * n];
        row[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &w in g.neighbours(u) {
                if row[w] == u32::MAX {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, data }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses either the JSON form `{"n": 3, "edges": [[0,1],[1,2]]}` or the
/// plain edge list (`n m` header followed by `m` lines of `u v`).
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::MalformedInput {
            line: e.line(),
            message: e.to_string(),
        })?;
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let malformed = |line: usize, message: String| Error::MalformedInput { line, message };
    let pair = |line: usize, l: &str, what: &str| -> Result<(usize, usize)> {
        let fields: Vec<_> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(malformed(line, format!("expected two integers ({what}), got {l:?}")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| malformed(line, format!("{what}: {s:?}: {e}")))
        };
        Ok((parse(fields[0])?, parse(fields[1])?))
    };

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing \"n m\" header".into()))?;
    let (n, m) = pair(header_line, header, "header n m")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, l) in lines {
        edges.push(pair(line, l, "edge u v")?);
        last_line = line;
    }
    if edges.len() != m {
        return Err(malformed(
            last_line,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Compact JSON, edges sorted.
pub fn serialize_graph(g: &Graph) -> String {
    let raw = GraphJson {
        n: g.n,
        edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&raw).expect("graph JSON serialization cannot fail")
}
