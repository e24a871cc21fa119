//! Finite simplicial graphs and the combinatorial criteria used by the
//! classifier: join decomposition, the complete-join-of-pairs test, SILs and
//! molecularity.
//!
//! Vertices are addressed by their position in declaration order. Every
//! "lexicographic" tie-break in this module is on those positions.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge references unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
}

/// A finite simplicial graph with named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialGraph {
    names: Vec<String>,
    adj: Vec<Vec<bool>>,
}

/// The split of a graph into its universal vertices (`lambda`) and the rest
/// (`xi`). Both lists are sorted vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinDecomposition {
    pub lambda: Vec<usize>,
    pub xi: Vec<usize>,
}

/// Two vertices at distance at least 2 together with a component of
/// `Γ ∖ (link(u) ∩ link(v))` that contains neither of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SilWitness {
    pub u: usize,
    pub v: usize,
    pub component: Vec<usize>,
}

fn default_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("v{i}")
    }
}

impl SimplicialGraph {
    /// Builds a graph from vertex names and edges given by name.
    pub fn new<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for (x, y) in edges {
            let (x, y) = (x.as_ref(), y.as_ref());
            let i = *index.get(x).ok_or_else(|| GraphError::UnknownVertex(x.to_owned()))?;
            let j = *index.get(y).ok_or_else(|| GraphError::UnknownVertex(y.to_owned()))?;
            pairs.push((i, j));
        }
        Self::from_indexed(names, pairs)
    }

    /// Builds a graph from vertex names and index pairs.
    pub fn from_indexed(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let n = names.len();
        let mut seen = std::collections::HashSet::with_capacity(n);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut adj = vec![vec![false; n]; n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(GraphError::UnknownVertex(format!("#{}", i.max(j))));
            }
            if i == j {
                return Err(GraphError::SelfLoop(names[i].clone()));
            }
            if adj[i][j] {
                return Err(GraphError::DuplicateEdge(names[i].clone(), names[j].clone()));
            }
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Ok(Self { names, adj })
    }

    /// Graph on `n` vertices named `a, b, c, …` whose edge set is encoded by
    /// `mask`: bit `k` is the `k`-th pair `(i, j)`, `i < j`, in lexicographic
    /// order. Used to enumerate all labeled graphs on few vertices.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut adj = vec![vec![false; n]; n];
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
                bit += 1;
            }
        }
        Self { names: (0..n).map(default_name).collect(), adj }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn link(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&w| self.adj[v][w]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The induced subgraph on `vertices` (kept in the given order).
    pub fn induced(&self, vertices: &[usize]) -> SimplicialGraph {
        let names = vertices.iter().map(|&v| self.names[v].clone()).collect();
        let adj = vertices
            .iter()
            .map(|&x| vertices.iter().map(|&y| self.adj[x][y]).collect())
            .collect();
        SimplicialGraph { names, adj }
    }

    /// Same vertices; an edge is present iff it is absent here.
    pub fn complement(&self) -> SimplicialGraph {
        let n = self.len();
        let adj = (0..n)
            .map(|i| (0..n).map(|j| i != j && !self.adj[i][j]).collect())
            .collect();
        SimplicialGraph { names: self.names.clone(), adj }
    }

    /// Returns a copy with vertices reordered so that new vertex `k` is old
    /// vertex `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> SimplicialGraph {
        self.induced(order)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.adj[i][j]))
    }

    pub fn join_decompose(&self) -> JoinDecomposition {
        let n = self.len();
        let (lambda, xi) = (0..n).partition(|&v| self.degree(v) + 1 == n);
        JoinDecomposition { lambda, xi }
    }

    /// Whether the graph is the join of a (possibly empty) complete graph with
    /// `k ≥ 0` copies of two non-adjacent vertices. This holds exactly when
    /// every vertex has at most one non-neighbour.
    pub fn matches_complete_join_pairs(&self) -> bool {
        let n = self.len();
        (0..n).all(|v| n - 1 - self.degree(v) <= 1)
    }

    /// The non-adjacent pairs of a graph satisfying
    /// [`matches_complete_join_pairs`](Self::matches_complete_join_pairs),
    /// and the remaining (universal) vertices. `None` if the graph does not
    /// have that shape.
    pub fn complete_join_pairs(&self) -> Option<(Vec<usize>, Vec<(usize, usize)>)> {
        if !self.matches_complete_join_pairs() {
            return None;
        }
        let n = self.len();
        let mut singles = Vec::new();
        let mut pairs = Vec::new();
        for v in 0..n {
            match (0..n).find(|&w| w != v && !self.adj[v][w]) {
                None => singles.push(v),
                Some(w) if v < w => pairs.push((v, w)),
                Some(_) => {}
            }
        }
        Some((singles, pairs))
    }

    /// Unweighted distance, `None` when the vertices lie in different
    /// components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        let n = self.len();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::from([u]);
        dist[u] = 0;
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Some(dist[x]);
            }
            for y in 0..n {
                if self.adj[x][y] && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Connected components of the subgraph induced on the vertices for which
    /// `keep` is true. Each component is sorted; components are ordered by
    /// their smallest vertex.
    pub fn components_where(&self, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || !keep(start) {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if self.adj[x][y] && !seen[y] && keep(y) {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_where(|_| true)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.len();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in 0..n {
                    if !self.adj[x][y] {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// First SIL in lexicographic order on `(u, v)`, taking the component
    /// with the smallest vertex.
    pub fn find_sil(&self) -> Option<SilWitness> {
        let n = self.len();
        for u in 0..n {
            for v in u + 1..n {
                if let Some(component) = self.sil_component(u, v) {
                    return Some(SilWitness { u, v, component });
                }
            }
        }
        None
    }

    /// The first component of `Γ ∖ (link(u) ∩ link(v))` avoiding `u` and `v`,
    /// provided `d(u, v) ≥ 2`.
    pub fn sil_component(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if u == v || self.adj[u][v] {
            return None;
        }
        let removed = |w: usize| self.adj[u][w] && self.adj[v][w];
        self.components_where(|w| !removed(w))
            .into_iter()
            .find(|c| !c.contains(&u) && !c.contains(&v))
    }

    /// Connected, leafless (no vertex of degree ≤ 1) and girth at least 5.
    pub fn is_molecular(&self) -> bool {
        if self.is_empty() || !self.is_connected() {
            return false;
        }
        if (0..self.len()).any(|v| self.degree(v) <= 1) {
            return false;
        }
        self.girth().is_none_or(|g| g >= 5)
    }

    pub fn is_single_vertex(&self) -> bool {
        self.len() == 1
    }

    pub fn is_single_edge(&self) -> bool {
        self.len() == 2 && self.adj[0][1]
    }

    /// Degree of every vertex in the complement, in vertex order.
    pub fn complement_degrees(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).map(|v| n - 1 - self.degree(v)).collect()
    }
}
