//! Independent oracles shared by the acceptance suite. Nothing here calls
//! the normal-form or tree-distance code it is used to check.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use gpkit::bass_serre::{FreeProduct, TreeVertex};
use gpkit::graph_core::SimplicialGraph;
use gpkit::group_engine::{GroupDescriptor, MultTable};
use gpkit::labeled::LabeledGraph;
use gpkit::word_engine::NormalWord;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A word as `(vertex, element)` letters.
pub type Letters = Vec<(usize, i64)>;

/// Exhaustive rewriting over cyclic vertex groups `Z/orders[v]`: delete an
/// identity letter, merge two adjacent letters of the same vertex, or swap
/// two adjacent letters of adjacent vertices.
pub struct RewriteOracle {
    pub orders: Vec<i64>,
    pub adjacent: Vec<Vec<bool>>,
}

impl RewriteOracle {
    pub fn new(g: &SimplicialGraph, orders: Vec<i64>) -> Self {
        let n = g.len();
        let adjacent = (0..n).map(|u| (0..n).map(|v| g.adjacent(u, v)).collect()).collect();
        Self { orders, adjacent }
    }

    fn rewrites(&self, w: &Letters) -> Vec<Letters> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            if w[i].1 == 0 {
                let mut x = w.clone();
                x.remove(i);
                out.push(x);
            }
            if i + 1 < w.len() {
                let ((u, e), (v, f)) = (w[i], w[i + 1]);
                if u == v {
                    let mut x = w.clone();
                    x[i] = (u, (e + f) % self.orders[u]);
                    x.remove(i + 1);
                    out.push(x);
                } else if self.adjacent[u][v] {
                    let mut x = w.clone();
                    x.swap(i, i + 1);
                    out.push(x);
                }
            }
        }
        out
    }

    /// Every word reachable from `w` by rewriting.
    pub fn closure(&self, w: &Letters) -> HashSet<Letters> {
        let mut seen = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in self.rewrites(&x) {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// ShortLex-least word of the closure.
    pub fn least(&self, w: &Letters) -> Letters {
        self.closure(w).into_iter().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b))).unwrap()
    }

    /// Equality by intersecting rewriting closures.
    pub fn equal(&self, u: &Letters, v: &Letters) -> bool {
        let cu = self.closure(u);
        self.closure(v).iter().any(|x| cu.contains(x))
    }
}

pub fn letters(w: &NormalWord) -> Letters {
    w.syllables().iter().map(|s| (s.vertex, s.element)).collect()
}

/// Labelled graphs on `n` vertices up to isomorphism, as (edge mask,
/// labels): the lexicographically least pair in each orbit.
pub fn labelled_graph_classes(n: usize, alphabet: &[usize]) -> Vec<(u64, Vec<usize>)> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let mut labels = vec![0usize; n];
        loop {
            let key = perms
                .iter()
                .map(|p| {
                    let mut m = 0u64;
                    for (k, &(i, j)) in pairs.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                            m |= 1 << pairs.iter().position(|&q| q == (a, b)).unwrap();
                        }
                    }
                    let mut l = vec![0; n];
                    for i in 0..n {
                        l[p[i]] = labels[i];
                    }
                    (m, l)
                })
                .min()
                .unwrap();
            if seen.insert(key.clone()) {
                out.push((key.0, key.1.iter().map(|&i| alphabet[i]).collect()));
            }
            // next label assignment, odometer style
            let mut k = 0;
            while k < n && labels[k] + 1 == alphabet.len() {
                labels[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            labels[k] += 1;
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> SimplicialGraph {
    let bits = n * n.saturating_sub(1) / 2;
    SimplicialGraph::from_edge_mask(n, if bits == 0 { 0 } else { rng.gen_range(0..1u64 << bits) })
}

pub fn descriptor(name: &str) -> GroupDescriptor {
    match name {
        "Z2" => GroupDescriptor::Z2,
        "Z3" => GroupDescriptor::Cyclic(3),
        "Z4" => GroupDescriptor::Cyclic(4),
        "S3" => GroupDescriptor::Table(MultTable::symmetric3()),
        "Z" => GroupDescriptor::InfiniteCyclic,
        other => panic!("no descriptor {other}"),
    }
}

pub fn table(name: &str) -> MultTable {
    descriptor(name).table().expect("finite")
}

pub fn labelled(g: SimplicialGraph, names: &[&str]) -> LabeledGraph {
    LabeledGraph::new(g, names.iter().map(|n| descriptor(n)).collect()).unwrap()
}

/// Breadth-first ball with parent pointers; distances between ball vertices
/// come from the lowest common ancestor rather than the coset formula.
pub struct BfsBall {
    pub vertices: Vec<TreeVertex>,
    pub index: HashMap<TreeVertex, usize>,
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl BfsBall {
    pub fn new(fp: &FreeProduct, center: &TreeVertex, radius: usize) -> Self {
        let mut vertices = vec![center.clone()];
        let mut index = HashMap::from([(center.clone(), 0)]);
        let (mut parent, mut depth) = (vec![0], vec![0]);
        let mut head = 0;
        while head < vertices.len() {
            if depth[head] < radius {
                for y in fp.neighbors(&vertices[head].clone()) {
                    if !index.contains_key(&y) {
                        index.insert(y.clone(), vertices.len());
                        vertices.push(y);
                        parent.push(head);
                        depth.push(depth[head] + 1);
                    }
                }
            }
            head += 1;
        }
        Self { vertices, index, parent, depth }
    }

    pub fn depth(&self, i: usize) -> usize {
        self.depth[i]
    }

    pub fn distance(&self, mut i: usize, mut j: usize) -> usize {
        let mut d = 0;
        while self.depth[i] > self.depth[j] {
            i = self.parent[i];
            d += 1;
        }
        while self.depth[j] > self.depth[i] {
            j = self.parent[j];
            d += 1;
        }
        while i != j {
            i = self.parent[i];
            j = self.parent[j];
            d += 2;
        }
        d
    }
}

/// A random reduced alternating word of `A ∗ B` with at most `max_len`
/// syllables.
pub fn random_element(fp: &FreeProduct, rng: &mut impl Rng, max_len: usize) -> NormalWord {
    use gpkit::bass_serre::Side;
    let len = rng.gen_range(0..=max_len);
    let mut side = if rng.gen_bool(0.5) { Side::A } else { Side::B };
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        letters.push((side, rng.gen_range(1..fp.table(side).order())));
        side = side.other();
    }
    fp.word(&letters)
}
