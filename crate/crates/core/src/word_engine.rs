//! Elements of a graph product in canonical normal form.
//!
//! A word is first *reduced*: syllables are pushed one at a time, and a new
//! syllable is merged into the rightmost syllable of its vertex when
//! everything in between commutes with it. Reduced words representing the
//! same element differ only by swaps of adjacent commuting syllables, so the
//! canonical representative is the least linearization of that commutation
//! class, taken greedily (smallest vertex among the syllables that can be
//! moved to the front).

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graph_core::SimplicialGraph;
use crate::group_engine::{GroupDescriptor, MultTable};
use crate::labeled::LabeledGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("bad syllable: element {element} is not in the group of vertex `{vertex}`")]
    BadSyllable { vertex: String, element: i64 },
    #[error("no vertex with index {0}")]
    UnknownVertex(usize),
    #[error("vertex `{0}` carries an opaque group; the word problem needs a computable factor")]
    OpaqueFactor(String),
    #[error("vertices `{0}` and `{1}` are adjacent")]
    VerticesAdjacent(String, String),
    #[error("retraction needs two distinct vertices, got `{0}` twice")]
    SameVertex(String),
}

/// One letter of a graph-product word: a non-identity element of the group
/// at `vertex`. For finite factors `element` is an element index of the
/// multiplication table; for `Z` it is the exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub element: i64,
}

impl Syllable {
    pub fn new(vertex: usize, element: i64) -> Self {
        Self { vertex, element }
    }
}

/// A canonical word. Equality of elements is equality of these sequences.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NormalWord(Vec<Syllable>);

impl NormalWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Syllable> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Syllable> {
        self.0.last().copied()
    }

    /// Callers guarantee the sequence is already canonical for its context.
    pub(crate) fn from_canonical(syllables: Vec<Syllable>) -> Self {
        Self(syllables)
    }
}

impl Ord for NormalWord {
    /// ShortLex on `(vertex, element)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NormalWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A vertex group the word engine can multiply in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Finite(MultTable),
    Integers,
}

impl Factor {
    #[inline]
    pub fn mul(&self, x: i64, y: i64) -> i64 {
        match self {
            Factor::Finite(t) => t.mul(x as usize, y as usize) as i64,
            Factor::Integers => x.checked_add(y).expect("exponent overflow"),
        }
    }

    #[inline]
    pub fn inv(&self, x: i64) -> i64 {
        match self {
            Factor::Finite(t) => t.inv(x as usize) as i64,
            Factor::Integers => -x,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        match self {
            Factor::Finite(t) => x >= 0 && (x as usize) < t.order(),
            Factor::Integers => true,
        }
    }

    /// `g^k` for the element `g`.
    pub fn pow(&self, x: i64, k: i64) -> i64 {
        match self {
            Factor::Finite(t) => t.pow(x as usize, k) as i64,
            Factor::Integers => x.checked_mul(k).expect("exponent overflow"),
        }
    }

    /// Generators used when a statement quantifies over "the generators" of
    /// the factor: every non-identity element of a finite group, `1` for `Z`.
    pub fn generators(&self) -> Vec<i64> {
        match self {
            Factor::Finite(t) => (1..t.order() as i64).collect(),
            Factor::Integers => vec![1],
        }
    }

    pub fn table(&self) -> Option<&MultTable> {
        match self {
            Factor::Finite(t) => Some(t),
            Factor::Integers => None,
        }
    }
}

/// Multiplication context of a graph product `Γ𝒢`.
#[derive(Debug, Clone)]
pub struct GraphProduct {
    names: Vec<String>,
    commute: Vec<Vec<bool>>,
    factors: Vec<Factor>,
}

impl GraphProduct {
    pub fn new(lg: &LabeledGraph) -> Result<Self, WordError> {
        let g = lg.graph();
        let factors = lg
            .labels()
            .iter()
            .enumerate()
            .map(|(v, label)| match label {
                GroupDescriptor::InfiniteCyclic => Ok(Factor::Integers),
                GroupDescriptor::Opaque(_) => Err(WordError::OpaqueFactor(g.name(v).to_owned())),
                finite => Ok(Factor::Finite(finite.table().expect("finite label"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_parts(g, factors))
    }

    pub fn from_parts(g: &SimplicialGraph, factors: Vec<Factor>) -> Self {
        assert_eq!(g.len(), factors.len());
        let n = g.len();
        let commute = (0..n).map(|u| (0..n).map(|v| g.adjacent(u, v)).collect()).collect();
        Self { names: g.names().to_vec(), commute, factors }
    }

    /// The free product of two factors, vertices named as given.
    pub fn free_product(names: [&str; 2], a: Factor, b: Factor) -> Self {
        Self {
            names: names.iter().map(|s| s.to_string()).collect(),
            commute: vec![vec![false; 2]; 2],
            factors: vec![a, b],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
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

    pub fn factor(&self, v: usize) -> &Factor {
        &self.factors[v]
    }

    #[inline]
    pub fn commutes(&self, u: usize, v: usize) -> bool {
        self.commute[u][v]
    }

    fn check(&self, s: Syllable) -> Result<(), WordError> {
        let factor = self.factors.get(s.vertex).ok_or(WordError::UnknownVertex(s.vertex))?;
        if factor.contains(s.element) {
            Ok(())
        } else {
            Err(WordError::BadSyllable { vertex: self.names[s.vertex].clone(), element: s.element })
        }
    }

    /// Pushes `s` onto a reduced word, keeping it reduced.
    fn push_reduced(&self, acc: &mut Vec<Syllable>, s: Syllable) {
        if s.element == 0 {
            return;
        }
        for j in (0..acc.len()).rev() {
            let t = acc[j];
            if t.vertex == s.vertex {
                let e = self.factors[s.vertex].mul(t.element, s.element);
                if e == 0 {
                    acc.remove(j);
                } else {
                    acc[j].element = e;
                }
                return;
            }
            if !self.commute[t.vertex][s.vertex] {
                break;
            }
        }
        acc.push(s);
    }

    /// Least linearization of a reduced word's commutation class.
    fn canonical(&self, mut rest: Vec<Syllable>) -> NormalWord {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                let free = rest[..i].iter().all(|p| self.commute[p.vertex][rest[i].vertex]);
                if free && best.is_none_or(|b| rest[i] < rest[b]) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("the first syllable is always free")));
        }
        NormalWord(out)
    }

    fn normalize_unchecked(&self, raw: impl IntoIterator<Item = Syllable>) -> NormalWord {
        let mut acc = Vec::new();
        for s in raw {
            self.push_reduced(&mut acc, s);
        }
        self.canonical(acc)
    }

    /// Canonical form of an arbitrary product of syllables. Identity
    /// syllables are allowed in the input and vanish.
    pub fn normal_form(&self, raw: &[Syllable]) -> Result<NormalWord, WordError> {
        for &s in raw {
            self.check(s)?;
        }
        Ok(self.normalize_unchecked(raw.iter().copied()))
    }

    /// Convenience for `normal_form` on `(vertex, element)` pairs.
    pub fn word(&self, raw: &[(usize, i64)]) -> Result<NormalWord, WordError> {
        let raw: Vec<Syllable> = raw.iter().map(|&(v, e)| Syllable::new(v, e)).collect();
        self.normal_form(&raw)
    }

    pub fn generator(&self, vertex: usize, element: i64) -> Result<NormalWord, WordError> {
        self.normal_form(&[Syllable::new(vertex, element)])
    }

    pub fn multiply(&self, w1: &NormalWord, w2: &NormalWord) -> NormalWord {
        self.normalize_unchecked(w1.0.iter().chain(&w2.0).copied())
    }

    pub fn invert(&self, w: &NormalWord) -> NormalWord {
        self.normalize_unchecked(
            w.0.iter().rev().map(|s| Syllable::new(s.vertex, self.factors[s.vertex].inv(s.element))),
        )
    }

    /// `g w g⁻¹`.
    pub fn conjugate(&self, g: &NormalWord, w: &NormalWord) -> NormalWord {
        self.multiply(&self.multiply(g, w), &self.invert(g))
    }

    pub fn pow(&self, w: &NormalWord, k: i64) -> NormalWord {
        let base = if k < 0 { self.invert(w) } else { w.clone() };
        (0..k.unsigned_abs()).fold(NormalWord::identity(), |acc, _| self.multiply(&acc, &base))
    }

    /// Image under the quotient by the normal closure of every vertex group
    /// other than `u` and `v`, which is the free product `G_u ∗ G_v` when the
    /// two vertices are not adjacent.
    pub fn retract(&self, w: &NormalWord, u: usize, v: usize) -> Result<NormalWord, WordError> {
        for x in [u, v] {
            if x >= self.vertex_count() {
                return Err(WordError::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(WordError::SameVertex(self.names[u].clone()));
        }
        if self.commute[u][v] {
            return Err(WordError::VerticesAdjacent(self.names[u].clone(), self.names[v].clone()));
        }
        Ok(self.normalize_unchecked(w.0.iter().copied().filter(|s| s.vertex == u || s.vertex == v)))
    }

    /// Whether `w` commutes with every generator of every vertex group.
    pub fn commutes_with_all_generators(&self, w: &NormalWord) -> bool {
        let w_inv = self.invert(w);
        (0..self.vertex_count()).all(|v| {
            self.factors[v].generators().into_iter().all(|e| {
                let s = Syllable::new(v, e);
                let s_inv = Syllable::new(v, self.factors[v].inv(e));
                let raw = w.0.iter().copied().chain([s]).chain(w_inv.0.iter().copied()).chain([s_inv]);
                self.normalize_unchecked(raw).is_identity()
            })
        })
    }

    pub fn format_syllable(&self, s: Syllable) -> String {
        match self.factors[s.vertex] {
            Factor::Finite(_) => format!("{}[{}]", self.names[s.vertex], s.element),
            Factor::Integers => format!("{}^{}", self.names[s.vertex], s.element),
        }
    }

    /// Renders a word in the literal syntax accepted by the CLI; the
    /// identity is `1`.
    pub fn format(&self, w: &NormalWord) -> String {
        if w.is_identity() {
            return "1".to_owned();
        }
        w.0.iter().map(|&s| self.format_syllable(s)).collect::<Vec<_>>().join("*")
    }

    pub fn display<'a>(&'a self, w: &'a NormalWord) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GraphProduct, &'a NormalWord);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, w)
    }
}
