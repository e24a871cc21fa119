//! The Bass-Serre tree of a free product `A ∗ B` of finite groups.
//!
//! Vertices are the cosets `gA` and `gB`; `gA` and `hB` are adjacent when the
//! cosets meet. A coset is stored through its unique representative whose
//! alternating normal form does not end with a syllable of the coset's own
//! factor. Elements of `A ∗ B` are [`NormalWord`]s over a two-vertex edgeless
//! [`GraphProduct`] whose vertex 0 is `A` and vertex 1 is `B`.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group_engine::{GroupError, MultTable};
use crate::word_engine::{Factor, GraphProduct, NormalWord, Syllable, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("the listed elements do not generate factor {0}")]
    NotGenerating(Side),
    #[error("generator list for factor {0} contains the identity")]
    IdentityGenerator(Side),
    #[error("generator list for factor {0} is empty")]
    NoGenerators(Side),
    #[error("element {element} is not in factor {side}")]
    BadElement { side: Side, element: usize },
    #[error("vertex `{0}` does not carry a finite group")]
    InfiniteFactor(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    #[inline]
    pub fn vertex(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }

    #[inline]
    pub fn of(vertex: usize) -> Side {
        if vertex == 0 {
            Side::A
        } else {
            Side::B
        }
    }

    #[inline]
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// A coset `rep·A` or `rep·B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeVertex {
    side: Side,
    rep: NormalWord,
}

impl TreeVertex {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rep(&self) -> &NormalWord {
        &self.rep
    }
}

impl Ord for TreeVertex {
    /// ShortLex on the representative, then `A < B`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.rep.cmp(&other.rep).then(self.side.cmp(&other.side))
    }
}

impl PartialOrd for TreeVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Translation data of an element acting on the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisData {
    pub element: NormalWord,
    pub translation_length: usize,
    /// For a loxodromic element, a fundamental segment of its axis whose
    /// last vertex is the image of the first. For an elliptic element, a
    /// single fixed vertex.
    pub segment: Vec<TreeVertex>,
    /// `u` with `element = u·core·u⁻¹` and `core` cyclically reduced.
    pub conjugator: NormalWord,
    pub core: NormalWord,
}

impl AxisData {
    pub fn is_elliptic(&self) -> bool {
        self.translation_length == 0
    }
}

/// Evidence that conjugation by `g` is a WPD isometry: the pointwise
/// stabiliser of `A, B, g·A, g·B` among vertex-fixing automorphism pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpdCertificate {
    pub g: NormalWord,
    /// Generator lists after padding to a common length.
    pub gens_a: Vec<usize>,
    pub gens_b: Vec<usize>,
    /// `A, B, g·A, g·B`.
    pub axis_vertices: [TreeVertex; 4],
    pub axis: AxisData,
    /// Whether each of the four vertices has minimal displacement under `g`.
    pub on_axis: [bool; 4],
    pub stabilizer_pairs_checked: usize,
    pub survivors: Vec<(Vec<usize>, Vec<usize>)>,
}

impl WpdCertificate {
    pub fn is_valid(&self) -> bool {
        match self.survivors.as_slice() {
            [(alpha, beta)] => is_identity_map(alpha) && is_identity_map(beta),
            _ => false,
        }
    }

    pub fn axis_contains_all(&self) -> bool {
        self.on_axis.iter().all(|&b| b)
    }
}

fn is_identity_map(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// Outcome of [`FreeProduct::generation_probe`]. The probe never claims
/// that the stabilisers fail to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Probe {
    GeneratesAll,
    NotWithinRadius,
}

/// `A ∗ B` for finite `A` and `B`, acting on its Bass-Serre tree.
#[derive(Debug, Clone)]
pub struct FreeProduct {
    group: GraphProduct,
    a: MultTable,
    b: MultTable,
}

impl FreeProduct {
    pub fn new(a: MultTable, b: MultTable) -> Self {
        Self::with_names(["a", "b"], a, b)
    }

    pub fn with_names(names: [&str; 2], a: MultTable, b: MultTable) -> Self {
        let group = GraphProduct::free_product(names, Factor::Finite(a.clone()), Factor::Finite(b.clone()));
        Self { group, a, b }
    }

    /// `G_u ∗ G_v` for two non-adjacent vertices with finite groups.
    pub fn from_graph_product(gp: &GraphProduct, u: usize, v: usize) -> Result<Self, TreeError> {
        // validates u, v and non-adjacency
        gp.retract(&NormalWord::identity(), u, v)?;
        let table = |x: usize| {
            gp.factor(x).table().cloned().ok_or_else(|| TreeError::InfiniteFactor(gp.name(x).to_owned()))
        };
        Ok(Self::with_names([gp.name(u), gp.name(v)], table(u)?, table(v)?))
    }

    /// Image of `w ∈ Γ𝒢` in `G_u ∗ G_v` under the retraction, with `u ↦ A`,
    /// `v ↦ B`.
    pub fn project(&self, gp: &GraphProduct, u: usize, v: usize, w: &NormalWord) -> Result<NormalWord, TreeError> {
        let r = gp.retract(w, u, v)?;
        let relabeled: Vec<Syllable> = r
            .syllables()
            .iter()
            .map(|s| Syllable::new(if s.vertex == u { 0 } else { 1 }, s.element))
            .collect();
        Ok(self.group.normal_form(&relabeled)?)
    }

    pub fn group(&self) -> &GraphProduct {
        &self.group
    }

    pub fn table(&self, side: Side) -> &MultTable {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    /// The element `e` of factor `side`, as a word.
    pub fn element(&self, side: Side, e: usize) -> NormalWord {
        self.group.generator(side.vertex(), e as i64).expect("element of the factor")
    }

    pub fn word(&self, letters: &[(Side, usize)]) -> NormalWord {
        let raw: Vec<Syllable> = letters.iter().map(|&(s, e)| Syllable::new(s.vertex(), e as i64)).collect();
        self.group.normal_form(&raw).expect("letters of the factors")
    }

    pub fn multiply(&self, x: &NormalWord, y: &NormalWord) -> NormalWord {
        self.group.multiply(x, y)
    }

    pub fn invert(&self, x: &NormalWord) -> NormalWord {
        self.group.invert(x)
    }

    fn side_of(s: &Syllable) -> Side {
        Side::of(s.vertex)
    }

    /// Whether `g` lies in the factor `side`.
    pub fn in_factor(&self, g: &NormalWord, side: Side) -> bool {
        match g.syllables() {
            [] => true,
            [s] => Self::side_of(s) == side,
            _ => false,
        }
    }

    pub fn base(side: Side) -> TreeVertex {
        TreeVertex { side, rep: NormalWord::identity() }
    }

    /// The coset `g·side`.
    pub fn vertex_of(&self, g: &NormalWord, side: Side) -> TreeVertex {
        let mut syl = g.syllables().to_vec();
        if syl.last().is_some_and(|s| Self::side_of(s) == side) {
            syl.pop();
        }
        TreeVertex { side, rep: NormalWord::from_canonical(syl) }
    }

    /// `rep_x⁻¹·rep_y`.
    fn relative(&self, x: &TreeVertex, y: &TreeVertex) -> NormalWord {
        self.group.multiply(&self.group.invert(&x.rep), &y.rep)
    }

    pub fn adjacent(&self, x: &TreeVertex, y: &TreeVertex) -> bool {
        x.side != y.side && self.tree_distance(x, y) == 1
    }

    /// Graph distance in the tree.
    ///
    /// Translate so that `x` becomes the base vertex `P`; then `y = h·S`.
    /// Dropping a leading `P`-syllable (it fixes `P`) and a trailing
    /// `S`-syllable (absorbed by the coset) leaves an alternating word `r`
    /// whose first syllable is not in `P`; the geodesic from `P` crosses
    /// one edge into `r`'s first factor and then one edge per syllable.
    pub fn tree_distance(&self, x: &TreeVertex, y: &TreeVertex) -> usize {
        let h = self.relative(x, y);
        let mut r = h.syllables();
        if r.first().is_some_and(|s| Self::side_of(s) == x.side) {
            r = &r[1..];
        }
        if r.last().is_some_and(|s| Self::side_of(s) == y.side) {
            r = &r[..r.len() - 1];
        }
        match (r.len(), x.side == y.side) {
            (0, true) => 0,
            (0, false) => 1,
            (k, _) => k + 1,
        }
    }

    /// `g·x`.
    pub fn act(&self, g: &NormalWord, x: &TreeVertex) -> TreeVertex {
        self.vertex_of(&self.group.multiply(g, &x.rep), x.side)
    }

    /// Extends a pair of factor automorphisms to `A ∗ B`, letter by letter.
    pub fn apply_auto(&self, alpha: &[usize], beta: &[usize], g: &NormalWord) -> NormalWord {
        let raw: Vec<Syllable> = g
            .syllables()
            .iter()
            .map(|s| {
                let map = if s.vertex == 0 { alpha } else { beta };
                Syllable::new(s.vertex, map[s.element as usize] as i64)
            })
            .collect();
        self.group.normal_form(&raw).expect("automorphisms map factors to themselves")
    }

    /// Image of `x` under the extension of `(alpha, beta)`: the vertex whose
    /// stabiliser is the image of `stab(x)`.
    pub fn act_auto(&self, alpha: &[usize], beta: &[usize], x: &TreeVertex) -> TreeVertex {
        self.vertex_of(&self.apply_auto(alpha, beta, &x.rep), x.side)
    }

    pub fn neighbors(&self, x: &TreeVertex) -> Vec<TreeVertex> {
        let table = self.table(x.side);
        (0..table.order())
            .map(|e| {
                let g = self.group.multiply(&x.rep, &self.element(x.side, e));
                self.vertex_of(&g, x.side.other())
            })
            .collect()
    }

    /// Tree vertices within `radius` of `center`, in breadth-first order.
    pub fn ball(&self, center: &TreeVertex, radius: usize) -> Vec<TreeVertex> {
        let mut seen: HashSet<TreeVertex> = HashSet::from([center.clone()]);
        let mut out = vec![center.clone()];
        let mut frontier = VecDeque::from([(center.clone(), 0)]);
        while let Some((x, d)) = frontier.pop_front() {
            if d == radius {
                continue;
            }
            for y in self.neighbors(&x) {
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    frontier.push_back((y, d + 1));
                }
            }
        }
        out
    }

    /// All elements of syllable length at most `radius`.
    pub fn element_ball(&self, radius: usize) -> Vec<NormalWord> {
        let mut out = vec![NormalWord::identity()];
        let mut layer: Vec<Vec<Syllable>> = vec![Vec::new()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &layer {
                for side in [Side::A, Side::B] {
                    if w.last().is_some_and(|s| Self::side_of(s) == side) {
                        continue;
                    }
                    for e in 1..self.table(side).order() {
                        let mut longer = w.clone();
                        longer.push(Syllable::new(side.vertex(), e as i64));
                        next.push(longer);
                    }
                }
            }
            out.extend(next.iter().cloned().map(NormalWord::from_canonical));
            layer = next;
        }
        out
    }

    /// `stab(x) = rep·S·rep⁻¹`, sorted.
    pub fn stabilizer(&self, x: &TreeVertex) -> Vec<NormalWord> {
        let mut out: Vec<NormalWord> = (0..self.table(x.side).order())
            .map(|e| self.group.conjugate(&x.rep, &self.element(x.side, e)))
            .collect();
        out.sort();
        out
    }

    /// Splits `g = u·core·u⁻¹` with `core` cyclically reduced.
    pub fn cyclic_reduction(&self, g: &NormalWord) -> (NormalWord, NormalWord) {
        let mut u = NormalWord::identity();
        let mut core = g.clone();
        while core.len() >= 2 {
            let (first, last) = (core.first().unwrap(), core.last().unwrap());
            if first.vertex != last.vertex {
                break;
            }
            let s = NormalWord::from_canonical(vec![first]);
            core = self.group.multiply(&self.group.invert(&s), &self.group.multiply(&core, &s));
            u = self.group.multiply(&u, &s);
        }
        (u, core)
    }

    pub fn translation_data(&self, g: &NormalWord) -> AxisData {
        let (u, core) = self.cyclic_reduction(g);
        let syl = core.syllables();
        if syl.len() <= 1 {
            // an elliptic element other than 1 fixes exactly one vertex
            let fixed = match syl.first() {
                None => Self::base(Side::A),
                Some(s) => self.vertex_of(&u, Self::side_of(s)),
            };
            return AxisData {
                element: g.clone(),
                translation_length: 0,
                segment: vec![fixed],
                conjugator: u,
                core,
            };
        }
        let k = syl.len();
        let mut segment = Vec::with_capacity(k + 1);
        let mut prefix = u.clone();
        for i in 0..=k {
            let side = Self::side_of(&syl[i % k]);
            segment.push(self.vertex_of(&prefix, side));
            if i < k {
                prefix = self.group.multiply(&prefix, &NormalWord::from_canonical(vec![syl[i]]));
            }
        }
        AxisData { element: g.clone(), translation_length: k, segment, conjugator: u, core }
    }

    /// Whether `x` has minimal displacement `translation_length` under `g`;
    /// for a loxodromic `g` that is exactly membership in its axis.
    pub fn on_axis(&self, axis: &AxisData, x: &TreeVertex) -> bool {
        self.tree_distance(x, &self.act(&axis.element, x)) == axis.translation_length
    }

    /// Builds `g = s₁r₁⋯sₙrₙ` from generator lists of `A` and `B` and
    /// enumerates the vertex-fixing automorphism pairs that fix
    /// `A, B, g·A, g·B`.
    pub fn wpd_certificate(
        &self,
        gens_a: &[usize],
        gens_b: &[usize],
        automorphism_bound: usize,
    ) -> Result<WpdCertificate, TreeError> {
        for (side, gens) in [(Side::A, gens_a), (Side::B, gens_b)] {
            let table = self.table(side);
            if gens.is_empty() {
                return Err(TreeError::NoGenerators(side));
            }
            if let Some(&element) = gens.iter().find(|&&e| e >= table.order()) {
                return Err(TreeError::BadElement { side, element });
            }
            if gens.contains(&0) {
                return Err(TreeError::IdentityGenerator(side));
            }
            if !table.generates(gens) {
                return Err(TreeError::NotGenerating(side));
            }
        }
        let n = gens_a.len().max(gens_b.len());
        let pad = |gens: &[usize]| -> Vec<usize> { (0..n).map(|i| gens[i % gens.len()]).collect() };
        let (gens_a, gens_b) = (pad(gens_a), pad(gens_b));

        let letters: Vec<(Side, usize)> =
            gens_a.iter().zip(&gens_b).flat_map(|(&s, &r)| [(Side::A, s), (Side::B, r)]).collect();
        let g = self.word(&letters);
        let axis = self.translation_data(&g);
        let axis_vertices = [
            Self::base(Side::A),
            Self::base(Side::B),
            self.vertex_of(&g, Side::A),
            self.vertex_of(&g, Side::B),
        ];
        let on_axis = [0, 1, 2, 3].map(|i| self.on_axis(&axis, &axis_vertices[i]));

        let auts_a = self.a.automorphisms(automorphism_bound)?;
        let auts_b = self.b.automorphisms(automorphism_bound)?;
        let mut survivors = Vec::new();
        for alpha in &auts_a {
            for beta in &auts_b {
                if axis_vertices.iter().all(|x| &self.act_auto(alpha, beta, x) == x) {
                    survivors.push((alpha.clone(), beta.clone()));
                }
            }
        }
        Ok(WpdCertificate {
            g,
            gens_a,
            gens_b,
            axis_vertices,
            axis,
            on_axis,
            stabilizer_pairs_checked: auts_a.len() * auts_b.len(),
            survivors,
        })
    }

    /// Scans the element ball for a violation of malnormality of the factor
    /// `side`: a non-trivial element of `side ∩ g·side·g⁻¹` with `g ∉ side`,
    /// or of `side ∩ g·other·g⁻¹` for any `g`.
    pub fn malnormality_check(&self, side: Side, radius: usize) -> bool {
        let own: Vec<NormalWord> = (1..self.table(side).order()).map(|e| self.element(side, e)).collect();
        let other: Vec<NormalWord> =
            (1..self.table(side.other()).order()).map(|e| self.element(side.other(), e)).collect();
        let lands_in_side = |c: &NormalWord| !c.is_identity() && self.in_factor(c, side);
        self.element_ball(radius).iter().all(|g| {
            let own_ok = self.in_factor(g, side) || own.iter().all(|x| !lands_in_side(&self.group.conjugate(g, x)));
            own_ok && other.iter().all(|y| !lands_in_side(&self.group.conjugate(g, y)))
        })
    }

    /// Searches products of at most `radius` elements of `stab(x) ∪ stab(y)`
    /// for every element of `A` and `B`.
    pub fn generation_probe(&self, x: &TreeVertex, y: &TreeVertex, radius: usize) -> Probe {
        let mut gens: Vec<NormalWord> = self.stabilizer(x);
        gens.extend(self.stabilizer(y));
        gens.retain(|w| !w.is_identity());
        gens.sort();
        gens.dedup();

        let mut targets: HashSet<NormalWord> = [Side::A, Side::B]
            .iter()
            .flat_map(|&s| (1..self.table(s).order()).map(move |e| (s, e)))
            .map(|(s, e)| self.element(s, e))
            .collect();
        let mut seen: HashSet<NormalWord> = HashSet::from([NormalWord::identity()]);
        let mut layer = vec![NormalWord::identity()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &layer {
                for s in &gens {
                    let p = self.group.multiply(w, s);
                    if seen.insert(p.clone()) {
                        targets.remove(&p);
                        next.push(p);
                    }
                }
            }
            if targets.is_empty() {
                return Probe::GeneratesAll;
            }
            layer = next;
        }
        if targets.is_empty() {
            Probe::GeneratesAll
        } else {
            Probe::NotWithinRadius
        }
    }

    pub fn format_element(&self, g: &NormalWord) -> String {
        self.group.format(g)
    }

    /// `A`, `B`, or `<rep>·A` / `<rep>·B`, using the factor vertex names.
    pub fn format_vertex(&self, x: &TreeVertex) -> String {
        let coset = self.group.name(x.side.vertex()).to_uppercase();
        if x.rep.is_identity() {
            coset
        } else {
            format!("{}·{}", self.group.format(&x.rep), coset)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2z2() -> FreeProduct {
        FreeProduct::new(MultTable::cyclic(2), MultTable::cyclic(2))
    }

    fn z2z3() -> FreeProduct {
        FreeProduct::new(MultTable::cyclic(2), MultTable::cyclic(3))
    }

    const A: Side = Side::A;
    const B: Side = Side::B;

    #[test]
    fn vertex_of_examples() {
        let fp = z2z3();
        assert_eq!(fp.vertex_of(&NormalWord::identity(), A), FreeProduct::base(A));
        assert_eq!(fp.vertex_of(&fp.element(A, 1), A), FreeProduct::base(A));
        let x = fp.vertex_of(&fp.word(&[(A, 1), (B, 1)]), B);
        assert_eq!(x.rep(), &fp.word(&[(A, 1)]));
        assert_eq!(x.side(), B);
    }

    #[test]
    fn adjacency_examples() {
        let fp = z2z2();
        assert!(fp.adjacent(&FreeProduct::base(A), &FreeProduct::base(B)));
        let a_b = fp.vertex_of(&fp.element(A, 1), B);
        assert!(fp.adjacent(&FreeProduct::base(A), &a_b));
        assert!(!fp.adjacent(&FreeProduct::base(A), &fp.vertex_of(&fp.element(B, 1), A)));
        let ab_b = fp.vertex_of(&fp.word(&[(A, 1), (B, 1), (A, 1)]), B);
        assert!(!fp.adjacent(&FreeProduct::base(A), &ab_b));
    }

    #[test]
    fn distance_examples() {
        let fp = z2z2();
        let (a, b) = (FreeProduct::base(A), FreeProduct::base(B));
        assert_eq!(fp.tree_distance(&a, &b), 1);
        assert_eq!(fp.tree_distance(&a, &a), 0);
        let ab_a = fp.vertex_of(&fp.word(&[(A, 1), (B, 1)]), A);
        assert_eq!(fp.tree_distance(&a, &ab_a), 2);
    }

    #[test]
    fn distance_agrees_with_breadth_first_search() {
        for fp in [z2z2(), z2z3(), FreeProduct::new(MultTable::symmetric3(), MultTable::cyclic(2))] {
            let center = FreeProduct::base(A);
            let ball = fp.ball(&center, 4);
            for (d, x) in bfs_layers(&fp, &center, 4) {
                assert_eq!(fp.tree_distance(&center, &x), d);
                assert_eq!(fp.tree_distance(&x, &center), d);
            }
            assert!(ball.len() > 1);
        }
    }

    fn bfs_layers(fp: &FreeProduct, c: &TreeVertex, r: usize) -> Vec<(usize, TreeVertex)> {
        let mut seen = HashSet::from([c.clone()]);
        let mut out = vec![(0, c.clone())];
        let mut i = 0;
        while i < out.len() {
            let (d, x) = out[i].clone();
            if d < r {
                for y in fp.neighbors(&x) {
                    if seen.insert(y.clone()) {
                        out.push((d + 1, y));
                    }
                }
            }
            i += 1;
        }
        out
    }

    #[test]
    fn act_examples() {
        let fp = z2z3();
        let x = fp.vertex_of(&fp.word(&[(A, 1), (B, 2)]), A);
        assert_eq!(fp.act(&NormalWord::identity(), &x), x);
        assert_eq!(fp.act(&fp.element(A, 1), &FreeProduct::base(A)), FreeProduct::base(A));
        let y = fp.act(&fp.word(&[(A, 1), (B, 1)]), &FreeProduct::base(A));
        assert_eq!(y.rep(), &fp.word(&[(A, 1), (B, 1)]));
    }

    #[test]
    fn act_auto_examples() {
        let fp = z2z3();
        let (id2, id3, inv3) = (vec![0, 1], vec![0, 1, 2], vec![0, 2, 1]);
        let x = fp.vertex_of(&fp.word(&[(A, 1), (B, 1)]), A);
        assert_eq!(fp.act_auto(&id2, &id3, &x), x);
        assert_eq!(fp.act_auto(&id2, &inv3, &x).rep(), &fp.word(&[(A, 1), (B, 2)]));
        assert_eq!(fp.act_auto(&id2, &inv3, &FreeProduct::base(A)), FreeProduct::base(A));
    }

    #[test]
    fn translation_examples() {
        let fp = z2z2();
        let t = fp.translation_data(&fp.element(A, 1));
        assert_eq!(t.translation_length, 0);
        assert_eq!(t.segment, vec![FreeProduct::base(A)]);
        let ab = fp.word(&[(A, 1), (B, 1)]);
        let t = fp.translation_data(&ab);
        assert_eq!(t.translation_length, 2);
        assert_eq!(
            t.segment,
            vec![FreeProduct::base(A), fp.vertex_of(&fp.element(A, 1), B), fp.vertex_of(&ab, A)]
        );
        let fp = z2z3();
        assert_eq!(fp.translation_data(&fp.word(&[(A, 1), (B, 1)])).translation_length, 2);
    }

    #[test]
    fn conjugated_elements() {
        let fp = z2z3();
        // b·a·b⁻¹ is elliptic and fixes b·A
        let g = fp.word(&[(B, 1), (A, 1), (B, 2)]);
        let t = fp.translation_data(&g);
        assert!(t.is_elliptic());
        assert_eq!(t.segment, vec![fp.vertex_of(&fp.element(B, 1), A)]);
        assert_eq!(fp.act(&g, &t.segment[0]), t.segment[0]);
        // b·(ab)·b⁻¹ translates by 2 along a segment starting at b·A
        let h = fp.word(&[(B, 1), (A, 1), (B, 1), (B, 2)]);
        let t = fp.translation_data(&h);
        assert_eq!(t.translation_length, 2);
        let (first, last) = (&t.segment[0], t.segment.last().unwrap());
        assert_eq!(&fp.act(&h, first), last);
        for pair in t.segment.windows(2) {
            assert!(fp.adjacent(&pair[0], &pair[1]));
        }
    }

    #[test]
    fn wpd_examples() {
        let cert = z2z3().wpd_certificate(&[1], &[1], 12).unwrap();
        assert_eq!(cert.stabilizer_pairs_checked, 2);
        assert!(cert.is_valid());
        assert!(cert.axis_contains_all());
        let cert = z2z2().wpd_certificate(&[1], &[1], 12).unwrap();
        assert_eq!(cert.survivors, vec![(vec![0, 1], vec![0, 1])]);
        let z3z3 = FreeProduct::new(MultTable::cyclic(3), MultTable::cyclic(3));
        let cert = z3z3.wpd_certificate(&[1], &[1], 12).unwrap();
        assert_eq!(cert.g.len(), 2);
        assert_eq!(cert.stabilizer_pairs_checked, 4);
        assert!(cert.is_valid());
    }

    #[test]
    fn wpd_errors() {
        let fp = FreeProduct::new(MultTable::cyclic(4), MultTable::cyclic(3));
        assert_eq!(fp.wpd_certificate(&[2], &[1], 12).unwrap_err(), TreeError::NotGenerating(A));
        assert_eq!(fp.wpd_certificate(&[1], &[0, 1], 12).unwrap_err(), TreeError::IdentityGenerator(B));
        assert_eq!(fp.wpd_certificate(&[], &[1], 12).unwrap_err(), TreeError::NoGenerators(A));
        assert_eq!(fp.wpd_certificate(&[9], &[1], 12).unwrap_err(), TreeError::BadElement { side: A, element: 9 });
        assert!(matches!(fp.wpd_certificate(&[1], &[1], 2), Err(TreeError::Group(GroupError::OrderTooLarge { .. }))));
    }

    #[test]
    fn wpd_pads_generator_lists() {
        let fp = FreeProduct::new(MultTable::cyclic(2), MultTable::symmetric3());
        let gens_b = MultTable::symmetric3().canonical_generators();
        let cert = fp.wpd_certificate(&[1], &gens_b, 12).unwrap();
        assert_eq!(cert.gens_a, vec![1, 1]);
        assert_eq!(cert.g.len(), 4);
        assert_eq!(cert.stabilizer_pairs_checked, 6);
        assert!(cert.is_valid());
        assert_eq!(cert.axis.segment[cert.axis.segment.len() - 2], cert.axis_vertices[3]);
    }

    #[test]
    fn malnormality_examples() {
        for side in [A, B] {
            assert!(z2z2().malnormality_check(side, 4));
            assert!(z2z3().malnormality_check(side, 4));
        }
    }

    #[test]
    fn generation_probe_examples() {
        let fp = z2z2();
        let (a, b) = (FreeProduct::base(A), FreeProduct::base(B));
        assert_eq!(fp.generation_probe(&a, &b, 1), Probe::GeneratesAll);
        let a_b = fp.vertex_of(&fp.element(A, 1), B);
        let a_b_neighbor = fp.vertex_of(&fp.word(&[(A, 1), (B, 1)]), A);
        assert!(fp.adjacent(&a_b, &a_b_neighbor));
        // The edge is ab·{A, B}; recovering b takes 2·|ab| + 1 = 5 stabilizer factors.
        assert_eq!(fp.generation_probe(&a_b, &a_b_neighbor, 4), Probe::NotWithinRadius);
        assert_eq!(fp.generation_probe(&a_b, &a_b_neighbor, 5), Probe::GeneratesAll);
        let ab_a = fp.vertex_of(&fp.word(&[(A, 1), (B, 1)]), A);
        assert_eq!(fp.generation_probe(&a, &ab_a, 6), Probe::NotWithinRadius);
    }

    #[test]
    fn element_ball_sizes() {
        // 1 + 2 + 2 + 2 in Z2 * Z2
        assert_eq!(z2z2().element_ball(3).len(), 7);
        // Z2 * Z3: lengths 0..=2 give 1 + (1 + 2) + (2 + 2)
        assert_eq!(z2z3().element_ball(2).len(), 8);
    }
}
