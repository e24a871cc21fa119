//! Finite groups given by multiplication tables, and the descriptors that
//! label the vertices of a graph product.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Orders above this are refused by [`MultTable::automorphisms`] unless the
/// caller raises the bound.
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 12;

/// Which group axiom a raw table violates, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    NotSquare { row: usize, len: usize },
    OutOfRange { row: usize, col: usize, value: usize },
    Identity { element: usize },
    NoInverse { element: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    NotLatin { row: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Empty => write!(f, "table has no elements"),
            Violation::NotSquare { row, len } => write!(f, "row {row} has {len} entries"),
            Violation::OutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} is not an element index")
            }
            Violation::Identity { element } => {
                write!(f, "element 0 does not act as identity on {element}")
            }
            Violation::NoInverse { element } => write!(f, "no inverse for element {element}"),
            Violation::NotAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
            Violation::NotLatin { row } => write!(f, "row {row} is not a permutation"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(Violation),
    #[error("group of order {order} exceeds the automorphism enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("cyclic group Z/{0} must have order at least 2")]
    TrivialCyclic(u64),
    #[error("vertex groups must be non-trivial")]
    TrivialTable,
}

/// A finite group by its multiplication table; element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct MultTable {
    order: usize,
    product: Vec<usize>,
    inverse: Vec<usize>,
}

impl fmt::Debug for MultTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultTable").field("order", &self.order).finish_non_exhaustive()
    }
}

impl MultTable {
    /// Checks every group axiom exhaustively.
    pub fn validate(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let bad = |v| Err(GroupError::NotAGroup(v));
        let n = rows.len();
        if n == 0 {
            return bad(Violation::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return bad(Violation::NotSquare { row, len: r.len() });
            }
            if let Some(col) = r.iter().position(|&x| x >= n) {
                return bad(Violation::OutOfRange { row, col, value: r[col] });
            }
        }
        for x in 0..n {
            if rows[0][x] != x || rows[x][0] != x {
                return bad(Violation::Identity { element: x });
            }
        }
        let mut inverse = vec![0; n];
        for x in 0..n {
            match (0..n).find(|&y| rows[x][y] == 0 && rows[y][x] == 0) {
                Some(y) => inverse[x] = y,
                None => return bad(Violation::NoInverse { element: x }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return bad(Violation::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // implied by the axioms above; kept as an explicit final check
        for (row, r) in rows.iter().enumerate() {
            let distinct: BTreeSet<_> = r.iter().collect();
            if distinct.len() != n {
                return bad(Violation::NotLatin { row });
            }
        }
        Ok(Self { order: n, product: rows.concat(), inverse })
    }

    /// `Z/n` with element `k` standing for the residue `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::validate(rows).expect("cyclic table is a group")
    }

    /// The group generated by permutations of `0..degree`, composed as
    /// functions (`(p * q)(i) = p(q(i))`). Elements are numbered in
    /// breadth-first order from the identity over the given generators.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let next: Vec<usize> = (0..degree).map(|k| g[elements[i][k]]).collect();
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let rows = elements
            .iter()
            .map(|p| {
                elements
                    .iter()
                    .map(|q| index[&(0..degree).map(|k| p[q[k]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        Self::validate(rows).expect("permutation closure is a group")
    }

    /// The symmetric group on three letters.
    pub fn symmetric3() -> Self {
        Self::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// The dihedral group of order `2n` acting on the vertices of an n-gon.
    pub fn dihedral(n: usize) -> Self {
        let rotation = (0..n).map(|k| (k + 1) % n).collect();
        let reflection = (0..n).map(|k| (n - k) % n).collect();
        Self::from_permutations(n, &[rotation, reflection])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.product.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with every element, in increasing order.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// The subgroup generated by `gens`, in increasing order.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure(gens).len() == self.order
    }

    /// A deterministic generating set: repeatedly add the smallest element not
    /// yet in the generated subgroup.
    pub fn canonical_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        while span.len() < self.order {
            let next = (1..self.order).find(|x| span.binary_search(x).is_err()).unwrap();
            gens.push(next);
            span = self.closure(&gens);
        }
        gens
    }

    /// The quotient by a normal subgroup, cosets numbered by their minimal
    /// element. Returns the table and the map element → coset index.
    pub fn quotient(&self, normal: &[usize]) -> (MultTable, Vec<usize>) {
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] == usize::MAX {
                for &h in normal {
                    coset_of[self.mul(g, h)] = reps.len();
                }
                reps.push(g);
            }
        }
        let rows = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect())
            .collect();
        let table = MultTable::validate(rows).expect("quotient by a normal subgroup is a group");
        (table, coset_of)
    }

    pub fn central_quotient(&self) -> MultTable {
        self.quotient(&self.center()).0
    }

    fn preserves_product(&self, map: &[usize]) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| map[self.mul(a, b)] == self.mul(map[a], map[b])))
    }

    /// All automorphisms, as permutations of element indices, in
    /// lexicographic order. The identity comes first.
    ///
    /// An automorphism is determined by where it sends
    /// [`canonical_generators`](Self::canonical_generators); candidate images
    /// are searched with matching element orders and each candidate is
    /// extended along a breadth-first spanning tree, then checked to be a
    /// bijective homomorphism.
    pub fn automorphisms(&self, bound: usize) -> Result<Vec<Vec<usize>>, GroupError> {
        if self.order > bound {
            return Err(GroupError::OrderTooLarge { order: self.order, bound });
        }
        let gens = self.canonical_generators();
        // Spanning tree: every element as (parent element, generator slot).
        let mut via = vec![None; self.order];
        let mut bfs = vec![0];
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut i = 0;
        while i < bfs.len() {
            let x = bfs[i];
            for (slot, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, slot));
                    bfs.push(y);
                }
            }
            i += 1;
        }
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let ord = self.element_order(g);
                (1..self.order).filter(|&y| self.element_order(y) == ord).collect()
            })
            .collect();

        let mut out = Vec::new();
        let mut images = vec![0; gens.len()];
        self.search_images(&candidates, &mut images, 0, &bfs, &via, &mut out);
        out.sort();
        Ok(out)
    }

    fn search_images(
        &self,
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        depth: usize,
        bfs: &[usize],
        via: &[Option<(usize, usize)>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == candidates.len() {
            let mut map = vec![0; self.order];
            for &x in &bfs[1..] {
                let (parent, slot) = via[x].unwrap();
                map[x] = self.mul(map[parent], images[slot]);
            }
            let mut hit = vec![false; self.order];
            let bijective = map.iter().all(|&y| !std::mem::replace(&mut hit[y], true));
            if bijective && self.preserves_product(&map) {
                out.push(map);
            }
            return;
        }
        for &y in &candidates[depth] {
            images[depth] = y;
            self.search_images(candidates, images, depth + 1, bfs, via, out);
        }
    }
}

/// Three-valued truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn not(self) -> Self {
        match self {
            Tri::Yes => Tri::No,
            Tri::No => Tri::Yes,
            Tri::Unknown => Tri::Unknown,
        }
    }

    /// Kleene disjunction: `Yes` dominates.
    pub fn or(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::Yes, _) | (_, Tri::Yes) => Tri::Yes,
            (Tri::No, Tri::No) => Tri::No,
            _ => Tri::Unknown,
        }
    }

    /// Kleene conjunction: `No` dominates.
    pub fn and(self, other: Tri) -> Tri {
        self.not().or(other.not()).not()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Properties of the central quotient `G/Z(G)` of a vertex group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientFlags {
    pub kazhdan_t: Tri,
    pub sq_universal: Tri,
    pub many_quasimorphisms: Tri,
    pub boundedly_generated: Tri,
}

impl QuotientFlags {
    /// The flags of any finite group.
    pub const FINITE: QuotientFlags = QuotientFlags {
        kazhdan_t: Tri::Yes,
        sq_universal: Tri::No,
        many_quasimorphisms: Tri::No,
        boundedly_generated: Tri::Yes,
    };

    pub const UNKNOWN: QuotientFlags = QuotientFlags {
        kazhdan_t: Tri::Unknown,
        sq_universal: Tri::Unknown,
        many_quasimorphisms: Tri::Unknown,
        boundedly_generated: Tri::Unknown,
    };
}

/// The group labelling a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Z2,
    Cyclic(u64),
    InfiniteCyclic,
    Table(MultTable),
    /// A group known only through flags about its central quotient.
    Opaque(QuotientFlags),
}

impl GroupDescriptor {
    pub fn check(&self) -> Result<(), GroupError> {
        match self {
            GroupDescriptor::Cyclic(n) if *n < 2 => Err(GroupError::TrivialCyclic(*n)),
            GroupDescriptor::Table(t) if t.order() < 2 => Err(GroupError::TrivialTable),
            _ => Ok(()),
        }
    }

    /// Order of the group when it is finite and known.
    pub fn finite_order(&self) -> Option<usize> {
        match self {
            GroupDescriptor::Z2 => Some(2),
            GroupDescriptor::Cyclic(n) => Some(*n as usize),
            GroupDescriptor::Table(t) => Some(t.order()),
            GroupDescriptor::InfiniteCyclic | GroupDescriptor::Opaque(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.finite_order().is_some()
    }

    /// Whether the label is (isomorphic to) the cyclic group of order two.
    /// Opaque labels never count: a user who means `Z2` says so.
    pub fn is_z2(&self) -> bool {
        self.finite_order() == Some(2)
    }

    /// A multiplication table for finite labels.
    pub fn table(&self) -> Option<MultTable> {
        match self {
            GroupDescriptor::Z2 => Some(MultTable::cyclic(2)),
            GroupDescriptor::Cyclic(n) => Some(MultTable::cyclic(*n as usize)),
            GroupDescriptor::Table(t) => Some(t.clone()),
            _ => None,
        }
    }

    pub fn quotient_flags(&self) -> QuotientFlags {
        match self {
            // finite groups, and Z whose central quotient is trivial
            GroupDescriptor::Z2
            | GroupDescriptor::Cyclic(_)
            | GroupDescriptor::Table(_)
            | GroupDescriptor::InfiniteCyclic => QuotientFlags::FINITE,
            GroupDescriptor::Opaque(flags) => *flags,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Z2 => write!(f, "Z2"),
            GroupDescriptor::Cyclic(n) => write!(f, "Z/{n}"),
            GroupDescriptor::InfiniteCyclic => write!(f, "Z"),
            GroupDescriptor::Table(t) => write!(f, "table(order {})", t.order()),
            GroupDescriptor::Opaque(q) => write!(
                f,
                "opaque{{T={},SQ={},QH={},BG={}}}",
                q.kazhdan_t, q.sq_universal, q.many_quasimorphisms, q.boundedly_generated
            ),
        }
    }
}
