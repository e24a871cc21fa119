//! Verdicts on the automorphism groups of a graph product.
//!
//! Every criterion here is a finite combination of the graph tests in
//! [`graph_core`](crate::graph_core) and the per-vertex flags about central
//! quotients. Verdicts are three-valued: `unknown` appears only when an
//! opaque vertex group leaves a clause undecided that could change the
//! answer.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph_core::{JoinDecomposition, SimplicialGraph};
use crate::group_engine::{GroupDescriptor, Tri};
use crate::labeled::LabeledGraph;

const THM_T: &str = "Theorem A";
const PROP_RACG: &str = "RACG proposition";
const LEMMA_LARGE: &str = "RACG largeness lemma";
const PROP_E: &str = "Proposition E";
const COR_FINITE: &str = "Corollary (finite vertex groups)";
const COR_MOLECULAR: &str = "Corollary (molecular graphs)";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("vertex `{0}` is not labelled by a finite group")]
    NonFiniteLabel(String),
    #[error("the graph is not molecular, a single vertex, or a single edge")]
    NotMolecular,
}

/// A group property to which the vastness criterion applies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Vastness {
    SqUniversal,
    ManyQuasimorphisms,
    NotBoundedlyGenerated,
    /// A user-named property the caller asserts satisfies the five closure
    /// conditions (acylindrically hyperbolic groups have it; it passes to
    /// extensions, is a commensurability invariant, holds for a direct sum
    /// iff for a factor, and fails for free abelian groups).
    Assumed(String),
}

impl Vastness {
    pub const ADMISSIBLE: [Vastness; 3] =
        [Vastness::SqUniversal, Vastness::ManyQuasimorphisms, Vastness::NotBoundedlyGenerated];

    pub fn name(&self) -> &str {
        match self {
            Vastness::SqUniversal => "SQ-universal",
            Vastness::ManyQuasimorphisms => "virtually many quasimorphisms",
            Vastness::NotBoundedlyGenerated => "not boundedly generated",
            Vastness::Assumed(name) => name,
        }
    }

    fn theorem(&self) -> &'static str {
        match self {
            Vastness::SqUniversal => "Theorem B",
            Vastness::ManyQuasimorphisms => "Theorem C",
            Vastness::NotBoundedlyGenerated => "Theorem D",
            Vastness::Assumed(_) => "Theorem F",
        }
    }

    /// Whether `G/Z(G)` has the property, for the group labelling a vertex.
    pub fn quotient_flag(&self, label: &GroupDescriptor) -> Tri {
        let flags = label.quotient_flags();
        match self {
            Vastness::SqUniversal => flags.sq_universal,
            Vastness::ManyQuasimorphisms => flags.many_quasimorphisms,
            Vastness::NotBoundedlyGenerated => flags.boundedly_generated.not(),
            // finite (or trivial) quotients are virtually free abelian of rank 0
            Vastness::Assumed(_) => match label {
                GroupDescriptor::Opaque(_) => Tri::Unknown,
                _ => Tri::No,
            },
        }
    }
}

/// A three-valued answer with the clauses that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: Tri,
    pub reasons: Vec<String>,
}

fn names(g: &SimplicialGraph, vs: &[usize]) -> String {
    if vs.is_empty() {
        return "∅".to_owned();
    }
    let list: Vec<&str> = vs.iter().map(|&v| g.name(v)).collect();
    format!("{{{}}}", list.join(", "))
}

fn first_non_edge(g: &SimplicialGraph) -> Option<(usize, usize)> {
    let n = g.len();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !g.adjacent(u, v))
}

/// Property (T) for the conjugating automorphism group.
pub fn classify_t(lg: &LabeledGraph) -> Verdict {
    let g = lg.graph();
    if let Some((u, v)) = first_non_edge(g) {
        return Verdict {
            value: Tri::No,
            reasons: vec![format!(
                "{THM_T}: Γ is not complete ({} and {} are not adjacent), so a quotient acts on a tree without fixed point",
                g.name(u),
                g.name(v)
            )],
        };
    }
    let mut value = Tri::Yes;
    let mut reasons = vec![format!("{THM_T}: Γ is complete")];
    for (v, label) in lg.labels().iter().enumerate() {
        let flag = label.quotient_flags().kazhdan_t;
        value = value.and(flag);
        if flag != Tri::Yes {
            reasons.push(format!("{THM_T}: G/Z(G) at {} ({label}) has property (T): {flag}", g.name(v)));
        }
    }
    if value == Tri::Yes {
        reasons.push(format!("{THM_T}: every central quotient G_u/Z(G_u) has property (T)"));
    }
    Verdict { value, reasons }
}

/// The vastness criterion: the property holds iff some vertex of `Ξ` is not
/// labelled by `Z2`, or some vertex of `Λ` has a central quotient with the
/// property, or `Ξ` is not a join of a complete graph with non-adjacent
/// pairs.
pub fn classify_vastness(lg: &LabeledGraph, p: &Vastness) -> Verdict {
    let g = lg.graph();
    let thm = p.theorem();
    let JoinDecomposition { lambda, xi } = g.join_decompose();
    let mut reasons = vec![format!("{thm}: Λ = {}, Ξ = {}", names(g, &lambda), names(g, &xi))];

    let non_z2: Vec<usize> = xi.iter().copied().filter(|&v| !lg.label(v).is_z2()).collect();
    let clause_labels = Tri::from_bool(!non_z2.is_empty());
    if let Some(&v) = non_z2.first() {
        reasons.push(format!(
            "{thm}: Ξ contains {} labelled by {}, which is not Z2",
            g.name(v),
            lg.label(v)
        ));
    }

    let mut clause_center = Tri::No;
    for &v in &lambda {
        let flag = p.quotient_flag(lg.label(v));
        clause_center = clause_center.or(flag);
        if flag != Tri::No {
            reasons.push(format!(
                "{thm}: {} for G/Z(G) at Λ-vertex {}: {flag}",
                p.name(),
                g.name(v)
            ));
        }
    }

    let core = g.induced(&xi);
    let clause_shape = Tri::from_bool(!core.matches_complete_join_pairs());
    if clause_shape == Tri::Yes {
        let degrees = core.complement_degrees();
        let v = (0..core.len()).find(|&v| degrees[v] >= 2).expect("some vertex has two non-neighbours");
        reasons.push(format!(
            "{thm}: Ξ is not a join of a complete graph with non-adjacent pairs ({} has {} non-neighbours in Ξ)",
            core.name(v),
            degrees[v]
        ));
    }

    let value = clause_labels.or(clause_center).or(clause_shape);
    if value == Tri::No {
        reasons.push(format!(
            "{thm}: Ξ is all Z2 and a join of a complete graph with non-adjacent pairs, and no Λ quotient G/Z(G) is flagged {}",
            p.name()
        ));
    }
    Verdict { value, reasons }
}

/// Bounded generation, the negation of [`Vastness::NotBoundedlyGenerated`].
pub fn classify_boundedly_generated(lg: &LabeledGraph) -> Verdict {
    let v = classify_vastness(lg, &Vastness::NotBoundedlyGenerated);
    Verdict { value: v.value.not(), reasons: v.reasons }
}

/// The property for `Aut(C_Γ)`, the right-angled Coxeter group on `g`.
pub fn classify_racg(g: &SimplicialGraph, p: &Vastness) -> Verdict {
    let mut reasons = Vec::new();
    let shape = g.matches_complete_join_pairs();
    if let Some(sil) = g.find_sil() {
        reasons.push(format!(
            "{PROP_RACG}: SIL at ({}, {}) with component {}, so Out(C_Γ) is large",
            g.name(sil.u),
            g.name(sil.v),
            names(g, &sil.component)
        ));
    }
    if shape {
        reasons.push(format!(
            "{PROP_RACG}: Γ is a join of a complete graph with non-adjacent pairs; {} fails",
            p.name()
        ));
    } else {
        reasons.push(format!(
            "{PROP_RACG}: Γ is not a join of a complete graph with non-adjacent pairs; {} holds",
            p.name()
        ));
    }
    Verdict { value: Tri::from_bool(!shape), reasons }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum RacgSummand {
    Z2(String),
    InfiniteDihedral(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RacgLargeness {
    pub large: bool,
    /// Present when `C_Γ` is not large: its splitting into `Z2` and `D∞`
    /// summands.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<RacgSummand>>,
}

pub fn racg_large(g: &SimplicialGraph) -> RacgLargeness {
    match g.complete_join_pairs() {
        None => RacgLargeness { large: true, decomposition: None },
        Some((singles, pairs)) => {
            let mut summands: Vec<RacgSummand> =
                singles.iter().map(|&v| RacgSummand::Z2(g.name(v).to_owned())).collect();
            summands.extend(
                pairs
                    .iter()
                    .map(|&(u, v)| RacgSummand::InfiniteDihedral(g.name(u).to_owned(), g.name(v).to_owned())),
            );
            RacgLargeness { large: false, decomposition: Some(summands) }
        }
    }
}

impl RacgSummand {
    pub fn describe(&self) -> String {
        match self {
            RacgSummand::Z2(v) => format!("Z2<{v}>"),
            RacgSummand::InfiniteDihedral(u, v) => format!("D∞<{u},{v}>"),
        }
    }
}

/// The six equivalent statements for graph products of finite groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropE {
    /// `Ξ` has a label other than `Z2`, or `Ξ` has the wrong shape.
    pub i: bool,
    /// `Aut(Γ𝒢)` involves all finite groups.
    pub ii: bool,
    /// `Aut(Γ𝒢)` is SQ-universal.
    pub iii: bool,
    /// `Aut(Γ𝒢)` virtually has many quasimorphisms.
    pub iv: bool,
    /// `Aut(Γ𝒢)` is not boundedly generated.
    pub v: bool,
    /// `Γ𝒢` is not virtually free abelian.
    pub vi: bool,
    /// Computed independently of `(i)` by searching for a subgroup that is
    /// virtually non-abelian free.
    #[serde(rename = "virtuallyAbelian")]
    pub virtually_abelian: bool,
    pub consistent: bool,
    pub reasons: Vec<String>,
}

/// A pair or triple of vertices generating a subgroup of `Γ𝒢` that is a
/// free product of finite groups other than `Z2 ∗ Z2`, hence virtually
/// non-abelian free.
fn free_subgroup_witness(lg: &LabeledGraph) -> Option<String> {
    let g = lg.graph();
    let n = g.len();
    let order = |v: usize| lg.label(v).finite_order().expect("finite labels");
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) && (order(u) > 2 || order(v) > 2) {
                return Some(format!(
                    "{} ∗ {} = {} ∗ {} embeds",
                    g.name(u),
                    g.name(v),
                    lg.label(u),
                    lg.label(v)
                ));
            }
        }
    }
    for u in 0..n {
        let far: Vec<usize> = (0..n).filter(|&w| w != u && !g.adjacent(u, w)).collect();
        if let [v, w, ..] = far[..] {
            let shape = if g.adjacent(v, w) {
                format!("{} ∗ ({} × {})", g.name(u), g.name(v), g.name(w))
            } else {
                format!("{} ∗ {} ∗ {}", g.name(u), g.name(v), g.name(w))
            };
            return Some(format!("{shape} embeds"));
        }
    }
    None
}

fn require_finite(lg: &LabeledGraph) -> Result<(), ClassifyError> {
    match lg.labels().iter().position(|l| !l.is_finite()) {
        Some(v) => Err(ClassifyError::NonFiniteLabel(lg.graph().name(v).to_owned())),
        None => Ok(()),
    }
}

pub fn classify_prop_e(lg: &LabeledGraph) -> Result<PropE, ClassifyError> {
    require_finite(lg)?;
    let g = lg.graph();
    let JoinDecomposition { xi, .. } = g.join_decompose();
    let labels_clause = xi.iter().any(|&v| !lg.label(v).is_z2());
    let shape_clause = !g.induced(&xi).matches_complete_join_pairs();
    let i = labels_clause || shape_clause;

    let mut reasons = vec![format!(
        "{PROP_E}: (i) is {i}: non-Z2 label in Ξ = {labels_clause}, Ξ fails the join shape = {shape_clause}"
    )];
    let witness = free_subgroup_witness(lg);
    let virtually_abelian = witness.is_none();
    match witness {
        Some(w) => reasons.push(format!("{PROP_E}: Γ𝒢 is not virtually abelian: {w}")),
        None => reasons.push(format!(
            "{PROP_E}: Γ𝒢 is virtually abelian: non-adjacent vertices are Z2 pairs, so Γ𝒢 is a finite group times D∞ summands"
        )),
    }
    let consistent = i == !virtually_abelian;
    if !consistent {
        reasons.push(format!("{PROP_E}: internal inconsistency between (i) and (vi)"));
    }
    Ok(PropE { i, ii: i, iii: i, iv: i, v: i, vi: !virtually_abelian, virtually_abelian, consistent, reasons })
}

/// `Aut(Γ𝒢)` has property (T) iff `Γ𝒢` is finite, for finite vertex groups.
pub fn classify_finite_corollary(lg: &LabeledGraph) -> Result<Verdict, ClassifyError> {
    require_finite(lg)?;
    let g = lg.graph();
    Ok(match first_non_edge(g) {
        None => Verdict {
            value: Tri::Yes,
            reasons: vec![format!("{COR_FINITE}: Γ is complete, so Γ𝒢 is a finite direct sum")],
        },
        Some((u, v)) => Verdict {
            value: Tri::No,
            reasons: vec![format!(
                "{COR_FINITE}: {} and {} are not adjacent, so Γ𝒢 is infinite",
                g.name(u),
                g.name(v)
            )],
        },
    })
}

/// Property (T) for `Aut(Γ𝒢)` over a molecular graph, a single vertex or a
/// single edge.
pub fn classify_molecular(lg: &LabeledGraph) -> Result<Verdict, ClassifyError> {
    let g = lg.graph();
    let small = g.is_single_vertex() || g.is_single_edge();
    if !small && !g.is_molecular() {
        return Err(ClassifyError::NotMolecular);
    }
    if !small {
        return Ok(Verdict {
            value: Tri::No,
            reasons: vec![format!("{COR_MOLECULAR}: Γ is molecular and neither a single vertex nor a single edge")],
        });
    }
    let mut value = Tri::Yes;
    let mut reasons = vec![format!("{COR_MOLECULAR}: Γ is a single vertex or a single edge")];
    for (v, label) in lg.labels().iter().enumerate() {
        let flag = label.quotient_flags().kazhdan_t;
        value = value.and(flag);
        reasons.push(format!("{COR_MOLECULAR}: G/Z(G) at {} has property (T): {flag}", g.name(v)));
    }
    Ok(Verdict { value, reasons })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinReport {
    pub lambda: Vec<String>,
    pub xi: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdicts {
    pub property_t: Tri,
    pub sq_universal: Tri,
    pub many_quasimorphisms: Tri,
    pub boundedly_generated: Tri,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssumedVerdict {
    pub property: String,
    pub value: Tri,
    pub assumption: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub join: JoinReport,
    pub verdicts: Verdicts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assumed_property: Option<AssumedVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proposition_e: Option<PropE>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite_corollary: Option<Tri>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub molecular_corollary: Option<Tri>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub racg: Option<RacgLargeness>,
    pub reasons: Vec<String>,
    #[serde(default)]
    pub notes: Vec<String>,
}

/// Runs every applicable criterion. `extra` is evaluated in addition to the
/// three admissible properties.
pub fn classify(lg: &LabeledGraph, extra: Option<&Vastness>) -> ClassificationReport {
    let g = lg.graph();
    let join = g.join_decompose();
    let mut reasons = Vec::new();
    let mut notes = Vec::new();

    let t = classify_t(lg);
    let sq = classify_vastness(lg, &Vastness::SqUniversal);
    let qh = classify_vastness(lg, &Vastness::ManyQuasimorphisms);
    let bg = classify_boundedly_generated(lg);
    for v in [&t, &sq, &qh, &bg] {
        reasons.extend(v.reasons.iter().cloned());
    }

    let assumed_property = extra.map(|p| {
        let v = classify_vastness(lg, p);
        reasons.extend(v.reasons);
        AssumedVerdict {
            property: p.name().to_owned(),
            value: v.value,
            assumption: "caller asserts the property satisfies the five closure conditions".to_owned(),
        }
    });

    let (proposition_e, finite_corollary) = if lg.all_finite() {
        let e = classify_prop_e(lg).expect("finite labels");
        reasons.extend(e.reasons.iter().cloned());
        let f = classify_finite_corollary(lg).expect("finite labels");
        reasons.extend(f.reasons);
        (Some(e), Some(f.value))
    } else {
        notes.push("Proposition E and the finite-group corollary need finite vertex groups; skipped".to_owned());
        (None, None)
    };

    let molecular_corollary = match classify_molecular(lg) {
        Ok(v) => {
            reasons.extend(v.reasons);
            Some(v.value)
        }
        Err(_) => None,
    };

    let racg = lg.all_z2().then(|| {
        let l = racg_large(g);
        match &l.decomposition {
            None => reasons.push(format!("{LEMMA_LARGE}: C_Γ is large")),
            Some(parts) => {
                let parts: Vec<String> = parts.iter().map(RacgSummand::describe).collect();
                reasons.push(format!("{LEMMA_LARGE}: C_Γ = {} is not large", parts.join(" ⊕ ")))
            }
        }
        l
    });

    for (v, label) in lg.labels().iter().enumerate() {
        if let GroupDescriptor::Opaque(_) = label {
            notes.push(format!(
                "vertex {}: flags about G/Z(G) and finite generation are taken as asserted",
                g.name(v)
            ));
            if join.xi.contains(&v) {
                notes.push(format!("vertex {}: an opaque label never counts as Z2", g.name(v)));
            }
        }
    }

    ClassificationReport {
        join: JoinReport {
            lambda: join.lambda.iter().map(|&v| g.name(v).to_owned()).collect(),
            xi: join.xi.iter().map(|&v| g.name(v).to_owned()).collect(),
        },
        verdicts: Verdicts {
            property_t: t.value,
            sq_universal: sq.value,
            many_quasimorphisms: qh.value,
            boundedly_generated: bg.value,
        },
        assumed_property,
        proposition_e,
        finite_corollary,
        molecular_corollary,
        racg,
        reasons,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_engine::{MultTable, QuotientFlags};

    fn lg(names: &[&str], edges: &[(&str, &str)], labels: Vec<GroupDescriptor>) -> LabeledGraph {
        LabeledGraph::new(SimplicialGraph::new(names, edges).unwrap(), labels).unwrap()
    }

    fn s3() -> GroupDescriptor {
        GroupDescriptor::Table(MultTable::symmetric3())
    }

    fn c4() -> SimplicialGraph {
        SimplicialGraph::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
    }

    fn p4() -> SimplicialGraph {
        SimplicialGraph::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap()
    }

    fn c5() -> SimplicialGraph {
        let names: Vec<String> = ["a", "b", "c", "d", "e"].map(String::from).to_vec();
        SimplicialGraph::from_indexed(names, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()
    }

    fn z2(g: SimplicialGraph) -> LabeledGraph {
        LabeledGraph::uniform(g, GroupDescriptor::Z2).unwrap()
    }

    #[test]
    fn property_t_examples() {
        let k2 = lg(&["a", "b"], &[("a", "b")], vec![s3(), s3()]);
        assert_eq!(classify_t(&k2).value, Tri::Yes);
        let free = lg(&["a", "b"], &[], vec![GroupDescriptor::Z2, GroupDescriptor::Cyclic(3)]);
        assert_eq!(classify_t(&free).value, Tri::No);
        let opaque = GroupDescriptor::Opaque(QuotientFlags { kazhdan_t: Tri::Unknown, ..QuotientFlags::UNKNOWN });
        let k2u = lg(&["a", "b"], &[("a", "b")], vec![opaque, GroupDescriptor::Z2]);
        assert_eq!(classify_t(&k2u).value, Tri::Unknown);
    }

    #[test]
    fn vastness_examples() {
        let free = lg(&["a", "b"], &[], vec![GroupDescriptor::Z2, GroupDescriptor::Cyclic(3)]);
        let v = classify_vastness(&free, &Vastness::SqUniversal);
        assert_eq!(v.value, Tri::Yes);
        assert!(v.reasons.iter().any(|r| r.starts_with("Theorem B") && r.contains("not Z2")));

        let c4 = z2(c4());
        assert_eq!(classify_vastness(&c4, &Vastness::SqUniversal).value, Tri::No);
        assert_eq!(classify_vastness(&c4, &Vastness::ManyQuasimorphisms).value, Tri::No);
        assert_eq!(classify_boundedly_generated(&c4).value, Tri::Yes);

        assert_eq!(classify_vastness(&z2(p4()), &Vastness::SqUniversal).value, Tri::Yes);
    }

    #[test]
    fn center_clause_and_unknowns() {
        // Λ = {a} labelled by an opaque group whose quotient is SQ-universal
        let sq = GroupDescriptor::Opaque(QuotientFlags { sq_universal: Tri::Yes, ..QuotientFlags::UNKNOWN });
        let g = lg(&["a", "b", "c"], &[("a", "b"), ("a", "c")], vec![sq, GroupDescriptor::Z2, GroupDescriptor::Z2]);
        assert_eq!(classify_vastness(&g, &Vastness::SqUniversal).value, Tri::Yes);
        assert_eq!(classify_vastness(&g, &Vastness::ManyQuasimorphisms).value, Tri::Unknown);

        // a decided clause beats an unknown one
        let unk = GroupDescriptor::Opaque(QuotientFlags::UNKNOWN);
        let g = lg(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c")], vec![unk, GroupDescriptor::Z2, GroupDescriptor::Z2, GroupDescriptor::Z2]);
        assert_eq!(classify_vastness(&g, &Vastness::SqUniversal).value, Tri::Yes);

        let assumed = Vastness::Assumed("P".into());
        assert_eq!(classify_vastness(&z2(c4()), &assumed).value, Tri::No);
    }

    #[test]
    fn racg_examples() {
        let p = Vastness::SqUniversal;
        assert_eq!(classify_racg(&p4(), &p).value, Tri::Yes);
        assert_eq!(classify_racg(&c4(), &p).value, Tri::No);
        let k3 = SimplicialGraph::from_edge_mask(3, 0b111);
        assert_eq!(classify_racg(&k3, &p).value, Tri::No);
    }

    #[test]
    fn racg_largeness_examples() {
        use RacgSummand::*;
        let l = racg_large(&c4());
        assert!(!l.large);
        assert_eq!(l.decomposition.unwrap(), vec![InfiniteDihedral("a".into(), "c".into()), InfiniteDihedral("b".into(), "d".into())]);
        let k2 = SimplicialGraph::from_edge_mask(2, 1);
        assert_eq!(racg_large(&k2).decomposition.unwrap(), vec![Z2("a".into()), Z2("b".into())]);
        let apex = SimplicialGraph::new(&["x", "y", "apex"], &[("apex", "x"), ("apex", "y")]).unwrap();
        assert_eq!(
            racg_large(&apex).decomposition.unwrap(),
            vec![Z2("apex".into()), InfiniteDihedral("x".into(), "y".into())]
        );
        assert!(racg_large(&p4()).large);
    }

    #[test]
    fn prop_e_examples() {
        let e = classify_prop_e(&z2(c4())).unwrap();
        assert!(!e.i && e.virtually_abelian && e.consistent);
        let free = lg(&["a", "b"], &[], vec![GroupDescriptor::Z2, GroupDescriptor::Cyclic(3)]);
        let e = classify_prop_e(&free).unwrap();
        assert!(e.i && !e.virtually_abelian && e.vi && e.consistent);
        let e = classify_prop_e(&z2(SimplicialGraph::from_edge_mask(3, 0b111))).unwrap();
        assert!(!e.i && e.virtually_abelian);
        let z = lg(&["a"], &[], vec![GroupDescriptor::InfiniteCyclic]);
        assert_eq!(classify_prop_e(&z).unwrap_err(), ClassifyError::NonFiniteLabel("a".into()));
    }

    #[test]
    fn finite_corollary_examples() {
        let k2 = z2(SimplicialGraph::from_edge_mask(2, 1));
        assert_eq!(classify_finite_corollary(&k2).unwrap().value, Tri::Yes);
        let two = z2(SimplicialGraph::from_edge_mask(2, 0));
        assert_eq!(classify_finite_corollary(&two).unwrap().value, Tri::No);
        let k3 = LabeledGraph::new(
            SimplicialGraph::from_edge_mask(3, 0b111),
            vec![GroupDescriptor::Z2, GroupDescriptor::Cyclic(3), s3()],
        )
        .unwrap();
        assert_eq!(classify_finite_corollary(&k3).unwrap().value, Tri::Yes);
    }

    #[test]
    fn molecular_examples() {
        let edge = lg(&["a", "b"], &[("a", "b")], vec![s3(), s3()]);
        assert_eq!(classify_molecular(&edge).unwrap().value, Tri::Yes);
        assert_eq!(classify_molecular(&z2(c5())).unwrap().value, Tri::No);
        let no_t = GroupDescriptor::Opaque(QuotientFlags { kazhdan_t: Tri::No, ..QuotientFlags::UNKNOWN });
        let single = lg(&["a"], &[], vec![no_t]);
        assert_eq!(classify_molecular(&single).unwrap().value, Tri::No);
        assert_eq!(classify_molecular(&z2(c4())).unwrap_err(), ClassifyError::NotMolecular);
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = classify(&z2(c4()), Some(&Vastness::Assumed("P".into())));
        let json = serde_json::to_string(&report).unwrap();
        let back: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["verdicts"]["propertyT"], "no");
        assert_eq!(value["verdicts"]["boundedlyGenerated"], "yes");
        assert_eq!(value["propositionE"]["virtuallyAbelian"], true);
    }
}
