//! Graph and table files, word literals, and the `gpkit` subcommands.
//!
//! Graph files are line oriented:
//!
//! ```text
//! # comments and blank lines are ignored
//! vertex a Z2
//! vertex b Z/3
//! vertex c Z
//! vertex d table:s3.tbl
//! vertex e opaque{T=yes,SQ=no,QH=unknown,BG=yes}
//! edge a b
//! ```
//!
//! Table paths are resolved relative to the graph file. A table file holds
//! the order `n` on its first line and then `n` rows of `n` element indices;
//! index 0 is the identity.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::bass_serre::{FreeProduct, Side, TreeError};
use crate::classifier::{self, ClassificationReport, ClassifyError, Vastness};
use crate::graph_core::SimplicialGraph;
use crate::group_engine::{GroupDescriptor, GroupError, MultTable, QuotientFlags, Tri, DEFAULT_AUTOMORPHISM_BOUND};
use crate::labeled::{LabelError, LabeledGraph};
use crate::word_engine::{Factor, GraphProduct, Syllable, WordError};

pub const DEFAULT_RADIUS: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: duplicate vertex `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: edge references undeclared vertex `{id}`")]
    UnknownVertexInEdge { line: usize, id: String },
    #[error("line {line}: self-loop at `{id}`")]
    SelfLoop { line: usize, id: String },
    #[error("line {line}: duplicate edge {{{a}, {b}}}")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("table `{path}`: {source}")]
    Table { path: String, source: Box<CliError> },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("bad word literal `{0}`")]
    BadLiteral(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

fn parse_err(line: usize, reason: impl Into<String>) -> CliError {
    CliError::Parse { line, reason: reason.into() }
}

/// A vertex label as written in a graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescriptorSpec {
    Z2,
    Cyclic(u64),
    Integers,
    Table(String),
    Opaque(QuotientFlags),
}

impl fmt::Display for DescriptorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescriptorSpec::Z2 => write!(f, "Z2"),
            DescriptorSpec::Cyclic(n) => write!(f, "Z/{n}"),
            DescriptorSpec::Integers => write!(f, "Z"),
            DescriptorSpec::Table(p) => write!(f, "table:{p}"),
            DescriptorSpec::Opaque(q) => write!(
                f,
                "opaque{{T={},SQ={},QH={},BG={}}}",
                q.kazhdan_t, q.sq_universal, q.many_quasimorphisms, q.boundedly_generated
            ),
        }
    }
}

fn parse_tri(s: &str) -> Option<Tri> {
    match s {
        "yes" => Some(Tri::Yes),
        "no" => Some(Tri::No),
        "unknown" => Some(Tri::Unknown),
        _ => None,
    }
}

impl DescriptorSpec {
    fn parse(s: &str, line: usize) -> Result<Self, CliError> {
        if s == "Z2" {
            return Ok(DescriptorSpec::Z2);
        }
        if s == "Z" {
            return Ok(DescriptorSpec::Integers);
        }
        if let Some(n) = s.strip_prefix("Z/") {
            let n: u64 = n.parse().map_err(|_| parse_err(line, format!("bad cyclic order `{n}`")))?;
            if n < 2 {
                return Err(parse_err(line, format!("Z/{n} is trivial; vertex groups must be non-trivial")));
            }
            return Ok(DescriptorSpec::Cyclic(n));
        }
        if let Some(p) = s.strip_prefix("table:") {
            if p.is_empty() {
                return Err(parse_err(line, "empty table path"));
            }
            return Ok(DescriptorSpec::Table(p.to_owned()));
        }
        if let Some(body) = s.strip_prefix("opaque{").and_then(|r| r.strip_suffix('}')) {
            let mut flags = QuotientFlags::UNKNOWN;
            for item in body.split(',').map(str::trim).filter(|i| !i.is_empty()) {
                let (key, val) =
                    item.split_once('=').ok_or_else(|| parse_err(line, format!("bad opaque flag `{item}`")))?;
                let val = parse_tri(val.trim())
                    .ok_or_else(|| parse_err(line, format!("flag value must be yes|no|unknown, got `{val}`")))?;
                match key.trim() {
                    "T" => flags.kazhdan_t = val,
                    "SQ" => flags.sq_universal = val,
                    "QH" => flags.many_quasimorphisms = val,
                    "BG" => flags.boundedly_generated = val,
                    other => return Err(parse_err(line, format!("unknown opaque flag `{other}`"))),
                }
            }
            return Ok(DescriptorSpec::Opaque(flags));
        }
        Err(parse_err(line, format!("unknown group descriptor `{s}`")))
    }
}

/// The syntactic content of a graph file, before table files are loaded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphFile {
    pub vertices: Vec<(String, DescriptorSpec)>,
    pub edges: Vec<(String, String)>,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut file = GraphFile::default();
        let mut ids = HashSet::new();
        let mut edges = HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut parts = content.splitn(2, char::is_whitespace);
            let keyword = parts.next().unwrap_or("");
            let rest = parts.next().unwrap_or("").trim();
            match keyword {
                "vertex" => {
                    let (id, desc) = rest
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| parse_err(line, "expected `vertex <id> <descriptor>`"))?;
                    if !valid_id(id) {
                        return Err(parse_err(line, format!("bad vertex id `{id}`")));
                    }
                    if !ids.insert(id.to_owned()) {
                        return Err(CliError::DuplicateVertex { line, id: id.to_owned() });
                    }
                    let desc = DescriptorSpec::parse(desc.trim(), line)?;
                    file.vertices.push((id.to_owned(), desc));
                }
                "edge" => {
                    let ends: Vec<&str> = rest.split_whitespace().collect();
                    let [a, b] = ends[..] else {
                        return Err(parse_err(line, "expected `edge <id> <id>`"));
                    };
                    for id in [a, b] {
                        if !ids.contains(id) {
                            return Err(CliError::UnknownVertexInEdge { line, id: id.to_owned() });
                        }
                    }
                    if a == b {
                        return Err(CliError::SelfLoop { line, id: a.to_owned() });
                    }
                    let key = if a < b { (a.to_owned(), b.to_owned()) } else { (b.to_owned(), a.to_owned()) };
                    if !edges.insert(key) {
                        return Err(CliError::DuplicateEdge { line, a: a.to_owned(), b: b.to_owned() });
                    }
                    file.edges.push((a.to_owned(), b.to_owned()));
                }
                other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
            }
        }
        if file.vertices.is_empty() {
            return Err(parse_err(0, "graph has no vertices"));
        }
        Ok(file)
    }

    /// Loads tables through `load` (path → file contents) and validates.
    pub fn resolve(
        &self,
        mut load: impl FnMut(&str) -> Result<String, CliError>,
    ) -> Result<LabeledGraph, CliError> {
        let names: Vec<&str> = self.vertices.iter().map(|(id, _)| id.as_str()).collect();
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let graph = SimplicialGraph::new(&names, &edges).map_err(|e| parse_err(0, e.to_string()))?;
        let mut labels = Vec::with_capacity(self.vertices.len());
        for (_, spec) in &self.vertices {
            labels.push(match spec {
                DescriptorSpec::Z2 => GroupDescriptor::Z2,
                DescriptorSpec::Cyclic(n) => GroupDescriptor::Cyclic(*n),
                DescriptorSpec::Integers => GroupDescriptor::InfiniteCyclic,
                DescriptorSpec::Opaque(q) => GroupDescriptor::Opaque(*q),
                DescriptorSpec::Table(path) => {
                    let wrap = |e: CliError| CliError::Table { path: path.clone(), source: Box::new(e) };
                    let text = load(path).map_err(wrap)?;
                    GroupDescriptor::Table(parse_table(&text).map_err(wrap)?)
                }
            });
        }
        Ok(LabeledGraph::new(graph, labels)?)
    }
}

impl fmt::Display for GraphFile {
    /// Canonical form: all vertices in declaration order, then all edges.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, desc) in &self.vertices {
            writeln!(f, "vertex {id} {desc}")?;
        }
        for (a, b) in &self.edges {
            writeln!(f, "edge {a} {b}")?;
        }
        Ok(())
    }
}

pub fn parse_table(text: &str) -> Result<MultTable, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "empty table file"))?;
    let n: usize = header.parse().map_err(|_| parse_err(first, format!("bad order `{header}`")))?;
    let mut rows = Vec::with_capacity(n);
    for (line, l) in lines {
        let row = l
            .split_whitespace()
            .map(|x| x.parse::<usize>().map_err(|_| parse_err(line, format!("bad entry `{x}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(parse_err(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(0, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(MultTable::validate(rows)?)
}

pub fn format_table(t: &MultTable) -> String {
    let mut out = format!("{}\n", t.order());
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Parses a graph file whose table paths are relative to `base_dir`.
pub fn parse_graph_file(text: &str, base_dir: &Path) -> Result<LabeledGraph, CliError> {
    GraphFile::parse(text)?.resolve(|p| read(&base_dir.join(p)))
}

pub fn load_graph(path: &Path) -> Result<LabeledGraph, CliError> {
    let text = read(path)?;
    parse_graph_file(&text, path.parent().unwrap_or(Path::new(".")))
}

/// Parses `a[1]*b^-2*c` into raw syllables. `v[i]` is element `i` of a
/// finite factor (exponent `i` for `Z`); `v^k` and bare `v` are powers of
/// element 1. `1` or an empty literal is the identity.
pub fn parse_word(gp: &GraphProduct, literal: &str) -> Result<Vec<Syllable>, CliError> {
    let bad = || CliError::BadLiteral(literal.to_owned());
    let mut out = Vec::new();
    let trimmed = literal.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(out);
    }
    for token in trimmed.split('*').map(str::trim) {
        if token == "1" {
            continue;
        }
        let (name, element) = if let Some((name, rest)) = token.split_once('[') {
            let idx: i64 = rest.strip_suffix(']').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            (name.trim(), Element::Index(idx))
        } else if let Some((name, k)) = token.split_once('^') {
            (name.trim(), Element::Power(k.trim().parse().map_err(|_| bad())?))
        } else {
            (token, Element::Power(1))
        };
        let v = gp.index_of(name).ok_or_else(|| CliError::UnknownVertex(name.to_owned()))?;
        let e = match (element, gp.factor(v)) {
            (Element::Index(i), _) => i,
            (Element::Power(k), Factor::Integers) => k,
            (Element::Power(k), f @ Factor::Finite(_)) => f.pow(1, k),
        };
        out.push(Syllable::new(v, e));
    }
    Ok(out)
}

enum Element {
    Index(i64),
    Power(i64),
}

#[derive(Debug, Parser)]
#[command(name = "gpkit", about = "Graph products: classification verdicts, normal forms and Bass-Serre certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every classification criterion on a labelled graph
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also evaluate a named vastness property
        #[arg(long)]
        property: Option<String>,
        /// Accept a --property outside the built-in three, on the caller's word
        /// that it satisfies the five closure conditions
        #[arg(long = "assume-conditions-i-v")]
        assume_conditions: bool,
    },
    /// Join decomposition, SIL, molecularity and complement degrees
    GraphInfo {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Normal form of a word literal
    Word {
        file: PathBuf,
        #[arg(long)]
        compute: String,
        /// Also map the word onto the free product of two non-adjacent vertices
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        retract: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Bass-Serre tree of G_u * G_v: axis of an element or a WPD certificate
    #[command(group(ArgGroup::new("mode").required(true).args(["axis", "wpd"])))]
    Tree {
        file: PathBuf,
        #[arg(short = 'u')]
        u: String,
        #[arg(short = 'v')]
        v: String,
        /// Word literal over the whole graph; it is retracted onto G_u * G_v
        #[arg(long)]
        axis: Option<String>,
        #[arg(long)]
        wpd: bool,
        #[arg(long = "gens-a", num_args = 1..)]
        gens_a: Option<Vec<usize>>,
        #[arg(long = "gens-b", num_args = 1..)]
        gens_b: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
        #[arg(long = "aut-bound", default_value_t = DEFAULT_AUTOMORPHISM_BOUND)]
        aut_bound: usize,
        #[arg(long)]
        json: bool,
    },
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn vastness_from_name(name: &str, assume: bool) -> Result<Vastness, CliError> {
    match name {
        "sq-universal" | "SQ" => Ok(Vastness::SqUniversal),
        "many-quasimorphisms" | "QH" => Ok(Vastness::ManyQuasimorphisms),
        "not-boundedly-generated" | "notBG" => Ok(Vastness::NotBoundedlyGenerated),
        other if assume => Ok(Vastness::Assumed(other.to_owned())),
        other => Err(CliError::Usage(format!(
            "property `{other}` is not one of sq-universal, many-quasimorphisms, not-boundedly-generated; \
             pass --assume-conditions-i-v to evaluate it anyway"
        ))),
    }
}

/// Runs a parsed command and returns what it prints on standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify { file, json, property, assume_conditions } => {
            let lg = load_graph(file)?;
            let extra = property.as_deref().map(|p| vastness_from_name(p, *assume_conditions)).transpose()?;
            let report = classifier::classify(&lg, extra.as_ref());
            Ok(if *json { to_json(&report) } else { render_report(&report) })
        }
        Command::GraphInfo { file, json } => {
            let lg = load_graph(file)?;
            let info = graph_info(lg.graph());
            Ok(if *json { to_json(&info) } else { render_graph_info(&info) })
        }
        Command::Word { file, compute, retract, json } => {
            let lg = load_graph(file)?;
            let gp = GraphProduct::new(&lg)?;
            let w = gp.normal_form(&parse_word(&gp, compute)?)?;
            let retracted = match retract.as_deref() {
                Some([u, v]) => {
                    let (u, v) = (vertex(&gp, u)?, vertex(&gp, v)?);
                    Some(gp.format(&gp.retract(&w, u, v)?))
                }
                _ => None,
            };
            let out = WordOutput { input: compute.clone(), normal_form: gp.format(&w), length: w.len(), retract: retracted };
            Ok(if *json {
                to_json(&out)
            } else {
                let mut s = format!("{}\n", out.normal_form);
                if let Some(r) = &out.retract {
                    let _ = writeln!(s, "retract: {r}");
                }
                s
            })
        }
        Command::Tree { file, u, v, axis, wpd, gens_a, gens_b, radius, aut_bound, json } => {
            let lg = load_graph(file)?;
            let gp = GraphProduct::new(&lg)?;
            let (ui, vi) = (vertex(&gp, u)?, vertex(&gp, v)?);
            let fp = FreeProduct::from_graph_product(&gp, ui, vi)?;
            if *wpd {
                let ga = gens_a.clone().unwrap_or_else(|| fp.table(Side::A).canonical_generators());
                let gb = gens_b.clone().unwrap_or_else(|| fp.table(Side::B).canonical_generators());
                let cert = fp.wpd_certificate(&ga, &gb, *aut_bound)?;
                let out = WpdOutput::new(&fp, &cert);
                Ok(if *json { to_json(&out) } else { render_wpd(&out) })
            } else {
                let literal = axis.as_deref().expect("clap enforces --axis or --wpd");
                let w = gp.normal_form(&parse_word(&gp, literal)?)?;
                let g = fp.project(&gp, ui, vi, &w)?;
                let data = fp.translation_data(&g);
                let ball = fp.ball(&FreeProduct::base(Side::A), *radius);
                let ball_min = ball.iter().map(|x| fp.tree_distance(x, &fp.act(&g, x))).min().unwrap_or(0);
                let out = AxisOutput {
                    element: fp.format_element(&g),
                    translation_length: data.translation_length,
                    elliptic: data.is_elliptic(),
                    segment: data.segment.iter().map(|x| fp.format_vertex(x)).collect(),
                    radius: *radius,
                    ball_minimum_displacement: ball_min,
                };
                Ok(if *json { to_json(&out) } else { render_axis(&out) })
            }
        }
    }
}

fn vertex(gp: &GraphProduct, name: &str) -> Result<usize, CliError> {
    gp.index_of(name).ok_or_else(|| CliError::UnknownVertex(name.to_owned()))
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct WordOutput {
    input: String,
    normal_form: String,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    retract: Option<String>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct AxisOutput {
    element: String,
    translation_length: usize,
    elliptic: bool,
    segment: Vec<String>,
    radius: usize,
    ball_minimum_displacement: usize,
}

fn render_axis(a: &AxisOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "element: {}", a.element);
    let _ = writeln!(s, "translation length: {}{}", a.translation_length, if a.elliptic { " (elliptic)" } else { "" });
    let _ = writeln!(s, "{}: {}", if a.elliptic { "fixed vertex" } else { "segment" }, a.segment.join(" - "));
    let _ = writeln!(s, "minimum displacement on the radius-{} ball: {}", a.radius, a.ball_minimum_displacement);
    s
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WpdOutput {
    pub g: String,
    pub gens_a: Vec<usize>,
    pub gens_b: Vec<usize>,
    pub translation_length: usize,
    pub axis_vertices: Vec<String>,
    pub on_axis: Vec<bool>,
    pub stabilizer_pairs_checked: usize,
    pub survivors: usize,
    pub survivor_pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub valid: bool,
}

impl WpdOutput {
    fn new(fp: &FreeProduct, cert: &crate::bass_serre::WpdCertificate) -> Self {
        Self {
            g: fp.format_element(&cert.g),
            gens_a: cert.gens_a.clone(),
            gens_b: cert.gens_b.clone(),
            translation_length: cert.axis.translation_length,
            axis_vertices: cert.axis_vertices.iter().map(|x| fp.format_vertex(x)).collect(),
            on_axis: cert.on_axis.to_vec(),
            stabilizer_pairs_checked: cert.stabilizer_pairs_checked,
            survivors: cert.survivors.len(),
            survivor_pairs: cert.survivors.clone(),
            valid: cert.is_valid() && cert.axis_contains_all(),
        }
    }
}

fn render_wpd(w: &WpdOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "g = {}", w.g);
    let _ = writeln!(s, "translation length: {}", w.translation_length);
    let marks: Vec<String> = w
        .axis_vertices
        .iter()
        .zip(&w.on_axis)
        .map(|(x, on)| format!("{x}{}", if *on { "" } else { " (off axis!)" }))
        .collect();
    let _ = writeln!(s, "axis vertices: {}", marks.join(", "));
    let _ = writeln!(s, "automorphism pairs checked: {}", w.stabilizer_pairs_checked);
    let _ = writeln!(s, "survivors: {}", w.survivors);
    let _ = writeln!(s, "certificate: {}", if w.valid { "valid" } else { "INVALID" });
    s
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphInfo {
    pub vertices: Vec<String>,
    pub lambda: Vec<String>,
    pub xi: Vec<String>,
    pub complete: bool,
    pub complete_join_pairs: bool,
    pub sil: Option<SilInfo>,
    pub molecular: bool,
    pub girth: Option<usize>,
    pub complement_degrees: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct SilInfo {
    pub u: String,
    pub v: String,
    pub component: Vec<String>,
}

pub fn graph_info(g: &SimplicialGraph) -> GraphInfo {
    let name_list = |vs: &[usize]| vs.iter().map(|&v| g.name(v).to_owned()).collect::<Vec<_>>();
    let join = g.join_decompose();
    GraphInfo {
        vertices: g.names().to_vec(),
        lambda: name_list(&join.lambda),
        xi: name_list(&join.xi),
        complete: g.is_complete(),
        complete_join_pairs: g.matches_complete_join_pairs(),
        sil: g.find_sil().map(|s| SilInfo {
            u: g.name(s.u).to_owned(),
            v: g.name(s.v).to_owned(),
            component: name_list(&s.component),
        }),
        molecular: g.is_molecular(),
        girth: g.girth(),
        complement_degrees: g.complement_degrees(),
    }
}

fn set(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn render_graph_info(i: &GraphInfo) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "join: Λ = {}, Ξ = {}", set(&i.lambda), set(&i.xi));
    let _ = writeln!(s, "complete: {}", i.complete);
    let _ = writeln!(s, "complete join of pairs: {}", i.complete_join_pairs);
    match &i.sil {
        Some(w) => {
            let _ = writeln!(s, "SIL: ({}, {}) component {}", w.u, w.v, set(&w.component));
        }
        None => {
            let _ = writeln!(s, "SIL: none");
        }
    }
    let _ = writeln!(s, "molecular: {}", i.molecular);
    let _ = writeln!(s, "girth: {}", i.girth.map_or("∞".to_owned(), |g| g.to_string()));
    let degrees: Vec<String> = i.vertices.iter().zip(&i.complement_degrees).map(|(v, d)| format!("{v}:{d}")).collect();
    let _ = writeln!(s, "complement degrees: {}", degrees.join(" "));
    s
}

pub fn render_report(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "join: Λ = {}, Ξ = {}", set(&r.join.lambda), set(&r.join.xi));
    let _ = writeln!(s, "property (T): {}", r.verdicts.property_t);
    let _ = writeln!(s, "SQ-universal: {}", r.verdicts.sq_universal);
    let _ = writeln!(s, "virtually many quasimorphisms: {}", r.verdicts.many_quasimorphisms);
    let _ = writeln!(s, "boundedly generated: {}", r.verdicts.boundedly_generated);
    if let Some(a) = &r.assumed_property {
        let _ = writeln!(s, "{} (assumed admissible): {}", a.property, a.value);
    }
    if let Some(e) = &r.proposition_e {
        let _ = writeln!(
            s,
            "proposition E: (i)-(v) = {}, (vi) = {}, virtually abelian = {}{}",
            e.i,
            e.vi,
            e.virtually_abelian,
            if e.consistent { "" } else { " INCONSISTENT" }
        );
    }
    if let Some(f) = r.finite_corollary {
        let _ = writeln!(s, "Aut has (T) (finite vertex groups): {f}");
    }
    if let Some(m) = r.molecular_corollary {
        let _ = writeln!(s, "Aut has (T) (molecular graph): {m}");
    }
    if let Some(l) = &r.racg {
        let _ = writeln!(s, "C_Γ large: {}", l.large);
    }
    let _ = writeln!(s, "reasons:");
    for reason in &r.reasons {
        let _ = writeln!(s, "  - {reason}");
    }
    if !r.notes.is_empty() {
        let _ = writeln!(s, "notes:");
        for note in &r.notes {
            let _ = writeln!(s, "  - {note}");
        }
    }
    s
}
