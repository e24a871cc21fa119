//! A simplicial graph together with a group per vertex.

use thiserror::Error;

use crate::graph_core::SimplicialGraph;
use crate::group_engine::{GroupDescriptor, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("{labels} labels for {vertices} vertices")]
    LabelCount { vertices: usize, labels: usize },
    #[error("vertex `{vertex}`: {source}")]
    BadLabel { vertex: String, source: GroupError },
}

/// The data `(Γ, 𝒢)` defining a graph product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: SimplicialGraph,
    labels: Vec<GroupDescriptor>,
}

impl LabeledGraph {
    pub fn new(graph: SimplicialGraph, labels: Vec<GroupDescriptor>) -> Result<Self, LabelError> {
        if graph.is_empty() {
            return Err(LabelError::EmptyGraph);
        }
        if labels.len() != graph.len() {
            return Err(LabelError::LabelCount { vertices: graph.len(), labels: labels.len() });
        }
        for (v, label) in labels.iter().enumerate() {
            label
                .check()
                .map_err(|source| LabelError::BadLabel { vertex: graph.name(v).to_owned(), source })?;
        }
        Ok(Self { graph, labels })
    }

    /// Every vertex labelled by the same group.
    pub fn uniform(graph: SimplicialGraph, label: GroupDescriptor) -> Result<Self, LabelError> {
        let labels = vec![label; graph.len()];
        Self::new(graph, labels)
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn labels(&self) -> &[GroupDescriptor] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &GroupDescriptor {
        &self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn all_finite(&self) -> bool {
        self.labels.iter().all(GroupDescriptor::is_finite)
    }

    pub fn all_z2(&self) -> bool {
        self.labels.iter().all(GroupDescriptor::is_z2)
    }

    /// Relabels vertices so that new vertex `k` is old vertex `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> LabeledGraph {
        LabeledGraph {
            graph: self.graph.permuted(order),
            labels: order.iter().map(|&v| self.labels[v].clone()).collect(),
        }
    }
}
