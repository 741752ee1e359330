#pragma once

#include "tiltgraph/graph/graph.hpp"
#include "tiltgraph/tilt/model.hpp"

namespace tiltgraph::graph {

struct IngestOptions {
    /// Re-ingesting an existing meta_id replaces the prior subgraph. With
    /// replacement disabled the same situation raises DuplicateError.
    bool replace_on_reingest = true;
};

/// Transforms one document into its subgraph
///   meta -> tilt -> {controller, dataDisclosed*}
///   dataDisclosed -> {purpose*, legalBasis*, storage*, recipient*}
/// and returns the created meta node. Every scalar field (recognized or
/// unrecognized) becomes a node attribute of its containing node; lists
/// become child nodes. Idempotent per meta_id.
NodeId ingest(const tilt::TiltDocument& doc, PropertyGraph& g, IngestOptions opts = {});

/// Meta node whose meta_id attr equals `meta_id`, if ingested.
std::optional<NodeId> find_meta(const PropertyGraph& g, const std::string& meta_id);

/// Deletes the document subtree rooted at `meta_node` (cross-document edges
/// cascade with their endpoints).
void remove_document(PropertyGraph& g, NodeId meta_node);

/// All nodes of the document subtree rooted at `meta_node`, ascending ids.
std::vector<NodeId> document_subtree(const PropertyGraph& g, NodeId meta_node);

} // namespace tiltgraph::graph
