#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltgraph/graph/graph.hpp"

namespace tiltgraph::graph {

/// Linear path pattern: node steps alternating with edge constraints, plus a
/// projection list. Covers every query shape the analysis layer needs; no
/// branching or variable-length paths.
struct AttrPredicate {
    enum class Op { eq, contains, lt, le, gt, ge };
    std::string key;
    Op op = Op::eq;
    AttrValue value;
};

struct NodeStep {
    NodeLabel label = NodeLabel::meta;
    std::vector<AttrPredicate> predicates;
};

struct EdgeStep {
    std::optional<EdgeLabel> label; // nullopt matches any label
    enum class Dir { out, in, any };
    Dir dir = Dir::out;
};

struct ProjectionItem {
    std::size_t step = 0; // index into Pattern::nodes
    std::string attr;
};

struct Pattern {
    std::vector<NodeStep> nodes;  // size n, n >= 1
    std::vector<EdgeStep> edges;  // size n - 1
    std::vector<ProjectionItem> project;
};

using Row = std::vector<std::optional<AttrValue>>;

/// Every path match exactly once (distinct node bindings), rows ordered by the
/// node ids along the path. Missing projected attrs come back as nullopt.
/// Throws PatternError on an empty pattern or a predicate type mismatch.
std::vector<Row> query(const PropertyGraph& g, const Pattern& p);

/// Matched node-id paths in the same deterministic order, for callers that
/// need bindings rather than projections.
std::vector<std::vector<NodeId>> match_paths(const PropertyGraph& g, const Pattern& p);

/// Parses the CLI pattern syntax, e.g.
///   meta-HAS->tilt-HAS->controller[sector=J]
///   meta-[any]-tilt   (edge written "-" ... "-" matches either direction)
/// and a projection list "meta.name,legalBasis.reference" (label resolves to
/// its first step; a leading integer selects a step by index).
Pattern parse_pattern(const std::string& match, const std::string& projection);

std::string row_value_to_string(const std::optional<AttrValue>& v);

} // namespace tiltgraph::graph
