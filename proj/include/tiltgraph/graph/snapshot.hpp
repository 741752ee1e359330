#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tiltgraph/graph/graph.hpp"

namespace tiltgraph::graph {

/// Snapshot flat file, format "tiltgraph.snapshot.v1": a tab-separated node
/// table and edge table with a version header. Layout (one record per line):
///
///   tiltgraph.snapshot.v1 <TAB> nodes=<n> <TAB> edges=<m> <TAB> next_node=<id> <TAB> next_edge=<id>
///   N <TAB> <node_id> <TAB> <label> <TAB> <attrs as JSON object>
///   E <TAB> <edge_id> <TAB> <src> <TAB> <dst> <TAB> <label> <TAB> <attrs as JSON object>
///
/// Records are sorted by id; attribute JSON uses sorted keys, so equal graphs
/// save to byte-identical files and load(save(g)) == g including id counters.
void save_snapshot(const PropertyGraph& g, std::ostream& out);
PropertyGraph load_snapshot(std::istream& in);

void save_snapshot_file(const PropertyGraph& g, const std::filesystem::path& path);
PropertyGraph load_snapshot_file(const std::filesystem::path& path);

bool graphs_equal(const PropertyGraph& a, const PropertyGraph& b);

} // namespace tiltgraph::graph
