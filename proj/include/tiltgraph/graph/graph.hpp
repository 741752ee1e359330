#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tiltgraph::graph {

using NodeId = std::uint64_t;
using EdgeId = std::uint64_t;

/// Scalar attribute value. Lists in TILT become child nodes, never attrs.
using AttrValue = std::variant<bool, std::int64_t, double, std::string>;
using AttrMap = std::map<std::string, AttrValue>;

enum class NodeLabel { meta, tilt, controller, dataDisclosed, purpose, legalBasis, storage, recipient };
enum class EdgeLabel { HAS, SIMILAR_TO, SHARES_WITH };

const char* node_label_name(NodeLabel label);
const char* edge_label_name(EdgeLabel label);
std::optional<NodeLabel> node_label_from_name(const std::string& name);
std::optional<EdgeLabel> edge_label_from_name(const std::string& name);

std::string attr_to_string(const AttrValue& v);

struct Node {
    NodeId id = 0;
    NodeLabel label = NodeLabel::meta;
    AttrMap attrs;
};

struct Edge {
    EdgeId id = 0;
    NodeId src = 0;
    NodeId dst = 0;
    EdgeLabel label = EdgeLabel::HAS;
    AttrMap attrs;
};

/// In-memory labeled property graph. Engine-assigned monotonically increasing
/// ids; external identity (meta_id) lives in attrs. Plain value type: copying
/// yields an independent snapshot, which is what the single-writer /
/// multi-reader contract hands to analytics.
///
/// HAS edges form a forest: a node has at most one structural parent, meta
/// nodes have none, and no HAS cycle can be created. Nodes may be built
/// floating (parentless) and attached later.
class PropertyGraph {
public:
    NodeId create_node(NodeLabel label, AttrMap attrs = {});
    EdgeId create_edge(EdgeLabel label, NodeId src, NodeId dst, AttrMap attrs = {});

    /// Merges `attrs` into the node's map (existing keys overwritten).
    void update_node_attrs(NodeId id, const AttrMap& attrs);
    void update_edge_attrs(EdgeId id, const AttrMap& attrs);

    /// Removes the node and cascades all incident edges.
    void delete_node(NodeId id);
    void delete_edge(EdgeId id);

    bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
    bool has_edge(EdgeId id) const { return edges_.count(id) != 0; }
    const Node& node(NodeId id) const;
    const Edge& edge(EdgeId id) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::map<NodeId, Node>& nodes() const { return nodes_; }
    const std::map<EdgeId, Edge>& edges() const { return edges_; }

    /// Node ids carrying `label`, ascending.
    const std::set<NodeId>& nodes_with_label(NodeLabel label) const;
    /// Node ids that carry attribute `key`, ascending.
    const std::set<NodeId>& nodes_with_attr(const std::string& key) const;

    std::vector<EdgeId> out_edges(NodeId id) const;
    std::vector<EdgeId> in_edges(NodeId id) const;

    /// Structural parent via the incoming HAS edge, if attached.
    std::optional<NodeId> structural_parent(NodeId id) const;
    /// Children reachable over outgoing HAS edges, ascending.
    std::vector<NodeId> structural_children(NodeId id) const;
    /// Root meta node owning `id` (itself for meta nodes); nullopt while a
    /// subtree is still floating.
    std::optional<NodeId> owning_meta(NodeId id) const;

    /// First node with `label` whose attr `key` equals `value`, ascending scan.
    std::optional<NodeId> find_node(NodeLabel label, const std::string& key,
                                    const AttrValue& value) const;

    /// Full-scan invariant check (referential integrity, index consistency,
    /// HAS forest). Throws InvariantViolation on the first defect found.
    void check_integrity() const;

    /// Insertion with caller-provided ids, for snapshot/import loaders.
    /// Same invariant checks as create_*; DuplicateError on id collision.
    void restore_node(Node n);
    void restore_edge(Edge e);

    /// Id counters survive snapshots so replayed mutations assign identical
    /// ids. Used by the snapshot file reader.
    void restore_counters(NodeId next_node, EdgeId next_edge);
    NodeId next_node_id() const { return next_node_id_; }
    EdgeId next_edge_id() const { return next_edge_id_; }

private:
    void unindex_node(const Node& n);
    void assert_has_edge_allowed(NodeId src, NodeId dst) const;

    std::map<NodeId, Node> nodes_;
    std::map<EdgeId, Edge> edges_;
    std::map<NodeLabel, std::set<NodeId>> label_index_;
    std::map<std::string, std::set<NodeId>> attr_key_index_;
    struct Adjacency {
        std::set<EdgeId> out;
        std::set<EdgeId> in;
    };
    std::map<NodeId, Adjacency> adj_;
    NodeId next_node_id_ = 1;
    EdgeId next_edge_id_ = 1;
};

} // namespace tiltgraph::graph
