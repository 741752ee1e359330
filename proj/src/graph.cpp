#include "tiltgraph/graph/graph.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "tiltgraph/errors.hpp"

namespace tiltgraph::graph {

namespace {

constexpr std::array<const char*, 8> kNodeLabelNames = {
    "meta", "tilt", "controller", "dataDisclosed", "purpose", "legalBasis", "storage", "recipient"};
constexpr std::array<const char*, 3> kEdgeLabelNames = {"HAS", "SIMILAR_TO", "SHARES_WITH"};

} // namespace

const char* node_label_name(NodeLabel label) {
    return kNodeLabelNames[static_cast<std::size_t>(label)];
}

const char* edge_label_name(EdgeLabel label) {
    return kEdgeLabelNames[static_cast<std::size_t>(label)];
}

std::optional<NodeLabel> node_label_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kNodeLabelNames.size(); ++i) {
        if (name == kNodeLabelNames[i]) return static_cast<NodeLabel>(i);
    }
    return std::nullopt;
}

std::optional<EdgeLabel> edge_label_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kEdgeLabelNames.size(); ++i) {
        if (name == kEdgeLabelNames[i]) return static_cast<EdgeLabel>(i);
    }
    return std::nullopt;
}

std::string attr_to_string(const AttrValue& v) {
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const double* d = std::get_if<double>(&v)) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), *d);
        return std::string(buf, end);
    }
    return std::get<std::string>(v);
}

NodeId PropertyGraph::create_node(NodeLabel label, AttrMap attrs) {
    const NodeId id = next_node_id_++;
    label_index_[label].insert(id);
    for (const auto& [key, value] : attrs) attr_key_index_[key].insert(id);
    adj_[id];
    nodes_.emplace(id, Node{id, label, std::move(attrs)});
    return id;
}

void PropertyGraph::assert_has_edge_allowed(NodeId src, NodeId dst) const {
    const Node& child = node(dst);
    if (child.label == NodeLabel::meta) {
        throw InvariantViolation("meta nodes are structural roots and cannot get a HAS parent");
    }
    if (structural_parent(dst)) {
        throw InvariantViolation("node " + std::to_string(dst) + " already has a structural parent");
    }
    // Walking up from src must not reach dst, or the new edge closes a cycle.
    std::optional<NodeId> cur = src;
    while (cur) {
        if (*cur == dst) {
            throw InvariantViolation("HAS edge " + std::to_string(src) + "->" + std::to_string(dst) +
                                     " would create a cycle");
        }
        cur = structural_parent(*cur);
    }
}

EdgeId PropertyGraph::create_edge(EdgeLabel label, NodeId src, NodeId dst, AttrMap attrs) {
    if (!has_node(src)) throw NotFoundError("edge source node " + std::to_string(src));
    if (!has_node(dst)) throw NotFoundError("edge target node " + std::to_string(dst));
    if (label == EdgeLabel::HAS) assert_has_edge_allowed(src, dst);

    const EdgeId id = next_edge_id_++;
    adj_[src].out.insert(id);
    adj_[dst].in.insert(id);
    edges_.emplace(id, Edge{id, src, dst, label, std::move(attrs)});
    return id;
}

void PropertyGraph::update_node_attrs(NodeId id, const AttrMap& attrs) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw NotFoundError("node " + std::to_string(id));
    for (const auto& [key, value] : attrs) {
        it->second.attrs[key] = value;
        attr_key_index_[key].insert(id);
    }
}

void PropertyGraph::update_edge_attrs(EdgeId id, const AttrMap& attrs) {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw NotFoundError("edge " + std::to_string(id));
    for (const auto& [key, value] : attrs) it->second.attrs[key] = value;
}

void PropertyGraph::unindex_node(const Node& n) {
    label_index_[n.label].erase(n.id);
    for (const auto& [key, value] : n.attrs) {
        auto it = attr_key_index_.find(key);
        if (it != attr_key_index_.end()) {
            it->second.erase(n.id);
            if (it->second.empty()) attr_key_index_.erase(it);
        }
    }
}

void PropertyGraph::delete_node(NodeId id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw NotFoundError("node " + std::to_string(id));

    std::vector<EdgeId> incident;
    const Adjacency& adj = adj_.at(id);
    incident.insert(incident.end(), adj.out.begin(), adj.out.end());
    incident.insert(incident.end(), adj.in.begin(), adj.in.end());
    for (EdgeId e : incident) {
        if (has_edge(e)) delete_edge(e);
    }

    unindex_node(it->second);
    adj_.erase(id);
    nodes_.erase(it);
}

void PropertyGraph::delete_edge(EdgeId id) {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw NotFoundError("edge " + std::to_string(id));
    adj_[it->second.src].out.erase(id);
    adj_[it->second.dst].in.erase(id);
    edges_.erase(it);
}

const Node& PropertyGraph::node(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw NotFoundError("node " + std::to_string(id));
    return it->second;
}

const Edge& PropertyGraph::edge(EdgeId id) const {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw NotFoundError("edge " + std::to_string(id));
    return it->second;
}

const std::set<NodeId>& PropertyGraph::nodes_with_label(NodeLabel label) const {
    static const std::set<NodeId> empty;
    auto it = label_index_.find(label);
    return it == label_index_.end() ? empty : it->second;
}

const std::set<NodeId>& PropertyGraph::nodes_with_attr(const std::string& key) const {
    static const std::set<NodeId> empty;
    auto it = attr_key_index_.find(key);
    return it == attr_key_index_.end() ? empty : it->second;
}

std::vector<EdgeId> PropertyGraph::out_edges(NodeId id) const {
    auto it = adj_.find(id);
    if (it == adj_.end()) throw NotFoundError("node " + std::to_string(id));
    return {it->second.out.begin(), it->second.out.end()};
}

std::vector<EdgeId> PropertyGraph::in_edges(NodeId id) const {
    auto it = adj_.find(id);
    if (it == adj_.end()) throw NotFoundError("node " + std::to_string(id));
    return {it->second.in.begin(), it->second.in.end()};
}

std::optional<NodeId> PropertyGraph::structural_parent(NodeId id) const {
    auto it = adj_.find(id);
    if (it == adj_.end()) throw NotFoundError("node " + std::to_string(id));
    for (EdgeId e : it->second.in) {
        const Edge& edge = edges_.at(e);
        if (edge.label == EdgeLabel::HAS) return edge.src;
    }
    return std::nullopt;
}

std::vector<NodeId> PropertyGraph::structural_children(NodeId id) const {
    std::vector<NodeId> children;
    for (EdgeId e : out_edges(id)) {
        const Edge& edge = edges_.at(e);
        if (edge.label == EdgeLabel::HAS) children.push_back(edge.dst);
    }
    return children;
}

std::optional<NodeId> PropertyGraph::owning_meta(NodeId id) const {
    NodeId cur = id;
    for (;;) {
        if (node(cur).label == NodeLabel::meta) return cur;
        std::optional<NodeId> parent = structural_parent(cur);
        if (!parent) return std::nullopt;
        cur = *parent;
    }
}

std::optional<NodeId> PropertyGraph::find_node(NodeLabel label, const std::string& key,
                                               const AttrValue& value) const {
    for (NodeId id : nodes_with_label(label)) {
        const AttrMap& attrs = nodes_.at(id).attrs;
        auto it = attrs.find(key);
        if (it != attrs.end() && it->second == value) return id;
    }
    return std::nullopt;
}

void PropertyGraph::check_integrity() const {
    for (const auto& [id, e] : edges_) {
        if (!has_node(e.src) || !has_node(e.dst)) {
            throw InvariantViolation("edge " + std::to_string(id) + " has a dangling endpoint");
        }
        if (!adj_.at(e.src).out.count(id) || !adj_.at(e.dst).in.count(id)) {
            throw InvariantViolation("edge " + std::to_string(id) + " missing from adjacency index");
        }
    }
    for (const auto& [id, n] : nodes_) {
        if (!nodes_with_label(n.label).count(id)) {
            throw InvariantViolation("node " + std::to_string(id) + " missing from label index");
        }
        std::size_t has_parents = 0;
        for (EdgeId e : adj_.at(id).in) {
            if (edges_.at(e).label == EdgeLabel::HAS) ++has_parents;
        }
        if (n.label == NodeLabel::meta && has_parents != 0) {
            throw InvariantViolation("meta node " + std::to_string(id) + " has a structural parent");
        }
        if (has_parents > 1) {
            throw InvariantViolation("node " + std::to_string(id) + " has " +
                                     std::to_string(has_parents) + " structural parents");
        }
    }
}

void PropertyGraph::restore_node(Node n) {
    if (n.id == 0 || has_node(n.id)) {
        throw DuplicateError("node id " + std::to_string(n.id) + " unusable for restore");
    }
    label_index_[n.label].insert(n.id);
    for (const auto& [key, value] : n.attrs) attr_key_index_[key].insert(n.id);
    adj_[n.id];
    next_node_id_ = std::max(next_node_id_, n.id + 1);
    const NodeId id = n.id;
    nodes_.emplace(id, std::move(n));
}

void PropertyGraph::restore_edge(Edge e) {
    if (e.id == 0 || has_edge(e.id)) {
        throw DuplicateError("edge id " + std::to_string(e.id) + " unusable for restore");
    }
    if (!has_node(e.src)) throw NotFoundError("edge source node " + std::to_string(e.src));
    if (!has_node(e.dst)) throw NotFoundError("edge target node " + std::to_string(e.dst));
    if (e.label == EdgeLabel::HAS) assert_has_edge_allowed(e.src, e.dst);
    adj_[e.src].out.insert(e.id);
    adj_[e.dst].in.insert(e.id);
    next_edge_id_ = std::max(next_edge_id_, e.id + 1);
    const EdgeId id = e.id;
    edges_.emplace(id, std::move(e));
}

void PropertyGraph::restore_counters(NodeId next_node, EdgeId next_edge) {
    next_node_id_ = next_node;
    next_edge_id_ = next_edge;
}

} // namespace tiltgraph::graph
