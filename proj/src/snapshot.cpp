#include "tiltgraph/graph/snapshot.hpp"

#include <fstream>
#include <sstream>

#include "tiltgraph/errors.hpp"
#include "tiltgraph/graph/attr_json.hpp"
#include "tiltgraph/version.hpp"

namespace tiltgraph::graph {

using nlohmann::json;

nlohmann::json attrs_to_json(const AttrMap& attrs) {
    json obj = json::object();
    for (const auto& [key, value] : attrs) {
        std::visit([&](const auto& v) { obj[key] = v; }, value);
    }
    return obj;
}

AttrMap attrs_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SyntaxError("attribute record must be a JSON object");
    AttrMap attrs;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_boolean()) {
            attrs[it.key()] = v.get<bool>();
        } else if (v.is_number_integer() || v.is_number_unsigned()) {
            attrs[it.key()] = v.get<std::int64_t>();
        } else if (v.is_number_float()) {
            attrs[it.key()] = v.get<double>();
        } else if (v.is_string()) {
            attrs[it.key()] = v.get<std::string>();
        } else {
            throw SyntaxError("attribute '" + it.key() + "' is not a scalar");
        }
    }
    return attrs;
}

void save_snapshot(const PropertyGraph& g, std::ostream& out) {
    out << kSnapshotFormat << "\tnodes=" << g.node_count() << "\tedges=" << g.edge_count()
        << "\tnext_node=" << g.next_node_id() << "\tnext_edge=" << g.next_edge_id() << "\n";
    for (const auto& [id, n] : g.nodes()) {
        out << "N\t" << id << '\t' << node_label_name(n.label) << '\t' << attrs_to_json(n.attrs).dump()
            << "\n";
    }
    for (const auto& [id, e] : g.edges()) {
        out << "E\t" << id << '\t' << e.src << '\t' << e.dst << '\t' << edge_label_name(e.label)
            << '\t' << attrs_to_json(e.attrs).dump() << "\n";
    }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::uint64_t parse_id(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw SyntaxError(std::string("bad ") + what + " '" + s + "' in snapshot");
    }
}

} // namespace

PropertyGraph load_snapshot(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw SyntaxError("empty snapshot");
    std::vector<std::string> header = split_tabs(line);
    if (header.empty() || header[0] != kSnapshotFormat) {
        throw SyntaxError("snapshot header missing format tag " + std::string(kSnapshotFormat));
    }
    std::uint64_t next_node = 0;
    std::uint64_t next_edge = 0;
    for (const std::string& field : header) {
        if (field.rfind("next_node=", 0) == 0) next_node = parse_id(field.substr(10), "next_node");
        if (field.rfind("next_edge=", 0) == 0) next_edge = parse_id(field.substr(10), "next_edge");
    }

    PropertyGraph g;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> f = split_tabs(line);
        if (f[0] == "N") {
            if (f.size() != 4) throw SyntaxError("node record needs 4 fields (line " + std::to_string(line_no) + ")");
            std::optional<NodeLabel> label = node_label_from_name(f[2]);
            if (!label) throw SyntaxError("unknown node label '" + f[2] + "'");
            json attrs;
            try {
                attrs = json::parse(f[3]);
            } catch (const json::parse_error& e) {
                throw SyntaxError(std::string("bad attr JSON: ") + e.what());
            }
            g.restore_node(Node{parse_id(f[1], "node id"), *label, attrs_from_json(attrs)});
        } else if (f[0] == "E") {
            if (f.size() != 6) throw SyntaxError("edge record needs 6 fields (line " + std::to_string(line_no) + ")");
            std::optional<EdgeLabel> label = edge_label_from_name(f[4]);
            if (!label) throw SyntaxError("unknown edge label '" + f[4] + "'");
            json attrs;
            try {
                attrs = json::parse(f[5]);
            } catch (const json::parse_error& e) {
                throw SyntaxError(std::string("bad attr JSON: ") + e.what());
            }
            g.restore_edge(Edge{parse_id(f[1], "edge id"), parse_id(f[2], "src"), parse_id(f[3], "dst"),
                                *label, attrs_from_json(attrs)});
        } else {
            throw SyntaxError("unknown record type '" + f[0] + "' (line " + std::to_string(line_no) + ")");
        }
    }
    if (next_node != 0) g.restore_counters(std::max(next_node, g.next_node_id()),
                                           std::max(next_edge, g.next_edge_id()));
    return g;
}

void save_snapshot_file(const PropertyGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    save_snapshot(g, out);
    if (!out) throw IoError("short write to " + path.string());
}

PropertyGraph load_snapshot_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return load_snapshot(in);
}

bool graphs_equal(const PropertyGraph& a, const PropertyGraph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    for (const auto& [id, n] : a.nodes()) {
        if (!b.has_node(id)) return false;
        const Node& other = b.node(id);
        if (other.label != n.label || other.attrs != n.attrs) return false;
    }
    for (const auto& [id, e] : a.edges()) {
        if (!b.has_edge(id)) return false;
        const Edge& other = b.edge(id);
        if (other.src != e.src || other.dst != e.dst || other.label != e.label ||
            other.attrs != e.attrs) {
            return false;
        }
    }
    return true;
}

} // namespace tiltgraph::graph
