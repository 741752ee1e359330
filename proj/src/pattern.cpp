#include "tiltgraph/graph/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tiltgraph/errors.hpp"

namespace tiltgraph::graph {

namespace {

bool is_numeric(const AttrValue& v) {
    return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<double>(v);
}

double as_double(const AttrValue& v) {
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    return std::get<double>(v);
}

bool predicate_holds(const AttrMap& attrs, const AttrPredicate& pred) {
    auto it = attrs.find(pred.key);
    if (it == attrs.end()) return false; // missing attr: no match, not an error
    const AttrValue& attr = it->second;

    switch (pred.op) {
    case AttrPredicate::Op::eq:
        if (is_numeric(attr) && is_numeric(pred.value)) {
            if (std::holds_alternative<std::int64_t>(attr) &&
                std::holds_alternative<std::int64_t>(pred.value)) {
                return std::get<std::int64_t>(attr) == std::get<std::int64_t>(pred.value);
            }
            return as_double(attr) == as_double(pred.value);
        }
        if (attr.index() != pred.value.index()) {
            throw PatternError("type mismatch comparing attribute '" + pred.key + "'");
        }
        return attr == pred.value;
    case AttrPredicate::Op::contains: {
        const std::string* hay = std::get_if<std::string>(&attr);
        const std::string* needle = std::get_if<std::string>(&pred.value);
        if (!hay || !needle) {
            throw PatternError("substring predicate needs string attribute '" + pred.key + "'");
        }
        return hay->find(*needle) != std::string::npos;
    }
    default: {
        if (!is_numeric(attr) || !is_numeric(pred.value)) {
            throw PatternError("numeric comparison on non-numeric attribute '" + pred.key + "'");
        }
        const double a = as_double(attr);
        const double b = as_double(pred.value);
        switch (pred.op) {
        case AttrPredicate::Op::lt: return a < b;
        case AttrPredicate::Op::le: return a <= b;
        case AttrPredicate::Op::gt: return a > b;
        case AttrPredicate::Op::ge: return a >= b;
        default: return false;
        }
    }
    }
}

bool node_matches(const PropertyGraph& g, NodeId id, const NodeStep& step) {
    const Node& n = g.node(id);
    if (n.label != step.label) return false;
    for (const AttrPredicate& pred : step.predicates) {
        if (!predicate_holds(n.attrs, pred)) return false;
    }
    return true;
}

// Distinct neighbor nodes reachable over one edge step (parallel edges
// collapse into one candidate), ascending.
std::set<NodeId> neighbors(const PropertyGraph& g, NodeId id, const EdgeStep& step) {
    std::set<NodeId> result;
    auto visit = [&](const std::vector<EdgeId>& edge_ids, bool outgoing) {
        for (EdgeId e : edge_ids) {
            const Edge& edge = g.edge(e);
            if (step.label && edge.label != *step.label) continue;
            result.insert(outgoing ? edge.dst : edge.src);
        }
    };
    if (step.dir == EdgeStep::Dir::out || step.dir == EdgeStep::Dir::any) {
        visit(g.out_edges(id), true);
    }
    if (step.dir == EdgeStep::Dir::in || step.dir == EdgeStep::Dir::any) {
        visit(g.in_edges(id), false);
    }
    return result;
}

void dfs(const PropertyGraph& g, const Pattern& p, std::size_t depth, std::vector<NodeId>& path,
         std::vector<std::vector<NodeId>>& out) {
    if (depth == p.nodes.size()) {
        out.push_back(path);
        return;
    }
    for (NodeId next : neighbors(g, path.back(), p.edges[depth - 1])) {
        if (!node_matches(g, next, p.nodes[depth])) continue;
        path.push_back(next);
        dfs(g, p, depth + 1, path, out);
        path.pop_back();
    }
}

} // namespace

std::vector<std::vector<NodeId>> match_paths(const PropertyGraph& g, const Pattern& p) {
    if (p.nodes.empty()) throw PatternError("empty pattern");
    if (p.edges.size() + 1 != p.nodes.size()) {
        throw PatternError("pattern needs exactly one edge constraint between adjacent node steps");
    }
    std::vector<std::vector<NodeId>> paths;
    for (NodeId start : g.nodes_with_label(p.nodes[0].label)) {
        if (!node_matches(g, start, p.nodes[0])) continue;
        std::vector<NodeId> path{start};
        dfs(g, p, 1, path, paths);
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    return paths;
}

std::vector<Row> query(const PropertyGraph& g, const Pattern& p) {
    for (const ProjectionItem& item : p.project) {
        if (item.step >= p.nodes.size()) {
            throw PatternError("projection step " + std::to_string(item.step) + " out of range");
        }
    }
    std::vector<Row> rows;
    for (const std::vector<NodeId>& path : match_paths(g, p)) {
        Row row;
        row.reserve(p.project.size());
        for (const ProjectionItem& item : p.project) {
            const AttrMap& attrs = g.node(path[item.step]).attrs;
            auto it = attrs.find(item.attr);
            row.push_back(it == attrs.end() ? std::nullopt : std::optional<AttrValue>(it->second));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

AttrValue parse_literal(std::string text) {
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
        return text.substr(1, text.size() - 2);
    }
    if (text == "true") return true;
    if (text == "false") return false;
    try {
        std::size_t used = 0;
        if (text.find_first_of(".eE") == std::string::npos) {
            std::int64_t i = std::stoll(text, &used);
            if (used == text.size()) return i;
        } else {
            double d = std::stod(text, &used);
            if (used == text.size()) return d;
        }
    } catch (...) {
    }
    return text;
}

std::vector<AttrPredicate> parse_predicates(const std::string& body) {
    std::vector<AttrPredicate> preds;
    std::size_t start = 0;
    bool in_quotes = false;
    auto flush = [&](std::size_t end) {
        std::string item = body.substr(start, end - start);
        if (item.empty()) throw PatternError("empty predicate in [" + body + "]");
        static const std::pair<const char*, AttrPredicate::Op> ops[] = {
            {">=", AttrPredicate::Op::ge}, {"<=", AttrPredicate::Op::le},
            {"=", AttrPredicate::Op::eq},  {"~", AttrPredicate::Op::contains},
            {">", AttrPredicate::Op::gt},  {"<", AttrPredicate::Op::lt},
        };
        for (const auto& [token, op] : ops) {
            std::size_t pos = item.find(token);
            if (pos != std::string::npos && pos > 0) {
                AttrPredicate pred;
                pred.key = item.substr(0, pos);
                pred.op = op;
                pred.value = parse_literal(item.substr(pos + std::string(token).size()));
                preds.push_back(std::move(pred));
                return;
            }
        }
        throw PatternError("predicate '" + item + "' has no operator");
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '"') in_quotes = !in_quotes;
        if (body[i] == ',' && !in_quotes) {
            flush(i);
            start = i + 1;
        }
    }
    flush(body.size());
    return preds;
}

} // namespace

Pattern parse_pattern(const std::string& match, const std::string& projection) {
    Pattern p;
    std::size_t i = 0;
    const std::size_t n = match.size();
    auto label_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };

    while (i < n) {
        // node step: label + optional [predicates]
        std::size_t start = i;
        while (i < n && label_char(match[i])) ++i;
        std::string label_text = match.substr(start, i - start);
        std::optional<NodeLabel> label = node_label_from_name(label_text);
        if (!label) throw PatternError("unknown node label '" + label_text + "'");
        NodeStep step{*label, {}};
        if (i < n && match[i] == '[') {
            std::size_t close = match.find(']', i);
            if (close == std::string::npos) throw PatternError("unterminated '[' in pattern");
            step.predicates = parse_predicates(match.substr(i + 1, close - i - 1));
            i = close + 1;
        }
        p.nodes.push_back(std::move(step));
        if (i == n) break;

        // edge step: -LABEL-> | <-LABEL- | -LABEL- | -> | <- | --
        EdgeStep edge;
        if (match[i] == '<') {
            if (i + 1 >= n || match[i + 1] != '-') throw PatternError("expected '<-' in pattern");
            i += 2;
            std::size_t es = i;
            while (i < n && label_char(match[i])) ++i;
            std::string edge_label = match.substr(es, i - es);
            if (!edge_label.empty()) {
                edge.label = edge_label_from_name(edge_label);
                if (!edge.label) throw PatternError("unknown edge label '" + edge_label + "'");
            }
            if (i >= n || match[i] != '-') throw PatternError("expected '-' closing '<-" + edge_label + "'");
            ++i;
            edge.dir = EdgeStep::Dir::in;
        } else if (match[i] == '-') {
            ++i;
            std::size_t es = i;
            while (i < n && label_char(match[i])) ++i;
            std::string edge_label = match.substr(es, i - es);
            if (!edge_label.empty()) {
                edge.label = edge_label_from_name(edge_label);
                if (!edge.label) throw PatternError("unknown edge label '" + edge_label + "'");
            }
            if (i < n && match[i] == '-') {
                ++i;
                if (i < n && match[i] == '>') {
                    ++i;
                    edge.dir = EdgeStep::Dir::out;
                } else {
                    edge.dir = EdgeStep::Dir::any;
                }
            } else if (i < n && match[i] == '>') {
                ++i;
                edge.dir = EdgeStep::Dir::out;
            } else {
                throw PatternError("malformed edge at offset " + std::to_string(i));
            }
        } else {
            throw PatternError("unexpected character '" + std::string(1, match[i]) + "' in pattern");
        }
        p.edges.push_back(edge);
    }

    if (p.nodes.empty()) throw PatternError("empty pattern");
    if (p.edges.size() + 1 != p.nodes.size()) throw PatternError("pattern ends with a dangling edge");

    // projection: comma-separated <label|index>.<attr>
    std::size_t pos = 0;
    while (pos < projection.size()) {
        std::size_t comma = projection.find(',', pos);
        if (comma == std::string::npos) comma = projection.size();
        std::string item = projection.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        std::size_t dot = item.find('.');
        if (dot == std::string::npos) throw PatternError("projection '" + item + "' needs <step>.<attr>");
        std::string head = item.substr(0, dot);
        ProjectionItem proj;
        proj.attr = item.substr(dot + 1);
        if (!head.empty() && std::all_of(head.begin(), head.end(), [](unsigned char c) {
                return std::isdigit(c);
            })) {
            proj.step = std::stoul(head);
        } else {
            std::optional<NodeLabel> label = node_label_from_name(head);
            if (!label) throw PatternError("unknown label '" + head + "' in projection");
            auto it = std::find_if(p.nodes.begin(), p.nodes.end(),
                                   [&](const NodeStep& s) { return s.label == *label; });
            if (it == p.nodes.end()) {
                throw PatternError("projection label '" + head + "' not present in pattern");
            }
            proj.step = static_cast<std::size_t>(it - p.nodes.begin());
        }
        if (proj.step >= p.nodes.size()) {
            throw PatternError("projection step " + head + " out of range");
        }
        p.project.push_back(std::move(proj));
    }
    return p;
}

std::string row_value_to_string(const std::optional<AttrValue>& v) {
    return v ? attr_to_string(*v) : std::string();
}

} // namespace tiltgraph::graph
