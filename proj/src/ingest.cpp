#include "tiltgraph/graph/ingest.hpp"

#include <algorithm>
#include <deque>

#include "tiltgraph/errors.hpp"

namespace tiltgraph::graph {

namespace {

void put(AttrMap& attrs, const char* key, const std::string& value) {
    if (!value.empty()) attrs[key] = value;
}

// Scalar extras become queryable attributes of the containing node;
// structured extras stay on the document only.
void put_extras(AttrMap& attrs, const tilt::ExtraFields& extra) {
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        const auto& v = it.value();
        if (attrs.count(it.key())) continue;
        if (v.is_string()) {
            attrs[it.key()] = v.get<std::string>();
        } else if (v.is_boolean()) {
            attrs[it.key()] = v.get<bool>();
        } else if (v.is_number_integer()) {
            attrs[it.key()] = v.get<std::int64_t>();
        } else if (v.is_number_float()) {
            attrs[it.key()] = v.get<double>();
        }
    }
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

} // namespace

std::optional<NodeId> find_meta(const PropertyGraph& g, const std::string& meta_id) {
    return g.find_node(NodeLabel::meta, "meta_id", AttrValue{meta_id});
}

std::vector<NodeId> document_subtree(const PropertyGraph& g, NodeId meta_node) {
    std::vector<NodeId> result;
    std::deque<NodeId> queue{meta_node};
    while (!queue.empty()) {
        NodeId cur = queue.front();
        queue.pop_front();
        result.push_back(cur);
        for (NodeId child : g.structural_children(cur)) queue.push_back(child);
    }
    std::sort(result.begin(), result.end());
    return result;
}

void remove_document(PropertyGraph& g, NodeId meta_node) {
    if (!g.has_node(meta_node)) throw NotFoundError("node " + std::to_string(meta_node));
    for (NodeId id : document_subtree(g, meta_node)) g.delete_node(id);
}

NodeId ingest(const tilt::TiltDocument& doc, PropertyGraph& g, IngestOptions opts) {
    if (doc.meta_id.empty()) throw SchemaError("document has no meta_id");
    if (std::optional<NodeId> existing = find_meta(g, doc.meta_id)) {
        if (!opts.replace_on_reingest) {
            throw DuplicateError("meta_id '" + doc.meta_id + "' already ingested");
        }
        remove_document(g, *existing);
    }

    AttrMap meta_attrs;
    meta_attrs["meta_id"] = doc.meta_id;
    meta_attrs["name"] = doc.meta_name;
    put_extras(meta_attrs, doc.meta_extra);
    const NodeId meta = g.create_node(NodeLabel::meta, std::move(meta_attrs));

    AttrMap tilt_attrs;
    tilt_attrs["meta_id"] = doc.meta_id;
    if (!doc.third_country_transfers.empty()) {
        tilt_attrs["third_countries"] = join(doc.third_country_transfers, ',');
    }
    put_extras(tilt_attrs, doc.extra);
    const NodeId tilt = g.create_node(NodeLabel::tilt, std::move(tilt_attrs));
    g.create_edge(EdgeLabel::HAS, meta, tilt);

    AttrMap ctl_attrs;
    put(ctl_attrs, "name", doc.controller.name);
    put(ctl_attrs, "country", doc.controller.country);
    if (doc.controller.sector) {
        ctl_attrs["sector"] = std::string(1, doc.controller.sector->section);
        put(ctl_attrs, "sector_division", doc.controller.sector->division);
    } else if (doc.controller.sector_raw) {
        ctl_attrs["sector_raw"] = *doc.controller.sector_raw;
    }
    put(ctl_attrs, "division", doc.controller.division);
    put(ctl_attrs, "address", doc.controller.address);
    put(ctl_attrs, "representative", doc.controller.representative);
    put_extras(ctl_attrs, doc.controller.extra);
    const NodeId controller = g.create_node(NodeLabel::controller, std::move(ctl_attrs));
    g.create_edge(EdgeLabel::HAS, tilt, controller);

    for (const tilt::DataDisclosed& d : doc.data_disclosed) {
        AttrMap dd_attrs;
        put(dd_attrs, "entry_id", d.entry_id);
        put(dd_attrs, "category", d.category);
        put_extras(dd_attrs, d.extra);
        const NodeId dd = g.create_node(NodeLabel::dataDisclosed, std::move(dd_attrs));
        g.create_edge(EdgeLabel::HAS, tilt, dd);

        for (const tilt::PurposeEntry& p : d.purposes) {
            AttrMap attrs;
            put(attrs, "purpose", p.purpose);
            put(attrs, "description", p.description);
            put_extras(attrs, p.extra);
            g.create_edge(EdgeLabel::HAS, dd, g.create_node(NodeLabel::purpose, std::move(attrs)));
        }
        for (const tilt::LegalBasisEntry& b : d.legal_bases) {
            AttrMap attrs;
            put(attrs, "reference", b.reference.raw);
            put(attrs, "description", b.description);
            put_extras(attrs, b.extra);
            g.create_edge(EdgeLabel::HAS, dd, g.create_node(NodeLabel::legalBasis, std::move(attrs)));
        }
        for (const tilt::StorageEntry& s : d.storage) {
            AttrMap attrs;
            put(attrs, "temporal_description", s.temporal_description);
            if (s.ttl_days) attrs["ttl_days"] = *s.ttl_days;
            put_extras(attrs, s.extra);
            g.create_edge(EdgeLabel::HAS, dd, g.create_node(NodeLabel::storage, std::move(attrs)));
        }
        for (const tilt::RecipientRef& r : d.recipients) {
            AttrMap attrs;
            put(attrs, "name", r.name);
            put(attrs, "country", r.country);
            put(attrs, "division", r.division);
            put(attrs, "address", r.address);
            put(attrs, "category", r.category);
            put_extras(attrs, r.extra);
            g.create_edge(EdgeLabel::HAS, dd, g.create_node(NodeLabel::recipient, std::move(attrs)));
        }
    }
    return meta;
}

} // namespace tiltgraph::graph
