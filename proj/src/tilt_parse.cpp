#include "tiltgraph/tilt/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "tiltgraph/errors.hpp"

namespace tiltgraph::tilt {

namespace {

using Json = nlohmann::ordered_json;

std::string type_name(const Json& j) {
    return j.type_name();
}

const Json* find(const Json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::string require_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path + " must be a string, got " + type_name(j));
    return j.get<std::string>();
}

// Reads a recognized string field; returns empty when absent or null.
std::string take_string(const Json& obj, const char* key, const std::string& path) {
    const Json* v = find(obj, key);
    if (!v || v->is_null()) return {};
    return require_string(*v, path + "." + key);
}

bool recognized(const char* const* keys, std::size_t n, const std::string& key) {
    for (std::size_t i = 0; i < n; ++i) {
        if (key == keys[i]) return true;
    }
    return false;
}

// Copies every key of `obj` not in `keys` into an extra map, order preserved.
template <std::size_t N>
ExtraFields collect_extra(const Json& obj, const char* const (&keys)[N]) {
    ExtraFields extra = ExtraFields::object();
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!recognized(keys, N, it.key())) extra[it.key()] = it.value();
    }
    return extra;
}

PurposeEntry parse_purpose(const Json& j, const std::string& path) {
    PurposeEntry p;
    if (j.is_string()) {
        p.purpose = j.get<std::string>();
        return p;
    }
    if (!j.is_object()) throw SchemaError(path + " must be an object or string");
    static const char* keys[] = {"purpose", "description"};
    p.purpose = take_string(j, "purpose", path);
    p.description = take_string(j, "description", path);
    p.extra = collect_extra(j, keys);
    return p;
}

LegalBasisEntry parse_legal_basis(const Json& j, const std::string& path) {
    LegalBasisEntry b;
    if (j.is_string()) {
        b.reference = LegalBasisRef::parse(j.get<std::string>());
        return b;
    }
    if (!j.is_object()) throw SchemaError(path + " must be an object or string");
    static const char* keys[] = {"reference", "description"};
    b.reference = LegalBasisRef::parse(take_string(j, "reference", path));
    b.description = take_string(j, "description", path);
    b.extra = collect_extra(j, keys);
    return b;
}

StorageEntry parse_storage(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + " must be an object");
    static const char* keys[] = {"temporal_description", "ttl_days"};
    StorageEntry s;
    s.temporal_description = take_string(j, "temporal_description", path);
    if (const Json* ttl = find(j, "ttl_days"); ttl && !ttl->is_null()) {
        if (!ttl->is_number_integer() || ttl->get<std::int64_t>() < 0) {
            throw SchemaError(path + ".ttl_days must be a nonnegative integer");
        }
        s.ttl_days = ttl->get<std::int64_t>();
    } else if (!s.temporal_description.empty()) {
        s.ttl_days = parse_ttl_days(s.temporal_description);
    }
    s.extra = collect_extra(j, keys);
    return s;
}

RecipientRef parse_recipient(const Json& j, const std::string& path) {
    RecipientRef r;
    if (j.is_string()) {
        r.name = j.get<std::string>();
        return r;
    }
    if (!j.is_object()) throw SchemaError(path + " must be an object or string");
    static const char* keys[] = {"name", "country", "division", "address", "category"};
    r.name = take_string(j, "name", path);
    r.country = take_string(j, "country", path);
    r.division = take_string(j, "division", path);
    r.address = take_string(j, "address", path);
    r.category = take_string(j, "category", path);
    r.extra = collect_extra(j, keys);
    return r;
}

DataDisclosed parse_data_disclosed(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + " must be an object");
    static const char* keys[] = {"_id", "category", "purposes", "legalBases", "storage", "recipients"};
    DataDisclosed d;
    d.entry_id = take_string(j, "_id", path);
    d.category = take_string(j, "category", path);

    auto parse_array = [&](const char* key, auto parse_item, auto& out) {
        const Json* arr = find(j, key);
        if (!arr || arr->is_null()) return;
        if (!arr->is_array()) throw SchemaError(path + "." + key + " must be an array");
        std::size_t i = 0;
        for (const Json& item : *arr) {
            out.push_back(parse_item(item, path + "." + key + "[" + std::to_string(i) + "]"));
            ++i;
        }
    };
    parse_array("purposes", parse_purpose, d.purposes);
    parse_array("legalBases", parse_legal_basis, d.legal_bases);
    parse_array("storage", parse_storage, d.storage);
    parse_array("recipients", parse_recipient, d.recipients);
    d.extra = collect_extra(j, keys);
    return d;
}

ControllerInfo parse_controller(const Json& j) {
    if (!j.is_object()) throw SchemaError("controller must be an object");
    static const char* keys[] = {"name", "country", "sector", "division", "address", "representative"};
    ControllerInfo c;
    c.name = take_string(j, "name", "controller");
    c.country = take_string(j, "country", "controller");
    c.division = take_string(j, "division", "controller");
    c.address = take_string(j, "address", "controller");
    if (const Json* rep = find(j, "representative"); rep && rep->is_string()) {
        c.representative = rep->get<std::string>();
    } else if (const Json* rep2 = find(j, "representative"); rep2 && !rep2->is_null()) {
        // Non-string representative (e.g. contact object) rides along untyped.
        c.extra["representative"] = *rep2;
    }
    if (const Json* sector = find(j, "sector"); sector && !sector->is_null()) {
        c.sector_raw = require_string(*sector, "controller.sector");
        c.sector = parse_sector(*c.sector_raw);
    }
    ExtraFields more = collect_extra(j, keys);
    for (auto it = more.begin(); it != more.end(); ++it) c.extra[it.key()] = it.value();
    return c;
}

} // namespace

std::optional<std::int64_t> parse_ttl_days(const std::string& temporal_description) {
    std::string s = temporal_description;
    // trim
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    if (s.empty()) return std::nullopt;

    static const std::regex iso(R"(^P(?:(\d+)Y)?(?:(\d+)M)?(?:(\d+)W)?(?:(\d+)D)?(?:T.*)?$)",
                                std::regex::icase);
    static const std::regex english(R"(^(\d+)\s*(day|days|week|weeks|month|months|year|years)$)",
                                    std::regex::icase);
    std::smatch m;
    if (std::regex_match(s, m, iso)) {
        if (!m[1].matched && !m[2].matched && !m[3].matched && !m[4].matched) return std::nullopt;
        std::int64_t days = 0;
        if (m[1].matched) days += std::stoll(m[1]) * 365;
        if (m[2].matched) days += std::stoll(m[2]) * 30;
        if (m[3].matched) days += std::stoll(m[3]) * 7;
        if (m[4].matched) days += std::stoll(m[4]);
        return days;
    }
    if (std::regex_match(s, m, english)) {
        std::int64_t n = std::stoll(m[1]);
        std::string unit = m[2];
        std::transform(unit.begin(), unit.end(), unit.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (unit.rfind("day", 0) == 0) return n;
        if (unit.rfind("week", 0) == 0) return n * 7;
        if (unit.rfind("month", 0) == 0) return n * 30;
        return n * 365;
    }
    return std::nullopt;
}

TiltDocument parse_tilt(const std::string& raw) {
    Json root;
    try {
        root = Json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(e.what());
    }
    if (!root.is_object()) throw SchemaError("document root must be an object");

    TiltDocument doc;

    const Json* meta = find(root, "meta");
    if (!meta || !meta->is_object()) throw SchemaError("required field missing: meta._id");
    doc.meta_id = take_string(*meta, "_id", "meta");
    if (doc.meta_id.empty()) throw SchemaError("required field missing: meta._id");
    doc.meta_name = take_string(*meta, "name", "meta");
    if (doc.meta_name.empty()) doc.meta_name = doc.meta_id;
    static const char* meta_keys[] = {"_id", "name"};
    doc.meta_extra = collect_extra(*meta, meta_keys);

    const Json* controller = find(root, "controller");
    if (!controller) throw SchemaError("required field missing: controller.name");
    doc.controller = parse_controller(*controller);
    if (doc.controller.name.empty()) throw SchemaError("required field missing: controller.name");

    if (const Json* dd = find(root, "dataDisclosed"); dd && !dd->is_null()) {
        if (!dd->is_array()) throw SchemaError("dataDisclosed must be an array");
        std::size_t i = 0;
        for (const Json& item : *dd) {
            doc.data_disclosed.push_back(
                parse_data_disclosed(item, "dataDisclosed[" + std::to_string(i) + "]"));
            ++i;
        }
    }

    if (const Json* tct = find(root, "thirdCountryTransfers"); tct && !tct->is_null()) {
        if (!tct->is_array()) throw SchemaError("thirdCountryTransfers must be an array");
        std::size_t i = 0;
        for (const Json& item : *tct) {
            std::string path = "thirdCountryTransfers[" + std::to_string(i) + "]";
            if (item.is_string()) {
                doc.third_country_transfers.push_back(item.get<std::string>());
            } else if (item.is_object() && find(item, "country")) {
                doc.third_country_transfers.push_back(require_string(item.at("country"), path));
            } else {
                throw SchemaError(path + " must be a country code or {country: code}");
            }
            ++i;
        }
    }

    static const char* root_keys[] = {"meta", "controller", "dataDisclosed", "thirdCountryTransfers"};
    doc.extra = collect_extra(root, root_keys);
    return doc;
}

namespace {

void emit_if(Json& obj, const char* key, const std::string& value) {
    if (!value.empty()) obj[key] = value;
}

void append_extra(Json& obj, const ExtraFields& extra) {
    for (auto it = extra.begin(); it != extra.end(); ++it) obj[it.key()] = it.value();
}

} // namespace

std::string serialize_tilt(const TiltDocument& doc) {
    Json root = Json::object();

    Json meta = Json::object();
    meta["_id"] = doc.meta_id;
    meta["name"] = doc.meta_name;
    append_extra(meta, doc.meta_extra);
    root["meta"] = std::move(meta);

    Json controller = Json::object();
    controller["name"] = doc.controller.name;
    emit_if(controller, "country", doc.controller.country);
    if (doc.controller.sector_raw) controller["sector"] = *doc.controller.sector_raw;
    emit_if(controller, "division", doc.controller.division);
    emit_if(controller, "address", doc.controller.address);
    emit_if(controller, "representative", doc.controller.representative);
    append_extra(controller, doc.controller.extra);
    root["controller"] = std::move(controller);

    Json dds = Json::array();
    for (const DataDisclosed& d : doc.data_disclosed) {
        Json jd = Json::object();
        emit_if(jd, "_id", d.entry_id);
        emit_if(jd, "category", d.category);
        if (!d.purposes.empty()) {
            Json arr = Json::array();
            for (const PurposeEntry& p : d.purposes) {
                Json jp = Json::object();
                emit_if(jp, "purpose", p.purpose);
                emit_if(jp, "description", p.description);
                append_extra(jp, p.extra);
                arr.push_back(std::move(jp));
            }
            jd["purposes"] = std::move(arr);
        }
        if (!d.legal_bases.empty()) {
            Json arr = Json::array();
            for (const LegalBasisEntry& b : d.legal_bases) {
                Json jb = Json::object();
                emit_if(jb, "reference", b.reference.raw);
                emit_if(jb, "description", b.description);
                append_extra(jb, b.extra);
                arr.push_back(std::move(jb));
            }
            jd["legalBases"] = std::move(arr);
        }
        if (!d.storage.empty()) {
            Json arr = Json::array();
            for (const StorageEntry& s : d.storage) {
                Json js = Json::object();
                emit_if(js, "temporal_description", s.temporal_description);
                if (s.ttl_days) js["ttl_days"] = *s.ttl_days;
                append_extra(js, s.extra);
                arr.push_back(std::move(js));
            }
            jd["storage"] = std::move(arr);
        }
        if (!d.recipients.empty()) {
            Json arr = Json::array();
            for (const RecipientRef& r : d.recipients) {
                Json jr = Json::object();
                emit_if(jr, "name", r.name);
                emit_if(jr, "country", r.country);
                emit_if(jr, "division", r.division);
                emit_if(jr, "address", r.address);
                emit_if(jr, "category", r.category);
                append_extra(jr, r.extra);
                arr.push_back(std::move(jr));
            }
            jd["recipients"] = std::move(arr);
        }
        append_extra(jd, d.extra);
        dds.push_back(std::move(jd));
    }
    root["dataDisclosed"] = std::move(dds);

    if (!doc.third_country_transfers.empty()) {
        Json arr = Json::array();
        for (const std::string& c : doc.third_country_transfers) {
            arr.push_back(Json{{"country", c}});
        }
        root["thirdCountryTransfers"] = std::move(arr);
    }

    append_extra(root, doc.extra);
    return root.dump(2) + "\n";
}

TiltDocument load_tilt_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_tilt(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path.filename().string() + ": " + e.what());
    }
}

void save_tilt_file(const TiltDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << serialize_tilt(doc);
    if (!out) throw IoError("short write to " + path.string());
}

std::vector<TiltDocument> load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".tilt" || ext == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<TiltDocument> docs;
    docs.reserve(files.size());
    for (const auto& f : files) docs.push_back(load_tilt_file(f));
    return docs;
}

} // namespace tiltgraph::tilt
