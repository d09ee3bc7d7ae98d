#include "uncover/serialize.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace uncover {

using nlohmann::json;

std::string tree_to_json(const LabeledTree& t, std::optional<int> root) {
    LabeledTree copy = t;
    canonicalize(copy);
    json edges = json::array();
    for (const auto& [u, v] : copy.edges) edges.push_back(json::array({u, v}));
    json doc;
    doc["n"] = copy.n;
    doc["edges"] = std::move(edges);
    doc["root"] = root ? json(*root) : json(nullptr);
    return doc.dump();
}

ParsedTree tree_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("tree_from_json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw std::invalid_argument("tree_from_json: expected object with n and edges");
    }
    ParsedTree result;
    try {
        result.tree.n = doc.at("n").get<int>();
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("tree_from_json: edge entries must be [u, v]");
            }
            result.tree.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        if (doc.contains("root") && !doc.at("root").is_null()) {
            result.root = doc.at("root").get<int>();
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("tree_from_json: ") + e.what());
    }
    validate_tree(result.tree);
    if (result.root && (*result.root < 1 || *result.root > result.tree.n)) {
        throw std::invalid_argument("tree_from_json: root label out of range");
    }
    return result;
}

std::string cluster_report_to_json(const ClusterReport& r) {
    json doc;
    doc["k"] = r.k;
    doc["sizes"] = r.sizes;
    doc["root_cluster"] = r.root_cluster;
    doc["largest"] = r.largest;
    return doc.dump();
}

std::string path_to_json(const UncoverPath& p) {
    json doc;
    doc["n"] = p.n;
    doc["k"] = p.k;
    return doc.dump();
}

std::string path_to_csv(const UncoverPath& p) {
    std::string out = "j,k_j\n";
    for (int j = 0; j <= p.n; ++j) {
        out += std::to_string(j);
        out += ',';
        out += std::to_string(p.k[static_cast<std::size_t>(j)]);
        out += '\n';
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

}  // namespace uncover
