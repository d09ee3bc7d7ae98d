#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uncover/tree.hpp"
#include "uncover/uncover.hpp"

namespace uncover {

struct ParsedTree {
    LabeledTree tree;
    std::optional<int> root;
};

// {"n": ..., "edges": [[u,v], ...], "root": <int or null>} with edges
// normalized to u < v and sorted lexicographically.
std::string tree_to_json(const LabeledTree& t, std::optional<int> root = std::nullopt);

// Parses and validates the same format; malformed documents raise
// std::invalid_argument.
ParsedTree tree_from_json(const std::string& text);

// {"k": ..., "sizes": [...], "root_cluster": ..., "largest": ...}
std::string cluster_report_to_json(const ClusterReport& r);

// {"n": ..., "k": [k_0, ..., k_n]}
std::string path_to_json(const UncoverPath& p);

// Rows j,k_j for j = 0..n under a header line.
std::string path_to_csv(const UncoverPath& p);

// Floats rendered with 12 significant digits.
std::string format_double(double v);

// RFC-4180 quoting: fields containing comma, quote, or newline are wrapped in
// double quotes with embedded quotes doubled.
std::string csv_field(const std::string& raw);

// Joins pre-rendered fields into one newline-terminated CSV record.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace uncover
