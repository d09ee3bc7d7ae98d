#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uncover/rng.hpp"

namespace uncover {

// Tree on vertex labels 1..n, stored as unordered edge pairs.
struct LabeledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

struct RootedTree {
    LabeledTree tree;
    int root = 1;
};

// Length n-2 sequence of labels in 1..n; the standard bijection with labeled
// trees (smallest-numbered leaf removed first).  n >= 2; n = 2 has an empty
// sequence.
struct PrueferSeq {
    int n = 0;
    std::vector<int> seq;
};

// Throws std::invalid_argument describing the violated invariant; a valid
// tree has labels in range, exactly n-1 edges, no self-loops, and is
// connected and acyclic (n-1 successful union-find merges).
void validate_tree(const LabeledTree& t);
bool is_valid_tree(const LabeledTree& t);

// Normalizes to u < v per edge and lexicographic edge order.
void canonicalize(LabeledTree& t);

// Standard decode: repeatedly attach the smallest remaining leaf to the next
// sequence entry.  Inverse of prufer_encode.
LabeledTree prufer_decode(const PrueferSeq& p);
PrueferSeq prufer_encode(const LabeledTree& t);

// Uniform over the n^{n-2} labeled trees (uniform Prufer sequence); n=1 and
// n=2 are handled explicitly.
LabeledTree sample_uniform_tree(int n, RngStream& rng);

// Uniform over the n^{n-1} rooted trees: uniform tree x independent uniform
// root.
RootedTree sample_uniform_rooted_tree(int n, RngStream& rng);

}  // namespace uncover
